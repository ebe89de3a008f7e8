from .linrep import LinRep, restrict_rep, rep_cokernel
from .expr import (
    ID, CONST, S, L, G, T, KQ2, KALT2, PBAR, PROJ, DELTA, DUAL, TENSOR, SUM,
    COMPOSE, expr_text,
)
from .standard import evaluate, compile_functor, obj_dim
from .expcheck import difference, poly_degree, exponential_check, convolution_check

__all__ = [
    "LinRep", "restrict_rep", "rep_cokernel",
    "ID", "CONST", "S", "L", "G", "T", "KQ2", "KALT2", "PBAR", "PROJ",
    "DELTA", "DUAL", "TENSOR", "SUM", "COMPOSE", "expr_text",
    "evaluate", "compile_functor", "obj_dim",
    "difference", "poly_degree", "exponential_check", "convolution_check",
]
