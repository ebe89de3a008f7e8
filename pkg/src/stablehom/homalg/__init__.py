from .tensor import tensor_over_cat, TensorResult
from .resolve import Resolution, resolve, tor, op_rep
from .bar import bar_tor_oracle
from .kan import kan_extension, omega_x, build_category_of_elements, hochschild, external_product_rep, hom_bimodule_rep
from .grops import (
    iota, rho, kappa, lam, omega, varpi, delta_restrict, NatMap,
    lambda_into_omega, omega_kappa_vs_varpi_delta,
)
from .cache import DiskCache, default_cache, rep_key

__all__ = [
    "tensor_over_cat", "TensorResult",
    "Resolution", "resolve", "tor", "op_rep",
    "bar_tor_oracle",
    "kan_extension", "omega_x", "build_category_of_elements", "hochschild",
    "external_product_rep", "hom_bimodule_rep",
    "iota", "rho", "kappa", "lam", "omega", "varpi", "delta_restrict",
    "NatMap", "lambda_into_omega", "omega_kappa_vs_varpi_delta",
    "DiskCache", "default_cache", "rep_key",
]
