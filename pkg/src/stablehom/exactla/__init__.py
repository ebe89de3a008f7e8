from .field import FieldDesc, field_desc, parse_field
from .dense import Mat
from .sparse import SparseMat, make_span, SpanBasis, SpanBasisGF2
from .subspace import Subspace, enumerate_subspaces, quotient_data

__all__ = [
    "FieldDesc", "field_desc", "parse_field",
    "Mat",
    "SparseMat", "make_span", "SpanBasis", "SpanBasisGF2",
    "Subspace", "enumerate_subspaces", "quotient_data",
]
