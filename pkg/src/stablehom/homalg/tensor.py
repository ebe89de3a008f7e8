"""Tensor product of a right and a left module over a finite category.

G (x)_C F is the quotient of sum_i G(i) (x) F(i) by the relations
G(f)(x') (x) y - x' (x) F(f)(y).  Relations are generated by the category's
generating morphisms: the relation for a composite is a sum of relations for
its factors, and identity relations vanish, so the generator set suffices.
"""

from __future__ import annotations

from ..exactla import make_span


class TensorResult:
    def __init__(self, dim, total, offsets, span):
        self.dim = dim
        self.total = total
        self.offsets = offsets
        self.span = span

    def index(self, obj, gi, fi, dimF):
        return self.offsets[obj] + gi * dimF + fi

    def reduce(self, vec):
        return self.span.reduce(vec)


def tensor_over_cat(G, F, gens=None) -> TensorResult:
    """G contravariant, F covariant, same base category; returns the coend."""
    assert G.cat is F.cat, "tensor factors must share a base category"
    assert G.variance == "contra" and F.variance == "co"
    cat = G.cat
    field = cat.field or F.cat.field
    if field is None:
        raise ValueError("category carries no field; tensor needs one")
    offsets = []
    total = 0
    for o in range(cat.n_objects()):
        offsets.append(total)
        total += G.dims[o] * F.dims[o]
    span = make_span(field, total)
    mids = cat.generators if gens is None else gens
    for mid in mids:
        if cat.is_identity(mid):
            continue
        s, t = cat.src(mid), cat.tgt(mid)
        dGs, dGt = G.dims[s], G.dims[t]
        dFs, dFt = F.dims[s], F.dims[t]
        if dGt == 0 or dFs == 0:
            continue
        gcols = [G.col(mid, x) for x in range(dGt)]   # G(f): G(t) -> G(s)
        fcols = [F.col(mid, y) for y in range(dFs)]   # F(f): F(s) -> F(t)
        base_s, base_t = offsets[s], offsets[t]
        neg = field.neg
        for x in range(dGt):
            gc = gcols[x]
            for y in range(dFs):
                vec = {}
                for r, c in gc.items():
                    vec[base_s + r * dFs + y] = c
                for r2, c2 in fcols[y].items():
                    key = base_t + x * dFt + r2
                    cur = vec.get(key, 0)
                    nv = field.sub(cur, c2)
                    if nv:
                        vec[key] = nv
                    elif key in vec:
                        del vec[key]
                if vec:
                    span.insert(vec)
    return TensorResult(total - span.dim, total, offsets, span)
