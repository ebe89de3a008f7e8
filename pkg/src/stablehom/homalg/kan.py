"""Kan extensions along a functor, categories of elements, and Hochschild
homology through the product-category Tor engine."""

from __future__ import annotations

from ..exactla import Mat
from ..fincat.core import FinCat, MonFunctor
from ..funrep.linrep import LinRep
from .resolve import tor
from .tensor import tensor_over_cat


def _pullback_projective(Q: MonFunctor, a):
    """Q^*(P_a) as a covariant rep on the source of Q: d -> k[Hom(a, Q(d))]."""
    D, C = Q.source, Q.target
    dims = [len(C.hom(a, Q.on_obj(d))) for d in range(D.n_objects())]
    hom_lists = [C.hom(a, Q.on_obj(d)) for d in range(D.n_objects())]
    hom_index = [{m: i for i, m in enumerate(h)} for h in hom_lists]

    def bmap(mid):
        s, t = D.src(mid), D.tgt(mid)
        qm = Q.on_mor(mid)
        return [hom_index[t][C.compose(qm, m)] for m in hom_lists[s]]

    def act(mid):
        s, t = D.src(mid), D.tgt(mid)
        out = Mat.zeros(C.field or D.field, dims[t], dims[s])
        for j, i in enumerate(bmap(mid)):
            out.rows[i][j] = 1
        return out

    return LinRep(D, "co", dims, act, name=f"Q*(P_{a})", basis_map_fn=bmap)


def kan_extension(Q: MonFunctor, F: LinRep, derived_degree=0):
    """Values of the left Kan extension (derived if derived_degree > 0) of a
    contravariant module F along Q, one integer per target object:
    L_i Q_!(F)(a) = Tor_i(F, Q^*(P_a))."""
    assert F.variance == "contra" and F.cat is Q.source
    out = []
    for a in range(Q.target.n_objects()):
        pa = _pullback_projective(Q, a)
        if derived_degree == 0:
            out.append(tensor_over_cat(F, pa).dim)
        else:
            dims, _ = tor(F, pa, derived_degree)
            out.append(dims[derived_degree])
    return out


def build_category_of_elements(cat: FinCat, sets, maps):
    """C_X for a contravariant set-valued X: objects (i, x in X(i)); a
    morphism (i, x) -> (j, y) is f : i -> j with X(f)(y) = x.

    sets[i] is a list of values; maps[mid] is {y in X(tgt): X(f)(y) in X(src)}.
    Returns (C_X, obj_map) with obj_map[(i, x)] the new object id.
    """
    objs = []
    for i in range(cat.n_objects()):
        for x in sets[i]:
            objs.append((i, x))
    CX = FinCat("elements:" + cat.kind, objs, field=cat.field)
    obj_map = {p: k for k, p in enumerate(objs)}
    base_comp = cat.compose_payload

    def comp(gp, fp):
        return (base_comp(gp[0], fp[0]), gp[1])

    CX.compose_payload = comp
    for mid in range(cat.n_morphisms()):
        s, t, p = cat.morphisms[mid]
        for y in sets[t]:
            x = maps[mid][y]
            CX.add_morphism(obj_map[(s, x)], obj_map[(t, y)], (p, y))
    for k, (i, x) in enumerate(objs):
        _, _, p = cat.morphisms[cat.identity[i]]
        CX.set_identity(k, CX.mid_of(k, k, (p, x)))
    gens = set(CX.identity)
    for mid in cat.generators:
        s, t, p = cat.morphisms[mid]
        for y in sets[t]:
            gens.add(CX.mid_of(obj_map[(s, maps[mid][y])], obj_map[(t, y)],
                               (p, y)))
    CX.generators = sorted(gens)
    return CX, obj_map


def omega_x(F: LinRep, cat: FinCat, sets, maps, obj_map=None):
    """Block direct-sum functor Omega_X : Mod-C_X -> Mod-C,
    Omega_X(F)(i) = sum over x in X(i) of F(i, x)."""
    assert F.variance == "contra"
    CX = F.cat
    if obj_map is None:
        obj_map = {CX.objects[k]: k for k in range(CX.n_objects())}
    offsets = []
    dims = []
    for i in range(cat.n_objects()):
        offs = {}
        total = 0
        for x in sets[i]:
            offs[x] = total
            total += F.dims[obj_map[(i, x)]]
        offsets.append(offs)
        dims.append(total)
    field = cat.field

    def act(mid):
        s, t, p = cat.morphisms[mid]
        out = Mat.zeros(field, dims[s], dims[t])
        for y in sets[t]:
            x = maps[mid][y]
            sub = F.act(CX.mid_of(obj_map[(s, x)], obj_map[(t, y)], (p, y)))
            ro, co = offsets[s][x], offsets[t][y]
            for r in range(sub.m):
                for c in range(sub.n):
                    out.rows[ro + r][co + c] = sub.rows[r][c]
        return out

    return LinRep(cat, "contra", dims, act, name=f"Omega({F.name})")


def external_product_rep(P: FinCat, A: LinRep, B: LinRep, name=None):
    """A boxtimes B on a product category P = A.cat x B.cat (covariant on P
    when A is contravariant on the first factor presented as an op part)."""
    # P objects are payload pairs built by FinCat.product in row-major order
    from ..funrep.standard import kron
    na, nb = A.cat.n_objects(), B.cat.n_objects()
    dims = [A.dims[o // nb] * B.dims[o % nb] for o in range(P.n_objects())]

    def act(mid):
        s, t, (pa, pb) = P.morphisms[mid]
        sa, sb = s // nb, s % nb
        ta, tb = t // nb, t % nb
        ma = A.act(A.cat.mid_of(sa, ta, pa) if A.variance == "co"
                   else A.cat.mid_of(sa, ta, pa))
        mb = B.act(B.cat.mid_of(sb, tb, pb))
        return kron(ma, mb)

    variance = A.variance
    assert A.variance == B.variance
    return LinRep(P, variance, dims, act, name=name or f"{A.name}[x]{B.name}")


def hom_bimodule_rep(C: FinCat, P: FinCat):
    """k[Hom_{C^op}(-, -)] as a contravariant rep on P = C^op x C:
    value at (a, b) is k[Hom_C(b, a)], morphisms act by f o u o g."""
    n = C.n_objects()
    field = C.field
    hom_lists = {}
    for a in range(n):
        for b in range(n):
            hom_lists[(a, b)] = C.hom(b, a)
    hom_index = {k: {m: i for i, m in enumerate(v)} for k, v in hom_lists.items()}
    dims = []
    for o in range(P.n_objects()):
        a, b = o // n, o % n
        dims.append(len(hom_lists[(a, b)]))

    def bmap(mid):
        s, t, (pf, pg) = P.morphisms[mid]
        sa, sb = s // n, s % n
        ta, tb = t // n, t % n
        # pf : ta -> sa in C (an op morphism sa -> ta), pg : sb -> tb in C
        f = C.mid_of(ta, sa, pf)
        g = C.mid_of(sb, tb, pg)
        out = []
        for u in hom_lists[(ta, tb)]:
            out.append(hom_index[(sa, sb)][C.compose(C.compose(f, u), g)])
        return out

    def act(mid):
        s, t, _ = P.morphisms[mid]
        out = Mat.zeros(field, dims[s], dims[t])
        for j, i in enumerate(bmap(mid)):
            out.rows[i][j] = 1
        return out

    return LinRep(P, "contra", dims, act, name="k[Hom]", basis_map_fn=bmap)


def hochschild(C: FinCat, B: LinRep, max_degree):
    """HH_*(C; B) = Tor over C^op x C against k[Hom_{C^op}(-, -)]."""
    P = B.cat
    G0 = hom_bimodule_rep(C, P)
    dims, _ = tor(G0, B, max_degree)
    return dims
