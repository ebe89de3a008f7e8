"""Builders for the finite categories of the workbench.

Every enumeration order is fixed lexicographic, so object and morphism ids
are reproducible across runs.  A built category is always the full
subcategory on objects of dimension/cardinality <= the cap.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product

from ..exactla import Mat, Subspace, enumerate_subspaces
from ..exactla.field import FieldDesc
from .core import FinCat, CapExceeded
from .quadspace import QuadSpace, all_forms, hyperbolic_plane

DEFAULT_CAP = 2_000_000


def _mat_composer(field):
    def comp(gp, fp):
        return Mat.from_payload(field, gp).mul(Mat.from_payload(field, fp)).payload()
    return comp


def _primitive_scalar(field):
    if field.d > 1:
        return field.generator
    p = field.p
    for g in range(2, p):
        seen, x = set(), 1
        for _ in range(p - 1):
            x = (x * g) % p
            seen.add(x)
        if len(seen) == p - 1:
            return g
    return 1  # p == 2


@lru_cache(maxsize=None)
def matrices(field: FieldDesc, m: int, n: int, cls: str):
    """Payloads of all n x m matrices F^m -> F^n of the requested class,
    in lexicographic entry order."""
    if cls == "inj" and m > n:
        return ()
    if cls == "surj" and m < n:
        return ()
    if cls == "iso" and m != n:
        return ()
    out = []
    for flat in product(range(field.q), repeat=m * n):
        if cls != "all":
            A = Mat.from_payload(field, (n, m, flat))
            r = A.rank()
            if cls == "inj" and r < m:
                continue
            if cls == "surj" and r < n:
                continue
            if cls == "iso" and r < n:
                continue
        out.append((n, m, flat))
    return tuple(out)


def _gl_generators(field, n):
    """Payloads of a standard generating set of GL_n: one transvection, the
    cyclic permutation, and a primitive diagonal (omitted when trivial)."""
    if n == 0:
        return []
    out = []
    zeta = _primitive_scalar(field)
    if n == 1:
        if zeta != 1:
            out.append((1, 1, (zeta,)))
        return out
    T = Mat.identity(field, n)
    T.rows[0][1] = 1
    out.append(T.payload())
    C = Mat.zeros(field, n, n)
    for i in range(n):
        C.rows[(i + 1) % n][i] = 1
    out.append(C.payload())
    if zeta != 1:
        D = Mat.identity(field, n)
        D.rows[0][0] = zeta
        out.append(D.payload())
    return out


def _std_incl(field, n):
    """F^n -> F^(n+1), x |-> (x, 0)."""
    A = Mat.zeros(field, n + 1, n)
    for i in range(n):
        A.rows[i][i] = 1
    return A.payload()


def _std_proj(field, n):
    """F^(n+1) -> F^n, drop the last coordinate."""
    A = Mat.zeros(field, n, n + 1)
    for i in range(n):
        A.rows[i][i] = 1
    return A.payload()


def build_vect_cat(field, dmax, cls="all", cap=DEFAULT_CAP) -> FinCat:
    """Category of F_q^0..F_q^dmax with all/inj/surj/iso linear maps."""
    assert cls in ("all", "inj", "surj", "iso")
    total = 0
    for m in range(dmax + 1):
        for n in range(dmax + 1):
            total += field.q ** (m * n)
            if total > cap:
                raise CapExceeded(f"vect cat {field} dmax {dmax} exceeds cap {cap}")
    C = FinCat(f"vect-{cls}", list(range(dmax + 1)), field=field,
               params={"dmax": dmax, "cls": cls})
    C.compose_payload = _mat_composer(field)
    for m in range(dmax + 1):
        for n in range(dmax + 1):
            for payload in matrices(field, m, n, cls):
                C.add_morphism(m, n, payload)
    for n in range(dmax + 1):
        C.set_identity(n, C.mid_of(n, n, Mat.identity(field, n).payload()))
    gens = set()
    for n in range(dmax + 1):
        for p in _gl_generators(field, n):
            gens.add(C.mid_of(n, n, p))
    for n in range(dmax):
        if cls in ("all", "inj"):
            gens.add(C.mid_of(n, n + 1, _std_incl(field, n)))
        if cls in ("all", "surj"):
            gens.add(C.mid_of(n + 1, n, _std_proj(field, n)))
    C.generators = sorted(gens)
    if cls == "inj":
        C.mono = True
        C.pullbacks = True
    return C.finish()


def _build_form_cat(field, dmax, kind, allow_degenerate, cap):
    objs = []
    spaces = []
    for n in range(dmax + 1):
        count = field.q ** (n * (n + 1) // 2 if kind == "q" else n * (n - 1) // 2)
        if len(objs) + count > cap:
            raise CapExceeded("form category exceeds cap")
        for sp in all_forms(field, n, kind):
            if not allow_degenerate and not sp.is_nondegenerate():
                continue
            objs.append(sp.payload())
            spaces.append(sp)
    name = "quad" if kind == "q" else "alt"
    C = FinCat(name + ("-deg" if allow_degenerate else ""), objs, field=field,
               params={"dmax": dmax, "degenerate": allow_degenerate})
    C.compose_payload = _mat_composer(field)
    total = 0
    for a, sa in enumerate(spaces):
        for b, sb in enumerate(spaces):
            for payload in matrices(field, sa.n, sb.n, "inj"):
                if sb.pullback_by(Mat.from_payload(field, payload)) == sa.coeffs:
                    C.add_morphism(a, b, payload)
                    total += 1
                    if total > cap:
                        raise CapExceeded("form category exceeds cap")
    for a, sa in enumerate(spaces):
        C.set_identity(a, C.mid_of(a, a, Mat.identity(field, sa.n).payload()))
    C.mono = True
    H = hyperbolic_plane(field, kind)
    if dmax >= 2:
        C.params["H"] = C.obj_index[H.payload()]
    return C.finish()


def build_quad_cat(field, dmax, allow_degenerate=True, cap=DEFAULT_CAP) -> FinCat:
    """Quadratic spaces of dimension <= dmax with form-compatible injections."""
    return _build_form_cat(field, dmax, "q", allow_degenerate, cap)


def build_alt_cat(field, dmax, allow_degenerate=True, cap=DEFAULT_CAP) -> FinCat:
    """Alternating-bilinear (symplectic) spaces with compatible injections."""
    return _build_form_cat(field, dmax, "a", allow_degenerate, cap)


def space_of(cat, oid) -> QuadSpace:
    kind, n, coeffs = cat.objects[oid]
    return QuadSpace(cat.field, n, kind, coeffs)


def _tuple_composer(offset):
    def comp(gp, fp):
        return tuple(gp[x - offset] if offset else gp[x] for x in fp)
    return comp


def build_set_cats(nmax, kind, cap=DEFAULT_CAP) -> FinCat:
    """kind in {'gamma', 'theta', 'omega', 'sigma'}: pointed maps, injections,
    surjections, bijections on sets {1..n} (gamma adds basepoint 0)."""
    assert kind in ("gamma", "theta", "omega", "sigma")
    if nmax > 6:
        raise CapExceeded("set categories supported for nmax <= 6")
    C = FinCat(kind, list(range(nmax + 1)), params={"nmax": nmax})
    if kind == "gamma":
        # elements 0..n with basepoint 0; payload lists images of 0..n
        C.compose_payload = _tuple_composer(0)
        for n in range(nmax + 1):
            for m in range(nmax + 1):
                for images in product(range(m + 1), repeat=n):
                    C.add_morphism(n, m, (0,) + images)
        for n in range(nmax + 1):
            C.set_identity(n, C.mid_of(n, n, tuple(range(n + 1))))
        return C.finish()
    C.compose_payload = _tuple_composer(1)
    for n in range(nmax + 1):
        for m in range(nmax + 1):
            if kind == "theta" and n > m:
                continue
            if kind == "omega" and n < m:
                continue
            if kind == "sigma" and n != m:
                continue
            for images in product(range(1, m + 1), repeat=n):
                if kind in ("theta", "sigma") and len(set(images)) != n:
                    continue
                if kind in ("omega", "sigma") and len(set(images)) != m:
                    continue
                C.add_morphism(n, m, images)
    for n in range(nmax + 1):
        C.set_identity(n, C.mid_of(n, n, tuple(range(1, n + 1))))
    if kind == "theta":
        C.mono = True
        C.pullbacks = True
    return C.finish()


def build_grassmann_cat(field, dmax, cap=DEFAULT_CAP) -> FinCat:
    """Pairs (V, W <= V) with linear maps f such that f(W) = W'."""
    objs = []
    for n in range(dmax + 1):
        for W in enumerate_subspaces(field, n):
            objs.append(("gr", n, W.basis))
    C = FinCat("grassmann", objs, field=field, params={"dmax": dmax})
    C.compose_payload = _mat_composer(field)
    total = 0
    for a, (_, n, wa) in enumerate(objs):
        Wa = Subspace(field, n, wa)
        for b, (_, m, wb) in enumerate(objs):
            Wb = Subspace(field, m, wb)
            total += field.q ** (n * m)
            if total > cap:
                raise CapExceeded("grassmann category exceeds cap")
            for payload in matrices(field, n, m, "all"):
                A = Mat.from_payload(field, payload)
                if Wa.image(A) == Wb:
                    C.add_morphism(a, b, payload)
    for a, (_, n, _w) in enumerate(objs):
        C.set_identity(a, C.mid_of(a, a, Mat.identity(field, n).payload()))
    return C.finish()


def build_range_cat(nmax) -> FinCat:
    """The poset category 0 <= 1 <= ... <= nmax."""
    C = FinCat("range", list(range(nmax + 1)), params={"nmax": nmax})
    C.compose_payload = lambda gp, fp: (fp[0], gp[1])
    for i in range(nmax + 1):
        for j in range(i, nmax + 1):
            C.add_morphism(i, j, (i, j))
    for i in range(nmax + 1):
        C.set_identity(i, C.mid_of(i, i, (i, i)))
    return C.finish()


def group_cat(payloads, composer, identity_payload, kind="group", generators=None) -> FinCat:
    """One-object category from a finite group/monoid given by payloads."""
    C = FinCat(kind, ["pt"])
    C.compose_payload = composer
    for p in payloads:
        C.add_morphism(0, 0, p)
    C.set_identity(0, C.mid_of(0, 0, identity_payload))
    if generators is not None:
        C.generators = sorted({C.mid_of(0, 0, p) for p in generators}
                              | {C.identity[0]})
    return C.finish()


def skeletonize(cat: FinCat) -> FinCat:
    """Full subcategory on one representative per isomorphism class
    (lowest object id)."""
    n = cat.n_objects()
    rep = list(range(n))
    for a in range(n):
        for b in range(a + 1, n):
            if rep[b] != b:
                continue
            for f in cat.hom(a, b):
                if cat.is_invertible(f) is not None:
                    rep[b] = rep[a]
                    break
    keep = sorted({rep[o] for o in range(n)})
    remap = {o: i for i, o in enumerate(keep)}
    C = FinCat("skel:" + cat.kind, [cat.objects[o] for o in keep],
               field=cat.field, params=cat.params)
    C.compose_payload = cat.compose_payload
    for (s, t, p) in cat.morphisms:
        if s in remap and t in remap:
            C.add_morphism(remap[s], remap[t], p)
    for o in keep:
        s, t, p = cat.morphisms[cat.identity[o]]
        C.set_identity(remap[o], C.mid_of(remap[o], remap[o], p))
    C.mono = cat.mono
    C.pullbacks = cat.pullbacks
    return C.finish()


class StableSequence:
    """The data (S, G) of the stabilization framework on a built category:
    objects S(0..nmax), canonical inclusions, and the monoidal extensions
    used by the axiom checker and the stabilizer machinery."""

    def __init__(self, cat, s_objs, incl_payload_fn, oplus_obj_fn, oplus_mor_fn,
                 extend_fn=None, obj_sum_fn=None):
        self.cat = cat
        self.s_objs = list(s_objs)
        self.nmax = len(s_objs) - 1
        self._incl_payload = incl_payload_fn
        self._oplus_obj = oplus_obj_fn
        self._oplus_mor = oplus_mor_fn
        self._extend = extend_fn
        self.obj_sum = obj_sum_fn

    def obj(self, i):
        return self.s_objs[i]

    def incl(self, i, j):
        """Mid of the canonical map S(i) -> S(j)."""
        assert i <= j <= self.nmax
        mid = self.cat.identity[self.s_objs[i]]
        for k in range(i, j):
            step = self.cat.mid_of(self.s_objs[k], self.s_objs[k + 1],
                                   self._incl_payload(k))
            mid = self.cat.compose(step, mid)
        return mid

    def oplus_obj(self, i, c):
        """Object id of S(i) (+) c, or None if outside the cap."""
        return self._oplus_obj(i, c)

    def oplus_mor(self, i, f_mid):
        """Mid of id_{S(i)} (+) f, or None if outside the cap."""
        return self._oplus_mor(i, f_mid)

    def aut(self, i):
        return self.cat.automorphisms(self.s_objs[i])

    def extend_aut(self, g_mid, i, j):
        """g (+) id : Aut S(i) -> Aut S(j) along the canonical inclusions."""
        cat = self.cat
        if self._extend is not None:
            return self._extend(g_mid, i, j)
        # matrix payloads: block diag(g, identity) in the coordinates of S(j)
        F = cat.field
        g = Mat.from_payload(F, cat.payload(g_mid))
        di = g.n
        dj = _obj_dim(cat, self.s_objs[j])
        M = Mat.identity(F, dj)
        for r in range(di):
            for c in range(di):
                M.rows[r][c] = g.rows[r][c]
        return cat.mid_of(self.s_objs[j], self.s_objs[j], M.payload())


def _obj_dim(cat, oid):
    payload = cat.objects[oid]
    if isinstance(payload, int):
        return payload
    return payload[1]


def quad_sequence(cat) -> StableSequence:
    """S(i) = H^(perp i) on a quad/alt category."""
    F = cat.field
    kind = "q" if cat.kind.startswith("quad") else "a"
    H = hyperbolic_plane(F, kind)
    dmax = cat.params["dmax"]
    s_objs = []
    space = QuadSpace(F, 0, kind, ())
    i = 0
    while 2 * i <= dmax:
        s_objs.append(cat.obj_index[space.payload()])
        space = space.orthogonal_sum(H)
        i += 1

    def incl_payload(k):
        return _std_block_incl(F, 2 * k, 2 * (k + 1))

    def oplus_obj(i, c):
        sc = space_of(cat, c)
        si = QuadSpace(F, 0, kind, ())
        for _ in range(i):
            si = si.orthogonal_sum(H)
        total = si.orthogonal_sum(sc)
        return cat.obj_index.get(total.payload())

    def oplus_mor(i, f_mid):
        s, t, p = cat.morphisms[f_mid]
        ns = oplus_obj(i, s)
        nt = oplus_obj(i, t)
        if ns is None or nt is None:
            return None
        A = Mat.from_payload(F, p)
        M = Mat.zeros(F, 2 * i + A.m, 2 * i + A.n)
        for r in range(2 * i):
            M.rows[r][r] = 1
        for r in range(A.m):
            for c in range(A.n):
                M.rows[2 * i + r][2 * i + c] = A.rows[r][c]
        return cat.mor_index.get((ns, nt, M.payload()))

    def obj_sum(b, c):
        total = space_of(cat, b).orthogonal_sum(space_of(cat, c))
        return cat.obj_index.get(total.payload())

    return StableSequence(cat, s_objs, incl_payload, oplus_obj, oplus_mor,
                          obj_sum_fn=obj_sum)


def _std_block_incl(F, n, m):
    A = Mat.zeros(F, m, n)
    for i in range(n):
        A.rows[i][i] = 1
    return A.payload()


def vect_sequence(cat) -> StableSequence:
    """S(i) = F^i with 'add zeros' inclusions (split injections of M(A))."""
    F = cat.field
    dmax = cat.params["dmax"]
    s_objs = list(range(dmax + 1))

    def incl_payload(k):
        return _std_incl(F, k)

    def oplus_obj(i, c):
        return i + c if i + c <= dmax else None

    def oplus_mor(i, f_mid):
        s, t, p = cat.morphisms[f_mid]
        if i + s > dmax or i + t > dmax:
            return None
        A = Mat.from_payload(F, p)
        M = Mat.zeros(F, i + A.m, i + A.n)
        for r in range(i):
            M.rows[r][r] = 1
        for r in range(A.m):
            for c in range(A.n):
                M.rows[i + r][i + c] = A.rows[r][c]
        return cat.mor_index.get((i + s, i + t, M.payload()))

    def obj_sum(b, c):
        return b + c if b + c <= dmax else None

    return StableSequence(cat, s_objs, incl_payload, oplus_obj, oplus_mor,
                          obj_sum_fn=obj_sum)


def theta_sequence(cat) -> StableSequence:
    """S(i) = {1..i} in the injections category."""
    nmax = cat.params["nmax"]
    s_objs = list(range(nmax + 1))

    def incl_payload(k):
        return tuple(range(1, k + 1))

    def oplus_obj(i, c):
        return i + c if i + c <= nmax else None

    def oplus_mor(i, f_mid):
        s, t, p = cat.morphisms[f_mid]
        if i + s > nmax or i + t > nmax:
            return None
        images = tuple(range(1, i + 1)) + tuple(i + x for x in p)
        return cat.mor_index.get((i + s, i + t, images))

    def extend(g_mid, i, j):
        # permutation of {1..i} extended by the identity on {i+1..j}
        p = cat.payload(g_mid)
        images = tuple(p) + tuple(range(i + 1, j + 1))
        return cat.mid_of(j, j, images)

    def obj_sum(b, c):
        return b + c if b + c <= nmax else None

    return StableSequence(cat, s_objs, incl_payload, oplus_obj, oplus_mor, extend,
                          obj_sum_fn=obj_sum)
