"""Operator calculus on the category of pairs (V, W <= V).

iota/rho/kappa precompose with (V,W) -> V, W, V/W; lambda restricts to W = 0;
omega and varpi are the block direct sums over subspaces with direct-image
resp. inverse-image routing.  The explicit triangular isomorphism between
omega.kappa and varpi.delta is constructed and checked, not assumed.
"""

from __future__ import annotations

from ..exactla import Mat, Subspace, quotient_data
from ..exactla import enumerate_subspaces
from ..funrep.linrep import LinRep, restrict_rep


def _gr_data(gr_cat, oid):
    _, n, basis = gr_cat.objects[oid]
    return n, Subspace(gr_cat.field, n, basis)


def _quot_map(field, n, W, n2, W2, A):
    """Matrix of the induced map V/W -> V'/W' for A with A(W) <= W'."""
    sec, proj = quotient_data(field, n, W)
    _, proj2 = quotient_data(field, n2, W2)
    cols = [proj2.mulvec(A.mulvec(s)) for s in sec]
    return Mat.from_cols(field, cols, proj2.m)


def iota(A: LinRep, gr_cat) -> LinRep:
    """Precompose a contravariant module on E^f with (V, W) -> V."""
    assert A.variance == "contra"
    full = A.cat
    dims = [A.dims[gr_cat.objects[o][1]] for o in range(gr_cat.n_objects())]

    def act(mid):
        s, t, p = gr_cat.morphisms[mid]
        ns, nt = gr_cat.objects[s][1], gr_cat.objects[t][1]
        return A.act(full.mid_of(ns, nt, p))

    return LinRep(gr_cat, "contra", dims, act, name=f"iota({A.name})")


def rho(X: LinRep, gr_cat, surj_cat) -> LinRep:
    """Precompose a contravariant module on E^f_surj with (V, W) -> W."""
    assert X.variance == "contra"
    field = gr_cat.field
    dims = []
    for o in range(gr_cat.n_objects()):
        _, W = _gr_data(gr_cat, o)
        dims.append(X.dims[W.dim])

    def act(mid):
        s, t, p = gr_cat.morphisms[mid]
        ns, Ws = _gr_data(gr_cat, s)
        nt, Wt = _gr_data(gr_cat, t)
        A = Mat.from_payload(field, p)
        # restriction W -> W' in the canonical echelon bases, surjective
        cols = []
        Bt = Wt.basis_mat().transpose()
        for w in Ws.basis:
            img = A.mulvec(list(w))
            x = Bt.solve(img)
            cols.append(x)
        rest = Mat.from_cols(field, cols, Wt.dim)
        return X.act(surj_cat.mid_of(Ws.dim, Wt.dim, rest.payload()))

    return LinRep(gr_cat, "contra", dims, act, name=f"rho({X.name})")


def kappa(A: LinRep, gr_cat) -> LinRep:
    """Precompose a contravariant module on E^f with (V, W) -> V/W."""
    assert A.variance == "contra"
    field = gr_cat.field
    full = A.cat
    dims = []
    for o in range(gr_cat.n_objects()):
        n, W = _gr_data(gr_cat, o)
        dims.append(A.dims[n - W.dim])

    def act(mid):
        s, t, p = gr_cat.morphisms[mid]
        ns, Ws = _gr_data(gr_cat, s)
        nt, Wt = _gr_data(gr_cat, t)
        q = _quot_map(field, ns, Ws, nt, Wt, Mat.from_payload(field, p))
        return A.act(full.mid_of(q.n, q.m, q.payload()))

    return LinRep(gr_cat, "contra", dims, act, name=f"kappa({A.name})")


def lam(X: LinRep, full_cat) -> LinRep:
    """Restrict a contravariant module on the pair category to W = 0."""
    assert X.variance == "contra"
    gr_cat = X.cat
    zero_ids = {}
    for o in range(gr_cat.n_objects()):
        _, n, basis = gr_cat.objects[o]
        if basis == ():
            zero_ids[n] = o
    dims = [X.dims[zero_ids[n]] for n in range(full_cat.n_objects())]

    def act(mid):
        s, t, p = full_cat.morphisms[mid]
        return X.act(gr_cat.mid_of(zero_ids[s], zero_ids[t], p))

    return LinRep(full_cat, "contra", dims, act, name=f"lambda({X.name})")


def omega(X: LinRep, full_cat) -> LinRep:
    """omega(X)(V) = sum over W <= V of X(V, W), direct-image routing."""
    assert X.variance == "contra"
    gr_cat = X.cat
    field = gr_cat.field
    subs = [enumerate_subspaces(field, n) for n in range(full_cat.n_objects())]
    gr_index = {}
    for o in range(gr_cat.n_objects()):
        _, n, basis = gr_cat.objects[o]
        gr_index[(n, basis)] = o
    offsets = []
    dims = []
    for n in range(full_cat.n_objects()):
        offs = {}
        total = 0
        for W in subs[n]:
            offs[W.basis] = total
            total += X.dims[gr_index[(n, W.basis)]]
        offsets.append(offs)
        dims.append(total)

    def act(mid):
        s, t, p = full_cat.morphisms[mid]
        A = Mat.from_payload(field, p)
        out = Mat.zeros(field, dims[s], dims[t])
        for W in subs[s]:
            Wi = W.image(A)
            gmid = gr_cat.mor_index.get(
                (gr_index[(s, W.basis)], gr_index[(t, Wi.basis)], p))
            if gmid is None:
                continue
            sub = X.act(gmid)
            ro = offsets[s][W.basis]
            co = offsets[t][Wi.basis]
            for r in range(sub.m):
                for c in range(sub.n):
                    out.rows[ro + r][co + c] = sub.rows[r][c]
        return out

    return LinRep(full_cat, "contra", dims, act, name=f"omega({X.name})")


def varpi(X: LinRep, full_cat, inj_cat) -> LinRep:
    """varpi(X)(V) = sum over W <= V of X(V/W), inverse-image routing along
    the induced monomorphism V/W -> V'/W' when f^{-1}(W') = W."""
    assert X.variance == "contra" and X.cat is inj_cat
    field = full_cat.field
    subs = [enumerate_subspaces(field, n) for n in range(full_cat.n_objects())]
    offsets = []
    dims = []
    for n in range(full_cat.n_objects()):
        offs = {}
        total = 0
        for W in subs[n]:
            offs[W.basis] = total
            total += X.dims[n - W.dim]
        offsets.append(offs)
        dims.append(total)

    def act(mid):
        s, t, p = full_cat.morphisms[mid]
        A = Mat.from_payload(field, p)
        out = Mat.zeros(field, dims[s], dims[t])
        for W2 in subs[t]:
            W = W2.preimage(A)
            q = _quot_map(field, s, W, t, W2, A)  # injective V/W -> V'/W'
            sub = X.act(inj_cat.mid_of(q.n, q.m, q.payload()))
            ro = offsets[s][W.basis]
            co = offsets[t][W2.basis]
            for r in range(sub.m):
                for c in range(sub.n):
                    out.rows[ro + r][co + c] = sub.rows[r][c]
        return out

    return LinRep(full_cat, "contra", dims, act, name=f"varpi({X.name})")


def delta_restrict(A: LinRep, inj_cat) -> LinRep:
    """Restriction Mod-E^f -> Mod-E^f_inj."""
    return restrict_rep(A, inj_cat, name=f"delta({A.name})")


class NatMap:
    """A natural transformation between two reps, given per-object matrices."""

    def __init__(self, source, target, mats):
        self.source = source
        self.target = target
        self.mats = mats

    def validate(self, mids=None):
        cat = self.source.cat
        mids = cat.generators if mids is None else mids
        for mid in mids:
            s, t = cat.src(mid), cat.tgt(mid)
            if self.source.variance == "contra":
                lhs = self.mats[s].mul(self.source.act(mid))
                rhs = self.target.act(mid).mul(self.mats[t])
            else:
                lhs = self.mats[t].mul(self.source.act(mid))
                rhs = self.target.act(mid).mul(self.mats[s])
            assert lhs == rhs, f"naturality fails on morphism {mid}"
        return True

    def is_iso(self):
        return all(M.m == M.n and M.rank() == M.m for M in self.mats)


def lambda_into_omega(X: LinRep, full_cat, om=None) -> NatMap:
    """The natural inclusion lambda(X) into omega(X)."""
    om = om or omega(X, full_cat)
    lx = lam(X, full_cat)
    field = full_cat.field
    mats = []
    gr_cat = X.cat
    for n in range(full_cat.n_objects()):
        M = Mat.zeros(field, om.dims[n], lx.dims[n])
        # zero-subspace block sits at the offset of the empty basis
        off = 0
        for W in enumerate_subspaces(field, n):
            d = X.dims[_gr_lookup(gr_cat, n, W.basis)]
            if W.basis == ():
                for r in range(d):
                    M.rows[off + r][r] = 1
                break
            off += d
        mats.append(M)
    return NatMap(lx, om, mats)


def _gr_lookup(gr_cat, n, basis):
    return gr_cat.obj_index[("gr", n, basis)]


def omega_kappa_vs_varpi_delta(A: LinRep, full_cat, gr_cat, inj_cat) -> NatMap:
    """The triangular natural isomorphism varpi(delta(A)) -> omega(kappa(A)):
    for W <= W' the projection V/W ->> V/W' induces (A contravariant) a
    component from the W' block into the W block; the diagonal is the
    identity, so the map is invertible."""
    field = full_cat.field
    ok = omega(kappa(A, gr_cat), full_cat)
    vd = varpi(delta_restrict(A, inj_cat), full_cat, inj_cat)
    mats = []
    for n in range(full_cat.n_objects()):
        subs = enumerate_subspaces(field, n)
        offs = {}
        total = 0
        for W in subs:
            offs[W.basis] = total
            total += A.dims[n - W.dim]
        M = Mat.zeros(field, vd.dims[n], ok.dims[n])
        for W in subs:
            for W2 in subs:
                if not W2.contains(W):
                    continue
                # A contravariant on the projection V/W ->> V/W2 gives a map
                # from the W2 block into the W block
                pr = _quot_map(field, n, W, n, W2, Mat.identity(field, n))
                sub = A.act(full_cat.mid_of(pr.n, pr.m, pr.payload()))
                ro, co = offs[W.basis], offs[W2.basis]
                for r in range(sub.m):
                    for c in range(sub.n):
                        M.rows[ro + r][co + c] = sub.rows[r][c]
        mats.append(M)
    return NatMap(ok, vd, mats)
