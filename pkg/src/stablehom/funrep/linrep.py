"""Linear representations of a finite category (C-modules / Mod-C).

A LinRep carries a dimension per object and, lazily, a matrix per morphism.
Covariant reps send f : a -> b to a dims[b] x dims[a] matrix, contravariant
reps to dims[a] x dims[b].  Linearized-set functors expose a basis_map fast
path (action permutes-or-collapses basis vectors) that the homology engines
exploit.
"""

from __future__ import annotations

import random

from ..exactla import Mat


class LinRep:
    def __init__(self, cat, variance, dims, act_fn, name=None, basis_map_fn=None):
        assert variance in ("co", "contra")
        self.cat = cat
        self.variance = variance
        self.dims = list(dims)
        self._act_fn = act_fn
        self._basis_map_fn = basis_map_fn
        self._cache = {}
        self._bmap_cache = {}
        self.name = name or "rep"

    # -- actions ---------------------------------------------------------------

    def act(self, mid) -> Mat:
        M = self._cache.get(mid)
        if M is None:
            M = self._act_fn(mid)
            s, t = self.cat.src(mid), self.cat.tgt(mid)
            if self.variance == "co":
                assert (M.m, M.n) == (self.dims[t], self.dims[s]), \
                    (self.name, mid, M.m, M.n, self.dims[t], self.dims[s])
            else:
                assert (M.m, M.n) == (self.dims[s], self.dims[t])
            self._cache[mid] = M
        return M

    def basis_map(self, mid):
        if self._basis_map_fn is None:
            return None
        if mid not in self._bmap_cache:
            self._bmap_cache[mid] = self._basis_map_fn(mid)
        return self._bmap_cache[mid]

    def col(self, mid, j):
        """Column j of act(mid) as a sparse dict."""
        bm = self.basis_map(mid)
        if bm is not None:
            return {bm[j]: 1}
        M = self.act(mid)
        return {i: M.rows[i][j] for i in range(M.m) if M.rows[i][j]}

    def source_dim(self, mid):
        o = self.cat.src(mid) if self.variance == "co" else self.cat.tgt(mid)
        return self.dims[o]

    def target_dim(self, mid):
        o = self.cat.tgt(mid) if self.variance == "co" else self.cat.src(mid)
        return self.dims[o]

    # -- validation --------------------------------------------------------------

    def validate(self, pairs="auto", rng=None, limit=20000):
        """Check identity and composition laws.

        pairs='all' checks every composable pair, 'generators' only pairs of
        generating morphisms (enough when actions come from closed formulas),
        'auto' picks 'all' for small categories and a random sample otherwise.
        """
        cat = self.cat
        for o in range(cat.n_objects()):
            ident = self.act(cat.identity[o])
            assert ident == Mat.identity(ident.field, self.dims[o]), \
                f"{self.name}: identity fails at object {o}"
        if pairs == "auto":
            n = cat.n_morphisms()
            pairs = "all" if n * n <= limit else "sample"
        if pairs == "generators":
            mids = sorted(set(cat.generators) | set(cat.identity))
            candidates = [(g, f) for f in mids for g in mids
                          if cat.src(g) == cat.tgt(f)]
        elif pairs == "all":
            candidates = [(g, f) for f in range(cat.n_morphisms())
                          for g in range(cat.n_morphisms())
                          if cat.src(g) == cat.tgt(f)]
        else:
            rng = rng or random.Random(0)
            candidates = []
            for _ in range(500):
                f = rng.randrange(cat.n_morphisms())
                outs = [g for g in range(cat.n_morphisms()) if cat.src(g) == cat.tgt(f)]
                if outs:
                    candidates.append((rng.choice(outs), f))
        for (g, f) in candidates:
            gf = cat.compose(g, f)
            if self.variance == "co":
                lhs = self.act(g).mul(self.act(f))
            else:
                lhs = self.act(f).mul(self.act(g))
            assert lhs == self.act(gf), \
                f"{self.name}: functoriality fails on pair ({g}, {f})"
        return True

    # -- constructions -------------------------------------------------------------

    def direct_sum(self, other):
        assert self.cat is other.cat and self.variance == other.variance
        dims = [a + b for a, b in zip(self.dims, other.dims)]

        def act(mid):
            A, B = self.act(mid), other.act(mid)
            out = Mat.zeros(A.field, A.m + B.m, A.n + B.n)
            for i in range(A.m):
                for j in range(A.n):
                    out.rows[i][j] = A.rows[i][j]
            for i in range(B.m):
                for j in range(B.n):
                    out.rows[A.m + i][A.n + j] = B.rows[i][j]
            return out

        return LinRep(self.cat, self.variance, dims, act,
                      name=f"{self.name}(+){other.name}")

    def tensor(self, other):
        assert self.cat is other.cat and self.variance == other.variance
        from .standard import kron
        dims = [a * b for a, b in zip(self.dims, other.dims)]
        return LinRep(self.cat, self.variance, dims,
                      lambda mid: kron(self.act(mid), other.act(mid)),
                      name=f"{self.name}(x){other.name}")

    def is_zero(self):
        return all(d == 0 for d in self.dims)


def constant_rep(cat, field, d=1, name=None, variance="contra"):
    dims = [d] * cat.n_objects()
    return LinRep(cat, variance, dims, lambda mid: Mat.identity(field, d),
                  name=name or f"Const({d})")


def restrict_rep(rep, subcat, name=None):
    """Restrict a rep along a payload-preserving inclusion subcat -> rep.cat."""
    big = rep.cat
    obj_map = [big.obj_index[p] for p in subcat.objects]
    dims = [rep.dims[o] for o in obj_map]

    def act(mid):
        s, t, p = subcat.morphisms[mid]
        return rep.act(big.mid_of(obj_map[s], obj_map[t], p))

    bmap = None
    if rep._basis_map_fn is not None:
        def bmap(mid):
            s, t, p = subcat.morphisms[mid]
            return rep.basis_map(big.mid_of(obj_map[s], obj_map[t], p))

    out = LinRep(subcat, rep.variance, dims, act,
                 name=name or f"{rep.name}|{subcat.kind}", basis_map_fn=bmap)
    return out


def rep_cokernel(source, target, maps, name=None):
    """Cokernel of a map of reps given by per-object matrices target <- source.

    maps[o] is a dims_target[o] x dims_source[o] matrix; the result is the
    objectwise quotient with the induced action (lift a quotient basis vector,
    act, project).  Used to manufacture non-projective test modules.
    """
    assert source.cat is target.cat and source.variance == target.variance
    cat = source.cat
    field = maps[0].field if maps else None
    sections = []   # per object: list of ambient vectors spanning a complement
    projs = []      # per object: quotient projection matrices
    from ..exactla import Subspace, quotient_data
    for o in range(cat.n_objects()):
        img = Subspace.from_vectors(field, target.dims[o],
                                    [maps[o].col(j) for j in range(maps[o].n)])
        section, proj = quotient_data(field, target.dims[o], img)
        sections.append(section)
        projs.append(proj)
    dims = [len(s) for s in sections]

    def act(mid):
        if source.variance == "co":
            a, b = cat.src(mid), cat.tgt(mid)
        else:
            b, a = cat.src(mid), cat.tgt(mid)
        M = target.act(mid)
        cols = [projs[b].mulvec(M.mulvec(v)) for v in sections[a]]
        return Mat.from_cols(field, cols, dims[b])

    return LinRep(cat, source.variance, dims, act, name=name or "coker")


def projective_rep(cat, c, variance="co"):
    """Standard projective P_c = k[Hom(c, -)] (covariant) or
    k[Hom(-, c)] (contravariant) on any finite category."""
    field = cat.field
    if variance == "co":
        hom_lists = [cat.hom(c, d) for d in range(cat.n_objects())]
    else:
        hom_lists = [cat.hom(d, c) for d in range(cat.n_objects())]
    hom_index = [{m: i for i, m in enumerate(h)} for h in hom_lists]
    dims = [len(h) for h in hom_lists]

    def bmap(mid):
        s, t = cat.src(mid), cat.tgt(mid)
        if variance == "co":
            return [hom_index[t][cat.compose(mid, m)] for m in hom_lists[s]]
        return [hom_index[s][cat.compose(m, mid)] for m in hom_lists[t]]

    def act(mid):
        s, t = cat.src(mid), cat.tgt(mid)
        if variance == "co":
            shape = (dims[t], dims[s])
        else:
            shape = (dims[s], dims[t])
        out = Mat.zeros(field, *shape)
        for j, i in enumerate(bmap(mid)):
            out.rows[i][j] = 1
        return out

    tag = "P" if variance == "co" else "Pop"
    return LinRep(cat, variance, dims, act, name=f"{tag}_{c}", basis_map_fn=bmap)
