"""Projective resolutions over a finite category and the Tor engine.

resolve() builds a resolution of a covariant module F by finite direct sums
of standard projectives P_c = k[Hom(c, -)].  Generator selection sweeps the
objects in id order and adds a generator for each canonical kernel basis
vector not already reached by the module action on previously chosen
generators; reachability is closed under the category's generating morphisms.

Differentials are stored as matrices of formal k-linear combinations of
morphisms (Hom(P_c, P_c') = k[Hom(c', c)] by Yoneda); applying a contravariant
module G to them computes Tor, and evaluating them at every object realizes
the complex for exactness checks.
"""

from __future__ import annotations

from ..exactla import make_span
from ..exactla.sparse import SpanBasisGF2
from ..funrep.linrep import LinRep


class FreeTerm:
    """A finite direct sum of standard projectives, with flat bases per object."""

    def __init__(self, cat, gen_objs):
        self.cat = cat
        self.gen_objs = list(gen_objs)
        self._basis = {}
        self._index = {}
        self._amap = {}

    def basis(self, d):
        b = self._basis.get(d)
        if b is None:
            b = [(j, mid) for j, c in enumerate(self.gen_objs)
                 for mid in self.cat.hom(c, d)]
            self._basis[d] = b
            self._index[d] = {key: k for k, key in enumerate(b)}
        return b

    def dim(self, d):
        return len(self.basis(d))

    def flat(self, d, j, mid):
        self.basis(d)
        return self._index[d][(j, mid)]

    def act_map(self, e):
        """Flat index map of the action of morphism e (postcomposition)."""
        m = self._amap.get(e)
        if m is None:
            cat = self.cat
            d, d2 = cat.src(e), cat.tgt(e)
            self.basis(d2)
            idx2 = self._index[d2]
            m = [idx2[(j, cat.compose(e, mid))] for (j, mid) in self.basis(d)]
            self._amap[e] = m
        return m

    def apply(self, e, vec):
        """Image of a sparse T(src)-vector under the action of e."""
        amap = self.act_map(e)
        field = self.cat.field
        out = {}
        for k, c in vec.items():
            t = amap[k]
            nv = field.add(out.get(t, 0), c)
            if nv:
                out[t] = nv
            elif t in out:
                del out[t]
        return out


class _RepModule:
    """Level-0 target: the module F itself, in its own coordinates."""

    def __init__(self, rep):
        self.rep = rep
        self.field = rep.cat.field

    def kernel_basis_at(self, d):
        return [{i: 1} for i in range(self.rep.dims[d])]

    def apply(self, e, vec):
        field = self.field
        out = {}
        for j, c in vec.items():
            for r, cc in self.rep.col(e, j).items():
                nv = field.add(out.get(r, 0), field.mul(c, cc))
                if nv:
                    out[r] = nv
                elif r in out:
                    del out[r]
        return out


class _TrackedSpan:
    """Span of value vectors with the expressing combination of inserted tags;
    an insertion that reduces to zero returns its combination (a kernel
    element of the column map)."""

    def __init__(self, field):
        self.field = field
        self.rows = {}

    def insert(self, value, tag):
        F = self.field
        v = {c: x for c, x in value.items() if x}
        combo = {tag: 1}
        while True:
            piv = None
            for c in v:
                if c in self.rows and (piv is None or c < piv):
                    piv = c
            if piv is None:
                break
            coef = v[piv]
            prow, pcombo = self.rows[piv]
            for c, rc in prow.items():
                nv = F.sub(v.get(c, 0), F.mul(coef, rc))
                if nv:
                    v[c] = nv
                elif c in v:
                    del v[c]
            for c, rc in pcombo.items():
                nv = F.sub(combo.get(c, 0), F.mul(coef, rc))
                if nv:
                    combo[c] = nv
                elif c in combo:
                    del combo[c]
        if not v:
            return combo
        piv = min(v)
        inv = F.inv(v[piv])
        if inv != 1:
            v = {c: F.mul(inv, x) for c, x in v.items()}
            combo = {c: F.mul(inv, x) for c, x in combo.items()}
        self.rows[piv] = (v, combo)
        return None


class _TrackedSpanGF2:
    def __init__(self, field):
        self.field = field
        self.rows = {}

    def insert(self, value, tag):
        x = SpanBasisGF2.pack(value)
        combo = {tag}
        rows = self.rows
        b = 0
        while True:
            t = x >> b
            if not t:
                break
            b += (t & -t).bit_length() - 1
            row = rows.get(b)
            if row is not None:
                x ^= row[0]
                combo ^= row[1]
            b += 1
        if not x:
            return {c: 1 for c in combo}
        piv = (x & -x).bit_length() - 1
        rows[piv] = (x, combo)
        return None


def _tracked_span(field):
    return _TrackedSpanGF2(field) if field.q == 2 else _TrackedSpan(field)


class _KernelModule:
    """Level-n target: kernel of the previous realized map, in the flat
    coordinates of the previous free term."""

    def __init__(self, term, cols_at, field):
        self.term = term
        self.cols_at = cols_at
        self.field = field
        self._kernels = {}

    def kernel_basis_at(self, d):
        k = self._kernels.get(d)
        if k is None:
            cols = self.cols_at(d)
            span = _tracked_span(self.field)
            k = []
            for j, col in enumerate(cols):
                combo = span.insert(col, j)
                if combo is not None:
                    k.append(combo)
            self._kernels[d] = k
        return k

    def apply(self, e, vec):
        return self.term.apply(e, vec)


class Resolution:
    """terms[n] is a FreeTerm; gens[n] the generators that define d_n
    (ambient vectors in terms[n-1] coordinates, keyed (block, morphism));
    gens[0] are elements of F defining the augmentation."""

    def __init__(self, cat, rep):
        self.cat = cat
        self.rep = rep
        self.field = cat.field
        self.gens = []
        self.terms = []
        self.partial = False

    @property
    def length(self):
        return len(self.terms) - 1

    def formal_diff(self, n):
        """d_n as a matrix of formal sums {mid: coeff}; entry (i, j) lies in
        k[Hom(c_i^(n-1), c_j^(n))]."""
        assert 1 <= n <= self.length
        out = {}
        for j, (obj, vec) in enumerate(self.gens[n]):
            for (i, mid), coeff in vec.items():
                out.setdefault((i, j), {})[mid] = coeff
        return out

    def diff_columns_at(self, n, d):
        """Realized d_n at object d: sparse columns over terms[n-1].basis(d)."""
        cat, field = self.cat, self.field
        prev, cur = self.terms[n - 1], self.terms[n]
        cols = []
        for (j, f) in cur.basis(d):
            obj, vec = self.gens[n][j]
            col = {}
            for (i, mid), coeff in vec.items():
                t = prev.flat(d, i, cat.compose(f, mid))
                nv = field.add(col.get(t, 0), coeff)
                if nv:
                    col[t] = nv
                elif t in col:
                    del col[t]
            cols.append(col)
        return cols

    def aug_columns_at(self, d):
        """Realized augmentation at object d: sparse columns into F(d)."""
        field = self.field
        rep = self.rep
        cols = []
        for (j, f) in self.terms[0].basis(d):
            obj, x = self.gens[0][j]
            col = {}
            for i, c in x.items():
                for r, cc in rep.col(f, i).items():
                    nv = field.add(col.get(r, 0), field.mul(c, cc))
                    if nv:
                        col[r] = nv
                    elif r in col:
                        del col[r]
            cols.append(col)
        return cols

    def validate_exactness(self):
        """Realized complex is exact in positive degrees and surjects onto F."""
        field = self.field
        for d in range(self.cat.n_objects()):
            ranks = []
            aug = self.aug_columns_at(d)
            span = make_span(field)
            for col in aug:
                span.insert(col)
            assert span.dim == self.rep.dims[d], f"augmentation not onto at {d}"
            prev_kernel = self.terms[0].dim(d) - span.dim
            for n in range(1, self.length + 1):
                span = make_span(field)
                for col in self.diff_columns_at(n, d):
                    span.insert(col)
                assert span.dim == prev_kernel, \
                    f"complex not exact at level {n - 1}, object {d}"
                prev_kernel = self.terms[n].dim(d) - span.dim
            if self.gens and not self.gens[-1]:
                # the sweep found an empty kernel: the resolution is complete
                assert prev_kernel == 0
        return True


def _sweep(cat, module, order=None, budget=None):
    field = cat.field
    order = list(order) if order is not None else list(range(cat.n_objects()))
    gens_out = {d: [] for d in range(cat.n_objects())}
    for e in cat.generators:
        if not cat.is_identity(e):
            gens_out[cat.src(e)].append(e)
    reached = [make_span(field) for _ in range(cat.n_objects())]
    gens = []

    def closure(d0, v0):
        stack = [(d0, v0)]
        while stack:
            d, v = stack.pop()
            for e in gens_out[d]:
                w = module.apply(e, v)
                if not w:
                    continue
                t = cat.tgt(e)
                if reached[t].insert(w) is not None:
                    stack.append((t, w))

    for d in order:
        for v in module.kernel_basis_at(d):
            if reached[d].insert(v) is not None:
                gens.append((d, v))
                closure(d, v)
                if budget is not None and len(gens) > budget:
                    return gens, True
    return gens, False


def resolve(F: LinRep, length, order=None, gen_budget=4096, term_cap=3_000_000) -> Resolution:
    """Resolution of a covariant module by sums of standard projectives."""
    assert F.variance == "co"
    cat = F.cat
    res = Resolution(cat, F)
    gens0, over = _sweep(cat, _RepModule(F), order=order, budget=gen_budget)
    res.gens.append(gens0)
    res.terms.append(FreeTerm(cat, [c for (c, _) in gens0]))
    if over:
        res.partial = True
        return res
    for n in range(1, length + 1):
        prev = res.terms[n - 1]
        if n == 1:
            cols_at = res.aug_columns_at
        else:
            nn = n - 1
            cols_at = lambda d, nn=nn: res.diff_columns_at(nn, d)
        module = _KernelModule(prev, cols_at, cat.field)
        if sum(prev.dim(d) for d in range(cat.n_objects())) > term_cap:
            res.partial = True
            return res
        gens, over = _sweep(cat, module, order=order, budget=gen_budget)
        if over:
            res.partial = True
            return res
        # re-key sparse vectors from flat indices to (block, morphism) pairs
        keyed = []
        for (d, vec) in gens:
            basis = prev.basis(d)
            keyed.append((d, {basis[k]: c for k, c in vec.items()}))
        res.gens.append(keyed)
        res.terms.append(FreeTerm(cat, [c for (c, _) in keyed]))
        if not gens:
            break  # kernel is zero: the resolution is complete
    return res


_RES_CACHE = {}


def _resolution_for(F, length, order=None):
    from .cache import rep_key
    key = (F.cat.key, rep_key(F), tuple(order) if order else None)
    cached = _RES_CACHE.get(key)
    if cached is not None and cached.length >= length:
        return cached
    if cached is not None and not cached.partial and \
            not cached.gens[-1]:
        return cached  # complete resolution: later terms are zero
    res = resolve(F, length, order=order)
    _RES_CACHE[key] = res
    return res


def op_rep(rep: LinRep) -> LinRep:
    """The same module seen over the opposite category (variance flipped)."""
    opc = getattr(rep.cat, "_opcat", None)
    if opc is None:
        opc = rep.cat.op()
        rep.cat._opcat = opc
        opc._opcat = rep.cat
    base = rep.cat

    def act(mid):
        s, t, p = opc.morphisms[mid]
        return rep.act(base.mid_of(t, s, p))

    bmap = None
    if rep._basis_map_fn is not None:
        def bmap(mid):
            s, t, p = opc.morphisms[mid]
            return rep.basis_map(base.mid_of(t, s, p))

    variance = "contra" if rep.variance == "co" else "co"
    return LinRep(opc, variance, rep.dims, act, name=f"op({rep.name})",
                  basis_map_fn=bmap)


def tor(G: LinRep, F: LinRep, max_degree, resolve_side="left", order=None,
        resolution=None):
    """Tor_0..Tor_max_degree of (G contravariant, F covariant) over their
    base category, by resolving F (left) or G (right)."""
    assert G.cat is F.cat
    assert G.variance == "contra" and F.variance == "co"
    if resolve_side == "right":
        return tor(op_rep(F), op_rep(G), max_degree, resolve_side="left",
                   order=order)
    res = resolution if resolution is not None else \
        _resolution_for(F, max_degree + 1, order=order)
    if res.partial and res.length < max_degree + 1:
        raise RuntimeError("resolution budget exceeded; partial resolution "
                           f"of length {res.length}")
    return homology_of_applied(G, res, max_degree), res


def homology_of_applied(G: LinRep, res: Resolution, max_degree):
    """Homology dims of G applied to the resolution."""
    field = res.field
    cdims = []
    offsets = []
    for n in range(min(res.length, max_degree + 1) + 1):
        objs = res.terms[n].gen_objs
        offs = []
        total = 0
        for c in objs:
            offs.append(total)
            total += G.dims[c]
        offsets.append(offs)
        cdims.append(total)
    while len(cdims) <= max_degree + 1:
        cdims.append(0)
        offsets.append([])
    ranks = [0] * (max_degree + 2)
    for n in range(1, max_degree + 2):
        if n > res.length:
            break
        if cdims[n] == 0 or cdims[n - 1] == 0:
            continue
        span = make_span(field)
        offs_prev = offsets[n - 1]
        for j, (obj, vec) in enumerate(res.gens[n]):
            for x in range(G.dims[obj]):
                col = {}
                for (i, mid), coeff in vec.items():
                    for r, c in G.col(mid, x).items():
                        key = offs_prev[i] + r
                        nv = field.add(col.get(key, 0), field.mul(coeff, c))
                        if nv:
                            col[key] = nv
                        elif key in col:
                            del col[key]
                if col:
                    span.insert(col)
        ranks[n] = span.dim
    out = []
    for n in range(max_degree + 1):
        out.append(cdims[n] - ranks[n] - ranks[n + 1])
    return out
