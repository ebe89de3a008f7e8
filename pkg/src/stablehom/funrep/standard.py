"""Closed-form functors on finite-dimensional vector spaces.

A MatFunctor knows its dimension on F^n and its matrix on an arbitrary linear
map, independent of any category truncation; evaluate() then restricts one to
a built category as a LinRep.  Monomial bases are fixed once and for all:
S^n sorted index tuples, Lambda^n strictly increasing tuples, T^n all tuples,
Gamma^n the dual basis of S^n.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, combinations_with_replacement, product

from ..exactla import Mat
from ..fincat.quadspace import QuadSpace, _strict_pairs, _tri_pairs
from .expr import expr_text


def obj_dim(cat, oid):
    payload = cat.objects[oid]
    if isinstance(payload, int):
        return payload
    return payload[1]


class MatFunctor:
    variance = 1  # +1 covariant, -1 contravariant

    def dim(self, n):
        raise NotImplementedError

    def on_mat(self, A: Mat) -> Mat:
        """Matrix of F(A).  For covariant F and A : F^n -> F^m this is
        dim(m) x dim(n); contravariant functors swap the shape."""
        raise NotImplementedError

    def basis_map(self, A):
        """For linearized-set functors: image basis index per basis index
        (every column a single 1), else None."""
        return None


class IdF(MatFunctor):
    def __init__(self, field):
        self.field = field

    def dim(self, n):
        return n

    def on_mat(self, A):
        return A


class ConstF(MatFunctor):
    def __init__(self, field, d):
        self.field = field
        self.d = d

    def dim(self, n):
        return self.d

    def on_mat(self, A):
        return Mat.identity(self.field, self.d)


@lru_cache(maxsize=None)
def sym_basis(n, k):
    return list(combinations_with_replacement(range(n), k))


@lru_cache(maxsize=None)
def ext_basis(n, k):
    return list(combinations(range(n), k))


@lru_cache(maxsize=None)
def tens_basis(n, k):
    return list(product(range(n), repeat=k))


class SPow(MatFunctor):
    def __init__(self, field, k):
        self.field = field
        self.k = k

    def dim(self, n):
        return len(sym_basis(n, self.k))

    def on_mat(self, A):
        F = self.field
        src = sym_basis(A.n, self.k)
        tgt = sym_basis(A.m, self.k)
        index = {m: i for i, m in enumerate(tgt)}
        out = Mat.zeros(F, len(tgt), len(src))
        for j, mono in enumerate(src):
            # product of the image linear forms A e_i, collected on monomials
            acc = {(): 1}
            for i in mono:
                nxt = {}
                for part, c in acc.items():
                    for r in range(A.m):
                        a = A.rows[r][i]
                        if a and c:
                            key = tuple(sorted(part + (r,)))
                            v = F.add(nxt.get(key, 0), F.mul(c, a))
                            if v:
                                nxt[key] = v
                            elif key in nxt:
                                del nxt[key]
                acc = nxt
            for m, c in acc.items():
                out.rows[index[m]][j] = c
        return out


class LPow(MatFunctor):
    def __init__(self, field, k):
        self.field = field
        self.k = k

    def dim(self, n):
        return len(ext_basis(n, self.k))

    def on_mat(self, A):
        F = self.field
        src = ext_basis(A.n, self.k)
        tgt = ext_basis(A.m, self.k)
        index = {m: i for i, m in enumerate(tgt)}
        minus_one = F.neg(1)
        out = Mat.zeros(F, len(tgt), len(src))
        for j, mono in enumerate(src):
            acc = {(): 1}
            for i in mono:
                nxt = {}
                for part, c in acc.items():
                    for r in range(A.m):
                        a = A.rows[r][i]
                        if not (a and c):
                            continue
                        if r in part:
                            continue
                        pos = sum(1 for x in part if x < r)
                        sign = 1 if (len(part) - pos) % 2 == 0 else minus_one
                        key = tuple(sorted(part + (r,)))
                        v = F.add(nxt.get(key, 0), F.mul(F.mul(c, a), sign))
                        if v:
                            nxt[key] = v
                        elif key in nxt:
                            del nxt[key]
                acc = nxt
            for m, c in acc.items():
                out.rows[index[m]][j] = c
        return out


class TPow(MatFunctor):
    def __init__(self, field, k):
        self.field = field
        self.k = k

    def dim(self, n):
        return n ** self.k

    def on_mat(self, A):
        F = self.field
        src = tens_basis(A.n, self.k)
        tgt = tens_basis(A.m, self.k)
        index = {m: i for i, m in enumerate(tgt)}
        out = Mat.zeros(F, len(tgt), len(src))
        for j, mono in enumerate(src):
            acc = {(): 1}
            for i in mono:
                nxt = {}
                for part, c in acc.items():
                    for r in range(A.m):
                        a = A.rows[r][i]
                        if a and c:
                            key = part + (r,)
                            v = F.add(nxt.get(key, 0), F.mul(c, a))
                            if v:
                                nxt[key] = v
                            elif key in nxt:
                                del nxt[key]
                acc = nxt
            for m, c in acc.items():
                out.rows[index[m]][j] = c
        return out


class GPow(MatFunctor):
    """Divided power Gamma^k, implemented as the componentwise dual of S^k:
    action matrices are mutual transposes under the chosen bases."""

    def __init__(self, field, k):
        self.field = field
        self.inner = SPow(field, k)

    def dim(self, n):
        return self.inner.dim(n)

    def on_mat(self, A):
        return self.inner.on_mat(A.transpose()).transpose()


class LinSet(MatFunctor):
    """Linearization k[X(V)] for X = S^2 or Lambda^2, possibly dualized:
    the dual flag precomposes with V -> V^*, i.e. the basis becomes the set
    of quadratic (resp. alternating) forms and the action is pullback."""

    def __init__(self, field, kind, dual):
        assert kind in ("q", "a")
        self.field = field
        self.kind = kind
        self.dual = dual

    @property
    def variance(self):
        return -1 if self.dual else 1

    def _pairs(self, n):
        return _tri_pairs(n) if self.kind == "q" else _strict_pairs(n)

    def npairs(self, n):
        return len(self._pairs(n))

    def dim(self, n):
        return self.field.q ** self.npairs(n)

    def _encode(self, coeffs):
        x = 0
        for c in reversed(coeffs):
            x = x * self.field.q + c
        return x

    def _decode(self, idx, n):
        out = []
        for _ in range(self.npairs(n)):
            out.append(idx % self.field.q)
            idx //= self.field.q
        return tuple(out)

    def basis_map_on(self, A, n_src, n_tgt):
        """Index map of the action on basis elements.

        dual: A : F^n -> F^m acts k[forms on m] -> k[forms on n] by pullback.
        plain: A acts k[S^2(F^n)] -> k[S^2(F^m)] by the induced matrix.
        """
        F = self.field
        if self.dual:
            sp_cache = {}
            out = []
            for idx in range(self.dim(n_tgt)):
                coeffs = self._decode(idx, n_tgt)
                sp = sp_cache.get(coeffs)
                if sp is None:
                    sp = QuadSpace(F, n_tgt, self.kind, coeffs)
                    sp_cache[coeffs] = sp
                out.append(self._encode(sp.pullback_by(A)))
            return out
        M = (SPow(F, 2) if self.kind == "q" else LPow(F, 2)).on_mat(A)
        out = []
        for idx in range(self.dim(n_src)):
            coeffs = self._decode(idx, n_src)
            img = M.mulvec(list(coeffs))
            out.append(self._encode(img))
        return out

    def on_mat(self, A):
        n_src, n_tgt = A.n, A.m
        bm = self.basis_map_on(A, n_src, n_tgt)
        if self.dual:
            rows_dim, cols_dim = self.dim(n_src), self.dim(n_tgt)
        else:
            rows_dim, cols_dim = self.dim(n_tgt), self.dim(n_src)
        out = Mat.zeros(self.field, rows_dim, cols_dim)
        for j, i in enumerate(bm):
            out.rows[i][j] = 1
        return out

    def basis_map(self, A):
        return self.basis_map_on(A, A.n, A.m)


class ProjF(MatFunctor):
    """Standard projective k[Hom(F^c, -)] relative to a morphism class."""

    def __init__(self, field, c, cls="all"):
        self.field = field
        self.c = c
        self.cls = cls

    def dim(self, n):
        from ..fincat.builders import matrices
        return len(matrices(self.field, self.c, n, self.cls))

    def on_mat(self, A):
        from ..fincat.builders import matrices
        F = self.field
        src = matrices(F, self.c, A.n, self.cls)
        tgt = matrices(F, self.c, A.m, self.cls)
        index = {p: i for i, p in enumerate(tgt)}
        out = Mat.zeros(F, len(tgt), len(src))
        for j, p in enumerate(src):
            img = A.mul(Mat.from_payload(F, p)).payload()
            if img in index:
                out.rows[index[img]][j] = 1
        return out

    def basis_map(self, A):
        from ..fincat.builders import matrices
        F = self.field
        src = matrices(F, self.c, A.n, self.cls)
        tgt = matrices(F, self.c, A.m, self.cls)
        index = {p: i for i, p in enumerate(tgt)}
        out = []
        for p in src:
            img = A.mul(Mat.from_payload(F, p)).payload()
            if img not in index:
                return None
            out.append(index[img])
        return out


class PbarF(MatFunctor):
    """Reduced contravariant projective at the line: kernel of the
    augmentation k[V^*] -> k, with basis [l] - [0] over nonzero l."""

    variance = -1

    def __init__(self, field):
        self.field = field

    def dim(self, n):
        return self.field.q ** n - 1

    def _functionals(self, n):
        return [fl for fl in product(range(self.field.q), repeat=n)
                if any(fl)]

    def on_mat(self, A):
        # A : F^n -> F^m gives Pbar(m) -> Pbar(n), [l]-[0] -> [l o A]-[0]
        F = self.field
        src = self._functionals(A.m)
        tgt = self._functionals(A.n)
        index = {fl: i for i, fl in enumerate(tgt)}
        out = Mat.zeros(F, len(tgt), len(src))
        At = A.transpose()
        for j, fl in enumerate(src):
            img = tuple(At.mulvec(list(fl)))
            if any(img):
                out.rows[index[img]][j] = 1
        return out


class DualF(MatFunctor):
    """Precomposition with duality: X^v(V) = X(V^*), action on f is the
    action of X on the transpose, with variance flipped."""

    def __init__(self, inner):
        self.inner = inner
        self.variance = -inner.variance

    def dim(self, n):
        return self.inner.dim(n)

    def on_mat(self, A):
        return self.inner.on_mat(A.transpose())


class TensorF(MatFunctor):
    def __init__(self, a, b):
        assert a.variance == b.variance, "tensor factors must share variance"
        self.a, self.b = a, b
        self.variance = a.variance

    def dim(self, n):
        return self.a.dim(n) * self.b.dim(n)

    def on_mat(self, A):
        return kron(self.a.on_mat(A), self.b.on_mat(A))


class SumF(MatFunctor):
    def __init__(self, a, b):
        assert a.variance == b.variance, "summands must share variance"
        self.a, self.b = a, b
        self.variance = a.variance

    def dim(self, n):
        return self.a.dim(n) + self.b.dim(n)

    def on_mat(self, A):
        MA, MB = self.a.on_mat(A), self.b.on_mat(A)
        out = Mat.zeros(MA.field, MA.m + MB.m, MA.n + MB.n)
        for i in range(MA.m):
            for j in range(MA.n):
                out.rows[i][j] = MA.rows[i][j]
        for i in range(MB.m):
            for j in range(MB.n):
                out.rows[MA.m + i][MA.n + j] = MB.rows[i][j]
        return out


class ComposeF(MatFunctor):
    def __init__(self, outer, inner):
        self.outer, self.inner = outer, inner
        self.variance = outer.variance * inner.variance

    def dim(self, n):
        return self.outer.dim(self.inner.dim(n))

    def on_mat(self, A):
        return self.outer.on_mat(self.inner.on_mat(A))


class DeltaF(MatFunctor):
    """Difference functor: Delta(F)(V) = ker(F(V + k) -> F(V)) along the
    coordinate projection, with the canonical kernel basis per dimension."""

    def __init__(self, field, inner):
        assert inner.variance == 1, "difference functor acts on covariant functors"
        self.field = field
        self.inner = inner
        self._basis = {}

    def _proj(self, n):
        A = Mat.zeros(self.field, n, n + 1)
        for i in range(n):
            A.rows[i][i] = 1
        return A

    def kernel(self, n):
        if n not in self._basis:
            M = self.inner.on_mat(self._proj(n))
            self._basis[n] = M.kernel_basis()
        return self._basis[n]

    def dim(self, n):
        # the projection is split, so F(V + k) -> F(V) is always surjective
        return self.inner.dim(n + 1) - self.inner.dim(n)

    def on_mat(self, A):
        F = self.field
        n, m = A.n, A.m
        big = Mat.zeros(F, m + 1, n + 1)
        for i in range(m):
            for j in range(n):
                big.rows[i][j] = A.rows[i][j]
        big.rows[m][n] = 1
        FM = self.inner.on_mat(big)
        kb_src = self.kernel(n)
        kb_tgt = self.kernel(m)
        B = Mat.from_cols(F, kb_tgt, self.inner.dim(m + 1)) if kb_tgt else \
            Mat.zeros(F, self.inner.dim(m + 1), 0)
        out = Mat.zeros(F, len(kb_tgt), len(kb_src))
        for j, v in enumerate(kb_src):
            img = FM.mulvec(v)
            x = B.solve(img)
            assert x is not None, "difference functor image left the kernel"
            for i, c in enumerate(x):
                out.rows[i][j] = c
        return out


def kron(A: Mat, B: Mat) -> Mat:
    F = A.field
    out = Mat.zeros(F, A.m * B.m, A.n * B.n)
    for i in range(A.m):
        for j in range(A.n):
            a = A.rows[i][j]
            if not a:
                continue
            for k in range(B.m):
                bi = B.rows[k]
                orow = out.rows[i * B.m + k]
                for l in range(B.n):
                    if bi[l]:
                        orow[j * B.n + l] = F.mul(a, bi[l])
    return out


def compile_functor(expr, field, cls="all") -> MatFunctor:
    tag = expr[0]
    if tag == "Id":
        return IdF(field)
    if tag == "Const":
        return ConstF(field, expr[1])
    if tag == "S":
        return SPow(field, expr[1])
    if tag == "L":
        return LPow(field, expr[1])
    if tag == "G":
        return GPow(field, expr[1])
    if tag == "T":
        return TPow(field, expr[1])
    if tag == "KQ2":
        return LinSet(field, "q", expr[1])
    if tag == "KALT2":
        return LinSet(field, "a", expr[1])
    if tag == "Pbar":
        return PbarF(field)
    if tag == "Proj":
        return ProjF(field, expr[1], cls)
    if tag == "Dual":
        return DualF(compile_functor(expr[1], field, cls))
    if tag == "Delta":
        return DeltaF(field, compile_functor(expr[1], field, cls))
    if tag == "Tensor":
        return TensorF(compile_functor(expr[1], field, cls),
                       compile_functor(expr[2], field, cls))
    if tag == "Sum":
        return SumF(compile_functor(expr[1], field, cls),
                    compile_functor(expr[2], field, cls))
    if tag == "Compose":
        return ComposeF(compile_functor(expr[1], field, cls),
                        compile_functor(expr[2], field, cls))
    raise ValueError(f"cannot evaluate expression node {expr!r}")


def evaluate(expr, cat, name=None):
    """LinRep of a functor expression on a category with matrix morphisms."""
    from .linrep import LinRep
    mf = compile_functor(expr, cat.field, cat.params.get("cls", "all"))
    dims = [mf.dim(obj_dim(cat, o)) for o in range(cat.n_objects())]
    variance = "co" if mf.variance == 1 else "contra"

    def act(mid):
        return mf.on_mat(Mat.from_payload(cat.field, cat.payload(mid)))

    def bmap(mid):
        return mf.basis_map(Mat.from_payload(cat.field, cat.payload(mid)))

    rep = LinRep(cat, variance, dims, act, name=name or expr_text(expr),
                 basis_map_fn=bmap)
    rep.functor = mf
    rep.expr = expr
    return rep
