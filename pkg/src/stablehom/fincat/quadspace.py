"""Quadratic and alternating-bilinear spaces over finite fields.

A quadratic form on F_q^n is stored by its upper-triangular coefficients
(q(x) = sum c_ij x_i x_j over i <= j); an alternating form by its strict
upper-triangular Gram entries.  The polar form b(x,y) = q(x+y) - q(x) - q(y)
works in every characteristic, including 2, where it is alternating.
"""

from __future__ import annotations

from itertools import product

from ..exactla import Mat, Subspace
from ..exactla.field import FieldDesc


def _tri_pairs(n):
    return [(i, j) for i in range(n) for j in range(i, n)]


def _strict_pairs(n):
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


class QuadSpace:
    """kind 'q': quadratic form; kind 'a': alternating bilinear form."""

    __slots__ = ("field", "n", "kind", "coeffs", "_gram", "_radical")

    def __init__(self, field: FieldDesc, n: int, kind: str, coeffs):
        assert kind in ("q", "a")
        self.field = field
        self.n = n
        self.kind = kind
        self.coeffs = tuple(coeffs)
        expected = len(_tri_pairs(n)) if kind == "q" else len(_strict_pairs(n))
        assert len(self.coeffs) == expected
        self._gram = None
        self._radical = None

    # -- basic evaluation -----------------------------------------------------

    def evaluate(self, v):
        """q(v); only for quadratic spaces."""
        assert self.kind == "q"
        F = self.field
        s = 0
        for (i, j), c in zip(_tri_pairs(self.n), self.coeffs):
            if c:
                s = F.add(s, F.mul(c, F.mul(v[i], v[j])))
        return s

    def gram(self) -> Mat:
        """Polar bilinear form (quadratic case) or the alternating Gram."""
        if self._gram is not None:
            return self._gram
        F = self.field
        n = self.n
        rows = [[0] * n for _ in range(n)]
        if self.kind == "q":
            # b(e_i, e_j) = c_ij for i != j, b(e_i, e_i) = 2 c_ii
            for (i, j), c in zip(_tri_pairs(n), self.coeffs):
                if i == j:
                    rows[i][i] = F.add(c, c)
                else:
                    rows[i][j] = c
                    rows[j][i] = c
        else:
            for (i, j), c in zip(_strict_pairs(n), self.coeffs):
                rows[i][j] = c
                rows[j][i] = F.neg(c)
        self._gram = Mat(F, rows, (n, n))
        return self._gram

    def bilinear(self, u, v):
        return _vec_dot(self.field, u, self.gram().mulvec(list(v)))

    # -- radical -----------------------------------------------------------------

    def radical(self) -> Subspace:
        """{x : b(x,.) = 0 and (quadratic case) q(x) = 0}."""
        if self._radical is not None:
            return self._radical
        F = self.field
        kerb = Subspace.from_vectors(F, self.n, self.gram().kernel_basis())
        if self.kind == "a" or F.p != 2:
            # odd characteristic: 2 q(x) = b(x,x) = 0 forces q(x) = 0
            self._radical = kerb
            return kerb
        # char 2: q restricted to ker b is Frobenius-semilinear; substitute
        # b_i = a_i^2 to get a linear condition, then take square roots
        basis = [list(v) for v in kerb.basis]
        if not basis:
            self._radical = kerb
            return kerb
        vals = [self.evaluate(w) for w in basis]
        row = Mat(F, [vals], (1, len(vals)))
        sol = row.kernel_basis()
        half = F.q // 2  # sqrt(x) = x^(q/2) since squaring is Frobenius
        vecs = []
        for b in sol:
            a = [F.power(x, half) for x in b]
            w = [0] * self.n
            for coef, bas in zip(a, basis):
                for k in range(self.n):
                    if coef and bas[k]:
                        w[k] = F.add(w[k], F.mul(coef, bas[k]))
            vecs.append(w)
        self._radical = Subspace.from_vectors(F, self.n, vecs)
        return self._radical

    def radical_brute(self) -> Subspace:
        """Oracle: enumerate all vectors (tiny spaces only)."""
        F = self.field
        vecs = []
        for v in product(range(F.q), repeat=self.n):
            if any(self.bilinear(v, e) != 0 for e in _unit_vectors(self.n)):
                continue
            if self.kind == "q" and self.evaluate(v) != 0:
                continue
            vecs.append(list(v))
        return Subspace.from_vectors(F, self.n, vecs)

    def is_nondegenerate(self):
        return self.radical().dim == 0

    # -- functoriality --------------------------------------------------------------

    def pullback_by(self, A: Mat):
        """Coefficients of the form pulled back along A : F^m -> F^n."""
        F = self.field
        m = A.n
        cols = [A.col(j) for j in range(m)]
        if self.kind == "q":
            out = []
            for (i, j) in _tri_pairs(m):
                if i == j:
                    out.append(self.evaluate(cols[i]))
                else:
                    out.append(self.bilinear(cols[i], cols[j]))
            return tuple(out)
        out = []
        for (i, j) in _strict_pairs(m):
            out.append(self.bilinear(cols[i], cols[j]))
        return tuple(out)

    def accepts(self, A: Mat, source: "QuadSpace"):
        """Is A an injective map with A^*(this form) = source form?"""
        if A.rank() < A.n:
            return False
        return self.pullback_by(A) == source.coeffs

    def orthogonal_sum(self, other: "QuadSpace"):
        assert self.kind == other.kind and self.field == other.field
        F, n, m = self.field, self.n, other.n
        pairs = _tri_pairs(n + m) if self.kind == "q" else _strict_pairs(n + m)
        mine = dict(zip(_tri_pairs(n) if self.kind == "q" else _strict_pairs(n), self.coeffs))
        theirs = dict(zip(_tri_pairs(m) if other.kind == "q" else _strict_pairs(m), other.coeffs))
        out = []
        for (i, j) in pairs:
            if i < n and j < n:
                out.append(mine[(i, j)])
            elif i >= n and j >= n:
                out.append(theirs[(i - n, j - n)])
            else:
                out.append(0)
        return QuadSpace(F, n + m, self.kind, out)

    def payload(self):
        return (self.kind, self.n, self.coeffs)

    def __eq__(self, other):
        return isinstance(other, QuadSpace) and self.payload() == other.payload() \
            and self.field == other.field

    def __hash__(self):
        return hash((self.field.key, self.payload()))

    def __repr__(self):
        return f"QuadSpace({self.kind}, dim {self.n}, {self.coeffs})"


def _unit_vectors(n):
    for i in range(n):
        v = [0] * n
        v[i] = 1
        yield v


def _vec_dot(F, u, w):
    s = 0
    for a, b in zip(u, w):
        if a and b:
            s = F.add(s, F.mul(a, b))
    return s


def hyperbolic_plane(field, kind="q") -> QuadSpace:
    """(x, y) -> xy, resp. the standard alternating plane."""
    if kind == "q":
        return QuadSpace(field, 2, "q", (0, 1, 0))
    return QuadSpace(field, 2, "a", (1,))


def all_forms(field, n, kind):
    npairs = len(_tri_pairs(n)) if kind == "q" else len(_strict_pairs(n))
    for coeffs in product(range(field.q), repeat=npairs):
        yield QuadSpace(field, n, kind, coeffs)
