"""Canonical subspaces of F_q^n and their lattice operations.

A Subspace stores its reduced-row-echelon basis, which is the unique canonical
representation: two bases spanning the same set of vectors produce identical
encodings.
"""

from __future__ import annotations

from itertools import combinations, product

from .field import FieldDesc
from .dense import Mat


class Subspace:
    __slots__ = ("field", "ambient", "basis")

    def __init__(self, field: FieldDesc, ambient: int, basis_rows):
        self.field = field
        self.ambient = ambient
        self.basis = tuple(tuple(r) for r in basis_rows)

    @staticmethod
    def from_vectors(field, ambient, vectors):
        if not vectors:
            return Subspace(field, ambient, ())
        R, pivots = Mat.from_rows(field, vectors, ambient).rref()
        return Subspace(field, ambient, [R.rows[i] for i in range(len(pivots))])

    @staticmethod
    def zero(field, ambient):
        return Subspace(field, ambient, ())

    @staticmethod
    def full(field, ambient):
        return Subspace(field, ambient, Mat.identity(field, ambient).rows)

    @property
    def dim(self):
        return len(self.basis)

    def basis_mat(self) -> Mat:
        return Mat.from_rows(self.field, self.basis, self.ambient)

    def contains_vector(self, v):
        if self.dim == 0:
            return all(x == 0 for x in v)
        F = self.field
        red = list(v)
        pivots = [next(j for j in range(self.ambient) if row[j]) for row in self.basis]
        for row, p in zip(self.basis, pivots):
            c = red[p]
            if c:
                for j in range(self.ambient):
                    if row[j]:
                        red[j] = F.sub(red[j], F.mul(c, row[j]))
        return all(x == 0 for x in red)

    def contains(self, other: "Subspace"):
        return all(self.contains_vector(v) for v in other.basis)

    def vectors(self):
        """All q^dim vectors (small subspaces only)."""
        F = self.field
        for coeffs in product(range(F.q), repeat=self.dim):
            v = [0] * self.ambient
            for c, row in zip(coeffs, self.basis):
                if c:
                    for j in range(self.ambient):
                        if row[j]:
                            v[j] = F.add(v[j], F.mul(c, row[j]))
            yield tuple(v)

    def constraints(self) -> Mat:
        """Matrix C with this subspace equal to ker C."""
        if self.dim == 0:
            return Mat.identity(self.field, self.ambient)
        K = self.basis_mat().kernel_basis()
        return Mat.from_rows(self.field, K, self.ambient) if K else Mat.zeros(self.field, 0, self.ambient)

    # -- lattice operations -------------------------------------------------

    def sum(self, other: "Subspace"):
        assert self.ambient == other.ambient
        return Subspace.from_vectors(self.field, self.ambient,
                                     list(self.basis) + list(other.basis))

    def intersection(self, other: "Subspace"):
        assert self.ambient == other.ambient
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.field, self.ambient)
        A = self.basis_mat().transpose()   # n x a
        B = other.basis_mat().transpose()  # n x b
        M = A.hstack(B)
        vecs = []
        for k in M.kernel_basis():
            u = k[:A.n]
            vecs.append(A.mulvec(u))
        return Subspace.from_vectors(self.field, self.ambient, vecs)

    def preimage(self, f: Mat):
        """{x : f(x) in self}, f a map into this subspace's ambient space."""
        assert f.m == self.ambient
        C = self.constraints()
        if C.m == 0:
            return Subspace.full(self.field, f.n)
        K = C.mul(f).kernel_basis()
        return Subspace.from_vectors(self.field, f.n, K)

    def image(self, f: Mat):
        """f(self), f a map out of this subspace's ambient space."""
        assert f.n == self.ambient
        return Subspace.from_vectors(self.field, f.m,
                                     [f.mulvec(list(v)) for v in self.basis])

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.field == other.field
                and self.ambient == other.ambient and self.basis == other.basis)

    def __hash__(self):
        return hash((self.field.key, self.ambient, self.basis))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of F^{self.ambient})"


def quotient_data(field, ambient, sub: Subspace):
    """Section basis and projection matrix for F^ambient / sub.

    Returns (section, proj) where section is a (dim-quotient)-list of ambient
    vectors (the standard basis vectors at the non-pivot columns of sub's
    echelon basis) and proj is the matrix of the quotient map in that basis.
    """
    pivots = [next(j for j in range(ambient) if row[j]) for row in sub.basis]
    pivset = set(pivots)
    free = [j for j in range(ambient) if j not in pivset]
    section = []
    for j in free:
        v = [0] * ambient
        v[j] = 1
        section.append(v)
    # proj x = coordinates of x mod sub in the section basis: reduce x by the
    # echelon basis rows (clearing pivot columns), read off free columns
    F = field
    cols = []
    for j in range(ambient):
        x = [0] * ambient
        x[j] = 1
        for row, p in zip(sub.basis, pivots):
            c = x[p]
            if c:
                for k in range(ambient):
                    if row[k]:
                        x[k] = F.sub(x[k], F.mul(c, row[k]))
        cols.append([x[jf] for jf in free])
    proj = Mat.from_cols(field, cols, len(free))
    return section, proj


def enumerate_subspaces(field, n, dim=None):
    """All subspaces of F_q^n (as canonical Subspace values), by echelon shape."""
    out = []
    dims = range(n + 1) if dim is None else [dim]
    for k in dims:
        if k == 0:
            out.append(Subspace.zero(field, n))
            continue
        for pivots in combinations(range(n), k):
            pivset = set(pivots)
            # a free entry sits right of its row's pivot, in a non-pivot column
            free_positions = [(r, j) for r in range(k)
                              for j in range(pivots[r] + 1, n) if j not in pivset]
            for values in product(range(field.q), repeat=len(free_positions)):
                rows = [[0] * n for _ in range(k)]
                for r in range(k):
                    rows[r][pivots[r]] = 1
                for (r, j), v in zip(free_positions, values):
                    rows[r][j] = v
                out.append(Subspace(field, n, rows))
    return out
