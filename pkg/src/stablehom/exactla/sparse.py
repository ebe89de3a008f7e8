"""Sparse exact linear algebra: incremental span bases and sparse elimination.

SpanBasis keeps a forward-reduced basis (one row per pivot column, pivot
normalized to 1 and equal to the row's minimal column, no back-substitution)
and is the workhorse for rank accumulation, reachable-span sweeps and quotient
dimension counts.  Rows are dicts {column: coefficient}; over GF(2) a bitset
variant stores rows as ints.

SparseMat is a coordinate-list matrix with Markowitz-style pivoting for rank
and kernel, deterministic tie-breaking (lowest row index, then lowest column).
"""

from __future__ import annotations

from .field import FieldDesc


class SpanBasis:
    """Incremental row span over any FieldDesc; rows are sparse dicts."""

    def __init__(self, field: FieldDesc, ncols=None):
        self.field = field
        self.ncols = ncols
        self.rows = {}  # pivot column -> row dict; row[pivot] == 1 == min column

    @property
    def dim(self):
        return len(self.rows)

    def reduce(self, vec):
        """Fully reduce a sparse dict against the basis; returns residual dict.

        Every stored row has its pivot as minimal column, so the minimal
        pivot hit strictly increases and the loop terminates.
        """
        F = self.field
        sub, mul = F.sub, F.mul
        v = {c: x for c, x in vec.items() if x}
        while True:
            piv = None
            for c in v:
                if c in self.rows and (piv is None or c < piv):
                    piv = c
            if piv is None:
                return v
            coef = v[piv]
            for c, rc in self.rows[piv].items():
                nv = sub(v.get(c, 0), mul(coef, rc))
                if nv:
                    v[c] = nv
                elif c in v:
                    del v[c]
        # unreachable

    def insert(self, vec):
        """Insert a vector; returns pivot column if it enlarged the span, else None."""
        F = self.field
        v = self.reduce(vec)
        if not v:
            return None
        piv = min(v)
        inv = F.inv(v[piv])
        if inv != 1:
            v = {c: F.mul(inv, x) for c, x in v.items()}
        self.rows[piv] = v
        return piv

    def contains(self, vec):
        return not self.reduce(vec)


class SpanBasisGF2:
    """Incremental row span over GF(2); rows are int bitsets."""

    def __init__(self, field=None, ncols=None):
        self.field = field
        self.ncols = ncols
        self.rows = {}  # pivot bit index -> int; pivot == lowest set bit

    @property
    def dim(self):
        return len(self.rows)

    @staticmethod
    def pack(vec):
        x = 0
        for c, coeff in vec.items():
            if coeff & 1:
                x |= 1 << c
        return x

    def reduce_int(self, x):
        # Stored rows have their pivot as lowest set bit, so scanning bits
        # upward never re-dirties a cleared position.
        rows = self.rows
        b = 0
        while True:
            t = x >> b
            if not t:
                return x
            b += (t & -t).bit_length() - 1
            row = rows.get(b)
            if row is not None:
                x ^= row
            b += 1

    def reduce(self, vec):
        x = self.reduce_int(self.pack(vec))
        return {i: 1 for i in _bits(x)}

    def insert_int(self, x):
        x = self.reduce_int(x)
        if not x:
            return None
        piv = (x & -x).bit_length() - 1
        self.rows[piv] = x
        return piv

    def insert(self, vec):
        return self.insert_int(self.pack(vec))

    def contains(self, vec):
        return self.reduce_int(self.pack(vec)) == 0


def _bits(x):
    while x:
        b = (x & -x).bit_length() - 1
        yield b
        x &= x - 1


def make_span(field: FieldDesc, ncols=None):
    if field.q == 2:
        return SpanBasisGF2(field, ncols)
    return SpanBasis(field, ncols)


class SparseMat:
    """Coordinate-list sparse matrix with lazy per-row dicts."""

    def __init__(self, field: FieldDesc, m: int, n: int, entries=None):
        self.field = field
        self.m = m
        self.n = n
        self.rows = [dict() for _ in range(m)]
        if entries:
            for (i, j), v in entries.items():
                if v:
                    self.rows[i][j] = v

    @staticmethod
    def from_dense(mat):
        sp = SparseMat(mat.field, mat.m, mat.n)
        for i, row in enumerate(mat.rows):
            for j, v in enumerate(row):
                if v:
                    sp.rows[i][j] = v
        return sp

    def set(self, i, j, v):
        if v:
            self.rows[i][j] = v
        elif j in self.rows[i]:
            del self.rows[i][j]

    def to_dense(self):
        from .dense import Mat
        rows = [[0] * self.n for _ in range(self.m)]
        for i, row in enumerate(self.rows):
            for j, v in row.items():
                rows[i][j] = v
        return Mat(self.field, rows, (self.m, self.n))

    def nnz(self):
        return sum(len(r) for r in self.rows)

    def _eliminate(self):
        """Markowitz-pivoted forward elimination.

        Returns (pivot list [(row, col)] in elimination order, row dicts after
        elimination).  Pivot choice minimizes (nnz(row)-1)*(nnz(col)-1) among
        active entries; ties break on lowest row index then lowest column, so
        runs are reproducible.  A pivot row never contains the pivot column of
        any earlier pivot.
        """
        F = self.field
        rows = [dict(r) for r in self.rows]
        col_count = {}
        for r in rows:
            for j in r:
                col_count[j] = col_count.get(j, 0) + 1
        active_rows = set(i for i, r in enumerate(rows) if r)
        pivots = []
        while active_rows:
            best = None
            for i in sorted(active_rows):
                ri = rows[i]
                rc = len(ri) - 1
                for j in sorted(ri):
                    score = rc * (col_count.get(j, 1) - 1)
                    if best is None or score < best[0]:
                        best = (score, i, j)
                if best and best[0] == 0:
                    break
            if best is None:
                break
            _, pi, pj = best
            prow = rows[pi]
            inv = F.inv(prow[pj])
            if inv != 1:
                prow = {c: F.mul(inv, v) for c, v in prow.items()}
            pivots.append((pi, pj))
            active_rows.discard(pi)
            for j in rows[pi]:
                col_count[j] -= 1
            rows[pi] = prow
            for i in list(active_rows):
                ri = rows[i]
                if pj in ri:
                    f = ri[pj]
                    for j in ri:
                        col_count[j] -= 1
                    for c, v in prow.items():
                        nv = F.sub(ri.get(c, 0), F.mul(f, v))
                        if nv:
                            ri[c] = nv
                        elif c in ri:
                            del ri[c]
                    for j in ri:
                        col_count[j] = col_count.get(j, 0) + 1
                    if not ri:
                        active_rows.discard(i)
        return pivots, rows

    def rank(self):
        return len(self._eliminate()[0])

    def kernel_basis(self):
        """Canonical echelon basis of {x : A x = 0} (same subspace encoding
        as Mat.kernel_basis; computed sparsely, then canonicalized)."""
        F = self.field
        pivots, rows = self._eliminate()
        pivot_cols = set(j for _, j in pivots)
        free = [j for j in range(self.n) if j not in pivot_cols]
        basis = []
        for jf in free:
            x = {jf: 1}
            # a pivot row only involves its own pivot, later pivots and free
            # columns, so one reverse pass solves the system
            for (pi, pj) in reversed(pivots):
                row = rows[pi]
                s = 0
                for c, v in row.items():
                    if c == pj:
                        continue
                    xc = x.get(c, 0)
                    if xc and v:
                        s = F.add(s, F.mul(v, xc))
                if s:
                    x[pj] = F.neg(s)
            vec = [0] * self.n
            for c, v in x.items():
                vec[c] = v
            basis.append(vec)
        from .dense import Mat
        if not basis:
            return []
        R, piv = Mat.from_rows(F, basis, self.n).rref()
        return [R.rows[i][:] for i in range(len(piv))]
