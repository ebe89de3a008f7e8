"""Dense matrices over a FieldDesc with exact Gaussian elimination.

Rows are plain Python lists of field elements (ints 0..q-1).  A Mat of shape
(m, n) represents a linear map F^n -> F^m acting on column vectors; payloads
(m, n, flat tuple) are the hashable form used as category morphism data.
"""

from __future__ import annotations

from .field import FieldDesc


class Mat:
    __slots__ = ("field", "m", "n", "rows")

    def __init__(self, field: FieldDesc, rows, shape=None):
        self.field = field
        if shape is not None:
            self.m, self.n = shape
        else:
            self.m = len(rows)
            self.n = len(rows[0]) if rows else 0
        self.rows = rows

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zeros(field, m, n):
        return Mat(field, [[0] * n for _ in range(m)], (m, n))

    @staticmethod
    def identity(field, n):
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = 1
        return Mat(field, rows, (n, n))

    @staticmethod
    def from_rows(field, rows, n=None):
        rows = [list(r) for r in rows]
        if n is None:
            n = len(rows[0]) if rows else 0
        return Mat(field, rows, (len(rows), n))

    @staticmethod
    def from_cols(field, cols, m=None):
        if m is None:
            m = len(cols[0]) if cols else 0
        rows = [[col[i] for col in cols] for i in range(m)]
        return Mat(field, rows, (m, len(cols)))

    @staticmethod
    def from_payload(field, payload):
        m, n, flat = payload
        rows = [list(flat[i * n:(i + 1) * n]) for i in range(m)]
        return Mat(field, rows, (m, n))

    def payload(self):
        flat = tuple(x for row in self.rows for x in row)
        return (self.m, self.n, flat)

    def copy(self):
        return Mat(self.field, [row[:] for row in self.rows], (self.m, self.n))

    # -- arithmetic ----------------------------------------------------------

    def mul(self, other: "Mat") -> "Mat":
        assert self.n == other.m, (self.m, self.n, other.m, other.n)
        F = self.field
        add, mul = F.add, F.mul
        bt = [[other.rows[k][j] for k in range(other.m)] for j in range(other.n)]
        out = []
        for row in self.rows:
            orow = []
            for col in bt:
                s = 0
                for a, b in zip(row, col):
                    if a and b:
                        s = add(s, mul(a, b))
                orow.append(s)
            out.append(orow)
        return Mat(F, out, (self.m, other.n))

    def mulvec(self, v):
        F = self.field
        add, mul = F.add, F.mul
        out = []
        for row in self.rows:
            s = 0
            for a, b in zip(row, v):
                if a and b:
                    s = add(s, mul(a, b))
            out.append(s)
        return out

    def add_mat(self, other):
        F = self.field
        return Mat(F, [[F.add(a, b) for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.rows, other.rows)], (self.m, self.n))

    def sub_mat(self, other):
        F = self.field
        return Mat(F, [[F.sub(a, b) for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.rows, other.rows)], (self.m, self.n))

    def scale(self, c):
        F = self.field
        return Mat(F, [[F.mul(c, a) for a in row] for row in self.rows], (self.m, self.n))

    def neg(self):
        F = self.field
        return Mat(F, [[F.neg(a) for a in row] for row in self.rows], (self.m, self.n))

    def transpose(self):
        return Mat(self.field, [[self.rows[i][j] for i in range(self.m)]
                                for j in range(self.n)], (self.n, self.m))

    def hstack(self, other):
        assert self.m == other.m
        return Mat(self.field, [r1 + r2 for r1, r2 in zip(self.rows, other.rows)],
                   (self.m, self.n + other.n))

    def vstack(self, other):
        assert self.n == other.n
        return Mat(self.field, [r[:] for r in self.rows] + [r[:] for r in other.rows],
                   (self.m + other.m, self.n))

    def col(self, j):
        return [row[j] for row in self.rows]

    def is_zero(self):
        return all(all(x == 0 for x in row) for row in self.rows)

    def __eq__(self, other):
        return (isinstance(other, Mat) and self.field == other.field
                and self.m == other.m and self.n == other.n and self.rows == other.rows)

    def __hash__(self):
        return hash(self.payload())

    def __repr__(self):
        return f"Mat({self.m}x{self.n} over {self.field})"

    # -- elimination ----------------------------------------------------------

    def rref(self):
        """Reduced row echelon form; returns (Mat, pivot column list)."""
        F = self.field
        rows = [row[:] for row in self.rows]
        m, n = self.m, self.n
        pivots = []
        r = 0
        for c in range(n):
            pr = None
            for i in range(r, m):
                if rows[i][c]:
                    pr = i
                    break
            if pr is None:
                continue
            rows[r], rows[pr] = rows[pr], rows[r]
            inv = F.inv(rows[r][c])
            if inv != 1:
                rows[r] = [F.mul(inv, x) for x in rows[r]]
            for i in range(m):
                if i != r and rows[i][c]:
                    f = rows[i][c]
                    ri, rr = rows[i], rows[r]
                    for j in range(c, n):
                        if rr[j]:
                            ri[j] = F.sub(ri[j], F.mul(f, rr[j]))
            pivots.append(c)
            r += 1
            if r == m:
                break
        return Mat(F, rows, (m, n)), pivots

    def rank(self):
        return len(self.rref()[1])

    def kernel_basis(self):
        """Canonical basis of the right kernel {x : A x = 0}.

        Basis vectors come from the free columns of the RREF and are returned
        in ascending free-column order; re-reducing them yields the canonical
        echelon form of the kernel subspace.
        """
        F = self.field
        R, pivots = self.rref()
        pivset = set(pivots)
        free = [j for j in range(self.n) if j not in pivset]
        basis = []
        for j in free:
            v = [0] * self.n
            v[j] = 1
            for r, c in enumerate(pivots):
                # pivot row r reads x_c + sum_{j free} R[r][j] x_j = 0
                if R.rows[r][j]:
                    v[c] = F.neg(R.rows[r][j])
            basis.append(v)
        return basis

    def solve(self, b):
        """One solution x of A x = b, or None if inconsistent."""
        F = self.field
        aug = Mat(F, [row + [bb] for row, bb in zip(self.rows, b)], (self.m, self.n + 1))
        R, pivots = aug.rref()
        if self.n in pivots:
            return None
        x = [0] * self.n
        for r, c in enumerate(pivots):
            x[c] = R.rows[r][self.n]
        return x

    def image_echelon(self):
        """Canonical RREF basis of the column space, as row vectors."""
        R, pivots = self.transpose().rref()
        return [R.rows[i][:] for i in range(len(pivots))]


def random_mat(field, m, n, rng):
    return Mat(field, [[rng.randrange(field.q) for _ in range(n)] for _ in range(m)], (m, n))
