"""Finite fields GF(p^d) with elements encoded as integers 0..q-1.

Prime fields use direct mod-p arithmetic.  Extension fields (d > 1, q <= 256)
encode an element sum(c_i * p^i) by its coefficient digits base p and multiply
through log/antilog tables over a primitive element.
"""

from __future__ import annotations

from functools import lru_cache


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


def _poly_mulmod(a, b, mod, p):
    # polynomials as little-endian coefficient tuples
    res = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                res[i + j] = (res[i + j] + ca * cb) % p
    # reduce by monic mod
    dm = len(mod) - 1
    for i in range(len(res) - 1, dm - 1, -1):
        c = res[i]
        if c:
            res[i] = 0
            for j in range(dm):
                res[i - dm + j] = (res[i - dm + j] - c * mod[j]) % p
    res = res[:dm]
    while len(res) < dm:
        res.append(0)
    return tuple(res)


def _find_irreducible(p: int, d: int):
    """Smallest monic irreducible polynomial of degree d over F_p."""
    def divides(small, big):
        # trial division of monic big by monic small, both little-endian
        big = list(big)
        ds, db = len(small) - 1, len(big) - 1
        for i in range(db, ds - 1, -1):
            c = big[i]
            if c:
                for j in range(ds + 1):
                    big[i - ds + j] = (big[i - ds + j] - c * small[j]) % p
        return all(c == 0 for c in big)

    def monics(deg):
        for code in range(p ** deg):
            coeffs = []
            c = code
            for _ in range(deg):
                coeffs.append(c % p)
                c //= p
            yield tuple(coeffs) + (1,)

    for cand in monics(d):
        if cand[0] == 0:
            continue
        ok = True
        for deg in range(1, d // 2 + 1):
            for small in monics(deg):
                if divides(small, cand):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return cand
    raise RuntimeError(f"no irreducible polynomial of degree {d} over F_{p}")


class FieldDesc:
    """Arithmetic tables for GF(q), q = p^d, elements 0..q-1."""

    def __init__(self, p: int, d: int = 1):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if d < 1:
            raise ValueError("extension degree must be positive")
        q = p ** d
        if d > 1 and q > 256:
            raise ValueError("extension fields supported up to q <= 256")
        self.p = p
        self.d = d
        self.q = q
        if d == 1:
            self._inv = [0] * p
            for a in range(1, p):
                self._inv[a] = pow(a, p - 2, p)
            self.modulus = None
        else:
            self.modulus = _find_irreducible(p, d)
            self._build_tables()

    def _digits(self, a):
        out = []
        for _ in range(self.d):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def _undigits(self, digs):
        a = 0
        for c in reversed(digs):
            a = a * self.p + c
        return a

    def _build_tables(self):
        p, q, d = self.p, self.q, self.d
        add = [[0] * q for _ in range(q)]
        for a in range(q):
            da = self._digits(a)
            for b in range(q):
                db = self._digits(b)
                add[a][b] = self._undigits(tuple((x + y) % p for x, y in zip(da, db)))
        self._add = add
        self._negt = [self._undigits(tuple((-x) % p for x in self._digits(a))) for a in range(q)]
        # log/antilog over a primitive element
        mul_raw = {}

        def raw_mul(a, b):
            key = (a, b)
            if key not in mul_raw:
                mul_raw[key] = self._undigits(
                    _poly_mulmod(self._digits(a), self._digits(b), self.modulus, p))
            return mul_raw[key]

        gen = None
        for g in range(2, q):
            seen = set()
            x = 1
            for _ in range(q - 1):
                x = raw_mul(x, g)
                seen.add(x)
            if len(seen) == q - 1:
                gen = g
                break
        assert gen is not None
        exp = [0] * (q - 1)
        log = [0] * q
        x = 1
        for k in range(q - 1):
            exp[k] = x
            log[x] = k
            x = raw_mul(x, gen)
        self._exp, self._log = exp, log
        self.generator = gen

    # -- scalar operations ------------------------------------------------

    def add(self, a, b):
        if self.d == 1:
            return (a + b) % self.p
        return self._add[a][b]

    def sub(self, a, b):
        if self.d == 1:
            return (a - b) % self.p
        return self._add[a][self._negt[b]]

    def neg(self, a):
        if self.d == 1:
            return (-a) % self.p
        return self._negt[a]

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        if self.d == 1:
            return (a * b) % self.p
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        if self.d == 1:
            return self._inv[a]
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def power(self, a, n):
        r = 1
        for _ in range(n):
            r = self.mul(r, a)
        return r

    def elements(self):
        return range(self.q)

    def units(self):
        return range(1, self.q)

    # -- diagnostics -------------------------------------------------------

    def check_axioms(self):
        """Exhaustive field-axiom check; intended for q <= 16."""
        els = list(self.elements())
        for a in els:
            assert self.add(a, 0) == a and self.mul(a, 1) == a
            assert self.add(a, self.neg(a)) == 0
            if a != 0:
                assert self.mul(a, self.inv(a)) == 1
        for a in els:
            for b in els:
                assert self.add(a, b) == self.add(b, a)
                assert self.mul(a, b) == self.mul(b, a)
                for c in els:
                    assert self.add(self.add(a, b), c) == self.add(a, self.add(b, c))
                    assert self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))
                    assert self.mul(a, self.add(b, c)) == self.add(self.mul(a, b), self.mul(a, c))
        return True

    def __repr__(self):
        return f"GF({self.p}^{self.d})" if self.d > 1 else f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, FieldDesc) and (self.p, self.d) == (other.p, other.d)

    def __hash__(self):
        return hash((self.p, self.d))

    @property
    def key(self):
        return (self.p, self.d)


@lru_cache(maxsize=None)
def field_desc(p: int, d: int = 1) -> FieldDesc:
    return FieldDesc(p, d)


def parse_field(text: str) -> FieldDesc:
    """Parse '3', '2^4' or '4' (prime power) into a FieldDesc."""
    text = text.strip()
    if "^" in text:
        p, d = text.split("^")
        return field_desc(int(p), int(d))
    n = int(text)
    if is_prime(n):
        return field_desc(n)
    for p in range(2, n):
        if is_prime(p):
            d, m = 0, 1
            while m < n:
                m *= p
                d += 1
            if m == n:
                return field_desc(p, d)
    raise ValueError(f"{n} is not a prime power")
