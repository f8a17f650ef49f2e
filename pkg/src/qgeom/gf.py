"""Exact arithmetic in finite fields GF(q), q = p^f.

A field element is a plain int in [0, q) whose base-p digits are the
coefficients of a polynomial over GF(p), reduced modulo a monic
irreducible polynomial of degree f.  Multiplication and inversion go
through exp/log tables, so construction is limited to q <= 2**16.

The modulus is the lexicographically smallest monic irreducible
polynomial of degree f (smallest integer encoding of the non-leading
coefficients), which makes every field deterministic across runs.
"""

from __future__ import annotations

Q_MAX = 1 << 16

_FIELD_CACHE: dict[tuple[int, int], "Field"] = {}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomial helpers over GF(p) ------------------------------------------
# Polynomials are little-endian coefficient lists: c[i] is the x^i term.

def _poly_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_rem(a, b, p):
    """Remainder of a mod b over GF(p); b must be monic."""
    a = list(a)
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        coef = a[-1]
        shift = len(a) - 1 - db
        for i in range(db + 1):
            a[shift + i] = (a[shift + i] - coef * b[i]) % p
        _poly_trim(a)
    return a


def _is_irreducible(c, p):
    """Trial division by every monic polynomial of degree <= deg(c)/2."""
    deg = len(c) - 1
    for d in range(1, deg // 2 + 1):
        for enc in range(p ** d):
            g = _digits(enc, p, d) + [1]
            if not _poly_rem(c, g, p):
                return False
    return True


def _digits(value, p, length):
    out = []
    for _ in range(length):
        value, r = divmod(value, p)
        out.append(r)
    return out


def _undigits(digits, p):
    value = 0
    for d in reversed(digits):
        value = value * p + d
    return value


class Field:
    """GF(p^f) with int-encoded elements and table-based arithmetic.

    Immutable after construction; all operations are pure, so a Field
    may be shared freely between threads.
    """

    def __init__(self, p: int, f: int):
        if not is_prime(p):
            raise ValueError(f"p={p} is not prime")
        if f < 1:
            raise ValueError(f"extension degree f={f} must be >= 1")
        q = p ** f
        if q > Q_MAX:
            raise ValueError(f"q={q} exceeds supported bound {Q_MAX}")
        self.p = p
        self.f = f
        self.q = q
        self.modulus = self._smallest_irreducible()
        self._build_tables()

    def _smallest_irreducible(self):
        p, f = self.p, self.f
        for enc in range(p ** f):
            cand = _digits(enc, p, f) + [1]
            if _is_irreducible(cand, p):
                return tuple(cand)
        raise AssertionError("no irreducible polynomial found")  # unreachable

    def _raw_mul(self, a: int, b: int) -> int:
        # Schoolbook product of the digit polynomials, reduced mod modulus.
        p, f = self.p, self.f
        da = _digits(a, p, f)
        db = _digits(b, p, f)
        prod = [0] * (2 * f - 1)
        for i, ai in enumerate(da):
            if ai:
                for j, bj in enumerate(db):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        rem = _poly_rem(prod, list(self.modulus), p)
        rem += [0] * (f - len(rem))
        return _undigits(rem, p)

    def _build_tables(self):
        q = self.q
        if q == 2:
            self._exp, self._log = [1], [0, 0]
            return
        radicals = [(q - 1) // r for r in _prime_factors(q - 1)]
        for g in range(2, q):
            if all(self._raw_pow(g, m) != 1 for m in radicals):
                break
        else:
            raise AssertionError("no generator found")  # unreachable
        exp = [0] * (q - 1)
        log = [0] * q
        acc = 1
        for i in range(q - 1):
            exp[i] = acc
            log[acc] = i
            acc = self._raw_mul(acc, g)
        self._exp, self._log = exp, log

    def _raw_pow(self, a, n):
        out = 1
        while n:
            if n & 1:
                out = self._raw_mul(out, a)
            a = self._raw_mul(a, a)
            n >>= 1
        return out

    def check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not an element of GF({self.q})")
        return a

    def add(self, a: int, b: int) -> int:
        self.check(a), self.check(b)
        if self.p == 2:
            return a ^ b
        if self.f == 1:
            return (a + b) % self.p
        p, f = self.p, self.f
        da, db = _digits(a, p, f), _digits(b, p, f)
        return _undigits([(x + y) % p for x, y in zip(da, db)], p)

    def neg(self, a: int) -> int:
        self.check(a)
        if self.p == 2:
            return a
        if self.f == 1:
            return (-a) % self.p
        p = self.p
        return _undigits([(-x) % p for x in _digits(a, p, self.f)], p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        self.check(a), self.check(b)
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        self.check(a)
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        self.check(a)
        if a == 0:
            if n < 0:
                raise ZeroDivisionError("0 has no multiplicative inverse")
            return 0 if n else 1
        return self._exp[(self._log[a] * n) % (self.q - 1)]

    def frobenius(self, a: int, i: int = 1) -> int:
        """a^(p^i); the i-th power of the Frobenius automorphism."""
        if i < 0:
            raise ValueError("Frobenius power must be >= 0")
        return self.pow(a, self.p ** i)

    def elements(self):
        return range(self.q)

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and (self.p, self.f, self.modulus) == (other.p, other.f, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.f, self.modulus))

    def __repr__(self):
        return f"GF({self.q})" if self.f == 1 else f"GF({self.p}^{self.f})"

    def to_json(self) -> dict:
        return {"p": self.p, "f": self.f, "modulus": list(self.modulus)}


def field_new(p: int, f: int = 1) -> Field:
    """The field GF(p^f).  Instances are cached, so fields compare by identity."""
    key = (p, f)
    if key not in _FIELD_CACHE:
        _FIELD_CACHE[key] = Field(p, f)
    return _FIELD_CACHE[key]


def field_from_order(q: int) -> Field:
    """The field of order q, for q any prime power."""
    if q < 2:
        raise ValueError(f"q={q} is not a prime power")
    p = 2
    while q % p:
        p += 1
        if p * p > q:
            p = q
            break
    f = 0
    m = q
    while m > 1:
        if m % p:
            raise ValueError(f"q={q} is not a prime power")
        m //= p
        f += 1
    return field_new(p, f)
