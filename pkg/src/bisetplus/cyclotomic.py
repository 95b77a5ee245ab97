"""Exact arithmetic in ``ℚ(ζ_n)`` as rational polynomials modulo ``Φ_n``."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

CONDUCTOR_CAP = 24


def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def poly_divmod(a, b):
    """Quotient and remainder of ``a / b`` over ``ℚ``."""
    a = [Fraction(x) for x in a]
    b = _trim([Fraction(x) for x in b])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(_trim(a)) >= len(b):
        shift = len(a) - len(b)
        f = a[-1] / lead
        q[shift] = f
        for i, y in enumerate(b):
            a[shift + i] -= f * y
        _trim(a)
    return _trim(q), a


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple:
    """``Φ_n`` by dividing ``xⁿ - 1`` by ``Φ_d`` for every proper divisor ``d``."""
    num = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            num, r = poly_divmod(num, list(cyclotomic_poly(d)))
            assert not r
    return tuple(num)


def _reduce(p, n):
    _, r = poly_divmod(p, list(cyclotomic_poly(n)))
    return tuple(r)


def _poly_xgcd(a, b):
    """``(g, s, t)`` with ``s a + t b = g``."""
    r0, r1 = _trim(list(a)), _trim(list(b))
    s0, s1, t0, t1 = [Fraction(1)], [], [], [Fraction(1)]
    while r1:
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, poly_mul(q, s1))
        t0, t1 = t1, _poly_sub(t0, poly_mul(q, t1))
    return r0, s0, t0


def _poly_sub(a, b):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _trim([Fraction(x) for x in out])


class Cyclotomic:
    """An element of ``ℚ(ζ_n)``; ``coeffs[k]`` multiplies ``ζ_n^k``."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs=()):
        if not 1 <= n <= CONDUCTOR_CAP:
            raise ValueError(f"conductor must be in 1..{CONDUCTOR_CAP}")
        self.n = n
        self.coeffs = _reduce([Fraction(c) for c in coeffs], n)

    @classmethod
    def from_int(cls, n, v):
        return cls(n, [v])

    @classmethod
    def root_of_unity(cls, k: int, n: int) -> "Cyclotomic":
        k %= n
        return cls(n, [0] * k + [1])

    def _lift(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.n, [other])
        if other.n != self.n:
            m = self.n * other.n // _gcd(self.n, other.n)
            raise ValueError(f"conductors differ ({self.n}, {other.n}); embed both into {m}")
        return other

    def __add__(self, other):
        o = self._lift(other)
        n = max(len(self.coeffs), len(o.coeffs))
        a, b = self.coeffs, o.coeffs
        return Cyclotomic(self.n, [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                                   for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.n, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        return Cyclotomic(self.n, poly_mul(list(self.coeffs), list(o.coeffs)))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if not self.coeffs:
            raise ZeroDivisionError("inverse of zero")
        g, s, _ = _poly_xgcd(list(self.coeffs), list(cyclotomic_poly(self.n)))
        # g is a nonzero constant since Φ_n is irreducible
        return Cyclotomic(self.n, [c / g[0] for c in s])

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic(self.n, [other])
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        if other.n != self.n:
            m = self.n * other.n // _gcd(self.n, other.n)
            return self.embed(m).coeffs == other.embed(m).coeffs
        return self.coeffs == other.coeffs

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else 0)
        return hash((self.n, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def embed(self, m: int) -> "Cyclotomic":
        """Image in ``ℚ(ζ_m)`` for ``n | m`` via ``ζ_n ↦ ζ_m^{m/n}``."""
        if m % self.n:
            raise ValueError("embedding needs n | m")
        s = m // self.n
        out = [Fraction(0)] * (s * len(self.coeffs))
        for k, c in enumerate(self.coeffs):
            out[s * k] = c
        return Cyclotomic(m, out)

    def is_rational(self) -> bool:
        return len(self.coeffs) <= 1

    def __repr__(self):
        return f"Cyclotomic({self.n}, {self.text()})"

    def text(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        s = " + ".join(parts)
        return s.replace("+ -", "- ")


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def root_of_unity(k: int, n: int) -> Cyclotomic:
    return Cyclotomic.root_of_unity(k, n)


def determinant(rows):
    """Determinant by Gaussian elimination over the field of the entries."""
    m = [list(r) for r in rows]
    size = len(m)
    det = Fraction(1)
    for col in range(size):
        piv = next((r for r in range(col, size) if m[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        p = m[col][col]
        det = p * det
        inv = p.inverse() if isinstance(p, Cyclotomic) else Fraction(1) / p
        for r in range(col + 1, size):
            f = m[r][col]
            if f:
                f = f * inv
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return det


def rank(rows) -> int:
    """Rank by Gaussian elimination over ``ℚ`` or ``ℚ(ζ_n)``."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][col]
        inv = p.inverse() if isinstance(p, Cyclotomic) else Fraction(1) / p
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


__all__ = ["Cyclotomic", "cyclotomic_poly", "root_of_unity", "rank", "determinant",
           "CONDUCTOR_CAP"]
