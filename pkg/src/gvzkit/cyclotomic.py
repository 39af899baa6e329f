"""Exact arithmetic in rings of cyclotomic integers Z[zeta_e].

A value is stored canonically as an integer coordinate vector in the power
basis {zeta_e^k : 0 <= k < phi(e)}, i.e. as the residue of a polynomial in
zeta_e modulo the e-th cyclotomic polynomial.  Canonical reduction makes
equality, the zero test, and rationality recognition exact; downstream
character-theoretic predicates (vanishing supports, character centers)
rely on those tests being decidable.

All coefficients are arbitrary-precision Python integers; nothing here can
silently overflow.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

MAX_CYCLOTOMIC_ORDER = 2000


def _divisors(e: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= e:
        if e % d == 0:
            small.append(d)
            if d != e // d:
                large.append(e // d)
        d += 1
    return small + large[::-1]


def euler_phi(e: int) -> int:
    """Euler's totient; the degree of the e-th cyclotomic polynomial."""
    result = e
    n = e
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def _poly_divmod_exact(num: list[int], den: list[int]) -> list[int]:
    """Quotient of an exact division of integer polynomials (monic divisor)."""
    num = list(num)
    deg_n, deg_d = len(num) - 1, len(den) - 1
    assert den[-1] == 1, "divisor must be monic"
    quot = [0] * (deg_n - deg_d + 1)
    for i in range(deg_n - deg_d, -1, -1):
        c = num[i + deg_d]
        quot[i] = c
        if c:
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    assert all(c == 0 for c in num), "division was not exact"
    return quot


@dataclass(frozen=True)
class CycPoly:
    """The e-th cyclotomic polynomial, coefficients in ascending order."""

    e: int
    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


@lru_cache(maxsize=None)
def cyclotomic_polynomial(e: int) -> CycPoly:
    """Compute the e-th cyclotomic polynomial by iterated exact division.

    Divides x^e - 1 by the cyclotomic polynomials of all proper divisors
    of e; no floating point, no factorization oracles.
    """
    if not 1 <= e <= MAX_CYCLOTOMIC_ORDER:
        raise ValueError(f"cyclotomic order must be in [1, {MAX_CYCLOTOMIC_ORDER}], got {e}")
    if e == 1:
        return CycPoly(1, (-1, 1))
    num = [0] * (e + 1)
    num[0], num[e] = -1, 1
    for d in _divisors(e)[:-1]:
        num = _poly_divmod_exact(num, list(cyclotomic_polynomial(d).coeffs))
    poly = CycPoly(e, tuple(num))
    assert poly.degree == euler_phi(e)
    return poly


@lru_cache(maxsize=None)
def _reduction_rows(e: int) -> tuple[tuple[int, ...], ...]:
    """Canonical coordinates of zeta_e^m for phi(e) <= m <= max(e-1, 2*phi(e)-2).

    Row m - phi(e) expresses zeta^m in the power basis.  Covers every
    overflow power that can appear in a product of two canonical values or
    in an e-term multiplicity vector.
    """
    phi = euler_phi(e)
    cp = cyclotomic_polynomial(e).coeffs
    top = max(e - 1, 2 * phi - 2)
    rows: list[tuple[int, ...]] = []
    # zeta^phi = -(c_0 + c_1 zeta + ... + c_{phi-1} zeta^{phi-1})
    cur = [-c for c in cp[:phi]]
    rows.append(tuple(cur))
    for _ in range(phi + 1, top + 1):
        shifted = [0] + cur[:-1]
        overflow = cur[-1]
        if overflow:
            first = rows[0]
            shifted = [s + overflow * f for s, f in zip(shifted, first)]
        cur = shifted
        rows.append(tuple(cur))
    return tuple(rows)


def _reduce(e: int, poly: list[int]) -> tuple[int, ...]:
    """Reduce an integer polynomial in zeta_e to canonical coordinates."""
    phi = euler_phi(e)
    out = list(poly[:phi]) + [0] * max(0, phi - len(poly))
    if len(poly) > phi:
        rows = _reduction_rows(e)
        for m in range(phi, len(poly)):
            c = poly[m]
            if c:
                row = rows[m - phi]
                for j in range(phi):
                    out[j] += c * row[j]
    return tuple(out)


@dataclass(frozen=True)
class CycInt:
    """An exact cyclotomic integer: canonical residue mod the e-th cyclotomic polynomial."""

    e: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != euler_phi(self.e):
            raise ValueError(
                f"coefficient vector has length {len(self.coeffs)}, expected phi({self.e}) = {euler_phi(self.e)}"
            )

    # -- ring operations ------------------------------------------------

    def _coerce(self, other) -> "CycInt":
        if isinstance(other, CycInt):
            if other.e != self.e:
                raise ValueError(f"mixed cyclotomic orders {self.e} and {other.e}")
            return other
        if isinstance(other, int):
            return integer(self.e, other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return CycInt(self.e, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return CycInt(self.e, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __neg__(self):
        return CycInt(self.e, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        conv = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        return CycInt(self.e, _reduce(self.e, conv))

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return any(self.coeffs)

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_complex(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.e)
        return sum(c * z**k for k, c in enumerate(self.coeffs) if c)

    def approx_str(self) -> str:
        v = self.to_complex()
        return f"{v.real:.4f}{v.imag:+.4f}i"

    def __str__(self) -> str:
        r = recognize(self)
        if r is not None:
            return str(r)
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            base = "1" if k == 0 else (f"z{self.e}" if k == 1 else f"z{self.e}^{k}")
            if k == 0:
                parts.append(f"{c:+d}")
            elif c == 1:
                parts.append(f"+{base}")
            elif c == -1:
                parts.append(f"-{base}")
            else:
                parts.append(f"{c:+d}*{base}")
        s = "".join(parts)
        return s[1:] if s.startswith("+") else s


def zero(e: int) -> CycInt:
    return CycInt(e, (0,) * euler_phi(e))


def one(e: int) -> CycInt:
    return integer(e, 1)


def integer(e: int, value: int) -> CycInt:
    c = [0] * euler_phi(e)
    c[0] = value
    return CycInt(e, tuple(c))


def zeta(e: int, k: int = 1) -> CycInt:
    """zeta_e^k as an exact value."""
    poly = [0] * (k % e + 1)
    poly[k % e] = 1
    return CycInt(e, _reduce(e, poly))


def from_multiplicities(e: int, multiplicities) -> CycInt:
    """Canonical reduction of sum_k m_k zeta_e^k for a length-e vector m >= 0."""
    m = list(multiplicities)
    if len(m) != e:
        raise ValueError(f"multiplicity vector has length {len(m)}, expected {e}")
    if any(v < 0 for v in m):
        raise ValueError("multiplicities must be nonnegative")
    return CycInt(e, _reduce(e, m))


def embed(a: CycInt, target_order: int) -> CycInt:
    """Reinterpret a in Z[zeta_E] for e | E, via zeta_e = zeta_E^(E/e)."""
    if target_order == a.e:
        return a
    if target_order % a.e != 0:
        raise ValueError(f"{a.e} does not divide target order {target_order}")
    step = target_order // a.e
    poly = [0] * ((len(a.coeffs) - 1) * step + 1) if any(a.coeffs) else [0]
    for k, c in enumerate(a.coeffs):
        if c:
            poly[k * step] += c
    return CycInt(target_order, _reduce(target_order, poly))


def conjugate(a: CycInt) -> CycInt:
    """Complex conjugation, the image under zeta_e -> zeta_e^(e-1)."""
    e = a.e
    poly = [0] * e
    for k, c in enumerate(a.coeffs):
        poly[(e - k) % e] += c
    return CycInt(e, _reduce(e, poly))


def abs_square(a: CycInt) -> CycInt:
    """a * conjugate(a); always fixed by conjugation."""
    return a * conjugate(a)


def recognize(a: CycInt) -> int | None:
    """Exact recognition: the integer value if a is a rational integer, else None.

    Zero is recognized as the integer 0, so ``recognize(a) == 0`` is the
    exact zero test.
    """
    if any(a.coeffs[1:]):
        return None
    return a.coeffs[0]


def serialize(a: CycInt) -> dict:
    """JSON form: exact coordinates plus a decimal hint for human readers."""
    return {"e": a.e, "coeffs": list(a.coeffs), "approx": a.approx_str()}


def order_lcm(*orders: int) -> int:
    out = 1
    for o in orders:
        out = out * o // gcd(out, o)
    return out
