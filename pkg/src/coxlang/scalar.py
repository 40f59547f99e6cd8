"""Exact arithmetic in the real cyclotomic field Q(2cos(pi/N)).

Every structure constant of a Coxeter geometric representation lies in the
field generated by theta = 2cos(pi/N), where N is a common multiple of the
finite Coxeter matrix orders.  Field elements are coefficient vectors over
the rationals, reduced modulo the minimal polynomial psi of theta, so
equality is coefficientwise and sign is decided by interval bisection.
Floating point is used once, to seed the isolating interval for theta, and
never in a decision.

Internally a field element is a plain tuple of ints/Fractions (a "raw"
vector); the Scalar class is a thin arithmetic wrapper around it.  Python
guarantees hash(Fraction(k)) == hash(k), so mixed int/Fraction vectors
compare and hash consistently.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import FieldMismatchError, InvariantViolation

# Coxeter matrix entry m_st = infinity.  A distinguished marker, never a
# large integer; the only arithmetic done with it is equality testing.
INF = math.inf

Raw = tuple  # coefficient vector of ints/Fractions, length = field degree


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n) if n % d == 0]


def _poly_div_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    # Long division by a monic integer polynomial; remainder must vanish.
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        out[i - dd] = c
        if c:
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    if any(num[:dd]):
        raise InvariantViolation("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def _cyclotomic(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, ascending."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n):
        poly = _poly_div_exact(poly, _cyclotomic(d))
    return tuple(poly)


def _pk_polys(top: int) -> list[tuple[int, ...]]:
    """Polynomials p_k with x^k + x^-k = p_k(x + 1/x), for k = 0..top.

    p_0 = 2, p_1 = y, p_{k+1} = y*p_k - p_{k-1}.
    """
    polys = [(2,), (0, 1)]
    while len(polys) <= top:
        prev, cur = polys[-2], polys[-1]
        nxt = [0] + list(cur)
        for i, c in enumerate(prev):
            nxt[i] -= c
        polys.append(tuple(nxt))
    return polys[: top + 1]


def _eval_int_poly(coeffs: tuple[int, ...], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _interval_eval(coeffs: Raw, lo: Fraction, hi: Fraction):
    # Horner with interval arithmetic; endpoints stay exact rationals.
    vlo = vhi = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        p1, p2, p3, p4 = vlo * lo, vlo * hi, vhi * lo, vhi * hi
        vlo = min(p1, p2, p3, p4) + c
        vhi = max(p1, p2, p3, p4) + c
    return vlo, vhi


class CycloField:
    """The field Q(theta) with theta = 2cos(pi/n); n == 1 encodes Q itself."""

    __slots__ = ("n", "degree", "psi", "theta", "zero", "one", "two",
                 "_pows", "_iso")

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("n must be a positive integer")
        self.n = n
        if n == 1:
            # theta = 2cos(pi) = -2 is rational; scalars are plain rationals.
            psi = (2, 1)
        else:
            phi = _cyclotomic(2 * n)
            d = (len(phi) - 1) // 2
            if phi != phi[::-1]:
                raise InvariantViolation("cyclotomic polynomial not palindromic")
            pk = _pk_polys(d)
            acc = [0] * (d + 1)
            acc[0] = phi[d]
            for k in range(1, d + 1):
                c = phi[d + k]
                if c:
                    for i, pc in enumerate(pk[k]):
                        acc[i] += c * pc
            psi = tuple(acc)
        if psi[-1] != 1:
            raise InvariantViolation("minimal polynomial is not monic")
        self.psi = psi
        d = len(psi) - 1
        self.degree = d

        # theta^k reduced mod psi, for k = 0 .. 2d-2 (what a product needs).
        pows: list[Raw] = []
        for k in range(d):
            pows.append(tuple(1 if i == k else 0 for i in range(d)))
        top = tuple(-c for c in psi[:d])  # theta^d
        cur = top
        pows.append(cur)
        while len(pows) < 2 * d - 1:
            shifted = [0] + list(cur[: d - 1])
            lead = cur[d - 1]
            if lead:
                for i in range(d):
                    shifted[i] += lead * top[i]
            cur = tuple(shifted)
            pows.append(cur)
        self._pows = tuple(pows)

        self.zero = (0,) * d
        self.one = tuple(1 if i == 0 else 0 for i in range(d))
        self.two = tuple(2 if i == 0 else 0 for i in range(d))
        self.theta = pows[1] if d >= 2 else (top[0],)

        # Isolating interval for theta as the largest real root of psi:
        # seeded from a float estimate, then certified by a sign change.
        if n == 1:
            lo, hi = Fraction(-3), Fraction(-1)
        else:
            est = Fraction(2 * math.cos(math.pi / n))
            lo, hi = est - Fraction(1, 2**20), Fraction(2)
        if not (_eval_int_poly(psi, lo) < 0 < _eval_int_poly(psi, hi)):
            raise InvariantViolation("isolating interval failed its sign check")
        self._iso = (lo, hi)

        # Sanity anchor: p_n(theta) = 2cos(pi) = -2, so p_n + 2 must vanish.
        pn = self.raw_pk(n)
        if self.raw_add(pn, self.two) != self.zero:
            raise InvariantViolation("p_n(theta) + 2 != 0")

    # ----- raw vector arithmetic -------------------------------------

    def raw_from_rational(self, q) -> Raw:
        if isinstance(q, Fraction) and q.denominator == 1:
            q = q.numerator
        return (q,) + (0,) * (self.degree - 1)

    def raw_add(self, a: Raw, b: Raw) -> Raw:
        return tuple(x + y for x, y in zip(a, b))

    def raw_sub(self, a: Raw, b: Raw) -> Raw:
        return tuple(x - y for x, y in zip(a, b))

    def raw_neg(self, a: Raw) -> Raw:
        return tuple(-x for x in a)

    def raw_smul(self, q, a: Raw) -> Raw:
        return tuple(q * x for x in a)

    def raw_mul(self, a: Raw, b: Raw) -> Raw:
        d = self.degree
        if d == 1:
            return (a[0] * b[0],)
        conv = [0] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        out = conv[:d]
        pows = self._pows
        for k in range(d, 2 * d - 1):
            ck = conv[k]
            if ck:
                row = pows[k]
                for i in range(d):
                    ri = row[i]
                    if ri:
                        out[i] += ck * ri
        return tuple(out)

    def raw_pk(self, k: int) -> Raw:
        """p_k(theta): the value 2cos(k*pi/n) when k <= n."""
        if k == 0:
            return self.two
        prev, cur = self.two, self.theta
        for _ in range(k - 1):
            prev, cur = cur, self.raw_sub(self.raw_mul(self.theta, cur), prev)
        return cur

    def raw_is_zero(self, a: Raw) -> bool:
        return not any(a)

    def raw_sign(self, a: Raw) -> int:
        if not any(a):
            return 0
        if self.degree == 1:
            c = a[0]
            return 1 if c > 0 else -1
        lo, hi = self._iso
        psi = self.psi
        while True:
            vlo, vhi = _interval_eval(a, lo, hi)
            if vlo > 0:
                return 1
            if vhi < 0:
                return -1
            mid = (lo + hi) / 2
            # psi(lo) < 0 < psi(hi) throughout; a positive value at mid
            # puts theta in the left half.  psi(mid) != 0 since psi is
            # irreducible of degree >= 2.
            if _eval_int_poly(psi, mid) > 0:
                hi = mid
            else:
                lo = mid

    def two_cos_raw(self, m) -> Raw:
        """2cos(pi/m) as a raw vector; m = INF gives 2."""
        if m == INF:
            return self.two
        m = int(m)
        if self.n == 1:
            known = {1: -2, 2: 0, 3: 1}
            if m not in known:
                raise FieldMismatchError(
                    f"2cos(pi/{m}) is irrational; the rational field cannot hold it")
            return self.raw_from_rational(known[m])
        if self.n % m != 0:
            raise FieldMismatchError(
                f"order {m} does not divide {self.n}; wrong field")
        return self.raw_pk(self.n // m)

    # ----- public wrappers --------------------------------------------

    def scalar(self, q) -> "Scalar":
        return Scalar(self, self.raw_from_rational(Fraction(q)))

    def from_coeffs(self, coeffs) -> "Scalar":
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != self.degree:
            raise FieldMismatchError(
                f"expected {self.degree} coefficients, got {len(coeffs)}")
        norm = tuple(c.numerator if c.denominator == 1 else c for c in coeffs)
        return Scalar(self, norm)

    def theta_scalar(self) -> "Scalar":
        return Scalar(self, self.theta)

    def __repr__(self) -> str:
        if self.n == 1:
            return "CycloField(Q)"
        return f"CycloField(Q(2cos(pi/{self.n})), degree {self.degree})"


_FIELDS: dict[int, CycloField] = {}


def _field(n: int) -> CycloField:
    if n not in _FIELDS:
        _FIELDS[n] = CycloField(n)
    return _FIELDS[n]


def field_for(orders) -> CycloField:
    """Smallest-N field of this package holding 2cos(pi/m) for every order.

    `orders` is an iterable of off-diagonal Coxeter matrix entries (ints
    >= 2 or INF).  Orders 2 and 3 have rational cosines, so if nothing
    larger appears the field is Q itself; otherwise N is the lcm of all
    finite orders.
    """
    finite = sorted({int(m) for m in orders if m != INF})
    if any(m < 2 for m in finite):
        raise ValueError("off-diagonal orders must be at least 2")
    if not finite or max(finite) <= 3:
        return _field(1)
    return _field(math.lcm(*finite))


def two_cos(field: CycloField, m) -> "Scalar":
    """The scalar 2cos(pi/m) in `field`; m = INF gives 2."""
    return Scalar(field, field.two_cos_raw(m))


class Scalar:
    """An element of a CycloField: exact, hashable, reduced mod psi."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: CycloField, coeffs: Raw):
        self.field = field
        self.coeffs = coeffs

    def _coerce(self, other) -> Raw:
        if isinstance(other, Scalar):
            if other.field is not self.field:
                raise FieldMismatchError("scalars from different fields")
            return other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.field.raw_from_rational(other)
        return NotImplemented

    def __add__(self, other):
        raw = self._coerce(other)
        if raw is NotImplemented:
            return NotImplemented
        return Scalar(self.field, self.field.raw_add(self.coeffs, raw))

    __radd__ = __add__

    def __sub__(self, other):
        raw = self._coerce(other)
        if raw is NotImplemented:
            return NotImplemented
        return Scalar(self.field, self.field.raw_sub(self.coeffs, raw))

    def __rsub__(self, other):
        raw = self._coerce(other)
        if raw is NotImplemented:
            return NotImplemented
        return Scalar(self.field, self.field.raw_sub(raw, self.coeffs))

    def __mul__(self, other):
        raw = self._coerce(other)
        if raw is NotImplemented:
            return NotImplemented
        return Scalar(self.field, self.field.raw_mul(self.coeffs, raw))

    __rmul__ = __mul__

    def __neg__(self):
        return Scalar(self.field, self.field.raw_neg(self.coeffs))

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field is other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == self.field.raw_from_rational(other)
        return NotImplemented

    def __hash__(self):
        return hash((id(self.field), self.coeffs))

    def is_zero(self) -> bool:
        return self.field.raw_is_zero(self.coeffs)

    def sign(self) -> int:
        return self.field.raw_sign(self.coeffs)

    def __repr__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                if k == 0:
                    terms.append(f"{c}")
                elif k == 1:
                    terms.append(f"{c}*t")
                else:
                    terms.append(f"{c}*t^{k}")
        body = " + ".join(terms) if terms else "0"
        return f"Scalar({body}; t = 2cos(pi/{self.field.n}))"
