"""Exact arithmetic in cyclotomic fields Q(zeta_N).

A Scalar is the unique reduced representative of an element of Q(zeta_N)
modulo the N-th cyclotomic polynomial: a conductor N plus a tuple of
euler_phi(N) rationals, lowest degree first.  Arithmetic between different
conductors lifts both operands to the least common conductor via
zeta_N = zeta_L^(L/N); no conductor descent is attempted, so the same value
may legitimately live at several conductors and equality compares after
lifting.  For that reason Scalars are deliberately unhashable.

No floating point appears anywhere: every rank and kernel decision upstream
depends on exact zero tests.
"""

from __future__ import annotations

import re
import threading
from math import gcd
from typing import NamedTuple

from ._kernel import active as _K
from ._rat import RAT, R_ONE, R_ZERO, rat_from_string, rat_to_string

__all__ = [
    "Scalar",
    "make_scalar",
    "root_of_unity",
    "from_rational",
    "euler_phi",
    "cyclotomic_polynomial",
    "parse_scalar",
    "scalar_to_json",
    "ZERO",
    "ONE",
]


def euler_phi(n: int) -> int:
    assert n >= 1
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _poly_exact_div(num: list, den: list) -> list:
    # Exact division of rational polynomials, lowest degree first, den monic-led.
    num = list(num)
    dd = len(den) - 1
    lead = den[dd]
    quot = [R_ZERO] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            q = c / lead
            quot[i - dd] = q
            for k in range(dd + 1):
                num[i - dd + k] -= q * den[k]
    assert all(not c for c in num), "division was not exact"
    return quot


# RLock: the recursion below re-enters while holding the lock.
_cyclo_cache: dict[int, tuple] = {}
_cyclo_lock = threading.RLock()


def cyclotomic_polynomial(n: int) -> tuple:
    """Coefficients of Phi_n over Q, lowest degree first, monic."""
    cached = _cyclo_cache.get(n)
    if cached is not None:
        return cached
    with _cyclo_lock:
        cached = _cyclo_cache.get(n)
        if cached is not None:
            return cached
        # x^n - 1 = prod_{d | n} Phi_d
        poly = [R_ZERO] * (n + 1)
        poly[0] = -R_ONE
        poly[n] = R_ONE
        for d in _divisors(n):
            if d != n:
                poly = _poly_exact_div(poly, list(cyclotomic_polynomial(d)))
        result = tuple(poly)
        _cyclo_cache[n] = result
        return result


class FieldContext(NamedTuple):
    conductor: int
    phi: int
    modpoly: tuple
    red: tuple  # residues of x^phi .. x^(2*phi-2) modulo modpoly


_ctx_cache: dict[int, FieldContext] = {}
_ctx_lock = threading.Lock()


def _reduce_list(coeffs: list, modpoly: tuple, phi: int) -> tuple:
    work = list(coeffs)
    for i in range(len(work) - 1, phi - 1, -1):
        c = work[i]
        if c:
            work[i] = R_ZERO
            for k in range(phi):
                mk = modpoly[k]
                if mk:
                    work[i - phi + k] -= c * mk
    while len(work) < phi:
        work.append(R_ZERO)
    return tuple(work[:phi])


def field_context(n: int) -> FieldContext:
    ctx = _ctx_cache.get(n)
    if ctx is not None:
        return ctx
    with _ctx_lock:
        ctx = _ctx_cache.get(n)
        if ctx is not None:
            return ctx
        modpoly = cyclotomic_polynomial(n)
        phi = len(modpoly) - 1
        red = []
        for e in range(phi, 2 * phi - 1):
            mono = [R_ZERO] * (e + 1)
            mono[e] = R_ONE
            red.append(_reduce_list(mono, modpoly, phi))
        ctx = FieldContext(n, phi, modpoly, tuple(red))
        _ctx_cache[n] = ctx
        return ctx


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


class Scalar:
    """Element of Q(zeta_N) in canonical reduced form.

    Immutable.  Unhashable on purpose: equal values can carry different
    conductors, which would break hash consistency.
    """

    __slots__ = ("conductor", "coeffs")
    __hash__ = None  # type: ignore[assignment]

    def __init__(self, conductor: int, coeffs: tuple):
        # Expects already-reduced data; use make_scalar for raw input.
        self.conductor = conductor
        self.coeffs = coeffs

    # -- lifting ----------------------------------------------------------

    def _lift_to(self, target: int) -> tuple:
        if target == self.conductor:
            return self.coeffs
        step = target // self.conductor
        ctx = field_context(target)
        raw = [R_ZERO] * ((len(self.coeffs) - 1) * step + 1)
        for k, c in enumerate(self.coeffs):
            if c:
                raw[k * step] = c
        return _reduce_list(raw, ctx.modpoly, ctx.phi)

    @staticmethod
    def _align(a: "Scalar", b: "Scalar"):
        if a.conductor == b.conductor:
            return field_context(a.conductor), a.coeffs, b.coeffs
        target = _lcm(a.conductor, b.conductor)
        return field_context(target), a._lift_to(target), b._lift_to(target)

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, Scalar):
            return other
        if isinstance(other, int):
            return Scalar(1, (RAT(other),))
        if isinstance(other, type(R_ONE)):
            return Scalar(1, (other,))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        ctx, a, b = self._align(self, other)
        return Scalar(ctx.conductor, _K.poly_add(a, b))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        ctx, a, b = self._align(self, other)
        return Scalar(ctx.conductor, _K.poly_sub(a, b))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return Scalar(self.conductor, _K.poly_neg(self.coeffs))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        ctx, a, b = self._align(self, other)
        return Scalar(ctx.conductor, _K.poly_mul(a, b, ctx.red))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        ctx = field_context(self.conductor)
        return Scalar(self.conductor, _K.poly_inv(self.coeffs, ctx.modpoly))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self
        if exponent < 0:
            base = self.inverse()
            exponent = -exponent
        result = ONE
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return _K.poly_is_zero(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_one(self) -> bool:
        return self == ONE

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.conductor == other.conductor:
            return self.coeffs == other.coeffs
        _, a, b = self._align(self, other)
        return a == b

    def multiplicative_order(self):
        """Order as a root of unity, or None if self is not one.

        Any root of unity inside Q(zeta_N) has order dividing 2N, which
        bounds the search.
        """
        if self.is_zero():
            return None
        bound = 2 * self.conductor
        power = self
        for k in range(1, bound + 1):
            if power.is_one():
                return k
            power = power * self
        return None

    # -- rendering --------------------------------------------------------

    def __str__(self) -> str:
        if all(not c for c in self.coeffs[1:]):
            return rat_to_string(self.coeffs[0])
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else (f"zeta({self.conductor})" if k == 1 else f"zeta({self.conductor})^{k}")
            cs = rat_to_string(c)
            if mono:
                if cs == "1":
                    cs = ""
                elif cs == "-1":
                    cs = "-"
                else:
                    cs += "*"
            term = cs + mono
            if parts and not term.startswith("-"):
                parts.append("+" + term)
            else:
                parts.append(term)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Scalar[{self}]"


ZERO = Scalar(1, (R_ZERO,))
ONE = Scalar(1, (R_ONE,))


def make_scalar(conductor: int, raw_coeffs) -> Scalar:
    """Canonical representative of sum_k raw_coeffs[k] * zeta_N^k.

    raw_coeffs may be any length (reduced modulo Phi_N) and entries may be
    rationals, ints, or "p/q" strings.
    """
    if conductor < 1:
        raise ValueError(f"conductor must be >= 1, got {conductor}")
    ctx = field_context(conductor)
    coeffs = []
    for c in raw_coeffs:
        if isinstance(c, str):
            coeffs.append(rat_from_string(c))
        elif isinstance(c, int):
            coeffs.append(RAT(c))
        else:
            coeffs.append(RAT(c))
    return Scalar(conductor, _reduce_list(coeffs, ctx.modpoly, ctx.phi))


def root_of_unity(conductor: int, k: int = 1) -> Scalar:
    """zeta_N^k; its multiplicative order is N / gcd(N, k)."""
    if conductor < 1:
        raise ValueError(f"conductor must be >= 1, got {conductor}")
    k %= conductor
    raw = [R_ZERO] * (k + 1)
    raw[k] = R_ONE
    return make_scalar(conductor, raw)


def from_rational(value) -> Scalar:
    if isinstance(value, str):
        value = rat_from_string(value)
    else:
        value = RAT(value)
    return Scalar(1, (value,))


_ZETA_RE = re.compile(r"^(-?)zeta\((\d+)\)(?:\^(-?\d+))?$")


def parse_scalar(obj) -> Scalar:
    """Accepts the JSON object form, "zeta(N)^k", "p/q" strings, and ints."""
    if isinstance(obj, Scalar):
        return obj
    if isinstance(obj, dict):
        conductor = obj["conductor"]
        return make_scalar(conductor, obj["coeffs"])
    if isinstance(obj, int):
        return from_rational(obj)
    if isinstance(obj, str):
        text = obj.strip()
        m = _ZETA_RE.match(text)
        if m:
            sign, conductor, exp = m.group(1), int(m.group(2)), m.group(3)
            value = root_of_unity(conductor, 1) ** (int(exp) if exp else 1)
            return -value if sign == "-" else value
        return from_rational(text)
    raise ValueError(f"cannot parse scalar from {obj!r}")


def scalar_to_json(s: Scalar) -> dict:
    return {
        "conductor": s.conductor,
        "coeffs": [rat_to_string(c) for c in s.coeffs],
    }
