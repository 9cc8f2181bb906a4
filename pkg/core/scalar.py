"""
Exact scalars for the geometric representation of Coxeter groups.

Entries -cos(pi/m) of the bilinear form live in the real subfield of the
cyclotomic field Q(zeta) with zeta = exp(i*pi/L). Scalars are stored as
polynomials in zeta reduced modulo the 2L-th cyclotomic polynomial (sympy
``ANP``), or as plain sympy rationals when L = 1. Signs are certified with
mpmath interval arithmetic at increasing precision.
"""

from enum import IntEnum
from fractions import Fraction
from functools import lru_cache
import logging
import math
import threading
from typing import Tuple, Union

import numpy as np
from mpmath.ctx_iv import MPIntervalContext
from sympy import QQ
from sympy.polys.polyclasses import ANP
from sympy.polys.specialpolys import cyclotomic_poly

from utils.config_manager import get_config
from utils.error_handler import (
    ConfigurationError,
    ContractError,
    InternalError,
    ScalarArithmeticError,
    SystemMismatchError,
)

logger = logging.getLogger(__name__)

INF = math.inf

Rational = Union[int, Fraction]


class Sign(IntEnum):
    """Sign of a real scalar."""

    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1


class CyclotomicField:
    """
    The field Q(zeta), zeta = exp(i*pi/L), with exact arithmetic.

    Use ``get_field(L)`` to obtain the shared instance for a given L.
    """

    def __init__(self, L: int):
        """
        Initialize the field.

        Args:
            L: Half the order of zeta (L = 1 gives the rationals)
        """
        if not isinstance(L, int) or L < 1:
            raise ConfigurationError(f"Cyclotomic parameter L must be a positive integer, got {L!r}")
        self.L = L

        if L == 1:
            self.modulus = None
            self.degree = 1
        else:
            coeffs = cyclotomic_poly(2 * L, polys=True).all_coeffs()
            self.modulus = [QQ(int(c)) for c in coeffs]
            self.degree = len(self.modulus) - 1

        self.zero = self.from_rational(0)
        self.one = self.from_rational(1)

    def __repr__(self) -> str:
        return f"CyclotomicField(L={self.L})"

    def __eq__(self, other) -> bool:
        return isinstance(other, CyclotomicField) and other.L == self.L

    def __hash__(self) -> int:
        return hash(("CyclotomicField", self.L))

    @property
    def is_rational(self) -> bool:
        """Whether this is the L = 1 fast path."""
        return self.L == 1

    def from_rational(self, value: Rational) -> "Scalar":
        """Embed a rational number."""
        if isinstance(value, Fraction):
            q = QQ(value.numerator, value.denominator)
        else:
            q = QQ(int(value))
        if self.modulus is None:
            return Scalar(self, q)
        return Scalar(self, ANP([q], self.modulus, QQ))

    def zeta_power(self, k: int) -> "Scalar":
        """Return zeta**k (k may be negative)."""
        if self.modulus is None:
            if k % 2:
                raise ConfigurationError("zeta = -1 odd powers are not used on the rational fast path")
            return self.one
        zeta = ANP([QQ(1), QQ(0)], self.modulus, QQ)
        return Scalar(self, zeta.pow(k % (2 * self.L)))

    def coerce(self, value) -> "Scalar":
        """Convert an int, Fraction or Scalar of this field into a Scalar."""
        if isinstance(value, Scalar):
            if value.field.L != self.L:
                raise SystemMismatchError(
                    f"Scalars of fields L={value.field.L} and L={self.L} cannot be combined"
                )
            return value
        if isinstance(value, (int, Fraction)):
            return self.from_rational(value)
        raise TypeError(f"Cannot convert {type(value).__name__} to a scalar")


@lru_cache(maxsize=None)
def get_field(L: int) -> CyclotomicField:
    """Return the shared field instance for parameter L."""
    return CyclotomicField(L)


class Scalar:
    """An immutable element of a cyclotomic field."""

    __slots__ = ("field", "raw", "_key")

    def __init__(self, field: CyclotomicField, raw):
        self.field = field
        self.raw = raw
        self._key = None

    # -- representation -------------------------------------------------

    @property
    def key(self):
        """Hashable canonical representation."""
        if self._key is None:
            self._key = self.raw if self.field.modulus is None else self.raw.to_tuple()
        return self._key

    @property
    def coefficients(self) -> Tuple[Fraction, ...]:
        """Coefficients of 1, zeta, zeta**2, ... padded to the field degree."""
        if self.field.modulus is None:
            return (_to_fraction(self.raw),)
        rep = list(reversed(self.raw.to_list()))
        rep += [QQ(0)] * (self.field.degree - len(rep))
        return tuple(_to_fraction(c) for c in rep)

    @property
    def is_zero(self) -> bool:
        if self.field.modulus is None:
            return self.raw == 0
        return self.raw.is_zero

    def __bool__(self) -> bool:
        return not self.is_zero

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.field.from_rational(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.field.L == other.field.L and self.key == other.key

    def __hash__(self) -> int:
        return hash((self.field.L, self.key))

    def __repr__(self) -> str:
        return f"Scalar({self})"

    def __str__(self) -> str:
        coeffs = self.coefficients
        terms = []
        for k, c in enumerate(coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append(f"{c}*z")
            else:
                terms.append(f"{c}*z^{k}")
        return " + ".join(terms) if terms else "0"

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other) -> "Scalar":
        try:
            other = self.field.coerce(other)
        except TypeError:
            return NotImplemented
        return Scalar(self.field, self.raw + other.raw)

    __radd__ = __add__

    def __sub__(self, other) -> "Scalar":
        try:
            other = self.field.coerce(other)
        except TypeError:
            return NotImplemented
        return Scalar(self.field, self.raw - other.raw)

    def __rsub__(self, other) -> "Scalar":
        try:
            other = self.field.coerce(other)
        except TypeError:
            return NotImplemented
        return Scalar(self.field, other.raw - self.raw)

    def __mul__(self, other) -> "Scalar":
        try:
            other = self.field.coerce(other)
        except TypeError:
            return NotImplemented
        return Scalar(self.field, self.raw * other.raw)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Scalar":
        try:
            other = self.field.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "Scalar":
        return self.field.coerce(other) * self.inverse()

    def __neg__(self) -> "Scalar":
        return Scalar(self.field, -self.raw)

    def __pos__(self) -> "Scalar":
        return self

    def inverse(self) -> "Scalar":
        """Multiplicative inverse."""
        if self.is_zero:
            raise ScalarArithmeticError("Division by zero scalar")
        if self.field.modulus is None:
            return Scalar(self.field, QQ(1) / self.raw)
        return Scalar(self.field, self.field.one.raw.exquo(self.raw))

    # -- real structure -------------------------------------------------

    def conjugate(self) -> "Scalar":
        """Image under zeta -> zeta**-1 (complex conjugation)."""
        if self.field.modulus is None:
            return self
        result = self.field.zero
        for k, c in enumerate(self.coefficients):
            if c != 0:
                result = result + self.field.zeta_power(-k) * c
        return result

    def is_real(self) -> bool:
        """Whether the scalar lies in the real subfield."""
        return self.conjugate() == self

    def to_float(self) -> float:
        """Evaluate under zeta -> exp(i*pi/L)."""
        if self.field.modulus is None:
            return float(_to_fraction(self.raw))
        coeffs = np.array([float(c) for c in self.coefficients])
        powers = np.exp(1j * np.pi * np.arange(len(coeffs)) / self.field.L)
        return float(np.dot(coeffs, powers).real)

    def sign(self) -> Sign:
        """Certified sign of a real scalar."""
        if self.field.modulus is None:
            return Sign((self.raw > 0) - (self.raw < 0))
        if self.raw.is_zero:
            return Sign.ZERO
        config = get_config()
        pairs = tuple((c.numerator, c.denominator) for c in self.coefficients)
        if config.get("scalar.check_real_subfield", True) and not _is_real_cached(self.field.L, pairs):
            raise ContractError("scalar lies in the real subfield", str(self))
        return Sign(_certified_sign(
            self.field.L,
            pairs,
            config.get_int("scalar.initial_precision_bits"),
            config.get_int("scalar.max_precision_bits"),
        ))


def _to_fraction(q) -> Fraction:
    return Fraction(int(q.numerator), int(q.denominator))


@lru_cache(maxsize=65536)
def _is_real_cached(L: int, pairs: Tuple[Tuple[int, int], ...]) -> bool:
    field = get_field(L)
    value = field.zero
    for k, (p, q) in enumerate(pairs):
        if p:
            value = value + field.zeta_power(k) * Fraction(p, q)
    return value.is_real()


_THREAD_STATE = threading.local()


def _interval_context() -> MPIntervalContext:
    """Interval context owned by the calling thread; mpmath's shared ``iv`` is left alone."""
    ctx = getattr(_THREAD_STATE, "iv", None)
    if ctx is None:
        ctx = MPIntervalContext()
        _THREAD_STATE.iv = ctx
    return ctx


@lru_cache(maxsize=65536)
def _certified_sign(
    L: int,
    pairs: Tuple[Tuple[int, int], ...],
    initial_bits: int,
    max_bits: int
) -> int:
    """
    Sign of sum p/q * cos(pi*k/L) for a value already known to be nonzero.

    The imaginary parts cancel because the value is real.
    """
    iv = _interval_context()
    bits = initial_bits
    while bits <= max_bits:
        iv.prec = bits
        total = iv.mpf(0)
        for k, (p, q) in enumerate(pairs):
            if p == 0:
                continue
            term = iv.mpf(p) / q
            if k:
                term = term * iv.cos(iv.pi * k / L)
            total = total + term
        if (total > 0) is True:
            return 1
        if (total < 0) is True:
            return -1
        logger.debug(f"Sign undecided at {bits} bits for L={L}; refining")
        bits *= 2
    raise InternalError(f"Sign of a nonzero scalar not certified within {max_bits} bits")


def scalar_from_cos(field: CyclotomicField, m) -> Scalar:
    """
    Return the exact value -cos(pi/m).

    Args:
        field: Field of the active system
        m: Coxeter-matrix entry (integer >= 2, or INF)

    Returns:
        -cos(pi/m); -1 for m = INF

    Raises:
        ConfigurationError: If m is invalid or does not divide the field's L
    """
    if m == INF:
        return field.from_rational(-1)
    if not isinstance(m, int) or m < 2:
        raise ConfigurationError(f"Coxeter entry must be an integer >= 2 or inf, got {m!r}")
    if m == 2:
        return field.zero
    if m == 3:
        return field.from_rational(Fraction(-1, 2))
    if field.L % m:
        raise ConfigurationError(f"Entry m={m} does not divide the field parameter L={field.L}")
    k = field.L // m
    return -(field.zeta_power(k) + field.zeta_power(-k)) / 2


_OPERATIONS = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "div": lambda a, b: a / b,
}


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    """Exact field arithmetic; op is one of add, sub, mul, div."""
    if op not in _OPERATIONS:
        raise ContractError("op in {add, sub, mul, div}", f"got {op!r}")
    return _OPERATIONS[op](a, b)


def scalar_sign(a: Scalar) -> Sign:
    """Sign of a real-subfield scalar."""
    return a.sign()


def field_parameter(entries) -> int:
    """
    The L needed for a collection of Coxeter-matrix entries.

    Entries 1, 2, 3 and INF have rational cosines, so only the remaining
    finite entries contribute to the lcm.
    """
    L = 1
    for m in entries:
        if m == INF or m in (1, 2, 3):
            continue
        L = math.lcm(L, int(m))
    return L
