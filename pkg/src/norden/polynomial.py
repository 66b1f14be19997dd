"""Exact multivariate polynomials over the rationals.

The variable universe is fixed to ``l1`` .. ``l12``. A monomial is stored as
a 12-tuple of exponents; a polynomial maps monomials to nonzero
:class:`fractions.Fraction` coefficients, so equal polynomials always have
identical term maps.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Iterable, Mapping, Union

PARAMETERS: tuple[str, ...] = tuple(f"l{i}" for i in range(1, 13))
NVARS = len(PARAMETERS)
_INDEX = {name: i for i, name in enumerate(PARAMETERS)}

Monomial = tuple  # tuple[int, ...] of length NVARS
ONE: Monomial = (0,) * NVARS

Scalar = Union[int, Fraction]


class MissingParameterError(ValueError):
    """Raised when an assignment does not cover a parameter of the polynomial."""


def monomial_order_key(m: Monomial) -> tuple:
    # Graded lex, l1 > l2 > ... ; sorting ascending on this key gives the
    # printing order (highest degree first, constants last).
    return (-sum(m), tuple(-e for e in m))


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


class Polynomial:
    """Immutable polynomial in ``l1`` .. ``l12`` with rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                if len(mono) != NVARS or any(e < 0 for e in mono):
                    raise ValueError(f"bad monomial exponent vector {mono!r}")
                c = _as_fraction(coeff)
                if c:
                    clean[tuple(mono)] = c
        self._terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------

    @classmethod
    def _raw(cls, terms: dict[Monomial, Fraction]) -> "Polynomial":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, value: Scalar) -> "Polynomial":
        c = _as_fraction(value)
        return cls._raw({ONE: c} if c else {})

    @classmethod
    def var(cls, name: str) -> "Polynomial":
        if name not in _INDEX:
            raise ValueError(f"unknown parameter {name!r}")
        mono = [0] * NVARS
        mono[_INDEX[name]] = 1
        return cls._raw({tuple(mono): Fraction(1)})

    @classmethod
    def coerce(cls, value) -> "Polynomial":
        if isinstance(value, Polynomial):
            return value
        return cls.constant(value)

    # -- inspection ---------------------------------------------------

    @property
    def terms(self) -> list[tuple[dict[str, int], Fraction]]:
        """Terms in canonical order as ``({name: exponent}, coefficient)``."""
        return [
            ({PARAMETERS[i]: e for i, e in enumerate(m) if e}, c)
            for m, c in self.items()
        ]

    def items(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self._terms.items(), key=lambda mc: monomial_order_key(mc[0]))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and ONE in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"polynomial {self} is not constant")
        return self._terms.get(ONE, Fraction(0))

    def degree(self) -> int:
        return max((sum(m) for m in self._terms), default=0)

    def variables(self) -> set[str]:
        return {PARAMETERS[i] for m in self._terms for i, e in enumerate(m) if e}

    def leading_term(self) -> tuple[Monomial, Fraction]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        return min(self._terms.items(), key=lambda mc: monomial_order_key(mc[0]))

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        try:
            other = Polynomial.coerce(other)
        except TypeError:
            return NotImplemented
        if not other._terms:
            return self
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            other = Polynomial.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        try:
            other = Polynomial.coerce(other)
        except TypeError:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return ZERO
            return Polynomial._raw({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not self._terms or not other._terms:
            return ZERO
        out: dict[Monomial, Fraction] = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                m = ma if mb == ONE else mb if ma == ONE else _mono_mul(ma, mb)
                out[m] = out.get(m, 0) + ca * cb
        return Polynomial._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        # Division by a nonzero rational constant only.
        if isinstance(other, Polynomial):
            other = other.constant_value()
        other = _as_fraction(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        return self * (1 / other)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative integer")
        result, base = ONE_POLY, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # -- comparison ---------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == Polynomial.constant(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # -- evaluation ---------------------------------------------------

    def evaluate(self, assignment: Mapping[str, Scalar]) -> Fraction:
        """Exact value at a rational point; every occurring parameter must be assigned."""
        missing = self.variables() - set(assignment)
        if missing:
            raise MissingParameterError(
                "assignment is missing " + ", ".join(sorted(missing, key=_INDEX.get))
            )
        values = [Fraction(0)] * NVARS
        for name, v in assignment.items():
            if name not in _INDEX:
                raise ValueError(f"unknown parameter {name!r}")
            values[_INDEX[name]] = _as_fraction(v)
        total = Fraction(0)
        for m, c in self._terms.items():
            term = c
            for i, e in enumerate(m):
                if e:
                    term *= values[i] ** e
            total += term
        return total

    def subs(self, assignment: Mapping[str, "Polynomial | Scalar"]) -> "Polynomial":
        """Substitute polynomials (or rationals) for some parameters."""
        repl = {_INDEX[k]: Polynomial.coerce(v) for k, v in assignment.items()}
        out = ZERO
        for m, c in self._terms.items():
            kept = list(m)
            term = Polynomial.constant(c)
            for i, p in repl.items():
                if m[i]:
                    term = term * p ** m[i]
                    kept[i] = 0
            out = out + term * Polynomial._raw({tuple(kept): Fraction(1)})
        return out

    # -- printing -----------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for k, (m, c) in enumerate(self.items()):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            factors = [
                PARAMETERS[i] if e == 1 else f"{PARAMETERS[i]}^{e}"
                for i, e in enumerate(m)
                if e
            ]
            if mag != 1 or not factors:
                factors.insert(0, str(mag))
            body = "*".join(factors)
            if k == 0:
                parts.append(f"-{body}" if sign == "-" else body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"


ZERO = Polynomial._raw({})
ONE_POLY = Polynomial._raw({ONE: Fraction(1)})


def poly_arith(a: Polynomial, b: Polynomial | None, op: str) -> Polynomial:
    """Dispatch ``add``/``sub``/``mul``/``neg`` by name."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    raise ValueError(f"unknown operation {op!r}")


def evaluate(p: Polynomial, assignment: Mapping[str, Scalar]) -> Fraction:
    return p.evaluate(assignment)


def symbols(*names: str) -> tuple[Polynomial, ...]:
    return tuple(Polynomial.var(n) for n in names)


def _fraction_sqrt(c: Fraction) -> Fraction | None:
    if c < 0:
        return None
    rn, rd = isqrt(c.numerator), isqrt(c.denominator)
    if rn * rn != c.numerator or rd * rd != c.denominator:
        return None
    return Fraction(rn, rd)


def perfect_square_root(p: Polynomial) -> Polynomial | None:
    """Return ``q`` with ``q*q == p`` and positive leading coefficient, or None.

    Works by peeling leading terms: once the leading term of ``q`` is fixed,
    each further term is the leading term of ``p - q*q`` divided by twice the
    leading term of ``q``. Each step strictly lowers the leading monomial of
    the remainder, so the loop is bounded.
    """
    if p.is_zero():
        return ZERO
    lead_m, lead_c = p.leading_term()
    if any(e % 2 for e in lead_m):
        return None
    root_c = _fraction_sqrt(lead_c)
    if root_c is None:
        return None
    q_lead_m = tuple(e // 2 for e in lead_m)
    q = Polynomial._raw({q_lead_m: root_c})
    two_lead = 2 * root_c
    while True:
        rem = p - q * q
        if rem.is_zero():
            return q
        rm, rc = rem.leading_term()
        diff = tuple(a - b for a, b in zip(rm, q_lead_m))
        if any(e < 0 for e in diff):
            return None
        if monomial_order_key(diff) <= monomial_order_key(q_lead_m):
            # next term would not be strictly below the leading one
            return None
        q = q + Polynomial._raw({diff: rc / two_lead})


def poly_sum(items: Iterable[Polynomial]) -> Polynomial:
    total: dict[Monomial, Fraction] = {}
    for p in items:
        for m, c in p._terms.items():
            total[m] = total.get(m, 0) + c
    return Polynomial._raw({m: c for m, c in total.items() if c})
