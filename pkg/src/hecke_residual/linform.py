"""Exact rationals and rational linear forms in named parameters.

Rationals are :class:`fractions.Fraction`.  A :class:`LinForm` is a finite
combination ``c1*k1 + c2*k2 + c0`` with rational coefficients; it is the
coordinate language for points that depend linearly on the parameters.

>>> k1, k2 = LinForm.param("k1"), LinForm.param("k2")
>>> str(2 * k1 - k2 / 2)
'2*k1 - 1/2*k2'
>>> (k1 + k2).evaluate({"k1": 1, "k2": Q(1, 3)})
Fraction(4, 3)
>>> LinForm.parse("k2 - k1") == k2 - k1
True
"""

from __future__ import annotations

import re
from fractions import Fraction as Q
from numbers import Rational
from typing import Iterable, Mapping, Sequence

__all__ = [
    "Q",
    "LinForm",
    "as_rational",
    "format_rational",
    "parse_rational",
    "parse_rational_list",
    "format_vector",
    "param_names",
]


def as_rational(x) -> Q:
    """Coerce an int, Fraction or rational string to a Fraction.

    Floats are refused so that nothing inexact leaks into the arithmetic.
    """
    if isinstance(x, Q):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, (int, Rational)):
        return Q(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def parse_rational(text: str) -> Q:
    text = text.strip()
    if not text:
        raise ValueError("empty rational")
    return Q(text)


def parse_rational_list(text: str) -> tuple[Q, ...]:
    """Parse ``"1/2,3"`` into ``(Fraction(1, 2), Fraction(3))``."""
    text = text.strip().strip("()")
    if not text:
        return ()
    return tuple(parse_rational(t) for t in text.split(","))


def format_rational(x: Q) -> str:
    x = Q(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def format_vector(v: Iterable) -> str:
    return "(" + ",".join(format_rational(x) if not isinstance(x, LinForm) else str(x) for x in v) + ")"


def param_names(count: int, prefix: str = "k") -> tuple[str, ...]:
    return tuple(f"{prefix}{i}" for i in range(1, count + 1))


_NAME = re.compile(r"([A-Za-z_]+)(\d*)$")


def _name_key(name: str):
    m = _NAME.match(name)
    if not m:
        return (name, 0)
    return (m.group(1), int(m.group(2) or 0))


class LinForm:
    """Immutable rational linear form ``sum c_i * name_i + constant``.

    Zero coefficients are never stored, so equality and hashing are
    coefficient-wise.
    """

    __slots__ = ("_terms", "_constant", "_hash")

    def __init__(self, coefficients: Mapping[str, object] | None = None, constant=0):
        terms = {}
        for name, c in (coefficients or {}).items():
            c = as_rational(c)
            if c:
                terms[name] = c
        self._terms = tuple(sorted(terms.items(), key=lambda t: _name_key(t[0])))
        self._constant = as_rational(constant)
        self._hash = None

    @classmethod
    def param(cls, name: str) -> "LinForm":
        return cls({name: 1})

    @classmethod
    def const(cls, value) -> "LinForm":
        return cls({}, value)

    @classmethod
    def from_vector(cls, coefficients: Sequence, names: Sequence[str], constant=0) -> "LinForm":
        return cls(dict(zip(names, coefficients)), constant)

    # -- accessors -----------------------------------------------------
    @property
    def coefficients(self) -> dict[str, Q]:
        return dict(self._terms)

    @property
    def constant(self) -> Q:
        return self._constant

    def coefficient(self, name: str) -> Q:
        for n, c in self._terms:
            if n == name:
                return c
        return Q(0)

    def names(self) -> tuple[str, ...]:
        return tuple(n for n, _ in self._terms)

    def vector(self, names: Sequence[str]) -> tuple[Q, ...]:
        d = dict(self._terms)
        extra = set(d) - set(names)
        if extra:
            raise ValueError(f"parameters {sorted(extra)} not in basis {tuple(names)}")
        return tuple(d.get(n, Q(0)) for n in names)

    def is_zero(self) -> bool:
        return not self._terms and not self._constant

    def is_homogeneous(self) -> bool:
        return not self._constant

    def __bool__(self):
        return not self.is_zero()

    # -- arithmetic ----------------------------------------------------
    def _combine(self, other: "LinForm", sign: int) -> "LinForm":
        d = dict(self._terms)
        for n, c in other._terms:
            d[n] = d.get(n, 0) + sign * c
        return LinForm(d, self._constant + sign * other._constant)

    @staticmethod
    def _lift(other) -> "LinForm":
        if isinstance(other, LinForm):
            return other
        return LinForm.const(as_rational(other))

    def __add__(self, other):
        try:
            return self._combine(self._lift(other), 1)
        except TypeError:
            return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        try:
            return self._combine(self._lift(other), -1)
        except TypeError:
            return NotImplemented

    def __rsub__(self, other):
        try:
            return self._lift(other)._combine(self, -1)
        except TypeError:
            return NotImplemented

    def __neg__(self):
        return LinForm({n: -c for n, c in self._terms}, -self._constant)

    def __pos__(self):
        return self

    def __mul__(self, scalar):
        if isinstance(scalar, LinForm):
            if scalar._terms and self._terms:
                raise TypeError("product of two non-constant linear forms")
            if not scalar._terms:
                scalar = scalar._constant
            else:
                return scalar * self._constant
        try:
            s = as_rational(scalar)
        except TypeError:
            return NotImplemented
        return LinForm({n: c * s for n, c in self._terms}, self._constant * s)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        try:
            s = as_rational(scalar)
        except TypeError:
            return NotImplemented
        return LinForm({n: c / s for n, c in self._terms}, self._constant / s)

    def __eq__(self, other):
        if isinstance(other, LinForm):
            return self._terms == other._terms and self._constant == other._constant
        if isinstance(other, (int, Q)):
            return not self._terms and self._constant == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._terms, self._constant))
        return self._hash

    def sort_key(self):
        return (tuple((_name_key(n), c) for n, c in self._terms), self._constant)

    # -- evaluation ----------------------------------------------------
    def evaluate(self, values) -> Q:
        """Value at a point given as a mapping or as a sequence aligned with ``k1, k2, ...``."""
        if not isinstance(values, Mapping):
            values = {f"k{i}": v for i, v in enumerate(values, start=1)}
        total = self._constant
        for n, c in self._terms:
            if n not in values:
                raise KeyError(f"no value for parameter {n}")
            total += c * as_rational(values[n])
        return total

    def substitute(self, mapping: Mapping[str, "LinForm"]) -> "LinForm":
        out = LinForm.const(self._constant)
        for n, c in self._terms:
            out = out + c * (mapping[n] if n in mapping else LinForm.param(n))
        return out

    def rename(self, mapping: Mapping[str, str]) -> "LinForm":
        return LinForm({mapping.get(n, n): c for n, c in self._terms}, self._constant)

    # -- normal forms --------------------------------------------------
    def leading_coefficient(self) -> Q:
        return self._terms[0][1] if self._terms else Q(0)

    def monic(self) -> "LinForm":
        """Scale so that the first nonzero coefficient is +1."""
        lead = self.leading_coefficient()
        if not lead:
            raise ValueError("the zero form has no monic normalisation")
        return self / lead

    def sign_normalized(self) -> "LinForm":
        """``self`` or ``-self``, whichever has a positive first coefficient."""
        lead = self.leading_coefficient() or self._constant
        return -self if lead < 0 else self

    # -- text ----------------------------------------------------------
    def __str__(self):
        pieces = []
        for n, c in self._terms:
            mag = abs(c)
            body = n if mag == 1 else f"{format_rational(mag)}*{n}"
            pieces.append(("-" if c < 0 else "+", body))
        if self._constant or not pieces:
            c = self._constant
            pieces.append(("-" if c < 0 else "+", format_rational(abs(c))))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"LinForm({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "LinForm":
        """Inverse of ``str``; also accepts ``2k1``, ``k1/2`` and spaces freely."""
        src = text.replace(" ", "")
        if not src:
            raise ValueError("empty linear form")
        terms: dict[str, Q] = {}
        constant = Q(0)
        pos = 0
        token = re.compile(r"([+-]?)(\d+(?:/\d+)?)?(\*)?([A-Za-z_]+\d*)?(/\d+)?")
        while pos < len(src):
            m = token.match(src, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse linear form {text!r}")
            sign, num, _star, name, div = m.groups()
            if num is None and name is None:
                raise ValueError(f"cannot parse linear form {text!r}")
            c = Q(num) if num else Q(1)
            if div:
                c /= Q(div[1:])
            if sign == "-":
                c = -c
            if name:
                terms[name] = terms.get(name, 0) + c
            else:
                constant += c
            pos = m.end()
            if pos < len(src) and src[pos] not in "+-":
                raise ValueError(f"cannot parse linear form {text!r}")
        return cls(terms, constant)
