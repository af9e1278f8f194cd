"""The regularity function of a generic residual orbit, as an exact factored expression.

Parameters are written on a half-line ``q = base**f`` with log-parameters
``f1, f2, ...``; the graded parameter is ``k = 2f``.  For a root ``alpha``
put ``A = <alpha, xi>`` and ``K = k_alpha``, both as linear forms in ``f``.
The function is

    base**(-sum of K over positive roots)
    * prod over non-isotropic alpha of (eps * base**(-A) - 1)
    / (2**|P| * prod over alpha not in P of (eps * base**(-K - A) - 1))

where ``eps`` is the sign of ``alpha`` on a W0-invariant sign character and
``P`` is the set of roots with ``A = -K`` identically.

>>> from .residual import enumerate_generic_orbits
>>> from .roots import build_root_system
>>> fam = enumerate_generic_orbits(build_root_system("A1"))[0]
>>> M = build_m_function(fam)
>>> evaluate_m(M, [1], 2)
Fraction(3, 10)
>>> vanishing_order(M, [0])
(2, 1)
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import DomainError, InvariantViolation
from .linform import LinForm, Q, as_rational, format_rational
from .partitions import Partition, partitions
from .residual import GenericFamily, is_linear_residual, point_at, sample_parameters
from .roots import RootSystem, build_root_system, type_b

__all__ = [
    "ResidualShape",
    "Factor",
    "FactoredRational",
    "residual_shape",
    "build_m_function",
    "evaluate_m",
    "vanishing_order",
    "is_regular_via_m",
    "normalized_exponents",
    "content_counts",
    "partition_from_m",
    "separation_check",
]


def _log_names(R: RootSystem) -> dict[str, str]:
    return {p: "f" + p[1:] for p in R.params}


def _in_f(form, R: RootSystem) -> LinForm:
    """Rewrite a form in ``k`` as a form in ``f`` using ``k = 2f``."""
    form = form if isinstance(form, LinForm) else LinForm.const(form)
    return (2 * form).rename(_log_names(R))


@dataclass(frozen=True)
class ResidualShape:
    zero: tuple[tuple[int, ...], ...]
    minus: tuple[tuple[int, ...], ...]
    plus: tuple[tuple[int, ...], ...] = ()


@dataclass(frozen=True)
class Factor:
    """The expression ``sign * base**exponent + offset``."""

    exponent: LinForm
    sign: int = 1
    offset: int = -1

    def vanishes_at(self, f: Mapping[str, Q]) -> bool:
        return self.sign == 1 and self.offset == -1 and self.exponent.evaluate(f) == 0

    def sort_key(self):
        return (self.exponent.sort_key(), self.sign, self.offset)

    def __str__(self):
        sign = "+" if self.sign > 0 else "-"
        offset = "+ 1" if self.offset > 0 else "- 1"
        return f"({sign}q^{{{_compact(self.exponent)}}} {offset})"


def _compact(form: LinForm) -> str:
    return str(form).replace(" ", "").replace("*", "")


@dataclass(frozen=True)
class FactoredRational:
    """``scalar * base**leading * prod(numerator) / prod(denominator)``."""

    leading: LinForm
    scalar: Q
    numerator: tuple[Factor, ...]
    denominator: tuple[Factor, ...]
    names: tuple[str, ...]

    def __str__(self):
        def product(factors):
            counts = Counter(factors)
            return " ".join(
                str(fac) + (f"^{c}" if c > 1 else "") for fac, c in sorted(counts.items(), key=lambda item: item[0].sort_key())
            ) or "1"

        head = f"{format_rational(self.scalar)} * q^{{{_compact(self.leading)}}}"
        return f"{head} * {product(self.numerator)} / {product(self.denominator)}"


def _signs(R: RootSystem, s_signs: Mapping[str, int] | None) -> dict:
    s_signs = dict(s_signs or {})
    for name, eps in s_signs.items():
        if name not in R.params or eps not in (1, -1):
            raise DomainError(f"invalid sign {eps!r} for root class {name!r}")
    return {a: s_signs.get(R.param_of[a], 1) for a in R.roots}


def _family_point(family) -> tuple[RootSystem, tuple[LinForm, ...]]:
    if isinstance(family, GenericFamily):
        return build_root_system(family.root_system), family.representative
    R, point = family
    return R, tuple(point)


def residual_shape(family, s_signs: Mapping[str, int] | None = None) -> ResidualShape:
    """Isotropic roots and minus-pole roots of a generic point, as identities of forms.

    ``family`` is a :class:`GenericFamily` or a pair ``(root system, point)``.
    """
    R, point = _family_point(family)
    eps = _signs(R, s_signs)
    zero, minus = [], []
    for a in R.roots:
        value = R.pair(a, point)
        if eps[a] != 1:
            continue
        if value == 0:
            zero.append(a)
        if value == -R.k_form(a):
            minus.append(a)
    if len(minus) - len(zero) != R.rank:
        raise InvariantViolation(
            f"shape counts |minus| - |zero| = {len(minus) - len(zero)} differ from rank {R.rank}"
        )
    return ResidualShape(tuple(zero), tuple(minus))


def build_m_function(family, s_signs: Mapping[str, int] | None = None) -> FactoredRational:
    R, point = _family_point(family)
    shape = residual_shape((R, point), s_signs)
    eps = _signs(R, s_signs)
    zero, minus = set(shape.zero), set(shape.minus)
    leading = LinForm()
    for a in R.positive_roots:
        leading = leading - _in_f(R.k_form(a), R)
    numerator, denominator = [], []
    for a in R.roots:
        value = _in_f(R.pair(a, point), R)
        kf = _in_f(R.k_form(a), R)
        if a not in zero:
            numerator.append(Factor(-value, eps[a]))
        if a not in minus:
            denominator.append(Factor(-kf - value, eps[a]))
    names = tuple(_log_names(R).values())
    return FactoredRational(
        leading=leading,
        scalar=Q(1, 2 ** len(minus)),
        numerator=tuple(sorted(numerator, key=Factor.sort_key)),
        denominator=tuple(sorted(denominator, key=Factor.sort_key)),
        names=names,
    )


def _f_values(M: FactoredRational, f) -> dict[str, Q]:
    if isinstance(f, Mapping):
        return {name: as_rational(f[name]) for name in M.names}
    f = tuple(as_rational(x) for x in f)
    if len(f) != len(M.names):
        raise DomainError(f"expected {len(M.names)} log-parameters, got {len(f)}")
    return dict(zip(M.names, f))


def vanishing_order(M: FactoredRational, f) -> tuple[int, int]:
    """Numbers of numerator and denominator factors vanishing at ``f``."""
    values = _f_values(M, f)
    num = sum(fac.vanishes_at(values) for fac in M.numerator)
    den = sum(fac.vanishes_at(values) for fac in M.denominator)
    if num < den:
        raise InvariantViolation(f"pole of order {den - num} at f = {values}")
    return num, den


def is_regular_via_m(family, f, s_signs: Mapping[str, int] | None = None) -> bool:
    """Whether the function is nonzero at ``f``."""
    num, den = vanishing_order(build_m_function(family, s_signs), f)
    return num == den


def _power(base, exponent: Q):
    if exponent.denominator == 1 and isinstance(base, Fraction):
        return base ** int(exponent)
    return float(base) ** float(exponent)


def _direction(M: FactoredRational, vanishing: Sequence[Factor]) -> dict[str, Q]:
    for shift in range(50):
        d = dict(zip(M.names, sample_parameters(len(M.names), shift)))
        if all(fac.exponent.evaluate(d) != 0 for fac in vanishing):
            return d
    raise InvariantViolation("no direction avoids the vanishing factors")


def evaluate_m(M: FactoredRational, f, base):
    """Value at ``q = base**f``, exact when ``base`` is rational and all exponents are integers.

    Factors vanishing at ``f`` are replaced by their first-order terms along
    a generic direction; when numerator and denominator vanish to the same
    order the common powers of ``t * log(base)`` cancel.
    """
    values = _f_values(M, f)
    base = as_rational(base) if not isinstance(base, float) else base
    if base <= 1:
        raise DomainError("the base must exceed 1")
    num, den = vanishing_order(M, values)
    if num > den:
        return Q(0) if isinstance(base, Fraction) else 0.0
    vanishing = [fac for fac in M.numerator + M.denominator if fac.vanishes_at(values)]
    d = _direction(M, vanishing) if vanishing else {}
    result = M.scalar * _power(base, M.leading.evaluate(values))
    for fac in M.numerator:
        if fac.vanishes_at(values):
            result *= fac.exponent.evaluate(d)
        else:
            result *= fac.sign * _power(base, fac.exponent.evaluate(values)) + fac.offset
    for fac in M.denominator:
        if fac.vanishes_at(values):
            result /= fac.exponent.evaluate(d)
        else:
            result /= fac.sign * _power(base, fac.exponent.evaluate(values)) + fac.offset
    return result


def normalized_exponents(M: FactoredRational) -> dict[LinForm, int]:
    """Net multiplicities of ``(base**L - 1)`` after orienting every ``L`` positively.

    ``-base**L - 1`` is rewritten as ``-(base**(2L) - 1)/(base**L - 1)``;
    monomials and constants are dropped.
    """
    net: Counter = Counter()

    def add(fac: Factor, weight: int):
        L = fac.exponent.sign_normalized()
        if L.is_zero():
            return
        if fac.sign == 1:
            net[L] += weight
        else:
            net[2 * L] += weight
            net[L] -= weight

    for fac in M.numerator:
        add(fac, 1)
    for fac in M.denominator:
        add(fac, -1)
    return {L: c for L, c in net.items() if c}


def content_counts(M: FactoredRational) -> dict[int, int]:
    """Half the net multiplicity of ``2i*f1 + 2*f2`` for each integer ``i``."""
    counts = {}
    for L, c in normalized_exponents(M).items():
        f1, f2 = L.coefficient("f1"), L.coefficient("f2")
        if set(L.names()) <= {"f1", "f2"} and abs(f2) == 2 and f1 % 2 == 0:
            i = int(f1 * f2 / 4)
            if c % 2:
                raise InvariantViolation(f"odd multiplicity {c} for {L}")
            counts[i] = c // 2
    return counts


def partition_from_m(M: FactoredRational) -> Partition:
    return Partition.from_content_counts(content_counts(M))


def separation_check(n: int) -> tuple[bool, list[str]]:
    """For B_n, check that the functions of distinct partitions differ and determine them."""
    from .bn import xi_from_partition

    R = type_b(n)
    report = []
    seen: dict = {}
    ok = True
    for lam in partitions(n):
        M = build_m_function((R, xi_from_partition(lam)))
        key = frozenset(normalized_exponents(M).items())
        if key in seen:
            ok = False
            report.append(f"{lam.label()} and {seen[key].label()} have proportional functions")
        seen[key] = lam
        recovered = partition_from_m(M)
        if recovered != lam:
            ok = False
            report.append(f"{lam.label()} recovered as {recovered.label()}")
        else:
            report.append(f"{lam.label()} recovered")
    return ok, report


def residual_at_log_parameters(family, f) -> bool:
    """The direct count test at ``k = 2f``, for comparison with the function's zero locus."""
    R, point = _family_point(family)
    k = {p: 2 * as_rational(x) for p, x in zip(R.params, f)}
    return is_linear_residual(point_at(point, k), k, R)
