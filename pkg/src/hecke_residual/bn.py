"""Combinatorics of residual points for types B_n, C_n and D_n.

Generic residual orbits of B_n are indexed by partitions of ``n`` through
content tableaux.  On the line ``k = (k1, m*k1)`` a partition is singular
exactly when its extremities repeat; the dominant points that occur there are
described by multiplicity vectors, their jumps, and distinguished unipotent
partitions.

>>> lam = Partition([2])
>>> [str(c) for c in xi_from_partition(lam)]
['k2', 'k1 + k2']
>>> sorted(singular_ratios(lam))
[Fraction(-1, 1), Fraction(-1, 2)]
>>> D = WeightedDiagramB.from_multiplicities({0: 1, 1: 1}, 0)
>>> jumps_of(D, 0)
(Fraction(0, 1), Fraction(1, 1))
>>> phi_bipartition(DistinguishedUnipotent((1, 3), 0), 0)
Bipartition([], [2])
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import ceil, comb, floor
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, InvalidJumpsError, InvariantViolation
from .linform import LinForm, Q, as_rational, format_rational, format_vector
from .partitions import Bipartition, Partition, distinct_part_partitions, partitions
from .residual import is_linear_residual
from .roots import dominant_representative, type_b

__all__ = [
    "xi_from_partition",
    "xi_from_partition_c",
    "c_to_b_parameters",
    "extremities",
    "is_regular_ratio",
    "singular_ratios",
    "WeightedDiagramB",
    "diagram_of",
    "is_kweighted_dynkin",
    "distinguished_diagrams",
    "jumps_of",
    "reconstruct_from_jumps",
    "DistinguishedUnipotent",
    "enumerate_distinguished_unipotent",
    "bala_carter",
    "bala_carter_inverse",
    "phi_bipartition",
    "fiber_partitions",
    "fiber_size_formula",
    "dn_sharp_orbits",
    "conjugation_symmetry_holds",
]

HALF = Q(1, 2)
K1, K2 = LinForm.param("k1"), LinForm.param("k2")


def _half_integer(m) -> Q:
    m = as_rational(m)
    if (2 * m).denominator != 1:
        raise DomainError(f"m = {format_rational(m)} is not a half-integer")
    return m


def _is_integral(x: Q) -> bool:
    return x.denominator == 1


# -- tableaux and singular ratios -------------------------------------------

def xi_from_partition(lam: Partition) -> tuple[LinForm, ...]:
    """The point whose i-th coordinate is ``c*k1 + k2`` for the i-th box in reading order."""
    return tuple(b.content * K1 + K2 for b in Partition(lam).boxes())


def c_to_b_parameters(k: Sequence) -> tuple[Q, Q]:
    """Residual points of C_n at ``(k1, k2)`` are those of B_n at ``(k1, k2/2)``."""
    k1, k2 = (as_rational(x) for x in k)
    return k1, k2 / 2


def xi_from_partition_c(lam: Partition) -> tuple[LinForm, ...]:
    half = {"k2": K2 / 2}
    return tuple(c.substitute(half) for c in xi_from_partition(lam))


def extremities(lam: Partition, m) -> list[Q]:
    """Extremities of the m-shifted content tableau, weakly increasing.

    For integer ``m`` these are the row ends with ``c + m >= 0`` and the
    column bottoms with ``c + m <= 0``; a box with ``c + m = 0`` that is both
    contributes twice.  For half-integral ``m`` the thresholds are ``+1/2``
    and ``-1/2``.
    """
    m = _half_integer(m)
    lam = Partition(lam)
    upper, lower = (Q(0), Q(0)) if _is_integral(m) else (HALF, -HALF)
    out = []
    for b in lam.boxes():
        value = b.content + m
        if lam.is_row_end(b) and value >= upper:
            out.append(abs(value))
        if lam.is_column_bottom(b) and value <= lower:
            out.append(abs(value))
    return sorted(out)


def is_regular_ratio(lam: Partition, m) -> bool:
    """Whether ``xi_lam(k1, m*k1)`` is residual for ``k1 != 0``."""
    m = as_rational(m)
    if (2 * m).denominator != 1:
        return True
    ext = extremities(lam, m)
    return len(set(ext)) == len(ext)


@lru_cache(maxsize=None)
def _singular_ratios(lam: Partition) -> frozenset:
    n = lam.size
    candidates = (Q(t, 2) for t in range(-2 * (n - 1), 2 * (n - 1) + 1))
    return frozenset(m for m in candidates if not is_regular_ratio(lam, m))


def singular_ratios(lam: Partition) -> frozenset:
    """Half-integers ``m`` with ``|m| <= n - 1`` at which the extremities repeat."""
    return _singular_ratios(Partition(lam))


# -- weighted diagrams -------------------------------------------------------

@dataclass(frozen=True)
class WeightedDiagramB:
    """A dominant point of B_n on the line ``k2 = m*k1``, in units of ``|k1|``.

    Stored as multiplicities ``(p, mu_p)`` with ``p >= 0`` ascending.
    """

    m: Q
    multiplicities: tuple[tuple[Q, int], ...]

    @classmethod
    def from_multiplicities(cls, mu: Mapping, m) -> "WeightedDiagramB":
        m = _half_integer(m)
        items = []
        for p, count in mu.items():
            p, count = as_rational(p), int(count)
            if count < 0:
                raise DomainError(f"negative multiplicity at {format_rational(p)}")
            if count:
                items.append((p, count))
        diagram = cls(m, tuple(sorted(items)))
        diagram.check_support()
        return diagram

    @classmethod
    def from_vector(cls, values: Iterable, m) -> "WeightedDiagramB":
        return cls.from_multiplicities(Counter(abs(as_rational(v)) for v in values), m)

    def check_support(self):
        integral = _is_integral(self.m)
        for p, _ in self.multiplicities:
            if p < 0 or _is_integral(p) != integral or (2 * p).denominator != 1:
                raise DomainError(
                    f"value {format_rational(p)} is not allowed for m = {format_rational(self.m)}"
                )

    def mu(self, p) -> int:
        return dict(self.multiplicities).get(as_rational(p), 0)

    @property
    def n(self) -> int:
        return sum(c for _, c in self.multiplicities)

    @property
    def top(self) -> Q | None:
        return self.multiplicities[-1][0] if self.multiplicities else None

    def vector(self) -> tuple[Q, ...]:
        """Coordinates of the dominant point, descending."""
        return tuple(p for p, c in reversed(self.multiplicities) for _ in range(c))

    def __str__(self):
        return format_vector(self.vector())


def diagram_of(lam: Partition, m) -> WeightedDiagramB:
    """The dominant point of ``xi_lam(1, m)``, which is residual when m is regular for lam."""
    m = _half_integer(m)
    point = tuple(c.evaluate({"k1": 1, "k2": m}) for c in xi_from_partition(lam))
    return WeightedDiagramB.from_vector(point, m)


def is_kweighted_dynkin(D: WeightedDiagramB | Mapping, m) -> bool:
    """Multiplicity conditions for ``D`` to be a distinguished diagram on the line of ``m``.

    ``D`` may also be given as a plain mapping ``{p: mu_p}``.
    """
    m = _half_integer(m)
    mu = D if isinstance(D, Mapping) else dict(D.multiplicities)
    D = WeightedDiagramB.from_multiplicities(mu, m)
    if not D.multiplicities:
        return False
    mu = D.mu
    r = D.top
    a = abs(m)
    if mu(r) != 1:
        return False
    start = Q(0) if _is_integral(m) else HALF
    p = start
    while p <= r:
        if p >= a and not (m == 0 and p == 0):
            if mu(p) - mu(p + 1) not in (0, 1):
                return False
        elif 0 < p:
            if mu(p) - mu(p + 1) not in (-1, 0):
                return False
        p += 1
    if _is_integral(m):
        expected = floor(Q(mu(1) + 1, 2)) if m == 0 else floor(Q(mu(1), 2))
        if mu(0) != expected:
            return False
    return True


def distinguished_diagrams(n: int, m) -> list[WeightedDiagramB]:
    """All multiplicity vectors of total ``n`` passing the multiplicity conditions.

    Built top down from a top value of multiplicity one, taking at each step
    the multiplicities the conditions allow.
    """
    m = _half_integer(m)
    a = abs(m)
    start = Q(0) if _is_integral(m) else HALF
    out = []

    def extend(p, mu, remaining):
        if p < start:
            if remaining == 0:
                out.append(WeightedDiagramB.from_multiplicities(mu, m))
            return
        above = mu.get(p + 1, 0)
        if _is_integral(m) and p == 0:
            choices = [floor(Q(above + 1, 2)) if m == 0 else floor(Q(above, 2))]
        elif p >= a:
            choices = [above, above + 1]
        else:
            choices = [above - 1, above]
        for value in choices:
            if 0 <= value <= remaining:
                extend(p - 1, {**mu, p: value}, remaining - value)

    top = start
    while top <= n + a:
        extend(top - 1, {top: 1}, n - 1)
        top += 1
    found = [d for d in out if is_kweighted_dynkin(d, m)]
    return sorted(found, key=lambda d: d.vector(), reverse=True)


# -- jumps ---------------------------------------------------------------------

def _padding(m: Q) -> Q:
    return Q(0) if _is_integral(m) else -HALF


def jumps_of(D: WeightedDiagramB, m) -> tuple[Q, ...]:
    """Jumps of ``D``, padded so the length is congruent to ``ceil(|m|)`` mod 2."""
    m = _half_integer(m)
    if not is_kweighted_dynkin(D, m):
        raise DomainError(f"{D} is not a distinguished diagram for m = {format_rational(m)}")
    a = abs(m)
    start = Q(0) if _is_integral(m) else HALF
    jumps = []
    p = start
    while p <= D.top:
        if p >= a and D.mu(p) == D.mu(p + 1) + 1:
            jumps.append(p)
        elif 0 < p < a and D.mu(p) == D.mu(p + 1):
            jumps.append(p)
        p += 1
    if (len(jumps) - ceil(a)) % 2:
        jumps.insert(0, _padding(m))
    if (len(jumps) - ceil(a)) % 2 or len(jumps) < ceil(a):
        raise InvariantViolation(f"jumps {jumps} of {D} have the wrong length")
    return tuple(jumps)


def reconstruct_from_jumps(jumps: Sequence, m) -> WeightedDiagramB:
    """The diagram whose jump list is ``jumps``, rebuilt from the top down."""
    m = _half_integer(m)
    jumps = tuple(as_rational(j) for j in jumps)
    a = abs(m)
    if any(x >= y for x, y in zip(jumps, jumps[1:])):
        raise InvalidJumpsError("jumps must be strictly increasing")
    if (len(jumps) - ceil(a)) % 2:
        raise InvalidJumpsError(
            f"{len(jumps)} jumps, but the count must be congruent to {ceil(a)} mod 2"
        )
    pad = _padding(m)
    for j in jumps:
        if (j - m).denominator != 1:
            raise InvalidJumpsError(f"jump {format_rational(j)} is not in m + Z")
        if j < 0 and j != pad:
            raise InvalidJumpsError(f"negative jump {format_rational(j)}")
    genuine = {j for j in jumps if j > 0}
    if not genuine:
        raise InvalidJumpsError("no jumps above zero")
    start = Q(0) if _is_integral(m) else HALF
    p = max(max(genuine), a) + 1
    mu = {p: 0}
    while p > start:
        p -= 1
        above = mu[p + 1]
        if _is_integral(m) and p == 0:
            mu[p] = floor(Q(mu[1] + 1, 2)) if m == 0 else floor(Q(mu[1], 2))
        elif p >= a:
            mu[p] = above + (p in genuine)
        else:
            mu[p] = above - 1 + (p in genuine)
        if mu[p] < 0:
            raise InvalidJumpsError(f"jumps {format_vector(jumps)} force a negative multiplicity")
    D = WeightedDiagramB.from_multiplicities(mu, m)
    if not is_kweighted_dynkin(D, m) or jumps_of(D, m) != jumps:
        raise InvalidJumpsError(f"{format_vector(jumps)} is not the jump list of any diagram")
    return D


# -- distinguished unipotents --------------------------------------------------

@dataclass(frozen=True)
class DistinguishedUnipotent:
    """Distinct parts, ascending, all odd (integer m) or all even (half-integral m)."""

    parts: tuple[int, ...]
    m: Q

    def __init__(self, parts, m):
        object.__setattr__(self, "parts", tuple(sorted(int(p) for p in parts)))
        object.__setattr__(self, "m", _half_integer(m))

    @property
    def n(self) -> int:
        total = sum(self.parts) - self.m ** 2
        if not _is_integral(self.m):
            total += Q(1, 4)
        return int(total / 2)

    def is_valid(self) -> bool:
        parts = [p for p in self.parts if p]
        if len(set(parts)) != len(parts) or any(p < 0 for p in self.parts):
            return False
        a = abs(self.m)
        if _is_integral(self.m):
            if 0 in self.parts or any(p % 2 == 0 for p in parts) or len(parts) < a:
                return False
            excess = sum(parts) - self.m ** 2
        else:
            if any(p % 2 for p in parts) or len(parts) < floor(a):
                return False
            excess = sum(parts) - self.m ** 2 + Q(1, 4)
        return excess >= 2 and excess % 2 == 0

    def padded(self) -> tuple[int, ...]:
        """Parts with a leading 0 added when needed for the length parity."""
        parts = tuple(p for p in self.parts if p)
        if (len(parts) - ceil(abs(self.m))) % 2:
            if _is_integral(self.m):
                raise InvariantViolation(f"{self} has the wrong number of parts")
            parts = (0,) + parts
        return parts

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def enumerate_distinguished_unipotent(n: int, m) -> list[DistinguishedUnipotent]:
    m = _half_integer(m)
    a = abs(m)
    if _is_integral(m):
        total, parity, min_len = 2 * n + m ** 2, 1, a
    else:
        total, parity, min_len = 2 * n + m ** 2 - Q(1, 4), 0, floor(a)
    if total.denominator != 1 or total < 0:
        return []
    out = []
    for parts in distinct_part_partitions(int(total), parity):
        if len(parts) >= min_len:
            out.append(DistinguishedUnipotent(parts, m))
    return out


def bala_carter(u: DistinguishedUnipotent, m=None) -> WeightedDiagramB:
    """The diagram whose jumps are ``(u_i - 1)/2``."""
    m = u.m if m is None else _half_integer(m)
    u = DistinguishedUnipotent(u.parts, m)
    if not u.is_valid():
        raise DomainError(f"{u} is not a distinguished unipotent for m = {format_rational(m)}")
    return reconstruct_from_jumps([Q(p - 1, 2) for p in u.padded()], m)


def bala_carter_inverse(D: WeightedDiagramB, m) -> DistinguishedUnipotent:
    m = _half_integer(m)
    return DistinguishedUnipotent([int(2 * j + 1) for j in jumps_of(D, m) if 2 * j + 1], m)


def phi_bipartition(u: DistinguishedUnipotent, m=None) -> Bipartition:
    """The bipartition attached to ``u``; negative ``m`` swaps the two components."""
    m = u.m if m is None else _half_integer(m)
    if m < 0:
        return phi_bipartition(DistinguishedUnipotent(u.parts, -m), -m).swap()
    u = DistinguishedUnipotent(u.parts, m)
    j = [Q(p - 1, 2) for p in u.padded()]
    c = ceil(m)
    nu = (len(j) - c) // 2
    if _is_integral(m):
        first = [j[2 * i] for i in range(nu)]
        first += [j[2 * nu + t] - t for t in range(c)]
        second = [j[2 * i + 1] + 1 for i in range(nu)]
    else:
        first = [j[2 * i] + HALF for i in range(nu + 1)]
        first += [j[2 * nu + 1 + t] - (t + HALF) for t in range(c - 1)]
        second = [j[2 * i + 1] + HALF for i in range(nu)]
    parts = first + second
    if any(p.denominator != 1 or p < 0 for p in parts):
        raise InvariantViolation(f"phi of {u} has entries {format_vector(parts)}")
    return Bipartition(
        sorted((int(p) for p in first), reverse=True),
        sorted((int(p) for p in second), reverse=True),
    )


# -- fibers of the evaluation map ------------------------------------------------

def fiber_partitions(D: WeightedDiagramB, m, n: int | None = None) -> list[Partition]:
    """Partitions regular at ``m`` whose tableau point evaluates to ``D``."""
    m = _half_integer(m)
    n = D.n if n is None else n
    return [
        lam for lam in partitions(n)
        if is_regular_ratio(lam, m) and diagram_of(lam, m) == D
    ]


def fiber_size_formula(u: DistinguishedUnipotent) -> int:
    """Binomial count of the fiber over the diagram of ``u``."""
    parts = u.padded()
    c = ceil(abs(u.m))
    nu = (len(parts) - c) // 2
    if parts[0] != 0:
        return comb(c + 2 * nu, nu)
    return comb(c + 2 * nu - 1, nu)


# -- type D --------------------------------------------------------------------

def dn_sharp_orbits(n: int) -> list[tuple[Partition, Partition]]:
    """Pairs ``{lam, lam'}`` of partitions regular at ``m = 0``, first member earlier in order."""
    if n < 1:
        raise DomainError("n must be positive")
    seen = set()
    pairs = []
    for lam in partitions(n):
        if lam in seen or not is_regular_ratio(lam, 0):
            continue
        conj = lam.conjugate()
        if conj == lam:
            raise InvariantViolation(f"self-conjugate partition {lam.label()} is regular at m = 0")
        if not is_regular_ratio(conj, 0):
            raise InvariantViolation(f"{lam.label()} is regular at 0 but its conjugate is not")
        seen.update((lam, conj))
        pairs.append((lam, conj))
    return pairs


def conjugation_symmetry_holds(lam: Partition, k: Sequence) -> bool:
    """Whether the orbit of ``xi_lam'`` at ``(k1, -k2)`` is the orbit of ``xi_lam`` at ``(k1, k2)``."""
    lam = Partition(lam)
    k1, k2 = (as_rational(x) for x in k)
    R = type_b(lam.size)
    left = tuple(c.evaluate({"k1": k1, "k2": -k2}) for c in xi_from_partition(lam.conjugate()))
    right = tuple(c.evaluate({"k1": k1, "k2": k2}) for c in xi_from_partition(lam))
    return dominant_representative(left, R) == dominant_representative(right, R)


def residual_on_line(lam: Partition, m) -> bool:
    """Direct count test for ``xi_lam(1, m)`` at ``k = (1, m)``."""
    m = as_rational(m)
    lam = Partition(lam)
    point = tuple(c.evaluate({"k1": 1, "k2": m}) for c in xi_from_partition(lam))
    return is_linear_residual(point, (1, m), type_b(lam.size))
