"""Residual points: numeric and symbolic tests, orbit enumeration, regularity, confluence.

A *generic point* is a tuple of :class:`LinForm` coordinates in the parameters
``k1, k2, ...`` of the root system.  It is generically residual when the
count identity holds as an identity of linear forms; a family of such points
specialises to a residual point for all parameters off finitely many
hyperplanes.

>>> R = build_root_system("G2")
>>> fams = enumerate_generic_orbits(R)
>>> [f.label for f in fams]
['g1', 'g2', 'g3']
>>> [str(h) for h in fams[2].singular]
['k1 = 0', 'k2 = 0']
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import gcd
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import golden
from .errors import DomainError, InvariantViolation, NotResidualError
from .linform import LinForm, Q, as_rational, format_rational, format_vector
from .roots import RootSystem, apply_word, build_root_system, dominant_representative, to_dominant

__all__ = [
    "Hyperplane",
    "GenericFamily",
    "ConfluenceRow",
    "sample_parameters",
    "parameter_values",
    "point_at",
    "is_linear_residual",
    "is_generic_residual",
    "enumerate_generic_orbits",
    "regularity_hyperplanes",
    "candidate_hyperplanes",
    "sample_on_hyperplane",
    "evaluate_orbit",
    "confluence_table",
    "family_to_json",
    "families_to_json",
    "families_to_markdown",
    "confluence_to_json",
    "confluence_to_markdown",
]


def _primes(count: int) -> list[int]:
    out = []
    n = 2
    while len(out) < count:
        if all(n % p for p in out if p * p <= n):
            out.append(n)
        n += 1
    return out


def sample_parameters(count: int, shift: int = 0) -> tuple[Q, ...]:
    """The generic sample ``(1/2, 1/3, 1/5, ...)``, optionally starting further along the primes."""
    return tuple(Q(1, p) for p in _primes(count + shift)[shift:])


def parameter_values(R: RootSystem, k) -> dict[str, Q]:
    """Normalise ``k`` (a sequence aligned with ``R.params`` or a mapping) to a dict."""
    if isinstance(k, Mapping):
        values = {name: as_rational(k[name]) for name in R.params if name in k}
        missing = [name for name in R.params if name not in values]
        if missing:
            raise DomainError(f"no value given for {', '.join(missing)}")
        return values
    k = tuple(as_rational(x) for x in k)
    if len(k) != len(R.params):
        raise DomainError(f"{R.tag} takes {len(R.params)} parameter(s), got {len(k)}")
    return dict(zip(R.params, k))


def point_at(point: Sequence[LinForm], k: Mapping[str, Q]) -> tuple[Q, ...]:
    return tuple(c.evaluate(k) if isinstance(c, LinForm) else Q(c) for c in point)


def _check_dimension(point, R: RootSystem):
    if len(point) != R.rank:
        raise DomainError(f"expected {R.rank} coordinates for {R.tag}, got {len(point)}")


def is_linear_residual(xi: Sequence, k, R: RootSystem) -> bool:
    """Count test: roots with value ``k_alpha`` outnumber roots with value 0 by the rank."""
    xi = tuple(as_rational(x) for x in xi)
    _check_dimension(xi, R)
    values = parameter_values(R, k)
    equal = zero = 0
    for a in R.roots:
        v = R.pair(a, xi)
        if v == 0:
            zero += 1
        if v == values[R.param_of[a]]:
            equal += 1
    return equal == zero + R.rank


def is_generic_residual(xi: Sequence[LinForm], R: RootSystem) -> bool:
    """The count test performed with identities of linear forms."""
    xi = tuple(x if isinstance(x, LinForm) else LinForm.const(x) for x in xi)
    _check_dimension(xi, R)
    if any(not x.is_homogeneous() for x in xi):
        raise DomainError("generic point coordinates must have no constant term")
    equal = zero = 0
    for a in R.roots:
        v = R.pair(a, xi)
        if v == 0:
            zero += 1
        if v == R.k_form(a):
            equal += 1
    return equal == zero + R.rank


@dataclass(frozen=True, order=True)
class Hyperplane:
    """The zero set of a homogeneous linear form, scaled so its first coefficient is 1."""

    form: LinForm = field(compare=False)
    _key: tuple = field(init=False, repr=False)

    def __post_init__(self):
        if self.form.is_zero() or not self.form.is_homogeneous():
            raise DomainError(f"not a hyperplane through the origin: {self.form}")
        object.__setattr__(self, "form", self.form.monic())
        object.__setattr__(self, "_key", self.form.sort_key())

    @classmethod
    def parse(cls, text: str) -> "Hyperplane":
        return cls(LinForm.parse(text.split("=")[0]))

    def contains(self, k: Mapping[str, Q]) -> bool:
        return self.form.evaluate(k) == 0

    def __eq__(self, other):
        return isinstance(other, Hyperplane) and self.form == other.form

    def __hash__(self):
        return hash(self.form)

    def integral_form(self) -> LinForm:
        """The same hyperplane as a primitive integer form with positive leading coefficient."""
        coeffs = self.form.coefficients.values()
        scale = 1
        for c in coeffs:
            scale = scale * c.denominator // gcd(scale, c.denominator)
        numerators = [int(c * scale) for c in coeffs]
        return self.form * Q(scale, gcd(*numerators))

    def __str__(self):
        return f"{self.integral_form()} = 0"


@dataclass(frozen=True)
class GenericFamily:
    """A W0-orbit of generic residual points with its singular hyperplanes.

    ``representative`` is dominant at the generic sample parameter.
    ``display`` is the representative shown in tables; it lies in the same
    orbit and defaults to ``representative``.
    """

    root_system: str
    representative: tuple[LinForm, ...]
    label: str | None = None
    singular: tuple[Hyperplane, ...] = ()
    display: tuple[LinForm, ...] | None = None

    @property
    def shown(self) -> tuple[LinForm, ...]:
        return self.display if self.display is not None else self.representative

    def at(self, k) -> tuple[Q, ...]:
        R = build_root_system(self.root_system)
        return point_at(self.representative, parameter_values(R, k))

    def name(self) -> str:
        return self.label if self.label is not None else format_vector(self.representative)


@dataclass(frozen=True)
class ConfluenceRow:
    diagram: tuple[Q, ...]
    fiber: tuple[str, ...]


# -- enumeration ----------------------------------------------------------

def _orbit_key(point, R: RootSystem, sample: Mapping[str, Q]) -> tuple[Q, ...]:
    return dominant_representative(point_at(point, sample), R)


def _dominant_at_sample(point, R: RootSystem, sample) -> tuple[LinForm, ...]:
    _, word = to_dominant(point_at(point, sample), R)
    return apply_word(word, tuple(point), R)


def _check_sample_is_generic(point, R: RootSystem, sample):
    """Every coincidence seen at the sample must hold identically."""
    for a in R.positive_roots:
        v = R.pair(a, point)
        v = v if isinstance(v, LinForm) else LinForm.const(v)
        kf = R.k_form(a)
        for form in (v, v - kf, v + kf):
            if form.evaluate(sample) == 0 and not form.is_zero():
                raise InvariantViolation(
                    f"sample {sample} lies on {form} = 0 for the point {format_vector(point)}"
                )


def _integer_solutions(R: RootSystem, systems: np.ndarray) -> list[tuple[int, tuple]]:
    """Exact solutions of ``<alpha_i, xi> = k_alpha_i`` for each row of root indices.

    Returns ``(d, N)`` pairs meaning ``xi = N / d`` with ``N`` a rank-by-params
    integer matrix.  Floating point only proposes ``N``; every solution is
    confirmed by an integer matrix product.
    """
    roots = np.array(R.roots, dtype=np.int64)
    unit = np.eye(len(R.params), dtype=np.int64)[[R.params.index(R.param_of[a]) for a in R.roots]]
    m = roots[systems]
    b = unit[systems]
    det = np.rint(np.linalg.det(m.astype(float))).astype(np.int64)
    keep = det != 0
    m, b, det = m[keep], b[keep], det[keep]
    if not len(det):
        return []
    x = np.linalg.solve(m.astype(float), b.astype(float))
    n = np.rint(x * det[:, None, None]).astype(np.int64)
    if not np.array_equal(m @ n, det[:, None, None] * b):
        raise InvariantViolation("integer verification of a root system solve failed")
    out = set()
    for d, sol in zip(det.tolist(), n):
        flat = sol.ravel().tolist()
        g = gcd(d, *flat)
        if d < 0:
            g = -g
        out.add((d // g, tuple(v // g for v in flat)))
    return sorted(out)


def _residual_mask(R: RootSystem, dets: np.ndarray, mats: np.ndarray) -> np.ndarray:
    """Vectorised generic count test for points ``mats / dets``."""
    roots = np.array(R.roots, dtype=np.int64)
    unit = np.eye(len(R.params), dtype=np.int64)[[R.params.index(R.param_of[a]) for a in R.roots]]
    values = np.einsum("ar,prs->pas", roots, mats)
    zero = (values == 0).all(axis=2).sum(axis=1)
    equal = (values == dets[:, None, None] * unit[None]).all(axis=2).sum(axis=1)
    return equal == zero + R.rank


def _solve_path(R: RootSystem) -> tuple[np.ndarray, np.ndarray]:
    """Generic residual points from all square systems ``<alpha_i, xi> = k_alpha_i``.

    Every residual point is W0-conjugate to one whose equality roots contain
    the highest root of some length class, so one root of each system is
    fixed to such an anchor.
    """
    params = R.params
    solutions = set()
    for name in params:
        cls = [a for a in R.positive_roots if R.param_of[a] == name]
        if not cls:
            continue
        anchor = max(cls, key=lambda a: sum(R.simple_coefficients[a]))
        i, j = R.index[anchor], R.index[tuple(-x for x in anchor)]
        others = [t for t in range(len(R.roots)) if t not in (i, j)]
        combos = list(combinations(others, R.rank - 1))
        combos = np.array(combos, dtype=np.int64).reshape(len(combos), R.rank - 1)
        systems = np.hstack([np.full((len(combos), 1), i, dtype=np.int64), combos])
        solutions.update(_integer_solutions(R, systems))
    ordered = sorted(solutions)
    dets = np.array([d for d, _ in ordered], dtype=np.int64)
    mats = np.array([flat for _, flat in ordered], dtype=np.int64).reshape(len(ordered), R.rank, len(params))
    keep = _residual_mask(R, dets, mats)
    return dets[keep], mats[keep]


def _as_points(R: RootSystem, dets: np.ndarray, mats: np.ndarray) -> list[tuple[LinForm, ...]]:
    return [
        tuple(LinForm.from_vector([Q(v, d) for v in row], R.params) for row in mat.tolist())
        for d, mat in zip(dets.tolist(), mats)
    ]


def _generic_sample_mask(R: RootSystem, dets, mats, sample) -> np.ndarray:
    """For each point, whether the sample avoids all of its candidate hyperplanes."""
    denominator = 1
    for v in sample.values():
        denominator = denominator * v.denominator // gcd(denominator, v.denominator)
    scaled = np.array([int(sample[p] * denominator) for p in R.params], dtype=np.int64)
    roots = np.array(R.positive_roots, dtype=np.int64)
    unit = np.eye(len(R.params), dtype=np.int64)[[R.params.index(R.param_of[a]) for a in R.positive_roots]]
    values = np.einsum("ar,prs->pas", roots, mats)
    ok = np.ones(len(dets), dtype=bool)
    for sign in (0, 1, -1):
        forms = values - sign * dets[:, None, None] * unit[None]
        nonzero = (forms != 0).any(axis=2)
        vanishes = forms @ scaled == 0
        ok &= ~(nonzero & vanishes).any(axis=1)
    return ok


def _dedupe(points: Iterable, R: RootSystem, sample) -> dict:
    out = {}
    for point in points:
        key = _orbit_key(point, R, sample)
        if key not in out:
            out[key] = _dominant_at_sample(point, R, sample)
    return out


def _is_generic_sample(point, R: RootSystem, sample) -> bool:
    try:
        _check_sample_is_generic(point, R, sample)
    except InvariantViolation:
        return False
    return True


def _choose_sample(R: RootSystem, points: Sequence) -> dict[str, Q]:
    """The first prime-reciprocal sample that meets no hyperplane of any point."""
    for shift in range(50):
        sample = dict(zip(R.params, sample_parameters(len(R.params), shift)))
        if all(_is_generic_sample(p, R, sample) for p in points):
            return sample
    raise InvariantViolation(f"no generic sample parameter found for {R.tag}")


def _partition_families(R: RootSystem) -> list[tuple[str, tuple[LinForm, ...]]]:
    from .bn import dn_sharp_orbits, xi_from_partition
    from .partitions import partitions

    n = R.rank
    if R.family == "A":
        return [(f"({n + 1})", tuple(LinForm.param("k1") for _ in range(n)))]
    if R.family == "B":
        return [(lam.label(), xi_from_partition(lam)) for lam in partitions(n)]
    if R.family == "C":
        half = {"k2": LinForm.param("k2") / 2}
        return [
            (lam.label(), tuple(c.substitute(half) for c in xi_from_partition(lam)))
            for lam in partitions(n)
        ]
    if R.family == "D":
        zero = {"k2": LinForm.const(0)}
        out = []
        for pair in dn_sharp_orbits(n):
            lam = pair[0]
            label = "{" + ",".join(p.label() for p in pair) + "}"
            out.append((label, tuple(c.substitute(zero) for c in xi_from_partition(lam))))
        return out
    raise DomainError(f"no partition description for {R.tag}")


@lru_cache(maxsize=None)
def _enumerate(R: RootSystem, method: str) -> tuple[GenericFamily, ...]:
    if method == "auto":
        method = "partitions" if R.family in "ABCD" else "solve"
    if method == "partitions":
        named = _partition_families(R)
        for label, point in named:
            if not is_generic_residual(point, R):
                raise InvariantViolation(f"family {label} of {R.tag} is not generically residual")
        sample = _choose_sample(R, [p for _, p in named])
    elif method == "solve":
        dets, mats = _solve_path(R)
        sample = None
        for shift in range(50):
            trial = dict(zip(R.params, sample_parameters(len(R.params), shift)))
            if _generic_sample_mask(R, dets, mats, trial).all():
                sample = trial
                break
        if sample is None:
            raise InvariantViolation(f"no generic sample parameter found for {R.tag}")
        named = _label_solutions(R, _dedupe(_as_points(R, dets, mats), R, sample), sample)
    else:
        raise DomainError(f"unknown enumeration method {method!r}")
    families = []
    seen = set()
    for label, point in named:
        key = _orbit_key(point, R, sample)
        if key in seen:
            raise InvariantViolation(f"family {label} of {R.tag} is listed twice")
        seen.add(key)
        _check_sample_is_generic(point, R, sample)
        rep = _dominant_at_sample(point, R, sample)
        families.append(GenericFamily(
            root_system=R.tag,
            representative=rep,
            label=label,
            singular=tuple(regularity_hyperplanes(rep, R)),
            display=tuple(point),
        ))
    return tuple(families)


def _label_solutions(R: RootSystem, found: dict, sample) -> list[tuple[str, tuple]]:
    """Attach reference labels to orbits found by solving, in reference order."""
    if golden.has_reference(R.tag):
        reference = [(row["label"], row["values"]) for row in golden.reference_orbits(R.tag)]
    elif R.family in "ABCD":
        reference = _partition_families(R)
    else:
        reference = []
    named = []
    remaining = dict(found)
    for label, point in reference:
        key = _orbit_key(point, R, sample)
        if key in remaining:
            remaining.pop(key)
            named.append((label, point))
    for i, key in enumerate(sorted(remaining), start=1):
        named.append((f"unlisted{i}", remaining[key]))
    return named


def enumerate_generic_orbits(R: RootSystem, method: str = "auto") -> list[GenericFamily]:
    """All W0-orbits of generic residual points of ``R``.

    ``method`` is ``"solve"`` (square root systems, practical up to rank 4),
    ``"partitions"`` (classical types) or ``"auto"``.  F4 and G2 orbits carry
    the labels ``f1..f8`` and ``g1..g3``; classical orbits carry partition labels.
    """
    return list(_enumerate(R, method))


# -- regularity -----------------------------------------------------------

def candidate_hyperplanes(point, R: RootSystem) -> set[Hyperplane]:
    out = set()
    for a in R.positive_roots:
        v = R.pair(a, point)
        v = v if isinstance(v, LinForm) else LinForm.const(v)
        kf = R.k_form(a)
        for form in (v, v - kf, v + kf):
            if not form.is_zero():
                out.add(Hyperplane(form))
    return out


def sample_on_hyperplane(h: Hyperplane, others: Iterable[Hyperplane], params, shift: int) -> dict[str, Q]:
    lead = h.form.names()[0]
    free = [p for p in params if p != lead]
    others = [o for o in others if o != h]
    for attempt in range(shift, shift + 50):
        values = dict(zip(free, sample_parameters(len(free), attempt)))
        values[lead] = Q(0)
        values[lead] = -h.form.evaluate(values)
        if all(o.form.evaluate(values) != 0 for o in others):
            return values
    raise InvariantViolation(f"no generic sample found on {h}")


def regularity_hyperplanes(family, R: RootSystem | None = None, shift: int = 0) -> list[Hyperplane]:
    """Hyperplanes of parameters where the family stops being residual, sorted.

    Each candidate ``<alpha, xi> = 0`` or ``<alpha, xi> = +-k_alpha`` is
    tested at one generic point on it; ``shift`` selects different samples.
    """
    if isinstance(family, GenericFamily):
        R = R or build_root_system(family.root_system)
        point = family.representative
    else:
        point = tuple(family)
    if R is None:
        raise DomainError("a root system is required for a bare point")
    _check_dimension(point, R)
    candidates = candidate_hyperplanes(point, R)
    singular = []
    for h in candidates:
        k = sample_on_hyperplane(h, candidates, R.params, shift)
        if not is_linear_residual(point_at(point, k), k, R):
            singular.append(h)
    return sorted(singular)


def evaluate_orbit(family: GenericFamily, k, R: RootSystem | None = None) -> tuple[Q, ...]:
    """The dominant point of ``W0 xi(k)``; raises if ``xi(k)`` is not residual."""
    R = R or build_root_system(family.root_system)
    values = parameter_values(R, k)
    point = point_at(family.representative, values)
    if not is_linear_residual(point, values, R):
        hit = [h for h in family.singular if h.contains(values)]
        where = ", ".join(str(h) for h in hit) or "no listed hyperplane"
        raise NotResidualError(
            f"family {family.name()} is not residual at k={format_vector(values.values())} ({where})",
            hit,
        )
    return dominant_representative(point, R)


def confluence_table(R: RootSystem, k, families: Sequence[GenericFamily] | None = None) -> list[ConfluenceRow]:
    """Group the families regular at ``k`` by their dominant point; rows sorted by diagram."""
    families = enumerate_generic_orbits(R) if families is None else families
    values = parameter_values(R, k)
    fibers: dict[tuple, list[str]] = {}
    for fam in families:
        point = point_at(fam.representative, values)
        if is_linear_residual(point, values, R):
            fibers.setdefault(dominant_representative(point, R), []).append(fam.name())
    return [ConfluenceRow(d, tuple(fibers[d])) for d in sorted(fibers)]


# -- output ---------------------------------------------------------------

def family_to_json(family: GenericFamily) -> dict:
    return {
        "label": family.name(),
        "coords": [str(c) for c in family.representative],
        "singular": [str(h.form) for h in family.singular],
    }


def families_to_json(families: Sequence[GenericFamily]) -> str:
    return json.dumps([family_to_json(f) for f in families], indent=2)


def _coordinate_header(R: RootSystem) -> str:
    return "simple-root values" if R.coords == "omega" else "coordinates"


def _product(hyperplanes: Sequence[Hyperplane]) -> str:
    if not hyperplanes:
        return "always regular"
    return "".join(f"({h.integral_form()})" for h in hyperplanes) + " ≠ 0"


def families_to_markdown(R: RootSystem, families: Sequence[GenericFamily]) -> str:
    lines = [
        f"| orbit | {_coordinate_header(R)} | regular parameters |",
        "|---|---|---|",
    ]
    for fam in families:
        lines.append(f"| {fam.name()} | {format_vector(fam.shown)} | {_product(fam.singular)} |")
    return "\n".join(lines) + "\n"


def confluence_to_json(R: RootSystem, k, rows: Sequence[ConfluenceRow]) -> str:
    values = parameter_values(R, k)
    return json.dumps({
        "type": R.tag,
        "k": [format_rational(values[p]) for p in R.params],
        "rows": [
            {"diagram": [format_rational(x) for x in row.diagram], "fiber": list(row.fiber)}
            for row in rows
        ],
    }, indent=2)


def confluence_to_markdown(R: RootSystem, k, rows: Sequence[ConfluenceRow]) -> str:
    values = parameter_values(R, k)
    lines = [
        f"k = {format_vector(values[p] for p in R.params)}",
        "",
        "| diagram | fiber |",
        "|---|---|",
    ]
    for i, row in enumerate(rows, start=1):
        lines.append(f"| D{i} = {format_vector(row.diagram)} | {', '.join(row.fiber)} |")
    return "\n".join(lines) + "\n"
