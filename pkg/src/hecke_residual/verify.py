"""Self-check suites behind ``hecke-residual verify``.

Each suite returns ``Check`` records; a failing check carries a short
counterexample in ``detail``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import golden
from .bn import is_regular_ratio, residual_on_line
from .classification import (
    count_affine_ds,
    count_graded_ds,
    generic_total,
    middle_vertex_count,
    vertex_elliptic_count,
)
from .errors import HeckeResidualError
from .linform import Q
from .mfunction import build_m_function, evaluate_m, is_regular_via_m, separation_check
from .partitions import partitions
from .residual import (
    candidate_hyperplanes,
    confluence_table,
    enumerate_generic_orbits,
    is_generic_residual,
    is_linear_residual,
    point_at,
    sample_on_hyperplane,
    sample_parameters,
)
from .roots import build_root_system, dominant_representative, elliptic_class_count

__all__ = ["Check", "SUITES", "run_suite"]


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}" + (f": {self.detail}" if self.detail and not self.ok else "")


def _orbit_tables(tag: str) -> list[Check]:
    R = build_root_system(tag)
    found = {fam.label: fam for fam in enumerate_generic_orbits(R, method="solve")}
    reference = golden.reference_orbits(tag)
    sample = dict(zip(R.params, sample_parameters(len(R.params), 7)))
    checks = []
    extra = sorted(set(found) - {row["label"] for row in reference})
    checks.append(Check(f"{tag} orbit count", len(found) == len(reference) and not extra,
                        f"found {sorted(found)}"))
    for row in reference:
        fam = found.get(row["label"])
        if fam is None:
            checks.append(Check(f"{tag} {row['label']} values", False, "not found"))
            continue
        same = (
            is_generic_residual(row["values"], R)
            and dominant_representative(point_at(row["values"], sample), R)
            == dominant_representative(point_at(fam.representative, sample), R)
        )
        checks.append(Check(f"{tag} {row['label']} values", same, str(fam.representative)))
        got = {h.form for h in fam.singular}
        want = {f.monic() for f in row["factors"]}
        checks.append(Check(f"{tag} {row['label']} hyperplanes", got == want,
                            f"got {sorted(map(str, got))}, want {sorted(map(str, want))}"))
    return checks


def _confluence_tables(tag: str) -> list[Check]:
    R = build_root_system(tag)
    checks = []
    for case in golden.reference_confluence(tag):
        rows = confluence_table(R, case["k"])
        got = {row.diagram: set(row.fiber) for row in rows}
        want = {d: set(f) for d, f in case["rows"]}
        k = ",".join(str(x) for x in case["k"])
        checks.append(Check(f"{tag} confluence k=({k})", got == want, f"got {got}"))
    return checks


def suite_tables() -> list[Check]:
    return _orbit_tables("F4") + _confluence_tables("F4") + _orbit_tables("G2") + _confluence_tables("G2")


def suite_oracle(max_n: int = 5) -> list[Check]:
    checks = []
    ms = [Q(i, 2) for i in range(-10, 11)]
    for n in range(1, max_n + 1):
        bad = [
            (lam.label(), str(m))
            for lam in partitions(n)
            for m in ms
            if is_regular_ratio(lam, m) != residual_on_line(lam, m)
        ]
        checks.append(Check(f"B{n} extremities vs count test", not bad, str(bad[:5])))
    return checks


COUNT_TYPES = ("A1", "A2", "A3", "A4", "B2", "B3", "B4", "B5", "C3", "D4", "F4", "G2")


def suite_counts() -> list[Check]:
    checks = [
        Check("F4 k=(1,1) total 9", count_graded_ds("F4", (1, 1)).total == 9),
        Check("G2 k=(2,1) total 2", count_graded_ds("G2", (2, 1)).total == 2),
    ]
    for tag in COUNT_TYPES:
        R = build_root_system(tag)
        total, ell = generic_total(R), elliptic_class_count(R, method="brute")
        checks.append(Check(f"{tag} generic total equals elliptic classes", total == ell,
                            f"total {total}, elliptic {ell}"))
    return checks


def _agreement(tag: str) -> Check:
    R = build_root_system(tag)
    bad = []
    for fam in enumerate_generic_orbits(R):
        cands = candidate_hyperplanes(fam.representative, R)
        samples = [sample_on_hyperplane(h, cands, R.params, 0) for h in cands]
        samples.append(dict(zip(R.params, sample_parameters(len(R.params), 3))))
        for k in samples:
            f = [k[p] / 2 for p in R.params]
            direct = is_linear_residual(point_at(fam.representative, k), k, R)
            if is_regular_via_m(fam, f) != direct:
                bad.append((fam.name(), k))
    return Check(f"{tag} zero locus agrees with count test", not bad, str(bad[:3]))


def suite_mfun() -> list[Check]:
    fam = enumerate_generic_orbits(build_root_system("A1"))[0]
    value = evaluate_m(build_m_function(fam), [1], 2)
    checks = [Check("A1 value at f=1, base 2 is 3/10", value == Fraction(3, 10), str(value))]
    checks += [_agreement(tag) for tag in ("B2", "B3", "B4", "F4", "G2")]
    for n in range(1, 7):
        ok, report = separation_check(n)
        checks.append(Check(f"B{n} partitions recovered from their functions", ok,
                            "; ".join(r for r in report if "recovered as" in r or "proportional" in r)))
    return checks


def suite_affine() -> list[Check]:
    checks = []
    for tag, lattice in (("C2", "weight"), ("C3", "weight"), ("G2", "weight"), ("F4", "weight"),
                         ("C2", "root"), ("C3", "root"), ("C4", "root")):
        result = count_affine_ds(tag, lattice=lattice)
        ell = [vertex_elliptic_count(v) for v, _ in result.vertices]
        counts = [c for _, c in result.vertices]
        checks.append(Check(f"{result.datum} per-vertex counts equal elliptic classes", counts == ell,
                            f"counts {counts}, elliptic {ell}"))
    for d in range(1, 6):
        checks.append(Check(f"fixed vertex count d={d}", middle_vertex_count(d) == _swap_orbits(d),
                            f"{middle_vertex_count(d)} vs {_swap_orbits(d)}"))
    return checks


def _swap_orbits(d: int) -> int:
    """Orbits of the swap on ordered pairs, with each diagonal pair doubled."""
    pairs = [(i, j, copy) for i in range(d) for j in range(d) for copy in range(2 if i == j else 1)]
    return len({(min(i, j), max(i, j), copy) for i, j, copy in pairs})


SUITES = {
    "tables": suite_tables,
    "oracle": suite_oracle,
    "counts": suite_counts,
    "mfun": suite_mfun,
    "affine": suite_affine,
}


def run_suite(name: str) -> list[Check]:
    try:
        return SUITES[name]()
    except HeckeResidualError as exc:
        return [Check(f"{name} suite", False, str(exc))]
