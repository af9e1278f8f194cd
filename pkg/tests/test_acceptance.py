"""Acceptance criteria 1-12, all exact.

Run with ``pytest tests/test_acceptance.py``; the terminal summary prints
one ``criterion N: PASS|FAIL`` line per criterion.
"""

import time

import pytest

from hecke_residual import golden, residual
from hecke_residual.bn import (
    bala_carter,
    bala_carter_inverse,
    conjugation_symmetry_holds,
    distinguished_diagrams,
    dn_sharp_orbits,
    enumerate_distinguished_unipotent,
    fiber_partitions,
    fiber_size_formula,
    is_regular_ratio,
    jumps_of,
    reconstruct_from_jumps,
    residual_on_line,
    xi_from_partition,
)
from hecke_residual.classification import (
    alcove_vertices,
    count_affine_ds,
    count_graded_ds,
    generic_total,
    middle_vertex_count,
    vertex_elliptic_count,
)
from hecke_residual.linform import Q
from hecke_residual.mfunction import (
    build_m_function,
    evaluate_m,
    is_regular_via_m,
    normalized_exponents,
    partition_from_m,
)
from hecke_residual.partitions import Partition, partition_count, partitions
from hecke_residual.residual import (
    candidate_hyperplanes,
    confluence_table,
    enumerate_generic_orbits,
    evaluate_orbit,
    is_generic_residual,
    is_linear_residual,
    point_at,
    regularity_hyperplanes,
    sample_on_hyperplane,
    sample_parameters,
)
from hecke_residual.roots import build_root_system, dominant_representative, elliptic_class_count, type_b

criterion = pytest.mark.criterion
HALF_INTEGERS = [Q(i, 2) for i in range(-10, 11)]


def _same_orbit(R, a, b, sample):
    return dominant_representative(point_at(a, sample), R) == dominant_representative(point_at(b, sample), R)


@pytest.fixture(scope="module")
def f4():
    return build_root_system("F4")


@pytest.fixture(scope="module")
def f4_families(f4):
    return {fam.label: fam for fam in enumerate_generic_orbits(f4, method="solve")}


# -- 1: F4 enumeration ----------------------------------------------------------

@criterion(1)
def test_f4_enumeration_matches_reference_orbits(f4):
    residual._enumerate.cache_clear()
    start = time.perf_counter()
    families = enumerate_generic_orbits(f4, method="solve")
    elapsed = time.perf_counter() - start
    assert elapsed < 30
    assert len(families) == 8
    reference = golden.reference_orbits("F4")
    sample = dict(zip(f4.params, sample_parameters(2, 7)))
    matched = set()
    for row in reference:
        assert is_generic_residual(row["values"], f4)
        hits = [fam.label for fam in families if _same_orbit(f4, fam.representative, row["values"], sample)]
        assert hits == [row["label"]]
        matched.add(row["label"])
    assert matched == {f"f{i}" for i in range(1, 9)}


# -- 2: F4 singular hyperplanes ---------------------------------------------------

@criterion(2)
@pytest.mark.parametrize("row", golden.reference_orbits("F4"), ids=lambda r: r["label"])
def test_f4_singular_hyperplanes(f4, f4_families, row):
    fam = f4_families[row["label"]]
    got = {h.form for h in regularity_hyperplanes(fam, f4)}
    assert got == {form.monic() for form in row["factors"]}


@criterion(2)
def test_f8_is_singular_only_on_the_axes(f4_families):
    assert sorted(str(h) for h in f4_families["f8"].singular) == ["k1 = 0", "k2 = 0"]


# -- 3: confluence tables -----------------------------------------------------------

def _confluence_cases():
    return [(tag, case) for tag in ("F4", "G2") for case in golden.reference_confluence(tag)]


@criterion(3)
@pytest.mark.parametrize(
    "tag,case", _confluence_cases(),
    ids=lambda v: v if isinstance(v, str) else ",".join(str(x) for x in v["k"]),
)
def test_confluence_rows(tag, case):
    rows = confluence_table(build_root_system(tag), case["k"])
    got = [(row.diagram, set(row.fiber)) for row in rows]
    want = sorted((d, set(f)) for d, f in case["rows"])
    assert got == want


@criterion(3)
def test_confluence_case_counts():
    assert len(golden.reference_confluence("F4")) == 7
    assert len(golden.reference_confluence("G2")) == 3


# -- 4: B_n enumeration by two routes ---------------------------------------------

def _orbit_set(R, families, sample):
    return {dominant_representative(point_at(f.representative, sample), R) for f in families}


@criterion(4)
@pytest.mark.parametrize("n", range(1, 7))
def test_bn_orbits_by_solving_and_by_partitions(n):
    R = type_b(n)
    by_partitions = enumerate_generic_orbits(R, method="partitions")
    assert len(by_partitions) == partition_count(n)
    assert {f.label for f in by_partitions} == {lam.label() for lam in partitions(n)}
    if n <= 4:
        residual._enumerate.cache_clear()
        solved = enumerate_generic_orbits(R, method="solve")
        sample = dict(zip(R.params, sample_parameters(2)))
        assert len(solved) == partition_count(n)
        assert _orbit_set(R, solved, sample) == _orbit_set(R, by_partitions, sample)


@criterion(4)
def test_b6_has_eleven_orbits():
    assert len(enumerate_generic_orbits(build_root_system("B6"), method="partitions")) == 11


# -- 5: extremities criterion against the count test -------------------------------

@criterion(5)
@pytest.mark.parametrize("n", range(1, 6))
def test_extremities_agree_with_count_test(n):
    bad = [
        (lam.label(), m)
        for lam in partitions(n)
        for m in HALF_INTEGERS
        if is_regular_ratio(lam, m) != residual_on_line(lam, m)
    ]
    assert bad == []


# -- 6: fiber sizes ----------------------------------------------------------------

@criterion(6)
@pytest.mark.parametrize("n", range(1, 9))
def test_fiber_sizes(n):
    for twice_m in range(-2 * n, 2 * n + 1):
        m = Q(twice_m, 2)
        regular = {lam for lam in partitions(n) if is_regular_ratio(lam, m)}
        covered = set()
        for u in enumerate_distinguished_unipotent(n, m):
            fiber = fiber_partitions(bala_carter(u, m), m, n)
            assert len(fiber) == fiber_size_formula(u), (str(u), m)
            assert covered.isdisjoint(fiber)
            covered |= set(fiber)
        assert covered == regular, m


# -- 7: roundtrips --------------------------------------------------------------------

@criterion(7)
@pytest.mark.parametrize("n", range(1, 9))
def test_jump_and_unipotent_roundtrips(n):
    for twice_m in range(-2 * n, 2 * n + 1):
        m = Q(twice_m, 2)
        diagrams = distinguished_diagrams(n, m)
        assert len({D.vector() for D in diagrams}) == len(diagrams)
        for D in diagrams:
            assert reconstruct_from_jumps(jumps_of(D, m), m) == D
            assert bala_carter(bala_carter_inverse(D, m), m) == D
        unipotents = enumerate_distinguished_unipotent(n, m)
        assert len(unipotents) == len(diagrams)
        for u in unipotents:
            assert bala_carter_inverse(bala_carter(u, m), m) == u


# -- 8: two regularity tests and the m-function ------------------------------------------

@criterion(8)
@pytest.mark.parametrize("tag", ["B2", "B3", "B4", "F4", "G2"])
def test_zero_locus_agrees_with_count_test(tag):
    R = build_root_system(tag)
    for fam in enumerate_generic_orbits(R):
        cands = candidate_hyperplanes(fam.representative, R)
        samples = [sample_on_hyperplane(h, cands, R.params, shift) for h in cands for shift in (0, 3)]
        samples += [dict(zip(R.params, sample_parameters(len(R.params), s))) for s in (0, 4, 9)]
        for k in samples:
            f = [k[p] / 2 for p in R.params]
            direct = is_linear_residual(point_at(fam.representative, k), k, R)
            assert is_regular_via_m(fam, f) == direct, (fam.name(), k)


@criterion(8)
@pytest.mark.parametrize("n", range(1, 7))
def test_partition_recovered_from_m_function(n):
    R = type_b(n)
    seen = set()
    for lam in partitions(n):
        M = build_m_function((R, xi_from_partition(lam)))
        assert partition_from_m(M) == lam
        key = frozenset(normalized_exponents(M).items())
        assert key not in seen
        seen.add(key)


@criterion(8)
def test_a1_value_at_two():
    fam = enumerate_generic_orbits(build_root_system("A1"))[0]
    assert evaluate_m(build_m_function(fam), [1], 2) == Q(3, 10)


# -- 9: counting ---------------------------------------------------------------------------

@criterion(9)
def test_f4_count_at_equal_parameters():
    assert count_graded_ds("F4", (1, 1)).total == 9


@criterion(9)
def test_g2_count():
    assert count_graded_ds("G2", (2, 1)).total == 2


@criterion(9)
@pytest.mark.parametrize("n", range(2, 7))
def test_bn_count_off_half_integers(n):
    for m in (Q(1, 3), Q(-7, 5), Q(13, 4)):
        assert count_graded_ds(f"B{n}", (1, m)).total == partition_count(n)


@criterion(9)
@pytest.mark.parametrize("tag", ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "B5", "D4", "F4", "G2"])
def test_generic_total_equals_elliptic_classes(tag):
    R = build_root_system(tag)
    assert generic_total(R) == elliptic_class_count(R, method="brute")


# -- 10: D_n ------------------------------------------------------------------------------

@criterion(10)
@pytest.mark.parametrize("n", range(4, 7))
def test_conjugation_has_no_fixed_points(n):
    regular = [lam for lam in partitions(n) if is_regular_ratio(lam, 0)]
    assert regular
    assert all(lam.conjugate() != lam for lam in regular)
    assert all(lam.conjugate() in regular for lam in regular)
    pairs = dn_sharp_orbits(n)
    assert 2 * len(pairs) == len(regular)


@criterion(10)
@pytest.mark.parametrize("n", range(1, 7))
def test_conjugation_symmetry_of_residual_points(n):
    for lam in partitions(n):
        for k in ((Q(1), Q(1, 3)), (Q(2), Q(5, 7)), (Q(1), Q(-3))):
            assert conjugation_symmetry_holds(lam, k), (lam.label(), k)


# -- 11: collapse at k1 = 0 -------------------------------------------------------------------

@criterion(11)
@pytest.mark.parametrize("n", range(2, 7))
def test_collapse_at_zero_first_parameter(n):
    R = type_b(n)
    for fam in enumerate_generic_orbits(R, method="partitions"):
        assert evaluate_orbit(fam, (0, 1), R) == (1,) * n


@criterion(11)
def test_collapse_in_rank_one():
    lam = Partition((1,))
    xi = xi_from_partition(lam)
    assert point_at(xi, {"k1": Q(0), "k2": Q(1)}) == (1,)


# -- 12: affine level ------------------------------------------------------------------------

@criterion(12)
@pytest.mark.parametrize("tag", ["C2", "C3", "G2", "F4"])
def test_affine_vertex_counts_equal_elliptic_counts(tag):
    result = count_affine_ds(tag)
    counts = [c for _, c in result.vertices]
    elliptic = [vertex_elliptic_count(v) for v, _ in result.vertices]
    assert counts == elliptic
    assert result.total == sum(elliptic)


@criterion(12)
@pytest.mark.parametrize("n", [2, 4, 6])
def test_fixed_vertex_of_even_c(n):
    result = count_affine_ds(f"C{n}", lattice="root")
    fixed = [(v, c) for v, c in result.vertices if v.isotropy]
    assert len(fixed) == 1
    v, c = fixed[0]
    d = count_graded_ds([v.factors[0]]).total
    assert c == (d * d + 3 * d) // 2
    assert c == vertex_elliptic_count(v)


@criterion(12)
@pytest.mark.parametrize("tag", ["C2", "C3", "G2", "F4"])
def test_vertex_subsystems_have_full_rank(tag):
    for v in alcove_vertices(tag):
        assert len(v.basis) == len(v.point)
        assert sum(f.rank for f in v.factors) == len(v.point)


@pytest.mark.parametrize("d", range(1, 8))
def test_fixed_vertex_formula(d):
    assert middle_vertex_count(d) == (d * d + 3 * d) // 2
