import itertools

import pytest
from hypothesis import given, settings, strategies as st

from hecke_residual import golden
from hecke_residual.errors import DomainError, NotResidualError
from hecke_residual.linform import LinForm, Q
from hecke_residual.residual import (
    Hyperplane,
    confluence_table,
    enumerate_generic_orbits,
    evaluate_orbit,
    is_generic_residual,
    is_linear_residual,
    point_at,
    regularity_hyperplanes,
    sample_parameters,
)
from hecke_residual.roots import build_root_system, dominant_representative, weyl_group

L = LinForm.parse
positive = st.fractions(min_value=Q(1, 9), max_value=10, max_denominator=9)


def families(tag):
    return {f.name(): f for f in enumerate_generic_orbits(build_root_system(tag))}


def test_count_test_examples():
    A1, B2 = build_root_system("A1"), build_root_system("B2")
    assert is_linear_residual((3,), (3,), A1)
    assert is_linear_residual((Q(1, 3), Q(4, 3)), (1, Q(1, 3)), B2)
    assert not is_linear_residual((Q(1, 3), Q(4, 3)), (1, 1), B2)


def test_generic_count_test_examples():
    B2, F4 = build_root_system("B2"), build_root_system("F4")
    assert is_generic_residual((L("k2"), L("k1 + k2")), B2)
    assert not is_generic_residual((L("k1"), L("k1")), B2)
    assert is_generic_residual((L("0"), L("k1"), L("0"), L("k2 - k1")), F4)


def test_generic_points_must_be_homogeneous():
    with pytest.raises(DomainError):
        is_generic_residual((L("k2 + 1"), L("k1")), build_root_system("B2"))


def test_wrong_parameter_count():
    with pytest.raises(DomainError):
        is_linear_residual((1, 1), (1,), build_root_system("B2"))


def test_g2_and_b3_orbits():
    assert set(families("G2")) == {"g1", "g2", "g3"}
    assert set(families("B3")) == {"(3)", "(2,1)", "(1,1,1)"}


def test_g2_third_orbit_representative():
    G2 = build_root_system("G2")
    g3 = families("G2")["g3"]
    sample = dict(zip(G2.params, sample_parameters(2, 5)))
    shown = (L("k1"), L("1/2*k2 - 1/2*k1"))
    assert dominant_representative(point_at(shown, sample), G2) == dominant_representative(g3.at(sample), G2)


def test_singular_hyperplanes_examples():
    assert sorted(str(h) for h in families("G2")["g1"].singular) == ["2*k1 + 3*k2 = 0", "k1 + 2*k2 = 0"]
    assert sorted(str(h) for h in families("B2")["(2)"].singular) == ["k1 + 2*k2 = 0", "k1 + k2 = 0"]


@pytest.mark.parametrize("tag", ["B2", "B3", "G2", "F4"])
def test_hyperplanes_do_not_depend_on_the_sample(tag):
    R = build_root_system(tag)
    for fam in enumerate_generic_orbits(R):
        lists = [regularity_hyperplanes(fam, R, shift) for shift in (0, 2, 5)]
        assert lists[0] == lists[1] == lists[2]
        assert tuple(lists[0]) == fam.singular


def test_hyperplane_text_round_trip():
    h = Hyperplane.parse("2*k1 + 3*k2 = 0")
    assert Hyperplane.parse(str(h)) == h
    assert h.contains({"k1": Q(3), "k2": Q(-2)})
    assert not h.contains({"k1": Q(1), "k2": Q(1)})


def test_evaluation_examples():
    g3 = families("G2")["g3"]
    assert evaluate_orbit(g3, (1, 1)) == (1, 0)
    assert evaluate_orbit(families("B2")["(2)"], (1, 0)) == (1, 0)


def test_evaluation_on_singular_hyperplane_reports_it():
    fam = families("B2")["(2)"]
    with pytest.raises(NotResidualError) as info:
        evaluate_orbit(fam, (1, -1))
    assert [str(h) for h in info.value.hyperplanes] == ["k1 + k2 = 0"]
    assert info.value.exit_code == 1


@settings(max_examples=40, deadline=None)
@given(positive, positive, st.integers(min_value=1, max_value=5))
def test_evaluation_scales_and_ignores_sign(k1, k2, scale):
    for tag in ("B3", "G2"):
        R = build_root_system(tag)
        for fam in enumerate_generic_orbits(R):
            k = (k1, k2)
            if any(h.contains(dict(zip(R.params, k))) for h in fam.singular):
                continue
            base = evaluate_orbit(fam, k, R)
            assert evaluate_orbit(fam, (scale * k1, scale * k2), R) == tuple(scale * x for x in base)
            assert evaluate_orbit(fam, (-k1, -k2), R) == base


def test_confluence_examples():
    F4 = build_root_system("F4")
    rows = confluence_table(F4, (1, 1))
    assert len(rows) == 4
    fibers = {row.diagram: set(row.fiber) for row in rows}
    assert fibers[(0, 1, 0, 0)] == {"f4", "f6", "f8"}
    G2 = build_root_system("G2")
    rows = confluence_table(G2, (2, 1))
    assert [(row.diagram, row.fiber) for row in rows] == [((Q(1, 2), Q(1, 2)), ("g3",)), ((2, 1), ("g1",))]
    rows = confluence_table(build_root_system("B2"), (1, 0))
    assert [(row.diagram, set(row.fiber)) for row in rows] == [((1, 0), {"(2)", "(1,1)"})]


@pytest.mark.parametrize("tag,k", [("F4", (1, 2)), ("G2", (3, 1)), ("B4", (1, Q(1, 2))), ("B3", (1, 0))])
def test_fibers_partition_the_regular_families(tag, k):
    R = build_root_system(tag)
    values = dict(zip(R.params, k))
    regular = {
        f.name() for f in enumerate_generic_orbits(R)
        if is_linear_residual(point_at(f.representative, values), values, R)
    }
    fibers = [row.fiber for row in confluence_table(R, k)]
    flat = [name for fiber in fibers for name in fiber]
    assert len(flat) == len(set(flat))
    assert set(flat) == regular
    for row in confluence_table(R, k):
        for name in row.fiber:
            assert evaluate_orbit(families(tag)[name], k, R) == row.diagram


@pytest.mark.parametrize("tag,k", [("B2", (1, 1)), ("B2", (2, 1)), ("G2", (1, 1)), ("A2", (1,))])
def test_every_residual_point_on_a_grid_is_an_evaluated_family(tag, k):
    """Direct search over a small grid of dominant points."""
    R = build_root_system(tag)
    found = {row.diagram for row in confluence_table(R, k)}
    grid = [Q(i, 2) for i in range(0, 9)]
    for point in itertools.product(grid, repeat=R.rank):
        if is_linear_residual(point, k, R):
            assert dominant_representative(point, R) in found


def test_orbit_labels_follow_reference_tables():
    for tag in ("F4", "G2"):
        assert set(families(tag)) == {row["label"] for row in golden.reference_orbits(tag)}


def test_representatives_are_dominant_at_the_sample():
    for tag in ("F4", "G2", "B4"):
        R = build_root_system(tag)
        sample = dict(zip(R.params, sample_parameters(len(R.params))))
        for fam in enumerate_generic_orbits(R):
            point = point_at(fam.representative, sample)
            assert dominant_representative(point, R) == point


def test_group_images_of_generic_points_stay_residual():
    R = build_root_system("G2")
    for fam in enumerate_generic_orbits(R):
        point = fam.representative
        for a in R.positive_roots:
            assert is_generic_residual(R.reflect(a, point), R)
    assert len(weyl_group(R)) == 12
