import pytest
from hypothesis import given, settings, strategies as st

from hecke_residual.classification import (
    SimpleFactor,
    alcove_vertices,
    canonical_factor,
    count_affine_ds,
    count_graded_ds,
    gcc_table,
    middle_vertex_count,
    spectral_diagram,
    vertex_elliptic_count,
    wreath_elliptic_count,
)
from hecke_residual.errors import ConfigurationError, DomainError, UnsupportedError
from hecke_residual.linform import Q
from hecke_residual.partitions import partition_count
from hecke_residual.roots import build_root_system, elliptic_class_count

nonzero = st.fractions(min_value=-6, max_value=6, max_denominator=6).filter(bool)


def test_graded_examples():
    result = count_graded_ds("F4", (1, 1))
    assert result.total == 9
    assert dict(result.multiplicities)["f8"] == 2
    assert count_graded_ds("G2", (2, 1)).total == 2
    assert "g2" not in dict(count_graded_ds("G2", (2, 1)).multiplicities)


@pytest.mark.parametrize("n", range(2, 9))
def test_bn_generic_count_is_partition_count(n):
    assert count_graded_ds(f"B{n}", (1, Q(2, 7))).total == partition_count(n)


def test_products_multiply():
    result = count_graded_ds("A1xC3", [(1,), (1, Q(1, 3))])
    assert result.total == 3
    assert all(" x " in label for label, _ in result.multiplicities)


def test_small_rank_coincidences():
    R, k = canonical_factor("C", 2, (1, 2))
    assert R.tag == "B2" and k == (2, 1)
    assert canonical_factor("B", 1, (1, 3))[0].tag == "A1"
    assert canonical_factor("D", 3, (1,))[0].tag == "A3"
    assert canonical_factor("A", 0, ())[0] is None
    with pytest.raises(DomainError):
        canonical_factor("D", 2, (1,))


def test_unsupported_and_malformed_types():
    with pytest.raises(UnsupportedError):
        count_graded_ds("E6", (1,))
    with pytest.raises(ConfigurationError):
        count_graded_ds("F4-ish", (1, 1))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["F4", "G2", "B3", "C3"]), nonzero, nonzero)
def test_count_equals_weighted_table(tag, k1, k2):
    R = build_root_system(tag)
    table = gcc_table(R, (k1, k2))
    assert count_graded_ds(tag, (k1, k2)).total == sum(m for _, fiber in table for _, m in fiber)
    assert all(m >= 1 for _, fiber in table for _, m in fiber)


def test_weighted_table_doubles_f8():
    table = gcc_table(build_root_system("F4"), (1, 1))
    weights = {name: m for _, fiber in table for name, m in fiber}
    assert weights == {"f1": 1, "f2": 1, "f3": 1, "f4": 1, "f5": 1, "f6": 1, "f7": 1, "f8": 2}


def test_vertex_types():
    assert [v.type_name for v in alcove_vertices("C2")] == ["C2", "A1xA1", "C2"]
    assert sorted(v.type_name for v in alcove_vertices("G2")) == ["A1xA1", "A2", "G2"]


@pytest.mark.parametrize("tag,lattice", [("C2", "weight"), ("C3", "weight"), ("C4", "root"), ("G2", "weight"), ("F4", "weight")])
def test_vertex_subsystems(tag, lattice):
    vertices = alcove_vertices(tag, lattice)
    for v in vertices:
        assert sum(f.rank for f in v.factors) == len(v.point)
        assert len(v.basis) == len(v.point)
        systems = [canonical_factor(f.family, f.rank, f.k)[0] for f in v.factors]
        assert v.root_count == sum(len(R.roots) for R in systems if R is not None)


def test_c2_affine_total():
    result = count_affine_ds("C2")
    assert [c for _, c in result.vertices] == [2, 1, 2]
    assert result.total == 5


@pytest.mark.parametrize("tag,lattice", [("C3", "weight"), ("G2", "weight"), ("C3", "root"), ("C4", "root")])
def test_affine_counts_match_vertex_elliptic_classes(tag, lattice):
    result = count_affine_ds(tag, lattice=lattice)
    for v, c in result.vertices:
        assert c == vertex_elliptic_count(v)


@pytest.mark.parametrize("d", range(1, 7))
def test_fixed_vertex_pairs(d):
    assert middle_vertex_count(d) == (d * d + 3 * d) // 2


@pytest.mark.parametrize("tag", ["A1", "B2", "G2"])
def test_wreath_classes_follow_the_pair_count(tag):
    R = build_root_system(tag)
    d = elliptic_class_count(R, method="brute")
    assert wreath_elliptic_count(R) == middle_vertex_count(d)


def test_spectral_diagram_of_c2():
    data = spectral_diagram("C2", "weight").to_json()
    assert data["special"] == 0
    assert len(data["nodes"]) == 3
    assert data["end_weights"] == {"plus": "f0 + f2", "minus": "-f0 + f2"}


def test_root_lattice_diagram_is_symmetric():
    data = spectral_diagram("C3", "root").to_json()
    weights = [node["weight"] for node in data["nodes"]]
    assert weights[0] == weights[-1]
    assert data["symmetry"]


def test_affine_rejects_wrong_parameter_count():
    with pytest.raises(DomainError):
        count_affine_ds("C2", f=(1,))


def test_simple_factor_tag():
    assert SimpleFactor("C", 3, (1, 2)).tag == "C3"
