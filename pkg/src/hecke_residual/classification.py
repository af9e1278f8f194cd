"""Discrete series counts for graded Hecke algebras and for affine Hecke algebras via alcove vertices.

>>> count_graded_ds("F4", (1, 1)).total
9
>>> count_graded_ds("G2", (2, 1)).total
2
>>> [v.type_name for v in alcove_vertices("G2")]
['G2', 'A1xA1', 'A2']
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from math import prod
from typing import Mapping, Sequence

from .errors import ConfigurationError, DomainError, InvariantViolation, UnsupportedError
from .linform import LinForm, Q, as_rational, format_rational, format_vector
from .residual import (
    GenericFamily,
    confluence_table,
    enumerate_generic_orbits,
    is_linear_residual,
    point_at,
    sample_parameters,
)
from .roots import (
    RootSystem,
    _compose,
    _det,
    _generate,
    _invert,
    _simple_permutations,
    build_root_system,
    elliptic_class_count,
    parse_type,
    type_b,
    type_c,
)

__all__ = [
    "SimpleFactor",
    "GradedCount",
    "AlcoveVertex",
    "AffineCount",
    "SpectralDiagram",
    "canonical_factor",
    "count_graded_ds",
    "gcc_table",
    "generic_total",
    "generic_total_equals_elliptic",
    "alcove_vertices",
    "count_affine_ds",
    "spectral_diagram",
    "middle_vertex_count",
    "wreath_elliptic_count",
    "vertex_elliptic_count",
    "identify_component",
    "affine_to_json",
    "affine_to_markdown",
]

_DOUBLED = {("F4", "f8")}


# -- graded level ------------------------------------------------------------

@dataclass(frozen=True)
class SimpleFactor:
    """An irreducible factor ``family``/``rank`` with parameter values in the factor's own convention."""

    family: str
    rank: int
    k: tuple[Q, ...]

    @property
    def tag(self) -> str:
        return f"{self.family}{self.rank}"


def canonical_factor(family: str, rank: int, k: Sequence) -> tuple[RootSystem | None, tuple[Q, ...]]:
    """A buildable root system isomorphic to the factor, with ``k`` moved to its parameter order.

    Small-rank coincidences are resolved here: ``B1 = C1 = A1`` (the single
    parameter is the second entry), ``C2 = B2`` with the two parameters
    exchanged, ``D3 = A3`` and ``D2 = A1 x A1`` (rejected: it is not
    irreducible).  Rank zero returns ``None``.
    """
    k = tuple(as_rational(x) for x in k)
    if rank == 0:
        return None, ()
    if family in "BC" and rank == 1:
        return build_root_system("A1"), (k[-1],)
    if family == "C" and rank == 2:
        return build_root_system("B2"), (k[1], k[0])
    if family == "D" and rank == 3:
        return build_root_system("A3"), k[:1]
    if family == "D" and rank < 3:
        raise DomainError(f"D{rank} is not irreducible")
    R = build_root_system(f"{family}{rank}")
    if len(k) != len(R.params):
        raise DomainError(f"{R.tag} takes {len(R.params)} parameters, got {len(k)}")
    return R, k


@dataclass(frozen=True)
class GradedCount:
    multiplicities: tuple[tuple[str, int], ...]
    total: int


def _factor_multiplicities(R: RootSystem, k: tuple[Q, ...]) -> list[tuple[str, int]]:
    values = dict(zip(R.params, k))
    out = []
    for fam in enumerate_generic_orbits(R):
        if is_linear_residual(point_at(fam.representative, values), values, R):
            out.append((fam.name(), 2 if (R.tag, fam.label) in _DOUBLED else 1))
    return out


_PRODUCT = re.compile(r"([A-Z])(\d+)")


def _parse_product(tag: str) -> list[tuple[str, int]]:
    pieces = tag.replace("×", "x").split("x")
    out = []
    for piece in pieces:
        match = _PRODUCT.fullmatch(piece.strip())
        if not match:
            raise ConfigurationError(f"cannot read factor {piece!r} of {tag!r}")
        out.append((match.group(1), int(match.group(2))))
    return out


def count_graded_ds(factors, k=None) -> GradedCount:
    """Discrete series of the graded algebra of a product of irreducible systems.

    ``factors`` is a type tag such as ``"F4"`` together with ``k``, or a
    sequence of ``SimpleFactor`` / ``(tag, k)`` pairs.  Every family regular
    at the parameters counts once, except ``f8`` of F4 which counts twice.
    """
    if isinstance(factors, str):
        parsed = _parse_product(factors)
        if len(parsed) == 1:
            factors = [SimpleFactor(*parsed[0], tuple(k))]
        else:
            if k is None or len(k) != len(parsed):
                raise DomainError("give one parameter tuple per factor")
            factors = [SimpleFactor(f, r, tuple(kk)) for (f, r), kk in zip(parsed, k)]
    normalized = []
    for fac in factors:
        if not isinstance(fac, SimpleFactor):
            tag, kk = fac
            family, rank = _parse_product(tag)[0]
            fac = SimpleFactor(family, rank, tuple(kk))
        normalized.append(fac)
    per_factor = []
    for fac in normalized:
        if fac.family == "E":
            raise UnsupportedError(f"{fac.tag} is out of scope")
        R, kk = canonical_factor(fac.family, fac.rank, fac.k)
        if R is not None:
            per_factor.append(_factor_multiplicities(R, kk))
    rows = []
    for combo in product(*per_factor):
        rows.append((" x ".join(label for label, _ in combo), prod(m for _, m in combo)))
    return GradedCount(tuple(rows), sum(m for _, m in rows))


def gcc_table(R: RootSystem, k) -> list[tuple[tuple[Q, ...], list[tuple[str, int]]]]:
    """Confluence rows with the multiplicity of each family in the fiber."""
    out = []
    for row in confluence_table(R, k):
        out.append((row.diagram, [(name, 2 if (R.tag, name) in _DOUBLED else 1) for name in row.fiber]))
    return out


def _is_generic(R: RootSystem, k: Sequence[Q]) -> bool:
    """True when ``k`` avoids every singular hyperplane of every family of ``R``."""
    values = dict(zip(R.params, k))
    return all(not h.contains(values) for fam in enumerate_generic_orbits(R) for h in fam.singular)


def _generic_k(R: RootSystem) -> tuple[Q, ...]:
    for shift in range(50):
        k = sample_parameters(len(R.params), shift)
        if _is_generic(R, k):
            return k
    raise InvariantViolation(f"no generic parameter found for {R.tag}")


def generic_total(R: RootSystem) -> int:
    return count_graded_ds([SimpleFactor(R.family, R.rank, _generic_k(R))]).total


def generic_total_equals_elliptic(R: RootSystem, method: str = "brute") -> bool:
    return generic_total(R) == elliptic_class_count(R, method=method)


# -- alcove vertices ---------------------------------------------------------

def _affine_root_system(tag: str) -> RootSystem:
    family, rank = parse_type(tag) if tag[0] != "C" else ("C", int(tag[1:]))
    if family == "C":
        return type_c(rank)
    if family == "B":
        return type_b(rank)
    return build_root_system(tag)


@dataclass(frozen=True)
class AlcoveVertex:
    """A vertex of the closed fundamental alcove.

    ``point`` lists the values of the simple roots at the vertex; ``node`` is
    the affine node whose removal leaves the basis ``basis`` (gradients, as
    simple-root coefficient vectors) of the subsystem of roots taking integer
    values there.  ``factors`` carry the induced parameters.
    """

    node: int
    point: tuple[Q, ...]
    basis: tuple[tuple[int, ...], ...]
    factors: tuple[SimpleFactor, ...]
    root_count: int
    isotropy: bool = False
    partner: int | None = None

    @property
    def type_name(self) -> str:
        return "x".join(f.tag for f in self.factors) or "trivial"

    @property
    def k_e(self) -> tuple[tuple[str, tuple[Q, ...]], ...]:
        return tuple((f.tag, f.k) for f in self.factors)


def _gradients(R: RootSystem) -> list[tuple[int, ...]]:
    """Gradients of the affine simple roots as simple-root coefficient vectors, node 0 first."""
    theta = R.simple_coefficients[R.highest_root]
    simple = [tuple(int(i == j) for j in range(R.rank)) for i in range(R.rank)]
    return [tuple(-c for c in theta)] + simple


def _euclid(R: RootSystem, coeffs) -> tuple[Q, ...]:
    out = [Q(0)] * len(R.euclidean[R.simple_roots[0]])
    for c, a in zip(coeffs, R.simple_roots):
        if c:
            out = [x + c * y for x, y in zip(out, R.euclidean[a])]
    return tuple(out)


def _norm(v) -> Q:
    return sum(x * x for x in v)


def _components(vectors: Sequence[tuple[Q, ...]]) -> list[list[int]]:
    n = len(vectors)
    adjacent = [[j for j in range(n) if j != i and sum(x * y for x, y in zip(vectors[i], vectors[j]))] for i in range(n)]
    seen, out = set(), []
    for start in range(n):
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in adjacent[i]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        out.append(sorted(comp))
    return out


def _cartan(vectors) -> list[list[Q]]:
    return [[2 * sum(x * y for x, y in zip(a, b)) / _norm(b) for b in vectors] for a in vectors]


def identify_component(vectors: Sequence[tuple[Q, ...]]) -> tuple[str, int, list[int], list[int]]:
    """Type of a connected simple system from rank, root lengths and Cartan determinant.

    Returns ``(family, rank, long node indices, short node indices)``.
    """
    r = len(vectors)
    norms = [_norm(v) for v in vectors]
    top = max(norms)
    long_nodes = [i for i in range(r) if norms[i] == top]
    short_nodes = [i for i in range(r) if norms[i] != top]
    det = _det(_cartan(vectors))
    if not short_nodes:
        degrees = [sum(1 for j in range(r) if j != i and sum(x * y for x, y in zip(vectors[i], vectors[j]))) for i in range(r)]
        if det == r + 1 and max(degrees, default=0) <= 2:
            return "A", r, long_nodes, short_nodes
        if det == 4 and r >= 4:
            return "D", r, long_nodes, short_nodes
        raise UnsupportedError(f"simply laced component of rank {r} and determinant {det} is out of scope")
    if r == 2 and top / min(norms) == 3:
        return "G", 2, long_nodes, short_nodes
    if r == 4 and det == 1:
        return "F", 4, long_nodes, short_nodes
    if det == 2:
        if len(short_nodes) == 1:
            return "B", r, long_nodes, short_nodes
        if len(long_nodes) == 1:
            return "C", r, long_nodes, short_nodes
    raise InvariantViolation(f"unrecognized component with norms {norms}")


def _factor_parameters(family: str, long_weights, short_weights) -> tuple[Q, ...]:
    def single(weights):
        if len(set(weights)) != 1:
            raise InvariantViolation(f"conjugate nodes carry different weights {weights}")
        return weights[0]

    if family in "AD":
        return (single(long_weights),)
    if family == "C":
        return (single(short_weights), single(long_weights))
    return (single(long_weights), single(short_weights))


def _closure_count(R: RootSystem, basis) -> int:
    """Number of roots generated from ``basis`` under its own reflections."""
    vectors = [_euclid(R, b) for b in basis]
    roots = set(vectors) | {tuple(-x for x in v) for v in vectors}
    frontier = list(roots)
    while frontier:
        new = []
        for v in frontier:
            for b in vectors:
                c = 2 * sum(x * y for x, y in zip(v, b)) / _norm(b)
                w = tuple(x - c * y for x, y in zip(v, b))
                if w not in roots:
                    roots.add(w)
                    new.append(w)
        frontier = new
    return len(roots)


def _vertex_subsystem(R: RootSystem, point) -> int:
    """Number of roots of ``R`` taking integer values at ``point``."""
    count = 0
    for a in R.roots:
        value = sum(c * x for c, x in zip(R.simple_coefficients[a], point))
        if value.denominator == 1:
            count += 1
    return count


def _rank(vectors) -> int:
    rows = [list(v) for v in vectors]
    rank, col = 0, 0
    width = len(rows[0]) if rows else 0
    while rank < len(rows) and col < width:
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col] / rows[rank][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank


def _weights_from(datum: "AffineDatum", f: Mapping[str, Q]) -> list[Q]:
    return [w.evaluate(f) for w in datum.weights]


@dataclass(frozen=True)
class AffineDatum:
    """An affine datum: a finite system, symbolic node weights in log-parameters, and a diagram symmetry."""

    name: str
    root_system: RootSystem
    weights: tuple[LinForm, ...]
    log_params: tuple[str, ...]
    flip: tuple[int, ...] | None = None


def _datum(tag: str, lattice: str = "weight") -> AffineDatum:
    tag = tag.replace("^(1)", "")
    family = tag[0]
    if lattice not in ("weight", "root"):
        raise ConfigurationError(f"unknown lattice {lattice!r}")
    if lattice == "root" and family != "C":
        raise UnsupportedError(f"the root lattice datum is supported for type C only, not {tag}")
    if family == "E":
        raise UnsupportedError(f"{tag} is out of scope")
    R = _affine_root_system(tag)
    f = {name: LinForm.param(name) for name in ("f0", "f1", "f2")}
    if family == "C":
        n = R.rank
        if n < 2:
            raise ConfigurationError("affine type C needs rank >= 2")
        middle = [2 * f["f1"]] * (n - 1)
        if lattice == "weight":
            weights = [f["f2"] - f["f0"]] + middle + [f["f2"] + f["f0"]]
            return AffineDatum(f"C{n}^(1)", R, tuple(weights), ("f0", "f1", "f2"))
        weights = [f["f2"]] + middle + [f["f2"]]
        return AffineDatum(f"C{n}^(1) root lattice", R, tuple(weights), ("f1", "f2"), flip=tuple(range(n, -1, -1)))
    grads = _gradients(R)
    weights = []
    for g in grads:
        a = _root_from_coefficients(R, g)
        weights.append(2 * f["f" + R.param_of[a][1:]])
    return AffineDatum(f"{R.tag}^(1)", R, tuple(weights), tuple("f" + p[1:] for p in R.params))


def _root_from_coefficients(R: RootSystem, coeffs) -> tuple[int, ...]:
    for a in R.roots:
        if R.simple_coefficients[a] == tuple(coeffs):
            return a
    raise InvariantViolation(f"no root with coefficients {coeffs}")


def _vertices(datum: AffineDatum, weights: Sequence[Q]) -> list[AlcoveVertex]:
    R = datum.root_system
    grads = _gradients(R)
    marks = (1,) + R.marks
    out = []
    for node in range(R.rank + 1):
        point = tuple(Q(int(j + 1 == node), marks[node]) for j in range(R.rank))
        rest = [i for i in range(R.rank + 1) if i != node]
        basis = tuple(grads[i] for i in rest)
        vectors = [_euclid(R, b) for b in basis]
        if _rank(vectors) != R.rank:
            raise InvariantViolation(f"vertex {node} of {datum.name} has a subsystem of lower rank")
        count = _vertex_subsystem(R, point)
        if _closure_count(R, basis) != count:
            raise InvariantViolation(f"vertex {node} of {datum.name}: basis does not generate the integral roots")
        factors = []
        for comp in _components(vectors):
            family, rank, long_nodes, short_nodes = identify_component([vectors[i] for i in comp])
            if (family, rank) == ("B", 2) and R.family == "C":
                family = "C"
            lw = [weights[rest[comp[i]]] for i in long_nodes]
            sw = [weights[rest[comp[i]]] for i in short_nodes]
            factors.append(SimpleFactor(family, rank, _factor_parameters(family, lw, sw)))
        factors.sort(key=lambda fac: (fac.family, fac.rank))
        partner = datum.flip[node] if datum.flip else None
        out.append(AlcoveVertex(
            node=node,
            point=point,
            basis=basis,
            factors=tuple(factors),
            root_count=count,
            isotropy=partner == node,
            partner=partner,
        ))
    return out


def _default_f(datum: AffineDatum) -> dict[str, Q]:
    """The first prime-reciprocal sample at which every vertex factor is generic."""
    for shift in range(50):
        f = dict(zip(datum.log_params, sample_parameters(len(datum.log_params), shift)))
        vertices = _vertices(datum, _weights_from(datum, f))
        if all(
            R is None or _is_generic(R, k)
            for v in vertices
            for R, k in (canonical_factor(fac.family, fac.rank, fac.k) for fac in v.factors)
        ):
            return f
    raise InvariantViolation(f"no generic log-parameters found for {datum.name}")


def _f_map(datum: AffineDatum, f) -> dict[str, Q]:
    if f is None:
        return _default_f(datum)
    if isinstance(f, Mapping):
        return {name: as_rational(f[name]) for name in datum.log_params}
    f = tuple(as_rational(x) for x in f)
    if len(f) != len(datum.log_params):
        raise DomainError(f"{datum.name} takes log-parameters {', '.join(datum.log_params)}")
    return dict(zip(datum.log_params, f))


def alcove_vertices(tag: str, lattice: str = "weight", f=None) -> list[AlcoveVertex]:
    """Vertices of the fundamental alcove with their integral-root subsystems.

    ``f`` gives the log-parameters of the datum (a generic sample when
    omitted).  For the type C root lattice datum the diagram flip pairs
    vertex ``i`` with ``n - i``; only one vertex per pair is returned.
    """
    datum = _datum(tag, lattice)
    values = _f_map(datum, f)
    vertices = _vertices(datum, _weights_from(datum, values))
    if datum.flip:
        vertices = [v for v in vertices if v.partner is None or v.partner >= v.node]
    return vertices


def middle_vertex_count(d: int) -> int:
    """Unordered pairs from a set of ``d`` elements, with the diagonal counted twice."""
    return d * (d - 1) // 2 + 2 * d


@dataclass(frozen=True)
class AffineCount:
    datum: str
    vertices: tuple[tuple[AlcoveVertex, int], ...]
    total: int


def count_affine_ds(tag: str, f=None, lattice: str = "weight") -> AffineCount:
    """Discrete series of the affine algebra as a sum over alcove vertices up to the diagram symmetry."""
    datum = _datum(tag, lattice)
    values = _f_map(datum, f)
    rows = []
    for v in alcove_vertices(tag, lattice, values):
        if v.isotropy:
            (leg, other) = v.factors
            if leg != other:
                raise InvariantViolation(f"the fixed vertex of {datum.name} has unequal legs")
            d = count_graded_ds([leg]).total
            rows.append((v, middle_vertex_count(d)))
        else:
            rows.append((v, count_graded_ds(list(v.factors)).total))
    return AffineCount(datum.name, tuple(rows), sum(c for _, c in rows))


def _factor_elliptic(fac: SimpleFactor, method: str) -> int:
    R, _ = canonical_factor(fac.family, fac.rank, fac.k)
    return 1 if R is None else elliptic_class_count(R, method=method)


def vertex_elliptic_count(v: AlcoveVertex, method: str = "brute") -> int:
    """Elliptic conjugacy classes of the vertex group, including the flip at a fixed vertex."""
    if v.isotropy:
        leg = v.factors[0]
        R, _ = canonical_factor(leg.family, leg.rank, leg.k)
        return wreath_elliptic_count(R)
    return prod(_factor_elliptic(fac, method) for fac in v.factors)


@lru_cache(maxsize=None)
def wreath_elliptic_count(R: RootSystem) -> int:
    """Elliptic classes of ``W x W`` extended by the swap of the two copies, by brute force."""
    m = len(R.roots)
    gens = []
    for g in _simple_permutations(R):
        gens.append(tuple(g) + tuple(range(m, 2 * m)))
        gens.append(tuple(range(m)) + tuple(m + i for i in g))
    gens.append(tuple(range(m, 2 * m)) + tuple(range(m)))
    inverse = [_invert(g) for g in gens]
    elements = _generate(gens)
    unseen = set(elements)
    count = 0
    simple = [R.index[a] for a in R.simple_roots]
    basis = simple + [m + i for i in simple]
    for w in elements:
        if w not in unseen:
            continue
        cls, frontier = {w}, [w]
        while frontier:
            x = frontier.pop()
            for g, gi in zip(gens, inverse):
                y = _compose(g, _compose(x, gi))
                if y not in cls:
                    cls.add(y)
                    frontier.append(y)
        unseen -= cls
        if _doubled_is_elliptic(R, w, basis):
            count += 1
    return count


def _doubled_is_elliptic(R: RootSystem, w, basis) -> bool:
    m = len(R.roots)
    n = R.rank

    def coords(index):
        copy, root = divmod(index, m)
        c = R.simple_coefficients[R.roots[root]]
        return [0] * (n * copy) + list(c) + [0] * (n * (1 - copy))

    cols = [coords(w[b]) for b in basis]
    size = 2 * n
    return _det([[int(i == j) - cols[j][i] for j in range(size)] for i in range(size)]) != 0


# -- spectral diagram --------------------------------------------------------

@dataclass(frozen=True)
class SpectralDiagram:
    datum: str
    nodes: tuple[tuple[int, tuple[int, ...], LinForm], ...]
    edges: tuple[tuple[int, int, int], ...]
    special: int = 0
    symmetry: tuple[tuple[int, ...], ...] = ()
    end_weights: tuple[LinForm, LinForm] | None = None

    def to_json(self) -> dict:
        out = {
            "datum": self.datum,
            "nodes": [
                {"node": i, "gradient": list(g), "weight": str(w)} for i, g, w in self.nodes
            ],
            "edges": [list(e) for e in self.edges],
            "special": self.special,
            "symmetry": [list(o) for o in self.symmetry],
        }
        if self.end_weights:
            out["end_weights"] = {"plus": str(self.end_weights[0]), "minus": str(self.end_weights[1])}
        return out

    def to_markdown(self) -> str:
        lines = [f"spectral diagram {self.datum}", "", "| node | gradient | weight |", "|---|---|---|"]
        for i, g, w in self.nodes:
            mark = " (special)" if i == self.special else ""
            lines.append(f"| a{i}{mark} | {format_vector(g)} | {w} |")
        lines.append("")
        lines.append("bonds: " + ", ".join(f"a{i}-a{j} ({b})" for i, j, b in self.edges))
        if self.symmetry:
            lines.append("symmetry orbits: " + ", ".join("{" + ",".join(f"a{i}" for i in o) + "}" for o in self.symmetry))
        if self.end_weights:
            lines.append(f"end weights: m+k = {self.end_weights[0]}, m-k = {self.end_weights[1]}")
        return "\n".join(lines)


def spectral_diagram(tag: str, lattice: str = "weight") -> SpectralDiagram:
    """The affine diagram with node weights as forms in the log-parameters."""
    datum = _datum(tag, lattice)
    R = datum.root_system
    grads = _gradients(R)
    vectors = [_euclid(R, g) for g in grads]
    edges = []
    for i in range(len(grads)):
        for j in range(i + 1, len(grads)):
            a, b = vectors[i], vectors[j]
            dot = sum(x * y for x, y in zip(a, b))
            if dot:
                bond = int(4 * dot * dot / (_norm(a) * _norm(b)))
                edges.append((i, j, bond))
    symmetry = ()
    if datum.flip:
        symmetry = tuple(sorted({tuple(sorted({i, datum.flip[i]})) for i in range(len(grads))}))
    end = None
    if R.family == "C":
        end = (datum.weights[-1], datum.weights[0])
    return SpectralDiagram(
        datum=datum.name,
        nodes=tuple((i, g, w) for i, (g, w) in enumerate(zip(grads, datum.weights))),
        edges=tuple(edges),
        symmetry=symmetry,
        end_weights=end,
    )


def affine_to_json(result: AffineCount) -> dict:
    return {
        "datum": result.datum,
        "vertices": [
            {
                "node": v.node,
                "subsystem": v.type_name,
                "k_e": [{"factor": tag, "k": [format_rational(x) for x in k]} for tag, k in v.k_e],
                "isotropy": v.isotropy,
                "count": count,
            }
            for v, count in result.vertices
        ],
        "total": result.total,
    }


def affine_to_markdown(result: AffineCount) -> str:
    lines = [f"{result.datum}", "", "| vertex | subsystem | k_e | count |", "|---|---|---|---|"]
    for v, count in result.vertices:
        k_e = "; ".join(f"{tag}: {format_vector(k)}" for tag, k in v.k_e)
        name = f"e{v.node}" + (" (flip fixed)" if v.isotropy else "")
        lines.append(f"| {name} | {v.type_name} | {k_e} | {count} |")
    lines.append(f"| total | | | {result.total} |")
    return "\n".join(lines)
