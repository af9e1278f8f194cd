"""Root systems of types A, B, C, D, F4, G2 and their Weyl groups.

Points of ``V`` are stored as coordinate tuples.  Classical types B, C, D use
the standard basis ``e_1, ..., e_n``; types A, F4 and G2 use the basis of
fundamental coweights, so that the coordinates of a point are exactly the
values of the simple roots on it.  In both cases a root is stored as the
integer vector ``a`` with ``<alpha, v> = sum(a_i * v_i)``.

>>> R = build_root_system("B2")
>>> R.positive_roots
((1, -1), (1, 1), (1, 0), (0, 1))
>>> dominant_representative((0, 1), R)
(Fraction(1, 1), Fraction(0, 1))
>>> elliptic_class_count(build_root_system("F4"))
9
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction as Q
from functools import cached_property, lru_cache
from math import factorial
from typing import Sequence

from .errors import ConfigurationError, DomainError, UnsupportedError
from .linform import LinForm
from .partitions import partition_count, partitions

__all__ = [
    "RootSystem",
    "build_root_system",
    "parse_type",
    "dominant_representative",
    "to_dominant",
    "apply_word",
    "is_dominant",
    "weyl_group",
    "weyl_group_order",
    "conjugacy_classes",
    "elliptic_class_count",
    "orbit",
    "type_b",
    "type_c",
]

_TAG = re.compile(r"^\s*([ABCDFG])\s*(\d+)\s*$")


def parse_type(tag: str) -> tuple[str, int]:
    m = _TAG.match(tag.upper())
    if not m:
        raise ConfigurationError(f"unrecognised root system type {tag!r}")
    family, rank = m.group(1), int(m.group(2))
    minimum = {"A": 1, "B": 2, "C": 3, "D": 4}
    if family == "F" and rank != 4 or family == "G" and rank != 2:
        raise ConfigurationError(f"no root system of type {family}{rank}")
    if family in minimum and rank < minimum[family]:
        raise ConfigurationError(f"type {family}{rank} needs rank >= {minimum[family]}")
    return family, rank


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


@dataclass(frozen=True, eq=False)
class RootSystem:
    """A reduced crystallographic root system with a parameter class per root.

    ``roots`` lists the positive roots followed by their negatives in the
    same order.  ``param_of`` maps each root to ``"k1"`` or ``"k2"``.
    """

    tag: str
    family: str
    rank: int
    coords: str
    positive_roots: tuple[tuple[int, ...], ...]
    simple_roots: tuple[tuple[int, ...], ...]
    params: tuple[str, ...]
    param_of: dict = field(repr=False)
    euclidean: dict = field(repr=False)
    coroot: dict = field(repr=False)
    simple_coefficients: dict = field(repr=False)

    @cached_property
    def roots(self) -> tuple[tuple[int, ...], ...]:
        return self.positive_roots + tuple(tuple(-x for x in a) for a in self.positive_roots)

    @cached_property
    def index(self) -> dict:
        return {a: i for i, a in enumerate(self.roots)}

    def param_class(self, root) -> str:
        return self.param_of[tuple(root)]

    def pair(self, root, v):
        """The value ``<root, v>``; works for rational and linear-form coordinates."""
        total = 0
        for c, x in zip(root, v):
            if c:
                total = total + c * x
        return total

    def reflect(self, root, v):
        """The reflection ``s_root`` applied to ``v``."""
        value = self.pair(root, v)
        check = self.coroot[tuple(root)]
        return tuple(x - value * c for x, c in zip(v, check))

    def simple_values(self, v):
        return tuple(self.pair(a, v) for a in self.simple_roots)

    def k_of(self, root, k: Sequence):
        """The parameter value attached to ``root`` when ``k = (k1, k2, ...)``."""
        return k[self.params.index(self.param_of[tuple(root)])]

    def k_form(self, root) -> LinForm:
        return LinForm.param(self.param_of[tuple(root)])

    @cached_property
    def highest_root(self) -> tuple[int, ...]:
        return max(self.positive_roots, key=lambda a: sum(self.simple_coefficients[a]))

    @cached_property
    def marks(self) -> tuple[int, ...]:
        return self.simple_coefficients[self.highest_root]

    def __repr__(self):
        return f"RootSystem({self.tag})"

    def __eq__(self, other):
        return isinstance(other, RootSystem) and self.tag == other.tag

    def __hash__(self):
        return hash(self.tag)


def _euclidean_simple(family: str, rank: int) -> list[tuple[Q, ...]]:
    h = Q(1, 2)
    if family == "A":
        n = rank + 1
        return [tuple(Q(int(j == i) - int(j == i + 1)) for j in range(n)) for i in range(rank)]
    if family == "F":
        return [
            (Q(0), Q(1), Q(-1), Q(0)),
            (Q(0), Q(0), Q(1), Q(-1)),
            (Q(0), Q(0), Q(0), Q(1)),
            (h, -h, -h, -h),
        ]
    if family == "G":
        return [(Q(-2), Q(1), Q(1)), (Q(1), Q(-1), Q(0))]
    raise AssertionError(family)


def _close_under_simple_reflections(simple_euclid):
    """All roots generated from the simple roots, with their simple-root coefficients."""
    rank = len(simple_euclid)
    norms = [_dot(a, a) for a in simple_euclid]
    start = []
    for i in range(rank):
        c = [0] * rank
        c[i] = 1
        start.append(tuple(c))
    gram = [[_dot(a, b) for b in simple_euclid] for a in simple_euclid]
    seen = set(start) | {tuple(-x for x in c) for c in start}
    queue = deque(seen)
    while queue:
        c = queue.popleft()
        for i in range(rank):
            inner = sum(c[j] * gram[j][i] for j in range(rank))
            n = 2 * inner / norms[i]
            if n.denominator != 1:
                raise AssertionError("not crystallographic")
            d = list(c)
            d[i] -= int(n)
            d = tuple(d)
            if d not in seen:
                seen.add(d)
                queue.append(d)
    return seen


def _build_from_simple(tag, family, rank) -> RootSystem:
    simple_e = _euclidean_simple(family, rank)
    coeffs = _close_under_simple_reflections(simple_e)
    positive = sorted(
        (c for c in coeffs if all(x >= 0 for x in c)),
        key=lambda c: (sum(c), tuple(-x for x in c)),
    )
    dim = len(simple_e[0])

    def euclid(c):
        return tuple(sum(c[i] * simple_e[i][j] for i in range(rank)) for j in range(dim))

    roots = positive + [tuple(-x for x in c) for c in positive]
    eu = {c: euclid(c) for c in roots}
    norms = {c: _dot(eu[c], eu[c]) for c in roots}
    long_norm = max(norms.values())
    if family == "A":
        params = ("k1",)
        param_of = {c: "k1" for c in roots}
    else:
        params = ("k1", "k2")
        param_of = {c: "k1" if norms[c] == long_norm else "k2" for c in roots}
    coroot = {}
    for c in roots:
        coroot[c] = tuple(2 * _dot(simple_e[j], eu[c]) / norms[c] for j in range(rank))
    simple = tuple(tuple(int(i == j) for j in range(rank)) for i in range(rank))
    return RootSystem(
        tag=tag,
        family=family,
        rank=rank,
        coords="omega",
        positive_roots=tuple(positive),
        simple_roots=simple,
        params=params,
        param_of=param_of,
        euclidean=eu,
        coroot=coroot,
        simple_coefficients={c: c for c in roots},
    )


def _unit(n, i, s=1):
    v = [0] * n
    v[i] = s
    return v


def _build_classical(tag, family, n) -> RootSystem:
    positive = []
    for i in range(n):
        for j in range(i + 1, n):
            a = _unit(n, i)
            a[j] = -1
            positive.append(tuple(a))
    for i in range(n):
        for j in range(i + 1, n):
            a = _unit(n, i)
            a[j] = 1
            positive.append(tuple(a))
    short_scale = {"B": 1, "C": 2}.get(family)
    if short_scale:
        positive += [tuple(_unit(n, i, short_scale)) for i in range(n)]
    simple = [tuple(_unit(n, i)[:i + 1] + [-1] + [0] * (n - i - 2)) for i in range(n - 1)]
    if family == "B":
        simple.append(tuple(_unit(n, n - 1)))
    elif family == "C":
        simple.append(tuple(_unit(n, n - 1, 2)))
    else:
        a = _unit(n, n - 2)
        a[n - 1] = 1
        simple.append(tuple(a))
    roots = positive + [tuple(-x for x in a) for a in positive]
    if family == "B":
        params = ("k1", "k2")
        param_of = {a: "k2" if sum(map(abs, a)) == 1 else "k1" for a in roots}
    elif family == "C":
        params = ("k1", "k2")
        param_of = {a: "k2" if sum(map(abs, a)) == 2 and max(map(abs, a)) == 2 else "k1" for a in roots}
    else:
        params = ("k1",)
        param_of = {a: "k1" for a in roots}
    eu = {a: tuple(Q(x) for x in a) for a in roots}
    coroot = {a: tuple(Q(2 * x, _dot(a, a)) for x in a) for a in roots}
    simple_coeffs = {a: _solve_in_basis(simple, a) for a in roots}
    return RootSystem(
        tag=tag,
        family=family,
        rank=n,
        coords="e",
        positive_roots=tuple(positive),
        simple_roots=tuple(simple),
        params=params,
        param_of=param_of,
        euclidean=eu,
        coroot=coroot,
        simple_coefficients=simple_coeffs,
    )


def _solve_in_basis(basis, target) -> tuple[int, ...]:
    """Coefficients of ``target`` in the (invertible, square) ``basis``."""
    n = len(basis)
    rows = [[Q(basis[j][i]) for j in range(n)] + [Q(target[i])] for i in range(len(target))]
    coeffs = _gauss_solve(rows, n)
    if any(c.denominator != 1 for c in coeffs):
        raise AssertionError("root is not an integral combination of simple roots")
    return tuple(int(c) for c in coeffs)


def _gauss_solve(rows, n):
    rows = [r[:] for r in rows]
    pivot_row = 0
    pivots = []
    for col in range(n):
        p = next((r for r in range(pivot_row, len(rows)) if rows[r][col]), None)
        if p is None:
            raise ValueError("singular system")
        rows[pivot_row], rows[p] = rows[p], rows[pivot_row]
        inv = 1 / rows[pivot_row][col]
        rows[pivot_row] = [x * inv for x in rows[pivot_row]]
        for r in range(len(rows)):
            if r != pivot_row and rows[r][col]:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[pivot_row])]
        pivots.append(pivot_row)
        pivot_row += 1
    for r in range(pivot_row, len(rows)):
        if rows[r][-1]:
            raise ValueError("inconsistent system")
    return [rows[i][-1] for i in range(n)]


@lru_cache(maxsize=None)
def build_root_system(tag: str) -> RootSystem:
    """Build the root system named by ``tag`` (``"A3"``, ``"B2"``, ``"F4"``, ...)."""
    family, rank = parse_type(tag)
    tag = "F4" if family == "F" else "G2" if family == "G" else f"{family}{rank}"
    if family in "AFG":
        return _build_from_simple(tag, family, rank)
    return _build_classical(tag, family, rank)


def is_dominant(v, R: RootSystem) -> bool:
    return all(R.pair(a, v) >= 0 for a in R.simple_roots)


def to_dominant(v, R: RootSystem) -> tuple[tuple, tuple[int, ...]]:
    """Return ``(w v, word)`` with ``w v`` dominant and ``w`` a word in simple reflections.

    The word lists simple-root indices in the order they are applied.
    """
    v = tuple(Q(x) for x in v)
    if len(v) != R.rank:
        raise DomainError(f"expected {R.rank} coordinates, got {len(v)}")
    word = []
    while True:
        for i, a in enumerate(R.simple_roots):
            if R.pair(a, v) < 0:
                v = R.reflect(a, v)
                word.append(i)
                break
        else:
            return v, tuple(word)


def apply_word(word: Sequence[int], v, R: RootSystem) -> tuple:
    """Apply the simple reflections listed in ``word`` (first entry first)."""
    for i in word:
        v = R.reflect(R.simple_roots[i], v)
    return tuple(v)


def dominant_representative(v, R: RootSystem) -> tuple[Q, ...]:
    """The unique point of the closed dominant chamber in the orbit ``W0 v``."""
    v = tuple(Q(x) for x in v)
    if len(v) != R.rank:
        raise DomainError(f"expected {R.rank} coordinates, got {len(v)}")
    if R.family in "BC":
        return tuple(sorted((abs(x) for x in v), reverse=True))
    return to_dominant(v, R)[0]


def orbit(v, R: RootSystem) -> set[tuple]:
    """The full orbit ``W0 v`` by breadth-first search over simple reflections."""
    v = tuple(v)
    seen = {v}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for a in R.simple_roots:
            y = R.reflect(a, x)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


# -- the Weyl group as permutations of the roots ------------------------

def weyl_group_order(R: RootSystem) -> int:
    n = R.rank
    return {
        "A": lambda: factorial(n + 1),
        "B": lambda: 2 ** n * factorial(n),
        "C": lambda: 2 ** n * factorial(n),
        "D": lambda: 2 ** (n - 1) * factorial(n),
        "F": lambda: 1152,
        "G": lambda: 12,
    }[R.family]()


def _simple_permutations(R: RootSystem) -> list[tuple[int, ...]]:
    perms = []
    for a in R.simple_roots:
        perms.append(tuple(R.index[_reflect_root(R, a, b)] for b in R.roots))
    return perms


def _reflect_root(R: RootSystem, a, b) -> tuple[int, ...]:
    ea, eb = R.euclidean[a], R.euclidean[b]
    n = 2 * _dot(ea, eb) / _dot(ea, ea)
    return tuple(int(x - n * y) for x, y in zip(b, a))


def _compose(p, q):
    """The permutation ``p o q``."""
    return tuple(p[i] for i in q)


@lru_cache(maxsize=None)
def weyl_group(R: RootSystem) -> tuple[tuple[int, ...], ...]:
    """All elements of ``W0`` as permutations of ``R.roots``, identity first."""
    gens = _simple_permutations(R)
    identity = tuple(range(len(R.roots)))
    seen = {identity: None}
    queue = deque([identity])
    while queue:
        w = queue.popleft()
        for g in gens:
            x = _compose(g, w)
            if x not in seen:
                seen[x] = None
                queue.append(x)
    return tuple(seen)


def conjugacy_classes(R: RootSystem, extra_generators: Sequence[tuple[int, ...]] = ()) -> list[list[tuple[int, ...]]]:
    """Conjugacy classes of the group generated by the simple reflections and ``extra_generators``."""
    gens = _simple_permutations(R) + list(extra_generators)
    inverse = [_invert(g) for g in gens]
    elements = _generate(gens)
    unseen = set(elements)
    classes = []
    for w in elements:
        if w not in unseen:
            continue
        cls = {w}
        queue = deque([w])
        while queue:
            x = queue.popleft()
            for g, gi in zip(gens, inverse):
                y = _compose(g, _compose(x, gi))
                if y not in cls:
                    cls.add(y)
                    queue.append(y)
        unseen -= cls
        classes.append(sorted(cls))
    return classes


def _invert(p):
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def _generate(gens) -> list[tuple[int, ...]]:
    identity = tuple(range(len(gens[0])))
    seen = {identity: None}
    queue = deque([identity])
    while queue:
        w = queue.popleft()
        for g in gens:
            x = _compose(g, w)
            if x not in seen:
                seen[x] = None
                queue.append(x)
    return list(seen)


def _matrix_on_roots(R: RootSystem, w) -> list[list[int]]:
    """Matrix of ``w`` on the root lattice in the basis of simple roots (columns are images)."""
    cols = [R.simple_coefficients[R.roots[w[R.index[a]]]] for a in R.simple_roots]
    return [[cols[j][i] for j in range(R.rank)] for i in range(R.rank)]


def _det(m) -> Q:
    m = [[Q(x) for x in row] for row in m]
    n = len(m)
    det = Q(1)
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c]), None)
        if p is None:
            return Q(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            if m[r][c]:
                f = m[r][c] / m[c][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return det


def is_elliptic(R: RootSystem, w) -> bool:
    """True iff ``w`` fixes no nonzero vector, i.e. ``det(1 - w) != 0``."""
    m = _matrix_on_roots(R, w)
    n = len(m)
    return _det([[int(i == j) - m[i][j] for j in range(n)] for i in range(n)]) != 0


def _closed_form_elliptic(R: RootSystem) -> int | None:
    n = R.rank
    if R.family == "A":
        return 1
    if R.family in "BC":
        return partition_count(n)
    if R.family == "D":
        return sum(1 for lam in partitions(n) if len(lam) % 2 == 0)
    return None


def elliptic_class_count(R: RootSystem, method: str = "auto", limit: int = 10 ** 6) -> int:
    """Number of conjugacy classes of ``W0`` consisting of elliptic elements.

    ``method`` is ``"brute"`` (enumerate the group), ``"closed"`` (partition
    counts for classical types) or ``"auto"`` (brute force when the group has at
    most ``limit`` elements).
    """
    if method not in ("auto", "brute", "closed"):
        raise ValueError(f"unknown method {method!r}")
    if method == "closed" or (method == "auto" and weyl_group_order(R) > limit):
        value = _closed_form_elliptic(R)
        if value is None:
            raise UnsupportedError(f"no closed form for the elliptic classes of {R.tag}")
        return value
    return sum(1 for cls in conjugacy_classes(R) if is_elliptic(R, cls[0]))


@lru_cache(maxsize=None)
def type_b(n: int) -> RootSystem:
    """Type B_n for any n >= 1; rank 1 is the degenerate system {+-e1} with parameter k2."""
    if n < 1:
        raise ConfigurationError("type B needs rank >= 1")
    if n >= 2:
        return build_root_system(f"B{n}")
    return _build_classical("B1", "B", 1)


@lru_cache(maxsize=None)
def type_c(n: int) -> RootSystem:
    """Type C_n for any n >= 1, in e-coordinates with ``2e_i`` in class ``k2``."""
    if n < 1:
        raise ConfigurationError("type C needs rank >= 1")
    if n >= 3:
        return build_root_system(f"C{n}")
    return _build_classical(f"C{n}", "C", n)
