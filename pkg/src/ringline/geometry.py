"""Neighbour/distant structure of a projective ring line.

Two distinct points are distant when their orbits meet only in the zero
vector and neighbour otherwise.  The relation is kept irreflexive; a
point is trivially neighbour to itself and callers that want that
convention pass ``allow_same=True``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from .cliques import maximum_cliques
from .errors import EmptySector, NotPartition, SamePoint, UnknownFormat
from .line import CyclicSubmodule, ProjectiveLine, Vector

SECTORS = ("unimodular", "nonunimodular", "whole")


def sector_points(line: ProjectiveLine, sector: str) -> tuple[CyclicSubmodule, ...]:
    if sector == "unimodular":
        return line.unimodular_points
    if sector == "nonunimodular":
        return line.nonunimodular_points
    if sector == "whole":
        return line.points
    raise ValueError(f"unknown sector {sector!r}; expected one of {SECTORS}")


def relation(p: CyclicSubmodule, q: CyclicSubmodule, allow_same: bool = False) -> str:
    """"distant" or "neighbour", by exact orbit-set intersection."""
    if p.orbit_set == q.orbit_set:
        if allow_same:
            return "neighbour"
        raise SamePoint(f"relation of point R{p.generator} with itself (pass allow_same=True for the reflexive convention)")
    overlap = len(p.orbit_set & q.orbit_set)
    assert overlap >= 1, "every cyclic submodule contains the zero vector"
    return "distant" if overlap == 1 else "neighbour"


@dataclass(frozen=True)
class RelationGraph:
    """Pairwise orbit-intersection sizes for the points of one sector."""

    points: tuple[CyclicSubmodule, ...]
    intersections: tuple[tuple[int, ...], ...]

    @classmethod
    def from_line(cls, line: ProjectiveLine, sector: str) -> "RelationGraph":
        points = sector_points(line, sector)
        sets = [p.orbit_set for p in points]
        sizes = tuple(
            tuple(len(a & b) for b in sets)
            for a in sets
        )
        return cls(points=points, intersections=sizes)

    def relation(self, i: int, j: int) -> str:
        if i == j:
            raise SamePoint(f"relation of point index {i} with itself")
        return "distant" if self.intersections[i][j] == 1 else "neighbour"

    def neighbour_adjacency(self) -> list[frozenset[int]]:
        n = len(self.points)
        return [
            frozenset(j for j in range(n) if j != i and self.intersections[i][j] > 1)
            for i in range(n)
        ]

    def distant_adjacency(self) -> list[frozenset[int]]:
        n = len(self.points)
        return [
            frozenset(j for j in range(n) if j != i and self.intersections[i][j] == 1)
            for i in range(n)
        ]


def _cliques(line, sector, kind) -> tuple[tuple[CyclicSubmodule, ...], ...]:
    points = sector_points(line, sector)
    if not points:
        raise EmptySector(f"the {sector} sector of {line.ring.label} is empty")
    graph = RelationGraph.from_line(line, sector)
    adjacency = graph.distant_adjacency() if kind == "distant" else graph.neighbour_adjacency()
    _, cliques = maximum_cliques(adjacency)
    return tuple(tuple(points[i] for i in clique) for clique in cliques)


def max_distant_cliques(line: ProjectiveLine, sector: str) -> tuple[tuple[CyclicSubmodule, ...], ...]:
    """Every maximum set of pairwise distant points of the sector."""
    return _cliques(line, sector, "distant")


def max_neighbour_cliques(line: ProjectiveLine, sector: str) -> tuple[tuple[CyclicSubmodule, ...], ...]:
    """Every maximum set of pairwise neighbour points of the sector."""
    return _cliques(line, sector, "neighbour")


@dataclass(frozen=True)
class SectorPartition:
    """The canonical split of the unimodular sector into neighbour classes.

    A class is the set of points through one of the sector's most-shared
    nonzero vectors; any two of them share that vector, so each class is a
    set of pairwise-neighbour points.  ``anchors`` is the lexicographically
    least maximum distant clique, ``classes[k]`` the class containing
    ``anchors[k]``.  ``anchor_sets_checked`` counts the maximum distant
    cliques verified to pick exactly one point per class; since the classes
    do not depend on the clique, every clique yields this same partition.
    """

    anchors: tuple[CyclicSubmodule, ...]
    classes: tuple[tuple[CyclicSubmodule, ...], ...]
    anchor_sets_checked: int

    @property
    def class_sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)


def _vector_classes(points) -> list[frozenset[int]]:
    """Distinct maximum-size point sets of the form {p : v in orbit(p)}, v != 0."""
    through: dict = {}
    for index, point in enumerate(points):
        for v in point.orbit:
            if v != (0, 0):
                through.setdefault(v, set()).add(index)
    if not through:
        return []
    best = max(len(s) for s in through.values())
    return sorted(
        {frozenset(s) for s in through.values() if len(s) == best},
        key=sorted,
    )


def unimodular_partition(line: ProjectiveLine) -> SectorPartition:
    """Partition the unimodular sector into its most-shared-vector classes.

    The classes must be pairwise disjoint and cover the sector, and every
    maximum distant clique must consist of one point from each class
    (its members act as the class anchors); NotPartition reports the
    offending point or clique otherwise.  Would two maximum distant
    cliques ever disagree about the partition, NonUniquePartition is
    raised; the construction here is clique-independent, so that error is
    reserved for future alternate derivations.
    """
    points = sector_points(line, "unimodular")
    if not points:
        raise EmptySector(f"the unimodular sector of {line.ring.label} is empty")
    classes = _vector_classes(points)
    membership = [-1] * len(points)
    for which, cls in enumerate(classes):
        for index in cls:
            if membership[index] != -1:
                raise NotPartition(
                    f"point R{points[index].generator} lies in two maximal vector classes",
                    witness=(points[index],),
                )
            membership[index] = which
    uncovered = [points[i] for i, cls in enumerate(membership) if cls == -1]
    if uncovered:
        raise NotPartition(
            f"point R{uncovered[0].generator} lies in no maximal vector class",
            witness=tuple(uncovered),
        )
    cliques = max_distant_cliques(line, "unimodular")
    if len(cliques[0]) != len(classes):
        raise NotPartition(
            f"{len(classes)} classes cannot be anchored by a maximum distant"
            f" clique of size {len(cliques[0])}"
        )
    by_point = {p.generator: i for i, p in enumerate(points)}
    for clique in cliques:
        hit = sorted(membership[by_point[p.generator]] for p in clique)
        if hit != list(range(len(classes))):
            raise NotPartition(
                f"maximum distant clique {[p.generator for p in clique]} does not"
                " pick one point per class",
                witness=clique,
            )
    anchors = cliques[0]
    ordered = tuple(
        tuple(p for i, p in enumerate(points) if membership[i] == membership[by_point[a.generator]])
        for a in anchors
    )
    return SectorPartition(anchors=anchors, classes=ordered, anchor_sets_checked=len(cliques))


def cross_sector_check(line: ProjectiveLine) -> tuple[bool, tuple[CyclicSubmodule, CyclicSubmodule] | None]:
    """Whether every non-unimodular point is neighbour to every unimodular one.

    Returns (True, None) or (False, counterexample pair).
    """
    if not line.nonunimodular_points or not line.unimodular_points:
        raise EmptySector(f"{line.ring.label}: both sectors must be non-empty for the cross check")
    for nu in line.nonunimodular_points:
        for u in line.unimodular_points:
            if len(nu.orbit_set & u.orbit_set) == 1:
                return False, (nu, u)
    return True, None


def private_vectors(line: ProjectiveLine, sector: str) -> dict[Vector, tuple[Vector, ...]]:
    """Per point, the vectors lying on no other point of the same sector.

    Keyed by canonical generator.  On the order-8 ternion line these are
    the two generators for a unimodular point and the two generators plus
    two more vectors for a non-unimodular one.
    """
    points = sector_points(line, sector)
    if not points:
        raise EmptySector(f"the {sector} sector of {line.ring.label} is empty")
    counts: dict[Vector, int] = {}
    for point in points:
        for v in point.orbit:
            counts[v] = counts.get(v, 0) + 1
    return {
        point.generator: tuple(v for v in point.orbit if counts[v] == 1)
        for point in points
    }


def _vertex_id(order: int, v: Vector) -> str:
    # Matches the two-digit labels used for small rings; larger orders
    # need a separator to stay unambiguous.
    return f"{v[0]}{v[1]}" if order <= 10 else f"{v[0]}_{v[1]}"


def export_graph(line: ProjectiveLine, sector: str, fmt: str) -> str:
    """Vector co-residence network of the selected sector(s).

    Vertices are the vectors lying on at least one point of the sector,
    weighted by how many points contain them; edges join vectors sharing a
    point.  An empty sector gives an empty document.
    """
    if fmt not in ("dot", "json"):
        raise UnknownFormat(f"unknown export format {fmt!r}; expected 'dot' or 'json'")
    points = sector_points(line, sector)
    weights: dict[Vector, int] = {}
    edges: set[tuple[Vector, Vector]] = set()
    for point in points:
        for v in point.orbit:
            weights[v] = weights.get(v, 0) + 1
        edges.update(combinations(point.orbit, 2))
    vertices = sorted(weights)
    order = line.ring.order
    if fmt == "dot":
        name = f"{line.ring.label} {sector}"
        out = [f'graph "{name}" {{']
        for v in vertices:
            out.append(f'  "{_vertex_id(order, v)}" [weight={weights[v]}];')
        for a, b in sorted(edges):
            out.append(f'  "{_vertex_id(order, a)}" -- "{_vertex_id(order, b)}";')
        out.append("}")
        return "\n".join(out) + "\n"
    doc = {
        "schema": "ringline.graph/1",
        "ring": line.ring.label,
        "sector": sector,
        "vertices": [
            {"id": _vertex_id(order, v), "vector": list(v), "weight": weights[v]}
            for v in vertices
        ],
        "edges": [
            [_vertex_id(order, a), _vertex_id(order, b)] for a, b in sorted(edges)
        ],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
