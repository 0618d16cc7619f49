"""Condensation of the non-unimodular sector and reference-line matching.

Condensing groups the vectors covered by the non-unimodular points into
classes with identical point membership (their "signature"); the classes,
with one edge per point, form a small incidence structure.  On the
order-8 ternion line this collapses the three non-unimodular points onto
four quadruples of vectors arranged exactly like the projective line over
GF(2).

Structure comparison works on membership-distinct vertices: vertices of
either side that lie in exactly the same edges are merged first, so a
class of four vectors can match a single vector of a reference line.
Class sizes are structural multiplicities, not identity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cliques import maximum_cliques
from .constructors import construct
from .errors import EmptyStructure, OrderTooLarge, TooLarge
from .line import ProjectiveLine, Vector, compute_line

MAX_STRUCTURE_VERTICES = 200

DEFAULT_CATALOG = ("GF(2)", "Z(4)", "D(2)", "Z(6)", "GF(2)*GF(2)", "GF(2)*GF(3)")

ZERO_VECTOR: Vector = (0, 0)


@dataclass(frozen=True)
class VectorClass:
    """Vectors sharing one membership signature over the structure's edges."""

    members: tuple[Vector, ...]
    signature: frozenset[int]


@dataclass(frozen=True)
class IncidenceStructure:
    """Vector classes (vertices) and per-point vertex sets (edges)."""

    label: str
    vertices: tuple[VectorClass, ...]
    edges: tuple[tuple[int, ...], ...]

    @property
    def is_empty(self) -> bool:
        return not self.vertices and not self.edges


def condense(line: ProjectiveLine) -> IncidenceStructure:
    """Quotient the non-unimodular sector's vectors by equal signatures.

    Vertices are ordered by least member; each non-unimodular point
    becomes one edge listing the classes inside it.  An empty sector gives
    the empty structure.
    """
    points = line.nonunimodular_points
    signatures: dict[Vector, set[int]] = {}
    for index, point in enumerate(points):
        for v in point.orbit:
            signatures.setdefault(v, set()).add(index)
    grouped: dict[frozenset[int], list[Vector]] = {}
    for v, sig in signatures.items():
        grouped.setdefault(frozenset(sig), []).append(v)
    classes = sorted(
        (tuple(sorted(members)), signature) for signature, members in grouped.items()
    )
    vertices = tuple(VectorClass(members, signature) for members, signature in classes)
    edges = tuple(
        tuple(i for i, vc in enumerate(vertices) if index in vc.signature)
        for index in range(len(points))
    )
    return IncidenceStructure(
        label=f"condensate({line.ring.label})", vertices=vertices, edges=edges
    )


def reference_structure(spec: str) -> IncidenceStructure:
    """Incidence structure of the line over a catalog ring.

    Vertices are all vectors covered by the unimodular points, each its
    own singleton class (the zero vector included, so a condensate's
    universal class has a counterpart); edges are the point orbits.
    """
    ring = construct(spec)
    if ring.order > 16:
        raise OrderTooLarge(f"reference lines are bounded to ring order 16, got {ring.order}")
    line = compute_line(ring)
    points = line.unimodular_points
    covered = sorted({v for p in points for v in p.orbit})
    position = {v: i for i, v in enumerate(covered)}
    edges = tuple(tuple(sorted(position[v] for v in p.orbit)) for p in points)
    vertices = tuple(
        VectorClass(
            members=(v,),
            signature=frozenset(i for i, e in enumerate(edges) if position[v] in e),
        )
        for v in covered
    )
    return IncidenceStructure(label=f"P({ring.label})", vertices=vertices, edges=edges)


def _reduced(structure: IncidenceStructure) -> IncidenceStructure:
    """Merge vertices with identical edge membership; signatures recomputed."""
    signatures = [
        frozenset(i for i, e in enumerate(structure.edges) if v in e)
        for v in range(len(structure.vertices))
    ]
    grouped: dict[frozenset[int], list[Vector]] = {}
    for v, vc in enumerate(structure.vertices):
        if signatures[v]:
            grouped.setdefault(signatures[v], []).extend(vc.members)
    classes = sorted(
        (tuple(sorted(members)), signature) for signature, members in grouped.items()
    )
    vertices = tuple(VectorClass(members, signature) for members, signature in classes)
    edges = tuple(
        tuple(i for i, vc in enumerate(vertices) if index in vc.signature)
        for index in range(len(structure.edges))
    )
    return IncidenceStructure(label=structure.label, vertices=vertices, edges=edges)


@dataclass(frozen=True)
class StructureIsomorphism:
    """Witness of an incidence-structure isomorphism, on the reduced forms."""

    a_reduced: IncidenceStructure
    b_reduced: IncidenceStructure
    vertex_map: tuple[int, ...]
    edge_map: tuple[int, ...]

    def check(self) -> bool:
        """Re-verify that the maps preserve incidence both ways."""
        a, b = self.a_reduced, self.b_reduced
        if sorted(self.vertex_map) != list(range(len(b.vertices))):
            return False
        if sorted(self.edge_map) != list(range(len(b.edges))):
            return False
        for i, edge in enumerate(a.edges):
            if sorted(self.vertex_map[v] for v in edge) != list(b.edges[self.edge_map[i]]):
                return False
        return True


def structures_isomorphic(a: IncidenceStructure, b: IncidenceStructure) -> StructureIsomorphism | None:
    """Decide isomorphism of two incidence structures, with witness.

    Both sides are reduced first (vertices with equal signatures merged);
    the search then backtracks over edge bijections, pruned by edge size,
    vertex-degree profile and pairwise intersection sizes, and accepts
    when the induced signature correspondence is a vertex bijection.  The
    witness is the lexicographically least edge mapping.
    """
    if len(a.vertices) > MAX_STRUCTURE_VERTICES or len(b.vertices) > MAX_STRUCTURE_VERTICES:
        raise TooLarge(
            f"structure isomorphism is bounded to {MAX_STRUCTURE_VERTICES} vertices"
        )
    ra, rb = _reduced(a), _reduced(b)
    if len(ra.vertices) != len(rb.vertices) or len(ra.edges) != len(rb.edges):
        return None
    m = len(ra.edges)
    if m == 0:
        return StructureIsomorphism(ra, rb, vertex_map=(), edge_map=())

    sets_a = [frozenset(e) for e in ra.edges]
    sets_b = [frozenset(e) for e in rb.edges]
    degrees_a = [len(vc.signature) for vc in ra.vertices]
    degrees_b = [len(vc.signature) for vc in rb.vertices]

    def invariant(sets, degrees, i):
        profile = tuple(sorted(degrees[v] for v in sets[i]))
        meets = tuple(sorted(len(sets[i] & sets[j]) for j in range(m) if j != i))
        return (len(sets[i]), profile, meets)

    inv_a = [invariant(sets_a, degrees_a, i) for i in range(m)]
    inv_b = [invariant(sets_b, degrees_b, i) for i in range(m)]
    if sorted(inv_a) != sorted(inv_b):
        return None
    candidates = [[j for j in range(m) if inv_b[j] == inv_a[i]] for i in range(m)]

    edge_map = [-1] * m
    taken = [False] * m

    def extend(i: int) -> bool:
        if i == m:
            return _signature_bijection(ra, rb, edge_map) is not None
        for j in candidates[i]:
            if taken[j]:
                continue
            if any(
                len(sets_a[i] & sets_a[k]) != len(sets_b[j] & sets_b[edge_map[k]])
                for k in range(i)
            ):
                continue
            edge_map[i] = j
            taken[j] = True
            if extend(i + 1):
                return True
            taken[j] = False
            edge_map[i] = -1
        return False

    if not extend(0):
        return None
    vertex_map = _signature_bijection(ra, rb, edge_map)
    assert vertex_map is not None
    return StructureIsomorphism(ra, rb, vertex_map=tuple(vertex_map), edge_map=tuple(edge_map))


def _signature_bijection(ra, rb, edge_map) -> list[int] | None:
    """Vertex map induced by an edge bijection, or None if it is not one."""
    by_signature = {vc.signature: i for i, vc in enumerate(rb.vertices)}
    vertex_map = []
    for vc in ra.vertices:
        target = by_signature.get(frozenset(edge_map[e] for e in vc.signature))
        if target is None:
            return None
        vertex_map.append(target)
    return vertex_map


@dataclass(frozen=True)
class CondensateIdentification:
    """Outcome of matching a condensate against the reference catalog."""

    status: str  # "matched" | "no catalog match" | "empty"
    matches: tuple[str, ...]
    condensate: IncidenceStructure


def identify_condensate(
    line: ProjectiveLine, catalog: tuple[str, ...] | None = None
) -> CondensateIdentification:
    """Condense a line and report every catalog reference it matches."""
    specs = DEFAULT_CATALOG if catalog is None else tuple(catalog)
    structure = condense(line)
    if structure.is_empty:
        return CondensateIdentification(status="empty", matches=(), condensate=structure)
    matches = tuple(
        spec for spec in specs if structures_isomorphic(structure, reference_structure(spec))
    )
    status = "matched" if matches else "no catalog match"
    return CondensateIdentification(status=status, matches=matches, condensate=structure)


def condensate_distant_analysis(structure: IncidenceStructure) -> int:
    """Maximum number of pairwise distant condensed points.

    Two edges count as distant when they share only the class of the zero
    vector, mirroring the orbit-intersection rule one level up.
    """
    if structure.is_empty:
        raise EmptyStructure("cannot analyse an empty incidence structure")
    zero_classes = [
        i for i, vc in enumerate(structure.vertices) if ZERO_VECTOR in vc.members
    ]
    if len(zero_classes) != 1:
        raise EmptyStructure("structure has no class containing the zero vector")
    zero = zero_classes[0]
    sets = [frozenset(e) for e in structure.edges]
    assert all(zero in s for s in sets), "the zero class lies on every point"
    n = len(sets)
    adjacency = [
        frozenset(j for j in range(n) if j != i and sets[i] & sets[j] == {zero})
        for i in range(n)
    ]
    size, _ = maximum_cliques(adjacency)
    return size
