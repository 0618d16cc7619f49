"""Cyclic submodules of R^2 and the generalized projective line.

A point of the line is the full orbit set of a generating vector under
left multiplication, kept only when the orbit map is injective (the
submodule is then free).  Points are deduplicated by orbit set, because
distinct vectors generate equal points, and classified by whether some
generating vector admits x1, x2 with r1*x1 + r2*x2 = 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

from .errors import MixedUnimodularity, OrderTooLarge
from .rings import FiniteRing, soft_max_order

Vector = tuple[int, int]


def _check_vector(ring: FiniteRing, vector: Vector) -> Vector:
    r1, r2 = vector
    if not (0 <= r1 < ring.order and 0 <= r2 < ring.order):
        raise ValueError(f"vector {vector} has components outside 0..{ring.order - 1}")
    return (r1, r2)


def unimodularity_witness(ring: FiniteRing, vector: Vector) -> Vector | None:
    """Lexicographically least (x1, x2) with r1*x1 + r2*x2 = 1, if any."""
    r1, r2 = _check_vector(ring, vector)
    add, mul = ring.add_table, ring.mul_table
    row1, row2 = mul[r1], mul[r2]
    for x1 in ring.elements():
        left = row1[x1]
        for x2 in ring.elements():
            if add[left][row2[x2]] == 1:
                return (x1, x2)
    return None


def is_unimodular(ring: FiniteRing, vector: Vector) -> bool:
    return unimodularity_witness(ring, vector) is not None


def _orbit(ring: FiniteRing, vector: Vector) -> set[Vector]:
    r1, r2 = vector
    mul = ring.mul_table
    return {(mul[a][r1], mul[a][r2]) for a in ring.elements()}


@dataclass(frozen=True)
class CyclicSubmodule:
    """One left cyclic submodule of R^2: canonical generator plus orbit."""

    generator: Vector
    orbit: tuple[Vector, ...]
    free: bool
    unimodular: bool
    generators: tuple[Vector, ...]

    @cached_property
    def orbit_set(self) -> frozenset[Vector]:
        return frozenset(self.orbit)

    def __repr__(self) -> str:  # noqa: D105 - orbit elided
        sector = "unimodular" if self.unimodular else "non-unimodular"
        return f"<point R{self.generator} {sector} |orbit|={len(self.orbit)}>"


def cyclic_submodule(ring: FiniteRing, vector: Vector) -> CyclicSubmodule:
    """Orbit of a vector under left multiplication, with classification.

    The generator set is recomputed by re-orbiting every orbit member; the
    canonical generator is its lexicographic minimum.  A point counts as
    unimodular when one of its generators is; the generators of any one
    point never disagree, and the assertion below fails loudly rather than
    pick a side if a counterexample ring ever shows up.
    """
    vector = _check_vector(ring, vector)
    orbit = _orbit(ring, vector)
    generators = tuple(sorted(v for v in orbit if _orbit(ring, v) == orbit))
    flags = {unimodularity_witness(ring, g) is not None for g in generators}
    if len(flags) == 2:
        raise MixedUnimodularity(
            f"point {min(generators)} of {ring.label} has both unimodular and non-unimodular generators"
        )
    return CyclicSubmodule(
        generator=generators[0],
        orbit=tuple(sorted(orbit)),
        free=len(orbit) == ring.order,
        unimodular=flags == {True},
        generators=generators,
    )


@dataclass(frozen=True)
class ProjectiveLine:
    """All free cyclic submodules of R^2, split into the two sectors."""

    ring: FiniteRing
    unimodular_points: tuple[CyclicSubmodule, ...]
    nonunimodular_points: tuple[CyclicSubmodule, ...]

    @cached_property
    def points(self) -> tuple[CyclicSubmodule, ...]:
        return tuple(
            sorted(
                self.unimodular_points + self.nonunimodular_points,
                key=lambda p: p.generator,
            )
        )

    def point_for(self, vector: Vector) -> CyclicSubmodule:
        """The stored point equal to the submodule generated by ``vector``."""
        wanted = _orbit(self.ring, _check_vector(self.ring, vector))
        for point in self.points:
            if point.orbit_set == wanted:
                return point
        raise KeyError(f"vector {vector} does not generate a free submodule of this line")

    def __repr__(self) -> str:  # noqa: D105
        return (
            f"ProjectiveLine({self.ring.label!r}, {len(self.unimodular_points)} unimodular,"
            f" {len(self.nonunimodular_points)} non-unimodular)"
        )


def compute_line(ring: FiniteRing, max_order: int | None = None) -> ProjectiveLine:
    """Scan all of R^2 and assemble the generalized projective line.

    The scan is row-major over (r1, r2); orbits that are not free are
    dropped, equal orbits are kept once, and both sectors come out sorted
    by canonical generator.  ``max_order`` (or RINGLINE_MAX_ORDER)
    overrides the soft bound of 32.
    """
    limit = soft_max_order() if max_order is None else max_order
    if ring.order > limit:
        raise OrderTooLarge(
            f"line computation is bounded to order {limit} (ring has order {ring.order});"
            " pass max_order or set RINGLINE_MAX_ORDER to override"
        )
    seen: set[frozenset[Vector]] = set()
    unimodular: list[CyclicSubmodule] = []
    nonunimodular: list[CyclicSubmodule] = []
    for r1 in ring.elements():
        for r2 in ring.elements():
            orbit = _orbit(ring, (r1, r2))
            if len(orbit) != ring.order:
                continue
            key = frozenset(orbit)
            if key in seen:
                continue
            seen.add(key)
            point = cyclic_submodule(ring, (r1, r2))
            (unimodular if point.unimodular else nonunimodular).append(point)
    unimodular.sort(key=lambda p: p.generator)
    nonunimodular.sort(key=lambda p: p.generator)
    return ProjectiveLine(
        ring=ring,
        unimodular_points=tuple(unimodular),
        nonunimodular_points=tuple(nonunimodular),
    )


def line_to_dict(line: ProjectiveLine) -> dict:
    """Serializable form of a line; this is also the golden-fixture format."""
    return {
        "schema": "ringline.line/1",
        "ring": line.ring.label,
        "points": [
            {
                "generator": list(point.generator),
                "sector": "unimodular" if point.unimodular else "nonunimodular",
                "orbit": [list(v) for v in point.orbit],
            }
            for point in line.points
        ],
    }


def line_to_json(line: ProjectiveLine) -> str:
    return json.dumps(line_to_dict(line), indent=2, sort_keys=True) + "\n"
