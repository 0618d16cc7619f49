import json

import pytest

import golden
import oracles
from ringline import (
    MixedUnimodularity,
    OrderTooLarge,
    compute_line,
    construct,
    cyclic_submodule,
    is_unimodular,
    line_to_dict,
    line_to_json,
    unimodularity_witness,
)
from conftest import COMMUTATIVE_SPECS, DATA


def test_axis_point(ternions8):
    point = cyclic_submodule(ternions8, (1, 0))
    assert set(point.orbit) == {(a, 0) for a in range(8)}
    assert point.free and point.unimodular
    assert point.generators == ((1, 0), (2, 0))
    assert point.generator == (1, 0)


def test_zero_vector_orbit(ternions8):
    point = cyclic_submodule(ternions8, (0, 0))
    assert point.orbit == ((0, 0),)
    assert not point.free and not point.unimodular


def test_non_free_orbit(ternions8):
    point = cyclic_submodule(ternions8, (3, 6))
    assert len(point.orbit) < 8
    assert not point.free
    # two scalars hit the same image, so the orbit map is not injective
    images = [(ternions8.mul(a, 3), ternions8.mul(a, 6)) for a in ternions8.elements()]
    assert len(set(images)) < 8


def test_unimodularity_witnesses(ternions8):
    assert unimodularity_witness(ternions8, (1, 0)) == (1, 0)
    assert not is_unimodular(ternions8, (4, 6))
    assert is_unimodular(ternions8, (4, 3))


def test_witness_is_lexicographically_least(ternions8):
    for r1 in ternions8.elements():
        for r2 in ternions8.elements():
            witness = unimodularity_witness(ternions8, (r1, r2))
            solutions = [
                (x1, x2)
                for x1 in ternions8.elements()
                for x2 in ternions8.elements()
                if ternions8.add(ternions8.mul(r1, x1), ternions8.mul(r2, x2)) == 1
            ]
            assert witness == (min(solutions) if solutions else None)
            if witness is not None:
                x1, x2 = witness
                assert ternions8.add(ternions8.mul(r1, x1), ternions8.mul(r2, x2)) == 1


def test_vector_bounds_checked(ternions8):
    with pytest.raises(ValueError):
        cyclic_submodule(ternions8, (8, 0))
    with pytest.raises(ValueError):
        unimodularity_witness(ternions8, (0, -1))


def test_unimodular_implies_free_everywhere(catalog):
    for spec, ring in catalog.items():
        for r1 in ring.elements():
            for r2 in ring.elements():
                point = cyclic_submodule(ring, (r1, r2))
                assert point.free == (len(point.orbit) == ring.order)
                if is_unimodular(ring, (r1, r2)):
                    assert point.free, (spec, (r1, r2))
                assert (0, 0) in point.orbit


def test_ternion_line_counts(ternion_line):
    assert len(ternion_line.unimodular_points) == 18
    assert len(ternion_line.nonunimodular_points) == 3
    assert all(p.free for p in ternion_line.points)


def test_golden_orbits_match(ternion_line):
    computed = {p.orbit_set: p for p in ternion_line.points}
    for sector, pair, orbit in golden.points():
        point = computed.pop(frozenset(orbit))
        assert point.generators == tuple(sorted(pair))
        assert point.generator == min(pair)
        assert ("unimodular" if point.unimodular else "nonunimodular") == sector
    assert not computed  # nothing beyond the 21 golden points


def test_line_dict_matches_committed_fixture(ternion_line):
    with open(DATA / "ternions8_line.json", encoding="utf-8") as fh:
        fixture = json.load(fh)
    computed = line_to_dict(ternion_line)
    assert computed["schema"] == fixture["schema"] == "ringline.line/1"
    assert computed["points"] == fixture["points"]


def test_orbits_are_deduplicated(catalog_lines):
    for line in catalog_lines.values():
        orbits = [p.orbit_set for p in line.points]
        assert len(orbits) == len(set(orbits))


def test_point_order_is_sorted_and_stable(ternions8, ternion_line):
    gens = [p.generator for p in ternion_line.points]
    assert gens == sorted(gens)
    again = compute_line(ternions8)
    assert line_to_json(again) == line_to_json(ternion_line)


def test_field_line_counts(catalog_lines):
    # a field line has q + 1 points, all unimodular
    for q in (2, 3, 4, 5):
        line = catalog_lines[f"GF({q})"]
        assert len(line.unimodular_points) == q + 1
        assert not line.nonunimodular_points


def test_z4_line_against_untyped_brute_force(catalog, catalog_lines):
    ring = catalog["Z(4)"]
    uni, non = oracles.brute_line_sectors(
        [list(r) for r in ring.add_table], [list(r) for r in ring.mul_table]
    )
    line = catalog_lines["Z(4)"]
    assert {p.orbit_set for p in line.unimodular_points} == uni
    assert len(uni) == 6 and not non


def test_product_line_counts(catalog_lines, gf3_t2_line):
    line = catalog_lines["GF(2)*T(2)"]
    assert (len(line.unimodular_points), len(line.nonunimodular_points)) == (54, 9)
    assert (len(gf3_t2_line.unimodular_points), len(gf3_t2_line.nonunimodular_points)) == (72, 12)


def test_product_sectors_match_brute_force(catalog, catalog_lines):
    ring = catalog["GF(2)*T(2)"]
    uni, non = oracles.brute_line_sectors(
        [list(r) for r in ring.add_table], [list(r) for r in ring.mul_table]
    )
    line = catalog_lines["GF(2)*T(2)"]
    assert {p.orbit_set for p in line.unimodular_points} == uni
    assert {p.orbit_set for p in line.nonunimodular_points} == non


def test_commutative_rings_have_no_nonunimodular_points():
    for spec in COMMUTATIVE_SPECS:
        ring = construct(spec)
        assert ring.is_commutative, spec
        assert ring.order <= 16, spec
        line = compute_line(ring)
        assert not line.nonunimodular_points, spec


def test_point_lookup(ternion_line):
    point = ternion_line.point_for((2, 0))
    assert point.generator == (1, 0)
    with pytest.raises(KeyError):
        ternion_line.point_for((3, 6))


def test_order_bound_and_overrides(monkeypatch):
    ring = construct("Z(33)")
    with pytest.raises(OrderTooLarge):
        compute_line(ring)
    line = compute_line(ring, max_order=33)
    assert len(line.unimodular_points) > 0
    monkeypatch.setenv("RINGLINE_MAX_ORDER", "40")
    assert compute_line(ring).unimodular_points == line.unimodular_points
    monkeypatch.setenv("RINGLINE_MAX_ORDER", "not-a-number")
    from ringline import ParseError

    with pytest.raises(ParseError):
        compute_line(ring)


def test_no_mixed_generator_classification(catalog):
    # sweeping every vector of the catalog also proves the classification
    # homogeneity assertion never fires
    for ring in catalog.values():
        for r1 in ring.elements():
            for r2 in ring.elements():
                try:
                    cyclic_submodule(ring, (r1, r2))
                except MixedUnimodularity as err:  # pragma: no cover
                    pytest.fail(str(err))
