"""Smoke tests for the latdist python bindings."""

import math

import pytest

latdist = pytest.importorskip("latdist")


def test_norms():
    assert latdist.tri_norm(2, 1) == 7
    assert latdist.sq_norm(3, 4) == 25


def test_generators_and_counts():
    h5 = latdist.hex_array(5)
    assert len(h5) == 61
    assert len(latdist.distinct_distances(h5)) == 23
    assert latdist.distinct_distances_hex(5) == 23
    assert latdist.distinct_distances_square(5) == 14
    sq5 = latdist.square_array(5)
    assert latdist.distinct_distances(sq5) == [
        1, 2, 4, 5, 8, 9, 10, 13, 16, 17, 18, 20, 25, 32,
    ]


def test_disks():
    radius = latdist.disk_sq_radius_for_points(latdist.Lattice.TRIANGULAR, 1519)
    assert latdist.disk_point_count(latdist.Lattice.TRIANGULAR, radius) > 1400
    assert (
        latdist.disk_distance_overestimate(latdist.Lattice.TRIANGULAR, radius)
        == 441
    )


def test_sieve_counts():
    assert latdist.count_representable(latdist.Lattice.TRIANGULAR, 1674) == 440
    assert latdist.count_representable(latdist.Lattice.SQUARE, 1934) == 600


def test_constants():
    assert math.isclose(latdist.landau_ramanujan(10**6), 0.764223654, abs_tol=1e-6)
    assert math.isclose(latdist.loeschian_constant(10**6), 0.638909405, abs_tol=1e-6)
    assert math.isclose(latdist.heuristic_ratio(10**6), 0.72402, abs_tol=1e-4)
    assert math.isclose(latdist.conjecture_constant(10**6), 0.704498, abs_tol=1e-5)


def test_bounds():
    assert latdist.central_hex_number(23) == 1519
    assert latdist.lower_bound_g(8) == 19
    gaps = latdist.theorem_gaps(latdist.known_witness_pairs())
    assert gaps == [18, 19, 20, 21, 22, 30, 31, 32, 33, 45]
    assert latdist.theorem_gaps(latdist.known_witness_pairs() + [
        (18, 43), (21, 55), (29, 70), (40, 102),
    ]) == []


def test_tables():
    t1 = latdist.table1_csv()
    assert "hex,5,61,23" in t1
    assert "square,39,1521,623" in t1
    t2 = latdist.table2_csv(rows=1)
    assert "23,1519,440,39,1521,623" in t2


def test_config_text_round_trip():
    h3 = latdist.hex_array(3)
    back = latdist.parse_configuration(h3.to_text())
    assert len(back) == len(h3)
    assert latdist.distinct_distances(back) == latdist.distinct_distances(h3)


def test_search():
    met, k, n, best = latdist.find_witness(18, 43, budget_seconds=60)
    assert met
    assert k <= 18
    assert n >= 43
    assert len(latdist.distinct_distances(best)) == k
