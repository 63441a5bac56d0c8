"""Brute-force orbit enumeration tests, including an independent mini-BFS
oracle, determinism, budget handling, and the crosscheck failure path."""

from __future__ import annotations

import itertools

import numpy as np
import pytest

from chevorbit import (
    BudgetExceeded,
    MismatchReport,
    OrbitDescriptor,
    act_on_v1,
    crosscheck,
    enumerate_orbits,
    predicted_census,
)
from chevorbit import census as census_mod
from chevorbit.census import ArrayField, state_of_vector, vector_of_state
from helpers import EXPECTED_ORBITS, get_census, get_field, get_table


def mini_bfs_orbits(table, p):
    """Independent reference enumeration: plain python sets over tuples."""
    rs = table.rs
    K = get_field(p)
    m = len(rs.phi1)
    gens = [(g, a) for g in rs.phi0 for a in range(1, p)]
    seen: set = set()
    orbits = []
    for state in itertools.product(range(p), repeat=m):
        if state in seen:
            continue
        frontier = [state]
        orbit = {state}
        while frontier:
            cur = frontier.pop()
            for g, a in gens:
                nxt = act_on_v1(table, K, [(g, a)], cur)
                if nxt not in orbit:
                    orbit.add(nxt)
                    frontier.append(nxt)
        seen |= orbit
        orbits.append(orbit)
    return orbits


@pytest.mark.parametrize("name,p", [("A2", 3), ("A3", 3), ("D4", 3)])
def test_enumeration_matches_independent_bfs(name, p):
    table = get_table(name)
    reference = mini_bfs_orbits(table, p)
    census = get_census(name, p)
    assert census.orbit_count == len(reference) == EXPECTED_ORBITS[(name, p)]
    ref_by_rep = {min(o): o for o in reference}
    assert {e.representative for e in census.orbits} == set(ref_by_rep)
    for e in census.orbits:
        assert e.size == len(ref_by_rep[e.representative])


def test_census_metadata_and_sizes():
    census = get_census("A3", 5)
    table = get_table("A3")
    assert (census.family, census.rank, census.p) == ("A", 3, 5)
    m = len(table.rs.phi1)
    assert census.total_states == 5**m
    assert sum(e.size for e in census.orbits) == census.total_states
    # representatives are listed in ascending state order, zero first
    states = [state_of_vector(table.rs, 5, e.representative) for e in census.orbits]
    assert states == sorted(states)
    assert census.orbits[0].representative == (0,) * m


def test_state_encoding_round_trip():
    rs = get_table("D4").rs
    p = 3
    m = len(rs.phi1)
    for s in range(0, 3**m, 97):
        assert state_of_vector(rs, p, vector_of_state(rs, p, s)) == s
    # first coordinate is the most significant digit
    assert state_of_vector(rs, p, (1,) + (0,) * (m - 1)) == 3 ** (m - 1)


def test_enumeration_is_deterministic():
    table = get_table("A3")
    assert enumerate_orbits(table, 3) == enumerate_orbits(table, 3)


def test_enumeration_is_generator_order_independent(monkeypatch):
    table = get_table("A3")
    base = enumerate_orbits(table, 3)
    original = census_mod._generator_moves

    def reversed_moves(t):
        return list(reversed(original(t)))

    monkeypatch.setattr(census_mod, "_generator_moves", reversed_moves)
    assert enumerate_orbits(table, 3) == base


def test_budget_guard():
    table = get_table("D4")
    with pytest.raises(BudgetExceeded):
        enumerate_orbits(table, 5, budget=100)


def test_budget_env_override(monkeypatch):
    table = get_table("D4")
    monkeypatch.setenv("CHEVORBIT_BUDGET", "50")
    with pytest.raises(BudgetExceeded):
        enumerate_orbits(table, 3)
    # an explicit argument wins over the environment
    assert enumerate_orbits(table, 3, budget=10_000_000).orbit_count == 14


def test_non_prime_modulus_rejected():
    with pytest.raises(Exception) as exc_info:
        enumerate_orbits(get_table("A2"), 4)
    assert exc_info.type.__name__ == "NotPrime"


def test_predicted_census_matches_enumeration():
    for name, p in (("A3", 3), ("D4", 3), ("D4", 5)):
        table = get_table(name)
        predicted = predicted_census(table, p)
        enumerated = [e.descriptor for e in get_census(name, p).orbits]
        assert sorted(d.to_json()["label"] for d in predicted) == sorted(
            d.to_json()["label"] for d in enumerated
        )
        assert set(predicted) == set(enumerated)
        assert len(predicted) == len(enumerated)


def test_crosscheck_happy_path_report():
    report = crosscheck(get_table("A2"), 3, census=get_census("A2", 3))
    assert report["system"] == "A2"
    assert report["orbit_count"] == 9
    assert all(v == "ok" for v in report["checks"].values())


def test_crosscheck_detects_a_broken_classifier(monkeypatch):
    # Collapse the classifier to a constant: descriptor distinctness must fail
    # and the report must say which check tripped.
    table = get_table("A2")
    constant = OrbitDescriptor(family="A", rank=2, p=3, label="I", params=())
    monkeypatch.setattr(census_mod, "classify", lambda t, K, x: constant)
    with pytest.raises(MismatchReport) as exc_info:
        crosscheck(table, 3)
    assert exc_info.value.details


def test_orbit_entry_json_schema():
    census = get_census("A2", 3)
    data = census.to_json()
    assert data["states"] == 9
    assert data["orbit_count"] == 9
    entry = data["orbits"][0]
    assert set(entry) >= {"representative", "size", "descriptor"}


def test_array_field_matches_scalar_field():
    p = 7
    K = get_field(p)
    killer = ArrayField(p)
    a = np.arange(1, 30, dtype=np.int64) % p
    b = (np.arange(1, 30, dtype=np.int64) * 3) % p
    assert killer.scalar is False
    assert np.array_equal(killer.add(a, b), (a + b) % p)
    assert np.array_equal(killer.mul(a, b), (a * b) % p)
    assert np.array_equal(killer.neg(a), (-a) % p)
    units = np.arange(1, p, dtype=np.int64)
    inv = killer.inv(units)
    assert np.array_equal((units * inv) % p, np.ones_like(units))
    for u in range(1, p):
        assert killer.inv(u) == K.inv(u)
