"""Shared cached builders for the test suite.

Root systems and structure-constant tables are immutable once built, so the
whole suite shares one instance per system.  The memos are plain dicts so a
test that has just built (and timed) a fresh object can seed them for everyone
else.
"""

from __future__ import annotations

from chevorbit import (
    OrbitCensus,
    PrimeField,
    RootSystem,
    StructureConstantTable,
    build_root_system,
    build_table_oracle,
    enumerate_orbits,
    parse_system_name,
)

ALL_SYSTEMS: tuple[str, ...] = (
    "A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8",
    "D4", "D5", "D6", "D7", "D8",
    "E6", "E7", "E8",
)

# The seven (system, p) pairs with pinned brute-force orbit counts.
CENSUS_CASES: tuple[tuple[str, int], ...] = (
    ("A2", 3), ("A3", 3), ("A3", 5), ("A4", 3),
    ("D4", 3), ("D4", 5), ("D5", 3),
)

EXPECTED_ORBITS: dict[tuple[str, int], int] = {
    ("A2", 3): 9,
    ("A3", 3): 7,
    ("A3", 5): 11,
    ("A4", 3): 6,
    ("D4", 3): 14,
    ("D4", 5): 16,
    ("D5", 3): 9,
}

# Total root counts per system, from the classification of simply-laced
# systems; used as an oracle for the enumeration code.
ROOT_COUNTS: dict[str, int] = {
    **{f"A{l}": l * (l + 1) for l in range(1, 9)},
    **{f"D{l}": 2 * l * (l - 1) for l in range(4, 9)},
    "E6": 72, "E7": 126, "E8": 240,
}

_systems: dict[str, RootSystem] = {}
_tables: dict[str, StructureConstantTable] = {}
_fields: dict[int, PrimeField] = {}
_censuses: dict[tuple[str, int], OrbitCensus] = {}


def get_system(name: str) -> RootSystem:
    if name not in _systems:
        family, rank = parse_system_name(name)
        _systems[name] = build_root_system(family, rank)
    return _systems[name]


def get_table(name: str) -> StructureConstantTable:
    if name not in _tables:
        _tables[name] = build_table_oracle(get_system(name))
    return _tables[name]


def get_field(p: int) -> PrimeField:
    if p not in _fields:
        _fields[p] = PrimeField(p)
    return _fields[p]


def get_census(name: str, p: int) -> OrbitCensus:
    key = (name, p)
    if key not in _censuses:
        _censuses[key] = enumerate_orbits(get_table(name), p)
    return _censuses[key]


def seed_table(name: str, table: StructureConstantTable) -> None:
    """Let a test that built a table fresh (e.g. to time it) share it."""
    _tables[name] = table
    _systems[name] = table.rs


def seed_census(name: str, p: int, census: OrbitCensus) -> None:
    _censuses[(name, p)] = census


def random_v1(rng, rs: RootSystem, p: int) -> tuple[int, ...]:
    """A uniformly random level-1 coefficient vector over F_p."""
    return tuple(rng.randrange(p) for _ in rs.phi1)


def random_level0_word(rng, rs: RootSystem, p: int, max_len: int = 4) -> list:
    """A random word in the elementary generators of the level-0 group.

    A2 has no level-0 roots at all (the acting group is trivial there), in
    which case the only word is the empty one.
    """
    lvl0 = rs.phi0
    if not lvl0:
        return []
    length = rng.randrange(1, max_len + 1)
    return [(rng.choice(lvl0), rng.randrange(1, p)) for _ in range(length)]
