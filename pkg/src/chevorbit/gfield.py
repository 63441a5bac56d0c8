"""Small prime fields, square classes, and quadratic-extension norm classes.

Field elements are plain Python ints in ``range(p)``; the :class:`PrimeField`
object carries the arithmetic.  The same operation protocol (``of``, ``add``,
``sub``, ``mul``, ``neg``, ``inv``, ``is_zero``, ``scalar``) is implemented by
:class:`ExactIntegers`, so code written against the protocol runs over either
domain; the census module adds a vectorized implementation.

Square classes of units are represented by a canonical representative:
1 for squares and the least quadratic nonresidue otherwise.  Norm classes —
cosets of the value group of the form x**2 - k*y**2 inside the unit group —
are likewise represented by the smallest unit in the coset, so equality of
the frozen dataclasses is plain value comparison.  Over a prime field the
norm form of a quadratic extension is surjective onto the units, so for
nonsquare k there is a single norm class; the general machinery is kept so
the invariants are stated (and serialized) in a form that does not depend
on that collapse.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


class NotPrime(ValueError):
    """The requested modulus is not a prime number."""


class UnsupportedField(ValueError):
    """The operation needs an odd prime field (characteristic != 2)."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    """Arithmetic of F_p with elements as ints in range(p)."""

    scalar = True

    def __init__(self, p: int):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        self.p = p

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("PrimeField", self.p))

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def of(self, n: int) -> int:
        return n % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError(f"0 is not invertible in F_{self.p}")
        return pow(a, self.p - 2, self.p)

    def is_zero(self, a: int) -> bool:
        return a % self.p == 0

    def elements(self) -> range:
        return range(self.p)

    def units(self) -> range:
        return range(1, self.p)

    # -- quadratic structure (odd p only) ---------------------------------

    def require_odd(self) -> None:
        if self.p == 2:
            raise UnsupportedField("characteristic 2 is not supported here")

    def is_square(self, a: int) -> bool:
        """True for 0 and for unit squares; needs odd p."""
        self.require_odd()
        a %= self.p
        return a == 0 or pow(a, (self.p - 1) // 2, self.p) == 1

    def least_nonresidue(self) -> int:
        self.require_odd()
        return _least_nonresidue(self.p)


class ExactIntegers:
    """The ring of integers under the same operation protocol."""

    scalar = True
    zero = 0
    one = 1

    def __repr__(self) -> str:
        return "ExactIntegers()"

    def of(self, n: int) -> int:
        return int(n)

    def add(self, a: int, b: int) -> int:
        return a + b

    def sub(self, a: int, b: int) -> int:
        return a - b

    def mul(self, a: int, b: int) -> int:
        return a * b

    def neg(self, a: int) -> int:
        return -a

    def inv(self, a: int) -> int:
        if a in (1, -1):
            return a
        raise ZeroDivisionError(f"{a} is not invertible over the integers")

    def is_zero(self, a: int) -> bool:
        return a == 0


INTEGERS = ExactIntegers()


@lru_cache(maxsize=None)
def _least_nonresidue(p: int) -> int:
    for n in range(2, p):
        if pow(n, (p - 1) // 2, p) == p - 1:
            return n
    raise AssertionError(f"no quadratic nonresidue in F_{p}")


@dataclass(frozen=True, order=True)
class SquareClass:
    """A coset of the unit squares in F_p^*, named by its least representative.

    The representative is 1 for the squares and the least nonresidue for the
    other class.
    """

    p: int
    rep: int

    def __str__(self) -> str:
        return str(self.rep)


def square_class(field: PrimeField, a: int) -> SquareClass:
    """Square class of a unit a (raises on 0)."""
    field.require_odd()
    a %= field.p
    if a == 0:
        raise ZeroDivisionError("0 has no square class")
    rep = 1 if field.is_square(a) else field.least_nonresidue()
    return SquareClass(field.p, rep)


@lru_cache(maxsize=None)
def _norm_cosets(p: int, k: int) -> tuple[tuple[int, ...], dict]:
    """Cosets of the value group of x**2 - k*y**2 in F_p^*.

    Returns (sorted tuple of canonical reps, map unit -> canonical rep).
    """
    values = set()
    for x in range(p):
        x2 = x * x % p
        for y in range(p):
            v = (x2 - k * y * y) % p
            if v:
                values.add(v)
    rep_of: dict[int, int] = {}
    reps = []
    for u in range(1, p):
        if u in rep_of:
            continue
        coset = sorted((u * v) % p for v in values)
        r = coset[0]
        reps.append(r)
        for c in coset:
            rep_of[c] = r
    return tuple(sorted(reps)), rep_of


@dataclass(frozen=True, order=True)
class NormClass:
    """A coset of the norm-value group of x**2 - k*y**2, by least representative."""

    p: int
    k: int
    rep: int

    def __str__(self) -> str:
        return str(self.rep)


def norm_class_of(field: PrimeField, k: int, a: int) -> NormClass:
    """Norm class of the unit a relative to the form x**2 - k*y**2."""
    field.require_odd()
    a %= field.p
    if a == 0:
        raise ZeroDivisionError("0 has no norm class")
    _, rep_of = _norm_cosets(field.p, k % field.p)
    return NormClass(field.p, k % field.p, rep_of[a])


def norm_class_reps(field: PrimeField, k: int) -> tuple[int, ...]:
    """Canonical representatives of the norm classes for x**2 - k*y**2."""
    field.require_odd()
    reps, _ = _norm_cosets(field.p, k % field.p)
    return reps


def norm_form_solvable(field: PrimeField, k: int, a: int) -> bool:
    """Is a represented by x**2 - k*y**2 with (x, y) != (0, 0)?"""
    field.require_odd()
    a %= field.p
    k %= field.p
    if a == 0:
        # nontrivial zero exists exactly when k is a unit square
        return k != 0 and field.is_square(k)
    _, rep_of = _norm_cosets(field.p, k)
    # the nonzero values form a subgroup containing 1
    return rep_of[a] == rep_of[1]


def k_class_equal(field: PrimeField, k1: int, k2: int) -> bool:
    """Do k1 and k2 define the same quadratic extension class?

    True when both are zero, or both are units in the same square class.
    """
    field.require_odd()
    k1 %= field.p
    k2 %= field.p
    if k1 == 0 or k2 == 0:
        return k1 == k2
    return field.is_square(k1 * k2 % field.p)
