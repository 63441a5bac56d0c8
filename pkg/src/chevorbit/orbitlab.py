"""Classification of level-1 vectors under the level-0 subgroup.

The module grades the adjoint algebra by pairing with the highest root
delta: levels run -2..2, the level-1 slice V1 is spanned by {e_alpha :
<alpha, delta> = 1}, and the group G0 generated by the root elements
x_gamma(t) for level-0 gamma acts on V1.  Vectors in V1 are given externally
as coefficient tuples in the fixed phi1 order of the root system.

For family D (odd characteristic) the classification goes through an
associated root element y built from x: invariants of y — the coefficient
at e_{-delta}, which levels are populated (the "luminosity" scale), and the
conjugacy invariants of small trace-zero 2x2 blocks cut out of the level-0
part — pin down the orbit.  For family A the orbit data is an explicit
covector/vector pair read off the prefix/suffix root coefficients.  Family
E is out of scope here.

Orbits are named by OrbitDescriptor values: a label from
{I, IIa, IIb, II, IIIa, IIIb, IIIc, III, IV, V, VI} plus canonical
parameters.  Parameters are canonicalized by matching the computed
invariants against those of an explicit list of canonical representatives,
so descriptor equality is exactly orbit equality and never depends on
basis-level sign conventions.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .chevalley import StructureConstantTable
from .gfield import (
    NormClass,
    SquareClass,
    norm_class_of,
    norm_class_reps,
    square_class,
)
from .liemod import LieVector, apply_root_element, apply_word
from .rootsys import Root, RootSystem, simple_index, standard_quadruple


class UnsupportedFamily(ValueError):
    """Orbit classification is implemented for families A and D only."""


class CharTwo(ValueError):
    """The family-D classification needs odd characteristic."""


class NotTraceZero(ValueError):
    """The 2x2 conjugacy invariant is defined for trace-zero matrices."""


class InvalidDescriptor(ValueError):
    """The descriptor does not name an orbit of this module."""


class ClassificationError(RuntimeError):
    """Computed invariants match no canonical representative.

    This indicates an internal inconsistency, not bad input.
    """


class Luminosity(Enum):
    """Which levels of the associated element are populated, coarsest first."""

    ZERO_VEC = "ZeroVec"
    SINGULAR = "Singular"
    BRILLIANT = "Brilliant"
    SHINING = "Shining"
    DARK = "Dark"


@dataclass(frozen=True)
class ZBlock:
    """Trace-zero 2x2 block [[c, u], [w, -c]] cut from the level-0 part."""

    c: int
    u: int
    w: int


@dataclass(frozen=True)
class Sl2Invariant:
    """SL2-conjugacy invariant of a trace-zero 2x2 matrix.

    kind "zero": the zero matrix.
    kind "nilpotent": nonzero with zero determinant; `square` is the square
        class of the upper-right entry after conjugating to upper-triangular
        form.
    kind "regular": nonzero determinant; `k` is minus the determinant and
        `norm` is the class of the upper-right entry of an antidiagonal
        conjugate [[0, *], [*, 0]] in the unit group modulo the values of
        x**2 - k*y**2.  Any two antidiagonal conjugates have upper-right
        entries in the same class, so this is well defined.
    """

    kind: str
    square: SquareClass | None = None
    k: int | None = None
    norm: NormClass | None = None

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.square is not None:
            out["square_class"] = str(self.square)
        if self.k is not None:
            out["k"] = self.k
            out["norm_class"] = str(self.norm)
        return out


@dataclass(frozen=True)
class OrbitDescriptor:
    """Canonical name of a G0-orbit on V1."""

    family: str
    rank: int
    p: int
    label: str
    params: tuple[tuple[str, int | str], ...] = ()

    def param(self, name: str):
        for n, v in self.params:
            if n == name:
                return v
        raise KeyError(name)

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "rank": self.rank,
            "p": self.p,
            "label": self.label,
            "params": {n: v for n, v in self.params},
        }

    @classmethod
    def from_json(cls, d: dict) -> "OrbitDescriptor":
        return cls(
            family=d["family"],
            rank=int(d["rank"]),
            p=int(d["p"]),
            label=d["label"],
            params=tuple(sorted(d.get("params", {}).items())),
        )


def _mkdesc(rs: RootSystem, p: int, label: str, **params) -> OrbitDescriptor:
    return OrbitDescriptor(
        family=rs.family, rank=rs.rank, p=p, label=label,
        params=tuple(sorted(params.items())),
    )


def _field_p(K) -> int:
    p = getattr(K, "p", None)
    if p is None:
        raise UnsupportedFamily("classification needs a prime-field domain")
    return p


def _require_odd(K) -> int:
    p = _field_p(K)
    if p == 2:
        raise CharTwo("family-D classification needs characteristic != 2")
    return p


# -- the associated root element ----------------------------------------------


def block_gammas(rs: RootSystem) -> tuple[Root, ...]:
    """The simple level-0 roots whose sl2 copies cut the invariant blocks."""
    lam, rho, sig, tau = standard_quadruple(rs)
    d = rs.delta
    if rs.rank == 4:
        return (
            rs.sub(d, rs.add(lam, rho)),
            rs.sub(d, rs.add(lam, sig)),
            rs.sub(d, rs.add(lam, tau)),
        )
    return (rs.sub(d, rs.add(lam, rho)),)


def associated_root_element(table: StructureConstantTable, K, x,
                            order=None) -> LieVector:
    """Apply the coefficient-driven product of level-(-1) elements to e_delta.

    For a level-1 coefficient vector x (phi1 order) the result y satisfies,
    over any coefficient field of odd characteristic:

    * the coefficient of e_delta is 1,
    * the level-1 coefficients of y equal x,
    * the Cartan part of y has zero coordinate on the one simple root of
      level 1 (the factor of the torus correction).

    The factor order is immaterial; `order` (a permutation of phi1 indices)
    exists so tests can verify that.
    """
    rs = table.rs
    if rs.family != "D":
        raise UnsupportedFamily(
            f"the associated root element is defined for family D, "
            f"not {rs.name}"
        )
    p = getattr(K, "p", None)
    if p == 2:
        raise CharTwo("the construction divides by 2")
    m = len(rs.phi1)
    xs = [K.of(c) for c in x]
    if len(xs) != m:
        raise ValueError(
            f"level-1 vector for {rs.name} needs {m} coefficients, "
            f"got {len(xs)}"
        )
    idxs = range(m) if order is None else list(order)
    if order is not None and sorted(idxs) != list(range(m)):
        raise ValueError("order must be a permutation of the phi1 indices")

    d = rs.delta
    v = LieVector.basis(table, K, table.e_key(d))
    for i in idxs:
        g = rs.sub(rs.phi1[i], d)
        nc = table.structure_constant(g, d)
        v = apply_root_element(table, g, K.mul(K.of(nc), xs[i]), v)
    mcoef = v.h_coeff(rs.rank - 1)
    c = K.mul(mcoef, K.inv(K.of(2)))
    v = apply_root_element(table, rs.neg(d), c, v)

    if K.scalar:
        assert v.e_coeff(d) == K.one, "top coefficient moved"
        assert K.is_zero(v.h_coeff(rs.rank - 1)), "torus correction failed"
        assert list(v.v1_part()) == xs, "level-1 coefficients moved"
    return v


def luminosity(rs: RootSystem, y: LieVector) -> Luminosity:
    """First populated level of y, scanning levels -2, -1, 0, 1."""
    dom = y.domain
    if not dom.is_zero(y.e_coeff(rs.neg(rs.delta))):
        return Luminosity.DARK
    lev1 = []
    lev0 = []
    levm1 = []
    for i, r in enumerate(rs.roots):
        lv = rs.level(r)
        if lv == 1:
            lev1.append(i)
        elif lv == 0:
            lev0.append(i)
        elif lv == -1:
            levm1.append(i)
    co = y.coeffs
    if any(not dom.is_zero(co[i]) for i in levm1):
        return Luminosity.SHINING
    if any(not dom.is_zero(co[i]) for i in lev0) or any(
        not dom.is_zero(c) for c in y.h_part()
    ):
        return Luminosity.BRILLIANT
    if any(not dom.is_zero(co[i]) for i in lev1):
        return Luminosity.SINGULAR
    return Luminosity.ZERO_VEC


def z_blocks(table: StructureConstantTable, K, y: LieVector) -> tuple[ZBlock, ...]:
    """The trace-zero blocks of y along the distinguished simple sl2 copies.

    Block i for the simple level-0 root gamma_i is
    [[c, u], [w, -c]] with c the Cartan coordinate of y on h_{gamma_i},
    u the coefficient of e_{gamma_i} and w the coefficient of e_{-gamma_i}.
    """
    rs = table.rs
    out = []
    for g in block_gammas(rs):
        si = simple_index(g)
        out.append(ZBlock(
            c=K.of(y.h_coeff(si)),
            u=K.of(y.e_coeff(g)),
            w=K.of(y.e_coeff(rs.neg(g))),
        ))
    return tuple(out)


# -- sl2 conjugacy invariants ---------------------------------------------------


def sl2_invariant(K, z: ZBlock) -> Sl2Invariant:
    """SL2(K)-conjugacy invariant of the trace-zero matrix [[c,u],[w,-c]]."""
    _require_odd(K)
    c, u, w = K.of(z.c), K.of(z.u), K.of(z.w)
    k = K.add(K.mul(c, c), K.mul(u, w))
    if K.is_zero(c) and K.is_zero(u) and K.is_zero(w):
        return Sl2Invariant(kind="zero")
    if K.is_zero(k):
        top = u if not K.is_zero(u) else K.neg(w)
        return Sl2Invariant(kind="nilpotent", square=square_class(K, top))
    if not K.is_zero(w):
        d0 = w
    elif not K.is_zero(u):
        d0 = K.neg(u)
    else:
        d0 = K.neg(K.add(c, c))
    upper = K.mul(k, K.inv(d0))
    return Sl2Invariant(kind="regular", k=k, norm=norm_class_of(K, k, upper))


def sl2_invariant_matrix(K, mat) -> Sl2Invariant:
    """Invariant of a general 2x2 trace-zero matrix ((a,b),(c,d))."""
    (a, b), (c, d) = mat
    if not K.is_zero(K.add(K.of(a), K.of(d))):
        raise NotTraceZero(f"matrix {mat} has nonzero trace")
    return sl2_invariant(K, ZBlock(c=K.of(a), u=K.of(b), w=K.of(c)))


# -- family A: covector/vector pair ---------------------------------------------


def al_pair(rs: RootSystem, x) -> tuple[tuple, tuple]:
    """Prefix-root and suffix-root coefficient lists of a level-1 vector.

    Returns (u, v) with u_j the coefficient at alpha_1 + ... + alpha_j and
    v_j the coefficient at alpha_{j+1} + ... + alpha_l, for j = 1..l-1.
    Under the level-0 subgroup, u transforms as a covector and v as a
    vector of a GL(l-1) action, so the contraction sum(u_j * v_j) is an
    orbit invariant.
    """
    if rs.family != "A":
        raise UnsupportedFamily(
            f"the covector/vector pair is defined for family A, not {rs.name}"
        )
    l = rs.rank
    x = list(x)
    if len(x) != len(rs.phi1):
        raise ValueError(
            f"level-1 vector for {rs.name} needs {len(rs.phi1)} "
            f"coefficients, got {len(x)}"
        )
    u = []
    v = []
    for j in range(1, l):
        prefix = tuple(1 if i < j else 0 for i in range(l))
        suffix = tuple(1 if i >= j else 0 for i in range(l))
        u.append(x[rs.phi1_index(prefix)])
        v.append(x[rs.phi1_index(suffix)])
    return tuple(u), tuple(v)


# -- canonical representatives ---------------------------------------------------


def _v1_vector(rs: RootSystem, entries: dict[Root, int]) -> tuple[int, ...]:
    out = [0] * len(rs.phi1)
    for root, c in entries.items():
        out[rs.phi1_index(root)] = c
    return tuple(out)


def _a_prefix(rs: RootSystem, j: int) -> Root:
    return tuple(1 if i < j else 0 for i in range(rs.rank))


def _a_suffix(rs: RootSystem, j: int) -> Root:
    return tuple(1 if i >= j - 1 else 0 for i in range(rs.rank))


@lru_cache(maxsize=None)
def _profile_cached(table: StructureConstantTable, K, x: tuple):
    y = associated_root_element(table, K, x)
    lum = luminosity(table.rs, y)
    invs = tuple(sl2_invariant(K, z) for z in z_blocks(table, K, y))
    return lum, invs


def _match_params(table, K, profile, candidates):
    """Pick the canonical representative with the same invariant profile."""
    for cand, params in candidates:
        if _profile_cached(table, K, cand) == profile:
            return params
    raise ClassificationError(
        f"invariants {profile} match no canonical representative "
        f"of {table.rs.name} over F_{_field_p(K)}"
    )


# -- classification ----------------------------------------------------------------


def classify(table: StructureConstantTable, K, x) -> OrbitDescriptor:
    """Orbit descriptor of a level-1 coefficient vector (phi1 order)."""
    rs = table.rs
    if rs.family == "A":
        return _classify_a(rs, K, x)
    if rs.family == "D":
        return _classify_d(table, K, x)
    raise UnsupportedFamily(
        f"orbit classification covers families A and D, not {rs.name}"
    )


def _classify_a(rs: RootSystem, K, x) -> OrbitDescriptor:
    p = _field_p(K)
    xs = [K.of(c) for c in x]
    if len(xs) != len(rs.phi1):
        raise ValueError(
            f"level-1 vector for {rs.name} needs {len(rs.phi1)} "
            f"coefficients, got {len(xs)}"
        )
    l = rs.rank
    if l == 1:
        return _mkdesc(rs, p, "I")
    u, v = al_pair(rs, xs)
    uz = all(K.is_zero(c) for c in u)
    vz = all(K.is_zero(c) for c in v)
    if l == 2:
        # no level-0 roots: every vector is its own orbit, named by raw data
        if uz and vz:
            return _mkdesc(rs, p, "I")
        if vz:
            return _mkdesc(rs, p, "IIa", rho=u[0])
        if uz:
            return _mkdesc(rs, p, "IIb", delta_minus_rho=v[0])
        return _mkdesc(rs, p, "VI", rho=u[0], delta_minus_rho=v[0])
    if uz and vz:
        return _mkdesc(rs, p, "I")
    if vz:
        return _mkdesc(rs, p, "IIa")
    if uz:
        return _mkdesc(rs, p, "IIb")
    s = K.zero
    for a, b in zip(u, v):
        s = K.add(s, K.mul(a, b))
    if not K.is_zero(s):
        return _mkdesc(rs, p, "VI", c=s)
    if l > 3:
        return _mkdesc(rs, p, "III")
    # l == 3: complete u to a unimodular basis and contract the complement
    u1, u2 = u
    if not K.is_zero(u1):
        w = (K.zero, K.inv(u1))
    else:
        w = (K.neg(K.inv(u2)), K.zero)
    c = K.add(K.mul(w[0], v[0]), K.mul(w[1], v[1]))
    return _mkdesc(rs, p, "III", c=c)


def _classify_d(table: StructureConstantTable, K, x) -> OrbitDescriptor:
    rs = table.rs
    p = _require_odd(K)
    xs = tuple(K.of(c) for c in x)
    lum, invs = _profile_cached(table, K, xs)
    profile = (lum, invs)
    lam, rho, sig, tau = standard_quadruple(rs)
    nu = K.least_nonresidue()

    if lum is Luminosity.ZERO_VEC:
        return _mkdesc(rs, p, "I")
    if lum is Luminosity.SINGULAR:
        return _mkdesc(rs, p, "II")

    if lum is Luminosity.BRILLIANT:
        if rs.rank == 4:
            nz = [i for i, z in enumerate(invs) if z.kind != "zero"]
            if len(nz) != 1:
                raise ClassificationError(
                    f"brilliant vector with block pattern {invs}"
                )
            i = nz[0]
            label = ("IIIa", "IIIb", "IIIc")[i]
            pname = ("rho_class", "sigma_class", "tau_class")[i]
            partner = (rho, sig, tau)[i]
            cands = [
                (_v1_vector(rs, {lam: 1, partner: r}), {pname: str(r)})
                for r in (1, nu)
            ]
            return _mkdesc(rs, p, label,
                           **_match_params(table, K, profile, cands))
        if invs[0].kind != "zero":
            cands = [
                (_v1_vector(rs, {lam: 1, rho: r}), {"rho_class": str(r)})
                for r in (1, nu)
            ]
            return _mkdesc(rs, p, "IIIa",
                           **_match_params(table, K, profile, cands))
        cands = [(_v1_vector(rs, {lam: 1, sig: 1}), {})]
        return _mkdesc(rs, p, "IIIb",
                       **_match_params(table, K, profile, cands))

    if lum is Luminosity.SHINING:
        if rs.rank == 4:
            cands = [
                (
                    _v1_vector(rs, {lam: 1, rho: r, sig: s}),
                    {"rho_class": str(r), "sigma_class": str(s)},
                )
                for r in (1, nu)
                for s in (1, nu)
            ]
        else:
            cands = [
                (
                    _v1_vector(rs, {lam: 1, rho: r, sig: 1}),
                    {"rho_class": str(r)},
                )
                for r in (1, nu)
            ]
        return _mkdesc(rs, p, "IV", **_match_params(table, K, profile, cands))

    # dark: all blocks are regular with the same -det value k
    if invs[0].kind != "regular":
        raise ClassificationError(
            f"dark vector with non-regular first block {invs[0]}"
        )
    k = invs[0].k
    reps = norm_class_reps(K, k)
    if rs.rank == 4:
        cands = [
            (
                _v1_vector(rs, {lam: 1, rho: r, sig: s,
                                tau: K.mul(k, K.inv(K.mul(r, s)))}),
                {"k": k, "rho_class": str(r), "sigma_class": str(s)},
            )
            for r in reps
            for s in reps
        ]
    else:
        cands = [
            (
                _v1_vector(rs, {lam: 1, rho: r, sig: 1,
                                tau: K.mul(k, K.inv(r))}),
                {"k": k, "rho_class": str(r)},
            )
            for r in reps
        ]
    return _mkdesc(rs, p, "V", **_match_params(table, K, profile, cands))


def same_orbit(table: StructureConstantTable, K, x1, x2) -> bool:
    """Are two level-1 vectors in the same orbit of the level-0 subgroup?"""
    return classify(table, K, x1) == classify(table, K, x2)


def act_on_v1(table: StructureConstantTable, K, word, x) -> tuple:
    """Apply a word of level-0 root elements to a level-1 coefficient vector.

    Level-0 elements preserve the level grading, so the result is again a
    level-1 vector, returned in phi1 order.  Factors of other levels are
    rejected: they would move the vector out of V1.
    """
    rs = table.rs
    for g, _ in word:
        if rs.level(tuple(g)) != 0:
            raise ValueError(
                f"{g} has level {rs.level(tuple(g))}; the V1 action needs "
                f"level-0 factors"
            )
    v = LieVector.from_v1(table, K, [K.of(c) for c in x])
    v = apply_word(table, word, v)
    return v.v1_part()


# -- canonical forms -----------------------------------------------------------------


def _int_param(d: OrbitDescriptor, name: str) -> int:
    try:
        return int(d.param(name))
    except KeyError:
        raise InvalidDescriptor(
            f"label {d.label} of {d.family}{d.rank} needs parameter {name!r}"
        ) from None
    except (TypeError, ValueError):
        raise InvalidDescriptor(
            f"parameter {name!r} of {d} is not an integer"
        ) from None


def canonical_form(table: StructureConstantTable, K,
                   d: OrbitDescriptor) -> tuple[int, ...]:
    """The canonical level-1 vector named by the descriptor (phi1 order)."""
    rs = table.rs
    p = _field_p(K)
    if (d.family, d.rank) != (rs.family, rs.rank) or d.p != p:
        raise InvalidDescriptor(
            f"descriptor {d.family}{d.rank}/F_{d.p} does not match "
            f"{rs.name}/F_{p}"
        )
    names = {n for n, _ in d.params}
    vec = _canonical_entries(rs, K, d, names)
    got = classify(table, K, vec)
    if got != d:
        raise InvalidDescriptor(
            f"{d.label} with params {dict(d.params)} does not name an orbit "
            f"of {rs.name}/F_{p} (that vector classifies as {got.label} "
            f"with {dict(got.params)})"
        )
    return vec


def _canonical_entries(rs: RootSystem, K, d: OrbitDescriptor,
                       names: set) -> tuple[int, ...]:
    l = rs.rank
    label = d.label
    if rs.family == "A":
        rho = _a_prefix(rs, 1)
        sigt = _a_suffix(rs, l)  # the simple root alpha_l
        dmr = tuple(c1 - c2 for c1, c2 in zip(rs.delta, rho))
        if label == "I":
            return _v1_vector(rs, {})
        if l == 1:
            raise InvalidDescriptor(f"A1 has only the zero orbit, not {label}")
        if l == 2:
            if label == "IIa":
                return _v1_vector(rs, {rho: _int_param(d, "rho")})
            if label == "IIb":
                return _v1_vector(rs, {dmr: _int_param(d, "delta_minus_rho")})
            if label == "VI":
                return _v1_vector(rs, {
                    rho: _int_param(d, "rho"),
                    dmr: _int_param(d, "delta_minus_rho"),
                })
            raise InvalidDescriptor(f"no label {label} for {rs.name}")
        if label == "IIa":
            return _v1_vector(rs, {rho: 1})
        if label == "IIb":
            return _v1_vector(rs, {sigt: 1})
        if label == "VI":
            return _v1_vector(rs, {rho: 1, dmr: _int_param(d, "c")})
        if label == "III":
            if l == 3:
                return _v1_vector(rs, {rho: 1, sigt: _int_param(d, "c")})
            if names:
                raise InvalidDescriptor(
                    f"label III of {rs.name} takes no parameters"
                )
            return _v1_vector(rs, {rho: 1, sigt: 1})
        raise InvalidDescriptor(f"no label {label} for {rs.name}")

    if rs.family != "D":
        raise UnsupportedFamily(
            f"orbit classification covers families A and D, not {rs.name}"
        )
    _require_odd(K)
    lam, rho, sig, tau = standard_quadruple(rs)
    if label == "I":
        return _v1_vector(rs, {})
    if label == "II":
        return _v1_vector(rs, {lam: 1})
    if label == "IIIa":
        return _v1_vector(rs, {lam: 1, rho: _int_param(d, "rho_class")})
    if label == "IIIb":
        if rs.rank == 4:
            return _v1_vector(rs, {lam: 1, sig: _int_param(d, "sigma_class")})
        if names:
            raise InvalidDescriptor(
                f"label IIIb of {rs.name} takes no parameters"
            )
        return _v1_vector(rs, {lam: 1, sig: 1})
    if label == "IIIc" and rs.rank == 4:
        return _v1_vector(rs, {lam: 1, tau: _int_param(d, "tau_class")})
    if label == "IV":
        r = _int_param(d, "rho_class")
        if rs.rank == 4:
            return _v1_vector(rs, {lam: 1, rho: r,
                                   sig: _int_param(d, "sigma_class")})
        return _v1_vector(rs, {lam: 1, rho: r, sig: 1})
    if label == "V":
        k = K.of(_int_param(d, "k"))
        if K.is_zero(k):
            raise InvalidDescriptor("label V needs a nonzero parameter k")
        r = K.of(_int_param(d, "rho_class"))
        if K.is_zero(r):
            raise InvalidDescriptor("rho_class must be a unit")
        if rs.rank == 4:
            s = K.of(_int_param(d, "sigma_class"))
            if K.is_zero(s):
                raise InvalidDescriptor("sigma_class must be a unit")
            t = K.mul(k, K.inv(K.mul(r, s)))
            return _v1_vector(rs, {lam: 1, rho: r, sig: s, tau: t})
        t = K.mul(k, K.inv(r))
        return _v1_vector(rs, {lam: 1, rho: r, sig: 1, tau: t})
    raise InvalidDescriptor(f"no label {label} for {rs.name}")


# -- the full predicted orbit list ------------------------------------------------


def all_descriptors(table: StructureConstantTable, K) -> list[OrbitDescriptor]:
    """Every orbit descriptor of V1 for this system over K, fixed order."""
    rs = table.rs
    p = _field_p(K)
    if rs.family == "A":
        l = rs.rank
        out = [_mkdesc(rs, p, "I")]
        if l == 1:
            return out
        if l == 2:
            out += [_mkdesc(rs, p, "IIa", rho=a) for a in K.units()]
            out += [_mkdesc(rs, p, "IIb", delta_minus_rho=b)
                    for b in K.units()]
            out += [
                _mkdesc(rs, p, "VI", rho=a, delta_minus_rho=b)
                for a in K.units() for b in K.units()
            ]
            return out
        out.append(_mkdesc(rs, p, "IIa"))
        out.append(_mkdesc(rs, p, "IIb"))
        if l == 3:
            out += [_mkdesc(rs, p, "III", c=c) for c in K.units()]
        else:
            out.append(_mkdesc(rs, p, "III"))
        out += [_mkdesc(rs, p, "VI", c=c) for c in K.units()]
        return out
    if rs.family != "D":
        raise UnsupportedFamily(
            f"orbit classification covers families A and D, not {rs.name}"
        )
    _require_odd(K)
    nu = K.least_nonresidue()
    out = [_mkdesc(rs, p, "I"), _mkdesc(rs, p, "II")]
    if rs.rank == 4:
        out += [_mkdesc(rs, p, "IIIa", rho_class=str(r)) for r in (1, nu)]
        out += [_mkdesc(rs, p, "IIIb", sigma_class=str(r)) for r in (1, nu)]
        out += [_mkdesc(rs, p, "IIIc", tau_class=str(r)) for r in (1, nu)]
        out += [
            _mkdesc(rs, p, "IV", rho_class=str(r), sigma_class=str(s))
            for r in (1, nu) for s in (1, nu)
        ]
        for k in K.units():
            for r in norm_class_reps(K, k):
                for s in norm_class_reps(K, k):
                    out.append(_mkdesc(rs, p, "V", k=k,
                                       rho_class=str(r), sigma_class=str(s)))
        return out
    out += [_mkdesc(rs, p, "IIIa", rho_class=str(r)) for r in (1, nu)]
    out.append(_mkdesc(rs, p, "IIIb"))
    out += [_mkdesc(rs, p, "IV", rho_class=str(r)) for r in (1, nu)]
    for k in K.units():
        for r in norm_class_reps(K, k):
            out.append(_mkdesc(rs, p, "V", k=k, rho_class=str(r)))
    return out
