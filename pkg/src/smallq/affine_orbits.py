"""Weyl group orbits on restricted weight and root lattices mod l.

Two actions of the finite Weyl group W on the l^r residue points:

* the shifted ("bullet") action  w . lam = w(lam + rho) - rho  mod l,
  whose orbits index the blocks, and
* the natural ("circ") action    w o lam = w(lam)             mod l,

either on (P/lP)_+ in fundamental-weight coordinates or on Q/lQ in
simple-root coordinates.  Although the affine Weyl group is behind the
scenes, its translation part acts trivially mod l, so only the finite
W is ever applied.

Orbit representatives are the lexicographically smallest residue
tuples, orbits are listed in representative order, and the enumeration
is fully deterministic, so tables can serve as golden files.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rootdata import RootDatum, WeylElement, check_l, pairing

__all__ = [
    "ResWeight",
    "OrbitRecord",
    "OrbitTable",
    "InadmissibleError",
    "BudgetExceededError",
    "bullet_act",
    "circ_act",
    "orbit_table",
    "orbit_correspondence",
    "ACTIONS",
    "DEFAULT_BUDGET",
]

ResWeight = tuple  # r-tuple of residues in [0, l)

ACTIONS = ("bullet", "circ", "circ_q")
DEFAULT_BUDGET = 10**6


class InadmissibleError(ValueError):
    """Raised when l fails the admissibility conditions."""

    def __init__(self, verdict):
        self.verdict = verdict
        super().__init__(str(verdict))


class BudgetExceededError(ValueError):
    pass


def bullet_act(w: WeylElement, lam: ResWeight, l: int) -> ResWeight:
    """Shifted action w(lam + rho) - rho, residues taken mod l."""
    shifted = tuple(x + 1 for x in lam)
    img = w.apply_weight(shifted)
    return tuple((x - 1) % l for x in img)


def circ_act(w: WeylElement, lam: ResWeight, l: int, on_roots: bool = False) -> ResWeight:
    """Natural action w(lam) mod l (root coordinates when on_roots)."""
    img = w.apply_root(lam) if on_roots else w.apply_weight(lam)
    return tuple(x % l for x in img)


@dataclass(frozen=True)
class OrbitRecord:
    representative: ResWeight
    size: int
    stabilizer_order: int
    stabilizer_reflections: tuple  # positive roots alpha pairing to 0 mod l
    regular: bool


@dataclass
class OrbitTable:
    datum: RootDatum
    l: int
    action: str
    orbits: list

    @property
    def num_points(self) -> int:
        return self.l**self.datum.rank

    @property
    def representatives(self) -> list:
        return [o.representative for o in self.orbits]

    @property
    def regular_count(self) -> int:
        """|X|: number of points on regular orbits (trivial stabilizer)."""
        return sum(o.size for o in self.orbits if o.regular)

    @property
    def size_profile(self) -> dict:
        profile: dict[int, int] = {}
        for o in self.orbits:
            profile[o.size] = profile.get(o.size, 0) + 1
        return profile

    def orbit_of(self, point: ResWeight) -> OrbitRecord:
        for o in self.orbits:
            if point in _orbit_points(self.datum, self.l, self.action, o.representative):
                return o
        raise KeyError(point)


def _act(datum: RootDatum, l: int, action: str, w: WeylElement, point: ResWeight):
    if action == "bullet":
        return bullet_act(w, point, l)
    if action == "circ":
        return circ_act(w, point, l)
    if action == "circ_q":
        return circ_act(w, point, l, on_roots=True)
    raise ValueError(f"unknown action {action!r}")


def _orbit_points(datum: RootDatum, l: int, action: str, start: ResWeight) -> set:
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for p in frontier:
            for s in datum.simple_reflections:
                img = _act(datum, l, action, s, p)
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return seen


def _stabilizer_reflections(datum: RootDatum, l: int, action: str, rep: ResWeight):
    """Positive roots alpha with <rep (+rho), alpha> = 0 mod l."""
    if action == "bullet":
        point_wt = tuple(x + 1 for x in rep)
    elif action == "circ":
        point_wt = rep
    else:  # circ_q: rep in root coordinates, pair via weight coordinates
        point_wt = datum.weight_coords_of_root(rep)
    return tuple(
        alpha
        for alpha in datum.positive_roots
        if pairing(point_wt, alpha) % l == 0
    )


def orbit_table(
    datum: RootDatum,
    l: int,
    action: str = "bullet",
    budget: int = DEFAULT_BUDGET,
) -> OrbitTable:
    """Partition all l^r residue points into W-orbits with stabilizer data."""
    if action not in ACTIONS:
        raise ValueError(f"action must be one of {ACTIONS}, got {action!r}")
    verdict = check_l(datum, l)
    if not verdict.ok:
        raise InadmissibleError(verdict)
    npoints = l**datum.rank
    if npoints > budget:
        raise BudgetExceededError(
            f"l^r = {npoints} exceeds the enumeration budget {budget}"
        )

    orbits = []
    visited: set = set()
    order = datum.weyl_order
    for point in _lex_points(l, datum.rank):
        if point in visited:
            continue
        orbit = _orbit_points(datum, l, action, point)
        visited |= orbit
        size = len(orbit)
        if order % size:
            raise RuntimeError("orbit size does not divide |W|")
        stab_order = order // size
        reflections = _stabilizer_reflections(datum, l, action, point)
        orbits.append(
            OrbitRecord(
                representative=point,
                size=size,
                stabilizer_order=stab_order,
                stabilizer_reflections=reflections,
                regular=stab_order == 1,
            )
        )
    if sum(o.size for o in orbits) != npoints:
        raise RuntimeError("orbits do not partition the point set")
    return OrbitTable(datum=datum, l=l, action=action, orbits=orbits)


def _lex_points(l: int, rank: int):
    point = [0] * rank
    while True:
        yield tuple(point)
        i = rank - 1
        while i >= 0 and point[i] == l - 1:
            point[i] = 0
            i -= 1
        if i < 0:
            return
        point[i] += 1


@dataclass(frozen=True)
class OrbitMatch:
    beta: ResWeight  # circ-orbit representative in Q/lQ (root coords)
    mu: ResWeight  # the unique weight with <beta,.> = <mu,.> mod l
    bullet_representative: ResWeight
    size: int


def orbit_correspondence(datum: RootDatum, l: int, budget: int = DEFAULT_BUDGET):
    """Size-preserving bijection: circ-orbits on Q/lQ -> bullet-orbits.

    For beta in root coordinates, mu = Cartan . beta mod l is the unique
    restricted weight pairing like beta against all simple roots; the
    extra shift by rho matches natural orbits to shifted orbits.
    """
    circ_q = orbit_table(datum, l, action="circ_q", budget=budget)
    bullet = orbit_table(datum, l, action="bullet", budget=budget)
    rep_to_orbit = {}
    for rec in bullet.orbits:
        for p in _orbit_points(datum, l, "bullet", rec.representative):
            rep_to_orbit[p] = rec

    matches = []
    used = set()
    for rec in circ_q.orbits:
        mu = tuple(x % l for x in datum.weight_coords_of_root(rec.representative))
        lam = tuple((x - 1) % l for x in mu)
        target = rep_to_orbit[lam]
        if target.representative in used:
            raise RuntimeError("orbit correspondence is not injective")
        used.add(target.representative)
        if target.size != rec.size:
            raise RuntimeError(
                f"orbit sizes differ: {rec.size} vs {target.size} at beta={rec.representative}"
            )
        matches.append(
            OrbitMatch(
                beta=rec.representative,
                mu=mu,
                bullet_representative=target.representative,
                size=rec.size,
            )
        )
    if len(matches) != len(bullet.orbits):
        raise RuntimeError("orbit correspondence is not surjective")
    return matches
