"""Simply-laced root systems: Cartan data, roots, Weyl group, and the
admissibility test on the odd integer l.

Coordinate conventions (chosen so every pairing is integer-exact):

* weights are stored in fundamental-weight coordinates,
* roots in simple-root coordinates,
* the invariant form is normalized with <alpha, alpha> = 2, so
  <omega_i, alpha_j> = delta_ij and the pairing of a weight with a root
  is a plain dot product.  The fundamental-weight coordinates of a root
  beta are the matrix-vector product (Cartan) . beta.

Weyl elements carry two integer matrices: the action on weight
coordinates and the action on root coordinates (the latter is needed
for the natural action on Q/lQ).  Both are composed in lockstep, so no
transpose/inverse bookkeeping leaks out of this module.

l is admissible when it is odd, at least the Coxeter number, and prime
to det(Cartan); the verdict also reports whether the Cartan matrix is
invertible mod l (checked independently, prime by prime), which must
agree with the gcd criterion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

__all__ = [
    "RootDatum",
    "WeylElement",
    "Admissibility",
    "build",
    "cartan_matrix",
    "pairing",
    "check_l",
    "WEYL_MATERIALIZE_MAX_RANK",
]

WEYL_MATERIALIZE_MAX_RANK = 4

_E_WEYL_ORDER = {6: 51840, 7: 2903040, 8: 696729600}


def cartan_matrix(type_label: str, rank: int) -> list[list[int]]:
    """Cartan matrix of a simply-laced type (A r>=1, D r>=4, E 6..8)."""
    t = type_label.upper()
    if t == "A":
        if rank < 1:
            raise ValueError("type A needs rank >= 1")
        bonds = [(i, i + 1) for i in range(rank - 1)]
    elif t == "D":
        if rank < 4:
            raise ValueError("type D needs rank >= 4")
        bonds = [(i, i + 1) for i in range(rank - 2)] + [(rank - 3, rank - 1)]
    elif t == "E":
        if rank not in (6, 7, 8):
            raise ValueError("type E needs rank in {6, 7, 8}")
        # Bourbaki numbering: node 2 hangs off node 4 of the A-chain
        chain = [0, 2, 3, 4, 5, 6, 7][: rank - 1]
        bonds = [(chain[i], chain[i + 1]) for i in range(len(chain) - 1)]
        bonds.append((1, 3))
    else:
        raise ValueError(f"unknown simply-laced type {type_label!r}")
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i, j in bonds:
        a[i][j] = a[j][i] = -1
    return a


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element acting on weight and root coordinates."""

    matrix: tuple  # rows, action on fundamental-weight coordinates
    root_matrix: tuple  # rows, action on simple-root coordinates
    word: tuple  # indices of simple reflections, a shortest word

    def apply_weight(self, weight):
        return tuple(
            sum(row[j] * weight[j] for j in range(len(weight))) for row in self.matrix
        )

    def apply_root(self, root):
        return tuple(
            sum(row[j] * root[j] for j in range(len(root))) for row in self.root_matrix
        )

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement(
            _mat_mul(self.matrix, other.matrix),
            _mat_mul(self.root_matrix, other.root_matrix),
            self.word + other.word,
        )


def _mat_mul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def _identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


@dataclass
class RootDatum:
    """Root system data for one simply-laced simple type."""

    type_label: str
    rank: int
    cartan: tuple
    positive_roots: tuple  # root vectors in simple-root coordinates
    rho: tuple  # (1, ..., 1) in fundamental-weight coordinates
    highest_root: tuple
    coxeter_number: int
    det_cartan: int
    weyl_order: int
    simple_reflections: tuple  # WeylElement for each simple root
    weyl_elements: tuple | None = field(default=None, repr=False)

    @property
    def name(self) -> str:
        return f"{self.type_label}{self.rank}"

    def weight_coords_of_root(self, root):
        """Fundamental-weight coordinates of a root-lattice vector."""
        return tuple(
            sum(self.cartan[i][j] * root[j] for j in range(self.rank))
            for i in range(self.rank)
        )

    def reflection(self, root) -> WeylElement:
        """The reflection s_alpha for an arbitrary root alpha."""
        r = self.rank
        wt = self.weight_coords_of_root(root)
        # s(lam) = lam - <lam, alpha> alpha ; <lam, alpha> = lam . alpha
        m = tuple(
            tuple((1 if i == j else 0) - wt[i] * root[j] for j in range(r))
            for i in range(r)
        )
        # on root coordinates: s(beta) = beta - <beta, alpha> alpha
        rm = tuple(
            tuple((1 if i == j else 0) - root[i] * wt[j] for j in range(r))
            for i in range(r)
        )
        return WeylElement(m, rm, ())

    def generate_weyl(self):
        """Iterate over all Weyl group elements (BFS over shortest words)."""
        if self.weyl_elements is not None:
            yield from self.weyl_elements
            return
        yield from _weyl_closure(self.simple_reflections, self.rank)

    def longest_element(self) -> WeylElement:
        neg_rho = tuple(-x for x in self.rho)
        for w in self.generate_weyl():
            if w.apply_weight(self.rho) == neg_rho:
                return w
        raise RuntimeError("w0 not found; Weyl closure is broken")


def _weyl_closure(gens, rank):
    identity = WeylElement(_identity(rank), _identity(rank), ())
    seen = {identity.matrix}
    frontier = [identity]
    yield identity
    while frontier:
        new_frontier = []
        for w in frontier:
            for i, s in enumerate(gens):
                nxt = WeylElement(
                    _mat_mul(s.matrix, w.matrix),
                    _mat_mul(s.root_matrix, w.root_matrix),
                    (i,) + w.word,
                )
                if nxt.matrix not in seen:
                    seen.add(nxt.matrix)
                    new_frontier.append(nxt)
                    yield nxt
        frontier = new_frontier


def _int_det(matrix) -> int:
    """Determinant of an integer matrix by fraction-free Bareiss."""
    n = len(matrix)
    m = [list(row) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def build(type_label: str, rank: int) -> RootDatum:
    """Construct the full RootDatum for a simply-laced type."""
    cartan = tuple(tuple(row) for row in cartan_matrix(type_label, rank))
    r = rank

    # simple reflections, acting on both coordinate systems
    gens = []
    for i in range(r):
        m = tuple(
            tuple((1 if k == j else 0) - (cartan[k][i] if j == i else 0) for j in range(r))
            for k in range(r)
        )
        rm = tuple(
            tuple((1 if k == j else 0) - (cartan[i][j] if k == i else 0) for j in range(r))
            for k in range(r)
        )
        gens.append(WeylElement(m, rm, (i,)))
    gens = tuple(gens)

    # all roots: closure of the simple roots under the simple reflections
    simple_roots = [tuple(1 if j == i else 0 for j in range(r)) for i in range(r)]
    roots = set(simple_roots)
    frontier = list(simple_roots)
    while frontier:
        nxt = []
        for beta in frontier:
            for s in gens:
                img = s.apply_root(beta)
                if img not in roots:
                    roots.add(img)
                    nxt.append(img)
        frontier = nxt
    positive = sorted(b for b in roots if all(c >= 0 for c in b))
    if 2 * len(positive) != len(roots):
        raise RuntimeError("root closure produced an asymmetric root set")

    coxeter = 2 * len(positive) // r
    det = _int_det(cartan)

    t = type_label.upper()
    if t == "A":
        weyl_order = math.factorial(r + 1)
    elif t == "D":
        weyl_order = 2 ** (r - 1) * math.factorial(r)
    else:
        weyl_order = _E_WEYL_ORDER[r]

    highest = max(positive, key=sum)

    datum = RootDatum(
        type_label=t,
        rank=r,
        cartan=cartan,
        positive_roots=tuple(positive),
        rho=(1,) * r,
        highest_root=highest,
        coxeter_number=coxeter,
        det_cartan=det,
        weyl_order=weyl_order,
        simple_reflections=gens,
    )
    if r <= WEYL_MATERIALIZE_MAX_RANK:
        elements = tuple(_weyl_closure(gens, r))
        if len(elements) != weyl_order:
            raise RuntimeError(
                f"Weyl closure gave {len(elements)} elements, expected {weyl_order}"
            )
        datum.weyl_elements = elements
    return datum


def pairing(mu, alpha) -> int:
    """<mu, alpha> for mu in weight coordinates, alpha in root coordinates."""
    if len(mu) != len(alpha):
        raise ValueError("weight/root dimension mismatch")
    return sum(m * a for m, a in zip(mu, alpha))


@dataclass(frozen=True)
class Admissibility:
    """check_l verdict; `ok` iff no failure reasons."""

    l: int
    datum_name: str
    ok: bool
    reasons: tuple
    gcd_with_det: int
    cartan_invertible_mod_l: bool
    tests_agree: bool

    def __str__(self):
        if self.ok:
            return f"{self.datum_name}, l={self.l}: ok"
        return f"{self.datum_name}, l={self.l}: fails ({'; '.join(self.reasons)})"


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _invertible_mod_prime(matrix, p: int) -> bool:
    n = len(matrix)
    m = [[x % p for x in row] for row in matrix]
    for col in range(n):
        piv = None
        for row in range(col, n):
            if m[row][col] % p != 0:
                piv = row
                break
        if piv is None:
            return False
        m[col], m[piv] = m[piv], m[col]
        inv = pow(m[col][col], -1, p)
        m[col] = [(x * inv) % p for x in m[col]]
        for row in range(n):
            if row != col and m[row][col]:
                c = m[row][col]
                m[row] = [(a - c * b) % p for a, b in zip(m[row], m[col])]
    return True


def check_l(datum: RootDatum, l: int) -> Admissibility:
    """Admissibility of l: odd, >= Coxeter number, prime to det(Cartan).

    The bilinear form q^(mu|nu) on the torus part is nondegenerate
    exactly when the Cartan matrix is invertible mod l; that is checked
    directly (per prime factor of l, with Gaussian elimination over
    F_p) and compared against the gcd criterion.
    """
    reasons = []
    if l % 2 == 0:
        reasons.append("l must be odd")
    if l < datum.coxeter_number:
        reasons.append(f"l must be >= Coxeter number h={datum.coxeter_number}")
    g = math.gcd(l, abs(datum.det_cartan))
    if g != 1:
        reasons.append(f"gcd(l, det a_ij)={g}")
    invertible = all(
        _invertible_mod_prime(datum.cartan, p) for p in _prime_factors(l)
    )
    agree = invertible == (g == 1)
    if not agree:
        reasons.append("mod-l invertibility disagrees with the gcd test")
    return Admissibility(
        l=l,
        datum_name=datum.name,
        ok=not reasons,
        reasons=tuple(reasons),
        gcd_with_det=g,
        cartan_invertible_mod_l=invertible,
        tests_agree=agree,
    )
