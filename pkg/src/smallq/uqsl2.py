"""Exact model of the small quantum group u = u_q(sl2), dim l^3.

Generators E, F, K with K^l = 1, E^l = F^l = 0 and

    K E = q^2 E K,   K F = q^-2 F K,   E F - F E = (K - K^-1)/(q - q^-1),

PBW basis F^a K^b E^c, (a, b, c) in [0, l)^3, coefficients in Q(zeta_l).

Hopf structure.  The presentation does not fix a coproduct; we use

    D(E) = E ox 1 + K ox E,   D(F) = F ox K^-1 + 1 ox F,   D(K) = K ox K,
    S(E) = -K^-1 E,  S(F) = -F K,  S(K) = K^-1,

which gives S^2(a) = K^-1 a K = K_{-2rho} a K_{2rho} (the convention
anchor) and is the unique choice, up to swapping the tensor factors,
under which the standard root-of-unity R-matrix

    R = (1/l) sum_{m,n} q^{-2mn} K^m ox K^n
            . sum_s  q^{s(s-1)/2} (q - q^-1)^s / [s]!  F^s ox E^s

intertwines D with D^op.  The quasitriangularity identities are
verified exactly by the test suite; a failure there means the
convention is wrong, and it fails there rather than downstream.

Distinguished structure computed here (all by exact linear algebra):

* the two-sided integral Lambda (unique up to scalar; normalized to
  have coefficient 1 on F^(l-1) K^b0 E^(l-1) for the smallest b0),
* the dual right integral lambda_r with sum lambda_r(x_(1)) x_(2)
  = lambda_r(x) 1, normalized by lambda_r(Lambda) = 1,
* phi(a) = a -> lambda_r (i.e. b |-> lambda_r(S(a) b)) and its inverse
  phi^-1(p) = Lambda <- p = sum p(Lambda_(1)) Lambda_(2),
* the transmutation J(p) = m(p ox id)(R21 R12),
* the quantum Fourier transform FT = J o phi on the center, with
  FT^2 = kappa S^-1 and FT(1) = kappa Lambda for one global scalar
  kappa fixed by the normalizations (see sl2_checks),
* the center Z (commutant of E, F, K), the subalgebras Ztilde = J(R_r)
  and Zprime = phi^-1(R_r), and their intersection/sum/socle/idempotent
  structure.

Twisted characters.  C_r = {p : p(ab) = p(b S^-2(a))} is the image of
the center under phi.  For a cocommutative mu, the shifted functional
K_{-2rho} -> mu, explicitly y |-> mu(K_{2rho} y), lies in C_r whenever
S^2 = Ad(K_{-2rho}); so with the convention above the C_r-valued trace
twist is K_{+2rho} = K, and q_character(i) is a |-> Tr_{L(i)}(rho(K a)).
Membership in C_r is asserted by the tests (the K^-1 twist lands in C_l
instead).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from gmpy2 import mpq

from . import linalg
from .cyclotomic import CycloNum, cyclo_field

__all__ = ["UqSL2", "AlgElem", "Functional", "TensorElem", "SimpleModule"]


class AlgElem:
    """Element of u_q(sl2) in sparse PBW coordinates F^a K^b E^c."""

    __slots__ = ("alg", "coeffs")

    def __init__(self, alg: "UqSL2", coeffs: dict):
        self.alg = alg
        self.coeffs = {m: c for m, c in coeffs.items() if c}

    def __add__(self, other):
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            cur = out.get(m)
            new = cur + c if cur is not None else c
            if new:
                out[m] = new
            else:
                del out[m]
        return AlgElem(self.alg, out)

    def __sub__(self, other):
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            cur = out.get(m)
            new = cur - c if cur is not None else -c
            if new:
                out[m] = new
            else:
                del out[m]
        return AlgElem(self.alg, out)

    def __neg__(self):
        return AlgElem(self.alg, {m: -c for m, c in self.coeffs.items()})

    def scale(self, c):
        if not c:
            return self.alg.zero()
        return AlgElem(self.alg, {m: c * v for m, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, AlgElem):
            return self.alg.multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        return isinstance(other, AlgElem) and self.coeffs == other.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for (a, b, c) in sorted(self.coeffs):
            factors = []
            for sym, e in (("F", a), ("K", b), ("E", c)):
                if e:
                    factors.append(f"{sym}^{e}" if e > 1 else sym)
            parts.append(f"({self.coeffs[(a, b, c)]})*{''.join(factors) or '1'}")
        return " + ".join(parts)


class Functional:
    """Element of the dual u*, stored by its values on the PBW basis."""

    __slots__ = ("alg", "values")

    def __init__(self, alg: "UqSL2", values: dict):
        self.alg = alg
        self.values = {m: c for m, c in values.items() if c}

    def __call__(self, x: AlgElem | tuple) -> CycloNum:
        if isinstance(x, tuple):
            return self.values.get(x, self.alg.field.zero)
        total = self.alg.field.zero
        for m, c in x.coeffs.items():
            v = self.values.get(m)
            if v is not None:
                total = total + v * c
        return total

    def __add__(self, other):
        out = dict(self.values)
        for m, c in other.values.items():
            cur = out.get(m)
            new = cur + c if cur is not None else c
            if new:
                out[m] = new
            else:
                del out[m]
        return Functional(self.alg, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        if not c:
            return Functional(self.alg, {})
        return Functional(self.alg, {m: c * v for m, v in self.values.items()})

    def __mul__(self, other):
        if isinstance(other, Functional):
            return self.alg.convolve(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        return isinstance(other, Functional) and self.values == other.values

    def __bool__(self):
        return bool(self.values)

    def __repr__(self):
        n = len(self.values)
        return f"Functional(l={self.alg.l}, {n} nonzero values)"


class TensorElem:
    """Element of u ox u as a list of pure tensors, with an on-demand
    dense normal form (dict keyed by PBW monomial pairs).

    Operations are independent of the pure-tensor decomposition because
    comparisons and contractions go through the grid.
    """

    def __init__(self, alg: "UqSL2", pairs: list | None = None, grid: dict | None = None):
        self.alg = alg
        self.pairs = pairs if pairs is not None else []
        self._grid = grid

    def grid(self) -> dict:
        if self._grid is None:
            out: dict = {}
            for left, right in self.pairs:
                for g, cg in left.coeffs.items():
                    for h, ch in right.coeffs.items():
                        c = cg * ch
                        key = (g, h)
                        cur = out.get(key)
                        new = cur + c if cur is not None else c
                        if new:
                            out[key] = new
                        else:
                            del out[key]
            self._grid = out
        return self._grid

    def __add__(self, other):
        return TensorElem(self.alg, self.pairs + other.pairs)

    def __mul__(self, other):
        out: dict = {}
        alg = self.alg
        for (g1, h1), c1 in self.grid().items():
            for (g2, h2), c2 in other.grid().items():
                c = c1 * c2
                left = alg.mono_mul(g1, g2)
                right = alg.mono_mul(h1, h2)
                for gm, gc in left.items():
                    for hm, hc in right.items():
                        v = c * gc * hc
                        key = (gm, hm)
                        cur = out.get(key)
                        new = cur + v if cur is not None else v
                        if new:
                            out[key] = new
                        else:
                            del out[key]
        return TensorElem(self.alg, [], grid=out)

    def __eq__(self, other):
        return isinstance(other, TensorElem) and self.grid() == other.grid()

    def contract_left(self, p: Functional) -> AlgElem:
        """(p ox id) applied to this tensor."""
        out: dict = {}
        for (g, h), c in self.grid().items():
            v = p.values.get(g)
            if v is None:
                continue
            cur = out.get(h)
            new = cur + v * c if cur is not None else v * c
            if new:
                out[h] = new
            else:
                del out[h]
        return AlgElem(self.alg, out)

    def swap(self) -> "TensorElem":
        return TensorElem(
            self.alg, [(r, l) for l, r in self.pairs],
            grid=None if self._grid is None else {(h, g): c for (g, h), c in self._grid.items()},
        )


@dataclass
class SimpleModule:
    """The (i+1)-dimensional simple module L(i), 0 <= i <= l-1.

    K acts diagonally with entries q^(i-2k); E and F raise and lower
    with E v_k = [k][i-k+1] v_(k-1), F v_k = v_(k+1).
    """

    alg: "UqSL2"
    highest_weight: int
    e_matrix: list = field(repr=False, default=None)
    f_matrix: list = field(repr=False, default=None)
    k_matrix: list = field(repr=False, default=None)

    def __post_init__(self):
        alg, i = self.alg, self.highest_weight
        fld = alg.field
        n = i + 1
        zero = fld.zero
        e = [[zero] * n for _ in range(n)]
        f = [[zero] * n for _ in range(n)]
        k = [[zero] * n for _ in range(n)]
        for t in range(n):
            k[t][t] = fld.qpow(i - 2 * t)
            if t + 1 < n:
                f[t + 1][t] = fld.one
                e[t][t + 1] = fld.qint(t + 1) * fld.qint(i - t)
        self.e_matrix, self.f_matrix, self.k_matrix = e, f, k

    @property
    def dim(self) -> int:
        return self.highest_weight + 1

    def matrix_of(self, x: AlgElem) -> list:
        alg = self.alg
        n = self.dim
        out = [[alg.field.zero] * n for _ in range(n)]
        for (a, b, c), coeff in x.coeffs.items():
            m = _mat_mul_f(
                self._f_pow(a), _mat_mul_f(self._k_pow(b), self._e_pow(c), alg.field),
                alg.field,
            )
            for r in range(n):
                for s in range(n):
                    if m[r][s]:
                        out[r][s] = out[r][s] + coeff * m[r][s]
        return out

    def _e_pow(self, c):
        return self._pow_cache("e", self.e_matrix, c)

    def _f_pow(self, a):
        return self._pow_cache("f", self.f_matrix, a)

    def _k_pow(self, b):
        return self._pow_cache("k", self.k_matrix, b)

    def _pow_cache(self, name, mat, e):
        cache = getattr(self, "_powers", None)
        if cache is None:
            cache = {}
            self._powers = cache
        key = (name, e)
        if key not in cache:
            if e == 0:
                n = self.dim
                fld = self.alg.field
                cache[key] = [
                    [fld.one if r == s else fld.zero for s in range(n)] for r in range(n)
                ]
            else:
                cache[key] = _mat_mul_f(
                    self._pow_cache(name, mat, e - 1), mat, self.alg.field
                )
        return cache[key]

    def scalar_action(self, z: AlgElem) -> CycloNum:
        """The scalar by which a central element acts; raises if not scalar."""
        m = self.matrix_of(z)
        n = self.dim
        s = m[0][0]
        for r in range(n):
            for t in range(n):
                expect = s if r == t else self.alg.field.zero
                if m[r][t] != expect:
                    raise ValueError("element does not act as a scalar on L(i)")
        return s


def _mat_mul_f(a, b, fld):
    n = len(a)
    p = len(b[0])
    out = [[fld.zero] * p for _ in range(n)]
    for i in range(n):
        ai = a[i]
        for k in range(len(b)):
            c = ai[k]
            if c:
                bk = b[k]
                oi = out[i]
                for j in range(p):
                    if bk[j]:
                        oi[j] = oi[j] + c * bk[j]
    return out


@dataclass
class CentralSubalgebras:
    """Bases for the central subalgebra structure at a fixed l.

    Ztilde = J(span of q-characters), Zprime = phi^-1(same);
    intersection and sum by exact linear algebra; radical of Z from the
    trace form, socle as its annihilator; idempotents one per block.
    """

    l: int
    ztilde_basis: list
    zprime_basis: list
    intersection_basis: list
    sum_basis: list
    idempotents: list
    radical_z: list
    socle_z: list

    @property
    def dims(self) -> tuple:
        return (
            len(self.ztilde_basis),
            len(self.zprime_basis),
            len(self.intersection_basis),
            len(self.sum_basis),
        )


class UqSL2:
    """The small quantum group u_q(sl2) at a primitive l-th root of unity."""

    def __init__(self, l: int):
        if l < 3 or l % 2 == 0:
            raise ValueError(f"l must be an odd integer >= 3, got {l}")
        self.l = l
        self.field = cyclo_field(l)
        self._ef_table: dict = {}
        self._delta_mono: dict = {}
        self._delta_f_pow: list | None = None
        self._delta_e_pow: list | None = None
        self._cache: dict = {}
        self.unit_mono = (0, 0, 0)

    # ---------------- basis and element constructors ----------------

    def monomials(self) -> list:
        l = self.l
        return [
            (a, b, c)
            for a in range(l)
            for b in range(l)
            for c in range(l)
        ]

    def zero(self) -> AlgElem:
        return AlgElem(self, {})

    def one(self) -> AlgElem:
        return AlgElem(self, {self.unit_mono: self.field.one})

    def basis_elem(self, mono) -> AlgElem:
        return AlgElem(self, {mono: self.field.one})

    def E(self) -> AlgElem:
        return self.basis_elem((0, 0, 1))

    def F(self) -> AlgElem:
        return self.basis_elem((1, 0, 0))

    def K(self, power: int = 1) -> AlgElem:
        return self.basis_elem((0, power % self.l, 0))

    def generators(self) -> list:
        return [self.E(), self.F(), self.K()]

    def elem(self, coeffs: dict) -> AlgElem:
        l = self.l
        fixed = {}
        for (a, b, c), v in coeffs.items():
            if not 0 <= a < l or not 0 <= c < l:
                raise ValueError("F/E exponents out of range")
            if not isinstance(v, CycloNum):
                v = self.field.from_rational(v)
            if v:
                fixed[(a, b % l, c)] = v
        return AlgElem(self, fixed)

    def random_element(self, rng: random.Random, terms: int = 3) -> AlgElem:
        out = self.zero()
        l = self.l
        for _ in range(terms):
            mono = (rng.randrange(l), rng.randrange(l), rng.randrange(l))
            coeff = self.field.qpow(rng.randrange(l)) * rng.randint(-3, 3)
            out = out + AlgElem(self, {mono: coeff})
        return out

    # ---------------- multiplication ----------------

    def _ef(self, c: int, a: int) -> dict:
        """PBW normal form of E^c F^a, as {(a', b'mod l, c'): coeff}.

        Built from E F^a = F^a E
        + [a] F^(a-1) (q^(1-a) K - q^(a-1) K^-1) / (q - q^-1).
        """
        key = (c, a)
        cached = self._ef_table.get(key)
        if cached is not None:
            return cached
        fld = self.field
        if c == 0:
            result = {(a, 0, 0): fld.one}
        elif a == 0:
            result = {(0, 0, c): fld.one}
        else:
            result = {}
            prev = self._ef(c - 1, a)  # E^(c-1) F^a
            for (aa, bb, cc), coeff in prev.items():
                if cc + 1 < self.l:
                    _acc(result, (aa, bb, cc + 1), coeff)
            front = fld.qint(a) / (fld.qpow(1) - fld.qpow(-1))
            prev2 = self._ef(c - 1, a - 1)  # E^(c-1) F^(a-1)
            cpl = front * fld.qpow(1 - a)
            cmi = front * fld.qpow(a - 1)
            for (aa, bb, cc), coeff in prev2.items():
                # multiply by K / K^-1 on the right: E^cc K = q^(-2cc) K E^cc
                _acc(result, (aa, (bb + 1) % self.l, cc), coeff * cpl * fld.qpow(-2 * cc))
                _acc(result, (aa, (bb - 1) % self.l, cc), -coeff * cmi * fld.qpow(2 * cc))
            result = {m: v for m, v in result.items() if v}
        self._ef_table[key] = result
        return result

    def mono_mul(self, m1: tuple, m2: tuple) -> dict:
        """Product of two PBW monomials, in PBW normal form."""
        (a1, b1, c1) = m1
        (a2, b2, c2) = m2
        l = self.l
        fld = self.field
        out: dict = {}
        for (aa, bb, cc), coeff in self._ef(c1, a2).items():
            a = a1 + aa
            c = cc + c2
            if a >= l or c >= l:
                continue
            # K^b1 past F^aa, and K^b2 past E^cc
            scal = coeff * fld.qpow(-2 * aa * b1 - 2 * cc * b2)
            _acc(out, (a, (b1 + bb + b2) % l, c), scal)
        return {m: v for m, v in out.items() if v}

    def multiply(self, x: AlgElem, y: AlgElem) -> AlgElem:
        out: dict = {}
        for m1, c1 in x.coeffs.items():
            for m2, c2 in y.coeffs.items():
                c = c1 * c2
                for m, v in self.mono_mul(m1, m2).items():
                    _acc(out, m, c * v)
        return AlgElem(self, out)

    # ---------------- Hopf structure ----------------

    def counit(self, x: AlgElem) -> CycloNum:
        total = self.field.zero
        for (a, b, c), coeff in x.coeffs.items():
            if a == 0 and c == 0:
                total = total + coeff
        return total

    def counit_functional(self) -> Functional:
        return Functional(
            self,
            {(0, b, 0): self.field.one for b in range(self.l)},
        )

    def _delta_factor_powers(self):
        if self._delta_f_pow is None:
            one = self.field.one
            l = self.l
            unit = {(self.unit_mono, self.unit_mono): one}
            df = [unit]
            de = [unit]
            delta_f = {((1, 0, 0), (0, l - 1, 0)): one, (self.unit_mono, (1, 0, 0)): one}
            delta_e = {((0, 0, 1), self.unit_mono): one, ((0, 1, 0), (0, 0, 1)): one}
            for a in range(1, l):
                df.append(self._grid_mul(df[-1], delta_f))
                de.append(self._grid_mul(de[-1], delta_e))
            self._delta_f_pow = df
            self._delta_e_pow = de
        return self._delta_f_pow, self._delta_e_pow

    def _grid_mul(self, grid1: dict, grid2: dict) -> dict:
        out: dict = {}
        for (g1, h1), c1 in grid1.items():
            for (g2, h2), c2 in grid2.items():
                c = c1 * c2
                for gm, gc in self.mono_mul(g1, g2).items():
                    for hm, hc in self.mono_mul(h1, h2).items():
                        _acc(out, (gm, hm), c * gc * hc)
        return {k: v for k, v in out.items() if v}

    def delta_mono(self, mono: tuple) -> dict:
        """Coproduct of a PBW monomial as a tensor grid."""
        cached = self._delta_mono.get(mono)
        if cached is not None:
            return cached
        (a, b, c) = mono
        df, de = self._delta_factor_powers()
        kk = {((0, b, 0), (0, b, 0)): self.field.one}
        grid = self._grid_mul(self._grid_mul(df[a], kk), de[c])
        self._delta_mono[mono] = grid
        return grid

    def coproduct(self, x: AlgElem) -> TensorElem:
        out: dict = {}
        for mono, coeff in x.coeffs.items():
            for key, c in self.delta_mono(mono).items():
                _acc(out, key, coeff * c)
        return TensorElem(self, [], grid={k: v for k, v in out.items() if v})

    def antipode(self, x: AlgElem) -> AlgElem:
        """S(F^a K^b E^c) = S(E)^c S(K^b) S(F)^a, an anti-homomorphism."""
        out = self.zero()
        fld = self.field
        l = self.l
        for (a, b, c), coeff in x.coeffs.items():
            sign = -1 if (a + c) % 2 else 1
            scal = coeff * fld.qpow(c * (c - 1) - a * (a - 1)) * sign
            # (-K^-1 E)^c = (-1)^c q^(c(c-1)) K^-c E^c ; (-F K)^a = (-1)^a q^(-a(a-1)) F^a K^a
            left = self.basis_elem((0, (-c - b) % l, c))  # K^(-c) E^c K^(-b)
            # K^(-b) commuted past E^c already:
            scal = scal * fld.qpow(2 * b * c)
            right = self.basis_elem((a, a % l, 0))
            out = out + (left * right).scale(scal)
        return out

    def antipode_inv(self, x: AlgElem) -> AlgElem:
        """S^-1(a) = K S(a) K^-1 (from S^2 = Ad(K^-1))."""
        k = self.K(1)
        kinv = self.K(-1)
        return k * self.antipode(x) * kinv

    def delta_op_mono(self, mono: tuple) -> dict:
        return {(h, g): c for (g, h), c in self.delta_mono(mono).items()}

    # ---------------- R-matrix ----------------

    def r_matrix_terms(self) -> list:
        """R as pure tensors [(coeff, left mono, right mono)]."""
        if "R" not in self._cache:
            l = self.l
            fld = self.field
            inv_l = fld.from_rational(mpq(1, l))
            qm1 = fld.qpow(1) - fld.qpow(-1)
            theta = []
            for s in range(l):
                cs = fld.qpow((s * (s - 1)) // 2) * (qm1**s) / fld.qfact(s)
                theta.append(cs)
            terms = []
            for m in range(l):
                for n in range(l):
                    cart = inv_l * fld.qpow(-2 * m * n)
                    for s in range(l):
                        coeff = cart * theta[s] * fld.qpow(-2 * s * m)
                        if coeff:
                            terms.append((coeff, (s, m, 0), (0, n, s)))
            self._cache["R"] = terms
        return self._cache["R"]

    def r_matrix(self) -> TensorElem:
        pairs = [
            (self.basis_elem(g).scale(c), self.basis_elem(h))
            for c, g, h in self.r_matrix_terms()
        ]
        return TensorElem(self, pairs)

    def monodromy_grid(self) -> dict:
        """M = R21 R12 as a tensor grid."""
        if "M" not in self._cache:
            terms = self.r_matrix_terms()
            out: dict = {}
            for c1, g1, h1 in terms:  # R21 contributes (h1, g1)
                for c2, g2, h2 in terms:
                    c = c1 * c2
                    left = self.mono_mul(h1, g2)
                    if not left:
                        continue
                    right = self.mono_mul(g1, h2)
                    for gm, gc in left.items():
                        for hm, hc in right.items():
                            _acc(out, (gm, hm), c * gc * hc)
            self._cache["M"] = {k: v for k, v in out.items() if v}
        return self._cache["M"]

    def monodromy(self) -> TensorElem:
        return TensorElem(self, [], grid=dict(self.monodromy_grid()))

    # ---------------- integrals ----------------

    def integral(self) -> AlgElem:
        """The two-sided integral Lambda, solved from x Lambda = eps(x) Lambda
        = Lambda x for the generators; the solution space must be 1-dim."""
        if "Lambda" not in self._cache:
            monos = self.monomials()
            rows: dict = {}
            one = self.field.one
            # E z = 0, z E = 0, F z = 0, z F = 0
            for gen_idx, g in enumerate([(0, 0, 1), (1, 0, 0)]):
                for x in monos:
                    for m, v in self.mono_mul(g, x).items():
                        _acc(rows.setdefault(("L", gen_idx, m), {}), x, v)
                    for m, v in self.mono_mul(x, g).items():
                        _acc(rows.setdefault(("R", gen_idx, m), {}), x, v)
            # K z = z, z K = z
            kmono = (0, 1, 0)
            for x in monos:
                for m, v in self.mono_mul(kmono, x).items():
                    _acc(rows.setdefault(("L", "K", m), {}), x, v)
                _acc(rows.setdefault(("L", "K", x), {}), x, -one)
                for m, v in self.mono_mul(x, kmono).items():
                    _acc(rows.setdefault(("R", "K", m), {}), x, v)
                _acc(rows.setdefault(("R", "K", x), {}), x, -one)
            all_rows = [r for r in rows.values() if r]
            kernel = linalg.kernel_basis(all_rows, monos)
            if len(kernel) != 1:
                raise RuntimeError(
                    f"two-sided integral space has dimension {len(kernel)}, expected 1"
                )
            vec = kernel[0]
            top = min(
                (m for m in vec if m[0] == self.l - 1 and m[2] == self.l - 1),
                key=lambda m: m[1],
            )
            lam = AlgElem(self, vec).scale(self.field.one / vec[top])
            self._cache["Lambda"] = lam
        return self._cache["Lambda"]

    def dual_right_integral(self) -> Functional:
        """lambda_r with sum lambda_r(x_(1)) x_(2) = lambda_r(x) 1 for all x,
        normalized by lambda_r(Lambda) = 1."""
        if "lambda_r" not in self._cache:
            monos = self.monomials()
            rows: dict = {}
            for x in monos:
                grid = self.delta_mono(x)
                by_right: dict = {}
                for (g, h), c in grid.items():
                    by_right.setdefault(h, {})
                    cur = by_right[h].get(g)
                    by_right[h][g] = cur + c if cur is not None else c
                for h, row in by_right.items():
                    key = (x, h)
                    row = {g: c for g, c in row.items() if c}
                    if h == self.unit_mono:
                        cur = row.get(x, self.field.zero)
                        row[x] = cur - self.field.one
                        if not row[x]:
                            del row[x]
                    if row:
                        rows[key] = row
            kernel = linalg.kernel_basis(rows.values(), monos)
            if len(kernel) != 1:
                raise RuntimeError(
                    f"dual right integral space has dimension {len(kernel)}, expected 1"
                )
            lam_r = Functional(self, kernel[0])
            scale = lam_r(self.integral())
            if not scale:
                raise RuntimeError("lambda_r(Lambda) = 0; normalization impossible")
            self._cache["lambda_r"] = lam_r.scale(self.field.one / scale)
        return self._cache["lambda_r"]

    # ---------------- module actions and phi ----------------

    def act_left(self, a: AlgElem, p: Functional) -> Functional:
        """(a -> p)(b) = p(S(a) b)."""
        sa = self.antipode(a)
        values = {}
        for h in self.monomials():
            total = self.field.zero
            for g, cg in sa.coeffs.items():
                prod = self.mono_mul(g, h)
                for m, v in prod.items():
                    pv = p.values.get(m)
                    if pv is not None:
                        total = total + cg * v * pv
            if total:
                values[h] = total
        return Functional(self, values)

    def act_right(self, a: AlgElem, p: Functional) -> AlgElem:
        """a <- p = sum p(a_(1)) a_(2)."""
        out: dict = {}
        for mono, coeff in a.coeffs.items():
            for (g, h), c in self.delta_mono(mono).items():
                pv = p.values.get(g)
                if pv is not None:
                    _acc(out, h, coeff * c * pv)
        return AlgElem(self, out)

    def _pair_rows(self) -> dict:
        """Rows T[g] = {h: lambda_r(g h)} of the integral pairing."""
        if "pair_rows" not in self._cache:
            lam_r = self.dual_right_integral()
            rows = {}
            for g in self.monomials():
                row = {}
                for h in self.monomials():
                    total = self.field.zero
                    for m, v in self.mono_mul(g, h).items():
                        pv = lam_r.values.get(m)
                        if pv is not None:
                            total = total + v * pv
                    if total:
                        row[h] = total
                rows[g] = row
            self._cache["pair_rows"] = rows
        return self._cache["pair_rows"]

    def phi(self, a: AlgElem) -> Functional:
        """phi(a) = a -> lambda_r, i.e. b |-> lambda_r(S(a) b)."""
        sa = self.antipode(a)
        rows = self._pair_rows()
        values: dict = {}
        for g, cg in sa.coeffs.items():
            for h, v in rows[g].items():
                cur = values.get(h)
                new = cur + cg * v if cur is not None else cg * v
                if new:
                    values[h] = new
                else:
                    del values[h]
        return Functional(self, values)

    def _delta_integral_grid(self) -> dict:
        if "delta_Lambda" not in self._cache:
            out: dict = {}
            for mono, coeff in self.integral().coeffs.items():
                for key, c in self.delta_mono(mono).items():
                    _acc(out, key, coeff * c)
            self._cache["delta_Lambda"] = {k: v for k, v in out.items() if v}
        return self._cache["delta_Lambda"]

    def phi_inv(self, p: Functional) -> AlgElem:
        """phi^-1(p) = Lambda <- p = sum p(Lambda_(1)) Lambda_(2)."""
        out: dict = {}
        for (g, h), c in self._delta_integral_grid().items():
            pv = p.values.get(g)
            if pv is not None:
                _acc(out, h, pv * c)
        return AlgElem(self, out)

    def convolve(self, p: Functional, r: Functional) -> Functional:
        """(p r)(x) = sum p(x_(1)) r(x_(2)), the product of u*."""
        values = {}
        for mono in self.monomials():
            total = self.field.zero
            for (g, h), c in self.delta_mono(mono).items():
                pv = p.values.get(g)
                if pv is None:
                    continue
                rv = r.values.get(h)
                if rv is not None:
                    total = total + c * pv * rv
            if total:
                values[mono] = total
        return Functional(self, values)

    # ---------------- transmutation and Fourier ----------------

    def transmute(self, p: Functional) -> AlgElem:
        """J(p) = m(p ox id)(R21 R12)."""
        out: dict = {}
        for (g, h), c in self.monodromy_grid().items():
            pv = p.values.get(g)
            if pv is not None:
                _acc(out, h, pv * c)
        return AlgElem(self, out)

    def fourier(self, z: AlgElem) -> AlgElem:
        """FT = J o phi; on the center, FT^2 = S^-1."""
        return self.transmute(self.phi(z))

    def fourier_dual(self, f: Functional) -> Functional:
        """FT' = phi o J on C_r."""
        return self.phi(self.transmute(f))

    # ---------------- twisted characters and C_r ----------------

    def simple_module(self, i: int) -> SimpleModule:
        key = ("L", i)
        if key not in self._cache:
            if not 0 <= i < self.l:
                raise ValueError("restricted highest weight needed")
            self._cache[key] = SimpleModule(self, i)
        return self._cache[key]

    def q_character(self, i: int) -> Functional:
        """xi_r(i): a |-> Tr_{L(i)}(rho(K_{2rho} a)) -- the twist placing
        the trace inside C_r for the S^2 = Ad(K^-1) convention."""
        key = ("xi_r", i)
        if key not in self._cache:
            mod = self.simple_module(i)
            fld = self.field
            n = mod.dim
            values = {}
            for (a, b, c) in self.monomials():
                if a != c:  # only weight-zero monomials have nonzero trace
                    continue
                m = _mat_mul_f(
                    mod._k_pow(1),
                    _mat_mul_f(
                        mod._f_pow(a), _mat_mul_f(mod._k_pow(b), mod._e_pow(c), fld), fld
                    ),
                    fld,
                )
                tr = fld.zero
                for t in range(n):
                    tr = tr + m[t][t]
                if tr:
                    values[(a, b, c)] = tr
            self._cache[key] = Functional(self, values)
        return self._cache[key]

    def q_characters(self) -> list:
        return [self.q_character(i) for i in range(self.l)]

    def s2_twist_rows(self) -> list:
        """Constraint rows for C_r = {p : p(xy) = p(y S^-2(x))}, x a generator.

        Membership for generators extends to all of u because S^-2 is an
        algebra homomorphism.
        """
        if "c_r_rows" not in self._cache:
            rows: dict = {}
            for gen_idx, g in enumerate([(0, 0, 1), (1, 0, 0), (0, 1, 0)]):
                gen = self.basis_elem(g)
                s2inv_gen = self.antipode_inv(self.antipode_inv(gen))
                for y in self.monomials():
                    row: dict = {}
                    for m, v in self.mono_mul(g, y).items():
                        _acc(row, m, v)
                    ye = self.basis_elem(y)
                    for m, v in (ye * s2inv_gen).coeffs.items():
                        _acc(row, m, -v)
                    row = {m: v for m, v in row.items() if v}
                    if row:
                        rows[(gen_idx, y)] = row
            self._cache["c_r_rows"] = list(rows.values())
        return self._cache["c_r_rows"]

    def c_r_basis(self) -> list:
        """Basis of C_r as Functionals."""
        if "c_r" not in self._cache:
            kernel = linalg.kernel_basis(self.s2_twist_rows(), self.monomials())
            self._cache["c_r"] = [Functional(self, v) for v in kernel]
        return self._cache["c_r"]

    def in_c_r(self, p: Functional) -> bool:
        for row in self.s2_twist_rows():
            total = self.field.zero
            for m, v in row.items():
                pv = p.values.get(m)
                if pv is not None:
                    total = total + v * pv
            if total:
                return False
        return True

    # ---------------- center ----------------

    def center_basis(self) -> list:
        """Exact basis of the center: commutant of {E, F, K}."""
        if "center" not in self._cache:
            monos = self.monomials()
            rows: dict = {}
            for gen_idx, g in enumerate([(0, 0, 1), (1, 0, 0), (0, 1, 0)]):
                for x in monos:
                    for m, v in self.mono_mul(x, g).items():
                        _acc(rows.setdefault((gen_idx, m), {}), x, v)
                    for m, v in self.mono_mul(g, x).items():
                        _acc(rows.setdefault((gen_idx, m), {}), x, -v)
            clean = [
                {m: v for m, v in row.items() if v}
                for row in rows.values()
            ]
            kernel = linalg.kernel_basis([r for r in clean if r], monos)
            self._cache["center"] = [AlgElem(self, v) for v in kernel]
        return self._cache["center"]

    # ---------------- subalgebra structure helpers ----------------

    def coords_in(self, basis: list, x: AlgElem):
        """Coefficients of x in the span of the given elements, or None."""
        return linalg.solve_in_span([b.coeffs for b in basis], x.coeffs)

    def structure_constants(self, basis: list) -> list:
        """N[i][j] = coordinates of basis_i basis_j in the basis.

        The basis must span a subalgebra closed under multiplication;
        a product falling outside the span raises.
        """
        n = len(basis)
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                coords = self.coords_in(basis, self.multiply(basis[i], basis[j]))
                if coords is None:
                    raise ValueError(
                        f"product {i} * {j} leaves the span; not a subalgebra basis"
                    )
                row.append(coords)
            out.append(row)
        return out

    def algebra_radical(self, basis: list) -> list:
        """Radical of the commutative subalgebra spanned by `basis`:
        kernel of the trace form T(a, b) = tr(mult by ab)."""
        fld = self.field
        n = len(basis)
        sc = self.structure_constants(basis)
        traces = [
            sum((_as_cyclo(fld, sc[m][k][k]) for k in range(n)), fld.zero)
            for m in range(n)
        ]
        rows = []
        for i in range(n):
            row = {}
            for j in range(n):
                g = sum(
                    (_as_cyclo(fld, sc[i][j][m]) * traces[m] for m in range(n)),
                    fld.zero,
                )
                if g:
                    row[j] = g
            rows.append(row)
        kernel = linalg.kernel_basis(rows, list(range(n)))
        return [self._combine(basis, coeffs) for coeffs in kernel]

    def annihilator_in(self, basis: list, space: list) -> list:
        """{z in span(basis) : z v = 0 for all v in space}."""
        rows: dict = {}
        for vi, v in enumerate(space):
            for i, b in enumerate(basis):
                prod = self.multiply(b, v)
                for m, c in prod.coeffs.items():
                    rows.setdefault((vi, m), {})[i] = c
        kernel = linalg.kernel_basis(rows.values(), list(range(len(basis))))
        return [self._combine(basis, coeffs) for coeffs in kernel]

    def _combine(self, basis: list, coeffs: dict | list) -> AlgElem:
        out = self.zero()
        items = coeffs.items() if isinstance(coeffs, dict) else enumerate(coeffs)
        for i, c in items:
            if c:
                out = out + basis[i].scale(_as_cyclo(self.field, c))
        return out

    # ---------------- block idempotents ----------------

    def central_characters(self) -> list:
        """chi[i][j]: the scalar by which center basis vector j acts on L(i)."""
        if "chi" not in self._cache:
            zb = self.center_basis()
            chi = []
            for i in range(self.l):
                mod = self.simple_module(i)
                chi.append([mod.scalar_action(z) for z in zb])
            self._cache["chi"] = chi
        return self._cache["chi"]

    def linkage_classes(self) -> list:
        """Partition of {0..l-1} by equal central characters: the blocks."""
        chi = self.central_characters()
        classes: dict = {}
        for i in range(self.l):
            classes.setdefault(tuple(chi[i]), []).append(i)
        return sorted(classes.values())

    def block_idempotents(self) -> list:
        """The primitive central idempotents, one per linkage class.

        Seeded by solving the central-character interpolation problem in
        the center, then Newton-corrected (e <- 3e^2 - 2e^3) until
        exactly idempotent; the correction terminates because the error
        e^2 - e is nilpotent.
        """
        if "idempotents" not in self._cache:
            zb = self.center_basis()
            chi = self.central_characters()
            columns = [{i: chi[i][j] for i in range(self.l) if chi[i][j]} for j in range(len(zb))]
            idems = []
            for cls in self.linkage_classes():
                target = {i: self.field.one for i in cls}
                coeffs = linalg.solve_in_span(columns, target)
                if coeffs is None:
                    raise RuntimeError("central characters do not interpolate")
                e = self._combine(zb, list(coeffs))
                for _ in range(10):
                    e2 = self.multiply(e, e)
                    if e2 == e:
                        break
                    e = e2.scale(3) - self.multiply(e2, e).scale(2)
                else:
                    raise RuntimeError("idempotent lifting did not converge")
                idems.append(e)
            self._cache["idempotents"] = idems
        return self._cache["idempotents"]


    def central_subalgebras(self) -> CentralSubalgebras:
        """The full central-subalgebra report (bases, not just dims)."""
        if "central_subalgebras" not in self._cache:
            xi_r = self.q_characters()
            zt = [self.transmute(p) for p in xi_r]
            zp = [self.phi_inv(p) for p in xi_r]
            zt_vecs = [z.coeffs for z in zt]
            zp_vecs = [z.coeffs for z in zp]
            inter = [
                AlgElem(self, v)
                for v in linalg.span_intersection(zt_vecs, zp_vecs)
            ]
            summ = [
                AlgElem(self, dict(v))
                for v in linalg.span_sum_basis(zt_vecs, zp_vecs)
            ]
            zb = self.center_basis()
            rad = self.algebra_radical(zb)
            socle = self.annihilator_in(zb, rad) if rad else list(zb)
            self._cache["central_subalgebras"] = CentralSubalgebras(
                l=self.l,
                ztilde_basis=zt,
                zprime_basis=zp,
                intersection_basis=inter,
                sum_basis=summ,
                idempotents=self.block_idempotents(),
                radical_z=rad,
                socle_z=socle,
            )
        return self._cache["central_subalgebras"]


def _as_cyclo(fld, c):
    if isinstance(c, CycloNum):
        return c
    return fld.from_rational(c)


def _acc(d: dict, key, val):
    cur = d.get(key)
    new = cur + val if cur is not None else val
    if new:
        d[key] = new
    else:
        d.pop(key, None)
