"""The rank-1 restricted character ring C[x + x^-1] / <x^l + x^-l - 2>.

Basis: xi(0), ..., xi(l-1), where xi(i) is the class of the symmetric
Laurent polynomial x^i + x^(i-2) + ... + x^-i (the classical character
of the (i+1)-dimensional simple).  Products are computed in the
power-sum basis m_j = x^j + x^-j (m_0 = 1), rewritten back below
exponent l with

    m_l            ->  2
    m_j, l<j<2l    ->  2 m_(j-l) - m_(2l-j)
    m_j, j>=2l     ->  2 m_(j-l) - m_(j-2l)   (iterated),

then converted to the xi-basis through the unitriangular relation
xi(i) = m_i + xi(i-2).  Internally the rewrites run in the "honest"
convention M_0 = x^0 + x^-0 = 2, where the single rule
M_a M_b = M_(a+b) + M_(|a-b|) has no exceptional cases.

All coefficients are exact rationals.  The radical is the kernel of the
trace form T(a, b) = tr(multiplication by ab) -- valid for a
commutative algebra over a characteristic-zero field -- and the socle
is its annihilator; the closed form {xi(i) + xi(l-2-i), xi(l-1)} is
asserted against that computation.
"""

from __future__ import annotations

from dataclasses import dataclass

from gmpy2 import mpq

from . import linalg
from .cyclotomic import cyclo_field

__all__ = ["CharElem", "SymLaurent", "CharRing"]

_ZERO = mpq(0)


class SymLaurent:
    """Finitely supported sum of m_j = x^j + x^-j (with m_0 = 1)."""

    def __init__(self, coeffs: dict | None = None):
        self.coeffs = {j: mpq(c) for j, c in (coeffs or {}).items() if c}
        if any(j < 0 for j in self.coeffs):
            raise ValueError("m-basis exponents must be nonnegative")

    def __eq__(self, other):
        return isinstance(other, SymLaurent) and self.coeffs == other.coeffs

    def __repr__(self):
        terms = [f"{c}*m{j}" for j, c in sorted(self.coeffs.items())]
        return "SymLaurent(" + " + ".join(terms) + ")" if terms else "SymLaurent(0)"


class CharElem:
    """Element of the character ring in the simple-character basis."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: "CharRing", coeffs):
        self.ring = ring
        coeffs = [mpq(c) for c in coeffs]
        if len(coeffs) != ring.l:
            raise ValueError("xi-coefficient vector must have length l")
        self.coeffs = tuple(coeffs)

    def __add__(self, other):
        self.ring._check(other)
        return CharElem(self.ring, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self.ring._check(other)
        return CharElem(self.ring, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return CharElem(self.ring, [-a for a in self.coeffs])

    def scale(self, c):
        c = mpq(c)
        return CharElem(self.ring, [c * a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, CharElem):
            return self.ring.product(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        return (
            isinstance(other, CharElem)
            and other.ring.l == self.ring.l
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash((self.ring.l, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def dimension(self):
        """Evaluation at x = 1; multiplicative (dim of the virtual module)."""
        return sum(c * (i + 1) for i, c in enumerate(self.coeffs))

    def as_vector(self) -> dict:
        return {i: c for i, c in enumerate(self.coeffs) if c}

    def __repr__(self):
        terms = [f"{c}*xi({i})" for i, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) if terms else "0"


@dataclass
class SteinbergReport:
    l: int
    tilting_characters_ok: bool  # ch T(l+j) = 2(xi(j) + xi(l-2-j)), j <= l-2
    steinberg_products_ok: bool  # xi(l-1) xi(j) = sum of tilting characters
    socle_matches_annihilator: bool
    steinberg_multiples_in_socle: bool
    steinberg_multiples_span_socle: bool
    socle_square_dim: int
    socle_square_spanned_by_st2: bool
    st2_socle_coefficients_nonzero: bool

    @property
    def ok(self) -> bool:
        return (
            self.tilting_characters_ok
            and self.steinberg_products_ok
            and self.socle_matches_annihilator
            and self.steinberg_multiples_in_socle
            and self.steinberg_multiples_span_socle
            and self.socle_square_dim == 1
            and self.socle_square_spanned_by_st2
            and self.st2_socle_coefficients_nonzero
        )


class CharRing:
    """The character ring at a fixed odd l >= 3."""

    def __init__(self, l: int):
        if l < 3 or l % 2 == 0:
            raise ValueError(f"l must be an odd integer >= 3, got {l}")
        self.l = l
        self._products: dict[tuple[int, int], CharElem] = {}

    def _check(self, other):
        if not isinstance(other, CharElem) or other.ring.l != self.l:
            raise ValueError("mixed character rings")

    # -- basis and conversions ------------------------------------------

    def xi(self, i: int) -> CharElem:
        if not 0 <= i < self.l:
            raise ValueError(f"xi index must lie in [0, {self.l}), got {i}")
        return CharElem(self, [1 if j == i else 0 for j in range(self.l)])

    def one(self) -> CharElem:
        return self.xi(0)

    def zero(self) -> CharElem:
        return CharElem(self, [0] * self.l)

    def classical_character(self, n: int) -> CharElem:
        """Image in R of the classical character of highest weight n,
        x^n + x^(n-2) + ... + x^-n, for any n >= 0."""
        if n < 0:
            raise ValueError("highest weight must be nonnegative")
        return self.reduce(SymLaurent({n - 2 * t: 1 for t in range(n // 2 + 1)}))

    def tilting_character(self, m: int) -> CharElem:
        """ch T(m) for l-1 <= m <= 2l-2: the indecomposable tilting of
        highest weight m has Weyl factors of highest weights m and
        2l-2-m (just one for m = l-1, the Steinberg)."""
        if not self.l - 1 <= m <= 2 * self.l - 2:
            raise ValueError("tilting weight must lie in [l-1, 2l-2]")
        ch = self.classical_character(m)
        if m > self.l - 1:
            ch = ch + self.classical_character(2 * self.l - 2 - m)
        return ch

    def steinberg_product(self, j: int) -> CharElem:
        """xi(l-1) xi(j) as the tilting decomposition of St tensor L(j):
        sum of ch T(l-1+j-2i) over 0 <= i <= j, with the pairs i, j-i
        merging into one tilting character and the middle term (j even)
        contributing the Steinberg itself."""
        out = self.zero()
        t = j - 1
        while t >= 0:
            out = out + self.tilting_character(self.l + t)
            t -= 2
        if j % 2 == 0:
            out = out + self.xi(self.l - 1)
        return out

    def to_laurent(self, elem: CharElem) -> SymLaurent:
        """xi-basis to m-basis: m_i = xi(i) - xi(i-2)."""
        self._check(elem)
        d = [mpq(c) for c in elem.coeffs]
        # d_j (m-coeff) = e_j + e_{j+2} + ...  accumulated top-down
        for j in range(self.l - 3, -1, -1):
            d[j] += d[j + 2]
        return SymLaurent({j: c for j, c in enumerate(d) if c})

    def reduce(self, sym: SymLaurent) -> CharElem:
        """Fully reduce an m-basis expression into the xi-basis."""
        # to the honest convention M_0 = 2
        honest: dict[int, mpq] = {}
        for j, c in sym.coeffs.items():
            honest[j] = honest.get(j, _ZERO) + (c / 2 if j == 0 else c)
        l = self.l
        for j in sorted(honest.keys(), reverse=True):
            c = honest.get(j)
            if not c or j < l:
                continue
            del honest[j]
            if j == l:
                honest[0] = honest.get(0, _ZERO) + c
                continue
            lo = 2 * l - j if j < 2 * l else j - 2 * l
            honest[j - l] = honest.get(j - l, _ZERO) + 2 * c
            honest[lo] = honest.get(lo, _ZERO) - c
        d = [_ZERO] * l
        for j, c in honest.items():
            d[j] = 2 * c if j == 0 else c
        # m-basis to xi-basis: m_j = xi(j) - xi(j-2), so e_j = d_j - d_{j+2}
        e = list(d)
        for j in range(l - 3, -1, -1):
            e[j] = d[j] - d[j + 2]
        return CharElem(self, e)

    # -- multiplication --------------------------------------------------

    def product(self, a: CharElem, b: CharElem) -> CharElem:
        self._check(a)
        self._check(b)
        out = [_ZERO] * self.l
        for i, ca in enumerate(a.coeffs):
            if not ca:
                continue
            for j, cb in enumerate(b.coeffs):
                if not cb:
                    continue
                for k, ck in enumerate(self._basis_product(i, j).coeffs):
                    if ck:
                        out[k] += ca * cb * ck
        return CharElem(self, out)

    def _basis_product(self, i: int, j: int) -> CharElem:
        if i > j:
            i, j = j, i
        cached = self._products.get((i, j))
        if cached is None:
            ma = self.to_laurent(self.xi(i)).coeffs
            mb = self.to_laurent(self.xi(j)).coeffs
            conv: dict[int, mpq] = {}
            for a, ca in ma.items():
                for b, cb in mb.items():
                    c = ca * cb
                    if a == 0 or b == 0:
                        # m_0 = 1 is the actual unit
                        k = a + b
                        conv[k] = conv.get(k, _ZERO) + c
                        continue
                    hi, lo = a + b, abs(a - b)
                    conv[hi] = conv.get(hi, _ZERO) + c
                    if lo == 0:
                        conv[0] = conv.get(0, _ZERO) + 2 * c
                    else:
                        conv[lo] = conv.get(lo, _ZERO) + c
            cached = self.reduce(SymLaurent(conv))
            self._products[(i, j)] = cached
        return cached

    # -- radical / socle ---------------------------------------------------

    def _basis_trace(self, m: int):
        """Trace of multiplication by xi(m) on the ring."""
        return sum(self._basis_product(m, k).coeffs[k] for k in range(self.l))

    def radical(self) -> list[CharElem]:
        """Kernel of the trace form, as a list of CharElems."""
        traces = [self._basis_trace(m) for m in range(self.l)]
        rows = []
        for i in range(self.l):
            row = {}
            for j in range(self.l):
                g = sum(
                    c * traces[m]
                    for m, c in enumerate(self._basis_product(i, j).coeffs)
                    if c
                )
                if g:
                    row[j] = g
            rows.append(row)
        kernel = linalg.kernel_basis(rows, list(range(self.l)))
        return [self._from_vector(v) for v in kernel]

    def annihilator(self, space: list[CharElem]) -> list[CharElem]:
        """{z in R : z v = 0 for all v in the given space}."""
        rows: dict[tuple, dict] = {}
        for vi, v in enumerate(space):
            self._check(v)
            for i in range(self.l):
                prod = self.product(self.xi(i), v)
                for m, c in enumerate(prod.coeffs):
                    if c:
                        rows.setdefault((vi, m), {})[i] = c
        kernel = linalg.kernel_basis(rows.values(), list(range(self.l)))
        return [self._from_vector(v) for v in kernel]

    def socle_basis(self) -> list[CharElem]:
        """Closed form {xi(i) + xi(l-2-i)} for i <= (l-3)/2, plus xi(l-1)."""
        out = [self.xi(i) + self.xi(self.l - 2 - i) for i in range((self.l - 1) // 2)]
        out.append(self.xi(self.l - 1))
        return out

    def _from_vector(self, vec: dict) -> CharElem:
        coeffs = [_ZERO] * self.l
        for i, c in vec.items():
            coeffs[i] = mpq(c)
        return CharElem(self, coeffs)

    # -- Steinberg structure ----------------------------------------------

    def steinberg_checks(self) -> SteinbergReport:
        l = self.l
        st = self.xi(l - 1)
        socle = self.socle_basis()
        socle_vecs = [s.as_vector() for s in socle]

        tilting_ok = all(
            self.tilting_character(l + j)
            == (self.xi(j) + self.xi(l - 2 - j)).scale(2)
            for j in range(l - 1)
        )
        st_products_ok = all(
            self.product(st, self.xi(j)) == self.steinberg_product(j)
            for j in range(l)
        )
        rad = self.radical()
        ann = self.annihilator(rad)
        socle_matches = linalg.span_equal(socle_vecs, [a.as_vector() for a in ann])

        st_products = [self.product(st, self.xi(j)) for j in range(l)]
        st_in_socle = all(
            linalg.in_span(socle_vecs, p.as_vector()) for p in st_products
        )
        st_span_socle = linalg.span_equal(
            [p.as_vector() for p in st_products], socle_vecs
        )

        st2 = self.product(st, st)
        squares = [
            self.product(a, b).as_vector() for a in socle for b in socle
        ]
        square_dim = linalg.span_rank([s for s in squares if s])
        spanned = square_dim == 1 and linalg.span_equal(
            [s for s in squares if s], [st2.as_vector()]
        )
        # st^2 touches every orbit: all socle-basis coordinates nonzero
        st2_coords = linalg.solve_in_span(socle_vecs, st2.as_vector())
        all_nonzero = st2_coords is not None and all(st2_coords)
        return SteinbergReport(
            l=l,
            tilting_characters_ok=tilting_ok,
            steinberg_products_ok=st_products_ok,
            socle_matches_annihilator=socle_matches,
            steinberg_multiples_in_socle=st_in_socle,
            steinberg_multiples_span_socle=st_span_socle,
            socle_square_dim=square_dim,
            socle_square_spanned_by_st2=spanned,
            st2_socle_coefficients_nonzero=all_nonzero,
        )

    # -- spectral block structure ------------------------------------------

    def evaluate(self, elem: CharElem, k: int):
        """Evaluate at x = zeta_l^k, exactly in Q(zeta_l)."""
        self._check(elem)
        field = cyclo_field(self.l)
        total = field.zero
        for i, c in enumerate(elem.coeffs):
            if not c:
                continue
            val = field.zero
            for t in range(i + 1):
                val = val + field.qpow(k * (i - 2 * t))
            total = total + val * c
        return total

    def block_multiplicities(self) -> list[tuple[int, int]]:
        """Generalized-eigenspace dimensions of mult-by-xi(1) at each
        spectral point y_k = zeta^k + zeta^-k, k = 0 .. (l-1)/2.

        Returns (k, multiplicity) pairs; the multiplicities are the block
        dimensions of the ring over the splitting field.
        """
        l = self.l
        field = cyclo_field(l)
        # matrix of multiplication by xi(1), columns in the xi-basis
        cols = [self._basis_product(1, j).coeffs for j in range(l)]
        a = [[field.from_rational(cols[j][i]) for j in range(l)] for i in range(l)]
        out = []
        for k in range((l + 1) // 2):
            yk = field.qpow(k) + field.qpow(-k)
            b = [[a[i][j] - (yk if i == j else field.zero) for j in range(l)] for i in range(l)]
            # (A - y_k)^l kills the whole generalized eigenspace
            power = b
            for _ in range(2):
                power = [
                    [
                        sum(
                            (power[i][t] * b[t][j] for t in range(l)),
                            field.zero,
                        )
                        for j in range(l)
                    ]
                    for i in range(l)
                ]
            rows = [
                {j: power[i][j] for j in range(l) if power[i][j]} for i in range(l)
            ]
            mult = l - linalg.span_rank(rows)
            out.append((k, mult))
        if sum(m for _, m in out) != l:
            raise RuntimeError("spectral multiplicities do not sum to dim R")
        return out
