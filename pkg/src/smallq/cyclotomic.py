"""Exact arithmetic in the cyclotomic field Q(zeta_l), for odd l >= 3.

Elements are residues of rational polynomials in q modulo the l-th
cyclotomic polynomial Phi_l, stored as coefficient vectors of length
phi(l) = deg Phi_l.  The canonical form is the fully reduced remainder,
so equality and hashing are coefficient-wise.  All arithmetic is exact
(gmpy2 rationals); there is deliberately no float conversion anywhere,
since downstream kernel-dimension computations are only meaningful over
an exact field.

The q-combinatorics living here:

    [k]  = (q^k - q^-k) / (q - q^-1)
    [k]! = [1][2]...[k]
    [n choose k] = [n]! / ([k]! [n-k]!)   (computed as a product, so it
                                           stays defined for n >= l)

[k]! is invertible for 0 <= k <= l-1 and zero for k >= l, which is what
the R-matrix denominators require.
"""

from __future__ import annotations

from gmpy2 import mpq

__all__ = [
    "cyclotomic_modulus",
    "CycloField",
    "CycloNum",
    "cyclo_field",
]

_ZERO = mpq(0)
_ONE = mpq(1)


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (ascending coefficients)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for shift in range(len(num) - len(den), -1, -1):
        c = num[shift + len(den) - 1]
        if c % den[-1] != 0:
            raise ArithmeticError("polynomial division is not exact")
        c //= den[-1]
        out[shift] = c
        for i, d in enumerate(den):
            num[shift + i] -= c * d
    if any(num):
        raise ArithmeticError("polynomial division left a remainder")
    return out


def cyclotomic_modulus(l: int) -> list[int]:
    """Coefficients (ascending) of the l-th cyclotomic polynomial Phi_l.

    Only odd l >= 3 are accepted; that is the regime the rest of the
    package operates in.  Computed by exact division of x^l - 1 by the
    product of Phi_d over proper divisors d of l.
    """
    if l < 3 or l % 2 == 0:
        raise ValueError(f"l must be an odd integer >= 3, got {l}")
    return _phi_poly(l)


def _phi_poly(n: int) -> list[int]:
    if n == 1:
        return [-1, 1]
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1
    for d in range(1, n):
        if n % d == 0:
            num = _poly_divexact(num, _phi_poly(d))
    return num


class CycloField:
    """The field Q(zeta_l) = Q[x]/Phi_l with q = class of x.

    Holds the reduction data shared by all its elements; construct via
    :func:`cyclo_field` so fields are interned per l.
    """

    def __init__(self, l: int):
        self.l = l
        self.modulus = cyclotomic_modulus(l)
        self.degree = len(self.modulus) - 1
        # reduction rows: x^k mod Phi_l for degree <= k <= 2*degree - 2,
        # enough to fold any product of two reduced elements.
        rows: dict[int, tuple[mpq, ...]] = {}
        cur = [-mpq(c) for c in self.modulus[:-1]]  # x^degree (Phi monic)
        rows[self.degree] = tuple(cur)
        for k in range(self.degree + 1, 2 * self.degree - 1):
            nxt = [_ZERO] + cur[:-1]
            top = cur[-1]
            if top:
                for i in range(self.degree):
                    nxt[i] -= top * self.modulus[i]
            cur = nxt
            rows[k] = tuple(cur)
        self._red_rows = rows
        self.zero = CycloNum(self, (_ZERO,) * self.degree)
        self.one = self.from_rational(1)
        # q^k for all residues k mod l, by reducing the monomial x^k.
        powers = [self.one]
        q_vec = [_ZERO] * self.degree
        q_vec[1] = _ONE
        q = CycloNum(self, tuple(q_vec))
        for _ in range(l - 1):
            powers.append(powers[-1] * q)
        self._qpowers = powers
        self.q = q
        self._inv_cache: dict[tuple[mpq, ...], CycloNum] = {}
        self._qint_cache: dict[int, CycloNum] = {}
        self._qfact_cache: dict[int, CycloNum] = {}

    def __repr__(self):
        return f"CycloField(l={self.l})"

    def __eq__(self, other):
        return isinstance(other, CycloField) and other.l == self.l

    def __hash__(self):
        return hash(("CycloField", self.l))

    # -- constructors -------------------------------------------------

    def from_rational(self, r) -> "CycloNum":
        c = [_ZERO] * self.degree
        c[0] = mpq(r)
        return CycloNum(self, tuple(c))

    def element(self, coeffs) -> "CycloNum":
        coeffs = [mpq(c) for c in coeffs]
        if len(coeffs) > self.degree:
            raise ValueError("coefficient vector longer than phi(l)")
        coeffs += [_ZERO] * (self.degree - len(coeffs))
        return CycloNum(self, tuple(coeffs))

    def from_strings(self, strings) -> "CycloNum":
        return self.element([mpq(s) for s in strings])

    def qpow(self, k: int) -> "CycloNum":
        """q^k for any integer k (q^l = 1, so exponents live mod l)."""
        return self._qpowers[k % self.l]

    # -- q-combinatorics ----------------------------------------------

    def qint(self, k: int) -> "CycloNum":
        """Quantum integer [k] = (q^k - q^-k)/(q - q^-1).

        Defined for any integer k; [0] = 0, [1] = 1, [l] = 0 and
        [l-k] = [k].
        """
        kk = k % self.l
        cached = self._qint_cache.get(kk)
        if cached is None:
            num = self.qpow(kk) - self.qpow(-kk)
            den = self.qpow(1) - self.qpow(-1)
            cached = num / den
            self._qint_cache[kk] = cached
        return cached

    def qfact(self, k: int) -> "CycloNum":
        """Quantum factorial [k]!; zero for k >= l, invertible below."""
        if k < 0:
            raise ValueError("qfact needs k >= 0")
        if k >= self.l:
            return self.zero
        cached = self._qfact_cache.get(k)
        if cached is None:
            acc = self.one
            for s in range(1, k + 1):
                acc = acc * self.qint(s)
            cached = acc
            self._qfact_cache[k] = cached
        return cached

    def qbinom(self, n: int, k: int) -> "CycloNum":
        """Gaussian binomial [n choose k], as prod_{s=1..k} [n-k+s]/[s]."""
        if k < 0 or k > n:
            return self.zero
        if k >= self.l:
            raise ValueError("qbinom needs k < l (denominator [k]! vanishes)")
        acc = self.one
        for s in range(1, k + 1):
            acc = acc * self.qint(n - k + s) / self.qint(s)
        return acc

    # -- internal reduction -------------------------------------------

    def _reduce_product(self, conv: list[mpq]) -> tuple[mpq, ...]:
        d = self.degree
        out = conv[:d]
        for k in range(d, len(conv)):
            c = conv[k]
            if c:
                row = self._red_rows[k]
                for i in range(d):
                    if row[i]:
                        out[i] += c * row[i]
        return tuple(out)

    def _invert(self, a: "CycloNum") -> "CycloNum":
        key = a.coeffs
        cached = self._inv_cache.get(key)
        if cached is not None:
            return cached
        if not any(key):
            raise ZeroDivisionError("inverse of zero in Q(zeta_l)")
        # extended Euclid for gcd(a, Phi_l) = 1 over Q[x]
        r0 = [mpq(c) for c in self.modulus]
        r1 = list(key)
        s0: list[mpq] = [_ZERO]
        s1: list[mpq] = [_ONE]
        while True:
            while r1 and not r1[-1]:
                r1.pop()
            if len(r1) == 1:
                inv_c = 1 / r1[0]
                vec = [c * inv_c for c in s1]
                break
            q_poly = [_ZERO] * (len(r0) - len(r1) + 1)
            rem = list(r0)
            for shift in range(len(r0) - len(r1), -1, -1):
                c = rem[shift + len(r1) - 1] / r1[-1]
                q_poly[shift] = c
                if c:
                    for i, d in enumerate(r1):
                        rem[shift + i] -= c * d
            while rem and not rem[-1]:
                rem.pop()
            # s2 = s0 - q_poly * s1
            s2 = list(s0) + [_ZERO] * max(0, len(q_poly) + len(s1) - 1 - len(s0))
            for i, qc in enumerate(q_poly):
                if qc:
                    for j, sc in enumerate(s1):
                        s2[i + j] -= qc * sc
            r0, r1 = r1, rem
            s0, s1 = s1, s2
        vec += [_ZERO] * (2 * self.degree - len(vec))
        result = CycloNum(self, self._reduce_product(vec[: 2 * self.degree - 1]))
        self._inv_cache[key] = result
        return result


_FIELD_CACHE: dict[int, CycloField] = {}


def cyclo_field(l: int) -> CycloField:
    """Interned CycloField for a given odd l >= 3."""
    field = _FIELD_CACHE.get(l)
    if field is None:
        field = CycloField(l)
        _FIELD_CACHE[l] = field
    return field


class CycloNum:
    """An element of Q(zeta_l), canonically reduced mod Phi_l.

    Immutable; supports field arithmetic with other elements of the same
    field and with ints / gmpy2 rationals.  Equality is structural on
    the reduced coefficient vector.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: CycloField, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs

    # -- ring structure -----------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycloNum):
            if other.field is not self.field and other.field != self.field:
                raise ValueError("cannot mix different cyclotomic fields")
            return other
        if isinstance(other, (int, type(_ONE))):
            return self.field.from_rational(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycloNum(
            self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycloNum(
            self.field, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return CycloNum(self.field, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        d = self.field.degree
        conv = [_ZERO] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        return CycloNum(self.field, self.field._reduce_product(conv))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * self.field._invert(other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.field._invert(self)

    def inverse(self) -> "CycloNum":
        return self.field._invert(self)

    def __pow__(self, e: int) -> "CycloNum":
        base = self if e >= 0 else self.field._invert(self)
        e = abs(e)
        acc = self.field.one
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    # -- structure ----------------------------------------------------

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, type(_ONE))):
            other = self.field.from_rational(other)
        if not isinstance(other, CycloNum):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.l, self.coeffs))

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_part(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    # -- serialization ------------------------------------------------

    def to_strings(self) -> list[str]:
        """Coefficients as exact 'p/q' strings in degree order."""
        return [str(c) for c in self.coeffs]

    def __repr__(self):
        return f"CycloNum(l={self.field.l}, [{', '.join(self.to_strings())}])"

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append(f"{c}*q" if c != 1 else "q")
            else:
                terms.append(f"{c}*q^{k}" if c != 1 else f"q^{k}")
        return " + ".join(terms) if terms else "0"
