"""Exact arithmetic in cyclotomic fields Q(zeta_N).

A value is a rational coordinate vector on the power basis
1, z, ..., z^(phi(N)-1) of Q(zeta_N), reduced modulo the N-th cyclotomic
polynomial.  All arithmetic is exact -- there is no floating point anywhere.

Values with different moduli interoperate by promotion to the lcm modulus;
rationals are kept at modulus 1 so the common rational fast paths stay cheap.
"""

from fractions import Fraction
from math import gcd

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _poly_div_exact(num, den):
    """Exact division of integer polynomials (ascending coefficients)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(num) - len(den), -1, -1):
        c, r = divmod(num[i + len(den) - 1], den[-1])
        assert r == 0
        out[i] = c
        for j, d in enumerate(den):
            num[i + j] -= c * d
    assert all(c == 0 for c in num)
    return out


_phi_cache = {}


def cyclotomic_poly(n):
    """Integer coefficients (ascending) of the n-th cyclotomic polynomial."""
    if n in _phi_cache:
        return _phi_cache[n]
    poly = [-1] + [0] * (n - 1) + [1]          # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_div_exact(poly, cyclotomic_poly(d))
    poly = tuple(poly)
    _phi_cache[n] = poly
    return poly


_field_cache = {}


class _FieldData:
    """Precomputed reduction / conjugation / embedding data for Q(zeta_n)."""

    def __init__(self, n):
        self.n = n
        self.phi = cyclotomic_poly(n)
        self.deg = len(self.phi) - 1
        # reduction rows: zeta^j for deg <= j < 2*deg-1, as basis vectors
        rows = []
        cur = [-Fraction(c) for c in self.phi[:-1]]   # zeta^deg
        rows.append(tuple(cur))
        for _ in range(self.deg - 2):
            nxt = [_ZERO] + cur[:-1]
            top = cur[-1]
            if top:
                for j in range(self.deg):
                    nxt[j] -= top * self.phi[j]
            cur = nxt
            rows.append(tuple(cur))
        self.red = rows
        self._conj = None
        self._pows = None

    def power(self, k):
        """Coordinates of zeta_n^k (k reduced mod n)."""
        if self._pows is None:
            pows = []
            vec = [_ZERO] * self.deg
            vec[0] = _ONE
            for _ in range(self.n):
                pows.append(tuple(vec))
                vec = self.mul_by_zeta(vec)
            self._pows = pows
        return self._pows[k % self.n]

    def mul_by_zeta(self, vec):
        out = [_ZERO] + list(vec[:-1])
        top = vec[-1]
        if top:
            row = self.red[0]
            for j in range(self.deg):
                out[j] += top * row[j]
        return out

    def reduce(self, conv):
        """Reduce a convolution of length <= 2*deg-1 to basis coordinates."""
        out = list(conv[: self.deg])
        while len(out) < self.deg:
            out.append(_ZERO)
        for j in range(self.deg, len(conv)):
            c = conv[j]
            if c:
                row = self.red[j - self.deg]
                for i in range(self.deg):
                    out[i] += c * row[i]
        return out

    def conj_rows(self):
        if self._conj is None:
            self._conj = [self.power(-k) for k in range(self.deg)]
        return self._conj


def _field(n):
    f = _field_cache.get(n)
    if f is None:
        f = _FieldData(n)
        _field_cache[n] = f
    return f


_embed_cache = {}


def _embed_rows(m, n):
    """Basis of Q(zeta_m) expressed in Q(zeta_n), for m | n."""
    key = (m, n)
    rows = _embed_cache.get(key)
    if rows is None:
        fn = _field(n)
        step = n // m
        rows = [fn.power(step * k) for k in range(_field(m).deg)]
        _embed_cache[key] = rows
    return rows


class Cyc:
    """An element of Q(zeta_n), immutable."""

    __slots__ = ("n", "c")
    __hash__ = None

    def __init__(self, n, coeffs):
        # internal: coeffs already reduced, length = deg Phi_n
        self.n = n
        self.c = coeffs

    # -- constructors ------------------------------------------------------

    @staticmethod
    def rational(r):
        return Cyc(1, (Fraction(r),))

    @staticmethod
    def zero():
        return _CYC_ZERO

    @staticmethod
    def one():
        return _CYC_ONE

    # -- predicates --------------------------------------------------------

    def is_zero(self):
        return not any(self.c)

    def is_rational(self):
        return self.n == 1

    def as_fraction(self):
        if self.n != 1:
            raise ValueError("not rational: %r" % (self,))
        return self.c[0]

    def is_integral(self):
        """True when all coordinates have denominator 1 (algebraic integer)."""
        return all(x.denominator == 1 for x in self.c)

    # -- normalization / promotion ----------------------------------------

    @staticmethod
    def _make(n, coeffs):
        if n > 1 and not any(coeffs[1:]):
            return Cyc(1, (coeffs[0],))
        return Cyc(n, tuple(coeffs))

    def promote(self, n):
        """Re-express in Q(zeta_n); self.n must divide n."""
        if self.n == n:
            return self
        assert n % self.n == 0
        if self.n == 1:
            deg = _field(n).deg
            out = [self.c[0]] + [_ZERO] * (deg - 1)
            return Cyc(n, tuple(out))
        rows = _embed_rows(self.n, n)
        deg = _field(n).deg
        out = [_ZERO] * deg
        for k, x in enumerate(self.c):
            if x:
                row = rows[k]
                for j in range(deg):
                    out[j] += x * row[j]
        return Cyc(n, tuple(out))

    @staticmethod
    def _common(a, b):
        if a.n == b.n:
            return a, b
        n = a.n * b.n // gcd(a.n, b.n)
        return a.promote(n), b.promote(n)

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, Cyc):
            return x
        if isinstance(x, (int, Fraction)):
            return Cyc(1, (Fraction(x),))
        return NotImplemented

    def __add__(self, other):
        other = Cyc._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = Cyc._common(self, other)
        return Cyc._make(a.n, [x + y for x, y in zip(a.c, b.c)])

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.n, tuple(-x for x in self.c))

    def __sub__(self, other):
        other = Cyc._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = Cyc._common(self, other)
        return Cyc._make(a.n, [x - y for x, y in zip(a.c, b.c)])

    def __rsub__(self, other):
        other = Cyc._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = Cyc._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.n == 1:
            r = other.c[0]
            if not r:
                return _CYC_ZERO
            return Cyc(self.n, tuple(x * r for x in self.c))
        if self.n == 1:
            r = self.c[0]
            if not r:
                return _CYC_ZERO
            return Cyc(other.n, tuple(x * r for x in other.c))
        a, b = Cyc._common(self, other)
        deg = len(a.c)
        conv = [_ZERO] * (2 * deg - 1)
        for i, x in enumerate(a.c):
            if x:
                for j, y in enumerate(b.c):
                    if y:
                        conv[i + j] += x * y
        return Cyc._make(a.n, _field(a.n).reduce(conv))

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = _CYC_ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero Cyc")
        if self.n == 1:
            return Cyc(1, (1 / self.c[0],))
        # solve sum_j x_j (zeta^j * self) = 1 by Gaussian elimination over Q
        deg = len(self.c)
        field = _field(self.n)
        cols = []
        cur = list(self.c)
        for _ in range(deg):
            cols.append(list(cur))
            cur = field.mul_by_zeta(cur)
        # augmented system: rows are basis coordinates
        mat = [[cols[j][i] for j in range(deg)] for i in range(deg)]
        rhs = [_ONE] + [_ZERO] * (deg - 1)
        for col in range(deg):
            piv = next(r for r in range(col, deg) if mat[r][col])
            mat[col], mat[piv] = mat[piv], mat[col]
            rhs[col], rhs[piv] = rhs[piv], rhs[col]
            inv = 1 / mat[col][col]
            mat[col] = [x * inv for x in mat[col]]
            rhs[col] *= inv
            for r in range(deg):
                if r != col and mat[r][col]:
                    f = mat[r][col]
                    mat[r] = [x - f * y for x, y in zip(mat[r], mat[col])]
                    rhs[r] -= f * rhs[col]
        return Cyc._make(self.n, rhs)

    def __truediv__(self, other):
        other = Cyc._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.n == 1:
            return self * Cyc(1, (1 / other.c[0],))
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = Cyc._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def conj(self):
        """Complex conjugation zeta -> zeta^{-1}."""
        if self.n == 1:
            return self
        rows = _field(self.n).conj_rows()
        deg = len(self.c)
        out = [_ZERO] * deg
        for k, x in enumerate(self.c):
            if x:
                row = rows[k]
                for j in range(deg):
                    out[j] += x * row[j]
        return Cyc._make(self.n, out)

    # -- comparison / display ---------------------------------------------

    def __eq__(self, other):
        other = Cyc._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = Cyc._common(self, other)
        return a.c == b.c

    def __repr__(self):
        if self.n == 1:
            return "Cyc(%s)" % (self.c[0],)
        terms = []
        for k, x in enumerate(self.c):
            if x:
                terms.append("%s*z%d^%d" % (x, self.n, k))
        return "Cyc(" + (" + ".join(terms) or "0") + ")"

    def key(self):
        """Canonical hashable key (promotes nothing; rationals canonical)."""
        return (self.n, self.c)


_CYC_ZERO = Cyc(1, (_ZERO,))
_CYC_ONE = Cyc(1, (_ONE,))


def cyc_root(N, k):
    """The root of unity zeta_N^k as a Cyc, in reduced form."""
    if N < 1:
        raise ValueError("modulus must be >= 1")
    k %= N
    if k == 0:
        return _CYC_ONE
    g = gcd(k, N)
    N, k = N // g, k // g          # primitive root of unity of order N/g
    if N == 1:
        return _CYC_ONE
    if N == 2:
        return Cyc(1, (Fraction(-1),))
    return Cyc._make(N, _field(N).power(k))
