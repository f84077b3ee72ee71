"""Finite fields F_{p^k} with deterministic defining polynomials, and the
tower F_q subset F_{q^2} subset F_{q^4} ... used everywhere else.

Elements of a SmallField are plain integer indices 0..p^k-1; the index is the
base-p encoding of the coefficient vector (c_0 + c_1*p + ...).  Fields small
enough get full multiplication tables; everything stays exact integer work.
"""

from math import gcd

# ---------------------------------------------------------------------------
# polynomial arithmetic over F_p (ascending coefficient lists)


def _pmod(a, f, p):
    a = [x % p for x in a]
    df = len(f) - 1
    inv_lead = pow(f[-1], -1, p)
    for i in range(len(a) - 1, df - 1, -1):
        c = (a[i] * inv_lead) % p
        if c:
            for j in range(df + 1):
                a[i - df + j] = (a[i - df + j] - c * f[j]) % p
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _pmul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _ppowmod(base, e, f, p):
    out = [1]
    base = _pmod(base, f, p)
    while e:
        if e & 1:
            out = _pmod(_pmul(out, base, p), f, p)
        base = _pmod(_pmul(base, base, p), f, p)
        e >>= 1
    return out


def _poly_gcd(a, b, p):
    a = [x % p for x in a]
    b = [x % p for x in b]
    while any(b):
        a, b = b, _pmod(a, b, p)
        while len(b) > 1 and b[-1] == 0:
            b.pop()
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _is_irreducible(f, p):
    """Irreducibility of monic f over F_p via distinct-degree gcds."""
    k = len(f) - 1
    if k == 1:
        return True
    x = [0, 1]
    # x^(p^d) mod f for d = 1..k//2: gcd must be 1
    xp = x
    for d in range(1, k // 2 + 1):
        xp = _ppowmod(xp, p, f, p)
        diff = [(a - b) % p for a, b in zip(xp + [0] * len(x), x + [0] * len(xp))]
        g = _poly_gcd(diff, f, p)
        if len(g) > 1:
            return False
    # also f must divide x^(p^k) - x
    xq = _ppowmod(x, p ** k, f, p)
    diff = [(a - b) % p for a, b in zip(xq + [0, 0], x + [0] * len(xq))]
    while len(diff) > 1 and diff[-1] == 0:
        diff.pop()
    return not any(diff)


_irred_cache = {}


def find_irreducible(p, k):
    """Deterministic smallest-lexicographic monic irreducible of degree k.

    Candidates are ordered by the base-p index of the non-leading coefficient
    vector (c_0, c_1, ..., c_{k-1}).
    """
    key = (p, k)
    if key in _irred_cache:
        return _irred_cache[key]
    for idx in range(p ** k):
        coeffs = []
        t = idx
        for _ in range(k):
            coeffs.append(t % p)
            t //= p
        f = coeffs + [1]
        if _is_irreducible(f, p):
            f = tuple(f)
            _irred_cache[key] = f
            return f
    raise RuntimeError("no irreducible polynomial found (impossible)")


# ---------------------------------------------------------------------------


_TABLE_LIMIT = 512


class SmallField:
    """F_{p^k} with elements as integer indices in [0, p^k)."""

    def __init__(self, p, k):
        self.p = p
        self.k = k
        self.order = p ** k
        self.poly = find_irreducible(p, k)
        self._mul_table = None
        self._inv_table = None
        self._gen = None
        if self.order <= _TABLE_LIMIT:
            self._build_tables()

    # -- coefficient coding ------------------------------------------------

    def coeffs(self, idx):
        out = []
        for _ in range(self.k):
            out.append(idx % self.p)
            idx //= self.p
        return out

    def index(self, coeffs):
        idx = 0
        for c in reversed(coeffs):
            idx = idx * self.p + (c % self.p)
        return idx

    # -- arithmetic --------------------------------------------------------

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        ca, cb = self.coeffs(a), self.coeffs(b)
        return self.index([(x + y) % self.p for x, y in zip(ca, cb)])

    def neg(self, a):
        if self.p == 2:
            return a
        return self.index([(-x) % self.p for x in self.coeffs(a)])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def _mul_slow(self, a, b):
        prod = _pmul(self.coeffs(a), self.coeffs(b), self.p)
        prod = _pmod(prod, list(self.poly), self.p)
        prod += [0] * (self.k - len(prod))
        return self.index(prod)

    def _build_tables(self):
        n = self.order
        mul = [[0] * n for _ in range(n)]
        for a in range(n):
            row = mul[a]
            for b in range(a, n):
                v = self._mul_slow(a, b)
                row[b] = v
                mul[b][a] = v
        self._mul_table = mul
        inv = [0] * n
        for a in range(1, n):
            row = mul[a]
            inv[a] = row.index(1)
        self._inv_table = inv

    def mul(self, a, b):
        if self._mul_table is not None:
            return self._mul_table[a][b]
        return self._mul_slow(a, b)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero in %r" % (self,))
        if self._inv_table is not None:
            return self._inv_table[a]
        return self.pow(a, self.order - 2)

    def pow(self, a, e):
        if a == 0:
            if e == 0:
                return 1
            assert e > 0
            return 0
        e %= self.order - 1
        out = 1
        while e:
            if e & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            e >>= 1
        return out

    def frobenius(self, a):
        return self.pow(a, self.p)

    # -- structure ---------------------------------------------------------

    def generator(self):
        """Smallest-index multiplicative generator."""
        if self._gen is None:
            n1 = self.order - 1
            primes = set()
            t = n1
            d = 2
            while d * d <= t:
                if t % d == 0:
                    primes.add(d)
                    while t % d == 0:
                        t //= d
                d += 1
            if t > 1:
                primes.add(t)
            for a in range(1, self.order):
                if all(self.pow(a, n1 // r) != 1 for r in primes):
                    self._gen = a
                    break
        return self._gen

    def elements(self):
        return range(self.order)

    def __repr__(self):
        return "SmallField(p=%d, k=%d)" % (self.p, self.k)


_sf_cache = {}


def small_field(p, k):
    key = (p, k)
    f = _sf_cache.get(key)
    if f is None:
        f = SmallField(p, k)
        _sf_cache[key] = f
    return f


class FFElem:
    """Convenience wrapper around a SmallField index (used at API edges;
    hot loops work on raw indices)."""

    __slots__ = ("field", "i")

    def __init__(self, field, i):
        self.field = field
        self.i = i

    def __add__(self, o):
        return FFElem(self.field, self.field.add(self.i, o.i))

    def __sub__(self, o):
        return FFElem(self.field, self.field.sub(self.i, o.i))

    def __neg__(self):
        return FFElem(self.field, self.field.neg(self.i))

    def __mul__(self, o):
        return FFElem(self.field, self.field.mul(self.i, o.i))

    def __truediv__(self, o):
        return FFElem(self.field, self.field.mul(self.i, self.field.inv(o.i)))

    def __pow__(self, e):
        return FFElem(self.field, self.field.pow(self.i, e))

    def __eq__(self, o):
        return isinstance(o, FFElem) and self.field is o.field and self.i == o.i

    def __hash__(self):
        return hash((id(self.field), self.i))

    def __repr__(self):
        return "FFElem(%r, %d)" % (self.field, self.i)


# ---------------------------------------------------------------------------


class FFTower:
    """The tower F_p subset F_q subset F_{q^2} subset F_{q^4} ... for q = p^d.

    level(m) is F_{q^{2m}}; level 0 denotes F_q itself.  Embeddings between
    levels are fixed once by choosing the lexicographically smallest root of
    the lower defining polynomial in the upper field.
    """

    def __init__(self, q):
        p, d = _prime_power(q)
        if p is None:
            raise ValueError("q = %d is not a prime power" % q)
        self.p = p
        self.d = d
        self.q = q
        self._levels = {}
        self._embeds = {}

    def level(self, m):
        """F_{q^{2m}} for m >= 1; F_q for m = 0."""
        f = self._levels.get(m)
        if f is None:
            deg = self.d if m == 0 else 2 * m * self.d
            f = small_field(self.p, deg)
            self._levels[m] = f
        return f

    @property
    def base(self):
        return self.level(0)

    @property
    def fq2(self):
        return self.level(1)

    def embed_table(self, src, dst):
        """List mapping src indices to dst indices, a field embedding."""
        key = (src.k, dst.k)
        tab = self._embeds.get(key)
        if tab is not None:
            return tab
        assert dst.k % src.k == 0 and src.p == dst.p
        if src.k == dst.k:
            tab = list(range(src.order))
            self._embeds[key] = tab
            return tab
        # lexicographically smallest root of src.poly in dst
        root = None
        for a in dst.elements():
            acc = 0
            pw = 1
            for c in src.poly:
                if c:
                    acc = dst.add(acc, dst.mul(c % dst.p, pw))
                pw = dst.mul(pw, a)
            if acc == 0:
                root = a
                break
        assert root is not None, "no root found -- inconsistent tower"
        tab = []
        for idx in src.elements():
            acc = 0
            pw = 1
            for c in src.coeffs(idx):
                if c:
                    acc = dst.add(acc, dst.mul(c, pw))
                pw = dst.mul(pw, root)
            tab.append(acc)
        self._embeds[key] = tab
        return tab

    def conj(self, a, m=1):
        """x -> x^q on level m (an involution for m = 1)."""
        return self.level(m).pow(a, self.q)

    def trace_to_fq(self, a):
        """Relative trace F_{q^2} -> F_q, landing as an F_{q^2} index."""
        f = self.fq2
        return f.add(a, f.pow(a, self.q))

    def in_fq(self, a):
        """Is the level-1 index a fixed by x -> x^q?"""
        return self.fq2.pow(a, self.q) == a


def _prime_power(q):
    for p in range(2, q + 1):
        if q % p == 0:
            d = 0
            t = q
            while t % p == 0:
                t //= p
                d += 1
            if t == 1:
                # p must be prime: smallest divisor is
                return p, d
            return None, None
    return None, None


_tower_cache = {}


def tower(q):
    t = _tower_cache.get(q)
    if t is None:
        t = FFTower(q)
        _tower_cache[q] = t
    return t


def ff_trace_solve(tw, c, eps):
    """All a in F_{q^2} with a + eps*a^q = c (c a level-1 index)."""
    f = tw.fq2
    out = []
    for a in f.elements():
        aq = f.pow(a, tw.q)
        if eps == -1:
            aq = f.neg(aq)
        if f.add(a, aq) == c:
            out.append(a)
    return out


def ff_mu_enum(tw):
    """mu_{q+1} in F_{q^2} as powers of a fixed generator, deterministic."""
    f = tw.fq2
    g = f.generator()
    h = f.pow(g, (f.order - 1) // (tw.q + 1))
    out = []
    x = 1
    for _ in range(tw.q + 1):
        out.append(x)
        x = f.mul(x, h)
    assert x == 1
    return out


def fq_eps_center(tw, eps):
    """The set F_{q,eps} = {a : a + eps*a^q = 0}, the Heisenberg center."""
    return ff_trace_solve(tw, 0, eps)
