"""Generic machinery for matrix representations over Cyc: induction from
linear characters, characters and inner products, central isotypic
projectors, Schur-averaged intertwiners, homomorphism verification and a
naive mod-ell reduction.
"""

import random
from fractions import Fraction
from math import lcm

from .cyclo import Cyc, cyc_root, cyclotomic_poly
from .ffield import small_field
from .linalg import (
    fmat_nullity, mat_eq, mat_identity, mat_inv, mat_is_monomial, mat_mul,
    mat_scale, mat_trace,
)


class InequivalenceError(Exception):
    """The two representations share no irreducible constituent."""


class MatrixRep:
    """A representation by Cyc matrices.

    Backed either by a direct element->matrix formula (mat_fn) or by
    generator matrices completed along breadth-first words in the Cayley
    graph.  Matrices are cached up to cache_limit elements.
    """

    def __init__(self, group, degree, mat_fn=None, gens=None, gen_mats=None,
                 cache_limit=10 ** 4, name=""):
        self.group = group
        self.degree = degree
        self.name = name
        self._fn = mat_fn
        self._gens = gens
        self._gen_mats = gen_mats
        self._cache = {group.identity: mat_identity(degree)}
        self._cache_limit = cache_limit
        self._parents = None
        if gens is not None:
            for g, m in zip(gens, gen_mats):
                self._cache[g] = m

    # -- completion --------------------------------------------------------

    def _build_parents(self):
        """BFS word dag: element -> (previous element, generator index)."""
        G = self.group
        parents = {G.identity: None}
        frontier = [G.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for gi, g in enumerate(self._gens):
                    y = G.mul(x, g)
                    if y not in parents:
                        parents[y] = (x, gi)
                        nxt.append(y)
            frontier = nxt
        assert len(parents) == len(G.elements), "generators do not generate"
        self._parents = parents

    def mat(self, x):
        m = self._cache.get(x)
        if m is not None:
            return m
        if self._fn is not None:
            m = self._fn(x)
        else:
            if self._parents is None:
                self._build_parents()
            # multiply along the BFS word, reusing any cached ancestor
            path = []
            y = x
            while y not in self._cache:
                prev, gi = self._parents[y]
                path.append((y, gi))
                y = prev
            m = self._cache[y]
            for y, gi in reversed(path):
                m = mat_mul(m, self._gen_mats[gi])
                if len(self._cache) < self._cache_limit:
                    self._cache[y] = m
        if len(self._cache) < self._cache_limit:
            self._cache[x] = m
        return m

    def complete(self):
        """Force matrices for every element (groups within cache limit)."""
        for x in self.group.elements:
            self.mat(x)

    # -- characters --------------------------------------------------------

    def character(self):
        """Element -> trace table (a class function)."""
        chi = {}
        classes = None
        try:
            classes = self.group.conjugacy_classes()
        except Exception:
            classes = None
        if classes is not None and self._fn is None and \
                len(self._cache) < len(self.group.elements):
            for cl in classes:
                t = mat_trace(self.mat(cl[0]))
                for x in cl:
                    chi[x] = t
        else:
            for x in self.group.elements:
                chi[x] = mat_trace(self.mat(x))
        return chi

    def verify_homomorphism(self, exhaustive_limit=10 ** 4, sample=10 ** 4,
                            seed=0):
        """Policy check: exhaustive pairs for small groups, otherwise all
        generator pairs plus seeded random pairs.  Returns the pair count."""
        G = self.group
        n = len(G.elements)
        checked = 0
        if n <= exhaustive_limit:
            pairs = ((x, y) for x in G.elements for y in G.elements)
        else:
            gens = self._gens if self._gens is not None else G.generators()
            rng = random.Random(seed)
            fixed = [(a, b) for a in gens for b in gens]
            rand = [(rng.choice(G.elements), rng.choice(G.elements))
                    for _ in range(sample)]
            pairs = iter(fixed + rand)
        for x, y in pairs:
            if not mat_eq(mat_mul(self.mat(x), self.mat(y)),
                          self.mat(G.mul(x, y))):
                raise AssertionError(
                    "%s: rho(x)rho(y) != rho(xy)" % (self.name or "rep"))
            checked += 1
        return checked

    def is_monomial(self):
        return all(mat_is_monomial(self.mat(x)) for x in self.group.elements)


# ---------------------------------------------------------------------------
# linear characters of abelian groups, and extension from a subgroup


class LinearChar:
    """Character of an abelian group with values zeta_N^e, stored as
    exponents."""

    def __init__(self, group, modulus, exps):
        self.group = group
        self.modulus = modulus
        self.exps = exps          # elem -> int exponent mod modulus

    def value(self, x):
        return cyc_root(self.modulus, self.exps[x])

    def values(self):
        return {x: self.value(x) for x in self.exps}

    def is_trivial(self):
        return all(e % self.modulus == 0 for e in self.exps.values())


def extend_character(A, sub_elems, sub_char: LinearChar):
    """Extend a linear character from a subgroup to the abelian group A.

    Deterministic: elements are scanned in A's enumeration order and each
    cyclic extension picks the smallest admissible exponent (equivalently the
    lexicographically smallest admissible root-of-unity value).
    """
    N = A.exponent()
    assert N % sub_char.modulus == 0
    scale = N // sub_char.modulus
    val = {x: (sub_char.exps[x] * scale) % N for x in sub_elems}
    for g in A.elements:
        if g in val:
            continue
        # minimal r with g^r in the current domain
        r = 1
        p = g
        while p not in val:
            p = A.mul(p, g)
            r += 1
        e = val[p]
        d = _gcd(r, N)
        assert e % d == 0, "character does not extend (non-abelian input?)"
        f = (e // d) * pow(r // d, -1, N // d) % (N // d)
        # extend the domain to <domain, g>
        base = list(val.items())
        pw = A.identity
        for i in range(1, r):
            pw = A.mul(pw, g)
            for s, es in base:
                val[A.mul(s, pw)] = (es + i * f) % N
    assert len(val) == len(A.elements)
    ch = LinearChar(A, N, val)
    # sanity: multiplicative
    for x in A.elements[: 50]:
        for y in A.elements[: 50]:
            assert (ch.exps[x] + ch.exps[y]) % N == ch.exps[A.mul(x, y)]
    return ch


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


# ---------------------------------------------------------------------------


def induce_rep(G, A, psi, name=""):
    """Induce a linear character psi of the subgroup A (given as a
    FiniteGroup sharing G's law) up to G.  Monomial matrices indexed by a
    deterministic left transversal."""
    avals = psi.values()
    # deterministic left transversal: scan G in enumeration order
    reps = []
    coset = {}      # g -> (i, a) with g = t_i a
    for g in G.elements:
        if g in coset:
            continue
        i = len(reps)
        reps.append(g)
        for a in A.elements:
            x = G.mul(g, a)
            assert x not in coset
            coset[x] = (i, a)
    d = len(reps)
    assert d * len(A.elements) == len(G.elements)
    zero = Cyc.zero()

    def mat_fn(g):
        rows = [[zero] * d for _ in range(d)]
        for j, t in enumerate(reps):
            i, a = coset[G.mul(g, t)]
            rows[i][j] = avals[a]
        return tuple(map(tuple, rows))

    return MatrixRep(G, d, mat_fn=mat_fn, name=name or "Ind")


def char_inner(G, chi1, chi2, elements=None):
    """(1/|G|) sum chi1(g) conj(chi2(g))."""
    els = elements if elements is not None else G.elements
    acc = Cyc.zero()
    for g in els:
        acc = acc + chi1[g] * chi2[g].conj()
    return acc / len(els)


def central_isotypic(rep, z_elems, chi_vals):
    """Projector onto the chi-isotypic part for a central subgroup.

    chi_vals: element -> Cyc (a linear character of the subgroup).
    Returns (dimension, projector).
    """
    d = rep.degree
    acc = None
    for z in z_elems:
        term = mat_scale(chi_vals[z].conj(), rep.mat(z))
        acc = term if acc is None else _mat_add(acc, term)
    P = mat_scale(Cyc.rational(Fraction(1, len(z_elems))), acc)
    assert mat_eq(mat_mul(P, P), P), "averaging did not produce a projector"
    t = mat_trace(P)
    dim = t.as_fraction()
    assert dim.denominator == 1 and dim >= 0
    return int(dim), P


def _mat_add(A, B):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(A, B))


def solve_intertwiner(mat1, mat2, elements, inv, seed=0, retries=8,
                      char_check=None):
    """Schur averaging: T = sum_h mat2(h) . M . mat1(h)^{-1} with a seeded
    random 0/1 matrix M; T satisfies T mat1(x) = mat2(x) T.

    mat1/mat2: callables element -> matrix; elements: the averaging set;
    inv: group inversion.  Retries with fresh seeds if T is singular; when
    char_check (a callable returning the inner product of the two characters)
    is given and reports 0, raises InequivalenceError.
    """
    d = len(mat1(elements[0]))
    for attempt in range(retries):
        rng = random.Random(seed + attempt)
        M = tuple(
            tuple(Cyc.rational(rng.randrange(2)) for _ in range(d))
            for _ in range(d)
        )
        acc = None
        for h in elements:
            term = mat_mul(mat_mul(mat2(h), M), mat1(inv(h)))
            acc = term if acc is None else _mat_add(acc, term)
        try:
            mat_inv(acc)
        except ZeroDivisionError:
            continue
        return acc
    if char_check is not None and char_check().is_zero():
        raise InequivalenceError("representations share no constituent")
    raise RuntimeError("intertwiner averaging failed after retries")


# ---------------------------------------------------------------------------
# mod-ell reduction


class ModularRep:
    """A representation over F_{ell^k}, obtained by reducing an integral
    Cyc model modulo a deterministic prime above ell."""

    def __init__(self, group, field, mats, root, modulus):
        self.group = group
        self.field = field
        self.mats = mats
        self.root = root
        self.modulus = modulus

    def endomorphism_dim(self, gens=None):
        """Dimension over F_ell^k of the commutant {T : T rho(g) = rho(g) T}."""
        F = self.field
        gens = gens if gens is not None else self.group.generators()
        d = len(self.mats[self.group.identity])
        rows = []
        for g in gens:
            R = self.mats[g]
            # (T R - R T)[i][j] = sum_k T[i][k] R[k][j] - R[i][k] T[k][j]
            for i in range(d):
                for j in range(d):
                    row = [0] * (d * d)
                    for k in range(d):
                        row[i * d + k] = F.add(row[i * d + k], R[k][j])
                        row[k * d + j] = F.sub(row[k * d + j], R[i][k])
                    rows.append(tuple(row))
        return fmat_nullity(F, tuple(rows)) if rows else d * d

    def is_irreducible(self):
        return self.endomorphism_dim() == 1


def reduce_mod_ell(rep, ell, p):
    """Reduce an integral MatrixRep modulo a prime above ell (ell != p).

    The prime is fixed by taking the smallest root of Phi_N in F_{ell^k},
    k the multiplicative order of ell mod N.
    """
    if ell == p:
        raise ValueError("ell must differ from the defining characteristic")
    # collect all matrices and the splitting modulus actually used
    mats = {x: rep.mat(x) for x in rep.group.elements}
    N = 1
    for m in mats.values():
        for row in m:
            for x in row:
                if not x.is_integral():
                    raise ValueError("non-integral model cannot be reduced")
                N = lcm(N, x.n)
    k = 1
    while pow(ell, k, N) != 1 % N:
        k += 1
    F = small_field(ell, k)
    phi = cyclotomic_poly(N)
    root = None
    for a in F.elements():
        acc = 0
        pw = 1
        for c in phi:
            if c % ell:
                acc = F.add(acc, F.mul(c % ell, pw))
            pw = F.mul(pw, a)
        if acc == 0:
            root = a
            break
    assert root is not None, "Phi_N has no root mod ell -- wrong k"

    def red(x):
        x = x.promote(N) if x.n != N else x
        acc = 0
        pw = 1
        for c in x.c:
            ci = int(c) % ell
            if ci:
                acc = F.add(acc, F.mul(ci, pw))
            pw = F.mul(pw, root)
        return acc

    out = {g: tuple(tuple(red(x) for x in row) for row in m)
           for g, m in mats.items()}
    # homomorphism survives reduction -- verify exhaustively (small groups)
    G = rep.group
    from .linalg import fmat_mul
    for x in G.elements:
        for y in G.elements:
            assert fmat_mul(F, out[x], out[y]) == out[G.mul(x, y)]
    return ModularRep(G, F, out, root, N)
