"""The finite groups of the construction: unitary Heisenberg groups,
unitary / symplectic / orthogonal(dihedral) groups, and the semidirect
products tying them together.

Group elements are plain hashable tuples; each group carries its own
multiplication closure over the finite-field tables.
"""

from itertools import product
from math import lcm

from .ffield import ff_mu_enum, ff_trace_solve, fq_eps_center, tower
from .linalg import (
    fmat_identity, fmat_inv, fmat_mul, fmat_nullity, fmat_transpose, fmat_vec,
)


class BudgetError(Exception):
    """Enumeration would exceed the configured resource budget."""


class FiniteGroup:
    """A concrete finite group: element list (optional), mul, inv."""

    def __init__(self, elements, mul, inv, identity, name=""):
        self.elements = list(elements) if elements is not None else None
        self.mul = mul
        self.inv = inv
        self.identity = identity
        self.name = name
        self._index = None
        self._exponent = None
        self._gens = None
        self._classes = None

    def __len__(self):
        return len(self.elements)

    def index(self, x):
        if self._index is None:
            self._index = {g: i for i, g in enumerate(self.elements)}
        return self._index[x]

    def __contains__(self, x):
        if self._index is None:
            self._index = {g: i for i, g in enumerate(self.elements)}
        return x in self._index

    def element_order(self, x):
        k = 1
        y = x
        while y != self.identity:
            y = self.mul(y, x)
            k += 1
        return k

    def exponent(self):
        if self._exponent is None:
            e = 1
            for g in self.elements:
                e = lcm(e, self.element_order(g))
            self._exponent = e
        return self._exponent

    def generators(self):
        """Deterministic small generating set (greedy closure scan)."""
        if self._gens is None:
            gens = []
            known = {self.identity}
            for x in self.elements:
                if x not in known:
                    gens.append(x)
                    known = _mulclose(known | {x}, gens, self.mul)
                    if len(known) == len(self.elements):
                        break
            self._gens = gens
        return self._gens

    def conjugacy_classes(self):
        """List of classes (each a list of elements, rep first).

        Orbits of conjugation by the generating set.
        """
        if self._classes is None:
            gens = self.generators()
            ginv = [self.inv(g) for g in gens]
            seen = set()
            classes = []
            for x in self.elements:
                if x in seen:
                    continue
                orbit = [x]
                seen.add(x)
                frontier = [x]
                while frontier:
                    y = frontier.pop()
                    for g, gi in zip(gens, ginv):
                        z = self.mul(self.mul(g, y), gi)
                        if z not in seen:
                            seen.add(z)
                            orbit.append(z)
                            frontier.append(z)
                classes.append(orbit)
            self._classes = classes
        return self._classes

    def subgroup(self, elements, name=""):
        return FiniteGroup(elements, self.mul, self.inv, self.identity, name)

    def __repr__(self):
        size = "?" if self.elements is None else len(self.elements)
        return "FiniteGroup(%s, order=%s)" % (self.name or "anon", size)


def _mulclose(seed, gens, mul):
    known = set(seed)
    frontier = list(seed)
    while frontier:
        x = frontier.pop()
        for g in gens:
            for y in (mul(x, g), mul(g, x)):
                if y not in known:
                    known.add(y)
                    frontier.append(y)
    return known


def group_exponent(group):
    return group.exponent()


# ---------------------------------------------------------------------------
# forms


class FormData:
    """A nondegenerate eps-hermitian form on F_{q^2}^n, given by its Gram
    matrix; evaluation is h(v,v') = sum conj(v_i) G_ij v'_j."""

    def __init__(self, tw, n, eps, gram, kind):
        self.tower = tw
        self.n = n
        self.eps = eps
        self.gram = gram
        self.kind = kind
        self.field = tw.fq2
        self.q = tw.q

    def evaluate(self, v, w):
        F = self.field
        q = self.q
        acc = 0
        for i, vi in enumerate(v):
            if vi:
                vic = F.pow(vi, q)
                row = self.gram[i]
                for j, wj in enumerate(w):
                    if wj and row[j]:
                        acc = F.add(acc, F.mul(F.mul(vic, row[j]), wj))
        return acc

    def is_isometry(self, M):
        """conj(M)^T G M == G entrywise."""
        F = self.field
        Mc = tuple(tuple(F.pow(x, self.q) for x in row) for row in M)
        lhs = fmat_mul(F, fmat_mul(F, fmat_transpose(Mc), self.gram), M)
        return lhs == self.gram


def standard_hermitian(n, q):
    """h_n(v, v') = sum v_k^q v'_k."""
    tw = tower(q)
    gram = fmat_identity(tw.fq2, n)
    return FormData(tw, n, +1, gram, "hermitian")


def skew_split_form(n, q):
    """h' on F_{q^2}^{2n}: sum v_k^q v'_{n+k} - v_{n+k}^q v'_k (eps = -1)."""
    tw = tower(q)
    F = tw.fq2
    m1 = F.neg(1)
    gram = [[0] * (2 * n) for _ in range(2 * n)]
    for k in range(n):
        gram[k][n + k] = 1
        gram[n + k][k] = m1
    return FormData(tw, 2 * n, -1, tuple(map(tuple, gram)), "skew")


# ---------------------------------------------------------------------------
# Heisenberg groups


def heis_identity(form):
    return ((0,) * form.n, 0)


def heis_mul(form, x, y):
    """(v,a)(v',a') = (v+v', a+a'+h(v,v'))."""
    F = form.field
    v = tuple(F.add(a, b) for a, b in zip(x[0], y[0]))
    a = F.add(F.add(x[1], y[1]), form.evaluate(x[0], y[0]))
    return (v, a)


def heis_inv(form, x):
    F = form.field
    v = tuple(F.neg(c) for c in x[0])
    # (v,a)(-v,b) = (0, a + b + h(v,-v)) => b = -a + h(v,v)
    a = F.add(F.neg(x[1]), form.evaluate(x[0], x[0]))
    return (v, a)


def heisenberg_group(form):
    tw = form.tower
    els = []
    for v in product(tw.fq2.elements(), repeat=form.n):
        c = form.evaluate(v, v)
        for a in ff_trace_solve(tw, c, form.eps):
            els.append((v, a))
    assert len(els) == tw.q ** (2 * form.n + 1)
    G = FiniteGroup(
        els,
        lambda x, y: heis_mul(form, x, y),
        lambda x: heis_inv(form, x),
        heis_identity(form),
        name="H(%s_%d,q=%d)" % (form.kind, form.n, form.q),
    )
    G.form = form
    return G


def heis_center(form):
    """{(0, a) : a + eps a^q = 0}, in deterministic order."""
    return [((0,) * form.n, a) for a in sorted(fq_eps_center(form.tower, form.eps))]


def unitary_act(form, g, h):
    """Action of a unitary matrix on a Heisenberg element: (v,a) -> (gv, a)."""
    return (fmat_vec(form.field, g, h[0]), h[1])


# ---------------------------------------------------------------------------
# unitary groups


def unitary_enumerate(form, budget=10 ** 7):
    """All isometries of the form, by column backtracking on Gram constraints.

    Deterministic order (columns scanned by vector index).
    """
    F = form.field
    n = form.n
    q = form.q
    if (q * q) ** n > budget:
        raise BudgetError("unitary enumeration budget exceeded")
    vectors = list(product(F.elements(), repeat=n))
    gram = form.gram

    def h(v, w):
        return form.evaluate(v, w)

    out = []
    cols = [None] * n

    def extend(j):
        for c in vectors:
            if h(c, c) != gram[j][j]:
                continue
            ok = True
            for i in range(j):
                if h(cols[i], c) != gram[i][j] or h(c, cols[i]) != gram[j][i]:
                    ok = False
                    break
            if not ok:
                continue
            cols[j] = c
            if j == n - 1:
                M = tuple(tuple(cols[cj][r] for cj in range(n)) for r in range(n))
                out.append(M)
            else:
                extend(j + 1)
        cols[j] = None

    extend(0)
    return out


def unitary_order_formula(n, q):
    out = q ** (n * (n - 1) // 2)
    for i in range(1, n + 1):
        out *= q ** i - (-1) ** i
    return out


def unitary_group(form, budget=10 ** 7):
    els = unitary_enumerate(form, budget)
    F = form.field
    G = FiniteGroup(
        els,
        lambda x, y: fmat_mul(F, x, y),
        lambda x: fmat_inv(F, x),
        fmat_identity(F, form.n),
        name="U(%s_%d,q=%d)" % (form.kind, form.n, form.q),
    )
    G.form = form
    return G


def fixed_dim(form, g):
    """N(g) = dim Ker(g - 1) over F_{q^2}."""
    F = form.field
    A = tuple(
        tuple(F.sub(x, 1 if i == j else 0) for j, x in enumerate(row))
        for i, row in enumerate(g)
    )
    return fmat_nullity(F, A)


def unitary_scalars(form):
    """The central mu_{q+1} as scalar matrices, in ff_mu_enum order."""
    F = form.field
    out = []
    for z in ff_mu_enum(form.tower):
        out.append(tuple(tuple(z if i == j else 0 for j in range(form.n))
                         for i in range(form.n)))
    return out


# ---------------------------------------------------------------------------
# symplectic groups


def sp_J(n2, q):
    F = tower(q).base
    n = n2 // 2
    m1 = F.neg(1)
    J = [[0] * n2 for _ in range(n2)]
    for k in range(n):
        J[k][n + k] = 1
        J[n + k][k] = m1
    return tuple(map(tuple, J))


def is_symplectic(g, n2, q):
    F = tower(q).base
    J = sp_J(n2, q)
    return fmat_mul(F, fmat_mul(F, fmat_transpose(g), J), g) == J


def symplectic_group(n2, q, budget=10 ** 7):
    """Full enumeration of Sp_{n2}(F_q) (feasible for n2 <= 4, small q)."""
    F = tower(q).base
    total = q ** (n2 * n2)
    if total > budget:
        raise BudgetError(
            "Sp_%d(F_%d) scan needs %d candidates" % (n2, q, total)
        )
    J = sp_J(n2, q)
    els = []
    for entries in product(F.elements(), repeat=n2 * n2):
        g = tuple(entries[i * n2:(i + 1) * n2] for i in range(n2))
        if fmat_mul(F, fmat_mul(F, fmat_transpose(g), J), g) == J:
            els.append(g)
    G = FiniteGroup(
        els,
        lambda x, y: fmat_mul(F, x, y),
        lambda x: fmat_inv(F, x),
        fmat_identity(F, n2),
        name="Sp_%d(F_%d)" % (n2, q),
    )
    G.fq = F
    return G


# ---------------------------------------------------------------------------
# orthogonal group O(W, Q) = mu_{q+1} semidirect Z/2 (dihedral)


def orthogonal_group(q):
    """Elements (i, k): the map x -> mu^i * x^{q^k} on W = F_{q^2}."""
    n1 = q + 1

    def mul(x, y):
        i1, k1 = x
        i2, k2 = y
        return ((i1 + (i2 if k1 == 0 else -i2)) % n1, (k1 + k2) % 2)

    def inv(x):
        i, k = x
        return ((-i) % n1 if k == 0 else i, k)

    els = [(i, k) for k in (0, 1) for i in range(n1)]
    G = FiniteGroup(els, mul, inv, (0, 0), name="O2-(F_%d)" % q)
    G.mu = ff_mu_enum(tower(q))
    G.q = q
    return G


# ---------------------------------------------------------------------------
# semidirect products HU(h) = H semidirect U, and the dual-pair embedding


def hu_group(form, unitary, materialize=None):
    """HU(h) = H(V,h) x| U(V,h); elements ((v,a), g)."""
    H = heisenberg_group(form)
    F = form.field

    def mul(x, y):
        h1, g1 = x
        h2, g2 = y
        return (heis_mul(form, h1, unitary_act(form, g1, h2)),
                fmat_mul(F, g1, g2))

    def inv(x):
        h, g = x
        gi = fmat_inv(F, g)
        return (unitary_act(form, gi, heis_inv(form, h)), gi)

    size = len(H.elements) * len(unitary.elements)
    if materialize is None:
        materialize = size <= 200000
    els = None
    if materialize:
        els = [(h, g) for g in unitary.elements for h in H.elements]
    G = FiniteGroup(els, mul, inv, (heis_identity(form), unitary.identity),
                    name="HU(%s_%d,q=%d)" % (form.kind, form.n, form.q))
    G.form = form
    G.heis = H
    G.unitary = unitary
    G.size = size
    return G


def embed_sp_mu(formp, g, zeta):
    """(g, zeta) in Sp x mu_{q+1} -> the matrix zeta*g as isometry of h'.

    g has entries in F_q (indices of the base field), zeta an index of
    F_{q^2}; entries are pushed through the tower embedding.
    """
    tw = formp.tower
    F = formp.field
    tab = tw.embed_table(tw.base, F)
    M = tuple(tuple(F.mul(zeta, tab[x]) for x in row) for row in g)
    if not formp.is_isometry(M):
        raise ValueError("embedded matrix is not an isometry of h'")
    return M


def galois_on_heis(form, h):
    """sigma(v, a) = (v^(q), a^q) -- the Frobenius of HU(h') over F_q."""
    F = form.field
    q = form.q
    return (tuple(F.pow(x, q) for x in h[0]), F.pow(h[1], q))


def galois_on_matrix(form, g):
    F = form.field
    q = form.q
    return tuple(tuple(F.pow(x, q) for x in row) for row in g)
