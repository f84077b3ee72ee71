"""Stone-von Neumann representations of the unitary Heisenberg groups
H(h_n), their Heisenberg-Weil extension to HU(h_n) normalized by the trace
formula (-1)^n (-q)^{N(g)}, the Weil representation of U_n(F_q), isotypic
dimensions and branching.
"""

from fractions import Fraction

from .cyclo import Cyc, cyc_root
from .ffield import ff_mu_enum
from .groups import (
    FiniteGroup, fixed_dim, heis_center, heisenberg_group, standard_hermitian,
    unitary_act, unitary_group, unitary_scalars,
)
from .linalg import mat_scale, mat_trace, mat_trace_prod
from .reps import (
    LinearChar, MatrixRep, central_isotypic, char_inner, extend_character,
    induce_rep, solve_intertwiner,
)


def center_characters(Z, p):
    """All characters of the (elementary abelian) center, deterministically
    ordered by their exponent tuple on a greedily chosen basis; index 0 is
    trivial, index 1 the first nontrivial."""
    els = Z.elements
    # greedy basis
    basis = []
    span = {Z.identity}
    for x in els:
        if x not in span:
            basis.append(x)
            span = _span(Z, basis)
    d = len(basis)
    assert p ** d == len(els)
    # coordinates of every element in the basis
    coords = {}
    from itertools import product
    for cs in product(range(p), repeat=d):
        x = Z.identity
        for c, b in zip(cs, basis):
            for _ in range(c):
                x = Z.mul(x, b)
        coords[x] = cs
    chars = []
    for es in product(range(p), repeat=d):
        exps = {x: sum(c * e for c, e in zip(coords[x], es)) % p
                for x in els}
        chars.append(LinearChar(Z, p, exps))
    return chars


def _span(G, gens):
    out = {G.identity}
    frontier = [G.identity]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = G.mul(x, g)
            if y not in out:
                out.add(y)
                frontier.append(y)
    return out


class SvnModel:
    """The Stone-von Neumann representation of H(h_n) for a chosen psi."""

    def __init__(self, n, q, psi_index=1):
        if psi_index < 1:
            raise ValueError("psi must be nontrivial (index >= 1)")
        self.n = n
        self.q = q
        self.form = standard_hermitian(n, q)
        self.heis = heisenberg_group(self.form)
        self.center_elems = heis_center(self.form)
        self.center = self.heis.subgroup(self.center_elems, name="Z")
        self.psis = center_characters(self.center, self.form.tower.p)
        self.psi = self.psis[psi_index]
        self.psi_index = psi_index
        tw = self.form.tower
        a_elems = [h for h in self.heis.elements
                   if all(tw.in_fq(x) for x in h[0])]
        self.A = self.heis.subgroup(a_elems, name="A")
        assert len(a_elems) == q ** (n + 1)
        self.psi_A = extend_character(self.A, self.center_elems, self.psi)
        self.rep = induce_rep(self.heis, self.A, self.psi_A,
                              name="SvN(n=%d,q=%d,psi=%d)" % (n, q, psi_index))
        assert self.rep.degree == q ** n

    def character(self):
        return self.rep.character()


def svn_rep(n, q, psi_index=1):
    return SvnModel(n, q, psi_index)


class WeilModel:
    """Heisenberg-Weil: intertwiners T_g for g in U_n(F_q), normalized so
    Tr T_g = (-1)^n (-q)^{N(g)}, assembled into representations of U_n and
    of HU(h_n)."""

    def __init__(self, n, q, psi_index=1, seed=0):
        self.svn = svn_rep(n, q, psi_index)
        form = self.svn.form
        self.form = form
        self.n, self.q = n, q
        self.unitary = unitary_group(form)
        H = self.svn.heis
        rho = self.svn.rep
        # one representative per center coset of H (translates cancel in the
        # Schur average, so this shrinks the sum by a factor of q)
        coset_reps = []
        seen = set()
        for h in H.elements:
            if h[0] not in seen:
                seen.add(h[0])
                coset_reps.append(h)
        gens = self.unitary.generators()
        gen_mats = []
        for g in gens:
            T = solve_intertwiner(
                rho.mat,
                lambda h, g=g: rho.mat(unitary_act(form, g, h)),
                coset_reps,
                lambda h: H.inv(h),
                seed=seed,
            )
            target = self._trace_target(g)
            T = mat_scale(target / mat_trace(T), T)
            gen_mats.append(T)
        self.rep_u = MatrixRep(self.unitary, rho.degree, gens=gens,
                               gen_mats=gen_mats, cache_limit=10 ** 5,
                               name="omega_U%d(q=%d)" % (n, q))
        self.rep_u.complete()
        self._rho = rho
        self._H = H

    def _trace_target(self, g):
        return Cyc.rational(
            Fraction((-1) ** self.n * (-self.q) ** fixed_dim(self.form, g)))

    def trace_table(self):
        """g -> Tr T_g for every unitary element."""
        return {g: mat_trace(self.rep_u.mat(g)) for g in self.unitary.elements}

    def verify_trace_formula(self):
        """Lemma-level check: Tr T_g = (-1)^n (-q)^{N(g)} for ALL g."""
        for g in self.unitary.elements:
            if mat_trace(self.rep_u.mat(g)) != self._trace_target(g):
                return False
        return True

    def hu_rep(self):
        """The representation of HU(h_n): (h, g) -> rho(h) T_g."""
        from .groups import hu_group
        from .linalg import mat_mul
        G = hu_group(self.form, self.unitary)

        def fn(x):
            h, g = x
            return mat_mul(self._rho.mat(h), self.rep_u.mat(g))

        return MatrixRep(G, self._rho.degree, mat_fn=fn,
                         name="rho_HU(n=%d,q=%d)" % (self.n, self.q)), G

    # -- isotypic structure ------------------------------------------------

    def mu_subgroup(self):
        """The central mu_{q+1} scalars of U_n, in generator-power order."""
        return unitary_scalars(self.form)

    def chi_characters(self):
        """chi_j on the scalar subgroup: scalars[i] -> zeta_{q+1}^{ij}."""
        scal = self.mu_subgroup()
        out = []
        for j in range(self.q + 1):
            out.append({scal[i]: cyc_root(self.q + 1, i * j)
                        for i in range(self.q + 1)})
        return out

    def isotypic(self):
        """chi index -> (dimension, projector)."""
        scal = self.mu_subgroup()
        out = []
        for chi in self.chi_characters():
            out.append(central_isotypic(self.rep_u, scal, chi))
        return out

    def isotypic_character(self, proj):
        """g -> Tr(P . omega(g)) for a central projector P."""
        chi = {}
        for cl in self.unitary.conjugacy_classes():
            t = mat_trace_prod(proj, self.rep_u.mat(cl[0]))
            for x in cl:
                chi[x] = t
        return chi


def weil_rep(n, q, psi_index=1, seed=0, _cache={}):
    key = (n, q, psi_index, seed)
    if key not in _cache:
        _cache[key] = WeilModel(n, q, psi_index, seed)
    return _cache[key]


def expected_isotypic_dim(n, q, trivial):
    if trivial:
        num = q ** n + (-1) ** n * q
    else:
        num = q ** n - (-1) ** n
    assert num % (q + 1) == 0
    return num // (q + 1)


def weil_isotypic_dims(n, q, psi_index=1):
    """chi index -> dimension, with irreducibility of each piece."""
    W = weil_rep(n, q, psi_index)
    out = []
    for j, (dim, proj) in enumerate(W.isotypic()):
        if dim:
            chi = W.isotypic_character(proj)
            norm = char_inner(W.unitary, chi, chi)
        else:
            norm = Cyc.zero()
        out.append((dim, norm))
    return out


def branch(n, q, chi_index, psi_index=1):
    """Decompose omega_{U_{n+1}}[chi] restricted to U_n(F_q) along iota.

    Returns the multiplicity list m_{chi'} indexed like chi_characters.
    """
    Wb = weil_rep(n + 1, q, psi_index)
    Ws = weil_rep(n, q, psi_index)
    dimb, Pb = Wb.isotypic()[chi_index]
    # character of the restriction: g -> Tr(P . omega_{n+1}(diag(g,1)))
    restricted = {}
    for g in Ws.unitary.elements:
        big = tuple(tuple(list(row) + [0]) for row in g) + (
            (0,) * n + (1,),)
        restricted[g] = mat_trace_prod(Pb, Wb.rep_u.mat(big))
    mults = []
    for dim, proj in Ws.isotypic():
        if dim == 0:
            mults.append(0)
            continue
        chi = Ws.isotypic_character(proj)
        m = char_inner(Ws.unitary, restricted, chi)
        f = m.as_fraction()
        assert f.denominator == 1 and f >= 0
        mults.append(int(f))
    return mults
