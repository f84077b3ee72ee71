"""The skew-hermitian model on F_{q^2}^{2n}, the Frobenius intertwiner S,
the representation omega_SpO of Sp_2n(F_q) x O_2^-(F_q), dihedral
irreducibles of O_2^-, and the Howe correspondence Theta_n.
"""

from fractions import Fraction
from itertools import product

from .cyclo import Cyc, cyc_root
from .groups import (
    FiniteGroup, embed_sp_mu, fixed_dim, galois_on_heis, heis_center,
    heisenberg_group, orthogonal_group, skew_split_form, symplectic_group,
    unitary_act,
)
from .heisweil import center_characters
from .linalg import (
    fmat_vec, mat_add, mat_eq, mat_identity, mat_mul, mat_scale, mat_trace,
    mat_trace_prod,
)
from .reps import (
    MatrixRep, char_inner, extend_character, induce_rep, solve_intertwiner,
)


class SkewModel:
    """Stone-von Neumann representation of H(V_{F_{q^2}}, h'), degree q^{2n};
    the maximal abelian subgroup is the preimage of the F_{q^2}-Lagrangian
    spanned by the first n coordinates."""

    def __init__(self, n, q, psi_index=1):
        if psi_index < 1:
            raise ValueError("psi must be nontrivial")
        self.n, self.q = n, q
        self.form = skew_split_form(n, q)
        self.heis = heisenberg_group(self.form)
        self.center_elems = heis_center(self.form)
        self.center = self.heis.subgroup(self.center_elems, name="Z'")
        self.psis = center_characters(self.center, self.form.tower.p)
        self.psi = self.psis[psi_index]
        self.psi_index = psi_index
        a_elems = [h for h in self.heis.elements
                   if all(x == 0 for x in h[0][n:])]
        assert len(a_elems) == q ** (2 * n + 1)
        self.A = self.heis.subgroup(a_elems, name="A'")
        self.psi_A = extend_character(self.A, self.center_elems, self.psi)
        self.rep = induce_rep(self.heis, self.A, self.psi_A,
                              name="SvN'(n=%d,q=%d)" % (n, q))
        assert self.rep.degree == q ** (2 * n)


def svn_rep_skew(n, q, psi_index=1):
    return SkewModel(n, q, psi_index)


class HoweModel:
    """omega_SpO: (g, (xi, k)) -> rho'(xi.g) . S^k on the skew model."""

    def __init__(self, n, q, psi_index=1, seed=0):
        self.n, self.q = n, q
        self.skew = svn_rep_skew(n, q, psi_index)
        form = self.skew.form
        self.form = form
        rho = self.skew.rep
        H = self.skew.heis
        self.sp = symplectic_group(2 * n, q)
        self.orth = orthogonal_group(q)
        self.mu = self.orth.mu

        coset_reps = []
        seen = set()
        for h in H.elements:
            if h[0] not in seen:
                seen.add(h[0])
                coset_reps.append(h)
        self._coset_reps = coset_reps
        self._rho = rho
        self._H = H

        def normalized_T(u, seed_off=0):
            T = solve_intertwiner(
                rho.mat,
                lambda h, u=u: rho.mat(unitary_act(form, u, h)),
                coset_reps,
                lambda h: H.inv(h),
                seed=seed + seed_off,
            )
            target = Cyc.rational(Fraction((-q) ** fixed_dim(form, u)))
            return mat_scale(target / mat_trace(T), T)

        gens = self.sp.generators()
        gen_mats = [normalized_T(embed_sp_mu(form, g, 1)) for g in gens]
        self.rep_sp = MatrixRep(self.sp, rho.degree, gens=gens,
                                gen_mats=gen_mats, cache_limit=10 ** 4,
                                name="pi|Sp(n=%d,q=%d)" % (n, q))
        self.rep_sp.complete()

        ident_sp = self.sp.identity
        T_mu = normalized_T(embed_sp_mu(form, ident_sp, self.mu[1]))
        pows = [mat_identity(rho.degree)]
        for _ in range(q):
            pows.append(mat_mul(pows[-1], T_mu))
        assert mat_eq(mat_mul(pows[q], T_mu), pows[0]), \
            "T_mu does not have order dividing q+1"
        self.t_mu = pows          # T for scalars mu[0..q]

        self.S = self._build_frobenius(seed)
        # precompute T_mu^i . S^k
        self._usk = {(i, k): (self.t_mu[i] if k == 0
                              else mat_mul(self.t_mu[i], self.S))
                     for i in range(q + 1) for k in (0, 1)}
        self._char = None

    # -- Frobenius intertwiner --------------------------------------------

    def _build_frobenius(self, seed):
        rho, H, form = self._rho, self._H, self.form
        S = solve_intertwiner(
            rho.mat,
            lambda h: rho.mat(galois_on_heis(form, h)),
            self._coset_reps,
            lambda h: H.inv(h),
            seed=seed,
        )
        t = mat_trace(S)
        assert not t.is_zero(), "Tr S = 0 contradicts the normalization"
        S = mat_scale(Cyc.rational(self.q ** self.n) / t, S)
        assert mat_eq(mat_mul(S, S), mat_identity(rho.degree)), \
            "S^2 != Id after trace normalization"
        return S

    # -- the product group and its character ------------------------------

    def spo_group(self):
        Sp, O = self.sp, self.orth
        els = [(g, o) for g in Sp.elements for o in O.elements]
        return FiniteGroup(
            els,
            lambda x, y: (Sp.mul(x[0], y[0]), O.mul(x[1], y[1])),
            lambda x: (Sp.inv(x[0]), O.inv(x[1])),
            (Sp.identity, O.identity),
            name="Sp_%d(F_%d) x O2-" % (2 * self.n, self.q),
        )

    def omega_mat(self, x):
        g, (i, k) = x
        return mat_mul(self.rep_sp.mat(g), self._usk[(i, k)])

    def omega_rep(self):
        G = self.spo_group()
        return MatrixRep(G, self._rho.degree, mat_fn=self.omega_mat,
                         cache_limit=0, name="omega_SpO")

    def character(self):
        """(g, o) -> Tr omega(g, o), via trace-of-product (no big cache)."""
        if self._char is None:
            chi = {}
            for g in self.sp.elements:
                M = self.rep_sp.mat(g)
                for o in self.orth.elements:
                    chi[(g, o)] = mat_trace_prod(M, self._usk[o])
            self._char = chi
        return self._char

    def sp_character(self):
        """g -> Tr rho'(g), the restriction to Sp(V, omega)."""
        return {g: mat_trace(self.rep_sp.mat(g)) for g in self.sp.elements}

    # -- isotypic / eigenspace dimensions ---------------------------------

    def chi_mu_characters(self):
        """Characters chi_j of mu_{q+1} (as indices): j -> [values]."""
        return [[cyc_root(self.q + 1, i * j) for i in range(self.q + 1)]
                for j in range(self.q + 1)]

    def mu_projector(self, j):
        chis = self.chi_mu_characters()[j]
        acc = None
        for i in range(self.q + 1):
            term = mat_scale(chis[i].conj(), self.t_mu[i])
            acc = term if acc is None else mat_add(acc, term)
        P = mat_scale(Cyc.rational(Fraction(1, self.q + 1)), acc)
        assert mat_eq(mat_mul(P, P), P)
        return P

    def isotypic_table(self):
        """For each j: dim[chi_j]; for chi_j^2 = 1 additionally the kappa =
        +/- eigenspace dimensions of S on that block."""
        out = []
        for j in range(self.q + 1):
            P = self.mu_projector(j)
            dim = _as_int(mat_trace(P))
            entry = {"chi": j, "dim": dim}
            if (2 * j) % (self.q + 1) == 0:      # chi^2 = 1: S preserves [chi]
                t = mat_trace_prod(P, self.S)
                f = t.as_fraction()
                entry["dim_plus"] = _as_int_f(Fraction(dim + f, 2))
                entry["dim_minus"] = _as_int_f(Fraction(dim - f, 2))
            out.append(entry)
        return out

    def verify_unitary_trace_consistency(self):
        """Tr omega(g, xi, 0) = (-q)^{N(xi.g)} with N the fixed space over
        F_{q^2}: the restriction to Sp x mu factors through the unitary
        Heisenberg-Weil character (dim V' = 2n is even, so no sign)."""
        for g in self.sp.elements:
            M = self.rep_sp.mat(g)
            for i in range(self.q + 1):
                u = embed_sp_mu(self.form, g, self.mu[i])
                want = Cyc.rational((-self.q) ** fixed_dim(self.form, u))
                if mat_trace_prod(M, self.t_mu[i]) != want:
                    return False
        return True

    def verify_s_swaps_isotypics(self):
        for j in range(self.q + 1):
            P = self.mu_projector(j)
            Pm = self.mu_projector((-j) % (self.q + 1))
            if not mat_eq(mat_mul(mat_mul(self.S, P), self.S), Pm):
                return False
        return True


def _as_int(c):
    return _as_int_f(c.as_fraction())


def _as_int_f(f):
    assert f.denominator == 1
    return int(f)


# ---------------------------------------------------------------------------
# dihedral irreducibles of O(W, Q)


class DihedralIrrep:
    def __init__(self, label, dim, values):
        self.label = label
        self.dim = dim
        self.values = values          # (i, k) -> Cyc

    def __repr__(self):
        return "DihedralIrrep(%s)" % (self.label,)


def dihedral_irreps(q):
    """Complete list for O_2^- = mu_{q+1} x| Z/2, dihedral of order 2(q+1).

    One-dimensional: sigma_{chi0, kappa} with chi0^2 = 1; two-dimensional:
    sigma_chi = Ind(chi) for chi^2 != 1, with sigma_chi = sigma_{chi^{-1}}.
    """
    n1 = q + 1
    out = []
    ones = [j for j in range(n1) if (2 * j) % n1 == 0]
    for j in ones:
        for kappa in (1, -1):
            vals = {}
            for i in range(n1):
                for k in (0, 1):
                    vals[(i, k)] = cyc_root(n1, i * j) * (kappa ** k)
            name = "1" if j == 0 else "nu"
            out.append(DihedralIrrep(
                ("%s,%s" % (name, "+" if kappa == 1 else "-")), 1, vals))
    seen = set()
    for j in range(n1):
        if (2 * j) % n1 == 0 or j in seen:
            continue
        seen.add(j)
        seen.add((-j) % n1)
        vals = {}
        for i in range(n1):
            vals[(i, 0)] = cyc_root(n1, i * j) + cyc_root(n1, -i * j)
            vals[(i, 1)] = Cyc.zero()
        out.append(DihedralIrrep("chi%d" % j, 2, vals))
    assert sum(s.dim ** 2 for s in out) == 2 * n1
    return out


def theta(model: HoweModel, sigma: DihedralIrrep):
    """Character of Theta_n(sigma) = Hom_O(sigma, omega) on Sp_2n(F_q)."""
    chi_om = model.character()
    O = model.orth
    out = {}
    for g in model.sp.elements:
        acc = Cyc.zero()
        for o in O.elements:
            acc = acc + sigma.values[o].conj() * chi_om[(g, o)]
        out[g] = acc / len(O.elements)
    return out


def theta_table(model: HoweModel):
    """Full Howe-correspondence analysis: for each sigma the dimension,
    self-norm, and pairwise inner products."""
    sigmas = dihedral_irreps(model.q)
    thetas = [theta(model, s) for s in sigmas]
    Sp = model.sp
    dims = []
    for th in thetas:
        f = th[Sp.identity].as_fraction()
        assert f.denominator == 1 and f >= 0
        dims.append(int(f))
    norms = [char_inner(Sp, th, th) for th in thetas]
    pair = {}
    for i in range(len(sigmas)):
        for j in range(i + 1, len(sigmas)):
            pair[(i, j)] = char_inner(Sp, thetas[i], thetas[j])
    return {"sigmas": sigmas, "thetas": thetas, "dims": dims,
            "norms": norms, "pairwise": pair}


# ---------------------------------------------------------------------------
# Sp-orbits on V_{F_{q^2}}


def sp_orbit_count(n, q):
    """Number of Sp_2n(F_q)-orbits on F_{q^2}^{2n}, with breakdown
    (zero, decomposable, indecomposable)."""
    form = skew_split_form(n, q)
    tw = form.tower
    F, Fq = tw.fq2, tw.base
    emb = tw.embed_table(Fq, F)
    # split F_{q^2} = F_q + delta F_q with delta the first non-F_q element
    delta = next(x for x in F.elements() if not tw.in_fq(x))
    decomp = {}
    for a in Fq.elements():
        for b in Fq.elements():
            decomp[F.add(emb[a], F.mul(emb[b], delta))] = (a, b)
    sp = symplectic_group(2 * n, q)
    mats = [embed_sp_mu(form, g, 1) for g in sp.elements]
    vectors = list(product(F.elements(), repeat=2 * n))
    seen = set()
    orbits = []
    for v in vectors:
        if v in seen:
            continue
        orb = set()
        for M in mats:
            orb.add(fmat_vec(F, M, v))
        seen |= orb
        orbits.append((v, len(orb)))
    breakdown = {"zero": 0, "decomposable": 0, "indecomposable": 0}
    for v, _ in orbits:
        v1 = tuple(decomp[x][0] for x in v)
        v2 = tuple(decomp[x][1] for x in v)
        if not any(v1) and not any(v2):
            breakdown["zero"] += 1
        elif _rank2(Fq, v1, v2) <= 1:
            breakdown["decomposable"] += 1
        else:
            breakdown["indecomposable"] += 1
    return len(orbits), breakdown


def reassemble_character(model: HoweModel, table=None):
    """Exact identity chi_omega(g, o) = sum_sigma chi_sigma(o) chi_Theta(g),
    checked pointwise over the whole (g, o) grid."""
    if table is None:
        table = theta_table(model)
    chi_om = model.character()
    for g in model.sp.elements:
        for o in model.orth.elements:
            acc = Cyc.zero()
            for s, th in zip(table["sigmas"], table["thetas"]):
                acc = acc + s.values[o] * th[g]
            if acc != chi_om[(g, o)]:
                return False
    return True


def skew_model_dictionary(q):
    """Change of variables identifying H(F_{q^2}^2, h') with H(F_{q^2}^2, h_2):
    returns (f, xi) with h'(v, w) = xi * h_2(f v, f w) and xi^q = -xi, so
    (v, a) -> (f v, xi^{-1} a) is a group isomorphism."""
    form = skew_split_form(1, q)
    F = form.field
    xi = next(x for x in F.elements()
              if x and F.pow(x, q) == F.neg(x))
    xi_inv = F.inv(xi)
    target = tuple(tuple(F.mul(xi_inv, e) for e in row) for row in form.gram)

    def gram_of(P):
        # (P^dagger P)_{ij} = sum_k conj(P_{ki}) P_{kj}
        out = []
        for i in range(2):
            row = []
            for j in range(2):
                acc = 0
                for k in range(2):
                    acc = F.add(acc, F.mul(F.pow(P[k][i], q), P[k][j]))
                row.append(acc)
            out.append(tuple(row))
        return tuple(out)

    for entries in product(F.elements(), repeat=4):
        P = (entries[:2], entries[2:])
        if gram_of(P) == target:
            return P, xi
    raise RuntimeError("no base change found (hermitian forms of equal rank "
                       "are equivalent, so this cannot happen)")


def _rank2(F, v1, v2):
    rows = [list(v1), list(v2)]
    rank = 0
    cols = len(v1)
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, 2) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = F.inv(rows[r][c])
        rows[r] = [F.mul(x, inv) for x in rows[r]]
        for i in range(2):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [F.sub(x, F.mul(f, y))
                           for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == 2:
            break
    return r


_howe_cache = {}


def howe_model(n, q, psi_index=1, seed=0):
    key = (n, q, psi_index, seed)
    if key not in _howe_cache:
        _howe_cache[key] = HoweModel(n, q, psi_index, seed)
    return _howe_cache[key]
