"""Combinatorial layer: partitions, Murnaghan-Nakayama symmetric-group
characters, formal unipotent-character expansions over Deligne-Lusztig basis
symbols R_T, the parabolic-induction dimension formulas, and an EXPERIMENTAL
extrapolation of twisted Lefschetz sequences to m = 0.

Deligne-Lusztig characters stay formal symbols throughout (no Green
functions); the expansions certify the combinatorial identities while the
geometric content at m >= 1 lives in the varieties module.
"""

from fractions import Fraction
from functools import lru_cache

from .cyclo import Cyc
from .linalg import mat_inv


# ---------------------------------------------------------------------------
# partitions


def normalize_partition(parts):
    out = tuple(sorted((p for p in parts if p), reverse=True))
    assert all(p > 0 for p in out)
    return out


def partitions(n):
    """All partitions of n, deterministic (reverse-lexicographic) order."""
    if n == 0:
        return [()]
    out = []

    def rec(rest, maxpart, prefix):
        if rest == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(rest, maxpart), 0, -1):
            rec(rest - p, p, prefix + [p])

    rec(n, n, [])
    return out


def z_rho(rho):
    """Centralizer order of the class rho in S_|rho|: prod i^{m_i} m_i!."""
    rho = normalize_partition(rho)
    out = 1
    for v in set(rho):
        m = rho.count(v)
        fact = 1
        for t in range(2, m + 1):
            fact *= t
        out *= v ** m * fact
    return out


def _beta_to_partition(beta):
    k = len(beta)
    lam = [beta[i] - (k - 1 - i) for i in range(k)]
    return normalize_partition(lam)


@lru_cache(maxsize=None)
def mn_char(lam, rho):
    """chi^lam(rho): the Murnaghan-Nakayama border-strip recursion via
    beta-numbers."""
    lam = normalize_partition(lam)
    rho = normalize_partition(rho)
    if sum(lam) != sum(rho):
        raise ValueError("partition weights differ")
    if not rho:
        return 1
    r, rest = rho[0], rho[1:]
    k = len(lam)
    beta = [lam[i] + (k - 1 - i) for i in range(k)]
    bset = set(beta)
    total = 0
    for b in beta:
        nb = b - r
        if nb >= 0 and nb not in bset:
            newbeta = sorted((x for x in beta if x != b), reverse=True)
            ht = sum(1 for x in newbeta if nb < x < b)
            newbeta.append(nb)
            newbeta.sort(reverse=True)
            total += (-1) ** ht * mn_char(_beta_to_partition(newbeta), rest)
    return total


# ---------------------------------------------------------------------------
# formal virtual characters over R_T symbols


class VirtualChar:
    """Formal rational combination of basis symbols (tuples naming tori),
    plus an optional constant term.  Symbols are never evaluated."""

    def __init__(self, terms=None, constant=Fraction(0)):
        self.terms = {k: Fraction(v) for k, v in (terms or {}).items()
                      if v != 0}
        self.constant = Fraction(constant)

    def __eq__(self, other):
        return (isinstance(other, VirtualChar)
                and self.terms == other.terms
                and self.constant == other.constant)

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + v
        return VirtualChar(out, self.constant + other.constant)

    def scale(self, c):
        return VirtualChar({k: v * c for k, v in self.terms.items()},
                           self.constant * c)

    def __repr__(self):
        bits = []
        if self.constant:
            bits.append(str(self.constant))
        for k in sorted(self.terms):
            bits.append("%s*R_%s" % (self.terms[k], (k,)))
        return "VirtualChar(%s)" % " + ".join(bits or ["0"])


def unipotent_expansion(lam):
    """psi^lam = sum_rho (chi^lam_rho / z_rho) R_{T(rho)} as a formal
    vector over the torus symbols T(rho)."""
    lam = normalize_partition(lam)
    n = sum(lam)
    terms = {}
    for rho in partitions(n):
        c = Fraction(mn_char(lam, rho), z_rho(rho))
        if c:
            terms[("T", rho)] = c
    return VirtualChar(terms)


def mn_orthogonality(n):
    """Character orthogonality under the z-weighted inner product."""
    lams = partitions(n)
    for la in lams:
        for mu in lams:
            s = sum(Fraction(mn_char(la, rho) * mn_char(mu, rho), z_rho(rho))
                    for rho in partitions(n))
            if s != (1 if la == mu else 0):
                return False
    return True


# ---------------------------------------------------------------------------
# parabolic induction from the (G_1 x G_{n-1})-Levi


def hyperoctahedral_classes(n):
    """Signed cycle types of the rank-n hyperoctahedral group: pairs
    (alpha, beta) with |alpha| + |beta| = n, and their centralizer orders
    2^{len(alpha)} z_alpha 2^{len(beta)} z_beta."""
    out = []
    for a in range(n + 1):
        for alpha in partitions(a):
            for beta in partitions(n - a):
                cent = (2 ** len(alpha) * z_rho(alpha)
                        * 2 ** len(beta) * z_rho(beta))
                out.append(((alpha, beta), cent))
    return out


def expand_rmp(side, n):
    """The formal torus expansion of R^G_{M subset P}(chi x 1): one term
    R_{T x T'} per torus class (T') of the rank-(n-1) factor M', weighted by
    1/|W(T')^F|.

    side = "unitary": M' = U_{n-1}, torus classes = partitions of n-1 with
    |W(T')^F| = z_rho.  side = "symplectic": M' = Sp_{2n-2}, torus classes =
    signed cycle types with the hyperoctahedral centralizer orders.
    """
    if n < 1:
        raise ValueError("rank must be positive")
    terms = {}
    if side == "unitary":
        for rho in partitions(n - 1):
            terms[("TxT", rho)] = Fraction(1, z_rho(rho))
    elif side == "symplectic":
        for (ab, cent) in hyperoctahedral_classes(n - 1):
            terms[("TxT", ab)] = Fraction(1, cent)
    else:
        raise ValueError("unknown side %r" % (side,))
    return VirtualChar(terms)


def rm_dim(side, n, q):
    """Virtual dimension of R^G_{M subset P}(chi x 1):
    unitary side (-1)^{n-1}(q^n - (-1)^n)/(q+1), symplectic side
    -(q^{2n} - 1)/(q+1)."""
    if side == "unitary":
        num = q ** n - (-1) ** n
        assert num % (q + 1) == 0
        return (-1) ** (n - 1) * (num // (q + 1))
    if side == "symplectic":
        num = q ** (2 * n) - 1
        assert num % (q + 1) == 0
        return -(num // (q + 1))
    raise ValueError("unknown side %r" % (side,))


# ---------------------------------------------------------------------------
# EXPERIMENTAL m -> 0 extraction


class ExtractionError(Exception):
    """The declared eigenvalue model cannot explain the sample sequence."""


def lefschetz_extract_m0(samples, candidates):
    """EXPERIMENTAL: extrapolate a twisted-Lefschetz sequence to m = 0.

    samples: dict m -> Cyc value (m >= 1); candidates: declared finite list
    of possible Frobenius eigenvalues (Cyc, distinct).  Solves
    L_m = sum_c x_c c^m exactly; raises ExtractionError when the system is
    underdetermined or inconsistent; returns sum_c x_c (the m = 0 value),
    re-predicting every consumed sample as a consistency check.
    """
    ms = sorted(samples)
    cands = [Cyc._coerce(c) if not isinstance(c, Cyc) else c
             for c in candidates]
    if len(set(c.key() for c in cands)) != len(cands):
        raise ExtractionError("candidate eigenvalues are not distinct")
    if len(ms) < len(cands):
        raise ExtractionError(
            "underdetermined: %d samples for %d eigenvalue candidates"
            % (len(ms), len(cands)))
    use = ms[:len(cands)]
    V = [[c ** m for c in cands] for m in use]
    try:
        Vinv = mat_inv(V)
    except (ZeroDivisionError, ValueError):
        raise ExtractionError("singular eigenvalue system")
    mults = [sum((Vinv[i][j] * samples[use[j]] for j in range(len(use))),
                 Cyc.zero())
             for i in range(len(cands))]
    # re-prediction over ALL provided samples (model falsification check)
    for m in ms:
        pred = sum((mults[i] * (cands[i] ** m) for i in range(len(cands))),
                   Cyc.zero())
        if pred != samples[m]:
            raise ExtractionError(
                "model fails to reproduce the sample at m=%d" % m)
    return sum(mults, Cyc.zero())


def sign_weight_candidates(q, top):
    """The rational sign-weight eigenvalue model: {s q^j : s = ±1,
    0 <= j <= top} (eigenvalues of Frobenius_{q^2} on the varieties in play
    are of this shape at desk scale; the model is falsifiable by
    re-prediction)."""
    out = []
    for j in range(top + 1):
        out.append(Cyc.rational(q ** j))
        out.append(Cyc.rational(-(q ** j)))
    return out
