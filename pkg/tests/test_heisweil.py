from fractions import Fraction

import pytest

from weilhowe.cyclo import Cyc
from weilhowe.groups import fixed_dim, unitary_scalars
from weilhowe.heisweil import (
    branch, expected_isotypic_dim, svn_rep, weil_isotypic_dims, weil_rep,
)
from weilhowe.reps import char_inner


def test_svn_small():
    for (n, q) in [(1, 2), (1, 3)]:
        m = svn_rep(n, q)
        assert m.rep.degree == q ** n
        chi = m.character()
        assert char_inner(m.heis, chi, chi) == 1
        # central character: q^n * psi on the center
        for z in m.center_elems:
            assert chi[z] == q ** n * m.psi.value(z)


def test_svn_monomial():
    m = svn_rep(1, 2)
    assert m.rep.is_monomial()
    m.rep.verify_homomorphism()


def test_all_nontrivial_psis_give_svn():
    m = svn_rep(1, 3, psi_index=2)
    chi = m.character()
    assert char_inner(m.heis, chi, chi) == 1


def test_weil_trace_formula_n1():
    W = weil_rep(1, 2)
    assert W.verify_trace_formula()
    # regular diagonal: trace (-1)^n = -1
    scal = unitary_scalars(W.form)
    assert W.trace_table()[scal[1]] == -1
    assert W.trace_table()[W.unitary.identity] == 2


def test_weil_trace_formula_22_and_iota():
    W = weil_rep(2, 2)
    assert W.verify_trace_formula()
    iota = ((0, 1), (1, 0))
    assert W.trace_table()[iota] == -2          # the swap value
    # regular diagonal (zeta, zeta^2): trace (-1)^2 * (-q)^0 = 1
    from weilhowe.ffield import ff_mu_enum
    mu = ff_mu_enum(W.form.tower)
    g = ((mu[1], 0), (0, mu[2]))
    assert fixed_dim(W.form, g) == 0
    assert W.trace_table()[g] == 1


def test_weil_hu_homomorphism_small():
    W = weil_rep(1, 2)
    rep, G = W.hu_rep()
    assert rep.verify_homomorphism() == len(G.elements) ** 2


def test_isotypic_dims_12_22():
    dims = [d for d, _ in weil_rep(1, 2).isotypic()]
    assert dims == [expected_isotypic_dim(1, 2, j == 0) for j in range(3)]
    assert dims == [0, 1, 1]
    dims22 = [d for d, _ in weil_rep(2, 2).isotypic()]
    assert dims22 == [2, 1, 1]
    for d, norm in weil_isotypic_dims(2, 2):
        if d:
            assert norm == 1


def test_psi_independence_n1():
    W1 = weil_rep(1, 3, psi_index=1)
    W2 = weil_rep(1, 3, psi_index=2)
    t1, t2 = W1.trace_table(), W2.trace_table()
    assert t1 == t2


def test_branch_1_to_2_q2():
    # omega_{U_2}[chi] | U_1 = sum of omega_{U_1}[chi'] over chi' != chi
    for chi_index in range(3):
        mults = branch(1, 2, chi_index)
        dims1 = [d for d, _ in weil_rep(1, 2).isotypic()]
        for j, m in enumerate(mults):
            if dims1[j] == 0:
                assert m == 0
            else:
                assert m == (0 if j == chi_index else 1)
