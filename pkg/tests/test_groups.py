import random

import pytest

from weilhowe.ffield import tower
from weilhowe.groups import (
    BudgetError, embed_sp_mu, fixed_dim, galois_on_heis, galois_on_matrix,
    heis_center, heis_identity, heis_inv, heis_mul, heisenberg_group,
    hu_group, orthogonal_group, skew_split_form, sp_J, standard_hermitian,
    symplectic_group, unitary_act, unitary_enumerate, unitary_group,
    unitary_order_formula, unitary_scalars,
)


def test_heisenberg_orders():
    for n, q in [(1, 2), (1, 3), (2, 2)]:
        form = standard_hermitian(n, q)
        H = heisenberg_group(form)
        assert len(H.elements) == q ** (2 * n + 1)
        assert len(heis_center(form)) == q


def test_heis_group_axioms_exhaustive():
    for q in (2, 3):
        form = standard_hermitian(1, q)
        H = heisenberg_group(form)
        e = heis_identity(form)
        for x in H.elements:
            assert heis_mul(form, e, x) == x
            assert heis_mul(form, x, heis_inv(form, x)) == e
        rng = random.Random(1)
        for _ in range(300):
            x, y, z = (rng.choice(H.elements) for _ in range(3))
            assert heis_mul(form, heis_mul(form, x, y), z) == \
                heis_mul(form, x, heis_mul(form, y, z))


def test_heis_commutator_and_order4():
    # q=2, n=1: (1, omega)^2 = (0, 1): an order-4 element in char 2
    form = standard_hermitian(1, 2)
    F = form.field
    omega = next(a for a in F.elements() if a not in (0, 1))
    x = ((1,), omega)
    assert form.evaluate((1,), (1,)) == 1  # membership condition target
    assert F.add(omega, F.pow(omega, 2)) == 1  # omega + omega^2 = 1
    sq = heis_mul(form, x, x)
    assert sq == ((0,), 1)
    H = heisenberg_group(form)
    assert H.element_order(x) == 4
    assert H.exponent() == 4


def test_center_structure():
    for n, q, eps_kind in [(1, 2, "h"), (2, 3, "h")]:
        form = standard_hermitian(n, q)
        H = heisenberg_group(form)
        Z = heis_center(form)
        # central: commutes with everything
        rng = random.Random(0)
        sample = [rng.choice(H.elements) for _ in range(20)]
        for z in Z:
            for x in sample:
                assert heis_mul(form, z, x) == heis_mul(form, x, z)


def test_unitary_counts():
    for n, q in [(1, 2), (1, 3), (2, 2), (2, 3), (3, 2)]:
        form = standard_hermitian(n, q)
        els = unitary_enumerate(form)
        assert len(els) == unitary_order_formula(n, q)
    # n=1: q+1 elements (mu_{q+1})
    assert unitary_order_formula(1, 5) == 6
    assert len(unitary_enumerate(standard_hermitian(2, 2))) == 18
    assert len(unitary_enumerate(standard_hermitian(2, 3))) == 96
    assert len(unitary_enumerate(standard_hermitian(3, 2))) == 648


def test_unitary_group_structure():
    G = unitary_group(standard_hermitian(2, 2))
    # Z/3 x S_3 has exponent 6... lcm(3, 6) = 6
    assert G.exponent() == 6
    for g in G.elements:
        assert G.form.is_isometry(g)
    assert G.mul(G.identity, G.elements[5]) == G.elements[5]
    # closure
    rng = random.Random(2)
    for _ in range(50):
        a, b = rng.choice(G.elements), rng.choice(G.elements)
        assert G.mul(a, b) in G


def test_unitary_action_by_automorphisms():
    form = standard_hermitian(1, 2)
    H = heisenberg_group(form)
    U = unitary_group(form)
    for g in U.elements:
        for x in H.elements:
            for y in H.elements:
                lhs = unitary_act(form, g, heis_mul(form, x, y))
                rhs = heis_mul(form, unitary_act(form, g, x),
                               unitary_act(form, g, y))
                assert lhs == rhs


def test_fixed_dim():
    form = standard_hermitian(2, 2)
    G = unitary_group(form)
    assert fixed_dim(form, G.identity) == 2
    scal = unitary_scalars(form)
    assert fixed_dim(form, scal[1]) == 0  # zeta != 1
    iota = ((0, 1), (1, 0))
    assert iota in G
    assert fixed_dim(form, iota) == 1


def test_symplectic():
    G = symplectic_group(2, 2)
    assert len(G.elements) == 6  # SL_2(F_2)
    G3 = symplectic_group(2, 3)
    assert len(G3.elements) == 24
    G4 = symplectic_group(4, 2)
    assert len(G4.elements) == 720
    with pytest.raises(BudgetError):
        symplectic_group(4, 3, budget=10 ** 6)


def test_orthogonal_dihedral():
    for q in (2, 3):
        O = orthogonal_group(q)
        assert len(O.elements) == 2 * (q + 1)
        # dihedral relations: r = (1,0), s = (0,1)
        r, s = (1, 0), (0, 1)
        assert O.element_order(r) == q + 1
        assert O.element_order(s) == 2
        srs = O.mul(s, O.mul(r, s))
        assert srs == O.inv(r)
        for x in O.elements:
            assert O.mul(x, O.inv(x)) == O.identity


def test_embed_sp_mu():
    formp = skew_split_form(1, 2)
    Sp = symplectic_group(2, 2)
    from weilhowe.ffield import ff_mu_enum
    mu = ff_mu_enum(formp.tower)
    for g in Sp.elements:
        for z in mu:
            M = embed_sp_mu(formp, g, z)  # raises if not isometry
    # homomorphism in each variable
    g1, g2 = Sp.elements[1], Sp.elements[2]
    F = formp.field
    from weilhowe.linalg import fmat_mul
    assert fmat_mul(F, embed_sp_mu(formp, g1, 1), embed_sp_mu(formp, g2, 1)) \
        == embed_sp_mu(formp, Sp.mul(g1, g2), 1)
    z = mu[1]
    assert fmat_mul(F, embed_sp_mu(formp, g1, z), embed_sp_mu(formp, g2, z)) \
        == embed_sp_mu(formp, Sp.mul(g1, g2), F.mul(z, z))


def test_hu_group():
    form = standard_hermitian(1, 2)
    U = unitary_group(form)
    G = hu_group(form, U)
    assert len(G.elements) == 8 * 3
    rng = random.Random(3)
    for _ in range(200):
        x, y, z = (rng.choice(G.elements) for _ in range(3))
        assert G.mul(G.mul(x, y), z) == G.mul(x, G.mul(y, z))
        assert G.mul(x, G.inv(x)) == G.identity
    assert G.exponent() % 4 == 0


def test_galois_is_automorphism_of_hu_hprime():
    formp = skew_split_form(1, 2)
    H = heisenberg_group(formp)
    assert len(H.elements) == 2 ** 5
    rng = random.Random(4)
    for _ in range(100):
        x, y = rng.choice(H.elements), rng.choice(H.elements)
        lhs = galois_on_heis(formp, heis_mul(formp, x, y))
        rhs = heis_mul(formp, galois_on_heis(formp, x),
                       galois_on_heis(formp, y))
        assert lhs == rhs
    # sigma is an involution
    for x in H.elements:
        assert galois_on_heis(formp, galois_on_heis(formp, x)) == x


def test_skew_center_is_fq():
    formp = skew_split_form(1, 3)
    Z = heis_center(formp)
    # eps = -1: a - a^q = 0 means a in F_q
    assert len(Z) == 3
    for (_, a) in Z:
        assert formp.tower.in_fq(a)


def test_conjugacy_classes_partition():
    G = unitary_group(standard_hermitian(2, 2))
    classes = G.conjugacy_classes()
    assert sum(len(c) for c in classes) == 18
    sizes = sorted(len(c) for c in classes)
    assert all(18 % s == 0 for s in sizes)
