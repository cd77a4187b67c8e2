import pytest

from nichols_fusion.cyclo import cyclotomic_field
from nichols_fusion import ydspace as yds
from nichols_fusion import loop as lp
from nichols_fusion import classify as cl
from nichols_fusion.ydspace import one_vertex


def test_ev_one_vertex_deltas():
    K = cyclotomic_field(3)
    for a in range(6):
        for b in range(6):
            for s in range(3):
                for t in range(3):
                    val = lp.ev_one_vertex(K, one_vertex(a, s), one_vertex(b, t))
                    if s + t != 2 or (a + b) % 12 != 4:
                        assert val.is_zero()


def test_ev_example_p2():
    # <V^2_1, V^0_0> = (-1) q^{-1+1*(2-1)} = -1
    K = cyclotomic_field(2)
    assert lp.ev_one_vertex(K, one_vertex(2, 1), one_vertex(0, 0)) == -K.one


def test_sigma2_examples():
    K = cyclotomic_field(3)
    for a in range(6):
        v0 = {one_vertex(a, 0): K.one}
        assert lp.sigma2(K, v0) == v0
        got = lp.sigma2(K, {one_vertex(a, 1): K.one})
        want = K.one - K.xi() * K.q_int(-a)
        assert got == {one_vertex(a, 1): want}
        assert lp.sigma2_scalar_one_vertex(K, a, 1) == want


def test_sigma2_identity_on_coinvariants_two_vertex():
    K = cyclotomic_field(3)
    v = {yds.two_vertex(1, 2, 0, 1): K.one}
    assert lp.sigma2(K, v) == v


@pytest.mark.parametrize("p", [2, 3])
def test_sigma2_intertwining(p):
    from nichols_fusion import nichols as ni

    K = cyclotomic_field(p)
    for a in range(2 * p):
        for s in range(p):
            z = {one_vertex(a, s): K.one}
            for n in range(p):
                lhs = lp.sigma2(K, yds.act_Fr(K, n, z))
                sc = K.q_pow(-2 * n * (a - 2 * s))  # both crossings of F(n) past z
                a2 = ni.antipode_coeff(K, n) ** 2
                rhs = yds.scale(K, yds.act_Fr(K, n, lp.sigma2(K, z)), sc * a2)
                assert yds.vec_eq(lhs, rhs)


def test_lambda_unit_and_sign_free_cases():
    for p in (2, 3, 4):
        K = cyclotomic_field(p)
        for rp in range(1, p + 1):
            for nup in range(4):
                assert lp.lambda_closed(K, rp, nup, 1, 0) == K.one


@pytest.mark.parametrize("p", [2, 3, 4])
def test_lambda_sum_vs_ratio_and_ab_form(p):
    K = cyclotomic_field(p)
    for rp in range(1, p):
        for nup in range(4):
            for r in range(1, p + 1):
                for nu in range(4):
                    assert lp.lambda_closed(K, rp, nup, r, nu) == lp.lambda_ratio(
                        K, rp, nup, r, nu
                    )
    # coinvariant-charge form, where defined
    for a in range(2 * p):
        if (a + 1) % p == 0:
            continue
        for b in range(2 * p):
            rp, nup = a % p + 1, cl.raw_nu(a, a % p + 1, p)
            r, nu = b % p + 1, cl.raw_nu(b, b % p + 1, p)
            assert lp.lambda_ab(K, a, b) == lp.lambda_closed(K, rp, nup, r, nu)


def test_lambda_identities():
    for p in (2, 3, 4):
        K = cyclotomic_field(p)
        for rp in range(1, p):
            for nup in range(4):
                for r in range(1, p + 1):
                    for nu in range(4):
                        assert lp.lambda_closed(K, rp, nup, r, nu) == lp.lambda_closed(
                            K, p - rp, nup + 1, r, nu
                        )
                        assert lp.lambda_closed(K, rp, nup, r, nu) == lp.lambda_closed(
                            K, rp, nup + 2, r, nu
                        )
        for nup in range(4):
            for r in range(1, p + 1):
                for nu in range(4):
                    assert lp.lambda_closed(K, p, nup, r, nu) == lp.lambda_steinberg(
                        K, nup, r, nu
                    )


def test_lambda_mu_errors():
    K = cyclotomic_field(3)
    with pytest.raises(ValueError):
        lp.lambda_closed(K, 0, 0, 1, 0)
    with pytest.raises(ValueError):
        lp.mu_closed(K, 3, 0, 1, 0)  # mu undefined at r' = p
    with pytest.raises(ZeroDivisionError):
        lp.lambda_ratio(K, 3, 0, 1, 0)
    with pytest.raises(ZeroDivisionError):
        lp.lambda_ab(K, 2, 0)


@pytest.mark.parametrize("p", [2, 3])
def test_chi_scalar_on_simples(p):
    K = cyclotomic_field(p)
    for rp in range(1, p + 1):
        for nup in range(4):
            for r in range(1, p + 1):
                for nu in range(4):
                    lam = lp.chi_on_simple(K, rp, nup, r, nu)
                    assert lam == lp.lambda_closed(K, rp, nup, r, nu)


def test_chi_unit_loop_is_identity():
    for p in (2, 3):
        K = cyclotomic_field(p)
        for rp in range(1, p + 1):
            assert lp.chi_on_simple(K, rp, 0, 1, 0) == K.one


def test_chi_commutes_with_structure():
    K = cyclotomic_field(2)
    lp.chi_on_simple(K, 2, 0, 2, 1, check_commute=True)
    lp.chi_on_simple(K, 1, 1, 2, 0, check_commute=True)


@pytest.mark.parametrize("p", [2, 3])
def test_first_form_matches_second(p):
    K = cyclotomic_field(p)
    y = {one_vertex(p - 1, 0): K.one}
    for b in (0, 1, p, -1):
        assert yds.vec_eq(lp.chi_apply(K, y, b), lp.chi_apply_first_form(K, y, b))


@pytest.mark.parametrize("p", [2, 3])
def test_chi_on_p_modules(p):
    K = cyclotomic_field(p)
    grid = cl.classification_grid(p)
    for (a, b, t), d in sorted(grid.items()):
        if d.kind != "L":
            continue
        for r in range(1, p + 1):
            for nu in (0, 1):
                assert lp.verify_chi_on_P(K, a, t, b, r, nu)


def test_verify_chi_on_P_example_p2():
    K = cyclotomic_field(2)
    assert lp.verify_chi_on_P(K, 1, 0, 1, 2, 0)


@pytest.mark.parametrize("p", [2, 3])
def test_multiplicativity(p):
    for rw in range(1, p + 1):
        for nuw in (0, 1):
            for rz in range(1, p + 1):
                for nuz in (0, 1):
                    for ry in range(1, p + 1):
                        for nuy in (0, 1):
                            assert lp.verify_multiplicativity(
                                p, (rw, nuw), (rz, nuz), (ry, nuy)
                            )


def test_multiplicativity_p2_example():
    # lambda(Y; X(2)_0)^2 = value of P(1)_0 = 2X(1)_0 + 2X(1)_1 on Y
    K = cyclotomic_field(2)
    for ry in (1, 2):
        for nuy in (0, 1):
            lam = lp.lambda_closed(K, ry, nuy, 2, 0)
            rhs = 2 * lp.lambda_closed(K, ry, nuy, 1, 0) + 2 * lp.lambda_closed(
                K, ry, nuy, 1, 1
            )
            assert lam * lam == rhs


def test_dual_descriptor():
    d = cl.ModuleDescriptor("X", 2, 1)
    dd = lp.dual_descriptor(5, d)
    assert (dd.kind, dd.r, dd.nu % 4) == ("X", 2, 3)
    dp = lp.dual_descriptor(5, cl.ModuleDescriptor("P", 2, 1, (0, 2, 0)))
    assert (dp.kind, dp.r, dp.nu % 4) == ("P", 2, 1)  # -2-1 = -3 = 1 mod 4
    assert dp.labels == (-2, 0, -2)
    dv = lp.dual_descriptor(5, cl.ModuleDescriptor("V", 2, 0))
    assert (dv.kind, dv.r, dv.nu % 4) == ("V", 3, 3)
    with pytest.raises(ValueError):
        lp.dual_descriptor(5, cl.ModuleDescriptor("L", 2, 0))
