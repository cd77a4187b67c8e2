import pytest

from nichols_fusion.cyclo import cyclotomic_field
from nichols_fusion import ydspace as yds
from nichols_fusion import fusion as fu
from nichols_fusion.ydspace import one_vertex, two_vertex


def test_fusion_map_examples():
    K = cyclotomic_field(3)
    for a in range(3):
        for b in range(3):
            assert fu.fusion_map_basis(K, one_vertex(a, 0), one_vertex(b, 0)) == {
                two_vertex(a, b, 0, 0): K.one
            }
            got = fu.fusion_map_basis(K, one_vertex(a, 0), one_vertex(b, 1))
            assert got == {
                two_vertex(a, b, 0, 1): K.one,
                two_vertex(a, b, 1, 0): K.q_pow(-a),
            }


def test_fusion_map_drops_out_of_range_with_zero_coefficient():
    K = cyclotomic_field(2)
    # s+i = 2 is out of range; the accompanying binomial [2 over 1] vanishes
    got = fu.fusion_map_basis(K, one_vertex(0, 1), one_vertex(0, 1))
    assert set(got) == {two_vertex(0, 0, 1, 1)}


def test_fusion_map_rejects_two_vertex_input():
    K = cyclotomic_field(2)
    with pytest.raises(ValueError):
        fu.fusion_map_basis(K, two_vertex(0, 0, 0, 0), one_vertex(0, 0))


def test_fuse_unit():
    for p in (2, 3, 4):
        for r in range(1, p + 1):
            for nu in range(4):
                res = fu.fuse_simples(p, 1, 0, r, nu)
                assert [(d.kind, d.r, d.nu) for d in res.summands] == [("X", r, nu)]


def test_fuse_examples():
    res = fu.fuse_simples(2, 2, 0, 2, 0)
    assert [(d.kind, d.r, d.nu) for d in res.summands] == [("P", 1, 0)]
    assert res.total_dimension() == 4
    res = fu.fuse_simples(3, 2, 0, 2, 0)
    assert [(d.kind, d.r, d.nu) for d in res.summands] == [("X", 1, 0), ("X", 3, 0)]
    res = fu.fuse_simples(3, 2, 0, 3, 0)
    assert [(d.kind, d.r, d.nu) for d in res.summands] == [("P", 2, 0)]


def test_fuse_rejects_bad_range():
    with pytest.raises(ValueError):
        fu.fuse_closed(3, 0, 0, 1, 0)
    with pytest.raises(ValueError):
        fu.fuse_closed(3, 1, 0, 4, 0)


@pytest.mark.parametrize("p", [2, 3, 4])
def test_fuse_full_grid(p):
    for r1 in range(1, p + 1):
        for nu1 in range(4):
            for r2 in range(1, p + 1):
                for nu2 in range(4):
                    res = fu.fuse_simples(p, r1, nu1, r2, nu2)
                    assert res.total_dimension() == r1 * r2
                    swapped = fu.fuse_simples(p, r2, nu2, r1, nu1)
                    assert res.summands == swapped.summands
                    for d in res.summands:
                        assert d.nu == (nu1 + nu2) % 4


def test_dimension_conservation_up_to_p6():
    for p in (5, 6):
        for r1 in range(1, p + 1):
            for nu1 in range(4):
                for r2 in range(1, p + 1):
                    for nu2 in range(4):
                        res = fu.fuse_simples(p, r1, nu1, r2, nu2)
                        assert res.total_dimension() == r1 * r2


def test_five_case_table_matches_classifier():
    from nichols_fusion import classify as cl

    for p in (2, 3, 4, 5, 6):
        for a in range(p):
            for b in range(p):
                for u in range(min(a, b) + 1):
                    d = cl.classify_coinvariant(p, a, b, u)
                    if a + b <= p - 1 or (a + b >= p and u >= a + b - p + 2):
                        want = "X" if (a + b - 2 * u) % p + 1 < p else "S"
                    elif a + b - 2 * u - p >= 0:
                        want = "L"
                    elif a + b - 2 * u - p == -1:
                        want = "S"
                    else:
                        want = "B"
                    assert d.kind == want, (p, a, b, u, d)


def test_steinberg_square_p3():
    res = fu.fuse_simples(3, 3, 0, 3, 0)
    assert [(d.kind, d.r, d.nu) for d in res.summands] == [("P", 1, 0), ("X", 3, 0)]
    assert res.total_dimension() == 9


@pytest.mark.parametrize("p", [2, 3])
def test_monodromy_closed_form(p):
    K = cyclotomic_field(p)
    for a in range(2 * p):
        for b in range(2 * p):
            for s in range(p):
                for t in range(p):
                    assert yds.vec_eq(
                        fu.fused_monodromy(K, a, b, s, t),
                        fu.monodromy_closed_form(K, a, b, s, t),
                    )


def test_monodromy_display_full_does_not_match():
    # the literal triple-sum reading of the published display disagrees; the
    # verified identity is its i = n slice (see monodromy_closed_form)
    K = cyclotomic_field(2)
    mismatch = 0
    for a in range(4):
        for b in range(4):
            for s in range(2):
                for t in range(2):
                    if not yds.vec_eq(
                        fu.fused_monodromy(K, a, b, s, t),
                        fu.monodromy_display_full(K, a, b, s, t),
                    ):
                        mismatch += 1
    assert mismatch > 0
