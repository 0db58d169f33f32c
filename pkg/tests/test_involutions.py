from __future__ import annotations

import pytest

from csfpos import involutions as inv
from csfpos.dyck import UnitIntervalPoset, enumerate_dyck_paths, is_theorem41_class
from csfpos.harness import CLASS_MAP_MIN_N, levels
from csfpos.ptableaux import PTableau, enumerate_ptableaux, inversions, is_valid_ptableau

STAIR6 = UnitIntervalPoset.from_dyck((2, 3, 4, 5, 6))
STAIR5 = UnitIntervalPoset.from_dyck((2, 3, 4, 5))


def bounce3(lo, hi):
    for n in range(lo, hi + 1):
        for path in enumerate_dyck_paths(n, bounce_filter=3):
            yield UnitIntervalPoset(path)


def class_posets(lo, hi):
    for P in bounce3(lo, hi):
        if is_theorem41_class(P.path):
            yield P


def test_shapes():
    assert inv.alpha_shapes(7, 1) == ((3, 2, 1, 1), ((3, 1, 1, 1, 1), (3, 3, 1)))
    assert inv.f_shapes(7, 1) == ((3, 3, 1), (3, 2, 1, 1))
    assert inv.g_shapes(6, 0) == ((3, 2, 1), (2, 2, 1, 1))
    assert inv.phi_shapes(6, 0) == ((2, 2, 1, 1), (2, 1, 1, 1, 1))
    assert inv.psi_shapes(6) == ((3, 2, 1), (2, 2, 2))
    assert inv.sigma1_shapes(6) == ((2, 2, 2), (2, 2, 1, 1))
    assert inv.sigma2_shapes(5) == ((3, 1, 1), (2, 2, 1))
    assert inv.sigma1_shapes(5)[0] is None


def test_maps_check_inputs():
    T = PTableau(((1, 4, 6), (3, 5), (2,)), STAIR6)
    with pytest.raises(ValueError):
        inv.map_f(T, STAIR6, 0)
    with pytest.raises(ValueError):
        inv.map_g(T, UnitIntervalPoset.from_dyck((6, 6, 6, 6, 6)), 0)


def test_unrepaired_g_collision():
    # two tableaux whose base cases send them to the same place
    T1 = PTableau(((1, 4, 6), (3, 5), (2,)), STAIR6)
    T2 = PTableau(((1, 3, 6), (2, 5), (4,)), STAIR6)
    assert is_valid_ptableau(T1, STAIR6) and is_valid_ptableau(T2, STAIR6)
    assert inv._g_base_case(T1, STAIR6, 0) == ["2a"]
    assert inv._g_base_case(T2, STAIR6, 0) == ["2c"]
    clash = ((1, 6), (3, 5), (2,), (4,))
    assert inv._g_image(T1, STAIR6, 0, "2a").rows == clash
    assert inv._g_image(T2, STAIR6, 0, "2c").rows == clash


def test_repaired_g_separates_collision():
    T1 = PTableau(((1, 4, 6), (3, 5), (2,)), STAIR6)
    T2 = PTableau(((1, 3, 6), (2, 5), (4,)), STAIR6)
    r1, r2 = inv.map_g(T1, STAIR6, 0), inv.map_g(T2, STAIR6, 0)
    assert (r1.case, r2.case) == ("2a", "2d")
    assert r2.tableau.rows == ((3, 5), (2, 6), (1,), (4,))
    assert inversions(r2.tableau, STAIR6) == inversions(T2, STAIR6)
    assert inv.g_preimages(r2.tableau, STAIR6, 0) == [T2]


def test_tableau_outside_image_needs_base_relation():
    U = PTableau(((2, 4), (1, 5), (3,)), STAIR5)
    assert is_valid_ptableau(U, STAIR5)
    domain = enumerate_ptableaux(STAIR5, inv.g_shapes(5, 0)[0])
    assert all(inv.map_g(T, STAIR5, 0).tableau != U for T in domain)
    assert inv.membership_B(U, STAIR5, 0)
    assert inv.g_preimages(U, STAIR5, 0) == []


@pytest.mark.parametrize("n", range(3, 8))
def test_g_dispatch_is_a_partition(n):
    for P in bounce3(n, n):
        for l in levels(P):
            shape = inv.g_shapes(n, l)[0]
            if shape is None:
                continue
            for T in enumerate_ptableaux(P, shape):
                fired = inv.g_case(T, P, l)
                assert len(fired) == 1 and fired[0] in inv.G_CASES, (P, l, T, fired)


@pytest.mark.parametrize("n", range(3, 8))
def test_g_preimages_invert_map(n):
    for P in bounce3(n, n):
        for l in levels(P):
            dom, cod = inv.g_shapes(n, l)
            if dom is None or cod is None:
                continue
            fibers = {}
            for T in enumerate_ptableaux(P, dom):
                fibers.setdefault(inv.map_g(T, P, l).tableau, []).append(T)
            for U in enumerate_ptableaux(P, cod):
                assert sorted(inv.g_preimages(U, P, l), key=lambda t: t.rows) == sorted(
                    fibers.get(U, []), key=lambda t: t.rows
                ), (P, l, U)


@pytest.mark.parametrize("n", range(3, 8))
def test_phi_cases_and_targets(n):
    seen = set()
    for P in bounce3(n, n):
        for l in levels(P):
            dom = inv.phi_shapes(n, l)[0]
            if dom is None:
                continue
            for T in enumerate_ptableaux(P, dom):
                if not inv.membership_B(T, P, l):
                    continue
                res = inv.map_phi(T, P, l)
                seen.add(res.case)
                assert inv.membership_A(res.tableau, P, l), (P, l, T)
    if n >= 6:
        assert seen == {"adjusted", "swap", "insert"}


def test_phi_rejects_outside_b():
    for P in bounce3(5, 6):
        for l in levels(P):
            dom = inv.phi_shapes(P.n, l)[0]
            for T in enumerate_ptableaux(P, dom) if dom else []:
                if not inv.membership_B(T, P, l):
                    with pytest.raises(ValueError):
                        inv.map_phi(T, P, l)
                    return
    pytest.fail("no tableau outside B found")


@pytest.mark.parametrize("n", range(6, 9))
def test_psi_dispatch_is_a_partition(n):
    for P in class_posets(n, n):
        for T in enumerate_ptableaux(P, inv.psi_shapes(n)[0]):
            assert len(inv.psi_case(T, P)) == 1, (P, T)


@pytest.mark.parametrize("n", range(4, 9))
def test_sigma2_dispatch_is_a_partition(n):
    for P in class_posets(n, n):
        for T in enumerate_ptableaux(P, inv.sigma2_shapes(n)[0]):
            assert len(inv.sigma2_case(T, P)) == 1, (P, T)


@pytest.mark.parametrize("n", range(3, 8))
def test_alpha_promotion_row_unique(n):
    for P in bounce3(n, n):
        for l in levels(P):
            dom = inv.alpha_shapes(n, l)[0]
            for T in enumerate_ptableaux(P, dom) if dom else []:
                assert len(inv.alpha_chain_indices(T, P, l)) <= 1


def test_class_maps_reject_other_posets():
    P = UnitIntervalPoset.from_dyck((2, 3, 4, 6, 6))
    T = enumerate_ptableaux(P, inv.sigma1_shapes(6)[0])[0]
    with pytest.raises(ValueError):
        inv.map_sigma1(T, P)


def test_class_minimum_sizes_match_codomains():
    shapes = {"psi": inv.psi_shapes, "sigma1": inv.sigma1_shapes, "sigma2": inv.sigma2_shapes}
    for name, lo in CLASS_MAP_MIN_N.items():
        assert shapes[name](lo)[1] is not None
        assert shapes[name](lo - 1)[1] is None


def apply(name, d, rows, *args):
    P = UnitIntervalPoset.from_dyck(d)
    T = PTableau(rows, P)
    res = inv.MAPS[name](T, P, *args)
    assert is_valid_ptableau(res.tableau, P)
    assert inversions(res.tableau, P) == inversions(T, P)
    return res


def test_worked_examples():
    res = apply("alpha", (2, 3, 4, 5), ((1, 3), (2,), (4,), (5,)), 0)
    assert res.tableau.rows == ((1,), (3,), (2,), (4,), (5,)) and res.case == "ii"
    res = apply("f", (1, 2), ((1, 2, 3),), 0)
    assert res.tableau.rows == ((1, 3), (2,))
    res = apply("psi", (2, 4, 5, 5, 6), ((1, 3, 6), (2, 5), (4,)))
    assert res.tableau.rows == ((1, 3), (4, 6), (2, 5)) and res.case == "2a"
    res = apply("sigma1", (2, 4, 5, 5, 6), ((1, 3), (2, 5), (4, 6)))
    assert res.tableau.rows == ((1, 3), (2, 5), (4,), (6,)) and res.case == "bottom"


def test_alpha_promotion_on_example_path():
    P = UnitIntervalPoset.from_dyck((4, 6, 6, 6, 6, 7, 8, 8), 8)
    promoted = [inv.map_alpha(T, P, 0) for T in enumerate_ptableaux(P, inv.alpha_shapes(8, 0)[0])]
    promoted = [r for r in promoted if r.case == "i"]
    assert promoted and all(r.tableau.shape == (3, 1, 1, 1, 1, 1) for r in promoted)
    # no two disjoint 3-chains exist here, so promotion at l = 1 is impossible
    assert all(inv.map_alpha(T, P, 1).case == "ii" for T in enumerate_ptableaux(P, inv.alpha_shapes(8, 1)[0]))


def test_sigma2_case_1a_instance():
    P = UnitIntervalPoset.from_dyck((2, 3, 4, 5))
    assert is_theorem41_class(P.path)
    cases = {inv.map_sigma2(T, P).case for T in enumerate_ptableaux(P, inv.sigma2_shapes(5)[0])}
    assert "1a" in cases
