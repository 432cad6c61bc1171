import pytest

from solweights.groups import FiniteGroup, center, conjugacy_classes
from solweights.solmodel import build_sol_model

from conftest import failing


# -- model construction ----------------------------------------------------------


def test_model_orders_l0(sol0):
    assert sol0.sylow.order == 1024
    assert sol0.r0.order == 256
    assert (sol0.z_group.order, sol0.u_group.order,
            sol0.e_group.order, sol0.a_group.order) == (2, 4, 8, 16)


def test_model_orders_l1(sol1):
    assert sol1.sylow.order == 8192
    assert sol1.r0.order == 2048
    assert sol1.torus.order == 512


def test_r0_order_formula(sol0, sol1):
    for model in (sol0, sol1):
        level = model.level
        assert model.r0.order == (2 ** (level + 3)) ** 3 // 2


def test_k_order_closed_form(sol0, sol1):
    assert sol0.k_order == 10_368_000
    assert sol1.k_order == 6 * 15600 ** 3


def test_central_sign_identification(sol0):
    act = sol0.action
    mat = sol0.mat_action
    minus = mat.mul(sol0.y, sol0.y)
    left = act.make(minus, minus, mat.identity)
    right = act.make(mat.identity, mat.identity, minus)
    assert left == right == sol0.z


def test_frame_relations(sol0, sol1):
    for model in (sol0, sol1):
        mat = model.mat_action
        n = 2 ** (model.level + 2)
        xp = mat.identity
        for _ in range(n):
            xp = mat.mul(xp, model.x)
        assert xp == mat.identity
        assert mat.mul(model.c, model.c) == mat.inv(model.x)


def test_d_is_involution_commuting_with_tau(sol0):
    act = sol0.action
    assert act.mul(sol0.d, sol0.d) == act.identity
    assert act.mul(sol0.d, sol0.tau) == act.mul(sol0.tau, sol0.d)
    assert sol0.tau_prime == act.mul(sol0.d, sol0.tau)


def test_complement_four_group(sol0):
    act = sol0.action
    four = FiniteGroup.generate(act, [sol0.d, sol0.tau], cap=5)
    assert four.order == 4
    assert all(e == act.identity for e in four.elements if e in sol0.r0.index)
    assert four.order * sol0.r0.order == sol0.sylow.order


def test_center_of_sylow(sol0, sol1):
    for model in (sol0, sol1):
        assert set(center(model.sylow).elements) == set(model.z_group.elements)


# -- report-backed checks -----------------------------------------------------------


def test_torus_report_l0(torus_report_l0):
    assert failing(torus_report_l0) == []


def test_torus_report_l1(torus_report_l1):
    assert failing(torus_report_l1) == []
    assert torus_report_l1["skipped"], "uniqueness searches must be flagged at l=1"


def test_sectional_report(sectional_report):
    assert failing(sectional_report) == []
    assert (sectional_report["lower"], sectional_report["upper"]) == (6, 6)


@pytest.mark.parametrize("level", [1, 2, 3])
def test_quaternion_reports(quaternion_reports, level):
    assert failing(quaternion_reports[level]) == []


def test_inn_aut_orders_l0(radicals_report_l0):
    checks = {c["check"]: c for c in radicals_report_l0["checks"]}
    assert checks["|Aut_K(Q)| = 324 * 64"]["pass"]
    assert checks["|C_N(Q)| = |Z(Q)| = 4"]["pass"]
