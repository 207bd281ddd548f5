"""Smoke tests for the python bindings: a few frozen values per operation
family plus one end-to-end suite run."""

from fractions import Fraction

import ihall


def test_quantum_numbers():
    assert ihall.quantum_integer(2) == "v + v^-1"
    assert ihall.quantum_integer(0) == "0"
    assert ihall.quantum_binomial(3, 2) == ihall.quantum_integer(3)
    # [2] at q = 4 is 2 + 1/2
    assert Fraction(ihall.specialize_quantum_binomial(2, 1, 4)) == Fraction(5, 2)


def test_census():
    assert int(ihall.count_points(2, 1)) == 3
    assert int(ihall.count_points(2, 2)) == 1
    assert int(ihall.count_points(3, 1)) == 4
    assert ihall.zeta_identity_holds(7, 8)
    assert len(ihall.cyclic_profiles(2, 2)) == 7


def test_counting():
    assert ihall.euler_form(1, 0, 1, 3) == 4
    assert int(ihall.hall_number([1, 1], [1], [1], 3)) == 4
    assert int(ihall.aut_order([1, 1], 2)) == 6
    assert int(ihall.mono_count([1], [3], 2)) == 1
    assert int(ihall.brute_hall_number([1, 1], [1], [1], 2)) == 3


def test_jordan_product():
    prod = ihall.jordan_product([1], [1], 2)
    assert prod[((1, 1), 0)] == "1/2"
    assert prod[((2,), 0)] == "1/2"
    assert prod[((), 1)] == "1"
    assert prod == ihall.brute_jordan_product([1], [1], 2)
    assert ihall.local_exp_identity_holds(2, 3)


def test_elements():
    t1 = ihall.theta_hat(1, 2)
    assert len(t1) == 3
    assert all(c == "1" for _, c in t1)
    assert ihall.h_hat(1, 2) == t1


def test_identities():
    assert ihall.line_relations_hold(-1, 1, 3)
    assert ihall.current_relation_holds(-1, 1, 3)
    assert ihall.theta_commutator_vanishes(2, 4)
    assert ihall.exp_identity_holds(2, 3)
    assert ihall.h_commutator_holds(2, 2, -1, 1)
    assert ihall.diagram_commutes()


def test_suite_run():
    rep = ihall.run_suites({"zeta", "diagram"}, q_list=[2, 3], m_max=4)
    assert rep["all_pass"]
    assert rep["failures"] == 0
    assert rep["cases"] > 0
