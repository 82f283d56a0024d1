"""Exact simplex: hand-checked programs and degenerate cases."""

from fractions import Fraction

import pytest

from pricedbool.simplex import simplex_max, simplex_min

F = Fraction


def test_max_small_packing():
    # max y1 + y2  s.t.  y1 <= 2, y2 <= 3, y1 + y2 <= 4
    res = simplex_max([[F(1), F(0)], [F(0), F(1)], [F(1), F(1)]],
                      [F(2), F(3), F(4)],
                      [F(1), F(1)])
    assert res.value == 4
    assert sum(res.solution) == 4


def test_max_duals_solve_the_covering_side():
    # packing dual of covering x0 >= 1, x0 + x1 >= 1: columns are the rows
    res = simplex_max([[F(1), F(1)], [F(0), F(1)]],
                      [F(1), F(1)],
                      [F(1), F(1)])
    assert res.value == 1
    # dual prices form the covering solution: x = (1, 0)
    assert res.duals == [F(1), F(0)]


def test_min_with_mixed_relations():
    # min 2a + 3b  s.t.  a + b >= 4, a - b == 1, a <= 10
    res = simplex_min([F(2), F(3)],
                      [([F(1), F(1)], ">=", F(4)),
                       ([F(1), F(-1)], "==", F(1)),
                       ([F(1), F(0)], "<=", F(10))])
    a, b = res.solution
    assert (a, b) == (F(5, 2), F(3, 2))
    assert res.value == F(19, 2)


def test_min_exactness_no_float_drift():
    res = simplex_min([F(1, 3), F(1, 7)],
                      [([F(1), F(1)], ">=", F(1, 11))])
    assert res.value == F(1, 77)


def test_min_infeasible():
    with pytest.raises(ValueError, match="infeasible"):
        simplex_min([F(1)], [([F(1)], "<=", F(1)), ([F(1)], ">=", F(2))])


def test_min_unbounded():
    with pytest.raises(ValueError, match="unbounded"):
        simplex_min([F(-1)], [([F(1)], ">=", F(0))])


def test_min_redundant_equalities():
    # the duplicated row must not trip the artificial drive-out
    res = simplex_min([F(1), F(1)],
                      [([F(1), F(1)], "==", F(2)),
                       ([F(1), F(1)], "==", F(2))])
    assert res.value == 2


def test_min_negative_rhs_normalized():
    # -a <= -3 is a >= 3 in disguise
    res = simplex_min([F(1)], [([F(-1)], "<=", F(-3))])
    assert res.value == 3


def test_degenerate_cycling_guard():
    # classic degenerate square; Bland's rule must terminate
    res = simplex_min([F(-3, 4), F(150), F(-1, 50), F(6)],
                      [([F(1, 4), F(-60), F(-1, 25), F(9)], "<=", F(0)),
                       ([F(1, 2), F(-90), F(-1, 50), F(3)], "<=", F(0)),
                       ([F(0), F(0), F(1), F(0)], "<=", F(1))])
    assert res.value == F(-1, 20)
