from itertools import product

import pytest

from mvd import (
    Measure,
    ResourceLimitError,
    TableError,
    g_param,
    gen_gk,
    gen_qn,
    gen_random,
    gen_t0,
    gen_threshold,
    gen_tk,
    gen_tkstar,
    h_step,
    nu_k,
    psi_a,
    psi_d,
    r_param,
    triangle,
    z_param,
)
from mvd.families import PhiSpec
from mvd.table import DecisionTable


# ---------------------------------------------------------------------
# Layered graph
# ---------------------------------------------------------------------


def test_graph_three_layers():
    g = gen_gk(3)
    assert g.size == 6
    assert g.child_pair(1) == (2, 3)
    assert g.child_pair(2) == (4, 5)
    assert g.child_pair(3) == (5, 6)  # adjacent nodes share the middle child
    assert all(g.child_pair(i) is None for i in (4, 5, 6))


def test_graph_single_layer():
    g = gen_gk(1)
    assert g.size == 1 and g.child_pair(1) is None


def test_graph_two_layers():
    g = gen_gk(2)
    assert g.size == 3 and g.child_pair(1) == (2, 3)


def test_graph_rejects_zero():
    with pytest.raises(TableError):
        gen_gk(0)


def test_layer_numbering():
    g = gen_gk(4)
    assert [g.layer_of(i) for i in (1, 2, 3, 4, 6, 7, 10)] == [1, 2, 2, 3, 3, 4, 4]
    assert g.last_layer == (7, 8, 9, 10)


# ---------------------------------------------------------------------
# The labeling rule
# ---------------------------------------------------------------------


def test_labeling_examples_two_layers():
    g = gen_gk(2)
    assert nu_k(g, (0, 0, 0)) == frozenset({0})
    assert nu_k(g, (1, 0, 0)) == frozenset({1})
    assert nu_k(g, (1, 1, 1)) == frozenset({2, 3})


def test_labeling_never_empty_exhaustive():
    for k in range(1, 5):
        g = gen_gk(k)
        for values in product((0, 1), repeat=g.size):
            assert nu_k(g, values), f"empty label for {values} at k={k}"


def test_labeling_rejects_wrong_length():
    with pytest.raises(TableError):
        nu_k(gen_gk(2), (0, 1))


# ---------------------------------------------------------------------
# Complete and path tables
# ---------------------------------------------------------------------


def test_tk_is_complete():
    for k in (1, 2, 3):
        table = gen_tk(k)
        m = triangle(k)
        assert table.n_cols == m
        assert table.n_rows == 2**m
        assert z_param(table)[0] == m


def test_tk_one_layer():
    table = gen_tk(1)
    assert table.rows == ((0,), (1,))
    assert table.decisions == (frozenset({0}), frozenset({1}))


def test_tk_size_guard():
    with pytest.raises(ResourceLimitError):
        gen_tk(6)


def test_tkstar_three_layers():
    star = gen_tkstar(3)
    assert star.n_rows == 4  # one row per root-to-bottom path
    assert star.n_cols == 6
    assert all(len(d) == 1 for d in star.decisions)
    assert r_param(star) == 3  # distinct endpoints of the last layer


def test_tkstar_rows_are_rows_of_tk():
    tk_rows = set(gen_tk(3).rows)
    assert set(gen_tkstar(3).rows) <= tk_rows


def test_tkstar_endpoint_labels():
    star = gen_tkstar(2)
    g = gen_gk(2)
    for row, dec in zip(star.rows, star.decisions):
        (endpoint,) = dec
        assert endpoint in g.last_layer
        assert row[endpoint - 1] == 1


# ---------------------------------------------------------------------
# Diagonal tables
# ---------------------------------------------------------------------


def test_qn_identity_shape():
    table, weights = gen_qn(2, PhiSpec.named("identity"))
    # phi(2)=2 means one diagonal block of two rows, all weights 2
    assert table.n_rows == 2 and table.n_cols == 2
    assert set(weights.values()) == {2}


def test_qn_remainder_keeps_cheap_column():
    table, weights = gen_qn(3, PhiSpec.from_values([0, 1, 2, 7]))
    # phi(3)=7=3*2+1: first column weighs 1, the rest 3
    assert table.n_cols == 4
    first = table.attrs[0]
    assert weights[first] == 1
    assert all(weights[a] == 3 for a in table.attrs[1:])


def test_qn_attribute_sets_disjoint():
    phi = PhiSpec.named("double")
    t1, _ = gen_qn(1, phi)
    t2, _ = gen_qn(2, phi)
    assert not (set(t1.attrs) & set(t2.attrs))


def test_qn_equalities_square():
    phi = PhiSpec.named("square")
    for n in (1, 2, 3):
        table, weights = gen_qn(n, phi)
        m = Measure.weighted_sum(weights)
        assert psi_a(table, m) == n
        assert psi_d(table, m) == phi(n)


def test_qn_rejects_bad_phi():
    with pytest.raises(TableError, match="below n"):
        gen_qn(2, PhiSpec.from_values([0, 1, 1]))
    with pytest.raises(TableError, match="phi\\(0\\)"):
        gen_qn(1, PhiSpec.from_values([1, 1]))


# ---------------------------------------------------------------------
# Threshold tables
# ---------------------------------------------------------------------


def test_threshold_reference():
    table = gen_threshold({2, 5})
    assert table.attrs == ("f2", "f5")
    assert table.rows == ((0, 0), (1, 0), (1, 1))


def test_threshold_monotone_structure():
    table = gen_threshold({1, 2, 3})
    assert table.n_rows == 4
    assert z_param(table)[0] <= 1
    assert g_param(table)[0] <= 2


def test_threshold_rejects_empty():
    with pytest.raises(TableError):
        gen_threshold(set())


# ---------------------------------------------------------------------
# Random tables
# ---------------------------------------------------------------------


def test_random_reproducible():
    a = gen_random(99, cols=4, rows=9)
    b = gen_random(99, cols=4, rows=9)
    assert a == b
    assert gen_random(100, cols=4, rows=9) != a


def test_random_respects_shape():
    table = gen_random(5, cols=3, rows=8, k=3, decision_universe=(1, 2))
    assert table.n_cols == 3 and table.n_rows == 8
    assert all(d <= frozenset({1, 2}) for d in table.decisions)


# ---------------------------------------------------------------------
# r and the step function
# ---------------------------------------------------------------------


def test_r_param_cases(t0):
    assert r_param(t0) == 6
    assert r_param(DecisionTable.build(2, ("f0",), [((1,), {3})])) == 1
    assert r_param(DecisionTable.empty()) == 0


def test_r_param_degeneracy_link():
    # singleton-labeled tables have a common decision iff one label repeats everywhere
    star = gen_tkstar(2)
    assert r_param(star) == 2


def test_h_step_cases():
    assert h_step({1, 3, 5}, 0) == 0
    assert h_step({1, 3, 5}, 4) == 3
    assert h_step({1, 3, 5}, 5) == 5
    assert h_step({1, 3, 5}, 9) == 5  # beyond the known prefix: largest known value
    with pytest.raises(TableError):
        h_step(set(), 1)


def test_t0_generator_matches_fixture(t0):
    assert gen_t0() == t0
