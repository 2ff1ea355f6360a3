import pytest

from mvd import (
    Assignment,
    CoverError,
    Limits,
    Measure,
    ResourceLimitError,
    UnboundedMeasureError,
    certificate_cost,
    complete_paths,
    eval_tree,
    eval_word,
    gen_random,
    gen_tk,
    m_param,
    solve_det,
    solve_nondet,
    tree_from_cover,
    validate_tree,
)
from mvd.table import DecisionTable

from oracles import brute_force_cost, brute_force_depth, brute_force_nondet

WEIGHTED = Measure.weighted_sum({"f2": 4, "f4": 1, "f3": 2})


def single_column_table():
    return DecisionTable.build(2, ("f1",), [((0,), {0}), ((1,), {1})])


# ---------------------------------------------------------------------
# solve_det
# ---------------------------------------------------------------------


def test_det_reference_value(t0, depth):
    result = solve_det(t0, depth)
    assert result.value == 2
    assert eval_tree(depth, result.tree) == 2
    assert validate_tree(result.tree, t0, "deterministic") == []


def test_det_degenerate_is_zero(depth):
    table = DecisionTable.build(2, ("f0", "f1"), [((0, 0), {5}), ((1, 1), {5, 6})])
    result = solve_det(table, depth)
    assert result.value == 0
    assert eval_tree(depth, result.tree) == 0
    assert validate_tree(result.tree, table, "deterministic") == []


def test_det_single_column_matches_brute_force(depth):
    table = single_column_table()
    assert solve_det(table, depth).value == 1 == brute_force_depth(table)


def test_det_empty_table(depth):
    result = solve_det(DecisionTable.empty(), depth)
    assert result.value == 0 and result.tree is None


def test_det_rejects_unbounded_measure(t0):
    with pytest.raises(UnboundedMeasureError):
        solve_det(t0, Measure.weighted_max({"f2": 1, "f4": 1, "f3": 1}))


def test_det_size_limit_names_cap(t0, depth):
    with pytest.raises(ResourceLimitError, match="max_cols"):
        solve_det(t0, depth, Limits(max_cols=2))


def test_det_weighted_reference(t0):
    # testing f3 first settles the f3=0 half outright (cost 2) and the
    # f3=1 half with the cheap f4 (cost 3); the worst row certificate
    # already costs 3, so 3 is optimal
    result = solve_det(t0, WEIGHTED)
    assert eval_tree(WEIGHTED, result.tree) == result.value
    assert validate_tree(result.tree, t0, "deterministic") == []
    assert result.value == 3


def test_det_stats_populated(t0, depth):
    stats = solve_det(t0, depth).stats
    assert stats.explored >= 1 and stats.seconds >= 0.0


def test_det_memo_cap(t0, depth):
    with pytest.raises(ResourceLimitError, match="max_memo"):
        solve_det(t0, depth, Limits(max_memo=1))


def test_det_weighted_matches_structure_oracle():
    weight_sets = ({"f0": 3, "f1": 1, "f2": 2}, {"f0": 1, "f1": 5, "f2": 1})
    for seed in range(12):
        table = gen_random(seed, cols=3, rows=4 + seed % 5)
        for weights in weight_sets:
            m = Measure.weighted_sum(weights)
            assert solve_det(table, m).value == brute_force_cost(table, m)


def test_ternary_tables_match_oracles(depth):
    for seed in range(15):
        table = gen_random(seed, cols=2, rows=3 + seed % 7, k=3)
        det = solve_det(table, depth)
        nondet = solve_nondet(table, depth)
        assert det.value == brute_force_depth(table)
        assert nondet.value == brute_force_nondet(table, depth)
        assert validate_tree(det.tree, table, "deterministic") == []
        assert validate_tree(nondet.tree, table, "nondeterministic") == []


# ---------------------------------------------------------------------
# certificate costs
# ---------------------------------------------------------------------


def test_certificate_reference_row(t0, depth):
    assert certificate_cost(t0, (1, 1, 1), depth) == 1  # (f4,1) pins decision 1


def test_certificate_non_row_tuple(t0, depth):
    assert certificate_cost(t0, (0, 1, 0), depth) == 1  # (f2,0) pins decision 2


def test_certificate_degenerate_table(depth):
    table = DecisionTable.build(2, ("f0",), [((0,), {1}), ((1,), {1, 2})])
    assert certificate_cost(table, (0,), depth) == 0
    assert certificate_cost(table, (1,), depth) == 0


def test_certificate_weighted(t0):
    # the cheap column f4 certifies row (1,1,1) at its weight
    assert certificate_cost(t0, (1, 1, 1), WEIGHTED) == 1
    # row (0,0,1) needs (f4,0),(f3,1) at cost 3: every single letter
    # leaves rows without a common decision, and (f2,0) would cost 4
    assert certificate_cost(t0, (0, 0, 1), WEIGHTED) == 3


def test_m_param_reference(t0, depth):
    assert m_param(t0, depth, "all") == 2
    assert m_param(t0, depth, "rows") == 1


def test_m_param_degenerate(depth):
    table = DecisionTable.build(2, ("f0",), [((0,), {3})])
    assert m_param(table, depth, "all") == 0


def test_m_param_tuple_cap(t0, depth):
    with pytest.raises(ResourceLimitError, match="max_tuples"):
        m_param(t0, depth, "all", Limits(max_tuples=4))


# ---------------------------------------------------------------------
# solve_nondet
# ---------------------------------------------------------------------


def test_nondet_reference_value(t0, depth):
    result = solve_nondet(t0, depth)
    assert result.value == 1
    assert eval_tree(depth, result.tree) == 1
    assert validate_tree(result.tree, t0, "nondeterministic") == []


def test_nondet_degenerate_tree(depth):
    table = DecisionTable.build(2, ("f0",), [((0,), {4}), ((1,), {4})])
    result = solve_nondet(table, depth)
    assert result.value == 0
    assert eval_tree(depth, result.tree) == 0


def test_nondet_layered_family_bound(depth):
    assert solve_nondet(gen_tk(2), depth).value <= 3


def test_nondet_equals_row_maximum(t0, depth):
    assert solve_nondet(t0, depth).value == m_param(t0, depth, "rows")


def test_nondet_matches_brute_force_on_random_tables(depth):
    for seed in range(25):
        table = gen_random(seed, cols=2 + seed % 3, rows=min(2 + seed % 9, 2 ** (2 + seed % 3)))
        assert solve_nondet(table, depth).value == brute_force_nondet(table, depth)


def test_nondet_weighted_matches_brute_force():
    weights = {"f0": 3, "f1": 1, "f2": 2}
    m = Measure.weighted_sum(weights)
    for seed in range(12):
        table = gen_random(seed, cols=3, rows=4 + seed % 5)
        assert solve_nondet(table, m).value == brute_force_nondet(table, m)


# ---------------------------------------------------------------------
# solver-level orderings on random tables
# ---------------------------------------------------------------------


def test_det_dominates_nondet_and_width(depth):
    for seed in range(30):
        table = gen_random(seed, cols=2 + seed % 4, rows=min(3 + seed % 14, 2 ** (2 + seed % 4)))
        det = solve_det(table, depth)
        nondet = solve_nondet(table, depth)
        assert nondet.value <= det.value <= table.n_cols
        assert validate_tree(det.tree, table, "deterministic") == []
        assert validate_tree(nondet.tree, table, "nondeterministic") == []


# ---------------------------------------------------------------------
# trees from covers
# ---------------------------------------------------------------------


def cover_words():
    return [
        Assignment.of([("f4", 1)]),
        Assignment.of([("f2", 0)]),
        Assignment.of([("f3", 0)]),
    ]


def test_parallel_cover_tree(t0, depth):
    tree = tree_from_cover(t0, cover_words(), "parallel", depth)
    assert validate_tree(tree, t0, "nondeterministic") == []
    assert eval_tree(depth, tree) == 1


def test_sequential_cover_tree(t0, depth):
    tree = tree_from_cover(t0, cover_words(), "sequential", depth)
    assert validate_tree(tree, t0, "deterministic") == []
    assert eval_tree(depth, tree) <= sum(eval_word(depth, w) for w in cover_words())


def test_empty_word_cover_on_degenerate_table(depth):
    table = DecisionTable.build(2, ("f0",), [((0,), {1}), ((1,), {1})])
    tree = tree_from_cover(table, [Assignment()], "parallel", depth)
    assert eval_tree(depth, tree) == 0
    assert validate_tree(tree, table, "nondeterministic") == []


def test_non_cover_lists_uncovered_rows(t0, depth):
    with pytest.raises(CoverError, match="cover"):
        tree_from_cover(t0, [Assignment.of([("f4", 1)])], "parallel", depth)


def test_non_degenerate_cover_word_is_named(t0, depth):
    with pytest.raises(CoverError, match="f2=1"):
        tree_from_cover(t0, [Assignment.of([("f2", 1)]), Assignment.of([("f2", 0)])], "parallel", depth)


def test_sequential_cover_random_tables(depth):
    # certificates of the rows always form a cover; the sequential tree
    # must validate and respect the summed budget
    for seed in range(10):
        table = gen_random(seed, cols=3, rows=5 + seed % 4)
        result = solve_nondet(table, depth)
        words = []
        for path in complete_paths(result.tree):
            if path.word not in words:
                words.append(path.word)
        tree = tree_from_cover(table, words, "sequential", depth)
        assert validate_tree(tree, table, "deterministic") == []
        assert eval_tree(depth, tree) <= sum(eval_word(depth, w) for w in words)
