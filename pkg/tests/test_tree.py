import pytest

from mvd import (
    Assignment,
    DecisionTree,
    Inner,
    Measure,
    Terminal,
    TreeError,
    complete_paths,
    eval_tree,
    export_tree,
    import_tree,
    solve_det,
    validate_tree,
)
from mvd.table import DecisionTable


def three_branch_tree():
    """One branch per single-letter certificate of the reference table."""
    return DecisionTree(
        (
            Inner("f4", ((1, Terminal(1)),)),
            Inner("f2", ((0, Terminal(2)),)),
            Inner("f3", ((0, Terminal(3)),)),
        )
    )


def test_tree_needs_a_child():
    with pytest.raises(TreeError):
        DecisionTree(())


def test_root_to_terminal_path_is_empty_word():
    paths = complete_paths(DecisionTree.leaf(5))
    assert len(paths) == 1
    assert paths[0].word == Assignment() and paths[0].decision == 5


def test_three_branch_paths():
    paths = complete_paths(three_branch_tree())
    assert [len(p.word) for p in paths] == [1, 1, 1]
    assert [p.decision for p in paths] == [1, 2, 3]


def test_chain_path():
    tree = DecisionTree.chain([("f2", 1), ("f3", 0)], 3)
    paths = complete_paths(tree)
    assert paths == [paths[0]]
    assert paths[0].word == Assignment.of([("f2", 1), ("f3", 0)])
    assert paths[0].decision == 3


def test_repeated_attribute_on_path():
    same = DecisionTree((Inner("f2", ((1, Inner("f2", ((1, Terminal(0)),))),)),))
    paths = complete_paths(same)
    assert paths[0].word == Assignment.of([("f2", 1)]) and not paths[0].contradictory
    clash = DecisionTree((Inner("f2", ((1, Inner("f2", ((0, Terminal(0)),))),)),))
    assert complete_paths(clash)[0].contradictory


def test_solver_tree_validates_deterministically(t0, depth):
    result = solve_det(t0, depth)
    assert validate_tree(result.tree, t0, "deterministic") == []
    assert validate_tree(result.tree, t0, "nondeterministic") == []


def test_root_out_degree_violation(t0):
    violations = validate_tree(three_branch_tree(), t0, "deterministic")
    assert any("root out-degree" in v for v in violations)


def test_three_branch_tree_is_valid_nondeterministic(t0):
    assert validate_tree(three_branch_tree(), t0, "nondeterministic") == []


def test_uncovered_row_reported(t0):
    partial = DecisionTree((Inner("f4", ((1, Terminal(1)),)),))
    violations = validate_tree(partial, t0, "nondeterministic")
    assert any("not covered" in v for v in violations)


def test_wrong_terminal_decision_reported(t0):
    wrong = DecisionTree((Inner("f4", ((1, Terminal(9)),)),))
    violations = validate_tree(wrong, t0, "nondeterministic")
    assert any("decision 9" in v for v in violations)


def test_unknown_attribute_reported(t0):
    foreign = DecisionTree((Inner("f9", ((1, Terminal(0)),)),))
    violations = validate_tree(foreign, t0, "nondeterministic")
    assert any("f9" in v for v in violations)


def test_validation_rejects_empty_table():
    with pytest.raises(TreeError, match="empty table"):
        validate_tree(DecisionTree.leaf(0), DecisionTable.empty(), "deterministic")


def test_validation_collects_all_violations(t0):
    # two bad terminals plus an uncovered remainder: nothing aborts early
    bad = DecisionTree(
        (Inner("f4", ((1, Terminal(9)),)), Inner("f2", ((0, Terminal(8)),)))
    )
    violations = validate_tree(bad, t0, "nondeterministic")
    assert len([v for v in violations if "decision" in v]) == 2
    assert any("not covered" in v for v in violations)


def test_eval_tree_matches_paths(t0, depth):
    assert eval_tree(depth, DecisionTree.leaf(0)) == 0
    assert eval_tree(depth, three_branch_tree()) == 1
    assert eval_tree(depth, solve_det(t0, depth).tree) == 2
    weighted = Measure.weighted_sum({"f2": 4, "f4": 1, "f3": 2})
    assert eval_tree(weighted, three_branch_tree()) == 4


def test_dot_export_smoke():
    text = export_tree(DecisionTree.leaf(0), "dot")
    assert text.count("->") == 1
    assert "shape=point" in text and 'label="0"' in text


def test_dot_inner_edges_carry_values(t0, depth):
    text = export_tree(solve_det(t0, depth).tree, "dot")
    assert 'label="f2"' in text
    assert '[label="0"]' in text and '[label="1"]' in text


def test_dot_output_is_stable(t0, depth):
    tree = solve_det(t0, depth).tree
    assert export_tree(tree, "dot") == export_tree(tree, "dot")


def test_structured_round_trip(t0, depth):
    for tree in (DecisionTree.leaf(3), three_branch_tree(), solve_det(t0, depth).tree):
        assert import_tree(export_tree(tree, "structured")) == tree
