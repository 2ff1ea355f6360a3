"""Optimal deterministic and nondeterministic decision trees.

A deterministic tree asks one attribute at a time and must route every
row to a terminal carrying a decision acceptable for everything that
reaches it.  A nondeterministic tree may fan out from the root: it is a
bundle of certificates, one per group of rows.  The gap between the two
optima is the central quantity here: for the reference table the best
deterministic tree asks 2 questions in the worst case, while one
question certifies any single row.
"""

from mvd import (
    Assignment,
    Measure,
    eval_tree,
    export_tree,
    gen_t0,
    solve_det,
    solve_nondet,
    tree_from_cover,
    validate_tree,
)


def main():
    t0 = gen_t0()
    depth = Measure.depth()

    det = solve_det(t0, depth)
    print("optimal deterministic cost:", det.value)
    print(export_tree(det.tree, "dot"))
    print("validates deterministically:", validate_tree(det.tree, t0, "deterministic") == [])
    print()

    nondet = solve_nondet(t0, depth)
    print("optimal nondeterministic cost:", nondet.value)
    print(export_tree(nondet.tree, "dot"))
    print("validates nondeterministically:",
          validate_tree(nondet.tree, t0, "nondeterministic") == [])
    print()

    # The nondeterministic witness is exactly a cover: the three words
    # below each pin a common decision and jointly reach all six rows.
    words = [
        Assignment.of([("f4", 1)]),   # rows with f4=1 all accept 1
        Assignment.of([("f2", 0)]),   # rows with f2=0 all accept 2
        Assignment.of([("f3", 0)]),   # rows with f3=0 all accept 3
    ]
    parallel = tree_from_cover(t0, words, "parallel", depth)
    print("parallel tree from the cover, cost:", eval_tree(depth, parallel))

    # The same cover also yields a deterministic tree that confirms the
    # words one by one; its cost is at most the sum of the word costs.
    sequential = tree_from_cover(t0, words, "sequential", depth)
    print("sequential tree from the cover, cost:", eval_tree(depth, sequential))
    print("sequential tree validates:", validate_tree(sequential, t0, "deterministic") == [])
    print()

    # Weighted measures change which questions are worth asking: make f2
    # expensive and the solver avoids it entirely.
    weighted = Measure.weighted_sum({"f2": 4, "f4": 1, "f3": 2})
    wdet = solve_det(t0, weighted)
    print("weighted optimum:", wdet.value)
    print("attributes used:", sorted(wdet.tree.attrs))


if __name__ == "__main__":
    main()
