"""Tables with many-valued decisions and the three closure operations.

A decision table assigns every row (a tuple of attribute values) a
nonempty set of acceptable decisions.  Three operations generate the
closure of a table: restricting rows by an assignment, removing columns
(keeping the first row of every group that collapses), and rewriting
the decision sets.  This walkthrough builds the six-row reference table
and pushes it through each operation.
"""

from mvd import (
    Assignment,
    DecisionMap,
    change_decisions,
    closure_sample,
    common_decisions,
    gen_t0,
    is_degenerate,
    parse_table,
    remove_columns,
    serialize_table,
    subtable,
)


def show(table, title):
    print(f"--- {title} ---")
    print(serialize_table(table), end="")
    print()


def main():
    t0 = gen_t0()
    show(t0, "reference table: 6 rows over f2, f4, f3")

    # Decisions 1..3 each appear in some rows but none is common to all,
    # so no single decision settles the whole table.
    print("common decisions:", set(common_decisions(t0)) or "{}")
    print("degenerate:", is_degenerate(t0))
    print()

    # Restriction keeps the rows matching an assignment.  Fixing f4=1
    # keeps three rows, and every one of them accepts decision 1.
    sub = subtable(t0, Assignment.of([("f4", 1)]))
    show(sub, "restriction by f4=1")
    print("common decisions now:", set(common_decisions(sub)))
    print("degenerate:", is_degenerate(sub))
    print()

    # A consistent assignment can also kill every row; this one is the
    # longest that does so minimally (dropping any letter revives a row).
    dead = subtable(t0, Assignment.of([("f2", 1), ("f4", 0), ("f3", 1)]))
    print("rows after f2=1, f4=0, f3=1:", dead.n_rows, "(annihilated)")
    print()

    # Removing the middle column merges rows that agree on f2, f3; the
    # first row of each merged group keeps its decision set.
    reduced = remove_columns(t0, {"f4"})
    show(reduced, "after removing column f4")

    # Rewriting decisions with nu(x1, x2) = {min, max} of the remaining
    # values produces a new member of the closure of the table.
    relabeled = change_decisions(reduced, DecisionMap.min_max())
    show(relabeled, "after relabeling rows with {min, max} of their values")

    # Closure members drawn at random are reproducible from the record.
    member = closure_sample(t0, seed=7, count=1)[0]
    print("seeded closure member removed columns:", sorted(member.removed))
    replay = change_decisions(remove_columns(t0, member.removed), member.relabel)
    print("replay reproduces the member exactly:", replay == member.table)
    print()

    # Round trip through the file format preserves everything.
    print("file round trip exact:", parse_table(serialize_table(t0)) == t0)


if __name__ == "__main__":
    main()
