"""Structural parameters: certificates, shattered sets, annihilating
words, and irreducible covers.

Four numbers control how far deterministic cost can exceed
nondeterministic cost over a class of tables:

* the certificate maximum (worst tuple's cheapest settling question set),
* the widest shattered column set (the largest complete table reachable
  by column removal and relabeling),
* the longest irreducible annihilating word,
* the largest irreducible budgeted cover.

This walkthrough computes all four on the reference table, with their
witnesses.
"""

from mvd import (
    Assignment,
    Measure,
    budget_words,
    certificate_cost,
    g_param,
    gen_t0,
    l_param,
    m_param,
    subtable,
    z_param,
)


def main():
    t0 = gen_t0()
    depth = Measure.depth()

    # Certificate cost of a tuple: the cheapest attribute set whose
    # answers (taken from the tuple) leave rows sharing a decision.
    print("certificate costs per row:")
    for row in t0.rows:
        print(f"  {row}: {certificate_cost(t0, row, depth)}")
    print("worst over rows:", m_param(t0, depth, "rows"))
    print("worst over every tuple of the cube:", m_param(t0, depth, "all"))
    print()

    # Shattered columns: two columns of the table realize all four
    # binary patterns, but with six rows no three columns can.
    z, z_witness = z_param(t0)
    print(f"widest shattered column set: {z} (witness {z_witness})")
    print()

    # Annihilating words: the witness kills all rows and is minimal.
    g, g_witness = g_param(t0)
    print(f"longest irreducible annihilating word: {g} ({g_witness})")
    for skip in g_witness.letters:
        rest = Assignment.of(l for l in g_witness.letters if l != skip)
        print(f"  dropping {skip[0]}={skip[1]} leaves {subtable(t0, rest).n_rows} rows")
    print()

    # Budgeted words: all distinct coverage patterns within a cost cap.
    for budget in (0, 1):
        words = budget_words(t0, depth, budget)
        print(f"budget {budget}: {len(words)} coverage-distinct words")
        for word, rows in words:
            print(f"  [{word}] covers rows {sorted(rows)}")
    print()

    # Irreducible covers: every member keeps a private row.  The size of
    # the largest one grows with the budget until every row can be
    # isolated individually.
    for budget in (0, 1, 2):
        size, cover = l_param(t0, depth, budget)
        print(f"largest irreducible cover at budget {budget}: {size}")
        if budget == 1:
            for word, rows in zip(cover.words, cover.coverage):
                print(f"  [{word}] covers {sorted(rows)}")


if __name__ == "__main__":
    main()
