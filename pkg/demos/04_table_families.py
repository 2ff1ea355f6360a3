"""The explicit table families and what each one demonstrates.

* Layered complete tables: nondeterministic cost stays at most 3 while
  deterministic cost grows without bound, even though the tables are
  complete.  This separation is impossible for single-valued decisions.
* Diagonal tables: a weighted measure pins the pair (nondeterministic,
  deterministic) cost to (n, phi(n)) for any target function phi.
* Threshold tables: step patterns on the real line keep both the
  shattered-set and annihilating-word parameters tiny, whatever the
  thresholds.
"""

from mvd import (
    Measure,
    PhiSpec,
    g_param,
    gen_gk,
    gen_qn,
    gen_threshold,
    gen_tk,
    gen_tkstar,
    nu_k,
    psi_a,
    psi_d,
    r_param,
    z_param,
)


def main():
    depth = Measure.depth()

    # The layered graph: layer j holds j nodes, adjacent nodes share a
    # child.  Labels of the complete table come from a blocking rule:
    # a node contributes its number when it is set and its children are
    # clear; the first node contributes 0 when it is clear.
    g = gen_gk(3)
    print("3-layer graph children:", {i: g.child_pair(i) for i in (1, 2, 3)})
    print("label of the all-ones tuple:", set(nu_k(g, (1, 1, 1, 1, 1, 1))))
    print()

    print("complete layered tables: nondeterministic vs deterministic cost")
    for k in range(1, 5):
        table = gen_tk(k)
        print(
            f"  {k} layers: {table.n_rows} rows, "
            f"nondet {psi_a(table, depth)} <= 3, det {psi_d(table, depth)} >= {k - 1}"
        )
    print()

    # The path subtable: one row per root-to-bottom path, labeled with
    # its endpoint; distinct labels persist under zeroing attributes,
    # which is what forces deep deterministic trees above.
    star = gen_tkstar(3)
    print(f"path subtable of the 3-layer table: {star.n_rows} rows, "
          f"{r_param(star)} distinct labels")
    print()

    print("diagonal tables pin (nondet, det) to (n, phi(n)):")
    for name in ("identity", "double", "square"):
        phi = PhiSpec.named(name)
        pairs = []
        for n in (1, 2, 3):
            table, weights = gen_qn(n, phi)
            m = Measure.weighted_sum(weights)
            pairs.append((psi_a(table, m), psi_d(table, m)))
        print(f"  {name}: {pairs}")
    print()

    print("threshold tables stay structurally trivial:")
    for thresholds in ({3}, {2, 5}, {1, 4, 9, 16, 25}):
        table = gen_threshold(thresholds)
        print(
            f"  thresholds {sorted(thresholds)}: {table.n_rows} rows, "
            f"shattered <= {z_param(table)[0]}, annihilating <= {g_param(table)[0]}"
        )


if __name__ == "__main__":
    main()
