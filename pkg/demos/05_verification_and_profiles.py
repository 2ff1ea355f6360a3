"""Executable verification: bound checks, hard-table constructions, and
empirical class profiles.

Every relation between the parameters is a runnable check that
recomputes both sides from scratch.  The two constructions turn
structural witnesses (a large irreducible cover, a long annihilating
word) into concrete tables that are cheap nondeterministically but
provably expensive deterministically.  Profiles evaluate the worst-case
growth functions over an explicit finite set of tables; they are lower
bounds for any class containing the set.
"""

from mvd import (
    Measure,
    PhiSpec,
    check_bounds,
    check_construction,
    check_families,
    empirical_profile,
    gen_qn,
    gen_random,
    gen_t0,
    gen_tk,
)


def main():
    depth = Measure.depth()
    t0 = gen_t0()

    print("bound checks on the reference table:")
    print(check_bounds(t0, depth, subject="t0").render_text())
    print()

    print("bound checks on a seeded random table:")
    table = gen_random(42, cols=4, rows=10)
    print(check_bounds(table, depth, subject="seed42").render_text())
    print()

    print("cover construction: relabel rows by cover membership")
    print(check_construction(t0, depth, 1, "m1").render_text())
    print()

    print("word construction: keep the annihilating word's columns")
    print(check_construction(t0, depth, 1, "m10").render_text())
    print()

    print("family suite (diagonal tables, doubled target):")
    print(check_families("qn", max_n=3, phi=PhiSpec.named("double")).render_text())
    print()

    tables = [t0, gen_tk(1), gen_tk(2), gen_tk(3)]
    tables += [gen_qn(n, PhiSpec.named("identity"))[0] for n in (1, 2, 3)]
    profile = empirical_profile(tables, depth, 1, label="reference set")
    print(profile.render_text())


if __name__ == "__main__":
    main()
