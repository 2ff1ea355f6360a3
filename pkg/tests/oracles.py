"""Independent brute-force oracles for the exact solvers.

These deliberately share no search machinery with the package: the
deterministic-depth oracle enumerates tree shapes and checks them
against the raw tree-validity definition, the certificate oracle
enumerates every attribute subset, and the cover oracle searches
families of raw words (no coverage deduplication).  All are exponential
and meant for small tables only.
"""

from __future__ import annotations

from itertools import combinations, product

from mvd import DecisionTable, Measure
from mvd.table import Assignment

LEAF = "leaf"


def _value_subsets(k: int):
    """Nonempty branch label sets over the alphabet, smallest first."""
    out = []
    for code in range(1, 1 << k):
        out.append(tuple(v for v in range(k) if code >> v & 1))
    out.sort(key=len)
    return tuple(out)


def _structures(attrs: tuple[str, ...], depth: int, k: int):
    """Tree shapes of depth <= depth over distinct-per-path attributes.

    A shape is LEAF or (attr, ((value, subshape), ...)).  Terminal labels
    are left open: a shape is valid for a table iff every leaf subtable
    is empty or has a common decision, which decides label existence.
    """
    yield LEAF
    if depth == 0:
        return
    for i, attr in enumerate(attrs):
        rest = attrs[:i] + attrs[i + 1 :]
        subs = list(_structures(rest, depth - 1, k))
        for values in _value_subsets(k):
            for combo in product(subs, repeat=len(values)):
                yield (attr, tuple(zip(values, combo)))


def _structure_valid(table: DecisionTable, structure) -> bool:
    vm = table.value_masks
    covered = 0
    sound = True

    def walk(node, mask):
        nonlocal covered, sound
        if node == LEAF:
            covered |= mask
            if mask and not table.common_of_mask(mask):
                sound = False
            return
        attr, branches = node
        for value, sub in branches:
            walk(sub, mask & vm[attr, value])

    walk(structure, table.all_rows_mask)
    return sound and covered == table.all_rows_mask


def brute_force_depth(table: DecisionTable) -> int:
    """Minimum depth of a valid deterministic tree, by shape enumeration.

    Shapes of depth below the column count are enumerated outright; the
    tree testing every attribute on every path is always valid, so when
    nothing shallower works the answer is the column count.
    """
    assert not table.is_empty
    if table.common_of_mask(table.all_rows_mask):
        return 0
    attrs = tuple(table.attrs)
    for depth in range(1, len(attrs)):
        for structure in _structures(attrs, depth, table.k):
            if _structure_valid(table, structure):
                return depth
    return len(attrs)


def _structure_cost(table: DecisionTable, structure, measure: Measure) -> int:
    """Worst root-to-leaf attribute cost of a shape."""
    if structure == LEAF:
        return 0
    attr, branches = structure
    w = measure.weight(attr)
    return w + max(_structure_cost(table, sub, measure) for _, sub in branches)


def brute_force_cost(table: DecisionTable, measure: Measure) -> int:
    """Minimum measure cost over all valid deterministic tree shapes.

    An optimal tree never retests an attribute along a path (the repeat
    adds cost and splits nothing new), so shapes with distinct-per-path
    attributes at full depth cover the optimum.
    """
    assert not table.is_empty
    if table.common_of_mask(table.all_rows_mask):
        return 0
    attrs = tuple(table.attrs)
    best = None
    for structure in _structures(attrs, len(attrs), table.k):
        if structure == LEAF or not _structure_valid(table, structure):
            continue
        cost = _structure_cost(table, structure, measure)
        if best is None or cost < best:
            best = cost
    return best


def brute_force_nondet(table: DecisionTable, measure: Measure) -> int:
    """Worst-row cheapest certificate, by full subset enumeration."""
    assert not table.is_empty
    if table.common_of_mask(table.all_rows_mask):
        return 0
    vm = table.value_masks
    worst = 0
    for row in table.rows:
        best = None
        for size in range(table.n_cols + 1):
            for subset in combinations(range(table.n_cols), size):
                mask = table.all_rows_mask
                for c in subset:
                    mask &= vm[table.attrs[c], row[c]]
                if mask == 0 or table.common_of_mask(mask):
                    cost = sum(measure.weight(table.attrs[c]) for c in subset)
                    if best is None or cost < best:
                        best = cost
        worst = max(worst, best)
    return worst


def _all_words(table: DecisionTable, measure: Measure, budget: int):
    """Every canonical word within the budget, with its row mask.

    No deduplication: words with equal coverage all stay in the list.
    """
    vm = table.value_masks
    cols = table.attrs
    out = []

    def walk(ci, mask, letters, cost):
        if ci == len(cols):
            out.append((Assignment.of(letters), mask))
            return
        walk(ci + 1, mask, letters, cost)
        w = measure.weight(cols[ci])
        if cost + w <= budget:
            for v in range(table.k):
                letters.append((cols[ci], v))
                walk(ci + 1, mask & vm[cols[ci], v], letters, cost + w)
                letters.pop()

    walk(0, table.all_rows_mask, [], 0)
    return out


def brute_force_l(table: DecisionTable, measure: Measure, budget: int) -> int:
    """Largest irreducible cover, searching families of raw words.

    Walks all families in word-list order; a member joins only while
    every member keeps a row covered by no other member (privacy can
    only shrink as the family grows, so this prunes nothing valid).
    """
    assert not table.is_empty
    words = _all_words(table, measure, budget)
    masks = [m for _, m in words]
    full = table.all_rows_mask
    best = 0

    def extend(start, privs, union, size):
        nonlocal best
        if union == full and size > best:
            best = size
        for j in range(start, len(masks)):
            mask = masks[j]
            private = mask & ~union
            if not private:
                continue
            new_privs = [p & ~mask for p in privs]
            if any(p == 0 for p in new_privs):
                continue
            new_privs.append(private)
            extend(j + 1, new_privs, union | mask, size + 1)

    extend(0, [], 0, 0)
    return best


# ---------------------------------------------------------------------
# Deterministic small-table corpora
# ---------------------------------------------------------------------

_LABELS_2COL = (frozenset({0}), frozenset({1}), frozenset({0, 1}))
_LABELS_3COL = (
    frozenset({0}),
    frozenset({1}),
    frozenset({2}),
    frozenset({0, 1}),
    frozenset({1, 2}),
    frozenset({0, 2}),
)


def all_two_col_tables():
    """Every binary table on two columns with labels from a fixed
    three-set universe: 255 tables (nonempty row subsets of the four
    tuples, every labeling)."""
    tuples = ((0, 0), (0, 1), (1, 0), (1, 1))
    tables = []
    for code in range(4**4):
        digits = [(code // 4**i) % 4 for i in range(4)]
        if all(d == 0 for d in digits):
            continue
        rows = []
        decs = []
        for tup, digit in zip(tuples, digits):
            if digit:
                rows.append(tup)
                decs.append(_LABELS_2COL[digit - 1])
        tables.append(
            DecisionTable(k=2, attrs=("f0", "f1"), rows=tuple(rows), decisions=tuple(decs))
        )
    return tables


def three_col_corpus(minimum: int = 500):
    """Deterministic corpus of distinct three-column binary tables.

    Complete eight-row tables under every label cycle, then every row
    subset of sizes 2..7 under two different label cycles each.
    """
    tuples = tuple(product((0, 1), repeat=3))
    tables = []
    seen = set()

    def add(rows, offset, stride):
        decs = tuple(
            _LABELS_3COL[(offset + i * stride) % len(_LABELS_3COL)] for i in range(len(rows))
        )
        table = DecisionTable(k=2, attrs=("f0", "f1", "f2"), rows=tuple(rows), decisions=decs)
        if table not in seen:
            seen.add(table)
            tables.append(table)

    for offset in range(len(_LABELS_3COL)):
        for stride in range(1, len(_LABELS_3COL)):
            add(tuples, offset, stride)
    for size in range(2, 8):
        for combo in combinations(range(8), size):
            rows = tuple(tuples[i] for i in combo)
            offset = sum(combo) % len(_LABELS_3COL)
            add(rows, offset, 1 + size % 5)
            add(rows, (offset + 2) % len(_LABELS_3COL), 5 - size % 4)
    assert len(tables) >= minimum, f"corpus holds only {len(tables)} tables"
    return tables
