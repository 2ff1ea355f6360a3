"""Structural parameters of binary tables: the widest shattered column
set, the longest irreducible annihilating word, and the largest
irreducible budgeted cover.

* ``z_param``: the largest column set onto which the rows project to all
  2^s tuples.  Such a projection is exactly what column removal plus
  first-row deduplication turns into a complete table, so this is the
  widest complete table reachable from the input.
* ``g_param``: the longest consistent assignment that kills every row
  while each of its proper sub-assignments leaves a survivor.
* ``l_param``: the largest set of words within the cost budget whose
  subtables jointly contain every row while each word keeps a private
  row no other word covers.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from itertools import combinations

from .errors import ResourceLimitError, TableError
from .limits import Limits, resolve
from .measure import Measure, eval_word, require_bounded
from .table import Assignment, DecisionTable


def _require_binary(table: DecisionTable, what: str) -> None:
    if table.k != 2:
        raise TableError(f"{what} is defined only for binary tables (k=2), got k={table.k}")


# ---------------------------------------------------------------------
# Shattered column sets
# ---------------------------------------------------------------------


def z_param(table: DecisionTable, limits: Limits | None = None) -> tuple[int, tuple[str, ...] | None]:
    """Size of the largest shattered column set, with a witness.

    A set C is shattered when the projection of the rows onto C contains
    all 2^|C| value tuples.  Sizes above log2(row count) are impossible
    and are pruned up front.  Returns (0, None) when nothing is shattered,
    including for the empty table.
    """
    _require_binary(table, "the shattered-set parameter")
    lim = resolve(limits)
    if table.is_empty:
        return 0, None
    n = table.n_rows
    upper = min(table.n_cols, n.bit_length() - 1)
    nodes = 0
    for size in range(upper, 0, -1):
        target = 1 << size
        for cols in combinations(range(table.n_cols), size):
            nodes += 1
            if nodes > lim.max_bb_nodes:
                raise ResourceLimitError(
                    f"shattered-set search exceeded max_bb_nodes={lim.max_bb_nodes}",
                    "max_bb_nodes", lim.max_bb_nodes,
                )
            seen: set[tuple[int, ...]] = set()
            for row in table.rows:
                seen.add(tuple(row[c] for c in cols))
                if len(seen) == target:
                    return size, tuple(table.attrs[c] for c in cols)
    return 0, None


# ---------------------------------------------------------------------
# Irreducible annihilating words
# ---------------------------------------------------------------------


def g_param(table: DecisionTable, limits: Limits | None = None) -> tuple[int, Assignment | None]:
    """Length of the longest irreducible annihilating word, with a witness.

    The search walks columns in table order, each either skipped or fixed
    to a value.  Once the surviving rows hit zero the word annihilates;
    any extension would be reducible, so the branch stops there and the
    word is kept only if dropping each single letter leaves a survivor.
    """
    _require_binary(table, "the annihilating-word parameter")
    lim = resolve(limits)
    if table.is_empty:
        return 0, None

    vm = table.value_masks
    cols = table.attrs
    full = table.all_rows_mask
    best_len = 0
    best_word: Assignment | None = None
    nodes = 0

    def minimal(letters: list[tuple[str, int]]) -> bool:
        for skip in range(len(letters)):
            mask = full
            for i, (attr, value) in enumerate(letters):
                if i != skip:
                    mask &= vm[attr, value]
            if mask == 0:
                return False
        return True

    def walk(ci: int, mask: int, letters: list[tuple[str, int]]) -> None:
        nonlocal best_len, best_word, nodes
        nodes += 1
        if nodes > lim.max_bb_nodes:
            raise ResourceLimitError(
                f"annihilating-word search exceeded max_bb_nodes={lim.max_bb_nodes}",
                "max_bb_nodes", lim.max_bb_nodes,
            )
        if mask == 0:
            if len(letters) > best_len and minimal(letters):
                best_len = len(letters)
                best_word = Assignment.of(letters)
            return
        if ci == len(cols):
            return
        walk(ci + 1, mask, letters)
        for v in (0, 1):
            letters.append((cols[ci], v))
            walk(ci + 1, mask & vm[cols[ci], v], letters)
            letters.pop()

    walk(0, full, [])
    return best_len, best_word


# ---------------------------------------------------------------------
# Budgeted words and irreducible covers
# ---------------------------------------------------------------------


@dataclass(frozen=True)
class Cover:
    """An irreducible budgeted cover: words, their covered row indexes,
    and the (measure, budget) pair they respect."""

    words: tuple[Assignment, ...]
    coverage: tuple[frozenset[int], ...]
    measure: Measure
    budget: int

    def validate(self, table: DecisionTable) -> None:
        all_rows = frozenset(range(table.n_rows))
        union: set[int] = set()
        for word, rows in zip(self.words, self.coverage):
            if eval_word(self.measure, word) > self.budget:
                raise TableError(f"word [{word}] exceeds the budget {self.budget}")
            actual = frozenset(table.mask_indices(table.row_mask(word)))
            if actual != rows:
                raise TableError(f"recorded coverage of [{word}] is stale")
            union |= rows
        if union != all_rows:
            raise TableError("cover does not reach every row")
        for i, rows in enumerate(self.coverage):
            others: set[int] = set()
            for j, other in enumerate(self.coverage):
                if j != i:
                    others |= other
            if not (rows - others):
                raise TableError(f"word [{self.words[i]}] has no private row")


def _budget_masks(
    table: DecisionTable, measure: Measure, budget: int, lim: Limits
) -> list[tuple[int, Assignment, int]]:
    """Coverage-distinct words within the budget as (cost, word, mask),
    keeping a minimum-cost representative per row mask."""
    require_bounded(measure)
    vm = table.value_masks
    cols = table.attrs
    weights = [measure.weight(a) for a in cols]
    found: dict[int, tuple[int, Assignment]] = {}
    nodes = 0

    def walk(ci: int, mask: int, letters: list[tuple[str, int]], cost: int) -> None:
        nonlocal nodes
        nodes += 1
        if nodes > lim.max_bb_nodes:
            raise ResourceLimitError(
                f"word enumeration exceeded max_bb_nodes={lim.max_bb_nodes}",
                "max_bb_nodes", lim.max_bb_nodes,
            )
        if mask == 0:
            return  # extensions cover nothing either
        prev = found.get(mask)
        if prev is None or cost < prev[0]:
            found[mask] = (cost, Assignment.of(letters))
            if len(found) > lim.max_words:
                raise ResourceLimitError(
                    f"more than max_words={lim.max_words} coverage-distinct words",
                    "max_words", lim.max_words,
                )
        if ci == len(cols):
            return
        walk(ci + 1, mask, letters, cost)
        if cost + weights[ci] <= budget:
            for v in range(table.k):
                letters.append((cols[ci], v))
                walk(ci + 1, mask & vm[cols[ci], v], letters, cost + weights[ci])
                letters.pop()

    walk(0, table.all_rows_mask, [], 0)
    return sorted(
        ((cost, word, mask) for mask, (cost, word) in found.items()),
        key=lambda item: (item[0], item[1].letters),
    )


def budget_words(
    table: DecisionTable, measure: Measure, budget: int, limits: Limits | None = None
) -> list[tuple[Assignment, frozenset[int]]]:
    """Canonical words within the cost budget that cover at least one row,
    one minimum-cost representative per distinct covered row set.  The
    empty word (full coverage) is always present for a nonempty table.
    """
    lim = resolve(limits)
    if table.is_empty:
        return []
    return [
        (word, frozenset(table.mask_indices(mask)))
        for _cost, word, mask in _budget_masks(table, measure, budget, lim)
    ]


def l_param(
    table: DecisionTable, measure: Measure, budget: int, limits: Limits | None = None
) -> tuple[int, Cover | None]:
    """Largest irreducible cover within the budget, with a witness.

    Exact branch-and-bound over coverage-distinct candidates: members are
    added in order, each must bring a private row, and existing members
    must keep theirs (privacy only shrinks as members join, so a dead
    prefix can never revive).  Two bounds prune: the remaining candidate
    count and the reachability of full coverage from the current suffix.
    Always at least 1 for a nonempty table, witnessed by the empty word.
    """
    lim = resolve(limits)
    require_bounded(measure)
    if table.is_empty:
        return 0, None

    entries = _budget_masks(table, measure, budget, lim)
    # Small coverage first: such words own private rows most easily.
    entries.sort(key=lambda item: (bin(item[2]).count("1"), item[0], item[1].letters))
    masks = [mask for _, _, mask in entries]
    words = [word for _, word, _ in entries]
    m = len(masks)
    full = table.all_rows_mask

    suffix = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        suffix[i] = suffix[i + 1] | masks[i]

    best_size = 0
    best_pick: list[int] = []
    nodes = 0

    # The recursion is one frame per family member, and a family can hold
    # one member per row (full-budget singleton coverage).
    needed = table.n_rows + 200
    if sys.getrecursionlimit() < needed:
        sys.setrecursionlimit(needed)

    def extend(start: int, picked: list[int], privs: list[int], union: int) -> None:
        nonlocal best_size, best_pick, nodes
        nodes += 1
        if nodes > lim.max_bb_nodes:
            raise ResourceLimitError(
                f"cover search exceeded max_bb_nodes={lim.max_bb_nodes}",
                "max_bb_nodes", lim.max_bb_nodes,
            )
        if union == full and picked and len(picked) > best_size:
            best_size = len(picked)
            best_pick = list(picked)
        # Private rows of distinct members never overlap and each future
        # member must claim its private row among the still-uncovered
        # ones, so the family can grow by at most that count.
        headroom = bin(full & ~union).count("1")
        if len(picked) + headroom <= best_size:
            return
        for j in range(start, m):
            if len(picked) + (m - j) <= best_size:
                break  # even taking every remaining candidate cannot win
            if union | suffix[j] != full:
                break  # no completion from here covers the rest
            mask = masks[j]
            private = mask & ~union
            if not private:
                continue
            new_privs = [p & ~mask for p in privs]
            if any(p == 0 for p in new_privs):
                continue
            new_privs.append(private)
            picked.append(j)
            extend(j + 1, picked, new_privs, union | mask)
            picked.pop()

    extend(0, [], [], 0)
    if best_size == 0:
        return 0, None
    cover = Cover(
        words=tuple(words[j] for j in best_pick),
        coverage=tuple(frozenset(table.mask_indices(masks[j])) for j in best_pick),
        measure=measure,
        budget=budget,
    )
    return best_size, cover
