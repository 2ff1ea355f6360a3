"""Exact optimal decision-tree complexity and certificate costs.

``solve_det`` minimizes the complexity over all deterministic trees by a
memoized recursion on row subsets: a degenerate subtable costs 0, and
otherwise the cost is the best attribute's weight plus the worst of its
nonempty value branches.  Subtables are identified by bitmasks over the
original row set, so distinct words reaching the same rows share one
memo entry.

``certificate_cost`` finds the cheapest attribute set whose restriction
(by the given tuple's values) leaves a degenerate subtable, enumerating
attribute subsets in nondecreasing cost order; a superset of a
certificate is again a certificate, so the first hit is optimal.  The
row-wise maximum of certificate costs equals the nondeterministic
complexity, which is how ``solve_nondet`` computes its value and builds
its witness tree (one branch per distinct minimal certificate word).
"""

from __future__ import annotations

import heapq
import time
from dataclasses import dataclass

from .errors import CoverError, ResourceLimitError, TableError
from .limits import Limits, resolve
from .measure import Measure, require_bounded
from .table import Assignment, DecisionTable, attr_sort_key, is_degenerate
from .tree import DecisionTree, Inner, Node, Terminal


@dataclass
class SolveStats:
    explored: int = 0
    memo_hits: int = 0
    seconds: float = 0.0


@dataclass
class SolveResult:
    value: int
    tree: DecisionTree | None
    stats: SolveStats


def _check_size(table: DecisionTable, lim: Limits) -> None:
    if table.n_cols > lim.max_cols:
        raise ResourceLimitError(
            f"table has {table.n_cols} columns, limit max_cols={lim.max_cols}",
            "max_cols", lim.max_cols,
        )
    if table.n_rows > lim.max_rows:
        raise ResourceLimitError(
            f"table has {table.n_rows} rows, limit max_rows={lim.max_rows}",
            "max_rows", lim.max_rows,
        )


# ---------------------------------------------------------------------
# Optimal deterministic trees
# ---------------------------------------------------------------------


def solve_det(table: DecisionTable, measure: Measure, limits: Limits | None = None) -> SolveResult:
    """Exact minimum complexity over deterministic trees, with a witness.

    Ties between attributes break toward the smallest attribute index,
    then the name; branches are ordered by value.  The empty table costs
    0 and has no tree.
    """
    lim = resolve(limits)
    require_bounded(measure)
    _check_size(table, lim)
    started = time.perf_counter()
    stats = SolveStats()

    if table.is_empty:
        stats.seconds = time.perf_counter() - started
        return SolveResult(0, None, stats)

    k = table.k
    vm = table.value_masks
    candidates = sorted(table.attrs, key=attr_sort_key)
    weight = {a: measure.weight(a) for a in table.attrs}
    full = table.all_rows_mask

    # memo: mask -> (optimal value, chosen attribute or None for a leaf)
    memo: dict[int, tuple[int, str | None]] = {}
    # pending: mask -> list of (attribute, nonempty child masks)
    pending: dict[int, list[tuple[str, list[int]]]] = {}
    stack = [full]
    while stack:
        mask = stack[-1]
        if mask in memo:
            stack.pop()
            stats.memo_hits += 1
            continue
        options = pending.get(mask)
        if options is None:
            if table.common_of_mask(mask):
                memo[mask] = (0, None)
                stack.pop()
                continue
            stats.explored += 1
            options = []
            for attr in candidates:
                subs = [vm[attr, v] & mask for v in range(k)]
                subs = [s for s in subs if s]
                if len(subs) < 2:
                    continue  # constant attributes cannot improve any branch
                options.append((attr, subs))
            pending[mask] = options
            if len(memo) + len(pending) > lim.max_memo:
                raise ResourceLimitError(
                    f"memo table exceeded max_memo={lim.max_memo}", "max_memo", lim.max_memo
                )
            stack.extend(s for _, subs in options for s in subs if s not in memo)
            continue
        best_value: int | None = None
        best_attr: str | None = None
        ready = True
        for attr, subs in options:
            worst = 0
            for s in subs:
                got = memo.get(s)
                if got is None:
                    ready = False
                    break
                if got[0] > worst:
                    worst = got[0]
            if not ready:
                break
            value = weight[attr] + worst
            if best_value is None or value < best_value:
                best_value, best_attr = value, attr
        if not ready:
            stack.extend(s for _, subs in options for s in subs if s not in memo)
            continue
        assert best_value is not None  # non-degenerate masks have a splitting attribute
        memo[mask] = (best_value, best_attr)
        del pending[mask]
        stack.pop()

    def build(mask: int) -> Node:
        value, attr = memo[mask]
        if attr is None:
            return Terminal(min(table.common_of_mask(mask)))
        branches = []
        for v in range(k):
            sub = vm[attr, v] & mask
            if sub:
                branches.append((v, build(sub)))
        return Inner(attr, tuple(branches))

    tree = DecisionTree((build(full),))
    stats.seconds = time.perf_counter() - started
    return SolveResult(memo[full][0], tree, stats)


# ---------------------------------------------------------------------
# Certificates and nondeterministic trees
# ---------------------------------------------------------------------


class _CertificateSearch:
    """Shared state for minimum-certificate searches against one table.

    Degeneracy of a restriction depends only on its row mask, so results
    are cached across queries; tuples that restrict to the same rows
    reuse the cache.
    """

    def __init__(self, table: DecisionTable, measure: Measure, lim: Limits):
        require_bounded(measure)
        _check_size(table, lim)
        self.table = table
        self.measure = measure
        self.lim = lim
        self.cols = table.attrs
        self.weights = [measure.weight(a) for a in self.cols]
        self._degenerate: dict[int, bool] = {}
        self.pops = 0

    def degenerate_mask(self, mask: int) -> bool:
        cached = self._degenerate.get(mask)
        if cached is None:
            cached = mask == 0 or bool(self.table.common_of_mask(mask))
            self._degenerate[mask] = cached
        return cached

    def min_certificate(self, values: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
        """Cheapest column subset certifying the tuple, as (cost, column indexes).

        Subsets come off a heap in nondecreasing cost order, so the first
        subset whose restriction is degenerate is optimal.  The full
        restriction pins down at most one row, hence the search always
        terminates.
        """
        table = self.table
        if self.degenerate_mask(table.all_rows_mask):
            return 0, ()
        vm = table.value_masks
        col_masks = [vm[a, values[i]] for i, a in enumerate(self.cols)]
        n = len(self.cols)
        # heap entries: (cost, column index tuple, row mask)
        heap: list[tuple[int, tuple[int, ...], int]] = [(0, (), table.all_rows_mask)]
        while heap:
            cost, idxs, mask = heapq.heappop(heap)
            self.pops += 1
            if self.pops > self.lim.max_bb_nodes:
                raise ResourceLimitError(
                    f"certificate search exceeded max_bb_nodes={self.lim.max_bb_nodes}",
                    "max_bb_nodes", self.lim.max_bb_nodes,
                )
            if self.degenerate_mask(mask):
                return cost, idxs
            start = idxs[-1] + 1 if idxs else 0
            for j in range(start, n):
                heapq.heappush(heap, (cost + self.weights[j], idxs + (j,), mask & col_masks[j]))
        raise AssertionError("full restriction of a table is always degenerate")

    def word_for(self, values: tuple[int, ...], idxs: tuple[int, ...]) -> Assignment:
        return Assignment.of((self.cols[j], values[j]) for j in idxs)


def certificate_cost(
    table: DecisionTable,
    values: tuple[int, ...],
    measure: Measure,
    limits: Limits | None = None,
) -> int:
    """Minimum cost of an attribute set whose ``values``-restriction is
    degenerate.  The tuple need not be a row; a degenerate table costs 0.
    """
    lim = resolve(limits)
    if table.is_empty:
        raise TableError("certificate cost is undefined for the empty table")
    if len(values) != table.n_cols:
        raise TableError(f"tuple has {len(values)} values, table has {table.n_cols} columns")
    for v in values:
        if v < 0 or v >= table.k:
            raise TableError(f"value {v} outside E_{table.k}")
    search = _CertificateSearch(table, measure, lim)
    cost, _ = search.min_certificate(tuple(values))
    return cost


def m_param(
    table: DecisionTable,
    measure: Measure,
    scope: str = "all",
    limits: Limits | None = None,
) -> int:
    """Worst certificate cost over the rows, or over every tuple of the
    value space (``scope='all'``).  0 for empty or degenerate tables.
    """
    if scope not in ("rows", "all"):
        raise TableError(f"unknown scope {scope!r}")
    lim = resolve(limits)
    if table.is_empty or is_degenerate(table):
        return 0
    search = _CertificateSearch(table, measure, lim)
    if scope == "rows":
        return max(search.min_certificate(row)[0] for row in table.rows)
    space = table.k ** table.n_cols
    if space > lim.max_tuples:
        raise ResourceLimitError(
            f"{space} tuples exceed max_tuples={lim.max_tuples}", "max_tuples", lim.max_tuples
        )
    worst = 0
    values = [0] * table.n_cols
    while True:
        cost, _ = search.min_certificate(tuple(values))
        if cost > worst:
            worst = cost
        pos = table.n_cols - 1
        while pos >= 0 and values[pos] == table.k - 1:
            values[pos] = 0
            pos -= 1
        if pos < 0:
            return worst
        values[pos] += 1


def solve_nondet(table: DecisionTable, measure: Measure, limits: Limits | None = None) -> SolveResult:
    """Exact minimum complexity over nondeterministic trees, with a witness.

    The value is the worst row's minimum certificate cost; the witness
    has one root branch per distinct minimal certificate word, ending in
    a common decision of the certified subtable.
    """
    lim = resolve(limits)
    if table.is_empty:
        raise TableError("no tree is defined for the empty table")
    started = time.perf_counter()
    if is_degenerate(table):
        tree = DecisionTree.leaf(min(table.common_of_mask(table.all_rows_mask)))
        return SolveResult(0, tree, SolveStats(seconds=time.perf_counter() - started))

    search = _CertificateSearch(table, measure, lim)
    value = 0
    words: list[Assignment] = []
    seen: set[Assignment] = set()
    for row in table.rows:
        cost, idxs = search.min_certificate(row)
        if cost > value:
            value = cost
        word = search.word_for(row, idxs)
        if word not in seen:
            seen.add(word)
            words.append(word)

    branches = []
    for word in words:
        decision = min(table.common_of_mask(table.row_mask(word)))
        branches.append(_chain_node(word.letters, decision))
    tree = DecisionTree(tuple(branches))
    stats = SolveStats(explored=search.pops, seconds=time.perf_counter() - started)
    return SolveResult(value, tree, stats)


def _chain_node(letters: tuple[tuple[str, int], ...], decision: int) -> Node:
    node: Node = Terminal(decision)
    for attr, value in reversed(letters):
        node = Inner(attr, ((value, node),))
    return node


# ---------------------------------------------------------------------
# Trees from covers
# ---------------------------------------------------------------------


def tree_from_cover(
    table: DecisionTable,
    words: list[Assignment],
    mode: str,
    measure: Measure | None = None,
    limits: Limits | None = None,
) -> DecisionTree:
    """Build a tree from a cover: a word set whose subtables jointly
    contain every row.

    ``parallel`` produces a nondeterministic tree with one branch per
    word; its complexity is the largest word cost.  ``sequential``
    produces a deterministic tree that confirms the words one after the
    other, skipping letters already fixed on the path; its complexity is
    at most the sum of the word costs.  Every word's subtable must be
    empty or have a common decision.
    """
    if mode not in ("parallel", "sequential"):
        raise TableError(f"unknown cover mode {mode!r}")
    if table.is_empty:
        raise TableError("no tree is defined for the empty table")

    masks = [table.row_mask(w) for w in words]
    covered = 0
    for m in masks:
        covered |= m
    uncovered = table.all_rows_mask & ~covered
    if uncovered:
        rows = [table.rows[i] for i in table.mask_indices(uncovered)]
        raise CoverError(f"words do not cover rows {rows}")
    for word, mask in zip(words, masks):
        if mask and not table.common_of_mask(mask):
            raise CoverError(f"subtable of [{word}] has no common decision")

    if mode == "parallel":
        branches = []
        for word, mask in zip(words, masks):
            decision = min(table.common_of_mask(mask)) if mask else 0
            branches.append(_chain_node(word.letters, decision))
        return DecisionTree(tuple(branches))

    return DecisionTree((_sequential_node(table, {}, list(words)),))


def _sequential_node(table: DecisionTable, context: dict[str, int], words: list[Assignment]) -> Node:
    mask = table.row_mask(Assignment.of(context.items()))
    if mask == 0:
        return Terminal(0)
    for pos, word in enumerate(words):
        if any(context.get(a, v) != v for a, v in word.letters):
            continue  # contradicts the path so far; it stays dead below
        fresh = [(a, v) for a, v in word.letters if a not in context]
        if not fresh:
            # Path confirmed every letter; rows here all match the word.
            return Terminal(min(table.common_of_mask(table.row_mask(word))))
        attr, want = fresh[0]
        branches = []
        for v in range(table.k):
            sub = mask & table.value_masks[attr, v]
            if not sub:
                continue
            child_context = dict(context)
            child_context[attr] = v
            branches.append((v, _sequential_node(table, child_context, words[pos:])))
        return Inner(attr, tuple(branches))
    raise AssertionError("a cover always leaves a matching word for surviving rows")


# ---------------------------------------------------------------------
# Convenience wrappers used by the verification layer
# ---------------------------------------------------------------------


def psi_d(table: DecisionTable, measure: Measure, limits: Limits | None = None) -> int:
    """Minimum deterministic complexity; 0 for the empty table."""
    if table.is_empty:
        return 0
    return solve_det(table, measure, limits).value


def psi_a(table: DecisionTable, measure: Measure, limits: Limits | None = None) -> int:
    """Minimum nondeterministic complexity; 0 for the empty table."""
    if table.is_empty:
        return 0
    return solve_nondet(table, measure, limits).value
