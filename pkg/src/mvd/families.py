"""Generators for the explicit table families used throughout the test
and verification suites.

* ``t0``        -- the fixed six-row binary reference table.
* ``tk``        -- complete tables built over a layered graph whose rows are
                   labeled by the child-blocking rule ``nu_k``; their
                   deterministic complexity grows with the layer count
                   while the nondeterministic complexity stays at most 3.
* ``tkstar``    -- the rows of ``tk`` that are characteristic tuples of
                   root-to-bottom paths, each labeled with its endpoint.
* ``qn``        -- diagonal tables with one cheap column, tuned so that the
                   deterministic cost equals a prescribed function of the
                   nondeterministic cost.
* ``threshold`` -- step-pattern tables realized by threshold attributes on
                   the real line.
* ``random``    -- seeded, reproducible tables for property suites.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .errors import ResourceLimitError, TableError
from .limits import Limits, resolve
from .table import DecisionMap, DecisionTable


# ---------------------------------------------------------------------
# Layered graph and its labeling rule
# ---------------------------------------------------------------------


def triangle(k: int) -> int:
    """Node count of the k-layer graph: k(k+1)/2."""
    return k * (k + 1) // 2


@dataclass(frozen=True)
class LayeredGraph:
    """Pascal-triangle shaped graph: layer j holds j nodes, numbered
    layer by layer from 1, and node i of layer j < k has the children
    l(i) = i + j and p(i) = i + j + 1, so adjacent nodes share a child.
    """

    k: int
    size: int
    children: tuple[tuple[int, int] | None, ...]  # 1-based; None for the last layer

    def layer_of(self, node: int) -> int:
        j = 1
        top = 1
        while top + j <= node:
            top += j
            j += 1
        return j

    def child_pair(self, node: int) -> tuple[int, int] | None:
        return self.children[node - 1]

    @property
    def last_layer(self) -> tuple[int, ...]:
        return tuple(range(self.size - self.k + 1, self.size + 1))


def gen_gk(k: int) -> LayeredGraph:
    if k < 1:
        raise TableError(f"layer count must be positive, got {k}")
    size = triangle(k)
    children: list[tuple[int, int] | None] = []
    node = 0
    for layer in range(1, k + 1):
        for _ in range(layer):
            node += 1
            if layer == k:
                children.append(None)
            else:
                children.append((node + layer, node + layer + 1))
    return LayeredGraph(k=k, size=size, children=tuple(children))


def nu_k(graph: LayeredGraph, values: Sequence[int]) -> frozenset[int]:
    """Decision set of a value tuple over the graph's nodes.

    0 is present iff the first node carries 0.  An upper node is present
    iff it carries 1 while both its children carry 0; a last-layer node
    is present iff it carries 1.  The result is never empty: starting
    from a node carrying 1, descending through children carrying 1
    always reaches a member.
    """
    if len(values) != graph.size:
        raise TableError(f"tuple has {len(values)} values, graph has {graph.size} nodes")
    out = set()
    if values[0] == 0:
        out.add(0)
    for node in range(1, graph.size + 1):
        if values[node - 1] != 1:
            continue
        pair = graph.child_pair(node)
        if pair is None:
            out.add(node)
        elif values[pair[0] - 1] == 0 and values[pair[1] - 1] == 0:
            out.add(node)
    return frozenset(out)


# ---------------------------------------------------------------------
# The individual generators
# ---------------------------------------------------------------------


def gen_t0() -> DecisionTable:
    """The six-row reference table over columns f2, f4, f3."""
    return DecisionTable.build(
        2,
        ("f2", "f4", "f3"),
        [
            ((1, 1, 1), {1}),
            ((0, 1, 1), {0, 1, 2}),
            ((1, 1, 0), {1, 3}),
            ((0, 0, 1), {2}),
            ((1, 0, 0), {3}),
            ((0, 0, 0), {2, 3}),
        ],
    )


def gen_tk(k: int, limits: Limits | None = None) -> DecisionTable:
    """Complete table over the k-layer graph, rows labeled with nu_k."""
    lim = resolve(limits)
    graph = gen_gk(k)
    m = graph.size
    if m > lim.max_cols or (1 << m) > lim.max_rows:
        raise ResourceLimitError(
            f"layer count {k} needs {m} columns and {1 << m} rows, "
            f"beyond max_cols={lim.max_cols}/max_rows={lim.max_rows}",
            "max_rows", lim.max_rows,
        )
    attrs = tuple(f"f{i}" for i in range(1, m + 1))
    rows = []
    decisions = []
    for values in product((0, 1), repeat=m):
        rows.append(values)
        decisions.append(nu_k(graph, values))
    return DecisionTable(k=2, attrs=attrs, rows=tuple(rows), decisions=tuple(decisions))


def _paths(graph: LayeredGraph) -> list[tuple[int, ...]]:
    """All root-to-last-layer node sequences, in left-to-right order."""
    out: list[tuple[int, ...]] = []

    def walk(node: int, acc: list[int]) -> None:
        acc.append(node)
        pair = graph.child_pair(node)
        if pair is None:
            out.append(tuple(acc))
        else:
            walk(pair[0], acc)
            walk(pair[1], acc)
        acc.pop()

    walk(1, [])
    return out


def gen_tkstar(k: int, limits: Limits | None = None) -> DecisionTable:
    """Rows of the complete layered table that are characteristic tuples
    of complete paths; each label is the singleton of the path's endpoint.
    """
    lim = resolve(limits)
    graph = gen_gk(k)
    m = graph.size
    if m > lim.max_cols:
        raise ResourceLimitError(
            f"layer count {k} needs {m} columns, beyond max_cols={lim.max_cols}",
            "max_cols", lim.max_cols,
        )
    attrs = tuple(f"f{i}" for i in range(1, m + 1))
    chosen: dict[tuple[int, ...], frozenset[int]] = {}
    for path in _paths(graph):
        values = tuple(1 if node + 1 in set(path) else 0 for node in range(m))
        chosen[values] = nu_k(graph, values)
    # Keep the row order of the complete table (lexicographic tuples).
    rows = tuple(sorted(chosen))
    return DecisionTable(
        k=2, attrs=attrs, rows=rows, decisions=tuple(chosen[r] for r in rows)
    )


@dataclass(frozen=True)
class PhiSpec:
    """Nondecreasing integer target function with phi(0) = 0 and
    phi(n) >= n, either a named built-in or an explicit value list."""

    name: str
    values: tuple[int, ...] | None = None

    BUILTINS = ("identity", "double", "square")

    def __call__(self, n: int) -> int:
        if self.values is not None:
            if n >= len(self.values):
                raise TableError(f"phi value list has no entry for n={n}")
            return self.values[n]
        if self.name == "identity":
            return n
        if self.name == "double":
            return 2 * n
        if self.name == "square":
            return n * n
        raise TableError(f"unknown phi builtin {self.name!r}")

    def check(self, n_max: int) -> None:
        if self(0) != 0:
            raise TableError(f"phi(0) must be 0, got {self(0)}")
        prev = 0
        for n in range(1, n_max + 1):
            value = self(n)
            if value < n:
                raise TableError(f"phi({n})={value} is below n")
            if value < prev:
                raise TableError(f"phi is not nondecreasing at n={n}")
            prev = value

    @classmethod
    def named(cls, name: str) -> "PhiSpec":
        if name not in cls.BUILTINS:
            raise TableError(f"unknown phi builtin {name!r}; choose from {cls.BUILTINS}")
        return cls(name=name)

    @classmethod
    def from_values(cls, values: Iterable[int]) -> "PhiSpec":
        return cls(name="list", values=tuple(int(v) for v in values))


def gen_qn(n: int, phi: PhiSpec) -> tuple[DecisionTable, dict[str, int]]:
    """Diagonal table whose weighted-sum complexities are pinned to
    (nondeterministic, deterministic) = (n, phi(n)).

    With phi(n) = n*m + j (0 <= j < n) the table is the identity pattern
    on m+2 rows and columns with singleton labels; the first column
    weighs j and the rest weigh n.  When j = 0 the first row and column
    are dropped.  Attribute names are fresh per n so tables for
    different n never share columns.
    """
    if n < 1:
        raise TableError(f"n must be positive, got {n}")
    phi.check(n)
    total = phi(n)
    m, j = divmod(total, n)
    size = m + 2
    base = 1000 * n
    attrs = tuple(f"f{base + t}" for t in range(1, size + 1))
    rows = tuple(
        tuple(1 if c == r else 0 for c in range(size)) for r in range(size)
    )
    decisions = tuple(frozenset({r + 1}) for r in range(size))
    weights = {attrs[0]: j if j > 0 else n}
    for a in attrs[1:]:
        weights[a] = n
    table = DecisionTable(k=2, attrs=attrs, rows=rows, decisions=decisions)
    if j == 0:
        table = DecisionTable(
            k=2,
            attrs=attrs[1:],
            rows=tuple(r[1:] for r in rows[1:]),
            decisions=decisions[1:],
        )
        weights = {a: n for a in attrs[1:]}
    return table, weights


def gen_threshold(
    thresholds: Iterable[int], relabel: DecisionMap | None = None
) -> DecisionTable:
    """Step-pattern table of threshold attributes on the real line.

    Attribute f_i maps a to 0 below i and 1 from i on.  One row per
    interval between consecutive thresholds (plus the two outer rays),
    generated from interval representatives rather than sampled reals.
    Default labels are the row indexes.
    """
    ts = sorted(set(int(t) for t in thresholds))
    if not ts:
        raise TableError("at least one threshold is required")
    if ts[0] < 1:
        raise TableError(f"thresholds must be positive integers, got {ts[0]}")
    attrs = tuple(f"f{t}" for t in ts)
    rows = []
    decisions = []
    for step in range(len(ts) + 1):
        rows.append(tuple(1 if pos < step else 0 for pos in range(len(ts))))
        decisions.append(frozenset({step}))
    table = DecisionTable(k=2, attrs=attrs, rows=tuple(rows), decisions=tuple(decisions))
    if relabel is not None:
        decisions = tuple(relabel(row) for row in table.rows)
        table = DecisionTable(k=2, attrs=attrs, rows=table.rows, decisions=decisions)
    return table


def gen_random(
    seed: int,
    cols: int,
    rows: int,
    k: int = 2,
    decision_universe: Sequence[int] = (0, 1, 2, 3),
    limits: Limits | None = None,
) -> DecisionTable:
    """Seeded random table; identical arguments give identical tables."""
    lim = resolve(limits)
    if cols < 1 or rows < 1:
        raise TableError("need at least one column and one row")
    if cols > lim.max_cols or rows > lim.max_rows:
        raise ResourceLimitError(
            f"{cols} columns / {rows} rows beyond max_cols={lim.max_cols}/max_rows={lim.max_rows}",
            "max_rows", lim.max_rows,
        )
    space = k**cols
    if rows > space:
        raise TableError(f"{rows} distinct rows do not fit in E_{k}^{cols}")
    universe = sorted(set(decision_universe))
    if not universe:
        raise TableError("decision universe is empty")
    rng = random.Random(seed)
    picks = sorted(rng.sample(range(space), rows))
    table_rows = []
    for code in picks:
        digits = []
        for _ in range(cols):
            code, digit = divmod(code, k)
            digits.append(digit)
        table_rows.append(tuple(reversed(digits)))
    decisions = []
    for _ in range(rows):
        size = rng.randint(1, min(3, len(universe)))
        decisions.append(frozenset(rng.sample(universe, size)))
    attrs = tuple(f"f{i}" for i in range(cols))
    return DecisionTable(k=k, attrs=attrs, rows=tuple(table_rows), decisions=tuple(decisions))


FAMILY_NAMES = ("t0", "tk", "tkstar", "qn", "threshold", "random")


def gen_family(name: str, limits: Limits | None = None, **params):
    """Dispatch a family by name; returns (table, weights-or-None)."""
    if name == "t0":
        return gen_t0(), None
    if name == "tk":
        return gen_tk(params["k"], limits), None
    if name == "tkstar":
        return gen_tkstar(params["k"], limits), None
    if name == "qn":
        table, weights = gen_qn(params["n"], params["phi"])
        return table, weights
    if name == "threshold":
        return gen_threshold(params["thresholds"], params.get("relabel")), None
    if name == "random":
        return (
            gen_random(
                params["seed"],
                params["cols"],
                params["rows"],
                params.get("k", 2),
                params.get("decision_universe", (0, 1, 2, 3)),
                limits,
            ),
            None,
        )
    raise TableError(f"unknown family {name!r}; choose from {FAMILY_NAMES}")


# ---------------------------------------------------------------------
# Small helpers tied to the families
# ---------------------------------------------------------------------


def r_param(table: DecisionTable) -> int:
    """Number of distinct decision sets among the rows; 0 for the empty table."""
    return len(set(table.decisions))


def h_step(d_values: Iterable[int], n: int) -> int:
    """Step function of a sorted value set: 0 below the smallest value,
    otherwise the largest value not exceeding n.  Beyond the largest
    known value the largest one is used (the set is an explicit finite
    prefix of an unbounded one).
    """
    values = sorted(set(int(v) for v in d_values))
    if not values:
        raise TableError("the value set must not be empty")
    if n < values[0]:
        return 0
    best = values[0]
    for v in values:
        if v <= n:
            best = v
        else:
            break
    return best
