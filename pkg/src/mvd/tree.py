"""k-decision trees: structure, validity against a table, and export.

A tree has an unlabeled root with one or more unlabeled outgoing edges,
inner nodes labeled with attributes whose outgoing edges carry values,
and terminal nodes labeled with a single decision.  A complete path
contributes the word of (attribute, value) letters read off its inner
nodes; the path straight from the root to a terminal contributes the
empty word.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Union

from .errors import TreeError
from .table import Assignment, DecisionTable


@dataclass(frozen=True)
class Terminal:
    decision: int

    def __post_init__(self):
        if self.decision < 0:
            raise TreeError(f"terminal decision must be nonnegative, got {self.decision}")


@dataclass(frozen=True)
class Inner:
    attr: str
    branches: tuple[tuple[int, "Node"], ...]

    def __post_init__(self):
        if not self.branches:
            raise TreeError(f"inner node {self.attr!r} has no branches")


Node = Union[Terminal, Inner]


@dataclass(frozen=True)
class DecisionTree:
    """Root node with its unlabeled outgoing edges (one per child)."""

    children: tuple[Node, ...]

    def __post_init__(self):
        if not self.children:
            raise TreeError("a decision tree has at least two nodes")

    @classmethod
    def leaf(cls, decision: int) -> "DecisionTree":
        return cls((Terminal(decision),))

    @classmethod
    def chain(cls, letters: Iterable[tuple[str, int]], decision: int) -> "DecisionTree":
        """Single branch testing the letters in order, ending in a terminal."""
        node: Node = Terminal(decision)
        for attr, value in reversed(list(letters)):
            node = Inner(attr, ((value, node),))
        return cls((node,))

    @property
    def attrs(self) -> frozenset[str]:
        found: set[str] = set()
        stack: list[Node] = list(self.children)
        while stack:
            node = stack.pop()
            if isinstance(node, Inner):
                found.add(node.attr)
                stack.extend(child for _, child in node.branches)
        return frozenset(found)


@dataclass(frozen=True)
class CompletePath:
    """Canonical word of one root-to-terminal path plus its decision.

    ``contradictory`` marks paths that test one attribute with two
    different values; their subtable is empty in any table.
    """

    word: Assignment
    decision: int
    contradictory: bool = False


def complete_paths(tree: DecisionTree) -> list[CompletePath]:
    """All complete paths in depth-first order with edges in stored order.

    Letters repeating an attribute with the same value collapse; a repeat
    with a different value flags the path as contradictory.
    """
    paths: list[CompletePath] = []

    def walk(node: Node, letters: list[tuple[str, int]]) -> None:
        if isinstance(node, Terminal):
            word, contradictory = Assignment.from_word(letters)
            paths.append(CompletePath(word, node.decision, contradictory))
            return
        for value, child in node.branches:
            letters.append((node.attr, value))
            walk(child, letters)
            letters.pop()

    for child in tree.children:
        walk(child, [])
    return paths


def validate_tree(tree: DecisionTree, table: DecisionTable, mode: str) -> list[str]:
    """Check the tree against the table; an empty list means it is valid.

    Deterministic mode additionally requires a single root edge and
    pairwise distinct edge values at every inner node.  Every violation
    is collected; nothing aborts early.
    """
    if mode not in ("deterministic", "nondeterministic"):
        raise TreeError(f"unknown validation mode {mode!r}")
    if table.is_empty:
        raise TreeError("no tree is defined for the empty table")

    violations: list[str] = []
    foreign = sorted(tree.attrs - set(table.attrs))
    if foreign:
        violations.append(f"tree tests attributes not in the table: {foreign}")

    if mode == "deterministic":
        if len(tree.children) != 1:
            violations.append(f"root out-degree is {len(tree.children)}, expected 1")
        stack: list[tuple[Node, str]] = [(c, "root") for c in tree.children]
        while stack:
            node, where = stack.pop()
            if isinstance(node, Inner):
                values = [v for v, _ in node.branches]
                if len(set(values)) != len(values):
                    violations.append(f"node {node.attr!r} under {where} repeats an edge value")
                stack.extend((child, f"{where}/{node.attr}={v}") for v, child in node.branches)

    if foreign:
        violations.append("row coverage and path decisions not checked: unknown attributes")
        return violations

    covered = 0
    for path in complete_paths(tree):
        mask = 0 if path.contradictory else table.row_mask(path.word)
        covered |= mask
        if mask:
            common = table.common_of_mask(mask)
            if path.decision not in common:
                violations.append(
                    f"path [{path.word}] ends with decision {path.decision}, "
                    f"not common for its subtable (common: {sorted(common)})"
                )
    missing = table.all_rows_mask & ~covered
    for i in table.mask_indices(missing):
        violations.append(f"row {i} {table.rows[i]} is not covered by any complete path")
    return violations


# ---------------------------------------------------------------------
# Export / import
# ---------------------------------------------------------------------

TREE_SCHEMA = "mvd-tree/1"


def _node_to_obj(node: Node):
    if isinstance(node, Terminal):
        return {"decision": node.decision}
    return {
        "test": node.attr,
        "branches": [[value, _node_to_obj(child)] for value, child in node.branches],
    }


def tree_to_obj(tree: DecisionTree) -> dict:
    return {"schema": TREE_SCHEMA, "children": [_node_to_obj(c) for c in tree.children]}


def _node_from_obj(obj) -> Node:
    if not isinstance(obj, dict):
        raise TreeError(f"bad tree node: {obj!r}")
    if "decision" in obj:
        return Terminal(int(obj["decision"]))
    if "test" in obj:
        branches = tuple(
            (int(value), _node_from_obj(child)) for value, child in obj.get("branches", [])
        )
        return Inner(str(obj["test"]), branches)
    raise TreeError(f"bad tree node: {obj!r}")


def tree_from_obj(obj: dict) -> DecisionTree:
    if not isinstance(obj, dict) or "children" not in obj:
        raise TreeError("structured tree needs a 'children' list")
    return DecisionTree(tuple(_node_from_obj(c) for c in obj["children"]))


def import_tree(text: str) -> DecisionTree:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TreeError(f"structured tree is not valid JSON: {exc}") from None
    return tree_from_obj(obj)


def export_tree(tree: DecisionTree, fmt: str = "dot") -> str:
    """DOT digraph or structured JSON text.

    Node numbering follows depth-first traversal, so the DOT output is
    stable for a given tree.  The structured form round-trips through
    ``import_tree``.
    """
    if fmt == "structured":
        return json.dumps(tree_to_obj(tree), indent=2, sort_keys=True)
    if fmt != "dot":
        raise TreeError(f"unknown export format {fmt!r}")

    lines = ["digraph decision_tree {", '  n0 [shape=point];']
    counter = [0]

    def emit(node: Node) -> str:
        counter[0] += 1
        name = f"n{counter[0]}"
        if isinstance(node, Terminal):
            lines.append(f'  {name} [shape=box, label="{node.decision}"];')
            return name
        lines.append(f'  {name} [label="{node.attr}"];')
        for value, child in node.branches:
            child_name = emit(child)
            lines.append(f'  {name} -> {child_name} [label="{value}"];')
        return name

    for child in tree.children:
        child_name = emit(child)
        lines.append(f"  n0 -> {child_name};")
    lines.append("}")
    return "\n".join(lines)
