"""Complexity measures on words, attribute sets, and decision trees.

Three kinds are supported, all factored through positive integer
per-attribute weights:

* ``depth``        -- every attribute costs 1; the cost of a word is its length.
* ``weighted-sum`` -- the cost of a word is the sum of its attributes' weights.
* ``weighted-max`` -- the cost of a word is the largest weight involved.

Depth and weighted-sum are bounded (cost of a word is at least its
length); weighted-max is only partially bounded and is rejected by every
operation that requires a bounded measure.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .errors import MeasureError, UnboundedMeasureError
from .table import Assignment, DecisionTable
from .tree import DecisionTree, complete_paths

DEPTH = "depth"
WSUM = "wsum"
WMAX = "wmax"

_KINDS = (DEPTH, WSUM, WMAX)


@dataclass(frozen=True)
class Measure:
    kind: str
    weight_items: tuple[tuple[str, int], ...] | None = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise MeasureError(f"unknown measure kind {self.kind!r}")
        if self.kind == DEPTH:
            if self.weight_items is not None:
                raise MeasureError("the depth measure carries no weights")
            return
        if self.weight_items is None:
            raise MeasureError(f"{self.kind} measure needs attribute weights")
        items = tuple(sorted((str(a), int(w)) for a, w in self.weight_items))
        for attr, w in items:
            if w < 1:
                raise MeasureError(f"weight of {attr!r} must be a positive integer, got {w}")
        object.__setattr__(self, "weight_items", items)

    @classmethod
    def depth(cls) -> "Measure":
        return cls(DEPTH)

    @classmethod
    def weighted_sum(cls, weights: Mapping[str, int]) -> "Measure":
        return cls(WSUM, tuple(weights.items()))

    @classmethod
    def weighted_max(cls, weights: Mapping[str, int]) -> "Measure":
        return cls(WMAX, tuple(weights.items()))

    @cached_property
    def weights(self) -> dict[str, int]:
        return dict(self.weight_items or ())

    @property
    def bounded(self) -> bool:
        """Whether the cost of every word is at least its length."""
        return self.kind != WMAX

    def weight(self, attr: str) -> int:
        if self.kind == DEPTH:
            return 1
        try:
            return self.weights[attr]
        except KeyError:
            raise MeasureError(f"no weight defined for attribute {attr!r}") from None

    def describe(self) -> str:
        return self.kind


def require_bounded(measure: Measure) -> None:
    if not measure.bounded:
        raise UnboundedMeasureError(
            "bounded measure required: weighted-max is only partially bounded"
        )


def eval_word(measure: Measure, a: Assignment) -> int:
    """Cost of a canonical word; the empty word always costs 0."""
    if not a.letters:
        return 0
    costs = [measure.weight(attr) for attr, _ in a.letters]
    return max(costs) if measure.kind == WMAX else sum(costs)


def eval_attr_set(measure: Measure, attrs: Iterable[str]) -> int:
    """Cost of an attribute set; equals eval_word on any word using it."""
    names = set(attrs)
    if not names:
        return 0
    costs = [measure.weight(attr) for attr in names]
    return max(costs) if measure.kind == WMAX else sum(costs)


def eval_tree(measure: Measure, tree: DecisionTree) -> int:
    """Largest word cost over the tree's complete paths."""
    return max(eval_word(measure, path.word) for path in complete_paths(tree))


def m_psi(measure: Measure, table: DecisionTable) -> int:
    """Largest single-attribute cost in the table; 0 for the empty table."""
    if table.is_empty:
        return 0
    return max(measure.weight(attr) for attr in table.attrs)
