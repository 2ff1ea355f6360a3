"""Decision tables with many-valued decisions and the operations that
generate their closure.

A table is a rectangular array over E_k = {0..k-1} whose rows are pairwise
distinct tuples, each labeled with a nonempty finite set of integer
decisions.  Three operations matter: restriction of the rows by an
assignment of values to attributes, removal of columns (keeping the first
row of every group that becomes equal), and relabeling of the decision
sets.  The empty table (zero rows, zero columns) is a legal value and is
degenerate by convention.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Mapping, Sequence

from .errors import TableError

# Decisions are nonnegative integers up to this bound.
MAX_DECISION = 2**32 - 1

_TRAILING_INT = re.compile(r"(\d+)$")


def attr_index(name: str) -> int | None:
    """Trailing integer index of an attribute name ('f12' -> 12)."""
    m = _TRAILING_INT.search(name)
    return int(m.group(1)) if m else None


def attr_sort_key(name: str):
    """Sort key: numeric index first, falling back to the raw name."""
    idx = attr_index(name)
    return (0, idx, name) if idx is not None else (1, 0, name)


class _UniversalDecisions:
    """Common-decision set of the empty table: it contains every decision."""

    __slots__ = ()

    def __contains__(self, item) -> bool:
        return True

    def __bool__(self) -> bool:
        return True

    def __repr__(self) -> str:
        return "UNIVERSAL"


#: Marker returned by ``common_decisions`` for the empty table.
UNIVERSAL = _UniversalDecisions()


@dataclass(frozen=True)
class Assignment:
    """Canonical consistent word: (attribute, value) letters with pairwise
    distinct attributes.  Letter order never matters; the stored tuple is
    sorted by attribute index so equal assignments compare equal.
    """

    letters: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        canon = tuple(sorted(self.letters, key=lambda lv: attr_sort_key(lv[0])))
        seen = set()
        for attr, _value in canon:
            if attr in seen:
                raise TableError(f"assignment repeats attribute {attr!r}")
            seen.add(attr)
        object.__setattr__(self, "letters", canon)

    @classmethod
    def of(cls, letters: Iterable[tuple[str, int]]) -> "Assignment":
        return cls(tuple(letters))

    @staticmethod
    def from_word(letters: Iterable[tuple[str, int]]) -> tuple["Assignment", bool]:
        """Canonicalize a raw word.

        Duplicate letters collapse; two letters giving one attribute
        different values make the word contradictory (its subtable is
        empty).  Returns the assignment built from first-seen values and
        a flag that is True for contradictory words.
        """
        values: dict[str, int] = {}
        contradictory = False
        for attr, value in letters:
            if attr in values:
                if values[attr] != value:
                    contradictory = True
            else:
                values[attr] = value
        return Assignment.of(values.items()), contradictory

    @property
    def attrs(self) -> tuple[str, ...]:
        return tuple(a for a, _ in self.letters)

    def value(self, attr: str) -> int | None:
        for a, v in self.letters:
            if a == attr:
                return v
        return None

    def extended(self, attr: str, value: int) -> "Assignment":
        return Assignment(self.letters + ((attr, value),))

    def consistent_with(self, other: "Assignment") -> bool:
        mine = dict(self.letters)
        return all(mine.get(a, v) == v for a, v in other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "(empty)"
        return ",".join(f"{a}={v}" for a, v in self.letters)


EMPTY_WORD = Assignment()


@dataclass(frozen=True)
class DecisionMap:
    """Relabeling rule for row tuples: the nu of the decision-change
    operation.  Either an extensional lookup table, a fallback callable,
    or both (lookup first, callable for the rest).
    """

    name: str
    table: tuple[tuple[tuple[int, ...], frozenset[int]], ...] | None = None
    fn: Callable[[tuple[int, ...]], Iterable[int]] | None = field(default=None, compare=False)

    @cached_property
    def _lookup(self) -> dict[tuple[int, ...], frozenset[int]] | None:
        return dict(self.table) if self.table is not None else None

    def __call__(self, values: tuple[int, ...]) -> frozenset[int]:
        if self._lookup is not None and values in self._lookup:
            result = self._lookup[values]
        elif self.fn is not None:
            result = frozenset(self.fn(values))
        else:
            raise TableError(f"decision map {self.name!r} undefined on row {values}")
        result = frozenset(result)
        if not result:
            raise TableError(f"decision map {self.name!r} maps {values} to the empty set")
        return result

    @classmethod
    def from_dict(cls, mapping: Mapping[tuple[int, ...], Iterable[int]], name: str = "table") -> "DecisionMap":
        entries = tuple(sorted((tuple(k), frozenset(v)) for k, v in mapping.items()))
        return cls(name=name, table=entries)

    @classmethod
    def constant(cls, decisions: Iterable[int]) -> "DecisionMap":
        fixed = frozenset(decisions)
        return cls(name=f"constant{sorted(fixed)}", fn=lambda _values: fixed)

    @classmethod
    def min_max(cls) -> "DecisionMap":
        return cls(name="min_max", fn=lambda values: {min(values), max(values)})

    @classmethod
    def identity_of(cls, table: "DecisionTable") -> "DecisionMap":
        """Extensional map reproducing the table's current labels."""
        return cls.from_dict(dict(zip(table.rows, table.decisions)), name="identity")


def _as_decision_set(value, where: str) -> frozenset[int]:
    result = frozenset(value)
    if not result:
        raise TableError(f"{where}: decision set is empty")
    for d in result:
        if not isinstance(d, int) or isinstance(d, bool) or d < 0 or d > MAX_DECISION:
            raise TableError(f"{where}: bad decision {d!r}")
    return result


@dataclass(frozen=True)
class DecisionTable:
    """Immutable decision table with many-valued decisions.

    ``attrs`` carries the column order; ``rows[i]`` is the value tuple of
    row i and ``decisions[i]`` its decision set.  Row order is significant
    only for the keep-the-first rule of column removal.
    """

    k: int
    attrs: tuple[str, ...]
    rows: tuple[tuple[int, ...], ...]
    decisions: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.k < 2:
            raise TableError(f"alphabet size must be at least 2, got {self.k}")
        attrs = tuple(str(a) for a in self.attrs)
        if len(set(attrs)) != len(attrs):
            raise TableError("attribute names are not pairwise distinct")
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        decisions = tuple(
            _as_decision_set(d, f"row {i}") for i, d in enumerate(self.decisions)
        )
        if len(rows) != len(decisions):
            raise TableError("row count and decision count differ")
        if rows and not attrs:
            raise TableError("zero-column table must have zero rows")
        seen: dict[tuple[int, ...], int] = {}
        for i, row in enumerate(rows):
            if len(row) != len(attrs):
                raise TableError(f"row {i} has {len(row)} values, expected {len(attrs)}")
            for v in row:
                if v < 0 or v >= self.k:
                    raise TableError(f"row {i}: value {v} outside E_{self.k}")
            if row in seen:
                raise TableError(f"duplicate row: row {i} repeats row {seen[row]}")
            seen[row] = i
        object.__setattr__(self, "attrs", attrs)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "decisions", decisions)

    @classmethod
    def build(
        cls,
        k: int,
        attrs: Sequence[str],
        labeled_rows: Iterable[tuple[Sequence[int], Iterable[int]]],
    ) -> "DecisionTable":
        rows = []
        decs = []
        for values, decisions in labeled_rows:
            rows.append(tuple(values))
            decs.append(frozenset(decisions))
        return cls(k=k, attrs=tuple(attrs), rows=tuple(rows), decisions=tuple(decs))

    @classmethod
    def empty(cls, k: int = 2) -> "DecisionTable":
        return cls(k=k, attrs=(), rows=(), decisions=())

    # -- basic shape -------------------------------------------------

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.attrs)

    @property
    def is_empty(self) -> bool:
        return not self.rows

    @cached_property
    def attr_pos(self) -> dict[str, int]:
        return {a: i for i, a in enumerate(self.attrs)}

    # -- bitmask machinery -------------------------------------------

    @cached_property
    def all_rows_mask(self) -> int:
        return (1 << self.n_rows) - 1

    @cached_property
    def value_masks(self) -> dict[tuple[str, int], int]:
        """Bitmask of rows holding each (attribute, value) pair."""
        masks = {(a, v): 0 for a in self.attrs for v in range(self.k)}
        for i, row in enumerate(self.rows):
            bit = 1 << i
            for a, v in zip(self.attrs, row):
                masks[(a, v)] |= bit
        return masks

    def row_mask(self, a: Assignment) -> int:
        """Bitmask of rows satisfying every letter of the assignment."""
        mask = self.all_rows_mask
        vm = self.value_masks
        for attr, value in a.letters:
            if attr not in self.attr_pos:
                raise TableError(f"unknown attribute {attr!r}")
            if value < 0 or value >= self.k:
                raise TableError(f"value {value} outside E_{self.k} for {attr!r}")
            mask &= vm[attr, value]
        return mask

    def mask_indices(self, mask: int) -> list[int]:
        out = []
        while mask:
            low = mask & -mask
            out.append(low.bit_length() - 1)
            mask ^= low
        return out

    def common_of_mask(self, mask: int):
        """Intersection of the decision sets of the rows in ``mask``.

        Returns UNIVERSAL for the empty mask, a (possibly empty)
        frozenset otherwise.
        """
        if mask == 0:
            return UNIVERSAL
        result: frozenset[int] | None = None
        while mask:
            low = mask & -mask
            i = low.bit_length() - 1
            mask ^= low
            result = self.decisions[i] if result is None else result & self.decisions[i]
            if not result:
                return frozenset()
        return result

    def select_rows(self, mask: int) -> "DecisionTable":
        """Subtable keeping the rows of ``mask`` (columns unchanged)."""
        idx = self.mask_indices(mask)
        return DecisionTable(
            k=self.k,
            attrs=self.attrs,
            rows=tuple(self.rows[i] for i in idx),
            decisions=tuple(self.decisions[i] for i in idx),
        )


# ---------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------


def subtable(table: DecisionTable, a: Assignment) -> DecisionTable:
    """Rows of ``table`` satisfying every letter of ``a``; columns kept.

    The empty assignment returns the table itself.  When no row matches,
    the result has zero rows but keeps the columns; every predicate treats
    it like the empty table.
    """
    for attr, _ in a.letters:
        if attr not in table.attr_pos:
            raise TableError(f"unknown attribute {attr!r}")
    if not a.letters:
        return table
    return table.select_rows(table.row_mask(a))


def remove_columns(table: DecisionTable, drop: Iterable[str]) -> DecisionTable:
    """Drop the named columns; among rows equal on the remaining columns
    keep the first one (in row order) with its original decision set.

    Dropping every column yields the empty table.
    """
    drop_set = frozenset(drop)
    unknown = drop_set - set(table.attrs)
    if unknown:
        raise TableError(f"unknown attributes: {sorted(unknown)}")
    if not drop_set:
        return table
    keep = [i for i, a in enumerate(table.attrs) if a not in drop_set]
    if not keep:
        return DecisionTable.empty(table.k)
    new_rows = []
    new_decs = []
    seen: set[tuple[int, ...]] = set()
    for row, dec in zip(table.rows, table.decisions):
        reduced = tuple(row[i] for i in keep)
        if reduced in seen:
            continue
        seen.add(reduced)
        new_rows.append(reduced)
        new_decs.append(dec)
    return DecisionTable(
        k=table.k,
        attrs=tuple(table.attrs[i] for i in keep),
        rows=tuple(new_rows),
        decisions=tuple(new_decs),
    )


def change_decisions(table: DecisionTable, relabel: DecisionMap) -> DecisionTable:
    """Relabel every row's decision set with ``relabel(row)``."""
    new_decs = tuple(relabel(row) for row in table.rows)
    return DecisionTable(k=table.k, attrs=table.attrs, rows=table.rows, decisions=new_decs)


def common_decisions(table: DecisionTable):
    """Intersection of the rows' decision sets; UNIVERSAL for the empty table."""
    return table.common_of_mask(table.all_rows_mask)


def is_degenerate(table: DecisionTable) -> bool:
    """True when the table is empty or some decision is common to all rows."""
    return table.is_empty or bool(common_decisions(table))


@dataclass(frozen=True)
class ClosureMember:
    """One element of the table closure, with the pair that produced it."""

    table: DecisionTable
    removed: frozenset[str]
    relabel: DecisionMap


def closure_sample(
    table: DecisionTable,
    pairs: Iterable[tuple[Iterable[str], DecisionMap]] | None = None,
    *,
    seed: int | None = None,
    count: int = 0,
    decision_universe: Sequence[int] = (0, 1, 2, 3),
) -> list[ClosureMember]:
    """Closure members J(nu, I(D, T)) for the requested (D, nu) pairs, or
    for ``count`` seeded random draws.

    Random draws pick D uniformly over column subsets and label each
    surviving row with a nonempty subset of ``decision_universe``.  The
    returned record replays deterministically:
    ``change_decisions(remove_columns(table, removed), relabel)``.
    """
    members: list[ClosureMember] = []
    if pairs is not None:
        for drop, relabel in pairs:
            drop_set = frozenset(drop)
            reduced = remove_columns(table, drop_set)
            members.append(ClosureMember(change_decisions(reduced, relabel), drop_set, relabel))
    if seed is not None:
        rng = random.Random(seed)
        universe = sorted(set(decision_universe))
        if not universe:
            raise TableError("decision universe is empty")
        for _ in range(count):
            drop_set = frozenset(a for a in table.attrs if rng.random() < 0.5)
            reduced = remove_columns(table, drop_set)
            mapping = {}
            for row in reduced.rows:
                size = rng.randint(1, len(universe))
                mapping[row] = frozenset(rng.sample(universe, size))
            relabel = DecisionMap.from_dict(mapping, name="seeded")
            members.append(ClosureMember(change_decisions(reduced, relabel), drop_set, relabel))
    return members
