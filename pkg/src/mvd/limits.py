"""Size and search caps shared by the exact solvers and parameter searches.

Every cap can be overridden per call or through the MVD_LIMITS environment
variable (comma-separated ``name=value`` pairs, e.g.
``MVD_LIMITS=max_memo=1000000,max_cols=12``).
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace

from .errors import FormatError


@dataclass(frozen=True)
class Limits:
    max_cols: int = 24           # widest table accepted by the solvers
    max_rows: int = 4096         # tallest table accepted by the solvers
    max_memo: int = 5_000_000    # memoized subtables in one solve call
    max_words: int = 200_000     # coverage-distinct words kept per budget search
    max_bb_nodes: int = 1_000_000  # search nodes in branch-and-bound / DFS passes
    max_tuples: int = 1 << 20    # tuples enumerated for whole-space certificate maxima


DEFAULT = Limits()

_FIELD_NAMES = {f.name for f in fields(Limits)}


def resolve(limits: Limits | None) -> Limits:
    return default_limits() if limits is None else limits


def default_limits() -> Limits:
    """Defaults, with MVD_LIMITS overrides applied when the variable is set."""
    spec = os.environ.get("MVD_LIMITS", "")
    if not spec.strip():
        return DEFAULT
    return parse_limits(spec, base=DEFAULT)


def parse_limits(spec: str, base: Limits = DEFAULT) -> Limits:
    overrides: dict[str, int] = {}
    for item in spec.split(","):
        item = item.strip()
        if not item:
            continue
        name, _, value = item.partition("=")
        name = name.strip()
        if name not in _FIELD_NAMES:
            raise FormatError(f"unknown limit name {name!r} in MVD_LIMITS")
        try:
            overrides[name] = int(value)
        except ValueError:
            raise FormatError(f"limit {name!r} needs an integer, got {value!r}") from None
    return replace(base, **overrides)
