"""Executable checks for the bound, construction, and family properties,
plus empirical complexity profiles over finite table sets.

Every check record re-derives both of its sides from scratch so that a
solver bug cannot confirm itself; in particular the equality between the
nondeterministic optimum and the worst row certificate is checked
against a separate full enumeration of canonical words.  Profiles over
finite table sets are lower bounds for the corresponding class
functions and are flagged as such.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field

from .errors import MvdError, ResourceLimitError
from .families import PhiSpec, gen_qn, gen_threshold, gen_tk, gen_tkstar, r_param
from .limits import Limits, resolve
from .measure import Measure, eval_attr_set, m_psi
from .params import g_param, l_param, z_param
from .solve import m_param, psi_a, psi_d
from .table import (
    Assignment,
    DecisionMap,
    DecisionTable,
    change_decisions,
    is_degenerate,
    remove_columns,
    subtable,
)

LOG_SLACK = 1e-9  # the single non-integer comparison in the suite


@dataclass(frozen=True)
class CheckRecord:
    name: str          # stable identifier of the rule being checked
    relation: str      # the relation in readable form, e.g. "1 <= 2"
    subject: str       # inputs: table id, measure, budget
    passed: bool
    skipped: bool = False
    note: str = ""
    seconds: float = 0.0


@dataclass
class VerificationReport:
    records: list[CheckRecord] = field(default_factory=list)

    def add(self, record: CheckRecord) -> None:
        self.records.append(record)

    def extend(self, other: "VerificationReport") -> None:
        self.records.extend(other.records)

    def finalize(self) -> "VerificationReport":
        self.records.sort(key=lambda r: (r.name, r.subject))
        return self

    @property
    def ok(self) -> bool:
        return all(r.passed or r.skipped for r in self.records)

    @property
    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if not r.passed and not r.skipped]

    def render_text(self) -> str:
        lines = []
        for r in self.records:
            status = "skip" if r.skipped else ("pass" if r.passed else "FAIL")
            note = f"  ({r.note})" if r.note else ""
            lines.append(f"{status:4} {r.name:32} {r.subject:28} {r.relation}{note}")
        lines.append(f"{len(self.records)} checks, {len(self.failures)} failures")
        return "\n".join(lines)

    def to_obj(self) -> dict:
        return {
            "schema": "mvd-verify/1",
            "ok": self.ok,
            "records": [
                {
                    "name": r.name,
                    "relation": r.relation,
                    "subject": r.subject,
                    "passed": r.passed,
                    "skipped": r.skipped,
                    "note": r.note,
                }
                for r in self.records
            ],
        }


def _record(name, subject, passed, relation, note="", skipped=False, started=None) -> CheckRecord:
    seconds = time.perf_counter() - started if started is not None else 0.0
    return CheckRecord(
        name=name, relation=relation, subject=subject,
        passed=passed, skipped=skipped, note=note, seconds=seconds,
    )


class _SkipCheck(Exception):
    """Raised inside a check body when its preconditions do not apply."""


def _guarded(report, name, subject, fn) -> None:
    """Run one check; unmet preconditions and resource blowups become
    skipped records, never aborts."""
    started = time.perf_counter()
    try:
        passed, relation, note = fn()
        report.add(_record(name, subject, passed, relation, note, started=started))
    except _SkipCheck as exc:
        report.add(_record(name, subject, True, "-", str(exc), skipped=True, started=started))
    except ResourceLimitError as exc:
        report.add(_record(name, subject, True, "-", f"resource: {exc}", skipped=True, started=started))


# ---------------------------------------------------------------------
# Independent recomputation of the nondeterministic optimum
# ---------------------------------------------------------------------


def nondet_by_word_enumeration(table: DecisionTable, measure: Measure, limits: Limits | None = None) -> int:
    """Worst-row minimum word cost, by enumerating every canonical word.

    For each row, the cheapest word whose subtable contains the row and
    has a common decision; the maximum over rows.  This walks the whole
    (k+1)^columns word space and shares no code with the certificate
    search, which makes it a genuine cross-check on small tables.
    """
    lim = resolve(limits)
    if (table.k + 1) ** table.n_cols > lim.max_tuples:
        raise ResourceLimitError(
            f"word space beyond max_tuples={lim.max_tuples}", "max_tuples", lim.max_tuples
        )
    if table.is_empty or is_degenerate(table):
        return 0
    vm = table.value_masks
    cols = table.attrs
    weights = [measure.weight(a) for a in cols]
    best = [None] * table.n_rows  # per-row cheapest qualifying word cost

    def walk(ci: int, mask: int, cost: int) -> None:
        if mask == 0:
            return
        if ci == len(cols):
            if table.common_of_mask(mask):
                rest = mask
                while rest:
                    low = rest & -rest
                    i = low.bit_length() - 1
                    rest ^= low
                    if best[i] is None or cost < best[i]:
                        best[i] = cost
            return
        walk(ci + 1, mask, cost)
        for v in range(table.k):
            walk(ci + 1, mask & vm[cols[ci], v], cost + weights[ci])

    walk(0, table.all_rows_mask, 0)
    assert all(b is not None for b in best)  # each row's own full word qualifies
    return max(best)


# ---------------------------------------------------------------------
# Bound checks on a single table
# ---------------------------------------------------------------------


def check_bounds(
    table: DecisionTable,
    measure: Measure,
    limits: Limits | None = None,
    subject: str = "table",
) -> VerificationReport:
    """All six bound relations on one table.

    The shatter bound runs only for binary tables and the certificate
    lower bound only for the depth measure; outside those scopes the
    record is marked skipped.
    """
    lim = resolve(limits)
    report = VerificationReport()
    tag = f"{subject}/{measure.describe()}"

    def det_le_width():
        left = psi_d(table, measure, lim)
        right = eval_attr_set(measure, table.attrs)
        return left <= right, f"{left} <= {right}", ""

    def det_le_cert_log():
        left = psi_d(table, measure, lim)
        if table.is_empty or is_degenerate(table):
            return left == 0, f"{left} == 0", "degenerate"
        bound = m_param(table, measure, "all", lim) * math.log2(table.n_rows)
        return left <= bound + LOG_SLACK, f"{left} <= {bound:.6f}", ""

    def nondet_le_det():
        left = psi_a(table, measure, lim)
        right = psi_d(table, measure, lim)
        return left <= right, f"{left} <= {right}", ""

    def nondet_eq_row_certs():
        left = psi_a(table, measure, lim)
        right = nondet_by_word_enumeration(table, measure, lim)
        return left == right, f"{left} == {right}", "cross-checked by word enumeration"

    def rows_le_shatter_bound():
        if table.k != 2:
            raise _SkipCheck("binary tables only")
        if table.is_empty:
            return True, "0 rows", "empty"
        z, _ = z_param(table, lim)
        if z == 0:
            return table.n_rows <= 1, f"{table.n_rows} <= 1", "no shattered set"
        bound = (4 * table.n_cols) ** z
        return table.n_rows <= bound, f"{table.n_rows} <= {bound}", ""

    def det_ge_max_cert():
        if measure.kind != "depth":
            raise _SkipCheck("depth measure only")
        left = psi_d(table, measure, lim)
        right = m_param(table, measure, "all", lim)
        return left >= right, f"{left} >= {right}", ""

    _guarded(report, "det_le_width", tag, det_le_width)
    _guarded(report, "det_le_cert_log", tag, det_le_cert_log)
    _guarded(report, "nondet_le_det", tag, nondet_le_det)
    _guarded(report, "nondet_eq_row_certs", tag, nondet_eq_row_certs)
    _guarded(report, "rows_le_shatter_bound", tag, rows_le_shatter_bound)
    _guarded(report, "det_ge_max_cert", tag, det_ge_max_cert)
    return report.finalize()


# ---------------------------------------------------------------------
# Construction checks
# ---------------------------------------------------------------------


def check_construction(
    table: DecisionTable,
    measure: Measure,
    budget: int,
    which: str,
    limits: Limits | None = None,
    subject: str = "table",
) -> VerificationReport:
    """Explicit hard-table constructions and their promised complexities.

    ``cover_lift`` relabels the rows by their membership pattern in a
    largest irreducible cover: the result stays cheap nondeterministically
    (each cover word certifies its rows) but needs log_k(cover size)
    deterministically (a deterministic tree must tell the private rows
    apart).

    ``word_lift`` keeps only the columns of a longest irreducible
    annihilating word and relabels each row by the positions where it
    differs from the word's values: one query certifies any row, yet a
    deterministic tree must probe nearly every kept column.
    """
    lim = resolve(limits)
    report = VerificationReport()
    tag = f"{subject}/{measure.describe()}/n={budget}"

    if which == "m1":
        size, cover = l_param(table, measure, budget, lim)
        if size == 0 or cover is None:
            report.add(_record("cover_lift", tag, True, "-", "no cover available", skipped=True))
            return report.finalize()
        mapping = {}
        for idx, row in enumerate(table.rows):
            members = frozenset(
                j + 1 for j, rows in enumerate(cover.coverage) if idx in rows
            )
            mapping[row] = members
        relabel = DecisionMap(
            name="cover-membership",
            table=tuple(sorted(mapping.items())),
            fn=lambda _values: frozenset({0}),  # tuples outside the rows
        )
        lifted = change_decisions(table, relabel)

        def nondet_side():
            value = psi_a(lifted, measure, lim)
            return value <= budget, f"{value} <= {budget}", f"cover size {size}"

        def det_side():
            value = psi_d(lifted, measure, lim)
            bound = math.log(size, table.k)
            return value >= bound - LOG_SLACK, f"{value} >= {bound:.6f}", f"cover size {size}"

        _guarded(report, "cover_lift_nondet_within_budget", tag, nondet_side)
        _guarded(report, "cover_lift_det_ge_log_cover", tag, det_side)
        return report.finalize()

    if which == "m10":
        reasons = []
        if table.k != 2:
            reasons.append("binary tables only")
        if not table.is_empty and m_psi(measure, table) > budget:
            reasons.append(f"max attribute cost {m_psi(measure, table)} exceeds n={budget}")
        length, word = (0, None) if table.k != 2 else g_param(table, lim)
        if length == 0:
            reasons.append("no annihilating word")
        if reasons:
            report.add(_record("word_lift", tag, True, "-", "; ".join(reasons), skipped=True))
            return report.finalize()

        by_pos = sorted(word.letters, key=lambda lv: table.attr_pos[lv[0]])
        kept = [attr for attr, _ in by_pos]
        sigma = tuple(v for _, v in by_pos)
        reduced = remove_columns(table, set(table.attrs) - set(kept))

        def relabel_row(values: tuple[int, ...]) -> frozenset[int]:
            if values == sigma:
                return frozenset({0})
            return frozenset(i + 1 for i, (v, s) in enumerate(zip(values, sigma)) if v != s)

        lifted = change_decisions(reduced, DecisionMap(name="mismatch-positions", fn=relabel_row))

        def nondet_side():
            value = psi_a(lifted, measure, lim)
            return value <= budget, f"{value} <= {budget}", f"word length {length}"

        def depth_nondet_side():
            value = psi_a(lifted, Measure.depth(), lim)
            return value <= 1, f"{value} <= 1", ""

        def det_side():
            value = psi_d(lifted, measure, lim)
            return value >= length - 1, f"{value} >= {length - 1}", f"word length {length}"

        _guarded(report, "word_lift_nondet_within_budget", tag, nondet_side)
        _guarded(report, "word_lift_depth_nondet_le_1", tag, depth_nondet_side)
        _guarded(report, "word_lift_det_ge_len_minus_1", tag, det_side)
        return report.finalize()

    raise MvdError(f"unknown construction {which!r}; choose m1 or m10")


# ---------------------------------------------------------------------
# Family checks
# ---------------------------------------------------------------------


def check_families(
    which: str,
    *,
    max_k: int = 3,
    max_n: int = 4,
    phi: PhiSpec | None = None,
    threshold_sets: int = 10,
    max_thresholds: int = 6,
    seed: int = 20240601,
    limits: Limits | None = None,
) -> VerificationReport:
    """Family-level properties on concrete instances within the ranges."""
    lim = resolve(limits)
    report = VerificationReport()
    depth = Measure.depth()

    if which == "tk":
        for k in range(1, max_k + 1):
            tk = gen_tk(k, lim)
            tag = f"tk/k={k}"

            def nondet_le_3(tk=tk):
                value = psi_a(tk, depth, lim)
                return value <= 3, f"{value} <= 3", ""

            def det_ge_k_minus_1(tk=tk, k=k):
                value = psi_d(tk, depth, lim)
                return value >= k - 1, f"{value} >= {k - 1}", ""

            _guarded(report, "tk_nondet_le_3", tag, nondet_le_3)
            _guarded(report, "tk_det_ge_layers_minus_1", tag, det_ge_k_minus_1)

            star = gen_tkstar(k, lim)
            rng = random.Random(seed + k)
            chains: list[tuple[str, ...]] = [()]
            attrs = list(star.attrs)
            for n in range(1, len(attrs) + 1):
                chains.append(tuple(sorted(rng.sample(attrs, n))))

            def rule_counts(star=star, chains=chains, k=k):
                for chain in chains:
                    word = Assignment.of((a, 0) for a in chain)
                    sub = subtable(star, word)
                    if sub.is_empty:
                        continue
                    need = max(1, k - len(chain))
                    got = r_param(sub)
                    if got < need:
                        return False, f"{got} >= {need}", f"chain {list(chain)}"
                return True, f"all >= max(1, {k}-n)", f"{len(chains)} chains"

            _guarded(report, "tk_star_rule_count", tag, rule_counts)
        return report.finalize()

    if which == "qn":
        spec = phi or PhiSpec.named("identity")
        for n in range(1, max_n + 1):
            table, weights = gen_qn(n, spec)
            wsum = Measure.weighted_sum(weights)
            tag = f"qn/{spec.name}/n={n}"

            def nondet_eq(table=table, wsum=wsum, n=n):
                value = psi_a(table, wsum, lim)
                return value == n, f"{value} == {n}", ""

            def det_eq(table=table, wsum=wsum, n=n, spec=spec):
                value = psi_d(table, wsum, lim)
                return value == spec(n), f"{value} == {spec(n)}", ""

            _guarded(report, "qn_nondet_eq_n", tag, nondet_eq)
            _guarded(report, "qn_det_eq_phi", tag, det_eq)
        return report.finalize()

    if which == "threshold":
        rng = random.Random(seed)
        for case in range(threshold_sets):
            size = rng.randint(1, max_thresholds)
            thresholds = sorted(rng.sample(range(1, 50), size))
            table = gen_threshold(thresholds)
            tag = f"threshold/{thresholds}"

            def shatter(table=table):
                z, _ = z_param(table, lim)
                return z <= 1, f"{z} <= 1", ""

            def annihilate(table=table):
                g, _ = g_param(table, lim)
                return g <= 2, f"{g} <= 2", ""

            _guarded(report, "threshold_shatter_le_1", tag, shatter)
            _guarded(report, "threshold_annihilate_le_2", tag, annihilate)
        return report.finalize()

    raise MvdError(f"unknown family {which!r}; choose tk, qn or threshold")


# ---------------------------------------------------------------------
# Empirical profiles
# ---------------------------------------------------------------------


@dataclass
class ClassProfile:
    """Worst-case profiles over an explicit finite table set.

    ``h_emp[n]``: largest deterministic optimum among tables whose
    nondeterministic optimum is at most n.  ``l_emp[n]``: largest
    irreducible cover size at budget n.  ``z_emp[n]`` / ``g_emp[n]``:
    largest shattered set / annihilating word among tables whose single
    attributes all cost at most n.  Values are lower bounds for the
    matching functions of any class containing the set.
    """

    label: str
    measure: Measure
    n_max: int
    h_emp: list[int]
    l_emp: list[int]
    z_emp: list[int]
    g_emp: list[int]
    finite_lower_bound: bool = True
    partial: bool = False
    errors: list[str] = field(default_factory=list)

    def render_text(self) -> str:
        lines = [f"profile {self.label} measure={self.measure.describe()} (finite-set lower bounds)"]
        lines.append("n     H_emp  L_emp  Z_emp  G_emp")
        for n in range(self.n_max + 1):
            lines.append(
                f"{n:<5} {self.h_emp[n]:<6} {self.l_emp[n]:<6} {self.z_emp[n]:<6} {self.g_emp[n]:<6}"
            )
        for err in self.errors:
            lines.append(f"excluded: {err}")
        return "\n".join(lines)

    def to_obj(self) -> dict:
        return {
            "schema": "mvd-profile/1",
            "label": self.label,
            "measure": self.measure.describe(),
            "n_max": self.n_max,
            "h_emp": self.h_emp,
            "l_emp": self.l_emp,
            "z_emp": self.z_emp,
            "g_emp": self.g_emp,
            "finite_lower_bound": self.finite_lower_bound,
            "partial": self.partial,
            "errors": self.errors,
        }


def empirical_profile(
    tables: list[DecisionTable],
    measure: Measure,
    n_max: int,
    limits: Limits | None = None,
    label: str = "tables",
) -> ClassProfile:
    """Profile the four class functions over an explicit finite table set.

    Tables that exhaust a resource cap are excluded and reported; the
    profile is then flagged partial.  Maxima over an empty selection
    are 0.
    """
    lim = resolve(limits)
    stats = []
    errors: list[str] = []
    for i, table in enumerate(tables):
        try:
            entry = {
                "psi_a": psi_a(table, measure, lim),
                "psi_d": psi_d(table, measure, lim),
                "m_psi": m_psi(measure, table),
                "l": [l_param(table, measure, n, lim)[0] for n in range(n_max + 1)],
            }
            if table.k == 2:
                entry["z"] = z_param(table, lim)[0]
                entry["g"] = g_param(table, lim)[0]
            stats.append(entry)
        except ResourceLimitError as exc:
            errors.append(f"table {i}: {exc}")
    profile = ClassProfile(
        label=label,
        measure=measure,
        n_max=n_max,
        h_emp=[0] * (n_max + 1),
        l_emp=[0] * (n_max + 1),
        z_emp=[0] * (n_max + 1),
        g_emp=[0] * (n_max + 1),
        partial=bool(errors),
        errors=errors,
    )
    for n in range(n_max + 1):
        h_candidates = [e["psi_d"] for e in stats if e["psi_a"] <= n]
        profile.h_emp[n] = max(h_candidates, default=0)
        profile.l_emp[n] = max((e["l"][n] for e in stats), default=0)
        cheap = [e for e in stats if e["m_psi"] <= n and "z" in e]
        profile.z_emp[n] = max((e["z"] for e in cheap), default=0)
        profile.g_emp[n] = max((e["g"] for e in cheap), default=0)
    return profile
