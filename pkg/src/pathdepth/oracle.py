"""Closed-form expectations and the verification harness.

Every numbered result about the line/cycle path ideal families is encoded
as an exact value or a two-sided bound, and the harness compares the depth
and Stanley depth engines against them instance by instance.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field

from .betti import Field, RATIONALS, depth_quotient
from .graphs import cycle_ideal, line_ideal
from .ideals import MonomialIdeal
from .sdepth import stanley_depth


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def phi(n: int) -> int:
    """n - floor(n/4) - ceil(n/4), the value governing J_{n,3}."""
    if n < 3:
        raise ValueError("phi is defined for n >= 3")
    return n - n // 4 - ceil_div(n, 4)


@dataclass(frozen=True)
class Expectation:
    """Exact value (lo == hi) or inclusive bounds for a quantity."""

    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("empty expectation interval")

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    def contains(self, v: int) -> bool:
        return self.lo <= v <= self.hi


FAMILIES = ("line", "j2", "j3", "jn1", "jn2", "prop1", "max")


def expectation(family: str, n: int, quantity: str, m: int | None = None) -> Expectation:
    """The closed-form expectation for a family instance, if one is stated."""
    if quantity not in ("depth", "sdepth"):
        raise ValueError(f"unknown quantity {quantity!r}")
    if family == "line":
        if m is None or not 1 <= m <= n:
            raise ValueError("line family needs 1 <= m <= n")
        v = n + 1 - (n + 1) // (m + 1) - ceil_div(n + 1, m + 1)
        return Expectation(v, v)
    if family == "j2":
        if n < 3:
            raise ValueError("J_{n,2} needs n >= 3")
        v = ceil_div(n - 1, 3)
        if quantity == "depth" or n % 3 in (0, 2):
            return Expectation(v, v)
        return Expectation(v, ceil_div(n, 3))
    if family == "j3":
        if n < 3:
            raise ValueError("J_{n,3} needs n >= 3")
        v = phi(n)
        r = n % 4
        if quantity == "depth":
            return Expectation(v, v + 1) if r == 1 else Expectation(v, v)
        return Expectation(v, v) if r in (0, 3) else Expectation(v, v + 1)
    if family == "jn1":
        if n < 3:
            raise ValueError("J_{n,n-1} needs n >= 3")
        return Expectation(n - 2, n - 2)
    if family == "jn2":
        if n < 5:
            raise ValueError("J_{n,n-2} bounds are stated for n >= 5")
        return Expectation(n - 3, n - 2)
    if family == "prop1":
        if quantity != "sdepth":
            raise ValueError("only sdepth is stated for J_{n,3}/I_{n,3}")
        if n < 4:
            raise ValueError("J_{n,3}/I_{n,3} needs n >= 4")
        v = n + 1 - n // 4 - ceil_div(n, 4)
        return Expectation(v, v)
    if family == "max":
        if quantity != "sdepth":
            raise ValueError("only sdepth is stated for the maximal ideal")
        if n < 1:
            raise ValueError("maximal ideal needs n >= 1")
        v = ceil_div(n, 2)
        return Expectation(v, v)
    raise ValueError(f"unknown family {family!r}")


def family_module(family: str, n: int, m: int | None = None):
    """The (J, I) module pair of a family instance; J = S means S/I."""
    if family == "line":
        return MonomialIdeal.whole_ring(n), line_ideal(n, m)
    if family == "j2":
        return MonomialIdeal.whole_ring(n), cycle_ideal(n, 2)
    if family == "j3":
        return MonomialIdeal.whole_ring(n), cycle_ideal(n, 3)
    if family == "jn1":
        return MonomialIdeal.whole_ring(n), cycle_ideal(n, n - 1)
    if family == "jn2":
        return MonomialIdeal.whole_ring(n), cycle_ideal(n, n - 2)
    if family == "prop1":
        return cycle_ideal(n, 3), line_ideal(n, 3)
    if family == "max":
        return line_ideal(n, 1), MonomialIdeal.zero(n)
    raise ValueError(f"unknown family {family!r}")


MATCH = "MATCH"
WITHIN_BOUNDS = "WITHIN_BOUNDS"
VIOLATION = "VIOLATION"
SKIPPED = "SKIPPED"


@dataclass
class Row:
    family: str
    n: int
    m: int | None
    quantity: str
    expected_lo: int | None
    expected_hi: int | None
    computed: int | None
    status: str
    elapsed: float
    note: str = ""

    def sort_key(self):
        return (self.family, self.n, self.m if self.m is not None else -1,
                self.quantity)


@dataclass
class VerificationReport:
    rows: list[Row] = field(default_factory=list)

    @property
    def has_violation(self) -> bool:
        return any(r.status == VIOLATION for r in self.rows)

    def sorted_rows(self):
        return sorted(self.rows, key=Row.sort_key)

    def to_json_obj(self):
        return [
            {"family": r.family, "n": r.n, "m": r.m, "quantity": r.quantity,
             "expected": [r.expected_lo, r.expected_hi], "computed": r.computed,
             "status": r.status, "elapsed": round(r.elapsed, 4), "note": r.note}
            for r in self.sorted_rows()
        ]

    def to_csv_lines(self):
        out = ["family,n,m,quantity,expected_lo,expected_hi,computed,status,elapsed,note"]
        for r in self.sorted_rows():
            out.append(",".join(str(x if x is not None else "") for x in
                                (r.family, r.n, r.m, r.quantity, r.expected_lo,
                                 r.expected_hi, r.computed, r.status,
                                 f"{r.elapsed:.4f}", r.note)))
        return out

    def to_table_lines(self):
        out = [f"{'family':8} {'n':>3} {'m':>3} {'quantity':18} "
               f"{'expected':>10} {'computed':>8} {'status':14} note"]
        for r in self.sorted_rows():
            if r.expected_lo is None:
                exp = "-"
            elif r.expected_lo == r.expected_hi:
                exp = str(r.expected_lo)
            else:
                exp = f"[{r.expected_lo},{r.expected_hi}]"
            out.append(f"{r.family:8} {r.n:>3} {str(r.m or ''):>3} "
                       f"{r.quantity:18} {exp:>10} "
                       f"{str(r.computed if r.computed is not None else ''):>8} "
                       f"{r.status:14} {r.note}")
        return out


# default desk-scale caps for the harness
DEPTH_N_CAP = 12
SDEPTH_N_CAP = 9


def _family_m(family: str, n: int, m: int | None) -> int | None:
    if family == "line":
        return m
    if family == "j2":
        return 2
    if family == "j3":
        return 3
    if family == "jn1":
        return n - 1
    if family == "jn2":
        return n - 2
    return None


def compute_row(family: str, n: int, m: int | None, quantity: str,
                field_choice: Field = RATIONALS,
                node_budget: int | None = None) -> Row:
    """Evaluate one harness row: compute, compare, classify."""
    start = time.perf_counter()
    exp = expectation(family, n, quantity, m=m)
    j_ideal, i_ideal = family_module(family, n, m)
    note = ""
    if quantity == "depth":
        computed = depth_quotient(i_ideal, field_choice)
    else:
        res = stanley_depth(j_ideal, i_ideal, node_budget=node_budget)
        if not res.exact:
            return Row(family, n, _family_m(family, n, m), quantity,
                       exp.lo, exp.hi, res.sdepth, SKIPPED,
                       time.perf_counter() - start,
                       f"budget exhausted; sdepth >= {res.sdepth}")
        computed = res.sdepth
    if exp.exact:
        status = MATCH if computed == exp.lo else VIOLATION
    elif exp.contains(computed):
        status = WITHIN_BOUNDS
        note = f"new data point: exact value {computed}"
    else:
        status = VIOLATION
    return Row(family, n, _family_m(family, n, m), quantity,
               exp.lo, exp.hi, computed, status,
               time.perf_counter() - start, note)


def _suite_instances(suite: str, n_min: int, n_max: int):
    """(family, n, m, quantities) tuples for a suite selection."""
    out = []
    for n in range(n_min, n_max + 1):
        if suite in ("all", "line"):
            for m in range(2, n + 1):
                out.append(("line", n, m, ("depth", "sdepth")))
        if suite in ("all", "j2") and n >= 3:
            out.append(("j2", n, 2, ("depth", "sdepth")))
        if suite in ("all", "j3") and n >= 4:
            out.append(("j3", n, 3, ("depth", "sdepth")))
        if suite in ("all", "jn1") and n >= 3:
            out.append(("jn1", n, n - 1, ("depth", "sdepth")))
        if suite in ("all", "jn2") and n >= 5:
            out.append(("jn2", n, n - 2, ("depth", "sdepth")))
        if suite in ("all", "prop1") and n >= 4:
            out.append(("prop1", n, None, ("sdepth",)))
        if suite in ("all", "max") and n >= 2:
            out.append(("max", n, None, ("sdepth",)))
    return out


def _worker(args):
    family, n, m, quantity, field_choice, budget = args
    return compute_row(family, n, m, quantity, field_choice, budget)


def verify_suite(suite: str, n_min: int, n_max: int,
                 field_choice: Field = RATIONALS,
                 node_budget: int | None = None,
                 depth_n_cap: int = DEPTH_N_CAP,
                 sdepth_n_cap: int = SDEPTH_N_CAP,
                 threads: int | None = None) -> VerificationReport:
    """Run a family suite and compare both engines against the expectations."""
    instances = _suite_instances(suite, n_min, n_max)
    jobs = []
    skipped_rows = []
    for family, n, m, quantities in instances:
        for quantity in quantities:
            cap = depth_n_cap if quantity == "depth" else sdepth_n_cap
            if n > cap:
                exp = expectation(family, n, quantity, m=m)
                skipped_rows.append(Row(family, n, _family_m(family, n, m),
                                        quantity, exp.lo, exp.hi, None,
                                        SKIPPED, 0.0, f"n > cap {cap}"))
            else:
                jobs.append((family, n, m, quantity, field_choice, node_budget))
    if threads is None:
        threads = int(os.environ.get("PATHDEPTH_THREADS", "1"))
    if threads > 1 and len(jobs) > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(_worker, jobs))
    else:
        rows = [_worker(j) for j in jobs]
    report = VerificationReport(rows + skipped_rows)
    # Stanley inequality: sdepth >= depth wherever both were computed
    seen: dict[tuple, dict[str, int]] = {}
    for r in report.rows:
        if r.computed is not None and r.status != SKIPPED:
            seen.setdefault((r.family, r.n, r.m), {})[r.quantity] = r.computed
    for (family, n, m), vals in sorted(seen.items(),
                                       key=lambda kv: (kv[0][0], kv[0][1])):
        if "depth" in vals and "sdepth" in vals:
            ok = vals["sdepth"] >= vals["depth"]
            report.rows.append(Row(
                family, n, m, "stanley_inequality", None, None,
                vals["sdepth"] - vals["depth"],
                MATCH if ok else VIOLATION, 0.0,
                "sdepth - depth"))
    return report
