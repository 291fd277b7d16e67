"""Verification campaigns: predicted vs exact dimension over many products."""

from __future__ import annotations

import csv
import io
import itertools
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .errors import HypothesisError, InadmissibleError
from .graph import build_total_graph, twin_partition, twin_pattern_mismatches
from .metric import (
    ORACLE_CAP,
    SOLVER_CAP,
    is_resolving,
    metric_dimension_exact,
    metric_dimension_oracle,
)
from .product import ProductSemiring, zero_divisor_masks
from .semiring import catalog
from .theory import classify_product, construct_witness, lower_bound

CSV_COLUMNS = (
    "product", "case", "m", "n_z", "z_count", "predicted", "exact",
    "oracle", "witness_ok", "bound_ok", "notes",
)

OK = "OK"
MISMATCH = "MISMATCH"
SKIPPED = "SKIPPED"
HYPOTHESIS_VIOLATION = "HYPOTHESIS_VIOLATION"
UNSUPPORTED = "UNSUPPORTED"


@dataclass
class CampaignRow:
    product: str
    status: str = OK
    case: str = ""
    m: int | None = None
    n_z: int | None = None
    z_count: int | None = None
    predicted: int | None = None
    exact: int | None = None
    oracle: int | None = None
    witness_ok: bool | None = None
    bound_ok: bool | None = None
    twin_ok: bool | None = None
    witness: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    seconds: float = 0.0


@dataclass
class CampaignReport:
    rows: list[CampaignRow]

    def count(self, status: str) -> int:
        return sum(r.status == status for r in self.rows)

    @property
    def mismatches(self) -> int:
        return self.count(MISMATCH)

    @property
    def exit_code(self) -> int:
        if self.count(MISMATCH) or self.count(HYPOTHESIS_VIOLATION):
            return 1
        if self.count(UNSUPPORTED):
            return 4
        return 0

    def summary(self) -> dict[str, int]:
        keys = (OK, MISMATCH, SKIPPED, HYPOTHESIS_VIOLATION, UNSUPPORTED)
        return {k: self.count(k) for k in keys} | {"total": len(self.rows)}

    def to_dict(self) -> dict:
        return {"rows": [asdict(r) for r in self.rows], "summary": self.summary()}

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in self.rows:
            notes = "; ".join([r.status] + r.notes)
            w.writerow([
                r.product, r.case, _cell(r.m), _cell(r.n_z), _cell(r.z_count),
                _cell(r.predicted), _cell(r.exact), _cell(r.oracle),
                _cell(r.witness_ok), _cell(r.bound_ok), notes,
            ])
        return buf.getvalue()

    def to_text(self) -> str:
        head = f"{'status':<21}{'product':<28}{'case':<12}{'m':>3}{'n_z':>4}{'|Z|':>5}{'pred':>6}{'exact':>6}{'orac':>6}  wit bnd twin"
        lines = [head, "-" * len(head)]
        for r in self.rows:
            flag = "!! " if r.status not in (OK, SKIPPED) else "   "
            lines.append(
                f"{flag}{r.status:<18}{r.product:<28}{r.case:<12}{_cell(r.m):>3}{_cell(r.n_z):>4}"
                f"{_cell(r.z_count):>5}{_cell(r.predicted):>6}{_cell(r.exact):>6}{_cell(r.oracle):>6}"
                f"  {_mark(r.witness_ok):<4}{_mark(r.bound_ok):<4}{_mark(r.twin_ok)}"
            )
            for note in r.notes:
                lines.append(f"       note: {note}")
        s = self.summary()
        lines.append("")
        lines.append("summary: " + ", ".join(f"{k}={v}" for k, v in s.items()))
        if s[MISMATCH] or s[UNSUPPORTED] or s[HYPOTHESIS_VIOLATION]:
            lines.append("!! campaign has failing rows")
        return "\n".join(lines) + "\n"


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def _mark(v) -> str:
    return {None: "-", True: "ok", False: "NO"}[v]


def verify_product(p: ProductSemiring, use_oracle: bool = True, strict: bool = False) -> CampaignRow:
    start = time.perf_counter()
    row = CampaignRow(product=p.name)
    try:
        c = classify_product(p, strict)
    except (HypothesisError, InadmissibleError) as exc:
        row.status = HYPOTHESIS_VIOLATION
        row.notes.append(str(exc))
        return row
    row.case, row.m, row.n_z, row.z_count = c.case.value, c.m, c.n_z, c.zs
    row.predicted = c.predicted_dim
    row.notes.extend(c.notes)
    if c.identity_ok is False:
        row.notes.append(f"closed forms disagree: {c.formula}")

    if c.zs > SOLVER_CAP:
        row.status = SKIPPED
        row.notes.append(f"|Z(S)| = {c.zs} exceeds solver cap {SOLVER_CAP}")
        return row

    g = build_total_graph(p)
    exact = metric_dimension_exact(g)
    row.exact = exact.dimension
    row.witness = [g.labels[g.position(w)] for w in exact.witness]
    if use_oracle and len(g) <= ORACLE_CAP:
        row.oracle = metric_dimension_oracle(g).dimension
    row.bound_ok = row.exact >= lower_bound(p)

    classes = twin_partition(g).blocks()
    conforms = all(len(set(cl) - {g.position(w) for w in exact.witness}) <= 1 for cl in classes)
    if not conforms:
        row.notes.append("solver witness omits two vertices of one twin class")

    mism = twin_pattern_mismatches(p, g)
    row.twin_ok = not mism
    if mism:
        shown = "; ".join("{" + ", ".join(g.labels[i] for i in block) + "}" for block in mism)
        row.notes.append(f"FLAG twin classes differ from zero-divisor patterns: {shown}")

    if c.supported:
        wc = construct_witness(p, c)
        row.witness_ok = bool(is_resolving(g, wc.W)) and len(wc.W) == c.predicted_dim
    else:
        row.status = UNSUPPORTED

    if row.status == OK:
        agree = row.predicted == row.exact and row.oracle in (None, row.exact)
        if not (agree and row.witness_ok and row.bound_ok and conforms and c.identity_ok is not False):
            row.status = MISMATCH
    row.seconds = time.perf_counter() - start
    return row


def _run(args):
    return verify_product(*args)


def verify_campaign(
    products: list[ProductSemiring],
    use_oracle: bool = True,
    strict: bool = False,
    jobs: int = 1,
) -> CampaignReport:
    """Check every product; row order follows input order whatever ``jobs`` is."""
    tasks = [(p, use_oracle, strict) for p in products]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_run, tasks))
    else:
        rows = [_run(t) for t in tasks]
    return CampaignReport(rows)


DEFAULT_POOL = ("BOOL", "CHAIN_3", "T3", "BXMODX2")


def default_campaign(max_factors: int = 3, max_zero_divisors: int = 20) -> list[ProductSemiring]:
    """Products of up to three factors from the pool with |Z(S)| within the limit.

    Factor multisets are taken once each, in pool order.
    """
    tables = [catalog(n) for n in DEFAULT_POOL]
    out = []
    for k in range(1, max_factors + 1):
        for combo in itertools.combinations_with_replacement(tables, k):
            p = ProductSemiring(combo)
            masks = zero_divisor_masks(p)
            zs = p.order - math.prod(int((~mk).sum()) for mk in masks)
            if zs <= max_zero_divisors:
                out.append(p)
    return out
