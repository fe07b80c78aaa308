"""Two-phase census: sweep a reduced family, keep the maximal models,
classify them up to isomorphism and attach Weil polynomials.

Phase 1 is sharded over enumeration-index ranges and may run in worker
processes; every later step works on the (small) survivor list in the parent,
so reports do not depend on the worker count.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import os
import re
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from . import hyperelliptic as hyp
from . import kernels
from . import trigonal as tri
from .field import build_field
from .zeta import WeilPoly, count_isogeny_classes, weil_from_counts

log = logging.getLogger(__name__)

HYPERELLIPTIC, TRIGONAL = "hyperelliptic", "trigonal"
FAMILIES = (HYPERELLIPTIC, TRIGONAL)
CHECKPOINT_VERSION = 1
_INT_LIST = re.compile(r"\[\s+(-?\d+(?:,\s+-?\d+)*)\s+\]")


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("CURVE_CENSUS_JOBS", "1")))
    except ValueError:
        return 1


@dataclass
class CensusConfig:
    family: str
    count_field: int = 9  # 3 or 9
    jobs: int = field(default_factory=default_jobs)
    out: str | None = None
    fmt: str = "json"
    checkpoint: str | None = None
    min_count: int | None = None
    cases: tuple | None = None  # trigonal only: ((type, case), ...)
    timing: bool = True

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.count_field not in (3, 9):
            raise ValueError("count field must be 3 or 9")
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")
        if self.fmt not in ("json", "csv"):
            raise ValueError("format must be json or csv")
        if self.cases is not None:
            if self.family != TRIGONAL:
                raise ValueError("case restriction applies to the trigonal family only")
            self.cases = tuple((str(t), int(c)) for t, c in self.cases)
            for t, c in self.cases:
                tri.case_families(t, c)

    @property
    def e_count(self) -> int:
        return 1 if self.count_field == 3 else 2


@dataclass
class ClassRecord:
    rep_model: dict
    members: list  # enumeration indices, ascending
    weil: list
    q: int


@dataclass
class CensusReport:
    family: str
    count_field: int
    max_points: int
    num_tuples: int
    classes: list
    num_isogeny_classes: int
    runtime_seconds: float | None
    num_candidates: int = 0
    num_rejected: int = 0
    survivors_by_type: dict | None = None
    survivors: list = field(default_factory=list)  # (index, count, class_id)

    def to_json(self) -> dict:
        d = asdict(self)
        d.pop("survivors")
        return d

    def dumps(self) -> str:
        text = json.dumps(self.to_json(), indent=2)
        # keep integer lists on one line
        text = _INT_LIST.sub(lambda m: "[" + " ".join(m.group(1).split()) + "]", text)
        return text + "\n"


# -- phase 1 -----------------------------------------------------------------------

def _ranges(cfg: CensusConfig):
    if cfg.family == HYPERELLIPTIC:
        return [(0, hyp.TOTAL)]
    if cfg.cases is None:
        return [(0, tri.total_size())]
    return sorted(tri.case_range(t, c) for t, c in cfg.cases)


def _shards(ranges, pieces):
    out = []
    for a, b in ranges:
        step = max(1, -(-(b - a) // pieces))
        out.extend((s, min(b, s + step)) for s in range(a, b, step))
    return out


def _hyper_shard(e, start, stop, floor):
    """Square-free models in [start, stop) with count >= floor (or the shard
    maximum when floor is None)."""
    f, c = hyp.coefficient_block(start, stop)
    sf = kernels.squarefree_mask(f)
    counts = np.where(sf, hyp.count_points_block(f, c, e), -1)
    top = int(counts.max()) if sf.any() else -1
    keep = counts >= (top if floor is None else floor)
    keep &= sf
    idx = np.flatnonzero(keep) + start
    return int((~sf).sum()), top, idx.tolist(), counts[keep].tolist()


def _trigonal_shard(e, start, stop):
    coeffs, labels = tri.index_block(start, stop)
    counts = tri.normalization_counts(coeffs, tri.singular_type_of_label(labels), e)
    return start, counts.astype(np.int32)


def _run_shards(fn, args, jobs):
    if jobs == 1 or len(args) == 1:
        return [fn(*a) for a in args]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(fn, *a) for a in args]
        return [f.result() for f in futures]


def sweep_hyperelliptic(cfg: CensusConfig):
    shards = _shards(_ranges(cfg), 4 * cfg.jobs)
    results = _run_shards(_hyper_shard, [(cfg.e_count, a, b, cfg.min_count) for a, b in shards], cfg.jobs)
    rejected = sum(r[0] for r in results)
    top = max(r[1] for r in results)
    floor = top if cfg.min_count is None else cfg.min_count
    pairs = sorted((i, n) for r in results for i, n in zip(r[2], r[3]) if n >= floor)
    return {"max_points": top, "candidates": hyp.TOTAL, "rejected": rejected, "survivors": pairs}


def sweep_trigonal(cfg: CensusConfig):
    """Count every candidate, then validate lazily from the top count down."""
    ranges = _ranges(cfg)
    shards = _shards(ranges, 4 * cfg.jobs)
    results = _run_shards(_trigonal_shard, [(cfg.e_count, a, b) for a, b in shards], cfg.jobs)
    index = np.concatenate([np.arange(s, s + len(c)) for s, c in results])
    counts = np.concatenate([c for _, c in results])
    rejected = 0
    survivors = []
    top = None
    for value in np.unique(counts)[::-1]:
        if cfg.min_count is None and top is not None:
            break
        if cfg.min_count is not None and value < cfg.min_count:
            break
        idx = index[counts == value]
        coeffs, labels = _trigonal_models(idx)
        ok = tri.validate_block(coeffs, tri.singular_type_of_label(labels))
        rejected += int((~ok).sum())
        if ok.any():
            top = int(value) if top is None else top
            survivors.extend((int(i), int(value)) for i in idx[ok])
    if top is None:
        raise RuntimeError("no valid model found")
    return {"max_points": top, "candidates": int(len(index)), "rejected": rejected,
            "survivors": sorted(survivors)}


def _trigonal_models(idx):
    rows = [tri.index_block(int(i), int(i) + 1) for i in idx]
    if not rows:
        return np.zeros((0, 21), dtype=np.int64), np.zeros(0, dtype=np.int64)
    return np.concatenate([r[0] for r in rows]), np.concatenate([r[1] for r in rows])


# -- checkpoint ----------------------------------------------------------------------

def _checkpoint_header(cfg):
    return {"version": CHECKPOINT_VERSION, "family": cfg.family, "count_field": cfg.count_field,
            "min_count": cfg.min_count, "cases": [list(c) for c in cfg.cases] if cfg.cases else None}


def write_checkpoint(path, cfg, sweep):
    header = dict(_checkpoint_header(cfg), max_points=sweep["max_points"],
                  candidates=sweep["candidates"], rejected=sweep["rejected"])
    with open(path, "w") as fh:
        fh.write(json.dumps(header) + "\n")
        for i, n in sweep["survivors"]:
            fh.write(json.dumps({"index": i, "model": model_at(cfg.family, i).to_json(), "count": n}) + "\n")


def read_checkpoint(path, cfg):
    """Phase-1 result stored at ``path``, or None if it belongs to another config."""
    with open(path) as fh:
        lines = [json.loads(line) for line in fh if line.strip()]
    if not lines:
        return None
    header = lines[0]
    if any(header.get(k) != v for k, v in _checkpoint_header(cfg).items()):
        return None
    survivors = []
    for rec in lines[1:]:
        model = model_from_json(rec["model"])
        if model_index(model) != rec["index"]:
            raise ValueError(f"checkpoint record does not match its index: {rec}")
        survivors.append((int(rec["index"]), int(rec["count"])))
    return {"max_points": header["max_points"], "candidates": header["candidates"],
            "rejected": header["rejected"], "survivors": survivors}


# -- models --------------------------------------------------------------------------

def model_at(family, index):
    return hyp.HyperModel.from_index(index) if family == HYPERELLIPTIC else tri.QuinticModel.from_index(index)


def model_from_json(d):
    fam = d.get("family")
    if fam == HYPERELLIPTIC:
        return hyp.HyperModel.from_json(d)
    if fam == TRIGONAL:
        return tri.QuinticModel.from_json(d)
    raise ValueError(f"unknown family in model record: {fam!r}")


def model_index(model):
    return model.index


def family_of(model) -> str:
    if isinstance(model, hyp.HyperModel):
        return HYPERELLIPTIC
    if isinstance(model, tri.QuinticModel):
        return TRIGONAL
    raise TypeError(f"not a curve model: {model!r}")


def count_vector(model, e_base: int, length: int = 5) -> list:
    if family_of(model) == HYPERELLIPTIC:
        return hyp.count_vector(model, e_base, length)
    return tri.count_vector(model, e_base, length)


def weil_polynomial(model, q: int) -> WeilPoly:
    """Weil polynomial over F_q (q = 3 or 9) of the curve given by ``model``."""
    e_base = {3: 1, 9: 2}[q]
    return weil_from_counts(q, count_vector(model, e_base))


def _weil_batch(models, q):
    """Weil polynomials for many models, counting extension by extension."""
    if not models:
        return []
    e_base = {3: 1, 9: 2}[q]
    cols = []
    for j in range(1, 6):
        e = e_base * j
        if family_of(models[0]) == HYPERELLIPTIC:
            f = np.array([m.f for m in models])
            c = np.array([m.c for m in models])
            cols.append(hyp.count_points_block(f, c, e))
        else:
            coeffs = np.array([m.coeffs for m in models])
            types = np.array([m.sing_type for m in models])
            cols.append(tri.normalization_counts(coeffs, types, e))
    counts = np.stack(cols, axis=1)
    return [weil_from_counts(q, [int(v) for v in row]) for row in counts]


def isomorphic(m1, m2, k) -> bool:
    if family_of(m1) != family_of(m2):
        raise ValueError("models from different families")
    if family_of(m1) == HYPERELLIPTIC:
        return hyp.hyper_isomorphic(m1, m2, k)
    return tri.trigonal_isomorphic(m1, m2, k)


# -- phase 2 -------------------------------------------------------------------------

def classify(models, k, weils=None) -> list:
    """Partition ``models`` into isomorphism classes over k.

    Returns lists of positions into ``models``; each class is headed by its
    first member in input order, and classes are ordered by their heads
    (greedy first occurrence).  Trigonal models are bucketed by Weil
    polynomial before pairwise tests.
    """
    models = list(models)
    if not models:
        return []
    fams = {family_of(m) for m in models}
    if len(fams) > 1:
        raise ValueError("cannot classify models from different families together")
    if fams == {HYPERELLIPTIC}:
        index = hyp.OrbitIndex(k)
        groups: dict[int, list] = {}
        for pos, m in enumerate(models):
            groups.setdefault(index.classify(m), []).append(pos)
        return [groups[c] for c in sorted(groups)]
    if weils is None:
        weils = _weil_batch(models, k.q)
    classes: list[list] = []
    heads_by_weil: dict[tuple, list] = {}
    for pos, (m, w) in enumerate(zip(models, weils)):
        for cls in heads_by_weil.setdefault(w.coeffs, []):
            if tri.trigonal_isomorphic(models[cls[0]], m, k):
                cls.append(pos)
                break
        else:
            cls = [pos]
            heads_by_weil[w.coeffs].append(cls)
            classes.append(cls)
    return classes


# -- driver --------------------------------------------------------------------------

def run_census(cfg: CensusConfig) -> CensusReport:
    t0 = time.perf_counter()
    sweep = None
    if cfg.checkpoint and Path(cfg.checkpoint).exists():
        sweep = read_checkpoint(cfg.checkpoint, cfg)
        if sweep is not None:
            log.info("resuming from checkpoint %s", cfg.checkpoint)
    if sweep is None:
        log.info("sweeping %s over GF(%d) with %d job(s), backend %s",
                 cfg.family, cfg.count_field, cfg.jobs, kernels.BACKEND)
        sweep = sweep_hyperelliptic(cfg) if cfg.family == HYPERELLIPTIC else sweep_trigonal(cfg)
        if cfg.checkpoint:
            write_checkpoint(cfg.checkpoint, cfg, sweep)

    survivors = sweep["survivors"]
    models = [model_at(cfg.family, i) for i, _ in survivors]
    k = build_field(cfg.e_count)
    log.info("%d survivors with max %d; classifying", len(models), sweep["max_points"])

    weils = _weil_batch(models, cfg.count_field) if cfg.family == TRIGONAL else None
    classes = classify(models, k, weils)
    reps = [models[c[0]] for c in classes]
    rep_weils = [weils[c[0]] for c in classes] if weils is not None else _weil_batch(reps, cfg.count_field)

    records = [ClassRecord(rep_model=models[c[0]].to_json(), members=[survivors[p][0] for p in c],
                           weil=w.to_list(), q=w.q)
               for c, w in zip(classes, rep_weils)]
    class_of = {p: cid for cid, c in enumerate(classes) for p in c}
    rows = [(i, n, class_of[p]) for p, (i, n) in enumerate(survivors)]
    by_type = None
    if cfg.family == TRIGONAL:
        by_type = {t: sum(1 for m in models if m.sing_type == t) for t in tri.SING_TYPES}

    return CensusReport(
        family=cfg.family, count_field=cfg.count_field, max_points=sweep["max_points"],
        num_tuples=len(survivors), classes=records,
        num_isogeny_classes=count_isogeny_classes(rep_weils) if rep_weils else 0,
        runtime_seconds=round(time.perf_counter() - t0, 3) if cfg.timing else None,
        num_candidates=sweep["candidates"], num_rejected=sweep["rejected"],
        survivors_by_type=by_type, survivors=rows)


# -- output --------------------------------------------------------------------------

def _case_label(model) -> str:
    if isinstance(model, hyp.HyperModel):
        return f"c={model.c},b=({model.b1},{model.b2})"
    return f"{model.sing_type}:{model.case}"


def report_csv(report: CensusReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["enumeration_index", "case", "coefficients", "count", "class_id", "weil"])
    for i, n, cid in report.survivors:
        m = model_at(report.family, i)
        coeffs = m.f if isinstance(m, hyp.HyperModel) else m.coeffs
        w.writerow([i, _case_label(m), " ".join(map(str, coeffs)), n, cid,
                    " ".join(map(str, report.classes[cid].weil))])
    return buf.getvalue()


def write_report(report: CensusReport, path, fmt="json"):
    text = report.dumps() if fmt == "json" else report_csv(report)
    Path(path).write_text(text)
