"""Grid scan comparing the engine with the congruence conditions."""

from __future__ import annotations

import json
import os
from collections import Counter
from dataclasses import dataclass, field
from importlib import resources
from multiprocessing import Pool
from typing import Iterable, Optional

from .errors import DegenerateFactor, Unresolved
from .exact import Trinomial, normalize
from .report import WORKED_EXAMPLES, REDUCIBLE, certify_irreducible, discrepancy_class
from .splitter import engstrom_criterion, splitting_type
from .theorems import theorem_verdict


@dataclass(frozen=True)
class ScanConfig:
    a_min: int
    a_max: int
    b_min: int
    b_max: int
    primes: tuple = (2, 3)
    workers: int = 0
    skip_reducible: bool = True


@dataclass
class ScanResult:
    records: list
    class_counts: Counter = field(default_factory=Counter)
    skipped: Counter = field(default_factory=Counter)
    unresolved: list = field(default_factory=list)

    def new_classes(self, allowlist: Iterable[str]) -> list[str]:
        allowed = set(allowlist)
        return sorted(c for c in self.class_counts if c not in allowed)


def default_allowlist() -> list[str]:
    text = resources.files("septic_index").joinpath("data/allowlist.json").read_text()
    return json.loads(text)["classes"]


def load_allowlist(path: Optional[str]) -> list[str]:
    if path is None:
        return default_allowlist()
    with open(path) as fh:
        return json.load(fh)["classes"]


def scan_pair(a: int, b: int, primes=(2, 3), skip_reducible: bool = True) -> dict:
    """One JSON-lines record for the pair ``(a, b)``."""
    rec: dict = {"a": a, "b": b}
    t0 = Trinomial(a, b)
    if b == 0:
        rec.update(status="skipped", reason="b=0")
        return rec
    if t0.D == 0:
        rec.update(status="skipped", reason="D=0")
        return rec
    t = normalize(t0)
    if skip_reducible:
        cert = certify_irreducible(t)
        if cert.status == REDUCIBLE:
            rec.update(status="skipped", reason=f"reducible: {cert.detail}")
            return rec
    entries = {}
    classes = []
    engine_divisors = set()
    for p in primes:
        try:
            s = splitting_type(t, p)
        except DegenerateFactor as exc:
            rec.update(status="skipped", reason=f"reducible: {exc}")
            return rec
        except Unresolved as exc:
            rec.update(status="unresolved", p=p, reason=str(exc))
            return rec
        ev = engstrom_criterion(s, p)
        tv = theorem_verdict(t, p)
        entry = {
            "splitting": [list(ef) for ef in s.factors],
            "engine": ev,
            "theorem": tv.divides,
            "condition": tv.matched_condition,
        }
        if ev:
            engine_divisors.add(p)
        if ev != tv.divides:
            if p in (2, 3):
                cls = discrepancy_class(t, p, tv.matched_condition, ev)
            else:
                cls = "Thm1.3"
            entry["class"] = cls
            classes.append(cls)
        entries[str(p)] = entry
    if (a, b) in WORKED_EXAMPLES:
        name, claimed = WORKED_EXAMPLES[(a, b)]
        if claimed in primes and claimed not in engine_divisors:
            classes.append(name)
            rec["example_marker"] = name
    rec.update(status="ok", primes=entries, discrepancies=classes)
    return rec


def _scan_row(args) -> list[dict]:
    a, b_min, b_max, primes, skip_reducible = args
    return [scan_pair(a, b, primes, skip_reducible) for b in range(b_min, b_max + 1)]


def run_scan(cfg: ScanConfig) -> ScanResult:
    rows = [
        (a, cfg.b_min, cfg.b_max, tuple(cfg.primes), cfg.skip_reducible)
        for a in range(cfg.a_min, cfg.a_max + 1)
    ]
    workers = cfg.workers or (os.cpu_count() or 1)
    if workers > 1 and len(rows) > 1:
        with Pool(workers) as pool:
            chunks = pool.map(_scan_row, rows, chunksize=max(1, len(rows) // (4 * workers)))
    else:
        chunks = [_scan_row(r) for r in rows]
    records = sorted((r for chunk in chunks for r in chunk), key=lambda r: (r["a"], r["b"]))
    result = ScanResult(records)
    for r in records:
        if r["status"] == "skipped":
            result.skipped[r["reason"].split(":")[0]] += 1
        elif r["status"] == "unresolved":
            result.unresolved.append((r["a"], r["b"], r["p"]))
        else:
            result.class_counts.update(r["discrepancies"])
    return result


def write_jsonl(records, fh) -> None:
    for r in records:
        fh.write(json.dumps(r, sort_keys=True) + "\n")


__all__ = [
    "ScanConfig",
    "ScanResult",
    "scan_pair",
    "run_scan",
    "write_jsonl",
    "default_allowlist",
    "load_allowlist",
]
