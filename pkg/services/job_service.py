"""
Job handling for the command line: resolve the input, consult the result
cache, run the scan or the classification, and record the run log.
"""

import json
import sqlite3
import sys
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Any, Optional

import db
from braided.braiding import MonomialBraiding
from config import DEFAULT_BUDGET_SECS, DEFAULT_CAP, NICHOLS_RUN_LOG
from families.registry import build_braiding, classify
from families.verdict import FamilyVerdict
from nichols.scan import Budget, finiteness_scan
from utils.cache import cache_get, cache_key, cache_put
from utils.literals import ParseError
from utils.serialize import braiding_from_json, dump_json, family_descriptor, load_json, read_descriptor

# Exit codes
EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


@dataclass
class JobSpec:
    command: str
    family: Optional[str] = None
    params: dict = field(default_factory=dict)
    file: Optional[str] = None
    cap: int = DEFAULT_CAP
    budget_secs: Optional[float] = DEFAULT_BUDGET_SECS
    cache_dir: Optional[str] = None
    use_cache: bool = True

    def __post_init__(self):
        # finiteness_scan refuses caps below 2
        minimum = 2 if self.command == "dims" else 1
        if self.cap < minimum:
            raise ParseError(f"cap must be >= {minimum}, got {self.cap}")


@dataclass
class JobResult:
    report: dict
    text: str
    exit_code: int
    cache_hit: bool = False
    input_key: Optional[str] = None


def resolve_input(spec: JobSpec) -> tuple[dict, Optional[str]]:
    """
    The canonical input document and its family tag (None for a raw braiding).

    Raises:
        ParseError: unreadable file or neither --file nor --family given
    """
    if spec.file:
        doc = load_json(spec.file)
        if isinstance(doc, dict) and "family" in doc:
            tag, params = read_descriptor(doc)
            return family_descriptor(tag, params), tag
        if not isinstance(doc, dict):
            raise ParseError(f"{spec.file}: expected a JSON object")
        return doc, None
    if spec.family:
        return family_descriptor(spec.family, spec.params), spec.family
    raise ParseError("give either --file or --family")


def input_braiding(doc: dict, tag: Optional[str]) -> MonomialBraiding:
    if tag is not None:
        return build_braiding(tag, doc["params"])
    return braiding_from_json(doc)


def run_dims(spec: JobSpec, verbose: bool = True) -> JobResult:
    """
    Graded dimensions up to spec.cap. Complete reports are cached; a budget
    overrun returns the partial report with EXIT_BUDGET and is not cached.
    """
    doc, tag = resolve_input(spec)
    key = cache_key(doc, spec.cap)

    if spec.use_cache:
        cached = cache_get(key, spec.cache_dir)
        if cached is not None:
            if verbose:
                print(f"[Cache] hit {key[:12]}", file=sys.stderr)
            return JobResult(json.loads(cached), cached, EXIT_OK, True, key)

    c = input_braiding(doc, tag)
    if verbose:
        print(f"[Scan] dim V = {c.dim} over Q(zeta_{c.field.order}), cap {spec.cap}", file=sys.stderr)
    scan = finiteness_scan(c, spec.cap, Budget(seconds=spec.budget_secs), verbose=verbose)
    report = {"input": doc, **scan.as_dict()}
    text = dump_json(report)

    if scan.budget_exceeded:
        return JobResult(report, text, EXIT_BUDGET, False, key)
    if spec.use_cache:
        path = cache_put(key, text, spec.cache_dir)
        if verbose:
            print(f"[Cache] stored {path}", file=sys.stderr)
    return JobResult(report, text, EXIT_OK, False, key)


def run_classify(spec: JobSpec) -> FamilyVerdict:
    doc, tag = resolve_input(spec)
    if tag is None:
        raise ParseError("classify needs a family descriptor, not a braiding")
    return classify(tag, doc["params"])


def record_run(command: str, started_at: datetime, exit_code: int,
               family: Optional[str] = None, result: Optional[JobResult] = None,
               verdict: Optional[str] = None, total: Optional[int] = None,
               cap: Optional[int] = None, notes: str = "",
               db_path: Optional[str] = None) -> Optional[int]:
    """Insert a job_runs row when the run log is enabled; never fails the job."""
    if not NICHOLS_RUN_LOG:
        return None
    run_data: dict[str, Any] = {
        "command": command,
        "family": family,
        "input_key": result.input_key if result else None,
        "cap": cap,
        "started_at": started_at.isoformat(),
        "finished_at": datetime.now(timezone.utc).isoformat(),
        "exit_code": exit_code,
        "verdict": verdict,
        "total": total,
        "cache_hit": result.cache_hit if result else False,
        "notes": notes,
    }
    try:
        conn = db.get_connection(db_path)
        try:
            db.ensure_schema(conn)
            return db.insert_job_run(conn, run_data)
        finally:
            conn.close()
    except sqlite3.Error as e:
        print(f"[Database] Could not record run: {e}", file=sys.stderr)
        return None


def recent_runs(limit: int = 20, db_path: Optional[str] = None) -> list[dict]:
    conn = db.get_connection(db_path)
    try:
        db.ensure_schema(conn)
        return [dict(row) for row in db.get_recent_runs(conn, limit)]
    finally:
        conn.close()
