"""Command line: analyze (q, u) grids, verify the claim registry, rebuild the binary subfield table.

    extmds analyze --q 8,9 --u all --json out.ndjson
    extmds verify --claim all --q-max 16
    extmds table1 --m 3,4,5,6

Exit status is 0 when everything passes, 1 on any failure and 2 on a bad
configuration.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import json
import logging
import os
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .claims import (FAIL, PASS, REGISTRY, TABLE1, TheoremCheckResult, prime_powers, select,
                     table1_check)
from .codes import LinearCode
from .family import build_family, max_u
from .field import prime_power
from .lrc import DegenerateCodeError, linear_locality
from .spectra import classify
from .weights import DEFAULT_BUDGET, BudgetExceeded, weight_distribution

log = logging.getLogger("extmds")

CACHE_ENV = "EXTMDS_CACHE_DIR"
SAMPLE_RATE = 0.10


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    qs: list[int]
    us: list[int] | None = None       # None: every admissible u
    budget: int = DEFAULT_BUDGET
    workers: int = 1
    json_path: str | None = None
    csv_path: str | None = None
    cache_dir: Path | None = None

    def __post_init__(self):
        if self.budget < 1:
            raise ConfigError("budget must be at least 1")
        if self.workers < 1:
            raise ConfigError("workers must be at least 1")
        for q in self.qs:
            if q <= 2 or prime_power(q) is None:
                raise ConfigError(f"q = {q} is not a prime power greater than 2")


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "extmds"


# -- argument parsing ----------------------------------------------------------

def parse_int_list(text: str) -> list[int]:
    """'4,5,7', '3-16' or a mix of both."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            if "-" in part:
                a, b = part.split("-", 1)
                out.extend(range(int(a), int(b) + 1))
            else:
                out.append(int(part))
        except ValueError:
            raise ConfigError(f"cannot read {part!r} as an integer or range") from None
    return out


def parse_q(text: str) -> list[int]:
    """A list of q values, or max:N for every prime power 3..N."""
    text = text.strip()
    if text.startswith(("max:", "max=")):
        try:
            return prime_powers(3, int(text[4:]))
        except ValueError:
            raise ConfigError(f"bad q bound {text!r}") from None
    qs = parse_int_list(text)
    if "-" in text:
        qs = [q for q in qs if prime_power(q) is not None]
    return sorted(set(qs))


def parse_u(text: str) -> list[int] | None:
    return None if text.strip() == "all" else sorted(set(parse_int_list(text)))


# -- output -------------------------------------------------------------------------

def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def write_ndjson(path: str, records: list[dict]) -> None:
    text = "".join(dumps(r) + "\n" for r in records)
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


CSV_FIELDS = ("claim", "q", "u", "verdict", "expected", "computed")


def write_csv(path: str, results: list[TheoremCheckResult]) -> None:
    fh = sys.stdout if path == "-" else open(path, "w", newline="", encoding="utf-8")
    try:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(CSV_FIELDS)
        for r in results:
            w.writerow([r.claim, r.q, "" if r.u is None else r.u, r.verdict,
                        dumps(r.expected), dumps(r.computed)])
    finally:
        if fh is not sys.stdout:
            fh.close()


# -- analyze ------------------------------------------------------------------------

def _code_record(C: LinearCode, budget: int, locality: bool = True) -> dict:
    rec: dict = {"n": C.n, "k": C.k}
    try:
        wd = weight_distribution(C, budget)
        rec["d"] = wd.min_distance if C.k else 0
        rec["weight_distribution"] = wd.as_strings()
        rec["route"] = C.route
        rec["classification"] = classify(C, budget).label if C.k else "zero"
    except BudgetExceeded:
        rec.update(d=None, weight_distribution=None, classification=None,
                   status="skipped(budget)")
        return rec
    if locality:
        try:
            rec["locality"] = linear_locality(C, budget).as_dict()
        except DegenerateCodeError as exc:
            rec["locality"] = {"error": str(exc)}
        except BudgetExceeded:
            rec["locality"] = {"error": "skipped(budget)"}
    return rec


def instance_checks(q: int, u: int, budget: int) -> list[TheoremCheckResult]:
    """Every per-(q, u) claim whose hypothesis covers this instance."""
    out = []
    for c in REGISTRY.values():
        if c.group in ("lemmas", "table1"):
            continue
        if (q, u) in c.instances([q]) and not (c.always and q not in c.fixed):
            out.append(c.run(q, u, budget))
    return out


def analyze_instance(q: int, u: int, budget: int, locality: bool = True) -> dict:
    f = build_family(q, u)
    F = f.field
    rec = {
        "field": {"p": F.p, "m": F.m, "modulus": list(F.modulus)},
        "q": q, "u": u,
        "codes": {name: _code_record(C, budget, locality) for name, C in f.codes().items()},
        "checks": [r.as_dict() for r in instance_checks(q, u, budget)],
        "notes": [],
    }
    ext = rec["codes"]["ext"]
    if F.p == 2 and u == 2 and [ext["n"], ext["k"], ext["d"]] == [q + 2, 3, q]:
        rec["notes"].append(f"hyperoval code [{q + 2},3,{q}]")
    if u == 1:
        rec["notes"].append("u = 1: repetition-type code")
    return rec


def _analyze_task(args):
    q, u, budget = args
    return analyze_instance(q, u, budget)


def _pool_map(fn, tasks, workers):
    if workers <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, tasks))


def cmd_analyze(cfg: RunConfig) -> tuple[list[dict], int]:
    tasks = []
    for q in cfg.qs:
        us = range(1, max_u(q) + 1) if cfg.us is None else cfg.us
        for u in us:
            if not 1 <= u <= max_u(q):
                raise ConfigError(f"u = {u} outside [1, {max_u(q)}] for q = {q}")
            tasks.append((q, u, cfg.budget))
    records = _pool_map(_analyze_task, tasks, cfg.workers)
    failed = any(c["verdict"] == FAIL for r in records for c in r["checks"])
    return records, int(failed)


# -- verify -------------------------------------------------------------------------

def cache_key(claim: str, q: int, u, budget: int) -> str:
    raw = dumps([claim, q, u, budget, __version__])
    return hashlib.sha256(raw.encode()).hexdigest()[:32]


class ResultCache:
    def __init__(self, root: Path | None):
        self.root = root

    def _path(self, key: str) -> Path:
        return self.root / f"{key}.json"

    def get(self, key: str) -> TheoremCheckResult | None:
        if self.root is None:
            return None
        p = self._path(key)
        if not p.exists():
            return None
        try:
            return TheoremCheckResult.from_dict(json.loads(p.read_text(encoding="utf-8")))
        except (ValueError, TypeError):
            log.warning("ignoring unreadable cache entry %s", p.name)
            return None

    def put(self, key: str, r: TheoremCheckResult) -> None:
        if self.root is None:
            return
        self.root.mkdir(parents=True, exist_ok=True)
        tmp = self._path(key).with_suffix(".tmp")
        tmp.write_text(dumps(r.as_dict()), encoding="utf-8")
        tmp.replace(self._path(key))


def _verify_task(args) -> dict:
    cid, q, u, budget = args
    return REGISTRY[cid].run(q, u, budget).as_dict()


def verify_tasks(claim: str, qs: list[int], explicit_q: bool) -> tuple[list, list]:
    tasks, skipped = [], []
    for c in select(claim):
        inst = c.instances(qs)
        if not inst and explicit_q and claim != "all" and not c.fixed:
            skipped.extend(c.skipped(q) for q in qs)
        tasks.extend((c.id, q, u) for q, u in inst)
    return tasks, skipped


def cmd_verify(claim: str, cfg: RunConfig, explicit_q: bool = False,
               rng: random.Random | None = None) -> tuple[list[TheoremCheckResult], dict]:
    tasks, skipped = verify_tasks(claim, cfg.qs, explicit_q)
    cache = ResultCache(cfg.cache_dir)
    rng = rng or random.Random()
    results: dict[tuple, TheoremCheckResult] = {}
    todo, audit = [], []
    for t in tasks:
        hit = cache.get(cache_key(*t, cfg.budget))
        if hit is None:
            todo.append(t)
        else:
            results[t] = hit
            if rng.random() < SAMPLE_RATE:
                audit.append(t)
    fresh = _pool_map(_verify_task, [(*t, cfg.budget) for t in todo + audit], cfg.workers)
    stats = {"tasks": len(tasks), "computed": len(todo), "cached": len(tasks) - len(todo),
             "audited": len(audit), "cache_mismatch": 0}
    for t, d in zip(todo + audit, fresh):
        r = TheoremCheckResult.from_dict(d)
        if t in results:
            if results[t] != r:
                stats["cache_mismatch"] += 1
                r = TheoremCheckResult(r.claim, r.q, r.u, r.expected, r.computed, FAIL,
                                       "cached record disagrees with recomputation")
            results[t] = r
        else:
            results[t] = r
            cache.put(cache_key(*t, cfg.budget), r)
    ordered = skipped + [results[t] for t in tasks]
    return ordered, stats


# -- table 1 ------------------------------------------------------------------------

def cmd_table1(ms: list[int], budget: int) -> list[TheoremCheckResult]:
    for m in ms:
        if m not in TABLE1:
            raise ConfigError(f"m = {m} is not a row of the subfield table (choose from 3, 4, 5, 6)")
    return [table1_check(m, u, budget) for m in ms for u in (2, 3, 4)]


# -- main ---------------------------------------------------------------------------

def _summary(results: list[TheoremCheckResult], out=None) -> None:
    out = out or sys.stdout
    for r in results:
        u = "" if r.u is None else f" u={r.u}"
        print(f"{r.verdict.upper():<20} {r.claim} q={r.q}{u}", file=out)
    counts: dict[str, int] = {}
    for r in results:
        counts[r.verdict] = counts.get(r.verdict, 0) + 1
    print("totals: " + ", ".join(f"{k}={v}" for k, v in sorted(counts.items())), file=out)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="extmds", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="cmd", required=True)

    def common(p):
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                       help="largest enumeration allowed per distribution")
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--json", dest="json_path", metavar="PATH",
                       help="newline-delimited JSON output ('-' for stdout)")
        p.add_argument("--csv", dest="csv_path", metavar="PATH")
        p.add_argument("-v", "--verbose", action="store_true")

    a = sub.add_parser("analyze", help="parameters, spectra and locality per (q, u)")
    a.add_argument("--q", required=True, help="list such as 4,5,7 or max:N")
    a.add_argument("--u", default="all", help="list of u values or 'all'")
    common(a)

    v = sub.add_parser("verify", help="run the claim registry")
    v.add_argument("--claim", default="all", help="claim id, group prefix or 'all'")
    v.add_argument("--q", help="explicit q list (overrides --q-max)")
    v.add_argument("--q-max", type=int, default=16)
    v.add_argument("--no-cache", action="store_true")
    v.add_argument("--cache-dir", help=f"cache directory (default ${CACHE_ENV} or ~/.cache/extmds)")
    v.add_argument("--list", action="store_true", help="print claim ids and exit")
    common(v)

    t = sub.add_parser("table1", help="binary subfield codes of ext(C_u)")
    t.add_argument("--m", default="3,4,5,6")
    common(t)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        if args.cmd == "analyze":
            cfg = RunConfig(parse_q(args.q), parse_u(args.u), args.budget, args.workers,
                            args.json_path, args.csv_path)
            records, status = cmd_analyze(cfg)
            if args.json_path:
                write_ndjson(args.json_path, records)
            checks = [TheoremCheckResult.from_dict(c) for r in records for c in r["checks"]]
            if args.csv_path:
                write_csv(args.csv_path, checks)
            if args.json_path != "-":
                for r in records:
                    ext = r["codes"]["ext"]
                    print(f"q={r['q']} u={r['u']} ext=[{ext['n']},{ext['k']},{ext['d']}] "
                          f"{ext['classification']}")
            return status

        if args.cmd == "verify":
            if args.list:
                for cid, c in REGISTRY.items():
                    print(f"{cid}\t{c.statement}")
                return 0
            explicit = args.q is not None
            qs = parse_q(args.q) if explicit else prime_powers(3, args.q_max)
            cache = None if args.no_cache else Path(args.cache_dir or default_cache_dir())
            cfg = RunConfig(qs, None, args.budget, args.workers, args.json_path,
                            args.csv_path, cache)
            try:
                results, stats = cmd_verify(args.claim, cfg, explicit)
            except KeyError as exc:
                raise ConfigError(str(exc)) from None
            log.info("cache: %s", stats)
        else:
            ms = parse_int_list(args.m)
            if args.budget < 1:
                raise ConfigError("budget must be at least 1")
            results = cmd_table1(ms, args.budget)

        if args.json_path:
            write_ndjson(args.json_path, [r.as_dict() for r in results])
        if args.csv_path:
            write_csv(args.csv_path, results)
        if args.json_path != "-" and args.csv_path != "-":
            _summary(results)
        return 1 if any(r.verdict == FAIL for r in results) else 0
    except ConfigError as exc:
        print(f"extmds: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
