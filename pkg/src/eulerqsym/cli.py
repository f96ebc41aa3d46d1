"""Command-line front end: ``q`` tables, ``a`` polynomials, ``verify`` suites."""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import sys
import tempfile
from dataclasses import dataclass
from pathlib import Path

from filelock import FileLock

from . import __version__
from .combinatorics import partition
from .eulerian import q_lambda, q_lambda_direct, q_series
from .qp import a_lambda_direct, a_lambda_specialized
from .symfunc import basis_tag, canonical_json, convert
from .verify import DEFAULT_BOUNDS, report_json, run_all, summary

CACHE_ENV = "EULERQSYM_CACHE_DIR"
MAX_PERMUTATION_N = 9
MAX_SERIES_N = 12
SUITE_NAMES = ("thm1", "thm2", "lemma-shuffle", "fund-prop", "cadogan", "routes",
               "p1", "raising", "eulerian", "all")


class UsageError(Exception):
    pass


# -- cache -------------------------------------------------------------------


@dataclass(frozen=True)
class CacheEntry:
    key: str
    payload: str
    checksum: str

    @classmethod
    def make(cls, key, payload):
        return cls(key, payload, _digest(payload))

    def valid(self):
        return self.checksum == _digest(self.payload)


def _digest(text):
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


class Cache:
    def __init__(self, root):
        self.root = Path(root)

    def _path(self, key):
        return self.root / f"{_digest(key)}.json"

    def get(self, key):
        path = self._path(key)
        if not path.exists():
            return None
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
            entry = CacheEntry(data["key"], data["payload"], data["checksum"])
        except (OSError, ValueError, KeyError):
            return None
        if entry.key != key or not entry.valid():
            return None
        return entry.payload

    def put(self, key, payload):
        self.root.mkdir(parents=True, exist_ok=True)
        entry = CacheEntry.make(key, payload)
        text = json.dumps({"key": entry.key, "payload": entry.payload, "checksum": entry.checksum})
        fd, tmp = tempfile.mkstemp(dir=self.root, suffix=".tmp")
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, self._path(key))

    def fetch(self, key, compute):
        with FileLock(str(self._path(key)) + ".lock"):
            payload = self.get(key)
            if payload is None:
                payload = compute()
                self.put(key, payload)
        return payload


def _cache_from(args):
    root = args.cache_dir or os.environ.get(CACHE_ENV)
    return Cache(root) if root else None


def _cached(args, op, params, compute):
    cache = _cache_from(args)
    if cache is None:
        return compute()
    key = canonical_json({"op": op, "args": params, "version": __version__})
    return cache.fetch(key, compute)


# -- table emission ----------------------------------------------------------


def parse_partition(text):
    try:
        parts = [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise UsageError(f"malformed partition {text!r}") from None
    if not parts:
        raise UsageError(f"malformed partition {text!r}")
    try:
        return partition(sorted(parts, reverse=True))
    except ValueError as exc:
        raise UsageError(f"malformed partition {text!r}: {exc}") from None


def q_rows(lam=None, n=None, route="plethysm"):
    if lam is not None:
        return (q_lambda if route == "plethysm" else q_lambda_direct)(lam)
    return q_series(n).row(n)


def table_json(index, basis, rows):
    entries = [
        {"j": j, "value": convert(f, basis).to_dict()}
        for j, f in enumerate(rows)
        if f
    ]
    return canonical_json({"index": index, "basis": basis, "entries": entries}) + "\n"


def _index_label(index):
    if "lambda" in index:
        return " ".join(map(str, index["lambda"]))
    return f"n={index['n']}"


def table_csv(index, basis, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["lambda", "j", "basis_partition", "q_exp", "p_exp", "t_exp", "coeff"])
    label = _index_label(index)
    for j, f in enumerate(rows):
        g = convert(f, basis)
        for lam in sorted(g.coeffs, reverse=True):
            for (a, b, c), v in g.coeffs[lam].terms():
                writer.writerow([label, j, " ".join(map(str, lam)), a, b, c, str(v)])
    return buf.getvalue()


def _emit(text, output):
    if output in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        Path(output).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot write {output}: {exc}") from None


def cmd_q(args):
    try:
        basis = basis_tag(args.basis)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if (args.lam is None) == (args.n is None):
        raise UsageError("give exactly one of --lambda or --n")
    if args.lam is not None:
        lam = parse_partition(args.lam)
        size = sum(lam)
        limit = MAX_PERMUTATION_N if args.route == "direct" else MAX_SERIES_N
        if size > limit:
            raise UsageError(f"|lambda| = {size} exceeds limit {limit} for route {args.route}")
        index = {"lambda": list(lam)}
    else:
        lam = None
        if not 0 <= args.n <= MAX_SERIES_N:
            raise UsageError(f"n = {args.n} outside 0..{MAX_SERIES_N}")
        index = {"n": args.n}
    render = table_json if args.format == "json" else table_csv

    def compute():
        return render(index, basis, q_rows(lam=lam, n=args.n, route=args.route))

    params = {"index": index, "basis": basis, "format": args.format, "route": args.route}
    text = _cached(args, "q", params, compute)
    _emit(text, args.output)
    return 0


def cmd_a(args):
    lam = parse_partition(args.lam)
    if sum(lam) > MAX_PERMUTATION_N:
        raise UsageError(f"|lambda| = {sum(lam)} exceeds limit {MAX_PERMUTATION_N}")

    def compute():
        if args.route == "direct":
            A = a_lambda_direct(lam)
        else:
            A = a_lambda_specialized(lam, args.route)
        return A.dumps() + "\n"

    text = _cached(args, "a", {"lambda": list(lam), "route": args.route}, compute)
    _emit(text, args.output)
    return 0


def verify_bounds(args):
    """Suite bounds from the command line; raises UsageError past hard limits."""
    n_limits = {
        "thm1": MAX_PERMUTATION_N, "routes": MAX_PERMUTATION_N, "thm2": MAX_PERMUTATION_N,
        "p1": MAX_PERMUTATION_N, "eulerian": MAX_PERMUTATION_N, "fund-prop": MAX_PERMUTATION_N,
        "cadogan": MAX_SERIES_N,
    }
    names = list(DEFAULT_BOUNDS) if args.suite == "all" else [args.suite]
    bounds = {}
    for name in names:
        bound = DEFAULT_BOUNDS[name]
        if name == "lemma-shuffle":
            m_ = args.max_m if args.max_m is not None else bound[0]
            k = args.max_k if args.max_k is not None else bound[1]
            if m_ + k > MAX_PERMUTATION_N:
                raise UsageError(f"m + k = {m_ + k} exceeds limit {MAX_PERMUTATION_N}")
            bound = (m_, k)
        elif name == "raising":
            bound = args.max_total if args.max_total is not None else bound
            if bound > 14:
                raise UsageError("raising total exceeds limit 14")
        elif name in n_limits:
            bound = args.max_n if args.max_n is not None else bound
            if bound > n_limits[name]:
                raise UsageError(f"{name}: n = {bound} exceeds limit {n_limits[name]}")
        bounds[name] = bound
    return bounds


def cmd_verify(args):
    bounds = verify_bounds(args)
    verdicts = run_all(bounds)
    text = report_json(verdicts, timings=args.timings) + "\n"
    if args.report != "-":
        try:
            Path(args.report).write_text(text, encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot write {args.report}: {exc}") from None
    else:
        sys.stdout.write(text)
    print(summary(verdicts), file=sys.stderr)
    for v in verdicts:
        if not v.passed:
            print(f"FAIL {v.claim} {json.dumps(v.instance)}: {json.dumps(v.witness)}", file=sys.stderr)
    return 0 if all(v.passed for v in verdicts) else 1


def build_parser():
    parser = argparse.ArgumentParser(prog="eulerqsym", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--cache-dir", default=None, help=f"cache directory (default ${CACHE_ENV})")
    sub = parser.add_subparsers(dest="command", required=True)

    pq = sub.add_parser("q", help="emit Q_{lambda,j} or Q_{n,j}")
    pq.add_argument("--lambda", dest="lam", help="partition, e.g. 2,1")
    pq.add_argument("--n", type=int, help="degree for the aggregated Q_{n,j}")
    pq.add_argument("--basis", default="s")
    pq.add_argument("--format", choices=("json", "csv"), default="json")
    pq.add_argument("--route", choices=("plethysm", "direct"), default="plethysm")
    pq.add_argument("--output", "-o", default=None)
    pq.set_defaults(func=cmd_q)

    pa = sub.add_parser("a", help="emit the (q,p)-Eulerian coefficients a_{lambda,j}")
    pa.add_argument("--lambda", dest="lam", required=True)
    pa.add_argument("--route", choices=("direct", "closed-form", "series"), default="direct")
    pa.add_argument("--output", "-o", default=None)
    pa.set_defaults(func=cmd_a)

    pv = sub.add_parser("verify", help="run a verification suite")
    pv.add_argument("suite", choices=SUITE_NAMES)
    pv.add_argument("--max-n", type=int, default=None)
    pv.add_argument("--max-m", type=int, default=None)
    pv.add_argument("--max-k", type=int, default=None)
    pv.add_argument("--max-total", type=int, default=None)
    pv.add_argument("--report", default="verify-report.json")
    pv.add_argument("--timings", action="store_true", help="include elapsed times in the report")
    pv.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"eulerqsym: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
