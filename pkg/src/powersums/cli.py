"""Command-line front end for the family diagnoses and arrangement scans.

Every command builds a report ``{config, results, provenance}`` and prints
it as JSON, CSV or plain text. Rationals always travel as ``"p/q"`` strings.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import logging
import os
import re
import sys
import time
import warnings
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable

from . import __version__
from . import arrangements as arr
from . import families as fam
from .exactmath import rational
from .genalg import DEFAULT_MAX_DEGREE, CmVerdict
from .symfun import gorenstein_check, hilbert_P, hilbert_P_form2, hilbert_P_form3

log = logging.getLogger("powersums")

COMMANDS = (
    "hilbert",
    "cm-check",
    "solve-cqt",
    "quasi-dim",
    "arrangement",
    "merge-kernel",
    "appendix",
    "gorenstein",
    "conjecture-scan",
)
FAMILIES = ("type11", "type-rs", "type-1rs", "mquasi", "mquasi-trig")
CM_CSV_HEADER = ("degree", "dim_computed", "dim_predicted", "dim_conditions")
SCAN_DEFAULT_DEGREE = 10


class UsageError(ValueError):
    """Bad or inadmissible parameters; maps to exit status 2."""


# -- config -----------------------------------------------------------------------


@dataclass
class ExperimentConfig:
    command: str
    params: dict[str, Any] = field(default_factory=dict)
    max_degree: int = DEFAULT_MAX_DEGREE
    seed: int = 0
    format: str = "pretty"
    cache_dir: str | None = None

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "ExperimentConfig":
        return cls(**json.loads(text))

    def cache_key(self) -> str:
        """Content hash of everything that affects the results."""
        payload = {
            "command": self.command,
            "params": self.params,
            "max_degree": self.max_degree,
            "seed": self.seed,
            "version": __version__,
        }
        return hashlib.sha256(json.dumps(payload, sort_keys=True).encode()).hexdigest()


def exact(value: Any) -> Any:
    """Make results JSON-safe: rationals become ``"p/q"`` strings."""
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float):
        raise TypeError("floats never appear in reports")
    if isinstance(value, dict):
        return {str(k): exact(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [exact(v) for v in value]
    raise TypeError(f"cannot serialize {type(value).__name__}")


# -- cache ------------------------------------------------------------------------


def cached(cache_dir: str | None, key: str, compute: Callable[[], dict]) -> dict:
    """One JSON file per key; unreadable entries are recomputed and overwritten."""
    if not cache_dir:
        return compute()
    path = Path(cache_dir) / f"{key}.json"
    try:
        if path.exists():
            entry = json.loads(path.read_text(encoding="utf-8"))
            if entry.get("key") == key and "results" in entry:
                log.info("cache hit %s", key[:12])
                return entry["results"]
            log.warning("cache entry %s is malformed; recomputing", path)
    except (OSError, ValueError) as exc:
        log.warning("cache read failed (%s); recomputing", exc)
    results = compute()
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps({"key": key, "results": results}, sort_keys=True), encoding="utf-8")
        tmp.replace(path)
    except OSError as exc:
        warnings.warn(f"cache write failed, continuing uncached: {exc}", RuntimeWarning, stacklevel=2)
    return results


# -- argument parsing -----------------------------------------------------------------


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(",") if p.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _rat(text: str) -> Fraction:
    try:
        return rational(text.strip())
    except (TypeError, ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"malformed rational {text!r}") from None


def _rats(text: str) -> tuple[Fraction, ...]:
    return tuple(_rat(p) for p in text.split(","))


_NEG_RATIONAL = re.compile(r"^-\d[\d/,-]*$")
_SEQ_FLAG = re.compile(r"^--a(\d+)$")
_SWITCHES = {"--timing", "--verbose", "--version", "--help"}


def _normalize_argv(argv: list[str]) -> tuple[list[str], dict[int, str]]:
    """Pull out ``--aN value`` overrides and protect negative rationals from the option parser."""
    out: list[str] = []
    overrides: dict[int, str] = {}
    i = 0
    while i < len(argv):
        tok = argv[i]
        m = _SEQ_FLAG.match(tok.split("=", 1)[0])
        if m:
            if "=" in tok:
                overrides[int(m.group(1))] = tok.split("=", 1)[1]
                i += 1
            elif i + 1 < len(argv):
                overrides[int(m.group(1))] = argv[i + 1]
                i += 2
            else:
                raise UsageError(f"{tok} needs a value")
            continue
        if _NEG_RATIONAL.match(tok) and out and out[-1].startswith("--") and "=" not in out[-1] and out[-1] not in _SWITCHES:
            out[-1] = f"{out[-1]}={tok}"
        elif _NEG_RATIONAL.match(tok):
            # a leading space keeps argparse from reading a negative positional as a flag
            out.append(f" {tok}")
        else:
            out.append(tok)
        i += 1
    if overrides.get(0) is not None:
        raise UsageError("sequence indices start at 1")
    return out, overrides


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-degree", type=int, default=None, help=f"degree bound D (default {DEFAULT_MAX_DEGREE})")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=("json", "csv", "pretty"), default="pretty")
    common.add_argument("--cache-dir", default=None, help="cache directory (or env POWERSUM_CACHE)")
    common.add_argument("--timing", action="store_true", help="add wall-clock time to provenance")
    common.add_argument("-v", "--verbose", action="store_true")

    family = argparse.ArgumentParser(add_help=False)
    family.add_argument("--family", choices=FAMILIES)
    family.add_argument("--cqt", type=_rats, help="c,q,t for type11")
    family.add_argument("--qt", help="q,t, or 'random' for seeded generic values")
    family.add_argument("--c", type=_rat, default=None, help="scale c for --a (type11) or --qt (type-rs)")
    family.add_argument("--a", type=_rat, help="constant coefficient a")
    family.add_argument("--seq", type=_rats, help="explicit a1,a2,... for type11")
    family.add_argument("--rs", type=_ints, help="r,s")
    family.add_argument("--m", type=int)

    parser = argparse.ArgumentParser(prog="powersums", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("hilbert", parents=[common, family], help="predicted Hilbert series of a family")
    sub.add_parser("cm-check", parents=[common, family], help="generators, conditions and closed form compared")
    p = sub.add_parser("solve-cqt", parents=[common], help="rational (c,q,t) from a1,a2,a3")
    p.add_argument("values", nargs=3, type=_rat)
    sub.add_parser("quasi-dim", parents=[common, family], help="dimensions cut out by quasi-invariance conditions")
    p = sub.add_parser("arrangement", parents=[common], help="Hilbert function and CM test of X_lambda")
    p.add_argument("--lambda", dest="lam", type=_ints, required=True)
    p = sub.add_parser("merge-kernel", parents=[common], help="kernel of merging two groups of size m")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p = sub.add_parser("appendix", parents=[common], help="Hilbert series of m-quasi-invariants from characters")
    p.add_argument("--rs", type=_ints, required=True)
    p.add_argument("--m", type=int, required=True)
    p = sub.add_parser("gorenstein", parents=[common], help="palindromicity of the Hilbert series numerator")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p = sub.add_parser("conjecture-scan", parents=[common], help="CM tests over all small partitions")
    p.add_argument("--n-max", type=int, default=6)
    return parser


def _family_params(ns: argparse.Namespace, overrides: dict[int, str]) -> dict[str, Any]:
    params: dict[str, Any] = {"family": ns.family}
    for key in ("cqt", "seq"):
        val = getattr(ns, key, None)
        if val is not None:
            params[key] = [str(v) for v in val]
    for key in ("a", "c"):
        val = getattr(ns, key, None)
        if val is not None:
            params[key] = str(val)
    if getattr(ns, "qt", None) is not None:
        params["qt"] = ns.qt if ns.qt == "random" else [str(v) for v in _rats(ns.qt)]
    if getattr(ns, "rs", None) is not None:
        params["rs"] = list(ns.rs)
    if getattr(ns, "m", None) is not None:
        params["m"] = ns.m
    if overrides:
        params["overrides"] = {str(k): str(_rat(v)) for k, v in sorted(overrides.items())}
    return params


def spec_from_params(params: dict[str, Any], D: int, seed: int) -> fam.FamilySpec:
    """Turn CLI parameters into a family spec; raises ``UsageError`` on missing pieces."""
    family = params.get("family")
    if family is None:
        raise UsageError("--family is required")
    R = [rational(v) for v in params.get("cqt", [])]
    if family == "type11":
        overrides = {int(k): rational(v) for k, v in params.get("overrides", {}).items()}
        if "cqt" in params:
            if len(R) != 3:
                raise UsageError("--cqt takes c,q,t")
            src: Any = fam.CQT(*R)
        elif "a" in params:
            src = fam.ConstA(rational(params.get("c", 1)), rational(params["a"]))
        elif "seq" in params:
            src = fam.ExplicitSeq(tuple(rational(v) for v in params["seq"]))
        elif params.get("qt") == "random":
            src = fam.sample_generic_cqt(seed, D)
        elif overrides:
            n = max(overrides)
            if sorted(overrides) != list(range(1, n + 1)):
                raise UsageError("--aN overrides without a base sequence must cover a1..an")
            return fam.Type11(fam.ExplicitSeq(tuple(overrides[i] for i in range(1, n + 1))))
        else:
            raise UsageError("type11 needs --cqt, --a, --seq or --a1.. values")
        if overrides:
            base = fam.Type11(src)
            n = max(D, max(overrides))
            vals = [overrides.get(i) for i in range(1, n + 1)]
            for i, v in enumerate(vals, start=1):
                if v is None:
                    vals[i - 1] = fam.coefficient(base, i)
            return fam.Type11(fam.ExplicitSeq(tuple(vals)))
        return fam.Type11(src)
    rs = params.get("rs")
    if not rs or len(rs) != 2:
        raise UsageError(f"{family} needs --rs r,s")
    r, s = rs
    if family in ("mquasi", "mquasi-trig"):
        if params.get("m") is None:
            raise UsageError(f"{family} needs --m")
        cls = fam.MQuasi if family == "mquasi" else fam.MQuasiTrig
        return cls(r, s, params["m"])
    cls = fam.TypeRS if family == "type-rs" else fam.Type1RS
    qt = params.get("qt")
    if qt == "random":
        src = fam.sample_generic_qt(r, s, seed, D, type1rs=cls is fam.Type1RS)
    elif qt is not None:
        if len(qt) != 2:
            raise UsageError("--qt takes q,t")
        src = fam.QT(rational(qt[0]), rational(qt[1]), rational(params.get("c", 1)))
    elif "a" in params:
        src = fam.Classical(rational(params["a"]))
    else:
        raise UsageError(f"{family} needs --a or --qt")
    return cls(r, s, src)


def _spec_summary(spec: fam.FamilySpec) -> dict[str, Any]:
    def unpack(obj):
        if hasattr(obj, "__dataclass_fields__"):
            d = {"kind": type(obj).__name__}
            for k in obj.__dataclass_fields__:
                d[k] = unpack(getattr(obj, k))
            return d
        if isinstance(obj, tuple):
            return [unpack(v) for v in obj]
        return obj

    return exact(unpack(spec))


def _verdict(v: CmVerdict) -> dict[str, Any]:
    return {
        "verdict": v.label,
        "detail": str(v),
        "degree": v.degree,
        "expected": v.expected,
        "computed": v.computed,
        "reason": None if v.consistent else v.reason,
    }


# -- commands ----------------------------------------------------------------------------


def _screen(spec: fam.FamilySpec, D: int, provenance: dict) -> None:
    res = fam.admissible(spec, D)
    provenance["screening"] = {"admissible": res.verdict, "rule": res.rule}
    if not res:
        raise fam.InadmissibleSpec(res.rule)


def run_hilbert(cfg: ExperimentConfig, prov: dict) -> dict:
    D = cfg.max_degree
    spec = spec_from_params(cfg.params, D, cfg.seed)
    _screen(spec, D, prov)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        series = fam.predicted_hilbert(spec, D).int_coefficients(D)
    return {"spec": _spec_summary(spec), "predicted": series}


def run_cm_check(cfg: ExperimentConfig, prov: dict) -> dict:
    D = cfg.max_degree
    spec = spec_from_params(cfg.params, D, cfg.seed)
    _screen(spec, D, prov)
    src = getattr(spec, "source", None)
    if isinstance(src, fam.ExplicitSeq) and len(src.values) < D:
        raise UsageError(f"explicit sequence has {len(src.values)} terms but --max-degree {D} needs a1..a{D}")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        diag = fam.cm_diagnose(spec, D)
    return {
        "spec": _spec_summary(spec),
        **_verdict(diag.verdict),
        "first_deviation": diag.first_deviation,
        "dims": {
            "computed": list(diag.computed),
            "predicted": diag.predicted_list(),
            "conditions": None if diag.condition_dims is None else list(diag.condition_dims),
        },
        "quotient": None if diag.quotient is None else list(diag.quotient),
        "notes": diag.notes,
    }


def run_solve_cqt(cfg: ExperimentConfig, prov: dict) -> dict:
    vals = [rational(v) for v in cfg.params["values"]]
    if 0 in vals:
        raise UsageError("a1, a2, a3 must be nonzero")
    sol = fam.solve_cqt(*vals)
    return {"solutions": [[str(x) for x in s] for s in sol.solutions], "indicator": sol.indicator}


def run_quasi_dim(cfg: ExperimentConfig, prov: dict) -> dict:
    D = cfg.max_degree
    spec = spec_from_params(cfg.params, D, cfg.seed)
    _screen(spec, D, prov)
    dims = fam.condition_dims(spec, D)
    if dims is None:
        raise UsageError("no quasi-invariance description for this sequence")
    return {
        "spec": _spec_summary(spec),
        "filtered": isinstance(spec, fam.MQuasiTrig),
        "conditions": list(dims),
    }


def run_arrangement(cfg: ExperimentConfig, prov: dict) -> dict:
    lam = tuple(cfg.params["lambda"])
    D = cfg.max_degree
    try:
        report = arr.cm_test_report(lam, D, cfg.seed)
    except arr.ArrangementError as exc:
        return {
            "lambda": list(lam),
            "components": len(arr.components(lam)),
            "hilbert_function": list(arr.hilbert_function(lam, D)),
            "cm": None,
            "note": str(exc),
        }
    return {
        "lambda": list(lam),
        "components": len(arr.components(lam)),
        "hilbert_function": list(report.dims),
        "quotient": list(report.quotient),
        "cm": _verdict(report.verdict),
        "forms": [list(f) for f in report.forms],
        "conjectured_cm": arr.conjecture_classifier(lam),
    }


def run_merge_kernel(cfg: ExperimentConfig, prov: dict) -> dict:
    m, n = cfg.params["m"], cfg.params["n"]
    if n < 3 or m < 1:
        raise UsageError("need --n >= 3 and --m >= 1")
    mk = arr.merge_kernel_dims(m, n, cfg.max_degree)
    return {"kernel": list(mk.dims), "predicted": list(mk.predicted), "matches": mk.matches}


def run_appendix(cfg: ExperimentConfig, prov: dict) -> dict:
    r, s = cfg.params["rs"]
    m, D = cfg.params["m"], cfg.max_degree
    if m <= s:
        raise UsageError("need m > s")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        out: dict[str, Any] = {"hilbert_P": hilbert_P(r, s, m, D).int_coefficients(D)}
        if s == 1:
            out["form2"] = hilbert_P_form2(r, m, D).int_coefficients(D)
            out["form3"] = hilbert_P_form3(r, m, D).int_coefficients(D)
            out["agree"] = out["hilbert_P"] == out["form2"] == out["form3"]
    return out


def run_gorenstein(cfg: ExperimentConfig, prov: dict) -> dict:
    rep = gorenstein_check(cfg.params["r"], cfg.params["m"], cfg.max_degree)
    coeffs = [int(rep.numerator.coefficient((i,))) for i in range(rep.degree + 1)]
    return {
        "numerator": coeffs,
        "palindromic": rep.palindromic,
        "degree": rep.degree,
        "expected_degree": rep.expected_degree,
        "degree_consistent": rep.degree_consistent,
    }


def run_scan(cfg: ExperimentConfig, prov: dict) -> dict:
    rows = arr.conjecture_scan(cfg.params["n_max"], cfg.max_degree, cfg.seed)
    prov["note"] = "scan outcomes are evidence up to the degree bound, not proofs"
    return {
        "rows": [
            {
                "lambda": list(row.shape),
                "conjectured_cm": row.predicted_cm,
                "outcome": row.outcome,
                "first_deviation": row.first_deviation,
            }
            for row in rows
        ]
    }


RUNNERS: dict[str, Callable[[ExperimentConfig, dict], dict]] = {
    "hilbert": run_hilbert,
    "cm-check": run_cm_check,
    "solve-cqt": run_solve_cqt,
    "quasi-dim": run_quasi_dim,
    "arrangement": run_arrangement,
    "merge-kernel": run_merge_kernel,
    "appendix": run_appendix,
    "gorenstein": run_gorenstein,
    "conjecture-scan": run_scan,
}


# -- output ------------------------------------------------------------------------------


def _csv_rows(command: str, results: dict) -> tuple[tuple[str, ...], list[list[Any]]]:
    if command == "cm-check":
        dims = results["dims"]
        cond = dims["conditions"]
        return CM_CSV_HEADER, [
            [d, c, p, "" if cond is None else cond[d]]
            for d, (c, p) in enumerate(zip(dims["computed"], dims["predicted"]))
        ]
    if command == "hilbert":
        return ("degree", "dim_predicted"), [[d, v] for d, v in enumerate(results["predicted"])]
    if command == "quasi-dim":
        return ("degree", "dim_conditions"), [[d, v] for d, v in enumerate(results["conditions"])]
    if command == "solve-cqt":
        return ("c", "q", "t"), [list(s) for s in results["solutions"]]
    if command == "arrangement":
        q = results.get("quotient") or []
        return ("degree", "dim", "dim_quotient"), [
            [d, v, q[d] if d < len(q) else ""] for d, v in enumerate(results["hilbert_function"])
        ]
    if command == "merge-kernel":
        return ("degree", "dim_kernel", "dim_predicted"), [
            [d, k, p] for d, (k, p) in enumerate(zip(results["kernel"], results["predicted"]))
        ]
    if command == "appendix":
        cols = [k for k in ("hilbert_P", "form2", "form3") if k in results]
        return ("degree", *cols), [[d] + [results[c][d] for c in cols] for d in range(len(results["hilbert_P"]))]
    if command == "gorenstein":
        return ("degree", "coefficient"), [[d, c] for d, c in enumerate(results["numerator"])]
    if command == "conjecture-scan":
        return ("lambda", "conjectured_cm", "outcome", "first_deviation"), [
            [
                " ".join(str(p) for p in row["lambda"]),
                str(row["conjectured_cm"]).lower(),
                row["outcome"],
                "" if row["first_deviation"] is None else row["first_deviation"],
            ]
            for row in results["rows"]
        ]
    raise KeyError(command)


def _pretty(report: dict) -> str:
    cfg, res = report["config"], report["results"]
    lines = [f"{cfg['command']}  (D={cfg['max_degree']}, seed={cfg['seed']})"]
    for key, val in res.items():
        if isinstance(val, dict) and key == "dims":
            for k, v in val.items():
                lines.append(f"  {k + ':':<11} {'' if v is None else ' '.join(map(str, v))}")
        elif key == "rows":
            for row in val:
                lam = ",".join(map(str, row["lambda"]))
                dev = "" if row["first_deviation"] is None else f" at {row['first_deviation']}"
                lines.append(f"  ({lam}){'':<{14 - len(lam)}} conjectured={row['conjectured_cm']!s:<5} {row['outcome']}{dev}")
        elif isinstance(val, list) and all(isinstance(v, int) for v in val):
            lines.append(f"  {key}: {' '.join(map(str, val))}")
        else:
            lines.append(f"  {key}: {json.dumps(val)}")
    rule = report["provenance"].get("screening", {}).get("rule")
    if rule:
        lines.append(f"  screening rule: {rule}")
    return "\n".join(lines) + "\n"


def emit(report: dict, fmt: str) -> bytes:
    """Serialize deterministically."""
    if fmt == "json":
        return (json.dumps(report, sort_keys=True, indent=2) + "\n").encode("utf-8")
    if fmt == "csv":
        header, rows = _csv_rows(report["config"]["command"], report["results"])
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buf.getvalue().encode("utf-8")
    return _pretty(report).encode("utf-8")


# -- entry point -----------------------------------------------------------------------------


def _config_from_args(ns: argparse.Namespace, overrides: dict[int, str]) -> ExperimentConfig:
    cmd = ns.command
    default_D = SCAN_DEFAULT_DEGREE if cmd == "conjecture-scan" else DEFAULT_MAX_DEGREE
    if cmd == "gorenstein":
        default_D = 20
    D = ns.max_degree if ns.max_degree is not None else default_D
    if D < 0:
        raise UsageError("--max-degree must be nonnegative")
    if cmd in ("hilbert", "cm-check", "quasi-dim"):
        params = _family_params(ns, overrides)
    elif overrides:
        raise UsageError("--aN values only apply to type11 families")
    elif cmd == "solve-cqt":
        params = {"values": [str(v) for v in ns.values]}
    elif cmd == "arrangement":
        params = {"lambda": list(ns.lam)}
    elif cmd == "merge-kernel":
        params = {"m": ns.m, "n": ns.n}
    elif cmd == "appendix":
        if len(ns.rs) != 2:
            raise UsageError("--rs takes r,s")
        params = {"rs": list(ns.rs), "m": ns.m}
    elif cmd == "gorenstein":
        params = {"r": ns.r, "m": ns.m}
    else:
        params = {"n_max": ns.n_max}
    cache_dir = ns.cache_dir or os.environ.get("POWERSUM_CACHE") or None
    return ExperimentConfig(cmd, params, D, ns.seed, ns.format, cache_dir)


def dispatch(argv: list[str] | None = None, out=None) -> int:
    """Run one command; 0 on success (refutations included), 2 on bad input, 1 otherwise."""
    argv = list(sys.argv[1:] if argv is None else argv)
    out = out if out is not None else sys.stdout.buffer
    try:
        args, overrides = _normalize_argv(argv)
        ns = build_parser().parse_args(args)
        logging.basicConfig(level=logging.INFO if ns.verbose else logging.WARNING, format="%(message)s")
        cfg = _config_from_args(ns, overrides)
    except SystemExit as exc:
        return int(exc.code or 0)
    except (UsageError, ValueError, TypeError, argparse.ArgumentTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    provenance: dict[str, Any] = {"version": __version__, "seed": cfg.seed}
    start = time.perf_counter()
    try:

        def compute() -> dict:
            extra: dict[str, Any] = {}
            results = RUNNERS[cfg.command](cfg, extra)
            return {"results": exact(results), "provenance": exact(extra)}

        payload = cached(cfg.cache_dir, cfg.cache_key(), compute)
        results = payload["results"]
        provenance.update(payload["provenance"])
    except fam.InadmissibleSpec as exc:
        print(f"inadmissible parameters: {exc.rule}", file=sys.stderr)
        return 2
    except (UsageError, arr.ArrangementError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001
        log.exception("internal error")
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    if ns.timing:
        provenance["seconds"] = f"{time.perf_counter() - start:.3f}"
    config = asdict(cfg)
    config.pop("cache_dir")
    config.pop("format")
    report = {"config": config, "results": results, "provenance": provenance}
    out.write(emit(report, cfg.format))
    out.flush()
    return 0


def main() -> None:
    sys.exit(dispatch())
