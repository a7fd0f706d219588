"""Command-line entry point: ``deltastar <command> [options]``.

Exit status: 0 when every certificate passes, 1 when one fails, 2 for
invalid parameters.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from . import numeric
from .basis import SubbasisKind, labelled_subbasis
from .conditions import residual_report
from .core import MONOMIALS, ParameterError, Params, Wave, format_rational, from_tsv, parse_rational, to_tsv
from .solutions import (
    all_families,
    certify,
    continuous_nonsmooth_subspace,
    defect_comparison,
    defect_range_analysis,
    enumerate_solutions,
    expected_counts,
)

SCHEMA_VERSION = 1
COMMANDS = ("basis", "families", "enumerate", "certify", "check", "defects", "numeric-check")
DEFAULTS = {"k1": "3/2", "k2": "5/7", "c": "2", "format": "json", "h": 1e-4, "samples": 50, "kind": "cbas"}


@dataclass
class RunConfig:
    command: str
    n: Optional[int] = None
    n_range: Optional[Tuple[int, int]] = None
    k1: str = DEFAULTS["k1"]
    k2: str = DEFAULTS["k2"]
    c: str = DEFAULTS["c"]
    format: str = DEFAULTS["format"]
    h: float = DEFAULTS["h"]
    samples: int = DEFAULTS["samples"]
    kind: str = DEFAULTS["kind"]
    input: Optional[str] = None
    config: Optional[str] = None
    extra: Dict[str, object] = field(default_factory=dict)

    def ns(self) -> List[int]:
        if self.n_range is not None:
            lo, hi = self.n_range
            return list(range(lo, hi + 1))
        return [self.n if self.n is not None else 3]

    def params(self, n: int) -> Params:
        return Params(n, parse_rational(self.k1), parse_rational(self.k2), parse_rational(self.c))

    def echo(self) -> Dict[str, object]:
        out: Dict[str, object] = {"command": self.command}
        if self.n_range is not None:
            out["n_range"] = f"{self.n_range[0]}..{self.n_range[1]}"
        else:
            out["n"] = self.ns()[0]
        for key in ("k1", "k2", "c", "format"):
            out[key] = getattr(self, key)
        if self.command == "numeric-check":
            out["h"], out["samples"] = self.h, self.samples
        if self.command == "basis":
            out["kind"] = self.kind
        if self.input:
            out["input"] = self.input
        return out


def _parse_range(text: str) -> Tuple[int, int]:
    lo, sep, hi = str(text).partition("..")
    if not sep:
        raise ParameterError(f"--n-range expects LO..HI, got {text!r}")
    lo_i, hi_i = int(lo), int(hi)
    if lo_i > hi_i:
        raise ParameterError("--n-range lower bound exceeds upper bound")
    return lo_i, hi_i


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="deltastar", description=__doc__.splitlines()[0])
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--n", type=int)
    parser.add_argument("--n-range", dest="n_range")
    parser.add_argument("--k1")
    parser.add_argument("--k2")
    parser.add_argument("--c")
    parser.add_argument("--format", choices=("json", "tsv", "pretty"))
    parser.add_argument("--config", help="JSON file whose keys mirror the flags")
    parser.add_argument("--h", type=float)
    parser.add_argument("--samples", type=int)
    parser.add_argument("--kind", choices=[k.value for k in SubbasisKind])
    parser.add_argument("--input", help="CoeffVector TSV file to check (check command)")
    return parser


_VALUE_FLAGS = ("--k1", "--k2", "--c")


def _join_negative_values(argv: Sequence[str]) -> List[str]:
    """Rewrite ``--c -5/4`` as ``--c=-5/4`` so argparse does not read the value as a flag."""
    out: List[str] = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            if nxt is None:
                out.append(tok)
            else:
                out.append(f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def make_config(argv: Optional[Sequence[str]] = None) -> RunConfig:
    if argv is None:
        argv = sys.argv[1:]
    args = build_parser().parse_args(_join_negative_values(argv))
    merged: Dict[str, object] = {}
    if args.config:
        with open(args.config, encoding="utf-8") as fh:
            merged.update({k.replace("-", "_"): v for k, v in json.load(fh).items()})
    for key, value in vars(args).items():
        if key not in ("command", "config") and value is not None:
            merged[key] = value
    cfg = RunConfig(command=args.command, config=args.config)
    for key, value in merged.items():
        if key == "n_range":
            cfg.n_range = _parse_range(value)
        elif key == "n":
            cfg.n = int(value)
        elif key in ("k1", "k2", "c", "kind", "format", "input"):
            setattr(cfg, key, str(value))
        elif key == "h":
            cfg.h = float(value)
        elif key == "samples":
            cfg.samples = int(value)
        else:
            cfg.extra[key] = value
    return cfg


# -- commands --------------------------------------------------------------


def _wave_json(label: str, w: Wave) -> Dict[str, object]:
    rows = []
    for region, vec in w.items():
        for m, v in zip(MONOMIALS, vec):
            if v:
                rows.append([region.label, m.label, format_rational(v)])
    return {"label": label, "coeffs": rows}


def _tsv_block(members: Sequence[Tuple[str, Wave]], header: Dict[str, object]) -> str:
    lines = [f"# {k}={v}" for k, v in header.items()]
    for label, w in members:
        lines.append(f"# {label}")
        lines.append(to_tsv(w).rstrip("\n"))
    return "\n".join(line for line in lines if line) + "\n"


def cmd_basis(cfg: RunConfig, p: Params) -> Tuple[object, bool]:
    members = labelled_subbasis(p, SubbasisKind(cfg.kind))
    if cfg.format == "tsv":
        return _tsv_block(members, cfg.echo()), True
    return {"kind": cfg.kind, "count": len(members), "members": [_wave_json(*m) for m in members]}, True


def cmd_families(cfg: RunConfig, p: Params) -> Tuple[object, bool]:
    fams = all_families(p)
    expected = expected_counts(p.n)
    keys = ("off_diagonal", "antisymmetric", "nonsmooth")
    out = []
    ok = True
    for key, fam in zip(keys, fams):
        exp = expected[key]
        ok &= exp is None or exp == len(fam)
        out.append({"family": fam.label, "count": len(fam), "expected": exp, "members": fam.labels})
    total = sum(len(f) for f in fams)
    ok &= expected["total"] is None or expected["total"] == total
    return {"families": out, "total": total, "expected_total": expected["total"], "pass": ok}, ok


def cmd_enumerate(cfg: RunConfig, p: Params) -> Tuple[object, bool]:
    found = enumerate_solutions(p)
    if cfg.format == "tsv":
        return _tsv_block(found.members, {**cfg.echo(), "nullity": len(found)}), True
    return {"nullity": len(found), "members": [_wave_json(*m) for m in found.members]}, True


def cmd_certify(cfg: RunConfig, p: Params) -> Tuple[object, bool]:
    report = certify(p)
    return report, bool(report["pass"])


def cmd_check(cfg: RunConfig, p: Params) -> Tuple[object, bool]:
    if cfg.input:
        with open(cfg.input, encoding="utf-8") as fh:
            members = [("input", from_tsv(fh.read(), p))]
    else:
        members = [(f"{fam.label}:{lab}", w) for fam in all_families(p) for lab, w in fam.members]
    rows = []
    ok = True
    for label, w in members:
        for res in residual_report(w):
            ok &= res.passed
            rows.append({"member": label, **res.as_dict()})
    return {"residuals": rows, "pass": ok}, ok


def cmd_defects(cfg: RunConfig, p: Params) -> Tuple[object, bool]:
    comparison = defect_comparison(p)
    continuity = continuous_nonsmooth_subspace(p)
    analysis = defect_range_analysis(p)
    ok = comparison["pass"] and continuity["pass"] and (p.n < 3 or analysis["pass"])
    return {
        "defect_comparison": comparison,
        "continuous_subspace": continuity,
        "defect_analysis": analysis,
        "pass": ok,
    }, ok


def cmd_numeric(cfg: RunConfig, p: Params) -> Tuple[object, bool]:
    rows = []
    ok = True
    for fam in all_families(p):
        for label, w in fam.members:
            worst = max(numeric.numeric_report(w, cfg.h, cfg.samples).values())
            pts = numeric.interior_points(w, 1)
            order = numeric.convergence_order(w, pts[0]) if pts else None
            passed = worst < 1e-2 and (order is None or 1.8 <= order <= 2.2)
            ok &= passed
            rows.append({
                "check": "conditions+eigen",
                "member": f"{fam.label}:{label}",
                "maxResidual": worst,
                "order": order,
                "pass": passed,
            })
    return {"checks": rows, "pass": ok}, ok


HANDLERS = {
    "basis": cmd_basis,
    "families": cmd_families,
    "enumerate": cmd_enumerate,
    "certify": cmd_certify,
    "check": cmd_check,
    "defects": cmd_defects,
    "numeric-check": cmd_numeric,
}


def _pretty(obj: object, indent: int = 0) -> List[str]:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines += _pretty(v, indent + 1)
            else:
                lines.append(f"{pad}{k}: {v}")
        return lines
    if isinstance(obj, list):
        lines = []
        for item in obj:
            if isinstance(item, (dict, list)):
                lines.append(f"{pad}-")
                lines += _pretty(item, indent + 1)
            else:
                lines.append(f"{pad}- {item}")
        return lines
    return [f"{pad}{obj}"]


def render(cfg: RunConfig, reports: List[object]) -> str:
    if reports and all(isinstance(r, str) for r in reports):
        return "".join(reports)
    body: object = reports[0] if len(reports) == 1 else reports
    doc = {"schemaVersion": SCHEMA_VERSION, "config": cfg.echo(), "report": body}
    if cfg.format == "pretty":
        return "\n".join(_pretty(doc)) + "\n"
    return json.dumps(doc, indent=2) + "\n"


def run(cfg: RunConfig) -> Tuple[int, str]:
    """Execute a configuration; returns (exit code, serialized output)."""
    params = [cfg.params(n) for n in cfg.ns()]
    handler = HANDLERS[cfg.command]
    reports = []
    ok = True
    for p in params:
        report, passed = handler(cfg, p)
        ok &= passed
        if isinstance(report, dict) and cfg.n_range is not None:
            report = {"n": p.n, **report}
        reports.append(report)
    return (0 if ok else 1), render(cfg, reports)


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        cfg = make_config(argv)
        code, text = run(cfg)
    except (ParameterError, ValueError) as exc:
        print(f"deltastar: invalid parameters: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
