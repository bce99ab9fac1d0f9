"""Command-line front end.

    qlform <command> [--input file.dsl] [--seed N] [--count N]
                     [--trdeg-cap N] [--format json|table] [--out path]

Commands: invariants, tower, ffield-index, verify, suite, replay.  Reports
are JSON (one data model; --format table is a rendering of the same dict).
Exit codes: 0 success, 1 usage or domain error, 2 verifier FAIL (with a
replayable counterexample file written next to the report).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import cache as cache_mod
from . import towers as towers_mod
from .dsl import InstanceSpec, parse_form_dsl
from .errors import DimTooSmall, QlformError
from .forms import (
    anisotropic_part,
    divisibility_index,
    isotropy_index,
    norm_form,
    similarity_field,
)
from .serialize import (
    canonical_json,
    content_hash,
    field_to_dict,
    form_from_dict,
    form_to_dict,
)
from .splitting import (
    function_field,
    isotropy_over_function_field,
    knebusch_tower,
    verify_all,
)
from .suite import SuiteConfig, run_suite
from .towers import Caps, elem_to_expr


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="qlform",
        description="Exact invariants of quasilinear quadratic forms in characteristic 2",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_input):
        if needs_input:
            p.add_argument("--input", required=True, help="DSL input file")
        p.add_argument("--trdeg-cap", type=int, default=8)
        p.add_argument("--format", choices=("json", "table"), default="json")
        p.add_argument("--out", help="also write the JSON report to this path")

    common(sub.add_parser("invariants", help="i0, kernel, norm degree, divisibility"), True)
    common(sub.add_parser("tower", help="full splitting tower"), True)
    common(sub.add_parser("ffield-index", help="i0 of q over F(p)"), True)
    common(sub.add_parser("verify", help="run every verifier on (p, q)"), True)

    suite = sub.add_parser("suite", help="seeded randomized verification batch")
    suite.add_argument("--seed", type=int, default=1)
    suite.add_argument("--count", type=int, default=10)
    suite.add_argument("--dim-p", type=int, nargs=2, default=(2, 5), metavar=("LO", "HI"))
    suite.add_argument("--dim-q", type=int, nargs=2, default=(2, 5), metavar=("LO", "HI"))
    suite.add_argument("--max-terms", type=int, default=3)
    suite.add_argument("--max-degree", type=int, default=3)
    suite.add_argument("--base-vars", type=int, default=2)
    suite.add_argument("--workers", type=int, default=1)
    suite.add_argument(
        "--no-force-tightness",
        action="store_true",
        help="do not force the tightness witness as instance 0",
    )
    common(suite, False)

    replay = sub.add_parser("replay", help="re-run a counterexample file")
    replay.add_argument("file", help="counterexample JSON")
    common(replay, False)
    return parser


def _load_spec(args) -> InstanceSpec:
    caps = Caps(trdeg_cap=args.trdeg_cap)
    with open(args.input, encoding="utf-8") as handle:
        text = handle.read()
    spec = parse_form_dsl(text, caps)
    spec.command = args.command
    return spec


def _target_form(spec: InstanceSpec):
    target = spec.q if spec.q is not None else spec.p
    if target is None:
        raise DimTooSmall("input declares no form")
    return target


def run_command(spec: InstanceSpec):
    """Dispatch a parsed instance; returns (report dict, exit code)."""
    command = spec.command
    if command == "invariants":
        q = _target_form(spec)
        qa = anisotropic_part(q)
        report = {
            "command": "invariants",
            "field": field_to_dict(q.field),
            "dim": q.dim,
            "i0": isotropy_index(q),
            "dim_an": qa.dim,
            "anisotropic_part": [
                elem_to_expr(c, q.field.base_vars) for c in qa.coeffs
            ],
        }
        nf = norm_form(q)
        d0 = divisibility_index(q)
        report.update(
            {
                "lndeg": nf.lndeg,
                "d0": d0.index,
                "g_dim": similarity_field(q).dim,
                "pfister_witness": [
                    elem_to_expr(c, q.field.base_vars) for c in d0.witness.slots
                ],
            }
        )
        return report, 0
    if command == "tower":
        q = _target_form(spec)
        tower = knebusch_tower(q)
        report = {
            "command": "tower",
            "h": tower.height,
            "j": list(tower.j_sequence),
            "i": list(tower.i_sequence),
            "lndeg": list(tower.lndeg_sequence),
            "d": list(tower.d_sequence),
            "levels": [
                {
                    "trdeg": lv.field.trdeg,
                    "field": field_to_dict(lv.field),
                    "kernel": [
                        elem_to_expr(c, lv.field.base_vars) for c in lv.kernel.coeffs
                    ],
                    "dim_kernel": lv.kernel.dim,
                }
                for lv in tower.levels
            ],
        }
        return report, 0
    if command == "ffield-index":
        if spec.p is None or spec.q is None:
            raise DimTooSmall("ffield-index needs both p and q")
        ff = function_field(spec.p)
        i0 = isotropy_over_function_field(spec.q, spec.p)
        return (
            {
                "command": "ffield-index",
                "i0_qFp": i0,
                "function_field": field_to_dict(ff.result_field),
            },
            0,
        )
    if command == "verify":
        if spec.p is None or spec.q is None:
            raise DimTooSmall("verify needs both p and q")
        result = verify_all(spec.p, spec.q)
        report = {
            "command": "verify",
            "instance": {"p": form_to_dict(spec.p), "q": form_to_dict(spec.q)},
            "quantities": result["quantities"],
            "verdicts": result["verdicts"],
            "all_pass": result["all_pass"],
        }
        return report, 0 if result["all_pass"] else 2
    raise QlformError(f"unknown command {command!r}")


def _write_counterexamples(report, out_dir):
    """One replayable file per FAIL; returns the paths written."""
    paths = []
    failures = []
    if report.get("command") == "verify" and not report.get("all_pass", True):
        failures.append(
            {"p": report["instance"]["p"], "q": report["instance"]["q"], "report": report}
        )
    for record in report.get("instances", ()):
        if record.get("status") == "FAIL":
            failures.append(
                {"p": record["p"], "q": record["q"], "report": record["report"]}
            )
    for blob in failures:
        digest = content_hash({"p": blob["p"], "q": blob["q"]})[:12]
        path = os.path.join(out_dir, f"counterexample-{digest}.json")
        with open(path, "w", encoding="utf-8") as handle:
            json.dump(blob, handle, indent=2, sort_keys=True)
        paths.append(path)
    return paths


def _render_table(report, out=None):
    out = out if out is not None else sys.stdout

    def emit(prefix, obj):
        if isinstance(obj, dict):
            for key in sorted(obj):
                emit(f"{prefix}{key}.", obj[key])
        elif isinstance(obj, list):
            out.write(f"{prefix[:-1]:<40} {json.dumps(obj)}\n")
        else:
            out.write(f"{prefix[:-1]:<40} {obj}\n")

    skip = {"instances"}
    emit("", {k: v for k, v in report.items() if k not in skip})
    if "instances" in report:
        out.write(f"{'idx':<5}{'status':<9}{'dim_p':<7}{'dim_q':<7}{'i0_qFp':<8}\n")
        for r in report["instances"]:
            q = r.get("report", {}).get("quantities", {})
            out.write(
                f"{r['index']:<5}{r['status']:<9}"
                f"{q.get('dim_p', '-'):<7}{q.get('dim_q', '-'):<7}{q.get('i0_qFp', '-'):<8}\n"
            )


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    cache_dir = os.environ.get("QLFORM_CACHE_DIR")
    if cache_dir:
        towers_mod.set_rank_cache(cache_mod.DiskRankCache(cache_dir))
    started = time.monotonic()
    try:
        if args.command == "suite":
            config = SuiteConfig(
                seed=args.seed,
                count=args.count,
                dim_p=tuple(args.dim_p),
                dim_q=tuple(args.dim_q),
                max_terms=args.max_terms,
                max_degree=args.max_degree,
                base_vars=args.base_vars,
                trdeg_cap=args.trdeg_cap,
                include_tightness_witness=not args.no_force_tightness,
            )
            report = run_suite(config, workers=args.workers)
            report["command"] = "suite"
            code = 2 if report["aggregate"]["fail"] else 0
        elif args.command == "replay":
            with open(args.file, encoding="utf-8") as handle:
                blob = json.load(handle)
            caps = Caps(trdeg_cap=args.trdeg_cap)
            p = form_from_dict(blob["p"], caps)
            q = form_from_dict(blob["q"], caps, field=p.field)
            result = verify_all(p, q)
            report = {
                "command": "replay",
                "instance": {"p": blob["p"], "q": blob["q"]},
                "quantities": result["quantities"],
                "verdicts": result["verdicts"],
                "all_pass": result["all_pass"],
            }
            code = 0 if result["all_pass"] else 2
        else:
            spec = _load_spec(args)
            report, code = run_command(spec)
    except QlformError as exc:
        error = {"error": {"code": exc.code, "message": str(exc)}}
        print(json.dumps(error, indent=2, sort_keys=True))
        return 1
    except OSError as exc:
        print(json.dumps({"error": {"code": "IO_ERROR", "message": str(exc)}}))
        return 1

    report.setdefault("timing", {})["total_s"] = time.monotonic() - started
    if code == 2:
        out_dir = os.path.dirname(os.path.abspath(args.out)) if args.out else os.getcwd()
        report["counterexample_files"] = _write_counterexamples(report, out_dir)

    rendered = json.dumps(report, indent=2, sort_keys=True)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(rendered + "\n")
    if args.format == "table":
        _render_table(report)
    else:
        print(rendered)
    return code


if __name__ == "__main__":
    sys.exit(main())
