"""Command-line interface.

Subcommands: classify, witness, verify, scan, crosscheck, audit.  Exit
codes are stable: 0 success/achievable, 1 not achievable or a failed
check, 2 usage error, 3 budget exceeded.

Machine output (--json) is one JSON object per line; all integers are
serialized as decimal strings so consumers are safe from 64-bit overflow.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__, analysis, kernel
from .classifier import Classification, classify, classify_and_witness
from .errors import BudgetExceeded
from .exact_eval import determinant_from_factored, factored_form
from .group_algebra import GroupRingElement, direct_determinant
from .witness import WitnessCertificate

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


@dataclass(frozen=True)
class CertificateDocument:
    """Flat serialized form of a witness certificate; re-verification needs
    nothing beyond this document."""

    n: int
    f: tuple[int, ...]
    g: tuple[int, ...]
    A: int
    B: int
    C: int
    D: int
    X: int
    Y: int
    trace: dict
    verified: bool
    tool: str

    def to_json_dict(self) -> dict:
        return {
            "format": "q16det-certificate",
            "tool": self.tool,
            "n": str(self.n),
            "f": [str(c) for c in self.f],
            "g": [str(c) for c in self.g],
            "A": str(self.A),
            "B": str(self.B),
            "C": str(self.C),
            "D": str(self.D),
            "X": str(self.X),
            "Y": str(self.Y),
            "trace": _jsonable(self.trace),
            "verified": self.verified,
        }

    @classmethod
    def from_json_dict(cls, doc: dict) -> "CertificateDocument":
        return cls(
            n=int(doc["n"]),
            f=tuple(int(c) for c in doc["f"]),
            g=tuple(int(c) for c in doc["g"]),
            A=int(doc["A"]),
            B=int(doc["B"]),
            C=int(doc["C"]),
            D=int(doc["D"]),
            X=int(doc["X"]),
            Y=int(doc["Y"]),
            trace=doc.get("trace", {}),
            verified=bool(doc["verified"]),
            tool=doc.get("tool", ""),
        )


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return str(obj)
    return obj


def certificate_document(cert: WitnessCertificate) -> CertificateDocument:
    ff = cert.factored
    return CertificateDocument(
        n=cert.n,
        f=cert.element.a,
        g=cert.element.b,
        A=ff.A,
        B=ff.B,
        C=ff.C,
        D=ff.D,
        X=ff.z.x,
        Y=ff.z.y,
        trace=cert.trace,
        verified=cert.verified,
        tool=f"q16det {__version__}",
    )


def verify_document(doc: CertificateDocument) -> bool:
    """Re-verify a loaded document from its coefficient vectors alone."""
    e = GroupRingElement(doc.f, doc.g)
    if direct_determinant(e) != doc.n:
        return False
    ff = factored_form(e)
    return (
        (ff.A, ff.B, ff.C, ff.D, ff.z.x, ff.z.y)
        == (doc.A, doc.B, doc.C, doc.D, doc.X, doc.Y)
        and determinant_from_factored(ff) == doc.n
    )


def _poly_str(coeffs) -> str:
    terms = []
    for j, c in enumerate(coeffs):
        if c == 0:
            continue
        if j == 0:
            terms.append(str(c))
            continue
        xj = "x" if j == 1 else f"x^{j}"
        if c == 1:
            terms.append(xj)
        elif c == -1:
            terms.append(f"-{xj}")
        else:
            terms.append(f"{c}{xj}")
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return out


def _emit(doc: dict, as_json: bool, human_lines: list[str]) -> None:
    if as_json:
        print(json.dumps(doc, separators=(",", ":")))
    else:
        for line in human_lines:
            print(line)


def _write_out(out_dir: str | None, name: str, doc: dict) -> None:
    if out_dir is None:
        return
    path = Path(out_dir)
    path.mkdir(parents=True, exist_ok=True)
    (path / name).write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")


def _int_arg(text: str) -> int:
    try:
        return int(text, 10)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from exc


def _coeff_list(text: str) -> list[int]:
    parts = [p for p in text.replace(",", " ").split() if p]
    if len(parts) != 16:
        raise argparse.ArgumentTypeError(
            f"expected 16 comma-separated integers a0..a7,b0..b7, got {len(parts)}"
        )
    try:
        return [int(p, 10) for p in parts]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _cmd_classify(args) -> int:
    rc = EXIT_OK
    for n in args.n:
        c = classify(n)
        doc = _classification_dict(c)
        if c.achievable:
            human = [f"{n}: achievable ({doc['recipe']})"]
        else:
            human = [f"{n}: not achievable ({c.reason.value})"]
            rc = EXIT_FAIL
        _emit(doc, args.json, human)
    return rc


def _classification_dict(c: Classification) -> dict:
    doc: dict = {"n": str(c.n), "achievable": c.achievable}
    if c.recipe is not None:
        doc["recipe"] = type(c.recipe).__name__ + _recipe_args(c)
    else:
        doc["reason"] = c.reason.value
    return doc


def _recipe_args(c: Classification) -> str:
    r = c.recipe
    fields = vars(r)
    if not fields:
        return ""
    return "(" + ", ".join(f"{k}={v}" for k, v in fields.items()) + ")"


def _cmd_witness(args) -> int:
    rc = EXIT_OK
    for n in args.n:
        result = classify_and_witness(n)
        if isinstance(result, Classification):
            print(f"{n}: not achievable ({result.reason.value})", file=sys.stderr)
            rc = EXIT_FAIL
            continue
        doc = certificate_document(result).to_json_dict()
        human = [
            f"n = {n}",
            f"  f = {_poly_str(result.element.a)}",
            f"  g = {_poly_str(result.element.b)}",
            f"  A={result.factored.A} B={result.factored.B} "
            f"C={result.factored.C} D={result.factored.D} "
            f"(z = {result.factored.z.x} + {result.factored.z.y}*sqrt2)",
            f"  verified: determinant = {n}",
        ]
        _emit(doc, args.json, human)
        _write_out(args.output_dir, f"witness_{n}.json", doc)
    return rc


def _cmd_verify(args) -> int:
    e = GroupRingElement.from_coeffs(args.coeffs)
    det = direct_determinant(e)
    ff = factored_form(e)
    fd = determinant_from_factored(ff)
    agree = det == fd
    doc = {
        "f": [str(c) for c in e.a],
        "g": [str(c) for c in e.b],
        "direct_determinant": str(det),
        "A": str(ff.A),
        "B": str(ff.B),
        "C": str(ff.C),
        "D": str(ff.D),
        "X": str(ff.z.x),
        "Y": str(ff.z.y),
        "factored_determinant": str(fd),
        "agree": agree,
    }
    human = [
        f"f = {_poly_str(e.a)}",
        f"g = {_poly_str(e.b)}",
        f"direct determinant   = {det}",
        f"A*B*C^2*D^2          = {fd}   "
        f"(A={ff.A}, B={ff.B}, C={ff.C}, D={ff.D}, X={ff.z.x}, Y={ff.z.y})",
        f"paths agree: {'yes' if agree else 'NO'}",
    ]
    _emit(doc, args.json, human)
    return EXIT_OK if agree else EXIT_FAIL


def _cmd_scan(args) -> int:
    try:
        report = analysis.exhaustive_scan(
            support=args.support,
            workers=args.workers,
            budget=args.limit,
            direct=args.direct,
        )
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    doc = report.to_dict()
    human = [
        f"support {list(report.support)}: scanned {report.total} elements "
        f"({report.lane} lane, {report.workers} worker(s), "
        f"{report.elapsed_s:.2f}s)",
        f"  zero: {report.zero}  even: {report.even} "
        f"(multiples of 2^10: {report.even_mult_1024})  odd: {report.odd}",
        f"  odd residues mod 8: {report.odd_mod8}",
        f"  distinct values 5 mod 8 checked against classifier: "
        f"{report.five_mod8_values}",
        f"  violations: {len(report.violations)}",
    ]
    _emit(doc, args.json, human)
    _write_out(args.output_dir, "scan_report.json", doc)
    return EXIT_OK if report.ok else EXIT_FAIL


def _cmd_crosscheck(args) -> int:
    report = analysis.random_crosscheck(args.count, args.height, args.seed)
    doc = report.to_dict()
    _emit(
        doc,
        args.json,
        [
            f"crosscheck: {report.count} random elements, height {report.height}, "
            f"seed {report.seed}: 0 mismatches "
            f"({report.lane} lane, {report.elapsed_s:.2f}s)"
        ],
    )
    return EXIT_OK


def _cmd_audit(args) -> int:
    report = analysis.run_parity_audits(args.count, args.seed, args.height)
    doc = report.to_dict()
    human = [
        f"parity audit: {report.audited} normalized elements "
        f"(skipped {report.skipped} outside the residue class), "
        f"failures: {len(report.failures)} ({report.elapsed_s:.2f}s)"
    ]
    _emit(doc, args.json, human)
    return EXIT_OK if report.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="q16det",
        description=(
            "Exact integer group determinants of the order-16 dicyclic group: "
            "classify target values, build verified witness certificates, "
            "verify coefficient vectors, and run exhaustive/random checks."
        ),
    )
    parser.add_argument(
        "--version", action="version", version=f"q16det {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="decide whether n is an achievable value")
    p.add_argument("n", type=_int_arg, nargs="+")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("witness", help="build a verified witness certificate for n")
    p.add_argument("n", type=_int_arg, nargs="+")
    p.add_argument("--json", action="store_true")
    p.add_argument("--output-dir", default=None, help="also write witness_<n>.json here")
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("verify", help="verify both determinant paths on 16 coefficients")
    p.add_argument(
        "--coeffs",
        type=_coeff_list,
        required=True,
        metavar="a0,..,a7,b0,..,b7",
        help="16 comma-separated integers",
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("scan", help="exhaustively scan a coefficient support")
    p.add_argument(
        "--support",
        type=lambda s: [int(v, 10) for v in s.split(",")],
        default=[0, 1],
        metavar="v1,v2,...",
    )
    p.add_argument("--workers", type=int, default=1)
    p.add_argument(
        "--limit",
        type=int,
        default=analysis.DEFAULT_SCAN_BUDGET,
        help="refuse scans larger than this many elements (exit 3)",
    )
    p.add_argument("--direct", action="store_true", help="force the 16x16 elimination path")
    p.add_argument("--json", action="store_true")
    p.add_argument("--output-dir", default=None, help="also write scan_report.json here")
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("crosscheck", help="random direct-vs-factored agreement check")
    p.add_argument("--count", type=int, default=100_000)
    p.add_argument("--height", type=int, default=9)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_crosscheck)

    p = sub.add_parser("audit", help="residue/parity audit of random normalized pairs")
    p.add_argument("--count", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--height", type=int, default=9)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_audit)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
