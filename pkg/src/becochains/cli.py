"""Deterministic verification reports for the pipeline, as text or JSON."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from . import __version__
from .algebras import (
    Word,
    coproduct,
    d_w1,
    hochschild_d,
    parse_word,
    w_basis,
    word_text,
    yb_basis,
    yb_normalize,
)
from .cochains import (
    ar,
    coboundary,
    cochain_text,
    cup,
    cup1,
    from_simplices,
    omega,
    pullback,
)
from .complexes import MAX_ENUM_ARITY, SUPPORTED_T, count_by_degree, get_complex
from .cycles import h2_cycle_table
from .obstruction import (
    ANCHOR_WORDS,
    ANCHOR_VALUES,
    alpha_hom,
    beta,
    dual_d,
    gauge_shift,
    hochschild_d as _hochschild_d,
    is_coboundary,
    pair_alpha_beta,
    phi_d,
    random_gauge,
    triangle,
)
from .algebras import arnold_basis

# Displayed per-degree table sizes, by (arity, filtration).
EXPECTED_COUNTS: Dict[Tuple[int, int], List[int]] = {
    (2, 2): [2, 2],
    (3, 2): [6, 30, 36, 12],
    (4, 2): [24, 552, 2496, 4704, 4416, 2064, 384],
    (2, 3): [2, 2, 2],
    (3, 3): [6, 30, 150, 360, 420, 228, 48],
    (4, 3): [24, 552, 12696, 133200, 725136, 2329152],
}

# Hard enumeration ceilings per (arity, filtration) for the dims command.
DEGREE_CAPS: Dict[Tuple[int, int], int] = {
    (2, 2): 1,
    (3, 2): 3,
    (4, 2): 6,
    (5, 2): 4,
    (2, 3): 2,
    (3, 3): 6,
    (4, 3): 5,
}


@dataclass
class Check:
    name: str
    expected: Any
    computed: Any
    passed: bool
    provenance: str


@dataclass
class Report:
    command: str
    params: Dict[str, Any]
    checks: List[Check] = field(default_factory=list)
    verdict: str = ""

    def add(self, name: str, expected: Any, computed: Any, provenance: str,
            passed: Optional[bool] = None) -> bool:
        if passed is None:
            passed = expected == computed
        self.checks.append(Check(name, expected, computed, passed, provenance))
        return passed

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> str:
        payload = {
            "version": __version__,
            "command": self.command,
            "params": self.params,
            "checks": [
                {
                    "name": c.name,
                    "expected": c.expected,
                    "computed": c.computed,
                    "pass": c.passed,
                    "provenance": c.provenance,
                }
                for c in self.checks
            ],
            "verdict": self.verdict,
        }
        return json.dumps(payload, indent=2) + "\n"

    def to_text(self) -> str:
        lines = [f"becochains {self.command} (version {__version__})"]
        if self.params:
            lines.append("params: " + " ".join(f"{k}={v}" for k, v in self.params.items()))
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            exp = "-" if c.expected is None else c.expected
            lines.append(
                f"{status} {c.name}: expected={exp} computed={c.computed} [{c.provenance}]"
            )
        lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        return self.to_json() if fmt == "json" else self.to_text()


def _monomials_text(monomials) -> str:
    if not monomials:
        return "0"
    return " + ".join(sorted(word_text("A", m) for m in monomials))


def _pairs_text(pairs) -> str:
    """Canonical text of a set of (left word, right word) tensor pairs."""
    if not pairs:
        return "0"
    return " + ".join(sorted(f"{word_text('B', u)} (x) {word_text('B', v)}" for u, v in pairs))


def cmd_dims(k: int, t: int, max_degree: Optional[int]) -> Report:
    cap = DEGREE_CAPS[(k, t)]
    top = (t - 1) * k * (k - 1) // 2
    limit = min(cap, top) if max_degree is None else max_degree
    report = Report("dims", {"k": k, "t": t, "max_degree": limit})
    counts = count_by_degree(k, t, limit)
    expected = EXPECTED_COUNTS.get((k, t))
    for deg, n in enumerate(counts):
        if expected is not None and deg < len(expected):
            report.add(f"count-deg-{deg}", expected[deg], n, "paper")
        else:
            report.add(f"count-deg-{deg}", None, n, "derived", passed=True)
    report.verdict = "PASS" if report.all_passed else "FAIL"
    return report


# The three quadratic product displays of the three-letter complex, plus the
# bounding cochain identity they sum to.
_TRIPLE_DISPLAYS = (
    ("omega13-omega12", (1, 3), (1, 2), ["123|312|321", "132|312|321", "132|312|231"]),
    ("omega23-omega12", (2, 3), (1, 2), ["123|132|321", "123|312|321"]),
    ("omega23-omega13", (2, 3), (1, 3), ["123|132|312", "123|132|321", "213|132|312"]),
)

_DAR_DISPLAY = ["132|312|231", "132|312|321", "123|132|312", "213|132|312"]

_PULLBACK_DISPLAY = ["4312", "3412", "3142", "3124"]

# The six displayed coproduct values on the anchor level-2 generators.
_COPRODUCT_DISPLAYS: Dict[str, List[Tuple[str, str]]] = {
    "B12.B23.B13": [
        ("B12.B13", "B12"), ("B12.B23", "B12"), ("B23.B13", "B12"),
        ("B12.B23", "B13"), ("B23", "B12.B13"), ("B12", "B23.B13"),
    ],
    "B12.B24.B14": [
        ("B12.B14", "B12"), ("B12.B24", "B12"), ("B24.B14", "B12"),
        ("B12.B24", "B14"), ("B24", "B12.B14"), ("B12", "B24.B14"),
    ],
    "B12.B34.B24": [
        ("B34.B24", "B12"), ("B12.B24", "B23"), ("B12.B34", "B23"),
        ("B12.B34", "B24"), ("B24", "B12.B23"), ("B34", "B12.B23"),
        ("B34", "B12.B24"), ("B12", "B34.B24"),
    ],
    "B23.B13.B24": [
        ("B13.B24", "B12"), ("B23.B24", "B12"), ("B23.B24", "B13"),
        ("B23.B13", "B24"), ("B13", "B12.B24"), ("B23", "B12.B24"),
        ("B23", "B13.B24"), ("B24", "B23.B13"),
    ],
    "B23.B24.B14": [
        ("B23.B14", "B12"), ("B23.B24", "B12"), ("B24.B14", "B23"),
        ("B23.B24", "B14"), ("B14", "B12.B23"), ("B24", "B12.B23"),
        ("B24", "B23.B14"), ("B23", "B24.B14"),
    ],
    "B23.B34.B24": [
        ("B23.B24", "B23"), ("B23.B34", "B23"), ("B34.B24", "B23"),
        ("B23.B34", "B24"), ("B34", "B23.B24"), ("B23", "B34.B24"),
    ],
}


def _parse_simplices(cx, texts: Sequence[str]):
    from .complexes import simplex_from_text

    return from_simplices(cx, [simplex_from_text(s) for s in texts])


def cmd_verify_basics() -> Report:
    report = Report("verify-basics", {})
    cx3 = get_complex(3, 2)
    cx4 = get_complex(4, 2)

    d_ar = coboundary(ar())
    report.add("dAr", cochain_text(_parse_simplices(cx3, _DAR_DISPLAY)),
               cochain_text(d_ar), "paper")

    total = None
    for name, a, b, display in _TRIPLE_DISPLAYS:
        prod = cup(omega(3, *a), omega(3, *b))
        report.add(name, cochain_text(_parse_simplices(cx3, display)),
                   cochain_text(prod), "paper")
        total = prod if total is None else total + prod
    report.add("dAr-is-product-sum", cochain_text(d_ar), cochain_text(total), "paper")

    src = from_simplices(cx3, [((3, 1, 2),)])
    pb = pullback(cx4, (1, 2, 3), src)
    report.add("pullback-123-of-312", cochain_text(_parse_simplices(cx4, _PULLBACK_DISPLAY)),
               cochain_text(pb), "paper")

    report.add("omega-support-k3", 9, len(omega(3, 1, 2)), "paper")
    report.add("omega-support-k4", 144, len(omega(4, 1, 2)), "paper")

    pairs = [(i, j) for j in range(2, 5) for i in range(1, j)]
    good = 0
    for a in pairs:
        for b in pairs:
            oa, ob = omega(4, *a), omega(4, *b)
            if coboundary(cup1(oa, ob)) == cup(oa, ob) + cup(ob, oa):
                good += 1
    report.add("steenrod-cup1-omega-pairs", "36/36", f"{good}/36", "derived")

    for wtext, disp in _COPRODUCT_DISPLAYS.items():
        _, w = parse_word(wtext)
        expected_pairs = frozenset((parse_word(u)[1], parse_word(v)[1]) for u, v in disp)
        report.add(f"coproduct-{wtext.replace('.', '')}",
                   _pairs_text(expected_pairs), _pairs_text(coproduct(4, w)), "paper")

    gens = yb_basis(4, 1)
    ok = 0
    for w in w_basis(4, 1):
        direct = d_w1(w)
        dualized = frozenset(
            (g1[0], g2[0]) for g1 in gens for g2 in gens
            if w in yb_normalize(g1 + g2)
        )
        if direct == dualized:
            ok += 1
    report.add("dw1-matches-dual-multiplication", "25/25", f"{ok}/25", "paper")

    report.verdict = "PASS" if report.all_passed else "FAIL"
    return report


def cmd_obstruct(gauge_seed: Optional[int]) -> Report:
    params: Dict[str, Any] = {}
    if gauge_seed is not None:
        params["gauge_seed"] = gauge_seed
    report = Report("obstruct", params)

    a = alpha_hom()
    for w, expected in zip(ANCHOR_WORDS, ANCHOR_VALUES):
        report.add(f"alpha-{word_text('B', w).replace('.', '')}",
                   _monomials_text(expected), _monomials_text(a.apply(w)), "paper")

    cocycles = sum(1 for w in w_basis(4, 2) if not coboundary(phi_d(w)))
    report.add("phi-d-cocycles", "90/90", f"{cocycles}/90", "derived")

    report.add("d-alpha-zero", True, _hochschild_d(a).is_zero(), "derived")

    b = beta()
    report.add("dual-beta-zero", True, not dual_d(b), "paper")
    report.add("pairing-alpha-beta", 1, pair_alpha_beta(a, b), "paper")

    witness = is_coboundary(a)
    report.add("not-a-coboundary", True, witness is None, "derived")

    tri = triangle(a)
    report.add("consistency-triangle", True, tri["agree"], "derived")

    if gauge_seed is not None:
        f = random_gauge(gauge_seed)
        shifted = gauge_shift(f)
        report.add("gauge-alpha-shift", True, shifted == a + _hochschild_d(f), "derived")
        report.add("gauge-pairing", 1, pair_alpha_beta(shifted, b), "derived")
        report.add("gauge-not-a-coboundary", True, is_coboundary(shifted) is None, "derived")

    report.verdict = "NON-FORMAL CONFIRMED" if report.all_passed else "INCONCLUSIVE"
    return report


def _alpha_matrix_payload() -> Dict[str, Any]:
    a = alpha_hom()
    cols = [word_text("A", m) for m in arnold_basis(4, 2)]
    rows = [word_text("B", w) for w in w_basis(4, 2)]
    bits = [[(r >> c) & 1 for c in range(len(cols))] for r in a.rows]
    return {"rows": rows, "cols": cols, "bits": bits}


def _diagnostic_dump(report: Report) -> str:
    lines = ["consistency failure diagnostic"]
    for c in report.checks:
        if not c.passed:
            lines.append(f"failing check: {c.name} expected={c.expected} computed={c.computed}")
    payload = _alpha_matrix_payload()
    lines.append("alpha matrix (rows = level-2 generators, cols = quadratic basis):")
    for label, bits in zip(payload["rows"], payload["bits"]):
        lines.append(f"  {label}: {''.join(str(b) for b in bits)}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="becochains",
        description="Verification reports for the filtered complex pipeline.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser):
        p.add_argument("--emit", metavar="PATH", help="also write the report to a file")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p_dims = sub.add_parser("dims", help="per-degree table sizes vs published values")
    p_dims.add_argument("--k", type=int, required=True, help="arity (number of labels)")
    p_dims.add_argument("--t", type=int, required=True, help="filtration level")
    p_dims.add_argument("--max-degree", type=int, default=None)
    common(p_dims)

    p_basic = sub.add_parser("verify-basics", help="displayed identity checks")
    common(p_basic)

    p_obs = sub.add_parser("obstruct", help="obstruction class and formality verdict")
    p_obs.add_argument("--gauge-seed", type=int, default=None,
                       help="rerun under a seeded pseudorandom gauge shift")
    common(p_obs)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "dims":
        k, t = args.k, args.t
        if (k, t) not in DEGREE_CAPS:
            print(f"error: unsupported table k={k} t={t}", file=sys.stderr)
            return 2
        top = (t - 1) * k * (k - 1) // 2
        if args.max_degree is not None and not (0 <= args.max_degree <= min(DEGREE_CAPS[(k, t)], top)):
            print(f"error: max degree out of range for k={k} t={t}", file=sys.stderr)
            return 2
        report = cmd_dims(k, t, args.max_degree)
    elif args.command == "verify-basics":
        report = cmd_verify_basics()
    else:
        if args.gauge_seed is not None and args.gauge_seed < 0:
            print("error: gauge seed must be non-negative", file=sys.stderr)
            return 2
        report = cmd_obstruct(args.gauge_seed)

    out = report.render(args.format)
    if args.command == "obstruct" and args.format == "json":
        payload = json.loads(out)
        payload["alpha_matrix"] = _alpha_matrix_payload()
        out = json.dumps(payload, indent=2) + "\n"

    sys.stdout.write(out)

    if args.emit:
        emit_fmt = "json" if args.emit.endswith(".json") else args.format
        emitted = report.render(emit_fmt)
        if args.command == "obstruct" and emit_fmt == "json":
            payload = json.loads(emitted)
            payload["alpha_matrix"] = _alpha_matrix_payload()
            emitted = json.dumps(payload, indent=2) + "\n"
        with open(args.emit, "w") as fh:
            fh.write(emitted)

    if not report.all_passed:
        if args.command == "obstruct":
            sys.stderr.write(_diagnostic_dump(report))
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
