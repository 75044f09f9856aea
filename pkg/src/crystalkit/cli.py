"""Command-line surface.

Subcommands: element, polytope, compare, enumerate, frobenius, degeneration,
delta-scan, paper-suite.  Reports are emitted as JSON or aligned tables on
stdout; the scan commands additionally write delimited files and render
matplotlib figures next to them.  CRYSTALKIT_CACHE_DIR, when set, persists
BZ-datum memos between invocations.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from . import accept, binfty, frobmono, orders, polytopes, quiverdeg
from .binfty import CrystalElt, apply_e_string, b_rs, parse_estring
from .rootsys import SUPPORTED_TYPES, cartan_data, height


# ------------------------------------------------------------- cache plumbing

def _cache_dir() -> Optional[Path]:
    d = os.environ.get("CRYSTALKIT_CACHE_DIR")
    return Path(d) if d else None


def load_bz_cache(label: str) -> None:
    d = _cache_dir()
    if d is None:
        return
    path = d / f"bz_{label}.json"
    if not path.exists():
        return
    cartan = cartan_data(label)
    store = cartan._cache.setdefault("bz", {})
    try:
        data = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError):
        return
    for key, val in data.items():
        coords = tuple(int(x) for x in key.split(","))
        if len(coords) == cartan.num_positive_roots:
            store[coords] = tuple(val)


def save_bz_cache(label: str) -> None:
    d = _cache_dir()
    if d is None:
        return
    cartan = cartan_data(label)
    store = cartan._cache.get("bz")
    if not store:
        return
    d.mkdir(parents=True, exist_ok=True)
    path = d / f"bz_{label}.json"
    data = {",".join(map(str, k)): list(v) for k, v in store.items()}
    path.write_text(json.dumps(data))


# ------------------------------------------------------------- element parsing

def parse_element_spec(label: Optional[str], text: str) -> CrystalElt:
    """An element spec is a raising string or `E-case-I r=.. s=..`."""
    text = text.strip()
    if text.startswith("E-case-"):
        rest = text[len("E-case-"):].split()
        case = rest[0]
        params = {"r": 0, "s": 0}
        for tok in rest[1:]:
            k, _, v = tok.partition("=")
            if k not in params or not v.lstrip("-").isdigit():
                raise ValueError(f"bad parameter {tok!r} in element spec")
            params[k] = int(v)
        b = b_rs(case, params["r"], params["s"])
        if label is not None and b.cartan.label != label.upper():
            raise ValueError(
                f"case {case} lives in type {b.cartan.label}, not {label}")
        return b
    if label is None:
        raise ValueError("a raising-string spec needs an explicit type (-t)")
    cartan = cartan_data(label)
    return apply_e_string(cartan, parse_estring(text))


def _element_report(b: CrystalElt, words, signed: bool) -> dict:
    cartan = b.cartan
    wt = b.wt()
    report = {
        "type": cartan.label,
        "weight": [-x for x in wt] if signed else list(wt),
        "height": height(wt),
        "phi": list(b.phi_vector()),
        "eps": [b.eps(i) for i in cartan.index_set],
        "sigma_coords": list(b.sigma().coords),
        "data": [],
    }
    for word in words:
        d = b.datum(word)
        report["data"].append({"word": list(d.word), "coords": list(d.coords)})
    return report


def _print_report(report: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
        return
    for key, val in report.items():
        if key == "data":
            for entry in val:
                word = "".join(map(str, entry["word"]))
                print(f"{'coords@' + word:>14}  {tuple(entry['coords'])}")
        elif key == "vertices":
            print(f"{'vertices':>14}  {len(val)}")
        elif key == "bz":
            print(f"{'bz values':>14}  {len(val)}")
        else:
            print(f"{key:>14}  {val}")


# ------------------------------------------------------------- figures

def _projection_angles(rank: int) -> List[Tuple[float, float]]:
    return [(math.cos(math.pi * k / max(rank, 2)),
             math.sin(math.pi * k / max(rank, 2))) for k in range(rank)]


def _hull2d(points: List[Tuple[float, float]]) -> List[Tuple[float, float]]:
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def render_polytope_figure(P, path: str) -> None:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    angles = _projection_angles(P.cartan.rank)
    pts = [
        (sum(v[k] * angles[k][0] for k in range(P.cartan.rank)),
         sum(v[k] * angles[k][1] for k in range(P.cartan.rank)))
        for v in P.vertex_set()
    ]
    hull = _hull2d(pts)
    fig, ax = plt.subplots(figsize=(5, 5))
    if hull:
        xs = [p[0] for p in hull] + [hull[0][0]]
        ys = [p[1] for p in hull] + [hull[0][1]]
        ax.fill(xs, ys, alpha=0.2)
        ax.plot(xs, ys, lw=1.2)
    ax.scatter([p[0] for p in pts], [p[1] for p in pts], s=18, zorder=3)
    ax.set_title(f"{P.cartan.label} polytope, weight {P.base_weight}")
    ax.set_aspect("equal")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_delta_figure(values: Sequence[int], zeros: int, path: str) -> None:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6, 4))
    ax.hist(values, bins=min(40, max(5, len(set(values)))), color="#4878d0")
    ax.axvline(0, color="black", lw=1)
    ax.set_xlabel("defect")
    ax.set_ylabel("count")
    ax.set_title(f"defect distribution ({zeros} equality points)")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_suite_figure(results, path: str) -> None:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(7, 0.4 * len(results) + 1.2))
    names = [f"{r.number:02d}" for r in results]
    times = [r.seconds for r in results]
    colors = ["#55a868" if r.passed else "#c44e52" for r in results]
    ax.barh(names, times, color=colors)
    ax.set_xlabel("seconds")
    ax.invert_yaxis()
    ax.set_title("reproduction suite timings (green = pass)")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


# ------------------------------------------------------------- subcommands

def cmd_element(args) -> int:
    b = parse_element_spec(args.type, args.spec)
    words = [b.cartan.reference_word]
    for w in args.word or []:
        words.append(tuple(int(c) for c in w.replace(",", "")))
    report = _element_report(b, words, args.signed)
    _print_report(report, args.format)
    return 0


def cmd_polytope(args) -> int:
    b = parse_element_spec(args.type, args.spec)
    label = b.cartan.label
    load_bz_cache(label)
    P = polytopes.mv_polytope(b)
    b.cartan._cache.setdefault("bz", {}).setdefault(b.coords, P.bz_tuple())
    data = polytopes.polytope_to_json(P)
    if args.out:
        Path(args.out).write_text(json.dumps(data, indent=2))
    if args.figure:
        render_polytope_figure(P, args.figure)
    if args.format == "json":
        print(json.dumps(data, indent=2))
    else:
        print(f"{'type':>14}  {label}")
        print(f"{'weight':>14}  {tuple(data['weight'])}")
        print(f"{'vertices':>14}  {len(P.vertex_set())} distinct")
        for entry in data["bz"]:
            print(f"{'M' + str(tuple(entry['gamma'])):>22}  {entry['M']}")
    save_bz_cache(label)
    return 0


def cmd_compare(args) -> int:
    b1 = parse_element_spec(args.type, args.left)
    b2 = parse_element_spec(args.type, args.right)
    if b1.cartan is not b2.cartan:
        print("error: elements live in different types", file=sys.stderr)
        return 2
    label = b1.cartan.label
    order = args.order
    if order in ("pol", "str", "stab") and b1.wt() != b2.wt():
        print("error: weight mismatch", file=sys.stderr)
        return 2
    load_bz_cache(label)
    if order == "pol":
        holds = polytopes.leq_pol(b1, b2)
        out = {"order": "pol", "holds": holds}
        code = 0 if holds else 1
    elif order == "lex":
        holds = orders.leq_lex(b1.coords, b2.coords)
        out = {"order": "lex", "holds": holds}
        code = 0 if holds else 1
    elif order == "word":
        holds = orders.leq_pol_via_words(b1, b2)
        out = {"order": "word", "holds": holds}
        code = 0 if holds else 1
    else:
        check = orders.leq_str_check if order == "str" else orders.leq_stab_check
        verdict = check(b1, b2, depth=args.depth, weight_cap=args.weight_cap)
        out = {"order": order}
        out.update(verdict.to_json())
        code = {orders.PROVED: 0, orders.REFUTED: 1,
                orders.INCONCLUSIVE: 3}[verdict.status]
    if args.format == "json":
        print(json.dumps(out, indent=2))
    else:
        for k, v in out.items():
            print(f"{k:>14}  {v}")
    save_bz_cache(label)
    return code


def cmd_enumerate(args) -> int:
    cartan = cartan_data(args.type)
    nu = tuple(int(x) for x in args.weight.split(","))
    elems = binfty.enumerate_weight(cartan, nu, height_cap=args.height_cap)
    if args.format == "json":
        print(json.dumps([binfty.elt_to_json(b) for b in elems], indent=2))
    else:
        print(f"{len(elems)} element(s) of weight {nu} in {cartan.label}")
        for b in elems:
            print(f"  {b.coords}")
    return 0


def cmd_frobenius(args) -> int:
    if args.action == "s-ell":
        b = parse_element_spec(args.type, args.spec)
        sb = b.scale(args.ell)
        report = _element_report(sb, [sb.cartan.reference_word], False)
        _print_report(report, args.format)
        return 0
    mono = frobmono.parse_monomial(args.spec)
    if args.action == "fr":
        out = frobmono.fr(args.ell, mono)
    else:
        out = frobmono.fr_split(args.ell, mono)
    text = frobmono.format_monomial(out)
    if args.format == "json":
        print(json.dumps({"result": text}))
    else:
        print(text)
    return 0


def _parse_orientation(cartan, text: str):
    arrows = []
    for tok in text.split(","):
        if ">" not in tok:
            raise ValueError(f"bad arrow {tok!r} (expected like 1>2)")
        a, b = tok.split(">")
        arrows.append((int(a), int(b)))
    return quiverdeg.orientation(cartan, arrows)


def cmd_degeneration(args) -> int:
    cartan = cartan_data(args.type)
    omega = _parse_orientation(cartan, args.omega)
    word = quiverdeg.adapted_word(cartan, omega)

    def mults(spec: str):
        if spec.startswith("n:"):
            return tuple(int(x) for x in spec[2:].split(","))
        return parse_element_spec(args.type, spec).datum(word).coords

    n1 = mults(args.left)
    n2 = mults(args.right)
    holds = quiverdeg.degeneration_leq(cartan, omega, n1, n2, word)
    out = {
        "adapted_word": list(word),
        "left": list(n1),
        "right": list(n2),
        "degenerates": holds,
    }
    if args.format == "json":
        print(json.dumps(out, indent=2))
    else:
        for k, v in out.items():
            print(f"{k:>14}  {v}")
    return 0 if holds else 1


def cmd_delta_scan(args) -> int:
    p_values = tuple(int(x) for x in args.p.split(","))
    total, minimum, zeros = quiverdeg.delta_scan(
        p_values, v_cap=args.v_cap, tau_cap=args.tau_cap,
        cross_check=not args.no_cross_check)
    expected = set(quiverdeg.expected_zero_locus(p_values))
    locus_ok = set(zeros) == expected
    csv_rows = []
    tau0 = (0,) * 17
    hist_vals = []
    for p in p_values:
        for v in quiverdeg.feasible_v(p, args.v_cap):
            d = quiverdeg.delta(p, v, tau0)
            hist_vals.append(d)
            csv_rows.append((p, v, tau0, d))
    if args.full_rows:
        csv_rows = []
        for p in p_values:
            for v in quiverdeg.feasible_v(p, args.v_cap):
                for tau in _tau_grid(args.tau_cap):
                    csv_rows.append((p, v, tau, quiverdeg.delta(p, v, tau)))
    out_path = Path(args.out)
    with out_path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["p"] + [f"v{k}" for k in range(1, 16)]
                        + [f"tau{k}" for k in range(1, 18)] + ["delta"])
        for p, v, tau, d in csv_rows:
            writer.writerow([p, *v, *tau, d])
    if args.figure:
        render_delta_figure(hist_vals, len(zeros), args.figure)
    summary = {
        "grid_points": total,
        "minimum": minimum,
        "zeros": len(zeros),
        "equality_locus_matches": locus_ok,
        "csv": str(out_path),
        "rows_written": len(csv_rows),
    }
    if args.format == "json":
        print(json.dumps(summary, indent=2))
    else:
        for k, v in summary.items():
            print(f"{k:>22}  {v}")
    return 0 if (minimum >= 0 and locus_ok) else 1


def _tau_grid(cap: int):
    import itertools
    return itertools.product(range(cap + 1), repeat=17)


def cmd_paper_suite(args) -> int:
    sections = None if args.section == "all" else [int(args.section)]
    for label in ("A3", "A4", "A5", "D4"):
        load_bz_cache(label)
    results = accept.run_criteria(sections=sections, jobs=args.jobs)
    for r in results:
        print(r.line())
    for label in ("A3", "A4", "A5", "D4"):
        save_bz_cache(label)
    if args.report_dir:
        d = Path(args.report_dir)
        d.mkdir(parents=True, exist_ok=True)
        with (d / "report.csv").open("w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["number", "section", "title", "passed",
                             "seconds", "detail"])
            for r in results:
                writer.writerow([r.number, r.section, r.title, r.passed,
                                 f"{r.seconds:.3f}", r.detail])
        (d / "report.json").write_text(json.dumps(
            [r.__dict__ for r in results], indent=2))
        render_suite_figure(results, str(d / "report.png"))
    failed = [r for r in results if not r.passed]
    total = sum(r.seconds for r in results)
    print(f"{len(results) - len(failed)}/{len(results)} criteria passed "
          f"in {total:.1f}s")
    return 1 if failed else 0


# ------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crystalkit",
        description="exact crystal, polytope, order and quiver computations")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_type=True):
        if with_type:
            p.add_argument("-t", "--type", choices=SUPPORTED_TYPES, default=None)
        p.add_argument("--format", choices=("json", "table"), default="table")

    p = sub.add_parser("element", help="inspect a crystal element")
    common(p)
    p.add_argument("spec", help="raising string like 'e1^2 e3' or 'E-case-I r=1 s=0'")
    p.add_argument("--word", action="append",
                   help="additional chart word, e.g. 24135241352413 or 2,4,1,3,5,...")
    p.add_argument("--signed", action="store_true",
                   help="display the weight with the crystal sign convention")
    p.set_defaults(fn=cmd_element)

    p = sub.add_parser("polytope", help="vertices and BZ datum of an element")
    common(p)
    p.add_argument("spec")
    p.add_argument("--out", help="write the JSON export here")
    p.add_argument("--figure", help="render a 2D projection PNG here")
    p.set_defaults(fn=cmd_polytope)

    p = sub.add_parser("compare", help="compare two elements in a chosen order")
    common(p)
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--order", choices=("pol", "str", "stab", "lex", "word"),
                   required=True)
    p.add_argument("--depth", type=int, default=6)
    p.add_argument("--weight-cap", type=int, default=None)
    p.set_defaults(fn=cmd_compare)

    p = sub.add_parser("enumerate", help="all elements of a weight")
    common(p)
    p.add_argument("--weight", required=True, help="comma-separated coordinates")
    p.add_argument("--height-cap", type=int, default=binfty.DEFAULT_HEIGHT_CAP)
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("frobenius", help="scaling and divided-power maps")
    common(p)
    p.add_argument("action", choices=("s-ell", "fr", "fr-split"))
    p.add_argument("spec", help="element spec for s-ell, monomial like 't2^2 t4' otherwise")
    p.add_argument("--ell", type=int, required=True)
    p.set_defaults(fn=cmd_frobenius)

    p = sub.add_parser("degeneration", help="orbit-closure comparison for an orientation")
    common(p)
    p.add_argument("left", help="element spec or raw multiplicities n:1,0,1,...")
    p.add_argument("right")
    p.add_argument("--omega", required=True, help="arrows like 1>2,3>2,3>4,5>4")
    p.set_defaults(fn=cmd_degeneration)

    p = sub.add_parser("delta-scan", help="scan the semismallness defect grid")
    common(p, with_type=False)
    p.add_argument("--p", default="1,2", help="comma-separated values of p")
    p.add_argument("--v-cap", type=int, default=2)
    p.add_argument("--tau-cap", type=int, default=1)
    p.add_argument("--out", default="delta_scan.csv")
    p.add_argument("--figure", default=None)
    p.add_argument("--full-rows", action="store_true",
                   help="write every grid row, not just the tau=0 slice")
    p.add_argument("--no-cross-check", action="store_true")
    p.set_defaults(fn=cmd_delta_scan)

    p = sub.add_parser("paper-suite", help="run the reproduction criteria")
    common(p, with_type=False)
    p.add_argument("--section", choices=("all", "3", "4", "5", "6"),
                   default="all")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--report-dir", default=None,
                   help="write report.csv, report.json and report.png here")
    p.set_defaults(fn=cmd_paper_suite)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, quiverdeg.SearchBudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
