"""Command-line front end.

Results go to stdout (byte-identical across runs and thread counts),
diagnostics and timing to stderr. Exit codes: 0 success, 1 input error,
2 = computation succeeded but a cross-verification failed.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import catalog
from .betti import (
    certify_cohomology_reading,
    exterior_poincare,
    hochster_betti,
    koszul_tor_oracle,
    krull_dim_cohomology,
    krull_dim_homology,
)
from .cm import (
    CartanModule,
    cartan_profile,
    duality_check,
    gorenstein_fk_check,
    is_cm_eagon_reiner,
    is_cm_reisner,
)
from .complexes import (
    FormatError,
    SimplicialComplex,
    alexander_dual,
    clique_complex,
    format_complex_text,
    parse_complex_text,
    parse_graph_text,
)
from .cover import CoverComplex, cover_homology, compact_support_cohomology, growth_degree
from .exterior import (
    CoordinateMap,
    exterior_sr_ring,
    is_regular_sequence,
    link_formula_cohomology,
    mult_cohomology,
)
from .linalg import ZZ, parse_field

SCHEMA = "raagcov-report/1"


class InputError(Exception):
    pass


class VerificationMismatch(Exception):
    pass


def _available_threads() -> int:
    import os

    return os.cpu_count() or 1


def load_input(args) -> SimplicialComplex:
    """Resolve the positional path or --catalog name into a complex."""
    if getattr(args, "catalog", None):
        try:
            return catalog.get(args.catalog)
        except KeyError:
            raise InputError(f"unknown catalog name {args.catalog!r}") from None
    if not getattr(args, "input", None):
        raise InputError("provide an input file or --catalog <name>")
    try:
        with open(args.input, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(str(exc)) from None
    head = ""
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            head = line
            break
    try:
        if head.startswith("graph"):
            g = parse_graph_text(text)
            if not getattr(args, "flag_of_graph", False):
                raise InputError(
                    "graph input needs --flag-of-graph to build its clique complex")
            return clique_complex(g)
        k = parse_complex_text(text)
    except FormatError as exc:
        raise InputError(str(exc)) from None
    return k


def parse_coords(text: str, n: int) -> CoordinateMap:
    try:
        f = CoordinateMap.from_string(text)
    except ValueError as exc:
        raise InputError(f"bad --coords: {exc}") from None
    if f.n != n:
        raise InputError(f"--coords lists {f.n} values but the complex has {n} vertices")
    return f


def get_field(args):
    try:
        return parse_field(getattr(args, "field", "q") or "q")
    except ValueError as exc:
        raise InputError(str(exc)) from None


def emit(args, report: dict, text_lines: list[str]) -> None:
    if getattr(args, "json", False):
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        for line in text_lines:
            print(line)


def _hf_list(h) -> list[int]:
    return list(h.window())


# --- subcommand handlers ----------------------------------------------------

def cmd_homology(args) -> int:
    from .homology import reduced_homology

    k = load_input(args)
    fld = get_field(args)
    profile = reduced_homology(k, fld)
    degrees = profile.nonzero_degrees()
    lines = [f"reduced homology over {fld.label}"]
    rows = []
    if k.is_void:
        lines.append("void complex: all groups zero")
    for q in degrees:
        r = profile.rank(q)
        tor = profile.torsion(q)
        rows.append([q, r, list(tor)])
        t = " + " + " + ".join(f"Z/{d}" for d in tor) if tor else ""
        base = f"rank {r}" if fld.label != "z" else (f"Z^{r}" if r else "0")
        lines.append(f"  H~_{q} = {base}{t}")
    if not degrees and not k.is_void:
        lines.append("  all reduced homology vanishes")
    report = {"schema": SCHEMA, "command": "homology", "field": fld.label,
              "n": k.n, "table": rows}
    emit(args, report, lines)
    return 0


def cmd_betti(args) -> int:
    k = load_input(args)
    fld = get_field(args)
    if fld is ZZ:
        raise InputError("betti requires field coefficients")
    threads = args.threads or _available_threads()
    table = hochster_betti(k, fld, threads=threads)
    oracle = koszul_tor_oracle(k, fld)
    agree = table == oracle
    lines = [f"graded Betti numbers over {fld.label} (|subset| = p + q)"]
    lines += ["  " + ln for ln in table.render().splitlines()]
    lines.append(f"oracle agreement (Koszul homology): {'agree' if agree else 'DISAGREE'}")
    report = {"schema": SCHEMA, "command": "betti", "field": fld.label,
              "table": [[p, q, v] for (p, q), v in table.items()],
              "oracle": [[p, q, v] for (p, q), v in oracle.items()],
              "verdict": "agree" if agree else "disagree"}
    emit(args, report, lines)
    if not agree:
        raise VerificationMismatch("Hochster table disagrees with the Koszul oracle")
    return 0


def cmd_krull(args) -> int:
    k = load_input(args)
    fld = get_field(args)
    if fld is ZZ:
        raise InputError("krull requires field coefficients")
    q = args.q
    if q is None:
        raise InputError("--q is required")
    lines = []
    report = {"schema": SCHEMA, "command": "krull", "field": fld.label, "q": q}
    mismatch = False
    if args.cohomology:
        res = krull_dim_cohomology(k, q, fld)
        lines.append(f"cohomology module dimension at q={q}:")
        lines.append(f"  literal reading (H~_(r-q-1) links): {res.literal if res.literal is not None else 'zero module'}")
        lines.append(f"  shifted reading (H~_(r-q) links):   {res.shifted if res.shifted is not None else 'zero module'}")
        report["literal"] = res.literal
        report["shifted"] = res.shifted
        if args.verify:
            cert = certify_cohomology_reading(k, fld, j_max=args.max_degree or 10)
            lines.append(f"  chain-level oracle certifies: {cert.chosen}")
            for note in cert.notes:
                lines.append(f"  note: {note}")
            report["certified"] = cert.chosen
            report["oracle_table"] = sorted(cert.oracle_table.items())
            mismatch = cert.chosen == "neither"
    else:
        dim = krull_dim_homology(k, q, fld)
        lines.append(f"homology module dimension at q={q}: "
                     f"{dim if dim is not None else 'zero module'}")
        report["dimension"] = dim
        if args.verify:
            jm = args.max_degree or (2 * (dim or 0) + 2)
            h = cover_homology(k, CoordinateMap.identity(k.n), fld, q, jm)
            est = growth_degree(h)
            verdict = (est.kind == "zero" and dim is None) or \
                      (est.kind == "degree" and est.degree == dim)
            lines.append(f"  growth cross-check (j_max={jm}): kind={est.kind}"
                         f" degree={est.degree} -> {'agree' if verdict else 'DISAGREE'}")
            report["growth"] = {"kind": est.kind, "degree": est.degree,
                                "verdict": "agree" if verdict else "disagree"}
            mismatch = not verdict and est.conclusive
    emit(args, report, lines)
    if mismatch:
        raise VerificationMismatch("Krull dimension cross-check failed")
    return 0


def cmd_rank_variety(args) -> int:
    k = load_input(args)
    fld = get_field(args)
    if fld is ZZ:
        raise InputError("rank-variety requires field coefficients")
    if not args.supp:
        raise InputError("--supp is required")
    try:
        supp = sorted({int(tok) for tok in args.supp.split(",")})
    except ValueError:
        raise InputError(f"bad --supp {args.supp!r}") from None
    for v in supp:
        if not 1 <= v <= k.n:
            raise InputError(f"support vertex {v} out of range 1..{k.n}")
    ring = exterior_sr_ring(k, fld)
    a = ring.linear_form({v: 1 for v in supp})
    direct = mult_cohomology(ring, a)
    via_links = link_formula_cohomology(k, supp, fld)
    agree = direct.window() == via_links.window()
    lines = [f"multiplication cohomology, support {{{','.join(map(str, supp))}}} over {fld.label}"]
    lines.append(f"  direct ranks:  {_hf_list(direct)}")
    lines.append(f"  link formula:  {_hf_list(via_links)}")
    lines.append(f"agreement: {'agree' if agree else 'DISAGREE'}")
    report = {"schema": SCHEMA, "command": "rank-variety", "field": fld.label,
              "supp": supp, "direct": _hf_list(direct),
              "link_formula": _hf_list(via_links),
              "verdict": "agree" if agree else "disagree"}
    emit(args, report, lines)
    if not agree:
        raise VerificationMismatch("link formula disagrees with direct ranks")
    return 0


def cmd_regular_seq(args) -> int:
    k = load_input(args)
    fld = get_field(args)
    if fld is ZZ:
        raise InputError("regular-seq requires field coefficients")
    if not args.coords:
        raise InputError("--coords is required")
    f = parse_coords(args.coords, k.n)
    rep = is_regular_sequence(k, f, fld)
    lines = [f"fiber sums h_1..h_{f.m} acting on the exterior face ring, over {fld.label}"]
    for j, (ok, coh) in enumerate(zip(rep.prefix_regular, rep.prefix_cohomology), start=1):
        lines.append(f"  h_{j} on the quotient by (h_1..h_{j-1}): "
                     f"{'regular' if ok else 'NOT regular'} "
                     f"(cohomology dims {_hf_list(coh)})")
    lines.append(f"sequence regular: {rep.sequence_regular} "
                 f"(finite-dimensional cover homology: {rep.sequence_regular})")
    report = {"schema": SCHEMA, "command": "regular-seq", "field": fld.label,
              "coords": list(f.images),
              "prefix_regular": list(rep.prefix_regular),
              "prefix_cohomology": [_hf_list(c) for c in rep.prefix_cohomology],
              "sequence_regular": rep.sequence_regular}
    emit(args, report, lines)
    return 0


def cmd_cover_homology(args) -> int:
    k = load_input(args)
    fld = get_field(args)
    if fld is ZZ:
        raise InputError("cover-homology requires field coefficients")
    if not args.coords:
        raise InputError("--coords is required")
    f = parse_coords(args.coords, k.n)
    q = args.q
    if q is None:
        raise InputError("--q is required")
    j_max = args.max_degree if args.max_degree is not None else 8
    if args.compact_support:
        h = compact_support_cohomology(k, f, fld, q, j_max)
        what = f"compact-support cohomology H^{q}_c"
    else:
        h = cover_homology(k, f, fld, q, j_max)
        what = f"cover homology H_{q}"
    est = growth_degree(h)
    lines = [f"{what} over {fld.label}, coordinate map {list(f.images)}"]
    lines.append("  degree : " + " ".join(f"{j:4d}" for j in range(j_max + 1)))
    lines.append("  dim    : " + " ".join(f"{v:4d}" for v in h.window()))
    lines.append(f"growth degree estimate: kind={est.kind} degree={est.degree}")
    report = {"schema": SCHEMA, "command": "cover-homology", "field": fld.label,
              "coords": list(f.images), "q": q, "j_max": j_max,
              "compact_support": bool(args.compact_support),
              "dims": _hf_list(h),
              "growth": {"kind": est.kind, "degree": est.degree}}
    emit(args, report, lines)
    return 0


def cmd_cm_check(args) -> int:
    k = load_input(args)
    fld = get_field(args)
    if fld is ZZ:
        raise InputError("cm-check requires field coefficients")
    j_max = args.max_degree if args.max_degree is not None else 8
    reisner = is_cm_reisner(k, fld)
    if k.is_full_simplex():
        eagon = True  # I_{K*} is zero; treat the vacuous resolution as linear
    else:
        eagon = is_cm_eagon_reiner(k, fld)
    profile = cartan_profile(k, fld, j_max)
    top = k.dim + 1
    cartan = all(h.is_zero() for p, h in profile.items() if p != top)
    agree = reisner == eagon == cartan
    lines = [f"Cohen-Macaulay tests over {fld.label}:"]
    lines.append(f"  Reisner link criterion:      {reisner}")
    lines.append(f"  Eagon-Reiner dual linearity: {eagon}")
    lines.append(f"  Cartan concentration (j<={j_max}): {cartan}")
    lines.append(f"criteria agree: {agree}")
    if cartan:
        lines.append(f"  top Cartan cohomology dims: {_hf_list(profile[top])}")
    report = {"schema": SCHEMA, "command": "cm-check", "field": fld.label,
              "reisner": reisner, "eagon_reiner": eagon,
              "cartan_concentrated": cartan, "j_max": j_max,
              "cartan_profile": {str(p): _hf_list(h) for p, h in profile.items()},
              "verdict": "agree" if agree else "disagree"}
    emit(args, report, lines)
    if not agree:
        raise VerificationMismatch("CM criteria disagree")
    return 0


def cmd_duality(args) -> int:
    k = load_input(args)
    fld = get_field(args)
    if fld is ZZ:
        raise InputError("duality requires field coefficients")
    if not args.coords:
        raise InputError("--coords is required")
    f = parse_coords(args.coords, k.n)
    j_max = args.max_degree if args.max_degree is not None else 8
    if not is_cm_reisner(k, fld):
        raise InputError("duality requires a Cohen-Macaulay complex over the chosen field")
    d = k.dim
    qs = [args.q] if args.q is not None else list(range(0, d + 2))
    module = CartanModule(k, fld)
    session = CoverComplex(k, f, fld)
    lines = [f"cover/Tor duality over {fld.label}, coordinate map {list(f.images)}, dim K = {d}"]
    rows = []
    all_equal = True
    for q in qs:
        v = duality_check(k, f, fld, q, j_max, module=module, session=session)
        all_equal = all_equal and v.equal
        lines.append(f"  q={q} (Tor index {v.tor_index}): "
                     f"{'equal' if v.equal else 'MISMATCH'}"
                     f"{'' if v.shift is None else f', measured shift {v.shift}'}"
                     f"{'' if v.first_discrepancy is None else f', first discrepancy at degree {v.first_discrepancy}'}")
        lines.append(f"    H^q_c slices: {_hf_list(v.compact_support)}")
        lines.append(f"    Tor slices:   {_hf_list(v.tor_side)}")
        rows.append({"q": q, "tor_index": v.tor_index, "equal": v.equal,
                     "shift": v.shift, "first_discrepancy": v.first_discrepancy,
                     "compact_support": _hf_list(v.compact_support),
                     "tor": _hf_list(v.tor_side)})
    lines.append(f"duality verdict: {'equal' if all_equal else 'MISMATCH'}")
    report = {"schema": SCHEMA, "command": "duality", "field": fld.label,
              "coords": list(f.images), "j_max": j_max, "rows": rows,
              "verdict": "equal" if all_equal else "mismatch"}
    emit(args, report, lines)
    if not all_equal:
        raise VerificationMismatch("duality comparison failed")
    return 0


def cmd_gorenstein(args) -> int:
    k = load_input(args)
    fld = get_field(args)
    if fld is ZZ:
        raise InputError("gorenstein requires field coefficients")
    j_max = args.max_degree if args.max_degree is not None else 8
    try:
        v = gorenstein_fk_check(k, fld, j_max)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    lines = [f"homology-sphere module comparison over {fld.label}"]
    lines.append(f"  top Cartan cohomology dims: {_hf_list(v.cartan_module)}")
    lines.append(f"  dual ideal dims:            {_hf_list(v.dual_ideal)}")
    lines.append(f"  measured shift: {v.shift}")
    lines.append(f"verdict: {'match' if v.ok else 'MISMATCH'}")
    report = {"schema": SCHEMA, "command": "gorenstein", "field": fld.label,
              "cartan_module": _hf_list(v.cartan_module),
              "dual_ideal": _hf_list(v.dual_ideal), "shift": v.shift,
              "verdict": "match" if v.ok else "mismatch"}
    emit(args, report, lines)
    if not v.ok:
        raise VerificationMismatch("module comparison failed")
    return 0


def cmd_dual(args) -> int:
    k = load_input(args)
    try:
        dual = alexander_dual(k)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    text = format_complex_text(dual, comment="Alexander dual")
    if args.json:
        from .complexes import bits_to_verts

        report = {"schema": SCHEMA, "command": "dual", "n": dual.n,
                  "facets": [list(bits_to_verts(m)) for m in dual.facets()]}
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        sys.stdout.write(text)
    return 0


def cmd_catalog(args) -> int:
    if args.name:
        try:
            k = catalog.get(args.name)
        except KeyError:
            raise InputError(f"unknown catalog name {args.name!r}") from None
        sys.stdout.write(format_complex_text(k, comment=args.name))
        return 0
    lines = ["built-in complexes:"]
    for name in catalog.names():
        lines.append(f"  {name}")
    report = {"schema": SCHEMA, "command": "catalog", "names": list(catalog.names())}
    emit(args, report, lines)
    return 0


# --- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="raagcov",
        description="Exact (co)homology of abelian covers of right-angled "
                    "Artin group complexes, with cross-verified combinatorics.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, coords=False, q=False, maxdeg=False, verify=False,
                   threads=False, supp=False):
        p.add_argument("input", nargs="?", help="complex or graph file")
        p.add_argument("--catalog", help="use a built-in complex by name")
        p.add_argument("--field", default="q",
                       help="q | p | p:<prime> | z (default q)")
        p.add_argument("--json", action="store_true", help="JSON report output")
        p.add_argument("--flag-of-graph", action="store_true",
                       help="treat graph input as its clique complex")
        if coords:
            p.add_argument("--coords", help="coordinate map images, e.g. 1,1,2")
        if q:
            p.add_argument("--q", type=int, help="(co)homological degree")
        if maxdeg:
            p.add_argument("--max-degree", type=int, help="polynomial degree bound")
        if verify:
            p.add_argument("--verify", action="store_true",
                           help="run the chain-level cross-check")
        if threads:
            p.add_argument("--threads", type=int, default=0,
                           help="worker threads (default: available parallelism)")
        if supp:
            p.add_argument("--supp", help="support vertices, e.g. 1,2,4")

    add_common(sub.add_parser("homology", help="reduced simplicial homology"))
    add_common(sub.add_parser("betti", help="graded Betti numbers + Koszul oracle"),
               threads=True)
    add_common(sub.add_parser("krull", help="Krull dimension of cover modules"),
               q=True, maxdeg=True, verify=True)
    sub.choices["krull"].add_argument("--cohomology", action="store_true",
                                      help="use the link-based cohomology formula")
    add_common(sub.add_parser("rank-variety",
                              help="multiplication cohomology vs link formula"),
               supp=True)
    add_common(sub.add_parser("regular-seq", help="fiber-sum regular sequence test"),
               coords=True)
    add_common(sub.add_parser("cover-homology", help="graded cover (co)homology slices"),
               coords=True, q=True, maxdeg=True)
    sub.choices["cover-homology"].add_argument(
        "--compact-support", action="store_true",
        help="compute compact-support cohomology instead of homology")
    add_common(sub.add_parser("cm-check", help="three Cohen-Macaulay criteria"),
               maxdeg=True)
    add_common(sub.add_parser("duality", help="compact-support vs Tor comparison"),
               coords=True, q=True, maxdeg=True)
    add_common(sub.add_parser("gorenstein", help="homology-sphere module comparison"),
               maxdeg=True)
    add_common(sub.add_parser("dual", help="emit the Alexander dual complex"))
    cat = sub.add_parser("catalog", help="list or emit built-in complexes")
    cat.add_argument("name", nargs="?", help="emit this complex as a file")
    cat.add_argument("--json", action="store_true")
    return parser


_HANDLERS = {
    "homology": cmd_homology,
    "betti": cmd_betti,
    "krull": cmd_krull,
    "rank-variety": cmd_rank_variety,
    "regular-seq": cmd_regular_seq,
    "cover-homology": cmd_cover_homology,
    "cm-check": cmd_cm_check,
    "duality": cmd_duality,
    "gorenstein": cmd_gorenstein,
    "dual": cmd_dual,
    "catalog": cmd_catalog,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.monotonic()
    try:
        code = _HANDLERS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except VerificationMismatch as exc:
        print(f"verification mismatch: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    finally:
        print(f"elapsed: {time.monotonic() - start:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
