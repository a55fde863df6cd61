"""``spectra`` command line: reports on ring spectra, posets and symbolic
spectra as deterministic JSON, plus Graphviz DOT export.

Exit codes: 0 success, 1 oracle failure, 2 usage or parse error, 3 size bound.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__, bits
from .errors import AxiomViolation, CycleDetected, InvalidParameter, ParseError, SizeBound, SpectraError
from .oracle import EXHAUSTIVE_BOUND, HARD_BOUND, brute_force_oracle
from .parsing import Subject, parse_point, parse_poset, parse_subject, parse_symset
from .pierce import (
    component_partitions,
    components_via_pierce,
    idempotent_algebra,
    max_regular_ideals,
    max_regular_oracle,
    psi,
    psi_preimage_check,
    REGULAR_ORACLE_BOUND,
)
from .poset import (
    FLAT,
    ZARISKI,
    SpectralPoset,
    TopologyView,
    clopen_sets,
    closed_sets,
    closure,
    connected_components,
    hochster_dual,
    irreducible_components,
    is_closed,
)
from .rings import check_condition_vi, enumerate_primes, idempotents, spec_poset, vanishing_set, ideal_generated
from .zspec import (
    chain_height,
    condition_vi_symbolic,
    sym_closure,
    sym_irreducible_components,
    sym_is_closed,
    sym_noetherian,
)

RING_SECTIONS = ("primes", "idempotents", "pierce", "components", "topology", "dual", "oracle", "noetherian")
POSET_SECTIONS = ("components", "topology", "dual", "oracle", "noetherian")

EXIT_OK, EXIT_ORACLE, EXIT_USAGE, EXIT_BOUND = 0, 1, 2, 3


class UsageError(SpectraError):
    pass


@dataclass
class ReportRequest:
    subject: Subject
    sections: list
    max_exhaustive: int = EXHAUSTIVE_BOUND
    limit: int = 5
    closures: list = field(default_factory=list)  # (view, set text)
    components: list = field(default_factory=list)  # views, symbolic subjects
    condition_vi: list = field(default_factory=list)  # (family text, point text)
    timing: bool = False

    def __post_init__(self):
        self.max_exhaustive = max(0, min(int(self.max_exhaustive), HARD_BOUND))
        if not (self.sections or self.closures or self.components or self.condition_vi):
            raise UsageError("nothing requested")
        allowed = {"ring": RING_SECTIONS, "poset": POSET_SECTIONS, "symbolic": ("noetherian",)}[self.subject.kind]
        for s in self.sections:
            if s not in allowed:
                raise UsageError(f"section {s!r} not available for a {self.subject.kind} subject")


@dataclass
class Report:
    data: dict
    exit_code: int = EXIT_OK

    def to_json(self):
        return json.dumps(self.data, indent=2, sort_keys=True) + "\n"


def _sets(masks):
    return [list(bits.members(m)) for m in masks]


def _pointsets(pss):
    return [list(ps.members) for ps in pss]


def _poset_of(subject: Subject) -> SpectralPoset:
    return spec_poset(subject.value) if subject.kind == "ring" else subject.value


def _topology_section(X, bound):
    flat = closed_sets(FLAT, X, bound)
    zar = closed_sets(ZARISKI, X, bound)
    return {
        "closed": {"flat": _pointsets(flat), "zariski": _pointsets(zar), "patch": "discrete"},
        "clopen": _pointsets(clopen_sets(X)),
    }


def _components_section(X):
    return {
        "connected": _pointsets(connected_components(X)),
        "irreducible": {
            "flat": _pointsets(irreducible_components(FLAT, X)),
            "zariski": _pointsets(irreducible_components(ZARISKI, X)),
        },
    }


def _dual_section(X):
    Y = hochster_dual(X)
    return {"order": [list(p) for p in Y.relation()], "covers": [list(p) for p in Y.covers()]}


def _ring_checks(ring, bound):
    """Ring-level cross-checks: (name, passed) pairs."""
    X = spec_poset(ring)
    parts = component_partitions(ring)
    checks = [("component partitions agree", parts["connected"] == parts["psi_fibers"] == parts["max_regular"])]
    clopens = {c.mask for c in clopen_sets(X)}
    images = [vanishing_set(ring, ideal_generated(ring, [e])).mask for e in idempotents(ring)]
    checks.append(("idempotents biject onto clopens", len(set(images)) == len(images) and set(images) == clopens))
    connected = len(connected_components(X)) == 1
    checks.append(("connected iff only trivial idempotents", connected == (len(idempotents(ring)) == 2)))
    checks.append(("psi preimages of basis sets", psi_preimage_check(ring) is None))
    if len(X.points) <= 12:
        checks.append(("prime-intersection condition on all families", check_condition_vi(ring)[0]))
    if ring.size <= REGULAR_ORACLE_BOUND:
        checks.append(("max-regular ideals match brute force",
                       max_regular_oracle(ring) == [J.mask for J in max_regular_ideals(ring)]))
    return checks


def _closure_queries(req, X=None):
    out = []
    subject = req.subject
    for view_text, set_text in req.closures:
        view = TopologyView.parse(view_text)
        if subject.kind == "symbolic":
            S = parse_symset(subject.value, set_text)
            C = sym_closure(view, S)
            out.append({"query": f"{view.value}:{set_text}", "set": _symset_json(S),
                        "closed": sym_is_closed(view, S), "closure": _symset_json(C)})
        else:
            items = _split_items(set_text)
            E = X.pointset(int(i) if i.isdigit() else i for i in items)
            out.append({"query": f"{view.value}:{set_text}", "set": list(E.members),
                        "closed": is_closed(view, E), "closure": list(closure(view, E).members)})
    return out


def _split_items(text):
    t = text.strip()
    if not (t.startswith("{") and t.endswith("}")):
        raise InvalidParameter(f"expected {{...}}, got {text!r}")
    items, depth, cur = [], 0, ""
    for ch in t[1:-1]:
        if ch == "," and depth == 0:
            items.append(cur.strip())
            cur = ""
            continue
        depth += ch == "("
        depth -= ch == ")"
        cur += ch
    if cur.strip():
        items.append(cur.strip())
    return items


def _symset_json(S):
    pts = [int(q) if S.spectrum.kind == "integers" else S.spectrum.format_point(q) for q in S.points]
    return {"mode": "cofin" if S.cofinite else "fin", "points": pts, "generic": S.generic}


def run_report(req: ReportRequest) -> Report:
    subject = req.subject
    started = time.perf_counter()
    data = {"tool": {"name": "spectra", "version": __version__}}
    echo = {"kind": subject.kind, "source": subject.source}
    exit_code = EXIT_OK
    oracle_passed = None

    if subject.kind == "symbolic":
        spectrum = subject.value
        echo["name"] = spectrum.name
        if "noetherian" in req.sections:
            data["noetherian"] = sym_noetherian(spectrum)
            data["chain_height"] = chain_height(spectrum)
        if req.closures:
            data["closure"] = _closure_queries(req)
        if req.components:
            comps = {}
            for view_text in req.components:
                fam = sym_irreducible_components(spectrum, TopologyView.parse(view_text))
                comps[fam.view.value] = {
                    "description": fam.describe(),
                    "infinite": fam.infinite,
                    "materialized": [_symset_json(S) for S in fam.materialize(req.limit)],
                }
            data["components"] = comps
        if req.condition_vi:
            rows = []
            for fam_text, pt_text in req.condition_vi:
                res = condition_vi_symbolic(parse_symset(spectrum, fam_text), parse_point(spectrum, pt_text))
                rows.append({"family": fam_text, "point": pt_text, "holds": res.holds, "witness": res.witness})
            data["condition_vi"] = rows
    else:
        X = _poset_of(subject)
        echo["size"] = X.size
        echo["points"] = list(X.labels)
        if subject.kind == "ring":
            ring = subject.value
            echo["description"] = ring.describe()
            echo["ring_size"] = ring.size
        secs = req.sections
        if "primes" in secs:
            data["primes"] = [{"label": P.label, "generators": list(P.ideal.minimal_generators),
                               "members": list(P.members)} for P in enumerate_primes(ring)]
        if "idempotents" in secs:
            data["idempotents"] = idempotents(ring)
        if "pierce" in secs:
            alg = idempotent_algebra(ring)
            points = max_regular_ideals(ring)
            data["pierce"] = {
                "points": [list(J.members) for J in points],
                "labels": [J.label for J in points],
                "atoms": alg.atoms(),
                "components": _pointsets(components_via_pierce(ring)),
                "psi": [points.index(psi(ring, P)) for P in X.points],
            }
        if "components" in secs:
            data["components"] = _components_section(X)
        if "topology" in secs:
            data["topology"] = _topology_section(X, req.max_exhaustive)
        if "dual" in secs:
            data["dual"] = _dual_section(X)
        if "noetherian" in secs:
            data["noetherian"] = {"flat": True, "zariski": True, "finite": True}
            if subject.kind == "ring" and X.size <= 12:
                data["noetherian"]["condition_vi"] = check_condition_vi(ring)[0]
        if "oracle" in secs:
            rep = brute_force_oracle(X, req.max_exhaustive)
            section = {"poset": rep.as_dict()}
            oracle_passed = rep.passed
            if subject.kind == "ring":
                checks = [{"name": n, "passed": bool(ok)} for n, ok in _ring_checks(ring, req.max_exhaustive)]
                section["ring"] = checks
                oracle_passed = oracle_passed and all(c["passed"] for c in checks)
            section["passed"] = oracle_passed
            data["oracle"] = section
        if req.closures:
            data["closure"] = _closure_queries(req, X)

    data["subject"] = echo
    if oracle_passed is not None:
        data["summary"] = {"oracle_passed": oracle_passed}
        if not oracle_passed:
            exit_code = EXIT_ORACLE
    if req.timing:
        data["timing"] = {"seconds": round(time.perf_counter() - started, 6)}
    return Report(data, exit_code)


# --------------------------------------------------------------------------
# DOT


def _quote(s):
    return '"' + str(s).replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(X: SpectralPoset, name="spectrum", dual=False) -> str:
    """Hasse diagram with one cluster per connected component.  Shapes:
    box = maximal only, ellipse = minimal only, diamond = both, circle =
    neither.  With ``dual`` a second graph for the reversed order follows."""
    out = [_dot_graph(X, name)]
    if dual:
        out.append(_dot_graph(hochster_dual(X), f"{name}_dual"))
    return "\n".join(out)


def _dot_graph(X, name):
    maximal, minimal = set(X.maximal()), set(X.minimal())
    lines = [f"digraph {_quote(name)} {{", "  rankdir=BT;"]
    for k, comp in enumerate(connected_components(X)):
        lines.append(f"  subgraph cluster_{k} {{")
        lines.append(f"    label={_quote(f'component {k}')};")
        for i in comp.members:
            shape = {(True, True): "diamond", (True, False): "box",
                     (False, True): "ellipse", (False, False): "circle"}[(i in maximal, i in minimal)]
            lines.append(f"    n{i} [label={_quote(X.labels[i])}, shape={shape}];")
        lines.append("  }")
    for a, b in X.covers():
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# argument handling


def _query(text):
    if ":" not in text:
        raise argparse.ArgumentTypeError(f"expected VIEW:SET, got {text!r}")
    view, rest = text.split(":", 1)
    return view, rest


def _build_parser():
    ap = argparse.ArgumentParser(prog="spectra", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"spectra {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def finite_opts(p):
        p.add_argument("--report", default="", help="comma separated sections")
        p.add_argument("--json", dest="json_out", help="write the JSON report here instead of stdout")
        p.add_argument("--dot", dest="dot_out", help="write the Hasse diagram (DOT) here")
        p.add_argument("--max-exhaustive", type=int, default=EXHAUSTIVE_BOUND,
                       help=f"subset enumeration bound (clamped to {HARD_BOUND})")
        p.add_argument("--closure", action="append", type=_query, default=[], metavar="VIEW:{...}")
        p.add_argument("--timing", action="store_true", help="include wall-clock timing in the report")

    p = sub.add_parser("ring", help="report on Spec of a finite ring")
    p.add_argument("desc", help="ring description, e.g. 'zmod 30'")
    finite_opts(p)
    p = sub.add_parser("poset", help="report on a finite poset file")
    p.add_argument("file")
    finite_opts(p)

    for cmd in ("zspec", "fpspec"):
        p = sub.add_parser(cmd, help="symbolic Spec(Z)" if cmd == "zspec" else "symbolic Spec(F_p[x])")
        if cmd == "fpspec":
            p.add_argument("p", type=int)
        p.add_argument("--closure", action="append", type=_query, default=[], metavar="VIEW:{...}")
        p.add_argument("--components", action="append", default=[], metavar="VIEW")
        p.add_argument("--limit", type=int, default=5)
        p.add_argument("--noetherian", action="store_true")
        p.add_argument("--condition-vi", action="append", type=_query, default=[], metavar="FAMILY:POINT")
        p.add_argument("--json", dest="json_out")
        p.add_argument("--timing", action="store_true")
    return ap


def _request(args) -> ReportRequest:
    if args.command in ("zspec", "fpspec"):
        text = "zspec" if args.command == "zspec" else f"fpspec {args.p}"
        subject = parse_subject(text)
        return ReportRequest(subject, ["noetherian"] if args.noetherian else [],
                             limit=args.limit, closures=args.closure, components=args.components,
                             condition_vi=args.condition_vi, timing=args.timing)
    if args.command == "ring":
        subject = parse_subject(args.desc)
        if subject.kind != "ring":
            raise UsageError(f"{args.desc!r} is not a ring description")
    else:
        path = Path(args.file)
        if not path.is_file():
            raise UsageError(f"no such file {args.file!r}")
        subject = Subject("poset", parse_poset(path.read_text()), args.file)
    sections = [s.strip() for s in args.report.split(",") if s.strip()]
    return ReportRequest(subject, sections, max_exhaustive=args.max_exhaustive,
                         closures=args.closure, timing=args.timing)


def main(argv=None) -> int:
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        req = _request(args)
        report = run_report(req)
    except SizeBound as exc:
        print(f"spectra: size bound: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (ParseError, UsageError, InvalidParameter, CycleDetected, AxiomViolation, SpectraError) as exc:
        print(f"spectra: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = report.to_json()
    if args.json_out:
        Path(args.json_out).write_text(text)
    else:
        sys.stdout.write(text)
    if getattr(args, "dot_out", None):
        Path(args.dot_out).write_text(export_dot(_poset_of(req.subject), dual="dual" in req.sections))
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
