"""Command-line entry point; every command writes one JSON document to stdout.

Exit codes: 0 success, 1 hard verification failure, 2 input error,
3 size-cap refusal.
"""
from __future__ import annotations

import argparse
import json
import sys

from .assoc import de_components
from .core import make_part
from .errors import (
    HypergraphError,
    InvalidInputError,
    NumericalDisagreementError,
    SizeCapError,
    TruncationError,
)
from .hgformat import _token, emit_hypergraph, parse_hypergraph
from .invariants.bounds import TOL, bound_suite, json_value, verify_corpus
from .invariants.cheeger import CHEEGER_CAP, cheeger_constant
from .invariants.cospectral import SCAN_KINDS, cospectral_scan, normalized_charpoly
from .invariants.enumeration import MAX_N, enumerate_hypergraphs, standard_corpus
from .invariants.spanning import (
    enumerate_exact_spanning_pairs,
    exact_spanning_pairs_count,
)
from .matrices import KINDS, label_text, matrix_of_kind
from .paths import DEFAULT_CAP, DistanceMode, diameter, shortest_path
from .spectra import char_poly_exact, eigenvalues_sym

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class UsageError(InvalidInputError):
    code = "usage"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def clean(x):
    """Recursively make a value JSON-safe (Fractions, inf, numpy scalars)."""
    if isinstance(x, dict):
        return {str(k): clean(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [clean(v) for v in x]
    return json_value(x)


def _parts_json(parts):
    return [list(p) for p in parts]


def _read(path: str):
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InvalidInputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_hypergraph(text).hypergraph


def _part_arg(text: str):
    body = text.strip().strip("{}")
    toks = [t for t in body.replace(",", " ").split() if t]
    if not toks:
        raise InvalidInputError(f"empty part {text!r}")
    return make_part(_token(t) for t in toks)


# -- commands -----------------------------------------------------------------


def cmd_matrix(a):
    return matrix_of_kind(_read(a.file), a.kind).to_dict()


def cmd_spectrum(a):
    H = _read(a.file)
    M = matrix_of_kind(H, a.kind)
    spec = eigenvalues_sym(M)
    out = {"kind": a.kind, "order": M.order, "index_labels": _parts_json(M.labels), "values": list(spec.values),
           "residual": spec.residual}
    if M.is_exact:
        poly = char_poly_exact(M)
        out["charpoly"] = list(poly.coeffs)
        out["charpoly_text"] = str(poly)
    elif a.kind == "UNL":
        # exact polynomial of the similar rational matrix D^+ L
        out["charpoly"] = list(normalized_charpoly(H))
    return out


def cmd_components(a):
    H = _read(a.file)
    part = de_components(H)
    induced = part.induced()
    return {
        "count": part.count,
        "trivial": part.trivial_count,
        "bipartite_nontrivial": part.bipartite_nontrivial_count,
        "classes": [
            {"members": _parts_json(c.members), "trivial": c.is_trivial, "odd_exact_cycle": c.has_odd_exact_cycle,
             "hg": emit_hypergraph(sub)}
            for c, sub in zip(part.classes, induced)
        ],
        "grouped": [{"hg": emit_hypergraph(sub), "classes": n} for sub, n in part.grouped()],
    }


def cmd_distance(a):
    H = _read(a.file)
    mode = DistanceMode.parse(a.mode)
    if mode.is_set_mode:
        src, dst = _part_arg(a.source), _part_arg(a.target)
    else:
        src, dst = _token(a.source), _token(a.target)
    path = shortest_path(H, src, dst, mode, a.cap)
    out = {"mode": mode.value, "from": json_value(list(src) if mode.is_set_mode else src),
           "to": list(dst) if mode.is_set_mode else dst}
    if path is None:
        out.update(distance="inf", path=None)
    else:
        out.update(distance=path.length, path={
            "parts": _parts_json(path.parts),
            "edges": [{"edge": list(e), "occurrence": o} for e, o in path.edges],
        })
    return out


def cmd_diameter(a):
    H = _read(a.file)
    modes = [DistanceMode.parse(a.mode)] if a.mode else list(DistanceMode)
    return {"diameters": {m.value: diameter(H, m, a.cap) for m in modes}}


def cmd_cheeger(a):
    H = _read(a.file)
    res = cheeger_constant(H, a.cap if a.cap is not None else CHEEGER_CAP)
    return {"value": res.value, "float": float(res.value), "subset": _parts_json(res.subset),
            "cut": res.cut, "volume": res.volume}


def cmd_spanning(a):
    H = _read(a.file)
    count = exact_spanning_pairs_count(H)
    out = {"count": count}
    if a.enumerate:
        pairs = enumerate_exact_spanning_pairs(H, a.limit)
        out["pairs"] = [
            {"hg": emit_hypergraph(sub), "partitions": [[list(s), list(t)] for s, t in D]} for sub, D in pairs
        ]
    return out


def _family(a):
    if a.n is None:
        return standard_corpus()
    return enumerate_hypergraphs(a.n, a.max_edge_size or a.n, a.max_edges, iso_reject=a.iso_reject)


def cmd_verify(a):
    path_cap = DEFAULT_CAP if a.cap is None else a.cap
    if a.file is not None:
        if a.corpus or a.n is not None:
            raise InvalidInputError("give either a file or a corpus selection, not both")
        report = bound_suite(_read(a.file), a.tol, path_cap, a.cheeger_cap)
        return report.to_dict(), (EXIT_FAILED if report.hard_failures else EXIT_OK)
    if not a.corpus and a.n is None:
        raise InvalidInputError("verify needs a file, --corpus, or --n")
    out = verify_corpus(_family(a), a.tol, path_cap, a.cheeger_cap, full=a.full)
    return out, (EXIT_FAILED if out["summary"]["hard_failures"] else EXIT_OK)


def cmd_enumerate(a):
    hgs = [emit_hypergraph(H) for H in enumerate_hypergraphs(a.n, a.max_edge_size or a.n, a.max_edges,
                                                            iso_reject=a.iso_reject)]
    return {"count": len(hgs), "hypergraphs": hgs}


def cmd_scan(a):
    if a.file is not None:
        family = [_read(p) for p in a.file]
    elif a.n is not None:
        family = _family(a)
    else:
        raise InvalidInputError("scan needs files or --n")
    return cospectral_scan(family, a.kind).to_dict()


# -- pretty rendering -------------------------------------------------------------


def _table(header, rows) -> str:
    cells = [[str(c) for c in header]] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells) + "\n"


def render_pretty(command: str, out: dict) -> str:
    if command == "matrix":
        labels = [label_text(p) for p in out["index_labels"]]
        rows = [[lab] + [f"{x:.6g}" if isinstance(x, float) else x for x in r] for lab, r in zip(labels, out["rows"])]
        return f"{out['kind']} ({out['order']}x{out['order']})\n" + _table([""] + labels, rows)
    if command == "spectrum":
        text = _table(["i", "eigenvalue"], [[i + 1, f"{v:.10g}"] for i, v in enumerate(out["values"])])
        if "charpoly_text" in out:
            text += f"charpoly: {out['charpoly_text']}\n"
        return text
    if command == "verify" and "records" in out:
        rows = [[r["theorem"], r["status"], r["lhs"] if r["lhs"] is not None else "",
                 r["rhs"] if r["rhs"] is not None else "", r["slack"] if r["slack"] is not None else ""]
                for r in out["records"]]
        s = out["summary"]
        return (_table(["theorem", "status", "lhs", "rhs", "slack"], rows)
                + f"{s['applicable']} applicable, {s['hard_failures']} hard failures, "
                + f"{s['audit_failures']} audit failures\n")
    if command == "verify":
        rows = [[t, v["applicable"], v["passed"], v["failed"], v["audit_failed"]] for t, v in out["theorems"].items()]
        s = out["summary"]
        return (_table(["theorem", "applicable", "passed", "failed", "audit-failed"], rows)
                + f"{out['instances']} instances, {s['hard_failures']} hard failures, "
                + f"{s['audit_failures']} audit failures\n")
    return json.dumps(out, indent=2) + "\n"


# -- parser ---------------------------------------------------------------------


def _enum_flags(p, required=False):
    p.add_argument("--n", type=int, required=required)
    p.add_argument("--max-edge-size", type=int)
    p.add_argument("--max-edges", type=int)
    p.add_argument("--iso-reject", action="store_true", help="keep one hypergraph per isomorphism class")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="unihyper", description="Unified matrices, spectra and distances of hypergraphs.")
    parser.add_argument("--pretty", action="store_true", help="human-readable tables instead of JSON")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_file(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file", help="hypergraph text file, or - for stdin")
        p.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS)
        return p

    p = with_file("matrix", "print one unified matrix")
    p.add_argument("--kind", choices=KINDS, default="U")
    p = with_file("spectrum", "eigenvalues and characteristic polynomial")
    p.add_argument("--kind", choices=KINDS, default="UL")
    with_file("components", "DE-components")
    p = with_file("distance", "distance and a shortest path between two vertices or parts")
    p.add_argument("--mode", default="ED", help="ED, EED, IUD, UD, SED, SEED, SUD, ESD, EESD or IUSD")
    p.add_argument("--from", dest="source", required=True, help="vertex, or part like 1,4 for set modes")
    p.add_argument("--to", dest="target", required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="refuse path searches above this e-index")
    p = with_file("diameter", "diameter for one mode, or all modes")
    p.add_argument("--mode")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p = with_file("cheeger", "unified Cheeger constant by exhaustive search")
    p.add_argument("--cap", type=int, default=CHEEGER_CAP)
    p = with_file("spanning", "count (and optionally list) exact spanning pairs")
    p.add_argument("--enumerate", action="store_true")
    p.add_argument("--limit", type=int, default=10_000)

    p = sub.add_parser("verify", help="check spectral identities and bounds")
    p.add_argument("file", nargs="?")
    p.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS)
    p.add_argument("--corpus", action="store_true", help="all simple hypergraphs with n <= 4 plus n = 5 with <= 2 edges")
    _enum_flags(p)
    p.add_argument("--full", action="store_true", help="include every per-instance report")
    p.add_argument("--tol", type=float, default=TOL)
    p.add_argument("--cap", type=int, help=f"path search cap (default {DEFAULT_CAP})")
    p.add_argument("--cheeger-cap", type=int, default=CHEEGER_CAP)

    p = sub.add_parser("enumerate", help="list simple hypergraphs on 1..n")
    p.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS)
    _enum_flags(p, required=True)

    p = sub.add_parser("scan", help="search for non-isomorphic cospectral hypergraphs")
    p.add_argument("file", nargs="*", default=None)
    p.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS)
    p.add_argument("--kind", choices=SCAN_KINDS, default="U")
    _enum_flags(p)
    return parser


_COMMANDS = {
    "matrix": cmd_matrix,
    "spectrum": cmd_spectrum,
    "components": cmd_components,
    "distance": cmd_distance,
    "diameter": cmd_diameter,
    "cheeger": cmd_cheeger,
    "spanning": cmd_spanning,
    "verify": cmd_verify,
    "enumerate": cmd_enumerate,
    "scan": cmd_scan,
}


def _error(exc: HypergraphError) -> dict:
    out = {"error": exc.code, "detail": exc.detail}
    if isinstance(exc, TruncationError):
        out["count"] = exc.count
    return out


def run(argv=None, stdout=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    pretty = False
    command = None
    try:
        a = build_parser().parse_args(argv)
        pretty, command = a.pretty, a.command
        if command == "scan" and not a.file:
            a.file = None
        if getattr(a, "n", None) is not None and a.n > MAX_N:
            raise SizeCapError(f"n = {a.n} exceeds the enumeration limit {MAX_N}")
        result = _COMMANDS[command](a)
        out, code = result if isinstance(result, tuple) else (result, EXIT_OK)
    except (SizeCapError, TruncationError) as exc:
        out, code = _error(exc), EXIT_CAP
    except NumericalDisagreementError as exc:
        out, code = _error(exc), EXIT_FAILED
    except HypergraphError as exc:
        out, code = _error(exc), EXIT_INPUT
    out = clean(out)
    if pretty and "error" not in out:
        stdout.write(render_pretty(command, out))
    else:
        stdout.write(json.dumps(out, indent=2 if pretty else None) + "\n")
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
