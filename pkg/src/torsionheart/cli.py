"""Command-line front end.

Subcommands:
  indec  <file>   list the universe of indecomposables with hom/ext tables
  heart  <file>   analyse the cotilting pair of a torsion class (--gens)
  tors   <file>   the lattice of torsion classes with brick-labelled covers
  verify <file>   run every property suite; nonzero exit on any failure

Exit codes: 0 success, 1 parse error, 2 resource limit, 3 incomplete universe.
Output is deterministic: identical input and flags produce identical bytes.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from .algebra import parse_algebra
from .config import DEFAULT_CAPS, ResourceCaps
from .cotilting import cotilting_from_pair, minimal_cotilting
from .exceptions import (
    AdmissibilityError, IncompleteUniverseError, NotCotiltingError,
    QuiverParseError, ResourceLimitError,
)
from .heart import NegIsolatedValue, classify_neg_isolated, heart_simples
from .krull import is_brick
from .torsion import is_hereditary, pair_from_torsion_class, torsion_closure
from .torslattice import enumerate_torsion_classes
from .universe import IndecUniverse, bit_indices, enumerate_indecomposables
from .verify import build_context, run_all_suites

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_RESOURCE = 2
EXIT_INCOMPLETE = 3


def _dims_str(dims) -> str:
    return "(" + ",".join(str(d) for d in dims) + ")"


def module_ref(u: IndecUniverse, m) -> dict:
    """JSON reference for a module: universe summands plus dimensions."""
    ref = {"dims": list(m.dims), "totalDim": m.total_dim}
    if not m.is_zero():
        from .krull import decompose
        counts = {}
        for piece, mult in decompose(m, u.caps):
            idx = u.index_of(piece)
            counts[str(idx)] = counts.get(str(idx), 0) + mult
        ref["summands"] = dict(sorted(counts.items(), key=lambda kv: int(kv[0])))
    else:
        ref["summands"] = {}
    return ref


def universe_json(u: IndecUniverse) -> list[dict]:
    return [
        {
            "index": i,
            "dims": list(m.dims),
            "totalDim": m.total_dim,
            "brick": is_brick(m),
        }
        for i, m in enumerate(u.indecs)
    ]


def algebra_json(algebra) -> dict:
    return {
        "field": algebra.field.p,
        "vertices": list(algebra.quiver.vertices),
        "arrows": [
            {"name": a.name,
             "source": algebra.quiver.vertices[a.source],
             "target": algebra.quiver.vertices[a.target]}
            for a in algebra.quiver.arrows
        ],
        "dimension": algebra.dim,
    }


def _build_universe(args):
    with open(args.path, encoding="utf-8") as fh:
        text = fh.read()
    caps = _caps_from_args(args)
    algebra = parse_algebra(text, caps, field_override=args.field)
    if args.dim_bound:
        bound = tuple(int(x) for x in args.dim_bound.split(","))
    else:
        bound = tuple(2 for _ in algebra.quiver.vertices)
    universe = enumerate_indecomposables(algebra, bound, caps)
    return algebra, universe


def _caps_from_args(args) -> ResourceCaps:
    return dataclasses.replace(
        DEFAULT_CAPS,
        ext_dim_cap=args.cap_ext_dim,
        submodule_dim_cap=args.cap_submodule_dim,
    )


def _emit(payload: dict, fmt: str, text_lines: list[str]):
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


# -- indec ---------------------------------------------------------------------


def cmd_indec(args) -> int:
    algebra, u = _build_universe(args)
    if not u.complete:
        print(f"universe incomplete: {u.witness}", file=sys.stderr)
        return EXIT_INCOMPLETE
    payload = {
        "schemaVersion": SCHEMA_VERSION,
        "algebra": algebra_json(algebra),
        "universe": universe_json(u),
        "dimBound": list(u.dim_bound),
        "complete": u.complete,
        "homTable": u.hom_table.tolist(),
        "extTable": u.ext_table.tolist(),
    }
    lines = [
        f"algebra over F_{algebra.field.p}: dim {algebra.dim}, "
        f"{len(u.indecs)} indecomposables (complete universe)",
    ]
    for i, m in enumerate(u.indecs):
        lines.append(f"  M{i} dims {_dims_str(m.dims)} "
                     f"brick={'yes' if is_brick(m) else 'no'}")
    lines.append("hom table (rows map to columns):")
    for row in u.hom_table.tolist():
        lines.append("  " + " ".join(str(x) for x in row))
    lines.append("ext table:")
    for row in u.ext_table.tolist():
        lines.append("  " + " ".join(str(x) for x in row))
    _emit(payload, args.format, lines)
    return EXIT_OK


# -- heart ---------------------------------------------------------------------


def _parse_generators(u: IndecUniverse, tokens: str) -> int:
    """Generators as universe indices or dot-separated dim vectors."""
    if not tokens:
        return 0
    bits = 0
    for token in tokens.split(","):
        token = token.strip()
        if not token:
            continue
        if "." in token:
            dims = tuple(int(x) for x in token.split("."))
            matches = [i for i, m in enumerate(u.indecs) if m.dims == dims]
            if len(matches) != 1:
                raise QuiverParseError(
                    f"dim vector {token} matches {len(matches)} modules; "
                    "use an index instead")
            bits |= 1 << matches[0]
        else:
            idx = int(token)
            if not (0 <= idx < u.n):
                raise QuiverParseError(f"generator index {idx} out of range")
            bits |= 1 << idx
    return bits


def ses_json(u: IndecUniverse, ses) -> dict:
    return {
        "left": module_ref(u, ses.left),
        "middle": module_ref(u, ses.middle),
        "right": module_ref(u, ses.right),
    }


def heart_report(u: IndecUniverse, t_bits: int,
                 oracle: bool = False) -> tuple[dict, list[str]]:
    pair = pair_from_torsion_class(torsion_closure(t_bits, u), u)
    data = cotilting_from_pair(pair)
    simples = heart_simples(pair)
    criticals, specials = classify_neg_isolated(data)
    tilde = minimal_cotilting(
        data,
        [s.envelope for s in criticals] + [s.envelope for s in specials],
    )
    pair_json = {
        "torsion": sorted(bit_indices(pair.torsion_bits)),
        "torsionFree": sorted(bit_indices(pair.torsion_free_bits)),
        "hereditary": is_hereditary(pair),
    }
    sequences = []
    for seq in criticals + specials:
        kind = ("critical" if seq.kind.value is NegIsolatedValue.CRITICAL
                else "special")
        sequences.append({
            "kind": kind,
            "simple": {"index": seq.simple.index,
                       "dims": list(seq.simple.module.dims),
                       "shifted": seq.simple.shifted},
            "envelope": module_ref(u, seq.envelope),
            "sequence": ses_json(u, seq.sequence),
        })
    checks = [
        {"name": "envelopes-disjoint", "passed": True},
        {"name": "envelopes-exhaust-C",
         "passed": {s.envelope_index for s in criticals + specials}
         == set(bit_indices(data.add_c_bits))},
    ]
    if oracle:
        oracle_simples = sorted(
            (s.index, s.shifted) for s in heart_simples(pair, mode="oracle"))
        fast_simples = sorted((s.index, s.shifted) for s in simples)
        checks.append({"name": "fast-oracle-agreement",
                       "passed": oracle_simples == fast_simples})
    payload = {
        "schemaVersion": SCHEMA_VERSION,
        "torsionPair": pair_json,
        "cotilting": {
            "C": module_ref(u, data.cotilting),
            "C0": module_ref(u, data.c0),
            "C1": module_ref(u, data.c1),
            "tildeC": module_ref(u, tilde),
        },
        "heartSimples": [
            {"index": s.index, "dims": list(s.module.dims),
             "shifted": s.shifted, "kind": s.kind.value}
            for s in simples
        ],
        "sequences": sequences,
        "classification": {
            "critical": sorted(s.envelope_index for s in criticals),
            "special": sorted(s.envelope_index for s in specials),
        },
        "checks": checks,
    }
    lines = [
        f"torsion pair: T = {pair_json['torsion']}, "
        f"F = {pair_json['torsionFree']}"
        + (" (hereditary)" if pair_json["hereditary"] else ""),
        f"cotilting module C: summands {sorted(bit_indices(data.add_c_bits))}",
        f"C0 dims {_dims_str(data.c0.dims)}, C1 dims {_dims_str(data.c1.dims)}, "
        f"minimal cotilting dims {_dims_str(tilde.dims)}",
        "heart simples:",
    ]
    for s in simples:
        shift = "[-1]" if s.shifted else ""
        lines.append(f"  M{s.index}{shift} dims {_dims_str(s.module.dims)} "
                     f"({s.kind.value})")
    lines.append("sequences:")
    for entry in sequences:
        seq = entry["sequence"]
        lines.append(
            f"  {entry['kind']}: 0 -> {_dims_str(seq['left']['dims'])} -> "
            f"{_dims_str(seq['middle']['dims'])} -> "
            f"{_dims_str(seq['right']['dims'])} -> 0")
    lines.append(
        f"critical envelopes: {payload['classification']['critical']}, "
        f"special envelopes: {payload['classification']['special']}")
    return payload, lines


def cmd_heart(args) -> int:
    algebra, u = _build_universe(args)
    if not u.complete:
        print(f"universe incomplete: {u.witness}", file=sys.stderr)
        return EXIT_INCOMPLETE
    t_bits = _parse_generators(u, args.gens or "")
    try:
        payload, lines = heart_report(u, t_bits, oracle=args.oracle)
    except NotCotiltingError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_PARSE
    payload["algebra"] = algebra_json(algebra)
    payload["universe"] = universe_json(u)
    _emit(payload, args.format, lines)
    return EXIT_OK


# -- tors ----------------------------------------------------------------------


def lattice_dot(u: IndecUniverse, lattice) -> str:
    lines = ["digraph tors {"]
    for i, bits in enumerate(lattice.classes):
        members = ",".join(f"M{j}" for j in bit_indices(bits)) or "0"
        lines.append(f'  T{i} [label="{members}"];')
    for cover in lattice.covers:
        label = _dims_str(u.indecs[cover.label_index].dims)
        lines.append(
            f'  T{cover.upper} -> T{cover.lower} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines)


def cmd_tors(args) -> int:
    algebra, u = _build_universe(args)
    if not u.complete:
        print(f"universe incomplete: {u.witness}", file=sys.stderr)
        return EXIT_INCOMPLETE
    lattice = enumerate_torsion_classes(u)
    if args.format == "dot":
        print(lattice_dot(u, lattice))
        return EXIT_OK
    payload = {
        "schemaVersion": SCHEMA_VERSION,
        "algebra": algebra_json(algebra),
        "universe": universe_json(u),
        "lattice": {
            "classes": [sorted(bit_indices(b)) for b in lattice.classes],
            "covers": [
                {"upper": c.upper, "lower": c.lower, "label": c.label_index}
                for c in lattice.covers
            ],
        },
    }
    lines = [f"{lattice.n} torsion classes, {len(lattice.covers)} covers"]
    for i, bits in enumerate(lattice.classes):
        lines.append(f"  T{i}: {sorted(bit_indices(bits))}")
    for c in lattice.covers:
        lines.append(f"  T{c.upper} > T{c.lower} labelled M{c.label_index} "
                     f"{_dims_str(u.indecs[c.label_index].dims)}")
    _emit(payload, args.format, lines)
    return EXIT_OK


# -- verify ---------------------------------------------------------------------


def cmd_verify(args) -> int:
    algebra, u = _build_universe(args)
    if not u.complete:
        print(f"FAIL universe-completeness: {u.witness}")
        return EXIT_INCOMPLETE
    print(f"PASS universe-completeness: {len(u.indecs)} indecomposables closed")
    ctx = build_context(u)
    print(f"PASS cotilting-detection: {len(ctx.cotilting_pairs)} cotilting "
          f"pairs among {ctx.lattice.n} torsion classes")
    results = run_all_suites(ctx)
    failed = False
    for result in results:
        print(result.line())
        failed = failed or not result.passed
    return EXIT_PARSE if failed else EXIT_OK


# -- entry point ------------------------------------------------------------------


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heart-simples",
        description="Simple objects of cotilting hearts over bound quiver "
                    "algebras, with brute-force verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, fn in [("indec", cmd_indec), ("heart", cmd_heart),
                     ("tors", cmd_tors), ("verify", cmd_verify)]:
        p = sub.add_parser(name)
        p.add_argument("path", help="quiver file")
        p.add_argument("--field", type=int, default=None,
                       help="override the field order")
        p.add_argument("--dim-bound", default=None,
                       help="comma separated per-vertex bound (default 2,...)")
        p.add_argument("--oracle", action="store_true",
                       help="run detection in literal oracle mode as well")
        p.add_argument("--format", choices=["text", "json", "dot"],
                       default="text")
        p.add_argument("--cap-ext-dim", type=int,
                       default=DEFAULT_CAPS.ext_dim_cap)
        p.add_argument("--cap-submodule-dim", type=int,
                       default=DEFAULT_CAPS.submodule_dim_cap)
        if name == "heart":
            p.add_argument("--gens", default="",
                           help="torsion class generators: universe indices "
                                "or dot-separated dim vectors, comma list")
        p.set_defaults(fn=fn)
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (QuiverParseError, AdmissibilityError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except IncompleteUniverseError as exc:
        print(f"incomplete universe: {exc}", file=sys.stderr)
        return EXIT_INCOMPLETE


if __name__ == "__main__":
    sys.exit(main())
