"""Command-line front end: ``posetdist {analyze,gen,color,dnum}``.

Exit status is 0 on success, 1 when a construction precondition or a
verification fails, and 2 on usage or parse errors.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Optional

from . import colorings as col
from . import io
from .errors import CapExceeded, ParseError, PosetError, TooLarge
from .families import gen_boolean, gen_chain_sum, gen_divisibility
from .lattice import downset_lattice, join_irreducible_points, meet_join
from .poset import Poset, rank_data
from .symmetry import (Coloring, automorphisms, color_automorphism,
                       distinguishing_chromatic_number, distinguishing_number,
                       is_chain_proper, is_distinguishing, is_proper)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


@dataclass
class RunManifest:
    command: str
    input_digest: Optional[str]
    outputs: list = field(default_factory=list)
    seedless: bool = True


def _digest(path: Optional[str]) -> Optional[str]:
    if path is None or not Path(path).is_file():
        return None
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _emit(text: str, out: Optional[str], manifest: RunManifest) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)
        manifest.outputs.append(out)


def _poset_text(p: Poset, fmt: str, c: Optional[Coloring] = None) -> str:
    if fmt == "json":
        return io.to_json(p)
    if fmt == "dot":
        return io.to_dot(p, c)
    return io.to_text(p)


def _format(args) -> str:
    if args.format:
        return args.format
    if args.output:
        suffix = Path(args.output).suffix.lstrip(".")
        if suffix in ("json", "dot", "txt"):
            return suffix
    return "txt"


# -- analyze ----------------------------------------------------------------


def analyze_report(p: Poset) -> list[str]:
    rd = rank_data(p)
    lines = [f"n: {p.n}", f"height: {rd.height}", f"width: {rd.width}"]
    ranked = {None: "undefined", True: "yes", False: "no"}[rd.is_ranked]
    lines.append(f"ranked: {ranked}")
    for k, level in enumerate(p.rank_levels()):
        lines.append(f"rank {k}: " + " ".join(p.label(x) for x in level))
    tables = meet_join(p)
    lines.append(f"lattice: {'yes' if tables.is_lattice else 'no'}")
    lines.append(f"distributive: {'yes' if tables.is_distributive else 'no'}")
    if tables.is_lattice:
        irr = join_irreducible_points(p)
        lines.append(f"|Q_L|: {len(irr)}")
        if tables.is_distributive:
            lines.append(f"|J(Q_L)|: {p.n}")
    lines.append(f"|Aut|: {automorphisms(p).order}")
    pairs = col.twins(p)
    lines.append("twins: " + (", ".join(f"({p.label(a)},{p.label(b)})" for a, b in pairs)
                              if pairs else "none"))
    if rd.is_ranked:
        lines.append(f"rank-connected: {'yes' if col.is_rank_connected(p) else 'no'}")
    return lines


def cmd_analyze(args, manifest: RunManifest) -> int:
    p = io.load_poset(args.input)
    _emit("\n".join(analyze_report(p)) + "\n", args.output, manifest)
    return EXIT_OK


# -- gen -----------------------------------------------------------------------


def _parse_blocks(spec: str) -> list[tuple[int, int]]:
    blocks = []
    for part in spec.split(","):
        t, _, r = part.strip().partition("x")
        if not (t.isdigit() and r.isdigit()):
            raise ParseError(f"chain block {part!r} is not of the form TxR")
        blocks.append((int(t), int(r)))
    return blocks


def cmd_gen(args, manifest: RunManifest) -> int:
    if args.family == "chains":
        p = gen_chain_sum(_parse_blocks(args.param))
    elif args.family == "boolean":
        p = gen_boolean(int(args.param))
    elif args.family == "divisibility":
        p = gen_divisibility(int(args.param), args.cap)
    else:
        p = downset_lattice(io.load_poset(args.param), args.cap).lattice
    _emit(_poset_text(p, _format(args)), args.output, manifest)
    return EXIT_OK


# -- color ---------------------------------------------------------------------


def _integer_lattice(arg: str, family: str) -> tuple[Poset, int]:
    """Resolve the input of ``color divis``/``color boolean`` to (L, n)."""
    if arg.isdigit():
        n = int(arg)
        return (gen_divisibility(n) if family == "divis" else gen_boolean(n)), n
    p = io.load_poset(arg)
    if family == "divis":
        n = max((int(s) for s in p.labels or ()), default=1)
        ref = gen_divisibility(n)
    else:
        n = max(p.n.bit_length() - 1, 0)
        ref = gen_boolean(n)
    if (ref.n, ref.covers) != (p.n, p.covers):
        raise ValueError(f"input is not the generated {family} lattice")
    return ref, n


def _verify(p: Poset, c: Coloring, method: str) -> list[tuple[str, bool]]:
    checks = []
    if method in ("rankq", "improved", "divis", "boolean"):
        checks.append(("proper", is_proper(p, c)))
    if method == "dilworth":
        checks.append(("chain-proper", is_chain_proper(p, c)))
    checks.append(("distinguishing", is_distinguishing(p, c)))
    return checks


def cmd_color(args, manifest: RunManifest) -> int:
    method = args.method
    try:
        if method in ("divis", "boolean"):
            p, n = _integer_lattice(args.input, method)
            c = col.divisibility_coloring(n) if method == "divis" else col.boolean_coloring(n)
        else:
            p = io.load_poset(args.input)
            if method == "linext":
                c = _linext(p, args.extension)
            elif method == "rankq":
                c = col.rank_plus_qcoloring(p)
            elif method == "improved":
                c = col.improved_qcoloring(p)
            elif method == "dilworth":
                c = col.dilworth_coloring(p)
            else:
                if not args.embedding:
                    print("error: color leftmost needs --embedding", file=sys.stderr)
                    return EXIT_USAGE
                emb = io.parse_embedding(Path(args.embedding).read_text())
                c = col.leftmost_chain_coloring(p, emb)
    except ParseError:
        raise
    except (PosetError, ValueError) as exc:
        print(f"FAIL: {type(exc).__name__}: {exc}")
        return EXIT_FAIL

    fmt = _format(args)
    text = _poset_text(p, "dot", c) if fmt == "dot" else io.coloring_json(c)
    _emit(text, args.output, manifest)
    checks = _verify(p, c, method)
    summary = ", ".join(f"{name} {'yes' if ok else 'no'}" for name, ok in checks)
    print(f"colors: {c.num_colors}")
    if method in ("linext", "leftmost"):
        print(f"red points: {len(c.class_of('red'))}")
    if args.verbose:
        for k, cls in enumerate(c.classes()):
            print(f"  {c.name(k)}: " + " ".join(p.label(x) for x in cls))
    if all(ok for _, ok in checks):
        print(f"PASS ({summary})")
        return EXIT_OK
    print(f"FAIL ({summary})")
    perm = color_automorphism(p, c)
    if perm is not None:
        print("witness automorphism: " + " ".join(map(str, perm)))
    return EXIT_FAIL


def _linext(p: Poset, index: Optional[int]) -> Coloring:
    if index is None:
        return col.linear_extension_coloring(p)
    from .lattice import birkhoff_check
    from .poset import linear_extensions
    ok, f = birkhoff_check(p)
    if not ok:
        return col.linear_extension_coloring(p)   # raises NotDistributive
    for i, ext in enumerate(linear_extensions(f.q, index + 1)):
        if i == index:
            return col.linear_extension_coloring(p, [f.irreducibles[j] for j in ext])
    raise ValueError(f"Q_L has fewer than {index + 1} linear extensions")


# -- dnum ----------------------------------------------------------------------


def cmd_dnum(args, manifest: RunManifest) -> int:
    p = io.load_poset(args.input)
    try:
        if args.chromatic:
            k, c = distinguishing_chromatic_number(p, args.cap, witness=True)
        else:
            k, c = distinguishing_number(p, args.cap, witness=True)
    except CapExceeded as exc:
        print(f"FAIL: {exc}")
        return EXIT_FAIL
    print(f"{'chi_D' if args.chromatic else 'D'}: {k}")
    _emit(io.coloring_json(c), args.output, manifest)
    return EXIT_OK


# -- entry point -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="posetdist", description="Distinguishing colorings of posets.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", help="output file (format from its extension)")
    common.add_argument("--format", choices=["txt", "json", "dot"])
    common.add_argument("--verbose", action="store_true")
    common.add_argument("--manifest", help="write a run manifest JSON here")
    common.add_argument("--cap", type=int, help="size or color cap")
    sub = ap.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common], help="report order statistics")
    a.add_argument("input")
    a.set_defaults(func=cmd_analyze)

    g = sub.add_parser("gen", parents=[common], help="generate a poset family")
    g.add_argument("family", choices=["chains", "boolean", "divisibility", "downset"])
    g.add_argument("param", help="TxR[,TxR...] | n | n | poset file")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("color", parents=[common], help="build and verify a coloring")
    c.add_argument("method", choices=["linext", "rankq", "improved", "divis", "boolean",
                                      "dilworth", "leftmost"])
    c.add_argument("input", help="poset file, or n for divis/boolean")
    c.add_argument("--extension", type=int, help="index of the linear extension of Q_L")
    c.add_argument("--embedding", help="embedding file for leftmost")
    c.set_defaults(func=cmd_color)

    d = sub.add_parser("dnum", parents=[common], help="exact D or chi_D")
    d.add_argument("input")
    d.add_argument("--chromatic", action="store_true")
    d.set_defaults(func=cmd_dnum)
    return ap


def main(argv: Optional[list[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    manifest = RunManifest(" ".join(["posetdist", *(argv if argv is not None else sys.argv[1:])]),
                           _digest(getattr(args, "input", None) or getattr(args, "param", None)))
    try:
        code = args.func(args, manifest)
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TooLarge as exc:
        print(f"FAIL: {exc}")
        return EXIT_FAIL
    except (PosetError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.manifest:
        Path(args.manifest).write_text(json.dumps(asdict(manifest), indent=1) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
