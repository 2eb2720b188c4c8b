"""
Command-line front end.

Exit codes: 0 the command succeeded / the property holds, 1 the property
fails, 2 unreadable input, format violation or unknown builtin.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path

from . import formats
from .constructions import BUILTINS, build_triple_t
from .core4 import Triangulation4, vertex_classes
from .iso import isomorphic, signature
from .link3 import vertex_link
from .report import analyze, analyze3, render_text, render_text3
from .triangulation import TriangulationError

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def signature_hash(sig: str) -> str:
    return hashlib.sha256(sig.encode("ascii")).hexdigest()[:12]


def cmd_validate(args) -> int:
    t = formats.load(args.path)
    v = t.validate()
    print(f"closed: {'yes' if v.closed else 'no'}")
    print(f"gluings: {v.num_gluings}")
    if v.unpaired:
        print("unpaired: " + ", ".join(f"({s},{f})" for s, f in v.unpaired))
    return EXIT_OK if v.closed else EXIT_FAIL


def cmd_analyze(args) -> int:
    t = formats.load(args.path)
    if isinstance(t, Triangulation4):
        report = analyze(t)
        closed = report.closed
        out = report.to_json() if args.json else render_text(report)
    else:
        report = analyze3(t)
        closed = report["validity"]["closed"]
        out = (json.dumps(report, sort_keys=True, indent=2) + "\n" if args.json
               else render_text3(report))
    sys.stdout.write(out)
    if not closed:
        print("not closed", file=sys.stderr)
    return EXIT_OK if closed else EXIT_FAIL


def cmd_links(args) -> int:
    t = formats.load(args.path)
    if not isinstance(t, Triangulation4):
        raise UsageError("links needs a tri4 file")
    t.require_valid()
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for i, cls in enumerate(vertex_classes(t)):
        link = vertex_link(t, cls)
        path = out_dir / f"link_{i:02d}_{signature_hash(signature(link))}.tri3"
        formats.dump(link, path)
        print(f"{path}\t{len(cls)} tetrahedra")
    return EXIT_OK


def cmd_iso(args) -> int:
    a, b = formats.load(args.path_a), formats.load(args.path_b)
    a.require_valid()
    b.require_valid()
    iso = isomorphic(a, b)
    if iso is None:
        print("not isomorphic")
        return EXIT_FAIL
    print(f"isomorphic ({iso.orientation_effect} orientation)")
    for s, (t, p) in enumerate(zip(iso.simplex_map, iso.perms)):
        print(f"{s} -> {t} : {' '.join(map(str, p.images))}")
    return EXIT_OK


def cmd_sig(args) -> int:
    print(signature(formats.load(args.path)))
    return EXIT_OK


def cmd_builtin(args) -> int:
    if args.name not in BUILTINS:
        raise UsageError(f"unknown builtin {args.name!r}; choose from {', '.join(BUILTINS)}")
    if args.name == "tripleT":
        t = build_triple_t(args.k)
    else:
        t = BUILTINS[args.name]()
    text = formats.dumps(t)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="facetpair",
        description="Facet-pairing triangulations: validation, face cycles, links, cusps, "
                    "isomorphism signatures.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check structure and closedness")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("analyze", help="full analysis report")
    p.add_argument("path")
    p.add_argument("--json", action="store_true", help="emit the JSON report")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("links", help="write one tri3 file per vertex link")
    p.add_argument("path")
    p.add_argument("--out-dir", default=".")
    p.set_defaults(func=cmd_links)

    p = sub.add_parser("iso", help="test two triangulations for isomorphism")
    p.add_argument("path_a")
    p.add_argument("path_b")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("sig", help="print the isomorphism signature")
    p.add_argument("path")
    p.set_defaults(func=cmd_sig)

    p = sub.add_parser("builtin", help="emit a built-in triangulation")
    p.add_argument("name", help="one of: " + ", ".join(BUILTINS))
    p.add_argument("--out")
    p.add_argument("--k", type=int, default=3, help="number of cone copies for tripleT")
    p.set_defaults(func=cmd_builtin)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (formats.FormatError, TriangulationError, UsageError, ValueError, OSError) as exc:
        message = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        print(f"facetpair: error: {message}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
