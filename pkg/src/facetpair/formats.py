"""
Reading and writing the ``tri3`` / ``tri4`` text formats.

::

    tri4 1
    n 2
    # simplex a, facet f glued to simplex b, facet g by the label map p
    g 0 2 1 2 : 0 3 2 1 4

Blank lines and ``#`` comments are ignored.  Each gluing is listed once, in
either direction; the reverse direction is implied.  The writer emits each
gluing once from its smaller facet slot, in sorted order, so the output of a
given triangulation is byte-for-byte stable.
"""
from __future__ import annotations

from pathlib import Path

from .core4 import Triangulation4
from .link3 import Triangulation3
from .triangulation import Triangulation

FORMATS = {"tri3": Triangulation3, "tri4": Triangulation4}
VERSION = "1"


class FormatError(ValueError):
    def __init__(self, message: str, lineno: int | None = None, source: str | None = None):
        self.lineno = lineno
        self.source = source
        where = source or "<input>"
        if lineno is not None:
            where += f":{lineno}"
        super().__init__(f"{where}: {message}")


def _ints(tokens, lineno, source):
    try:
        return [int(x) for x in tokens]
    except ValueError:
        raise FormatError(f"expected integers, got {' '.join(tokens)!r}", lineno, source) from None


def loads(text: str, source: str | None = None) -> Triangulation:
    cls = None
    size = None
    adj = {}
    records = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if cls is None:
            if len(tokens) != 2 or tokens[0] not in FORMATS:
                raise FormatError("expected header 'tri3 1' or 'tri4 1'", lineno, source)
            if tokens[1] != VERSION:
                raise FormatError(f"unsupported version {tokens[1]!r}", lineno, source)
            cls = FORMATS[tokens[0]]
            continue
        if size is None:
            if len(tokens) != 2 or tokens[0] != "n":
                raise FormatError("expected 'n <count>'", lineno, source)
            (size,) = _ints(tokens[1:], lineno, source)
            if size < 1:
                raise FormatError(f"simplex count must be at least 1, got {size}", lineno, source)
            continue
        nlab = cls.dimension + 1
        if tokens[0] != "g" or len(tokens) != 6 + nlab or tokens[5] != ":":
            raise FormatError(
                f"expected 'g <a> <f> <b> <g> : <{nlab} images>'", lineno, source)
        a, f, b, h = _ints(tokens[1:5], lineno, source)
        images = _ints(tokens[6:], lineno, source)
        if not (0 <= a < size and 0 <= b < size):
            raise FormatError(f"simplex index out of range 0..{size - 1}", lineno, source)
        if not (0 <= f < nlab and 0 <= h < nlab):
            raise FormatError(f"facet label out of range 0..{nlab - 1}", lineno, source)
        try:
            perm = cls.perm_class()(images)
        except ValueError as exc:
            raise FormatError(str(exc), lineno, source) from None
        if (a, f) == (b, h):
            raise FormatError(f"facet ({a},{f}) glued to itself", lineno, source)
        if perm[f] != h:
            raise FormatError(f"map sends label {f} to {perm[f]}, not to facet {h}",
                              lineno, source)
        fwd, back = ((b, h), perm), ((a, f), perm.inverse())
        if (a, f) in adj or (b, h) in adj:
            if adj.get((a, f)) == fwd and adj.get((b, h)) == back:
                continue
            slot = (a, f) if (a, f) in adj else (b, h)
            raise FormatError(f"facet slot {slot} is already glued", lineno, source)
        adj[(a, f)] = fwd
        adj[(b, h)] = back
        records.append((a, f, b, h, images))
    if cls is None:
        raise FormatError("empty input: missing header", None, source)
    if size is None:
        raise FormatError("missing 'n <count>' line", None, source)
    return cls(size, records)


def load(path) -> Triangulation:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"cannot read file: {exc.strerror or exc}", None, str(path)) from None
    return loads(text, source=str(path))


def dumps(t: Triangulation) -> str:
    name = {3: "tri3", 4: "tri4"}[t.dimension]
    lines = [f"{name} {VERSION}", f"n {t.size}"]
    for g in t.gluings:
        lines.append(f"g {g.source.simplex} {g.source.facet} {g.target.simplex} "
                     f"{g.target.facet} : " + " ".join(map(str, g.perm.images)))
    return "\n".join(lines) + "\n"


def dump(t: Triangulation, path) -> None:
    Path(path).write_text(dumps(t), encoding="utf-8")

