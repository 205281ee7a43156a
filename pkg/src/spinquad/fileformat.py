"""Line-oriented presentation and torsion fixture files.

Example::

    # lens space L(7,1)
    name L(7,1)
    n 1
    7
    spinc chern 7 label=base
    spinc charge 1
    torsion s=7 1/5 26/35 ...
        more values on continuation lines

``#`` starts a comment.  After ``n <int>`` the next n non-keyword lines are
the matrix rows.  A ``torsion <sigma> <values>`` block lists |H| rationals in
the canonical element order (lexicographic Smith coordinates); its values may
continue on following lines until the next keyword.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .errors import DomainError, ParseError
from .homology import SurgeryPresentation, homology_of
from .spinc import SpincClass, resolve, spinc_from_charge, spinc_from_chern
from .torsion import TorsionTable

KEYWORDS = {"name", "n", "spinc", "torsion"}


@dataclass
class TorsionBlock:
    label: str
    values: list[Fraction]
    line: int


@dataclass
class PresentationFile:
    presentation: SurgeryPresentation
    name: str = ""
    spinc: dict[str, SpincClass] = field(default_factory=dict)
    torsion: list[TorsionBlock] = field(default_factory=list)

    def resolve(self, label: str) -> SpincClass:
        return resolve(self.presentation, label, self.spinc)

    def torsion_tables(self, blocks=None) -> list[TorsionTable]:
        g = homology_of(self.presentation)
        out = []
        for b in self.torsion if blocks is None else blocks:
            if len(b.values) > g.order:
                raise ParseError(
                    f"line {b.line}: torsion block {b.label!r} has {len(b.values)} values, "
                    f"|H| = {g.order}"
                )
            out.append(TorsionTable.from_sequence(self.resolve(b.label), b.values))
        return out


def _tokens(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _ints(tokens, lineno, what):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"line {lineno}: {what} must be integers, got {' '.join(tokens)!r}") from None


def _rationals(tokens, lineno):
    try:
        return [Fraction(t) for t in tokens]
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"line {lineno}: torsion values must be rationals p/q") from None


def _parse_torsion(lines) -> list[TorsionBlock]:
    blocks: list[TorsionBlock] = []
    for lineno, toks in lines:
        if toks[0] == "torsion":
            if len(toks) < 2:
                raise ParseError(f"line {lineno}: torsion needs a Spin^c label")
            blocks.append(TorsionBlock(toks[1], _rationals(toks[2:], lineno), lineno))
        elif toks[0] in KEYWORDS:
            raise ParseError(f"line {lineno}: unexpected {toks[0]!r} in a torsion fixture")
        elif blocks:
            blocks[-1].values.extend(_rationals(toks, lineno))
        else:
            raise ParseError(f"line {lineno}: values before any torsion header")
    return blocks


def parse_presentation(text: str) -> PresentationFile:
    lines = list(_tokens(text))
    name, n, rows = "", None, []
    spinc_lines, torsion_lines = [], []
    i = 0
    while i < len(lines):
        lineno, toks = lines[i]
        key = toks[0]
        if key == "name":
            name = " ".join(toks[1:])
        elif key == "n":
            if n is not None:
                raise ParseError(f"line {lineno}: field 'n' given twice")
            if len(toks) != 2:
                raise ParseError(f"line {lineno}: field 'n' expects one integer")
            (n,) = _ints(toks[1:], lineno, "field 'n'")
            if n < 1:
                raise ParseError(f"line {lineno}: field 'n' must be positive")
            for r in range(n):
                i += 1
                if i >= len(lines) or lines[i][1][0] in KEYWORDS:
                    raise ParseError(f"line {lineno}: expected {n} matrix rows, found {r}")
                rl, rt = lines[i]
                row = _ints(rt, rl, "matrix entries")
                if len(row) != n:
                    raise ParseError(f"line {rl}: matrix row has {len(row)} entries, expected {n}")
                rows.append(tuple(row))
        elif key == "spinc":
            spinc_lines.append((lineno, toks))
        elif key == "torsion":
            torsion_lines.append((lineno, toks))
            while i + 1 < len(lines) and lines[i + 1][1][0] not in KEYWORDS:
                i += 1
                torsion_lines.append(lines[i])
        else:
            raise ParseError(f"line {lineno}: unknown field {key!r}")
        i += 1

    if n is None:
        raise ParseError("missing header field 'n'")
    if any(rows[a][b] != rows[b][a] for a in range(n) for b in range(a)):
        raise ParseError("field 'matrix': linking matrix is not symmetric")
    # NotRationalHomologySphere propagates as a domain error
    p = SurgeryPresentation(tuple(rows), name=name)

    named: dict[str, SpincClass] = {}
    for lineno, toks in spinc_lines:
        if len(toks) < 3 or toks[1] not in ("chern", "charge"):
            raise ParseError(f"line {lineno}: expected 'spinc chern|charge <ints> [label=NAME]'")
        label = None
        body = toks[2:]
        if body and body[-1].startswith("label="):
            label = body[-1][len("label="):]
            body = body[:-1]
        vec = _ints(body, lineno, "Spin^c vector")
        try:
            sigma = spinc_from_chern(p, vec) if toks[1] == "chern" else spinc_from_charge(p, vec)
        except DomainError as exc:
            raise type(exc)(f"line {lineno}: {exc}") from None
        named[label or sigma.label] = sigma

    return PresentationFile(p, name, named, _parse_torsion(torsion_lines))


def parse_fixture(text: str) -> list[TorsionBlock]:
    return _parse_torsion(list(_tokens(text)))


def load_presentation(path) -> PresentationFile:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    return parse_presentation(text)


def load_fixture(path) -> list[TorsionBlock]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    return parse_fixture(text)


def format_presentation(p: SurgeryPresentation, named=None) -> str:
    lines = []
    if p.name:
        lines.append(f"name {p.name}")
    lines.append(f"n {p.n}")
    lines += [" ".join(map(str, row)) for row in p.matrix]
    for label, sigma in (named or {}).items():
        suffix = "" if label == sigma.label else f" label={label}"
        lines.append("spinc chern " + " ".join(map(str, sigma.chern)) + suffix)
    return "\n".join(lines) + "\n"


def format_torsion(t: TorsionTable, per_line: int = 12) -> str:
    vals = [str(v) for v in t.sequence()]
    head = f"torsion {t.sigma.label}"
    chunks = [vals[i:i + per_line] for i in range(0, len(vals), per_line)]
    if not chunks:
        return head + "\n"
    out = [head + " " + " ".join(chunks[0])]
    out += ["    " + " ".join(c) for c in chunks[1:]]
    return "\n".join(out) + "\n"

