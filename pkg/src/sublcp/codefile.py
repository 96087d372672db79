"""Line-oriented text format for fields, subspaces, matrices and families.

Example::

    # 2-spread of F_2^4
    field p=2 m=1
    ambient n=4
    subspace U1: 1000, 0100
    genpoly G: coeffs=1,1 length=4 shift=1
    matrix M: 10, 01
    family C: U1 G

Vectors are comma separated.  Over a prime field with ``p <= 10`` a vector
may be written as a run of digits (``1000``); otherwise entries are
separated by spaces.  Extension-field entries are bracketed coefficient
tuples, lowest degree first: ``[01]`` or ``[0 1]`` is the element ``x``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .code import LinearCode, SubspaceCode, constacyclic_from_genpoly
from .errors import (
    BadFieldHeader,
    CodeFileError,
    CodeFileSyntaxError,
    DimensionMismatch,
    SubLcpError,
    UndefinedName,
)
from .field import Field
from .matrix import Matrix
from .poly import Polynomial
from .subspace import Subspace

_NAME = r"[A-Za-z_][A-Za-z0-9_'.-]*"
_BLOCK = re.compile(rf"^(subspace|matrix|genpoly|family)\s+({_NAME})\s*:(.*)$")
_KV = re.compile(r"(\w+)=(\S+)")


@dataclass(frozen=True)
class GenPoly:
    coeffs: tuple[int, ...]
    length: int
    shift: int


@dataclass
class CodeFile:
    field: Field
    n: int
    subspaces: dict[str, Subspace] = field(default_factory=dict)
    matrices: dict[str, Matrix] = field(default_factory=dict)
    genpolys: dict[str, GenPoly] = field(default_factory=dict)
    families: dict[str, tuple[str, ...]] = field(default_factory=dict)
    order: list[str] = field(default_factory=list, compare=False)

    def names(self) -> set[str]:
        return set(self.subspaces) | set(self.matrices) | set(self.genpolys) | set(self.families)

    def code(self, name: str) -> LinearCode:
        g = self.genpolys[name]
        return constacyclic_from_genpoly(Polynomial(self.field, g.coeffs), g.length, g.shift)

    def subspace(self, name: str) -> Subspace:
        if name in self.subspaces:
            return self.subspaces[name]
        if name in self.genpolys:
            return self.code(name).subspace
        raise UndefinedName(f"no subspace or genpoly named {name!r}")

    def family(self, name: str) -> SubspaceCode:
        """A named family, or a single subspace/genpoly as a one-member family."""
        if name in self.families:
            return SubspaceCode(self.subspace(m) for m in self.families[name])
        return SubspaceCode([self.subspace(name)])

    def matrix_family(self, name: str) -> list[Matrix]:
        if name in self.families:
            members = self.families[name]
        elif name in self.matrices:
            members = (name,)
        else:
            raise UndefinedName(f"no family or matrix named {name!r}")
        missing = [m for m in members if m not in self.matrices]
        if missing:
            raise UndefinedName(f"{missing[0]!r} is not a matrix")
        return [self.matrices[m] for m in members]


# ----------------------------------------------------------------------------
# parsing


def _ints(text: str, line: int, what: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise CodeFileSyntaxError(f"bad integer list for {what}: {text!r}", line) from None


def _parse_field(rest: str, line: int) -> Field:
    kv = dict(_KV.findall(rest))
    if "p" not in kv:
        raise BadFieldHeader("field header needs p=<prime>", line)
    try:
        p = int(kv["p"])
        m = int(kv.get("m", "1"))
        modulus = _ints(kv["modulus"], line, "modulus") if "modulus" in kv else None
        return Field(p, m, modulus)
    except (ValueError, CodeFileSyntaxError) as exc:
        raise BadFieldHeader(str(exc), line) from None


def _parse_element(tok: str, F: Field, line: int) -> int:
    tok = tok.strip()
    if F.m == 1:
        try:
            v = int(tok)
        except ValueError:
            raise CodeFileSyntaxError(f"bad field element {tok!r}", line) from None
        if not 0 <= v < F.p:
            raise CodeFileSyntaxError(f"entry {v} outside [0, {F.p})", line)
        return v
    mt = re.fullmatch(r"\[([^\]]*)\]", tok)
    if not mt:
        raise CodeFileSyntaxError(f"extension-field element must be bracketed, got {tok!r}", line)
    body = mt.group(1).strip()
    digits = body.split() if (" " in body or F.p > 10) else list(body)
    try:
        cs = [int(d) for d in digits]
    except ValueError:
        raise CodeFileSyntaxError(f"bad coefficients in {tok!r}", line) from None
    if len(cs) > F.m or any(not 0 <= c < F.p for c in cs):
        raise CodeFileSyntaxError(f"element {tok!r} is not in {F!r}", line)
    return F.encode(cs)


def _parse_vector(text: str, F: Field, line: int) -> list[int]:
    text = text.strip()
    if F.m > 1:
        toks = re.findall(r"\[[^\]]*\]", text)
        if re.sub(r"\[[^\]]*\]|\s", "", text):
            raise CodeFileSyntaxError(f"stray characters in vector {text!r}", line)
    elif " " in text or F.p > 10:
        toks = text.split()
    else:
        toks = list(text)
    return [_parse_element(t, F, line) for t in toks]


def _parse_rows(body: str, F: Field, n: int, line: int) -> np.ndarray:
    rows = []
    for chunk in body.split(","):
        if not chunk.strip():
            continue
        v = _parse_vector(chunk, F, line)
        if len(v) != n:
            raise DimensionMismatch(f"row {chunk.strip()!r} has {len(v)} entries, expected {n}", line)
        rows.append(v)
    return np.array(rows, dtype=np.int64).reshape(len(rows), n)


def parse_code_text(text: str) -> CodeFile:
    F: Field | None = None
    n: int | None = None
    cf: CodeFile | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        s = raw.split("#", 1)[0].strip()
        if not s:
            continue
        head = s.split(None, 1)[0]
        rest = s[len(head):]
        if head == "field":
            if F is not None:
                raise BadFieldHeader("duplicate field header", lineno)
            F = _parse_field(rest, lineno)
            continue
        if head == "ambient":
            if F is None:
                raise BadFieldHeader("field header must come first", lineno)
            kv = dict(_KV.findall(rest))
            try:
                n = int(kv["n"])
            except (KeyError, ValueError):
                raise CodeFileSyntaxError("ambient needs n=<int>", lineno) from None
            if n < 1:
                raise CodeFileSyntaxError("ambient dimension must be positive", lineno)
            cf = CodeFile(F, n)
            continue
        mt = _BLOCK.match(s)
        if not mt:
            raise CodeFileSyntaxError(f"unrecognised line {s!r}", lineno)
        if cf is None:
            raise CodeFileSyntaxError("field and ambient headers must precede blocks", lineno)
        kind, name, body = mt.groups()
        if name in cf.names():
            raise CodeFileSyntaxError(f"name {name!r} defined twice", lineno)
        if kind == "subspace":
            rows = _parse_rows(body, F, n, lineno)
            cf.subspaces[name] = Subspace(Matrix._raw(F, rows)) if len(rows) else Subspace.zero(F, n)
        elif kind == "matrix":
            rows = _parse_rows(body, F, n, lineno)
            if not len(rows):
                raise CodeFileSyntaxError("matrix needs at least one row", lineno)
            cf.matrices[name] = Matrix._raw(F, rows)
        elif kind == "genpoly":
            kv = dict(_KV.findall(body))
            missing = {"coeffs", "length", "shift"} - set(kv)
            if missing:
                raise CodeFileSyntaxError(f"genpoly missing {', '.join(sorted(missing))}", lineno)
            coeffs = tuple(_parse_element(t, F, lineno) for t in kv["coeffs"].split(","))
            try:
                length = int(kv["length"])
            except ValueError:
                raise CodeFileSyntaxError("length must be an integer", lineno) from None
            if length != n:
                raise DimensionMismatch(f"genpoly length {length} differs from ambient {n}", lineno)
            g = GenPoly(Polynomial(F, coeffs).coeffs, length, _parse_element(kv["shift"], F, lineno))
            try:
                constacyclic_from_genpoly(Polynomial(F, g.coeffs), g.length, g.shift)
            except SubLcpError as exc:
                raise CodeFileError(str(exc), lineno) from None
            cf.genpolys[name] = g
        else:
            members = tuple(body.split())
            if not members:
                raise CodeFileSyntaxError("family needs at least one member", lineno)
            for m in members:
                if m not in cf.names() or m in cf.families:
                    raise UndefinedName(f"family member {m!r} is not defined above", lineno)
            cf.families[name] = members
        cf.order.append(name)
    if F is None:
        raise BadFieldHeader("missing field header")
    if cf is None:
        raise CodeFileSyntaxError("missing ambient header")
    return cf


def parse_code_file(path) -> CodeFile:
    return parse_code_text(Path(path).read_text())


# ----------------------------------------------------------------------------
# emission


def format_element(F: Field, v: int) -> str:
    if F.m == 1:
        return str(v)
    cs = F.coefficients(v)
    return "[" + ("".join if F.p <= 10 else " ".join)(str(c) for c in cs) + "]"


def format_vector(F: Field, v) -> str:
    parts = [format_element(F, int(x)) for x in v]
    if F.m == 1 and F.p <= 10:
        return "".join(parts)
    return " ".join(parts)


def format_vector_e(F: Field, v) -> str:
    """``e``-notation, e.g. ``e1+e4`` or ``2e1+e3``; ``0`` for the zero vector."""
    terms = []
    for i, x in enumerate(v, start=1):
        x = int(x)
        if x == 0:
            continue
        coef = "" if x == 1 else format_element(F, x)
        terms.append(f"{coef}e{i}")
    return "+".join(terms) if terms else "0"


def _rows_text(F: Field, M: Matrix) -> str:
    return ", ".join(format_vector(F, r) for r in M.array)


def emit_code_text(cf: CodeFile) -> str:
    F = cf.field
    head = f"field p={F.p} m={F.m}"
    if F.m > 1:
        head += " modulus=" + ",".join(str(c) for c in F.modulus)
    lines = [head, f"ambient n={cf.n}"]
    order = cf.order or sorted(cf.names())
    for name in order:
        if name in cf.subspaces:
            lines.append(f"subspace {name}: {_rows_text(F, cf.subspaces[name].basis)}".rstrip())
        elif name in cf.matrices:
            lines.append(f"matrix {name}: {_rows_text(F, cf.matrices[name])}")
        elif name in cf.genpolys:
            g = cf.genpolys[name]
            cs = ",".join(format_element(F, c) for c in g.coeffs)
            lines.append(f"genpoly {name}: coeffs={cs} length={g.length} shift={format_element(F, g.shift)}")
        elif name in cf.families:
            lines.append(f"family {name}: {' '.join(cf.families[name])}")
    return "\n".join(lines) + "\n"


def codefile_from_families(families: dict[str, SubspaceCode], prefix: str = "") -> CodeFile:
    """Wrap families as a CodeFile, naming members ``<family>_<index>``."""
    first = next(iter(families.values()))
    cf = CodeFile(first.field, first.n)
    for fname, code in families.items():
        names = []
        for i, U in enumerate(code, start=1):
            nm = f"{prefix}{fname}_{i}"
            cf.subspaces[nm] = U
            cf.order.append(nm)
            names.append(nm)
        cf.families[fname] = tuple(names)
        cf.order.append(fname)
    return cf


def parse_element(text: str, F: Field) -> int:
    """A single field element in file notation (``3`` or ``[011]``)."""
    return _parse_element(text, F, 0)
