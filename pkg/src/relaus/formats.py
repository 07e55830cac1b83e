"""Text formats: ``.alg`` bound quiver presentations, ``.mod`` representations, module expressions.

``.alg`` is line oriented with ``#`` comments::

    name sq
    field QQ
    vertex 1 2 3 4
    arrow b: 1 -> 2
    relation n*a - g*b
    module Q = I2 + I3 + I4

Paths are written like compositions, so ``n*a`` is ``a`` followed by ``n``.
A term may start with a rational coefficient (``2/3*n*a``).  ``module``
lines name module expressions for later use.

``.mod``::

    module M over sq
    dim 1 = 2
    map b = [[1,0],[0,1]]

Matrices are row major with shape ``dim(target) x dim(source)``.
"""
from __future__ import annotations

import dataclasses
import json
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import modules as md
from .algebra import Algebra, PresentationError, path_algebra
from .linalg import Field, FieldError
from .modules import Module, ModuleError


@dataclass
class Presentation:
    name: str = "A"
    field: str = "QQ"
    vertices: list = dataclasses.field(default_factory=list)
    arrows: list = dataclasses.field(default_factory=list)        # (label, source, target)
    relations: list = dataclasses.field(default_factory=list)     # [(Fraction, path tuple)]
    relation_lines: list = dataclasses.field(default_factory=list)
    modules: dict = dataclasses.field(default_factory=dict)       # alias -> expression


_LABEL = re.compile(r"[A-Za-z_][A-Za-z0-9_']*|[0-9]+")
_ARROW = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_']*)\s*:\s*(\S+)\s*->\s*(\S+)\s*$")
_NUMBER = re.compile(r"^[0-9]+(/[0-9]+)?$")


def _strip_comment(line: str) -> str:
    k = line.find("#")
    return line if k < 0 else line[:k]


def _parse_relation(text: str, lineno: int, col0: int, arrows: dict):
    """Parse ``c*x*y - z*w + ...`` into ``[(coeff, path)]``."""
    terms = []
    pos = 0
    s = text
    sign = 1
    expect_term = True
    while pos < len(s):
        ch = s[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch in "+-":
            if not expect_term and ch in "+-":
                sign = 1 if ch == "+" else -1
                expect_term = True
                pos += 1
                continue
            if expect_term and ch == "-":
                sign = -sign
                pos += 1
                continue
            raise PresentationError("unexpected sign", "syntax", lineno, col0 + pos + 1)
        if not expect_term:
            raise PresentationError("expected + or -", "syntax", lineno, col0 + pos + 1)
        m = re.match(r"[^+\-]+", s[pos:])
        chunk = m.group(0)
        start = pos
        factors = [f.strip() for f in chunk.split("*")]
        coeff = Fraction(sign)
        path = []
        offset = start
        for k, f in enumerate(factors):
            fcol = col0 + s.index(f, offset) + 1 if f else col0 + offset + 1
            if not f:
                raise PresentationError("empty factor", "syntax", lineno, fcol)
            if _NUMBER.match(f):
                if k != 0:
                    raise PresentationError("coefficient must come first", "syntax", lineno, fcol)
                coeff *= Fraction(f)
            else:
                if f not in arrows:
                    raise PresentationError(f"unknown arrow {f!r}", "unknown-arrow", lineno, fcol)
                path.append(f)
            offset = s.index(f, offset) + len(f)
        if not path:
            raise PresentationError("relation term without a path", "non-admissible", lineno,
                                    col0 + start + 1)
        if len(path) < 2:
            raise PresentationError(f"relation term {'*'.join(path)} has length 1; relations must "
                                    "lie in the square of the arrow ideal (admissibility)",
                                    "non-admissible", lineno, col0 + start + 1)
        for left, right in zip(path, path[1:]):
            if arrows[left][0] != arrows[right][1]:
                raise PresentationError(f"path {'*'.join(path)} is not composable", "non-uniform",
                                        lineno, col0 + start + 1)
        terms.append((coeff, tuple(path), col0 + start + 1))
        pos += len(chunk)
        sign = 1
        expect_term = False
    if not terms:
        raise PresentationError("empty relation", "syntax", lineno, col0 + 1)
    ends = {(arrows[p[-1]][0], arrows[p[0]][1]) for _, p, _ in terms}
    if len(ends) > 1:
        raise PresentationError("relation terms do not share source and target", "non-uniform",
                                lineno, terms[0][2])
    return [(c, p) for c, p, _ in terms]


def parse_algebra_text(text: str) -> Presentation:
    """Parse ``.alg`` text.  Errors are :class:`PresentationError` with line and column."""
    pres = Presentation()
    arrows: dict = {}
    seen_vertices: set = set()
    seen_field = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw).rstrip()
        if not line.strip():
            continue
        indent = len(line) - len(line.lstrip())
        body = line.strip()
        kw, _, rest = body.partition(" ")
        rest_col = indent + len(kw) + 1 + (len(rest) - len(rest.lstrip()))
        rest = rest.strip()
        if kw == "name":
            if not rest:
                raise PresentationError("missing name", "syntax", lineno, indent + 1)
            pres.name = rest
        elif kw == "field":
            try:
                Field.parse(rest)
            except FieldError as e:
                raise PresentationError(str(e), "bad-field", lineno, rest_col + 1) from None
            if seen_field:
                raise PresentationError("field given twice", "syntax", lineno, indent + 1)
            seen_field = True
            pres.field = rest
        elif kw == "vertex":
            for m in re.finditer(r"\S+", rest):
                v = m.group(0)
                col = rest_col + m.start() + 1
                if not _LABEL.fullmatch(v):
                    raise PresentationError(f"bad vertex label {v!r}", "syntax", lineno, col)
                if v in seen_vertices:
                    raise PresentationError(f"duplicate vertex {v!r}", "duplicate-label", lineno, col)
                seen_vertices.add(v)
                pres.vertices.append(v)
        elif kw == "arrow":
            m = _ARROW.match(rest)
            if not m:
                raise PresentationError("expected 'arrow <label>: <source> -> <target>'", "syntax",
                                        lineno, rest_col + 1)
            lab, s, t = m.groups()
            if lab in arrows or lab in seen_vertices:
                raise PresentationError(f"duplicate label {lab!r}", "duplicate-label", lineno,
                                        rest_col + 1)
            for v, g in ((s, 2), (t, 3)):
                if v not in seen_vertices:
                    raise PresentationError(f"unknown vertex {v!r}", "unknown-vertex", lineno,
                                            rest_col + m.start(g) + 1)
            arrows[lab] = (s, t)
            pres.arrows.append((lab, s, t))
        elif kw == "relation":
            pres.relations.append(_parse_relation(rest, lineno, rest_col, arrows))
            pres.relation_lines.append(lineno)
        elif kw == "module":
            alias, eq, expr = rest.partition("=")
            alias = alias.strip()
            if not eq or not _LABEL.fullmatch(alias) or not expr.strip():
                raise PresentationError("expected 'module <name> = <expression>'", "syntax",
                                        lineno, rest_col + 1)
            if alias in pres.modules:
                raise PresentationError(f"duplicate module name {alias!r}", "duplicate-label",
                                        lineno, rest_col + 1)
            pres.modules[alias] = expr.strip()
        else:
            raise PresentationError(f"unknown keyword {kw!r}", "syntax", lineno, indent + 1)
    if not pres.vertices:
        raise PresentationError("no vertices", "syntax", None, None)
    return pres


def build_algebra(pres: Presentation, field_spec: str | None = None) -> Algebra:
    """The algebra of a presentation; ``field_spec`` overrides the file's field."""
    try:
        F = Field.parse(field_spec or pres.field)
    except FieldError as e:
        raise PresentationError(str(e), "bad-field") from None
    try:
        A = path_algebra(F, pres.vertices, pres.arrows, pres.relations, name=pres.name)
    except PresentationError as e:
        raise PresentationError(str(e), e.code,
                                pres.relation_lines[0] if pres.relation_lines else None,
                                1 if pres.relation_lines else None) from None
    A.aliases = dict(pres.modules)
    return A


def load_algebra(path, field_spec: str | None = None) -> Algebra:
    text = Path(path).read_text(encoding="utf-8")
    return build_algebra(parse_algebra_text(text), field_spec)


# ---------------------------------------------------------------------------
# module files


def _parse_matrix(text: str, F: Field, lineno: int, col: int):
    quoted = re.sub(r"(-?\d+(?:/\d+)?)", r'"\1"', text)
    try:
        rows = json.loads(quoted)
    except json.JSONDecodeError:
        raise PresentationError("malformed matrix", "syntax", lineno, col) from None
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise PresentationError("matrix must be a list of rows", "syntax", lineno, col)
    widths = {len(r) for r in rows}
    if len(widths) > 1:
        raise PresentationError("rows of different lengths", "syntax", lineno, col)
    ncols = widths.pop() if widths else 0
    vals = []
    for r in rows:
        for x in r:
            q = Fraction(x)
            if F.p is not None and (q.denominator != 1 or not 0 <= q.numerator < F.p):
                raise PresentationError(f"entry {x} is not in 0..{F.p - 1}", "syntax", lineno, col)
            vals.append(F(q))
    return F.matrix(len(rows), ncols, vals)


def parse_module_text(text: str, A: Algebra) -> Module:
    name = None
    dims = {}
    mats = {}
    pending = []
    F = A.field
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw).strip()
        if not line:
            continue
        kw, _, rest = line.partition(" ")
        rest = rest.strip()
        if kw == "module":
            m = re.match(r"^(\S+)\s+over\s+(\S+)$", rest)
            if not m:
                raise PresentationError("expected 'module <name> over <algebra>'", "syntax", lineno, 1)
            name = m.group(1)
            if m.group(2) != A.name:
                raise PresentationError(f"module is over {m.group(2)!r}, not {A.name!r}",
                                        "algebra-mismatch", lineno, 1)
        elif kw == "dim":
            m = re.match(r"^(\S+)\s*=\s*(\d+)$", rest)
            if not m or m.group(1) not in A.vertices:
                raise PresentationError("expected 'dim <vertex> = <n>'", "unknown-vertex"
                                        if m else "syntax", lineno, 1)
            dims[m.group(1)] = int(m.group(2))
        elif kw == "map":
            lab, eq, mat = rest.partition("=")
            lab = lab.strip()
            if not eq:
                raise PresentationError("expected 'map <arrow> = [[...]]'", "syntax", lineno, 1)
            pending.append((lab, mat.strip(), lineno, line.index("=") + 2))
        else:
            raise PresentationError(f"unknown keyword {kw!r}", "syntax", lineno, 1)
    dvec = [dims.get(v, 0) for v in A.vertices]
    arrows = {lab: b for lab, b in (A.arrows or [])}
    for lab, text_m, lineno, col in pending:
        if lab not in arrows:
            raise PresentationError(f"unknown arrow {lab!r}", "unknown-arrow", lineno, 1)
        m = _parse_matrix(text_m, F, lineno, col)
        b = arrows[lab]
        s, t = A.source[b], A.target[b]
        if (m.nrows(), m.ncols()) != (dvec[t], dvec[s]) and not (dvec[t] == 0 or dvec[s] == 0):
            raise PresentationError(f"map {lab} has shape {m.nrows()}x{m.ncols()}, expected "
                                    f"{dvec[t]}x{dvec[s]}", "shape", lineno, col)
        if dvec[t] and dvec[s]:
            mats[lab] = m
    try:
        return Module.from_arrow_matrices(A, dvec, mats, name=name)
    except ModuleError as e:
        raise PresentationError(str(e), "relation-violated") from None


def load_module(path, A: Algebra) -> Module:
    return parse_module_text(Path(path).read_text(encoding="utf-8"), A)


def format_module(M: Module) -> str:
    """Write a module over a quiver algebra in ``.mod`` syntax."""
    A = M.algebra
    lines = [f"module {M.name or 'M'} over {A.name}"]
    for v, d in zip(A.vertices, M.dims):
        if d:
            lines.append(f"dim {v} = {d}")
    for lab, b in A.arrows:
        m = M.action[b]
        if m.nrows() and m.ncols():
            rows = [[str(m[i, j]) for j in range(m.ncols())] for i in range(m.nrows())]
            lines.append(f"map {lab} = [" + ",".join("[" + ",".join(r) + "]" for r in rows) + "]")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# module expressions


class ExpressionError(ValueError):
    pass


_ATOM = re.compile(r"^(?:(\d+)\s*\*\s*)?(.+)$")


def _vertex(A: Algebra, v: str) -> int:
    if v not in A.vertices:
        raise ExpressionError(f"unknown vertex {v!r}")
    return A.vertices.index(v)


def _atom(A: Algebra, tok: str, base_dir, depth: int) -> Module:
    aliases = getattr(A, "aliases", {}) or {}
    if tok in aliases:
        if depth > 8:
            raise ExpressionError("module aliases nest too deeply")
        return module_expression(A, aliases[tok], base_dir, depth + 1).renamed(tok)
    if tok == "A":
        return md.regular(A)
    if tok == "DA":
        return md.dual_regular(A)
    if tok == "0":
        return md.zero_module(A)
    if tok.endswith(".mod"):
        p = Path(tok)
        if base_dir is not None and not p.is_absolute() and not p.exists():
            p = Path(base_dir) / p
        return load_module(p, A)
    m = re.fullmatch(r"I(\S+)/S(\S+)", tok)
    if m:
        if m.group(1) != m.group(2):
            raise ExpressionError("only I<i>/S<i> quotients are supported")
        i = _vertex(A, m.group(1))
        I = md.injective(A, i)
        soc, incl = md.socle(I)
        q, _ = md.cokernel(incl)
        return q.renamed(tok)
    m = re.fullmatch(r"radP(\S+)", tok)
    if m:
        rad, _ = md.radical(md.projective(A, _vertex(A, m.group(1))))
        return rad.renamed(tok)
    m = re.fullmatch(r"([PIS])(\S+)", tok)
    if m:
        i = _vertex(A, m.group(2))
        kind = m.group(1)
        if kind == "P":
            return md.projective(A, i, name=tok)
        if kind == "I":
            return md.injective(A, i, name=tok)
        return md.simple(A, i, name=tok)
    raise ExpressionError(f"cannot read module {tok!r}")


def module_expression(A: Algebra, expr: str, base_dir=None, depth: int = 0) -> Module:
    """Direct sums of named modules: ``I2+I3+I4``, ``2*P1 + radP1``, ``Q``, ``m.mod``."""
    parts = [p.strip() for p in expr.split("+")]
    if not parts or any(not p for p in parts):
        raise ExpressionError(f"malformed module expression {expr!r}")
    mods = []
    for p in parts:
        m = _ATOM.match(p)
        k = int(m.group(1)) if m.group(1) else 1
        X = _atom(A, m.group(2).strip(), base_dir, depth)
        mods.extend([X] * k)
    if len(mods) == 1:
        return mods[0]
    return md.direct_sum_module(mods, algebra=A, name=expr.replace(" ", ""))
