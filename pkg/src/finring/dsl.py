"""Line-oriented ring-spec language.

A file holds one or more blocks of the form

    ring wood-basic {
      # corners and coordinate bimodules
      base s = GF(2)
      bimodule e = zero_product(s)
      matrix = [[s, e], [e, s]]
      expand = [2, 1]        # optional block expansion
    }

Base declarations accept GF(q), Z/p^k, GF(q)[x]/(x^m) and
trivext(base, bimodule); bimodules are zero_product(base) (the additive
group of the base with multiplication actions and square-zero products)
or regular(base) (a genuine matrix-unit cell that merges its two corner
classes).  The grid is square, its diagonal names bases, off-diagonal
entries name bimodules or are 0.  Names must be declared before use.

Parsing never raises anything but SpecSyntaxError / ResolutionError,
both carrying (line, column); pretty() emits canonical text that
reparses to an equal AST.
"""

from dataclasses import dataclass, field

from .matrix import (Zpk, GFq, TruncatedPoly, TrivialExt, BimRegular,
                     FormalMatrixSpec, zero_product_copy)
from .core import RingError


class SpecSyntaxError(RingError):
    """Malformed spec text; carries the offending position."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


class ResolutionError(RingError):
    """A name that does not resolve (or resolves to the wrong kind)."""

    def __init__(self, message: str, name: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.name = name
        self.line = line
        self.col = col


# -- tokens -------------------------------------------------------------------


@dataclass(frozen=True)
class Token:
    kind: str        # "ident" | "int" | "punct" | "eof"
    text: str
    line: int
    col: int


_PUNCT = set("{}[]()=,/^")


def tokenize(text: str) -> list[Token]:
    out: list[Token] = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        i = 0
        while i < len(line):
            ch = line[i]
            if ch.isspace():
                i += 1
                continue
            if ch in _PUNCT:
                out.append(Token("punct", ch, ln, i + 1))
                i += 1
                continue
            if ch.isdigit():
                j = i
                while j < len(line) and line[j].isdigit():
                    j += 1
                out.append(Token("int", line[i:j], ln, i + 1))
                i = j
                continue
            if ch.isalpha() or ch == "_":
                j = i
                while j < len(line) and (line[j].isalnum() or line[j] in "_-"):
                    j += 1
                out.append(Token("ident", line[i:j], ln, i + 1))
                i = j
                continue
            raise SpecSyntaxError(f"unexpected character {ch!r}", ln, i + 1)
    last = (out[-1].line + 1) if out else 1
    out.append(Token("eof", "", last, 1))
    return out


# -- syntax tree --------------------------------------------------------------


@dataclass(frozen=True)
class BaseDecl:
    kind: str                      # "gf" | "zpk" | "poly" | "trivext"
    params: tuple[int, ...] = ()
    refs: tuple[str, ...] = ()     # trivext: (base name, bimodule name)


@dataclass(frozen=True)
class BimDecl:
    kind: str                      # "zero_product" | "regular"
    ref: str


@dataclass(frozen=True)
class RingSpecAST:
    name: str
    bases: tuple[tuple[str, BaseDecl], ...]
    bimodules: tuple[tuple[str, BimDecl], ...]
    matrix: tuple[tuple[str | None, ...], ...]
    expand: tuple[int, ...] | None
    spans: dict = field(compare=False, default_factory=dict, repr=False)

    @property
    def n(self) -> int:
        return len(self.matrix)


# -- parser -------------------------------------------------------------------


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.toks = tokens
        self.pos = 0

    def peek(self) -> Token:
        return self.toks[self.pos]

    def next(self) -> Token:
        t = self.toks[self.pos]
        if t.kind != "eof":
            self.pos += 1
        return t

    def expect(self, kind: str, text: str | None = None) -> Token:
        t = self.peek()
        if t.kind != kind or (text is not None and t.text != text):
            want = text if text is not None else kind
            got = t.text if t.text else "end of input"
            raise SpecSyntaxError(f"expected {want!r}, found {got!r}",
                                  t.line, t.col)
        return self.next()

    def expect_int(self) -> int:
        return int(self.expect("int").text)

    # ring <ident> { decl* }
    def ring_block(self) -> RingSpecAST:
        head = self.expect("ident", "ring")
        name_tok = self.expect("ident")
        self.expect("punct", "{")
        bases: list[tuple[str, BaseDecl]] = []
        bims: list[tuple[str, BimDecl]] = []
        matrix: tuple[tuple[str | None, ...], ...] | None = None
        expand: tuple[int, ...] | None = None
        spans: dict = {"ring": (head.line, head.col)}
        declared: set[str] = set()
        while True:
            t = self.peek()
            if t.kind == "punct" and t.text == "}":
                self.next()
                break
            if t.kind != "ident":
                raise SpecSyntaxError(
                    f"expected a declaration or '}}', found {t.text!r}",
                    t.line, t.col)
            if t.text == "base":
                nm, decl, span = self.base_decl(declared)
                bases.append((nm, decl))
                declared.add(nm)
                spans[nm] = span
            elif t.text == "bimodule":
                nm, decl, span = self.bim_decl(declared)
                bims.append((nm, decl))
                declared.add(nm)
                spans[nm] = span
            elif t.text == "matrix":
                if matrix is not None:
                    raise SpecSyntaxError("duplicate matrix declaration",
                                          t.line, t.col)
                matrix = self.matrix_decl()
            elif t.text == "expand":
                if expand is not None:
                    raise SpecSyntaxError("duplicate expand declaration",
                                          t.line, t.col)
                expand = self.expand_decl()
            else:
                raise SpecSyntaxError(
                    f"unknown declaration {t.text!r} (expected base, "
                    f"bimodule, matrix or expand)", t.line, t.col)
        if matrix is None:
            raise ResolutionError(f"ring {name_tok.text!r} declares no matrix",
                                  name_tok.text, name_tok.line, name_tok.col)
        return RingSpecAST(name_tok.text, tuple(bases), tuple(bims),
                           matrix, expand, spans)

    def base_decl(self, declared: set[str]):
        self.expect("ident", "base")
        nm = self.expect("ident")
        if nm.text in declared:
            raise ResolutionError(f"duplicate name {nm.text!r}",
                                  nm.text, nm.line, nm.col)
        self.expect("punct", "=")
        head = self.expect("ident")
        if head.text == "GF":
            self.expect("punct", "(")
            q = self.expect_int()
            self.expect("punct", ")")
            t = self.peek()
            if t.kind == "punct" and t.text == "[":
                self.next()
                self.expect("ident", "x")
                self.expect("punct", "]")
                self.expect("punct", "/")
                self.expect("punct", "(")
                self.expect("ident", "x")
                self.expect("punct", "^")
                m = self.expect_int()
                self.expect("punct", ")")
                decl = BaseDecl("poly", (q, m))
            else:
                decl = BaseDecl("gf", (q,))
        elif head.text == "Z":
            self.expect("punct", "/")
            p = self.expect_int()
            self.expect("punct", "^")
            k = self.expect_int()
            decl = BaseDecl("zpk", (p, k))
        elif head.text == "trivext":
            self.expect("punct", "(")
            a = self.expect("ident")
            self.expect("punct", ",")
            b = self.expect("ident")
            self.expect("punct", ")")
            decl = BaseDecl("trivext", (), (a.text, b.text))
        else:
            raise SpecSyntaxError(
                f"unknown base form {head.text!r} (expected GF, Z or trivext)",
                head.line, head.col)
        return nm.text, decl, (nm.line, nm.col)

    def bim_decl(self, declared: set[str]):
        self.expect("ident", "bimodule")
        nm = self.expect("ident")
        if nm.text in declared:
            raise ResolutionError(f"duplicate name {nm.text!r}",
                                  nm.text, nm.line, nm.col)
        self.expect("punct", "=")
        head = self.expect("ident")
        if head.text not in ("zero_product", "regular"):
            raise SpecSyntaxError(
                f"unknown bimodule form {head.text!r} "
                f"(expected zero_product or regular)", head.line, head.col)
        self.expect("punct", "(")
        ref = self.expect("ident")
        self.expect("punct", ")")
        return nm.text, BimDecl(head.text, ref.text), (nm.line, nm.col)

    def matrix_decl(self):
        self.expect("ident", "matrix")
        self.expect("punct", "=")
        open_tok = self.expect("punct", "[")
        rows: list[tuple[str | None, ...]] = []
        while True:
            rows.append(self.matrix_row())
            t = self.next()
            if t.kind == "punct" and t.text == ",":
                continue
            if t.kind == "punct" and t.text == "]":
                break
            raise SpecSyntaxError(f"expected ',' or ']', found {t.text!r}",
                                  t.line, t.col)
        n = len(rows)
        for r, row in enumerate(rows):
            if len(row) != n:
                raise SpecSyntaxError(
                    f"matrix is not square: {n} rows but row {r + 1} has "
                    f"{len(row)} entries", open_tok.line, open_tok.col)
        return tuple(rows)

    def matrix_row(self) -> tuple[str | None, ...]:
        self.expect("punct", "[")
        cells: list[str | None] = []
        while True:
            t = self.next()
            if t.kind == "ident":
                cells.append(t.text)
            elif t.kind == "int" and t.text == "0":
                cells.append(None)
            else:
                raise SpecSyntaxError(
                    f"expected a name or 0, found {t.text!r}", t.line, t.col)
            t = self.next()
            if t.kind == "punct" and t.text == ",":
                continue
            if t.kind == "punct" and t.text == "]":
                return tuple(cells)
            raise SpecSyntaxError(f"expected ',' or ']', found {t.text!r}",
                                  t.line, t.col)

    def expand_decl(self) -> tuple[int, ...]:
        self.expect("ident", "expand")
        self.expect("punct", "=")
        self.expect("punct", "[")
        vals: list[int] = []
        while True:
            t = self.peek()
            vals.append(self.expect_int())
            if t.text and int(t.text) < 1:
                raise SpecSyntaxError("expand entries must be positive",
                                      t.line, t.col)
            t = self.next()
            if t.kind == "punct" and t.text == ",":
                continue
            if t.kind == "punct" and t.text == "]":
                return tuple(vals)
            raise SpecSyntaxError(f"expected ',' or ']', found {t.text!r}",
                                  t.line, t.col)


def parse_file(text: str) -> list[RingSpecAST]:
    """Every ring block in the text, in order."""
    p = _Parser(tokenize(text))
    out = []
    while p.peek().kind != "eof":
        out.append(p.ring_block())
    return out


def parse_spec(text: str) -> RingSpecAST:
    """Exactly one ring block."""
    blocks = parse_file(text)
    if len(blocks) != 1:
        raise SpecSyntaxError(f"expected exactly one ring block, "
                              f"found {len(blocks)}", 1, 1)
    return blocks[0]


# -- name resolution ----------------------------------------------------------


def _span(ast: RingSpecAST, name: str) -> tuple[int, int]:
    return ast.spans.get(name, ast.spans.get("ring", (1, 1)))


def resolve(ast: RingSpecAST) -> FormalMatrixSpec:
    """Materialize an AST into a buildable formal matrix spec.

    One declaration yields one object, shared by every grid cell that
    names it, so repeated mentions of a bimodule really are the same
    bimodule.
    """
    bases: dict[str, object] = {}
    bims: dict[str, object] = {}
    for nm, decl in ast.bases:
        if decl.kind == "gf":
            bases[nm] = GFq(decl.params[0])
        elif decl.kind == "zpk":
            bases[nm] = Zpk(*decl.params)
        elif decl.kind == "poly":
            bases[nm] = TruncatedPoly(*decl.params)
        else:
            bref, mref = decl.refs
            ln, col = _span(ast, nm)
            if bref not in bases:
                raise ResolutionError(f"trivext base {bref!r} is not a "
                                      f"declared base", bref, ln, col)
            if mref not in bims:
                raise ResolutionError(f"trivext bimodule {mref!r} is not a "
                                      f"declared bimodule", mref, ln, col)
            bases[nm] = TrivialExt(bases[bref], bims[mref])
        for bnm, bdecl in ast.bimodules:
            if bnm in bims or bdecl.ref not in bases:
                continue
            if bdecl.kind == "zero_product":
                bims[bnm] = zero_product_copy(bases[bdecl.ref])
            else:
                bims[bnm] = BimRegular(bases[bdecl.ref])
    for bnm, bdecl in ast.bimodules:
        if bnm not in bims:
            ln, col = _span(ast, bnm)
            raise ResolutionError(
                f"bimodule {bnm!r} references undeclared base {bdecl.ref!r}",
                bdecl.ref, ln, col)

    n = ast.n
    corners = []
    grid = []
    for i, row in enumerate(ast.matrix):
        cells = []
        for j, cell in enumerate(row):
            ln, col = _span(ast, "ring")
            if i == j:
                if cell is None or cell not in bases:
                    raise ResolutionError(
                        f"diagonal entry ({i + 1},{j + 1}) must name a "
                        f"declared base, got {cell!r}", str(cell), ln, col)
                corners.append(bases[cell])
                cells.append(None)
            elif cell is None:
                cells.append(None)
            else:
                if cell not in bims:
                    raise ResolutionError(
                        f"entry ({i + 1},{j + 1}) names {cell!r}, which is "
                        f"not a declared bimodule", cell, ln, col)
                cells.append(bims[cell])
        grid.append(tuple(cells))
    expand = ast.expand
    if expand is not None and len(expand) != n:
        ln, col = _span(ast, "ring")
        raise ResolutionError(
            f"expand has {len(expand)} entries for a {n}x{n} matrix",
            ast.name, ln, col)
    return FormalMatrixSpec(tuple(corners), tuple(grid),
                            expand=expand, name=ast.name)


# -- pretty printer -----------------------------------------------------------


def _base_text(decl: BaseDecl) -> str:
    if decl.kind == "gf":
        return f"GF({decl.params[0]})"
    if decl.kind == "zpk":
        return f"Z/{decl.params[0]}^{decl.params[1]}"
    if decl.kind == "poly":
        return f"GF({decl.params[0]})[x]/(x^{decl.params[1]})"
    return f"trivext({decl.refs[0]}, {decl.refs[1]})"


def pretty(ast: RingSpecAST) -> str:
    """Canonical text for an AST; reparses to an equal AST."""
    lines = [f"ring {ast.name} {{"]
    for nm, decl in ast.bases:
        lines.append(f"  base {nm} = {_base_text(decl)}")
    for nm, decl in ast.bimodules:
        lines.append(f"  bimodule {nm} = {decl.kind}({decl.ref})")
    rows = ", ".join(
        "[" + ", ".join(c if c is not None else "0" for c in row) + "]"
        for row in ast.matrix)
    lines.append(f"  matrix = [{rows}]")
    if ast.expand is not None:
        lines.append(f"  expand = [{', '.join(str(v) for v in ast.expand)}]")
    lines.append("}")
    return "\n".join(lines) + "\n"
