"""Surface syntax for the little dependent type theory.

Tokenizer, recursive-descent parser producing de Bruijn trees with
source positions, and a printer inverting the parser.  The grammar:

    type  ::= '(' IDENT ':' type ')' '->' type
            | '(' IDENT ':' type ')' '*' type
            | 'Id' atype aterm aterm
            | atype
    atype ::= 'Unit' | '#' INT '@' INT | '(' type ')'

    term  ::= 'fun' IDENT '=>' term | app
    app   ::= 'refl' aterm
            | 'J' atype aterm aterm aterm
            | aterm aterm*
    aterm ::= prim ('.1' | '.2')*
    prim  ::= 'tt' | IDENT | '<' term ',' term '>'
            | '(' term ')' | '(' term ':' type ')'

A program is a sequence of judgments `term [':' type]` separated by
semicolons; `--` starts a line comment.  Base codes `#k@n` denote the
k-element type at universe level n of a tower model.  Variables resolve
to de Bruijn indices during parsing, so an out-of-scope name is a
ParseError with a position, not a checker error.

Tree equality ignores positions and binder names (it is equality of de
Bruijn skeletons), which is what makes parse/print a strict roundtrip
even when the printer renames a shadowed binder.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .errors import ParseError

KEYWORDS = ("Unit", "tt", "fun", "Id", "refl", "J")

Pos = tuple  # (line, col)


# -- trees --------------------------------------------------------------------


@dataclass(frozen=True)
class TyUnit:
    pos: Pos = field(compare=False, default=(0, 0))


@dataclass(frozen=True)
class TyCode:
    size: int
    level: int
    pos: Pos = field(compare=False, default=(0, 0))


@dataclass(frozen=True)
class TyPi:
    name: str = field(compare=False)
    a: "Type"
    b: "Type"
    pos: Pos = field(compare=False, default=(0, 0))


@dataclass(frozen=True)
class TySigma:
    name: str = field(compare=False)
    a: "Type"
    b: "Type"
    pos: Pos = field(compare=False, default=(0, 0))


@dataclass(frozen=True)
class TyId:
    a: "Type"
    t0: "Term"
    t1: "Term"
    pos: Pos = field(compare=False, default=(0, 0))


@dataclass(frozen=True)
class TmVar:
    index: int
    name: str = field(compare=False)
    pos: Pos = field(compare=False, default=(0, 0))


@dataclass(frozen=True)
class TmTT:
    pos: Pos = field(compare=False, default=(0, 0))


@dataclass(frozen=True)
class TmLam:
    name: str = field(compare=False)
    body: "Term"
    pos: Pos = field(compare=False, default=(0, 0))


@dataclass(frozen=True)
class TmApp:
    fn: "Term"
    arg: "Term"
    pos: Pos = field(compare=False, default=(0, 0))


@dataclass(frozen=True)
class TmPair:
    a: "Term"
    b: "Term"
    pos: Pos = field(compare=False, default=(0, 0))


@dataclass(frozen=True)
class TmFst:
    p: "Term"
    pos: Pos = field(compare=False, default=(0, 0))


@dataclass(frozen=True)
class TmSnd:
    p: "Term"
    pos: Pos = field(compare=False, default=(0, 0))


@dataclass(frozen=True)
class TmRefl:
    a: "Term"
    pos: Pos = field(compare=False, default=(0, 0))


@dataclass(frozen=True)
class TmJ:
    motive: "Type"
    base: "Term"
    target: "Term"
    proof: "Term"
    pos: Pos = field(compare=False, default=(0, 0))


@dataclass(frozen=True)
class TmAnn:
    term: "Term"
    ty: "Type"
    pos: Pos = field(compare=False, default=(0, 0))


Type = Union[TyUnit, TyCode, TyPi, TySigma, TyId]
Term = Union[TmVar, TmTT, TmLam, TmApp, TmPair, TmFst, TmSnd,
             TmRefl, TmJ, TmAnn]


# -- tokenizer ------------------------------------------------------------------


@dataclass(frozen=True)
class Token:
    kind: str
    value: object
    line: int
    col: int


_PUNCT2 = {"->": "arrow", "=>": "darrow", ".1": "proj1", ".2": "proj2"}
_PUNCT1 = {"(": "lparen", ")": "rparen", ":": "colon", "*": "star",
           "<": "langle", ">": "rangle", ",": "comma", ";": "semi",
           "#": "hash", "@": "at"}


def _ident_char(c: str) -> bool:
    return c.isalnum() or c in "_'"


def tokenize(source: str) -> list[Token]:
    toks = []
    line, col, i = 1, 1, 0
    n = len(source)
    while i < n:
        c = source[i]
        if c == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if c in " \t\r":
            i += 1
            col += 1
            continue
        if source[i:i + 2] == "--":
            while i < n and source[i] != "\n":
                i += 1
            continue
        two = source[i:i + 2]
        if two in _PUNCT2:
            toks.append(Token(_PUNCT2[two], two, line, col))
            i += 2
            col += 2
            continue
        if c == ".":
            raise ParseError("expected 1 or 2 after '.'", line, col)
        if c in _PUNCT1:
            toks.append(Token(_PUNCT1[c], c, line, col))
            i += 1
            col += 1
            continue
        if c.isdigit():
            j = i
            while j < n and source[j].isdigit():
                j += 1
            toks.append(Token("int", int(source[i:j]), line, col))
            col += j - i
            i = j
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < n and _ident_char(source[j]):
                j += 1
            word = source[i:j]
            kind = "kw" if word in KEYWORDS else "ident"
            toks.append(Token(kind, word, line, col))
            col += j - i
            i = j
            continue
        raise ParseError(f"unexpected character {c!r}", line, col)
    toks.append(Token("eof", None, line, col))
    return toks


# -- parser ---------------------------------------------------------------------


_ATOM_STARTS = ("ident", "langle", "lparen")


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.toks = tokens
        self.pos = 0
        self.scope: list[str] = []

    def peek(self, k: int = 0) -> Token:
        return self.toks[min(self.pos + k, len(self.toks) - 1)]

    def advance(self) -> Token:
        tok = self.toks[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def expect(self, kind: str, what: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"expected {what}", tok.line, tok.col)
        return self.advance()

    def at_kw(self, word: str) -> bool:
        tok = self.peek()
        return tok.kind == "kw" and tok.value == word

    # types

    def parse_type(self) -> Type:
        tok = self.peek()
        if (tok.kind == "lparen" and self.peek(1).kind == "ident"
                and self.peek(2).kind == "colon"):
            self.advance()
            name = self.advance().value
            self.advance()
            a = self.parse_type()
            self.expect("rparen", "')' closing the binder")
            shape = self.peek()
            if shape.kind not in ("arrow", "star"):
                raise ParseError("expected '->' or '*' after a binder",
                                 shape.line, shape.col)
            self.advance()
            self.scope.append(name)
            try:
                b = self.parse_type()
            finally:
                self.scope.pop()
            cls = TyPi if shape.kind == "arrow" else TySigma
            return cls(name, a, b, (tok.line, tok.col))
        if self.at_kw("Id"):
            self.advance()
            a = self.parse_atom_type()
            t0 = self.parse_atom_term()
            t1 = self.parse_atom_term()
            return TyId(a, t0, t1, (tok.line, tok.col))
        return self.parse_atom_type()

    def parse_atom_type(self) -> Type:
        tok = self.peek()
        if self.at_kw("Unit"):
            self.advance()
            return TyUnit((tok.line, tok.col))
        if tok.kind == "hash":
            self.advance()
            size = self.expect("int", "a fiber size after '#'").value
            self.expect("at", "'@' and a universe level")
            level = self.expect("int", "a universe level").value
            return TyCode(size, level, (tok.line, tok.col))
        if tok.kind == "lparen":
            self.advance()
            inner = self.parse_type()
            self.expect("rparen", "')'")
            return inner
        raise ParseError("expected a type", tok.line, tok.col)

    # terms

    def parse_term(self) -> Term:
        tok = self.peek()
        if self.at_kw("fun"):
            self.advance()
            name = self.expect("ident", "a binder after 'fun'").value
            self.expect("darrow", "'=>'")
            self.scope.append(name)
            try:
                body = self.parse_term()
            finally:
                self.scope.pop()
            return TmLam(name, body, (tok.line, tok.col))
        return self.parse_app()

    def parse_app(self) -> Term:
        tok = self.peek()
        if self.at_kw("refl"):
            self.advance()
            return TmRefl(self.parse_atom_term(), (tok.line, tok.col))
        if self.at_kw("J"):
            self.advance()
            motive = self.parse_atom_type()
            base = self.parse_atom_term()
            target = self.parse_atom_term()
            proof = self.parse_atom_term()
            return TmJ(motive, base, target, proof, (tok.line, tok.col))
        head = self.parse_atom_term()
        while self.peek().kind in _ATOM_STARTS or self.at_kw("tt"):
            arg = self.parse_atom_term()
            head = TmApp(head, arg, (arg.pos[0], arg.pos[1]))
        return head

    def parse_atom_term(self) -> Term:
        term = self.parse_primary()
        while self.peek().kind in ("proj1", "proj2"):
            tok = self.advance()
            cls = TmFst if tok.kind == "proj1" else TmSnd
            term = cls(term, (tok.line, tok.col))
        return term

    def parse_primary(self) -> Term:
        tok = self.peek()
        if self.at_kw("tt"):
            self.advance()
            return TmTT((tok.line, tok.col))
        if tok.kind == "ident":
            self.advance()
            name = tok.value
            for depth, bound in enumerate(reversed(self.scope)):
                if bound == name:
                    return TmVar(depth, name, (tok.line, tok.col))
            raise ParseError(f"unbound variable {name!r}", tok.line, tok.col)
        if tok.kind == "langle":
            self.advance()
            a = self.parse_term()
            self.expect("comma", "',' between pair components")
            b = self.parse_term()
            self.expect("rangle", "'>' closing the pair")
            return TmPair(a, b, (tok.line, tok.col))
        if tok.kind == "lparen":
            self.advance()
            inner = self.parse_term()
            if self.peek().kind == "colon":
                self.advance()
                ty = self.parse_type()
                self.expect("rparen", "')'")
                return TmAnn(inner, ty, (tok.line, tok.col))
            self.expect("rparen", "')'")
            return inner
        raise ParseError("expected a term", tok.line, tok.col)

    # programs

    def parse_judgment(self) -> tuple[Term, Optional[Type]]:
        term = self.parse_term()
        if self.peek().kind == "colon":
            self.advance()
            return term, self.parse_type()
        return term, None

    def parse_program(self) -> list[tuple[Term, Optional[Type]]]:
        judgments = [self.parse_judgment()]
        while self.peek().kind == "semi":
            self.advance()
            if self.peek().kind == "eof":
                break
            judgments.append(self.parse_judgment())
        self.expect("eof", "';' or end of input")
        return judgments


def _run(source: str, method: str, scope=()):
    parser = _Parser(tokenize(source))
    parser.scope = list(scope)
    result = getattr(parser, method)()
    parser.expect("eof", "end of input")
    return result


def parse_term(source: str, scope=()) -> Term:
    """One term; `scope` supplies names for free variables, outermost first."""
    return _run(source, "parse_term", scope)


def parse_type(source: str, scope=()) -> Type:
    return _run(source, "parse_type", scope)


def parse_program(source: str) -> list[tuple[Term, Optional[Type]]]:
    parser = _Parser(tokenize(source))
    return parser.parse_program()


# -- printer --------------------------------------------------------------------


def _fresh(name: str, names: tuple) -> str:
    while name in names:
        name += "'"
    return name


def _atomic_term(t: Term) -> bool:
    return isinstance(t, (TmVar, TmTT, TmPair, TmFst, TmSnd, TmAnn))


def _print_atom_term(t: Term, names: tuple) -> str:
    text = print_term(t, names)
    return text if _atomic_term(t) else f"({text})"


def _print_atom_type(t: Type, names: tuple) -> str:
    text = print_type(t, names)
    return text if isinstance(t, (TyUnit, TyCode)) else f"({text})"


def print_type(t: Type, names: tuple = ()) -> str:
    if isinstance(t, TyUnit):
        return "Unit"
    if isinstance(t, TyCode):
        return f"#{t.size}@{t.level}"
    if isinstance(t, (TyPi, TySigma)):
        name = _fresh(t.name, names)
        op = "->" if isinstance(t, TyPi) else "*"
        return (f"({name} : {print_type(t.a, names)}) {op} "
                f"{print_type(t.b, names + (name,))}")
    if isinstance(t, TyId):
        return (f"Id {_print_atom_type(t.a, names)} "
                f"{_print_atom_term(t.t0, names)} "
                f"{_print_atom_term(t.t1, names)}")
    raise TypeError(f"not a surface type: {t!r}")


def print_term(t: Term, names: tuple = ()) -> str:
    if isinstance(t, TmVar):
        return names[-1 - t.index] if t.index < len(names) else t.name
    if isinstance(t, TmTT):
        return "tt"
    if isinstance(t, TmLam):
        name = _fresh(t.name, names)
        return f"fun {name} => {print_term(t.body, names + (name,))}"
    if isinstance(t, TmApp):
        fn = (print_term(t.fn, names) if isinstance(t.fn, TmApp)
              else _print_atom_term(t.fn, names))
        return f"{fn} {_print_atom_term(t.arg, names)}"
    if isinstance(t, TmPair):
        return f"<{print_term(t.a, names)}, {print_term(t.b, names)}>"
    if isinstance(t, TmFst):
        return f"{_print_atom_term(t.p, names)}.1"
    if isinstance(t, TmSnd):
        return f"{_print_atom_term(t.p, names)}.2"
    if isinstance(t, TmRefl):
        return f"refl {_print_atom_term(t.a, names)}"
    if isinstance(t, TmJ):
        return (f"J {_print_atom_type(t.motive, names)} "
                f"{_print_atom_term(t.base, names)} "
                f"{_print_atom_term(t.target, names)} "
                f"{_print_atom_term(t.proof, names)}")
    if isinstance(t, TmAnn):
        return f"({print_term(t.term, names)} : {print_type(t.ty, names)})"
    raise TypeError(f"not a surface term: {t!r}")
