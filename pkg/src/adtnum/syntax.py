"""Inductive-definition DSL: grammar, validation, and normtype shapes.

The surface syntax follows the usual inductive-definition style::

    Inductive natlist := Cons : nat -> natlist -> natlist | Nil : natlist.

A definition validates when every constructor returns the type being
defined and every argument is either a registered base type or the type
itself.  Function-typed arguments, forward references and mutual blocks
are rejected; each has a named rule so diagnostics can cite it.

``normtype_of`` computes the one-level sum-of-products unfolding of a
validated definition: right-nested sums terminated by ``void``,
right-nested products terminated by ``unit``, with a caller-supplied
expression in recursive positions.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    BadResultType,
    DuplicateName,
    HigherOrderArg,
    MutualOrForwardReference,
    ParseError,
    UnknownBase,
)

# An argument spec is a base-type name, or REC for the inductive type itself.
REC = None
ArgSpec = str | None


@dataclass(frozen=True)
class ConstructorSig:
    """Validated constructor: name plus base/recursive argument specs."""

    name: str
    args: tuple[str | None, ...]

    @property
    def arity(self) -> int:
        return len(self.args)

    def rec_positions(self) -> tuple[int, ...]:
        return tuple(i for i, a in enumerate(self.args) if a is REC)


ConstrsType = tuple  # tuple[ConstructorSig, ...]


# Raw (pre-validation) type syntax: a name, or an arrow between two types.


@dataclass(frozen=True)
class TyName:
    name: str
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class TyArrow:
    lhs: "TyName | TyArrow"
    rhs: "TyName | TyArrow"


@dataclass(frozen=True)
class RawBranch:
    name: str
    type: "TyName | TyArrow"
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class InductiveDef:
    type_name: str
    branches: tuple[RawBranch, ...]
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)

    @property
    def constructor_names(self) -> tuple[str, ...]:
        return tuple(b.name for b in self.branches)


@dataclass(frozen=True)
class Program:
    defs: tuple[InductiveDef, ...]

    def def_named(self, name: str) -> InductiveDef | None:
        for d in self.defs:
            if d.type_name == name:
                return d
        return None


# Lexer


_PUNCT = {":=": "ASSIGN", "->": "ARROW", "|": "BAR", ".": "DOT", ":": "COLON",
          "(": "LPAREN", ")": "RPAREN"}


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    line: int
    col: int


def _is_ident_start(c: str) -> bool:
    return c.isalpha() or c == "_"


def _is_ident_char(c: str) -> bool:
    return c.isalnum() or c in "_'"


def _tokenize(text: str) -> list[_Tok]:
    toks: list[_Tok] = []
    i, line, col = 0, 1, 1
    n = len(text)
    while i < n:
        c = text[i]
        if c == "\n":
            i, line, col = i + 1, line + 1, 1
            continue
        if c.isspace():
            i, col = i + 1, col + 1
            continue
        if text.startswith("(*", i):
            depth, j, l2, c2 = 1, i + 2, line, col + 2
            while j < n and depth:
                if text.startswith("(*", j):
                    depth, j, c2 = depth + 1, j + 2, c2 + 2
                elif text.startswith("*)", j):
                    depth, j, c2 = depth - 1, j + 2, c2 + 2
                elif text[j] == "\n":
                    j, l2, c2 = j + 1, l2 + 1, 1
                else:
                    j, c2 = j + 1, c2 + 1
            if depth:
                raise ParseError("unterminated comment", line, col)
            i, line, col = j, l2, c2
            continue
        if _is_ident_start(c):
            j = i + 1
            while j < n and _is_ident_char(text[j]):
                j += 1
            toks.append(_Tok("IDENT", text[i:j], line, col))
            col += j - i
            i = j
            continue
        two = text[i : i + 2]
        if two in _PUNCT:
            toks.append(_Tok(_PUNCT[two], two, line, col))
            i, col = i + 2, col + 2
            continue
        if c in _PUNCT:
            toks.append(_Tok(_PUNCT[c], c, line, col))
            i, col = i + 1, col + 1
            continue
        raise ParseError(f"unexpected character {c!r}", line, col)
    toks.append(_Tok("EOF", "", line, col))
    return toks


# Parser (recursive descent; type nesting depth is user-controlled but
# parenthesized types are near-flat in practice)


class _Parser:
    def __init__(self, toks: list[_Tok]):
        self.toks = toks
        self.pos = 0

    def peek(self) -> _Tok:
        return self.toks[self.pos]

    def next(self) -> _Tok:
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def expect(self, kind: str, what: str) -> _Tok:
        t = self.peek()
        if t.kind != kind:
            got = t.text or "end of input"
            raise ParseError(f"expected {what}, found {got!r}", t.line, t.col)
        return self.next()

    def parse_type(self) -> TyName | TyArrow:
        lhs = self.parse_type_atom()
        if self.peek().kind == "ARROW":
            self.next()
            return TyArrow(lhs, self.parse_type())
        return lhs

    def parse_type_atom(self) -> TyName | TyArrow:
        t = self.peek()
        if t.kind == "LPAREN":
            self.next()
            inner = self.parse_type()
            self.expect("RPAREN", "')'")
            return inner
        tok = self.expect("IDENT", "a type name")
        return TyName(tok.text, tok.line, tok.col)

    def parse_branch(self) -> RawBranch:
        name = self.expect("IDENT", "a constructor name")
        self.expect("COLON", "':'")
        ty = self.parse_type()
        return RawBranch(name.text, ty, name.line, name.col)

    def parse_decl(self) -> InductiveDef:
        kw = self.expect("IDENT", "'Inductive'")
        if kw.text != "Inductive":
            raise ParseError(
                f"expected 'Inductive', found {kw.text!r}", kw.line, kw.col
            )
        name = self.expect("IDENT", "a type name")
        self.expect("ASSIGN", "':='")
        branches: list[RawBranch] = []
        if self.peek().kind == "IDENT":
            branches.append(self.parse_branch())
            while self.peek().kind == "BAR":
                self.next()
                branches.append(self.parse_branch())
        self.expect("DOT", "'.'")
        seen: set[str] = set()
        for b in branches:
            if b.name in seen:
                raise ParseError(
                    f"duplicate constructor name '{b.name}' in '{name.text}'",
                    b.line,
                    b.col,
                )
            seen.add(b.name)
        return InductiveDef(name.text, tuple(branches), name.line, name.col)

    def parse_program(self) -> Program:
        defs: list[InductiveDef] = []
        names: set[str] = set()
        first = self.peek()
        if first.kind == "EOF":
            raise ParseError("empty input: expected at least one declaration", 1, 1)
        while self.peek().kind != "EOF":
            d = self.parse_decl()
            if d.type_name in names:
                raise ParseError(
                    f"duplicate type name '{d.type_name}'", d.line, d.col
                )
            names.add(d.type_name)
            defs.append(d)
        return Program(tuple(defs))


def parse_program(text: str) -> Program:
    """Parse DSL source into a Program, preserving declaration and
    constructor order.  Raises ParseError with line/column on bad input."""
    return _Parser(_tokenize(text)).parse_program()


# Pretty-printing (parse . render == identity at the AST level)


def _render_type(ty: TyName | TyArrow) -> str:
    if isinstance(ty, TyName):
        return ty.name
    lhs = _render_type(ty.lhs)
    if isinstance(ty.lhs, TyArrow):
        lhs = f"({lhs})"
    return f"{lhs} -> {_render_type(ty.rhs)}"


def render_def(d: InductiveDef) -> str:
    if not d.branches:
        return f"Inductive {d.type_name} :=."
    body = " | ".join(f"{b.name} : {_render_type(b.type)}" for b in d.branches)
    return f"Inductive {d.type_name} := {body}."


def render_program(p: Program) -> str:
    return "\n".join(render_def(d) for d in p.defs) + "\n"


# Validation


def _arrow_spine(ty: TyName | TyArrow) -> tuple[list[TyName | TyArrow], TyName | TyArrow]:
    args: list[TyName | TyArrow] = []
    while isinstance(ty, TyArrow):
        args.append(ty.lhs)
        ty = ty.rhs
    return args, ty


def validate(
    defn: InductiveDef,
    known_bases: frozenset[str] | set[str],
    forward_names: frozenset[str] | set[str] = frozenset(),
) -> tuple[ConstructorSig, ...]:
    """Check a definition against the first-order rules.

    ``known_bases`` are the registered countable base types;
    ``forward_names`` are sibling or later definitions of the same program,
    referencing which is a MutualOrForwardReference rather than an
    UnknownBase.  Returns the validated constructor signatures in
    declaration order.
    """
    sigs: list[ConstructorSig] = []
    for branch in defn.branches:
        raw_args, result = _arrow_spine(branch.type)
        if isinstance(result, TyArrow) or result.name != defn.type_name:
            raise BadResultType(
                f"constructor {branch.name} must return {defn.type_name}, "
                f"returns {_render_type(result)}"
            )
        specs: list[str | None] = []
        for idx, arg in enumerate(raw_args):
            if isinstance(arg, TyArrow):
                raise HigherOrderArg(
                    f"constructor {branch.name} of {defn.type_name}: argument "
                    f"{idx + 1} '({_render_type(arg)})' is a function type"
                )
            if arg.name == defn.type_name:
                specs.append(REC)
            elif arg.name in known_bases:
                specs.append(arg.name)
            elif arg.name in forward_names:
                raise MutualOrForwardReference(
                    f"constructor {branch.name} of {defn.type_name} refers to "
                    f"'{arg.name}', which is declared later in the program"
                )
            else:
                raise UnknownBase(arg.name)
        sigs.append(ConstructorSig(branch.name, tuple(specs)))
    return tuple(sigs)


def base_names(constrs: tuple[ConstructorSig, ...]) -> tuple[str, ...]:
    """Distinct base types mentioned by a signature, first-use order."""
    seen: list[str] = []
    for sig in constrs:
        for a in sig.args:
            if a is not REC and a not in seen:
                seen.append(a)
    return tuple(seen)


# Normtype shapes


@dataclass(frozen=True)
class Sum:
    left: "TypeExpr"
    right: "TypeExpr"


@dataclass(frozen=True)
class Prod:
    left: "TypeExpr"
    right: "TypeExpr"


@dataclass(frozen=True)
class UnitT:
    pass


@dataclass(frozen=True)
class VoidT:
    pass


@dataclass(frozen=True)
class BaseT:
    name: str


@dataclass(frozen=True)
class HoleX:
    pass


TypeExpr = Sum | Prod | UnitT | VoidT | BaseT | HoleX

UNIT_T = UnitT()
VOID_T = VoidT()
X = HoleX()


def normtype_of(constrs: tuple[ConstructorSig, ...], hole=X):
    """One-level unfolding of a validated definition as a sum of products.

    Right-nested: the sum ends in void, each product ends in unit.  Base
    arguments map to BaseT, recursive arguments to ``hole``.
    """
    shape = VOID_T
    for sig in reversed(constrs):
        prod = UNIT_T
        for a in reversed(sig.args):
            leaf = hole if a is REC else BaseT(a)
            prod = Prod(leaf, prod)
        shape = Sum(prod, shape)
    return shape


def render_typeexpr(e) -> str:
    """Render with ``*`` tighter than ``+`` and explicit right-nesting,
    e.g. ``nat * (X * unit) + (unit + void)``."""
    if isinstance(e, UnitT):
        return "unit"
    if isinstance(e, VoidT):
        return "void"
    if isinstance(e, BaseT):
        return e.name
    if isinstance(e, HoleX):
        return "X"
    if isinstance(e, Prod):
        lhs = render_typeexpr(e.left)
        if isinstance(e.left, (Sum, Prod)):
            lhs = f"({lhs})"
        rhs = render_typeexpr(e.right)
        if isinstance(e.right, (Sum, Prod)):
            rhs = f"({rhs})"
        return f"{lhs} * {rhs}"
    if isinstance(e, Sum):
        lhs = render_typeexpr(e.left)
        if isinstance(e.left, Sum):
            lhs = f"({lhs})"
        rhs = render_typeexpr(e.right)
        if isinstance(e.right, (Sum, Prod)):
            rhs = f"({rhs})"
        return f"{lhs} + {rhs}"
    raise TypeError(f"not a type expression: {e!r}")
