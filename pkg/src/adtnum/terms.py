"""Generic terms of compiled inductive types, and structural recursion.

A :class:`Term` stores a constructor index plus arguments; base arguments
carry their numeric code (paired with the base name) rather than a native
value, so one representation serves every registered base type.  All
traversals here use explicit worklists: terms routinely nest thousands of
levels deep, far past the interpreter's recursion limit.

``fold`` is the runtime face of the dependent eliminator: one function
per constructor, applied bottom-up.  Its defining equations double as a
testable law.  ``rank`` and ``pattern_match`` are the two derived
operations the stratified codec is built from.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence, Union

from .errors import ParseError, TermError
from .syntax import REC, ConstructorSig


@dataclass(frozen=True)
class BaseVal:
    """A base-typed argument: the base name plus its numeric code."""

    base: str
    code: int


@dataclass(frozen=True, eq=False, repr=False)
class Term:
    ctor: int
    args: "tuple[Union[BaseVal, Term], ...]"

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Term):
            return NotImplemented
        stack = [(self, other)]
        while stack:
            a, b = stack.pop()
            if a is b:
                continue
            if a.ctor != b.ctor or len(a.args) != len(b.args):
                return False
            for x, y in zip(a.args, b.args):
                if isinstance(x, Term):
                    if not isinstance(y, Term):
                        return False
                    stack.append((x, y))
                else:
                    if x != y:
                        return False
        return True

    def __hash__(self) -> int:
        memo: dict[int, int] = {}
        order = postorder(self)
        for node in order:
            parts = tuple(
                memo[id(a)] if isinstance(a, Term) else hash(a) for a in node.args
            )
            memo[id(node)] = hash((node.ctor, parts))
        return memo[id(self)]

    def __repr__(self) -> str:
        return f"Term(ctor={self.ctor}, args=<{len(self.args)}>)"


Arg = Union[BaseVal, Term]


def postorder(t: Term) -> list[Term]:
    """Sub-terms of t, children before parents, each object once."""
    seen: set[int] = set()
    out: list[Term] = []
    stack: list[tuple[Term, bool]] = [(t, False)]
    while stack:
        node, expanded = stack.pop()
        if expanded:
            out.append(node)
            continue
        if id(node) in seen:
            continue
        seen.add(id(node))
        stack.append((node, True))
        for a in node.args:
            if isinstance(a, Term):
                stack.append((a, False))
    return out


def check_wf(t: Term, constrs: tuple[ConstructorSig, ...], registry) -> None:
    """Verify shape invariants recursively; raises TermError on the first
    violation.  ``registry`` must answer ``valid_code(base, code)``."""
    if not isinstance(t, Term):
        raise TermError(f"not a term: {t!r}")
    stack = [t]
    while stack:
        node = stack.pop()
        if not 0 <= node.ctor < len(constrs):
            raise TermError(f"unknown constructor index {node.ctor}")
        sig = constrs[node.ctor]
        if len(node.args) != sig.arity:
            raise TermError(
                f"{sig.name} expects {sig.arity} arguments, got {len(node.args)}"
            )
        for i, (spec, arg) in enumerate(zip(sig.args, node.args)):
            if spec is REC:
                if not isinstance(arg, Term):
                    raise TermError(
                        f"{sig.name} argument {i + 1} must be recursive, "
                        f"got base value {arg!r}"
                    )
                stack.append(arg)
            else:
                if not isinstance(arg, BaseVal):
                    raise TermError(
                        f"{sig.name} argument {i + 1} must be a {spec} value, "
                        f"got a sub-term"
                    )
                if arg.base != spec:
                    raise TermError(
                        f"{sig.name} argument {i + 1} must be {spec}, "
                        f"got {arg.base}"
                    )
                if not registry.valid_code(spec, arg.code):
                    raise TermError(
                        f"{sig.name} argument {i + 1}: code {arg.code} does not "
                        f"decode as {spec}"
                    )


FoldFn = Callable[[tuple, tuple], object]


def fold(
    constrs: tuple[ConstructorSig, ...],
    para: Sequence[FoldFn],
    t: Term,
    registry=None,
) -> object:
    """Bottom-up structural recursion.

    ``para[i]`` receives the node's base codes (in argument order) and the
    results of the recursive calls (in argument order).  The defining
    equation, which property tests re-check one unfolding at a time::

        fold(constrs, para, Term(i, args))
            == para[i](base_codes(args), tuple(fold(..., s) for rec s))

    When ``registry`` is given the term is well-formedness-checked first.
    """
    if len(para) != len(constrs):
        raise ValueError("need exactly one function per constructor")
    if registry is not None:
        check_wf(t, constrs, registry)
    results: dict[int, object] = {}
    for node in postorder(t):
        bases = tuple(a.code for a in node.args if isinstance(a, BaseVal))
        recs = tuple(results[id(a)] for a in node.args if isinstance(a, Term))
        results[id(node)] = para[node.ctor](bases, recs)
    return results[id(t)]


def rank_para(constrs: tuple[ConstructorSig, ...]) -> list[FoldFn]:
    """One node counts itself plus its recursive arguments; base arguments
    contribute nothing."""
    return [lambda bases, recs: 1 + sum(recs)] * len(constrs)


def rank(constrs: tuple[ConstructorSig, ...], t: Term, registry=None) -> int:
    """Structural rank: 1 + sum of the ranks of recursive arguments."""
    return fold(constrs, rank_para(constrs), t, registry)


def compute_ranks(t: Term) -> dict[int, int]:
    """Rank of every sub-term, keyed by object id (engine fast path)."""
    ranks: dict[int, int] = {}
    for node in postorder(t):
        ranks[id(node)] = 1 + sum(
            ranks[id(a)] for a in node.args if isinstance(a, Term)
        )
    return ranks


# One-level normal-form values: what a term looks like through its
# sum-of-products unfolding.  Tuple heads are plain BaseVal / Term leaves.


@dataclass(frozen=True)
class InL:
    value: object


@dataclass(frozen=True)
class InR:
    value: object


@dataclass(frozen=True)
class TupleV:
    head: Arg
    tail: object


@dataclass(frozen=True)
class UnitV:
    pass


UNIT_V = UnitV()

NormValue = Union[InL, InR, TupleV, UnitV]


def pattern_match(
    constrs: tuple[ConstructorSig, ...], t: Term, registry=None
) -> NormValue:
    """Unfold exactly one constructor layer.

    Constructor i becomes i ``InR`` wrappers around ``InL``; the arguments
    become a TupleV spine ending in unit, sub-terms left untouched.
    """
    if registry is not None:
        check_wf(t, constrs, registry)
    if not 0 <= t.ctor < len(constrs):
        raise TermError(f"unknown constructor index {t.ctor}")
    return _pattern_match_unchecked(t)


def _pattern_match_unchecked(t: Term) -> NormValue:
    spine: NormValue = UNIT_V
    for a in reversed(t.args):
        spine = TupleV(a, spine)
    v: NormValue = InL(spine)
    for _ in range(t.ctor):
        v = InR(v)
    return v


def inr_depth(nv: NormValue) -> int:
    d = 0
    while isinstance(nv, InR):
        d += 1
        nv = nv.value
    return d


# Term concrete syntax: S-expressions like (Cons 3 (Cons 5 Nil)); nullary
# constructors may stand bare.  Base literals are whatever the registry
# accepts for the base, including nested S-expressions for compiled bases.


def _tokenize_term(text: str) -> list[tuple[str, str, int, int]]:
    toks: list[tuple[str, str, int, int]] = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c in "()":
            toks.append((c, c, i, i + 1))
            i += 1
            continue
        j = i
        while j < n and not text[j].isspace() and text[j] not in "()":
            j += 1
        toks.append(("atom", text[i:j], i, j))
        i = j
    return toks


def parse_term(text: str, constrs: tuple[ConstructorSig, ...], registry) -> Term:
    """Parse the S-expression syntax into a Term.

    Base-typed argument positions consume one balanced group and hand its
    source text to the base codec, so literals of compiled base types can
    themselves be S-expressions.
    """
    toks = _tokenize_term(text)
    if not toks:
        raise ParseError("empty term")
    by_name = {sig.name: i for i, sig in enumerate(constrs)}
    pos = 0

    def fail(msg: str):
        raise ParseError(msg)

    def take_group() -> str:
        # one atom, or a balanced parenthesized span, as raw source text
        nonlocal pos
        if pos >= len(toks):
            fail("unexpected end of term")
        kind, _, start, end = toks[pos]
        if kind == "atom":
            pos += 1
            return text[start:end]
        if kind != "(":
            fail("unexpected ')'")
        depth = 0
        for k in range(pos, len(toks)):
            if toks[k][0] == "(":
                depth += 1
            elif toks[k][0] == ")":
                depth -= 1
                if depth == 0:
                    span = text[start : toks[k][3]]
                    pos = k + 1
                    return span
        fail("unbalanced '(' in term")

    # Frames: [ctor_index, sig, args_so_far, parenthesized]
    frames: list[list] = []
    result: Term | None = None

    def open_node():
        nonlocal pos
        if pos >= len(toks):
            fail("unexpected end of term")
        kind, tok, _, _ = toks[pos]
        if kind == ")":
            fail("unexpected ')'")
        paren = kind == "("
        if paren:
            pos += 1
            if pos >= len(toks) or toks[pos][0] != "atom":
                fail("expected a constructor name after '('")
            kind, tok, _, _ = toks[pos]
        if tok not in by_name:
            fail(f"unknown constructor '{tok}'")
        pos += 1
        idx = by_name[tok]
        sig = constrs[idx]
        if not paren and sig.arity:
            fail(f"constructor {sig.name} takes {sig.arity} arguments; "
                 f"write ({sig.name} ...)")
        frames.append([idx, sig, [], paren])

    open_node()
    while frames:
        idx, sig, args, paren = frames[-1]
        if len(args) == sig.arity:
            if paren:
                if pos >= len(toks) or toks[pos][0] != ")":
                    fail(f"constructor {sig.name} takes exactly "
                         f"{sig.arity} arguments")
                pos += 1
            frames.pop()
            node = Term(idx, tuple(args))
            if frames:
                frames[-1][2].append(node)
            else:
                result = node
            continue
        spec = sig.args[len(args)]
        if spec is REC:
            open_node()
        else:
            group = take_group()
            try:
                code = registry.encode_literal(spec, group)
            except Exception as exc:
                raise ParseError(
                    f"bad {spec} literal {group!r} for {sig.name}: {exc}"
                ) from None
            args.append(BaseVal(spec, code))
    if pos != len(toks):
        fail(f"trailing input after term: {toks[pos][1]!r}")
    assert result is not None
    return result


def render_term(t: Term, constrs: tuple[ConstructorSig, ...], registry) -> str:
    """Canonical S-expression rendering; inverse of parse_term."""
    out: list[str] = []
    stack: list[object] = [t]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            out.append(item)
            continue
        if isinstance(item, BaseVal):
            lit = registry.decode_literal(item.base, item.code)
            if lit is None:
                raise TermError(
                    f"code {item.code} does not decode as {item.base}"
                )
            out.append(lit)
            continue
        if not 0 <= item.ctor < len(constrs):
            raise TermError(f"unknown constructor index {item.ctor}")
        sig = constrs[item.ctor]
        if len(item.args) != sig.arity:
            raise TermError(
                f"{sig.name} expects {sig.arity} arguments, got {len(item.args)}"
            )
        if not item.args:
            out.append(sig.name)
            continue
        pending: list[object] = [")"]
        for a in reversed(item.args):
            pending.append(a)
            pending.append(" ")
        pending.append(f"({sig.name}")
        stack.extend(pending)
    return "".join(out)
