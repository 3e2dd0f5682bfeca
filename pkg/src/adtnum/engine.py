"""Rank-stratified injective codes for terms, with an exact partial decoder.

A term of rank r is numbered ``pair(r, body)`` where ``body`` encodes the
term against its one-level sum-of-products unfolding, recursive slots
encoded one rank stratum lower.  The decoder inverts this exactly: it
rejects anything outside the image (wrong rank prefix, codes in the void
branch of a sum, bad base codes, product chains not ending in the unit
code, or structure deeper than the rank budget allows).

The configured scheme chooses the pairing of the top-level (rank, body)
split.  Product chains always use the compact pairing: the classic scheme
puts its first argument in an exponent, and a product chain feeds codes
into that slot, which makes nested codes grow tetrationally with term
depth.  At the rank prefix the first argument is just the rank, where the
exponent costs only rank-many bits.

``encode_simple`` is the unstratified structural code, kept as an
independent route: erasing the rank bookkeeping from the stratified
encoder must reproduce it exactly, and tests check that they agree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .errors import RankBoundViolated, TermError, UnknownBase
from .pairing import (
    PairingScheme,
    pair,
    pair_compact,
    sum_code,
    sum_decode,
    unpair,
    unpair_compact,
)
from .syntax import REC, ConstructorSig
from .terms import (
    BaseVal,
    InL,
    InR,
    NormValue,
    Term,
    TupleV,
    UnitV,
    _pattern_match_unchecked,
    check_wf,
    compute_ranks,
    postorder,
)


@dataclass(frozen=True, eq=False)
class CodecConfig:
    """Everything a codec needs: pairing scheme, validated constructor
    signatures, and the registry resolving their base types."""

    scheme: PairingScheme
    constrs: tuple[ConstructorSig, ...]
    registry: object = field(repr=False)

    def __post_init__(self):
        for sig in self.constrs:
            for a in sig.args:
                if a is not REC and self.registry.lookup(a) is None:
                    raise UnknownBase(a)


def encode_norm(
    nv: NormValue, cfg: CodecConfig, rec_encode: Callable[[Term], int]
) -> int:
    """Number a one-level normal-form value.

    Unit is 0, a tuple cell pairs its head code with the tail code, and
    the InL/InR chain becomes a sum code.  Sub-term heads are delegated
    to ``rec_encode``.
    """
    branch = 0
    while isinstance(nv, InR):
        branch += 1
        nv = nv.value
    if not isinstance(nv, InL):
        raise TermError(f"norm value does not select a branch: {nv!r}")
    heads = []
    spine = nv.value
    while isinstance(spine, TupleV):
        heads.append(spine.head)
        spine = spine.tail
    if not isinstance(spine, UnitV):
        raise TermError(f"product spine does not end in unit: {spine!r}")
    code = 0
    for head in reversed(heads):
        if isinstance(head, BaseVal):
            if cfg.registry.lookup(head.base) is None:
                raise UnknownBase(head.base)
            leaf = head.code
        else:
            leaf = rec_encode(head)
        code = pair_compact(leaf, code)
    return sum_code(branch, code, len(cfg.constrs))


def _budgets(t: Term, n: int) -> dict[int, int]:
    # rank budget decreases by one per recursion level
    budgets = {id(t): n}
    stack = [t]
    while stack:
        node = stack.pop()
        b = budgets[id(node)]
        for a in node.args:
            if isinstance(a, Term):
                budgets[id(a)] = b - 1
                stack.append(a)
    return budgets


def encode_rank(t: Term, n: int, cfg: CodecConfig) -> int:
    """Stratified structural code of ``t`` within the stratum of terms of
    rank below ``n``; recursive arguments are encoded at budget n - 1.

    Raises RankBoundViolated when any sub-term's rank meets its budget
    (the top-level check implies the rest, but each level re-checks)."""
    check_wf(t, cfg.constrs, cfg.registry)
    ranks = compute_ranks(t)
    budgets = _budgets(t, n)
    codes: dict[int, int] = {}
    for node in postorder(t):
        if ranks[id(node)] >= budgets[id(node)]:
            raise RankBoundViolated(
                f"rank {ranks[id(node)]} is not below the budget "
                f"{budgets[id(node)]}"
            )
        nv = _pattern_match_unchecked(node)
        codes[id(node)] = encode_norm(nv, cfg, lambda s: codes[id(s)])
    return codes[id(t)]


def encode_simple(t: Term, cfg: CodecConfig) -> int:
    """Plain structural code with no rank bookkeeping; injective on its
    own, and the reference point for the stratified encoder."""
    check_wf(t, cfg.constrs, cfg.registry)
    k = len(cfg.constrs)
    codes: dict[int, int] = {}
    for node in postorder(t):
        prod = 0
        for a in reversed(node.args):
            leaf = a.code if isinstance(a, BaseVal) else codes[id(a)]
            prod = pair_compact(leaf, prod)
        codes[id(node)] = sum_code(node.ctor, prod, k)
    return codes[id(t)]


def encode(t: Term, cfg: CodecConfig) -> int:
    """Injective code of a well-formed term: pair(rank, stratified body)
    under the configured scheme."""
    check_wf(t, cfg.constrs, cfg.registry)
    r = compute_ranks(t)[id(t)]
    body = encode_rank(t, r + 1, cfg)
    return pair(cfg.scheme, r, body)


def decode(code: int, cfg: CodecConfig) -> Term | None:
    """Exact partial inverse of :func:`encode`; None on any non-code."""
    if code < 0:
        return None
    split = unpair(cfg.scheme, code)
    if split is None:
        return None
    r, body = split
    if r < 1:
        return None  # every term has rank at least 1
    t = _decode_body(body, r, cfg)
    if t is None:
        return None
    if compute_ranks(t)[id(t)] != r:
        return None  # rank prefix must be canonical
    return t


def _decode_body(code: int, budget: int, cfg: CodecConfig) -> Term | None:
    constrs = cfg.constrs
    k = len(constrs)

    def open_frame(c: int, b: int) -> list | None:
        split = sum_decode(c, k)
        if split is None:
            return None
        i, prod = split
        return [i, constrs[i], [], prod, b]

    root = open_frame(code, budget)
    if root is None:
        return None
    frames = [root]
    result: Term | None = None
    while frames:
        idx, sig, args, prod, b = frames[-1]
        if len(args) == sig.arity:
            if prod != 0:
                return None  # product chain must end in the unit code
            frames.pop()
            node = Term(idx, tuple(args))
            if frames:
                frames[-1][2].append(node)
            else:
                result = node
            continue
        cell = unpair_compact(prod)
        if cell is None:
            return None
        head, rest = cell
        frames[-1][3] = rest
        spec = sig.args[len(args)]
        if spec is REC:
            if b == 0:
                return None  # budget exhausted: no recursion allowed here
            child = open_frame(head, b - 1)
            if child is None:
                return None
            frames.append(child)
        else:
            if not cfg.registry.valid_code(spec, head):
                return None
            args.append(BaseVal(spec, head))
    return result
