"""Brute-force oracle: every well-formed term below a rank bound.

The enumerator recurses on structure alone and never touches the codec,
so it can cross-check injectivity, roundtrips and cardinalities
independently.  Rank is additive (a node is 1 plus the sum of its
recursive arguments), so the recursion distributes the remaining budget
over recursive siblings by iterating over all compositions.

Order is deterministic: ascending rank, then constructor index, then
lexicographic over argument tuples, where base arguments compare by code
and recursive arguments by their own position in this order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .engine import CodecConfig, decode
from .syntax import REC, ConstructorSig
from .terms import BaseVal, Term


@dataclass(frozen=True)
class EnumBudget:
    """Bounds for exhaustive generation.

    ``max_rank`` is exclusive.  ``base_budget`` truncates infinite base
    types to codes below it; finite bases always enumerate fully.
    """

    max_rank: int
    base_budget: int = 3

    def __post_init__(self):
        if self.max_rank < 1:
            raise ValueError("max_rank must be at least 1")
        if self.base_budget < 1:
            raise ValueError("base_budget must be at least 1")


def _base_domain(registry, base: str, base_budget: int) -> list[int]:
    codec = registry.lookup(base)
    if codec is None:
        raise KeyError(f"base type '{base}' is not registered")
    card = codec.cardinality
    bound = card if card is not None else base_budget
    # Compiled infinite bases have sparse images; keep only real codes.
    return [c for c in range(bound) if registry.valid_code(base, c)]


def _rank_layers(
    constrs: tuple[ConstructorSig, ...], registry, budget: EnumBudget
) -> list[list[Term]]:
    """layers[r] = all terms of rank exactly r, in enumeration order."""
    domains = {}
    for sig in constrs:
        for a in sig.args:
            if a is not REC and a not in domains:
                domains[a] = _base_domain(registry, a, budget.base_budget)

    layers: list[list[Term]] = [[] for _ in range(budget.max_rank)]

    def arg_tuples(sig: ConstructorSig, pos: int, rec_left: int,
                   rec_budget: int, acc: list) -> Iterator[tuple]:
        # positions left to right; recursive ranks must sum to rec_budget
        if pos == sig.arity:
            if rec_budget == 0:
                yield tuple(acc)
            return
        spec = sig.args[pos]
        if spec is not REC:
            for code in domains[spec]:
                acc.append(BaseVal(spec, code))
                yield from arg_tuples(sig, pos + 1, rec_left, rec_budget, acc)
                acc.pop()
            return
        lo = rec_budget - 0 if rec_left == 1 else 1
        hi = rec_budget - (rec_left - 1)
        for r in range(lo, hi + 1):
            for sub in layers[r]:
                acc.append(sub)
                yield from arg_tuples(sig, pos + 1, rec_left - 1,
                                      rec_budget - r, acc)
                acc.pop()

    for r in range(1, budget.max_rank):
        layer: list[Term] = []
        for i, sig in enumerate(constrs):
            rec_count = len(sig.rec_positions())
            if rec_count == 0 and r != 1:
                continue
            if rec_count > r - 1:
                continue
            for args in arg_tuples(sig, 0, rec_count, r - 1, []):
                layer.append(Term(i, args))
        layers[r] = layer
    return layers


def enumerate_upto_rank(
    constrs: tuple[ConstructorSig, ...], registry, budget: EnumBudget
) -> list[Term]:
    """Exactly the well-formed terms with rank below ``budget.max_rank``
    whose infinite-base codes are below ``budget.base_budget``."""
    layers = _rank_layers(constrs, registry, budget)
    return [t for layer in layers for t in layer]


def count_upto_rank(
    constrs: tuple[ConstructorSig, ...], registry, budget: EnumBudget
) -> int:
    """Cardinality of enumerate_upto_rank without materializing it:
    dynamic programming over exact ranks, convolving recursive slots."""
    domains = {}
    for sig in constrs:
        for a in sig.args:
            if a is not REC and a not in domains:
                domains[a] = len(_base_domain(registry, a, budget.base_budget))

    counts = [0] * budget.max_rank  # counts[r] = #terms of rank exactly r
    for r in range(1, budget.max_rank):
        total = 0
        for sig in constrs:
            base_factor = 1
            for a in sig.args:
                if a is not REC:
                    base_factor *= domains[a]
            rec_positions = len(sig.rec_positions())
            if rec_positions == 0:
                ways = 1 if r == 1 else 0
            else:
                # ways[s] = orderings of rec_positions ranks summing to s
                ways_row = [1] + [0] * (r - 1)
                for _ in range(rec_positions):
                    nxt = [0] * r
                    for s in range(r):
                        if ways_row[s]:
                            for sub in range(1, r - s):
                                nxt[s + sub] += ways_row[s] * counts[sub]
                    ways_row = nxt
                ways = ways_row[r - 1]
            total += base_factor * ways
        counts[r] = total
    return sum(counts)


def scan_decode(cfg: CodecConfig, limit: int) -> list[tuple[int, Term]]:
    """All (k, decode(k)) for k below limit where decode succeeds."""
    hits: list[tuple[int, Term]] = []
    for k in range(limit):
        t = decode(k, cfg)
        if t is not None:
            hits.append((k, t))
    return hits
