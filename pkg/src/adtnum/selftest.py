"""Per-type law suite over oracle-enumerated corpora.

For every compiled type this runs, against the exhaustive corpus below a
rank bound: codec roundtrips, pairwise-distinct codes, the rank prefix,
injectivity of the one-level unfolding, the defining equations of the
fold, and agreement of the stratified encoder with the plain structural
one.  Each law reports pass/fail with a counterexample description, so a
broken codec names the law it breaks.

``tamper`` exists for negative controls in tests: it may rewrite a code
on its way out of the encoder, and a correct suite must then fail.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable

from .engine import CodecConfig, decode, encode, encode_rank, encode_simple
from .enumerator import EnumBudget, count_upto_rank, enumerate_upto_rank
from .pairing import PairingScheme, unpair
from .pipeline import CompiledProgram, compile_program
from .registry import builtin_registry
from .syntax import REC
from .terms import BaseVal, Term, fold, pattern_match, rank, rank_para

Tamper = Callable[[str, Term, int], int]


@dataclass
class LawResult:
    law: str
    scheme: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "ok" if self.ok else "FAIL"
        tag = f"[{self.scheme}]" if self.scheme else ""
        suffix = f": {self.detail}" if self.detail else ""
        return f"{self.law}{tag} {status}{suffix}"


@dataclass
class TypeReport:
    name: str
    corpus_size: int
    results: list[LawResult] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)


def _identity_para(constrs):
    def make(i, sig):
        def rebuild(bases, recs):
            bs, rs = list(bases), list(recs)
            args = []
            for spec in sig.args:
                args.append(rs.pop(0) if spec is REC else BaseVal(spec, bs.pop(0)))
            return Term(i, tuple(args))

        return rebuild

    return [make(i, sig) for i, sig in enumerate(constrs)]


def _check_codec_laws(
    report: TypeReport,
    corpus: list[Term],
    cfg: CodecConfig,
    scheme_name: str,
    tamper: Tamper | None,
) -> None:
    name = report.name

    def enc(t: Term) -> int:
        code = encode(t, cfg)
        if tamper is not None:
            code = tamper(name, t, code)
        return code

    codes = [enc(t) for t in corpus]

    bad = next((t for t, c in zip(corpus, codes) if decode(c, cfg) != t), None)
    report.results.append(
        LawResult("roundtrip", scheme_name, bad is None,
                  "" if bad is None else f"decode(encode(t)) != t for {bad!r}")
    )

    seen: dict[int, int] = {}
    clash = None
    for idx, c in enumerate(codes):
        if c in seen:
            clash = (seen[c], idx)
            break
        seen[c] = idx
    report.results.append(
        LawResult("injectivity", scheme_name, clash is None,
                  "" if clash is None
                  else f"terms #{clash[0]} and #{clash[1]} share code")
    )

    bad_prefix = None
    for t, c in zip(corpus, codes):
        split = unpair(cfg.scheme, c)
        if split is None or split[0] != rank(cfg.constrs, t):
            bad_prefix = t
            break
    report.results.append(
        LawResult("rank-prefix", scheme_name, bad_prefix is None,
                  "" if bad_prefix is None
                  else f"prefix of {bad_prefix!r} is not its rank")
    )


def _check_structural_laws(
    report: TypeReport, corpus: list[Term], cfg: CodecConfig
) -> None:
    constrs = cfg.constrs

    pm_seen: dict[object, Term] = {}
    pm_clash = None
    for t in corpus:
        nv = pattern_match(constrs, t)
        if nv in pm_seen and pm_seen[nv] != t:
            pm_clash = t
            break
        pm_seen[nv] = t
    report.results.append(
        LawResult("pattern-match-injective", "", pm_clash is None,
                  "" if pm_clash is None else f"collision at {pm_clash!r}")
    )

    ident = _identity_para(constrs)
    rpara = rank_para(constrs)
    fold_bad = None
    for t in corpus:
        if fold(constrs, ident, t) != t:
            fold_bad = ("identity", t)
            break
        bases = tuple(a.code for a in t.args if isinstance(a, BaseVal))
        recs = tuple(a for a in t.args if isinstance(a, Term))
        unfolded = rpara[t.ctor](
            bases, tuple(fold(constrs, rpara, s) for s in recs)
        )
        if fold(constrs, rpara, t) != unfolded:
            fold_bad = ("recursion-equation", t)
            break
    report.results.append(
        LawResult("fold-equations", "", fold_bad is None,
                  "" if fold_bad is None
                  else f"{fold_bad[0]} law fails at {fold_bad[1]!r}")
    )

    diagram_bad = None
    for t in corpus:
        r = rank(constrs, t)
        simple = encode_simple(t, cfg)
        if any(encode_rank(t, n, cfg) != simple for n in (r + 1, r + 2, r + 5)):
            diagram_bad = t
            break
    report.results.append(
        LawResult("stratified-equals-simple", "", diagram_bad is None,
                  "" if diagram_bad is None else f"disagrees at {diagram_bad!r}")
    )


def run_selftest(
    source: str,
    max_rank: int = 6,
    base_budget: int = 3,
    schemes: tuple[PairingScheme, ...] = (
        PairingScheme.PAPER,
        PairingScheme.COMPACT,
    ),
    tamper: Tamper | None = None,
) -> list[TypeReport]:
    """Compile ``source`` once per scheme and run every law on every type.

    Returns one report per declared type, in declaration order.
    """
    budget = EnumBudget(max_rank, base_budget)
    compiled: dict[PairingScheme, CompiledProgram] = {
        s: compile_program(source, s, builtin_registry()) for s in schemes
    }
    first = compiled[schemes[0]]
    reports: list[TypeReport] = []
    for name in first.types:
        started = time.perf_counter()
        ct = first.type_named(name)
        corpus = enumerate_upto_rank(ct.constrs, first.registry, budget)
        report = TypeReport(name, len(corpus))
        counted = count_upto_rank(ct.constrs, first.registry, budget)
        report.results.append(
            LawResult("enumeration-count", "", counted == len(corpus),
                      f"{len(corpus)} inhabitants")
        )
        for scheme in schemes:
            sct = compiled[scheme].type_named(name)
            scorpus = enumerate_upto_rank(
                sct.constrs, compiled[scheme].registry, budget
            )
            _check_codec_laws(report, scorpus, sct.config, scheme.value, tamper)
        _check_structural_laws(report, corpus, ct.config)
        report.seconds = time.perf_counter() - started
        reports.append(report)
    return reports


def all_ok(reports: list[TypeReport]) -> bool:
    return all(r.ok for r in reports)
