"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines as the
criteria execute.  Budgets, corpora and tolerances are fixed here, not
calibrated at runtime.
"""

import random
import time
from contextlib import contextmanager

import pytest

from adtnum import (
    EnumBudget,
    HigherOrderArg,
    MutualOrForwardReference,
    PairingScheme,
    Term,
    BaseVal,
    UnknownBase,
    builtin_registry,
    compile_program,
    count_upto_rank,
    decode,
    encode,
    encode_rank,
    encode_simple,
    enumerate_upto_rank,
    fold,
    normtype_of,
    pair_compact,
    pair_paper,
    parse_program,
    pattern_match,
    rank,
    render_typeexpr,
    unpair,
    unpair_compact,
    unpair_paper,
    validate,
)
from adtnum.pairing import compact_bit_bound
from adtnum.selftest import all_ok, run_selftest
from adtnum.terms import postorder

from conftest import (
    BOOLLIST_SRC,
    CORE_SRC,
    INF_TREE_SRC,
    STACK_SRC,
)

CORPUS_BUDGETS = {
    "natlist": EnumBudget(6, 3),
    "boollist": EnumBudget(10, 3),
    "bbtree": EnumBudget(7, 3),
    "expr": EnumBudget(5, 2),
}


@contextmanager
def criterion(number: int, title: str):
    try:
        yield
    except BaseException:
        print(f"[criterion {number:2d}] FAIL  {title}")
        raise
    print(f"[criterion {number:2d}] PASS  {title}")


@pytest.fixture(scope="module")
def compiled():
    return {
        PairingScheme.PAPER: compile_program(CORE_SRC, PairingScheme.PAPER),
        PairingScheme.COMPACT: compile_program(CORE_SRC, PairingScheme.COMPACT),
    }


def corpora(prog):
    out = {}
    for name, budget in CORPUS_BUDGETS.items():
        ct = prog.type_named(name)
        out[name] = (ct, enumerate_upto_rank(ct.constrs, prog.registry, budget))
    return out


def test_criterion_01_pairing_fidelity():
    with criterion(1, "pair_paper spot values, roundtrip < 2^8, inverse < 1e5, < 1s"):
        started = time.perf_counter()
        assert pair_paper(0, 0) == 0
        assert pair_paper(1, 2) == 9
        assert pair_paper(3, 0) == 7
        for x in range(1 << 8):
            for y in range(1 << 8):
                assert unpair_paper(pair_paper(x, y)) == (x, y)
        for n in range(10**5):
            x, y = unpair_paper(n)
            assert pair_paper(x, y) == n
        assert time.perf_counter() - started < 1.0


def test_criterion_02_compact_pairing():
    with criterion(2, "compact roundtrip < 2^10, bit bound on 1e4 random pairs, < 5s"):
        started = time.perf_counter()
        for x in range(1 << 10):
            for y in range(1 << 10):
                assert unpair_compact(pair_compact(x, y)) == (x, y)
        rng = random.Random(20260809)
        for _ in range(10**4):
            x = rng.randrange(1 << 256)
            y = rng.randrange(1 << 256)
            limit = (
                x.bit_length()
                + y.bit_length()
                + 2 * (y.bit_length() + 1).bit_length()
                + 1
            )
            assert compact_bit_bound(x, y) == limit
            assert pair_compact(x, y).bit_length() <= limit
        assert time.perf_counter() - started < 5.0


def test_criterion_03_normtype_golden_strings():
    with criterion(3, "normtype strings for natlist and bintree match exactly"):
        reg = builtin_registry()
        prog = parse_program(CORE_SRC)
        natlist = validate(prog.def_named("natlist"), reg.names())
        bintree = validate(prog.def_named("bintree"), reg.names())
        assert (
            render_typeexpr(normtype_of(natlist))
            == "nat * (X * unit) + (unit + void)"
        )
        assert (
            render_typeexpr(normtype_of(bintree))
            == "nat * (X * (X * unit)) + (unit + void)"
        )


def test_criterion_04_rank_equations(compiled):
    with criterion(4, "rank equations for Nil, Cons, Leaf, Node"):
        prog = compiled[PairingScheme.COMPACT]
        nl = prog.type_named("natlist")
        bt = prog.type_named("bintree")
        nil = Term(1, ())
        leaf = Term(1, ())
        assert rank(nl.constrs, nil) == 1
        assert rank(nl.constrs, Term(0, (BaseVal("nat", 0), nil))) == 2
        assert rank(bt.constrs, leaf) == 1
        assert rank(bt.constrs, Term(0, (BaseVal("nat", 0), leaf, leaf))) == 3


def test_criterion_05_injection_suite(compiled):
    with criterion(5, "encode distinct + roundtrip + rank prefix on all corpora, both schemes, < 60s"):
        started = time.perf_counter()
        for scheme, prog in compiled.items():
            for name, (ct, corpus) in corpora(prog).items():
                assert corpus, name
                seen = set()
                for t in corpus:
                    code = encode(t, ct.config)
                    assert code not in seen
                    seen.add(code)
                    assert decode(code, ct.config) == t
                    assert unpair(scheme, code)[0] == rank(ct.constrs, t)
        assert time.perf_counter() - started < 60.0


def test_criterion_06_boollist_count_law(compiled):
    with criterion(6, "boollist terms of rank <= k number 2^k - 1 for k = 1..10"):
        prog = compiled[PairingScheme.COMPACT]
        bl = prog.type_named("boollist")
        for k in range(1, 11):
            budget = EnumBudget(k + 1, 3)
            listed = enumerate_upto_rank(bl.constrs, prog.registry, budget)
            counted = count_upto_rank(bl.constrs, prog.registry, budget)
            assert len(listed) == 2**k - 1
            assert counted == 2**k - 1


def test_criterion_07_pm_injectivity_and_diagram(compiled):
    with criterion(7, "pattern_match injective; stratified equals simple at n = r+1, r+2, r+5"):
        prog = compiled[PairingScheme.COMPACT]
        for name, (ct, corpus) in corpora(prog).items():
            seen = {}
            for t in corpus:
                nv = pattern_match(ct.constrs, t)
                assert nv not in seen, name
                seen[nv] = t
                simple = encode_simple(t, ct.config)
                r = rank(ct.constrs, t)
                for n in (r + 1, r + 2, r + 5):
                    assert encode_rank(t, n, ct.config) == simple


def test_criterion_08_fold_equations(compiled):
    with criterion(8, "size para matches rank on bintree corpus; identity para rebuilds"):
        prog = compiled[PairingScheme.COMPACT]
        bt = prog.type_named("bintree")
        size = [
            lambda bases, recs: recs[0] + recs[1] + 1,
            lambda bases, recs: 1,
        ]
        bt_corpus = enumerate_upto_rank(
            bt.constrs, prog.registry, EnumBudget(7, 2)
        )
        assert bt_corpus
        for t in bt_corpus:
            assert fold(bt.constrs, size, t) == rank(bt.constrs, t)

        for name, (ct, corpus) in corpora(prog).items():
            ident = []
            for i, sig in enumerate(ct.constrs):
                def rebuild(bases, recs, i=i, sig=sig):
                    bs, rs = list(bases), list(recs)
                    args = tuple(
                        rs.pop(0) if spec is None else BaseVal(spec, bs.pop(0))
                        for spec in sig.args
                    )
                    return Term(i, args)
                ident.append(rebuild)
            for t in corpus:
                assert fold(ct.constrs, ident, t) == t, name


def test_criterion_09_rejection_suite():
    with criterion(9, "inf_tree, mutual block, forward reference, unknown base all rejected"):
        with pytest.raises(HigherOrderArg):
            compile_program(INF_TREE_SRC)
        with pytest.raises(MutualOrForwardReference):
            compile_program(
                "Inductive a := MkA : b -> a.\nInductive b := MkB : a -> b."
            )
        with pytest.raises(MutualOrForwardReference):
            compile_program(
                "Inductive x := MkX : y -> x.\nInductive y := MkY : y."
            )
        with pytest.raises(UnknownBase):
            compile_program("Inductive t := A : real -> t.")


def test_criterion_10_scale(compiled):
    with criterion(10, "length-1000 boollist roundtrips < 1s under compact, bits < 64 x nodes; paper handles length 8"):
        prog = compiled[PairingScheme.COMPACT]
        bl = prog.type_named("boollist")

        def boollist_of(length):
            t = Term(1, ())
            for i in range(length):
                t = Term(0, (BaseVal("bool", i % 2), t))
            return t

        big = boollist_of(1000)
        nodes = len(postorder(big))
        started = time.perf_counter()
        code = encode(big, bl.config)
        assert decode(code, bl.config) == big
        assert time.perf_counter() - started < 1.0
        assert code.bit_length() < 64 * nodes

        paper = compiled[PairingScheme.PAPER].type_named("boollist")
        for length in range(9):
            t = boollist_of(length)
            code = encode(t, paper.config)
            assert decode(code, paper.config) == t
            assert code.bit_length() < 64 * len(postorder(t))


def test_criterion_11_chaining():
    with criterion(11, "type built over a compiled boollist base passes the full selftest"):
        reports = run_selftest(STACK_SRC, max_rank=4, base_budget=4)
        assert [r.name for r in reports] == ["boollist", "stack"]
        assert all_ok(reports)
        # and the registry example verbatim: register, then redefine on top
        prog = compile_program(BOOLLIST_SRC)
        chained = compile_program(
            "Inductive stack := Push : boollist -> stack -> stack"
            " | Empty : stack.",
            PairingScheme.COMPACT,
            prog.registry,
        )
        st = chained.type_named("stack")
        corpus = enumerate_upto_rank(st.constrs, chained.registry, EnumBudget(4, 4))
        assert corpus
        for t in corpus:
            assert decode(encode(t, st.config), st.config) == t
