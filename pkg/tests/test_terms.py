import pytest

from adtnum import (
    BaseVal,
    EnumBudget,
    ParseError,
    Term,
    TermError,
    builtin_registry,
    check_wf,
    enumerate_upto_rank,
    fold,
    parse_term,
    pattern_match,
    rank,
    rank_para,
    render_term,
)
from adtnum.terms import InL, InR, TupleV, UNIT_V, inr_depth

REG = builtin_registry()


def nl(prog):
    return prog.type_named("natlist")


def pt(text, ct, prog):
    return parse_term(text, ct.constrs, prog.registry)


def test_check_wf_accepts_nil(natlist, core_compact):
    check_wf(pt("Nil", natlist, core_compact), natlist.constrs, REG)


def test_check_wf_rejects_missing_argument(natlist):
    nil = Term(1, ())
    with pytest.raises(TermError, match="expects 2 arguments"):
        check_wf(Term(0, (nil,)), natlist.constrs, REG)


def test_check_wf_rejects_swapped_arguments(natlist):
    nil = Term(1, ())
    bad = Term(0, (nil, BaseVal("nat", 3)))
    with pytest.raises(TermError, match="argument 1"):
        check_wf(bad, natlist.constrs, REG)


def test_check_wf_rejects_unknown_constructor(natlist):
    with pytest.raises(TermError, match="unknown constructor"):
        check_wf(Term(7, ()), natlist.constrs, REG)


def test_check_wf_rejects_undecodable_base_code(boollist):
    bad = Term(0, (BaseVal("bool", 9), Term(1, ())))
    with pytest.raises(TermError, match="does not decode"):
        check_wf(bad, boollist.constrs, REG)


def test_fold_size_para_on_bintree(bintree, core_compact):
    size = [
        lambda bases, recs: recs[0] + recs[1] + 1,  # labelled node
        lambda bases, recs: 1,  # leaf
    ]
    leaf = pt("Leaf", bintree, core_compact)
    node = pt("(Node 0 Leaf Leaf)", bintree, core_compact)
    assert fold(bintree.constrs, size, leaf) == 1
    assert fold(bintree.constrs, size, node) == 3


def test_fold_identity_para_rebuilds(natlist, core_compact):
    def rebuild_cons(bases, recs):
        return Term(0, (BaseVal("nat", bases[0]), recs[0]))

    ident = [rebuild_cons, lambda bases, recs: Term(1, ())]
    for text in ("Nil", "(Cons 3 Nil)", "(Cons 1 (Cons 2 Nil))"):
        t = pt(text, natlist, core_compact)
        assert fold(natlist.constrs, ident, t) == t


def test_fold_requires_one_function_per_constructor(natlist, core_compact):
    with pytest.raises(ValueError):
        fold(natlist.constrs, [lambda b, r: 0], pt("Nil", natlist, core_compact))


@pytest.mark.parametrize(
    "text,expected",
    [("Nil", 1), ("(Cons 0 Nil)", 2), ("(Cons 7 (Cons 0 Nil))", 3)],
)
def test_rank_on_lists(natlist, core_compact, text, expected):
    assert rank(natlist.constrs, pt(text, natlist, core_compact)) == expected


@pytest.mark.parametrize(
    "text,expected",
    [
        ("Leaf", 1),
        ("(Node 0 Leaf Leaf)", 3),
        ("(Node 1 (Node 1 Leaf Leaf) Leaf)", 5),
    ],
)
def test_rank_on_trees(bintree, core_compact, text, expected):
    assert rank(bintree.constrs, pt(text, bintree, core_compact)) == expected


def test_rank_is_one_exactly_on_recursion_free_constructors(bintree, core_compact):
    corpus = enumerate_upto_rank(bintree.constrs, REG, EnumBudget(6, 2))
    for t in corpus:
        r = rank(bintree.constrs, t)
        assert r >= 1
        rec_free = not bintree.constrs[t.ctor].rec_positions()
        assert (r == 1) == rec_free


def test_pattern_match_nil(natlist, core_compact):
    assert pattern_match(natlist.constrs, pt("Nil", natlist, core_compact)) == InR(
        InL(UNIT_V)
    )


def test_pattern_match_cons(natlist, core_compact):
    nil = pt("Nil", natlist, core_compact)
    got = pattern_match(natlist.constrs, pt("(Cons 3 Nil)", natlist, core_compact))
    assert got == InL(TupleV(BaseVal("nat", 3), TupleV(nil, UNIT_V)))


def test_pattern_match_leaf(bintree, core_compact):
    got = pattern_match(bintree.constrs, pt("Leaf", bintree, core_compact))
    assert got == InR(InL(UNIT_V))


def test_pattern_match_discriminates_constructors(core_compact):
    expr = core_compact.type_named("expr")
    corpus = enumerate_upto_rank(expr.constrs, REG, EnumBudget(4, 2))
    assert corpus
    for t in corpus:
        assert inr_depth(pattern_match(expr.constrs, t)) == t.ctor


def test_pattern_match_injective_on_corpus(natlist):
    corpus = enumerate_upto_rank(natlist.constrs, REG, EnumBudget(5, 3))
    seen = {}
    for t in corpus:
        nv = pattern_match(natlist.constrs, t)
        assert nv not in seen
        seen[nv] = t


@pytest.mark.parametrize(
    "text,canonical",
    [
        ("Nil", "Nil"),
        ("(Cons 3 Nil)", "(Cons 3 Nil)"),
        ("( Cons  3   (Cons 5  Nil ) )", "(Cons 3 (Cons 5 Nil))"),
    ],
)
def test_parse_then_render_is_canonical(natlist, core_compact, text, canonical):
    t = pt(text, natlist, core_compact)
    assert render_term(t, natlist.constrs, core_compact.registry) == canonical


def test_render_then_parse_roundtrips_corpus(boollist, core_compact):
    corpus = enumerate_upto_rank(boollist.constrs, REG, EnumBudget(6, 1))
    for t in corpus:
        text = render_term(t, boollist.constrs, core_compact.registry)
        assert pt(text, boollist, core_compact) == t


@pytest.mark.parametrize(
    "text",
    [
        "(Cons Nil 3)",  # arguments in the wrong order
        "(Cons 3)",  # too few arguments
        "(Cons 3 Nil Nil)",  # too many arguments
        "(Wat 3)",  # unknown constructor
        "Cons",  # non-nullary constructor without parentheses
        "(Cons 3 Nil",  # unbalanced
        "Nil Nil",  # trailing input
        "",
    ],
)
def test_parse_term_rejects(natlist, core_compact, text):
    with pytest.raises(ParseError):
        pt(text, natlist, core_compact)


def deep_list(n: int) -> Term:
    t = Term(1, ())
    for i in range(n):
        t = Term(0, (BaseVal("nat", i % 3), t))
    return t


def test_deep_terms_do_not_recurse(natlist, core_compact):
    # nesting depth well past the interpreter's recursion limit
    a = deep_list(12000)
    b = deep_list(12000)
    assert a == b
    assert hash(a) == hash(b)
    assert a != deep_list(12001)
    check_wf(a, natlist.constrs, REG)
    assert rank(natlist.constrs, a) == 12001
    text = render_term(a, natlist.constrs, core_compact.registry)
    assert pt(text, natlist, core_compact) == a


def test_fold_equations_hold_on_corpus(core_compact):
    bb = core_compact.type_named("bbtree")
    reg = core_compact.registry
    corpus = enumerate_upto_rank(bb.constrs, reg, EnumBudget(7, 2))
    para = rank_para(bb.constrs)
    for t in corpus:
        bases = tuple(a.code for a in t.args if isinstance(a, BaseVal))
        recs = tuple(fold(bb.constrs, para, s) for s in t.args if isinstance(s, Term))
        assert fold(bb.constrs, para, t) == para[t.ctor](bases, recs)
