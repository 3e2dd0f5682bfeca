import pytest

from adtnum import PairingScheme, compile_program

NATLIST_SRC = (
    "Inductive natlist := Cons : nat -> natlist -> natlist | Nil : natlist.\n"
)

BINTREE_SRC = (
    "Inductive bintree := Node : nat -> bintree -> bintree -> bintree"
    " | Leaf : bintree.\n"
)

EXPR_SRC = (
    "Inductive expr := andp : expr -> expr -> expr\n"
    "  | orp : expr -> expr -> expr\n"
    "  | impp : expr -> expr -> expr\n"
    "  | falsep : expr\n"
    "  | varp : nat -> expr.\n"
)

BOOLLIST_SRC = (
    "Inductive boollist := BCons : bool -> boollist -> boollist"
    " | BNil : boollist.\n"
)

BBTREE_SRC = (
    "Inductive bbtree := BNode : bool -> bbtree -> bbtree -> bbtree"
    " | BLeaf : bbtree.\n"
)

EMPTY_SRC = "Inductive empty := mk : empty -> empty.\n"

INF_TREE_SRC = (
    "Inductive inf_tree := inf_tree_leaf : inf_tree"
    " | inf_tree_node : nat -> (nat -> inf_tree) -> inf_tree.\n"
)

STACK_SRC = (
    BOOLLIST_SRC
    + "Inductive stack := Push : boollist -> stack -> stack | Empty : stack.\n"
)

CORE_SRC = NATLIST_SRC + BINTREE_SRC + EXPR_SRC + BOOLLIST_SRC + BBTREE_SRC


@pytest.fixture(scope="session")
def core_compact():
    return compile_program(CORE_SRC, PairingScheme.COMPACT)


@pytest.fixture(scope="session")
def core_paper():
    return compile_program(CORE_SRC, PairingScheme.PAPER)


@pytest.fixture(scope="session")
def natlist(core_compact):
    return core_compact.type_named("natlist")


@pytest.fixture(scope="session")
def bintree(core_compact):
    return core_compact.type_named("bintree")


@pytest.fixture(scope="session")
def boollist(core_compact):
    return core_compact.type_named("boollist")
