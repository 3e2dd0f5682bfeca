"""Registry of countable base types.

Every base type a definition mentions must resolve here to a
:class:`BaseCodec`: a literal-string injection plus a cardinality.  The
builtins are ``nat`` (decimal, infinite), ``bool`` and ``unit``.  A
compiled definition can itself be registered as a base for later
definitions, which is how countability results chain.

Finite codecs use exactly the codes 0..n-1.  Compiled finite types are
therefore reindexed densely over their (necessarily rank-1) inhabitants
instead of exposing the sparse engine codes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .engine import CodecConfig, decode, encode
from .enumerator import EnumBudget, enumerate_upto_rank
from .errors import RegistryError
from .injection import Encoder
from .syntax import REC, ConstructorSig
from .terms import parse_term, render_term


@dataclass(frozen=True)
class BaseCodec:
    """A countable base type: literal syntax plus its code space."""

    name: str
    encoder: Encoder  # over literal strings
    cardinality: int | None  # None when countably infinite

    def encode_literal(self, text: str) -> int:
        return self.encoder.encode(text)

    def decode_literal(self, code: int) -> str | None:
        if code < 0:
            return None
        return self.encoder.decode(code)


class Registry:
    """Name-to-codec table.  Built once, then shared read-only."""

    def __init__(self):
        self._codecs: dict[str, BaseCodec] = {}

    def register(self, codec: BaseCodec) -> "Registry":
        if codec.name in self._codecs:
            raise RegistryError(f"base type '{codec.name}' is already registered")
        self._codecs[codec.name] = codec
        return self

    def lookup(self, name: str) -> BaseCodec | None:
        return self._codecs.get(name)

    def names(self) -> frozenset[str]:
        return frozenset(self._codecs)

    def valid_code(self, name: str, code: int) -> bool:
        codec = self._codecs.get(name)
        return codec is not None and codec.decode_literal(code) is not None

    def encode_literal(self, name: str, text: str) -> int:
        codec = self._codecs.get(name)
        if codec is None:
            raise KeyError(f"base type '{name}' is not registered")
        return codec.encode_literal(text)

    def decode_literal(self, name: str, code: int) -> str | None:
        codec = self._codecs.get(name)
        if codec is None:
            return None
        return codec.decode_literal(code)


def _nat_codec() -> BaseCodec:
    def enc(text: str) -> int:
        if not (text.isascii() and text.isdigit()):
            raise ValueError(f"{text!r} is not a decimal natural")
        return int(text)

    return BaseCodec("nat", Encoder("nat", enc, lambda c: str(c)), None)


def _table_codec(name: str, literals: list[str]) -> BaseCodec:
    index = {lit: i for i, lit in enumerate(literals)}

    def enc(text: str) -> int:
        if text not in index:
            raise ValueError(f"{text!r} is not a {name} literal")
        return index[text]

    def dec(code: int) -> str | None:
        if 0 <= code < len(literals):
            return literals[code]
        return None

    return BaseCodec(name, Encoder(name, enc, dec), len(literals))


def builtin_registry() -> Registry:
    """nat (decimal, infinite), bool (false/true), unit (tt)."""
    reg = Registry()
    reg.register(_nat_codec())
    reg.register(_table_codec("bool", ["false", "true"]))
    reg.register(_table_codec("unit", ["tt"]))
    return reg


def analyze_cardinality(
    constrs: tuple[ConstructorSig, ...], registry: Registry
) -> int | None:
    """Exact cardinality of a compiled type: 0, a positive count, or None
    for countably infinite.

    A constructor is usable iff all its base argument domains are
    nonempty.  The type is inhabited iff some usable constructor has no
    recursive arguments; given that, any usable constructor with a
    recursive argument pumps out arbitrarily large terms, and an infinite
    base in a usable constructor does the same.
    """

    def card(base: str) -> int | None:
        codec = registry.lookup(base)
        if codec is None:
            raise KeyError(f"base type '{base}' is not registered")
        return codec.cardinality

    usable = [
        sig
        for sig in constrs
        if all(card(a) != 0 for a in sig.args if a is not REC)
    ]
    if not any(len(sig.rec_positions()) == 0 for sig in usable):
        return 0
    if any(sig.rec_positions() for sig in usable):
        return None
    total = 0
    for sig in usable:
        prod = 1
        for a in sig.args:
            c = card(a)
            if c is None:
                return None
            prod *= c
        total += prod
    return total


def register_compiled(reg: Registry, def_name: str, cfg: CodecConfig) -> Registry:
    """Expose a compiled definition as a base codec for later definitions.

    Literals are the term S-expressions.  Infinite types keep the engine's
    codes; finite types (whose inhabitants are all rank 1) get dense codes
    in enumeration order so the image is exactly 0..n-1.
    """
    card = analyze_cardinality(cfg.constrs, reg)
    if card is None:
        def enc(text: str) -> int:
            return encode(parse_term(text, cfg.constrs, reg), cfg)

        def dec(code: int) -> str | None:
            t = decode(code, cfg)
            if t is None:
                return None
            return render_term(t, cfg.constrs, reg)

        codec = BaseCodec(def_name, Encoder(def_name, enc, dec), None)
    else:
        inhabitants = enumerate_upto_rank(cfg.constrs, reg, EnumBudget(2, 1))
        literals = [render_term(t, cfg.constrs, reg) for t in inhabitants]
        if len(literals) != card:
            raise RegistryError(
                f"cardinality analysis disagrees with enumeration for "
                f"'{def_name}': {card} vs {len(literals)}"
            )
        index = {lit: i for i, lit in enumerate(literals)}

        def enc(text: str) -> int:
            canonical = render_term(parse_term(text, cfg.constrs, reg),
                                    cfg.constrs, reg)
            if canonical not in index:
                raise ValueError(f"{text!r} is not an inhabitant of {def_name}")
            return index[canonical]

        def dec(code: int) -> str | None:
            if 0 <= code < len(literals):
                return literals[code]
            return None

        codec = BaseCodec(def_name, Encoder(def_name, enc, dec), card)
    return reg.register(codec)
