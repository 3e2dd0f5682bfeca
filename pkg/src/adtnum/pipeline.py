"""Compile a DSL program into ready-to-use codecs.

Definitions compile in file order; each compiled type is registered as a
base for the definitions after it, so earlier types may appear in later
argument positions.  References the other way round (or to a sibling in a
would-be mutual block) are rejected during validation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .engine import CodecConfig
from .pairing import PairingScheme
from .registry import Registry, builtin_registry, register_compiled
from .syntax import (
    ConstructorSig,
    InductiveDef,
    Program,
    parse_program,
    validate,
)


@dataclass(frozen=True, eq=False)
class CompiledType:
    name: str
    defn: InductiveDef
    constrs: tuple[ConstructorSig, ...]
    config: CodecConfig


@dataclass(frozen=True, eq=False)
class CompiledProgram:
    program: Program
    scheme: PairingScheme
    registry: Registry
    types: dict[str, CompiledType]

    def type_named(self, name: str) -> CompiledType:
        if name not in self.types:
            raise KeyError(f"no type named '{name}' in this program")
        return self.types[name]


def compile_program(
    source: str | Program,
    scheme: PairingScheme = PairingScheme.COMPACT,
    registry: Registry | None = None,
) -> CompiledProgram:
    """Parse (if needed), validate in order, and derive a codec per type.

    The registry defaults to the builtins and grows by one compiled codec
    per definition; the caller may pass a pre-seeded registry to chain
    programs.
    """
    program = parse_program(source) if isinstance(source, str) else source
    reg = registry if registry is not None else builtin_registry()
    later = [d.type_name for d in program.defs]
    types: dict[str, CompiledType] = {}
    for defn in program.defs:
        later = later[1:]
        constrs = validate(defn, reg.names(), frozenset(later))
        cfg = CodecConfig(scheme, constrs, reg)
        register_compiled(reg, defn.type_name, cfg)
        types[defn.type_name] = CompiledType(defn.type_name, defn, constrs, cfg)
    return CompiledProgram(program, scheme, reg, types)
