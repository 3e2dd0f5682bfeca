"""adtnum: executable countability for first-order inductive datatypes.

Compile datatype definitions, then derive injective codes into the
naturals, exact partial decoders, and rank-bounded enumerators, all
cross-checked by a property-test suite.
"""

from .engine import (
    CodecConfig,
    decode,
    encode,
    encode_norm,
    encode_rank,
    encode_simple,
)
from .enumerator import EnumBudget, count_upto_rank, enumerate_upto_rank, scan_decode
from .errors import (
    AdtError,
    BadResultType,
    DuplicateName,
    HigherOrderArg,
    MutualOrForwardReference,
    ParseError,
    RankBoundViolated,
    RegistryError,
    TermError,
    UnknownBase,
    ValidationError,
)
from .injection import Encoder, compose_encoders, identity_encoder
from .pairing import (
    PairingScheme,
    pair,
    pair_compact,
    pair_paper,
    sum_code,
    sum_decode,
    unpair,
    unpair_compact,
    unpair_paper,
)
from .pipeline import CompiledProgram, CompiledType, compile_program
from .registry import (
    BaseCodec,
    Registry,
    analyze_cardinality,
    builtin_registry,
    register_compiled,
)
from .syntax import (
    ConstructorSig,
    InductiveDef,
    Program,
    REC,
    normtype_of,
    parse_program,
    render_program,
    render_typeexpr,
    validate,
)
from .terms import (
    BaseVal,
    Term,
    check_wf,
    fold,
    parse_term,
    pattern_match,
    rank,
    rank_para,
    render_term,
)

__version__ = "0.1.0"

__all__ = [
    "AdtError",
    "BadResultType",
    "BaseCodec",
    "BaseVal",
    "CodecConfig",
    "CompiledProgram",
    "CompiledType",
    "ConstructorSig",
    "DuplicateName",
    "Encoder",
    "EnumBudget",
    "HigherOrderArg",
    "InductiveDef",
    "MutualOrForwardReference",
    "PairingScheme",
    "ParseError",
    "Program",
    "RankBoundViolated",
    "REC",
    "Registry",
    "RegistryError",
    "Term",
    "TermError",
    "UnknownBase",
    "ValidationError",
    "analyze_cardinality",
    "builtin_registry",
    "check_wf",
    "compile_program",
    "compose_encoders",
    "count_upto_rank",
    "decode",
    "encode",
    "encode_norm",
    "encode_rank",
    "encode_simple",
    "enumerate_upto_rank",
    "fold",
    "identity_encoder",
    "normtype_of",
    "pair",
    "pair_compact",
    "pair_paper",
    "parse_program",
    "parse_term",
    "pattern_match",
    "rank",
    "rank_para",
    "register_compiled",
    "render_program",
    "render_term",
    "render_typeexpr",
    "scan_decode",
    "sum_code",
    "sum_decode",
    "unpair",
    "unpair_compact",
    "unpair_paper",
    "validate",
]
