"""Executable injections: total encode / partial decode pairs.

An :class:`Encoder` witnesses that its domain embeds injectively into the
codomain: ``decode(encode(v)) == v`` for every domain value, and ``decode``
returns None on anything outside the image.  Injectivity follows from the
roundtrip law, so it is enforced by tests rather than by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable


@dataclass(frozen=True)
class Encoder:
    """Named injective encode / partial decode pair.

    ``encode`` must be total on the intended domain; ``decode`` returns
    None exactly on values outside the image of ``encode``.
    """

    name: str
    encode: Callable[[Any], Any]
    decode: Callable[[Any], Any | None]

    def roundtrips(self, value: Any) -> bool:
        return self.decode(self.encode(value)) == value


def identity_encoder(name: str = "id") -> Encoder:
    return Encoder(name, lambda v: v, lambda v: v)


def compose_encoders(e1: Encoder, e2: Encoder) -> Encoder:
    """Compose two injections: encode through e1 then e2, decode back through
    e2 then e1.  None propagates through either decode stage."""

    def encode(value: Any) -> Any:
        return e2.encode(e1.encode(value))

    def decode(code: Any) -> Any | None:
        mid = e2.decode(code)
        if mid is None:
            return None
        return e1.decode(mid)

    return Encoder(f"{e2.name}.{e1.name}", encode, decode)
