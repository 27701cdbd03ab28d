"""Result values shared by the isomorphism engine, backends and oracle."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class IsoResult:
    """Outcome of an isomorphism test.

    A witness is present exactly when the answer is positive; it maps vertex
    u of the first graph to witness[u] in the second.
    """

    isomorphic: bool
    witness: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.isomorphic != (self.witness is not None):
            raise ValueError("witness must be present iff isomorphic")

    @classmethod
    def yes(cls, witness) -> "IsoResult":
        return cls(True, tuple(witness))

    @classmethod
    def no(cls) -> "IsoResult":
        return cls(False, None)


@dataclass(frozen=True)
class DistanceExceeded:
    """One or both inputs are further than k deletions from the base class.

    This is a third outcome, distinct from a non-isomorphism verdict: the
    engine was asked a question outside its promised parameter range.
    """

    k: int
    g1_exceeded: bool
    g2_exceeded: bool

    def __post_init__(self):
        if not (self.g1_exceeded or self.g2_exceeded):
            raise ValueError("at least one graph must exceed the bound")
