"""Replace-all whitespace watermark: apply, detect, strip.

The scheme substitutes every occurrence of a base whitespace codepoint
(default U+0020) with a visually equivalent mark codepoint (default U+2004,
THREE-PER-EM SPACE).  Detection is presence-based: one mark scalar suffices.

All three operations are pure, per-scalar local functions: a document may be
processed chunk by chunk in any order and concatenated, with no cross-chunk
state.  Inputs are never Unicode-normalized (NFC/NFD would destroy marks).
"""

from __future__ import annotations

from dataclasses import dataclass

from .registry import DEFAULT_REGISTRY, Registry, format_codepoint

__all__ = ["WhitemarkScheme", "Verdict", "apply", "detect", "strip", "validate_scheme"]


@dataclass(frozen=True)
class WhitemarkScheme:
    """Base/mark codepoint pair.  ``base`` is what natural text carries,
    ``mark`` what watermarked text carries instead."""

    base: str = " "
    mark: str = " "

    def __post_init__(self):
        if len(self.base) != 1 or len(self.mark) != 1:
            raise ValueError("base and mark must be single scalars")
        if self.base == self.mark:
            raise ValueError("base and mark must differ")


@dataclass(frozen=True)
class Verdict:
    """Detection outcome with the counts that justify it."""

    detected: bool
    mark_count: int
    base_count: int

    def __post_init__(self):
        if self.detected != (self.mark_count >= 1):
            raise ValueError("detected must equal mark_count >= 1")


def validate_scheme(
    scheme: WhitemarkScheme, registry: Registry = DEFAULT_REGISTRY
) -> None:
    """Require both codepoints to come from the registry whitespace table.

    Kept out of the constructor on purpose: evaluation code needs to build
    non-registry schemes to demonstrate that the invariance check rejects
    them.
    """
    for label, ch in (("base", scheme.base), ("mark", scheme.mark)):
        if not registry.is_whitespace_codepoint(ord(ch)):
            raise ValueError(
                f"{label} {format_codepoint(ord(ch))} is not a registry "
                "whitespace codepoint"
            )


def apply(text: str, scheme: WhitemarkScheme = WhitemarkScheme()) -> str:
    """Replace every occurrence of the base codepoint with the mark.

    Unconditional: text already containing mark scalars is transformed all
    the same (the evaluation harness surfaces pre-existing marks through its
    false-positive statistics).  Output scalar count equals input scalar
    count.
    """
    return text.replace(scheme.base, scheme.mark)


def detect(text: str, scheme: WhitemarkScheme = WhitemarkScheme()) -> Verdict:
    """Presence-based detection: true iff the mark occurs at least once."""
    mark_count = text.count(scheme.mark)
    return Verdict(
        detected=mark_count >= 1,
        mark_count=mark_count,
        base_count=text.count(scheme.base),
    )


def strip(text: str, scheme: WhitemarkScheme = WhitemarkScheme()) -> str:
    """Replace every mark with the base codepoint.

    This is both the known bypass of the scheme and the inverse used by the
    quality-invariance check: for any text free of mark scalars,
    ``strip(apply(x)) == x`` scalar for scalar.
    """
    return text.replace(scheme.mark, scheme.base)
