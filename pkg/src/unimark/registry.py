"""Canonical tables of the Unicode codepoints the marking schemes exploit.

Three families:

* whitespace variants (space separators that render like a plain space),
* ideographic variation sequences (base CJK character + variation selector
  pairs that select glyph variants),
* Latin f-ligature presentation forms.

All tables are compiled in and frozen so that digit positions derived from
them are reproducible across runs and machines.  The variant-sequence table
additionally accepts user extension files (JSON lines, see
:func:`load_variant_extensions`).
"""

from __future__ import annotations

import json
import unicodedata
from dataclasses import dataclass, field, replace
from pathlib import Path

from .errors import FormatError

__all__ = [
    "WhitespaceEntry",
    "VariantSequence",
    "LigatureEntry",
    "Registry",
    "DEFAULT_REGISTRY",
    "whitespace_codepoints",
    "variant_sequences",
    "ligature_map",
    "load_variant_extensions",
    "parse_codepoint",
    "format_codepoint",
    "is_variation_selector",
]

# Variation selector blocks: VS1-VS16 and the ideographic supplement VS17-VS256.
VS_BASIC = range(0xFE00, 0xFE10)
VS_SUPPLEMENT = range(0xE0100, 0xE01F0)


def is_variation_selector(codepoint: int) -> bool:
    return codepoint in VS_BASIC or codepoint in VS_SUPPLEMENT


def parse_codepoint(text: str) -> int:
    """Parse a ``U+XXXX`` style codepoint label into an int scalar."""
    t = text.strip()
    if t.upper().startswith("U+"):
        t = t[2:]
    elif t.lower().startswith("0x"):
        t = t[2:]
    try:
        value = int(t, 16)
    except ValueError:
        raise ValueError(f"not a codepoint label: {text!r}") from None
    if not 0 <= value <= 0x10FFFF:
        raise ValueError(f"codepoint out of range: {text!r}")
    return value


def format_codepoint(codepoint: int) -> str:
    return f"U+{codepoint:04X}"


@dataclass(frozen=True)
class WhitespaceEntry:
    """One whitespace codepoint usable as a substitution mark.

    ``breaking`` is False for the no-break variants (a line breaker will not
    split at them); visually they are still space-like.
    """

    codepoint: int
    name: str
    breaking: bool = True

    @property
    def char(self) -> str:
        return chr(self.codepoint)


# Frozen, ordered whitespace table: the Unicode Zs space separators in
# ascending codepoint order, U+0020 first.  The order defines digit positions
# for steganography alphabets and must never change.
# U+1680 OGHAM SPACE MARK is a Zs member but many fonts draw it as a short
# stroke rather than a blank; prefer the U+2000 block when visual blankness
# matters.
_WHITESPACE_TABLE: tuple[WhitespaceEntry, ...] = (
    WhitespaceEntry(0x0020, "SPACE"),
    WhitespaceEntry(0x00A0, "NO-BREAK SPACE", breaking=False),
    WhitespaceEntry(0x1680, "OGHAM SPACE MARK"),
    WhitespaceEntry(0x2000, "EN QUAD"),
    WhitespaceEntry(0x2001, "EM QUAD"),
    WhitespaceEntry(0x2002, "EN SPACE"),
    WhitespaceEntry(0x2003, "EM SPACE"),
    WhitespaceEntry(0x2004, "THREE-PER-EM SPACE"),
    WhitespaceEntry(0x2005, "FOUR-PER-EM SPACE"),
    WhitespaceEntry(0x2006, "SIX-PER-EM SPACE"),
    WhitespaceEntry(0x2007, "FIGURE SPACE", breaking=False),
    WhitespaceEntry(0x2008, "PUNCTUATION SPACE"),
    WhitespaceEntry(0x2009, "THIN SPACE"),
    WhitespaceEntry(0x200A, "HAIR SPACE"),
    WhitespaceEntry(0x202F, "NARROW NO-BREAK SPACE", breaking=False),
    WhitespaceEntry(0x205F, "MEDIUM MATHEMATICAL SPACE"),
    WhitespaceEntry(0x3000, "IDEOGRAPHIC SPACE"),
)


@dataclass(frozen=True)
class VariantSequence:
    """One way to write a base ideograph: bare, or base + variation selector.

    Sequences sharing a ``renders_as`` tag draw the same glyph.  A base is
    usable for appearance-preserving marking when some selector sequence
    shares the tag of its bare sequence.
    """

    base: int
    selector: int | None
    renders_as: str

    def __post_init__(self):
        if self.selector is not None and not is_variation_selector(self.selector):
            raise ValueError(
                f"{format_codepoint(self.selector)} is not a variation selector"
            )

    @property
    def scalars(self) -> str:
        if self.selector is None:
            return chr(self.base)
        return chr(self.base) + chr(self.selector)


def _seed_variants() -> dict[int, tuple[VariantSequence, ...]]:
    table: dict[int, tuple[VariantSequence, ...]] = {}

    # 鯖 (mackerel): the bare form, VS18 and VS20 all draw the default glyph;
    # VS17 selects the traditional variant glyph.
    table[0x9BD6] = (
        VariantSequence(0x9BD6, None, "default"),
        VariantSequence(0x9BD6, 0xE0101, "default"),
        VariantSequence(0x9BD6, 0xE0103, "default"),
        VariantSequence(0x9BD6, 0xE0100, "variant"),
    )

    # Further IVD-registered ideographs.  Convention: the first registered
    # sequence (VS17) is the encoded default glyph, VS18 an alternate.
    for base in (
        0x845B,  # 葛
        0x8FBB,  # 辻
        0x908A,  # 邊
        0x9089,  # 邉
        0x9905,  # 餅
        0x7947,  # 祇
        0x793E,  # 社
        0x6D77,  # 海
        0x6E1A,  # 渚
        0x98EF,  # 飯
    ):
        table[base] = (
            VariantSequence(base, None, "default"),
            VariantSequence(base, 0xE0100, "default"),
            VariantSequence(base, 0xE0101, "alt"),
        )
    return table


_VARIANT_TABLE = _seed_variants()


@dataclass(frozen=True)
class LigatureEntry:
    """A plain letter run and the single presentation-form scalar for it."""

    plain: str
    ligature: str

    def __post_init__(self):
        if len(self.ligature) != 1:
            raise ValueError("ligature must be a single scalar")
        if not 2 <= len(self.plain) <= 3:
            raise ValueError("plain form must be 2-3 scalars")
        decomposed = unicodedata.normalize("NFKD", self.ligature)
        if decomposed != self.plain:
            raise ValueError(
                f"{format_codepoint(ord(self.ligature))} does not decompose "
                f"to {self.plain!r}"
            )


# Latin f-ligatures from the Alphabetic Presentation Forms block.  Ordered
# longest-first so scanners can do longest-match by iterating in order.
_LIGATURE_TABLE: tuple[LigatureEntry, ...] = (
    LigatureEntry("ffi", "ﬃ"),
    LigatureEntry("ffl", "ﬄ"),
    LigatureEntry("ff", "ﬀ"),
    LigatureEntry("fi", "ﬁ"),
    LigatureEntry("fl", "ﬂ"),
)


@dataclass(frozen=True)
class Registry:
    """Immutable bundle of the three codepoint tables.

    Safe for unrestricted concurrent reads.  ``with_variant_extensions``
    returns a new registry; existing ones are never mutated.
    """

    whitespace: tuple[WhitespaceEntry, ...] = _WHITESPACE_TABLE
    variants: dict[int, tuple[VariantSequence, ...]] = field(
        default_factory=lambda: dict(_VARIANT_TABLE)
    )
    ligatures: tuple[LigatureEntry, ...] = _LIGATURE_TABLE

    def whitespace_chars(self) -> frozenset[str]:
        return frozenset(e.char for e in self.whitespace)

    def is_whitespace_codepoint(self, codepoint: int) -> bool:
        return any(e.codepoint == codepoint for e in self.whitespace)

    def variant_sequences(self, base: int) -> tuple[VariantSequence, ...]:
        return self.variants.get(base, ())

    def preserving_selectors(self, base: int) -> tuple[int, ...]:
        """Selectors that keep the bare glyph of ``base``, in table order."""
        seqs = self.variants.get(base, ())
        bare_tag = next((s.renders_as for s in seqs if s.selector is None), None)
        if bare_tag is None:
            return ()
        return tuple(
            s.selector
            for s in seqs
            if s.selector is not None and s.renders_as == bare_tag
        )

    def markable_bases(self) -> frozenset[int]:
        """Bases that can carry an appearance-preserving selector."""
        return frozenset(
            base for base in self.variants if self.preserving_selectors(base)
        )

    def with_variant_extensions(self, path: str | Path) -> "Registry":
        extra = load_variant_extensions(path)
        merged = dict(self.variants)
        for base, seqs in extra.items():
            merged[base] = merged.get(base, ()) + tuple(
                s for s in seqs if s not in merged.get(base, ())
            )
        return replace(self, variants=merged)


DEFAULT_REGISTRY = Registry()


def whitespace_codepoints(registry: Registry = DEFAULT_REGISTRY) -> tuple[WhitespaceEntry, ...]:
    """The frozen, ordered whitespace table (U+0020 first, then ascending)."""
    return registry.whitespace


def variant_sequences(
    base: int, registry: Registry = DEFAULT_REGISTRY
) -> tuple[VariantSequence, ...]:
    """All registered writings of ``base``; empty when unregistered."""
    return registry.variant_sequences(base)


def ligature_map(registry: Registry = DEFAULT_REGISTRY) -> tuple[LigatureEntry, ...]:
    """Registered plain-run/ligature pairs, longest plain form first."""
    return registry.ligatures


def load_variant_extensions(path: str | Path) -> dict[int, tuple[VariantSequence, ...]]:
    """Load a variant-sequence extension file.

    Format: JSON lines, one object per line:
    ``{"base": "U+XXXX", "selector": "U+XXXXX", "renders_as": "tag"}``
    ``selector`` may be null or omitted for the bare form.
    """
    result: dict[int, list[VariantSequence]] = {}
    text = Path(path).read_text(encoding="utf-8")
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON: {exc.msg}", line=lineno) from None
        if not isinstance(obj, dict) or "base" not in obj or "renders_as" not in obj:
            raise FormatError(
                'expected {"base": "U+XXXX", "selector": ..., "renders_as": "tag"}',
                line=lineno,
            )
        try:
            base = parse_codepoint(str(obj["base"]))
            raw_sel = obj.get("selector")
            selector = None if raw_sel in (None, "") else parse_codepoint(str(raw_sel))
            seq = VariantSequence(base, selector, str(obj["renders_as"]))
        except ValueError as exc:
            raise FormatError(str(exc), line=lineno) from None
        result.setdefault(base, [])
        if seq not in result[base]:
            result[base].append(seq)
    return {base: tuple(seqs) for base, seqs in result.items()}
