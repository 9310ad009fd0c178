"""Error-correcting codes for whitespace steganography payloads.

Bits travel as strings of ``"0"``/``"1"``.  Two real codecs plus an identity
codec:

* ``repetition3``: each bit sent three times, majority decode; corrects one
  flip per 3-bit block.
* ``hamming74``: Hamming(7,4); corrects one flip per 7-bit block.  Encoding
  input must be a multiple of 4 bits (callers pad).
* ``none``: identity, corrects nothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .errors import BlockLengthError

__all__ = ["EccCodec", "get_codec", "codec_names", "ecc_encode", "ecc_decode", "crc8"]


def _check_bits(bits: str) -> None:
    if bits.strip("01"):
        bad = next(c for c in bits if c not in "01")
        raise ValueError(f"bit strings may only contain 0 and 1, got {bad!r}")


@dataclass(frozen=True)
class EccCodec:
    """A block code over bit strings.

    ``block_in``/``block_out`` are the payload/codeword block sizes;
    ``corrects`` is the guaranteed number of corrected flips per output
    block.
    """

    name: str
    block_in: int
    block_out: int
    corrects: int
    _encode_block: Callable[[str], str]
    _decode_block: Callable[[str], str]

    def encoded_length(self, payload_len: int) -> int:
        """Codeword length for a payload of ``payload_len`` bits (must be a
        multiple of ``block_in``)."""
        if payload_len % self.block_in:
            raise BlockLengthError(
                f"{self.name}: payload length {payload_len} is not a "
                f"multiple of {self.block_in}"
            )
        return payload_len // self.block_in * self.block_out

    def encode(self, bits: str) -> str:
        _check_bits(bits)
        self.encoded_length(len(bits))
        n = self.block_in
        return "".join(
            self._encode_block(bits[i : i + n]) for i in range(0, len(bits), n)
        )

    def decode(self, bits: str) -> str:
        _check_bits(bits)
        n = self.block_out
        if len(bits) % n:
            raise BlockLengthError(
                f"{self.name}: codeword length {len(bits)} is not a "
                f"multiple of {n}"
            )
        return "".join(
            self._decode_block(bits[i : i + n]) for i in range(0, len(bits), n)
        )


def _rep3_encode(block: str) -> str:
    return block * 3


def _rep3_decode(block: str) -> str:
    return "1" if block.count("1") >= 2 else "0"


def _hamming74_encode(block: str) -> str:
    d1, d2, d3, d4 = (int(b) for b in block)
    p1 = d1 ^ d2 ^ d4
    p2 = d1 ^ d3 ^ d4
    p3 = d2 ^ d3 ^ d4
    return f"{p1}{p2}{d1}{p3}{d2}{d3}{d4}"


def _hamming74_decode(block: str) -> str:
    b = [int(c) for c in block]
    # syndrome bits over 1-indexed positions {1,3,5,7}, {2,3,6,7}, {4,5,6,7}
    s1 = b[0] ^ b[2] ^ b[4] ^ b[6]
    s2 = b[1] ^ b[2] ^ b[5] ^ b[6]
    s3 = b[3] ^ b[4] ^ b[5] ^ b[6]
    syndrome = s3 * 4 + s2 * 2 + s1
    if syndrome:
        b[syndrome - 1] ^= 1
    return f"{b[2]}{b[4]}{b[5]}{b[6]}"


_CODECS = {
    "repetition3": EccCodec("repetition3", 1, 3, 1, _rep3_encode, _rep3_decode),
    "hamming74": EccCodec("hamming74", 4, 7, 1, _hamming74_encode, _hamming74_decode),
    "none": EccCodec("none", 1, 1, 0, lambda b: b, lambda b: b),
}


def codec_names() -> tuple[str, ...]:
    return tuple(_CODECS)


def get_codec(name: str) -> EccCodec:
    try:
        return _CODECS[name]
    except KeyError:
        raise ValueError(
            f"unknown codec {name!r}; choose from {', '.join(_CODECS)}"
        ) from None


def ecc_encode(bits: str, codec: EccCodec | str) -> str:
    """Encode a payload bit string into a codeword bit string."""
    if isinstance(codec, str):
        codec = get_codec(codec)
    return codec.encode(bits)


def ecc_decode(bits: str, codec: EccCodec | str) -> str:
    """Decode a codeword bit string, correcting up to the codec's budget."""
    if isinstance(codec, str):
        codec = get_codec(codec)
    return codec.decode(bits)


def crc8(bits: str, poly: int = 0x07) -> str:
    """CRC-8 over a bit string, returned as 8 bits.

    Used as the integrity check in the robust embed/extract layer; any
    single-bit error in (payload + checksum) is detected.
    """
    _check_bits(bits)
    reg = 0
    for ch in bits:
        fb = (reg >> 7) ^ (ch == "1")
        reg = (reg << 1) & 0xFF
        if fb:
            reg ^= poly
    return format(reg, "08b")
