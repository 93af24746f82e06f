"""Conversions between integer-packed words and numpy bit arrays."""

from __future__ import annotations

import numpy as np


def int_to_bits(value: int, n: int) -> np.ndarray:
    """LSB-first bit array of length n (uint8)."""
    raw = np.frombuffer(value.to_bytes((n + 7) // 8, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:n]


def bits_to_int(bits: np.ndarray) -> int:
    """Inverse of int_to_bits."""
    packed = np.packbits(np.asarray(bits, dtype=np.uint8), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def bpsk(bits: np.ndarray) -> np.ndarray:
    """BPSK image of a bit array: 0 -> +1, 1 -> -1."""
    return 1.0 - 2.0 * np.asarray(bits, dtype=np.float64)
