"""Error-impulse collection of low-weight codewords.

A trial transmits a codeword, perturbs its BPSK image, decodes, and keeps
the XOR of the transmitted and decoded words when they differ — a codeword
of (usually) small weight.  Finds are multiplied through the code's cyclic
automorphisms and deduplicated into per-weight lists.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np

from .bitops import bpsk, int_to_bits
from .codes import CodeSpec, contains, encode
from .decoders import DecoderKind, decode
from .gf2 import BitWord
from .sim import noise_sigma

__all__ = [
    "HarvestConfig",
    "WeightClassList",
    "impulse_trial",
    "expand_by_automorphisms",
    "harvest",
]

TRANSMIT_MODES = ("all_zero", "random_codeword")
# gaussian_noise: AWGN only.  single_impulse_sweep: clean channel, one
# coordinate pushed toward the opposite sign with growing amplitude until the
# decision flips.  noisy_impulse: AWGN plus one fixed-amplitude impulse —
# one decode per trial, which makes it the cheapest source of decoder errors
# concentrated on the low weight classes.
IMPULSE_MODES = ("gaussian_noise", "single_impulse_sweep", "noisy_impulse")


@dataclass(frozen=True)
class HarvestConfig:
    decoder: DecoderKind
    trials: int
    seed: int
    snr_grid_db: tuple[float, ...] = (0.0, 1.0, 2.0, 3.0)
    # Explicit [w_min, w_max]; None tracks the smallest weight seen so far
    # (or d_known) with a margin of +5.
    weight_window: Optional[tuple[int, int]] = None
    transmit_mode: str = "random_codeword"
    impulse_mode: str = "gaussian_noise"
    # Impulse size for noisy_impulse; None picks d_known - 1 (or n/4).
    impulse_amplitude: Optional[float] = None

    def __post_init__(self):
        if self.trials < 0:
            raise ValueError("trials must be non-negative")
        if self.transmit_mode not in TRANSMIT_MODES:
            raise ValueError(f"unknown transmit mode {self.transmit_mode!r}")
        if self.impulse_mode not in IMPULSE_MODES:
            raise ValueError(f"unknown impulse mode {self.impulse_mode!r}")
        if self.weight_window is not None:
            lo, hi = self.weight_window
            if lo < 1 or hi < lo:
                raise ValueError("weight window must satisfy 1 <= w_min <= w_max")


@dataclass
class WeightClassList:
    """Deduplicated codewords of one fixed weight, validated on insertion."""

    code: CodeSpec
    w: int
    _members: set[int] = field(default_factory=set)

    def add(self, word: BitWord, check: bool = True) -> bool:
        """Insert a word; returns True if it was new."""
        if word.value in self._members:
            return False
        if check:
            if word.weight() != self.w:
                raise ValueError(f"word of weight {word.weight()} offered to L_{self.w}")
            if not contains(self.code, word):
                raise ValueError("non-codeword offered to a weight-class list")
        self._members.add(word.value)
        return True

    def __len__(self) -> int:
        return len(self._members)

    def __contains__(self, word) -> bool:
        value = word.value if isinstance(word, BitWord) else int(word)
        return value in self._members

    def values(self) -> set[int]:
        return set(self._members)

    def words(self) -> list[BitWord]:
        return [BitWord(self.code.n, v) for v in sorted(self._members)]


def _draw_transmit(code: CodeSpec, mode: str, rng: np.random.Generator) -> BitWord:
    if mode == "all_zero":
        return BitWord(code.n, 0)
    bits = rng.integers(0, 2, size=code.k, dtype=np.uint8)
    info = BitWord(code.k, int.from_bytes(np.packbits(bits, bitorder="little").tobytes(), "little"))
    return encode(code, info)


def _impulse_amplitude(code: CodeSpec, config: HarvestConfig) -> float:
    if config.impulse_amplitude is not None:
        return config.impulse_amplitude
    if code.d_known is not None:
        return float(code.d_known - 1)
    return code.n / 4.0


def impulse_trial(
    code: CodeSpec, config: HarvestConfig, rng: np.random.Generator
) -> Optional[BitWord]:
    """One perturb-and-decode trial; returns the difference codeword or None."""
    c1 = _draw_transmit(code, config.transmit_mode, rng)
    tx = bpsk(int_to_bits(c1.value, code.n))

    if config.impulse_mode == "gaussian_noise":
        snr = float(rng.choice(np.asarray(config.snr_grid_db, dtype=np.float64)))
        sigma = noise_sigma(snr, code.rate)
        r = tx + sigma * rng.normal(size=code.n)
        c2 = decode(config.decoder, code, r)
    elif config.impulse_mode == "noisy_impulse":
        snr = float(rng.choice(np.asarray(config.snr_grid_db, dtype=np.float64)))
        sigma = noise_sigma(snr, code.rate)
        r = tx + sigma * rng.normal(size=code.n)
        pos = int(rng.integers(code.n))
        r[pos] -= _impulse_amplitude(code, config) * np.sign(tx[pos])
        c2 = decode(config.decoder, code, r)
    else:
        pos = int(rng.integers(code.n))
        cap = float((code.d_known or code.n) + 2)
        c2 = c1
        amp = 1.0
        while amp <= cap:
            r = tx.copy()
            r[pos] = tx[pos] - amp * np.sign(tx[pos])
            c2 = decode(config.decoder, code, r)
            if c2 != c1:
                break
            amp += 0.5

    if c2 == c1:
        return None
    return c1 ^ c2


def _rotate(value: int, n: int, shift: int) -> int:
    mask = (1 << n) - 1
    shift %= n
    return ((value << shift) | (value >> (n - shift))) & mask


def _lift(value: int, parent_n: int, removed: tuple[int, ...]) -> int:
    """Insert zero bits at the removed parent coordinates."""
    removed_set = set(removed)
    out = 0
    src = 0
    for pos in range(parent_n):
        if pos in removed_set:
            continue
        out |= ((value >> src) & 1) << pos
        src += 1
    return out


def _project(value: int, parent_n: int, removed: tuple[int, ...]) -> int:
    removed_set = set(removed)
    out = 0
    dst = 0
    for pos in range(parent_n):
        if pos in removed_set:
            continue
        out |= ((value >> pos) & 1) << dst
        dst += 1
    return out


def cyclic_orbit(code: CodeSpec, word: BitWord) -> set[int]:
    """Automorphism orbit of a word under the available cyclic structure.

    Cyclic codes: all n rotations.  Shortened codes with a cyclic parent:
    lift, rotate in the parent, keep rotations vanishing on the removed
    coordinates, project back.  Anything else: the word alone.
    """
    if code.is_cyclic:
        return {_rotate(word.value, code.n, s) for s in range(code.n)}
    if code.parent is not None:
        parent, removed = code.parent
        if parent.is_cyclic:
            removed_mask = 0
            for pos in removed:
                removed_mask |= 1 << pos
            lifted = _lift(word.value, parent.n, removed)
            keep = set()
            for s in range(parent.n):
                rot = _rotate(lifted, parent.n, s)
                if rot & removed_mask == 0:
                    keep.add(_project(rot, parent.n, removed))
            return keep
    return {word.value}


def expand_by_automorphisms(code: CodeSpec, word: BitWord) -> set[BitWord]:
    """All automorphism images of a code member (see cyclic_orbit)."""
    if not contains(code, word):
        raise ValueError("cannot expand a word that is not a code member")
    return {BitWord(code.n, v) for v in cyclic_orbit(code, word)}


def harvest(code: CodeSpec, config: HarvestConfig) -> dict[int, WeightClassList]:
    """Run impulse trials and collect per-weight lists of found codewords.

    Per-trial random streams are derived from (seed, trial index), so the
    result is reproducible and grows monotonically with the trial budget.
    """
    raw: dict[int, set[int]] = {}
    d_est = code.d_known
    for trial in range(config.trials):
        rng = np.random.default_rng([config.seed, trial])
        c3 = impulse_trial(code, config, rng)
        if c3 is None:
            continue
        w = c3.weight()
        if d_est is None or w < d_est:
            d_est = w
        if config.weight_window is not None:
            lo, hi = config.weight_window
        else:
            lo, hi = d_est, d_est + 5
        if not lo <= w <= hi:
            continue
        raw.setdefault(w, set()).update(cyclic_orbit(code, c3))

    if config.weight_window is not None:
        lo, hi = config.weight_window
    else:
        lo, hi = (d_est, d_est + 5) if d_est is not None else (1, 0)
    out: dict[int, WeightClassList] = {}
    for w in sorted(raw):
        if not lo <= w <= hi:
            continue
        lst = WeightClassList(code, w)
        for v in raw[w]:
            lst.add(BitWord(code.n, v))
        out[w] = lst
    return out


def merge_lists(
    target: dict[int, WeightClassList],
    extra: Iterable[WeightClassList],
) -> dict[int, WeightClassList]:
    """Dedup-merge weight-class lists (used by resumable harvests)."""
    for lst in extra:
        dst = target.setdefault(lst.w, WeightClassList(lst.code, lst.w))
        for word in lst.words():
            dst.add(word)
    return target
