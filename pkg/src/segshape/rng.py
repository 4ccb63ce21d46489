"""Portable, seed-addressed random numbers.

Every stochastic feature in this library (sampled boundary targets, scene
jitter, simulated segmenter noise) draws from the generator defined here, so
identical seeds give identical results on every platform and in every
implementation language.

Algorithm: splitmix64. Draw ``i`` of the stream with seed ``s`` is obtained
by advancing a 64-bit counter ``s + (i + 1) * 0x9E3779B97F4A7C15`` (mod 2^64)
and applying the xorshift-multiply finalizer

    z ^= z >> 30;  z *= 0xBF58476D1CE4E5B9
    z ^= z >> 27;  z *= 0x94D049BB133111EB
    z ^= z >> 31

This matches the reference sequential splitmix64 stream exactly while being
random-access (draw ``i`` does not depend on draws ``0..i-1``), which lets
whole rasters be generated in one vectorized pass. Uniform doubles use the
top 53 bits: ``(z >> 11) * 2**-53``.

Sub-streams are derived with :func:`mix_seed`, which feeds ``seed`` xor a
stream index through the same finalizer; the derivation is part of the file
format and CLI contract, not an implementation detail.
"""

import numpy as np

__all__ = ["mix_seed", "raw64", "uniforms", "uniform_ints", "bernoulli"]

_MASK = np.uint64(0xFFFFFFFFFFFFFFFF)
_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)


def _finalize(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> np.uint64(30))) * _MIX1
    z = (z ^ (z >> np.uint64(27))) * _MIX2
    return z ^ (z >> np.uint64(31))


def mix_seed(seed: int, stream: int) -> int:
    """Derive an independent 64-bit sub-seed for a numbered stream."""
    base = np.uint64(seed & 0xFFFFFFFFFFFFFFFF) ^ (
        np.uint64(stream & 0xFFFFFFFFFFFFFFFF) * _GOLDEN
    )
    return int(_finalize(base[None] if base.ndim else np.array([base]))[0])


def raw64(seed: int, count: int, offset: int = 0) -> np.ndarray:
    """``count`` consecutive 64-bit draws starting at stream position ``offset``."""
    idx = np.arange(offset + 1, offset + count + 1, dtype=np.uint64)
    state = np.uint64(seed & 0xFFFFFFFFFFFFFFFF) + idx * _GOLDEN
    return _finalize(state)


def uniforms(seed: int, count: int, offset: int = 0) -> np.ndarray:
    """Uniform float64 draws in [0, 1)."""
    bits = raw64(seed, count, offset) >> np.uint64(11)
    return bits.astype(np.float64) * (2.0 ** -53)


def uniform_ints(seed: int, count: int, low: int, high: int, offset: int = 0) -> np.ndarray:
    """Uniform integer draws in the inclusive range [low, high].

    Uses the floor of a scaled uniform; the tiny modulo bias of the 53-bit
    mantissa is irrelevant at the range sizes used here (tens of values).
    """
    if high < low:
        raise ValueError("uniform_ints: empty range")
    span = high - low + 1
    u = uniforms(seed, count, offset)
    return low + np.floor(u * span).astype(np.int64)


def bernoulli(seed: int, probs: np.ndarray, offset: int = 0) -> np.ndarray:
    """Independent Bernoulli draws, one per entry of ``probs`` in flat order."""
    p = np.asarray(probs, dtype=np.float64)
    u = uniforms(seed, p.size, offset).reshape(p.shape)
    return u < p
