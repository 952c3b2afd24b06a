"""Deterministic RNG substreams derived from one master seed.

All randomness in the toolkit flows through `derive_rng` so that each
component (splitting, synthesis, init, batching) can be re-seeded
independently and experiments replay byte-for-byte.
"""

import zlib

import numpy as np


def _as_word(part) -> int:
    if isinstance(part, str):
        return zlib.crc32(part.encode("utf-8"))
    return int(part)


def derive_rng(seed: int, *path) -> np.random.Generator:
    """Return a Generator for the substream named by `path`.

    `path` elements may be strings (hashed with crc32, stable across
    platforms and runs) or integers (used verbatim).
    """
    words = [int(seed)] + [_as_word(p) for p in path]
    return np.random.default_rng(np.random.SeedSequence(words))
