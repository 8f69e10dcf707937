"""Deterministic per-item seed derivation.

Every stochastic operation in the package draws from a generator seeded
through this module, so batch outputs depend only on (global seed, item
key) and never on processing order or worker count.

The derivation is collision-resistant keyed hashing (BLAKE2b with the
global seed as the hash key), not Python's salted ``hash``: results are
stable across processes, machines, and interpreter runs.

Two-stage keying used by the batch pipeline and the training bindings:

    item_seed   = derive_item_seed(global_seed, relative_path)
    sample_seed = derive_sample_seed(item_seed, k)      # k-th sample

A training sampler handed ``item_seed`` as its base reproduces the exact
per-sample sequence the file pipeline writes for that item.
"""

from __future__ import annotations

import hashlib

__all__ = ["derive_item_seed", "derive_sample_seed"]

_U64 = 2**64


def derive_item_seed(global_seed: int, item_key: str | int) -> int:
    """Derive a 64-bit seed from a global seed and a canonical item key.

    ``item_key`` is a non-empty string (use the forward-slash relative
    path for files, so results are machine-independent) or a nonnegative
    integer index.  Distinct keys yield distinct seeds except for hash
    collisions (~2^-64).
    """
    if not isinstance(global_seed, int) or not 0 <= global_seed < _U64:
        raise ValueError(f"global_seed must be an unsigned 64-bit integer, got {global_seed!r}")
    if isinstance(item_key, bool):
        raise ValueError("item_key must be a string or integer index")
    if isinstance(item_key, int):
        if item_key < 0:
            raise ValueError(f"integer item_key must be nonnegative, got {item_key}")
        key = str(item_key)
    elif isinstance(item_key, str):
        key = item_key
    else:
        raise ValueError(f"item_key must be a string or integer index, got {type(item_key).__name__}")
    if not key:
        raise ValueError("item_key must be non-empty")
    digest = hashlib.blake2b(
        key.encode("utf-8"),
        digest_size=8,
        key=global_seed.to_bytes(8, "little"),
    ).digest()
    return int.from_bytes(digest, "little")


def derive_sample_seed(item_seed: int, sample_index: int) -> int:
    """Seed for the ``sample_index``-th augmentation of one item."""
    if sample_index < 0:
        raise ValueError(f"sample_index must be nonnegative, got {sample_index}")
    return derive_item_seed(item_seed, f"s{sample_index}")
