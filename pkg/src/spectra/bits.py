"""Subsets of ``range(n)`` as Python ints (bit i set <=> i is a member)."""

import numpy as np


def mask_of(indices):
    m = 0
    for i in indices:
        m |= 1 << int(i)
    return m


def iter_bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def members(mask):
    return tuple(iter_bits(mask))


def popcount(mask):
    return bin(mask).count("1")


def full(n):
    return (1 << n) - 1


def mask_from_bools(flags):
    flags = np.asarray(flags, dtype=bool)
    if not flags.size:
        return 0
    packed = np.packbits(flags, bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def bools_from_mask(mask, n):
    if n == 0:
        return np.zeros(0, dtype=bool)
    raw = np.frombuffer(mask.to_bytes((n + 7) // 8, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:n].astype(bool)


def mask_from_indices(arr, n):
    flags = np.zeros(n, dtype=bool)
    flags[np.asarray(arr, dtype=np.int64)] = True
    return mask_from_bools(flags)
