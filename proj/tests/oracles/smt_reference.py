#!/usr/bin/env python3
# Standalone reference for the salted sparse Merkle tree rules. Used to
# produce the golden roots frozen in tests/zks_engine_test.cc; shares no
# code with the C++ implementation.
import hashlib
import sys


def h(data: bytes) -> bytes:
    return hashlib.blake2b(data, digest_size=32).digest()


DEPTH = 256
EMPTY = [b""] * (DEPTH + 1)
EMPTY[DEPTH] = bytes(32)
for d in range(DEPTH, 0, -1):
    EMPTY[d - 1] = h(b"\x01" + EMPTY[d] + EMPTY[d])


def bit(label: bytes, i: int) -> int:
    return (label[i // 8] >> (7 - i % 8)) & 1


def leaf(seed: bytes, label: bytes, value: bytes) -> bytes:
    salt = h(b"\x02" + seed + label)
    return h(b"\x00" + salt + label + h(value))


def root(leaves: dict, depth: int = 0) -> bytes:
    # leaves: label -> leaf digest, all sharing the same prefix above depth
    if not leaves:
        return EMPTY[depth]
    if depth == DEPTH:
        (only,) = leaves.values()
        return only
    left = {k: v for k, v in leaves.items() if bit(k, depth) == 0}
    right = {k: v for k, v in leaves.items() if bit(k, depth) == 1}
    return h(b"\x01" + root(left, depth + 1) + root(right, depth + 1))


def commit(values, seed: bytes) -> bytes:
    leaves = {}
    for v in values:
        label = h(v.encode())
        leaves[label] = leaf(seed, label, v.encode())
    return root(leaves)


if __name__ == "__main__":
    seed = bytes([1] * 32)
    print("empty_root", EMPTY[0].hex())
    print("hash_empty", h(b"").hex())
    print("label_a", h(b"a@1@NPM").hex())
    print("root_ab", commit(["a@1@NPM", "b@1@NPM"], seed).hex())
    print("root_a", commit(["a@1@NPM"], seed).hex())
    print("root_ab_seed0", commit(["a@1@NPM", "b@1@NPM"], bytes(32)).hex())
