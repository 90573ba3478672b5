"""Shared generators for randomized tests (seeded, deterministic)."""

from __future__ import annotations

import random

from boundarylink import intmat, seifert, smoves


def rand_unimodular(n: int, rng: random.Random, ops: int = 6):
    """Random unimodular matrix from elementary row operations."""
    p = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(ops):
        if n < 2:
            break
        i, j = rng.sample(range(n), 2)
        c = rng.choice([-2, -1, 1, 2])
        for t in range(n):
            p[i][t] += c * p[j][t]
    if n and rng.random() < 0.5:
        i = rng.randrange(n)
        for t in range(n):
            p[i][t] = -p[i][t]
    return intmat.freeze(p)


def rand_valid_matrix(rng: random.Random, max_m: int = 3,
                      max_side: int = 8, mag: int = 4) -> seifert.SeifertMatrix:
    """Random valid boundary-link Seifert matrix.

    Diagonal blocks are built as symmetric noise plus the strict upper part
    of U^T J U for unimodular U, so the intersection form is unimodular by
    construction; off-diagonal blocks are free modulo the transpose rule.
    """
    m = rng.randint(1, max_m)
    sizes = []
    left = max_side
    for _ in range(m):
        s = rng.choice([k for k in range(0, min(left, 6) + 1, 2)])
        sizes.append(s)
        left -= s
    n = sum(sizes)
    rows = [[0] * n for _ in range(n)]
    off = [0]
    for s in sizes:
        off.append(off[-1] + s)
    for k, s in enumerate(sizes):
        if s == 0:
            continue
        u = rand_unimodular(s, rng)
        j = [[0] * s for _ in range(s)]
        for t in range(s // 2):
            j[2 * t][2 * t + 1] = 1
            j[2 * t + 1][2 * t] = -1
        d = intmat.matmul(intmat.matmul(intmat.transpose(u), intmat.freeze(j)), u)
        sym = [[0] * s for _ in range(s)]
        for r in range(s):
            for c in range(r, s):
                sym[r][c] = sym[c][r] = rng.randint(-mag, mag)
        for r in range(s):
            for c in range(s):
                rows[off[k] + r][off[k] + c] = sym[r][c] + (d[r][c] if r < c else 0)
    for i in range(m):
        for j2 in range(i + 1, m):
            for r in range(sizes[i]):
                for c in range(sizes[j2]):
                    v = rng.randint(-mag, mag)
                    rows[off[i] + r][off[j2] + c] = v
                    rows[off[j2] + c][off[i] + r] = v
    mat = seifert.SeifertMatrix(m, tuple(sizes), intmat.freeze(rows))
    assert seifert.is_valid(mat)
    return mat


def rand_enlargement(mat: seifert.SeifertMatrix, rng: random.Random,
                     mag: int = 4) -> smoves.Enlargement:
    k = rng.randrange(mat.m)
    return smoves.Enlargement(
        k=k,
        eps=rng.choice([(1, 0), (0, 1)]),
        rows=tuple(tuple(rng.randint(-mag, mag) for _ in range(s))
                   for s in mat.block_sizes),
        offset=rng.randint(0, mat.block_sizes[k]),
        swapped=rng.random() < 0.5,
    )


def rand_congruence(mat: seifert.SeifertMatrix,
                    rng: random.Random) -> smoves.Congruence:
    return smoves.Congruence(tuple(rand_unimodular(s, rng, ops=4)
                                   for s in mat.block_sizes))
