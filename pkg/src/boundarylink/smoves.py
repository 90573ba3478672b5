"""The three S-equivalence moves, pattern search, and rearrangement lemmas.

Moves on boundary-link Seifert matrices:

  * congruence: B_ij = P_i^T A_ij P_j with each P_i unimodular;
  * enlargement: insert a 2x2 corner [[0, eps'], [eps, 0]] with a shared
    witness row x into block k (the classical move puts it at the front of
    the block; any position inside the block differs from that by a
    permutation congruence, so we track an offset and, symmetrically, a
    `swapped` flag for the transposed row order);
  * reduction: the inverse of an enlargement, located by exact pattern scan.

Everything here is exact integer arithmetic on immutable values.  The two
searches (reduce_to_null, s_equivalent_bounded) are bounded and report an
honest "inconclusive" when the budget runs out.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product as iterproduct
from typing import Iterable, Optional

from . import intmat
from .intmat import IntMatrix
from .seifert import SeifertMatrix, StructureError, is_valid, null_matrix


class ReplayError(ValueError):
    """A recorded move does not apply to the matrix it is replayed against."""


# ---------------------------------------------------------------------------
# move types


@dataclass(frozen=True)
class Congruence:
    """Blockwise basis change: one unimodular P_i per component."""
    blocks: tuple[IntMatrix, ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(intmat.freeze(b) for b in self.blocks))

    def check(self, matrix: SeifertMatrix) -> None:
        if len(self.blocks) != matrix.m:
            raise ReplayError("congruence has wrong number of blocks")
        for k, p in enumerate(self.blocks):
            if len(p) != matrix.block_sizes[k]:
                raise ReplayError(f"P_{k} size does not match block {k}")
            if not intmat.is_unimodular(p):
                raise ReplayError(f"P_{k} is not unimodular")

    def compose(self, other: "Congruence") -> "Congruence":
        """Congruence equal to applying self, then other."""
        return Congruence(tuple(intmat.matmul(p, q)
                                for p, q in zip(self.blocks, other.blocks)))

    def inverse(self) -> "Congruence":
        return Congruence(tuple(intmat.inverse_unimodular(p) for p in self.blocks))

    @staticmethod
    def identity(matrix: SeifertMatrix) -> "Congruence":
        return Congruence(tuple(intmat.identity(b) for b in matrix.block_sizes))

    def is_identity(self) -> bool:
        return all(p == intmat.identity(len(p)) for p in self.blocks)


@dataclass(frozen=True)
class Enlargement:
    """Witness data for one S-enlargement on block k.

    `rows` holds one integer row vector per component, sized against the
    matrix *before* the enlargement.  `offset` is the position of the new
    coordinate pair inside block k; `swapped` records the transposed row
    order (zero row second), which is the front pattern conjugated by the
    transposition congruence of the pair.
    """
    k: int
    eps: tuple[int, int]            # (eps, eps')
    rows: tuple[tuple[int, ...], ...]
    offset: int = 0
    swapped: bool = False

    def __post_init__(self):
        object.__setattr__(self, "eps", tuple(int(e) for e in self.eps))
        object.__setattr__(self, "rows", tuple(tuple(int(v) for v in r) for r in self.rows))
        if self.eps not in ((1, 0), (0, 1)):
            raise ValueError("(eps, eps') must be (1,0) or (0,1)")

    def check(self, matrix: SeifertMatrix) -> None:
        if not (0 <= self.k < matrix.m):
            raise ReplayError(f"component {self.k} out of range")
        if len(self.rows) != matrix.m:
            raise ReplayError("enlargement needs one row vector per component")
        for i, r in enumerate(self.rows):
            if len(r) != matrix.block_sizes[i]:
                raise ReplayError(f"row vector x_{i} has wrong length")
        if not (0 <= self.offset <= matrix.block_sizes[self.k]):
            raise ReplayError("enlargement offset outside block")


@dataclass(frozen=True)
class Reduce:
    """Position of the reducible 2x2 pattern inside block k."""
    k: int
    offset: int
    swapped: bool = False


SMove = Congruence | Enlargement | Reduce


@dataclass(frozen=True)
class MoveSequence:
    start: SeifertMatrix
    moves: tuple[SMove, ...] = field(default_factory=tuple)

    def replay(self) -> list[SeifertMatrix]:
        """All intermediate matrices, raising ReplayError on any mismatch."""
        mats = [self.start]
        for mv in self.moves:
            mats.append(apply_move(mats[-1], mv))
        return mats

    @property
    def end(self) -> SeifertMatrix:
        return self.replay()[-1]


# ---------------------------------------------------------------------------
# applying moves


def apply_congruence(a: SeifertMatrix, p: Congruence) -> SeifertMatrix:
    p.check(a)
    big = _block_diag(p.blocks)
    entries = intmat.matmul(intmat.matmul(intmat.transpose(big), a.entries), big)
    return SeifertMatrix(a.m, a.block_sizes, entries)


def _block_diag(blocks: Iterable[IntMatrix]) -> IntMatrix:
    blocks = list(blocks)
    n = sum(len(b) for b in blocks)
    rows = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            rows[off + i][off:off + len(row)] = row
        off += len(b)
    return intmat.freeze(rows)


def apply_enlargement(a: SeifertMatrix, e: Enlargement) -> SeifertMatrix:
    e.check(a)
    n = a.side
    t = a.offset(e.k) + e.offset          # global insertion point
    g0, g1 = t, t + 1                     # zero row, witness row
    if e.swapped:
        g0, g1 = t + 1, t
    x = [v for r in e.rows for v in r]    # global witness vector, old coords

    def nv(u: int) -> int:
        return u if u < t else u + 2

    rows = [[0] * (n + 2) for _ in range(n + 2)]
    eps, epsp = e.eps
    rows[g0][g1] = epsp
    rows[g1][g0] = eps
    for u in range(n):
        rows[g1][nv(u)] = x[u]
        rows[nv(u)][g1] = x[u]
    for u in range(n):
        for v in range(n):
            rows[nv(u)][nv(v)] = a.entries[u][v]
    sizes = list(a.block_sizes)
    sizes[e.k] += 2
    return SeifertMatrix(a.m, tuple(sizes), intmat.freeze(rows))


def reduction_witness(b: SeifertMatrix, k: int, offset: int,
                      swapped: bool = False) -> Enlargement:
    """The Enlargement whose application recreates b, or ReplayError."""
    if not (0 <= k < b.m) or not (0 <= offset <= b.block_sizes[k] - 2):
        raise ReplayError(f"no pattern slot at component {k}, offset {offset}")
    t = b.offset(k) + offset
    g0, g1 = (t, t + 1) if not swapped else (t + 1, t)
    ent = b.entries
    e01, e10 = ent[g0][g1], ent[g1][g0]
    if {e01, e10} != {0, 1}:
        raise ReplayError("corner entries are not a 0/1 pair")
    if ent[g0][g0] != 0 or ent[g1][g1] != 0:
        raise ReplayError("corner diagonal is not zero")
    others = [u for u in range(b.side) if u not in (g0, g1)]
    for u in others:
        if ent[g0][u] != 0 or ent[u][g0] != 0:
            raise ReplayError("zero row/column of the pattern is not zero")
        if ent[g1][u] != ent[u][g1]:
            raise ReplayError("witness row and column differ")
    x = [ent[g1][u] for u in others]
    rows = []
    pos = 0
    for i in range(b.m):
        size = b.block_sizes[i] - (2 if i == k else 0)
        rows.append(tuple(x[pos:pos + size]))
        pos += size
    return Enlargement(k=k, eps=(e10, e01), rows=tuple(rows),
                       offset=offset, swapped=swapped)


def find_reductions(b: SeifertMatrix, include_swapped: bool = True,
                    front_only: bool = False) -> list[Enlargement]:
    """Every position where b matches the enlargement pattern exactly.

    Deterministic order: (component, offset, unswapped-first).  With
    front_only, only the classical front-of-block unswapped pattern is
    reported.
    """
    out = []
    for k in range(b.m):
        offsets = [0] if front_only else range(max(b.block_sizes[k] - 1, 0))
        for off in offsets:
            if off + 2 > b.block_sizes[k]:
                continue
            for swapped in ((False,) if front_only or not include_swapped
                            else (False, True)):
                try:
                    out.append(reduction_witness(b, k, off, swapped))
                except ReplayError:
                    continue
                break   # both orders match only for a zero witness row;
                        # the reduced matrix is the same, report one
    return out


def apply_reduction(b: SeifertMatrix, r: Enlargement | Reduce) -> SeifertMatrix:
    if isinstance(r, Reduce):
        r = reduction_witness(b, r.k, r.offset, r.swapped)
    else:
        # verify the witness actually matches b at its position
        found = reduction_witness(b, r.k, r.offset, r.swapped)
        if found != r:
            raise ReplayError("reduction witness does not match the matrix")
    t = b.offset(r.k) + r.offset
    keep = [u for u in range(b.side) if u not in (t, t + 1)]
    rows = tuple(tuple(b.entries[u][v] for v in keep) for u in keep)
    sizes = list(b.block_sizes)
    sizes[r.k] -= 2
    return SeifertMatrix(b.m, tuple(sizes), rows)


def apply_move(a: SeifertMatrix, mv: SMove) -> SeifertMatrix:
    if isinstance(mv, Congruence):
        return apply_congruence(a, mv)
    if isinstance(mv, Enlargement):
        return apply_enlargement(a, mv)
    if isinstance(mv, Reduce):
        return apply_reduction(a, mv)
    raise TypeError(f"not a move: {mv!r}")


# ---------------------------------------------------------------------------
# bounded searches


@dataclass(frozen=True)
class SearchResult:
    status: str                      # "found" | "exhausted" | "budget"
    sequence: Optional[MoveSequence] = None
    nodes: int = 0

    @property
    def found(self) -> bool:
        return self.status == "found"

    @property
    def inconclusive(self) -> bool:
        return self.status == "budget"


def reduce_to_null(a: SeifertMatrix, budget: int = 10 ** 6,
                   front_only: bool = False) -> SearchResult:
    """Depth-first search for a pure reduction path to the null matrix.

    "exhausted" means the (finite) reduction graph below `a` was fully
    explored and contains no null matrix: `a` is not reducible by
    elementary S-reductions alone.  It says nothing about S-equivalence.
    """
    if not is_valid(a):
        raise ValueError("reduce_to_null requires a valid Seifert matrix")
    target = null_matrix(a.m)
    seen: set = set()
    nodes = 0
    budget_hit = False

    def dfs(mat: SeifertMatrix) -> Optional[list[Reduce]]:
        nonlocal nodes, budget_hit
        if mat == target:
            return []
        key = (mat.block_sizes, mat.entries)
        if key in seen:
            return None
        seen.add(key)
        for wit in find_reductions(mat, front_only=front_only):
            nodes += 1
            if nodes > budget:
                budget_hit = True
                return None
            tail = dfs(apply_reduction(mat, wit))
            if tail is not None:
                return [Reduce(wit.k, wit.offset, wit.swapped)] + tail
            if budget_hit:
                return None
        return None

    path = dfs(a)
    if path is not None:
        return SearchResult("found", MoveSequence(a, tuple(path)), nodes)
    return SearchResult("budget" if budget_hit else "exhausted", None, nodes)


def _enlargement_neighbors(mat: SeifertMatrix, size_cap: int,
                           magnitude: int) -> Iterable[Enlargement]:
    if mat.side + 2 > size_cap:
        return
    for k in range(mat.m):
        for eps in ((1, 0), (0, 1)):
            spans = [range(-magnitude, magnitude + 1)] * mat.side
            for flat in iterproduct(*spans):
                rows = []
                pos = 0
                for i in range(mat.m):
                    rows.append(tuple(flat[pos:pos + mat.block_sizes[i]]))
                    pos += mat.block_sizes[i]
                yield Enlargement(k=k, eps=eps, rows=tuple(rows))


def s_equivalent_bounded(a: SeifertMatrix, b: SeifertMatrix,
                         size_cap: int | None = None,
                         node_budget: int = 10 ** 5,
                         magnitude: int = 8) -> SearchResult:
    """Bidirectional search for a move path from a to b.

    The graph is restricted to matrices of side <= size_cap with entries of
    absolute value <= magnitude; edges are enlargements and reductions.
    Congruence edges form an infinite family and are not enumerated, so a
    "budget"/"exhausted" answer means inconclusive, never "not S-equivalent".
    """
    if a.m != b.m:
        raise ValueError("component counts differ")
    if size_cap is None:
        size_cap = max(a.side, b.side) + 4

    def key(m: SeifertMatrix):
        return (m.block_sizes, m.entries)

    def entries_ok(m: SeifertMatrix) -> bool:
        return all(abs(v) <= magnitude for row in m.entries for v in row)

    # parents map: key -> (matrix, parent_key, move, direction)
    fwd = {key(a): (a, None, None)}
    bwd = {key(b): (b, None, None)}
    frontier_f, frontier_b = [a], [b]
    nodes = 0

    def build_path(meet_key) -> MoveSequence:
        moves_f = []
        k = meet_key
        while fwd[k][1] is not None:
            mat, pk, mv = fwd[k]
            moves_f.append(mv)
            k = pk
        moves_f.reverse()
        # backward half: moves recorded from b; invert them onto the path a->b
        moves_b = []
        k = meet_key
        while bwd[k][1] is not None:
            mat, pk, mv = bwd[k]
            parent = bwd[pk][0]
            # mv transforms parent -> mat; we need mat -> parent
            if isinstance(mv, Enlargement):
                inv: SMove = Reduce(mv.k, mv.offset, mv.swapped)
            elif isinstance(mv, Reduce):
                inv = reduction_witness(parent, mv.k, mv.offset, mv.swapped)
            else:
                raise AssertionError("unexpected move type in search")
            moves_b.append(inv)
            k = pk
        return MoveSequence(a, tuple(moves_f + moves_b))

    if key(a) in bwd:
        return SearchResult("found", MoveSequence(a, ()), 0)

    while frontier_f or frontier_b:
        # expand the smaller frontier, forward on ties, for determinism
        expand_fwd = (len(frontier_f) <= len(frontier_b) and frontier_f) or not frontier_b
        tree, other = (fwd, bwd) if expand_fwd else (bwd, fwd)
        frontier = frontier_f if expand_fwd else frontier_b
        nxt = []
        for mat in frontier:
            neighbors: list[tuple[SMove, SeifertMatrix]] = []
            for wit in find_reductions(mat):
                neighbors.append((Reduce(wit.k, wit.offset, wit.swapped),
                                  apply_reduction(mat, wit)))
            for wit in _enlargement_neighbors(mat, size_cap, magnitude):
                neighbors.append((wit, apply_enlargement(mat, wit)))
            for mv, nb in neighbors:
                nodes += 1
                if nodes > node_budget:
                    return SearchResult("budget", None, nodes)
                if not entries_ok(nb):
                    continue
                kk = key(nb)
                if kk in tree:
                    continue
                tree[kk] = (nb, key(mat), mv)
                if kk in other:
                    return SearchResult("found", build_path(kk), nodes)
                nxt.append(nb)
        if expand_fwd:
            frontier_f = nxt
        else:
            frontier_b = nxt
    return SearchResult("exhausted", None, nodes)


# ---------------------------------------------------------------------------
# rearrangement lemmas


def _embed_congruence(mat: SeifertMatrix, new_pairs: dict[int, list[int]],
                      blocks: tuple[IntMatrix, ...]) -> Congruence:
    """Blockwise congruence acting as blocks[i] on old coordinates and as the
    identity on the coordinate pairs listed (per component) in new_pairs."""
    out = []
    for i in range(mat.m):
        size = mat.block_sizes[i]
        skip = set()
        for off in new_pairs.get(i, []):
            skip.update((off, off + 1))
        old = [p for p in range(size) if p not in skip]
        q = [[0] * size for _ in range(size)]
        for p in skip:
            q[p][p] = 1
        for r, pr in enumerate(old):
            for c, pc in enumerate(old):
                q[pr][pc] = blocks[i][r][c]
        out.append(intmat.freeze(q))
    return Congruence(tuple(out))


def _shift_rows(rows: tuple[tuple[int, ...], ...], comp: int,
                offset: int) -> tuple[tuple[int, ...], ...]:
    """Insert two zero slots into rows[comp] at `offset`."""
    new = list(rows)
    r = list(new[comp])
    new[comp] = tuple(r[:offset] + [0, 0] + r[offset:])
    return tuple(new)


@dataclass(frozen=True)
class MinMaxWitness:
    d: SeifertMatrix
    q: Congruence
    enlarge_a: Enlargement           # apply_enlargement(a, enlarge_a) == d
    enlarge_b: Enlargement           # apply_enlargement(b, enlarge_b) == Q^T D Q


def replace_min_by_max(a: SeifertMatrix, c: SeifertMatrix, c2: SeifertMatrix,
                       b: SeifertMatrix, red: Enlargement, p: Congruence,
                       enl: Enlargement) -> MinMaxWitness:
    """Rewrite a local size minimum A > C ~ C' < B as a local maximum.

    Given replaying witnesses (A = enlargement of C by `red`, C' = P^T C P,
    B = enlargement of C' by `enl`), produce D with A < D and Q with
    Q^T D Q > B, both with explicit witnesses.
    """
    if apply_enlargement(c, red) != a:
        raise ReplayError("red does not recreate A from C")
    if apply_congruence(c, p) != c2:
        raise ReplayError("P does not carry C to C'")
    if apply_enlargement(c2, enl) != b:
        raise ReplayError("enl does not recreate B from C'")
    p_inv = [intmat.inverse_unimodular(blk) for blk in p.blocks]

    # D enlarges A: transport enl's witness rows back through P^{-1} and pad
    # them with zeros at the coordinates red inserted into A.
    y_pinv = tuple(
        tuple(intmat.matmul((row,), p_inv[i])[0]) if row else ()
        for i, row in enumerate(enl.rows))
    rows_d = _shift_rows(y_pinv, red.k, red.offset)
    off_d = enl.offset if (enl.k != red.k or enl.offset <= red.offset) \
        else enl.offset + 2
    e_d = Enlargement(k=enl.k, eps=enl.eps, rows=rows_d, offset=off_d,
                      swapped=enl.swapped)
    d = apply_enlargement(a, e_d)

    # Q: identity on both inserted pairs, P_i on the old C coordinates.
    pair_a = {red.k: [red.offset if (red.k != e_d.k or red.offset < off_d)
                      else red.offset + 2]}
    pairs = {k: list(v) for k, v in pair_a.items()}
    pairs.setdefault(e_d.k, []).append(off_d)
    q = _embed_congruence(d, pairs, p.blocks)

    # Q^T D Q enlarges B: red's witness rows transported forward through P
    # and padded with zeros at the coordinates enl inserted into B.
    x_p = tuple(tuple(intmat.matmul((row,), p.blocks[i])[0]) if row else ()
                for i, row in enumerate(red.rows))
    rows_b = _shift_rows(x_p, enl.k, enl.offset)
    off_b = red.offset if (red.k != enl.k or red.offset < enl.offset) \
        else red.offset + 2
    e_b = Enlargement(k=red.k, eps=red.eps, rows=rows_b, offset=off_b,
                      swapped=red.swapped)
    if apply_enlargement(b, e_b) != apply_congruence(d, q):
        raise AssertionError("replace_min_by_max witnesses failed to replay")
    return MinMaxWitness(d=d, q=q, enlarge_a=e_d, enlarge_b=e_b)


def commute_reduction_congruence(a: SeifertMatrix, red: Enlargement,
                                 p: Congruence) -> tuple[Congruence, Enlargement]:
    """Turn 'reduce then congruence' into 'congruence then reduce'.

    `red` witnesses A as an enlargement of P^T B P.  Returns (Q, red') with
    apply_reduction(apply_congruence(A, Q), red') == B exactly.
    """
    ptbp = apply_reduction(a, red)
    if reduction_witness(a, red.k, red.offset, red.swapped) != red:
        raise ReplayError("red does not match A")
    p.check(ptbp)
    p_inv = [intmat.inverse_unimodular(blk) for blk in p.blocks]
    q = _embed_congruence(a, {red.k: [red.offset]}, tuple(p_inv))
    rows = tuple(tuple(intmat.matmul((row,), p_inv[i])[0]) if row else ()
                 for i, row in enumerate(red.rows))
    red2 = Enlargement(k=red.k, eps=red.eps, rows=rows, offset=red.offset,
                       swapped=red.swapped)
    b = apply_congruence(ptbp, Congruence(tuple(p_inv)))
    if apply_reduction(apply_congruence(a, q), red2) != b:
        raise AssertionError("commuted witnesses failed to replay")
    return q, red2


def is_monotone(seq: MoveSequence) -> bool:
    """True when no enlargement appears after any reduction."""
    seen_reduce = False
    for mv in seq.moves:
        if isinstance(mv, Reduce):
            seen_reduce = True
        elif isinstance(mv, Enlargement) and seen_reduce:
            return False
    return True


def normalize_sequence(seq: MoveSequence) -> MoveSequence:
    """Rewrite a replayable sequence so every enlargement precedes every
    reduction, preserving the endpoint matrices exactly."""
    mats = seq.replay()
    start, end = mats[0], mats[-1]
    moves = list(seq.moves)
    while True:
        idx = _first_min(moves)
        if idx is None:
            break
        i, j = idx                     # moves[i] is Reduce, moves[j] Enlargement
        mats = MoveSequence(start, tuple(moves)).replay()
        a = mats[i]
        red = reduction_witness(a, moves[i].k, moves[i].offset, moves[i].swapped)
        c = mats[i + 1]
        p = Congruence.identity(c)
        for mv in moves[i + 1:j]:
            p = p.compose(mv)
        c2 = apply_congruence(c, p)
        w = replace_min_by_max(a, c, c2, mats[j + 1], red, p, moves[j])
        moves[i:j + 1] = [w.enlarge_a, w.q,
                          Reduce(w.enlarge_b.k, w.enlarge_b.offset,
                                 w.enlarge_b.swapped)]
    out = MoveSequence(start, tuple(moves))
    final = out.replay()[-1]
    if final != end:
        raise AssertionError("normalization changed the endpoint")
    return out


def _first_min(moves: list[SMove]) -> Optional[tuple[int, int]]:
    """First i<j with moves[i]=Reduce, moves[j]=Enlargement, congruences between."""
    for i, mv in enumerate(moves):
        if not isinstance(mv, Reduce):
            continue
        j = i + 1
        while j < len(moves) and isinstance(moves[j], Congruence):
            j += 1
        if j < len(moves) and isinstance(moves[j], Enlargement):
            return i, j
    return None


# ---------------------------------------------------------------------------
# good-basis staircase form


@dataclass(frozen=True)
class GoodBasisForm:
    """A pair ordering putting a matrix in staircase form.

    ordering[t] is the pair occupying position t of the form; pairs are
    numbered left to right through the blocks, pair p covering coordinates
    (2p, 2p+1) of its block.  swaps[t] says the pair's two coordinates are
    taken in reversed order; signs[t] is the epsilon of its diagonal block.
    """
    ordering: tuple[int, ...]
    signs: tuple[int, ...]
    swaps: tuple[bool, ...]


def _pair_coords(a: SeifertMatrix) -> list[tuple[int, int]]:
    pairs = []
    for k in range(a.m):
        base = a.offset(k)
        for t in range(a.block_sizes[k] // 2):
            pairs.append((base + 2 * t, base + 2 * t + 1))
    return pairs


def good_basis_form_check(a: SeifertMatrix) -> Optional[GoodBasisForm]:
    """Search for a pair reordering exhibiting the staircase form.

    In the form, each pair's first coordinate has zero row and column apart
    from its own diagonal block [[0, eps], [1-eps, 0]], entries above-right
    of the diagonal blocks are arbitrary, entries below-left are zero, and
    each second coordinate's row agrees with its column outside the pair
    (so the last pair is always removable by an elementary reduction; this
    holds automatically for bases with symplectic geometric intersections).
    Pairs are chosen from the back of the form, deterministically.
    """
    if any(s % 2 for s in a.block_sizes):
        raise StructureError("good-basis form needs even block sizes")
    pairs = _pair_coords(a)
    ent = a.entries

    def corner_sign(u: int, v: int) -> Optional[int]:
        # pair taken as (u, v): diagonal block must be [[0, e], [1-e, 0]]
        if ent[u][u] or ent[v][v]:
            return None
        e, f = ent[u][v], ent[v][u]
        return e if (e, f) in ((1, 0), (0, 1)) else None

    def reducible_last(p: int, live: list[int], swap: bool) -> Optional[int]:
        u, v = pairs[p]
        if swap:
            u, v = v, u
        e = corner_sign(u, v)
        if e is None:
            return None
        others = [w for q in live if q != p for w in pairs[q]]
        for w in others:
            if ent[u][w] != 0 or ent[w][u] != 0:
                return None
            if ent[v][w] != ent[w][v]:
                return None
        return e

    order: list[int] = []
    signs: list[int] = []
    swaps: list[bool] = []

    def solve(live: list[int]) -> bool:
        if not live:
            return True
        # try the highest pair for the rearmost open slot first, so a
        # matrix already in staircase order reports the identity ordering
        for p in reversed(live):
            for swap in (False, True):
                e = reducible_last(p, live, swap)
                if e is None:
                    continue
                order.append(p)
                signs.append(e)
                swaps.append(swap)
                if solve([q for q in live if q != p]):
                    return True
                order.pop()
                signs.pop()
                swaps.pop()
        return False

    if not solve(list(range(len(pairs)))):
        return None
    return GoodBasisForm(tuple(reversed(order)), tuple(reversed(signs)),
                         tuple(reversed(swaps)))


# ---------------------------------------------------------------------------
# serialization


def move_to_doc(mv: SMove) -> dict:
    if isinstance(mv, Congruence):
        return {"move": "congruence",
                "blocks": [[list(r) for r in b] for b in mv.blocks]}
    if isinstance(mv, Enlargement):
        return {"move": "enlarge", "k": mv.k, "eps": list(mv.eps),
                "offset": mv.offset, "swapped": mv.swapped,
                "rows": [list(r) for r in mv.rows]}
    if isinstance(mv, Reduce):
        return {"move": "reduce", "k": mv.k, "offset": mv.offset,
                "swapped": mv.swapped}
    raise TypeError(f"not a move: {mv!r}")


def move_from_doc(doc: dict) -> SMove:
    kind = doc.get("move")
    if kind == "congruence":
        return Congruence(tuple(intmat.freeze(b) for b in doc["blocks"]))
    if kind == "enlarge":
        return Enlargement(k=doc["k"], eps=tuple(doc["eps"]),
                           rows=tuple(tuple(r) for r in doc["rows"]),
                           offset=doc.get("offset", 0),
                           swapped=doc.get("swapped", False))
    if kind == "reduce":
        return Reduce(doc["k"], doc["offset"], doc.get("swapped", False))
    raise StructureError(f"unknown move kind: {kind!r}")


def moves_to_json(moves: Iterable[SMove]) -> str:
    return json.dumps([move_to_doc(m) for m in moves], separators=(", ", ": "))


def moves_from_json(text: str) -> tuple[SMove, ...]:
    try:
        doc, endpos = json.JSONDecoder().raw_decode(text)
    except json.JSONDecodeError as exc:
        raise StructureError(f"bad JSON: {exc}") from exc
    if text[endpos:].strip():
        raise StructureError("trailing data after JSON document")
    if not isinstance(doc, list):
        raise StructureError("move file must contain a JSON list")
    return tuple(move_from_doc(d) for d in doc)
