"""Vertex encoding and adjacency machinery for the Hadamard graph G_t.

A candidate row of an m x 4t partial Hadamard matrix whose first three rows
are the canonical ones (all +; +^{2t} -^{2t}; (+^t -^t)^2) can be written in
additive notation (+1 -> 0, -1 -> 1) as a 4t-bit word with exactly 2t ones
that splits into four length-t quarters carrying k, t-k, t-k, k ones for
some k in [0, t].  Such words are the vertices of G_t; two vertices are
adjacent (the rows are orthogonal) exactly when they agree in 2t positions,
i.e. their XOR has 2t one-bits.  Cliques of size m in G_t are (m+3) x 4t
partial Hadamard matrices.

Words are stored as plain integers with position 1 of the row as the most
significant of the 4t bits (leading zeros retained), so quarter 1 occupies
the top t bits.

Adjacency is never stored: it is *generated*.  For a k-vertex v (k <= t/2)
and each admissible s, the s-vector neighbors of v are classified by their
per-quarter total-coincidence counts alpha = t-k-s+2i, i being the number
of shared 1s (quarters 1 and 4) or shared 0s (quarters 2 and 3).  The
unordered 4-tuples of alphas summing to 2t form a small diophantine
solution set; each ordered assignment of a tuple to quarters yields four
independent pools of quarter patterns whose juxtapositions are exactly the
neighbors in that class.  Neighbors with more than t/2 ones per end-quarter
are complements of generated ones.  This module implements that machinery
plus exact counting (degrees, edge totals) from the same binomial products.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, permutations
from random import Random
from typing import Iterator, Mapping, Sequence

import numpy as np

from .errors import (
    InfeasibleQuarter,
    IsolatedVertex,
    KOutOfRange,
    MismatchedT,
    PatternError,
    RangeError,
    WeightError,
)

__all__ = [
    "VertexCode",
    "Clique",
    "CoincidenceTuple",
    "GeneratorSet",
    "AdjacencyProfile",
    "decode",
    "encode",
    "clique_from_codes",
    "orthogonal",
    "orthogonal_codes",
    "complement",
    "full_mask",
    "quarters_of",
    "join_quarters",
    "vertex_count",
    "class_size",
    "s_range",
    "alpha_ladder",
    "coincidence_range",
    "solve_distributions",
    "distinct_orderings",
    "generator_set",
    "count_orthogonal",
    "adjacency_profile",
    "degree",
    "edge_count",
    "adjacency",
    "sample_neighbor",
    "random_vertex",
]


@dataclass(frozen=True, slots=True)
class VertexCode:
    """A vertex of G_t: integer code plus its quarter class k."""

    t: int
    code: int
    k: int


@dataclass(frozen=True, slots=True)
class Clique:
    """An ordered list of pairwise-orthogonal vertices sharing one t."""

    t: int
    members: tuple[VertexCode, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[VertexCode]:
        return iter(self.members)

    @property
    def codes(self) -> list[int]:
        return [v.code for v in self.members]


@dataclass(frozen=True, slots=True)
class CoincidenceTuple:
    """Unordered per-quarter total-coincidence counts, stored ascending."""

    alphas: tuple[int, int, int, int]

    def __iter__(self) -> Iterator[int]:
        return iter(self.alphas)

    def total(self) -> int:
        return sum(self.alphas)


@dataclass(frozen=True, slots=True)
class GeneratorSet:
    """Per-quarter pattern pools for one ordered coincidence assignment.

    Juxtaposing one pattern from each pool (quarter 1 contributing the most
    significant t bits) yields a vector orthogonal to ``vertex``; distinct
    choices yield distinct vectors, so the class contributes the product of
    the pool sizes to the neighbor count.
    """

    vertex: VertexCode
    s: int
    ordered_alphas: tuple[int, int, int, int]
    quarters: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...], tuple[int, ...]]

    def size(self) -> int:
        return math.prod(len(q) for q in self.quarters)


@dataclass(frozen=True, slots=True)
class AdjacencyProfile:
    """Counts of s-vector neighbors of a k-vertex, for s in [0, t//2]."""

    t: int
    k: int
    counts: Mapping[int, int]


# --- codes -----------------------------------------------------------------


def full_mask(t: int) -> int:
    return (1 << (4 * t)) - 1


def quarters_of(code: int, t: int) -> tuple[int, int, int, int]:
    """Split a 4t-bit code into quarters, most significant quarter first."""
    m = (1 << t) - 1
    return (code >> (3 * t)) & m, (code >> (2 * t)) & m, (code >> t) & m, code & m


def join_quarters(qs: Sequence[int], t: int) -> int:
    return (qs[0] << (3 * t)) | (qs[1] << (2 * t)) | (qs[2] << t) | qs[3]


def decode(code: int, t: int) -> VertexCode:
    """Validate a code as a vertex of G_t, reporting its class k.

    Raises RangeError when the code does not fit in 4t bits, WeightError
    when it does not carry exactly 2t ones, and PatternError when the
    quarter counts are not (k, t-k, t-k, k) for any k.  All k in [0, t] are
    accepted; the k <= t//2 restriction applies only to adjacency
    generation, complements covering the upper classes.
    """
    if t < 1:
        raise RangeError(f"t must be positive, got {t}")
    if not 0 <= code < (1 << (4 * t)):
        raise RangeError(f"code {code} does not fit in {4 * t} bits")
    if code.bit_count() != 2 * t:
        raise WeightError(f"code {code} has {code.bit_count()} one-bits, expected {2 * t}")
    c1, c2, c3, c4 = (q.bit_count() for q in quarters_of(code, t))
    if c1 != c4 or c2 != c3 or c1 + c2 != t:
        raise PatternError(
            f"quarter one-bit counts ({c1},{c2},{c3},{c4}) are not (k,t-k,t-k,k)"
        )
    return VertexCode(t=t, code=code, k=c1)


def encode(v: VertexCode) -> int:
    """Inverse of decode."""
    return v.code


def clique_from_codes(t: int, codes: Sequence[int]) -> Clique:
    """Decode a list of integer codes into a Clique (no orthogonality check)."""
    return Clique(t=t, members=tuple(decode(c, t) for c in codes))


def orthogonal_codes(a: int, b: int, t: int) -> bool:
    """Orthogonality test on raw codes: the XOR has exactly 2t one-bits."""
    return (a ^ b).bit_count() == 2 * t


def orthogonal(v: VertexCode, w: VertexCode) -> bool:
    """True when the underlying rows are orthogonal (2t shared bits)."""
    if v.t != w.t:
        raise MismatchedT(f"cannot compare vertices with t={v.t} and t={w.t}")
    return orthogonal_codes(v.code, w.code, v.t)


def complement(v: VertexCode) -> VertexCode:
    """Bitwise negation within 4t bits; maps a k-vertex to a (t-k)-vertex.

    Orthogonality to any w is preserved: the XOR flips all 4t bits, so its
    weight goes from 2t to 4t - 2t = 2t.
    """
    return VertexCode(t=v.t, code=v.code ^ full_mask(v.t), k=v.t - v.k)


# --- census ----------------------------------------------------------------


def class_size(t: int, k: int) -> int:
    """Number of k-vertices: independent quarter choices, C(t,k)^4."""
    return math.comb(t, k) ** 4


def vertex_count(t: int) -> int:
    return sum(class_size(t, k) for k in range(t + 1))


def s_range(t: int, k: int) -> range:
    """Classes s with at least one s-vector orthogonal to a k-vertex.

    Empty classes need 2s + 2k - t >= 0 shared one-positions, so
    s >= ceil(t/2) - k; the generation-side cap s <= t//2 bounds above.
    May be empty (t odd, k = 0).
    """
    if not 0 <= k <= t // 2:
        raise KOutOfRange(f"k={k} outside [0, {t // 2}] for t={t}")
    return range(max(0, (t + 1) // 2 - k), t // 2 + 1)


def coincidence_range(t: int, a: int, b: int) -> range:
    """Possible counts of equal positions between t-bit words of weights a, b.

    The count is t minus the Hamming distance; the distance has the parity
    of a - b and runs from |a - b| to min(a + b, 2t - a - b), so the result
    steps by 2.
    """
    lo = t - min(a + b, 2 * t - a - b)
    hi = t - abs(a - b)
    return range(lo, hi + 1, 2)


def alpha_ladder(t: int, k: int, s: int) -> range:
    """Per-quarter total coincidences between a k-vertex and an s-vector.

    The i-th rung is t-s-k+2i, i counting shared 1s in quarters 1 and 4
    and shared 0s in quarters 2 and 3; all four quarters admit the same
    ladder.  For k, s <= t//2 this is [t-k-s, t-|k-s|] step 2.
    """
    return coincidence_range(t, k, s)


# --- diophantine distributions ---------------------------------------------


def solve_distributions(t: int, k: int, s: int) -> tuple[CoincidenceTuple, ...]:
    """All unordered 4-tuples of ladder values summing to 2t, ascending.

    Solutions exist iff 4*alpha_0 <= 2t <= 4*alpha_n.  The enumeration runs
    three nested loops over ladder values (step 2), each clamped so the
    remaining quarters can still reach 2t; the published loop bound alpha_1
    for the first variable excludes valid minimal-value solutions (e.g.
    t=5, k=2, s=1 whose only tuple (2,2,2,4) contains alpha_0 = 2) and is
    corrected to alpha_0 here.
    """
    ladder = alpha_ladder(t, k, s)
    lo, hi = ladder.start, ladder[-1] if len(ladder) else ladder.start
    if len(ladder) == 0:
        return ()
    total = 2 * t

    def clamp_lo(bound: int) -> int:
        # smallest ladder-parity value >= max(bound, lo)
        v = max(bound, lo)
        return v + ((v - lo) % 2)

    out: list[CoincidenceTuple] = []
    for a in range(clamp_lo(total - 3 * hi), min(hi, total // 4) + 1, 2):
        for b in range(clamp_lo(max(a, total - a - 2 * hi)), min(hi, (total - a) // 3) + 1, 2):
            for c in range(
                clamp_lo(max(b, total - a - b - hi)), min(hi, (total - a - b) // 2) + 1, 2
            ):
                d = total - a - b - c
                if c <= d <= hi:
                    out.append(CoincidenceTuple(alphas=(a, b, c, d)))
    return tuple(out)


def distinct_orderings(ct: CoincidenceTuple) -> tuple[tuple[int, int, int, int], ...]:
    """Distinct quarter assignments of an unordered tuple, sorted."""
    return tuple(sorted(set(permutations(ct.alphas))))


# --- generator pools ---------------------------------------------------------


def _pool(ref_quarter: int, t: int, weight: int, on_ones: int, in_ones: bool) -> tuple[int, ...]:
    """Quarter patterns of a given one-bit weight with a fixed overlap.

    For quarters 1 and 4 (in_ones=True) the pattern's ones must meet the
    reference quarter's ones in exactly on_ones positions.  For quarters 2
    and 3 the same count applies to the pattern's zeros against the
    reference's zeros, so the complement pools are built and flipped.
    """
    if not in_ones:
        # zeros-overlap of weight-w patterns == ones-overlap of their
        # complements (weight t-w) against the flipped reference
        flipped = _pool(ref_quarter ^ ((1 << t) - 1), t, t - weight, on_ones, True)
        return tuple(sorted(m ^ ((1 << t) - 1) for m in flipped))
    ones = [b for b in range(t) if (ref_quarter >> b) & 1]
    zeros = [b for b in range(t) if not (ref_quarter >> b) & 1]
    out = []
    for sel_on in combinations(ones, on_ones):
        base = sum(1 << b for b in sel_on)
        for sel_off in combinations(zeros, weight - on_ones):
            out.append(base + sum(1 << b for b in sel_off))
    return tuple(sorted(out))


def generator_set(v: VertexCode, ordered_alphas: Sequence[int], s: int) -> GeneratorSet:
    """Pools of quarter patterns realizing one ordered coincidence tuple.

    ``ordered_alphas`` assigns a total-coincidence count to each quarter of
    an s-vector against v.  The unordered tuple alone does not pin down s
    (one multiset can solve the system for two different s), so s is an
    explicit argument.  Pool q holds every t-bit pattern of the s-vector's
    quarter-q weight meeting the demanded count; sizes are
    C(k, i) * C(t-k, s-i) with i = (alpha - t + k + s) / 2.
    """
    t, k = v.t, v.k
    if len(ordered_alphas) != 4:
        raise InfeasibleQuarter("need one coincidence count per quarter")
    vq = quarters_of(v.code, t)
    cand_weights = (s, t - s, t - s, s)
    ladder = coincidence_range(t, k, s)
    pools = []
    for q in range(4):
        alpha = ordered_alphas[q]
        if alpha not in ladder:
            raise InfeasibleQuarter(
                f"quarter {q + 1}: {alpha} total coincidences outside "
                f"[{ladder.start}, {ladder[-1] if len(ladder) else ladder.start}] step 2"
            )
        i = (alpha - t + k + s) // 2
        pools.append(_pool(vq[q], t, cand_weights[q], i, in_ones=q in (0, 3)))
    return GeneratorSet(
        vertex=v,
        s=s,
        ordered_alphas=tuple(ordered_alphas),
        quarters=(pools[0], pools[1], pools[2], pools[3]),
    )


def _pool_size(t: int, k: int, s: int, alpha: int) -> int:
    i = (alpha - t + k + s) // 2
    return math.comb(k, i) * math.comb(t - k, s - i)


# --- exact counting ----------------------------------------------------------


def count_orthogonal(t: int, k: int, s: int) -> int:
    """Number of s-vectors orthogonal to a fixed k-vertex (k, s <= t//2).

    Sums the product of per-quarter binomials C(k, i_q) * C(t-k, s-i_q)
    over ordered (i_1, .., i_4) with sum 2s+2k-t; computed as one
    coefficient of the fourth power of the single-quarter generating
    polynomial.  Zero when 2s+2k-t < 0.
    """
    target = 2 * s + 2 * k - t
    if target < 0:
        return 0
    lo, hi = max(0, s + k - t), min(k, s)
    if hi < lo:
        return 0
    f = [math.comb(k, i) * math.comb(t - k, s - i) for i in range(lo, hi + 1)]
    acc = [1]
    for _ in range(4):
        acc = [
            sum(acc[j] * f[i - j] for j in range(max(0, i - len(f) + 1), min(i, len(acc) - 1) + 1))
            for i in range(len(acc) + len(f) - 1)
        ]
    idx = target - 4 * lo
    return acc[idx] if 0 <= idx < len(acc) else 0


def adjacency_profile(t: int, k: int) -> AdjacencyProfile:
    if not 0 <= k <= t // 2:
        raise KOutOfRange(f"k={k} outside [0, {t // 2}] for t={t}")
    counts = {s: count_orthogonal(t, k, s) for s in range(t // 2 + 1)}
    return AdjacencyProfile(t=t, k=k, counts=counts)


def degree(t: int, k: int) -> int:
    """Total neighbors of a k-vertex over the full vertex set.

    Complementation gives N(k, s) = N(k, t-s) and degree(k) = degree(t-k),
    so only s <= t//2 is counted directly; for t even the s = t/2 class is
    its own complement image and enters once.
    """
    if not 0 <= k <= t:
        raise KOutOfRange(f"k={k} outside [0, {t}]")
    kp = min(k, t - k)
    if t % 2:
        return 2 * sum(count_orthogonal(t, kp, s) for s in range((t - 1) // 2 + 1))
    return 2 * sum(count_orthogonal(t, kp, s) for s in range(t // 2)) + count_orthogonal(
        t, kp, t // 2
    )


def edge_count(t: int) -> int:
    return sum(class_size(t, k) * degree(t, k) for k in range(t + 1)) // 2


# --- adjacency enumeration and sampling --------------------------------------


def _combine_pools(gs: GeneratorSet) -> np.ndarray:
    t = gs.vertex.t
    q1, q2, q3, q4 = (np.asarray(p, dtype=np.uint64) for p in gs.quarters)
    codes = (
        (q1[:, None, None, None] << np.uint64(3 * t))
        | (q2[None, :, None, None] << np.uint64(2 * t))
        | (q3[None, None, :, None] << np.uint64(t))
        | q4[None, None, None, :]
    )
    return codes.ravel()


def adjacency(v: VertexCode) -> np.ndarray:
    """Materialize every neighbor of v as an ascending uint64 code array.

    Generated class by class from the pools; classes with s < t/2 also
    contribute the complements of their vectors.  The pieces are pairwise
    disjoint, so the length equals degree(t, k) with no deduplication.
    Requires 4t <= 64.
    """
    t = v.t
    if 4 * t > 64:
        raise RangeError(f"adjacency materialization needs 4t <= 64 bits, got t={t}")
    base = complement(v) if v.k > t // 2 else v  # same neighbor set
    mask = np.uint64(full_mask(t))
    chunks = []
    for s in s_range(t, base.k):
        for ct in solve_distributions(t, base.k, s):
            for ordered in distinct_orderings(ct):
                block = _combine_pools(generator_set(base, ordered, s))
                chunks.append(block)
                if 2 * s < t:
                    chunks.append(block ^ mask)
    if not chunks:
        return np.empty(0, dtype=np.uint64)
    out = np.concatenate(chunks)
    out.sort()
    return out


def random_vertex(t: int, rng: Random, k: int | None = None) -> VertexCode:
    """Uniform random vertex of G_t, optionally within one k class."""
    if k is None:
        ks = list(range(t + 1))
        k = rng.choices(ks, weights=[class_size(t, kk) for kk in ks])[0]
    qs = []
    for weight in (k, t - k, t - k, k):
        qs.append(sum(1 << b for b in rng.sample(range(t), weight)))
    return VertexCode(t=t, code=join_quarters(qs, t), k=k)


def _sample_pool_mask(ref_quarter: int, t: int, weight: int, i: int, in_ones: bool, rng: Random) -> int:
    """Uniform member of the pool _pool(ref_quarter, t, weight, i, in_ones)."""
    if not in_ones:
        flipped = _sample_pool_mask(
            ref_quarter ^ ((1 << t) - 1), t, t - weight, i, True, rng
        )
        return flipped ^ ((1 << t) - 1)
    ones = [b for b in range(t) if (ref_quarter >> b) & 1]
    zeros = [b for b in range(t) if not (ref_quarter >> b) & 1]
    sel = rng.sample(ones, i) + rng.sample(zeros, weight - i)
    return sum(1 << b for b in sel)


def sample_neighbor(v: VertexCode, rng: Random) -> VertexCode:
    """Uniform random neighbor of v, without materializing the adjacency.

    Draws the class s with weight 2*N(t,k,s) (N alone for the self-paired
    s = t/2 class), an ordered coincidence tuple with weight equal to its
    pool-size product, one pattern per pool, and finally complements on a
    fair coin.  Each neighbor is produced exactly one way before the coin,
    and the coin pairs every generated vector with its complement, so the
    draw is uniform over all degree(t, k) neighbors.
    """
    t = v.t
    base = complement(v) if v.k > t // 2 else v
    k = base.k
    classes = []
    weights = []
    for s in s_range(t, k):
        n = count_orthogonal(t, k, s)
        if n:
            classes.append(s)
            weights.append(2 * n if 2 * s < t else n)
    if not classes:
        raise IsolatedVertex(f"vertex {v.code} has no neighbors in G_{t}")
    s = rng.choices(classes, weights=weights)[0]

    ordered_tuples: list[tuple[int, int, int, int]] = []
    tuple_weights: list[int] = []
    for ct in solve_distributions(t, k, s):
        for ordered in distinct_orderings(ct):
            ordered_tuples.append(ordered)
            tuple_weights.append(math.prod(_pool_size(t, k, s, a) for a in ordered))
    ordered = rng.choices(ordered_tuples, weights=tuple_weights)[0]

    vq = quarters_of(base.code, t)
    cand_weights = (s, t - s, t - s, s)
    qs = []
    for q in range(4):
        i = (ordered[q] - t + k + s) // 2
        qs.append(_sample_pool_mask(vq[q], t, cand_weights[q], i, q in (0, 3), rng))
    code = join_quarters(qs, t)
    kk = s
    if rng.random() < 0.5:
        code ^= full_mask(t)
        kk = t - s
    return VertexCode(t=t, code=code, k=kk)
