"""Quarter-by-quarter constructive clique growth.

Instead of materializing neighbor sets, this search builds one candidate
vector at a time, quarter by quarter in random order. For every clique
member a per-quarter coincidence target is sampled from the values that
still admit a completion of the remaining quarters to the orthogonality
total 2t; a small generational search steers toward those targets and
commits the best pattern that keeps every member completable. When no
such pattern exists the previously built quarter is dropped and
re-targeted. Candidate vectors are
drawn from the two heaviest balanced classes, k = floor(t/2) and
floor(t/2) - 1, which carry almost all of the graph.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from functools import lru_cache
from random import Random

from .errors import InvalidSeed
from .graph import (
    Clique,
    VertexCode,
    clique_from_codes,
    coincidence_range,
    decode,
    join_quarters,
    orthogonal_codes,
    quarters_of,
)
from .oracle import verify_clique
from .report import EssayResult, SearchReport, utc_stamp

__all__ = [
    "FastConfig",
    "QuarterConstraint",
    "completions",
    "feasible_targets",
    "buildgrapas",
    "run_fast",
    "run_many",
]


@dataclass(frozen=True, slots=True)
class FastConfig:
    """Knobs for the constructive search; None picks the t-scaled default."""

    t: int
    rng_seed: int = 0
    attempts_per_vector: int = 10
    inner_population: int | None = None
    inner_generations: int | None = None
    quarter_backtracks: int | None = None
    stall_limit: int | None = None

    def __post_init__(self) -> None:
        if self.t < 1:
            raise ValueError(f"t must be positive, got {self.t}")
        if self.attempts_per_vector < 1:
            raise ValueError("attempts_per_vector must be positive")
        for name in ("inner_population", "inner_generations", "quarter_backtracks", "stall_limit"):
            val = getattr(self, name)
            if val is not None and val < 1:
                raise ValueError(f"{name} must be positive when given")

    @property
    def population(self) -> int:
        return self.inner_population if self.inner_population is not None else 4 * self.t

    @property
    def generations(self) -> int:
        return self.inner_generations if self.inner_generations is not None else 4 * self.t

    @property
    def backtracks(self) -> int:
        return self.quarter_backtracks if self.quarter_backtracks is not None else self.t

    @property
    def stalls(self) -> int:
        return self.stall_limit if self.stall_limit is not None else self.t


@dataclass(frozen=True, slots=True)
class QuarterConstraint:
    """One member's playable coincidence targets for the quarter at hand.

    weights[i] counts the ordered completions of the remaining quarters
    should feasible[i] be committed now; targets are sampled proportionally.
    """

    member: int
    ladder: tuple[int, ...]
    feasible: tuple[int, ...]
    weights: tuple[int, ...]


@lru_cache(maxsize=None)
def _completions(lo: int, hi: int, r: int, need: int) -> int:
    if r == 0:
        return 1 if need == 0 else 0
    total = 0
    for v in range(lo, hi + 1, 2):
        if v <= need:
            total += _completions(lo, hi, r - 1, need - v)
    return total


def completions(ladder: range, r: int, need: int) -> int:
    """Ordered r-tuples over the ladder summing to need."""
    if len(ladder) == 0:
        return 1 if r == 0 and need == 0 else 0
    return _completions(ladder.start, ladder[-1], r, need)


def feasible_targets(
    ladder: range, committed: int, remaining_after: int, total: int
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Ladder values still playable now, with their completion counts.

    A value c is playable when the remaining_after quarters can make up
    total - committed - c from the same ladder.
    """
    values: list[int] = []
    weights: list[int] = []
    for c in ladder:
        n = completions(ladder, remaining_after, total - committed - c)
        if n > 0:
            values.append(c)
            weights.append(n)
    return tuple(values), tuple(weights)


def _random_mask(t: int, weight: int, rng: Random) -> int:
    mask = 0
    for b in rng.sample(range(t), weight):
        mask |= 1 << b
    return mask


def _rebalance(mask: int, t: int, weight: int, rng: Random) -> int:
    ones = [b for b in range(t) if mask >> b & 1]
    zeros = [b for b in range(t) if not mask >> b & 1]
    rng.shuffle(ones)
    rng.shuffle(zeros)
    while len(ones) > weight:
        mask &= ~(1 << ones.pop())
    while len(ones) < weight:
        b = zeros.pop()
        mask |= 1 << b
        ones.append(b)
    return mask


def _inner_search(
    t: int,
    weight: int,
    member_quarters: list[int],
    targets: list[int],
    ladders: list[range],
    committed: list[int],
    remaining_after: int,
    population: int,
    generations: int,
    rng: Random,
) -> int | None:
    """Find a t-bit mask of the given weight for the current quarter.

    Coincidence of the mask with member quarter u is t - popcount(mask ^ u).
    The search steers toward the sampled targets (fitness is minus the
    total target miss) but a commit only requires validity: after booking
    the mask's coincidences, every member's remaining quarters must still
    be able to reach the orthogonality total 2t. A mask hitting all targets
    exactly returns immediately; otherwise the best valid mask seen over
    the whole run is returned, or None when no valid mask surfaced. Plain
    generational scheme: single elite, 2-tournament parents, single-point
    crossover rebalanced back to the required weight, swap mutation.
    """

    def coincidences(mask: int) -> list[int]:
        return [t - ((mask ^ uq).bit_count()) for uq in member_quarters]

    def fitness(cs: list[int]) -> int:
        return -sum(abs(c - tgt) for c, tgt in zip(cs, targets))

    def valid(cs: list[int]) -> bool:
        return all(
            completions(lad, remaining_after, 2 * t - com - c) > 0
            for lad, com, c in zip(ladders, committed, cs)
        )

    best_valid: int | None = None
    best_valid_fit = None
    pop = [_random_mask(t, weight, rng) for _ in range(population)]
    for _ in range(generations + 1):
        scored = []
        for m in pop:
            cs = coincidences(m)
            f = fitness(cs)
            if f == 0 and valid(cs):
                return m
            scored.append((f, m))
            if (best_valid_fit is None or f > best_valid_fit) and valid(cs):
                best_valid, best_valid_fit = m, f
        scored.sort(reverse=True)
        elite = scored[0][1]
        nxt = [elite]
        while len(nxt) < population:
            pa = max(rng.choice(scored), rng.choice(scored))[1]
            pb = max(rng.choice(scored), rng.choice(scored))[1]
            cut = rng.randrange(t + 1)
            low = (1 << cut) - 1
            child = (pa & ~low) | (pb & low)
            child = _rebalance(child, t, weight, rng)
            if rng.random() < 0.5 and 0 < weight < t:
                ones = [b for b in range(t) if child >> b & 1]
                zeros = [b for b in range(t) if not child >> b & 1]
                child = (child ^ (1 << rng.choice(ones))) | (1 << rng.choice(zeros))
            nxt.append(child)
        pop = nxt
    return best_valid


def _constraints(
    codes: list[int],
    ladders: list[range],
    committed: list[int],
    t: int,
    remaining_after: int,
) -> list[QuarterConstraint] | None:
    out: list[QuarterConstraint] = []
    for code, ladder, com in zip(codes, ladders, committed):
        values, weights = feasible_targets(ladder, com, remaining_after, 2 * t)
        if not values:
            return None
        out.append(
            QuarterConstraint(member=code, ladder=tuple(ladder), feasible=values, weights=weights)
        )
    return out


def buildgrapas(c: Clique, k: int, cfg: FastConfig, rng: Random) -> VertexCode | None:
    """Try to construct one new class-k vertex orthogonal to all of c.

    The candidate uses s = k ones in its outer quarters. Quarters are built
    in random order; each member's coincidence target for the current
    quarter is sampled from its still-completable ladder values weighted by
    ordered-completion counts, and the inner generational search aims for
    the targets while any committed quarter must leave every member
    completable to the total 2t (which on the last quarter forces exact
    closure, hence orthogonality). When no valid quarter is found the
    previous quarter is deleted and rebuilt, at most cfg.backtracks times
    per attempt, with cfg.attempts_per_vector attempts overall. Returns
    None when every attempt fails; a returned vertex is always orthogonal
    to every member.
    """
    t = cfg.t
    if not 0 <= k <= t // 2:
        return None
    s = k
    cand_weights = (s, t - s, t - s, s)
    codes = [v.code for v in c.members]
    quarters = [quarters_of(code, t) for code in codes]
    ladders = [coincidence_range(t, v.k, s) for v in c.members]
    for ladder in ladders:
        if not (4 * ladder.start <= 2 * t <= 4 * ladder[-1]):
            return None

    for _ in range(cfg.attempts_per_vector):
        order = [0, 1, 2, 3]
        rng.shuffle(order)
        built: dict[int, int] = {}
        backtracks = 0
        pos = 0
        while 0 <= pos < 4:
            q = order[pos]
            committed = [
                sum(t - (built[b] ^ qs[b]).bit_count() for b in built) for qs in quarters
            ]
            cons = _constraints(codes, ladders, committed, t, remaining_after=3 - pos)
            mask = None
            if cons is not None:
                targets = [rng.choices(qc.feasible, qc.weights)[0] for qc in cons]
                mask = _inner_search(
                    t,
                    cand_weights[q],
                    [qs[q] for qs in quarters],
                    targets,
                    ladders,
                    committed,
                    3 - pos,
                    cfg.population,
                    cfg.generations,
                    rng,
                )
            if mask is None:
                if pos == 0 or backtracks >= cfg.backtracks:
                    pos = -1  # attempt failed
                else:
                    backtracks += 1
                    pos -= 1
                    del built[order[pos]]
                continue
            built[q] = mask
            pos += 1
        if pos == 4:
            code = join_quarters((built[0], built[1], built[2], built[3]), t)
            v = decode(code, t)
            assert all(orthogonal_codes(code, m, t) for m in codes)
            return v
    return None


def run_fast(seed: Clique, cfg: FastConfig) -> Clique:
    """Grow seed by repeated vector construction; the seed is kept verbatim.

    The two candidate classes are tried heaviest first; within a class,
    construction repeats until cfg.stalls consecutive failures. The seed
    must be a valid clique of the configured t.
    """
    if seed.t != cfg.t:
        raise InvalidSeed(f"seed is a G_{seed.t} clique but the search is configured for t={cfg.t}")
    rep = verify_clique(seed)
    if not rep:
        raise InvalidSeed(rep.message)
    rng = Random(cfg.rng_seed)
    t = cfg.t
    members = list(seed.members)
    for k in [x for x in (t // 2, t // 2 - 1) if x >= 0]:
        stall = 0
        while stall < cfg.stalls:
            v = buildgrapas(Clique(t=t, members=tuple(members)), k, cfg, rng)
            if v is None:
                stall += 1
            else:
                members.append(v)
                stall = 0
    return clique_from_codes(t, [v.code for v in members])


def run_many(
    seed: Clique, cfg: FastConfig, essays: int, jobs: int = 1, time_limit: float | None = None
) -> SearchReport:
    """Independent run_fast calls; run i uses rng_seed + i.

    Same wave semantics as the other searches: deterministic regardless of
    jobs, time_limit checked between runs/waves, at least one run always
    completes.
    """
    if essays < 1:
        raise ValueError(f"essays must be positive, got {essays}")

    def one(i: int) -> EssayResult:
        begin = time.perf_counter()
        c = run_fast(seed, replace(cfg, rng_seed=cfg.rng_seed + i))
        return EssayResult(index=i, clique=c, seconds=time.perf_counter() - begin)

    started = utc_stamp()
    clock = time.perf_counter()
    collected: list[EssayResult] = []
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            for at in range(0, essays, jobs):
                if time_limit is not None and time.perf_counter() - clock > time_limit and collected:
                    break
                collected.extend(pool.map(one, range(at, min(at + jobs, essays))))
    else:
        for i in range(essays):
            if time_limit is not None and time.perf_counter() - clock > time_limit and collected:
                break
            collected.append(one(i))
    collected.sort(key=lambda e: e.index)
    return SearchReport(
        algorithm="fast",
        t=cfg.t,
        config=(
            ("rng_seed", cfg.rng_seed),
            ("essays", essays),
            ("attempts_per_vector", cfg.attempts_per_vector),
            ("inner_population", cfg.population),
            ("inner_generations", cfg.generations),
            ("quarter_backtracks", cfg.backtracks),
            ("stall_limit", cfg.stalls),
            ("seed_size", len(seed)),
        ),
        essays=tuple(collected),
        started=started,
        finished=utc_stamp(),
    )
