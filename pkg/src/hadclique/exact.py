"""Random greedy clique search with exact candidate filtering.

Each essay starts from a random vertex, materializes its full neighbor set
once, then repeatedly picks a uniform candidate and intersects the pool with
that candidate's neighborhood via a vectorized popcount. The returned clique
is maximal by construction: the essay only stops when the pool is empty.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from random import Random

import numpy as np

from .errors import CandidateOverflow, InvalidClique
from .graph import Clique, VertexCode, adjacency, clique_from_codes, degree, random_vertex
from .oracle import verify_clique
from .report import EssayResult, SearchReport, utc_stamp

__all__ = ["ExactSearchConfig", "run_exact", "extend_exact"]

DEFAULT_CANDIDATE_CAP = 200_000_000


@dataclass(frozen=True, slots=True)
class ExactSearchConfig:
    t: int
    essays: int = 10
    rng_seed: int = 0
    start_vertex: VertexCode | None = None
    candidate_cap: int = DEFAULT_CANDIDATE_CAP

    def __post_init__(self) -> None:
        if self.t < 1:
            raise ValueError(f"t must be positive, got {self.t}")
        if self.essays < 1:
            raise ValueError(f"essays must be positive, got {self.essays}")
        if self.candidate_cap < 1:
            raise ValueError(f"candidate_cap must be positive, got {self.candidate_cap}")
        if self.start_vertex is not None and self.start_vertex.t != self.t:
            raise ValueError("start_vertex belongs to a different G_t")


def _random_start(t: int, rng: Random) -> VertexCode:
    # restrict to classes that actually have neighbors; at odd t the
    # extreme classes k=0 and k=t are isolated and an essay started there
    # could never grow
    ks = [k for k in range(t // 2 + 1) if degree(t, k) > 0]
    if not ks:
        ks = list(range(t // 2 + 1))
    return random_vertex(t, rng, k=rng.choice(ks))


def _filter_pool(pool: np.ndarray, code: int, t: int) -> np.ndarray:
    return pool[np.bitwise_count(pool ^ np.uint64(code)) == 2 * t]


def _greedy_essay(cfg: ExactSearchConfig, index: int) -> EssayResult:
    rng = Random(cfg.rng_seed + index)
    t = cfg.t
    begin = time.perf_counter()
    start = cfg.start_vertex if cfg.start_vertex is not None else _random_start(t, rng)
    members = [start.code]
    if degree(t, start.k) > cfg.candidate_cap:
        return EssayResult(
            index=index,
            clique=clique_from_codes(t, members),
            seconds=time.perf_counter() - begin,
            overflow=True,
        )
    pool = adjacency(start)
    while pool.size:
        pick = int(pool[rng.randrange(pool.size)])
        members.append(pick)
        pool = _filter_pool(pool, pick, t)
    return EssayResult(
        index=index,
        clique=clique_from_codes(t, members),
        seconds=time.perf_counter() - begin,
    )


def run_exact(cfg: ExactSearchConfig, jobs: int = 1, time_limit: float | None = None) -> SearchReport:
    """Run cfg.essays independent greedy essays and collect the results.

    Essay i draws all randomness from Random(rng_seed + i), so results are
    reproducible and independent of jobs. A start vertex whose neighbor set
    would exceed candidate_cap aborts that essay with overflow=True rather
    than raising. time_limit is checked between essays: once exceeded, the
    remaining essays are skipped.
    """
    started = utc_stamp()
    clock = time.perf_counter()
    results: list[EssayResult] = []
    indices = list(range(cfg.essays))
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            for at in range(0, cfg.essays, jobs):
                if time_limit is not None and time.perf_counter() - clock > time_limit and results:
                    break
                wave = indices[at:at + jobs]
                results.extend(pool.map(lambda i: _greedy_essay(cfg, i), wave))
    else:
        for i in indices:
            if time_limit is not None and time.perf_counter() - clock > time_limit and results:
                break
            results.append(_greedy_essay(cfg, i))
    results.sort(key=lambda e: e.index)
    return SearchReport(
        algorithm="exact",
        t=cfg.t,
        config=(
            ("essays", cfg.essays),
            ("rng_seed", cfg.rng_seed),
            ("start_vertex", "-" if cfg.start_vertex is None else cfg.start_vertex.code),
            ("candidate_cap", cfg.candidate_cap),
        ),
        essays=tuple(results),
        started=started,
        finished=utc_stamp(),
    )


def extend_exact(c: Clique, rng: Random, candidate_cap: int = DEFAULT_CANDIDATE_CAP) -> Clique:
    """Greedily extend c to a maximal clique containing it.

    An empty c starts a fresh essay from a random vertex. The input members
    are validated first and an invalid clique is rejected; if the first
    member's class is larger than candidate_cap the pool cannot be
    materialized and CandidateOverflow is raised.
    """
    rep = verify_clique(c)
    if not rep:
        raise InvalidClique(rep.message)
    t = c.t
    if c.members:
        anchor = c.members[0]
        members = [v.code for v in c.members]
    else:
        anchor = _random_start(t, rng)
        members = [anchor.code]
    if degree(t, anchor.k) > candidate_cap:
        raise CandidateOverflow(
            f"class k={anchor.k} at t={t} has {degree(t, anchor.k)} neighbors, cap is {candidate_cap}"
        )
    pool = adjacency(anchor)
    for code in members[1:]:
        pool = _filter_pool(pool, code, t)
    while pool.size:
        pick = int(pool[rng.randrange(pool.size)])
        members.append(pick)
        pool = _filter_pool(pool, pick, t)
    return clique_from_codes(t, members)
