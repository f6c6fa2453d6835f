"""Result records for the clique searches.

A search produces one :class:`EssayResult` per independent attempt and a
:class:`SearchReport` wrapping them together with the configuration echo.
Reports are pure data; serialization lives in :mod:`hadclique.files`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from datetime import datetime, timezone

from .graph import Clique

__all__ = ["EssayResult", "SearchReport", "utc_stamp"]


def utc_stamp() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


@dataclass(frozen=True, slots=True)
class EssayResult:
    """One independent search attempt.

    generations is only populated by the genetic search: entry g is the best
    clique size present in the population after generation g, with entry 0
    recording the freshly initialized population.
    """

    index: int
    clique: Clique
    seconds: float
    overflow: bool = False
    generations: tuple[int, ...] = ()

    @property
    def size(self) -> int:
        return len(self.clique)

    @property
    def first_best_generation(self) -> int | None:
        """Earliest generation whose best already matches the final best."""
        if not self.generations:
            return None
        final = self.generations[-1]
        for g, s in enumerate(self.generations):
            if s == final:
                return g
        return None


@dataclass(frozen=True, slots=True)
class SearchReport:
    algorithm: str
    t: int
    config: tuple[tuple[str, object], ...]
    essays: tuple[EssayResult, ...]
    started: str = field(default_factory=utc_stamp)
    finished: str = field(default_factory=utc_stamp)

    @property
    def best(self) -> Clique:
        """Largest clique found; earliest essay wins ties."""
        if not self.essays:
            return Clique(t=self.t, members=())
        return max(self.essays, key=lambda e: (e.size, -e.index)).clique

    @property
    def best_essay(self) -> int | None:
        if not self.essays:
            return None
        return max(self.essays, key=lambda e: (e.size, -e.index)).index

    @property
    def depth(self) -> int:
        """Rows of the partial Hadamard matrix the best clique yields."""
        return len(self.best) + 3

    @property
    def third_threshold(self) -> int:
        """floor(4t/3): the depth guaranteed constructible for every width."""
        return (4 * self.t) // 3

    @property
    def half_threshold(self) -> int:
        """2t: half of the full width 4t."""
        return 2 * self.t

    @property
    def exceeds_third(self) -> bool:
        return self.depth > self.third_threshold

    @property
    def exceeds_half(self) -> bool:
        return self.depth > self.half_threshold

    def sizes(self) -> tuple[int, ...]:
        return tuple(e.size for e in self.essays)
