"""Hamming distance, context-weighted dissimilarity, matrices and ranking.

Every function taking ``ctx`` accepts either a :class:`ContextModel` or a
plain sequence of non-negative attribute weights. The latter is handy for
experiments with hand-picked weights.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .context import CaseVector, ContextModel, case_matrix

__all__ = [
    "DissimilarityMatrix",
    "Grouping",
    "RankingResult",
    "TIE_TOLERANCE",
    "dissimilarity",
    "dissimilarity_matrix",
    "group_with",
    "hamming",
    "rank_by_dissimilarity",
    "value_mismatch",
]

TIE_TOLERANCE = 1e-9


def _weights(ctx) -> np.ndarray:
    if isinstance(ctx, ContextModel):
        return ctx.weights
    w = np.asarray(ctx, dtype=float).ravel()
    if np.any(~np.isfinite(w)) or np.any(w < 0):
        raise ValueError("attribute weights must be finite and non-negative")
    return w


def _values(case, n: int | None = None) -> np.ndarray:
    vals = case.as_array() if isinstance(case, CaseVector) else np.asarray(case, dtype=np.int8)
    if n is not None and vals.shape[0] != n:
        name = getattr(case, "name", "case")
        raise ValueError(f"{name!r} has {vals.shape[0]} values, expected {n}")
    return vals


def value_mismatch(a, b) -> int:
    """1 if two attribute values differ, else 0."""
    return int(bool(a) != bool(b))


def hamming(c_i, c_k) -> int:
    """Number of attributes on which two cases differ."""
    a = _values(c_i)
    b = _values(c_k, a.shape[0])
    return int(np.count_nonzero(a != b))


def dissimilarity(ctx, c_i, c_k) -> float:
    """Sum of the weights of the attributes on which ``c_i`` and ``c_k`` differ."""
    w = _weights(ctx)
    a = _values(c_i, w.shape[0])
    b = _values(c_k, w.shape[0])
    return float(np.sum(w, where=(a != b)))


@dataclass(frozen=True, eq=False)
class DissimilarityMatrix:
    """Symmetric table of pairwise dissimilarities, in bits."""

    names: tuple[str, ...]
    entries: np.ndarray

    def __getitem__(self, pair: tuple[str, str]) -> float:
        a, b = pair
        return float(self.entries[self.names.index(a), self.names.index(b)])

    def __len__(self) -> int:
        return len(self.names)

    def pairs(self):
        """Yield ``(name_i, name_k, distance)`` over the upper triangle, row-major."""
        m = len(self.names)
        for i in range(m):
            for k in range(i + 1, m):
                yield self.names[i], self.names[k], float(self.entries[i, k])


def dissimilarity_matrix(ctx, cases: Sequence[CaseVector]) -> DissimilarityMatrix:
    """All pairwise dissimilarities among ``cases``."""
    w = _weights(ctx)
    cases = list(cases)
    X = case_matrix(cases, w.shape[0])
    mism = X[:, None, :] != X[None, :, :]
    # same reduction as dissimilarity() so matrix and pairwise agree exactly
    D = np.sum(np.broadcast_to(w, mism.shape), axis=-1, where=mism)
    D = np.triu(D, 1)
    D = D + D.T
    D.setflags(write=False)
    return DissimilarityMatrix(tuple(c.name for c in cases), D)


@dataclass(frozen=True)
class RankingResult:
    """Candidates ordered by dissimilarity to ``query``.

    ``ties`` lists groups (two or more names) whose distances agree within
    ``TIE_TOLERANCE``; an empty tuple means the order is strict.
    """

    query: str
    ranked: tuple[tuple[str, float], ...]
    ties: tuple[tuple[str, ...], ...]

    @property
    def winner(self) -> str:
        return self.ranked[0][0]

    @property
    def margin(self) -> float:
        """Gap between the best and second-best candidate (inf for one candidate)."""
        if len(self.ranked) < 2:
            return float("inf")
        return self.ranked[1][1] - self.ranked[0][1]

    def tied_with_winner(self) -> tuple[str, ...]:
        for group in self.ties:
            if group[0] == self.winner:
                return group[1:]
        return ()


def rank_by_dissimilarity(ctx, query: CaseVector, candidates: Sequence[CaseVector]) -> RankingResult:
    """Sort candidates by ascending dissimilarity to ``query``.

    The sort is stable, so exact ties keep input order.
    """
    candidates = list(candidates)
    if not candidates:
        raise ValueError("no candidates to rank")
    dists = [dissimilarity(ctx, query, c) for c in candidates]
    order = sorted(range(len(candidates)), key=lambda i: dists[i])
    ranked = tuple((candidates[i].name, dists[i]) for i in order)

    ties = []
    group = [ranked[0]]
    for item in ranked[1:]:
        if item[1] - group[0][1] <= TIE_TOLERANCE:
            group.append(item)
        else:
            if len(group) > 1:
                ties.append(tuple(name for name, _ in group))
            group = [item]
    if len(group) > 1:
        ties.append(tuple(name for name, _ in group))
    return RankingResult(getattr(query, "name", "query"), ranked, tuple(ties))


class Grouping(NamedTuple):
    choice: str
    distance: float
    tied_with: tuple[str, ...]


def group_with(ctx, target: CaseVector, candidates: Sequence[CaseVector]) -> Grouping:
    """Pick the candidate closest to ``target``.

    ``tied_with`` names any other candidates that are equally close, in
    which case the choice fell to input order.
    """
    r = rank_by_dissimilarity(ctx, target, candidates)
    return Grouping(r.winner, r.ranked[0][1], r.tied_with_winner())
