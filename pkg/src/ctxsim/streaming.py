"""Online estimation of attribute probabilities.

The first observed case initializes the estimates; each later case moves
them by the step ``alpha = 1/m``, which computes the running mean exactly.
Once ``m`` reaches ``alpha_floor_count`` the step stops shrinking, so an
observation ``t`` steps old carries weight at most ``(1 - 1/M)**t`` and the
estimator follows drifting data.
"""
from __future__ import annotations

import threading

import numpy as np

from .context import AttributeSchema, CaseVector, ContextModel

__all__ = ["NO_FLOOR", "StreamingEstimator", "new_estimator"]

NO_FLOOR = None
DEFAULT_ALPHA_FLOOR = 100


class StreamingEstimator:
    """Single-writer running estimate of P(attribute = 1).

    Concurrent calls to :meth:`observe` raise ``RuntimeError`` instead of
    silently corrupting the state. Snapshots are independent copies.
    """

    def __init__(self, schema, alpha_floor_count: int | None = DEFAULT_ALPHA_FLOOR):
        if not isinstance(schema, AttributeSchema):
            schema = AttributeSchema(tuple(schema))
        if alpha_floor_count is not None:
            if isinstance(alpha_floor_count, bool) or int(alpha_floor_count) != alpha_floor_count \
                    or alpha_floor_count < 1:
                raise ValueError(
                    f"alpha_floor_count must be a positive integer or None, got {alpha_floor_count!r}"
                )
            alpha_floor_count = int(alpha_floor_count)
        self.schema = schema
        self.alpha_floor_count = alpha_floor_count
        # (estimates, count) swapped as one object so readers see a consistent pair
        self._state: tuple[np.ndarray | None, int] = (None, 0)
        self._lock = threading.Lock()

    @property
    def observed_count(self) -> int:
        return self._state[1]

    def __repr__(self):
        return (f"StreamingEstimator(n={len(self.schema)}, m={self.observed_count}, "
                f"alpha_floor_count={self.alpha_floor_count})")

    def step_size(self, m: int) -> float:
        """Step used for the ``m``-th observation (m >= 2)."""
        if self.alpha_floor_count is not None:
            m = min(m, self.alpha_floor_count)
        return 1.0 / m

    def observe(self, case) -> "StreamingEstimator":
        x = case.as_array() if isinstance(case, CaseVector) else CaseVector("case", tuple(case)).as_array()
        if x.shape[0] != len(self.schema):
            name = getattr(case, "name", "case")
            raise ValueError(f"{name!r} has {x.shape[0]} values, expected {len(self.schema)}")
        if not self._lock.acquire(blocking=False):
            raise RuntimeError("StreamingEstimator.observe called concurrently; it is single-writer")
        try:
            prev, m = self._state
            if prev is None:
                self._state = (x.astype(float), 1)
            else:
                m += 1
                alpha = self.step_size(m)
                # all attributes in one vector step; clip absorbs last-ulp overshoot
                est = (1.0 - alpha) * prev + alpha * x
                np.clip(est, 0.0, 1.0, out=est)
                self._state = (est, m)
        finally:
            self._lock.release()
        return self

    def observe_many(self, cases) -> "StreamingEstimator":
        for c in cases:
            self.observe(c)
        return self

    def current_probabilities(self) -> np.ndarray:
        est = self._state[0]
        if est is None:
            raise ValueError("no observations yet; probabilities are undefined")
        return est.copy()

    def snapshot_context(self) -> ContextModel:
        est, m = self._state
        if est is None:
            raise ValueError("no observations yet; cannot snapshot a context")
        return ContextModel(self.schema, est.copy(), m)


def new_estimator(schema, alpha_floor_count: int | None = DEFAULT_ALPHA_FLOOR) -> StreamingEstimator:
    return StreamingEstimator(schema, alpha_floor_count)
