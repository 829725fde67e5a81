"""Cases, attribute schemas and frozen context models."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .weights import attribute_weight, check_probability

__all__ = [
    "AttributeSchema",
    "CaseVector",
    "ContextModel",
    "build_context",
    "case_matrix",
    "estimate_probabilities",
]


def _readonly(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class AttributeSchema:
    """Ordered, unique attribute names."""

    names: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        seen = set()
        for i, name in enumerate(names):
            if not isinstance(name, str) or not name:
                raise ValueError(f"attribute {i} has an empty or non-string name")
            if name in seen:
                raise ValueError(f"duplicate attribute name {name!r}")
            seen.add(name)

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)


@dataclass(frozen=True)
class CaseVector:
    """A named case: one 0/1 value per attribute.

    Values are normalized to a tuple of ints. Booleans and numpy integers
    are accepted; anything other than 0 or 1 is rejected.
    """

    name: str
    values: tuple[int, ...]

    def __post_init__(self):
        vals = []
        for j, v in enumerate(self.values):
            if isinstance(v, (float, np.floating)) and v != int(v):
                raise ValueError(f"case {self.name!r}: value {v!r} at position {j} is not 0 or 1")
            try:
                iv = int(v)
            except (TypeError, ValueError):
                raise ValueError(
                    f"case {self.name!r}: value {v!r} at position {j} is not 0 or 1"
                ) from None
            if iv not in (0, 1):
                raise ValueError(f"case {self.name!r}: value {v!r} at position {j} is not 0 or 1")
            vals.append(iv)
        object.__setattr__(self, "values", tuple(vals))

    def __len__(self) -> int:
        return len(self.values)

    def as_array(self) -> np.ndarray:
        return np.array(self.values, dtype=np.int8)


def case_matrix(cases: Iterable[CaseVector], n: int | None = None) -> np.ndarray:
    """Stack cases into an ``(m, n)`` int8 array, checking they all have length ``n``."""
    cases = list(cases)
    if n is None:
        if not cases:
            return np.zeros((0, 0), dtype=np.int8)
        n = len(cases[0])
    for c in cases:
        if len(c) != n:
            raise ValueError(f"case {c.name!r} has {len(c)} values, expected {n}")
    if not cases:
        return np.zeros((0, n), dtype=np.int8)
    return np.array([c.values for c in cases], dtype=np.int8).reshape(len(cases), n)


def estimate_probabilities(cases: Sequence[CaseVector]) -> np.ndarray:
    """Relative frequency of 1 for each attribute over ``cases``.

    Counts are accumulated as integers and divided once, so the result is
    independent of case order.
    """
    cases = list(cases)
    if not cases:
        raise ValueError("cannot estimate probabilities from an empty case collection")
    X = case_matrix(cases)
    counts = X.sum(axis=0, dtype=np.int64)
    return counts / len(cases)


@dataclass(frozen=True, eq=False)
class ContextModel:
    """Per-attribute probabilities and entropy weights of a case collection.

    Build with :func:`build_context` or :meth:`from_probabilities`; the
    weights are always derived from the probabilities. Arrays are read-only.
    """

    schema: AttributeSchema
    probabilities: np.ndarray
    case_count: int
    weights: np.ndarray = field(init=False)

    def __post_init__(self):
        p = np.array(check_probability(self.probabilities, "probability"), dtype=float).ravel()
        if p.shape[0] != len(self.schema):
            raise ValueError(
                f"{p.shape[0]} probabilities given for {len(self.schema)} attributes"
            )
        if isinstance(self.case_count, bool) or int(self.case_count) != self.case_count \
                or self.case_count < 1:
            raise ValueError(f"case_count must be a positive integer, got {self.case_count!r}")
        object.__setattr__(self, "case_count", int(self.case_count))
        object.__setattr__(self, "probabilities", _readonly(p))
        object.__setattr__(self, "weights", _readonly(np.asarray(attribute_weight(p), dtype=float).reshape(p.shape)))

    @classmethod
    def from_probabilities(cls, schema, probabilities, case_count: int = 1) -> "ContextModel":
        if not isinstance(schema, AttributeSchema):
            schema = AttributeSchema(tuple(schema))
        return cls(schema, probabilities, case_count)

    @property
    def n_attributes(self) -> int:
        return len(self.schema)

    @property
    def total_weight(self) -> float:
        """Largest possible dissimilarity in this context."""
        return float(self.weights.sum())

    def weight_of(self, attribute: str) -> float:
        return float(self.weights[self.schema.index(attribute)])

    def __eq__(self, other):
        if not isinstance(other, ContextModel):
            return NotImplemented
        return (
            self.schema == other.schema
            and self.case_count == other.case_count
            and np.array_equal(self.probabilities, other.probabilities)
        )

    def __repr__(self):
        p = ", ".join(f"{n}={v:.3g}" for n, v in zip(self.schema.names, self.probabilities))
        return f"ContextModel(m={self.case_count}, {p})"


def build_context(schema, cases: Sequence[CaseVector]) -> ContextModel:
    """Freeze the statistics of ``cases`` into a :class:`ContextModel`.

    A case that will later be compared may itself be part of ``cases``;
    leave it out if it should not influence the weights.
    """
    if not isinstance(schema, AttributeSchema):
        schema = AttributeSchema(tuple(schema))
    cases = list(cases)
    for c in cases:
        if len(c) != len(schema):
            raise ValueError(
                f"case {c.name!r} has {len(c)} values but the schema has {len(schema)} attributes"
            )
    p = estimate_probabilities(cases)
    return ContextModel(schema, p, len(cases))
