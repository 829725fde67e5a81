"""Entropy weights for boolean attributes.

An attribute that is 1 with probability ``p`` gets the weight

    h(p) = -log2(1 - 2p + 2p^2)

which is 0 for constant attributes (p in {0, 1}) and peaks at 1 bit for
p = 1/2. The quantity ``1 - 2p + 2p^2`` is the fraction of the ideal
decision-tree path length that remains after splitting on the attribute;
see :func:`expected_path_length`.

All functions accept scalars or array-likes and are vectorized with numpy.
Scalars in give Python floats out.
"""
from __future__ import annotations

import math

import numpy as np

__all__ = [
    "attribute_weight",
    "check_probability",
    "expected_path_length",
    "joint_expected_path_length",
    "residual_fraction",
    "similarity_weight",
]

_INV_LN2 = 1.0 / math.log(2.0)


def check_probability(p, name: str = "p") -> np.ndarray:
    """Return ``p`` as a float array, raising ``ValueError`` outside [0, 1]."""
    arr = np.asarray(p, dtype=float)
    if arr.size and not np.all((arr >= 0.0) & (arr <= 1.0)):
        bad = arr[~((arr >= 0.0) & (arr <= 1.0))].ravel()[0]
        raise ValueError(f"{name} must lie in [0, 1], got {bad!r}")
    return arr


def _check_count(m) -> float:
    if isinstance(m, bool) or int(m) != m or m < 1:
        raise ValueError(f"case count must be a positive integer, got {m!r}")
    return float(m)


def _out(arr: np.ndarray):
    return float(arr) if arr.ndim == 0 else arr


def residual_fraction(p):
    """``1 - 2p + 2p^2``: probability that two random cases agree on the attribute.

    Bounded below by 0.5 (at p = 1/2), so its logarithm never diverges.
    """
    arr = check_probability(p)
    return _out(1.0 - 2.0 * arr + 2.0 * arr * arr)


def attribute_weight(p):
    """Entropy weight ``-log2(1 - 2p + 2p^2)`` in bits, in [0, 1].

    >>> round(attribute_weight(0.25), 3)
    0.678
    >>> attribute_weight(0.5)
    1.0
    """
    arr = check_probability(p)
    # argument >= 0.5 on [0, 1]; no guard needed
    w = -np.log(1.0 - 2.0 * arr + 2.0 * arr * arr) * _INV_LN2
    # log(1) is exactly 0 but the sign flip leaves -0.0 behind
    return _out(w + 0.0)


def similarity_weight(p):
    """Additive similarity contribution, the negated entropy weight."""
    arr = check_probability(p)
    return _out(-np.asarray(attribute_weight(arr)) + 0.0)


def expected_path_length(p, m):
    """Expected remaining decision-tree path length after splitting on one attribute.

    ``m`` equiprobable cases need ``log2 m`` bits on average; splitting on an
    attribute with P(1) = p leaves ``(1 - 2p + 2p^2) log2 m``.
    """
    frac = np.asarray(residual_fraction(p))
    return _out(frac * math.log2(_check_count(m)))


def joint_expected_path_length(p1, p2, m):
    """Remaining path length after splitting on two independent attributes."""
    f1 = np.asarray(residual_fraction(p1))
    f2 = np.asarray(residual_fraction(p2))
    return _out(f1 * f2 * math.log2(_check_count(m)))
