"""Dimension-generic dense vector primitives.

The rest of the package moves vectors of anchor distances around, so the
operation inventory here is deliberately small: add, scale, dot, normalize,
plus the sub/norm/dist conveniences built from them. Every function
validates its inputs, never mutates them, and returns fresh float64 data.
Vector length is a runtime value (one entry per anchor).
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from .errors import DegenerateVectorError, DimensionMismatchError

# Near-zero threshold for normalization; comfortably above double rounding
# noise for coordinate magnitudes up to ~1e3.
EPS_NORM = 1e-12

VecLike = Sequence[float] | np.ndarray


def asvec(u: VecLike) -> np.ndarray:
    """Validate a vector: 1-d, length >= 1, all components finite."""
    arr = np.asarray(u, dtype=float)
    if arr.ndim != 1 or arr.shape[0] < 1:
        raise DimensionMismatchError(f"expected a 1-d vector, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("vector components must be finite")
    return arr


def _pair(u: VecLike, v: VecLike) -> tuple[np.ndarray, np.ndarray]:
    a = asvec(u)
    b = asvec(v)
    if a.shape[0] != b.shape[0]:
        raise DimensionMismatchError(
            f"vector length mismatch: {a.shape[0]} vs {b.shape[0]}"
        )
    return a, b


def add(u: VecLike, v: VecLike) -> np.ndarray:
    """Componentwise sum of two equal-length vectors."""
    a, b = _pair(u, v)
    return a + b


def sub(u: VecLike, v: VecLike) -> np.ndarray:
    """Componentwise difference u - v."""
    a, b = _pair(u, v)
    return a - b


def scale(k: float, u: VecLike) -> np.ndarray:
    """Scalar multiple k * u."""
    kf = float(k)
    if not math.isfinite(kf):
        raise ValueError("scale factor must be finite")
    return kf * asvec(u)


def dot(u: VecLike, v: VecLike) -> float:
    """Euclidean inner product."""
    a, b = _pair(u, v)
    return float(a @ b)


def norm(u: VecLike) -> float:
    """Euclidean norm."""
    a = asvec(u)
    return math.sqrt(float(a @ a))


def dist(u: VecLike, v: VecLike) -> float:
    """Euclidean distance between two equal-length vectors."""
    a, b = _pair(u, v)
    d = a - b
    return math.sqrt(float(d @ d))


def normalize(u: VecLike) -> np.ndarray:
    """u / ||u||; raises DegenerateVectorError if ||u|| <= EPS_NORM."""
    a = asvec(u)
    n = math.sqrt(float(a @ a))
    if n <= EPS_NORM:
        raise DegenerateVectorError(f"cannot normalize vector with norm {n:.3e}")
    return a / n
