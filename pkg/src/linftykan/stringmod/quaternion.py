"""Unit quaternions as numpy arrays (..., 4) ordered (w, x, y, z)."""
from __future__ import annotations

import numpy as np

__all__ = ["qmul", "qconj", "qexp", "qnorm", "imag", "bracket", "pairing0", "NonUnitQuaternionError"]


class NonUnitQuaternionError(ValueError):
    pass


def qmul(p, q):
    p, q = np.asarray(p, float), np.asarray(q, float)
    w1, x1, y1, z1 = np.moveaxis(p, -1, 0)
    w2, x2, y2, z2 = np.moveaxis(q, -1, 0)
    return np.stack([w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
                     w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
                     w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
                     w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2], axis=-1)


def qconj(q):
    q = np.asarray(q, float)
    return q * np.array([1.0, -1.0, -1.0, -1.0])


def qnorm(q):
    return np.linalg.norm(np.asarray(q, float), axis=-1)


def qexp(v):
    """exp of a pure imaginary quaternion given by its vector part (..., 3)."""
    v = np.asarray(v, float)
    r = np.linalg.norm(v, axis=-1)
    # sin(r)/r with a series near 0
    small = r < 1e-8
    sinc = np.where(small, 1.0 - r * r / 6.0, np.sin(r) / np.where(small, 1.0, r))
    return np.concatenate([np.cos(r)[..., None], sinc[..., None] * v], axis=-1)


def imag(q):
    return np.asarray(q, float)[..., 1:]


def bracket(X, Y):
    """[X, Y] for imaginary vectors: XY - YX = 2 X x Y."""
    return 2.0 * np.cross(X, Y)


def pairing0(X, Y):
    """Base invariant pairing -Re(XY) = X . Y on imaginary quaternions."""
    return np.sum(np.asarray(X) * np.asarray(Y), axis=-1)
