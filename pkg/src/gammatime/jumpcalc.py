"""Deterministic calculus of finite pure-jump paths.

A path is a finite list of (time, height) pairs evaluated right-continuously
with left limits (rcll): x_t = sum h_n 1{u_n <= t}.  The module provides
amassing, integration against the path, compounding with reward sequences,
phi-variation, composition with smooth functions, modulation by a C^1 factor,
and the rcll inverse of a nondecreasing path.  Paths are finite truncations;
summability of an infinite jump sequence is the caller's responsibility.

Evaluation uses binary search over the sorted jump times, O(log n) per query.
"""

import io
import math

import numpy as np

from .errors import DomainError, PreconditionError

INF = math.inf  # the one +infinity sentinel used by inverses and markers


class JumpPath:
    """Finite rcll pure-jump path with strictly increasing positive times."""

    def __init__(self, times, heights):
        t = np.asarray(times, dtype=float)
        h = np.asarray(heights, dtype=float)
        if t.ndim != 1 or h.ndim != 1 or t.size != h.size:
            raise PreconditionError("times and heights must be 1-d and equal length")
        if t.size and (np.any(t <= 0.0) or np.any(np.diff(t) <= 0.0)):
            raise PreconditionError("times must be strictly increasing and positive")
        self.times = t
        self.heights = h
        self._cum = np.concatenate(([0.0], np.cumsum(h)))

    def __len__(self):
        return self.times.size

    def __eq__(self, other):
        return (
            isinstance(other, JumpPath)
            and np.array_equal(self.times, other.times)
            and np.array_equal(self.heights, other.heights)
        )

    def amass(self, t):
        """x_t = sum h_n 1{u_n <= t}, rcll in t."""
        idx = np.searchsorted(self.times, t, side="right")
        out = self._cum[idx]
        return float(out) if np.isscalar(t) else out

    def amass_left(self, t):
        """Left limit x_{t-}."""
        idx = np.searchsorted(self.times, t, side="left")
        out = self._cum[idx]
        return float(out) if np.isscalar(t) else out

    def delta(self, t):
        """Jump size at t: x_t - x_{t-}."""
        return self.amass(t) - self.amass_left(t)

    @property
    def total_mass(self):
        return float(self._cum[-1])


def amass(path, t):
    if np.any(np.asarray(t) < 0.0):
        raise DomainError("amass requires t >= 0")
    return path.amass(t)


def integrate(path, f):
    """Path integral x(f) = sum h_n f(u_n).

    f must be defined (finite) at every jump time.
    """
    if len(path) == 0:
        return 0.0
    vals = np.asarray(f(path.times), dtype=float)
    if not np.all(np.isfinite(vals)):
        raise DomainError("integrand undefined (non-finite) at a jump time")
    return float(np.dot(path.heights, vals))


def compound(path, k):
    """New path with heights k_n h_n at the same jump times."""
    k = np.asarray(k, dtype=float)
    if k.shape != path.heights.shape:
        raise PreconditionError("reward sequence length must match the jump count")
    return JumpPath(path.times, k * path.heights)


def variation(path, phi):
    """phi-variation path: jumps phi(h_n) at the same times; phi(0)=0 required.

    For phi(x)=x^2 this is the quadratic variation, the refinement limit of
    sum (x_{t_k} - x_{t_{k-1}})^2 over partitions.
    """
    if phi(0.0) != 0.0:
        raise PreconditionError("variation requires phi(0) = 0")
    return JumpPath(path.times, [phi(h) for h in path.heights])


def compose_smooth(path, phi):
    """Path of the composition phi(x_t): jump at u_n is phi(x_{u_n}) - phi(x_{u_n-}).

    Telescoping makes the amassed composition exact:
    amass(result, t) = phi(x_t) - phi(x_0).
    """
    after = path._cum[1:]
    before = path._cum[:-1]
    jumps = np.array([phi(a) - phi(b) for a, b in zip(after, before)])
    return JumpPath(path.times, jumps)


def modulate(path, a):
    """Modulation by a C^1 factor: returns (evaluator, qv_path).

    evaluator(t) = a(t) * x_t; the quadratic-variation path of the product has
    jumps a(u_n)^2 h_n^2 (only the a^2 (dy)^2 term survives refinement).
    """

    def evaluator(t):
        return a(t) * path.amass(t)

    qv = JumpPath(path.times, np.array([a(u) ** 2 for u in path.times]) * path.heights**2)
    return evaluator, qv


class InverseFn:
    """rcll inverse of a nondecreasing pure-jump path.

    x^(v) = inf{t : x_t > v}; a nondecreasing right-continuous step function
    of v that equals +inf past the total mass.  thresholds are the cumulative
    heights g_n, plateaus the jump times.
    """

    def __init__(self, thresholds, plateaus):
        self.thresholds = np.asarray(thresholds, dtype=float)
        self.plateaus = np.asarray(plateaus, dtype=float)
        self.cap = float(self.thresholds[-1]) if self.thresholds.size else 0.0

    def __call__(self, v):
        idx = np.searchsorted(self.thresholds, v, side="right")
        padded = np.concatenate((self.plateaus, [INF]))
        out = padded[idx]
        return float(out) if np.isscalar(v) else out

    def inverse_eval(self, t):
        """Evaluate the inverse of the inverse; reproduces the original path."""
        idx = np.searchsorted(self.plateaus, t, side="right")
        padded = np.concatenate(([0.0], self.thresholds))
        out = padded[idx]
        return float(out) if np.isscalar(t) else out

    def max_jump(self):
        """Largest jump of the inverse; bounded by the mesh of the jump times."""
        if self.plateaus.size == 0:
            return 0.0
        return float(np.max(np.diff(np.concatenate(([0.0], self.plateaus)))))


def rcll_inverse(path):
    """Inverse of a nonnegative-jump path: v -> inf{t : x_t > v}.

    Satisfies {x^_v > t} = {x_t <= v}; applying inverse_eval recovers the
    original amassing exactly.  Heights must be nonnegative.
    """
    if np.any(path.heights < 0.0):
        raise PreconditionError("rcll_inverse requires nonnegative jump heights")
    return InverseFn(path._cum[1:], path.times)


def write_jump_csv(path, fileobj, header=None):
    """Serialize as CSV `t,h` at 17 significant digits (exact round-trip)."""
    _write_csv(fileobj, "t,h", path.times, path.heights, header)


def write_eval_csv(path, grid, fileobj, header=None):
    """Serialize sampled evaluation `t,x` on a grid, 17 significant digits."""
    _write_csv(fileobj, "t,x", np.asarray(grid, float), path.amass(grid), header)


def _write_csv(fileobj, columns, a, b, header):
    own = isinstance(fileobj, str)
    fh = open(fileobj, "w") if own else fileobj
    try:
        if header:
            for key in sorted(header):
                fh.write(f"# {key}={header[key]}\n")
        fh.write(columns + "\n")
        for x, y in zip(a, b):
            fh.write(f"{x:.17g},{y:.17g}\n")
    finally:
        if own:
            fh.close()


def read_jump_csv(fileobj):
    """Read a `t,h` CSV written by write_jump_csv (comments ignored)."""
    own = isinstance(fileobj, str)
    fh = open(fileobj) if own else fileobj
    try:
        times, heights = [], []
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#") or line.startswith("t,"):
                continue
            t, h = line.split(",")
            times.append(float(t))
            heights.append(float(h))
        return JumpPath(times, heights)
    finally:
        if own:
            fh.close()


def to_csv_string(path, header=None):
    buf = io.StringIO()
    write_jump_csv(path, buf, header)
    return buf.getvalue()
