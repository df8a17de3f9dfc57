"""Random 2-local circuit picture of perturbation scrambling.

A single-qubit perturbation spreads through a width-K circuit in which
the qubits are randomly paired at every step and each pair interacts.
The spread is modelled combinatorially: a pair touching the infected set
becomes fully infected.  The mean growth follows the logistic curve
s(tau)/K = e^(tau - tau*) / (1 + e^(tau - tau*)) with tau* = ln K, and
the conjugated-perturbation (precursor) complexity follows
K * ln(1 + e^(tau - tau*)).

All logarithms are natural.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import expit

_CHUNK = 4096  # trials per RNG substream; fixed so results never depend on scheduling


@dataclass(frozen=True)
class EpidemicTrajectory:
    """Per-step mean and standard error of the infected-qubit count."""

    K: int
    taus: np.ndarray
    mean_infected: np.ndarray
    std_error: np.ndarray
    trials: int
    seed: int

    def steps(self) -> list[tuple[int, float, float]]:
        return list(zip(self.taus.tolist(), self.mean_infected.tolist(), self.std_error.tolist()))


def circuit_complexity_linear(K: int, depth: int) -> float:
    """Gate count of a depth-tau brick circuit: K/2 gates per step."""
    if K % 2:
        raise ValueError(f"K must be even, got {K}")
    return (K / 2) * depth


def expected_step_increment(K: int, s) -> float:
    """Exact one-step mean growth s(K - s)/(K - 1) of the infected count.

    Each uninfected qubit is infected exactly when its random partner is
    infected, which happens with probability s/(K - 1).
    """
    return s * (K - s) / (K - 1)


def _step_counts(K: int, s: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """Advance a batch of trials one step under uniformly random pairings.

    Qubits 0..s-1 are infected (exchangeability makes the labels
    irrelevant), a uniform shuffle pairs consecutive entries, and every
    pair containing an infected qubit ends fully infected.
    """
    n = s.shape[0]
    perms = np.argsort(rng.random((n, K)), axis=1)
    touched = perms.reshape(n, K // 2, 2) < s[:, None, None]
    return 2 * touched.any(axis=2).sum(axis=1)


def simulate_epidemic(K: int, max_steps: int, trials: int, seed: int) -> EpidemicTrajectory:
    """Monte-Carlo growth of a single-qubit perturbation, s(0) = 1.

    Trials are processed in fixed-size chunks, each with its own RNG
    stream derived from (seed, chunk index), so the result is independent
    of how chunks are scheduled.
    """
    if K % 2 or K < 2:
        raise ValueError(f"K must be even and >= 2, got {K}")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    total = np.zeros(max_steps + 1)
    total_sq = np.zeros(max_steps + 1)
    for start in range(0, trials, _CHUNK):
        n = min(_CHUNK, trials - start)
        rng = np.random.default_rng([seed, start // _CHUNK])
        s = np.ones(n, dtype=np.int64)
        total[0] += float(s.sum())
        total_sq[0] += float((s * s).sum())
        for tau in range(1, max_steps + 1):
            alive = s < K
            if alive.any():
                s[alive] = _step_counts(K, s[alive], rng)
            total[tau] += float(s.sum())
            total_sq[tau] += float((s * s).sum())
    mean = total / trials
    var = np.maximum(total_sq / trials - mean**2, 0.0)
    stderr = np.sqrt(var / trials)
    return EpidemicTrajectory(K, np.arange(max_steps + 1), mean, stderr, trials, seed)


def scrambling_time(K: int) -> float:
    """ln K, the crossover step count for complete scrambling."""
    if K < 2:
        raise ValueError(f"K must be >= 2, got {K}")
    return math.log(K)


def logistic_size(tau, K: int):
    """Affected fraction s(tau)/K on the logistic curve with tau* = ln K."""
    if K < 2:
        raise ValueError(f"K must be >= 2, got {K}")
    x = np.asarray(tau, dtype=float) - math.log(K)
    out = expit(x)
    return float(out) if np.isscalar(tau) else out


def precursor_complexity(tau, K: int):
    """K ln(1 + e^(tau - tau*)): exponential growth before the scrambling
    time, linear after (slope K)."""
    if K < 2:
        raise ValueError(f"K must be >= 2, got {K}")
    x = np.asarray(tau, dtype=float) - math.log(K)
    out = K * np.logaddexp(0.0, x)
    return float(out) if np.isscalar(tau) else out
