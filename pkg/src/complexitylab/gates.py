"""Exact gate complexity over finite inverse-closed gate sets.

Complexity is the word length of the shortest product of gates reaching a
target unitary, computed by breadth-first search from the identity.
Unitaries are identified up to global phase and up to a resolution
``epsilon``: the canonical key fixes the phase and snaps the entries to a
grid of pitch epsilon/dim, so two operators share a key only when they
are O(epsilon)-close.

Inverse closure of the gate set makes word-length distance symmetric,
and right invariance C(U, V) = C(U V^dag) holds by construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .paulis import is_unitary

DEFAULT_EPSILON = 1e-6


def phase_fix(U: np.ndarray) -> np.ndarray:
    """Rotate the global phase so the largest-magnitude entry is real >= 0.

    Ties are broken by the lowest row-major index among entries within
    1e-12 of the maximum magnitude.
    """
    flat = np.asarray(U).ravel()
    mags = np.abs(flat)
    idx = int(np.argmax(mags >= mags.max() - 1e-12))
    z = flat[idx]
    if abs(z) == 0:
        return np.asarray(U, dtype=complex)
    return np.asarray(U) * (z.conjugate() / abs(z))


def canonical_key(U: np.ndarray, epsilon: float = DEFAULT_EPSILON) -> bytes:
    """Opaque key identifying U up to global phase at resolution epsilon."""
    Uf = phase_fix(U)
    pitch = epsilon / Uf.shape[0]
    re = np.round(Uf.real / pitch).astype(np.int64)
    im = np.round(Uf.imag / pitch).astype(np.int64)
    return re.tobytes() + im.tobytes()


def _phase_aligned_distance(A: np.ndarray, B: np.ndarray) -> float:
    return float(np.max(np.abs(phase_fix(A) - phase_fix(B))))


@dataclass(frozen=True)
class GateSet:
    """Finite labelled set of unitaries on K qubits, closed under daggers."""

    K: int
    gates: tuple[tuple[str, np.ndarray], ...]
    epsilon: float = DEFAULT_EPSILON

    def __post_init__(self):
        dim = 1 << self.K
        object.__setattr__(self, "gates", tuple((str(l), np.asarray(g, dtype=complex)) for l, g in self.gates))
        for label, g in self.gates:
            if g.shape != (dim, dim):
                raise ValueError(f"gate {label!r} has shape {g.shape}, expected {(dim, dim)}")
            if not is_unitary(g):
                raise ValueError(f"gate {label!r} is not unitary")
        for label, g in self.gates:
            dag = g.conj().T
            if min(_phase_aligned_distance(dag, h) for _, h in self.gates) > self.epsilon:
                raise ValueError(f"gate set is not inverse-closed: missing dagger of {label!r}")

    @property
    def dim(self) -> int:
        return 1 << self.K

    def matrices(self) -> list[np.ndarray]:
        return [g for _, g in self.gates]


@dataclass
class ComplexityBall:
    """BFS layers around the identity: counts[d] distinct unitaries first
    reached at depth d, plus the canonical-key -> depth index."""

    counts: list[int]
    index: dict[bytes, int]
    epsilon: float
    members: list[tuple[np.ndarray, int]] = field(repr=False, default_factory=list)
    saturated: bool = False
    truncated: bool = False

    def depth_of(self, U: np.ndarray) -> int | None:
        return self.index.get(canonical_key(U, self.epsilon))

    @property
    def size(self) -> int:
        return len(self.index)


def sphere_growth(gs: GateSet, max_depth: int, max_elements: int | None = None) -> ComplexityBall:
    """Grow the BFS ball to ``max_depth`` (or to group saturation).

    If ``max_elements`` is hit the ball stops after the last complete
    layer and is marked truncated, so the reported depths stay exact.
    """
    eye = np.eye(gs.dim, dtype=complex)
    ball = ComplexityBall([1], {canonical_key(eye, gs.epsilon): 0}, gs.epsilon, [(eye, 0)])
    frontier = [eye]
    mats = gs.matrices()
    for depth in range(1, max_depth + 1):
        new = []
        new_keys = []
        for U in frontier:
            for g in mats:
                V = g @ U
                key = canonical_key(V, gs.epsilon)
                if key not in ball.index:
                    ball.index[key] = depth
                    new.append(V)
                    new_keys.append(key)
        if not new:
            ball.saturated = True
            break
        if max_elements is not None and len(ball.index) > max_elements:
            # drop the partial layer so the reported depths stay exact
            for key in new_keys:
                del ball.index[key]
            ball.truncated = True
            break
        ball.counts.append(len(new))
        ball.members.extend((V, depth) for V in new)
        frontier = new
    return ball


def bfs_complexity(
    target: np.ndarray,
    gs: GateSet,
    max_depth: int,
    ball: ComplexityBall | None = None,
) -> int | None:
    """Least word length n with target ~ g_n ... g_1, or None if the ball
    to ``max_depth`` misses the target.

    A precomputed ``ball`` (from sphere_growth over the same gate set)
    short-circuits the search.
    """
    target = np.asarray(target, dtype=complex)
    if target.shape != (gs.dim, gs.dim):
        raise ValueError(f"target shape {target.shape} does not match dim {gs.dim}")
    if not is_unitary(target):
        raise ValueError("target is not unitary")
    if ball is not None:
        d = ball.depth_of(target)
        if d is not None and d <= max_depth:
            return d
        if ball.saturated or len(ball.counts) - 1 >= max_depth:
            return None
    tkey = canonical_key(target, gs.epsilon)
    eye = np.eye(gs.dim, dtype=complex)
    if canonical_key(eye, gs.epsilon) == tkey:
        return 0
    seen = {canonical_key(eye, gs.epsilon)}
    frontier = [eye]
    mats = gs.matrices()
    for depth in range(1, max_depth + 1):
        new = []
        for U in frontier:
            for g in mats:
                V = g @ U
                key = canonical_key(V, gs.epsilon)
                if key == tkey:
                    return depth
                if key not in seen:
                    seen.add(key)
                    new.append(V)
        if not new:
            return None
        frontier = new
    return None


def relative_complexity(
    U: np.ndarray,
    V: np.ndarray,
    gs: GateSet,
    max_depth: int,
    ball: ComplexityBall | None = None,
) -> int | None:
    """Word-length distance between two unitaries, the complexity of U V^dag."""
    U = np.asarray(U, dtype=complex)
    V = np.asarray(V, dtype=complex)
    if U.shape != V.shape:
        raise ValueError(f"shape mismatch: {U.shape} vs {V.shape}")
    return bfs_complexity(U @ V.conj().T, gs, max_depth, ball)


# --- stock gate sets -------------------------------------------------------

_H = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
_S = np.array([[1, 0], [0, 1j]], dtype=complex)
_I2 = np.eye(2, dtype=complex)
CNOT_12 = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex)
CNOT_21 = np.array([[1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0]], dtype=complex)


def cnot_pair_gateset(epsilon: float = DEFAULT_EPSILON) -> GateSet:
    """The two controlled-NOTs on 2 qubits; both are self-inverse."""
    return GateSet(2, (("cnot12", CNOT_12), ("cnot21", CNOT_21)), epsilon)


def two_qubit_clifford_gateset(epsilon: float = DEFAULT_EPSILON) -> GateSet:
    """Eight generators of the 2-qubit Clifford group (11520 elements up to phase)."""
    gates = (
        ("h1", np.kron(_H, _I2)),
        ("h2", np.kron(_I2, _H)),
        ("s1", np.kron(_S, _I2)),
        ("s2", np.kron(_I2, _S)),
        ("s1dg", np.kron(_S.conj().T, _I2)),
        ("s2dg", np.kron(_I2, _S.conj().T)),
        ("cnot12", CNOT_12),
        ("cnot21", CNOT_21),
    )
    return GateSet(2, gates, epsilon)


def haar_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed unitary via QR of a complex Ginibre matrix."""
    z = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(z)
    return q * (np.diagonal(r) / np.abs(np.diagonal(r)))


def random_inverse_closed_gateset(
    K: int, n_pairs: int, seed: int, epsilon: float = DEFAULT_EPSILON
) -> GateSet:
    """n_pairs Haar-random gates together with their daggers.

    Generic gates satisfy no short relations, so the BFS ball grows freely
    at rate (2 n_pairs - 1) per depth until deduplication kicks in.
    """
    rng = np.random.default_rng(seed)
    gates = []
    for i in range(n_pairs):
        g = haar_unitary(1 << K, rng)
        gates.append((f"g{i}", g))
        gates.append((f"g{i}dg", g.conj().T))
    return GateSet(K, tuple(gates), epsilon)


def random_word(gs: GateSet, length: int, rng: np.random.Generator) -> np.ndarray:
    """Product of ``length`` uniformly chosen gates."""
    U = np.eye(gs.dim, dtype=complex)
    mats = gs.matrices()
    for _ in range(length):
        U = mats[rng.integers(len(mats))] @ U
    return U
