"""Dense complex linear algebra for K-qubit systems.

Pauli strings, k-local Hamiltonians with Gaussian ensembles, normalized
traces and Hamiltonian time evolution.  Everything is a dense numpy array;
the qubit count is capped at MAX_QUBITS = 10 (dimension 1024), which is
plenty for desk-scale experiments.

Conventions:
  * qubit 0 is the leftmost letter of a string and the most significant
    bit of a basis-state index,
  * the module-wide trace is the normalized trace Tr(1) = 1, under which
    distinct nontrivial Pauli strings are orthonormal.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

MAX_QUBITS = 10

PAULI_1Q = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}

HERMITICITY_TOL = 1e-10
UNITARITY_TOL = 1e-10


@dataclass(frozen=True, order=True)
class PauliString:
    """A word over {I, X, Y, Z}, one letter per qubit."""

    letters: str

    def __post_init__(self):
        if not self.letters:
            raise ValueError("empty Pauli string")
        bad = set(self.letters) - set("IXYZ")
        if bad:
            raise ValueError(f"invalid Pauli letters {sorted(bad)!r}")
        if len(self.letters) > MAX_QUBITS:
            raise ValueError(f"more than {MAX_QUBITS} qubits")

    @property
    def num_qubits(self) -> int:
        return len(self.letters)

    @property
    def weight(self) -> int:
        """Number of non-identity single-qubit factors."""
        return sum(ch != "I" for ch in self.letters)

    def __str__(self) -> str:
        return self.letters


def _as_string(p) -> PauliString:
    return p if isinstance(p, PauliString) else PauliString(str(p))


def pauli_matrix(p) -> np.ndarray:
    """Dense matrix of a Pauli string (Kronecker product of 2x2 factors)."""
    p = _as_string(p)
    m = np.array([[1.0 + 0j]])
    for ch in p.letters:
        m = np.kron(m, PAULI_1Q[ch])
    return m


def enumerate_strings(K: int, k: int, exactly_local: bool = False) -> list[PauliString]:
    """All nontrivial Pauli strings on K qubits with weight <= k.

    With ``exactly_local`` only weight-k strings are produced.  The
    all-identity string is never included.  Order is deterministic:
    increasing weight, then positions, then letters.
    """
    if not 1 <= k <= K:
        raise ValueError(f"need 1 <= k <= K, got k={k}, K={K}")
    if K > MAX_QUBITS:
        raise ValueError(f"K={K} exceeds the cap of {MAX_QUBITS} qubits")
    weights = [k] if exactly_local else range(1, k + 1)
    out = []
    for w in weights:
        for pos in itertools.combinations(range(K), w):
            for letters in itertools.product("XYZ", repeat=w):
                word = ["I"] * K
                for q, ch in zip(pos, letters):
                    word[q] = ch
                out.append(PauliString("".join(word)))
    return out


def single_qubit_strings(K: int) -> list[PauliString]:
    """The 3K weight-one generator strings."""
    return enumerate_strings(K, 1, exactly_local=True)


def num_admissible_strings(K: int, k: int, exactly_local: bool = False) -> int:
    """Count of strings enumerate_strings would produce, 3^w * C(K, w) per weight."""
    if not 1 <= k <= K:
        raise ValueError(f"need 1 <= k <= K, got k={k}, K={K}")
    weights = [k] if exactly_local else range(1, k + 1)
    return sum(3**w * math.comb(K, w) for w in weights)


@dataclass(frozen=True)
class KLocalHamiltonian:
    """H = sum_I J_I sigma_I with every term of weight between 1 and k.

    ``ensemble_variance`` is the per-coupling Gaussian variance used to
    draw the couplings (metadata; the couplings themselves live in
    ``terms``).
    """

    K: int
    k: int
    terms: dict[PauliString, float]
    ensemble_variance: float = field(default=float("nan"))

    def __post_init__(self):
        if not 1 <= self.k <= self.K:
            raise ValueError(f"need 1 <= k <= K, got k={self.k}, K={self.K}")
        if self.K > MAX_QUBITS:
            raise ValueError(f"K={self.K} exceeds the cap of {MAX_QUBITS} qubits")
        for p in self.terms:
            if p.num_qubits != self.K:
                raise ValueError(f"term {p} does not act on {self.K} qubits")
            if not 1 <= p.weight <= self.k:
                raise ValueError(f"term {p} has weight {p.weight}, allowed 1..{self.k}")

    @property
    def dim(self) -> int:
        return 1 << self.K

    def couplings(self) -> np.ndarray:
        """Coupling vector in the deterministic order of the stored terms."""
        return np.array([float(j) for j in self.terms.values()])

    def coupling_norm_sq(self) -> float:
        """sum_I J_I^2, which equals the normalized trace of H^2."""
        return float(sum(j * j for j in self.terms.values()))

    def dense(self) -> np.ndarray:
        """Assemble the dense matrix.

        Each Pauli string is a signed permutation: letters in {X, Y} flip
        a bit of the column index, letters in {Y, Z} contribute (-1)^bit,
        and each Y carries a global factor i.  Assembly is O(dim) per term.
        """
        dim = self.dim
        cols = np.arange(dim)
        H = np.zeros((dim, dim), dtype=complex)
        for p, J in self.terms.items():
            mask_x = 0
            mask_zy = 0
            n_y = 0
            for q, ch in enumerate(p.letters):
                bit = 1 << (self.K - 1 - q)
                if ch in "XY":
                    mask_x |= bit
                if ch in "YZ":
                    mask_zy |= bit
                if ch == "Y":
                    n_y += 1
            phase = (1j) ** n_y * (-1.0) ** np.bitwise_count(cols & mask_zy)
            H[cols ^ mask_x, cols] += J * phase
        return H


def sample_klocal(
    K: int,
    k: int,
    exactly_local: bool,
    target_energy_variance: float,
    seed: int,
    draw: int = 0,
) -> KLocalHamiltonian:
    """Draw a Gaussian k-local Hamiltonian.

    Every admissible string receives an independent zero-mean Gaussian
    coupling with variance target_energy_variance / N_terms, so the
    ensemble mean of sum_I J_I^2 equals ``target_energy_variance``.

    ``(seed, draw)`` selects an independent RNG stream per draw, so
    ensembles can be sampled in any order or in parallel.
    """
    if target_energy_variance <= 0:
        raise ValueError("target_energy_variance must be positive")
    strings = enumerate_strings(K, k, exactly_local)
    rng = np.random.default_rng([seed, draw])
    sigma_sq = target_energy_variance / len(strings)
    J = rng.normal(0.0, math.sqrt(sigma_sq), size=len(strings))
    return KLocalHamiltonian(K, k, dict(zip(strings, J.tolist())), sigma_sq)


def normalized_trace(A: np.ndarray) -> complex:
    """Tr(A) / dim, so the identity has trace 1."""
    A = np.asarray(A)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {A.shape}")
    return complex(np.trace(A) / A.shape[0])


def normalized_trace_product(A: np.ndarray, B: np.ndarray) -> complex:
    """Tr(A B) / dim; orthonormal on Pauli strings."""
    A = np.asarray(A)
    B = np.asarray(B)
    if A.shape != B.shape or A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"shape mismatch: {A.shape} vs {B.shape}")
    return complex(np.einsum("ij,ji->", A, B) / A.shape[0])


def require_hermitian(H: np.ndarray, tol: float = HERMITICITY_TOL) -> np.ndarray:
    H = np.asarray(H, dtype=complex)
    if np.max(np.abs(H - H.conj().T)) > tol:
        raise ValueError("matrix is not Hermitian within tolerance")
    return H


def is_unitary(U: np.ndarray, tol: float = UNITARITY_TOL) -> bool:
    U = np.asarray(U)
    if U.ndim != 2 or U.shape[0] != U.shape[1]:
        return False
    return bool(np.max(np.abs(U.conj().T @ U - np.eye(U.shape[0]))) <= tol)


def evolve(H, t: float) -> np.ndarray:
    """exp(-iHt) through the eigendecomposition of Hermitian H.

    ``H`` may be a KLocalHamiltonian or a dense Hermitian matrix.
    """
    Hm = H.dense() if isinstance(H, KLocalHamiltonian) else require_hermitian(H)
    w, v = np.linalg.eigh(Hm)
    return (v * np.exp(-1j * w * t)) @ v.conj().T
