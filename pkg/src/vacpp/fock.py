"""Dense matrix representation of mode operators in a truncated Fock space.

Independent check of the symbolic algebra: operator strings become explicit
matrices (Kronecker products over modes, each mode truncated at a photon
cutoff), and coherent states become truncated number-state vectors.  Kept
deliberately small -- a few modes, cutoff ~8 -- which is ample for verifying
normal ordering and coherent expectations while keeping matrices tiny.
"""

import math
from collections.abc import Sequence

import numpy as np

from .operators import ANNIHILATE, NormalForm, OperatorString, Mode


def lowering_matrix(cutoff: int) -> np.ndarray:
    """Single-mode annihilation operator on number states |0..cutoff-1>."""
    a = np.zeros((cutoff, cutoff), dtype=complex)
    for n in range(1, cutoff):
        a[n - 1, n] = math.sqrt(n)
    return a


class FockSpace:
    """Tensor product of a fixed mode list, each truncated at `cutoff` photons."""

    def __init__(self, modes: Sequence[Mode], cutoff: int = 8):
        if cutoff < 2:
            raise ValueError(f"cutoff must be >= 2, got {cutoff}")
        self.modes = list(modes)
        self.cutoff = cutoff
        self.dim = cutoff ** len(self.modes)
        self._ops = {}
        eye = np.eye(cutoff, dtype=complex)
        a = lowering_matrix(cutoff)
        for i, mode in enumerate(self.modes):
            mats = [eye] * len(self.modes)
            mats[i] = a
            full = mats[0]
            for m in mats[1:]:
                full = np.kron(full, m)
            self._ops[mode] = full

    def annihilator(self, mode: Mode) -> np.ndarray:
        return self._ops[mode]

    def string_matrix(self, s: OperatorString) -> np.ndarray:
        """Matrix of an operator string (rightmost factor acts first)."""
        out = s.scalar * np.eye(self.dim, dtype=complex)
        for mode, kind in s.factors:
            a = self._ops[mode]
            out = out @ (a if kind == ANNIHILATE else a.conj().T)
        return out

    def normal_form_matrix(self, nf: NormalForm) -> np.ndarray:
        out = np.zeros((self.dim, self.dim), dtype=complex)
        for term in nf.terms:
            out += self.string_matrix(term)
        return out

    def coherent_state(self, alphas: Sequence[complex]) -> np.ndarray:
        """Truncated product coherent state |alpha_1> x ... x |alpha_m>.

        Accurate for |alpha| well below sqrt(cutoff); callers should keep
        amplitudes modest (|alpha| <~ 1 at cutoff 8).
        """
        if len(alphas) != len(self.modes):
            raise ValueError("one amplitude per mode required")
        vec = np.ones(1, dtype=complex)
        for alpha in alphas:
            n = np.arange(self.cutoff)
            coeffs = np.exp(-abs(alpha) ** 2 / 2.0) * np.power(complex(alpha), n) / np.sqrt(
                [math.factorial(int(k)) for k in n]
            )
            vec = np.kron(vec, coeffs)
        return vec

    def expectation(self, matrix: np.ndarray, state: np.ndarray) -> complex:
        return complex(state.conj() @ matrix @ state)
