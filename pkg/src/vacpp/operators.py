"""Symbolic algebra of bosonic mode operators.

Operator strings are monomials of creation/annihilation operators labeled by
(pulse id, mode index), times a complex scalar.  Modes of different pulses
(or different indices) always commute; a_k and a_k^dagger of the same mode
obey [a_k, a_k^dagger] = 1.  Normal ordering rewrites any string exactly --
no truncation -- as a sum of strings with every creation operator to the
left of every annihilation operator.  The commutator terms produced here are
the source of the vacuum part of the stimulated-emission signal.

Coherent-state expectation values follow by replacing, in the normal form,
each annihilation operator with its amplitude alpha_k and each creation
operator with conj(alpha_k).
"""

from collections.abc import Mapping
from dataclasses import dataclass

from .field import CoherentAmplitudes

CREATE = "create"
ANNIHILATE = "annihilate"

Mode = tuple[str, int]  # (pulse id, mode index)
Factor = tuple[Mode, str]


@dataclass(frozen=True)
class OperatorString:
    """Product of mode operators times a scalar; rightmost factor acts first."""

    factors: tuple[Factor, ...]
    scalar: complex = 1.0 + 0.0j

    def __post_init__(self):
        for mode, kind in self.factors:
            if kind not in (CREATE, ANNIHILATE):
                raise ValueError(f"unknown operator kind {kind!r}")
            if not (isinstance(mode, tuple) and len(mode) == 2):
                raise ValueError(f"mode label must be a (pulse, index) pair, got {mode!r}")

    def __mul__(self, other: "OperatorString") -> "OperatorString":
        return OperatorString(self.factors + other.factors, self.scalar * other.scalar)

    def dagger(self) -> "OperatorString":
        """Hermitian adjoint: reversed factors, swapped kinds, conjugated scalar."""
        flipped = tuple(
            (mode, ANNIHILATE if kind == CREATE else CREATE) for mode, kind in reversed(self.factors)
        )
        return OperatorString(flipped, complex(self.scalar).conjugate())

    def scaled(self, factor: complex) -> "OperatorString":
        return OperatorString(self.factors, self.scalar * factor)

    def is_normal_ordered(self) -> bool:
        seen_annihilation = False
        for _, kind in self.factors:
            if kind == ANNIHILATE:
                seen_annihilation = True
            elif seen_annihilation:
                return False
        return True


def create(mode: Mode) -> OperatorString:
    """Single creation operator a_mode^dagger."""
    return OperatorString(((mode, CREATE),))


def annihilate(mode: Mode) -> OperatorString:
    """Single annihilation operator a_mode."""
    return OperatorString(((mode, ANNIHILATE),))


@dataclass(frozen=True)
class NormalForm:
    """Exact normally ordered expansion of an operator string."""

    terms: tuple[OperatorString, ...]

    def __post_init__(self):
        for term in self.terms:
            if not term.is_normal_ordered():
                raise ValueError("NormalForm terms must be normally ordered")


def normal_order(s: OperatorString) -> NormalForm:
    """Normally order a string via repeated use of [a_l, a_k^dagger] = delta_lk.

    Each swap of an (annihilate, create) pair yields the swapped string plus,
    for equal mode labels, the string with the pair contracted away.  The
    expansion is exact; like terms are merged.
    """
    pending = [(list(s.factors), complex(s.scalar))]
    done: dict[tuple[Factor, ...], complex] = {}
    while pending:
        factors, scalar = pending.pop()
        for i in range(len(factors) - 1):
            (mode_l, kind_l), (mode_k, kind_k) = factors[i], factors[i + 1]
            if kind_l == ANNIHILATE and kind_k == CREATE:
                swapped = factors.copy()
                swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
                pending.append((swapped, scalar))
                if mode_l == mode_k:
                    contracted = factors[:i] + factors[i + 2 :]
                    pending.append((contracted, scalar))
                break
        else:
            key = tuple(factors)
            done[key] = done.get(key, 0.0j) + scalar
    terms = tuple(
        OperatorString(factors, scalar) for factors, scalar in done.items() if scalar != 0
    )
    if not terms:
        terms = (OperatorString((), 0.0j),)
    return NormalForm(terms)


def coherent_expectation(
    s: OperatorString, amplitudes: Mapping[str, CoherentAmplitudes]
) -> complex:
    """Expectation value of a string in a product of multimode coherent states.

    Args:
        s: the operator string.
        amplitudes: per-pulse coherent amplitudes; mode (pulse, k) resolves to
            amplitudes[pulse].amplitudes[k].

    Raises:
        ConfigError: if a mode label cannot be resolved.
    """
    from .errors import ConfigError

    def amplitude_of(mode: Mode) -> complex:
        pulse, index = mode
        if pulse not in amplitudes:
            raise ConfigError(f"no coherent amplitudes supplied for pulse {pulse!r}")
        grid = amplitudes[pulse]
        if not 0 <= index < len(grid):
            raise ConfigError(
                f"mode index {index} out of range for pulse {pulse!r} ({len(grid)} modes)"
            )
        return complex(grid.amplitudes[index])

    total = 0.0j
    for term in normal_order(s).terms:
        value = term.scalar
        for mode, kind in term.factors:
            alpha = amplitude_of(mode)
            value *= alpha.conjugate() if kind == CREATE else alpha
        total += value
    return total
