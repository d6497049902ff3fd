"""Multi-qubit state carriers, register algebra, and the qs1 state-file format.

Conventions used throughout the package:

* Qubit 0 is the MOST significant bit of a computational-basis index, so for
  three qubits ``|101>`` is basis index 5 and its qubit 0 reads 1.
* Subsets of qubits are plain ``int`` bitmasks with bit ``i`` standing for
  qubit ``i``.  A mask is only meaningful together with the register size.
"""

from __future__ import annotations

import math
import os
from typing import Sequence

import numpy as np

from .errors import (
    DimensionMismatch,
    EmptySubset,
    IndexOutOfRange,
    InvalidSubset,
    InvariantViolation,
    NotUnitary,
    OutOfRange,
    ParseError,
    TooLarge,
    ZeroVector,
)
from .linalg import conjugate_on_qubit, hermitian_eigenvalues, is_hermitian

TRACE_ATOL = 1e-10
PSD_EIG_FLOOR = -1e-9
NORM_SQ_ATOL = 1e-12
UNITARY_ATOL = 1e-10

# Resource guards for the text state format: a mixed file holds 4^n rows.
MAX_PURE_FILE_QUBITS = 14
MAX_MIXED_FILE_QUBITS = 12


def full_mask(num_qubits: int) -> int:
    return (1 << num_qubits) - 1


def subset_qubits(mask: int) -> list[int]:
    """Qubit indices contained in `mask`, ascending."""
    out = []
    i = 0
    while mask >> i:
        if (mask >> i) & 1:
            out.append(i)
        i += 1
    return out


def check_subset(mask: int, num_qubits: int, *, allow_empty: bool = False) -> None:
    if mask < 0 or mask & ~full_mask(num_qubits):
        raise InvalidSubset(f"mask {mask:#x} reaches outside a {num_qubits}-qubit register")
    if mask == 0 and not allow_empty:
        raise EmptySubset("subset must contain at least one qubit")


def _register_size(dim: int, what: str) -> int:
    n = dim.bit_length() - 1
    if n < 1 or (1 << n) != dim:
        raise DimensionMismatch(f"{what} dimension {dim} is not a power of two >= 2")
    return n


class PureState:
    """A normalized state vector on an n-qubit register."""

    __slots__ = ("amplitudes", "num_qubits")

    def __init__(self, amplitudes: np.ndarray | Sequence[complex]):
        a = np.asarray(amplitudes, dtype=complex).reshape(-1)
        self.num_qubits = _register_size(a.shape[0], "state vector")
        if not np.all(np.isfinite(a.view(float))):
            raise InvariantViolation("state vector has non-finite entries")
        norm_sq = float(np.vdot(a, a).real)
        if abs(norm_sq - 1.0) > NORM_SQ_ATOL:
            raise InvariantViolation(f"squared norm {norm_sq!r} differs from 1 by more than {NORM_SQ_ATOL}")
        self.amplitudes = a

    def to_density(self) -> "DensityOperator":
        return DensityOperator(np.outer(self.amplitudes, self.amplitudes.conj()))

    def __repr__(self) -> str:
        return f"PureState(num_qubits={self.num_qubits})"


class DensityOperator:
    """A density matrix on an n-qubit register.

    Construction checks Hermiticity (1e-10) and unit trace (1e-10); these are
    cheap.  Positivity is checked only when `check_psd=True` (used for
    untrusted input such as state files) because it needs an eigensolve.
    Small negative eigenvalues from round-off are tolerated down to -1e-9 and
    are clamped where entropies are evaluated, never in storage.
    """

    __slots__ = ("matrix", "num_qubits")

    def __init__(self, matrix: np.ndarray, *, check_psd: bool = False):
        m = np.asarray(matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise DimensionMismatch(f"density matrix must be square, got shape {m.shape}")
        self.num_qubits = _register_size(m.shape[0], "density matrix")
        if not np.all(np.isfinite(m.view(float))):
            raise InvariantViolation("density matrix has non-finite entries")
        if not is_hermitian(m):
            raise InvariantViolation("density matrix is not Hermitian within 1e-10")
        tr = complex(np.trace(m))
        if abs(tr - 1.0) > TRACE_ATOL:
            raise InvariantViolation(f"trace {tr!r} differs from 1 by more than {TRACE_ATOL}")
        if check_psd:
            lo = float(hermitian_eigenvalues(m)[0])
            if lo < PSD_EIG_FLOOR:
                raise InvariantViolation(f"minimum eigenvalue {lo!r} below {PSD_EIG_FLOOR}")
        self.matrix = m

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def __repr__(self) -> str:
        return f"DensityOperator(num_qubits={self.num_qubits})"


def tensor_product(a: DensityOperator, b: DensityOperator) -> DensityOperator:
    """Joint state with `a`'s qubits in the more significant positions."""
    return DensityOperator(np.kron(a.matrix, b.matrix))


def partial_trace(rho: DensityOperator, keep: int) -> DensityOperator:
    """Reduced state on the qubits in the mask `keep`.

    Kept qubits are relabeled 0.. in ascending original-index order.
    """
    n = rho.num_qubits
    check_subset(keep, n)
    if keep == full_mask(n):
        return rho
    kept = subset_qubits(keep)
    # Row axis of qubit i carries label i; tracing a qubit gives its column
    # axis the same label, keeping it assigns label n+i.
    labels = list(range(n))
    labels += [n + i if (keep >> i) & 1 else i for i in range(n)]
    out_labels = kept + [n + q for q in kept]
    t = rho.matrix.reshape((2,) * (2 * n))
    reduced = np.einsum(t, labels, out_labels)
    d = 1 << len(kept)
    return DensityOperator(reduced.reshape(d, d))


def apply_local_unitary(rho: DensityOperator, factors: Sequence[np.ndarray]) -> DensityOperator:
    """Conjugate by U_0 x U_1 x ... x U_{n-1}, one 2x2 factor per qubit.

    The factors are applied leg by leg, so the full product operator is never
    built.
    """
    n = rho.num_qubits
    if len(factors) != n:
        raise DimensionMismatch(f"expected {n} factors, got {len(factors)}")
    mats = []
    for q, u in enumerate(factors):
        m = np.asarray(u, dtype=complex)
        if m.shape != (2, 2):
            raise DimensionMismatch(f"factor {q} has shape {m.shape}, expected (2, 2)")
        if np.abs(m.conj().T @ m - np.eye(2)).max() > UNITARY_ATOL:
            raise NotUnitary(f"factor {q} is not unitary within {UNITARY_ATOL}")
        mats.append(m)
    out = rho.matrix
    for q, m in enumerate(mats):
        out = conjugate_on_qubit(out, n, q, m)
    return DensityOperator(out)


def make_ghz(num_qubits: int) -> PureState:
    """(|00...0> + |11...1>)/sqrt(2)."""
    if num_qubits < 1:
        raise OutOfRange("need at least one qubit")
    amp = np.zeros(1 << num_qubits, dtype=complex)
    amp[0] = amp[-1] = math.sqrt(0.5)
    return PureState(amp)


def make_state_from_kets(terms: Sequence[tuple[int, complex]], num_qubits: int) -> PureState:
    """Normalized superposition of computational-basis kets.

    `terms` is a list of (basis index, amplitude) pairs; repeated indices
    accumulate.
    """
    if num_qubits < 1:
        raise OutOfRange("need at least one qubit")
    dim = 1 << num_qubits
    amp = np.zeros(dim, dtype=complex)
    for index, coeff in terms:
        if not 0 <= index < dim:
            raise IndexOutOfRange(f"basis index {index} outside a {num_qubits}-qubit register")
        amp[index] += coeff
    norm = float(np.linalg.norm(amp))
    if norm <= 1e-12:
        raise ZeroVector("superposition has (near-)zero norm")
    return PureState(amp / norm)


# ---------------------------------------------------------------------------
# qs1 state files
#
# Line 1:   "qs1 pure <n>"  or  "qs1 mixed <n>"
# Then:     2^n lines "<re> <im>" for pure states, or 4^n lines giving the
#           density matrix row by row.


def write_qs1(path: str | os.PathLike, state: PureState | DensityOperator) -> None:
    if isinstance(state, PureState):
        kind, values = "pure", state.amplitudes
    elif isinstance(state, DensityOperator):
        kind, values = "mixed", state.matrix.reshape(-1)
    else:
        raise TypeError(f"cannot serialize {type(state).__name__}")
    lines = [f"qs1 {kind} {state.num_qubits}"]
    lines.extend(f"{float(z.real)!r} {float(z.imag)!r}" for z in values)
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")


def read_qs1(path: str | os.PathLike) -> PureState | DensityOperator:
    """Parse a qs1 state file; returns a PureState or a validated DensityOperator."""
    with open(path, "r", encoding="ascii") as fh:
        text = fh.read()
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ParseError("empty state file")
    header = lines[0].split()
    if len(header) != 3 or header[0] != "qs1" or header[1] not in ("pure", "mixed"):
        raise ParseError(f"bad header line {lines[0]!r}")
    try:
        n = int(header[2])
    except ValueError:
        raise ParseError(f"bad qubit count {header[2]!r}") from None
    if n < 1:
        raise ParseError(f"bad qubit count {n}")
    if header[1] == "pure":
        if n > MAX_PURE_FILE_QUBITS:
            raise TooLarge(f"pure state files support at most {MAX_PURE_FILE_QUBITS} qubits")
        expected = 1 << n
    else:
        if n > MAX_MIXED_FILE_QUBITS:
            raise TooLarge(f"mixed state files support at most {MAX_MIXED_FILE_QUBITS} qubits")
        expected = 1 << (2 * n)
    body = lines[1:]
    if len(body) != expected:
        raise ParseError(f"expected {expected} entry lines, found {len(body)}")
    values = np.empty(expected, dtype=complex)
    for i, line in enumerate(body):
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {i + 2}: expected '<re> <im>', got {line!r}")
        try:
            re, im = float(parts[0]), float(parts[1])
        except ValueError:
            raise ParseError(f"line {i + 2}: could not parse {line!r}") from None
        if not (math.isfinite(re) and math.isfinite(im)):
            raise ParseError(f"line {i + 2}: non-finite entry {line!r}")
        values[i] = complex(re, im)
    try:
        if header[1] == "pure":
            return PureState(values)
        return DensityOperator(values.reshape(1 << n, 1 << n), check_psd=True)
    except InvariantViolation as exc:
        raise ParseError(f"state file violates state invariants: {exc}") from exc
