"""Bipartite reductions of three- and four-qubit density matrices.

Two families of reductions appear.  Pair reductions are ordinary partial
traces onto two of the qubits.  Split reductions keep one real qubit X
and build a synthetic second qubit Y out of the remaining parties: basis
states of the discarded parties contribute through *agreement patterns*,
where each extra qubit either copies the pattern qubit or flips it.
Every pattern defines an isometry onto the synthetic qubit, so each
split reduction is a completely positive trace-preserving map and its
output is a genuine two-qubit density matrix.

A three-qubit state has 6 reductions: the 3 pair traces (A,B), (A,C),
(B,C) and the 3 one-vs-two splits (A,BC), (B,CA), (C,AB).  A four-qubit
state has 25: 6 pair traces, 12 trace-then-split reductions (trace one
party, then split the remaining trio), 4 one-vs-three splits, and 3
two-vs-two splits (AB,CD), (AC,BD), (AD,BC).  Two-vs-two labels are
canonicalized so that e.g. (BD,AC) and (AC,BD) name the same reduction.

For one-vs-two and one-vs-three labels the synthetic-qubit party order
is cyclic after the kept party within the involved parties, e.g.
(B,CA) rather than (B,AC); parsing accepts any order and canonicalizes.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations, product

import numpy as np

from .linalg import (
    DensityMatrix,
    NotHermitianError,
    NotPSDError,
    TraceNotOneError,
    hermitian_eigenvalues_stack,
    hermiticity_deviation,
    partial_trace,
)

__all__ = [
    "ReductionKind",
    "ReductionLabel",
    "WrongArityError",
    "BadLabelError",
    "PARTY_NAMES",
    "make_label",
    "parse_label",
    "tripartite_labels",
    "quadripartite_labels",
    "labels_for",
    "reduce_pair",
    "reduce_split",
    "reduce_split_channel",
    "reduce_trace_then_split",
    "reduce_one_vs_three",
    "reduce_two_vs_two",
    "apply_reduction",
    "reduce_all_tripartite",
    "reduce_all_quadripartite",
]

PARTY_NAMES = "ABCD"


class WrongArityError(ValueError):
    """State has the wrong number of qubits for the requested operation."""


class BadLabelError(ValueError):
    """Reduction label is malformed or not valid for the state's arity."""


class ReductionKind(enum.Enum):
    PAIR_TRACE = "pair-trace"
    ONE_VS_TWO = "one-vs-two"
    ONE_VS_THREE = "one-vs-three"
    TWO_VS_TWO = "two-vs-two"


@dataclass(frozen=True)
class ReductionLabel:
    """Identifies one bipartite reduction.

    ``first`` holds the kept (X-side) parties, ``second`` the parties
    combined into the synthetic qubit, in pairing order.  Construct via
    :func:`make_label` or :func:`parse_label`, which canonicalize.
    """

    kind: ReductionKind
    first: tuple[int, ...]
    second: tuple[int, ...]

    @property
    def parties(self) -> tuple[int, ...]:
        return self.first + self.second

    @property
    def text(self) -> str:
        return (
            "".join(PARTY_NAMES[q] for q in self.first)
            + ","
            + "".join(PARTY_NAMES[q] for q in self.second)
        )

    def __str__(self) -> str:
        return self.text

    def __repr__(self) -> str:
        return f"ReductionLabel({self.text!r})"


def _cyclic_after(x: int, members: set[int]) -> tuple[int, ...]:
    """The other members in ascending rotation starting after x."""
    ordered = sorted(members)
    i = ordered.index(x)
    return tuple(ordered[(i + j) % len(ordered)] for j in range(1, len(ordered)))


def make_label(first, second) -> ReductionLabel:
    """Build a canonical reduction label from two groups of party indices.

    Group sizes select the kind: (1,1) pair trace, (1,2) one-vs-two,
    (1,3) one-vs-three, (2,2) two-vs-two.  Party order inside the groups
    and the order of the two groups do not matter.
    """
    first = tuple(int(q) for q in first)
    second = tuple(int(q) for q in second)
    f = tuple(sorted(set(first)))
    s = tuple(sorted(set(second)))
    if len(f) != len(first) or len(s) != len(second):
        raise BadLabelError(f"repeated parties in label ({first}, {second})")
    if set(f) & set(s):
        raise BadLabelError(f"overlapping parties in label ({first}, {second})")
    if not f or not s:
        raise BadLabelError("label groups must be nonempty")
    if any(q < 0 or q >= len(PARTY_NAMES) for q in f + s):
        raise BadLabelError(f"party index out of range in ({first}, {second})")

    if len(f) > len(s):
        f, s = s, f
    sizes = (len(f), len(s))
    if sizes == (1, 1):
        if s[0] < f[0]:
            f, s = s, f
        return ReductionLabel(ReductionKind.PAIR_TRACE, f, s)
    if sizes == (1, 2):
        return ReductionLabel(ReductionKind.ONE_VS_TWO, f, _cyclic_after(f[0], set(f) | set(s)))
    if sizes == (1, 3):
        return ReductionLabel(ReductionKind.ONE_VS_THREE, f, _cyclic_after(f[0], set(f) | set(s)))
    if sizes == (2, 2):
        if min(s) < min(f):
            f, s = s, f
        return ReductionLabel(ReductionKind.TWO_VS_TWO, f, s)
    raise BadLabelError(f"unsupported group sizes {sizes}")


def parse_label(text: str, n_qubits: int) -> ReductionLabel:
    """Parse a label such as "A,BC" (case-insensitive) for an n-qubit state."""
    parts = text.strip().upper().split(",")
    if len(parts) != 2:
        raise BadLabelError(f"label {text!r} must contain exactly one comma")
    groups = []
    for part in parts:
        indices = []
        for ch in part.strip():
            pos = PARTY_NAMES.find(ch)
            if pos < 0 or pos >= n_qubits:
                raise BadLabelError(
                    f"unknown party {ch!r} in label {text!r}; "
                    f"parties are {PARTY_NAMES[:n_qubits]}"
                )
            indices.append(pos)
        groups.append(indices)
    label = make_label(groups[0], groups[1])
    valid = labels_for(n_qubits)
    if label not in valid:
        raise BadLabelError(
            f"label {text!r} is not a reduction of a {n_qubits}-qubit state; "
            f"valid labels: {', '.join(l.text for l in valid)}"
        )
    return label


def tripartite_labels() -> list[ReductionLabel]:
    """The 6 reduction labels of a three-qubit state, in report order."""
    pairs = [make_label((a,), (b,)) for a, b in combinations(range(3), 2)]
    splits = [make_label((x,), set(range(3)) - {x}) for x in range(3)]
    return pairs + splits


def quadripartite_labels() -> list[ReductionLabel]:
    """The 25 reduction labels of a four-qubit state, in report order.

    Order: 6 pair traces, 12 trace-then-splits, 4 one-vs-three splits,
    3 two-vs-two splits; lexicographic within each group.
    """
    pairs = [make_label((a,), (b,)) for a, b in combinations(range(4), 2)]
    one_vs_two = sorted(
        (
            make_label((x,), trio - {x})
            for traced in range(4)
            for trio in [set(range(4)) - {traced}]
            for x in sorted(trio)
        ),
        key=lambda l: l.text,
    )
    one_vs_three = [make_label((x,), set(range(4)) - {x}) for x in range(4)]
    two_vs_two = [make_label((0, partner), {1, 2, 3} - {partner}) for partner in (1, 2, 3)]
    return pairs + one_vs_two + one_vs_three + two_vs_two


def labels_for(n_qubits: int) -> list[ReductionLabel]:
    if n_qubits == 3:
        return tripartite_labels()
    if n_qubits == 4:
        return quadripartite_labels()
    raise WrongArityError(f"reductions are defined for 3 or 4 qubits, not {n_qubits}")


def _require_arity(rho: DensityMatrix, n: int, what: str):
    if rho.n_qubits != n:
        raise WrongArityError(f"{what} needs a {n}-qubit state, got {rho.n_qubits} qubits")


def _require_kind(label: ReductionLabel, kind: ReductionKind):
    if label.kind is not kind:
        raise BadLabelError(f"label {label.text} has kind {label.kind.value}, expected {kind.value}")


def reduce_pair(rho: DensityMatrix, label: ReductionLabel) -> DensityMatrix:
    """Partial trace onto the labelled pair of parties."""
    _require_kind(label, ReductionKind.PAIR_TRACE)
    if any(q >= rho.n_qubits for q in label.parties):
        raise BadLabelError(f"label {label.text} references parties beyond qubit {rho.n_qubits - 1}")
    if rho.n_qubits not in (3, 4):
        raise WrongArityError(f"pair reductions are defined for 3 or 4 qubits, not {rho.n_qubits}")
    return partial_trace(rho, label.parties)


def _split_entrywise(mat: np.ndarray, n: int, x: int, y: int, z: int, tol: float) -> DensityMatrix:
    """out[ij,rs] = sum_p mat[x=i, y=j, z=j^p ; x=r, y=s, z=s^p] for 3-qubit mat."""
    t = mat.reshape((2,) * (2 * n))
    out = np.zeros((4, 4), dtype=complex)
    for i, j, r, s in product(range(2), repeat=4):
        acc = 0.0 + 0.0j
        for p in (0, 1):
            ket = [0] * n
            bra = [0] * n
            ket[x], ket[y], ket[z] = i, j, j ^ p
            bra[x], bra[y], bra[z] = r, s, s ^ p
            acc += t[tuple(ket) + tuple(bra)]
        out[2 * i + j, 2 * r + s] = acc
    return DensityMatrix(out, 2, tol)


def reduce_split(rho: DensityMatrix, label: ReductionLabel) -> DensityMatrix:
    """One-vs-two split reduction of a three-qubit state, entrywise.

    For (A,BC): out[ij,rs] = rho[ijj,rss] + rho[ij(1-j),rs(1-s)], and
    cyclically for (B,CA) and (C,AB).
    """
    _require_kind(label, ReductionKind.ONE_VS_TWO)
    _require_arity(rho, 3, "a one-vs-two split")
    if set(label.parties) != {0, 1, 2}:
        raise BadLabelError(f"label {label.text} does not cover parties A,B,C")
    x, (y, z) = label.first[0], label.second
    return _split_entrywise(rho.mat, 3, x, y, z, rho.tol)


def _permute_parties(mat: np.ndarray, perm: tuple[int, ...]) -> np.ndarray:
    """Reorder parties so that new position i holds old party perm[i]."""
    n = len(perm)
    t = mat.reshape((2,) * (2 * n))
    axes = list(perm) + [q + n for q in perm]
    return t.transpose(axes).reshape(2 ** n, 2 ** n)


def _pattern_isometry(p: int) -> np.ndarray:
    """2x4 operator mapping |y,(y^p)> to |y> and killing the other pattern."""
    k = np.zeros((2, 4), dtype=complex)
    for y in (0, 1):
        k[y, 2 * y + (y ^ p)] = 1.0
    return k


def reduce_split_channel(rho: DensityMatrix, label: ReductionLabel) -> DensityMatrix:
    """Operator-sum form of :func:`reduce_split`; same output, computed
    as sum_p (I (x) K_p) rho (I (x) K_p)^dag with K_p the two pattern
    isometries.  Serves as an independent cross-check of the entrywise
    formula; sum_p K_p^dag K_p = I makes trace preservation manifest.
    """
    _require_kind(label, ReductionKind.ONE_VS_TWO)
    _require_arity(rho, 3, "a one-vs-two split")
    if set(label.parties) != {0, 1, 2}:
        raise BadLabelError(f"label {label.text} does not cover parties A,B,C")
    x, (y, z) = label.first[0], label.second
    m = _permute_parties(rho.mat, (x, y, z))
    out = np.zeros((4, 4), dtype=complex)
    eye2 = np.eye(2, dtype=complex)
    for p in (0, 1):
        op = np.kron(eye2, _pattern_isometry(p))
        out += op @ m @ op.conj().T
    return DensityMatrix(out, 2, rho.tol)


def reduce_trace_then_split(rho: DensityMatrix, traced_party: int, label: ReductionLabel) -> DensityMatrix:
    """Trace one party of a four-qubit state, then split the remaining trio."""
    _require_arity(rho, 4, "a trace-then-split reduction")
    _require_kind(label, ReductionKind.ONE_VS_TWO)
    if traced_party in label.parties:
        raise BadLabelError(f"traced party {PARTY_NAMES[traced_party]} appears in label {label.text}")
    if set(label.parties) | {traced_party} != {0, 1, 2, 3}:
        raise BadLabelError(f"label {label.text} plus traced party must cover all four parties")
    keep = tuple(q for q in range(4) if q != traced_party)
    sub = partial_trace(rho, keep)
    remap = {q: i for i, q in enumerate(keep)}
    sub_label = make_label((remap[label.first[0]],), {remap[q] for q in label.second})
    return reduce_split(sub, sub_label)


def reduce_one_vs_three(rho: DensityMatrix, label: ReductionLabel) -> DensityMatrix:
    """One-vs-three split of a four-qubit state.

    The synthetic qubit carries two pattern bits: with parties ordered
    (X, Y, Z, W), out[ij,rs] = sum_{p,q} rho[x=i, y=j, z=j^p, w=j^q ;
    x=r, y=s, z=s^p, w=s^q].
    """
    _require_kind(label, ReductionKind.ONE_VS_THREE)
    _require_arity(rho, 4, "a one-vs-three split")
    x = label.first[0]
    y, z, w = label.second
    t = rho.mat.reshape((2,) * 8)
    out = np.zeros((4, 4), dtype=complex)
    for i, j, r, s in product(range(2), repeat=4):
        acc = 0.0 + 0.0j
        for p, q in product(range(2), repeat=2):
            ket = [0, 0, 0, 0]
            bra = [0, 0, 0, 0]
            ket[x], ket[y], ket[z], ket[w] = i, j, j ^ p, j ^ q
            bra[x], bra[y], bra[z], bra[w] = r, s, s ^ p, s ^ q
            acc += t[tuple(ket) + tuple(bra)]
        out[2 * i + j, 2 * r + s] = acc
    return DensityMatrix(out, 2, rho.tol)


def reduce_two_vs_two(rho: DensityMatrix, label: ReductionLabel) -> DensityMatrix:
    """Two-vs-two split of a four-qubit state.

    The two-pattern pairing is applied independently to each pair: with
    groups (X1,X2) and (Y1,Y2), out[ij,rs] = sum_{p,q} rho[x1=i, x2=i^p,
    y1=j, y2=j^q ; x1=r, x2=r^p, y1=s, y2=s^q].
    """
    _require_kind(label, ReductionKind.TWO_VS_TWO)
    _require_arity(rho, 4, "a two-vs-two split")
    x1, x2 = label.first
    y1, y2 = label.second
    t = rho.mat.reshape((2,) * 8)
    out = np.zeros((4, 4), dtype=complex)
    for i, j, r, s in product(range(2), repeat=4):
        acc = 0.0 + 0.0j
        for p, q in product(range(2), repeat=2):
            ket = [0, 0, 0, 0]
            bra = [0, 0, 0, 0]
            ket[x1], ket[x2], ket[y1], ket[y2] = i, i ^ p, j, j ^ q
            bra[x1], bra[x2], bra[y1], bra[y2] = r, r ^ p, s, s ^ q
            acc += t[tuple(ket) + tuple(bra)]
        out[2 * i + j, 2 * r + s] = acc
    return DensityMatrix(out, 2, rho.tol)


def apply_reduction(rho: DensityMatrix, label: ReductionLabel) -> DensityMatrix:
    """Dispatch a label to the reduction it names, for 3- or 4-qubit states."""
    if label.kind is ReductionKind.PAIR_TRACE:
        return reduce_pair(rho, label)
    if label.kind is ReductionKind.ONE_VS_TWO:
        if rho.n_qubits == 3:
            return reduce_split(rho, label)
        if rho.n_qubits == 4:
            (traced,) = set(range(4)) - set(label.parties)
            return reduce_trace_then_split(rho, traced, label)
        raise WrongArityError(f"one-vs-two labels need 3 or 4 qubits, got {rho.n_qubits}")
    if label.kind is ReductionKind.ONE_VS_THREE:
        return reduce_one_vs_three(rho, label)
    if label.kind is ReductionKind.TWO_VS_TWO:
        return reduce_two_vs_two(rho, label)
    raise BadLabelError(f"unknown reduction kind {label.kind!r}")


def _validate_entries(entries: dict[ReductionLabel, DensityMatrix], tol: float):
    """Hermiticity/trace/positivity check over a full reduction set at once."""
    labels = list(entries)
    stack = np.stack([entries[l].mat for l in labels])
    for label, mat in zip(labels, stack):
        dev = hermiticity_deviation(mat)
        if dev > tol:
            raise NotHermitianError(dev)
        trace_dev = abs(complex(np.trace(mat)) - 1.0)
        if trace_dev > tol:
            raise TraceNotOneError(trace_dev)
    min_eigs = hermitian_eigenvalues_stack(stack)[:, 0]
    bad = int(np.argmin(min_eigs))
    if min_eigs[bad] < -tol:
        raise NotPSDError(float(min_eigs[bad]))


def reduce_all_tripartite(rho: DensityMatrix, validate: bool = True) -> dict[ReductionLabel, DensityMatrix]:
    """All 6 reductions of a three-qubit state, keyed by label in report order."""
    _require_arity(rho, 3, "the tripartite reduction set")
    entries = {label: apply_reduction(rho, label) for label in tripartite_labels()}
    if validate:
        _validate_entries(entries, rho.tol)
    return entries


def reduce_all_quadripartite(rho: DensityMatrix, validate: bool = True) -> dict[ReductionLabel, DensityMatrix]:
    """All 25 reductions of a four-qubit state, keyed by label in report order."""
    _require_arity(rho, 4, "the quadripartite reduction set")
    entries = {label: apply_reduction(rho, label) for label in quadripartite_labels()}
    if validate:
        _validate_entries(entries, rho.tol)
    return entries
