"""Fourier matrices over finite fields and the codes generated by their rows.

Row i of F_n is e_i = (1, w^i, w^{2i}, ..., w^{(n-1)i}).  Since
<e_i, e_j> = n when i + j = 0 (mod n) and 0 otherwise, the dual of the code
spanned by rows S is spanned by the rows not of the form n - i for i in S.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Literal, Sequence

import numpy as np

from .errors import (
    BadArithmeticDifference,
    CharacteristicDividesLength,
    FieldMismatch,
    LengthMismatch,
    NotPrimitiveRoot,
)
from .field import FieldElement, FieldSpec, element_order, find_primitive_root_of_unity, parse_field

SelectionKind = Literal["consecutive", "arithmetic", "arbitrary"]


@dataclass(frozen=True)
class FourierMatrix:
    field: FieldSpec
    n: int
    omega: FieldElement

    @cached_property
    def powers(self) -> np.ndarray:
        """w^0, ..., w^{n-1} as codes."""
        F = self.field
        out = np.zeros(self.n, dtype=np.int64)
        cur = 1
        for k in range(self.n):
            out[k] = cur
            cur = F.mul(cur, self.omega.value)
        return out

    def entry(self, i: int, j: int) -> FieldElement:
        return self.field.element(int(self.powers[(i * j) % self.n]))

    def row(self, i: int) -> np.ndarray:
        return self.powers[(i * np.arange(self.n)) % self.n]

    def rows(self, indices: Sequence[int]) -> np.ndarray:
        idx = np.asarray(list(indices), dtype=np.int64).reshape(-1, 1)
        return self.powers[(idx * np.arange(self.n)[None, :]) % self.n]

    def matrix(self) -> np.ndarray:
        return self.rows(range(self.n))


def fourier_matrix(F: FieldSpec, n: int, omega: FieldElement | None = None) -> FourierMatrix:
    """F_n over ``F`` relative to ``omega`` (default: smallest primitive n-th root)."""
    if n < 1:
        raise ValueError("length must be positive")
    if n % F.p == 0:
        raise CharacteristicDividesLength(f"characteristic {F.p} divides n={n}")
    if omega is None:
        omega = find_primitive_root_of_unity(F, n)
    else:
        omega = F(omega)
        if omega.value == 0 or element_order(omega) != n:
            raise NotPrimitiveRoot(f"{omega} is not a primitive {n}-th root of unity in {F}")
    return FourierMatrix(F, n, omega)


@dataclass(frozen=True)
class RowSelection:
    """An ordered set of row indices of a Fourier matrix."""

    matrix: FourierMatrix
    indices: tuple[int, ...]
    kind: SelectionKind = "arbitrary"
    step: int | None = None

    def __post_init__(self):
        n = self.matrix.n
        if any(not 0 <= i < n for i in self.indices):
            raise ValueError(f"row indices must lie in 0..{n - 1}")
        if len(set(self.indices)) != len(self.indices):
            raise ValueError("row indices must be distinct")
        if self.kind == "arithmetic" and math.gcd(n, self.step or 0) != 1:
            raise BadArithmeticDifference(f"gcd({n}, {self.step}) != 1")

    @classmethod
    def consecutive(cls, M: FourierMatrix, r: int, start: int = 0) -> RowSelection:
        if not 0 <= r <= M.n:
            raise ValueError(f"cannot take {r} rows of a {M.n}x{M.n} matrix")
        return cls(M, tuple((start + j) % M.n for j in range(r)), "consecutive", 1)

    @classmethod
    def arithmetic(cls, M: FourierMatrix, start: int, step: int, count: int) -> RowSelection:
        if math.gcd(M.n, step) != 1:
            raise BadArithmeticDifference(f"gcd({M.n}, {step}) != 1")
        if not 0 <= count <= M.n:
            raise ValueError(f"cannot take {count} rows of a {M.n}x{M.n} matrix")
        return cls(M, tuple((start + j * step) % M.n for j in range(count)), "arithmetic", step % M.n)

    @classmethod
    def arbitrary(cls, M: FourierMatrix, indices: Iterable[int]) -> RowSelection:
        return cls(M, tuple(int(i) % M.n for i in indices), "arbitrary", None)

    @property
    def n(self) -> int:
        return self.matrix.n

    @property
    def r(self) -> int:
        return len(self.indices)

    @property
    def theorem_backed(self) -> bool:
        """Consecutive or coprime-difference rows: the code is MDS."""
        return self.kind in ("consecutive", "arithmetic")


@dataclass(frozen=True)
class ClassicalCode:
    selection: RowSelection
    distance: int | None = None
    distance_source: str | None = None

    @property
    def field(self) -> FieldSpec:
        return self.selection.matrix.field

    @property
    def omega(self) -> FieldElement:
        return self.selection.matrix.omega

    @property
    def n(self) -> int:
        return self.selection.n

    @property
    def r(self) -> int:
        return self.selection.r

    @property
    def indices(self) -> tuple[int, ...]:
        return self.selection.indices

    @cached_property
    def generator(self) -> np.ndarray:
        return self.selection.matrix.rows(self.indices)

    @property
    def is_mds(self) -> bool | None:
        if self.distance is None:
            return None
        return self.distance == self.n - self.r + 1

    def with_distance(self, d: int, source: str = "oracle") -> ClassicalCode:
        return ClassicalCode(self.selection, d, source)

    def params(self) -> str:
        d = "?" if self.distance is None else self.distance
        return f"[{self.n},{self.r},{d}]"

    def to_dict(self) -> dict:
        sel = self.selection
        return {
            "field": str(self.field),
            "n": self.n,
            "omega": str(self.omega),
            "rows": list(sel.indices),
            "kind": sel.kind,
            "step": sel.step,
            "r": self.r,
            "distance": self.distance,
            "distance_source": self.distance_source,
        }

    @classmethod
    def from_dict(cls, data: dict) -> ClassicalCode:
        F = parse_field(data["field"])
        M = fourier_matrix(F, int(data["n"]), F(data["omega"]))
        sel = RowSelection(M, tuple(data["rows"]), data["kind"], data.get("step"))
        return cls(sel, data.get("distance"), data.get("distance_source"))


def code_from_rows(M: FourierMatrix, selection: RowSelection) -> ClassicalCode:
    """The code spanned by the selected rows; distance n-r+1 when the rows are
    consecutive or in arithmetic sequence with difference coprime to n."""
    if selection.matrix != M:
        raise ValueError("selection belongs to a different Fourier matrix")
    if selection.kind == "arithmetic" and math.gcd(M.n, selection.step or 0) != 1:
        raise BadArithmeticDifference(f"gcd({M.n}, {selection.step}) != 1")
    if selection.theorem_backed and selection.r > 0:
        return ClassicalCode(selection, M.n - selection.r + 1, "theorem")
    return ClassicalCode(selection, None, None)


def _unpack(indices, n):
    if isinstance(indices, RowSelection):
        return indices.indices, indices.n
    if n is None:
        raise TypeError("n is required when passing a plain index set")
    return tuple(indices), n


def euclidean_dual_indices(indices: Iterable[int] | RowSelection, n: int | None = None) -> tuple[int, ...]:
    """Rows spanning the Euclidean dual of the code spanned by ``indices``."""
    indices, n = _unpack(indices, n)
    excluded = {(-i) % n for i in indices}
    return tuple(j for j in range(n) if j not in excluded)


def is_euclidean_dual_containing(indices: Iterable[int] | RowSelection, n: int | None = None) -> bool:
    indices, n = _unpack(indices, n)
    indices = set(indices)
    return set(euclidean_dual_indices(indices, n)) <= indices


def encode(code: ClassicalCode, message: Sequence) -> list[FieldElement]:
    """message x generator."""
    F = code.field
    if len(message) != code.r:
        raise LengthMismatch(f"message length {len(message)} != dimension {code.r}")
    for x in message:
        if isinstance(x, FieldElement) and x.field != F:
            raise FieldMismatch(f"{x.field} element in message for code over {F}")
    msg = np.array([[F(x).value for x in message]], dtype=np.int64)
    if code.r == 0:
        return [F.zero] * code.n
    word = F.matmul(msg, code.generator)[0]
    return [F.element(int(c)) for c in word]


def generator_text(code: ClassicalCode) -> str:
    """Generator matrix, one row per line, canonical element strings."""
    F = code.field
    return "\n".join(" ".join(F.format(int(c)) for c in row) for row in code.generator)
