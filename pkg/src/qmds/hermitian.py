"""Hermitian duals of Fourier-row codes over GF(l^2).

With <u, v>_H = sum u_k v_k^l, the l-th power of row e_j is row e_{jl}, so
<e_i, e_j>_H is nonzero exactly when i + j*l = 0 (mod n).  Each row therefore
has a single Hermitian partner j = -i * l^{-1} (mod n), and the Hermitian dual
of a row code is spanned by the rows that are nobody's partner.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Iterable, Sequence

import numpy as np

from .errors import FieldMismatch, LengthMismatch, LNotInvertible, NotDualContaining, SizeExceeded
from .field import FieldElement, FieldSpec, field_create
from .fourier import ClassicalCode, FourierMatrix, RowSelection, code_from_rows, fourier_matrix

if TYPE_CHECKING:
    from .css import QuantumCodeParams

# largest field the family builder will materialise by default
MATERIALIZE_BOUND = 3**6


@dataclass(frozen=True)
class HermitianContext:
    matrix: FourierMatrix
    l: int

    @property
    def field(self) -> FieldSpec:
        return self.matrix.field

    @property
    def n(self) -> int:
        return self.matrix.n


def hermitian_context(F: FieldSpec, n: int | None = None, omega: FieldElement | None = None) -> HermitianContext:
    """Context over GF(l^2); ``n`` defaults to l^2 - 1."""
    if F.m % 2:
        raise ValueError(f"{F} is not of the form GF(l^2)")
    l = F.p ** (F.m // 2)
    M = fourier_matrix(F, F.q - 1 if n is None else n, omega)
    if math.gcd(l, M.n) != 1:
        raise LNotInvertible(f"gcd({l}, {M.n}) != 1")
    return HermitianContext(M, l)


def _as_codes(F: FieldSpec, vec) -> np.ndarray:
    if isinstance(vec, np.ndarray) and vec.dtype != object:
        return vec.astype(np.int64)
    out = []
    for x in vec:
        if isinstance(x, FieldElement) and x.field != F:
            raise FieldMismatch(f"{x.field} element used with {F}")
        out.append(F(x).value)
    return np.array(out, dtype=np.int64)


def hermitian_inner_product(u: Sequence, v: Sequence, ctx: HermitianContext) -> FieldElement:
    F = ctx.field
    if len(u) != len(v):
        raise LengthMismatch(f"lengths {len(u)} and {len(v)} differ")
    a, b = _as_codes(F, u), _as_codes(F, v)
    return F.element(F.dot(a, F.vpow(b, ctx.l)))


def row_conjugate_index(i: int, ctx: HermitianContext | None = None, *, n: int | None = None, l: int | None = None) -> int:
    """Index of the row equal to the componentwise l-th power of row i."""
    n, l = _nl(ctx, n, l)
    return (i * l) % n


def _nl(ctx, n, l):
    if ctx is not None:
        return ctx.n, ctx.l
    if n is None or l is None:
        raise TypeError("pass a context or both n and l")
    return n, l


def hermitian_partner(i: int, n: int, l: int) -> int:
    """The unique j with i + j*l = 0 (mod n)."""
    if math.gcd(l, n) != 1:
        raise LNotInvertible(f"gcd({l}, {n}) != 1")
    return (-i * pow(l, -1, n)) % n


def hermitian_dual_indices(indices: Iterable[int], n: int, l: int) -> tuple[int, ...]:
    if math.gcd(l, n) != 1:
        raise LNotInvertible(f"gcd({l}, {n}) != 1")
    linv = pow(l, -1, n)
    excluded = {(-i * linv) % n for i in indices}
    return tuple(j for j in range(n) if j not in excluded)


def non_self_dual_rows(n: int, l: int) -> tuple[int, ...]:
    return tuple(i for i in range(n) if (i * (1 + l)) % n == 0)


def missing_non_self_dual(indices: Iterable[int], n: int, l: int) -> tuple[int, ...]:
    """Non-self-dual rows absent from ``indices``; any of these rules out dual containment."""
    s = set(indices)
    return tuple(i for i in non_self_dual_rows(n, l) if i not in s)


def is_hermitian_dual_containing(indices: Iterable[int], n: int, l: int) -> bool:
    indices = set(indices)
    return set(hermitian_dual_indices(indices, n, l)) <= indices


def hermitian_params(p: int, s: int) -> dict:
    """Parameters of the GF(p^{2s}) family without building anything."""
    l = p**s
    n = l * l - 1
    r = n - l + 2
    k = 2 * r - n
    d = l - 1
    return {"p": p, "s": s, "l": l, "n": n, "r": r, "k": k, "d": d, "rate": Fraction(k, n)}


@dataclass(frozen=True)
class HermitianFamily:
    p: int
    s: int
    l: int
    n: int
    start: int
    classical: tuple[int, int, int]
    quantum: "QuantumCodeParams"
    rate: Fraction
    code: ClassicalCode | None = None
    context: HermitianContext | None = None

    @property
    def row_window(self) -> tuple[int, int]:
        r = self.classical[1]
        return self.start, (self.start + r - 1) % self.n

    def to_dict(self) -> dict:
        first, last = self.row_window
        return {
            "p": self.p,
            "s": self.s,
            "l": self.l,
            "n": self.n,
            "row_window": {"start": first, "end": last, "count": self.classical[1]},
            "classical": list(self.classical),
            "quantum": [self.quantum.n, self.quantum.k, self.quantum.d],
            "rate": f"{self.rate.numerator}/{self.rate.denominator}",
            "materialized": self.code is not None,
            "field": str(self.code.field) if self.code is not None else f"GF({self.p}^{2 * self.s})",
            "omega": str(self.code.omega) if self.code is not None else None,
        }


def hermitian_family(
    p: int, s: int, materialize: bool = False, start: int = 0, bound: int = MATERIALIZE_BOUND
) -> HermitianFamily:
    """[[p^{2s}-1, p^{2s}-2p^s+3, p^s-1]] from l^2-l+1 consecutive rows of F_{l^2-1}.

    ``start`` moves the window of rows; the default window is e_0..e_{l(l-1)}.
    """
    par = hermitian_params(p, s)
    n, l, r, d = par["n"], par["l"], par["r"], par["d"]
    rows = [(start + j) % n for j in range(r)]
    if not is_hermitian_dual_containing(rows, n, l):
        raise NotDualContaining(f"window starting at e_{start} is not Hermitian dual-containing")
    from .css import QuantumCodeParams, css_from_hermitian

    if not materialize:
        quantum = QuantumCodeParams(
            n=n, k=2 * r - n, d=d, q=l * l, field=f"GF({p}^{2 * s})", construction="hermitian-css"
        )
        return HermitianFamily(p, s, l, n, start % n, (n, r, d), quantum, par["rate"])
    if p ** (2 * s) > bound:
        raise SizeExceeded(f"GF({p}^{2 * s}) is over the materialisation bound {bound}")
    F = field_create(p, 2 * s)
    ctx = hermitian_context(F)
    code = code_from_rows(ctx.matrix, RowSelection.consecutive(ctx.matrix, r, start))
    quantum = css_from_hermitian(code, ctx)
    return HermitianFamily(p, s, l, n, start % n, (n, r, code.distance), quantum, par["rate"], code, ctx)
