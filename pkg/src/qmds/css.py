"""CSS construction at the parameter level.

A classical [n, r, d] code containing its Euclidean (or Hermitian) dual gives
a quantum [[n, 2r - n, >= d]] code.  Distances are carried as lower bounds;
the MDS flag only records that the bound meets the quantum Singleton bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import NotDualContaining, UnknownDistance, ZeroDimension
from .fourier import ClassicalCode, is_euclidean_dual_containing
from .hermitian import HermitianContext, is_hermitian_dual_containing


class SingletonCheck(NamedTuple):
    satisfied: bool
    saturated: bool


@dataclass(frozen=True)
class QuantumCodeParams:
    n: int
    k: int
    d: int  # lower bound from CSS
    q: int
    field: str
    construction: str  # "euclidean-css" | "hermitian-css"
    provenance: ClassicalCode | None = None

    @property
    def mds(self) -> bool:
        return 2 * self.d == self.n - self.k + 2

    def violations(self) -> list[str]:
        out = []
        if self.k < 1:
            out.append(f"dimension k={self.k} < 1")
        if (self.n + self.k) % 2:
            out.append(f"n + k = {self.n + self.k} is odd")
        if 2 * self.d > self.n - self.k + 2:
            out.append(f"2d={2 * self.d} exceeds n-k+2={self.n - self.k + 2}")
        if self.provenance is not None and self.k != 2 * self.provenance.r - self.n:
            out.append(f"k={self.k} differs from 2r-n={2 * self.provenance.r - self.n}")
        return out

    def display(self) -> str:
        return f"[[{self.n},{self.k},{self.d}]]_{self.q}"

    def to_dict(self) -> dict:
        return {
            "params": [self.n, self.k, self.d],
            "display": self.display(),
            "distance_is_lower_bound": True,
            "mds": self.mds,
            "field": self.field,
            "construction": self.construction,
            "classical": None if self.provenance is None else self.provenance.to_dict(),
        }


def check_quantum_singleton(params: QuantumCodeParams | int, k: int | None = None, d: int | None = None) -> SingletonCheck:
    """2d <= n - k + 2, and whether it holds with equality."""
    if isinstance(params, QuantumCodeParams):
        n, k, d = params.n, params.k, params.d
    else:
        n = params
    return SingletonCheck(2 * d <= n - k + 2, 2 * d == n - k + 2)


def _emit(code: ClassicalCode, construction: str) -> QuantumCodeParams:
    if code.distance is None:
        raise UnknownDistance(f"{code.params()} has no known distance; run an oracle first")
    k = 2 * code.r - code.n
    if k < 1:
        raise ZeroDimension(f"{code.params()} gives quantum dimension {k}")
    params = QuantumCodeParams(
        n=code.n,
        k=k,
        d=code.distance,
        q=code.field.q,
        field=str(code.field),
        construction=construction,
        provenance=code,
    )
    bad = params.violations()
    if bad:
        raise ValueError(f"refusing to emit {params.display()}: {'; '.join(bad)}")
    return params


def css_from_euclidean(code: ClassicalCode) -> QuantumCodeParams:
    if not is_euclidean_dual_containing(code.indices, code.n):
        raise NotDualContaining(f"{code.params()} on rows {list(code.indices)} does not contain its dual")
    return _emit(code, "euclidean-css")


def css_from_hermitian(code: ClassicalCode, ctx: HermitianContext) -> QuantumCodeParams:
    if code.field != ctx.field or code.n != ctx.n:
        raise ValueError("code and Hermitian context disagree on field or length")
    if not is_hermitian_dual_containing(code.indices, code.n, ctx.l):
        raise NotDualContaining(f"{code.params()} does not contain its Hermitian dual")
    return _emit(code, "hermitian-css")
