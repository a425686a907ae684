"""Search for an [[n, k, d]] quantum MDS code of a given rate and distance.

From k = nR, 2r = n + k and d = n - r + 1 one gets n = 2(d - 1)/(1 - R).
Writing 1 - R = a/b in lowest terms, n is an integer iff a | 2(d - 1), so the
planner walks d upward until that holds and the field policy can be met.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

from .css import QuantumCodeParams, css_from_euclidean
from .errors import CharacteristicDividesLength, InvalidRate, SearchExhausted
from .field import DEFAULT_SIZE_BOUND, FieldElement, FieldSpec, field_create
from .fourier import ClassicalCode, RowSelection, code_from_rows, fourier_matrix
from .numtheory import is_prime, order_mod, primes_from, totient

log = logging.getLogger(__name__)

Policy = Literal["prime", "smallest", "characteristic"]

DEFAULT_D_STEPS = 512


@dataclass(frozen=True)
class Infeasible:
    """No integral length exists for this distance."""

    d: int
    reason: str


@dataclass(frozen=True)
class PlanRequest:
    rate: Fraction
    d_min: int
    policy: Policy = "prime"
    characteristic: int | None = None
    max_d_steps: int = DEFAULT_D_STEPS
    max_n: int | None = None
    row_step: int = 1
    field_bound: int = DEFAULT_SIZE_BOUND

    def __post_init__(self):
        object.__setattr__(self, "rate", parse_rate(self.rate))
        if not 0 < self.rate < 1:
            raise InvalidRate(f"rate {self.rate} must lie strictly between 0 and 1")
        if self.d_min < 2:
            raise ValueError("minimum distance must be at least 2")
        if self.policy == "characteristic" and not (self.characteristic and is_prime(self.characteristic)):
            raise ValueError("the characteristic policy needs a prime characteristic")
        if self.max_d_steps < 1:
            raise ValueError("max_d_steps must be positive")

    @classmethod
    def from_capability(cls, rate, t: int, **kw) -> PlanRequest:
        """Request correcting ``t`` errors, i.e. distance 2t + 1."""
        return cls(rate, 2 * t + 1, **kw)

    def to_dict(self) -> dict:
        return {
            "rate": _fmt_rate(self.rate),
            "d_min": self.d_min,
            "policy": self.policy,
            "characteristic": self.characteristic,
            "max_d_steps": self.max_d_steps,
            "max_n": self.max_n,
            "row_step": self.row_step,
        }

    @classmethod
    def from_dict(cls, data: dict) -> PlanRequest:
        return cls(
            rate=parse_rate(data["rate"]),
            d_min=int(data["d_min"]),
            policy=data.get("policy", "prime"),
            characteristic=data.get("characteristic"),
            max_d_steps=int(data.get("max_d_steps", DEFAULT_D_STEPS)),
            max_n=data.get("max_n"),
            row_step=int(data.get("row_step", 1)),
        )


@dataclass(frozen=True)
class CandidateField:
    p: int
    e: int

    @property
    def q(self) -> int:
        return self.p**self.e

    def __str__(self) -> str:
        return f"GF({self.p})" if self.e == 1 else f"GF({self.p}^{self.e})"


@dataclass(frozen=True)
class PlanResult:
    d: int
    n: int
    r: int
    k: int
    field: FieldSpec
    omega: FieldElement
    selection: RowSelection
    code: ClassicalCode
    quantum: QuantumCodeParams
    candidate_fields: tuple[CandidateField, ...] = ()
    d_steps: int = 0
    request: PlanRequest | None = field(default=None, compare=False)

    @property
    def rate(self) -> Fraction:
        return Fraction(self.k, self.n)

    @property
    def cost_note(self) -> str:
        if self.field.m == 1:
            return f"prime field: plain arithmetic mod {self.field.p}"
        return f"extension field of degree {self.field.m}: polynomial arithmetic mod the modulus"

    def to_dict(self) -> dict:
        return {
            "request": None if self.request is None else self.request.to_dict(),
            "d": self.d,
            "n": self.n,
            "r": self.r,
            "k": self.k,
            "rate": _fmt_rate(self.rate),
            "field": str(self.field),
            "omega": str(self.omega),
            "rows": {"start": self.selection.indices[0], "step": self.selection.step, "count": self.r},
            "classical": [self.n, self.r, self.code.distance],
            "quantum": self.quantum.to_dict(),
            "candidate_fields": [str(c) for c in self.candidate_fields],
            "d_steps": self.d_steps,
            "cost_note": self.cost_note,
        }


def parse_rate(rate) -> Fraction:
    """Exact rate from a Fraction, an int pair string "k/n", or an int."""
    if isinstance(rate, Fraction):
        return rate
    if isinstance(rate, float):
        raise InvalidRate("rates must be exact fractions such as '3/4', not floats")
    try:
        return Fraction(str(rate).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidRate(f"cannot parse rate {rate!r}") from exc


def _fmt_rate(r: Fraction) -> str:
    return f"{r.numerator}/{r.denominator}"


def solve_length(rate, d: int) -> int | Infeasible:
    """n = 2(d-1)/(1-R) when that is an integer."""
    rate = parse_rate(rate)
    if not 0 < rate < 1:
        raise InvalidRate(f"rate {rate} must lie strictly between 0 and 1")
    if d < 2:
        raise ValueError("distance must be at least 2")
    gap = 1 - rate
    a, b = gap.numerator, gap.denominator
    if (2 * (d - 1)) % a:
        return Infeasible(d, f"{a} does not divide 2(d-1) = {2 * (d - 1)}")
    return 2 * (d - 1) * b // a


def euler_field_existence(p: int, n: int) -> int:
    """Smallest e with a primitive n-th root of unity in GF(p^e); e divides phi(n)."""
    if n % p == 0:
        raise CharacteristicDividesLength(f"{p} divides {n}")
    if n == 1:
        return 1
    e = order_mod(p, n)
    if totient(n) % e:
        raise AssertionError(f"order {e} of {p} mod {n} does not divide phi({n})")
    return e


def candidate_fields(n: int, cap: int | None = None) -> list[CandidateField]:
    """Smallest field of each characteristic carrying F_n, sorted by order.

    Characteristics are scanned up to the first prime p = 1 (mod n), beyond
    which no field can be smaller than GF(p).
    """
    out = []
    for p in primes_from(2):
        if n % p:
            e = euler_field_existence(p, n)
            c = CandidateField(p, e)
            if cap is None or c.q <= cap:
                out.append(c)
            if e == 1:
                break
    return sorted(out, key=lambda c: (c.q, c.p))


def _choose_field(request: PlanRequest, n: int) -> tuple[CandidateField | None, list[CandidateField]]:
    if request.policy == "characteristic":
        p = request.characteristic
        if n % p == 0:
            return None, []
        c = CandidateField(p, euler_field_existence(p, n))
        return (c if c.q <= request.field_bound else None), [c]
    if request.policy == "prime":
        if not is_prime(n + 1):
            return None, []
        c = CandidateField(n + 1, 1)
        return (c if c.q <= request.field_bound else None), [c]
    if request.policy == "smallest":
        cands = candidate_fields(n, request.field_bound)
        return (cands[0] if cands else None), cands
    raise ValueError(f"unknown field policy {request.policy!r}")


def build_plan(n: int, r: int, d: int, F: FieldSpec, row_step: int = 1) -> tuple[RowSelection, ClassicalCode, QuantumCodeParams]:
    M = fourier_matrix(F, n)
    if row_step == 1:
        sel = RowSelection.consecutive(M, r)
    else:
        sel = RowSelection.arithmetic(M, 0, row_step, r)
    code = code_from_rows(M, sel)
    return sel, code, css_from_euclidean(code)


def plan(request: PlanRequest) -> PlanResult:
    """Smallest d >= d_min admitting an integral length and a field under the policy."""
    d = request.d_min
    last = d
    for step in range(request.max_d_steps):
        d = request.d_min + step
        last = d
        n = solve_length(request.rate, d)
        if isinstance(n, Infeasible):
            continue
        if request.max_n is not None and n > request.max_n:
            break
        chosen, cands = _choose_field(request, n)
        if chosen is None:
            continue
        k = n - 2 * (d - 1)
        r = (n + k) // 2
        if request.row_step != 1 and math.gcd(n, request.row_step) != 1:
            continue
        F = field_create(chosen.p, chosen.e, request.field_bound)
        sel, code, quantum = build_plan(n, r, d, F, request.row_step)
        if request.policy != "smallest":
            cands = candidate_fields(n)
        log.info("plan: accepted d=%d after %d step(s), n=%d over %s", d, step + 1, n, chosen)
        return PlanResult(
            d=d,
            n=n,
            r=r,
            k=k,
            field=F,
            omega=sel.matrix.omega,
            selection=sel,
            code=code,
            quantum=quantum,
            candidate_fields=tuple(cands),
            d_steps=step + 1,
            request=request,
        )
    raise SearchExhausted(f"no admissible distance in [{request.d_min}, {last}]", last)


@dataclass(frozen=True)
class CatalogPolicy:
    min_dimension: int = 1
    target_distance: int | None = None


def best_for_field(F: FieldSpec, policy: CatalogPolicy | None = None) -> list[PlanResult]:
    """All [[q-1, 2r-(q-1), q-r]] codes from the full-length Fourier matrix over F."""
    policy = policy or CatalogPolicy()
    n = F.q - 1
    if n < 1 or n % F.p == 0:
        return []
    r_lo = n // 2 + 1
    if r_lo > n - 1:
        return []
    M = fourier_matrix(F, n)
    out = []
    for r in range(r_lo, n):
        k = 2 * r - n
        d = n - r + 1
        if k < policy.min_dimension:
            continue
        if policy.target_distance is not None and d < policy.target_distance:
            continue
        sel = RowSelection.consecutive(M, r)
        code = code_from_rows(M, sel)
        quantum = css_from_euclidean(code)
        out.append(PlanResult(d, n, r, k, F, M.omega, sel, code, quantum))
    return out
