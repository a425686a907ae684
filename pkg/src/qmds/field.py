"""Finite fields GF(p^m) in a polynomial basis.

Elements are stored as integer codes: the element c0 + c1*x + ... + c_{m-1}*x^{m-1}
has code c0 + c1*p + ... + c_{m-1}*p^{m-1}.  For prime fields the code is the
residue.  ``FieldSpec`` does scalar arithmetic on codes and vectorised
arithmetic on numpy arrays of codes; ``FieldElement`` is the user-facing
wrapper with operator overloading.

Canonical element order (used to pick "the smallest" root of unity) compares
coefficient tuples (c0, c1, ..., c_{m-1}) lexicographically, the same rule
used to pick the modulus.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    DivisionByZero,
    FieldMismatch,
    NoSuchRoot,
    NotPrime,
    SizeExceeded,
    ZeroElement,
)
from .numtheory import is_prime, order_from_group_exponent, prime_factors, totient

DEFAULT_SIZE_BOUND = 2**32
# log/antilog tables are built for fields up to this order
TABLE_LIMIT = 2**20
_EAGER_TABLES = 2**16
# full addition tables for odd-characteristic extensions up to this order
ADD_TABLE_LIMIT = 2**10
# candidate-power enumeration is used when phi(n) is at most this
_ROOT_ENUM_LIMIT = 4096


# ---------------------------------------------------------------------------
# polynomials over GF(p): lists of ints, low degree first, no trailing zeros


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _psub(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _trim(out)


def _pmul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([c % p for c in out])


def _pdivmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    if not b:
        raise DivisionByZero("polynomial division by zero")
    a = list(a)
    inv_lead = pow(b[-1], -1, p)
    db = len(b) - 1
    quot = [0] * max(len(a) - db, 0)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] * inv_lead % p
        if c:
            quot[k - db] = c
            for j, y in enumerate(b):
                a[k - db + j] = (a[k - db + j] - c * y) % p
    return _trim(quot), _trim(a[:db])


def _pmod(a: list[int], b: list[int], p: int) -> list[int]:
    return _pdivmod(a, b, p)[1]


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def _ppowmod(base: list[int], e: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(base, mod, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), mod, p)
        base = _pmod(_pmul(base, base, p), mod, p)
        e >>= 1
    return result


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Ben-Or irreducibility test for a polynomial over GF(p) (low degree first)."""
    f = _trim([c % p for c in poly])
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    if f[0] == 0:
        return False
    x = [0, 1]
    h = x
    for _ in range(m // 2):
        h = _ppowmod(h, p, f, p)
        if len(_pgcd(f, _psub(h, x, p), p)) > 1:
            return False
    return True


@lru_cache(maxsize=None)
def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree m (coefficients low first)."""
    for low in itertools.product(range(p), repeat=m):
        poly = low + (1,)
        if is_irreducible(poly, p):
            return poly
    raise AssertionError(f"no irreducible polynomial of degree {m} over GF({p})")


def _format_poly(coeffs: Sequence[int]) -> str:
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            mono = "x" if i == 1 else f"x^{i}"
            terms.append(mono if c == 1 else f"{c}*{mono}")
    return "+".join(terms) if terms else "0"


_TERM = re.compile(r"^(?:(\d+)\*?)?(x(?:\^(\d+))?)?$")


def _parse_poly(text: str, p: int) -> list[int]:
    text = text.replace(" ", "")
    if not text:
        raise ValueError("empty polynomial")
    coeffs: dict[int, int] = {}
    for term in text.split("+"):
        match = _TERM.match(term)
        if not match or term == "":
            raise ValueError(f"cannot parse polynomial term {term!r}")
        c, x, deg = match.groups()
        coef = int(c) if c is not None else 1
        power = (int(deg) if deg else 1) if x else 0
        if x is None and c is None:
            raise ValueError(f"cannot parse polynomial term {term!r}")
        coeffs[power] = (coeffs.get(power, 0) + coef) % p
    out = [0] * (max(coeffs) + 1)
    for k, v in coeffs.items():
        out[k] = v
    return out


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FieldSpec:
    """The finite field GF(p^m); create through :func:`field_create`."""

    p: int
    m: int = 1
    modulus: tuple[int, ...] | None = None

    @property
    def q(self) -> int:
        return self.p**self.m

    @property
    def order(self) -> int:
        return self.q

    @property
    def is_prime_field(self) -> bool:
        return self.m == 1

    def __str__(self) -> str:
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m}; modulus={_format_poly(self.modulus)})"

    def __repr__(self) -> str:
        return f"FieldSpec({self})"

    # -- codes <-> coefficients ------------------------------------------

    def digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.m):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def from_digits(self, ds: Sequence[int]) -> int:
        ds = _trim([int(c) % self.p for c in ds])
        if len(ds) > self.m:
            if self.m == 1:
                raise ValueError(f"polynomial of degree {len(ds) - 1} is not an element of {self}")
            ds = _pmod(ds, list(self.modulus), self.p)
        code = 0
        for c in reversed(list(ds)):
            code = code * self.p + c % self.p
        return code

    def sort_key(self, a: int) -> tuple[int, ...]:
        return tuple(self.digits(a))

    def canonical_codes(self) -> Iterator[int]:
        """All element codes in canonical order (zero first)."""
        if self.m == 1:
            yield from range(self.p)
            return
        weights = [self.p**i for i in range(self.m)]
        for t in itertools.product(range(self.p), repeat=self.m):
            yield sum(c * w for c, w in zip(t, weights))

    def format(self, a: int) -> str:
        if self.m == 1:
            return str(a)
        return _format_poly(self.digits(a))

    def parse(self, text: str | int) -> int:
        if isinstance(text, int):
            return text % self.p
        text = text.strip()
        if self.m == 1:
            return int(text) % self.p
        coeffs = _parse_poly(text, self.p)
        return self.from_digits(coeffs)

    # -- user-facing elements --------------------------------------------

    def __call__(self, x: int | str | Sequence[int] | FieldElement) -> FieldElement:
        """Element from an integer (its image n*1), a string, or coefficients."""
        if isinstance(x, FieldElement):
            if x.field != self:
                raise FieldMismatch(f"{x.field} element used in {self}")
            return x
        if isinstance(x, (int, np.integer)):
            return FieldElement(self, int(x) % self.p)
        if isinstance(x, str):
            return FieldElement(self, self.parse(x))
        return FieldElement(self, self.from_digits(list(x)))

    def element(self, code: int) -> FieldElement:
        return FieldElement(self, int(code))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def elements(self) -> Iterator[FieldElement]:
        for c in self.canonical_codes():
            yield FieldElement(self, c)

    # -- scalar arithmetic on codes --------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        return self.from_digits([x + y for x, y in zip(self.digits(a), self.digits(b))])

    def neg(self, a: int) -> int:
        if self.m == 1:
            return -a % self.p
        if self.p == 2:
            return a
        return self.from_digits([-x for x in self.digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        # large tables are only used once something else has built them
        tables = self._tables if self.q <= _EAGER_TABLES else self.__dict__.get("_tables")
        if tables is not None:
            exp, log = tables
            return int(exp[log[a] + log[b]])
        prod = _pmul(_trim(self.digits(a)), _trim(self.digits(b)), self.p)
        return self.from_digits(_pmod(prod, list(self.modulus), self.p))

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"inverse of zero in {self}")
        if self.m == 1:
            return pow(a, -1, self.p)
        # extended Euclid in GF(p)[x]
        r0, r1 = list(self.modulus), _trim(self.digits(a))
        s0, s1 = [], [1]
        while r1:
            quot, rem = _pdivmod(r0, r1, self.p)
            r0, r1 = r1, rem
            s0, s1 = s1, _psub(s0, _pmul(quot, s1, self.p), self.p)
        lead_inv = pow(r0[0], -1, self.p)  # r0 is a nonzero constant
        return self.from_digits([c * lead_inv for c in s0])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if self.m == 1:
            return pow(a, e, self.p)
        if a == 0:
            return 1 if e == 0 else 0
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def order_of(self, a: int) -> int:
        """Multiplicative order of a nonzero code."""
        if a == 0:
            raise ZeroElement("zero has no multiplicative order")
        return order_from_group_exponent(lambda e: self.pow(a, e) == 1, self.q - 1)

    # -- vectorised arithmetic on numpy arrays of codes -------------------

    @cached_property
    def _tables(self) -> tuple[np.ndarray, np.ndarray] | None:
        if self.m == 1 or self.q > TABLE_LIMIT:
            return None
        q = self.q
        gen = _primitive_code_slow(self)
        exp = np.zeros(2 * (q - 1), dtype=np.int64)
        poly_mod = list(self.modulus)
        g = _trim(self.digits(gen))
        cur = [1]
        for i in range(q - 1):
            exp[i] = self.from_digits(cur)
            cur = _pmod(_pmul(cur, g, self.p), poly_mod, self.p)
        exp[q - 1 :] = exp[: q - 1]
        log = np.zeros(q, dtype=np.int64)
        log[exp[: q - 1]] = np.arange(q - 1)
        return exp, log

    @property
    def _dtype(self):
        return np.int64 if self.q < 2**31 else object

    def array(self, values) -> np.ndarray:
        """Numpy array of codes from codes, FieldElements or nested lists of either."""
        if isinstance(values, np.ndarray) and values.dtype != object:
            return values.astype(self._dtype, copy=False)

        def conv(v):
            if isinstance(v, FieldElement):
                if v.field != self:
                    raise FieldMismatch(f"{v.field} element used in {self}")
                return v.value
            return int(v)

        arr = np.asarray(values, dtype=object)
        return np.vectorize(conv, otypes=[object])(arr).astype(self._dtype) if arr.size else np.zeros(arr.shape, dtype=self._dtype)

    @cached_property
    def _add_tables(self) -> tuple[np.ndarray, np.ndarray] | None:
        if self.m == 1 or self.p == 2 or self.q > ADD_TABLE_LIMIT:
            return None
        codes = np.arange(self.q, dtype=np.int64)
        return self._digit_add(codes[:, None], codes[None, :]), self._digit_neg(codes)

    def _digit_add(self, a, b):
        p = self.p
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        w = 1
        for _ in range(self.m):
            out = out + ((a % p + b % p) % p) * w
            a, b, w = a // p, b // p, w * p
        return out

    def _digit_neg(self, a):
        p = self.p
        out = np.zeros(a.shape, dtype=np.int64)
        w = 1
        for _ in range(self.m):
            out = out + ((-(a % p)) % p) * w
            a, w = a // p, w * p
        return out

    def vadd(self, a, b):
        a, b = np.asarray(a), np.asarray(b)
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        tables = self._add_tables
        if tables is not None:
            return tables[0][a, b]
        return self._digit_add(a, b)

    def vneg(self, a):
        a = np.asarray(a)
        if self.m == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        tables = self._add_tables
        if tables is not None:
            return tables[1][a]
        return self._digit_neg(a)

    def vsub(self, a, b):
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b):
        a, b = np.asarray(a), np.asarray(b)
        if self.m == 1:
            return (a * b) % self.p
        tables = self._tables
        if tables is None:
            return np.frompyfunc(self.mul, 2, 1)(a, b).astype(np.int64)
        exp, log = tables
        return np.where((a == 0) | (b == 0), 0, exp[log[a] + log[b]])

    def vpow(self, a, e: int):
        a = np.asarray(a)
        if e == 0:
            return np.ones(a.shape, dtype=np.int64)
        tables = self._tables
        if tables is not None and e > 0:
            exp, log = tables
            return np.where(a == 0, 0, exp[(log[a] * e) % (self.q - 1)])
        return np.frompyfunc(lambda x: self.pow(int(x), e), 1, 1)(a).astype(self._dtype)

    def vinv(self, a):
        a = np.asarray(a)
        if np.any(a == 0):
            raise DivisionByZero(f"inverse of zero in {self}")
        return self.vpow(a, self.q - 2)

    def vsum(self, a, axis=None):
        a = np.asarray(a)
        if self.m == 1:
            if a.dtype != object and a.shape and (self.p - 1) * (a.size or 1) >= 2**62:
                a = a.astype(object)
            return np.sum(a, axis=axis) % self.p
        if self.p == 2:
            return np.bitwise_xor.reduce(a, axis=axis) if a.size else np.zeros((), np.int64)
        p = self.p
        out = 0
        w = 1
        for _ in range(self.m):
            out = out + (np.sum(a % p, axis=axis) % p) * w
            a, w = a // p, w * p
        return out

    def matmul(self, A, B) -> np.ndarray:
        """Product of 2-d code arrays."""
        A, B = np.asarray(A), np.asarray(B)
        inner = A.shape[1]
        if self.m == 1 and A.dtype != object and (self.p - 1) ** 2 * max(inner, 1) < 2**63:
            return (A @ B) % self.p
        out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
        for k in range(inner):
            out = self.vadd(out, self.vmul(A[:, k, None], B[k][None, :]))
        return out

    def dot(self, u, v) -> int:
        return int(self.vsum(self.vmul(np.asarray(u), np.asarray(v))))


class FieldElement:
    """An element of a :class:`FieldSpec` with the usual operators."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value: int):
        self.field = field
        self.value = value

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"cannot combine {self.field} with {other.field}")
            return other.value
        if isinstance(other, (int, np.integer)):
            return int(other) % self.field.p
        return NotImplemented

    def _wrap(self, v: int) -> FieldElement:
        return FieldElement(self.field, v)

    def __add__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.sub(b, self.value))

    def __mul__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.div(self.value, b))

    def __rtruediv__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.div(b, self.value))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __pow__(self, e: int):
        return self._wrap(self.field.pow(self.value, int(e)))

    def inverse(self) -> FieldElement:
        return self._wrap(self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, np.integer)):
            return self.value == int(other) % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __lt__(self, other: FieldElement) -> bool:
        if not isinstance(other, FieldElement) or other.field != self.field:
            raise FieldMismatch("elements of different fields are not ordered")
        return self.field.sort_key(self.value) < self.field.sort_key(other.value)

    def __bool__(self):
        return self.value != 0

    @property
    def coeffs(self) -> list[int]:
        return self.field.digits(self.value)

    def __str__(self) -> str:
        return self.field.format(self.value)

    def __repr__(self) -> str:
        return f"{self.field.format(self.value)} in {self.field}"


# ---------------------------------------------------------------------------
# construction and number-theoretic helpers


def field_create(p: int, m: int = 1, bound: int = DEFAULT_SIZE_BOUND) -> FieldSpec:
    """GF(p^m) with the lexicographically smallest monic irreducible modulus."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if m < 1:
        raise ValueError("extension degree must be >= 1")
    if p**m > bound:
        raise SizeExceeded(f"GF({p}^{m}) has order {p**m} > bound {bound}")
    return _cached_field(p, m)


@lru_cache(maxsize=None)
def _cached_field(p: int, m: int) -> FieldSpec:
    if m == 1:
        return FieldSpec(p, 1, None)
    return FieldSpec(p, m, smallest_irreducible(p, m))


_FIELD_RE = re.compile(
    r"^(?:GF\(\s*(\d+)\s*(?:\^\s*(\d+))?\s*(?:;\s*modulus\s*=\s*([^)]*))?\)|Z_?(\d+))$",
    re.IGNORECASE,
)


def parse_field(text: str, bound: int = DEFAULT_SIZE_BOUND) -> FieldSpec:
    """Parse ``GF(p)``, ``GF(p^m)``, ``GF(q)`` for a prime power q, ``Z_p``,
    or the canonical ``GF(p^m; modulus=...)`` form."""
    match = _FIELD_RE.match(text.strip())
    if not match:
        raise ValueError(f"cannot parse field description {text!r}")
    base, exp, modulus, zp = match.groups()
    if zp is not None:
        return field_create(int(zp), 1, bound)
    base = int(base)
    if exp is not None:
        p, m = base, int(exp)
    elif is_prime(base):
        p, m = base, 1
    else:
        factors = prime_factors(base) if base > 1 else []
        if len(factors) != 1:
            raise NotPrime(f"{base} is not a prime power")
        p = factors[0]
        m = round(math.log(base, p))
        if p**m != base:
            raise NotPrime(f"{base} is not a prime power")
    spec = field_create(p, m, bound)
    if modulus is not None and m > 1:
        poly = tuple(_parse_poly(modulus, p))
        if len(poly) != m + 1 or poly[-1] != 1 or not is_irreducible(poly, p):
            raise ValueError(f"{modulus!r} is not a monic irreducible of degree {m}")
        spec = FieldSpec(p, m, poly)
    return spec


def _primitive_code_slow(F: FieldSpec) -> int:
    # scalar polynomial arithmetic only; used to seed the log tables
    q = F.q
    if q == 2:
        return 1
    factors = prime_factors(q - 1)
    modulus = list(F.modulus) if F.m > 1 else None

    def pw(a: int, e: int) -> int:
        if F.m == 1:
            return pow(a, e, F.p)
        return F.from_digits(_ppowmod(_trim(F.digits(a)), e, modulus, F.p))

    for a in F.canonical_codes():
        if a == 0:
            continue
        if all(pw(a, (q - 1) // f) != 1 for f in factors):
            return a
    raise AssertionError("multiplicative group is cyclic")


def find_primitive_element(F: FieldSpec) -> FieldElement:
    """Smallest generator of the multiplicative group in canonical order."""
    return FieldElement(F, _primitive_code_slow(F))


def element_order(a: FieldElement) -> int:
    return a.field.order_of(a.value)


def frobenius_power(a: FieldElement, l: int) -> FieldElement:
    return a**l


def find_primitive_root_of_unity(F: FieldSpec, n: int) -> FieldElement:
    """Smallest element (canonical order) of multiplicative order exactly n."""
    if n < 1 or (F.q - 1) % n:
        raise NoSuchRoot(f"{n} does not divide {F.q - 1}; no primitive {n}-th root in {F}")
    if totient(n) <= _ROOT_ENUM_LIMIT:
        beta = _primitive_code_slow(F)
        base = F.pow(beta, (F.q - 1) // n)
        cands = [F.pow(base, j) for j in range(1, n + 1) if math.gcd(j, n) == 1]
        return FieldElement(F, min(cands, key=F.sort_key))
    factors = prime_factors(n)
    for a in F.canonical_codes():
        if a and F.pow(a, n) == 1 and all(F.pow(a, n // f) != 1 for f in factors):
            return FieldElement(F, a)
    raise AssertionError("unreachable: n | q-1 guarantees a root")


def elements_of(F: FieldSpec, codes: Iterable[int]) -> list[FieldElement]:
    return [FieldElement(F, int(c)) for c in codes]
