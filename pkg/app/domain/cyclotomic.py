"""
Cyclotomic integers Z[ω] with canonical representatives.

An element of Z[ω] (ω a primitive r-th root of unity) is stored as its
coefficient vector modulo the r-th cyclotomic polynomial Φ_r, so two values
are equal exactly when their coefficient tuples are equal.

Coefficients are Python ints checked against the signed 64-bit range after
every operation; leaving the range raises CoefficientOverflowError.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple, Union

from app.core.exceptions import CoefficientOverflowError, RingMismatchError, UsageError

INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1


def _check(value: int) -> int:
    if value < INT64_MIN or value > INT64_MAX:
        raise CoefficientOverflowError(value)
    return value


def _poly_divide_exact(num: List[int], den: Sequence[int]) -> List[int]:
    """Divide integer polynomials (low degree first); den must be monic and divide num."""
    num = list(num)
    deg_d = len(den) - 1
    quotient = [0] * (len(num) - deg_d)
    for i in range(len(num) - 1, deg_d - 1, -1):
        c = num[i]
        if c == 0:
            continue
        quotient[i - deg_d] = c
        for j, d in enumerate(den):
            num[i - deg_d + j] -= c * d
    if any(num[:deg_d]):
        raise ArithmeticError("cyclotomic division left a remainder")
    return quotient


@lru_cache(maxsize=None)
def cyclotomic_poly(r: int) -> Tuple[int, ...]:
    """
    Coefficients of the monic cyclotomic polynomial Φ_r, lowest degree first.

    Φ_r = (x^r - 1) / Π_{d | r, d < r} Φ_d, computed by exact division.

    >>> cyclotomic_poly(6)
    (1, -1, 1)
    """
    if not isinstance(r, int) or r < 1:
        raise UsageError(f"ring order r must be a positive integer, got {r!r}")
    poly = [-1] + [0] * (r - 1) + [1]
    for d in range(1, r):
        if r % d == 0:
            poly = _poly_divide_exact(poly, cyclotomic_poly(d))
    return tuple(poly)


def degree(r: int) -> int:
    """φ(r): the number of coefficients of a CycInt of order r."""
    return len(cyclotomic_poly(r)) - 1


def _reduce(r: int, coeffs: Sequence[int]) -> Tuple[int, ...]:
    """Reduce an arbitrary-length ω-polynomial modulo Φ_r."""
    phi = cyclotomic_poly(r)
    deg = len(phi) - 1
    work = list(coeffs)
    for i in range(len(work) - 1, deg - 1, -1):
        c = work[i]
        if c == 0:
            continue
        # Φ_r is monic: x^deg = -(phi[0] + ... + phi[deg-1] x^(deg-1))
        for j in range(deg):
            if phi[j]:
                work[i - deg + j] -= c * phi[j]
    work = work[:deg] + [0] * (deg - len(work))
    return tuple(_check(c) for c in work)


IntLike = Union["CycInt", int]


@dataclass(frozen=True, eq=False)
class CycInt:
    """An element of Z[ω_r] in canonical form; use from_int/omega to build."""
    order: int
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        expected = degree(self.order)
        if len(self.coeffs) != expected:
            raise UsageError(
                f"CycInt of order {self.order} needs {expected} coefficients, got {len(self.coeffs)}"
            )

    # ---------- constructors ----------

    @classmethod
    def from_coeffs(cls, r: int, coeffs: Sequence[int]) -> "CycInt":
        """Build from any ω-polynomial (powers of ω, lowest first), reducing mod Φ_r."""
        return cls(r, _reduce(r, coeffs))

    @classmethod
    def from_int(cls, r: int, value: int) -> "CycInt":
        return cls.from_coeffs(r, [value])

    @classmethod
    def zero(cls, r: int) -> "CycInt":
        return cls(r, (0,) * degree(r))

    @classmethod
    def one(cls, r: int) -> "CycInt":
        return cls.from_int(r, 1)

    # ---------- ring operations ----------

    def _coerce(self, other: IntLike) -> "CycInt":
        if isinstance(other, CycInt):
            if other.order != self.order:
                raise RingMismatchError(self.order, other.order)
            return other
        if isinstance(other, int):
            return CycInt.from_int(self.order, other)
        return NotImplemented

    def __add__(self, other: IntLike) -> "CycInt":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycInt(self.order, tuple(_check(a + b) for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "CycInt":
        return CycInt(self.order, tuple(_check(-a) for a in self.coeffs))

    def __sub__(self, other: IntLike) -> "CycInt":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycInt(self.order, tuple(_check(a - b) for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other: IntLike) -> "CycInt":
        return (-self) + other

    def __mul__(self, other: IntLike) -> "CycInt":
        if isinstance(other, int):
            return CycInt(self.order, tuple(_check(a * other) for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        product = [0] * (2 * len(self.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    product[i + j] += a * b
        return CycInt.from_coeffs(self.order, product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "CycInt":
        if exponent < 0:
            raise UsageError("negative powers are not supported in Z[ω]")
        result = CycInt.one(self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # ---------- predicates ----------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.coeffs == CycInt.from_int(self.order, other).coeffs
        if not isinstance(other, CycInt):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def equals(self, other: "CycInt") -> bool:
        """Canonical equality; raises on ring mismatch instead of returning False."""
        return (self - other).is_zero()

    def is_integer(self) -> bool:
        """True when the value lies in Z (only the constant coefficient is nonzero)."""
        return not any(self.coeffs[1:])

    def as_int(self) -> int:
        if not self.is_integer():
            raise UsageError(f"{self.format()} is not an integer")
        return self.coeffs[0]

    # ---------- formatting / serialization ----------

    def format(self) -> str:
        """Human form in powers of w, lowest first, e.g. '-1-w' or '2+w^3'."""
        parts: List[str] = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if j == 0:
                body = str(abs(c))
            else:
                mono = "w" if j == 1 else f"w^{j}"
                body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
            sign = "-" if c < 0 else ("+" if parts else "")
            parts.append(sign + body)
        return "".join(parts) if parts else "0"

    def to_json(self) -> Dict[str, object]:
        return {"r": self.order, "c": list(self.coeffs)}

    @classmethod
    def from_json(cls, data: Dict[str, object]) -> "CycInt":
        return cls(int(data["r"]), tuple(int(c) for c in data["c"]))

    def __repr__(self) -> str:
        return f"CycInt(r={self.order}, {self.format()})"


@lru_cache(maxsize=None)
def omega(r: int, k: int) -> CycInt:
    """Canonical representative of ω^(k mod r) in Z[ω_r]."""
    if r < 1:
        raise UsageError(f"ring order r must be a positive integer, got {r!r}")
    e = k % r
    return CycInt.from_coeffs(r, [0] * e + [1])


def signed_omega(r: int, sign: int, k: int) -> CycInt:
    """sign·ω^k with sign ∈ {+1, -1}."""
    value = omega(r, k)
    return value if sign >= 0 else -value
