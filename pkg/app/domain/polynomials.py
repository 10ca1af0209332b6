"""
Exact polynomials in q (and optionally t) over Z[ω].

Poly2 keeps a sparse map (q exponent, t exponent) -> CycInt with no stored
zero coefficients. Every distribution, closed form and difference polynomial
in the verifier is a Poly2.
"""
import json
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from app.core.exceptions import RingMismatchError, UsageError
from app.domain.cyclotomic import CycInt

Monomial = Tuple[int, int]
Scalar = Union[CycInt, int]


class Poly2:
    """Immutable sparse polynomial in Z[ω][q, t]."""

    __slots__ = ("_r", "_terms")

    def __init__(self, r: int, terms: Optional[Mapping[Monomial, Scalar]] = None):
        self._r = r
        clean: Dict[Monomial, CycInt] = {}
        for (qe, te), c in (terms or {}).items():
            if qe < 0 or te < 0:
                raise UsageError(f"negative exponent in monomial q^{qe}t^{te}")
            c = self._scalar(c)
            if not c.is_zero():
                clean[(qe, te)] = c
        self._terms = clean

    # ---------- constructors ----------

    @classmethod
    def zero(cls, r: int) -> "Poly2":
        return cls(r)

    @classmethod
    def one(cls, r: int) -> "Poly2":
        return cls(r, {(0, 0): 1})

    @classmethod
    def monomial(cls, r: int, coeff: Scalar = 1, q: int = 0, t: int = 0) -> "Poly2":
        return cls(r, {(q, t): coeff})

    @classmethod
    def from_int_coeffs(cls, r: int, coeffs: Iterable[int]) -> "Poly2":
        """Univariate polynomial from integer coefficients, constant term first."""
        return cls(r, {(i, 0): c for i, c in enumerate(coeffs) if c})

    @classmethod
    def _from_clean(cls, r: int, terms: Dict[Monomial, CycInt]) -> "Poly2":
        poly = cls.__new__(cls)
        poly._r = r
        poly._terms = {m: c for m, c in terms.items() if not c.is_zero()}
        return poly

    # ---------- accessors ----------

    @property
    def ring_order(self) -> int:
        return self._r

    @property
    def terms(self) -> Dict[Monomial, CycInt]:
        return dict(self._terms)

    def sorted_terms(self) -> List[Tuple[Monomial, CycInt]]:
        """Terms by ascending total degree, then ascending q-degree."""
        return sorted(self._terms.items(), key=lambda item: (item[0][0] + item[0][1], item[0][0]))

    def __iter__(self) -> Iterator[Tuple[Monomial, CycInt]]:
        return iter(self.sorted_terms())

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_univariate(self) -> bool:
        return all(te == 0 for _, te in self._terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((qe + te for qe, te in self._terms), default=-1)

    def q_degree(self) -> int:
        return max((qe for qe, _ in self._terms), default=-1)

    def int_coefficients(self) -> List[int]:
        """Dense integer coefficient list of a univariate integer polynomial."""
        if not self.is_univariate():
            raise UsageError("int_coefficients needs a univariate polynomial")
        dense = [0] * (self.q_degree() + 1)
        for (qe, _), c in self._terms.items():
            dense[qe] = c.as_int()
        return dense

    # ---------- arithmetic ----------

    def _scalar(self, c: Scalar) -> CycInt:
        if isinstance(c, CycInt):
            if c.order != self._r:
                raise RingMismatchError(self._r, c.order)
            return c
        return CycInt.from_int(self._r, int(c))

    def _coerce(self, other) -> "Poly2":
        if isinstance(other, Poly2):
            if other._r != self._r:
                raise RingMismatchError(self._r, other._r)
            return other
        if isinstance(other, (int, CycInt)):
            return Poly2(self._r, {(0, 0): other})
        return NotImplemented

    def __add__(self, other) -> "Poly2":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        result = dict(self._terms)
        for m, c in other._terms.items():
            result[m] = result[m] + c if m in result else c
        return Poly2._from_clean(self._r, result)

    __radd__ = __add__

    def __neg__(self) -> "Poly2":
        return Poly2._from_clean(self._r, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Poly2":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Poly2":
        return (-self) + other

    def __mul__(self, other) -> "Poly2":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        result: Dict[Monomial, CycInt] = {}
        for (q1, t1), c1 in self._terms.items():
            for (q2, t2), c2 in other._terms.items():
                m = (q1 + q2, t1 + t2)
                c = c1 * c2
                result[m] = result[m] + c if m in result else c
        return Poly2._from_clean(self._r, result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly2":
        if exponent < 0:
            raise UsageError("negative powers are not supported")
        result = Poly2.one(self._r)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Poly2(self._r, {(0, 0): other})
        if not isinstance(other, Poly2):
            return NotImplemented
        return self._r == other._r and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._r, frozenset(self._terms.items())))

    def equals(self, other: "Poly2") -> bool:
        """Canonical equality; raises on ring mismatch."""
        return (self - other).is_zero()

    # ---------- transforms ----------

    def transpose(self) -> "Poly2":
        """Swap the roles of q and t."""
        return Poly2._from_clean(self._r, {(te, qe): c for (qe, te), c in self._terms.items()})

    def at_one(self) -> CycInt:
        """Value at q = t = 1 (sum of all coefficients)."""
        total = CycInt.zero(self._r)
        for c in self._terms.values():
            total = total + c
        return total

    def __repr__(self) -> str:
        return f"Poly2(r={self._r}, {format_poly(self)})"

    # ---------- serialization ----------

    def to_json(self) -> Dict[str, object]:
        return {
            "r": self._r,
            "terms": [{"q": qe, "t": te, "c": list(c.coeffs)} for (qe, te), c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data: Mapping[str, object]) -> "Poly2":
        r = int(data["r"])
        terms: Dict[Monomial, CycInt] = {}
        for term in data.get("terms", []):
            terms[(int(term["q"]), int(term["t"]))] = CycInt(r, tuple(int(c) for c in term["c"]))
        return cls(r, terms)


def q_bracket(k: int, unit: Scalar, qpow: int, tpow: int, r: Optional[int] = None) -> Poly2:
    """
    [k]_u = 1 + u + ... + u^(k-1) for the argument u = unit·q^qpow·t^tpow.

    Args:
        k: number of terms (0 gives the zero polynomial)
        unit: CycInt scale, or a plain int when r is given
        qpow, tpow: exponents of q and t in u
        r: ring order, required when unit is an int
    """
    if k < 0:
        raise UsageError(f"bracket length must be nonnegative, got {k}")
    if isinstance(unit, CycInt):
        ring = unit.order
    else:
        if r is None:
            raise UsageError("q_bracket needs r when the unit is an integer")
        ring = r
        unit = CycInt.from_int(r, unit)
    terms: Dict[Monomial, CycInt] = {}
    power = CycInt.one(ring)
    for j in range(k):
        m = (j * qpow, j * tpow)
        terms[m] = terms[m] + power if m in terms else power
        power = power * unit
    return Poly2._from_clean(ring, terms)


def _monomial_text(qe: int, te: int) -> str:
    text = ""
    if qe:
        text += "q" if qe == 1 else f"q^{qe}"
    if te:
        text += "t" if te == 1 else f"t^{te}"
    return text


def format_human(poly: Poly2) -> str:
    """
    Render terms in graded order: '1 - q^3', '1 + (w)q + (-1-w)q^2', 'q^3t'.

    Integer coefficients carry the sign and drop a unit magnitude; other
    coefficients are parenthesised and always joined with ' + '.
    """
    if poly.is_zero():
        return "0"
    pieces: List[str] = []
    for (qe, te), c in poly.sorted_terms():
        mono = _monomial_text(qe, te)
        if c.is_integer():
            value = c.coeffs[0]
            magnitude = "" if abs(value) == 1 and mono else str(abs(value))
            body = magnitude + mono
            if not pieces:
                pieces.append(("-" if value < 0 else "") + body)
            else:
                pieces.append((" - " if value < 0 else " + ") + body)
        else:
            body = f"({c.format()}){mono}"
            pieces.append(body if not pieces else " + " + body)
    return "".join(pieces)


def format_poly(poly: Poly2, style: str = "human") -> str:
    """Format as 'human' text or as the 'json' interchange document."""
    if style == "human":
        return format_human(poly)
    if style == "json":
        return json.dumps(poly.to_json(), separators=(",", ":"))
    raise UsageError(f"unknown polynomial style '{style}'")


def parse_poly(text: str) -> Poly2:
    """Inverse of format_poly(..., 'json')."""
    try:
        return Poly2.from_json(json.loads(text))
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"malformed polynomial JSON: {exc}")
