"""
One-dimensional characters used as signs in the signed Mahonian sums.

B_n has four (trivial, sign, neg, abssign) plus the inversion-parity weight
invA; D_n has trivial and sign (and the restrictions of the others);
G(r, n) has the 2r characters χ_{a,b}(π) = (-1)^{a(ℓ(π) - Z(π))} ω^{b·Z(π)}.

For folding, every character factors through a small signature of the
element: a parity for the named characters and ((ℓ - Z) mod 2, Z mod r) for
χ_{a,b}. The signature does not depend on (a, b).
"""
import re
from dataclasses import dataclass
from typing import Callable, Dict, Hashable, Optional, Tuple

from app.core.exceptions import FamilyMismatchError, InvalidElementError, UsageError
from app.domain.cyclotomic import CycInt, signed_omega
from app.domain.elements import ColoredPerm, Family, LetterOrder
from app.domain import statistics as st

NAMED = ("trivial", "sign", "neg", "abssign", "invA")

_ALLOWED: Dict[Family, Tuple[str, ...]] = {
    Family.S: ("trivial", "sign"),
    Family.B: NAMED,
    Family.D: NAMED,
    Family.G: ("trivial",),
}


def _sign_exponent(family: Family) -> Callable[[ColoredPerm], int]:
    if family is Family.S:
        return lambda pi: st.inv(pi, LetterOrder.NATURAL_S)
    if family is Family.D:
        return st.len_d
    return st.len_b


_NAMED_EXPONENT: Dict[str, Callable[[ColoredPerm], int]] = {
    "neg": st.neg,
    "abssign": st.inv_abs,
    "invA": lambda pi: st.inv(pi, LetterOrder.INTEGER_B),
}


@dataclass(frozen=True)
class CharSpec:
    """
    A character of a family: `name` for the named characters, or the pair
    (a, b) when name is None (G only).
    """
    family: Family
    r: int
    name: Optional[str] = None
    a: int = 0
    b: int = 0

    def __post_init__(self):
        if self.name is not None:
            if self.name not in _ALLOWED[self.family]:
                raise FamilyMismatchError(f"character {self.name}", self.family.value)
        else:
            if self.family is not Family.G:
                raise FamilyMismatchError("character χ_{a,b}", self.family.value)
            if self.a not in (0, 1) or not 0 <= self.b < self.r:
                raise UsageError(f"χ_{{a,b}} needs a in {{0,1}} and 0 <= b < r, got a={self.a}, b={self.b}")

    @classmethod
    def trivial(cls, family: Family, r: int) -> "CharSpec":
        return cls(family, r, "trivial")

    @classmethod
    def chi(cls, r: int, a: int, b: int) -> "CharSpec":
        return cls(Family.G, r, None, a, b)

    @property
    def is_chi(self) -> bool:
        return self.name is None

    @property
    def is_trivial(self) -> bool:
        return self.name == "trivial" or (self.is_chi and self.a == 0 and self.b == 0)

    def label(self) -> str:
        return self.name if self.name else f"a={self.a},b={self.b}"

    # ---------- signature fold support ----------

    def signature(self) -> Callable[[ColoredPerm], Hashable]:
        """Map an element to the data its character value depends on."""
        if self.is_chi:
            r = self.r

            def chi_signature(pi: ColoredPerm) -> Tuple[int, int]:
                z = st.color_sum(pi)
                return (st.len_g(pi) - z) % 2, z % r
            return chi_signature
        if self.name == "trivial":
            return lambda pi: 0
        exponent = _sign_exponent(self.family) if self.name == "sign" else _NAMED_EXPONENT[self.name]
        return lambda pi: exponent(pi) % 2

    def value_at(self, signature: Hashable) -> CycInt:
        """Character value for a signature produced by `signature()`."""
        if self.is_chi:
            parity, z = signature
            sign = -1 if (self.a * parity) % 2 else 1
            return signed_omega(self.r, sign, self.b * z)
        return CycInt.from_int(self.r, -1 if signature else 1)

    def __call__(self, pi: ColoredPerm) -> CycInt:
        return char_value(self, pi)


def char_value(spec: CharSpec, pi: ColoredPerm) -> CycInt:
    """Exact value of the character at π."""
    if pi.r != spec.r:
        raise FamilyMismatchError(f"character {spec.label()}", f"G({pi.r},{pi.n})",
                                  f"character is defined for r={spec.r}")
    if spec.family is Family.D and pi.neg_count() % 2:
        raise FamilyMismatchError(f"character {spec.label()}", Family.B.value,
                                  "element is not in D_n")
    return spec.value_at(spec.signature()(pi))


_CHI = re.compile(r"^a\s*=\s*(\d+)\s*,\s*b\s*=\s*(\d+)$")


def parse_char(text: Optional[str], family: Family, r: int) -> CharSpec:
    """'trivial' | 'sign' | 'neg' | 'abssign' | 'invA' | 'a=1,b=2'; None means trivial."""
    if text is None or text.strip() == "":
        return CharSpec.trivial(family, r)
    text = text.strip()
    match = _CHI.match(text)
    if match:
        if family is not Family.G:
            raise FamilyMismatchError(f"character {text}", family.value)
        return CharSpec.chi(r, int(match.group(1)), int(match.group(2)))
    for name in NAMED:
        if text.lower() == name.lower():
            return CharSpec(family, r, name)
    raise UsageError(f"unknown character '{text}'; expected {', '.join(NAMED)} or a=..,b=..")


def compose(pi: ColoredPerm, other: ColoredPerm) -> ColoredPerm:
    """
    Wreath product composition: (π∘π')_i has value σ_{σ'_i} and color
    z_{σ'_i} + z'_i mod r.
    """
    if pi.r != other.r or pi.n != other.n:
        raise InvalidElementError(f"cannot compose G({pi.r},{pi.n}) with G({other.r},{other.n})")
    r = pi.r
    sigma = tuple(pi.sigma[j - 1] for j in other.sigma)
    z = tuple((pi.z[j - 1] + c) % r for j, c in zip(other.sigma, other.z))
    return ColoredPerm.trusted(r, sigma, z)
