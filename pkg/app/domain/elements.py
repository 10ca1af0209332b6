"""
Colored permutations, letter orders and group enumeration.

An element of G(r, n) = C_r ≀ S_n is a pair (z, σ): σ a permutation of
{1..n} in one-line notation and z a color vector in {0..r-1}^n. The
letter at position i is (σ_i, z_i). S_n is the case r = 1 and B_n the case
r = 2, where color 1 means a negative entry.
"""
import itertools
import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import factorial
from typing import Dict, Hashable, Iterator, List, Optional, Sequence, Tuple

from app.core.exceptions import ElementParseError, FamilyMismatchError, InvalidElementError, UsageError

Letter = Tuple[int, int]


# ============================================================
# FAMILIES
# ============================================================

class Family(str, Enum):
    """The four groups the verifier sums over."""
    S = "S"
    B = "B"
    D = "D"
    G = "G"

    @classmethod
    def parse(cls, text: str) -> "Family":
        try:
            return cls(text.strip().upper())
        except ValueError:
            raise UsageError(f"unknown family '{text}'; expected one of s, b, d, g")

    @property
    def fixed_r(self) -> Optional[int]:
        return {Family.S: 1, Family.B: 2, Family.D: 2}.get(self)

    def resolve_r(self, r: Optional[int]) -> int:
        """The ring order for this family, validating a caller-supplied r."""
        fixed = self.fixed_r
        if fixed is None:
            if r is None:
                raise UsageError("family G needs the number of colors r")
            if r < 1:
                raise UsageError(f"r must be >= 1, got {r}")
            return r
        if r is not None and r != fixed:
            raise FamilyMismatchError(f"r={r}", self.value, f"the family fixes r={fixed}")
        return fixed

    def group_order(self, n: int, r: int) -> int:
        if self is Family.D:
            return factorial(n) * (2 ** (n - 1) if n >= 1 else 1)
        return factorial(n) * r ** n


# ============================================================
# ELEMENTS
# ============================================================

@dataclass(frozen=True)
class ColoredPerm:
    """An element (z, σ) of G(r, n). Validated on construction."""
    r: int
    sigma: Tuple[int, ...]
    z: Tuple[int, ...]

    def __post_init__(self):
        if self.r < 1:
            raise InvalidElementError(f"number of colors must be >= 1, got {self.r}")
        if len(self.sigma) != len(self.z):
            raise InvalidElementError(
                f"sigma has {len(self.sigma)} entries but z has {len(self.z)}"
            )
        if sorted(self.sigma) != list(range(1, len(self.sigma) + 1)):
            raise InvalidElementError(f"{list(self.sigma)} is not a permutation of 1..{len(self.sigma)}")
        for c in self.z:
            if not 0 <= c < self.r:
                raise InvalidElementError(f"color {c} outside 0..{self.r - 1}")

    @classmethod
    def trusted(cls, r: int, sigma: Tuple[int, ...], z: Tuple[int, ...]) -> "ColoredPerm":
        """Skip validation; for enumerators that construct valid data by design."""
        obj = object.__new__(cls)
        obj.__dict__.update(r=r, sigma=sigma, z=z)
        return obj

    def memo(self) -> Dict[Hashable, object]:
        """Scratch space for data derived from this element (letter keys, order statistics)."""
        try:
            return self.__dict__["_memo"]
        except KeyError:
            memo: Dict[Hashable, object] = {}
            object.__setattr__(self, "_memo", memo)
            return memo

    @classmethod
    def identity(cls, n: int, r: int = 1) -> "ColoredPerm":
        return cls.trusted(r, tuple(range(1, n + 1)), (0,) * n)

    @classmethod
    def from_letters(cls, r: int, letters: Sequence[Letter]) -> "ColoredPerm":
        return cls(r, tuple(v for v, _ in letters), tuple(c for _, c in letters))

    @property
    def n(self) -> int:
        return len(self.sigma)

    @property
    def letters(self) -> Tuple[Letter, ...]:
        return tuple(zip(self.sigma, self.z))

    def neg_count(self) -> int:
        return sum(1 for c in self.z if c)

    def to_json(self) -> Dict[str, object]:
        return {"r": self.r, "sigma": list(self.sigma), "z": list(self.z)}

    @classmethod
    def from_json(cls, data: Dict[str, object]) -> "ColoredPerm":
        try:
            return cls(int(data["r"]), tuple(int(v) for v in data["sigma"]), tuple(int(c) for c in data["z"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ElementParseError(str(data), f"bad element JSON ({exc})")

    def __str__(self) -> str:
        return format_element(self)


_TOKEN = re.compile(r"^(-)?(\d+)(?:\[(\d+)\])?$")


def parse_element(text: str, r: int) -> ColoredPerm:
    """
    Parse window notation: whitespace-separated letters '5' (color 0) or
    '3[2]' (value 3, color 2). When r = 2, '-3' is accepted for '3[1]'.
    """
    letters: List[Letter] = []
    for token in text.replace(",", " ").split():
        match = _TOKEN.match(token)
        if not match:
            raise ElementParseError(text, f"bad letter '{token}'")
        minus, value, color = match.groups()
        if minus:
            if color is not None:
                raise ElementParseError(text, f"'{token}' mixes a sign with a color")
            if r != 2:
                raise ElementParseError(text, "negative letters need r = 2")
            letters.append((int(value), 1))
        else:
            letters.append((int(value), int(color) if color is not None else 0))
    try:
        return ColoredPerm.from_letters(r, letters)
    except InvalidElementError as exc:
        raise ElementParseError(text, exc.message)


def format_element(pi: ColoredPerm, signed: bool = False) -> str:
    """Window notation; with signed=True (r = 2 only) negatives print as '-v'."""
    if signed and pi.r != 2:
        raise UsageError("signed printing needs r = 2")
    parts = []
    for v, c in pi.letters:
        if c == 0:
            parts.append(str(v))
        elif signed:
            parts.append(f"-{v}")
        else:
            parts.append(f"{v}[{c}]")
    return " ".join(parts)


# ============================================================
# LETTER ORDERS
# ============================================================

class LetterOrder(str, Enum):
    """
    Total orders on colored letters (v, c).

    NATURAL_S    1 < 2 < ... < n (colorless letters only)
    INTEGER_B    -n < ... < -1 < 1 < ... < n
    SIGN_BLOCK_B -1 < ... < -n < 1 < ... < n
    VALUE_BLOCK_G  (n^[r-1] < ... < n^[1]) < ... < (1^[r-1] < ... < 1^[1]) < 1 < ... < n
    COLOR_BLOCK_G  (1^[r-1] < ... < n^[r-1]) < ... < (1^[1] < ... < n^[1]) < 1 < ... < n
    """
    NATURAL_S = "NaturalS"
    INTEGER_B = "IntegerB"
    SIGN_BLOCK_B = "SignBlockB"
    VALUE_BLOCK_G = "ValueBlockG"
    COLOR_BLOCK_G = "ColorBlockG"

    @classmethod
    def parse(cls, text: str) -> "LetterOrder":
        for order in cls:
            if text.lower() in (order.value.lower(), order.name.lower()):
                return order
        raise UsageError(f"unknown letter order '{text}'; expected one of {[o.value for o in cls]}")

    def key(self, v: int, c: int, n: int, r: int) -> int:
        """Integer sort key; letters compare as their keys."""
        if self is LetterOrder.NATURAL_S:
            return v
        if self is LetterOrder.INTEGER_B:
            return -v if c else v
        if self is LetterOrder.SIGN_BLOCK_B:
            return v - (n + 1) if c else v
        if self is LetterOrder.VALUE_BLOCK_G:
            return -(v * r + c) if c else v
        return v - c * (n + 1)

    def check_letter(self, v: int, c: int, n: int, r: int) -> None:
        if not 1 <= v <= n or not 0 <= c < r:
            raise InvalidElementError(f"letter {v}[{c}] is not valid in G({r},{n})")
        if self is LetterOrder.NATURAL_S and c != 0:
            raise InvalidElementError(f"{self.value} orders colorless letters only, got {v}[{c}]")
        if self in (LetterOrder.INTEGER_B, LetterOrder.SIGN_BLOCK_B) and c > 1:
            raise InvalidElementError(f"{self.value} orders signed letters only, got {v}[{c}]")

    def supports(self, r: int) -> bool:
        """Whether every letter of G(r, n) is comparable under this order."""
        if self is LetterOrder.NATURAL_S:
            return r == 1
        if self in (LetterOrder.INTEGER_B, LetterOrder.SIGN_BLOCK_B):
            return r <= 2
        return True


@lru_cache(maxsize=None)
def key_table(order: LetterOrder, n: int, r: int) -> Tuple[Tuple[int, ...], ...]:
    """table[c][v] is the key of letter v^[c]; column 0 is unused."""
    return tuple(
        tuple(order.key(v, c, n, r) if v else 0 for v in range(n + 1))
        for c in range(r)
    )


def check_order(pi: ColoredPerm, order: LetterOrder) -> None:
    """Raise InvalidElementError unless every letter of π is valid under `order`."""
    for v, c in zip(pi.sigma, pi.z):
        order.check_letter(v, c, pi.n, pi.r)


def letter_keys(pi: ColoredPerm, order: LetterOrder) -> List[int]:
    """
    Sort keys of π's letters under `order`, memoized on the element.

    Unvalidated: enumerated elements are valid by construction; parsed input
    goes through check_order first. Callers must not mutate the list.
    """
    memo = pi.memo()
    keys = memo.get(order)
    if keys is None:
        table = key_table(order, pi.n, pi.r)
        keys = [table[c][v] for v, c in zip(pi.sigma, pi.z)]
        memo[order] = keys
    return keys


def compare_letters(order: LetterOrder, a: Letter, b: Letter, n: int, r: int) -> int:
    """-1, 0 or 1 as letter a is less than, equal to or greater than letter b."""
    order.check_letter(*a, n, r)
    order.check_letter(*b, n, r)
    ka, kb = order.key(*a, n, r), order.key(*b, n, r)
    return (ka > kb) - (ka < kb)


# ============================================================
# ENUMERATION
# ============================================================

def _check_params(family: Family, n: int, r: int) -> None:
    if n < 0:
        raise UsageError(f"n must be >= 0, got {n}")
    expected = family.fixed_r
    if expected is not None and r != expected:
        raise FamilyMismatchError(f"r={r}", family.value, f"the family fixes r={expected}")
    if r < 1:
        raise UsageError(f"r must be >= 1, got {r}")


def enumerate_group(family: Family, n: int, r: int) -> Iterator[ColoredPerm]:
    """
    Every element of the group exactly once, lexicographic in (σ, z) with σ
    outermost. D_n keeps the elements with an even number of negatives.
    """
    _check_params(family, n, r)
    even_only = family is Family.D
    colorings = list(itertools.product(range(r), repeat=n))
    for sigma in itertools.permutations(range(1, n + 1)):
        for z in colorings:
            if even_only and sum(z) % 2:
                continue
            yield ColoredPerm.trusted(r, sigma, z)


def first_letters(n: int, r: int) -> List[Letter]:
    """Partition labels: the possible first letters."""
    return [(v, c) for v in range(1, n + 1) for c in range(r)]


def enumerate_partition(family: Family, n: int, r: int, first: Letter) -> Iterator[ColoredPerm]:
    """The elements whose first letter is `first`; disjoint across first letters."""
    _check_params(family, n, r)
    v0, c0 = first
    rest = [v for v in range(1, n + 1) if v != v0]
    even_only = family is Family.D
    colorings = list(itertools.product(range(r), repeat=n - 1))
    for tail in itertools.permutations(rest):
        sigma = (v0,) + tail
        for zt in colorings:
            z = (c0,) + zt
            if even_only and sum(z) % 2:
                continue
            yield ColoredPerm.trusted(r, sigma, z)


def enumerate_useset(family: Family, n: int, r: int, order: LetterOrder) -> Iterator[ColoredPerm]:
    """
    The order-increasing elements (one per color assignment to the values
    1..n); for D_n only those with an even number of negatives.
    """
    _check_params(family, n, r)
    values = range(1, n + 1)
    for colors in itertools.product(range(r), repeat=n):
        if family is Family.D and sum(colors) % 2:
            continue
        letters = sorted(zip(values, colors), key=lambda l: order.key(l[0], l[1], n, r))
        yield ColoredPerm.trusted(r, tuple(v for v, _ in letters), tuple(c for _, c in letters))


def useset_size(family: Family, n: int, r: int) -> int:
    if family is Family.D:
        return 2 ** (n - 1) if n >= 1 else 1
    return r ** n


# ============================================================
# DECOMPOSITION AND REDUCTION
# ============================================================

def decompose(pi: ColoredPerm, order: LetterOrder) -> Tuple[ColoredPerm, ColoredPerm]:
    """
    Split π = τρ: τ lists π's letters in increasing `order`, ρ is colorless
    with π_i = τ_{ρ_i}.
    """
    check_order(pi, order)
    keys = letter_keys(pi, order)
    ranking = sorted(range(pi.n), key=lambda i: keys[i])
    tau = ColoredPerm.trusted(
        pi.r,
        tuple(pi.sigma[i] for i in ranking),
        tuple(pi.z[i] for i in ranking),
    )
    rho = [0] * pi.n
    for rank, i in enumerate(ranking, start=1):
        rho[i] = rank
    return tau, ColoredPerm.trusted(1, tuple(rho), (0,) * pi.n)


def recompose(tau: ColoredPerm, rho: ColoredPerm) -> ColoredPerm:
    """π_i = τ_{ρ_i}."""
    if tau.n != rho.n:
        raise InvalidElementError(f"cannot compose lengths {tau.n} and {rho.n}")
    return ColoredPerm.trusted(
        tau.r,
        tuple(tau.sigma[j - 1] for j in rho.sigma),
        tuple(tau.z[j - 1] for j in rho.sigma),
    )


def abs_perm(pi: ColoredPerm) -> ColoredPerm:
    """|π|: drop colors, keep σ."""
    return ColoredPerm.trusted(1, pi.sigma, (0,) * pi.n)


def fixed_points(pi: ColoredPerm) -> List[int]:
    """Positions i (1-based) with σ_i = i and color 0."""
    return [i for i, v, c in zip(range(1, pi.n + 1), pi.sigma, pi.z) if v == i and not c]


def reduce_tilde(pi: ColoredPerm) -> Tuple[List[int], ColoredPerm]:
    """Delete fixed letters and renumber the rest, keeping colors and relative order."""
    fix = fixed_points(pi)
    fixed = set(fix)
    kept = [(v, c) for i, (v, c) in enumerate(pi.letters, start=1) if i not in fixed]
    rank = {v: k for k, v in enumerate(sorted(v for v, _ in kept), start=1)}
    tilde = ColoredPerm.trusted(pi.r, tuple(rank[v] for v, _ in kept), tuple(c for _, c in kept))
    return fix, tilde
