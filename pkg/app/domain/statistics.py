"""
Permutation statistics on S_n, B_n, D_n and G(r, n).

Every statistic is a pure function of the element, computed from its
combinatorial formula. inv and maj are taken relative to a letter order;
maj is the sum of descent positions.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, FrozenSet, Optional, Sequence, Tuple

from app.core.exceptions import FamilyMismatchError, UnknownStatisticError, UsageError
from app.domain.elements import (
    ColoredPerm,
    Family,
    LetterOrder,
    abs_perm,
    check_order,
    fixed_points,
    letter_keys,
    reduce_tilde,
)

# ============================================================
# ORDER-RELATIVE STATISTICS
# ============================================================

# (inv, maj) of a key sequence depend only on its relative order
PATTERN_CACHE_MAX_N = 8
_PATTERNS: Dict[Tuple[int, ...], Tuple[int, int]] = {}


def _inv_maj_of_keys(keys: Sequence[int]) -> Tuple[int, int]:
    n = len(keys)
    inversions = sum(1 for i in range(n) for j in range(i + 1, n) if keys[i] > keys[j])
    major_index = sum(i for i in range(1, n) if keys[i - 1] > keys[i])
    return inversions, major_index


def order_stats(pi: ColoredPerm, order: LetterOrder) -> Tuple[int, int]:
    """(inv, maj) of π under `order`, computed once per element and order."""
    memo = pi.memo()
    slot = ("inv-maj", order)
    stats = memo.get(slot)
    if stats is None:
        keys = letter_keys(pi, order)
        if len(keys) <= PATTERN_CACHE_MAX_N:
            pattern = tuple(sorted(range(len(keys)), key=keys.__getitem__))
            stats = _PATTERNS.get(pattern)
            if stats is None:
                stats = _PATTERNS[pattern] = _inv_maj_of_keys(keys)
        else:
            stats = _inv_maj_of_keys(keys)
        memo[slot] = stats
    return stats


def inv(pi: ColoredPerm, order: LetterOrder) -> int:
    """Pairs i < j whose letters are out of order under `order`."""
    return order_stats(pi, order)[0]


def maj(pi: ColoredPerm, order: LetterOrder) -> int:
    """Sum of descent positions under `order`."""
    return order_stats(pi, order)[1]


# ============================================================
# COLOR STATISTICS
# ============================================================

def _color_profile(pi: ColoredPerm) -> Tuple[int, int, int, int]:
    """(Z, Ẑ, Σ_{Neg}|π_i|, Σ_{Neg}(|π_i| + z_i - 1)) in one pass, memoized."""
    memo = pi.memo()
    profile = memo.get("colors")
    if profile is None:
        total = weighted = magnitude = excess = 0
        for v, c in zip(pi.sigma, pi.z):
            if c:
                total += c
                weighted += v * c
                magnitude += v
                excess += v + c - 1
        profile = memo["colors"] = (total, weighted, magnitude, excess)
    return profile


def neg(pi: ColoredPerm) -> int:
    return pi.neg_count()


def sum_neg(pi: ColoredPerm) -> int:
    """Σ |π_i| over the colored (negative) positions."""
    return _color_profile(pi)[2]


def neg_even(pi: ColoredPerm) -> int:
    """|Neg(π) ∩ {i : |π_i| even}|."""
    return sum(1 for v, c in zip(pi.sigma, pi.z) if c and v % 2 == 0)


def color_sum(pi: ColoredPerm) -> int:
    """Z(π) = Σ z_i."""
    return _color_profile(pi)[0]


def weighted_color_sum(pi: ColoredPerm) -> int:
    """Ẑ(π) = Σ z_i·σ_i."""
    return _color_profile(pi)[1]


def color_offset(pi: ColoredPerm) -> int:
    """Σ_{z_i > 0} (|π_i| - 1)."""
    return sum(v - 1 for v, c in zip(pi.sigma, pi.z) if c)


def fix(pi: ColoredPerm) -> int:
    return len(fixed_points(pi))


def inv_abs(pi: ColoredPerm) -> int:
    """inv(|π|) in S_n."""
    return inv(abs_perm(pi), LetterOrder.NATURAL_S)


# ============================================================
# B_n AND D_n
# ============================================================

def _require_signed(pi: ColoredPerm, name: str) -> None:
    if pi.r != 2:
        raise FamilyMismatchError(name, f"G({pi.r},{pi.n})", "defined on signed permutations (r = 2)")


def _require_even(pi: ColoredPerm, name: str) -> None:
    _require_signed(pi, name)
    if pi.neg_count() % 2:
        raise FamilyMismatchError(name, Family.B.value, "element has an odd number of negative entries")


def major(pi: ColoredPerm) -> int:
    _require_signed(pi, "major")
    return maj(pi, LetterOrder.SIGN_BLOCK_B)


def len_b(pi: ColoredPerm) -> int:
    """ℓ^B = inv_A + Σ_{Neg} |π_i|."""
    _require_signed(pi, "lenb")
    return inv(pi, LetterOrder.INTEGER_B) + sum_neg(pi)


def fmaj_b(pi: ColoredPerm) -> int:
    """Flag major index: 2·major + neg."""
    _require_signed(pi, "fmaj")
    return 2 * maj(pi, LetterOrder.SIGN_BLOCK_B) + neg(pi)


def fmaj_cap_b(pi: ColoredPerm) -> int:
    """F-major index: 2·maj_A + neg."""
    _require_signed(pi, "Fmaj")
    return 2 * maj(pi, LetterOrder.INTEGER_B) + neg(pi)


def nmaj(pi: ColoredPerm) -> int:
    """Negative major index: maj_A + Σ_{Neg} |π_i|."""
    _require_signed(pi, "nmaj")
    return maj(pi, LetterOrder.INTEGER_B) + sum_neg(pi)


def len_d(pi: ColoredPerm) -> int:
    """ℓ^D = inv_A - neg + Σ_{Neg} |π_i|."""
    _require_even(pi, "lend")
    return inv(pi, LetterOrder.INTEGER_B) - neg(pi) + sum_neg(pi)


def dmaj(pi: ColoredPerm) -> int:
    _require_even(pi, "dmaj")
    return maj(pi, LetterOrder.INTEGER_B) - neg(pi) + sum_neg(pi)


# ============================================================
# G(r, n)
# ============================================================

def _color_excess(pi: ColoredPerm) -> int:
    return _color_profile(pi)[3]


def len_g(pi: ColoredPerm) -> int:
    """Length ℓ = inv_A + Σ_{z_i>0} (|π_i| + z_i - 1), value-block order."""
    return inv(pi, LetterOrder.VALUE_BLOCK_G) + _color_excess(pi)


def lmaj(pi: ColoredPerm) -> int:
    return maj(pi, LetterOrder.VALUE_BLOCK_G) + _color_excess(pi)


def fmaj_g(pi: ColoredPerm) -> int:
    """r·maj_A + Z, color-block order."""
    return pi.r * maj(pi, LetterOrder.COLOR_BLOCK_G) + color_sum(pi)


def rmaj(pi: ColoredPerm) -> int:
    return maj(pi, LetterOrder.COLOR_BLOCK_G) + weighted_color_sum(pi)


def rinv(pi: ColoredPerm) -> int:
    return inv(pi, LetterOrder.COLOR_BLOCK_G) + weighted_color_sum(pi)


def fmaf(pi: ColoredPerm) -> int:
    """r·Σ_j (i_j - j) over the fixed positions i_1 < i_2 < ..., plus fmaj(π̃)."""
    fixed = fixed_points(pi)
    if not fixed:
        return fmaj_g(pi)
    # renumbering keeps the color-block order of the kept letters, and
    # fixed letters have color 0, so π̃ is read off π's keys directly
    keys = letter_keys(pi, LetterOrder.COLOR_BLOCK_G)
    dropped = set(fixed)
    kept = [k for i, k in enumerate(keys, start=1) if i not in dropped]
    shift = sum(i - j for j, i in enumerate(fixed, start=1))
    return pi.r * (shift + _inv_maj_of_keys(kept)[1]) + color_sum(pi)


def fmaf_fixed_form(pi: ColoredPerm) -> int:
    """
    fmaf via the fixed set directly:
    r·(Σ_{i∈Fix} i - C(fix+1, 2) + maj_A(π̃)) + Z(π̃).
    """
    fixed, tilde = reduce_tilde(pi)
    k = len(fixed)
    return pi.r * (sum(fixed) - k * (k + 1) // 2 + maj(tilde, LetterOrder.COLOR_BLOCK_G)) + color_sum(tilde)


# ============================================================
# NAMES
# ============================================================

class StatName(str, Enum):
    """Statistic names as accepted on the command line."""
    INV = "inv"
    MAJ = "maj"
    NEG = "neg"
    SUM_NEG = "sumneg"
    NEG_EVEN = "negeven"
    INV_ABS = "invabs"
    MAJOR = "major"
    LEN_B = "lenb"
    FMAJ_B = "fmaj"
    FMAJ_CAP_B = "Fmaj"
    NMAJ = "nmaj"
    LEN_D = "lend"
    DMAJ = "dmaj"
    Z = "z"
    ZHAT = "zhat"
    COLOR_OFFSET = "coloffset"
    LEN_G = "leng"
    LMAJ = "lmaj"
    FMAJ_G = "fmajg"
    RMAJ = "rmaj"
    RINV = "rinv"
    FMAF = "fmaf"
    FIX = "fix"

    @classmethod
    def parse(cls, text: str) -> "StatName":
        # Fmaj and fmaj differ only by case
        for name in cls:
            if name.value == text:
                return name
        for name in cls:
            if name.value.lower() == text.lower() and text.lower() != "fmaj":
                return name
        raise UnknownStatisticError(text)

    @property
    def needs_order(self) -> bool:
        return self in (StatName.INV, StatName.MAJ)

    @property
    def families(self) -> FrozenSet[Family]:
        if self in (StatName.LEN_D, StatName.DMAJ):
            return frozenset({Family.D})
        if self in _SIGNED_ONLY:
            return frozenset({Family.B, Family.D})
        return frozenset(Family)


_SIGNED_ONLY = frozenset({
    StatName.MAJOR, StatName.LEN_B, StatName.FMAJ_B, StatName.FMAJ_CAP_B, StatName.NMAJ,
})

_PLAIN: Dict[StatName, Callable[[ColoredPerm], int]] = {
    StatName.NEG: neg,
    StatName.SUM_NEG: sum_neg,
    StatName.NEG_EVEN: neg_even,
    StatName.INV_ABS: inv_abs,
    StatName.MAJOR: major,
    StatName.LEN_B: len_b,
    StatName.FMAJ_B: fmaj_b,
    StatName.FMAJ_CAP_B: fmaj_cap_b,
    StatName.NMAJ: nmaj,
    StatName.LEN_D: len_d,
    StatName.DMAJ: dmaj,
    StatName.Z: color_sum,
    StatName.ZHAT: weighted_color_sum,
    StatName.COLOR_OFFSET: color_offset,
    StatName.LEN_G: len_g,
    StatName.LMAJ: lmaj,
    StatName.FMAJ_G: fmaj_g,
    StatName.RMAJ: rmaj,
    StatName.RINV: rinv,
    StatName.FMAF: fmaf,
    StatName.FIX: fix,
}

DEFAULT_ORDER = {
    Family.S: LetterOrder.NATURAL_S,
    Family.B: LetterOrder.INTEGER_B,
    Family.D: LetterOrder.INTEGER_B,
    Family.G: LetterOrder.VALUE_BLOCK_G,
}

DEFAULT_LENGTH = {
    Family.S: StatName.INV,
    Family.B: StatName.LEN_B,
    Family.D: StatName.LEN_D,
    Family.G: StatName.LEN_G,
}


@dataclass(frozen=True)
class StatRef:
    """A statistic name bound to a letter order (inv and maj only)."""
    name: StatName
    order: Optional[LetterOrder] = None

    def __post_init__(self):
        if self.name.needs_order and self.order is None:
            raise UsageError(f"statistic '{self.name.value}' needs a letter order")

    def evaluator(self) -> Callable[[ColoredPerm], int]:
        if self.name is StatName.INV:
            order = self.order
            return lambda pi: inv(pi, order)
        if self.name is StatName.MAJ:
            order = self.order
            return lambda pi: maj(pi, order)
        return _PLAIN[self.name]

    def label(self) -> str:
        return f"{self.name.value}[{self.order.value}]" if self.order else self.name.value


def statistic(name: StatName, order: Optional[LetterOrder] = None) -> Callable[[ColoredPerm], int]:
    """Evaluator for a statistic; inv/maj need a letter order."""
    return StatRef(name, order).evaluator()


def evaluate(name: StatName, pi: ColoredPerm, family: Family, order: Optional[LetterOrder] = None) -> int:
    """
    Evaluate with family checks; inv/maj default to the family's natural order.
    This is the validating entry point; the fold uses statistic() directly.
    """
    if family not in name.families:
        raise FamilyMismatchError(name.value, family.value)
    if name.needs_order:
        order = order or DEFAULT_ORDER[family]
        check_order(pi, order)
    return statistic(name, order)(pi)
