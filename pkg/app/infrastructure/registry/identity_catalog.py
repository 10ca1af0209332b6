"""
The identity catalog.

Each record binds a summation domain and a weight to a closed-form right
side built from q-brackets with ProductBuilder. Ids are stable strings used
by the CLI, the HTTP API and the test-suite.

Naming: '<family>.<stat>.<character>' for character-weighted sums,
'G5.<s>-<q>' for Σ (-1)^s q^q (or t^s q^q for the bivariate record), and
'*.U.*' for sums over order-increasing U-sets.
"""
from typing import Dict, List

from app.domain.builders.product_builder import ProductBuilder
from app.domain.elements import Family, LetterOrder
from app.domain.identities import (
    Comparison,
    DomainKind,
    DomainSpec,
    Expectation,
    IdentityRecord,
    Weight,
)
from app.domain.polynomials import Poly2
from app.domain.statistics import StatName, StatRef

GROUP = DomainSpec()
U_B = DomainSpec(DomainKind.USET, LetterOrder.INTEGER_B)
U_VALUE = DomainSpec(DomainKind.USET, LetterOrder.VALUE_BLOCK_G)
U_COLOR = DomainSpec(DomainKind.USET, LetterOrder.COLOR_BLOCK_G)

INV_S = StatRef(StatName.INV, LetterOrder.NATURAL_S)
MAJ_S = StatRef(StatName.MAJ, LetterOrder.NATURAL_S)
INV_A = StatRef(StatName.INV, LetterOrder.INTEGER_B)
LEN_B = StatRef(StatName.LEN_B)
FMAJ_B = StatRef(StatName.FMAJ_B)
FMAJ_CAP_B = StatRef(StatName.FMAJ_CAP_B)
NMAJ = StatRef(StatName.NMAJ)
NEG = StatRef(StatName.NEG)
NEG_EVEN = StatRef(StatName.NEG_EVEN)
INV_ABS = StatRef(StatName.INV_ABS)
LEN_D = StatRef(StatName.LEN_D)
DMAJ = StatRef(StatName.DMAJ)
LEN_G = StatRef(StatName.LEN_G)
LMAJ = StatRef(StatName.LMAJ)
Z = StatRef(StatName.Z)
ZHAT = StatRef(StatName.ZHAT)
COLOR_OFFSET = StatRef(StatName.COLOR_OFFSET)
FMAJ_G = StatRef(StatName.FMAJ_G)
RMAJ = StatRef(StatName.RMAJ)
RINV = StatRef(StatName.RINV)
FMAF = StatRef(StatName.FMAF)


def alt(k: int) -> int:
    """(-1)^(k-1)"""
    return 1 if k % 2 else -1


def pm(e: int) -> int:
    """(-1)^e"""
    return -1 if e % 2 else 1


# ============================================================
# CLOSED FORMS
# ============================================================

def s_poincare(n: int, r: int, a: int, b: int) -> Poly2:
    pb = ProductBuilder(r)
    for k in range(1, n + 1):
        pb.bracket(k)
    return pb.build()


def s_gessel_simion(n: int, r: int, a: int, b: int) -> Poly2:
    pb = ProductBuilder(r)
    for k in range(1, n + 1):
        pb.bracket(k, sign=alt(k))
    return pb.build()


def b_hyperoctahedral(n: int, r: int, a: int, b: int) -> Poly2:
    """Π [2k]_q"""
    pb = ProductBuilder(r)
    for k in range(1, n + 1):
        pb.bracket(2 * k)
    return pb.build()


def b_useset_tq(n: int, r: int, a: int, b: int) -> Poly2:
    pb = ProductBuilder(r)
    for k in range(1, n + 1):
        pb.bracket(2, qpow=k, tpow=1)
    return pb.build()


def b_useset_even_neg(n: int, r: int, a: int, b: int) -> Poly2:
    pb = ProductBuilder(r)
    for k in range(1, n + 1):
        pb.bracket(2, sign=alt(k), qpow=k)
    return pb.build()


def b_len_sign(n: int, r: int, a: int, b: int) -> Poly2:
    pb = ProductBuilder(r)
    for k in range(1, n + 1):
        pb.bracket(2 * k, sign=-1)
    return pb.build()


def _two_bracket_product(n: int, r: int, outer, inner) -> Poly2:
    """Π_k [2]_{outer(k)} [k]_{inner(k)}; outer/inner give (sign, qpow)."""
    pb = ProductBuilder(r)
    for k in range(1, n + 1):
        s1, e1 = outer(k)
        s2, e2 = inner(k)
        pb.bracket(2, sign=s1, qpow=e1).bracket(k, sign=s2, qpow=e2)
    return pb.build()


def b_len_neg(n, r, a, b):
    return _two_bracket_product(n, r, lambda k: (-1, k), lambda k: (1, 1))


def b_len_abssign(n, r, a, b):
    return _two_bracket_product(n, r, lambda k: (alt(k), k), lambda k: (-1, 1))


def b_len_inv_a(n, r, a, b):
    return _two_bracket_product(n, r, lambda k: (1, k), lambda k: (-1, 1))


def b_nmaj_sign(n, r, a, b):
    return _two_bracket_product(n, r, lambda k: (pm(k), k), lambda k: (alt(k), 1))


def b_nmaj_neg(n, r, a, b):
    return _two_bracket_product(n, r, lambda k: (-1, k), lambda k: (1, 1))


def b_nmaj_abssign(n, r, a, b):
    return _two_bracket_product(n, r, lambda k: (alt(k), k), lambda k: (alt(k), 1))


def b_nmaj_inv_a(n, r, a, b):
    return _two_bracket_product(n, r, lambda k: (1, k), lambda k: (alt(k), 1))


def b_fmaj_cap_sign(n, r, a, b):
    return _two_bracket_product(n, r, lambda k: (pm(k), 1), lambda k: (alt(k), 2))


def b_fmaj_cap_neg(n, r, a, b):
    return _two_bracket_product(n, r, lambda k: (-1, 1), lambda k: (1, 2))


def b_fmaj_cap_abssign(n, r, a, b):
    return _two_bracket_product(n, r, lambda k: (alt(k), 1), lambda k: (alt(k), 2))


def b_fmaj_cap_inv_a(n, r, a, b):
    return _two_bracket_product(n, r, lambda k: (1, 1), lambda k: (alt(k), 2))


def b_parity_lemma(n: int, r: int, a: int, b: int) -> Poly2:
    """Π [2k] at the constant argument 1, i.e. |B_n|."""
    pb = ProductBuilder(r)
    for k in range(1, n + 1):
        pb.bracket(2 * k, qpow=0)
    return pb.build()


def d_length(n: int, r: int, a: int, b: int) -> Poly2:
    pb = ProductBuilder(r).bracket(n)
    for k in range(1, n):
        pb.bracket(2 * k)
    return pb.build()


def d_useset(n: int, r: int, a: int, b: int) -> Poly2:
    pb = ProductBuilder(r)
    for k in range(1, n):
        pb.bracket(2, qpow=k)
    return pb.build()


def d_len_sign(n: int, r: int, a: int, b: int) -> Poly2:
    pb = ProductBuilder(r).bracket(n, sign=-1)
    for k in range(1, n):
        pb.bracket(2 * k, sign=-1)
    return pb.build()


def d_len_inv_a_printed(n: int, r: int, a: int, b: int) -> Poly2:
    pb = ProductBuilder(r).bracket(n, sign=-1)
    for k in range(1, n + 1):
        pb.bracket(2, qpow=k).bracket(k, sign=-1)
    return pb.build()


def d_len_inv_a_corrected(n: int, r: int, a: int, b: int) -> Poly2:
    pb = ProductBuilder(r)
    for k in range(1, n):
        pb.bracket(2, qpow=k)
    for k in range(1, n + 1):
        pb.bracket(k, sign=-1)
    return pb.build()


def d_dmaj_sign(n: int, r: int, a: int, b: int) -> Poly2:
    pb = ProductBuilder(r).bracket(n, sign=alt(n))
    for k in range(1, n):
        pb.bracket(2, sign=pm(k), qpow=k).bracket(k, sign=alt(k))
    return pb.build()


def d_dmaj_inv_a(n: int, r: int, a: int, b: int) -> Poly2:
    pb = ProductBuilder(r).bracket(n, sign=alt(n))
    for k in range(1, n):
        pb.bracket(2, qpow=k).bracket(k, sign=alt(k))
    return pb.build()


def _colored_tail(pb: ProductBuilder, k: int, sign: int, omega_power: int) -> Poly2:
    """sign·ω^b·q^k·[r-1]_{ω^b q}"""
    shift = Poly2.monomial(pb.r, pb.unit(sign, omega_power), q=k)
    return shift * pb.bracket_poly(pb.r - 1, omega_power=omega_power)


def g_length(n: int, r: int, a: int, b: int) -> Poly2:
    """Π [k]_q (1 + q^k [r-1]_q)"""
    pb = ProductBuilder(r)
    for k in range(1, n + 1):
        pb.bracket(k).one_plus(_colored_tail(pb, k, 1, 0))
    return pb.build()


def g_useset_f(n: int, r: int, a: int, b: int) -> Poly2:
    """Π (1 + t^(k-1) q [r-1]_q)"""
    pb = ProductBuilder(r)
    for k in range(1, n + 1):
        inner = Poly2.monomial(r, 1, q=1, t=k - 1) * pb.bracket_poly(r - 1)
        pb.one_plus(inner)
    return pb.build()


def g_len_chi(n: int, r: int, a: int, b: int) -> Poly2:
    pb = ProductBuilder(r)
    for k in range(1, n + 1):
        pb.bracket(k, sign=pm(a))
        pb.one_plus(_colored_tail(pb, k, pm(a * (k + 1)), b))
    return pb.build()


def g_lmaj_chi(n: int, r: int, a: int, b: int) -> Poly2:
    pb = ProductBuilder(r)
    for k in range(1, n + 1):
        pb.bracket(k, sign=pm(a * (k - 1)))
        pb.one_plus(_colored_tail(pb, k, pm(a * (k + 1)), b))
    return pb.build()


def g_flag(n: int, r: int, a: int, b: int) -> Poly2:
    """Π [rk]_q"""
    pb = ProductBuilder(r)
    for k in range(1, n + 1):
        pb.bracket(r * k)
    return pb.build()


def g_useset_r(n: int, r: int, a: int, b: int) -> Poly2:
    pb = ProductBuilder(r)
    for k in range(1, n + 1):
        pb.bracket(r, qpow=k, tpow=1)
    return pb.build()


def g_rmaj_fmaj(n: int, r: int, a: int, b: int) -> Poly2:
    pb = ProductBuilder(r)
    for k in range(1, n + 1):
        pb.bracket(r, qpow=1, tpow=k).bracket(k, qpow=r, tpow=1)
    return pb.build()


def g_rinv_rmaj(n: int, r: int, a: int, b: int) -> Poly2:
    pb = ProductBuilder(r)
    for k in range(1, n + 1):
        pb.bracket(r, sign=pm(k), qpow=k).bracket(k, sign=alt(k))
    return pb.build()


def g_rinv_fmaj(n: int, r: int, a: int, b: int) -> Poly2:
    pb = ProductBuilder(r)
    for k in range(1, n + 1):
        pb.bracket(r, sign=pm(k)).bracket(k, sign=alt(k), qpow=r)
    return pb.build()


def g_fmaj_rinv(n: int, r: int, a: int, b: int) -> Poly2:
    pb = ProductBuilder(r)
    for k in range(1, n + 1):
        pb.bracket(r, sign=-1, qpow=k).bracket(k, sign=pm((k - 1) * r))
    return pb.build()


def g_fmaf_r_stat(n: int, r: int, a: int, b: int) -> Poly2:
    pb = ProductBuilder(r)
    for k in range(1, n + 1):
        pb.bracket(r, sign=-1, qpow=k).bracket(k)
    return pb.build()


def g_fmaf_fmaj(n: int, r: int, a: int, b: int) -> Poly2:
    pb = ProductBuilder(r)
    for k in range(1, n + 1):
        pb.bracket(r * k, sign=-1)
    return pb.build()


# ============================================================
# RECORDS
# ============================================================

def _q(stat: StatRef, character=None, sign_stats=()) -> Weight:
    return Weight(character=character, sign_stats=tuple(sign_stats), q_stat=stat)


EVEN_R = frozenset({"G5", "r-even"})


def _build_catalog() -> List[IdentityRecord]:
    records: List[IdentityRecord] = [
        # ---------------- S_n ----------------
        IdentityRecord("S.poincare", "S", Family.S, GROUP, _q(INV_S),
                       "inv on S_n has generating function Π [k]_q", s_poincare),
        IdentityRecord("S.gessel-simion", "S", Family.S, GROUP, _q(MAJ_S, "sign"),
                       "Σ sign(π) q^maj(π) over S_n = Π [k]_{(-1)^(k-1) q}", s_gessel_simion),
        # ---------------- B_n distributions ----------------
        IdentityRecord("B.dist.len", "B", Family.B, GROUP, _q(LEN_B),
                       "length on B_n has generating function Π [2k]_q", b_hyperoctahedral),
        IdentityRecord("B.dist.fmaj", "B", Family.B, GROUP, _q(FMAJ_B),
                       "flag major index is Mahonian on B_n", b_hyperoctahedral),
        IdentityRecord("B.dist.Fmaj", "B", Family.B, GROUP, _q(FMAJ_CAP_B),
                       "F-major index is Mahonian on B_n", b_hyperoctahedral),
        IdentityRecord("B.dist.nmaj", "B", Family.B, GROUP, _q(NMAJ),
                       "negative major index is Mahonian on B_n", b_hyperoctahedral),
        # ---------------- B_n U-set sums ----------------
        IdentityRecord("B.U.Btq", "B", Family.B, U_B, Weight(q_stat=LEN_B, t_stat=NEG),
                       "Σ_{τ∈U_n} t^neg(τ) q^ℓB(τ) = Π [2]_{t q^k}", b_useset_tq),
        IdentityRecord("B.U.evenneg", "B", Family.B, U_B, _q(LEN_B, sign_stats=[NEG_EVEN]),
                       "Σ_{τ∈U_n} (-1)^|Neg∩even| q^ℓB(τ) = Π [2]_{(-1)^(k-1) q^k}", b_useset_even_neg),
        # ---------------- B_n signed Mahonians ----------------
        IdentityRecord("B.len.sign", "B", Family.B, GROUP, _q(LEN_B, "sign"),
                       "Σ sign(π) q^ℓB(π) = Π [2k]_{-q}", b_len_sign),
        IdentityRecord("B.len.neg", "B", Family.B, GROUP, _q(LEN_B, "neg"),
                       "Σ (-1)^neg(π) q^ℓB(π) = Π [2]_{-q^k} [k]_q", b_len_neg),
        IdentityRecord("B.len.abssign", "B", Family.B, GROUP, _q(LEN_B, "abssign"),
                       "Σ sign(|π|) q^ℓB(π) = Π [2]_{(-1)^(k-1) q^k} [k]_{-q}", b_len_abssign),
        IdentityRecord("B.len.invA", "B", Family.B, GROUP, _q(LEN_B, "invA"),
                       "Σ (-1)^invA(π) q^ℓB(π) = Π [2]_{q^k} [k]_{-q}", b_len_inv_a),
        IdentityRecord("B.nmaj.sign", "B", Family.B, GROUP, _q(NMAJ, "sign"),
                       "Σ sign(π) q^nmaj(π) = Π [2]_{(-q)^k} [k]_{(-1)^(k-1) q}", b_nmaj_sign),
        IdentityRecord("B.nmaj.neg", "B", Family.B, GROUP, _q(NMAJ, "neg"),
                       "Σ (-1)^neg(π) q^nmaj(π) = Π [2]_{-q^k} [k]_q", b_nmaj_neg),
        IdentityRecord("B.nmaj.abssign", "B", Family.B, GROUP, _q(NMAJ, "abssign"),
                       "Σ sign(|π|) q^nmaj(π) = Π [2]_{(-1)^(k-1) q^k} [k]_{(-1)^(k-1) q}", b_nmaj_abssign),
        IdentityRecord("B.nmaj.invA", "B", Family.B, GROUP, _q(NMAJ, "invA"),
                       "Σ (-1)^invA(π) q^nmaj(π) = Π [2]_{q^k} [k]_{(-1)^(k-1) q}", b_nmaj_inv_a),
        IdentityRecord("B.Fmaj.sign", "B", Family.B, GROUP, _q(FMAJ_CAP_B, "sign"),
                       "Σ sign(π) q^Fmaj(π) = Π [2]_{(-1)^k q} [k]_{(-1)^(k-1) q^2}", b_fmaj_cap_sign),
        IdentityRecord("B.Fmaj.neg", "B", Family.B, GROUP, _q(FMAJ_CAP_B, "neg"),
                       "Σ (-1)^neg(π) q^Fmaj(π) = Π [2]_{-q} [k]_{q^2}", b_fmaj_cap_neg),
        IdentityRecord("B.Fmaj.abssign", "B", Family.B, GROUP, _q(FMAJ_CAP_B, "abssign"),
                       "Σ sign(|π|) q^Fmaj(π) = Π [2]_{(-1)^(k-1) q} [k]_{(-1)^(k-1) q^2}", b_fmaj_cap_abssign),
        IdentityRecord("B.Fmaj.invA", "B", Family.B, GROUP, _q(FMAJ_CAP_B, "invA"),
                       "Σ (-1)^invA(π) q^Fmaj(π) = Π [2]_q [k]_{(-1)^(k-1) q^2}", b_fmaj_cap_inv_a),
        # ---------------- B_n pointwise parity lemma ----------------
        IdentityRecord("B.lemma.parity", "B", Family.B, GROUP,
                       Weight(sign_stats=(INV_ABS, INV_A, NEG_EVEN)),
                       "(-1)^(inv|π| + invA(π)) = (-1)^|Neg(π)∩even| for every π, so the sum is |B_n|",
                       b_parity_lemma),
        # ---------------- D_n ----------------
        IdentityRecord("D.dist", "D", Family.D, GROUP, _q(LEN_D),
                       "ℓD on D_n has generating function [n]_q Π_{k<n} [2k]_q", d_length),
        IdentityRecord("D.dist.dmaj", "D", Family.D, GROUP, _q(DMAJ),
                       "dmaj is Mahonian on D_n: [n]_q Π_{k<n} [2k]_q", d_length),
        IdentityRecord("D.U.BD", "D", Family.D, U_B, _q(LEN_D),
                       "Σ_{τ∈U^D_n} q^ℓD(τ) = Π_{k<n} [2]_{q^k}", d_useset),
        IdentityRecord("D.len.sign", "D", Family.D, GROUP, _q(LEN_D, "sign"),
                       "Σ sign(π) q^ℓD(π) = [n]_{-q} Π_{k<n} [2k]_{-q}", d_len_sign),
        IdentityRecord("D.len.invA.printed", "D", Family.D, GROUP, _q(LEN_D, "invA"),
                       "as printed: Σ (-1)^invA(π) q^ℓD(π) = [n]_{-q} Π_{k≤n} [2]_{q^k} [k]_{-q}",
                       d_len_inv_a_printed, expected=Expectation.ERRATUM,
                       note="printed right side carries an extra [n]_{-q} and runs [2]_{q^k} to k=n; "
                            "see D.len.invA.corrected"),
        IdentityRecord("D.len.invA.corrected", "D", Family.D, GROUP, _q(LEN_D, "invA"),
                       "Σ (-1)^invA(π) q^ℓD(π) = Π_{k<n} [2]_{q^k} · Π_{k≤n} [k]_{-q}",
                       d_len_inv_a_corrected),
        IdentityRecord("D.dmaj.sign", "D", Family.D, GROUP, _q(DMAJ, "sign"),
                       "Σ sign(π) q^dmaj(π) = [n]_{(-1)^(n-1) q} Π_{k<n} [2]_{(-q)^k} [k]_{(-1)^(k-1) q}",
                       d_dmaj_sign),
        IdentityRecord("D.dmaj.invA", "D", Family.D, GROUP, _q(DMAJ, "invA"),
                       "Σ (-1)^invA(π) q^dmaj(π) = [n]_{(-1)^(n-1) q} Π_{k<n} [2]_{q^k} [k]_{(-1)^(k-1) q}",
                       d_dmaj_inv_a),
        # ---------------- G(r,n): length and lmaj ----------------
        IdentityRecord("G.dist.len", "G", Family.G, GROUP, _q(LEN_G),
                       "ℓ on G(r,n) has generating function Π [k]_q (1 + q^k [r-1]_q)", g_length),
        IdentityRecord("G.dist.lmaj", "G", Family.G, GROUP, _q(LMAJ),
                       "lmaj is equidistributed with ℓ on G(r,n)", g_length),
        IdentityRecord("G.U.F", "G", Family.G, U_VALUE, Weight(q_stat=Z, t_stat=COLOR_OFFSET),
                       "Σ_{τ∈U_{r,n}} t^Σ_{z>0}(|τ_i|-1) q^Z(τ) = Π (1 + t^(k-1) q [r-1]_q)", g_useset_f),
        IdentityRecord("G.len.chi", "G", Family.G, GROUP, _q(LEN_G, "chi"),
                       "Σ χ_{a,b}(π) q^ℓ(π) = Π [k]_{(-1)^a q} (1 + (-1)^(a(k+1)) ω^b q^k [r-1]_{ω^b q})",
                       g_len_chi),
        IdentityRecord("G.lmaj.chi", "G", Family.G, GROUP, _q(LMAJ, "chi"),
                       "Σ χ_{a,b}(π) q^lmaj(π) = Π [k]_{(-1)^(a(k-1)) q} (1 + (-1)^(a(k+1)) ω^b q^k [r-1]_{ω^b q})",
                       g_lmaj_chi),
        # ---------------- G(r,n): flag statistics ----------------
        IdentityRecord("G5.dist.fmaj", "G5", Family.G, GROUP, _q(FMAJ_G),
                       "fmaj on G(r,n) has generating function Π [rk]_q", g_flag),
        IdentityRecord("G5.dist.rmaj", "G5", Family.G, GROUP, _q(RMAJ),
                       "rmaj on G(r,n) has generating function Π [rk]_q", g_flag),
        IdentityRecord("G5.dist.fmaf", "G5", Family.G, GROUP, _q(FMAF),
                       "fmaf on G(r,n) has generating function Π [rk]_q", g_flag),
        IdentityRecord("G5.dist.rinv", "G5", Family.G, GROUP, _q(RINV),
                       "rinv on G(r,n) has generating function Π [rk]_q", g_flag),
        IdentityRecord("G5.U.R", "G5", Family.G, U_COLOR, Weight(q_stat=ZHAT, t_stat=Z),
                       "Σ_{τ∈U_{r,n}} t^Z(τ) q^Ẑ(τ) = Π [r]_{t q^k}", g_useset_r),
        IdentityRecord("G5.rmaj-fmaj", "G5", Family.G, GROUP, Weight(q_stat=FMAJ_G, t_stat=RMAJ),
                       "Σ t^rmaj(π) q^fmaj(π) = Π [r]_{t^k q} [k]_{t q^r}", g_rmaj_fmaj),
        IdentityRecord("G5.rinv-rmaj", "G5", Family.G, GROUP, _q(RMAJ, sign_stats=[RINV]),
                       "Σ (-1)^rinv(π) q^rmaj(π) = Π [r]_{(-q)^k} [k]_{(-1)^(k-1) q}", g_rinv_rmaj),
        IdentityRecord("G5.rmaj-rinv", "G5", Family.G, GROUP, _q(RINV, sign_stats=[RMAJ]),
                       "Σ (-1)^rmaj(π) q^rinv(π) = Π [r]_{(-q)^k} [k]_{(-1)^(k-1) q}", g_rinv_rmaj),
        IdentityRecord("G5.rinv-fmaj", "G5", Family.G, GROUP, _q(FMAJ_G, sign_stats=[RINV]),
                       "Σ (-1)^rinv(π) q^fmaj(π) = Π [r]_{(-1)^k q} [k]_{(-1)^(k-1) q^r}", g_rinv_fmaj),
        IdentityRecord("G5.fmaj-rinv", "G5", Family.G, GROUP, _q(RINV, sign_stats=[FMAJ_G]),
                       "Σ (-1)^fmaj(π) q^rinv(π) = Π [r]_{-q^k} [k]_{(-1)^((k-1)r) q}", g_fmaj_rinv),
        IdentityRecord("G5.fmaf-rinv", "G5", Family.G, GROUP, _q(RINV, sign_stats=[FMAF]),
                       "r even: Σ (-1)^fmaf(π) q^rinv(π) = Π [r]_{-q^k} [k]_q", g_fmaf_r_stat,
                       tags=EVEN_R, even_r=True),
        IdentityRecord("G5.fmaf-rmaj", "G5", Family.G, GROUP, _q(RMAJ, sign_stats=[FMAF]),
                       "r even: Σ (-1)^fmaf(π) q^rmaj(π) = Π [r]_{-q^k} [k]_q", g_fmaf_r_stat,
                       tags=EVEN_R, even_r=True),
        IdentityRecord("G5.fmaj-fmaf", "G5", Family.G, GROUP, _q(FMAF, sign_stats=[FMAJ_G]),
                       "r even: Σ (-1)^fmaj(π) q^fmaf(π) = Π [rk]_{-q}", g_fmaf_fmaj,
                       tags=EVEN_R, even_r=True),
        IdentityRecord("G5.fmaf-fmaj", "G5", Family.G, GROUP, _q(FMAJ_G, sign_stats=[FMAF]),
                       "r even: Σ (-1)^fmaf(π) q^fmaj(π) = Π [rk]_{-q}", g_fmaf_fmaj,
                       tags=EVEN_R, even_r=True),
        IdentityRecord("G5.symmetry", "G5", Family.G, GROUP, Weight(q_stat=RMAJ, t_stat=RINV),
                       "Σ t^rinv(π) q^rmaj(π) is symmetric in t and q",
                       compare=Comparison.TRANSPOSE),
    ]
    return records


CATALOG: List[IdentityRecord] = _build_catalog()
CATALOG_BY_ID: Dict[str, IdentityRecord] = {record.id: record for record in CATALOG}

if len(CATALOG_BY_ID) != len(CATALOG):
    raise RuntimeError("duplicate identity ids in the catalog")
