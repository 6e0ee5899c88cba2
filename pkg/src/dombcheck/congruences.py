"""Congruence checks for Domb-type sums mod powers of a prime.

Each tagged check compares two residues in Z/p^k, where k is the power the
claim is stated at.  The production (sweep) route evaluates the left side
entirely inside the residue ring: powers such as 2^(1-p) or (-32)^(-k) are
modular exponentials and inverses, never rationals, and harmonic sums are
accumulated term by term from modular inverses.  `exact_lhs` provides the
deliberately separate small-p oracle route, which forms the exact Fraction
and reduces it at the end; the two must agree and the test suite checks
that they do.

Tag catalog, with the power k of the modulus p^k:

  thm1  4  sum_{k<p} (3k+1) Domb(k)/(-32)^k == (-1)^((p-1)/2) p + p^3 E_{p-3}
  thm2  4  sum_{k<p} (3k+2) Domb(k)/(-2)^k == 2p(-1)^((p-1)/2) + 6 p^3 E_{p-3}
  b3    1  sum_{i<=(p-1)/2} (-1)^i/i^2 == (-1)^((p-1)/2) 2 E_{p-3}
  b4    1  sum (-1)^i H_i/i == q_p(2)^2/2 + (-1)^((p-1)/2) E_{p-3}
  b5    2  sum (-1)^i/i == -q_p(2) + p q_p(2)^2/2 - p (-1)^((p-1)/2) E_{p-3}
  b6    2  sum_{i<=p/4} 1/(p-4i) == 3 q_p(2)/4 - 3 p q_p(2)^2/8
  b8    1  H^(2)_{floor(p/4)} == (-1)^((p-1)/2) 4 E_{p-3}
  b9    2  H_{floor(p/4)} == -3 q_p(2) + 3 p q_p(2)^2/2 - p (-1)^((p-1)/2) E_{p-3}
  b11   2  H_{(p-1)/2} == -2 q_p(2) + p q_p(2)^2
  c5    2  per i: (-1)^i C((p-1)/2,i) C((p-1)/2+i,i) == 16^-i C(2i,i)^2
  c8    2  sum 16^-i C(2i,i)^2 (H_2i - H_i)
             == (-1)^((p+1)/2) (-q_p(2) + p q_p(2)^2/2) + p E_{p-3}
  c9    1  sum 16^-i C(2i,i)^2 ((H_2i-H_i)^2 - H^(2)_2i - H^(2)_i)
             == (-1)^((p-1)/2) q_p(2)^2 + 6 E_{p-3}
  c10   3  sum_{i<=(p-1)/2} 16^-i C(2i,i)^2 == (-1)^((p-1)/2) + p^2 E_{p-3}
  c11   4  half-range part of the rearranged thm1 sum
             == (-1)^((p-1)/2) p + 5 p^3 E_{p-3}
  c12   4  tail part of the same sum == -4 p^3 E_{p-3}
  d4    4  per i: (p-2i) C(3i,i) C(p+i,3i)
             == p - p^2 (H_2i - H_i) + (p^3/2)((H_2i-H_i)^2 - H^(2)_2i - H^(2)_i)
  d5    4  sum_{k<p} (3k+2) Domb(k)/(-2)^k
             == 2^p p sum_{i<=(p-1)/2} 16^-i C(2i,i)^2
                  (1 - p (H_2i-H_i) + (p^2/2)((H_2i-H_i)^2 - H^(2)_2i - H^(2)_i))

E_{p-3} enters every right side only with a factor of at least p^(k-1), so
its residue mod p suffices; it is produced by the in-ring Euler recurrence.
q_p(2) is the Fermat quotient (2^(p-1) - 1)/p.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .arith import (
    BadRange,
    NotPrime,
    PrimePowerModulus,
    Residue,
    fermat_quotient,
    is_prime,
    primes_in_range,
)
from .harmonic import alt_harmonic, alt_harmonic_weighted, harmonic
from .sequences import domb, euler_number_mod

TAG_POWER = {
    "thm1": 4, "thm2": 4,
    "b3": 1, "b4": 1, "b5": 2, "b6": 2, "b8": 1, "b9": 2, "b11": 2,
    "c5": 2, "c8": 2, "c9": 1, "c10": 3, "c11": 4, "c12": 4,
    "d4": 4, "d5": 4,
}
CONGRUENCE_TAGS = tuple(TAG_POWER)
LEMMA_TAGS = ("b3", "b4", "b5", "b6", "b8", "b9", "b11")
PROOF_STEP_TAGS = ("c5", "c8", "c9", "c10", "c11", "c12", "d4", "d5")
PER_INDEX_TAGS = ("c5", "d4")


class PTooSmall(ValueError):
    """The checks need p >= 5 (denominators 2, 3 and the index p-3 must behave)."""


@dataclass(frozen=True)
class CongruenceId:
    """A check tag together with the modulus power it is stated at."""

    tag: str

    def __post_init__(self):
        if self.tag not in TAG_POWER:
            raise ValueError(f"unknown congruence tag {self.tag!r}")

    @property
    def required_power(self) -> int:
        return TAG_POWER[self.tag]


@dataclass(frozen=True)
class CongruenceResult:
    id: CongruenceId
    p: int
    index: int | None
    modulus: PrimePowerModulus
    lhs: Residue
    rhs: Residue
    holds: bool


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p < 5:
        raise PTooSmall(f"need p >= 5, got {p}")


def _result(tag: str, p: int, index, mod: PrimePowerModulus, lhs: int, rhs: int):
    lr = Residue(lhs, mod)
    rr = Residue(rhs, mod)
    return CongruenceResult(CongruenceId(tag), p, index, mod, lr, rr, lr == rr)


def _sign(p: int) -> int:
    """(-1)^((p-1)/2): +1 when p = 1 mod 4, -1 when p = 3 mod 4."""
    return 1 if p % 4 == 1 else -1


@lru_cache(maxsize=None)
def _euler_p3(p: int) -> int:
    """E_{p-3} mod p as a plain int, shared by every check at this prime."""
    return euler_number_mod(p - 3, p).value


@lru_cache(maxsize=16)
def _harm_mod(p: int, k: int):
    """Prefix lists of H_j and H^(2)_j mod p^k for 0 <= j <= p-1."""
    m = p ** k
    H = [0] * p
    H2 = [0] * p
    for j in range(1, p):
        iv = pow(j, -1, m)
        H[j] = (H[j - 1] + iv) % m
        H2[j] = (H2[j - 1] + iv * iv) % m
    return H, H2


def _domb_sum_mod(p: int, m: int, base: int, coeff_shift: int) -> int:
    """sum_{k<p} (3k + coeff_shift) Domb(k) base^(-k) inside Z/m."""
    r = 1
    inv_base = pow(base % m, -1, m)
    acc = 0
    for k in range(p):
        acc = (acc + (3 * k + coeff_shift) * (domb(k) % m) * r) % m
        r = r * inv_base % m
    return acc


def verify_thm1(p: int) -> CongruenceResult:
    """sum_{k<p} (3k+1) Domb(k)/(-32)^k mod p^4 against its closed form."""
    _require_prime(p)
    mod = PrimePowerModulus(p, 4)
    m = mod.m
    lhs = _domb_sum_mod(p, m, -32, 1)
    rhs = (_sign(p) * p + p ** 3 * _euler_p3(p)) % m
    return _result("thm1", p, None, mod, lhs, rhs)


def verify_thm2(p: int) -> CongruenceResult:
    """sum_{k<p} (3k+2) Domb(k)/(-2)^k mod p^4 against its closed form."""
    _require_prime(p)
    mod = PrimePowerModulus(p, 4)
    m = mod.m
    lhs = _domb_sum_mod(p, m, -2, 2)
    rhs = (2 * p * _sign(p) + 6 * p ** 3 * _euler_p3(p)) % m
    return _result("thm2", p, None, mod, lhs, rhs)


def verify_lemma(tag: str, p: int) -> CongruenceResult:
    """One of the harmonic-sum lemmas b3..b11 at the prime p."""
    if tag not in LEMMA_TAGS:
        raise ValueError(f"unknown lemma tag {tag!r}")
    _require_prime(p)
    k = TAG_POWER[tag]
    mod = PrimePowerModulus(p, k)
    m = mod.m
    half = (p - 1) // 2
    quarter = p // 4
    sg = _sign(p)
    E = _euler_p3(p)
    q = fermat_quotient(2, p, k).value
    inv2 = pow(2, -1, m)

    if tag == "b3":
        lhs = 0
        for i in range(1, half + 1):
            iv = pow(i, -1, m)
            lhs = (lhs + (-1) ** i * iv * iv) % m
        rhs = (sg * 2 * E) % m
    elif tag == "b4":
        lhs = 0
        h = 0
        for i in range(1, half + 1):
            iv = pow(i, -1, m)
            h = (h + iv) % m
            lhs = (lhs + (-1) ** i * h * iv) % m
        rhs = (q * q * inv2 + sg * E) % m
    elif tag == "b5":
        lhs = 0
        for i in range(1, half + 1):
            lhs = (lhs + (-1) ** i * pow(i, -1, m)) % m
        rhs = (-q + p * q * q * inv2 - p * sg * E) % m
    elif tag == "b6":
        lhs = 0
        for i in range(1, quarter + 1):
            lhs = (lhs + pow(p - 4 * i, -1, m)) % m
        inv8 = pow(8, -1, m)
        inv4 = pow(4, -1, m)
        rhs = (3 * q * inv4 - 3 * p * q * q * inv8) % m
    elif tag == "b8":
        lhs = 0
        for j in range(1, quarter + 1):
            iv = pow(j, -1, m)
            lhs = (lhs + iv * iv) % m
        rhs = (sg * 4 * E) % m
    elif tag == "b9":
        lhs = 0
        for j in range(1, quarter + 1):
            lhs = (lhs + pow(j, -1, m)) % m
        rhs = (-3 * q + 3 * p * q * q * inv2 - p * sg * E) % m
    else:  # b11
        lhs = 0
        for j in range(1, half + 1):
            lhs = (lhs + pow(j, -1, m)) % m
        rhs = (-2 * q + p * q * q) % m
    return _result(tag, p, None, mod, lhs, rhs)


def _rearranged_summand_mod(p: int, m: int, i: int, c_pref: int, inv16neg: int) -> int:
    """2^(1-p) (p-i) (-16)^-i C(2i,i)^2 C(3i,i) C(p+2i,3i) mod m.

    c_pref is 2^(1-p) mod m and inv16neg is (-16)^(-i) mod m, both supplied
    by the caller so the loop can keep them incremental.
    """
    t = c_pref * (p - i) % m
    t = t * inv16neg % m
    t = t * (comb(2 * i, i) % m) % m
    t = t * (comb(2 * i, i) % m) % m
    t = t * (comb(3 * i, i) % m) % m
    t = t * (comb(p + 2 * i, 3 * i) % m) % m
    return t


def verify_proof_step(tag: str, p: int):
    """One of the c5..d5 intermediate steps; per-index tags (c5, d4) return
    a list with one result per i in 0..(p-1)/2, the rest a single result."""
    if tag not in PROOF_STEP_TAGS:
        raise ValueError(f"unknown proof step tag {tag!r}")
    _require_prime(p)
    k = TAG_POWER[tag]
    mod = PrimePowerModulus(p, k)
    m = mod.m
    half = (p - 1) // 2
    sg = _sign(p)
    E = _euler_p3(p)

    if tag == "c5":
        # factorials up to p-1 are all coprime to p, so they invert mod p^2
        fact = [1] * p
        for j in range(1, p):
            fact[j] = fact[j - 1] * j % m
        inv_fact = [1] * p
        inv_fact[p - 1] = pow(fact[p - 1], -1, m)
        for j in range(p - 1, 0, -1):
            inv_fact[j - 1] = inv_fact[j] * j % m

        def binom_mod(a, b):
            return fact[a] * inv_fact[b] % m * inv_fact[a - b] % m

        inv16 = pow(16, -1, m)
        out = []
        r = 1
        for i in range(half + 1):
            lhs = (-1) ** i * binom_mod(half, i) * binom_mod(half + i, i) % m
            cb = binom_mod(2 * i, i)
            rhs = r * cb % m * cb % m
            out.append(_result("c5", p, i, mod, lhs, rhs))
            r = r * inv16 % m
        return out

    if tag in ("c8", "c9", "c10"):
        H, H2 = _harm_mod(p, k)
        inv16 = pow(16, -1, m)
        acc = 0
        cb = 1  # C(2i,i) mod m, updated in-ring
        r = 1   # 16^-i mod m
        for i in range(half + 1):
            w = cb * cb % m * r % m
            if tag == "c8":
                acc = (acc + w * (H[2 * i] - H[i])) % m
            elif tag == "c9":
                dh = H[2 * i] - H[i]
                acc = (acc + w * (dh * dh - H2[2 * i] - H2[i])) % m
            else:
                acc = (acc + w) % m
            if i < half:
                cb = cb * (4 * i + 2) % m * pow(i + 1, -1, m) % m
                r = r * inv16 % m
        q = fermat_quotient(2, p, k).value if tag != "c10" else 0
        inv2 = pow(2, -1, m)
        if tag == "c8":
            rhs = (-sg * (-q + p * q * q * inv2) + p * E) % m
        elif tag == "c9":
            rhs = (sg * q * q + 6 * E) % m
        else:
            rhs = (sg + p * p * E) % m
        return _result(tag, p, None, mod, acc, rhs)

    if tag in ("c11", "c12"):
        c_pref = pow(pow(2, p - 1, m), -1, m)  # 2^(1-p) mod m
        inv16neg = pow(-16 % m, -1, m)
        lo, hi = (0, half) if tag == "c11" else (half + 1, p - 1)
        acc = 0
        r = pow(inv16neg, lo, m)
        for i in range(lo, hi + 1):
            acc = (acc + _rearranged_summand_mod(p, m, i, c_pref, r)) % m
            r = r * inv16neg % m
        if tag == "c11":
            rhs = (sg * p + 5 * p ** 3 * E) % m
        else:
            rhs = (-4 * p ** 3 * E) % m
        return _result(tag, p, None, mod, acc, rhs)

    if tag == "d4":
        H, H2 = _harm_mod(p, k)
        inv2 = pow(2, -1, m)
        out = []
        for i in range(half + 1):
            lhs = (p - 2 * i) * (comb(3 * i, i) % m) % m * (comb(p + i, 3 * i) % m) % m
            dh = (H[2 * i] - H[i]) % m
            w = (dh * dh - H2[2 * i] - H2[i]) % m
            rhs = (p - p * p * dh + p ** 3 * inv2 * w) % m
            out.append(_result("d4", p, i, mod, lhs, rhs))
        return out

    # d5
    H, H2 = _harm_mod(p, k)
    lhs = _domb_sum_mod(p, m, -2, 2)
    inv2 = pow(2, -1, m)
    inv16 = pow(16, -1, m)
    acc = 0
    cb = 1
    r = 1
    for i in range(half + 1):
        dh = (H[2 * i] - H[i]) % m
        w = (dh * dh - H2[2 * i] - H2[i]) % m
        inner = (1 - p * dh + (p * p * inv2 % m) * w) % m
        acc = (acc + cb * cb % m * r % m * inner) % m
        if i < half:
            cb = cb * (4 * i + 2) % m * pow(i + 1, -1, m) % m
            r = r * inv16 % m
    rhs = pow(2, p, m) * p % m * acc % m
    return _result("d5", p, None, mod, lhs, rhs)


def verify_c12_tail_input(p: int):
    """The mod p^3 ingredient feeding c12:
    sum_{i=(p+1)/2}^{p-1} 16^-i C(2i,i)^2 == -2 p^2 E_{p-3} (mod p^3).

    Not part of the tag catalog; exposed so the test suite can pin it
    independently of the full c12 check.
    """
    _require_prime(p)
    mod = PrimePowerModulus(p, 3)
    m = mod.m
    half = (p - 1) // 2
    inv16 = pow(16, -1, m)
    acc = 0
    r = pow(inv16, half + 1, m)
    for i in range(half + 1, p):
        cb = comb(2 * i, i) % m
        acc = (acc + cb * cb % m * r) % m
        r = r * inv16 % m
    lhs = Residue(acc, mod)
    rhs = Residue(-2 * p * p * _euler_p3(p), mod)
    return lhs, rhs, lhs == rhs


def exact_lhs(tag: str, p: int, index: int | None = None) -> Fraction:
    """The left side of a tagged check as an exact Fraction.

    This is the oracle route: no modular arithmetic at all, every power and
    inverse is a true rational.  Reducing the result with residue_of_rational
    must reproduce the ring evaluation; intended for small p.
    """
    if tag not in TAG_POWER:
        raise ValueError(f"unknown congruence tag {tag!r}")
    _require_prime(p)
    half = (p - 1) // 2
    if tag in PER_INDEX_TAGS:
        if index is None or not 0 <= index <= half:
            raise ValueError(f"{tag} needs an index i in [0, {half}]")
    if tag == "thm1":
        return sum(Fraction((3 * k + 1) * domb(k), (-32) ** k) for k in range(p))
    if tag in ("thm2", "d5"):
        return sum(Fraction((3 * k + 2) * domb(k), (-2) ** k) for k in range(p))
    if tag == "b3":
        return alt_harmonic(half, 2)
    if tag == "b4":
        return alt_harmonic_weighted(half)
    if tag == "b5":
        return alt_harmonic(half, 1)
    if tag == "b6":
        return sum(Fraction(1, p - 4 * i) for i in range(1, p // 4 + 1))
    if tag == "b8":
        return harmonic(p // 4, 2)
    if tag == "b9":
        return harmonic(p // 4, 1)
    if tag == "b11":
        return harmonic(half, 1)
    if tag == "c5":
        i = index
        return Fraction((-1) ** i * comb(half, i) * comb(half + i, i))
    if tag == "c8":
        return sum(
            Fraction(comb(2 * i, i) ** 2, 16 ** i)
            * (harmonic(2 * i) - harmonic(i))
            for i in range(half + 1)
        )
    if tag == "c9":
        return sum(
            Fraction(comb(2 * i, i) ** 2, 16 ** i)
            * (
                (harmonic(2 * i) - harmonic(i)) ** 2
                - harmonic(2 * i, 2)
                - harmonic(i, 2)
            )
            for i in range(half + 1)
        )
    if tag == "c10":
        return sum(Fraction(comb(2 * i, i) ** 2, 16 ** i) for i in range(half + 1))
    if tag in ("c11", "c12"):
        lo, hi = (0, half) if tag == "c11" else (half + 1, p - 1)
        return sum(
            Fraction(2 * (p - i), 2 ** p)
            * Fraction(1, (-16) ** i)
            * comb(2 * i, i) ** 2
            * comb(3 * i, i)
            * comb(p + 2 * i, 3 * i)
            for i in range(lo, hi + 1)
        )
    # d4
    i = index
    return Fraction((p - 2 * i) * comb(3 * i, i) * comb(p + i, 3 * i))


def _verify_any(tag: str, p: int) -> list[CongruenceResult]:
    if tag in ("thm1", "thm2"):
        return [verify_thm1(p) if tag == "thm1" else verify_thm2(p)]
    if tag in LEMMA_TAGS:
        return [verify_lemma(tag, p)]
    res = verify_proof_step(tag, p)
    return res if isinstance(res, list) else [res]


def sweep(ids, p_lo: int, p_hi: int) -> list[CongruenceResult]:
    """Run the given tags over every prime in [p_lo, p_hi].

    Results come back ordered by prime ascending, then by tag in catalog
    order (per-index tags additionally by i ascending).
    """
    ids = list(ids)
    for tag in ids:
        if tag not in TAG_POWER:
            raise ValueError(f"unknown congruence tag {tag!r}")
    if not 5 <= p_lo <= p_hi:
        raise BadRange(f"need 5 <= p_lo <= p_hi, got [{p_lo}, {p_hi}]")
    ordered = [t for t in CONGRUENCE_TAGS if t in ids]
    out: list[CongruenceResult] = []
    for p in primes_in_range(p_lo, p_hi):
        for tag in ordered:
            out.extend(_verify_any(tag, p))
    return out
