"""Integer sequence generators: Domb, Franel, Euler, Catalan, central binomials.

All values are exact.  The Domb numbers are produced by direct summation of
the defining formula

    Domb(n) = sum_{k=0}^{n} C(n,k)^2 C(2k,k) C(2n-2k,n-k)

with each row's terms generated by exact multiplicative updates (every
intermediate division is checked to be exact), plus three independent
transformed summations used for cross-validation.  Partial sums of the two
1/pi-type series are accumulated as exact rationals and only converted to a
float at the very end.
"""

from __future__ import annotations

import math
import threading
from decimal import Decimal, localcontext
from fractions import Fraction

from .arith import NotPrime, PrimePowerModulus, Residue, is_prime


def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0, with the usual convention 0 outside 0 <= k <= n."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


class SequenceTable:
    """A memoized integer sequence prefix.

    Extension appends only; existing entries are never mutated.  A lock
    confines extension to one writer at a time, so concurrent readers of
    already-filled indices are safe.
    """

    def __init__(self, sid: str, step):
        self.id = sid
        self._vals: list[int] = []
        self._lock = threading.Lock()
        self._step = step

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError(f"negative index {i}")
        if i >= len(self._vals):
            with self._lock:
                while len(self._vals) <= i:
                    self._vals.append(self._step(self._vals))
        return self._vals[i]

    def prefix(self, count: int) -> list[int]:
        """The first `count` values as a fresh list."""
        if count > 0:
            self[count - 1]
        return self._vals[:count]

    @property
    def max_index(self) -> int:
        return len(self._vals) - 1


def _central_step(vals):
    n = len(vals)
    if n == 0:
        return 1
    v = vals[n - 1] * (4 * n - 2)
    assert v % n == 0
    return v // n


central_binomial = SequenceTable("central_binomial", _central_step)


def _domb_step(vals):
    # one row of the defining double-product sum, folded by the k <-> n-k symmetry
    n = len(vals)
    t = central_binomial[n]  # the k = 0 term C(2n, n)
    total = 0
    for k in range(n // 2 + 1):
        total += t if 2 * k == n else 2 * t
        if k < n // 2:
            num = t * ((n - k) ** 3 * (2 * k + 1))
            den = (k + 1) ** 3 * (2 * (n - k) - 1)
            assert num % den == 0
            t = num // den
    return total


_domb_table = SequenceTable("domb", _domb_step)


def domb(n: int) -> int:
    """The n-th Domb number, sum_k C(n,k)^2 C(2k,k) C(2n-2k,n-k)."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    return _domb_table[n]


def _franel_step(vals):
    n = len(vals)
    b = 1
    total = 0
    for k in range(n + 1):
        total += b ** 3
        if k < n:
            v = b * (n - k)
            assert v % (k + 1) == 0
            b = v // (k + 1)
    return total


_franel_table = SequenceTable("franel", _franel_step)


def franel(n: int) -> int:
    """The n-th Franel number, sum_k C(n,k)^3."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    return _franel_table[n]


def catalan(i: int) -> int:
    """The i-th Catalan number C(2i,i)/(i+1); the division is exact."""
    if i < 0:
        raise ValueError(f"need i >= 0, got {i}")
    c = central_binomial[i]
    assert c % (i + 1) == 0
    return c // (i + 1)


def domb_via_cz(n: int) -> int:
    """Domb(n) by the alternating 16^(n-k) transformation:
    sum_k (-1)^k C(n+2k,3k) C(2k,k)^2 C(3k,k) 16^(n-k)."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    return sum(
        (-1) ** k
        * binomial(n + 2 * k, 3 * k)
        * central_binomial[k] ** 2
        * binomial(3 * k, k)
        * 16 ** (n - k)
        for k in range(n + 1)
    )


def domb_via_sunzh(n: int) -> int:
    """Domb(n) by the half-range 4^(n-2k) transformation:
    sum_{k<=n/2} C(2k,k)^2 C(3k,k) C(n+k,3k) 4^(n-2k)."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    return sum(
        central_binomial[k] ** 2
        * binomial(3 * k, k)
        * binomial(n + k, 3 * k)
        * 4 ** (n - 2 * k)
        for k in range(n // 2 + 1)
    )


def domb_via_ctyz(n: int) -> int:
    """Domb(n) from Franel numbers:
    (-1)^n sum_k C(n,k) C(n+k,k) (-8)^(n-k) f_k."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    s = sum(
        binomial(n, k) * binomial(n + k, k) * (-8) ** (n - k) * franel(k)
        for k in range(n + 1)
    )
    return (-1) ** n * s


def euler_number(n: int) -> int:
    """The n-th Euler number (secant-number convention: E_0 = 1, odd ones 0).

    Even indices come from the recurrence sum_{j=0}^{m} C(2m,2j) E_{2j} = 0.
    """
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    if n % 2 == 1:
        return 0
    e = [0] * (n + 1)
    e[0] = 1
    for m in range(1, n // 2 + 1):
        acc = 0
        for j in range(m):
            acc += math.comb(2 * m, 2 * j) * e[2 * j]
        e[2 * m] = -acc
    return e[n]


def euler_number_mod(n: int, p: int) -> Residue:
    """E_n mod p by running the same recurrence inside Z/p.

    Binomial coefficients are generated by a Pascal triangle mod p, so no
    inverses are needed and any n is fine, including n >= p.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    mod = PrimePowerModulus(p, 1)
    if n % 2 == 1:
        return Residue(0, mod)
    e = [0] * (n + 1)
    e[0] = 1
    row = [1]
    for r in range(1, n + 1):
        row.append(1)
        for j in range(r - 1, 0, -1):
            row[j] = (row[j] + row[j - 1]) % p
        if r % 2 == 0:
            m = r // 2
            acc = 0
            for j in range(m):
                acc += row[2 * j] * e[2 * j]
            e[r] = (-acc) % p
    return Residue(e[n], mod)


# analytic limits of the two series, as ordinary floats
ROGERS_LIMIT = 2.0 / math.pi
CCL_LIMIT = 8.0 / (math.sqrt(3.0) * math.pi)


def _to_real(q: Fraction) -> float:
    # exact-rational to decimal division at 30 significant digits, then float
    with localcontext() as ctx:
        ctx.prec = 30
        d = Decimal(q.numerator) / Decimal(q.denominator)
    return float(d)


def rogers_partial(K: int) -> float:
    """Mean of the K-1-st and K-th partial sums of sum (3k+1) Domb(k)/(-32)^k.

    The raw partial sums straddle the limit 2/pi because the terms
    alternate; averaging two consecutive ones gives a usable estimate.
    Needs K >= 2.
    """
    if K < 2:
        raise ValueError(f"need K >= 2, got {K}")
    s = Fraction(0)
    prev = Fraction(0)
    for k in range(K + 1):
        prev = s
        s = s + Fraction((3 * k + 1) * domb(k), (-32) ** k)
    return _to_real((prev + s) / 2)


def ccl_partial(K: int) -> float:
    """The K-th partial sum of sum (5k+1) Domb(k)/64^k, which increases to
    its limit 8/(sqrt(3) pi).  Needs K >= 0."""
    if K < 0:
        raise ValueError(f"need K >= 0, got {K}")
    s = Fraction(0)
    for k in range(K + 1):
        s = s + Fraction((5 * k + 1) * domb(k), 64 ** k)
    return _to_real(s)
