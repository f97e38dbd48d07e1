"""Integer facts: m_k, the equation p^s = 2^l + 1, and solvability of c_k."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce
from math import comb, gcd

from sympy import factorint, isprime, perfect_power


@dataclass(frozen=True)
class MkValue:
    k: int
    value: int
    prime: int | None  # p when k+1 = p^l, else None

    @property
    def branch(self) -> str:
        return "non-prime-power" if self.prime is None else f"prime-power {self.prime}"

    def __int__(self):
        return self.value


def prime_power_base(n: int) -> int | None:
    """p if n = p^l for a prime p and l >= 1, else None."""
    if n < 2:
        return None
    f = factorint(n)
    return int(next(iter(f))) if len(f) == 1 else None


def mk_gcd(k: int) -> int:
    return reduce(gcd, (comb(k + 1, i) for i in range(1, k + 1)), 0)


def mk_closed_form(k: int) -> int:
    p = prime_power_base(k + 1)
    return 1 if p is None else p


@lru_cache(maxsize=None)
def m_k(k: int) -> MkValue:
    """gcd of binom(k+1, i), 1 <= i <= k; equals p when k+1 is a power of p, else 1.

    >>> m_k(8).value
    3
    """
    if k < 1:
        raise ValueError("k must be positive")
    direct = mk_gcd(k)
    closed = mk_closed_form(k)
    if direct != closed:
        raise AssertionError(f"m_{k}: gcd {direct} != closed form {closed}")
    return MkValue(k, direct, prime_power_base(k + 1))


def fermat_solutions(l_max: int) -> list[tuple[int, int, int]]:
    """All (p, s, l) with l <= l_max, p an odd prime and p^s = 2^l + 1."""
    if l_max < 1:
        raise ValueError("l_max must be at least 1")
    out = []
    for l in range(1, l_max + 1):
        n = 2 ** l + 1
        if isprime(n):
            out.append((n, 1, l))
            continue
        pp = perfect_power(n)
        if pp and isprime(pp[0]):
            out.append((int(pp[0]), int(pp[1]), l))
    return out


def is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def excluded_form(k: int) -> bool:
    """k = 2^l = p^s - 1 for an odd prime p."""
    p = prime_power_base(k + 1)
    return is_power_of_two(k) and p is not None and p % 2 == 1


@dataclass(frozen=True)
class CasesResult:
    k: int
    solvable: bool
    c: int | None
    branch: str
    excluded: bool
    exceptional_c: int | None = None   # the choice made for excluded k
    exceptional_gcd: int | None = None

    def gcd_with(self, c: int) -> int:
        mk, mk1 = m_k(self.k).value, m_k(self.k - 1).value
        return mk * (1 + (-1) ** self.k * (self.k + 1) + c * mk * mk1)


def _generic_c(k: int) -> int | None:
    mk, mk1 = m_k(k).value, m_k(k - 1).value
    num = mk1 - 1 - (-1) ** k * (k + 1)
    den = mk * mk1
    return num // den if num % den == 0 else None


def cases_solver(k: int) -> CasesResult:
    """Solve 1 + (-1)^k (k+1) + c m_k m_{k-1} = m_{k-1} for an integer c."""
    if k < 2:
        raise ValueError("k must be at least 2")
    mk, mk1 = m_k(k).value, m_k(k - 1).value
    generic = _generic_c(k)
    excl = excluded_form(k)
    if excl:
        if generic is not None:
            raise AssertionError(f"k = {k} has the excluded form but is solvable")
        p = mk
        if k == 8:
            c = -2
        else:
            c = (p - 1) // 2 - 1
        res = CasesResult(k, False, None, "excluded", True, c)
        return CasesResult(k, False, None, "excluded", True, c, res.gcd_with(c))
    if mk1 == 1:
        c = (-1) ** (k + 1) * (k + 1) // mk
        branch = "m_{k-1} = 1"
    elif mk1 == 2:
        c = -(k // 2)
        branch = "m_{k-1} = 2"
    else:
        p = mk1
        s = 0
        n = k
        while n % p == 0:
            n //= p
            s += 1
        c = (p ** (s - 1) + 1) // mk
        branch = "m_{k-1} odd prime"
    if generic != c:
        raise AssertionError(f"k = {k}: branch value {c} disagrees with direct solve {generic}")
    return CasesResult(k, True, c, branch, False)
