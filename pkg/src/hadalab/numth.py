"""Unit groups, multiplicative orders, cyclotomic cosets and related counts."""

from dataclasses import dataclass
from math import gcd

from .errors import BadModulus, NotAUnit

__all__ = [
    "UnitGroupInfo",
    "CosetPartition",
    "TurynVerdict",
    "unit_group",
    "mult_order",
    "cyclotomic_cosets",
    "mu_count",
    "solutions_xp",
    "turyn_admissible",
    "is_prime",
    "factorize",
]


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n):
    """Trial-division factorization as {prime: exponent}."""
    if n < 1:
        raise ValueError("factorize expects n >= 1")
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime_power(n):
    return len(factorize(n)) == 1 if n > 1 else False


def mult_order(a, n):
    """Multiplicative order of a modulo n; a must be a unit."""
    if n < 1:
        raise ValueError("modulus must be >= 1")
    if gcd(a, n) != 1:
        raise NotAUnit("%d is not a unit mod %d" % (a, n))
    if n == 1:
        return 1
    x = a % n
    k = 1
    while x != 1:
        x = (x * a) % n
        k += 1
    return k


@dataclass(frozen=True)
class UnitGroupInfo:
    n: int
    units: tuple
    orders: dict  # unit -> multiplicative order

    @property
    def phi(self):
        return len(self.units)


def unit_group(n):
    if n < 1:
        raise ValueError("modulus must be >= 1")
    units = tuple(a for a in range(n) if gcd(a, n) == 1)
    orders = {a: mult_order(a, n) for a in units}
    return UnitGroupInfo(n=n, units=units, orders=orders)


@dataclass(frozen=True)
class CosetPartition:
    """Orbits of multiplication by a on Z_n: C_s = {s, s*a, s*a^2, ...}."""

    n: int
    a: int
    cosets: tuple  # tuple of tuples, each sorted; ordered by smallest element

    @property
    def rank(self):
        return len(self.cosets)

    def rep_of(self, s):
        """Smallest element of the coset containing s."""
        return self._index()[s % self.n][0]

    def coset_of(self, s):
        return self._index()[s % self.n]

    def _index(self):
        idx = getattr(self, "_idx", None)
        if idx is None:
            idx = {}
            for c in self.cosets:
                for x in c:
                    idx[x] = c
            object.__setattr__(self, "_idx", idx)
        return idx

    def reps(self):
        return tuple(c[0] for c in self.cosets)


def cyclotomic_cosets(a, n):
    if n < 1:
        raise ValueError("modulus must be >= 1")
    if gcd(a, n) != 1:
        raise NotAUnit("%d is not a unit mod %d" % (a, n))
    seen = [False] * n
    cosets = []
    for s in range(n):
        if seen[s]:
            continue
        orb = []
        x = s
        while not seen[x]:
            seen[x] = True
            orb.append(x)
            x = (x * a) % n
        cosets.append(tuple(sorted(orb)))
    return CosetPartition(n=n, a=a % n, cosets=tuple(cosets))


def mu_count(N):
    """Number of square roots of 1 mod N, for N divisible by 4.

    Returns (by_enumeration, by_formula); the two must agree.  For
    N = 2^m * p1^h1 * ... * pd^hd with m >= 2, the formula is 2^(d+1)
    when m = 2 and 2^(d+2) when m >= 3.
    """
    if N % 4 != 0:
        raise BadModulus("mu_count needs N divisible by 4, got %d" % N)
    by_enum = sum(1 for x in range(N) if (x * x) % N == 1)
    fac = factorize(N)
    m = fac.pop(2)
    d = len(fac)
    by_formula = 2 ** (d + 1) if m == 2 else 2 ** (d + 2)
    return by_enum, by_formula


def solutions_xp(N, p):
    """All units x mod N with x^p = 1."""
    return tuple(x for x in range(N) if gcd(x, N) == 1 and pow(x, p, N) == 1)


@dataclass(frozen=True)
class TurynVerdict:
    N: int
    is_4m2: bool
    m: int  # 0 when N is not of the form 4*m^2
    m_odd: bool
    m_not_prime_power: bool
    known_order: bool  # N = 4, the one order where a circulant Hadamard exists

    @property
    def admissible(self):
        return self.is_4m2 and self.m_odd and self.m_not_prime_power


def turyn_admissible(N):
    """Necessary-condition screen for circulant Hadamard orders > 4:
    N = 4*m^2 with m odd and m not a prime power."""
    if N < 1:
        raise ValueError("order must be >= 1")
    m = 0
    is_4m2 = False
    if N % 4 == 0:
        r = int(round((N // 4) ** 0.5))
        for cand in (r - 1, r, r + 1):
            if cand > 0 and 4 * cand * cand == N:
                m = cand
                is_4m2 = True
                break
    return TurynVerdict(
        N=N,
        is_4m2=is_4m2,
        m=m,
        m_odd=bool(is_4m2 and m % 2 == 1),
        m_not_prime_power=bool(is_4m2 and not is_prime_power(m)),
        known_order=(N == 4),
    )
