"""Integer and p-adic helpers: primes, valuations, squares, Hensel lifting."""

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .errors import BadInput, NonSimpleRoot

# trial division bound for desk-scale factorization
TRIAL_DIVISION_BOUND = 10**6


def is_prime(n):
    n = int(n)
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for p in small:
        if n % p == 0:
            return n == p
    # deterministic Miller-Rabin for n < 3.3e24
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(bound):
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(bound) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytearray(len(sieve[i * i::i]))
    return [i for i, flag in enumerate(sieve) if flag]


def factor_int(n, bound=TRIAL_DIVISION_BOUND):
    """Trial-division factorization of |n|.

    Returns ``(factors, cofactor)`` where ``factors`` maps primes to exponents
    and ``cofactor`` is the unfactored part (1 when complete).  A cofactor that
    passes the primality test is moved into ``factors``.
    """
    n = abs(int(n))
    if n == 0:
        raise BadInput("cannot factor 0")
    factors = {}
    p = 2
    while p * p <= n and p <= bound:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1 and (p * p > n or is_prime(n)):
        factors[n] = factors.get(n, 0) + 1
        n = 1
    return factors, n


def prime_divisors(n, bound=TRIAL_DIVISION_BOUND):
    factors, cofactor = factor_int(n, bound)
    return sorted(factors), cofactor


def valuation(x, p):
    """p-adic valuation of an integer or Fraction; None stands for +infinity."""
    x = Fraction(x)
    if x == 0:
        return None
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def unit_part_mod(x, p, k):
    """Return the p-adic unit part of a nonzero rational x reduced mod p**k."""
    x = Fraction(x)
    v = valuation(x, p)
    x = x / Fraction(p) ** v
    mod = p**k
    return x.numerator * pow(x.denominator, -1, mod) % mod


def legendre(a, p):
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def is_padic_square_exact(x, p):
    """Decide whether a nonzero rational is a square in Q_p."""
    v = valuation(x, p)
    if v is None:
        return True
    if v % 2:
        return False
    if p == 2:
        return unit_part_mod(x, 2, 3) == 1
    return legendre(unit_part_mod(x, p, 1), p) == 1


def rational_sqrt(x):
    """Exact square root of a nonnegative rational, or None if it is not a square."""
    x = Fraction(x)
    if x < 0:
        return None
    rn, rd = isqrt(x.numerator), isqrt(x.denominator)
    if rn * rn == x.numerator and rd * rd == x.denominator:
        return Fraction(rn, rd)
    return None


@dataclass(frozen=True)
class PadicApprox:
    """An element of Z_p known modulo p**precision."""

    prime: int
    value: int
    precision: int

    def __post_init__(self):
        if self.precision < 1:
            raise BadInput("precision must be positive")
        if not is_prime(self.prime):
            raise BadInput(f"{self.prime} is not prime")
        if not 0 <= self.value < self.prime**self.precision:
            raise BadInput("value out of range for the stated precision")

    @property
    def modulus(self):
        return self.prime**self.precision

    def _coerce(self, other):
        if isinstance(other, PadicApprox):
            if other.prime != self.prime:
                raise BadInput("mixing different primes")
            return other.value, other.precision
        return int(other), self.precision

    def __add__(self, other):
        v, n = self._coerce(other)
        n = min(n, self.precision)
        return PadicApprox(self.prime, (self.value + v) % self.prime**n, n)

    __radd__ = __add__

    def __neg__(self):
        return PadicApprox(self.prime, -self.value % self.modulus, self.precision)

    def __sub__(self, other):
        return self + (-other if isinstance(other, PadicApprox) else -int(other))

    def __mul__(self, other):
        v, n = self._coerce(other)
        n = min(n, self.precision)
        return PadicApprox(self.prime, self.value * v % self.prime**n, n)

    __rmul__ = __mul__

    def reduce(self, precision):
        precision = min(precision, self.precision)
        return PadicApprox(self.prime, self.value % self.prime**precision, precision)


def hensel_lift(f, p, r0, N):
    """Lift a simple root ``r0`` of the integer polynomial ``f`` mod p to mod p**N.

    ``f`` is anything with integer coefficients exposed through ``coeffs``
    (lowest degree first) or a plain coefficient list.  Newton iteration with
    quadratic precision growth.
    """
    if not is_prime(p):
        raise BadInput(f"{p} is not prime")
    coeffs = [int(c) for c in getattr(f, "coeffs", f)]
    deriv = [i * c for i, c in enumerate(coeffs)][1:]

    def ev(cs, x, mod):
        acc = 0
        for c in reversed(cs):
            acc = (acc * x + c) % mod
        return acc

    r = r0 % p
    if ev(coeffs, r, p) != 0:
        raise BadInput(f"{r0} is not a root of f mod {p}")
    if ev(deriv, r, p) == 0:
        raise NonSimpleRoot(f"f'({r0}) vanishes mod {p}")
    k = 1
    while k < N:
        k = min(2 * k, N)
        mod = p**k
        r = (r - ev(coeffs, r, mod) * pow(ev(deriv, r, mod), -1, mod)) % mod
    return PadicApprox(p, r % p**N, N)
