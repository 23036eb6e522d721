"""Dense univariate polynomials over Q and helpers over F_p and Z_p.

``Poly`` is immutable with Fraction coefficients stored lowest degree first.
Mod-p work uses plain lists of ints (also lowest degree first), which keeps the
finite-field code paths cheap.
"""

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
import random

from .arith import hensel_lift, is_prime, valuation
from .errors import BadInput, NotSquarefree, ZeroPolynomial


def _strip(cs):
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in _strip(coeffs)))

    def __setattr__(self, key, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def x(cls):
        return cls([0, 1])

    @classmethod
    def const(cls, c):
        return cls([c])

    @classmethod
    def from_roots(cls, roots):
        p = cls([1])
        for r in roots:
            p = p * cls([-Fraction(r), 1])
        return p

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            other = Poly([other])
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"

    @staticmethod
    def _lift(o):
        return o if isinstance(o, Poly) else Poly([o])

    def __add__(self, other):
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        result, base = Poly([1]), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        other = self._lift(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        if self.degree < dq:
            return Poly(), self
        quot = [Fraction(0)] * (self.degree - dq + 1)
        inv = 1 / other.lc
        for i in range(self.degree - dq, -1, -1):
            c = rem[i + dq] * inv
            quot[i] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] -= c * b
        return Poly(quot), Poly(rem[:dq])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        q, r = divmod(self, other)
        if not r.is_zero():
            raise BadInput("polynomial division is not exact")
        return q

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self):
        if self.is_zero():
            return self
        return self * (1 / self.lc)

    def compose(self, other):
        other = self._lift(other)
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    def shift(self, a):
        """Return f(x + a)."""
        return self.compose(Poly([a, 1]))

    def reversed(self, degree=None):
        """x**d * f(1/x) for d = degree (defaults to deg f)."""
        d = self.degree if degree is None else degree
        cs = list(self.coeffs) + [Fraction(0)] * (d + 1 - len(self.coeffs))
        return Poly(cs[::-1])

    def scale_to_integer(self):
        """Primitive integer polynomial with the same roots (positive leading coeff)."""
        if self.is_zero():
            raise ZeroPolynomial("zero polynomial")
        den = lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = reduce(gcd, ints)
        ints = [c // g for c in ints]
        if ints[-1] < 0:
            ints = [-c for c in ints]
        return ints

    def reduce_mod(self, p):
        """Coefficients reduced mod p as a stripped list (denominators must be prime to p)."""
        out = []
        for c in self.coeffs:
            if c.denominator % p == 0:
                raise BadInput(f"coefficient {c} has {p} in its denominator")
            out.append(c.numerator * pow(c.denominator, -1, p) % p)
        return _strip(out)


def poly_gcd(a, b):
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def squarefree_part(f):
    """Product of the distinct irreducible factors of f (monic)."""
    if f.is_zero():
        raise ZeroPolynomial("zero polynomial")
    if f.degree == 0:
        return Poly([1])
    return f.exact_div(poly_gcd(f, f.derivative())).monic()


def is_squarefree(f):
    return poly_gcd(f, f.derivative()).degree == 0


def power_sums(f, count):
    """Power sums p_1..p_count of the roots of f (Newton's identities)."""
    f = f.monic()
    n = f.degree
    # e_k with sign: f = x^n + c_{n-1} x^{n-1} + ... ; c_{n-k} = (-1)^k e_k
    c = [f[n - k] for k in range(n + 1)]
    sums = [Fraction(n)]
    for k in range(1, count + 1):
        s = -k * c[k] if k <= n else Fraction(0)
        for i in range(1, k):
            if i <= n:
                s -= c[i] * sums[k - i]
        sums.append(s)
    return sums


def root_sum(f, g):
    """Sum of g(r) over the roots r of f, with multiplicity."""
    sums = power_sums(f, max(g.degree, 0))
    return sum((g[k] * sums[k] for k in range(g.degree + 1)), Fraction(0))


# ---------------------------------------------------------------- mod p


def fp_strip(cs):
    return _strip(cs)


def fp_eval(cs, x, p):
    acc = 0
    for c in reversed(cs):
        acc = (acc * x + c) % p
    return acc


def fp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _strip(out)


def fp_sub(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _strip([(x - y) % p for x, y in zip(a, b)])


def fp_divmod(a, b, p):
    b = _strip(b)
    if not b:
        raise ZeroDivisionError("division by zero polynomial mod p")
    rem = [c % p for c in a]
    rem = _strip(rem)
    db = len(b) - 1
    if len(rem) - 1 < db:
        return [], rem
    inv = pow(b[-1], -1, p)
    quot = [0] * (len(rem) - db)
    for i in range(len(rem) - 1 - db, -1, -1):
        c = rem[i + db] * inv % p
        quot[i] = c
        if c:
            for j, y in enumerate(b):
                rem[i + j] = (rem[i + j] - c * y) % p
    return _strip(quot), _strip(rem[:db])


def fp_gcd(a, b, p):
    a, b = _strip([c % p for c in a]), _strip([c % p for c in b])
    while b:
        a, b = b, fp_divmod(a, b, p)[1]
    if not a:
        return []
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def fp_powmod(base, e, mod, p):
    result = [1]
    base = fp_divmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = fp_divmod(fp_mul(result, base, p), mod, p)[1]
        base = fp_divmod(fp_mul(base, base, p), mod, p)[1]
        e >>= 1
    return result


# exhaustive evaluation is cheaper than Cantor-Zassenhaus below this size
_BRUTE_FORCE_PRIME = 3000


def fp_roots(cs, p, seed=0):
    """Distinct roots in F_p of a nonzero polynomial (list of ints), sorted."""
    cs = _strip([c % p for c in cs])
    if not cs:
        raise ZeroPolynomial("zero polynomial mod p")
    if len(cs) == 1:
        return []
    if p <= _BRUTE_FORCE_PRIME:
        return [x for x in range(p) if fp_eval(cs, x, p) == 0]
    # split off the product of linear factors: gcd(f, x^p - x)
    xp = fp_powmod([0, 1], p, cs, p)
    g = fp_gcd(cs, fp_sub(xp, [0, 1], p), p)
    rng = random.Random(seed)
    roots = []
    stack = [g]
    while stack:
        h = stack.pop()
        if len(h) <= 1:
            continue
        if len(h) == 2:
            roots.append(-h[0] * pow(h[1], -1, p) % p)
            continue
        while True:
            a = rng.randrange(p)
            w = fp_powmod([a, 1], (p - 1) // 2, h, p)
            d = fp_gcd(h, fp_sub(w, [1], p), p)
            if 1 < len(d) < len(h):
                stack.append(d)
                stack.append(fp_divmod(h, d, p)[0])
                break
    return sorted(roots)


# ---------------------------------------------------------------- Z_p roots


def _int_shift_scale(cs, a, p):
    """Coefficients of f(a + p*x) for an integer coefficient list."""
    # Horner with Taylor shift, then scale
    n = len(cs)
    out = list(cs)
    for i in range(n):
        for j in range(n - 2, i - 1, -1):
            out[j] += a * out[j + 1]
    pk = 1
    for i in range(n):
        out[i] *= pk
        pk *= p
    return out


def _content_valuation(cs, p):
    vs = [valuation(c, p) for c in cs if c]
    return min(vs)


class ZpRootBranch:
    """A p-adic disc containing exactly one root of an integer polynomial.

    The root is ``offset + p**depth * t`` where ``t`` is the unique Z_p root of
    ``local`` congruent to ``residue`` mod p; that root is simple mod p, so it
    lifts by Newton iteration to any precision.
    """

    __slots__ = ("prime", "offset", "depth", "local", "residue")

    def __init__(self, prime, offset, depth, local, residue):
        self.prime = prime
        self.offset = offset
        self.depth = depth
        self.local = local
        self.residue = residue

    def approximation(self, precision):
        """Integer r with r congruent to the root modulo p**precision."""
        p = self.prime
        n = max(precision - self.depth, 1)
        t = hensel_lift(self.local, p, self.residue, n).value
        return (self.offset + p**self.depth * t) % p**precision

    def __repr__(self):
        return (f"ZpRootBranch(p={self.prime}, offset={self.offset}, "
                f"depth={self.depth}, residue={self.residue})")


def zp_roots(cs, p, depth_cap=1024, first_residues=None):
    """Isolate the roots in Z_p of a squarefree integer polynomial.

    Returns ``(branches, exhausted)``.  ``branches`` holds one ZpRootBranch per
    root found; ``exhausted`` is True when some part of the search tree hit
    ``depth_cap`` before separating roots (so the list may be incomplete).
    ``first_residues`` optionally restricts the residues mod p tried at the top.
    """
    if not is_prime(p):
        raise BadInput(f"{p} is not prime")
    cs = _strip([int(c) for c in cs])
    if not cs:
        raise ZeroPolynomial("zero polynomial")
    branches = []
    exhausted = False
    # stack of (local poly, offset, depth)
    stack = [(cs, 0, 0, first_residues)]
    while stack:
        g, offset, depth, restrict = stack.pop()
        v = _content_valuation(g, p)
        if v:
            g = [c // p**v for c in g]
        gbar = _strip([c % p for c in g])
        if len(gbar) <= 1:
            continue
        deriv = [(i * c) % p for i, c in enumerate(g)][1:]
        residues = fp_roots(gbar, p)
        if restrict is not None:
            residues = [r for r in residues if r in restrict]
        for r in residues:
            if fp_eval(deriv, r, p) != 0:
                branches.append(ZpRootBranch(p, offset, depth, g, r))
            elif depth + 1 >= depth_cap:
                exhausted = True
            else:
                stack.append((_int_shift_scale(g, r, p), offset + r * p**depth,
                              depth + 1, None))
    branches.sort(key=lambda b: (b.depth, b.offset, b.residue))
    return branches, exhausted


# ---------------------------------------------------------------- rational roots


def _rational_reconstruct(a, m, bound):
    """Find u/v = a mod m with |u|, 0 < v both at most bound, or None."""
    r0, r1 = m, a % m
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    return Fraction(r1, s1)


def rational_roots(f):
    """All rational roots of a nonzero polynomial over Q, sorted ascending.

    Roots of the squarefree part are lifted p-adically from a prime of good
    reduction and recovered by rational reconstruction; every candidate is
    confirmed by exact evaluation.
    """
    if not isinstance(f, Poly):
        f = Poly(f)
    if f.is_zero():
        raise ZeroPolynomial("rational_roots of the zero polynomial")
    roots = []
    if f[0] == 0:
        roots.append(Fraction(0))
        k = next(i for i, c in enumerate(f.coeffs) if c != 0)
        f = Poly(f.coeffs[k:])
    if f.degree <= 0:
        return roots
    g = squarefree_part(f)
    if g.degree == 1:
        return sorted(roots + [-g[0] / g[1]])
    ints = g.scale_to_integer()
    lead, const = abs(ints[-1]), abs(ints[0])
    bound = max(lead, const)
    p = 3
    while True:
        if ints[-1] % p and ints[0] % p:
            gbar = [c % p for c in ints]
            dbar = [(i * c) % p for i, c in enumerate(ints)][1:]
            if len(fp_gcd(gbar, dbar, p)) == 1:
                break
        p += 2
        while not is_prime(p):
            p += 2
    N = 1
    while p**N <= 2 * bound * bound:
        N += 1
    for r in fp_roots(ints, p):
        lifted = hensel_lift(ints, p, r, N).value
        cand = _rational_reconstruct(lifted, p**N, bound)
        if cand is not None and g(cand) == 0:
            roots.append(cand)
    return sorted(set(roots))


# ---------------------------------------------------------------- real roots


def sturm_sequence(f):
    seq = [f, f.derivative()]
    while not seq[-1].is_zero():
        r = seq[-2] % seq[-1]
        if r.is_zero():
            break
        seq.append(-r)
    return seq


def _sign_changes(values):
    signs = [v for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def sturm_count(seq, lo, hi):
    """Number of distinct real roots in the half-open interval (lo, hi]."""
    return _sign_changes([s(lo) for s in seq]) - _sign_changes([s(hi) for s in seq])


def sturm_count_above(seq, lo):
    """Number of distinct real roots strictly greater than lo."""
    at_inf = [s.lc for s in seq]
    return _sign_changes([s(lo) for s in seq]) - _sign_changes(at_inf)


def root_bound(f):
    """Cauchy bound: every real root lies strictly inside (-B, B)."""
    lc = abs(f.lc)
    return 1 + max((abs(c) / lc for c in f.coeffs[:-1]), default=Fraction(0))


def real_root_isolation(f):
    """Disjoint isolating intervals (lo, hi] with exact rational endpoints.

    Each interval contains exactly one real root; endpoints are never roots.
    """
    if not isinstance(f, Poly):
        f = Poly(f)
    if f.is_zero():
        raise ZeroPolynomial("zero polynomial")
    if not is_squarefree(f):
        raise NotSquarefree("deflate with gcd(f, f') first")
    if f.degree == 0:
        return []
    seq = sturm_sequence(f)
    B = Fraction(root_bound(f))
    out = []
    work = [(-B, B)]
    while work:
        lo, hi = work.pop()
        n = sturm_count(seq, lo, hi)
        if n == 0:
            continue
        if n == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        step = (hi - lo) / 4
        while f(mid) == 0:
            step /= 3
            mid -= step
        work.append((mid, hi))
        work.append((lo, mid))
    out.sort()
    return out


def refine_root(f, interval, width):
    """Shrink an isolating interval until hi - lo <= width."""
    lo, hi = interval
    if lo == hi:
        return interval
    seq = sturm_sequence(f)
    while hi - lo > width:
        mid = (lo + hi) / 2
        if f(mid) == 0:
            return (mid, mid)
        if sturm_count(seq, lo, mid) == 1:
            hi = mid
        else:
            lo = mid
    return (lo, hi)
