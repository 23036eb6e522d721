"""Elliptic curves over Q in long Weierstrass form, with reductions mod p."""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .arith import rational_sqrt
from .errors import CurveMismatch, NotOnCurve, SingularCurve
from .poly import Poly, rational_roots


class RationalCurve:
    """y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q."""

    def __init__(self, a1=0, a2=0, a3=0, a4=0, a6=0):
        self.a1, self.a2, self.a3, self.a4, self.a6 = (Fraction(a) for a in (a1, a2, a3, a4, a6))
        if self.discriminant == 0:
            raise SingularCurve(f"singular curve {self.ainvs}")

    @classmethod
    def short(cls, a, b):
        return cls(0, 0, 0, a, b)

    @classmethod
    def from_cubic_roots(cls, e1, e2, e3):
        """y^2 = (x - e1)(x - e2)(x - e3)."""
        c = Poly.from_roots([e1, e2, e3])
        return cls(0, c[2], 0, c[1], c[0])

    @property
    def ainvs(self):
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def __eq__(self, other):
        return isinstance(other, RationalCurve) and self.ainvs == other.ainvs

    def __hash__(self):
        return hash(self.ainvs)

    def __repr__(self):
        if self.is_short:
            return f"RationalCurve.short({self.a4}, {self.a6})"
        return f"RationalCurve{tuple(str(a) for a in self.ainvs)}"

    @property
    def is_short(self):
        return self.a1 == self.a2 == self.a3 == 0

    @cached_property
    def b_invariants(self):
        a1, a2, a3, a4, a6 = self.ainvs
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return b2, b4, b6, b8

    @cached_property
    def discriminant(self):
        b2, b4, b6, b8 = self.b_invariants
        return -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    @cached_property
    def c_invariants(self):
        b2, b4, b6, _ = self.b_invariants
        return b2 * b2 - 24 * b4, -b2**3 + 36 * b2 * b4 - 216 * b6

    @cached_property
    def j_invariant(self):
        c4, _ = self.c_invariants
        return c4**3 / self.discriminant

    @cached_property
    def short_coefficients(self):
        """(a, b) of the isomorphic model y^2 = x^3 + a x + b (completed square, u = 1)."""
        if self.is_short:
            return self.a4, self.a6
        c4, c6 = self.c_invariants
        return -c4 / 48, -c6 / 864

    @cached_property
    def short_model(self):
        if self.is_short:
            return self
        return RationalCurve.short(*self.short_coefficients)

    def to_short(self, P):
        """Image of a point under the completed-square isomorphism."""
        if P.is_infinity:
            return self.short_model.infinity()
        if self.is_short:
            return P
        b2 = self.b_invariants[0]
        x = P.x + b2 / 12
        y = P.y + (self.a1 * P.x + self.a3) / 2
        return CurvePoint(self.short_model, x, y)

    def from_short(self, P):
        if P.is_infinity:
            return self.infinity()
        if self.is_short:
            return P
        b2 = self.b_invariants[0]
        x = P.x - b2 / 12
        y = P.y - (self.a1 * x + self.a3) / 2
        return CurvePoint(self, x, y)

    def short_x_shift(self):
        """Offset s with x_short = x + s."""
        return self.b_invariants[0] / 12

    def cubic(self):
        """Right-hand side x^3 + a x + b of the short model."""
        a, b = self.short_coefficients
        return Poly([b, a, 0, 1])

    def contains(self, x, y):
        a1, a2, a3, a4, a6 = self.ainvs
        return y * y + a1 * x * y + a3 * y == x**3 + a2 * x * x + a4 * x + a6

    def point(self, x, y):
        return CurvePoint(self, Fraction(x), Fraction(y))

    def infinity(self):
        return CurvePoint(self, None, None)

    def lift_x(self, x):
        """Rational points with the given x-coordinate (0, 1 or 2 of them)."""
        x = Fraction(x)
        a1, a2, a3, a4, a6 = self.ainvs
        # y^2 + (a1 x + a3) y - rhs = 0
        bq = a1 * x + a3
        disc = bq * bq + 4 * (x**3 + a2 * x * x + a4 * x + a6)
        r = rational_sqrt(disc)
        if r is None:
            return []
        ys = sorted({(-bq + r) / 2, (-bq - r) / 2})
        return [CurvePoint(self, x, y) for y in ys]

    def bad_primes(self):
        from .arith import prime_divisors
        primes, cofactor = prime_divisors(self.discriminant.numerator)
        dens, cof2 = prime_divisors(lcm_of_denominators(self.ainvs))
        return sorted(set(primes) | set(dens)), cofactor * cof2

    def has_good_reduction(self, p):
        if any(a.denominator % p == 0 for a in self.ainvs):
            return False
        return self.discriminant.numerator % p != 0

    def reduce(self, p):
        return FpCurve(p, [a.numerator * pow(a.denominator, -1, p) % p for a in self.ainvs])


def lcm_of_denominators(values):
    from math import lcm
    return lcm(*(Fraction(v).denominator for v in values))


@dataclass(frozen=True, eq=False)
class CurvePoint:
    curve: RationalCurve = field(repr=False)
    x: Fraction
    y: Fraction

    def __post_init__(self):
        if (self.x is None) != (self.y is None):
            raise NotOnCurve("both coordinates or neither")
        if self.x is not None and not self.curve.contains(self.x, self.y):
            raise NotOnCurve(f"({self.x}, {self.y}) is not on {self.curve}")

    @property
    def is_infinity(self):
        return self.x is None

    def __eq__(self, other):
        return (isinstance(other, CurvePoint) and self.curve == other.curve
                and self.x == other.x and self.y == other.y)

    def __hash__(self):
        return hash((self.curve, self.x, self.y))

    def __repr__(self):
        if self.is_infinity:
            return "O"
        return f"({self.x}, {self.y})"

    def __add__(self, other):
        return point_add(self, other)

    def __neg__(self):
        return point_negate(self)

    def __sub__(self, other):
        return point_add(self, point_negate(other))

    def __rmul__(self, k):
        return scalar_mul(k, self)


def point_negate(P):
    if P.is_infinity:
        return P
    E = P.curve
    return CurvePoint(E, P.x, -P.y - E.a1 * P.x - E.a3)


def point_add(P, Q):
    if P.curve != Q.curve:
        raise CurveMismatch("points lie on different curves")
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    E = P.curve
    a1, a2, a3, a4, _ = E.ainvs
    x1, y1, x2, y2 = P.x, P.y, Q.x, Q.y
    if x1 == x2:
        if y1 + y2 + a1 * x2 + a3 == 0:
            return E.infinity()
        lam = (3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1) / (2 * y1 + a1 * x1 + a3)
    else:
        lam = (y2 - y1) / (x2 - x1)
    nu = y1 - lam * x1
    x3 = lam * lam + a1 * lam - a2 - x1 - x2
    y3 = -(lam + a1) * x3 - nu - a3
    return CurvePoint(E, x3, y3)


def scalar_mul(k, P):
    k = int(k)
    if k < 0:
        return scalar_mul(-k, point_negate(P))
    result = P.curve.infinity()
    addend = P
    while k:
        if k & 1:
            result = point_add(result, addend)
        addend = point_add(addend, addend)
        k >>= 1
    return result


# ---------------------------------------------------------------- division polynomials


@dataclass(frozen=True)
class DivisionPolynomials:
    """Division-polynomial data for [m] on a short model y^2 = c(x).

    psi_m = psi * y**psi_y_power; psi_sq = psi_m^2 as a polynomial in x;
    x([m]Q) = phi(x) / psi_sq(x); omega_m = omega * y**omega_y_power and
    y([m]Q) = omega_m / psi_m^3.
    """

    m: int
    psi: Poly
    psi_y_power: int
    psi_sq: Poly
    phi: Poly
    omega: Poly
    omega_y_power: int


def _dp_mul(u, v, c):
    (p, s), (q, t) = u, v
    prod = p * q
    if prod.is_zero():
        return prod, 0
    e = s + t
    while e >= 2:
        prod = prod * c
        e -= 2
    return prod, e


def _dp_sub(u, v):
    if u[0].is_zero():
        return -v[0], v[1]
    if v[0].is_zero():
        return u
    if u[1] != v[1]:
        raise AssertionError("y-parity mismatch in division polynomial recurrence")
    return u[0] - v[0], u[1]


def _dp_div_y(u, c):
    p, s = u
    if s == 1:
        return p, 0
    return p.exact_div(c), 1


class _PsiTable:
    def __init__(self, a, b):
        a, b = Fraction(a), Fraction(b)
        x = Poly.x()
        self.c = Poly([b, a, 0, 1])
        self.t = {
            -1: (Poly([-1]), 0),
            0: (Poly(), 0),
            1: (Poly([1]), 0),
            2: (Poly([2]), 1),
            3: (Poly([-a * a, 12 * b, 6 * a, 0, 3]), 0),
            4: (Poly([-8 * b * b - a**3, -4 * a * b, -5 * a * a, 20 * b, 5 * a, 0, 1]) * 4, 1),
        }
        del x

    def __getitem__(self, n):
        if n in self.t:
            return self.t[n]
        if n < -1:
            p, s = self[-n]
            return -p, s
        c = self.c
        k = n // 2
        if n % 2:
            # psi_{2k+1} = psi_{k+2} psi_k^3 - psi_{k-1} psi_{k+1}^3
            pk = self[k]
            pk1 = self[k + 1]
            left = _dp_mul(self[k + 2], _dp_mul(pk, _dp_mul(pk, pk, c), c), c)
            right = _dp_mul(self[k - 1], _dp_mul(pk1, _dp_mul(pk1, pk1, c), c), c)
            val = _dp_sub(left, right)
        else:
            # psi_{2k} = psi_k (psi_{k+2} psi_{k-1}^2 - psi_{k-2} psi_{k+1}^2) / (2y)
            pkm1, pkp1 = self[k - 1], self[k + 1]
            inner = _dp_sub(_dp_mul(self[k + 2], _dp_mul(pkm1, pkm1, c), c),
                            _dp_mul(self[k - 2], _dp_mul(pkp1, pkp1, c), c))
            prod = _dp_mul(self[k], inner, c)
            p, s = _dp_div_y(prod, c)
            val = (p * Fraction(1, 2), s)
        self.t[n] = val
        return val


def division_polynomial(E, m):
    """Division polynomials of the short model of E for multiplication by m >= 1."""
    if m < 1:
        raise ValueError("m must be positive")
    a, b = E.short_coefficients
    table = _PsiTable(a, b)
    c = table.c
    psi, s = table[m]
    psi_sq = psi * psi * (c if s else 1)
    prod, ps = _dp_mul(table[m + 1], table[m - 1], c)
    assert ps == 0
    phi = Poly.x() * psi_sq - prod
    if m == 1:
        omega, os_ = Poly([1]), 1
    else:
        pm1, pp1 = table[m - 1], table[m + 1]
        inner = _dp_sub(_dp_mul(table[m + 2], _dp_mul(pm1, pm1, c), c),
                        _dp_mul(table[m - 2], _dp_mul(pp1, pp1, c), c))
        omega, os_ = _dp_div_y(inner, c)
        omega = omega * Fraction(1, 4)
    return DivisionPolynomials(m, psi, s, psi_sq, phi, omega, os_)


# ---------------------------------------------------------------- torsion and division


@dataclass(frozen=True)
class TorsionSubgroup:
    m: int
    points: tuple
    structure: tuple

    @property
    def order(self):
        return len(self.points)


def point_order(P, bound=None):
    """Order of a torsion point (None if not found up to bound)."""
    Q = P
    n = 1
    while not Q.is_infinity:
        Q = Q + P
        n += 1
        if bound is not None and n > bound:
            return None
    return n


def _abelian_structure(points):
    n = len(points)
    if n == 1:
        return ()
    exponent = max(point_order(P) for P in points)
    rest = n // exponent
    return (exponent,) if rest == 1 else (rest, exponent)


def _sort_key(P):
    return (0,) if P.is_infinity else (1, P.x, P.y)


def rational_torsion(E, m):
    """All rational points T of E with [m]T = O."""
    S = E.short_model
    pts = {S.infinity()}
    if m > 1:
        dp = division_polynomial(E, m)
        for x0 in rational_roots(dp.psi_sq):
            pts.update(S.lift_x(x0))
    pts = [E.from_short(T) for T in pts]
    pts = [T for T in pts if scalar_mul(m, T).is_infinity]
    pts.sort(key=_sort_key)
    group = set(pts)
    for T in pts:
        for U in pts:
            if T + U not in group:
                raise AssertionError("torsion set not closed under addition")
    return TorsionSubgroup(m, tuple(pts), _abelian_structure(pts))


def division_equation(E, P, m):
    """F(x) = phi_m(x) - x_P psi_m(x)^2 on the short model; roots are x([m]^{-1}(+-P))."""
    S = E.short_model
    Ps = E.to_short(P)
    dp = division_polynomial(E, m)
    return dp.phi - dp.psi_sq * Ps.x, S, Ps


def divide_point_global(E, P, m):
    """All rational Q with [m]Q = P, sorted."""
    if P.curve != E:
        raise CurveMismatch("point is not on this curve")
    if P.is_infinity:
        return list(rational_torsion(E, m).points)
    F, S, Ps = division_equation(E, P, m)
    found = set()
    for x0 in rational_roots(F):
        for Q in S.lift_x(x0):
            if scalar_mul(m, Q) == Ps:
                found.add(E.from_short(Q))
    return sorted(found, key=_sort_key)


# ---------------------------------------------------------------- mod p


class FpCurve:
    """Reduction of a long Weierstrass curve modulo an odd or even prime p.

    Points are ``None`` (infinity) or ``(x, y)`` tuples of residues.
    """

    def __init__(self, p, ainvs):
        self.p = p
        self.ainvs = tuple(int(a) % p for a in ainvs)

    def __repr__(self):
        return f"FpCurve(p={self.p}, ainvs={self.ainvs})"

    def contains(self, P):
        if P is None:
            return True
        a1, a2, a3, a4, a6 = self.ainvs
        x, y = P
        p = self.p
        return (y * y + a1 * x * y + a3 * y - (x**3 + a2 * x * x + a4 * x + a6)) % p == 0

    def points(self):
        p = self.p
        a1, a2, a3, a4, a6 = self.ainvs
        out = [None]
        for x in range(p):
            rhs = (x**3 + a2 * x * x + a4 * x + a6) % p
            lin = (a1 * x + a3) % p
            for y in range(p):
                if (y * y + lin * y - rhs) % p == 0:
                    out.append((x, y))
        return out

    def neg(self, P):
        if P is None:
            return None
        a1, _, a3, _, _ = self.ainvs
        x, y = P
        return (x, (-y - a1 * x - a3) % self.p)

    def add(self, P, Q):
        if P is None:
            return Q
        if Q is None:
            return P
        p = self.p
        a1, a2, a3, a4, _ = self.ainvs
        x1, y1 = P
        x2, y2 = Q
        if x1 == x2:
            if (y1 + y2 + a1 * x2 + a3) % p == 0:
                return None
            lam = (3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1) * pow(2 * y1 + a1 * x1 + a3, -1, p)
        else:
            lam = (y2 - y1) * pow(x2 - x1, -1, p)
        lam %= p
        nu = (y1 - lam * x1) % p
        x3 = (lam * lam + a1 * lam - a2 - x1 - x2) % p
        y3 = (-(lam + a1) * x3 - nu - a3) % p
        return (x3, y3)

    def mul(self, k, P):
        if k < 0:
            return self.mul(-k, self.neg(P))
        R = None
        while k:
            if k & 1:
                R = self.add(R, P)
            P = self.add(P, P)
            k >>= 1
        return R


def reduce_point(P, p):
    if P.is_infinity:
        return None
    for c in (P.x, P.y):
        if c.denominator % p == 0:
            return None
    return (P.x.numerator * pow(P.x.denominator, -1, p) % p,
            P.y.numerator * pow(P.y.denominator, -1, p) % p)
