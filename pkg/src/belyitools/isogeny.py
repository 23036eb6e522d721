"""Separable isogenies from kernel polynomials (Velu) and their verification.

All map data lives on the short model y^2 = x^3 + a x + b of the domain.  For a
kernel with x-coordinates r the normalized Velu map is

    X(x) = x + sum_r [ v_r / (x - r) + u_r / (x - r)^2 ],   Y = y * X'(x)

with v_r = 3r^2 + a, u_r = 0 for 2-torsion points and v_r = 2(3r^2 + a),
u_r = 4 c(r) for each +-pair.  The sums are evaluated symbolically from the
kernel polynomial so irrational kernel points never appear.
"""

from dataclasses import dataclass, field
from fractions import Fraction
import random

from .curves import RationalCurve, division_polynomial, point_add
from .errors import CurveMismatch, InvalidKernel, SampleFailure
from .poly import Poly, poly_gcd, root_sum, squarefree_part


@dataclass(frozen=True)
class KernelSubgroup:
    curve: RationalCurve
    kernel_polynomial: Poly
    order: int

    @classmethod
    def from_polynomial(cls, E, h):
        """Kernel given by a polynomial in the curve's own x-coordinate."""
        h = Poly(h) if not isinstance(h, Poly) else h
        if h.is_zero():
            raise InvalidKernel("zero kernel polynomial")
        h = h.monic()
        hs = h.shift(-E.short_x_shift()) if not E.is_short else h
        h2 = poly_gcd(hs, E.cubic())
        order = 1 + h2.degree + 2 * (hs.degree - h2.degree)
        return cls(E, h, order)

    @classmethod
    def from_points(cls, E, points):
        xs = sorted({P.x for P in points if not P.is_infinity})
        return cls.from_polynomial(E, Poly.from_roots(xs))

    @classmethod
    def from_generator(cls, E, P):
        """Cyclic kernel generated by a rational torsion point."""
        pts, Q = [], P
        while not Q.is_infinity:
            pts.append(Q)
            Q = point_add(Q, P)
            if len(pts) > 10**4:
                raise InvalidKernel("generator is not a torsion point")
        return cls.from_points(E, pts)

    @classmethod
    def trivial(cls, E):
        return cls(E, Poly([1]), 1)

    def short_polynomial(self):
        E = self.curve
        return self.kernel_polynomial if E.is_short else \
            self.kernel_polynomial.shift(-E.short_x_shift())


class Isogeny:
    """Normalized Velu isogeny between short models.

    ``x_num / x_den`` is the x-map; the y-map is y * dx_num / x_den^2.
    """

    def __init__(self, domain, codomain, kernel, x_num, x_den, degree):
        self.domain = domain
        self.codomain = codomain
        self.kernel = kernel
        self.x_num = x_num
        self.x_den = x_den
        self.dx_num = x_num.derivative() * x_den - x_num * x_den.derivative()
        self.degree = degree

    def __repr__(self):
        return f"Isogeny(degree={self.degree}, {self.domain} -> {self.codomain})"

    @property
    def x_map(self):
        return (self.x_num, self.x_den)

    @property
    def y_map(self):
        """y-map as (multiplier numerator, denominator): Y = y * num / den."""
        return (self.dx_num, self.x_den * self.x_den)

    def evaluate(self, P):
        return evaluate_isogeny(self, P)

    def evaluate_mod_p(self, P, p):
        """Evaluate on a point of the reduced short model of the domain."""
        if P is None:
            return None
        x, y = P
        den = fp_eval_poly(self.x_den, x, p)
        if den == 0:
            return None
        inv = pow(den, -1, p)
        X = fp_eval_poly(self.x_num, x, p) * inv % p
        Y = y * fp_eval_poly(self.dx_num, x, p) * inv * inv % p
        return (X, Y)

    def reduction_ok(self, p):
        polys = (self.x_num, self.x_den, self.dx_num)
        if any(c.denominator % p == 0 for f in polys for c in f.coeffs):
            return False
        if self.x_den.lc.numerator % p == 0:
            return False
        S = self.domain.short_model
        return (S.has_good_reduction(p) and self.codomain.has_good_reduction(p))

    def precompose_translation(self, T):
        """The (non-homomorphic) map P -> self(P + T), T on the domain."""
        return TranslatedIsogeny(self, T)


class TranslatedIsogeny:
    def __init__(self, base, T):
        self.base = base
        self.translation = T
        self.domain = base.domain
        self.codomain = base.codomain
        self.degree = base.degree

    def evaluate(self, P):
        return self.base.evaluate(point_add(P, self.translation))

    def evaluate_mod_p(self, P, p):
        from .curves import reduce_point
        S = self.domain.short_model
        Ts = self.domain.to_short(self.translation)
        Pt = S.reduce(p).add(P, reduce_point(Ts, p))
        return self.base.evaluate_mod_p(Pt, p)

    def reduction_ok(self, p):
        return self.base.reduction_ok(p)


def fp_eval_poly(f, x, p):
    acc = 0
    for c in reversed(f.coeffs):
        acc = (acc * x + c.numerator * pow(c.denominator, -1, p)) % p
    return acc


def _residue_sum(g, weight):
    """R with sum_r weight(r)/(x - r) = R/g over the roots r of squarefree g."""
    if g.degree <= 0:
        return Poly()
    return (weight * g.derivative()) % g


def velu_quotient(E, C):
    """Quotient of E by the subgroup encoded by C; returns (E0, phi)."""
    if C.curve != E:
        raise CurveMismatch("kernel belongs to another curve")
    S = E.short_model
    a, b = S.short_coefficients
    c = S.cubic()
    h = C.short_polynomial().monic()
    if h.degree == 0:
        phi = Isogeny(E, S, C, Poly.x(), Poly([1]), 1)
        return S, phi
    if poly_gcd(h, h.derivative()).degree > 0:
        raise InvalidKernel("kernel polynomial has repeated roots")
    order = C.order
    psi_sq = division_polynomial(S, order).psi_sq
    if not (psi_sq % h).is_zero():
        raise InvalidKernel(f"kernel polynomial does not divide the {order}-division polynomial")
    g2 = poly_gcd(h, c)
    g1 = h.exact_div(g2)
    slope = Poly([a, 0, 3])  # 3x^2 + a
    x = Poly.x()
    v = root_sum(g1, slope * 2) + root_sum(g2, slope)
    w = root_sum(g1, c * 4 + x * slope * 2) + root_sum(g2, x * slope)
    a0, b0 = a - 5 * v, b - 7 * w
    try:
        E0 = RationalCurve.short(a0, b0)
    except Exception as exc:  # singular codomain means h was not a subgroup
        raise InvalidKernel(str(exc)) from exc
    R1 = _residue_sum(g1, slope * 2)
    R2 = _residue_sum(g1, c * 4)
    R3 = _residue_sum(g2, slope)
    D = g1 * g1 * g2
    N = x * D + R1 * g1 * g2 - (R2.derivative() * g1 - R2 * g1.derivative()) * g2 + R3 * g1 * g1
    phi = Isogeny(E, E0, C, N, D, order)
    # (y X')^2 = X^3 + a0 X + b0 modulo y^2 = c(x), cleared of denominators
    lhs = c * phi.dx_num * phi.dx_num
    rhs = D * (N**3 + N * D * D * a0 + D**3 * b0)
    if lhs != rhs:
        raise InvalidKernel("kernel polynomial does not define a subgroup")
    return E0, phi


def evaluate_isogeny(phi, P):
    if P.curve != phi.domain and P.curve != phi.domain.short_model:
        raise CurveMismatch("point is not on the isogeny domain")
    if P.curve == phi.domain:
        P = phi.domain.to_short(P)
    if P.is_infinity:
        return phi.codomain.infinity()
    den = phi.x_den(P.x)
    if den == 0:
        return phi.codomain.infinity()
    X = phi.x_num(P.x) / den
    Y = P.y * phi.dx_num(P.x) / (den * den)
    return phi.codomain.point(X, Y)


def compose_degrees(*isogenies):
    d = 1
    for phi in isogenies:
        d *= phi.degree
    return d


# ---------------------------------------------------------------- image kernels


def image_kernel_polynomial(phi, m):
    """Kernel polynomial (codomain x) of phi(E[m]) for a kernel inside E[m]."""
    import sympy

    S = phi.domain.short_model
    if m == 1:
        return Poly([1])
    torsion_x = squarefree_part(division_polynomial(S, m).psi_sq)
    h = phi.kernel.short_polynomial()
    if not (torsion_x % h).is_zero() and h.degree > 0:
        raise InvalidKernel("kernel is not contained in E[m]")
    rest = torsion_x.exact_div(h.monic()) if h.degree > 0 else torsion_x
    if rest.degree == 0:
        return Poly([1])
    t, X = sympy.symbols("t X")

    def to_sym(f, var):
        return sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(f.coeffs)],
                          var).as_expr() if f.coeffs else sympy.Integer(0)

    res = sympy.resultant(to_sym(rest, t), X * to_sym(phi.x_den, t) - to_sym(phi.x_num, t), t)
    rp = sympy.Poly(sympy.expand(res), X)
    coeffs = [Fraction(int(sympy.fraction(cf)[0]), int(sympy.fraction(cf)[1]))
              for cf in reversed(rp.all_coeffs())]
    return squarefree_part(Poly(coeffs))


def _rational_root(q, n):
    """Rational n-th root of q (n odd or q >= 0), or None."""
    from sympy import integer_nthroot
    q = Fraction(q)
    sign = -1 if q < 0 else 1
    if sign < 0 and n % 2 == 0:
        return None
    num, ok1 = integer_nthroot(abs(q.numerator), n)
    den, ok2 = integer_nthroot(q.denominator, n)
    if ok1 and ok2:
        return sign * Fraction(int(num), int(den))
    return None


def short_isomorphism_scalings(src, dst):
    """Rational u with dst = src scaled by (x, y) -> (u^2 x, u^3 y)."""
    a1, b1 = src.short_coefficients
    a2, b2 = dst.short_coefficients
    cands = set()
    if a1 and a2:
        r = _rational_root(a2 / a1, 4)
        if r is not None:
            cands.update({r, -r})
    if b1 and b2:
        r = _rational_root(b2 / b1, 6)
        if r is not None:
            cands.update({r, -r})
    return sorted(u for u in cands if u != 0 and u**4 * a1 == a2 and u**6 * b1 == b2)


@dataclass
class FactorizationReport:
    m: int
    degree: int
    primes: list
    samples_per_prime: int
    seed: int
    scaling: Fraction = None
    all_passed: bool = False
    failures: list = field(default_factory=list)

    def as_dict(self):
        return {"m": self.m, "degree": self.degree, "primes": self.primes,
                "samples_per_prime": self.samples_per_prime, "seed": self.seed,
                "scaling": str(self.scaling), "all_passed": self.all_passed}


def good_sampling_primes(maps, count, start=5, exclude=()):
    primes = []
    p = start
    from .arith import is_prime
    while len(primes) < count:
        if is_prime(p) and p not in exclude and all(f.reduction_ok(p) for f in maps):
            primes.append(p)
        p += 1
    return primes


def complementary_isogeny(E, m, phi):
    """psi : E0 -> E'' with psi o phi = [m] up to the scaling isomorphism E'' -> E."""
    E0 = phi.codomain
    h_img = image_kernel_polynomial(phi, m)
    C_img = KernelSubgroup.from_polynomial(E0, h_img)
    E2, psi = velu_quotient(E0, C_img)
    return psi


def check_mult_by_m_factorization(E, m, phi, primes=None, samples=100, seed=0,
                                  complement=None, prime_count=3):
    """Sample-check that some psi satisfies psi o phi = [m] over finite fields.

    Raises SampleFailure naming the first counterexample.
    """
    if complement is None:
        complement = complementary_isogeny(E, m, phi)
    S = E.short_model
    scalings = short_isomorphism_scalings(complement.codomain, S)
    if not scalings:
        raise SampleFailure("complement codomain is not Q-isomorphic to E")
    if primes is None:
        primes = good_sampling_primes([phi, complement], prime_count)
    rng = random.Random(seed)
    report = FactorizationReport(m, phi.degree, list(primes), samples, seed)
    viable = list(scalings)
    for p in primes:
        Sp = S.reduce(p)
        pts = Sp.points()
        picks = [rng.choice(pts) for _ in range(samples)]
        for P in picks:
            R = complement.evaluate_mod_p(phi.evaluate_mod_p(P, p), p)
            target = Sp.mul(m, P)
            still = []
            for u in viable:
                if R is None:
                    img = None
                else:
                    u2 = u * u
                    X = R[0] * u2.numerator * pow(u2.denominator, -1, p) % p
                    u3 = u2 * u
                    Y = R[1] * u3.numerator * pow(u3.denominator, -1, p) % p
                    img = (X, Y)
                if img == target:
                    still.append(u)
            if not still:
                report.failures.append((p, P))
                raise SampleFailure(f"psi(phi(P)) != [{m}]P at P={P} over F_{p}", prime=p, point=P)
            viable = still
    report.scaling = viable[0]
    report.all_passed = True
    return report


# ---------------------------------------------------------------- exhaustive checks


def check_homomorphism_mod_p(phi, p):
    """Exhaustively test phi(P + Q) = phi(P) + phi(Q) over E(F_p)."""
    Sp = phi.domain.short_model.reduce(p)
    Tp = phi.codomain.reduce(p)
    pts = Sp.points()
    images = {P: phi.evaluate_mod_p(P, p) for P in pts}
    for img in images.values():
        if not Tp.contains(img):
            return False
    for P in pts:
        for Q in pts:
            if images[Sp.add(P, Q)] != Tp.add(images[P], images[Q]):
                return False
    return True


def kernel_count_mod_p(phi, p):
    Sp = phi.domain.short_model.reduce(p)
    return sum(1 for P in Sp.points() if phi.evaluate_mod_p(P, p) is None)


def fp_points_with_x_roots(phi, p):
    """Independent count of F_p-points whose x-coordinate is a kernel root, plus O."""
    Sp = phi.domain.short_model.reduce(p)
    h = phi.kernel.short_polynomial()
    return 1 + sum(1 for P in Sp.points() if P is not None and fp_eval_poly(h, P[0], p) == 0)

