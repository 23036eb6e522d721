"""Local and global m-divisibility of rational points.

A point P is m-divisible in E(Q_p) iff the division equation
F(x) = phi_m(x) - x(P) psi_m(x)^2 has a root x0 in Q_p whose fibre
y^2 = c(x0) has a Q_p-point: then Q = (x0, y0) satisfies [m]Q = +-P.  Roots
with negative valuation are found in the chart u = 1/x.  Every root is
isolated by a p-adic root tree and certified by the strong Hensel condition
v(F(r)) > 2 v(F'(r)) at an integer approximation r.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .arith import (PadicApprox, is_prime, legendre, prime_divisors,
                    primes_up_to, unit_part_mod, valuation)
from .curves import divide_point_global, division_equation
from .errors import BadInput, CurveMismatch
from .poly import (Poly, fp_eval, poly_gcd, real_root_isolation, squarefree_part,
                   sturm_count_above, sturm_sequence, zp_roots)

DIVISIBLE = "Divisible"
NOT_DIVISIBLE = "NotDivisible"
UNDECIDED = "Undecided"

DEFAULT_PRECISION_CAP = 2**10
DEFAULT_PRIME_BOUND = 1000


@dataclass(frozen=True, order=True)
class Place:
    """A place of Q: ``prime`` is None for the real place."""

    prime: int = None

    def __post_init__(self):
        if self.prime is not None and not is_prime(self.prime):
            raise BadInput(f"{self.prime} is not prime")

    @property
    def is_real(self):
        return self.prime is None

    def __str__(self):
        return "real" if self.prime is None else str(self.prime)

    def sort_key(self):
        return (0, 0) if self.prime is None else (1, self.prime)


REAL = Place(None)


@dataclass
class LocalDecision:
    place: Place
    verdict: str
    witness: dict = None
    precision_used: int = 0

    def as_dict(self):
        return {"place": str(self.place), "verdict": self.verdict,
                "precision": self.precision_used, "witness": _jsonable(self.witness)}


def _jsonable(obj):
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, PadicApprox):
        return {"prime": obj.prime, "value": str(obj.value), "precision": obj.precision}
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return str(obj)


# ---------------------------------------------------------------- finite places


class DivisionData:
    """Everything about (E, P, m) that does not depend on the prime."""

    def __init__(self, E, P, m):
        if P.curve != E:
            raise CurveMismatch("point is not on this curve")
        if m < 1:
            raise BadInput("m must be positive")
        self.E, self.P, self.m = E, P, m
        self.trivial = P.is_infinity
        if self.trivial:
            return
        F, S, Ps = division_equation(E, P, m)
        self.S, self.Ps = S, Ps
        self.a, self.b = S.short_coefficients
        c = S.cubic()
        Fsq = squarefree_part(F)
        G = poly_gcd(Fsq, c)
        H = Fsq.exact_div(G)
        self.G = G
        self.H = H
        # integer models for the affine chart and for u = 1/x
        self.G_int = G.scale_to_integer() if G.degree > 0 else None
        self.H_int = H.scale_to_integer() if H.degree > 0 else None
        self.G_rev = G.reversed().scale_to_integer() if G.degree > 0 else None
        self.H_rev = H.reversed().scale_to_integer() if H.degree > 0 else None
        # square class of the fibre: c(x) in the affine chart, u(1 + a u^2 + b u^3) at u = 1/x
        self.fibre_affine = c
        self.fibre_inverted = Poly([0, 1, 0, self.a, self.b])


def _int_eval(cs, x):
    acc = 0
    for c in reversed(cs):
        acc = acc * x + c
    return acc


def _int_deriv(cs):
    return [i * c for i, c in enumerate(cs)][1:]


def _hensel_certificate(cs, r, p):
    """(v(F(r)), v(F'(r))) or None when the strong Hensel condition fails."""
    fr = _int_eval(cs, r)
    dr = _int_eval(_int_deriv(cs), r)
    if dr == 0:
        return None
    vd = valuation(dr, p)
    if fr == 0:
        return (None, vd)
    vf = valuation(fr, p)
    return (vf, vd) if vf > 2 * vd else None


def _square_class(value, err, p):
    """Decide squareness in Q_p of a quantity known up to an error of valuation >= err.

    Returns True/False, or None if more precision is needed.
    """
    if value == 0:
        return None
    k = valuation(value, p)
    need = 3 if p == 2 else 1
    if k + need > err:
        return None
    if k % 2:
        return False
    if p == 2:
        return unit_part_mod(value, 2, 3) == 1
    return legendre(unit_part_mod(value, p, 1), p) == 1


def _min_coeff_valuation(f, p, start=1):
    vs = [valuation(c, p) for c in f.coeffs[start:] if c]
    return min([0] + vs)


def _decide_branch(branch, cs, fibre, p, precision_cap, chart):
    """Certify one root and decide the square class of its fibre.

    Returns (verdict_for_branch, witness, precision) with verdict True
    (fibre has a Q_p-point), False, or None (undecided at the cap).
    """
    N = max(branch.depth + 8, 16)
    fibre_shift = 0 if fibre is None else _min_coeff_valuation(fibre, p)
    while N <= precision_cap:
        r = branch.approximation(N)
        cert = _hensel_certificate(cs, r, p)
        if cert is not None:
            vf, vd = cert
            # the true root t satisfies v(t - r) >= vf - vd
            eff = N if vf is None else min(N, vf - vd)
            if fibre is None:
                decided = True
            else:
                decided = _square_class(fibre(Fraction(r)), eff + fibre_shift, p)
            if decided is not None:
                witness = {"chart": chart, "root": PadicApprox(p, r % p**N, N),
                           "hensel": {"v_F": vf, "v_dF": vd}, "effective_precision": eff}
                if fibre is not None:
                    val = fibre(Fraction(r))
                    witness["fibre_valuation"] = valuation(val, p)
                return decided, witness, N
        N *= 2
    return None, None, precision_cap


def divide_point_local_finite(E, P, m, p, precision_cap=DEFAULT_PRECISION_CAP, data=None):
    """Decide whether P lies in m E(Q_p)."""
    if not is_prime(p):
        raise BadInput(f"{p} is not prime")
    place = Place(p)
    data = data or DivisionData(E, P, m)
    if data.trivial:
        return LocalDecision(place, DIVISIBLE, {"chart": "identity"}, 0)
    undecided = False
    used = 0
    searches = (
        ("two-torsion", data.G_int, None, None),
        ("two-torsion-inverted", data.G_rev, None, {0}),
        ("affine", data.H_int, data.fibre_affine, None),
        ("inverted", data.H_rev, data.fibre_inverted, {0}),
    )
    for chart, cs, fibre, restrict in searches:
        if cs is None:
            continue
        branches, exhausted = zp_roots(cs, p, depth_cap=precision_cap, first_residues=restrict)
        undecided |= exhausted
        for br in branches:
            if restrict is not None and br.depth == 0 and br.residue == 0 and \
                    _int_eval(cs, 0) == 0:
                # u = 0 is the point at infinity itself, not an affine root
                continue
            ok, witness, prec = _decide_branch(br, cs, fibre, p, precision_cap, chart)
            used = max(used, prec, br.depth + 1)
            if ok:
                return LocalDecision(place, DIVISIBLE, witness, prec)
            if ok is None:
                undecided = True
    verdict = UNDECIDED if undecided else NOT_DIVISIBLE
    return LocalDecision(place, verdict, None, max(used, 1))


# ---------------------------------------------------------------- real place


def divide_point_local_real(E, P, m):
    """Decide whether P lies in m E(R) by connected components."""
    if P.curve != E:
        raise CurveMismatch("point is not on this curve")
    if P.is_infinity:
        return LocalDecision(REAL, DIVISIBLE, {"reason": "identity"}, 0)
    if m % 2 or E.discriminant < 0:
        return LocalDecision(REAL, DIVISIBLE, {"reason": "E(R) connected or m odd"}, 0)
    S = E.short_model
    Ps = E.to_short(P)
    c = S.cubic()
    roots = real_root_isolation(c)
    largest = roots[-1]
    above = sturm_count_above(sturm_sequence(c), Ps.x)
    on_identity = above == 0
    witness = {"largest_root_interval": list(largest), "x": Ps.x,
               "component": "identity" if on_identity else "non-identity"}
    return LocalDecision(REAL, DIVISIBLE if on_identity else NOT_DIVISIBLE, witness, 0)


# ---------------------------------------------------------------- profiles


def profile_primes(E, P, m, prime_bound):
    """Primes checked by a profile: all p <= bound plus primes of m, Delta and denominators."""
    extra = set(prime_divisors(m)[0]) if m > 1 else set()
    disc = E.discriminant
    for n in (disc.numerator, disc.denominator):
        extra.update(prime_divisors(n)[0])
    for a in E.ainvs:
        if a.denominator > 1:
            extra.update(prime_divisors(a.denominator)[0])
    if not P.is_infinity:
        for coord in (P.x, P.y):
            if coord.denominator > 1:
                extra.update(prime_divisors(coord.denominator)[0])
    return sorted(set(primes_up_to(prime_bound)) | extra)


def unfactored_discriminant_part(E):
    disc = E.discriminant
    return prime_divisors(disc.numerator)[1] * prime_divisors(disc.denominator)[1]


def _finite_worker(args):
    E, P, m, p, cap = args
    return divide_point_local_finite(E, P, m, p, cap)


def local_profile(E, P, m, prime_bound=DEFAULT_PRIME_BOUND, precision_cap=DEFAULT_PRECISION_CAP,
                  threads=1):
    if prime_bound < 2:
        raise BadInput("prime_bound must be at least 2")
    primes = profile_primes(E, P, m, prime_bound)
    decisions = [divide_point_local_real(E, P, m)]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            decisions += list(pool.map(_finite_worker, [(E, P, m, p, precision_cap) for p in primes],
                                       chunksize=8))
    else:
        data = DivisionData(E, P, m)
        decisions += [divide_point_local_finite(E, P, m, p, precision_cap, data=data) for p in primes]
    decisions.sort(key=lambda d: d.place.sort_key())
    return decisions


@dataclass
class ShaWitnessReport:
    curve: object
    point: object
    m: int
    prime_bound: int
    decisions: list
    global_result: list
    conclusion: bool
    notes: list = field(default_factory=list)

    @property
    def undecided_places(self):
        return [d.place for d in self.decisions if d.verdict == UNDECIDED]

    @property
    def failing_places(self):
        return [d.place for d in self.decisions if d.verdict == NOT_DIVISIBLE]

    def as_dict(self):
        E, P = self.curve, self.point
        return {
            "curve": [str(a) for a in E.ainvs],
            "point": "O" if P.is_infinity else [str(P.x), str(P.y)],
            "m": self.m,
            "prime_bound": self.prime_bound,
            "places": [d.as_dict() for d in self.decisions],
            "global_witnesses": ["O" if Q.is_infinity else [str(Q.x), str(Q.y)]
                                 for Q in self.global_result],
            "conclusion": self.conclusion,
            "notes": self.notes,
        }


def sha0_witness_check(E, P, m, prime_bound=DEFAULT_PRIME_BOUND,
                       precision_cap=DEFAULT_PRECISION_CAP, threads=1):
    """Check that P is locally m-divisible at every checked place but not globally."""
    decisions = local_profile(E, P, m, prime_bound, precision_cap, threads)
    global_result = divide_point_global(E, P, m)
    all_local = all(d.verdict == DIVISIBLE for d in decisions)
    notes = [f"finite places checked: primes <= {prime_bound} together with the primes of "
             f"m and of the discriminant; larger primes were not checked"]
    cof = unfactored_discriminant_part(E)
    if cof != 1:
        notes.append(f"discriminant cofactor {cof} was not factored; its primes were not checked")
    return ShaWitnessReport(E, P, m, prime_bound, decisions, global_result,
                            all_local and not global_result, notes)


# ---------------------------------------------------------------- independent re-check


def _padic_sqrt_int(value, p, K):
    """Integer s with s^2 = value mod p^K for a rational square in Q_p with v(value) = 0."""
    u = unit_part_mod(value, p, K + 3)
    if p == 2:
        s = 1
        for k in range(3, K + 2):
            if (s * s - u) % 2**(k + 1):
                s += 2**(k - 1)
        return s % 2**K
    s0 = next(s for s in range(1, p) if (s * s - u) % p == 0)
    from .arith import hensel_lift
    return hensel_lift([-u, 0, 1], p, s0, K).value


def _raw_add(a, b, P, Q):
    if P is None:
        return Q
    if Q is None:
        return P
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2:
        if y1 + y2 == 0:
            return None
        lam = (3 * x1 * x1 + a) / (2 * y1)
    else:
        lam = (y2 - y1) / (x2 - x1)
    x3 = lam * lam - x1 - x2
    return (x3, lam * (x1 - x3) - y1)


def _raw_mul(a, b, k, P):
    R = None
    while k:
        if k & 1:
            R = _raw_add(a, b, R, P)
        P = _raw_add(a, b, P, P)
        k >>= 1
    return R


def verify_local_witness(E, P, m, decision):
    """Re-check a Divisible verdict through the group law on p-adic approximations.

    Builds an approximate point Q from the witness root, computes [m]Q with the
    chord-tangent formulas in Q and returns the valuation of x([m]Q) - x(P) (or
    of 1/x([m]Q) when P = O); large values confirm [m]Q = +-P p-adically.
    """
    if decision.verdict != DIVISIBLE or decision.place.is_real:
        raise BadInput("only finite Divisible decisions carry p-adic witnesses")
    w = decision.witness
    if w["chart"] == "identity":
        return None
    p = decision.place.prime
    data = DivisionData(E, P, m)
    chart = w["chart"]
    root = w["root"]
    x0 = Fraction(root.value) if chart in ("affine", "two-torsion") else 1 / Fraction(root.value)
    a, b = data.a, data.b
    fib = x0**3 + a * x0 + b
    if fib == 0 or chart.startswith("two-torsion"):
        y0 = Fraction(0)
    else:
        k = valuation(fib, p)
        unit = fib / Fraction(p) ** k
        s = _padic_sqrt_int(unit, p, root.precision + 8)
        y0 = Fraction(p) ** (k // 2) * s
    Q = (x0, y0)
    R = _raw_mul(a, b, m, Q)
    Ps = data.Ps
    if R is None:
        return None
    return valuation(R[0] - Ps.x, p)
