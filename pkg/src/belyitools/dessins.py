"""Dessins d'enfants as transitive pairs of permutations.

Permutations are tuples of images on {0, ..., n-1}.  Products are read left to
right: (s t)(i) = t(s(i)).  sigma_inf = (sigma0 sigma1)^-1, so that
sigma0 sigma1 sigma_inf = 1.  Points of the curve above 0, 1 and infinity
correspond to the cycles of sigma0, sigma1 and sigma_inf.
"""

from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations

from .errors import BadInput, NotTransitive

CASE1 = "Case1"
CASE2 = "Case2"
NOT_GENUS_ONE = "NotGenusOne"


def compose(s, t):
    """Left-to-right product: first s, then t."""
    return tuple(t[s[i]] for i in range(len(s)))


def inverse(s):
    out = [0] * len(s)
    for i, j in enumerate(s):
        out[j] = i
    return tuple(out)


def cycles(s):
    seen = [False] * len(s)
    out = []
    for i in range(len(s)):
        if not seen[i]:
            c = []
            j = i
            while not seen[j]:
                seen[j] = True
                c.append(j)
                j = s[j]
            out.append(tuple(c))
    return out


def cycle_type(s):
    return tuple(sorted((len(c) for c in cycles(s)), reverse=True))


def from_cycles(cyc, n, one_based=True):
    """A permutation of n points from a list of cycles."""
    img = list(range(n))
    seen = set()
    for c in cyc:
        c = [x - 1 if one_based else x for x in c]
        for x in c:
            if not 0 <= x < n or x in seen:
                raise BadInput(f"bad cycle {c} for degree {n}")
            seen.add(x)
        for a, b in zip(c, c[1:] + c[:1]):
            img[a] = b
    return tuple(img)


def to_cycles(s, one_based=True, include_fixed=False):
    off = 1 if one_based else 0
    return [[x + off for x in c] for c in cycles(s) if include_fixed or len(c) > 1]


def parse_cycles(text, n=None):
    """Parse cycle notation like '(1 2 3)(4 5)' or '(1,2,3)'; '()' is the identity."""
    text = text.strip()
    cyc = []
    depth_open = False
    cur = ""
    for ch in text:
        if ch == "(":
            if depth_open:
                raise BadInput(f"nested parenthesis in {text!r}")
            depth_open, cur = True, ""
        elif ch == ")":
            if not depth_open:
                raise BadInput(f"unbalanced parenthesis in {text!r}")
            depth_open = False
            parts = cur.replace(",", " ").split()
            if parts:
                try:
                    cyc.append([int(p) for p in parts])
                except ValueError:
                    raise BadInput(f"non-integer entry in {text!r}") from None
        elif depth_open:
            cur += ch
        elif not ch.isspace():
            raise BadInput(f"unexpected character {ch!r} in {text!r}")
    if depth_open:
        raise BadInput(f"unclosed parenthesis in {text!r}")
    if n is None:
        n = max((x for c in cyc for x in c), default=1)
    return from_cycles(cyc, n)


def orbits(n, gens):
    seen = [False] * n
    out = []
    for i in range(n):
        if seen[i]:
            continue
        orb = [i]
        seen[i] = True
        queue = deque([i])
        while queue:
            x = queue.popleft()
            for g in gens:
                y = g[x]
                if not seen[y]:
                    seen[y] = True
                    orb.append(y)
                    queue.append(y)
        out.append(sorted(orb))
    return out


def is_transitive(n, gens):
    return len(orbits(n, gens)) == 1


class Dessin:
    """A transitive pair (sigma0, sigma1) on n points."""

    def __init__(self, sigma0, sigma1):
        sigma0, sigma1 = tuple(sigma0), tuple(sigma1)
        n = len(sigma0)
        if len(sigma1) != n or n == 0:
            raise BadInput("permutations must have the same positive degree")
        for s in (sigma0, sigma1):
            if sorted(s) != list(range(n)):
                raise BadInput(f"{s} is not a permutation")
        if not is_transitive(n, [sigma0, sigma1]):
            raise NotTransitive("the pair does not act transitively")
        self.n = n
        self.sigma0, self.sigma1 = sigma0, sigma1
        self.sigma_inf = inverse(compose(sigma0, sigma1))

    @classmethod
    def from_cycle_strings(cls, s0, s1, n=None):
        if n is None:
            n = max(max(parse_cycles(s0)) + 1, max(parse_cycles(s1)) + 1)
        return cls(parse_cycles(s0, n), parse_cycles(s1, n))

    def __repr__(self):
        fmt = lambda s: "".join("(" + " ".join(map(str, c)) + ")" for c in to_cycles(s)) or "()"
        return f"Dessin(n={self.n}, sigma0={fmt(self.sigma0)}, sigma1={fmt(self.sigma1)})"

    def __eq__(self, other):
        return isinstance(other, Dessin) and (self.sigma0, self.sigma1) == (other.sigma0, other.sigma1)

    def __hash__(self):
        return hash((self.sigma0, self.sigma1))

    @property
    def generators(self):
        return (self.sigma0, self.sigma1, self.sigma_inf)

    def ramification(self):
        """Cycle lengths above 0, 1 and infinity."""
        return {"0": cycle_type(self.sigma0), "1": cycle_type(self.sigma1),
                "inf": cycle_type(self.sigma_inf)}

    @cached_property
    def genus(self):
        c = sum(len(cycles(s)) for s in self.generators)
        chi2 = c - self.n      # equals 2 - 2g
        if chi2 % 2 or chi2 > 2:
            raise AssertionError("Euler characteristic has the wrong parity")
        return (2 - chi2) // 2

    @cached_property
    def automorphisms(self):
        """All permutations commuting with sigma0 and sigma1.

        Transitivity means an automorphism is fixed by the image of 0, so at
        most n candidates are propagated and checked.
        """
        n = self.n
        gens = (self.sigma0, self.sigma1)
        out = []
        for j in range(n):
            phi = {0: j}
            queue = deque([0])
            ok = True
            while queue and ok:
                x = queue.popleft()
                for g in gens:
                    a, b = g[x], g[phi[x]]
                    if a in phi:
                        if phi[a] != b:
                            ok = False
                            break
                    else:
                        phi[a] = b
                        queue.append(a)
            if ok and len(set(phi.values())) == n:
                p = tuple(phi[i] for i in range(n))
                if all(compose(p, g) == compose(g, p) for g in gens):
                    out.append(p)
        for p in out:
            if p != tuple(range(n)) and any(p[i] == i for i in range(n)):
                raise AssertionError("automorphism with a fixed point")
        return out

    def automorphism_group(self):
        return CoverAutGroup(self.automorphisms)

    def is_regular(self):
        return len(self.automorphisms) == self.n

    def aut_orbits(self):
        return orbits(self.n, self.automorphisms)

    def reduced_part(self):
        """(quotient dessin on Aut-orbits, map point -> orbit index)."""
        orbs = self.aut_orbits()
        where = {}
        for k, o in enumerate(orbs):
            for x in o:
                where[x] = k
        induced = []
        for s in (self.sigma0, self.sigma1):
            img = [None] * len(orbs)
            for x in range(self.n):
                k, t = where[x], where[s[x]]
                if img[k] is None:
                    img[k] = t
                elif img[k] != t:
                    raise AssertionError("permutation does not descend to orbits")
            induced.append(tuple(img))
        red = Dessin(*induced)
        if red.n * len(self.automorphisms) != self.n:
            raise AssertionError("degree is not multiplicative")
        return red, tuple(where[x] for x in range(self.n))

    def aut_acts_freely_on_surface(self):
        """No nontrivial automorphism maps a cycle of sigma0, sigma1 or sigma_inf to itself."""
        ident = tuple(range(self.n))
        for p in self.automorphisms:
            if p == ident:
                continue
            for s in self.generators:
                for c in cycles(s):
                    if p[c[0]] in c:
                        return False
        return True

    def classify_genus_one(self):
        if self.genus != 1:
            return NOT_GENUS_ONE
        red, _ = self.reduced_part()
        if red.genus == 0:
            return CASE2
        if red.genus == 1 and self.aut_acts_freely_on_surface():
            return CASE1
        raise AssertionError(f"genus one dessin fits neither case: {self!r}")

    def riemann_hurwitz_check(self):
        """Riemann-Hurwitz for the quotient map X -> X/Aut.

        Returns a report with 2g(X) - 2 = d (2 g(X0) - 2) + sum (e_P - 1), where
        e_P is the ratio of a cycle's length to the length of its image cycle.
        """
        red, where = self.reduced_part()
        d = len(self.automorphisms)
        ram = 0
        for s, t in zip(self.generators, red.generators):
            for c in cycles(s):
                k = where[c[0]]
                lc0 = next(len(cc) for cc in cycles(t) if k in cc)
                if len(c) % lc0:
                    raise AssertionError("cycle length not divisible by its image length")
                ram += len(c) // lc0 - 1
        lhs = 2 * self.genus - 2
        rhs = d * (2 * red.genus - 2) + ram
        free = self.aut_acts_freely_on_surface()
        report = RiemannHurwitzReport(degree=d, genus=self.genus, quotient_genus=red.genus,
                                      ramification=ram, lhs=lhs, rhs=rhs,
                                      acts_freely=free)
        if lhs != rhs:
            raise AssertionError(f"Riemann-Hurwitz fails for {self!r}")
        if (ram == 0) != free:
            raise AssertionError("unramified quotient does not match free action")
        return report

    def canonical_form(self):
        """Smallest relabelling by breadth-first search from each starting point."""
        best = None
        gens = (self.sigma0, self.sigma1)
        for start in range(self.n):
            label = {start: 0}
            queue = deque([start])
            while queue:
                x = queue.popleft()
                for g in gens:
                    y = g[x]
                    if y not in label:
                        label[y] = len(label)
                        queue.append(y)
            key = tuple(tuple(label[g[x]] for x in sorted(label, key=label.get)) for g in gens)
            if best is None or key < best:
                best = key
        return best

    def is_isomorphic(self, other):
        return self.n == other.n and self.canonical_form() == other.canonical_form()

    def summary(self):
        red, _ = self.reduced_part()
        return {
            "degree": self.n,
            "sigma0": to_cycles(self.sigma0),
            "sigma1": to_cycles(self.sigma1),
            "sigma_inf": to_cycles(self.sigma_inf),
            "ramification": {k: list(v) for k, v in self.ramification().items()},
            "genus": self.genus,
            "aut_order": len(self.automorphisms),
            "regular": self.is_regular(),
            "reduced_degree": red.n,
            "reduced_genus": red.genus,
            "acts_freely": self.aut_acts_freely_on_surface(),
            "classification": self.classify_genus_one(),
        }


@dataclass(frozen=True)
class CoverAutGroup:
    elements: tuple

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))

    @property
    def order(self):
        return len(self.elements)


@dataclass(frozen=True)
class RiemannHurwitzReport:
    degree: int
    genus: int
    quotient_genus: int
    ramification: int
    lhs: int
    rhs: int
    acts_freely: bool

    @property
    def holds(self):
        return self.lhs == self.rhs

    def genus_one_form(self):
        """Both sides of d (2 - 2 g(X0)) = sum (e_P - 1), valid when g(X) = 1."""
        return self.degree * (2 - 2 * self.quotient_genus), self.ramification

    def as_dict(self):
        return {"degree": self.degree, "genus": self.genus, "quotient_genus": self.quotient_genus,
                "ramification": self.ramification, "lhs": self.lhs, "rhs": self.rhs,
                "acts_freely": self.acts_freely}


def euler_characteristic_by_faces(sigma0, sigma1):
    """V - E + F of the bipartite map, tracing faces on darts.

    Darts are (edge, end) with end 0 at the black vertex, 1 at the white one.
    Rotation at black vertices is sigma0, at white ones sigma1; faces are the
    orbits of "cross the edge, then rotate at the far end" on the 2n darts.
    """
    n = len(sigma0)
    black = len(cycles(sigma0))
    white = len(cycles(sigma1))
    rot = (sigma0, sigma1)
    seen = set()
    faces = 0
    for start in [(i, end) for i in range(n) for end in (0, 1)]:
        if start in seen:
            continue
        faces += 1
        d = start
        while d not in seen:
            seen.add(d)
            edge, end = d
            # cross the edge to the other end, then rotate there
            other = 1 - end
            d = (rot[other][edge], other)
    return black + white - n + faces


def partitions(n, maximum=None):
    if maximum is None:
        maximum = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, maximum), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def canonical_permutation(part):
    """The permutation (0 1 .. a-1)(a .. a+b-1)... of the given cycle type."""
    img = []
    start = 0
    for k in part:
        img += [start + (i + 1) % k for i in range(k)]
        start += k
    return tuple(img)


def enumerate_dessins(n, genus=None, free_aut=None, full=False, unique=False):
    """Transitive pairs on n points.

    With ``full`` every pair (sigma0, sigma1) is produced.  Otherwise sigma0
    runs over one representative per cycle type and sigma1 over all of
    Sym(n); every dessin is isomorphic (by simultaneous conjugation) to one of
    these.  ``unique`` drops repeated isomorphism classes.
    """
    if n < 1:
        raise BadInput("n must be positive")
    perms = list(permutations(range(n)))
    firsts = perms if full else [canonical_permutation(p) for p in partitions(n)]
    seen = set()
    for s0 in firsts:
        for s1 in perms:
            if not is_transitive(n, [s0, s1]):
                continue
            d = Dessin(s0, s1)
            if genus is not None and d.genus != genus:
                continue
            if free_aut is not None:
                nontrivial = len(d.automorphisms) > 1
                if free_aut != (nontrivial and d.aut_acts_freely_on_surface()):
                    continue
            if unique:
                key = d.canonical_form()
                if key in seen:
                    continue
                seen.add(key)
            yield d


def dichotomy_census(max_n=6, full=False):
    """Classify every genus-one dessin of degree <= max_n.

    Returns (counts per case, a Case1 witness with nontrivial automorphisms if
    one exists, number of Riemann-Hurwitz checks).
    """
    counts = Counter()
    witness = None
    rh_checked = 0
    for n in range(1, max_n + 1):
        for d in enumerate_dessins(n, genus=1, full=full):
            c = d.classify_genus_one()
            counts[c] += 1
            rep = d.riemann_hurwitz_check()
            a, b = rep.genus_one_form()
            if a != b:
                raise AssertionError(f"genus one identity fails for {d!r}")
            rh_checked += 1
            if c == CASE1 and witness is None and len(d.automorphisms) > 1:
                witness = d
    return counts, witness, rh_checked
