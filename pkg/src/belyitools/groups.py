"""Finite groups given by multiplication tables, and finite G-modules.

Elements of a group are the integers 0..n-1.  A module is A = Z/d_1 + ... + Z/d_k
with elements stored as tuples; a group element acts through an integer matrix
on column vectors.
"""

from collections import deque
from functools import cached_property
from itertools import product
from math import prod

from .errors import InvalidModule, NotAGroup, NotASubgroup, SizeCapExceeded

MAX_GROUP_ORDER = 24
MAX_MODULE_ORDER = 64


class FiniteGroup:
    """A group given by its table; associativity, identity and inverses are checked."""

    def __init__(self, table, name=None, labels=None, check=True):
        self.table = tuple(tuple(int(x) for x in row) for row in table)
        n = len(self.table)
        self.order = n
        self.name = name or f"G{n}"
        self.labels = list(labels) if labels is not None else None
        if n == 0 or any(len(row) != n for row in self.table):
            raise NotAGroup("table must be square and nonempty")
        if any(not 0 <= x < n for row in self.table for x in row):
            raise NotAGroup("table entries out of range")
        ids = [e for e in range(n) if all(self.table[e][g] == g == self.table[g][e] for g in range(n))]
        if not ids:
            raise NotAGroup("no identity element")
        self.identity = ids[0]
        inv = []
        for g in range(n):
            row = self.table[g]
            try:
                h = row.index(self.identity)
            except ValueError:
                raise NotAGroup(f"element {g} has no inverse") from None
            if self.table[h][g] != self.identity:
                raise NotAGroup(f"element {g} has no two-sided inverse")
            inv.append(h)
        self.inverses = tuple(inv)
        if check:
            self._check_associative()

    def _check_associative(self):
        """Light's test: (xy)s = x(ys) for all x, y and s in a generating set.

        The set of s satisfying the identity for all x, y is closed under
        products, so checking generators suffices.
        """
        t = self.table
        n = self.order
        for s in self.generators:
            for a in range(n):
                ta = t[a]
                for b in range(n):
                    if t[ta[b]][s] != ta[t[b][s]]:
                        raise NotAGroup("multiplication is not associative")

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    @property
    def elements(self):
        return range(self.order)

    def mul(self, a, b):
        return self.table[a][b]

    def inv(self, a):
        return self.inverses[a]

    def power(self, a, k):
        if k < 0:
            a, k = self.inv(a), -k
        r = self.identity
        for _ in range(k):
            r = self.table[r][a]
        return r

    def element_order(self, a):
        k, x = 1, a
        while x != self.identity:
            x = self.table[x][a]
            k += 1
        return k

    def is_abelian(self):
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(a))

    def closure(self, gens):
        """The subgroup generated by ``gens`` as a frozenset."""
        seen = {self.identity}
        queue = deque([self.identity])
        gens = list(gens)
        while queue:
            x = queue.popleft()
            for s in gens:
                y = self.table[x][s]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return frozenset(seen)

    @cached_property
    def generators(self):
        """A small generating set, chosen greedily by decreasing element order."""
        gens = []
        span = frozenset([self.identity])
        for g in sorted(self.elements, key=lambda x: (-self.element_order(x), x)):
            if g not in span:
                gens.append(g)
                span = self.closure(gens)
                if len(span) == self.order:
                    break
        return tuple(gens)

    def is_subgroup(self, elems):
        S = set(elems)
        if self.identity not in S:
            return False
        return all(self.table[a][self.inverses[b]] in S for a in S for b in S)

    def subgroup(self, elems):
        return Subgroup(self, elems)

    def subgroup_generated(self, gens):
        return Subgroup(self, self.closure(gens))

    @cached_property
    def subgroups(self):
        """All subgroups, as Subgroup objects sorted by order then elements."""
        found = {frozenset([self.identity])}
        cyclic = {self.closure([g]) for g in self.elements}
        found |= cyclic
        frontier = set(found)
        while frontier:
            new = set()
            for H in frontier:
                for C in cyclic:
                    if not C <= H:
                        J = self.closure(H | C)
                        if J not in found:
                            new.add(J)
            found |= new
            frontier = new
        return [Subgroup(self, S) for S in sorted(found, key=lambda s: (len(s), sorted(s)))]

    def whole(self):
        return Subgroup(self, self.elements)

    def trivial_subgroup(self):
        return Subgroup(self, [self.identity])

    # ---------------------------------------------------------- constructors

    @classmethod
    def cyclic(cls, n):
        return cls([[(a + b) % n for b in range(n)] for a in range(n)], name=f"C{n}", check=False)

    @classmethod
    def abelian(cls, *ns):
        G = cls.cyclic(ns[0])
        for n in ns[1:]:
            G = cls.direct_product(G, cls.cyclic(n))
        G.name = "x".join(f"C{n}" for n in ns)
        return G

    @classmethod
    def direct_product(cls, G, H):
        m = H.order
        table = [[G.table[a // m][b // m] * m + H.table[a % m][b % m]
                  for b in range(G.order * m)] for a in range(G.order * m)]
        return cls(table, name=f"{G.name}x{H.name}", check=False)

    @classmethod
    def from_permutations(cls, gens, name=None):
        """The group generated by permutations of {0..d-1} (tuples of images)."""
        gens = [tuple(g) for g in gens]
        if not gens:
            raise NotAGroup("need at least one generator")
        d = len(gens[0])
        ident = tuple(range(d))
        elems = [ident]
        index = {ident: 0}
        queue = deque([ident])
        while queue:
            x = queue.popleft()
            for s in gens:
                y = tuple(s[x[i]] for i in range(d))  # apply x then s
                if y not in index:
                    if len(elems) >= MAX_GROUP_ORDER * 50:
                        raise SizeCapExceeded("permutation group too large")
                    index[y] = len(elems)
                    elems.append(y)
                    queue.append(y)
        # product a*b means: apply b first, then a
        table = [[index[tuple(a[b[i]] for i in range(d))] for b in elems] for a in elems]
        G = cls(table, name=name or f"Perm{len(elems)}", labels=elems, check=False)
        return G

    @classmethod
    def symmetric(cls, d):
        if d < 2:
            return cls([[0]], name=f"S{d}")
        gens = [tuple([1, 0] + list(range(2, d))), tuple(list(range(1, d)) + [0])]
        return cls.from_permutations(gens, name=f"S{d}")

    @classmethod
    def dihedral(cls, n):
        """Dihedral group of order 2n: elements r^i s^j encoded as i + n*j."""
        def mul(a, b):
            i, j = a % n, a // n
            k, l = b % n, b // n
            kk = k if j == 0 else -k
            return (i + kk) % n + n * ((j + l) % 2)
        N = 2 * n
        return cls([[mul(a, b) for b in range(N)] for a in range(N)], name=f"D{n}")

    @classmethod
    def quaternion(cls):
        # elements +-1, +-i, +-j, +-k as (sign, unit) with units 0=1, 1=i, 2=j, 3=k
        units = {(0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
                 (1, 0): (1, 1), (2, 0): (1, 2), (3, 0): (1, 3),
                 (1, 1): (-1, 0), (2, 2): (-1, 0), (3, 3): (-1, 0),
                 (1, 2): (1, 3), (2, 3): (1, 1), (3, 1): (1, 2),
                 (2, 1): (-1, 3), (3, 2): (-1, 1), (1, 3): (-1, 2)}

        def mul(a, b):
            sa, ua = a // 4, a % 4
            sb, ub = b // 4, b % 4
            sign, u = units[(ua, ub)]
            s = (sa + sb + (1 if sign < 0 else 0)) % 2
            return 4 * s + u
        return cls([[mul(a, b) for b in range(8)] for a in range(8)], name="Q8")


def small_groups(max_order=8):
    """One representative of every isomorphism class of groups of order <= 8."""
    out = [FiniteGroup.cyclic(1)]
    for n in range(2, max_order + 1):
        out.append(FiniteGroup.cyclic(n))
        if n == 4:
            out.append(FiniteGroup.abelian(2, 2))
        if n == 6:
            out.append(FiniteGroup.dihedral(3))
        if n == 8:
            out += [FiniteGroup.abelian(2, 4), FiniteGroup.abelian(2, 2, 2),
                    FiniteGroup.dihedral(4), FiniteGroup.quaternion()]
    if max_order > 8:
        raise ValueError("only orders up to 8 are tabulated")
    return out


class Subgroup:
    """A subgroup H of G together with its own table (indices 0..|H|-1)."""

    def __init__(self, ambient, elems):
        elems = sorted(set(int(x) for x in elems))
        if not elems or not ambient.is_subgroup(elems):
            raise NotASubgroup(f"{elems} is not a subgroup of {ambient.name}")
        self.ambient = ambient
        # keep the identity first so that the local identity is index 0
        elems.remove(ambient.identity)
        self.elements = (ambient.identity,) + tuple(elems)
        self.index_of = {g: i for i, g in enumerate(self.elements)}

    @property
    def order(self):
        return len(self.elements)

    @property
    def index(self):
        return self.ambient.order // self.order

    def __contains__(self, g):
        return g in self.index_of

    def __repr__(self):
        return f"Subgroup(order={self.order}, index={self.index}, elements={list(self.elements)})"

    def __eq__(self, other):
        return isinstance(other, Subgroup) and self.ambient == other.ambient and \
            set(self.elements) == set(other.elements)

    def __hash__(self):
        return hash(frozenset(self.elements))

    def __le__(self, other):
        return set(self.elements) <= set(other.elements)

    @cached_property
    def group(self):
        t = self.ambient.table
        table = [[self.index_of[t[a][b]] for b in self.elements] for a in self.elements]
        return FiniteGroup(table, name=f"{self.ambient.name}>H{self.order}", check=False)


# ---------------------------------------------------------------- modules


def _matmul_mod(M, N, factors):
    k = len(factors)
    return tuple(tuple(sum(M[i][l] * N[l][j] for l in range(k)) % factors[i] for j in range(k))
                 for i in range(k))


class GModule:
    """A = Z/d_1 + ... + Z/d_k with a left action of a finite group by matrices."""

    def __init__(self, group, factors, action=None, generator_action=None,
                 max_order=MAX_MODULE_ORDER, name=None):
        factors = tuple(int(d) for d in factors)
        if any(d < 1 for d in factors):
            raise InvalidModule("factors must be positive")
        factors = tuple(d for d in factors if d > 1)
        self.group = group
        self.factors = factors
        self.rank = len(factors)
        self.order = prod(factors)
        self.name = name
        if self.order > max_order:
            raise SizeCapExceeded(f"module order {self.order} exceeds cap {max_order}")
        k = self.rank
        ident = tuple(tuple(int(i == j) for j in range(k)) for i in range(k))
        if action is None and generator_action is None:
            action = [ident] * group.order
        elif action is None:
            action = self._extend_generator_action(generator_action, ident)
        action = [self._normalize_matrix(M) for M in action]
        if len(action) != group.order:
            raise InvalidModule("need one matrix per group element")
        self.action = tuple(action)
        self._check()

    def _normalize_matrix(self, M):
        k = self.rank
        M = [list(r) for r in M] if k else []
        if len(M) != k or any(len(r) != k for r in M):
            raise InvalidModule("action matrix has the wrong shape")
        for i in range(k):
            for j in range(k):
                if (M[i][j] * self.factors[j]) % self.factors[i]:
                    raise InvalidModule(f"entry ({i},{j}) does not give a map Z/{self.factors[j]} "
                                        f"-> Z/{self.factors[i]}")
        return tuple(tuple(M[i][j] % self.factors[i] for j in range(k)) for i in range(k))

    def _extend_generator_action(self, gen_action, ident):
        G = self.group
        gen_action = {int(g): self._normalize_matrix(M) for g, M in dict(gen_action).items()}
        if G.closure(gen_action) != frozenset(G.elements):
            raise InvalidModule("the listed elements do not generate the group")
        mats = {G.identity: ident}
        queue = deque([G.identity])
        while queue:
            x = queue.popleft()
            for s, Ms in gen_action.items():
                y = G.mul(x, s)
                My = _matmul_mod(mats[x], Ms, self.factors)
                if y not in mats:
                    mats[y] = My
                    queue.append(y)
                elif mats[y] != My:
                    raise InvalidModule("generator matrices violate a relation of the group")
        return [mats[g] for g in G.elements]

    def _check(self):
        G = self.group
        k = self.rank
        ident = tuple(tuple(int(i == j) % self.factors[i] for j in range(k)) for i in range(k))
        if self.action[G.identity] != ident:
            raise InvalidModule("identity does not act trivially")
        for a in G.elements:
            for b in G.elements:
                if _matmul_mod(self.action[a], self.action[b], self.factors) != \
                        self.action[G.mul(a, b)]:
                    raise InvalidModule("action is not a homomorphism")

    def __repr__(self):
        fs = "x".join(f"Z/{d}" for d in self.factors) or "0"
        return f"GModule({fs} over {self.group.name})"

    @classmethod
    def trivial(cls, group, factors):
        return cls(group, factors)

    @property
    def zero(self):
        return (0,) * self.rank

    @cached_property
    def elements(self):
        return list(product(*(range(d) for d in self.factors)))

    def add(self, a, b):
        return tuple((x + y) % d for x, y, d in zip(a, b, self.factors))

    def sub(self, a, b):
        return tuple((x - y) % d for x, y, d in zip(a, b, self.factors))

    def neg(self, a):
        return tuple((-x) % d for x, d in zip(a, self.factors))

    def scale(self, k, a):
        return tuple((k * x) % d for x, d in zip(a, self.factors))

    def act(self, g, a):
        M = self.action[g]
        return tuple(sum(M[i][j] * a[j] for j in range(self.rank)) % self.factors[i]
                     for i in range(self.rank))

    def reduce(self, a):
        return tuple(int(x) % d for x, d in zip(a, self.factors))

    def is_trivial_action(self):
        return all(self.act(g, a) == a for g in self.group.elements for a in self.basis())

    def basis(self):
        return [tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank)]

    def restrict(self, H):
        """The module viewed over a subgroup H (a Subgroup of this module's group)."""
        if H.ambient != self.group:
            raise NotASubgroup("subgroup of a different group")
        return GModule(H.group, self.factors, action=[self.action[g] for g in H.elements])

    def fixed_points(self):
        gens = self.group.generators
        return [a for a in self.elements if all(self.act(g, a) == a for g in gens)]


def invariant_factor_forms(order):
    """Invariant factor lists d_1 | d_2 | ... with product ``order``."""
    out = []

    def rec(rest, lst):
        if rest == 1:
            out.append(tuple(lst))
            return
        for d in range(2, rest + 1):
            if rest % d == 0 and (not lst or d % lst[-1] == 0):
                # remaining factors must be multiples of d
                r = rest // d
                if r == 1 or r % d == 0:
                    rec(r, lst + [d])
    rec(order, [])
    return sorted(out)


def module_automorphisms(factors):
    """All automorphism matrices of Z/d_1 + ... + Z/d_k (factors of a small module)."""
    factors = tuple(factors)
    k = len(factors)
    ranges = [[range(factors[i]) for _ in range(k)] for i in range(k)]
    cells = [(i, j) for i in range(k) for j in range(k)]
    out = []
    order = prod(factors)
    elems = list(product(*(range(d) for d in factors)))
    for vals in product(*(ranges[i][j] for i, j in cells)):
        M = [[0] * k for _ in range(k)]
        ok = True
        for (i, j), v in zip(cells, vals):
            if (v * factors[j]) % factors[i]:
                ok = False
                break
            M[i][j] = v
        if not ok:
            continue
        images = {tuple(sum(M[i][j] * a[j] for j in range(k)) % factors[i] for i in range(k))
                  for a in elems}
        if len(images) == order:
            out.append(tuple(tuple(r) for r in M))
    return out


def module_actions(group, factors, limit=None):
    """Distinct actions of ``group`` on the module with these factors.

    The trivial action comes first; others follow in a fixed enumeration order
    of generator images.  At most ``limit`` actions are returned.
    """
    gens = group.generators
    auts = module_automorphisms(factors)
    ident = tuple(tuple(int(i == j) for j in range(len(factors))) for i in range(len(factors)))
    auts.sort(key=lambda M: (M != ident, M))
    seen = []
    out = []
    for images in product(auts, repeat=len(gens)):
        try:
            A = GModule(group, factors, generator_action=dict(zip(gens, images)))
        except InvalidModule:
            continue
        if A.action not in seen:
            seen.append(A.action)
            out.append(A)
            if limit is not None and len(out) >= limit:
                break
    return out
