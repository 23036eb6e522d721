"""Cohomology of finite groups with coefficients in finite modules.

Cochains are inhomogeneous and normalized (zero whenever an argument is the
identity).  A cochain of degree n is stored as a dict from n-tuples of group
elements to module elements; linear algebra happens over Z/e with e the
exponent of the module, a coordinate of Z/d_i being lifted to Z/e.

Differentials, for a left action:

    (d f)(g_1, ..., g_{n+1}) = g_1 f(g_2, ..., g_{n+1})
                               + sum_i (-1)^i f(..., g_i g_{i+1}, ...)
                               + (-1)^{n+1} f(g_1, ..., g_n)

so a 1-cocycle satisfies f(gh) = f(g) + g f(h).  A normalized cochain f is a
cocycle as soon as (d f)(g_1, ..., g_n, s) = 0 for s in a generating set,
since d(d f) = 0 propagates the vanishing along words in the last slot.
"""

import random
from collections import deque
from dataclasses import dataclass, field
from itertools import product
from math import gcd, lcm, prod

import numpy as np

from .errors import (BadInput, InvalidModule, NotASubgroup, SizeCapExceeded)
from .groups import MAX_GROUP_ORDER, MAX_MODULE_ORDER, FiniteGroup, GModule, Subgroup
from .snf import ModSNF


def _check_caps(G, A, max_group=MAX_GROUP_ORDER, max_module=MAX_MODULE_ORDER):
    if G.order > max_group:
        raise SizeCapExceeded(f"group order {G.order} exceeds cap {max_group}")
    if A.order > max_module:
        raise SizeCapExceeded(f"module order {A.order} exceeds cap {max_module}")


# ---------------------------------------------------------------- cochains


@dataclass
class CocycleClass:
    """A cochain of degree n standing for its cohomology class."""

    group: FiniteGroup
    module: GModule
    degree: int
    values: dict

    def __post_init__(self):
        if self.module.group != self.group:
            raise InvalidModule("module is over a different group")
        if self.degree not in (0, 1, 2):
            raise BadInput("degree must be 0, 1 or 2")
        A = self.module
        full = {}
        for t in product(self.group.elements, repeat=self.degree):
            full[t] = A.reduce(self.values.get(t, A.zero))
        self.values = full

    def __call__(self, *args):
        return self.values[tuple(args)]

    def is_cocycle(self):
        d = coboundary(self.group, self.module, self.values, self.degree)
        z = self.module.zero
        return all(v == z for v in d.values())

    def is_normalized(self):
        e = self.group.identity
        z = self.module.zero
        return all(v == z for t, v in self.values.items() if e in t)

    def normalized(self):
        """A cohomologous normalized cocycle."""
        if self.degree < 2 or self.is_normalized():
            return self
        G, A = self.group, self.module
        c0 = self.values[(G.identity, G.identity)]
        # subtract the coboundary of the constant 1-cochain with value f(1,1)
        c = {(g,): c0 for g in G.elements}
        dc = coboundary(G, A, c, 1)
        vals = {t: A.sub(v, dc[t]) for t, v in self.values.items()}
        return CocycleClass(G, A, 2, vals)

    def __add__(self, other):
        self._same_space(other)
        A = self.module
        return CocycleClass(self.group, A, self.degree,
                           {t: A.add(v, other.values[t]) for t, v in self.values.items()})

    def __sub__(self, other):
        self._same_space(other)
        A = self.module
        return CocycleClass(self.group, A, self.degree,
                           {t: A.sub(v, other.values[t]) for t, v in self.values.items()})

    def scale(self, k):
        A = self.module
        return CocycleClass(self.group, A, self.degree,
                           {t: A.scale(k, v) for t, v in self.values.items()})

    def _same_space(self, other):
        if (self.group, self.degree) != (other.group, other.degree) or \
                self.module.factors != other.module.factors or \
                self.module.action != other.module.action:
            raise BadInput("cochains live in different spaces")

    def is_zero_cochain(self):
        z = self.module.zero
        return all(v == z for v in self.values.values())

    def as_dict(self):
        return {"degree": self.degree,
                "values": [[list(t), list(v)] for t, v in sorted(self.values.items())
                           if any(v)]}

    @classmethod
    def zero(cls, G, A, n):
        return cls(G, A, n, {})


def coboundary(G, A, values, n):
    """The (n+1)-cochain d f on all tuples."""
    out = {}
    for t in product(G.elements, repeat=n + 1):
        acc = A.act(t[0], values[t[1:]])
        for i in range(n):
            merged = t[:i] + (G.mul(t[i], t[i + 1]),) + t[i + 2:]
            term = values[merged]
            acc = A.sub(acc, term) if i % 2 == 0 else A.add(acc, term)
        last = values[t[:n]]
        acc = A.sub(acc, last) if n % 2 == 0 else A.add(acc, last)
        out[t] = acc
    return out


# ---------------------------------------------------------------- linear algebra


def _normalized_tuples(G, n):
    nonid = [g for g in G.elements if g != G.identity]
    return list(product(nonid, repeat=n))


def _delta_matrix(G, A, n, last_in=None):
    """Matrix of d: C^n -> C^{n+1} on normalized cochains, over Z/e.

    Rows are indexed by (tuple, factor) for (n+1)-tuples of non-identity
    elements, optionally restricted to tuples whose last entry lies in
    ``last_in``.
    """
    k = A.rank
    e = lcm(*A.factors)
    src = _normalized_tuples(G, n)
    src_index = {t: i for i, t in enumerate(src)}
    dst = _normalized_tuples(G, n + 1)
    if last_in is not None:
        dst = [t for t in dst if t[-1] in last_in]
    M = np.zeros((len(dst) * k, len(src) * k), dtype=np.int64)
    ident = G.identity
    eye = np.eye(k, dtype=np.int64)
    for r, t in enumerate(dst):
        rows = slice(r * k, (r + 1) * k)
        terms = [(t[1:], np.array(A.action[t[0]], dtype=np.int64))]
        for i in range(n):
            merged = t[:i] + (G.mul(t[i], t[i + 1]),) + t[i + 2:]
            terms.append((merged, -eye if i % 2 == 0 else eye))
        terms.append((t[:n], -eye if n % 2 == 0 else eye))
        for tup, block in terms:
            if ident in tup:
                continue
            c = src_index[tup]
            M[rows, c * k:(c + 1) * k] += block
    return M % e, src, dst


class CohomologyGroup:
    """H^n(G, A) with coordinates for classes and an explicit basis of cocycles."""

    def __init__(self, G, A, n, max_group=MAX_GROUP_ORDER, max_module=MAX_MODULE_ORDER):
        if n not in (0, 1, 2):
            raise BadInput("degree must be 0, 1 or 2")
        if A.group != G:
            raise InvalidModule("module is over a different group")
        _check_caps(G, A, max_group, max_module)
        self.group, self.module, self.degree = G, A, n
        k = A.rank
        self.e = e = lcm(*A.factors) if k else 1
        self.tuples = _normalized_tuples(G, n)
        self.tuple_index = {t: i for i, t in enumerate(self.tuples)}
        ncols = len(self.tuples) * k
        if e == 1 or ncols == 0:
            self._set_trivial()
            return
        scale = np.array([e // d for d in A.factors], dtype=np.int64)
        # cocycles: kernel of d followed by the embedding of C^{n+1} into (Z/e)^N
        Dn, _, dst = _delta_matrix(G, A, n, last_in=set(G.generators))
        if Dn.shape[0] == 0:
            Dn = np.zeros((1, ncols), dtype=np.int64)
        else:
            Dn = Dn * np.tile(scale, len(dst))[:, None] % e
        zs = ModSNF(Dn, e, want_u=False)
        steps, keep = [], []
        for j in range(ncols):
            s = zs.s[j] if j < len(zs.s) else e
            g = gcd(s, e)
            if g > 1:
                keep.append(j)
                steps.append(e // g)
        self._zV, self._zVinv = zs.V, zs.Vinv
        self._zkeep, self._zsteps = keep, steps
        self._zorders = [e // st for st in steps]
        # coboundaries and the relations d_i * (unit vectors)
        gens = []
        if n > 0:
            Dprev, _, _ = _delta_matrix(G, A, n - 1)
            gens.append(Dprev)
        rel = np.zeros((ncols, ncols), dtype=np.int64)
        factors = np.tile(np.array(A.factors, dtype=np.int64), len(self.tuples))
        rel[np.arange(ncols), np.arange(ncols)] = factors % e
        gens.append(rel)
        B = np.concatenate(gens, axis=1) % e
        T = self._z_coords(B)
        r = len(keep)
        if r == 0:
            self._set_trivial(keep_z=True)
            return
        K = np.concatenate([np.diag(np.array(self._zorders, dtype=np.int64) % e), T], axis=1) % e
        qs = ModSNF(K, e, want_u=True)
        self._qU, self._qUinv = qs.U, qs.Uinv
        self._qorders = [gcd(qs.s[l], e) for l in range(r)]
        self._qkeep = [l for l in range(r) if self._qorders[l] > 1]
        self.invariants = [self._qorders[l] for l in self._qkeep]
        self.order = prod(self.invariants)
        self.basis = [self._cochain_from_t(self._qUinv[:, l] % e) for l in self._qkeep]
        for b in self.basis:
            if not b.is_cocycle():
                raise AssertionError("basis representative is not a cocycle")

    def _set_trivial(self, keep_z=False):
        self.invariants = []
        self.order = 1
        self.basis = []
        self._qkeep = []
        if not keep_z:
            self._zkeep = []

    def __repr__(self):
        fs = " + ".join(f"Z/{d}" for d in self.invariants) or "0"
        return f"H^{self.degree}({self.group.name}, {self.module!r}) = {fs}"

    # conversions between cochains, Z-coordinates t and class coordinates

    def _vector(self, cls):
        k = self.module.rank
        v = np.zeros(len(self.tuples) * k, dtype=np.int64)
        for i, t in enumerate(self.tuples):
            v[i * k:(i + 1) * k] = cls.values[t]
        return v

    def _z_coords(self, X):
        """Coordinates in Z = sum Z/g_j of columns of X (which must lie in Z)."""
        e = self.e
        Y = self._zVinv @ (X % e) % e
        rows = []
        for j, st, g in zip(self._zkeep, self._zsteps, self._zorders):
            yj = Y[j]
            if (yj % st).any():
                raise AssertionError("vector is not a cocycle")
            rows.append((yj // st) % g)
        if not rows:
            return np.zeros((0,) + X.shape[1:], dtype=np.int64)
        return np.array(rows, dtype=np.int64)

    def _cochain_from_t(self, t):
        e = self.e
        x = np.zeros(self._zV.shape[0], dtype=np.int64)
        for j, st, tj in zip(self._zkeep, self._zsteps, t):
            x = (x + self._zV[:, j] * (int(tj) * st % e)) % e
        return self._cochain_from_vector(x)

    def _cochain_from_vector(self, x):
        A = self.module
        k = A.rank
        vals = {t: A.reduce(x[i * k:(i + 1) * k]) for i, t in enumerate(self.tuples)}
        return CocycleClass(self.group, A, self.degree, vals)

    def _check_class(self, cls):
        if cls.degree != self.degree or cls.group != self.group or \
                cls.module.factors != self.module.factors or cls.module.action != self.module.action:
            raise BadInput("class lives in a different cohomology group")
        if not cls.is_cocycle():
            raise BadInput("cochain is not a cocycle")

    def coordinates(self, cls):
        """Coordinates of the class of ``cls`` with respect to ``basis``."""
        self._check_class(cls)
        if self.order == 1:
            return ()
        cls = cls.normalized()
        v = self._vector(cls)
        t = self._z_coords(v[:, None])[:, 0]
        w = self._qU @ t % self.e
        return tuple(int(w[l]) % self._qorders[l] for l in self._qkeep)

    def is_zero(self, cls):
        return not any(self.coordinates(cls))

    def cohomologous(self, a, b):
        return self.is_zero(a - b)

    def class_from_coordinates(self, coords):
        coords = tuple(coords)
        if len(coords) != len(self.basis):
            raise BadInput("wrong number of coordinates")
        out = CocycleClass.zero(self.group, self.module, self.degree)
        for c, b in zip(coords, self.basis):
            out = out + b.scale(c)
        return out

    def all_coordinates(self):
        return product(*(range(d) for d in self.invariants))

    def all_classes(self):
        for c in self.all_coordinates():
            yield self.class_from_coordinates(c)


_CACHE = {}


def _module_key(A):
    return (A.group.table, A.factors, A.action)


def cohomology_group(G, A, n, max_group=MAX_GROUP_ORDER, max_module=MAX_MODULE_ORDER):
    """H^n(G, A) for n in {0, 1, 2}, computed by Smith forms over Z/e."""
    key = (_module_key(A), n)
    if A.group != G:
        raise InvalidModule("module is over a different group")
    H = _CACHE.get(key)
    if H is None:
        H = CohomologyGroup(G, A, n, max_group, max_module)
        if len(_CACHE) > 4096:
            _CACHE.clear()
        _CACHE[key] = H
    return H


def class_group(cls):
    return cohomology_group(cls.group, cls.module, cls.degree)


def is_zero_class(cls):
    return class_group(cls).is_zero(cls)


# ---------------------------------------------------------------- restriction


def _as_subgroup(G, H):
    if isinstance(H, Subgroup):
        if H.ambient != G:
            raise NotASubgroup("subgroup of a different group")
        return H
    return Subgroup(G, H)


def restriction(cls, H):
    """Restrict a class to a subgroup H (a Subgroup or a collection of elements)."""
    H = _as_subgroup(cls.group, H)
    AH = cls.module.restrict(H)
    n = cls.degree
    vals = {tuple(H.index_of[g] for g in t): v
            for t, v in cls.values.items() if all(g in H for g in t)}
    return CocycleClass(H.group, AH, n, vals)


def splitting_certificate(cls):
    """For every subgroup: its index and the coordinates of the restricted class."""
    if cls.degree != 2:
        raise BadInput("splitting indices are defined for degree 2 classes")
    rows = []
    for H in cls.group.subgroups:
        res = restriction(cls, H)
        coords = class_group(res).coordinates(res)
        rows.append({"subgroup": list(H.elements), "index": H.index,
                     "restriction": list(coords), "vanishes": not any(coords)})
    return rows


def min_splitting_index(cls):
    """Smallest index of a subgroup on which the class restricts to zero."""
    if cls.degree != 2:
        raise BadInput("splitting indices are defined for degree 2 classes")
    best = cls.group.order
    for H in sorted(cls.group.subgroups, key=lambda S: S.index):
        if H.index >= best:
            break
        res = restriction(cls, H)
        if class_group(res).is_zero(res):
            return H.index
    return best


def carry_cocycle(m):
    """The 2-cocycle on C_m with f(i, j) = 1 if i + j >= m, else 0 (values in Z)."""
    return {(i, j): int(i + j >= m) for i in range(m) for j in range(m)}


@dataclass
class ObstructionClassResult:
    group: FiniteGroup
    module: GModule
    cls: CocycleClass
    min_index: int
    certificate: list

    def as_dict(self):
        return {"group": self.group.name, "module": list(self.module.factors),
                "class": self.cls.as_dict(), "min_splitting_index": self.min_index,
                "certificate": self.certificate}


def build_obstruction_class(m, max_group=MAX_GROUP_ORDER):
    """A class in H^2(C_m, Z/m x Z/m) that survives on every subgroup of index < m.

    The module has trivial action and the class is (carry, 0), where the carry
    cocycle generates H^2(C_m, Z/m).  The certificate lists every proper
    subgroup of index < m with the nonzero coordinates of the restriction.
    """
    if m < 2:
        raise BadInput("m must be at least 2")
    if m > max_group:
        raise SizeCapExceeded(f"group order {m} exceeds cap {max_group}")
    G = FiniteGroup.cyclic(m)
    A = GModule(G, (m, m))
    carry = carry_cocycle(m)
    cls = CocycleClass(G, A, 2, {t: (v, 0) for t, v in carry.items()})
    if not cls.is_cocycle():
        raise AssertionError("carry cochain is not a cocycle")
    cert = []
    for row in splitting_certificate(cls):
        if row["index"] < m:
            if row["vanishes"]:
                raise AssertionError(f"class vanishes on a subgroup of index {row['index']}")
            cert.append(row)
    return ObstructionClassResult(G, A, cls, min_splitting_index(cls), cert)


# ---------------------------------------------------------------- module maps


@dataclass
class ModuleMap:
    """A G-equivariant homomorphism given by an integer matrix on generators."""

    source: GModule
    target: GModule
    matrix: tuple

    def __post_init__(self):
        S, T = self.source, self.target
        M = [list(r) for r in self.matrix] if T.rank else []
        if len(M) != T.rank or any(len(r) != S.rank for r in M):
            raise InvalidModule("map matrix has the wrong shape")
        for i in range(T.rank):
            for j in range(S.rank):
                if (M[i][j] * S.factors[j]) % T.factors[i]:
                    raise InvalidModule("matrix does not define a homomorphism")
        self.matrix = tuple(tuple(M[i][j] % T.factors[i] for j in range(S.rank))
                            for i in range(T.rank))
        if S.group != T.group:
            raise InvalidModule("modules over different groups")
        for g in S.group.elements:
            for a in S.basis():
                if self(S.act(g, a)) != T.act(g, self(a)):
                    raise InvalidModule("map is not equivariant")

    def __call__(self, a):
        T = self.target
        return tuple(sum(self.matrix[i][j] * a[j] for j in range(len(a))) % T.factors[i]
                     for i in range(T.rank))

    def push(self, cls):
        """Apply the map to the values of a cochain."""
        return CocycleClass(cls.group, self.target, cls.degree,
                           {t: self(v) for t, v in cls.values.items()})


class ShortExactSeq:
    """0 -> A -> B -> C -> 0, checked elementwise."""

    def __init__(self, A, B, C, inj, surj):
        self.A, self.B, self.C = A, B, C
        self.inj = inj if isinstance(inj, ModuleMap) else ModuleMap(A, B, inj)
        self.surj = surj if isinstance(surj, ModuleMap) else ModuleMap(B, C, surj)
        if not (A.group == B.group == C.group):
            raise InvalidModule("modules over different groups")
        image = {self.inj(a) for a in A.elements}
        if len(image) != A.order:
            raise InvalidModule("first map is not injective")
        kernel = {b for b in B.elements if self.surj(b) == C.zero}
        if kernel != image:
            raise InvalidModule("image of the injection is not the kernel of the surjection")
        if len({self.surj(b) for b in B.elements}) != C.order:
            raise InvalidModule("second map is not surjective")
        self.group = A.group
        self._preimage_inj = {self.inj(a): a for a in A.elements}
        fibres = {}
        for b in B.elements:
            fibres.setdefault(self.surj(b), []).append(b)
        self._fibres = fibres

    def fibre(self, c):
        return self._fibres[c]

    def pull_back(self, b):
        return self._preimage_inj[b]


def connecting_delta(ses, tau0, seed=None):
    """delta(tau0) in H^2(G, A) for a 1-cocycle tau0 with values in C.

    tau0 is lifted pointwise to B (the lift is random when ``seed`` is given,
    otherwise the first preimage, with 1 always lifted to 0), then pulled back
    from the coboundary of the lift.
    """
    if tau0.degree != 1:
        raise BadInput("tau0 must have degree 1")
    if not tau0.is_cocycle():
        raise BadInput("tau0 is not a cocycle")
    G, B = ses.group, ses.B
    rng = random.Random(seed) if seed is not None else None
    lift = {}
    for g in G.elements:
        fib = ses.fibre(tau0.values[(g,)])
        if g == G.identity:
            lift[(g,)] = B.zero
        else:
            lift[(g,)] = rng.choice(fib) if rng else fib[0]
    d = coboundary(G, B, lift, 1)
    vals = {t: ses.pull_back(v) for t, v in d.items()}
    out = CocycleClass(G, ses.A, 2, vals)
    if not out.is_cocycle():
        raise AssertionError("connecting map produced a non-cocycle")
    return out


def lift_to_cocycle(ses, tau0):
    """A 1-cocycle with values in B mapping onto tau0, or None; exhaustive search."""
    G, B = ses.group, ses.B
    gens = G.generators
    choices = [ses.fibre(tau0.values[(s,)]) for s in gens]
    for pick in product(*choices):
        f = _extend_crossed_hom(G, B, dict(zip(gens, pick)))
        if f is not None:
            cls = CocycleClass(G, B, 1, {(g,): v for g, v in f.items()})
            if all(ses.surj(cls.values[(g,)]) == tau0.values[(g,)] for g in G.elements):
                return cls
    return None


def _extend_crossed_hom(G, A, on_gens):
    """Extend values on generators by f(xs) = f(x) + x f(s); None if inconsistent."""
    f = {G.identity: A.zero}
    queue = deque([G.identity])
    while queue:
        x = queue.popleft()
        for s, v in on_gens.items():
            y = G.mul(x, s)
            val = A.add(f[x], A.act(x, v))
            if y not in f:
                f[y] = val
                queue.append(y)
            elif f[y] != val:
                return None
    return f


# ---------------------------------------------------------------- extensions


@dataclass
class Extension:
    """E = A x G with (a, g)(b, h) = (a + g b + f(g, h), gh)."""

    group: FiniteGroup
    base: FiniteGroup
    module: GModule
    cls: CocycleClass
    embedding: dict
    projection: tuple
    element_pairs: list = field(repr=False)

    def pair(self, x):
        return self.element_pairs[x]

    def index(self, a, g):
        return self._index[(tuple(a), g)]

    def __post_init__(self):
        self._index = {p: i for i, p in enumerate(self.element_pairs)}


def extension_group(G, A, cls, max_group=MAX_GROUP_ORDER, max_module=MAX_MODULE_ORDER):
    """The group extension of G by A defined by a 2-cocycle."""
    _check_caps(G, A, max_group, max_module)
    if cls.degree != 2 or cls.group != G:
        raise BadInput("need a 2-cocycle on G")
    if not cls.is_cocycle():
        raise BadInput("cochain is not a cocycle")
    cls = cls.normalized()
    elems = A.elements
    pairs = [(a, g) for a in elems for g in G.elements]
    index = {p: i for i, p in enumerate(pairs)}
    f = cls.values
    table = []
    for a, g in pairs:
        row = []
        for b, h in pairs:
            c = A.add(A.add(a, A.act(g, b)), f[(g, h)])
            row.append(index[(c, G.mul(g, h))])
        table.append(row)
    E = FiniteGroup(table, name=f"Ext({G.name},{A.factors})")
    proj = tuple(g for _, g in pairs)
    emb = {a: index[(a, G.identity)] for a in elems}
    # the projection is a homomorphism whose kernel is the copy of A
    for x in E.generators:
        for y in E.elements:
            if proj[E.mul(x, y)] != G.mul(proj[x], proj[y]):
                raise AssertionError("projection is not a homomorphism")
    if {x for x in E.elements if proj[x] == G.identity} != set(emb.values()):
        raise AssertionError("kernel of the projection is not A")
    return Extension(E, G, A, cls, emb, proj, pairs)


def is_split(ext):
    """(True, section) if the projection has a homomorphic section, else (False, None).

    Sections are searched by choosing a lift of each generator of G; a choice
    extends to a homomorphism iff s(xg) = s(x) s(g) is consistent on all of G.
    """
    G, E = ext.base, ext.group
    gens = G.generators
    fibres = [[x for x in E.elements if ext.projection[x] == g] for g in gens]
    ident = E.identity
    for pick in product(*fibres):
        sec = {G.identity: ident}
        queue = deque([G.identity])
        ok = True
        while queue and ok:
            x = queue.popleft()
            for g, lg in zip(gens, pick):
                y = G.mul(x, g)
                val = E.mul(sec[x], lg)
                if y not in sec:
                    sec[y] = val
                    queue.append(y)
                elif sec[y] != val:
                    ok = False
                    break
        if not ok:
            continue
        if all(sec[G.mul(a, b)] == E.mul(sec[a], sec[b]) for a in G.elements for b in G.elements) \
                and all(ext.projection[sec[g]] == g for g in G.elements):
            return True, tuple(sec[g] for g in G.elements)
    return False, None


# ---------------------------------------------------------------- local-global


def local_global_kernel(family, cls):
    """True iff cls is nonzero but restricts to zero on every subgroup in the family.

    Family entries are subgroups, or (subgroup, degree) pairs whose degree must
    match the class.
    """
    subs = []
    for item in family:
        if isinstance(item, tuple) and len(item) == 2 and isinstance(item[1], int) \
                and not isinstance(item[0], int):
            H, n = item
            if n != cls.degree:
                raise BadInput("family degree does not match the class")
        else:
            H = item
        subs.append(_as_subgroup(cls.group, H))
    if is_zero_class(cls):
        return False
    for H in subs:
        res = restriction(cls, H)
        if not class_group(res).is_zero(res):
            return False
    return True


def local_global_witnesses(G, A, family, n=2):
    """All coordinate vectors of classes in H^n(G, A) detected by local_global_kernel."""
    Hn = cohomology_group(G, A, n)
    out = []
    for coords in Hn.all_coordinates():
        if any(coords):
            cls = Hn.class_from_coordinates(coords)
            if local_global_kernel(family, cls):
                out.append(coords)
    return Hn, out
