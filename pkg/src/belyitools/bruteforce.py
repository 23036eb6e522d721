"""Cohomology orders by direct enumeration, independent of the Smith-form engine.

H^0 counts fixed points.  H^1 counts crossed homomorphisms (determined by
their values on generators) against principal ones.  H^2 uses cocycles
normalized along a spanning tree of the Cayley graph: every class contains
such a cocycle, and two of them differ by d c with c determined by its values
on the generators.  The tree-normalized cocycles are counted by backtracking
over their free values f(g, s), s a generator, checking each instance of the
cocycle identity as soon as its inputs are known.  Then

    |H^2| = |Z_tree| * |Z^1| / |A|^(number of generators).
"""

from collections import deque
from itertools import product

# Modules are handled through lookup tables on element indices.


class _Tables:
    def __init__(self, G, A):
        self.G = G
        elems = A.elements
        self.n_a = len(elems)
        idx = {a: i for i, a in enumerate(elems)}
        self.zero = idx[A.zero]
        self.add = [[idx[A.add(a, b)] for b in elems] for a in elems]
        self.neg = [idx[A.neg(a)] for a in elems]
        self.act = [[idx[A.act(g, a)] for a in elems] for g in G.elements]

    def sub(self, a, b):
        return self.add[a][self.neg[b]]


def h0_order(G, A):
    return sum(1 for a in A.elements if all(A.act(g, a) == a for g in G.elements))


def _crossed_homs(G, T):
    """All crossed homomorphisms as tuples of values, by generator images."""
    gens = G.generators
    out = []
    for vals in product(range(T.n_a), repeat=len(gens)):
        f = {G.identity: T.zero}
        queue = deque([G.identity])
        ok = True
        while queue and ok:
            x = queue.popleft()
            for s, v in zip(gens, vals):
                y = G.mul(x, s)
                val = T.add[f[x]][T.act[x][v]]
                if y not in f:
                    f[y] = val
                    queue.append(y)
                elif f[y] != val:
                    ok = False
                    break
        if ok:
            # the extension rule on generators makes f a crossed homomorphism
            # on all pairs; check it anyway
            if all(f[G.mul(g, h)] == T.add[f[g]][T.act[g][f[h]]]
                   for g in G.elements for h in G.elements):
                out.append(tuple(f[g] for g in G.elements))
    return out


def h1_order(G, A):
    T = _Tables(G, A)
    z1 = _crossed_homs(G, T)
    b1 = {tuple(T.sub(T.act[g][a], a) for g in G.elements) for a in range(T.n_a)}
    assert b1 <= set(z1)
    assert len(z1) % len(b1) == 0
    return len(z1) // len(b1)


def h2_order(G, A, return_stats=False):
    T = _Tables(G, A)
    gens = list(G.generators)
    one = G.identity
    n = G.order
    if not gens:
        return (1, {}) if return_stats else 1
    # spanning tree by right multiplication
    parent = {one: None}
    order = [one]
    queue = deque([one])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = G.mul(x, s)
            if y not in parent:
                parent[y] = (x, s)
                order.append(y)
                queue.append(y)
    tree = {v for v in parent.values() if v is not None}
    # free values: f(g, s) with g != 1 and (g, s) not a tree edge
    var_of = {}
    for g in G.elements:
        for s in gens:
            if g != one and (g, s) not in tree:
                var_of[(g, s)] = len(var_of)
    nvars = len(var_of)
    # f(g, x) as a recipe: ('var', i) | ('zero',) | ('derived', (g h, s), (g, h), (h, s))
    gen_set = set(gens)
    support = {}
    recipe = {}
    cols = [x for x in order if x != one]
    for g in G.elements:
        for x in G.elements:
            if g == one or x == one:
                recipe[(g, x)] = None
                support[(g, x)] = frozenset()
    for x in cols:
        for g in G.elements:
            if g == one:
                continue
            if x in gen_set and parent[x] == (one, x):
                v = var_of.get((g, x))
                recipe[(g, x)] = ("var", v) if v is not None else None
                support[(g, x)] = frozenset([v]) if v is not None else frozenset()
            else:
                h, s = parent[x]
                a, b, c = (G.mul(g, h), s), (g, h), (h, s)
                recipe[(g, x)] = ("derived", a, b, c)
                support[(g, x)] = support[a] | support[b] | support[c]
    # remaining identities: f(g, hs) = f(gh, s) + f(g, h) - g f(h, s) for non-tree (h, s)
    checks = []
    for h in G.elements:
        if h == one:
            continue
        for s in gens:
            if (h, s) in tree:
                continue
            for g in G.elements:
                if g == one:
                    continue
                entries = ((g, G.mul(h, s)), (G.mul(g, h), s), (g, h), (h, s))
                sup = frozenset().union(*(support[e] for e in entries))
                checks.append((g, entries, sup))
    # variable order: greedily close as many checks as possible
    pos = {}
    remaining = set(range(nvars))
    pending = [c[2] for c in checks]
    while remaining:
        best = min(remaining, key=lambda v: (min((len(sp - pos.keys() - {v})
                                                  for sp in pending if v in sp), default=99), v))
        pos[best] = len(pos)
        remaining.discard(best)
    level_of = lambda sup: max((pos[v] for v in sup), default=-1)
    # entries to evaluate and checks to run after assigning each level
    eval_at = [[] for _ in range(nvars + 1)]
    entry_order = [(g, x) for x in cols for g in G.elements if g != one]
    for e in entry_order:
        eval_at[level_of(support[e]) + 1].append(e)
    check_at = [[] for _ in range(nvars + 1)]
    for g, entries, sup in checks:
        check_at[level_of(sup) + 1].append((g, entries))
    var_at = sorted(pos, key=pos.get)
    values = {}
    for key, r in recipe.items():
        if r is None:
            values[key] = T.zero
    assignment = [0] * nvars
    add, act, neg = T.add, T.act, T.neg
    stats = {"nodes": 0, "variables": nvars}

    def evaluate(level):
        for e in eval_at[level]:
            r = recipe[e]
            if r is None:
                values[e] = T.zero
            elif r[0] == "var":
                values[e] = assignment[r[1]]
            else:
                _, a, b, c = r
                g = e[0]
                values[e] = add[add[values[a]][values[b]]][neg[act[g][values[c]]]]
        for g, (lhs, a, b, c) in check_at[level]:
            if values[lhs] != add[add[values[a]][values[b]]][neg[act[g][values[c]]]]:
                return False
        return True

    count = 0
    if not evaluate(0):
        count = 0
    else:
        stack = [(0, 0)]   # (level index, next value to try)
        while stack:
            lvl, val = stack.pop()
            if val >= T.n_a:
                continue
            stack.append((lvl, val + 1))
            assignment[var_at[lvl]] = val
            stats["nodes"] += 1
            if not evaluate(lvl + 1):
                continue
            if lvl + 1 == nvars:
                count += 1
            else:
                stack.append((lvl + 1, 0))
    z1 = len(_crossed_homs(G, T))
    total = count * z1
    denom = T.n_a ** len(gens)
    assert total % denom == 0, "tree-normalized count is inconsistent"
    result = total // denom
    return (result, stats) if return_stats else result


def cohomology_order(G, A, n):
    return (h0_order, h1_order, h2_order)[n](G, A)


def is_coboundary_2(G, A, values):
    """Whether a 2-cocycle (dict on all pairs) is d c for some 1-cochain c; exhaustive.

    c(1) is forced to f(1,1) = d c(1, 1), and c on generators determines c along a spanning
    tree, so |A|^(generators) candidates are tried.
    """
    gens = list(G.generators)
    one = G.identity
    c0 = values[(one, one)]
    for vals in product(A.elements, repeat=len(gens)):
        c = {one: c0}
        for s, v in zip(gens, vals):
            c[s] = v
        queue = deque([one] + gens)
        seen = set(queue)
        ok = True
        # d c (h, s) = h c(s) - c(hs) + c(h) must equal f(h, s)
        while queue and ok:
            h = queue.popleft()
            for s in gens:
                y = G.mul(h, s)
                want = A.sub(A.add(A.act(h, c[s]), c[h]), values[(h, s)])
                if y not in c:
                    c[y] = want
                elif c[y] != want:
                    ok = False
                    break
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        if not ok or len(c) < G.order:
            continue
        if all(values[(g, h)] == A.add(A.sub(A.act(g, c[h]), c[G.mul(g, h)]), c[g])
               for g in G.elements for h in G.elements):
            return True
    return False
