"""Finite groupoids with explicit composition tables.

Arrows are integer ids.  ``src[a]`` and ``tgt[a]`` give the domain and
range objects of arrow ``a``; ``comp`` maps exactly the composable pairs
(a, b) with src[a] == tgt[b] to the composite arrow "a after b".
"""

from __future__ import annotations

from .errors import ConstructionError, GroupoidMismatchError, NotABisectionError


class FiniteGroupoid:
    __slots__ = ("n_objects", "src", "tgt", "unit_of", "comp", "inv",
                 "_by_src_tgt")

    def __init__(self, n_objects, arrows, units, comp, inv):
        self.n_objects = n_objects
        self.src = tuple(d for d, _ in arrows)
        self.tgt = tuple(r for _, r in arrows)
        self.unit_of = tuple(units)
        self.comp = dict(comp)
        self.inv = tuple(inv)
        by = {}
        for a in range(len(self.src)):
            by.setdefault((self.src[a], self.tgt[a]), []).append(a)
        self._by_src_tgt = by

    @property
    def n_arrows(self) -> int:
        return len(self.src)

    def d(self, a: int) -> int:
        return self.src[a]

    def r(self, a: int) -> int:
        return self.tgt[a]

    def unit(self, u: int) -> int:
        return self.unit_of[u]

    def composable(self, a: int, b: int) -> bool:
        return self.src[a] == self.tgt[b]

    def compose(self, a: int, b: int) -> int:
        return self.comp[(a, b)]

    def arrows_from_to(self, v: int, w: int) -> tuple:
        """Arrows with domain v and range w, ascending ids."""
        return tuple(self._by_src_tgt.get((v, w), ()))

    def loops_at(self, u: int) -> tuple:
        return self.arrows_from_to(u, u)

    def arrows_into(self, u: int) -> tuple:
        return tuple(a for a in range(self.n_arrows) if self.tgt[a] == u)

    def __eq__(self, other):
        return isinstance(other, FiniteGroupoid) \
            and self.n_objects == other.n_objects \
            and self.src == other.src and self.tgt == other.tgt \
            and self.unit_of == other.unit_of \
            and self.comp == other.comp and self.inv == other.inv

    def __hash__(self):
        return hash((self.n_objects, self.src, self.tgt, self.unit_of,
                     tuple(sorted(self.comp.items())), self.inv))

    def __repr__(self):
        return "FiniteGroupoid(%d objects, %d arrows)" % (self.n_objects,
                                                          self.n_arrows)

    def to_json_dict(self) -> dict:
        return {
            "objects": self.n_objects,
            "arrows": [{"d": self.src[a], "r": self.tgt[a]}
                       for a in range(self.n_arrows)],
            "units": list(self.unit_of),
            "comp": [[a, b, c] for (a, b), c in sorted(self.comp.items())],
            "inv": list(self.inv),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "FiniteGroupoid":
        try:
            arrows = [(int(a["d"]), int(a["r"])) for a in data["arrows"]]
            comp = {(int(a), int(b)): int(c) for a, b, c in data["comp"]}
            return cls(int(data["objects"]), arrows,
                       [int(u) for u in data["units"]], comp,
                       [int(i) for i in data["inv"]])
        except (KeyError, TypeError, ValueError) as exc:
            raise ConstructionError("malformed groupoid data: %s" % exc)


def validate(g: FiniteGroupoid) -> list[str]:
    """All axiom violations, as human-readable strings.  Empty means valid."""
    errs = []
    n, m = g.n_objects, g.n_arrows

    def obj_ok(u):
        return 0 <= u < n

    def arr_ok(a):
        return 0 <= a < m

    for a in range(m):
        if not obj_ok(g.src[a]):
            errs.append("arrow %d has out-of-range domain %d" % (a, g.src[a]))
        if not obj_ok(g.tgt[a]):
            errs.append("arrow %d has out-of-range range %d" % (a, g.tgt[a]))
    if len(g.unit_of) != n:
        errs.append("expected %d units, got %d" % (n, len(g.unit_of)))
        return errs
    if len(g.inv) != m:
        errs.append("expected %d inverse entries, got %d" % (m, len(g.inv)))
        return errs
    for u in range(n):
        e = g.unit_of[u]
        if not arr_ok(e):
            errs.append("unit of object %d is out of range: %d" % (u, e))
        elif g.src[e] != u or g.tgt[e] != u:
            errs.append("unit arrow %d of object %d is not a loop at it" % (e, u))
    for a in range(m):
        if not arr_ok(g.inv[a]):
            errs.append("inverse of arrow %d out of range" % a)

    for (a, b), c in g.comp.items():
        if not (arr_ok(a) and arr_ok(b) and arr_ok(c)):
            errs.append("composition entry (%d,%d)->%d out of range" % (a, b, c))
            continue
        if g.src[a] != g.tgt[b]:
            errs.append("composition defined on non-composable pair (%d,%d)"
                        % (a, b))
        elif g.src[c] != g.src[b] or g.tgt[c] != g.tgt[a]:
            errs.append("composite of (%d,%d) has wrong endpoints" % (a, b))
    for a in range(m):
        for b in range(m):
            if g.src[a] == g.tgt[b] and (a, b) not in g.comp:
                errs.append("missing composition for composable pair (%d,%d)"
                            % (a, b))
    if errs:
        return errs

    for a in range(m):
        e_r, e_d = g.unit_of[g.tgt[a]], g.unit_of[g.src[a]]
        if g.comp[(e_r, a)] != a:
            errs.append("left unit law fails at arrow %d" % a)
        if g.comp[(a, e_d)] != a:
            errs.append("right unit law fails at arrow %d" % a)
        ia = g.inv[a]
        if g.src[ia] != g.tgt[a] or g.tgt[ia] != g.src[a]:
            errs.append("inverse of arrow %d has wrong endpoints" % a)
        else:
            if g.comp[(a, ia)] != g.unit_of[g.tgt[a]]:
                errs.append("a . inv(a) is not a unit for arrow %d" % a)
            if g.comp[(ia, a)] != g.unit_of[g.src[a]]:
                errs.append("inv(a) . a is not a unit for arrow %d" % a)
    for a in range(m):
        for b in range(m):
            if g.src[a] != g.tgt[b]:
                continue
            ab = g.comp[(a, b)]
            for c in range(m):
                if g.src[b] != g.tgt[c]:
                    continue
                if g.comp[(ab, c)] != g.comp[(a, g.comp[(b, c)])]:
                    errs.append("associativity fails on (%d,%d,%d)" % (a, b, c))
    return errs


# ---------------------------------------------------------------------------
# constructors

def pair_groupoid(n: int) -> FiniteGroupoid:
    """Objects 0..n-1, one arrow (i, j) : j -> i for every ordered pair."""
    if n < 1:
        raise ConstructionError("pair groupoid needs n >= 1")
    idx = {}
    arrows = []
    for i in range(n):
        for j in range(n):
            idx[(i, j)] = len(arrows)
            arrows.append((j, i))  # domain j, range i
    units = [idx[(u, u)] for u in range(n)]
    comp = {}
    for i in range(n):
        for j in range(n):
            for k in range(n):
                comp[(idx[(i, j)], idx[(j, k)])] = idx[(i, k)]
    inv = [idx[(j, i)] for (i, j) in
           [(a // n, a % n) for a in range(n * n)]]
    return FiniteGroupoid(n, arrows, units, comp, inv)


def validate_group_table(table) -> list[str]:
    """Group axioms for a multiplication table table[a][b] = ab."""
    k = len(table)
    errs = []
    for row in table:
        if len(row) != k:
            return ["table is not square"]
    for row in table:
        for x in row:
            if not 0 <= x < k:
                return ["table entry %r out of range" % (x,)]
    ident = None
    for e in range(k):
        if all(table[e][x] == x and table[x][e] == x for x in range(k)):
            ident = e
            break
    if ident is None:
        errs.append("no identity element")
        return errs
    for a in range(k):
        if not any(table[a][b] == ident and table[b][a] == ident
                   for b in range(k)):
            errs.append("element %d has no inverse" % a)
    for a in range(k):
        for b in range(k):
            for c in range(k):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    errs.append("associativity fails at (%d,%d,%d)" % (a, b, c))
                    return errs
    return errs


def group_identity(table) -> int:
    k = len(table)
    for e in range(k):
        if all(table[e][x] == x and table[x][e] == x for x in range(k)):
            return e
    raise ConstructionError("no identity element in group table")


def cyclic_table(k: int) -> list[list[int]]:
    return [[(a + b) % k for b in range(k)] for a in range(k)]


def group_groupoid(table) -> FiniteGroupoid:
    """One object; arrows are the group elements, composition the table."""
    errs = validate_group_table(table)
    if errs:
        raise ConstructionError("bad group table: %s" % errs[0])
    k = len(table)
    ident = group_identity(table)
    comp = {(a, b): table[a][b] for a in range(k) for b in range(k)}
    inv = [next(b for b in range(k)
                if table[a][b] == ident and table[b][a] == ident)
           for a in range(k)]
    return FiniteGroupoid(1, [(0, 0)] * k, [ident], comp, inv)


def action_groupoid(table, perms) -> FiniteGroupoid:
    """Action groupoid of a group acting on points 0..X-1.

    ``perms[gel]`` is the image tuple of the point set under the group
    element ``gel``; arrow (gel, x) runs from x to perms[gel][x] and the
    arrow id is gel * X + x.
    """
    errs = validate_group_table(table)
    if errs:
        raise ConstructionError("bad group table: %s" % errs[0])
    k = len(table)
    if len(perms) != k:
        raise ConstructionError("need one permutation per group element")
    npts = len(perms[0])
    ident = group_identity(table)
    for p in perms:
        if len(p) != npts or sorted(p) != list(range(npts)):
            raise ConstructionError("action entry %r is not a permutation" % (p,))
    if tuple(perms[ident]) != tuple(range(npts)):
        raise ConstructionError("identity element must act trivially")
    for a in range(k):
        for b in range(k):
            for x in range(npts):
                if perms[a][perms[b][x]] != perms[table[a][b]][x]:
                    raise ConstructionError(
                        "not a left action at elements (%d,%d), point %d"
                        % (a, b, x))
    def aid(gel, x):
        return gel * npts + x
    arrows = [(x, perms[gel][x]) for gel in range(k) for x in range(npts)]
    units = [aid(ident, x) for x in range(npts)]
    comp = {}
    for a in range(k):
        for b in range(k):
            for x in range(npts):
                comp[(aid(a, perms[b][x]), aid(b, x))] = aid(table[a][b], x)
    ginv = [next(b for b in range(k)
                 if table[a][b] == ident and table[b][a] == ident)
            for a in range(k)]
    inv = [aid(ginv[gel], perms[gel][x])
           for gel in range(k) for x in range(npts)]
    return FiniteGroupoid(npts, arrows, units, comp, inv)


def disjoint_union(g1: FiniteGroupoid, g2: FiniteGroupoid) -> FiniteGroupoid:
    """Side-by-side union; objects and arrows of g2 are shifted up."""
    no, na = g1.n_objects, g1.n_arrows
    arrows = [(g1.src[a], g1.tgt[a]) for a in range(na)]
    arrows += [(g2.src[a] + no, g2.tgt[a] + no) for a in range(g2.n_arrows)]
    units = list(g1.unit_of) + [e + na for e in g2.unit_of]
    comp = dict(g1.comp)
    for (a, b), c in g2.comp.items():
        comp[(a + na, b + na)] = c + na
    inv = list(g1.inv) + [i + na for i in g2.inv]
    return FiniteGroupoid(no + g2.n_objects, arrows, units, comp, inv)


# ---------------------------------------------------------------------------
# orbits and isotropy

class UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


class OrbitPartition:
    """Partition of the object set into connected components."""

    __slots__ = ("orbit_of", "classes", "representatives")

    def __init__(self, orbit_of, classes):
        self.orbit_of = tuple(orbit_of)
        self.classes = tuple(tuple(c) for c in classes)
        self.representatives = tuple(c[0] for c in self.classes)

    def orbit_containing(self, u: int) -> tuple:
        return self.classes[self.orbit_of[u]]

    def __eq__(self, other):
        return isinstance(other, OrbitPartition) and self.classes == other.classes

    def __repr__(self):
        return "OrbitPartition(%s)" % (self.classes,)


def orbits(g: FiniteGroupoid) -> OrbitPartition:
    """Connected components of the object set, via union-find over arrows.

    Classes are sorted, indexed by their smallest member."""
    uf = UnionFind(g.n_objects)
    for a in range(g.n_arrows):
        uf.union(g.src[a], g.tgt[a])
    groups = {}
    for u in range(g.n_objects):
        groups.setdefault(uf.find(u), []).append(u)
    classes = [sorted(groups[root]) for root in sorted(groups)]
    orbit_of = [0] * g.n_objects
    for i, cls in enumerate(classes):
        for u in cls:
            orbit_of[u] = i
    return OrbitPartition(orbit_of, classes)


class IsotropyGroup:
    """The group of loops at a base object, with its own element indexing."""

    __slots__ = ("base", "arrow_ids", "table", "inv", "identity", "index_of")

    def __init__(self, base, arrow_ids, table, inv, identity):
        self.base = base
        self.arrow_ids = tuple(arrow_ids)
        self.table = tuple(tuple(r) for r in table)
        self.inv = tuple(inv)
        self.identity = identity
        self.index_of = {a: i for i, a in enumerate(self.arrow_ids)}

    @property
    def order(self) -> int:
        return len(self.arrow_ids)

    def element_order(self, i: int) -> int:
        k, x = 1, i
        while x != self.identity:
            x = self.table[x][i]
            k += 1
        return k

    def generator_if_cyclic(self) -> int | None:
        for i in range(self.order):
            if self.element_order(i) == self.order:
                return i
        return None

    def __eq__(self, other):
        return isinstance(other, IsotropyGroup) and self.base == other.base \
            and self.arrow_ids == other.arrow_ids and self.table == other.table

    def __repr__(self):
        return "IsotropyGroup(base %d, order %d)" % (self.base, self.order)


def isotropy(g: FiniteGroupoid, u: int) -> IsotropyGroup:
    """Loop group at object u; elements indexed by ascending arrow id."""
    if not 0 <= u < g.n_objects:
        raise ConstructionError("object %d out of range" % u)
    loops = list(g.loops_at(u))
    pos = {a: i for i, a in enumerate(loops)}
    table = [[pos[g.comp[(a, b)]] for b in loops] for a in loops]
    inv = [pos[g.inv[a]] for a in loops]
    identity = pos[g.unit_of[u]]
    return IsotropyGroup(u, loops, table, inv, identity)


# ---------------------------------------------------------------------------
# local bisections

class LocalBisection:
    """Arrow subset on which domain and range are both injective."""

    __slots__ = ("arrows",)

    def __init__(self, arrows):
        self.arrows = tuple(sorted(set(arrows)))

    def __eq__(self, other):
        return isinstance(other, LocalBisection) and self.arrows == other.arrows

    def __hash__(self):
        return hash(self.arrows)

    def __repr__(self):
        return "LocalBisection(%s)" % (self.arrows,)


def is_bisection(g: FiniteGroupoid, arrows) -> bool:
    arrows = list(arrows)
    ds = [g.src[a] for a in arrows]
    rs = [g.tgt[a] for a in arrows]
    return len(set(ds)) == len(ds) and len(set(rs)) == len(rs)


def bisection(g: FiniteGroupoid, arrows) -> LocalBisection:
    if not is_bisection(g, arrows):
        raise NotABisectionError("domain or range not injective on %r"
                                 % (sorted(arrows),))
    return LocalBisection(arrows)


def bisection_mul(g: FiniteGroupoid, U: LocalBisection,
                  V: LocalBisection) -> LocalBisection:
    """UV = all composites of a composable pair from U x V."""
    prod = [g.comp[(a, b)] for a in U.arrows for b in V.arrows
            if g.src[a] == g.tgt[b]]
    return bisection(g, prod)


def bisection_inv(g: FiniteGroupoid, U: LocalBisection) -> LocalBisection:
    return bisection(g, [g.inv[a] for a in U.arrows])


def identity_bisection(g: FiniteGroupoid) -> LocalBisection:
    return LocalBisection(g.unit_of)


def all_bisections(g: FiniteGroupoid) -> list[LocalBisection]:
    """Every local bisection, the empty one included."""
    out = []

    def extend(start, chosen, used_d, used_r):
        out.append(LocalBisection(chosen))
        for a in range(start, g.n_arrows):
            if g.src[a] in used_d or g.tgt[a] in used_r:
                continue
            extend(a + 1, chosen + [a],
                   used_d | {g.src[a]}, used_r | {g.tgt[a]})

    extend(0, [], set(), set())
    return out


def relabel_arrows(g: FiniteGroupoid, perm) -> FiniteGroupoid:
    """Groupoid with arrow a renamed perm[a]; used for invariance checks."""
    if sorted(perm) != list(range(g.n_arrows)):
        raise ConstructionError("not a permutation of the arrows")
    arrows = [None] * g.n_arrows
    inv = [None] * g.n_arrows
    for a in range(g.n_arrows):
        arrows[perm[a]] = (g.src[a], g.tgt[a])
        inv[perm[a]] = perm[g.inv[a]]
    units = [perm[e] for e in g.unit_of]
    comp = {(perm[a], perm[b]): perm[c] for (a, b), c in g.comp.items()}
    return FiniteGroupoid(g.n_objects, arrows, units, comp, inv)
