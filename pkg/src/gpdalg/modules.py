"""Finite-rank modules over groupoid algebras and group algebras.

A Rep assigns to every arrow a square matrix, multiplicatively on the
composition table and with the unit indicators summing to the identity.
The matrices live over ``matrix_ring``, which normally equals the
coefficient ring of the algebra.  Over Z/p^k a module killed by p is
carried with matrices over the residue field F_p instead, the scalar
action factoring through reduction mod p; annihilators are then lifted
back to the ambient ring.
"""

from __future__ import annotations

from itertools import product
import random

from .algebra import AlgebraElement, left_mult_matrix
from .errors import (
    BoundExceededError,
    ConstructionError,
    DimensionMismatchError,
    GroupoidMismatchError,
    NonFreeQuotientError,
    RingMismatchError,
    UnsupportedRingError,
)
from .groupoid import FiniteGroupoid, IsotropyGroup, group_groupoid
from .ideals import Ideal
from .linalg import Matrix, Subspace, canonical_rows, mat_kernel
from .rings import PrimeField, RationalField, ScalarRing

DEFAULT_BOUND = 1 << 20


class Rep:
    """Module over a groupoid algebra, one matrix per arrow."""

    __slots__ = ("groupoid", "ring", "matrix_ring", "dim", "mats")

    def __init__(self, groupoid: FiniteGroupoid, ring: ScalarRing, dim: int,
                 mats, matrix_ring: ScalarRing | None = None):
        matrix_ring = matrix_ring if matrix_ring is not None else ring
        mats = tuple(mats)
        if len(mats) != groupoid.n_arrows:
            raise DimensionMismatchError("need one matrix per arrow")
        for M in mats:
            if M.ring != matrix_ring or M.nrows != dim or M.ncols != dim:
                raise DimensionMismatchError("matrix of wrong shape or ring")
        self.groupoid = groupoid
        self.ring = ring
        self.matrix_ring = matrix_ring
        self.dim = dim
        self.mats = mats

    def act(self, f: AlgebraElement) -> Matrix:
        """Matrix of the element f on this module."""
        MR = self.matrix_ring
        out = Matrix.zeros(MR, self.dim, self.dim)
        for a, c in enumerate(f.coeffs):
            c = MR.coerce(c)
            if c != MR.zero:
                out = out + self.mats[a].scale(c)
        return out

    def action_mats(self):
        return self.mats

    def __repr__(self):
        return "Rep(dim %d over %s)" % (self.dim, self.ring.spec_string())

    def to_json_dict(self) -> dict:
        d = {"ring": self.ring.spec_string(), "dim": self.dim,
             "matrices": [[str(x) for x in M.entries] for M in self.mats]}
        if self.matrix_ring != self.ring:
            d["matrix_ring"] = self.matrix_ring.spec_string()
        return d


class IsotropyModule:
    """Module over the group algebra of an isotropy group."""

    __slots__ = ("group", "ring", "matrix_ring", "dim", "mats")

    def __init__(self, group: IsotropyGroup, ring: ScalarRing, dim: int,
                 mats, matrix_ring: ScalarRing | None = None):
        matrix_ring = matrix_ring if matrix_ring is not None else ring
        mats = tuple(mats)
        if len(mats) != group.order:
            raise DimensionMismatchError("need one matrix per group element")
        for M in mats:
            if M.ring != matrix_ring or M.nrows != dim or M.ncols != dim:
                raise DimensionMismatchError("matrix of wrong shape or ring")
        self.group = group
        self.ring = ring
        self.matrix_ring = matrix_ring
        self.dim = dim
        self.mats = mats

    def action_mats(self):
        return self.mats

    def sort_key(self):
        return (self.dim, tuple(M.entries for M in self.mats))

    def __repr__(self):
        return "IsotropyModule(dim %d over %s, group order %d)" % (
            self.dim, self.ring.spec_string(), self.group.order)


def module_validate(N: IsotropyModule) -> list[str]:
    """Group-module axioms: multiplicative, identity, invertible."""
    errs = []
    G = N.group
    if not matrix_invertible_all(N.mats):
        errs.append("some group element acts non-invertibly")
    ident = Matrix.identity(N.matrix_ring, N.dim)
    if N.mats[G.identity] != ident:
        errs.append("identity element does not act as identity")
    for i in range(G.order):
        for j in range(G.order):
            if N.mats[i] * N.mats[j] != N.mats[G.table[i][j]]:
                errs.append("action not multiplicative at (%d,%d)" % (i, j))
    return errs


def matrix_invertible(M: Matrix) -> bool:
    if M.nrows != M.ncols:
        return False
    can = canonical_rows(M.ring, M.rows(), M.ncols)
    return list(can) == Matrix.identity(M.ring, M.ncols).rows()


def matrix_invertible_all(mats) -> bool:
    return all(matrix_invertible(M) for M in mats)


def rep_validate(rho: Rep) -> list[str]:
    """Multiplicativity on the composition table and unitarity."""
    errs = []
    g = rho.groupoid
    MR = rho.matrix_ring
    zero = Matrix.zeros(MR, rho.dim, rho.dim)
    for a in range(g.n_arrows):
        for b in range(g.n_arrows):
            prod = rho.mats[a] * rho.mats[b]
            if g.composable(a, b):
                if prod != rho.mats[g.comp[(a, b)]]:
                    errs.append("rho(e_%d) rho(e_%d) != rho(e_%d%d)"
                                % (a, b, a, b))
            elif prod != zero:
                errs.append("rho(e_%d) rho(e_%d) != 0 on non-composable pair"
                            % (a, b))
    total = Matrix.zeros(MR, rho.dim, rho.dim)
    for e in rho.groupoid.unit_of:
        total = total + rho.mats[e]
    if total != Matrix.identity(MR, rho.dim):
        errs.append("unit indicators do not sum to the identity")
    return errs


def regular_rep(g: FiniteGroupoid, ring: ScalarRing) -> Rep:
    """Left multiplication on the arrow basis."""
    mats = [left_mult_matrix(g, ring, a) for a in range(g.n_arrows)]
    return Rep(g, ring, g.n_arrows, mats)


def isotropy_rep(N: IsotropyModule) -> tuple[FiniteGroupoid, Rep]:
    """The module N as a Rep of the one-object groupoid of its group."""
    gg = group_groupoid([list(r) for r in N.group.table])
    return gg, Rep(gg, N.ring, N.dim, N.mats, matrix_ring=N.matrix_ring)


def _residue_lift_space(ring: ScalarRing, residue: ScalarRing,
                        space: Subspace) -> Subspace:
    """Preimage in ring^n of a subspace of (ring/p)^n under reduction."""
    n = space.ambient_dim
    p = residue.modulus
    rows = [ring.coerce_vector(row) for row in space.basis]
    for i in range(n):
        e = [ring.zero] * n
        e[i] = ring.coerce(p)
        rows.append(tuple(e))
    return Subspace(ring, n, rows)


def annihilator(rho: Rep) -> Ideal:
    """Two-sided ideal of algebra elements acting as zero."""
    g = rho.groupoid
    MR = rho.matrix_ring
    m = g.n_arrows
    rows = []
    for i in range(rho.dim):
        for j in range(rho.dim):
            rows.append(tuple(rho.mats[a].at(i, j) for a in range(m)))
    if not rows:
        kern = Subspace.full(MR, m)
    else:
        kern = mat_kernel(Matrix.from_rows(MR, rows))
    if MR == rho.ring:
        space = kern
    else:
        space = _residue_lift_space(rho.ring, MR, kern)
    return Ideal(g, rho.ring, space, check=True)


def module_annihilator_space(N: IsotropyModule) -> Subspace:
    """Annihilator of N inside the group algebra, over the ambient ring."""
    _, rho = isotropy_rep(N)
    return annihilator(rho).space


def spin(module, seeds) -> Subspace:
    """Smallest action-invariant subspace containing the seed vectors."""
    MR = module.matrix_ring
    S = Subspace(MR, module.dim, [tuple(v) for v in seeds])
    mats = module.action_mats()
    while True:
        new_rows = []
        for v in S.basis:
            for M in mats:
                w = M.apply(v)
                if not S.contains(w):
                    new_rows.append(w)
        if not new_rows:
            return S
        S = S.join(Subspace(MR, module.dim, new_rows))


def is_invariant(module, space: Subspace) -> bool:
    return all(space.contains(M.apply(v))
               for v in space.basis for M in module.action_mats())


def _all_vectors(ring, dim):
    return product(list(ring.elements()), repeat=dim)


def is_simple(module, bound: int = DEFAULT_BOUND) -> bool:
    """No invariant subspace other than zero and the whole space.

    Finite coefficient rings are handled exhaustively: the spin of every
    nonzero vector must be everything.  Over the rationals the same test
    runs on the basis vectors and their pairwise sums only, which settles
    the module classes this library constructs.
    """
    MR = module.matrix_ring
    d = module.dim
    if d == 0:
        return False
    full = Subspace.full(MR, d)
    if MR.size is None:
        seeds = []
        for i in range(d):
            e = [MR.zero] * d
            e[i] = MR.one
            seeds.append(tuple(e))
        for i in range(d):
            for j in range(i + 1, d):
                v = list(seeds[i])
                v[j] = MR.one
                seeds.append(tuple(v))
        return all(spin(module, [v]) == full for v in seeds)
    if MR.size ** d > bound:
        raise BoundExceededError("state space %d^%d exceeds bound %d"
                                 % (MR.size, d, bound))
    zero = tuple([MR.zero] * d)
    for v in _all_vectors(MR, d):
        if v == zero:
            continue
        if spin(module, [v]) != full:
            return False
    return True


def hom_space(A, B) -> Subspace:
    """Intertwiners B <- A, flattened row-major into R^(dimB*dimA)."""
    if isinstance(A, Rep) is not isinstance(B, Rep):
        raise GroupoidMismatchError("hom between different module kinds")
    if isinstance(A, Rep) and A.groupoid != B.groupoid:
        raise GroupoidMismatchError("reps of different groupoids")
    if isinstance(A, IsotropyModule) and A.group != B.group:
        raise GroupoidMismatchError("modules over different groups")
    if A.ring != B.ring:
        raise RingMismatchError("modules over different rings")
    if A.matrix_ring != B.matrix_ring:
        raise RingMismatchError("modules with different matrix rings")
    MR = A.matrix_ring
    d1, d2 = A.dim, B.dim
    nunk = d2 * d1
    rows = []
    for M1, M2 in zip(A.action_mats(), B.action_mats()):
        for i in range(d2):
            for j in range(d1):
                row = [MR.zero] * nunk
                for k in range(d1):
                    row[i * d1 + k] = MR.add(row[i * d1 + k], M1.at(k, j))
                for k in range(d2):
                    row[k * d1 + j] = MR.sub(row[k * d1 + j], M2.at(i, k))
                rows.append(tuple(row))
    if not rows:
        return Subspace.full(MR, nunk)
    return mat_kernel(Matrix.from_rows(MR, rows))


def is_isomorphic(A, B, bound: int = DEFAULT_BOUND, seed: int = 0) -> bool:
    """Search the hom space for an invertible intertwiner.

    Exhaustive over finite coefficient rings; over the rationals, 64
    seeded random integer combinations plus the hom basis itself.
    """
    if A.dim != B.dim:
        return False
    if A.dim == 0:
        return True
    if A.matrix_ring != B.matrix_ring:
        return False
    H = hom_space(A, B)
    h = len(H.basis)
    if h == 0:
        return False
    MR = A.matrix_ring
    d = A.dim

    def as_matrix(flat):
        return Matrix(MR, d, d, flat)

    if MR.size is not None:
        if MR.size ** h > bound:
            raise BoundExceededError("hom space %d^%d exceeds bound %d"
                                     % (MR.size, h, bound))
        for coeffs in product(list(MR.elements()), repeat=h):
            flat = [MR.zero] * (d * d)
            for c, b in zip(coeffs, H.basis):
                if c == MR.zero:
                    continue
                for t in range(d * d):
                    flat[t] = MR.add(flat[t], MR.mul(c, b[t]))
            if matrix_invertible(as_matrix(flat)):
                return True
        return False
    for b in H.basis:
        if matrix_invertible(as_matrix(list(b))):
            return True
    rng = random.Random(seed)
    for _ in range(64):
        coeffs = [MR.coerce(rng.randint(-9, 9)) for _ in range(h)]
        flat = [MR.zero] * (d * d)
        for c, b in zip(coeffs, H.basis):
            for t in range(d * d):
                flat[t] = MR.add(flat[t], MR.mul(c, b[t]))
        if matrix_invertible(as_matrix(flat)):
            return True
    return False


def all_submodules(module, bound: int = DEFAULT_BOUND) -> list[Subspace]:
    """Every invariant subspace: cyclic spins closed under joins."""
    MR = module.matrix_ring
    d = module.dim
    if MR.size is None:
        raise UnsupportedRingError("submodule enumeration needs finite "
                                   "coefficients")
    if MR.size ** d > bound:
        raise BoundExceededError("state space %d^%d exceeds bound %d"
                                 % (MR.size, d, bound))
    zero = tuple([MR.zero] * d)
    found = {Subspace.zero(MR, d)}
    for v in _all_vectors(MR, d):
        if v != zero:
            found.add(spin(module, [v]))
    queue = list(found)
    while queue:
        S = queue.pop()
        for T in list(found):
            U = S.join(T)
            if U not in found:
                found.add(U)
                queue.append(U)
    return sorted(found, key=lambda s: (s.num_rows, s.basis))


def maximal_submodule(module, bound: int = DEFAULT_BOUND) -> Subspace:
    """A maximal proper invariant subspace; zero when the module is simple.

    Deterministic tie-break: largest element count, then the
    lexicographically least canonical basis.
    """
    d = module.dim
    if d == 0:
        raise ConstructionError("the zero module has no maximal submodule")
    MR = module.matrix_ring
    full = Subspace.full(MR, d)
    proper = [S for S in all_submodules(module, bound) if S != full]
    maximal = [S for S in proper
               if not any(T != S and T.contains_subspace(S) for T in proper)]
    maximal.sort(key=lambda s: (-s.element_count(), s.basis))
    return maximal[0]


def rep_submodule(rho: Rep, space: Subspace) -> Rep:
    """The invariant subspace as a module in its own basis coordinates."""
    if not is_invariant(rho, space):
        raise ConstructionError("subspace is not invariant")
    MR = rho.matrix_ring
    k = len(space.basis)
    mats = []
    for M in rho.mats:
        cols = []
        for b in space.basis:
            coords = space.coordinates(M.apply(b))
            if coords is None:
                raise ConstructionError("subspace is not invariant")
            cols.append(coords)
        mats.append(Matrix(MR, k, k,
                           [cols[j][i] for i in range(k) for j in range(k)]))
    return Rep(rho.groupoid, rho.ring, k, mats, matrix_ring=MR)


def rep_quotient(rho: Rep, space: Subspace) -> Rep:
    """Quotient by an invariant subspace, in complement coordinates.

    Needs the subspace basis to have unit pivots so the quotient is free;
    always true over a field.
    """
    MR = rho.matrix_ring
    if any(b[p] != MR.one for b, p in zip(space.basis, space.pivots)):
        raise NonFreeQuotientError("quotient by a non-unit-pivot subspace")
    if not is_invariant(rho, space):
        raise ConstructionError("subspace is not invariant")
    piv = set(space.pivots)
    free = [j for j in range(rho.dim) if j not in piv]
    k = len(free)

    def proj(v):
        red = space.reduce(v)
        return tuple(red[j] for j in free)

    mats = []
    for M in rho.mats:
        cols = []
        for j in free:
            e = [MR.zero] * rho.dim
            e[j] = MR.one
            cols.append(proj(M.apply(e)))
        mats.append(Matrix(MR, k, k,
                           [cols[j][i] for i in range(k) for j in range(k)]))
    return Rep(rho.groupoid, rho.ring, k, mats, matrix_ring=MR)


def quotient_algebra_rep(g: FiniteGroupoid, ring: ScalarRing,
                         ideal: Ideal) -> Rep:
    """Left action of the algebra on its quotient by the ideal."""
    if ideal.groupoid != g or ideal.ring != ring:
        raise GroupoidMismatchError("ideal of a different algebra")
    return rep_quotient(regular_rep(g, ring), ideal.space)


# ---------------------------------------------------------------------------
# standard modules over an isotropy group

def trivial_module(G: IsotropyGroup, ring: ScalarRing) -> IsotropyModule:
    one = Matrix.identity(ring, 1)
    return IsotropyModule(G, ring, 1, [one] * G.order)


def sign_module(G: IsotropyGroup, ring: ScalarRing) -> IsotropyModule:
    """Generator of an even-order cyclic group acts by -1."""
    gen = G.generator_if_cyclic()
    if gen is None or G.order % 2 != 0:
        raise ConstructionError("sign module needs a cyclic group of even "
                                "order")
    mats = [None] * G.order
    x, s = G.identity, ring.one
    for _ in range(G.order):
        mats[x] = Matrix(ring, 1, 1, [s])
        x = G.table[x][gen]
        s = ring.neg(s)
    return IsotropyModule(G, ring, 1, mats)


def regular_module(G: IsotropyGroup, ring: ScalarRing) -> IsotropyModule:
    k = G.order
    mats = []
    for i in range(k):
        ent = [ring.zero] * (k * k)
        for j in range(k):
            ent[G.table[i][j] * k + j] = ring.one
        mats.append(Matrix(ring, k, k, ent))
    return IsotropyModule(G, ring, k, mats)


# ---------------------------------------------------------------------------
# simple modules of a group algebra

def _poly_divmod_int(num, den):
    """Divide integer polynomials (low-first coefficients), den monic."""
    num = list(num)
    d = len(den) - 1
    q = [0] * max(len(num) - d, 1)
    while len(num) - 1 >= d and any(num):
        k = len(num) - 1 - d
        c = num[-1]
        q[k] = c
        for i, dc in enumerate(den):
            num[k + i] -= c * dc
        while num and num[-1] == 0:
            num.pop()
    return q, num


def _cyclotomic(d: int) -> list[int]:
    """Coefficients (low first) of the d-th cyclotomic polynomial."""
    poly = [-1] + [0] * (d - 1) + [1]
    for e in range(1, d):
        if d % e == 0:
            poly, rem = _poly_divmod_int(poly, _cyclotomic(e))
            if any(rem):
                raise AssertionError("cyclotomic division left a remainder")
    return poly


def _companion(ring, poly) -> Matrix:
    d = len(poly) - 1
    ent = [ring.zero] * (d * d)
    for i in range(1, d):
        ent[i * d + (i - 1)] = ring.one
    for i in range(d):
        ent[i * d + (d - 1)] = ring.neg(ring.coerce(poly[i]))
    return Matrix(ring, d, d, ent)


def _rep_to_isotropy(G: IsotropyGroup, rho: Rep) -> IsotropyModule:
    return IsotropyModule(G, rho.ring, rho.dim, rho.mats,
                          matrix_ring=rho.matrix_ring)


def simple_modules_group(G: IsotropyGroup, ring: ScalarRing,
                         bound: int = DEFAULT_BOUND) -> list[IsotropyModule]:
    """All simple modules of the group algebra, up to isomorphism.

    Prime fields: split a composition series of the regular module.
    Rationals: one simple per cyclotomic factor of x^n - 1 (cyclic groups).
    Z/p^k: the simples of the residue field group algebra, with scalars
    acting through reduction mod p.
    """
    if ring.kind == "modular":
        residue = ring.residue_field()
        if residue is None:
            raise UnsupportedRingError(
                "simple modules over Z/n need a prime power modulus")
        base = simple_modules_group(G, residue, bound=bound)
        return [IsotropyModule(G, ring, N.dim, N.mats, matrix_ring=residue)
                for N in base]

    if isinstance(ring, RationalField):
        gen = G.generator_if_cyclic()
        if gen is None:
            raise UnsupportedRingError(
                "rational simple modules implemented for cyclic groups only")
        n = G.order
        sims = []
        for d in range(1, n + 1):
            if n % d != 0:
                continue
            C = _companion(ring, _cyclotomic(d))
            mats = [None] * n
            x, P = G.identity, Matrix.identity(ring, C.nrows)
            for _ in range(n):
                mats[x] = P
                x = G.table[x][gen]
                P = P * C
            sims.append(IsotropyModule(G, ring, C.nrows, mats))
        sims.sort(key=lambda N: N.sort_key())
        return sims

    if not ring.is_field or ring.size is None:
        raise UnsupportedRingError("unsupported coefficient ring %s"
                                   % ring.spec_string())
    gg = group_groupoid([list(r) for r in G.table])
    sims: list[Rep] = []
    stack = [regular_rep(gg, ring)]
    while stack:
        M = stack.pop()
        if M.dim == 0:
            continue
        N = maximal_submodule(M, bound)
        top = rep_quotient(M, N)
        if not any(is_isomorphic(top, S, bound) for S in sims):
            sims.append(top)
        if not N.is_zero():
            stack.append(rep_submodule(M, N))
    out = [_rep_to_isotropy(G, S) for S in sims]
    out.sort(key=lambda N: N.sort_key())
    return out
