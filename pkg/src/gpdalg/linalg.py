"""Exact linear algebra over the supported coefficient rings.

Row spans are kept in a canonical form that makes equality of subspaces a
plain tuple comparison: reduced row echelon form over the fields, Howell
form over Z/n.  The Howell form extends echelon form with annihilator
rows, so that every span element whose leading zeros reach position j is
generated by the basis rows with pivots at or beyond j; membership can
then be tested by straight reduction.
"""

from __future__ import annotations

from math import gcd

from .errors import (
    BoundExceededError,
    DimensionMismatchError,
    NonFreeQuotientError,
    RingMismatchError,
    UnsupportedRingError,
)
from .rings import ScalarRing


class Matrix:
    """Dense matrix over a ScalarRing, entries stored row-major."""

    __slots__ = ("ring", "nrows", "ncols", "entries")

    def __init__(self, ring: ScalarRing, nrows: int, ncols: int, entries):
        entries = tuple(ring.coerce(x) for x in entries)
        if len(entries) != nrows * ncols:
            raise DimensionMismatchError(
                "expected %d entries, got %d" % (nrows * ncols, len(entries)))
        self.ring = ring
        self.nrows = nrows
        self.ncols = ncols
        self.entries = entries

    @classmethod
    def from_rows(cls, ring, rows):
        rows = [tuple(r) for r in rows]
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        flat = []
        for r in rows:
            if len(r) != ncols:
                raise DimensionMismatchError("ragged rows")
            flat.extend(r)
        return cls(ring, nrows, ncols, flat)

    @classmethod
    def identity(cls, ring, n):
        return cls(ring, n, n,
                   [ring.one if i == j else ring.zero
                    for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, ring, nrows, ncols):
        return cls(ring, nrows, ncols, [ring.zero] * (nrows * ncols))

    def at(self, i, j):
        return self.entries[i * self.ncols + j]

    def row(self, i) -> tuple:
        return self.entries[i * self.ncols:(i + 1) * self.ncols]

    def rows(self) -> list[tuple]:
        return [self.row(i) for i in range(self.nrows)]

    def col(self, j) -> tuple:
        return tuple(self.entries[i * self.ncols + j] for i in range(self.nrows))

    def transpose(self):
        return Matrix(self.ring, self.ncols, self.nrows,
                      [self.at(i, j) for j in range(self.ncols)
                       for i in range(self.nrows)])

    def apply(self, vec) -> tuple:
        """Matrix times column vector."""
        if len(vec) != self.ncols:
            raise DimensionMismatchError("vector length %d, need %d"
                                         % (len(vec), self.ncols))
        R = self.ring
        out = []
        for i in range(self.nrows):
            acc = R.zero
            base = i * self.ncols
            for j in range(self.ncols):
                acc = R.add(acc, R.mul(self.entries[base + j], vec[j]))
            out.append(acc)
        return tuple(out)

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.ring != other.ring:
            raise RingMismatchError("matrix product over different rings")
        if self.ncols != other.nrows:
            raise DimensionMismatchError("shapes %dx%d and %dx%d"
                                         % (self.nrows, self.ncols,
                                            other.nrows, other.ncols))
        R = self.ring
        out = []
        ocols = [other.col(j) for j in range(other.ncols)]
        for i in range(self.nrows):
            ri = self.row(i)
            for c in ocols:
                acc = R.zero
                for a, b in zip(ri, c):
                    acc = R.add(acc, R.mul(a, b))
                out.append(acc)
        return Matrix(R, self.nrows, other.ncols, out)

    def __add__(self, other):
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise DimensionMismatchError("matrix sum shape mismatch")
        R = self.ring
        return Matrix(R, self.nrows, self.ncols,
                      [R.add(a, b) for a, b in zip(self.entries, other.entries)])

    def scale(self, c):
        R = self.ring
        c = R.coerce(c)
        return Matrix(R, self.nrows, self.ncols,
                      [R.mul(c, x) for x in self.entries])

    def is_zero(self) -> bool:
        z = self.ring.zero
        return all(x == z for x in self.entries)

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.ring == other.ring \
            and self.nrows == other.nrows and self.ncols == other.ncols \
            and self.entries == other.entries

    def __hash__(self):
        return hash((self.ring, self.nrows, self.ncols, self.entries))

    def __repr__(self):
        return "Matrix(%d x %d over %s)" % (self.nrows, self.ncols,
                                            self.ring.spec_string())

    def to_lists(self):
        return [list(self.row(i)) for i in range(self.nrows)]


def vec_add(ring, u, v):
    return tuple(ring.add(a, b) for a, b in zip(u, v))

def vec_sub(ring, u, v):
    return tuple(ring.sub(a, b) for a, b in zip(u, v))

def vec_scale(ring, c, v):
    return tuple(ring.mul(c, x) for x in v)

def vec_is_zero(ring, v):
    return all(x == ring.zero for x in v)


def _first_nonzero(row, zero):
    for j, x in enumerate(row):
        if x != zero:
            return j
    return None


def _rref(ring, rows, width):
    """Reduced row echelon form over a field; returns tuple of nonzero rows."""
    work = [list(ring.coerce_vector(r)) for r in rows]
    pivots = []
    r = 0
    for col in range(width):
        src = None
        for i in range(r, len(work)):
            if work[i][col] != ring.zero:
                src = i
                break
        if src is None:
            continue
        work[r], work[src] = work[src], work[r]
        inv = ring.inv(work[r][col])
        work[r] = [ring.mul(inv, x) for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][col] != ring.zero:
                c = work[i][col]
                work[i] = [ring.sub(x, ring.mul(c, y))
                           for x, y in zip(work[i], work[r])]
        pivots.append(col)
        r += 1
    return tuple(tuple(row) for row in work[:r])


def _egcd(a, b):
    """g, s, t with s*a + t*b = g = gcd(a, b)."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def _unit_mult(a, n):
    """Smallest unit u of Z/n with u*a == gcd(a, n) mod n."""
    g = gcd(a, n)
    for u in range(1, n):
        if gcd(u, n) == 1 and (u * a) % n == g:
            return u
    raise AssertionError("no unit multiplier for %d mod %d" % (a, n))


def _howell(n, rows, width):
    """Howell form of the span of `rows` inside (Z/n)^width."""
    pivots: dict[int, list] = {}

    def insert(row):
        # Returns True when the pivot table changed.
        changed = False
        row = [x % n for x in row]
        while True:
            j = _first_nonzero(row, 0)
            if j is None:
                return changed
            if j not in pivots:
                pivots[j] = row
                return True
            p = pivots[j]
            a, b = p[j], row[j]
            g, s, t = _egcd(a, b)
            new = [(s * x + t * y) % n for x, y in zip(p, row)]
            rem = [((-(b // g)) * x + (a // g) * y) % n for x, y in zip(p, row)]
            # [new; rem] is a unimodular image of [p; row]: span preserved.
            if new != p:
                pivots[j] = new
                changed = True
            row = rem

    for r in rows:
        insert(list(r))

    # Saturate: annihilator multiples of every pivot row must already lie
    # in the span of the later rows (the Howell property).
    while True:
        changed = False
        for j in sorted(pivots):
            p = pivots[j]
            ann = n // gcd(p[j], n)
            if ann % n == 0:
                continue
            if insert([(ann * x) % n for x in p]):
                changed = True
        if not changed:
            break

    # Normalize pivots to divisors of n, then reduce entries above pivots.
    for j in pivots:
        u = _unit_mult(pivots[j][j], n)
        if u != 1:
            pivots[j] = [(u * x) % n for x in pivots[j]]
    cols = sorted(pivots)
    for j in cols:
        d = pivots[j][j]
        for j2 in cols:
            if j2 >= j:
                break
            q = pivots[j2]
            c = q[j] // d
            if c:
                pivots[j2] = [(x - c * y) % n for x, y in zip(q, pivots[j])]
    return tuple(tuple(pivots[j]) for j in cols)


def canonical_rows(ring, rows, width):
    """Canonical basis (RREF or Howell) of the span of `rows`."""
    rows = [r for r in rows if not vec_is_zero(ring, ring.coerce_vector(r))]
    if ring.is_field:
        return _rref(ring, rows, width)
    return _howell(ring.modulus, [list(ring.coerce_vector(r)) for r in rows],
                   width)


class Subspace:
    """Submodule of R^ambient_dim held by its canonical row basis."""

    __slots__ = ("ring", "ambient_dim", "basis", "pivots")

    def __init__(self, ring, ambient_dim, generators):
        self.ring = ring
        self.ambient_dim = ambient_dim
        for gvec in generators:
            if len(gvec) != ambient_dim:
                raise DimensionMismatchError(
                    "generator of length %d in ambient dimension %d"
                    % (len(gvec), ambient_dim))
        self.basis = canonical_rows(ring, generators, ambient_dim)
        self.pivots = tuple(_first_nonzero(b, ring.zero) for b in self.basis)

    @classmethod
    def _trusted(cls, ring, ambient_dim, basis):
        # Caller promises `basis` is already canonical.
        obj = cls.__new__(cls)
        obj.ring = ring
        obj.ambient_dim = ambient_dim
        obj.basis = tuple(tuple(r) for r in basis)
        obj.pivots = tuple(_first_nonzero(b, ring.zero) for b in obj.basis)
        return obj

    @classmethod
    def zero(cls, ring, ambient_dim):
        return cls._trusted(ring, ambient_dim, ())

    @classmethod
    def full(cls, ring, ambient_dim):
        if ring.is_field:
            return cls._trusted(ring, ambient_dim,
                                Matrix.identity(ring, ambient_dim).rows())
        return cls(ring, ambient_dim, Matrix.identity(ring, ambient_dim).rows())

    @property
    def num_rows(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self == Subspace.full(self.ring, self.ambient_dim)

    def reduce(self, v) -> tuple:
        """Normal form of v modulo this span; zero iff v is a member."""
        R = self.ring
        v = list(R.coerce_vector(v))
        if len(v) != self.ambient_dim:
            raise DimensionMismatchError("vector length %d in dimension %d"
                                         % (len(v), self.ambient_dim))
        for b, p in zip(self.basis, self.pivots):
            if v[p] == R.zero:
                continue
            if R.is_field:
                c = v[p]
            else:
                c = v[p] // b[p]
                if c == 0:
                    continue
            for j in range(p, self.ambient_dim):
                v[j] = R.sub(v[j], R.mul(c, b[j]))
        return tuple(v)

    def contains(self, v) -> bool:
        return vec_is_zero(self.ring, self.reduce(v))

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(b) for b in other.basis)

    def coordinates(self, v) -> tuple | None:
        """Coefficients of v in the basis, or None if v is outside.

        Requires all pivots to be units (always true over a field), so
        that the span is free with the basis rows as a free basis.
        """
        R = self.ring
        if any(b[p] != R.one for b, p in zip(self.basis, self.pivots)):
            raise NonFreeQuotientError("basis has non-unit pivots")
        v = R.coerce_vector(v)
        coords = tuple(v[p] for p in self.pivots)
        acc = [R.zero] * self.ambient_dim
        for c, b in zip(coords, self.basis):
            for j in range(self.ambient_dim):
                acc[j] = R.add(acc[j], R.mul(c, b[j]))
        if tuple(acc) != v:
            return None
        return coords

    def join(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        return Subspace(self.ring, self.ambient_dim, self.basis + other.basis)

    def element_count(self) -> int:
        """Number of elements of the span (finite rings only)."""
        R = self.ring
        if R.size is None:
            raise UnsupportedRingError("infinite ring")
        if R.is_field:
            return R.size ** len(self.basis)
        n = R.modulus
        count = 1
        for b, p in zip(self.basis, self.pivots):
            count *= n // b[p]
        return count

    def _check_compatible(self, other):
        if self.ring != other.ring:
            raise RingMismatchError("subspaces over different rings")
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatchError("ambient dimensions differ")

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.ring == other.ring \
            and self.ambient_dim == other.ambient_dim \
            and self.basis == other.basis

    def __hash__(self):
        return hash((self.ring, self.ambient_dim, self.basis))

    def __repr__(self):
        return "Subspace(dim %d in R^%d over %s)" % (
            len(self.basis), self.ambient_dim, self.ring.spec_string())


def mat_kernel(mat: Matrix) -> Subspace:
    """Kernel {x : mat @ x = 0} as a subspace of R^ncols.

    Computed from the canonical form of the transpose augmented with an
    identity block; rows whose left block vanished record the vanishing
    combinations.  Over Z/n the Howell property guarantees completeness.
    """
    R = mat.ring
    m, k = mat.nrows, mat.ncols
    aug = []
    for i in range(k):
        row = list(mat.col(i))
        row.extend(R.one if t == i else R.zero for t in range(k))
        aug.append(row)
    can = canonical_rows(R, aug, m + k)
    kern = [row[m:] for row in can
            if all(x == R.zero for x in row[:m])]
    return Subspace(R, k, kern)


def left_kernel(mat: Matrix) -> Subspace:
    """{x : x @ mat = 0} as a subspace of R^nrows."""
    return mat_kernel(mat.transpose())


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    """Intersection, via the kernel of the stacked basis system."""
    a._check_compatible(b)
    R = a.ring
    if a.is_zero() or b.is_zero():
        return Subspace.zero(R, a.ambient_dim)
    stacked = Matrix.from_rows(R, list(a.basis) + list(b.basis))
    kern = left_kernel(stacked)
    na = len(a.basis)
    gens = []
    for coeffs in kern.basis:
        v = [R.zero] * a.ambient_dim
        for c, row in zip(coeffs[:na], a.basis):
            for j in range(a.ambient_dim):
                v[j] = R.add(v[j], R.mul(c, row[j]))
        gens.append(tuple(v))
    return Subspace(R, a.ambient_dim, gens)


def subspace_equal(a: Subspace, b: Subspace) -> bool:
    a._check_compatible(b)
    return a.basis == b.basis


def subspace_contains(a: Subspace, b: Subspace) -> bool:
    """Whether a contains b."""
    return a.contains_subspace(b)


def subspace_preimage(mat: Matrix, target: Subspace) -> Subspace:
    """{x : mat @ x lies in target}, a subspace of R^ncols."""
    R = mat.ring
    if target.ring != R:
        raise RingMismatchError("preimage target over a different ring")
    if target.ambient_dim != mat.nrows:
        raise DimensionMismatchError("target lives in R^%d, map lands in R^%d"
                                     % (target.ambient_dim, mat.nrows))
    if target.is_zero():
        return mat_kernel(mat)
    k = mat.ncols
    s = len(target.basis)
    rows = []
    for i in range(mat.nrows):
        row = list(mat.row(i))
        row.extend(R.neg(target.basis[t][i]) for t in range(s))
        rows.append(row)
    kern = mat_kernel(Matrix.from_rows(R, rows))
    gens = [c[:k] for c in kern.basis]
    return Subspace(R, k, gens)


def enumerate_subspaces(ring, dim, bound=1 << 20):
    """All subspaces of F_q^dim, one canonical RREF basis each."""
    from itertools import combinations, product

    if not ring.is_field or ring.size is None:
        raise UnsupportedRingError("subspace enumeration needs a finite field")
    if ring.size ** dim > bound:
        raise BoundExceededError("state space %d^%d exceeds bound %d"
                                 % (ring.size, dim, bound))
    elems = list(ring.elements())
    for k in range(dim + 1):
        for pivs in combinations(range(dim), k):
            free = [(i, j) for i in range(k) for j in range(dim)
                    if j > pivs[i] and j not in pivs]
            for vals in product(elems, repeat=len(free)):
                rows = [[ring.zero] * dim for _ in range(k)]
                for i in range(k):
                    rows[i][pivs[i]] = ring.one
                for (i, j), v in zip(free, vals):
                    rows[i][j] = v
                yield Subspace._trusted(ring, dim, [tuple(r) for r in rows])
