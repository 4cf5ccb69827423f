"""The convolution algebra of a finite groupoid.

Elements are coefficient vectors indexed by arrows.  The product runs
over the composition table: (f * h)(c) collects f(a) h(b) over all
factorizations c = a b.  The algebra is unital because the object set is
finite; the unit is the indicator of the unit arrows.
"""

from __future__ import annotations

from .errors import GroupoidMismatchError, RingMismatchError
from .groupoid import FiniteGroupoid, LocalBisection
from .linalg import Matrix
from .rings import ScalarRing


class AlgebraElement:
    __slots__ = ("groupoid", "ring", "coeffs")

    def __init__(self, groupoid: FiniteGroupoid, ring: ScalarRing, coeffs):
        coeffs = tuple(ring.coerce(c) for c in coeffs)
        if len(coeffs) != groupoid.n_arrows:
            raise RingMismatchError("coefficient vector has wrong length")
        self.groupoid = groupoid
        self.ring = ring
        self.coeffs = coeffs

    def _check(self, other):
        if self.groupoid != other.groupoid:
            raise GroupoidMismatchError("elements of different groupoid algebras")
        if self.ring != other.ring:
            raise RingMismatchError("elements over different rings")

    def __add__(self, other):
        self._check(other)
        R = self.ring
        return AlgebraElement(self.groupoid, R,
                              [R.add(a, b) for a, b in
                               zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._check(other)
        R = self.ring
        return AlgebraElement(self.groupoid, R,
                              [R.sub(a, b) for a, b in
                               zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        R = self.ring
        return AlgebraElement(self.groupoid, R,
                              [R.neg(a) for a in self.coeffs])

    def scale(self, c):
        R = self.ring
        c = R.coerce(c)
        return AlgebraElement(self.groupoid, R,
                              [R.mul(c, a) for a in self.coeffs])

    def __rmul__(self, c):
        return self.scale(c)

    def __mul__(self, other):
        if not isinstance(other, AlgebraElement):
            return self.scale(other)
        return convolve(self, other)

    def star(self):
        return involution(self)

    def support(self) -> tuple:
        z = self.ring.zero
        return tuple(a for a, c in enumerate(self.coeffs) if c != z)

    def is_zero(self) -> bool:
        z = self.ring.zero
        return all(c == z for c in self.coeffs)

    def __eq__(self, other):
        return isinstance(other, AlgebraElement) \
            and self.groupoid == other.groupoid and self.ring == other.ring \
            and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def __repr__(self):
        return "AlgebraElement(%s over %s)" % (list(self.coeffs),
                                               self.ring.spec_string())


def zero_element(g: FiniteGroupoid, ring: ScalarRing) -> AlgebraElement:
    return AlgebraElement(g, ring, [ring.zero] * g.n_arrows)


def basis_element(g: FiniteGroupoid, ring: ScalarRing, a: int) -> AlgebraElement:
    co = [ring.zero] * g.n_arrows
    co[a] = ring.one
    return AlgebraElement(g, ring, co)


def indicator(g: FiniteGroupoid, ring: ScalarRing, arrows) -> AlgebraElement:
    """Indicator function of an arrow subset (e.g. a local bisection)."""
    if isinstance(arrows, LocalBisection):
        arrows = arrows.arrows
    co = [ring.zero] * g.n_arrows
    for a in arrows:
        co[a] = ring.one
    return AlgebraElement(g, ring, co)


def unit_element(g: FiniteGroupoid, ring: ScalarRing) -> AlgebraElement:
    return indicator(g, ring, g.unit_of)


def convolve(f: AlgebraElement, h: AlgebraElement) -> AlgebraElement:
    f._check(h)
    g, R = f.groupoid, f.ring
    out = [R.zero] * g.n_arrows
    zero = R.zero
    for (a, b), c in g.comp.items():
        fa = f.coeffs[a]
        if fa == zero:
            continue
        hb = h.coeffs[b]
        if hb == zero:
            continue
        out[c] = R.add(out[c], R.mul(fa, hb))
    return AlgebraElement(g, R, out)


def involution(f: AlgebraElement) -> AlgebraElement:
    """f*(a) = f(inv a); an anti-automorphism of the algebra."""
    g = f.groupoid
    return AlgebraElement(g, f.ring,
                          [f.coeffs[g.inv[a]] for a in range(g.n_arrows)])


def structure_constants(g: FiniteGroupoid) -> dict:
    """Basis products: (a, b) -> c means e_a e_b = e_c; absent pairs vanish."""
    return dict(g.comp)


def left_mult_matrix(g: FiniteGroupoid, ring: ScalarRing, a: int) -> Matrix:
    """Matrix of f -> e_a * f on the arrow basis."""
    m = g.n_arrows
    ent = [ring.zero] * (m * m)
    for (x, b), c in g.comp.items():
        if x == a:
            ent[c * m + b] = ring.one
    return Matrix(ring, m, m, ent)


def right_mult_matrix(g: FiniteGroupoid, ring: ScalarRing, a: int) -> Matrix:
    """Matrix of f -> f * e_a on the arrow basis."""
    m = g.n_arrows
    ent = [ring.zero] * (m * m)
    for (b, x), c in g.comp.items():
        if x == a:
            ent[c * m + b] = ring.one
    return Matrix(ring, m, m, ent)
