"""The Legendre curve y^2 = x(x-1)(x-lambda): group law, division polynomials,
multiplication maps on the x-line, point counts and supersingularity.

The x-only division polynomial psihat_m is psi_m for odd m and psi_m/(2y)
for even m, so every consumer works on P^1 = C/(+-1).  All formulas are for
the cubic x^3 - (1+lambda)x^2 + lambda*x and are cross-checked against the
brute-force group-law oracle in the tests rather than trusted.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .fields import (
    QQ,
    FFElement,
    FieldError,
    FiniteField,
    QuadExtField,
    factorize,
    is_prime,
    rational_sqrt,
)
from .poly import Poly, PolyRing, RationalFunction, poly_gcd


class _InfinityType:
    """The point at infinity of P^1 (and the x of the curve's identity)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"


INF = _InfinityType()

POINT_COUNT_BOUND = 10**6


class CurveError(ValueError):
    pass


class CurvePoint:
    """Affine point or the identity; always validated against its curve."""

    __slots__ = ("curve", "x", "y")

    def __init__(self, curve, x=None, y=None):
        self.curve = curve
        self.x = x
        self.y = y

    @property
    def is_infinity(self):
        return self.x is None

    def __eq__(self, other):
        if not isinstance(other, CurvePoint):
            return NotImplemented
        if self.is_infinity or other.is_infinity:
            return self.is_infinity and other.is_infinity
        return self.curve == other.curve and self.x == other.x and self.y == other.y

    def __hash__(self):
        if self.is_infinity:
            return hash("O")
        return hash((self.x, self.y))

    def __neg__(self):
        if self.is_infinity:
            return self
        return CurvePoint(self.curve, self.x, -self.y)

    def __repr__(self):
        if self.is_infinity:
            return "O"
        return f"({self.x}, {self.y})"

    def to_json(self):
        from .serialize import value_to_json

        if self.is_infinity:
            return "inf"
        return {"x": value_to_json(self.x), "y": value_to_json(self.y)}


class LegendreCurve:
    """y^2 = x(x-1)(x-lambda) over Q or a finite field, characteristic != 2."""

    def __init__(self, base, lam):
        lam = base.coerce(lam)
        if getattr(base, "char", 0) == 2:
            raise CurveError("characteristic 2 is excluded")
        zero, one = base.zero, base.one
        if lam == zero or lam == one:
            raise CurveError("lambda must avoid 0 and 1")
        self.base = base
        self.lam = lam
        # cubic x^3 + a x^2 + b x + c
        self.a = -(one + lam)
        self.b = lam
        self.c = zero
        self.infinity = CurvePoint(self)
        self._counts = {}

    def f(self, x):
        """The cubic x(x-1)(x-lam)."""
        one = self.base.one
        return x * (x - one) * (x - self.lam)

    def f_poly(self):
        ring = PolyRing(self.base, "x")
        return ring.from_coeffs([self.base.zero, self.b, self.a, self.base.one])

    def point(self, x, y) -> CurvePoint:
        x = self.base.coerce(x)
        y = self.base.coerce(y)
        if y * y != self.f(x):
            raise CurveError(f"({x}, {y}) is not on the curve")
        return CurvePoint(self, x, y)

    def __eq__(self, other):
        return isinstance(other, LegendreCurve) and other.base == self.base and other.lam == self.lam

    def __hash__(self):
        return hash(("legendre", self.base, self.lam))

    def __repr__(self):
        return f"C_lambda({self.lam}) over {self.base!r}"

    # -- group law

    def add(self, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
        if P.is_infinity:
            return Q
        if Q.is_infinity:
            return P
        if P.x == Q.x:
            if P.y == -Q.y:
                return self.infinity
            return self.double(P)
        s = (Q.y - P.y) / (Q.x - P.x)
        x3 = s * s - self.a - P.x - Q.x
        y3 = s * (P.x - x3) - P.y
        return CurvePoint(self, x3, y3)

    def double(self, P: CurvePoint) -> CurvePoint:
        if P.is_infinity:
            return P
        zero = self.base.zero
        if P.y == zero:
            return self.infinity
        x = P.x
        # f'(x) = 3x^2 + 2a x + b
        s = (3 * (x * x) + 2 * (self.a * x) + self.b) / (2 * P.y)
        x3 = s * s - self.a - x - x
        y3 = s * (x - x3) - P.y
        return CurvePoint(self, x3, y3)

    def neg(self, P: CurvePoint) -> CurvePoint:
        return -P

    def scalar_mul(self, m: int, P: CurvePoint) -> CurvePoint:
        if m < 0:
            return -self.scalar_mul(-m, P)
        R = self.infinity
        Q = P
        while m:
            if m & 1:
                R = self.add(R, Q)
            Q = self.double(Q)
            m >>= 1
        return R

    # -- fibers of the double cover

    def branch_xs(self):
        return (self.base.zero, self.base.one, self.lam)

    def lift_x(self, z, extend=False):
        """Points of pi^-1(z); one point at the four branch points, else two.

        With extend=True a non-square f(z) lifts into the quadratic
        extension adjoining its square root (finite fields only).
        """
        if z is INF:
            return [self.infinity]
        z = self.base.coerce(z) if self.base != QQ else QQ.coerce(z)
        if z in self.branch_xs():
            return [CurvePoint(self, z, self.base.zero)]
        fz = self.f(z)
        if self.base == QQ:
            r = rational_sqrt(fz)
            if r is None:
                raise CurveError(f"f({z}) is not a rational square; no rational lift")
            return [self.point(z, r), self.point(z, -r)]
        r = self.base.sqrt(fz)
        if r is not None:
            return [CurvePoint(self, z, r), CurvePoint(self, z, -r)]
        if not extend:
            raise CurveError(f"f({z}) is not a square in {self.base!r}")
        ext = QuadExtField(self.base, fz)
        curve_ext = LegendreCurve(ext, ext.coerce(self.lam))
        t = ext.gen()
        zc = ext.coerce(z)
        return [CurvePoint(curve_ext, zc, t), CurvePoint(curve_ext, zc, -t)]

    # -- counting and orders

    def count_and_trace(self, bound=POINT_COUNT_BOUND):
        """Brute-force (#C(F_q), trace) by enumerating x; the counting oracle."""
        base = self.base
        if not getattr(base, "is_finite", False) or isinstance(base, QuadExtField):
            raise CurveError("count_and_trace needs an enumerable finite base field")
        if base.order > bound:
            raise CurveError(f"field size {base.order} exceeds the counting bound {bound}")
        if "count" not in self._counts:
            squares = set()
            for e in base:
                squares.add(e * e)
            zero, one = base.zero, base.one
            lam = self.lam
            n = 1
            for x in base:
                fx = x * (x - one) * (x - lam)
                if fx == zero:
                    n += 1
                elif fx in squares:
                    n += 2
            self._counts["count"] = n
        n = self._counts["count"]
        trace = base.order + 1 - n
        assert trace * trace <= 4 * base.order, "Hasse bound violated; counting bug"
        return n, trace

    def group_order(self):
        """#C over the curve's own field; quadratic extensions use the trace recurrence."""
        base = self.base
        if isinstance(base, QuadExtField):
            inner = base.base
            if not self.lam.b.is_zero():
                raise CurveError("lambda must come from the base of the quadratic extension")
            inner_curve = LegendreCurve(inner, self.lam.a)
            n, a = inner_curve.count_and_trace()
            return extension_order(inner.order, a, 2)
        n, _ = self.count_and_trace()
        return n

    def torsion_order(self, P: CurvePoint) -> int:
        """Exact order of P in the group over the field of its coordinates."""
        if P.is_infinity:
            return 1
        n = self.group_order()
        order = n
        for ell in factorize(n):
            while order % ell == 0 and self.scalar_mul(order // ell, P).is_infinity:
                order //= ell
        return order

    def random_point(self, rng):
        """A uniform-ish affine point, by rejection on x."""
        base = self.base
        while True:
            x = base.element([rng.randrange(base.p) for _ in range(base.k)])
            fx = self.f(x)
            r = base.sqrt(fx)
            if r is not None:
                y = r if rng.random() < 0.5 else -r
                return CurvePoint(self, x, y)

    def to_json(self):
        from .serialize import value_to_json

        return {"field": self.base.to_json() if self.base != QQ else "QQ", "lambda": value_to_json(self.lam)}


def extension_order(q: int, trace: int, n: int) -> int:
    """#C(F_{q^n}) from #C(F_q) via the Frobenius trace recurrence."""
    a_prev, a_cur = 2, trace
    for _ in range(n - 1):
        a_prev, a_cur = a_cur, trace * a_cur - q * a_prev
    return q**n + 1 - a_cur


def curve_make(base, lam) -> LegendreCurve:
    return LegendreCurve(base, lam)


def group_law(P: CurvePoint, Q: CurvePoint, op: str):
    curve = P.curve
    if op == "add":
        return curve.add(P, Q)
    if op == "neg":
        return -P
    if op == "double":
        return curve.double(P)
    raise ValueError(f"unknown group op {op!r}")


def scalar_mul(m: int, P: CurvePoint) -> CurvePoint:
    return P.curve.scalar_mul(m, P)


# ---------------------------------------------------------------------------
# division polynomials, x-only form


class PsiHat:
    """Memoized x-only division polynomial family for y^2 = x(x-1)(x-lam).

    Works over any commutative domain: x may be a polynomial generator
    (symbolic) or a scalar (pointwise evaluation of the same recurrence).
    """

    def __init__(self, x, lam, one):
        self.one = one
        self.x = x
        b2 = -4 * (one + lam)
        b4 = 2 * lam
        b8 = -(lam * lam)
        f = x * (x - one) * (x - lam)
        self.f4 = 4 * f
        self._memo = {
            0: one - one,
            1: one,
            2: one,
            3: 3 * x**4 + b2 * x**3 + 3 * (b4 * x**2) + b8,
            4: 2 * x**6 + b2 * x**5 + 5 * (b4 * x**4) + 10 * (b8 * x**2) + (b2 * b8) * x + b4 * b8,
        }

    def get(self, m: int):
        if m < 0:
            raise ValueError("division polynomial index must be >= 0")
        memo = self._memo
        if m in memo:
            return memo[m]
        n, rem = divmod(m, 2)
        if rem == 0:
            v = self.get(n) * (self.get(n + 2) * self.get(n - 1) ** 2 - self.get(n - 2) * self.get(n + 1) ** 2)
        else:
            t1 = self.get(n + 2) * self.get(n) ** 3
            t2 = self.get(n - 1) * self.get(n + 1) ** 3
            f4sq = self.f4 * self.f4
            if n % 2 == 0:
                v = f4sq * t1 - t2
            else:
                v = t1 - f4sq * t2
        memo[m] = v
        return v


SYMBOLIC_LAMBDA_RING = PolyRing(QQ, "l")
SYMBOLIC_X_RING = PolyRing(SYMBOLIC_LAMBDA_RING, "x")


def _psihat_symbolic_family() -> PsiHat:
    lam = SYMBOLIC_X_RING.coerce(SYMBOLIC_LAMBDA_RING.gen())
    return PsiHat(SYMBOLIC_X_RING.gen(), lam, SYMBOLIC_X_RING.one)


_SYMBOLIC_PSIHAT = None
_SYMBOLIC_MAP_CACHE = {}
_CURVE_PSIHAT_CACHE = {}


def _symbolic_family() -> PsiHat:
    global _SYMBOLIC_PSIHAT
    if _SYMBOLIC_PSIHAT is None:
        _SYMBOLIC_PSIHAT = _psihat_symbolic_family()
    return _SYMBOLIC_PSIHAT


def _psihat_for_curve(curve: LegendreCurve) -> PsiHat:
    key = (curve.base, curve.lam)
    fam = _CURVE_PSIHAT_CACHE.get(key)
    if fam is None:
        ring = PolyRing(curve.base, "x")
        fam = PsiHat(ring.gen(), ring.coerce(curve.lam), ring.one)
        if len(_CURVE_PSIHAT_CACHE) > 64:
            _CURVE_PSIHAT_CACHE.clear()
        _CURVE_PSIHAT_CACHE[key] = fam
    return fam


def division_polynomial(m: int, curve: LegendreCurve | None = None) -> Poly:
    """psihat_m as a polynomial in x; symbolic in lambda when curve is None."""
    if m < 1:
        raise ValueError("division polynomial index must be >= 1")
    if curve is None:
        return _symbolic_family().get(m)
    return _psihat_for_curve(curve).get(m)


def psihat_eval(m: int, lam, z):
    """psihat_m(z; lam) by running the recurrence on scalars; exact in any field."""
    if isinstance(lam, Fraction) or isinstance(z, Fraction):
        one = Fraction(1)
        lam, z = Fraction(lam), Fraction(z)
    else:
        one = lam.field.one
    return PsiHat(z, lam, one).get(m)


def mult_x_map(m: int, curve: LegendreCurve | None = None) -> RationalFunction:
    """The rational function with phi_m(x(P)) = x([m]P), reduced over a field.

    Symbolic output (curve=None) keeps the classical numerator/denominator
    pair x*psi_m^2 - psi_{m+1}psi_{m-1} over psi_m^2, which is already
    coprime in characteristic 0.
    """
    if m < 1:
        raise ValueError("multiplication index must be >= 1")
    if curve is None:
        cached = _SYMBOLIC_MAP_CACHE.get(m)
        if cached is not None:
            return cached
        fam = _symbolic_family()
        ring = SYMBOLIC_X_RING
        reduce = False
    else:
        fam = _psihat_for_curve(curve)
        ring = PolyRing(curve.base, "x")
        reduce = True
    x = ring.gen()
    if m == 1:
        return RationalFunction(x, ring.one, reduce=False)
    pm = fam.get(m)
    pplus = fam.get(m + 1)
    pminus = fam.get(m - 1)
    if m % 2 == 1:
        num = x * pm * pm - fam.f4 * pplus * pminus
        den = pm * pm
    else:
        num = x * fam.f4 * pm * pm - pplus * pminus
        den = fam.f4 * pm * pm
    if den.is_zero():
        raise CurveError(f"multiplication-by-{m} map degenerates identically (char {ring.char})")
    out = RationalFunction(num, den, reduce=reduce)
    if curve is None:
        _SYMBOLIC_MAP_CACHE[m] = out
    return out


# ---------------------------------------------------------------------------
# supersingularity


def hasse_polynomial(p: int) -> Poly:
    """Deuring-Hasse polynomial over F_p: sum binom((p-1)/2, k)^2 l^k."""
    if p == 2 or not is_prime(p):
        raise ValueError("odd prime required")
    field = FiniteField(p)
    h = (p - 1) // 2
    ring = PolyRing(field, "l")
    return ring.from_coeffs([math.comb(h, k) ** 2 % p for k in range(h + 1)])


def is_supersingular(lam: FFElement) -> bool:
    """Vanishing of H_p at lambda; the trace oracle re-checks this in tests."""
    field = lam.field
    if lam.is_zero() or lam.is_one():
        raise CurveError("lambda must avoid 0 and 1")
    if field.p == 2:
        raise CurveError("characteristic 2 is excluded")
    hp = hasse_polynomial(field.p)
    return hp.evaluate(lam, ring=field).is_zero()


def supersingular_lambdas(p: int):
    """All supersingular lambda in F_{p^2} (they never leave it), sorted."""
    field = FiniteField(p, 2)
    out = [lam for lam in field if not lam.is_zero() and not lam.is_one() and is_supersingular(lam)]
    return field, sorted(out, key=lambda e: e.coeffs)


# ---------------------------------------------------------------------------
# symbolic composition identity via single-point Kronecker evaluation


class _BoundedInt:
    """Integer value at the Kronecker point plus degree/height bounds.

    Tracking (value, max |coeff|, deg_x, deg_l, #terms) through the same
    arithmetic as the polynomials makes the single-point equality test a
    proof: the evaluation point is chosen larger than the tracked height.
    """

    __slots__ = ("value", "height", "degx", "degl", "terms")

    def __init__(self, value, height, degx, degl):
        self.value = value
        self.height = height
        self.degx = degx
        self.degl = degl
        self.terms = (degx + 1) * (degl + 1)

    def __mul__(self, other):
        return _BoundedInt(
            self.value * other.value,
            min(self.terms, other.terms) * self.height * other.height,
            self.degx + other.degx,
            self.degl + other.degl,
        )

    def __add__(self, other):
        return _BoundedInt(
            self.value + other.value,
            self.height + other.height,
            max(self.degx, other.degx),
            max(self.degl, other.degl),
        )

    def pow(self, e):
        out = _BoundedInt(1, 1, 0, 0)
        for _ in range(e):
            out = out * self
        return out


def _integer_bivariate(P: Poly):
    """[(xdeg, [int lambda-coeffs])] for a bivariate over Q with integral entries."""
    rows = []
    height = 0
    degl = 0
    for i, c in enumerate(P.coeffs):
        if isinstance(c, Poly):
            ints = []
            for v in c.coeffs:
                assert v.denominator == 1, "expected integral coefficients"
                ints.append(v.numerator)
        else:
            assert c.denominator == 1
            ints = [c.numerator]
        rows.append(ints)
        for v in ints:
            height = max(height, abs(v))
        degl = max(degl, len(ints) - 1)
    return rows, height, P.degree, degl


def _eval_bounded(rows, height, degx, degl, xval, lval):
    acc = 0
    for ints in reversed(rows):
        lacc = 0
        for v in reversed(ints):
            lacc = lacc * lval + v
        acc = acc * xval + lacc
    return _BoundedInt(acc, height, degx, degl)


def verify_composition(m: int, n: int) -> bool:
    """Exact check that phi_{m*n} = phi_m o phi_n over Q(lambda).

    Cross-multiplied identity A_{mn} * B_comp = B_{mn} * A_comp is verified
    at a single Kronecker point (lambda = x^S, x = 2^T) with S and T chosen
    beyond the tracked degree and height bounds, which proves the
    polynomial identity.
    """
    outer = mult_x_map(m)
    inner = mult_x_map(n)
    whole = mult_x_map(m * n)
    datas = {}
    for name, p in (("Ao", outer.num), ("Bo", outer.den), ("Ai", inner.num), ("Bi", inner.den), ("Aw", whole.num), ("Bw", whole.den)):
        datas[name] = _integer_bivariate(p)

    D = max(outer.num.degree, outer.den.degree)
    degx_inner = max(datas["Ai"][2], datas["Bi"][2])
    degx_total = max(datas["Aw"][2], datas["Bw"][2]) + D * degx_inner
    S = degx_total + 1

    # first pass with a crude T, then confirm T beats the tracked height
    T = 64
    while True:
        xval = 1 << T
        lval = 1 << (T * S)
        Ai = _eval_bounded(*datas["Ai"], xval, lval)
        Bi = _eval_bounded(*datas["Bi"], xval, lval)
        ai_pows = [_BoundedInt(1, 1, 0, 0)]
        bi_pows = [_BoundedInt(1, 1, 0, 0)]
        for _ in range(D):
            ai_pows.append(ai_pows[-1] * Ai)
            bi_pows.append(bi_pows[-1] * Bi)

        def compose(rows, height, degx, degl):
            total = _BoundedInt(0, 0, 0, 0)
            for i, ints in enumerate(rows):
                ci = _eval_bounded([ints], height, 0, max(len(ints) - 1, 0), xval, lval)
                total = total + ci * ai_pows[i] * bi_pows[D - i]
            return total

        Acomp = compose(*datas["Ao"])
        Bcomp = compose(*datas["Bo"])
        Aw = _eval_bounded(*datas["Aw"], xval, lval)
        Bw = _eval_bounded(*datas["Bw"], xval, lval)
        lhs = Aw * Bcomp
        rhs = Bw * Acomp
        need = (lhs.height + rhs.height).bit_length() + 2
        if T >= need:
            return lhs.value == rhs.value
        T = need
