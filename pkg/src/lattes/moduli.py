"""Dynamics of the multiplication-by-p map on the moduli line P^1.

The moduli space of rank-2 parabolic Higgs bundles on P^1 with punctures
{0, 1, lambda, infinity} and weight 1/2 at infinity is identified with P^1
by sending a Higgs field to its zero.  The self-map induced on it by
reduction mod p is realized directly as the [p]-Lattes map of the Legendre
curve (the flow on Higgs bundles itself is not implemented; the two maps
agree).  This module classifies orbits over finite fields, checks the
x^{p^2} collapse at supersingular parameters, and compares torsion orders
of lifted points against the orbit period.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction

from .fields import FFElement, FiniteField, apply_frobenius_table, embed, frobenius_table
from .legendre import INF, CurveError, LegendreCurve, is_supersingular, mult_x_map
from .poly import RationalFunction
from .serialize import value_to_json


@dataclass(frozen=True)
class ParabolicData:
    """The fixed parabolic structure: weight 1/2 at infinity, 0 elsewhere.

    The underlying bundle is O + O(-1) with a nonzero Higgs map
    O -> O(-1) (x) Omega^1(log D); these numbers never vary here.
    """

    punctures: tuple = ("0", "1", "lambda", "infinity")
    weights: tuple = (Fraction(0), Fraction(0), Fraction(0), Fraction(1, 2))
    bundle_degrees: tuple = (0, -1)

    @property
    def sub_slope(self) -> Fraction:
        # the theta-invariant sub-line-bundle O(-1) picks up the weight at infinity
        return Fraction(self.bundle_degrees[1]) + self.weights[3]

    @property
    def total_slope(self) -> Fraction:
        # the weight-1/2 jump at infinity sits on the full rank-2 fiber,
        # so it enters the parabolic degree twice: -1 + 2*(1/2) = 0
        pardeg = Fraction(sum(self.bundle_degrees)) + 2 * self.weights[3]
        return pardeg / 2


PARABOLIC = ParabolicData()


@dataclass(frozen=True)
class ModuliPoint:
    """A point of the moduli line: the zero z of the Higgs field, plus lambda."""

    z: object  # field element or INF
    lam: object

    def to_json(self):
        return {"z": value_to_json(self.z), "lambda": value_to_json(self.lam)}


def stability_check(point: ModuliPoint | None = None) -> dict:
    """Parabolic stability of the bundles the moduli line parametrizes.

    The unique invariant sub-line-bundle has parabolic slope -1/2 < 0 =
    total slope, for every z including infinity; this records the slope
    arithmetic rather than deciding anything point-dependent.
    """
    data = PARABOLIC
    stable = data.sub_slope < data.total_slope
    return {
        "stable": stable,
        "sub_slope": data.sub_slope,
        "total_slope": data.total_slope,
        "weights": list(data.weights),
        "z": value_to_json(point.z) if point is not None else None,
    }


class SelfMap:
    """The [p]-map on P^1 over the field of lambda, stored fully reduced.

    In supersingular characteristic the separable degree collapses; both
    the generic degree p^2 and the reduced fraction are kept so the
    x^{p^2} identity can be stated about the reduced form.
    """

    __slots__ = ("p", "lam", "map", "curve", "supersingular")

    def __init__(self, p: int, lam: FFElement, mp: RationalFunction, curve: LegendreCurve):
        self.p = p
        self.lam = lam
        self.map = mp
        self.curve = curve
        self.supersingular = is_supersingular(lam)

    @property
    def generic_degree(self) -> int:
        return self.p * self.p

    @property
    def reduced_degree(self) -> int:
        return self.map.degree

    def is_pth_power_monomial(self) -> bool:
        """True when the reduced map is exactly x^{p^2}."""
        num, den = self.map.num, self.map.den
        if den.degree != 0 or not den.lc.is_one():
            return False
        e = self.p * self.p
        return num.degree == e and num.lc.is_one() and all(num.coeff(i).is_zero() for i in range(e))

    def __call__(self, z):
        if self.is_pth_power_monomial():
            # fast path: x^{p^2} is a bijection fixing INF
            if z is INF:
                return INF
            return z ** (self.p * self.p)
        return self.map.eval_proj(z)

    def to_json(self):
        return {
            "p": self.p,
            "lambda": value_to_json(self.lam),
            "field": self.lam.field.to_json(),
            "supersingular": self.supersingular,
            "generic_degree": self.generic_degree,
            "reduced_degree": self.reduced_degree,
            "map": self.map.to_json(),
        }


def build_selfmap(lam: FFElement, p: int | None = None) -> SelfMap:
    """The reduced [p]-Lattes map at lambda; p defaults to the characteristic."""
    field = lam.field
    if p is None:
        p = field.p
    if p != field.p:
        raise CurveError(f"p = {p} must be the characteristic of the field of lambda")
    if p == 2 or p < 3:
        raise CurveError("p must be an odd prime")
    curve = LegendreCurve(field, lam)
    mp = mult_x_map(p, curve)
    return SelfMap(p, lam, mp, curve)


@dataclass
class OrbitReport:
    z: object
    tail: int
    period: int
    torsion_order: int | None = None
    divides_pf_minus_1: bool | None = None
    divides_pf_plus_1: bool | None = None
    equals_pf_minus_1: bool | None = None
    gcd_with_p: int | None = None
    cycle: list = dataclass_field(default_factory=list)

    def to_json(self):
        return {
            "z": value_to_json(self.z),
            "tail": self.tail,
            "period": self.period,
            "torsion_order": self.torsion_order,
            "div_pf_minus_1": self.divides_pf_minus_1,
            "div_pf_plus_1": self.divides_pf_plus_1,
            "equal_pf_minus_1": self.equals_pf_minus_1,
            "gcd_with_p": self.gcd_with_p,
        }


def _selfmap_over(sm: SelfMap, field: FiniteField) -> SelfMap:
    """The same map with lambda pushed into a larger field."""
    if field == sm.lam.field:
        return sm
    return build_selfmap(embed(sm.lam, field), sm.p)


def _proj_points(field: FiniteField):
    yield INF
    yield from field


def orbit(z, sm: SelfMap, field: FiniteField | None = None) -> OrbitReport:
    """Iterate the self-map from z until a repeat; attach torsion data.

    The torsion order is that of a lift of z itself, taken in a quadratic
    extension when f(z) is a non-square.  Flags compare it against
    p^f -+ 1 for the period f of the cycle the orbit falls into.
    """
    if field is None:
        field = sm.lam.field if z is INF else z.field
    sm = _selfmap_over(sm, field)
    if z is not INF:
        z = field.coerce(z)
    seen = {}
    w = z
    trajectory = []
    while w not in seen:
        seen[w] = len(trajectory)
        trajectory.append(w)
        w = sm(w)
    first = seen[w]
    tail = first
    period = len(trajectory) - first
    report = OrbitReport(z=z, tail=tail, period=period, cycle=trajectory[first:])

    m = _torsion_order_of_x(sm, z, field)
    report.torsion_order = m
    f = period
    q = sm.p**f
    report.divides_pf_minus_1 = (q - 1) % m == 0
    report.divides_pf_plus_1 = (q + 1) % m == 0
    report.equals_pf_minus_1 = m == q - 1
    report.gcd_with_p = sm.p if m % sm.p == 0 else 1
    return report


def _torsion_order_of_x(sm: SelfMap, z, field: FiniteField) -> int:
    """Order of either lift of z on the curve over (an extension of) field."""
    if z is INF:
        return 1
    curve = sm.curve if sm.lam.field == field else LegendreCurve(field, embed(sm.lam, field))
    P = curve.lift_x(z, extend=True)[0]
    return P.curve.torsion_order(P)


def period_torsion_report(z, lam: FFElement, p: int | None = None, field: FiniteField | None = None) -> OrbitReport:
    """orbit() packaged for the period-vs-torsion-order comparison."""
    return orbit(z, build_selfmap(lam, p), field=field)


def classify_field(lam: FFElement, p: int | None = None, n: int = 1, with_torsion: bool = False) -> dict:
    """Full functional-graph census of the self-map on P^1(F_{p^{2n}}).

    Every point of a finite set is preperiodic; the census splits them into
    periodic (tail 0) and strictly preperiodic, builds the period
    histogram, and compares the periodic count against #P^1 = p^{2n} + 1.
    """
    sm = build_selfmap(lam, p)
    p = sm.p
    k = lam.field.k
    deg = 2 * n
    if deg % k != 0:
        raise CurveError(f"lambda lives in F_p^{k}, which does not embed in F_p^{deg}")
    target = FiniteField(p, deg) if deg > 1 else lam.field
    sm_t = _selfmap_over(sm, target)

    points = list(_proj_points(target))
    index = {pt: i for i, pt in enumerate(points)}
    succ = [index[sm_t(pt)] for pt in points]

    # peel non-periodic nodes by repeated in-degree-0 removal
    indeg = [0] * len(points)
    for j in succ:
        indeg[j] += 1
    stack = [i for i, d in enumerate(indeg) if d == 0]
    removed = [False] * len(points)
    while stack:
        i = stack.pop()
        removed[i] = True
        j = succ[i]
        indeg[j] -= 1
        if indeg[j] == 0:
            stack.append(j)
    periodic = [i for i in range(len(points)) if not removed[i]]

    histogram: dict[int, int] = {}
    visited = set()
    verdicts = {"div_pf_minus_1": 0, "div_pf_plus_1": 0, "equal_pf_minus_1": 0}
    for i in periodic:
        if i in visited:
            continue
        cycle = [i]
        j = succ[i]
        while j != i:
            cycle.append(j)
            j = succ[j]
        visited.update(cycle)
        f = len(cycle)
        histogram[f] = histogram.get(f, 0) + f
        if with_torsion:
            for idx in cycle:
                m = _torsion_order_of_x(sm_t, points[idx], target)
                q = p**f
                if (q - 1) % m == 0:
                    verdicts["div_pf_minus_1"] += 1
                if (q + 1) % m == 0:
                    verdicts["div_pf_plus_1"] += 1
                if m == q - 1:
                    verdicts["equal_pf_minus_1"] += 1

    expected = p**deg + 1
    out = {
        "p": p,
        "lambda": value_to_json(lam),
        "n": n,
        "supersingular": sm.supersingular,
        "periodic": len(periodic),
        "preperiodic": len(points) - len(periodic),
        "expected": expected,
        "period_histogram": {str(f): c for f, c in sorted(histogram.items())},
    }
    if with_torsion:
        out["verdicts"] = verdicts
    return out


def supersingular_identity_check(lam: FFElement, p: int | None = None) -> dict:
    """Check the reduced [p]-map equals x^{p^2}, symbolically and pointwise.

    The symbolic comparison inspects the reduced fraction over the field
    of lambda; the pointwise sweep runs over all of P^1(F_{p^4}).  A
    failure returns the first counterexample point.
    """
    sm = build_selfmap(lam, p)
    p = sm.p
    if not sm.supersingular:
        raise CurveError(f"lambda = {lam} is ordinary for p = {p}; identity check needs supersingular input")
    symbolic_ok = sm.is_pth_power_monomial()

    target = FiniteField(p, 4)
    lam4 = embed(lam, target)
    curve4 = LegendreCurve(target, lam4)
    mp4 = mult_x_map(p, curve4)
    frob2 = frobenius_table(target, 2)  # z -> z^{p^2} as a linear map
    counterexample = None
    for z in _proj_points(target):
        lhs = mp4.eval_proj(z)
        rhs = INF if z is INF else apply_frobenius_table(target, frob2, z)
        if lhs != rhs:
            counterexample = z
            break
    return {
        "p": p,
        "lambda": value_to_json(lam),
        "symbolic": symbolic_ok,
        "pointwise": counterexample is None,
        "ok": symbolic_ok and counterexample is None,
        "counterexample": value_to_json(counterexample) if counterexample is not None else None,
    }
