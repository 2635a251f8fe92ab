"""Cox ring presentations for the blow-up of P(a,b,c) at [1,1,1].

Covers the two solved generation regimes: one weight in the monoid of the
other two (a single trinomial relation in five generators), and the
multiplicity-two regime 2a = nb + mc with b >= 3m, c >= 3n (nine relations
in eight generators, with one generator of Rees multiplicity two).
"""

from dataclasses import dataclass, field
from itertools import permutations
from typing import Optional

from . import groebner, mult
from .poly import SparsePoly, divides
from .weights import WeightTriple, monoid_member


class ParityError(ValueError):
    """An exponent of the form (c-n)/2 or (b-m)/2 failed to be an integer."""


@dataclass(frozen=True)
class TripleClass:
    """Classification of a weight triple with its witness data."""

    variant: str  # "KStar", "Mult2" or "Other"
    reordering: Optional[tuple] = None
    alpha: Optional[int] = None  # KStar: a = alpha*b + beta*c
    beta: Optional[int] = None
    n: Optional[int] = None  # Mult2: 2a = n*b + m*c
    m: Optional[int] = None

    @property
    def is_kstar(self):
        return self.variant == "KStar"

    @property
    def is_mult2(self):
        return self.variant == "Mult2"


@dataclass(frozen=True)
class CoxPresentation:
    """Generators with Z^2-degrees, Rees multiplicities, relations, sections.

    `sections` maps each generator to a concrete polynomial in K[x,y,z]
    realizing it (t maps to the formal exceptional parameter); relations are
    identities among the generators once t carries degree (0, 1).
    """

    variant: str
    weights: tuple  # reordered (a, b, c)
    generators: tuple
    degrees: dict  # name -> (H-degree, E-coefficient)
    rees: dict  # name -> Rees multiplicity (t carries -1)
    relations: tuple
    sections: dict  # name -> SparsePoly over ("x","y","z"); "t" excluded
    saturated_by: Optional[str] = None  # variable t when the ideal is I : t^oo
    toric: bool = False
    notes: tuple = ()


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerificationReport:
    checks: list

    @property
    def ok(self):
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]


def classify(w):
    """Sort a triple into the KStar, Mult2 or Other regime with witnesses."""
    weights = w.as_tuple()
    kstar = []
    for i in range(3):
        a = weights[i]
        rest = sorted(weights[:i] + weights[i + 1:])
        b, c = rest
        if monoid_member(a, b, c):
            kstar.append((a, b, c))
    if kstar:
        a, b, c = min(kstar)
        alpha, beta = _monoid_witness(a, b, c)
        return TripleClass("KStar", reordering=(a, b, c), alpha=alpha, beta=beta)
    best = None
    for a, b, c in permutations(weights):
        for n in range(1, 2 * a // b + 1):
            rem = 2 * a - n * b
            if rem <= 0:
                break
            if rem % c:
                continue
            m = rem // c
            if b >= 3 * m and c >= 3 * n:
                cand = (a, n, b, c, m)
                if best is None or cand < best:
                    best = cand
    if best is not None:
        a, n, b, c, m = best
        return TripleClass("Mult2", reordering=(a, b, c), n=n, m=m)
    return TripleClass("Other")


def _monoid_witness(a, b, c):
    """Smallest alpha with a = alpha*b + beta*c, beta >= 0."""
    for alpha in range(a // b + 1):
        rem = a - alpha * b
        if rem % c == 0:
            return alpha, rem // c
    raise AssertionError("monoid membership witness vanished")


def _half(value, what):
    if value < 0 or value % 2:
        raise ParityError(f"{what} = {value} is not an even non-negative integer")
    return value // 2


def kstar_presentation(w):
    """Five-generator presentation with the single relation T4*T5 - T1^c + T2^b."""
    cls = classify(w)
    if not cls.is_kstar:
        raise ValueError(f"{w.as_tuple()} is not in the KStar regime")
    a, b, c = cls.reordering
    gens = ("T1", "T2", "T3", "T4", "T5")
    R = gens
    t4t5 = SparsePoly.monomial(R, (0, 0, 0, 1, 1))
    t1c = SparsePoly.monomial(R, (c, 0, 0, 0, 0))
    t2b = SparsePoly.monomial(R, (0, b, 0, 0, 0))
    relation = t4t5 - t1c + t2b
    S = ("x", "y", "z")
    x = SparsePoly.variable(S, "x")
    y = SparsePoly.variable(S, "y")
    z = SparsePoly.variable(S, "z")
    sections = {
        "T1": y,
        "T2": z,
        "T3": x - y ** cls.alpha * z ** cls.beta,
        "T4": y ** c - z ** b,
    }
    return CoxPresentation(
        variant="KStar",
        weights=(a, b, c),
        generators=gens,
        degrees={
            "T1": (b, 0),
            "T2": (c, 0),
            "T3": (a, -1),
            "T4": (b * c, -1),
            "T5": (0, 1),
        },
        rees={"T1": 0, "T2": 0, "T3": 1, "T4": 1, "T5": -1},
        relations=(relation,),
        sections=sections,
        toric=1 in (a, b, c),
    )


def mult2_fs(w_or_cls):
    """The four distinguished forms f1..f4 in K[x,y,z] for a Mult2 triple."""
    cls = w_or_cls if isinstance(w_or_cls, TripleClass) else classify(w_or_cls)
    if not cls.is_mult2:
        raise ValueError("not in the Mult2 regime")
    a, b, c = cls.reordering
    n, m = cls.n, cls.m
    cn2 = _half(c - n, "c - n")
    bm2 = _half(b - m, "b - m")
    cp2 = _half(c + n, "c + n")
    bp2 = _half(b + m, "b + m")
    S = ("x", "y", "z")
    x = SparsePoly.variable(S, "x")
    y = SparsePoly.variable(S, "y")
    z = SparsePoly.variable(S, "z")
    f1 = x ** 2 - y ** n * z ** m
    f2 = x * z ** bm2 - y ** cp2
    f3 = x * y ** cn2 - z ** bp2
    c3n2 = _half(c - 3 * n, "c - 3n")
    b3m2 = _half(b - 3 * m, "b - 3m")
    f4 = x * y ** c3n2 * z ** b3m2 * f1 - y ** cn2 * f2 - z ** bm2 * f3
    return f1, f2, f3, f4


def mult2_presentation(w):
    """Eight-generator, nine-relation presentation for the 2a = nb + mc regime."""
    cls = classify(w)
    if not cls.is_mult2:
        raise ValueError(f"{w.as_tuple()} is not in the Mult2 regime")
    a, b, c = cls.reordering
    n, m = cls.n, cls.m
    cn2 = _half(c - n, "c - n")
    bm2 = _half(b - m, "b - m")
    cp2 = _half(c + n, "c + n")
    bp2 = _half(b + m, "b + m")
    c3n2 = _half(c - 3 * n, "c - 3n")
    b3m2 = _half(b - 3 * m, "b - 3m")
    R = ("x", "y", "z", "s1", "s2", "s3", "s4", "t")

    def mono(x=0, y=0, z=0, s1=0, s2=0, s3=0, s4=0, t=0, coeff=1):
        return SparsePoly.monomial(R, (x, y, z, s1, s2, s3, s4, t), coeff)

    relations = (
        mono(x=2) - mono(y=n, z=m) - mono(s1=1, t=1),
        mono(x=1, z=bm2) - mono(y=cp2) - mono(s2=1, t=1),
        mono(x=1, y=cn2) - mono(z=bp2) - mono(s3=1, t=1),
        mono(x=1, y=c3n2, z=b3m2, s1=1) - mono(y=cn2, s2=1)
        - mono(z=bm2, s3=1) - mono(s4=1, t=1),
        mono(y=c3n2, z=b3m2, s1=2) - mono(s2=1, s3=1) - mono(x=1, s4=1),
        mono(y=cn2, s1=1) - mono(z=m, s2=1) - mono(x=1, s3=1),
        mono(z=bm2, s1=1) - mono(x=1, s2=1) - mono(y=n, s3=1),
        mono(s3=2) + mono(y=c3n2, s1=1, s2=1) - mono(z=m, s4=1),
        # the y-exponent n is forced by Z^2-homogeneity and the f-identity
        mono(s2=2) + mono(z=b3m2, s1=1, s3=1) - mono(y=n, s4=1),
    )
    f1, f2, f3, f4 = mult2_fs(cls)
    S = ("x", "y", "z")
    sections = {
        "x": SparsePoly.variable(S, "x"),
        "y": SparsePoly.variable(S, "y"),
        "z": SparsePoly.variable(S, "z"),
        "s1": f1,
        "s2": f2,
        "s3": f3,
        "s4": f4,
    }
    return CoxPresentation(
        variant="Mult2",
        weights=(a, b, c),
        generators=R,
        degrees={
            "x": (a, 0),
            "y": (b, 0),
            "z": (c, 0),
            "s1": (2 * a, -1),
            "s2": (b * (c + n) // 2, -1),
            "s3": (c * (b + m) // 2, -1),
            "s4": (b * c, -2),
            "t": (0, 1),
        },
        rees={"x": 0, "y": 0, "z": 0, "s1": 1, "s2": 1, "s3": 1, "s4": 2, "t": -1},
        relations=relations,
        sections=sections,
        saturated_by="t",
        notes=("the y-exponent in the final relation is n, forced by homogeneity",),
    )


def chart_binomials(w):
    """Binomial generators of the ideal of [1,1,1] from the torus chart lattice."""
    S = ("x", "y", "z")
    out = []
    for vec in mult.chart_kernel_basis(w):
        plus = tuple(max(e, 0) for e in vec)
        minus = tuple(max(-e, 0) for e in vec)
        out.append(
            SparsePoly.monomial(S, plus) - SparsePoly.monomial(S, minus)
        )
    return out


def verify_presentation(w, pres, step_budget=groebner.DEFAULT_BUDGET):
    """Run the mechanical checks on a constructed presentation.

    Checks: (1) Z^2-homogeneity of every relation; (2) section Rees
    multiplicities match the degree matrix; (3) relations vanish identically
    under section substitution with t = 1; and for the Mult2 variant
    (4) the saturation identity <f1,f2> : (xyz)^oo = <f1,f2,f3> = lattice
    ideal of the point; (5) f4 lies in (I^2 : J^oo) but not in I^2.
    """
    checks = []
    wt = WeightTriple(*pres.weights)

    degree_map = {g: pres.degrees[g] for g in pres.generators}
    bad = []
    for i, rel in enumerate(pres.relations):
        if rel.multi_degree(degree_map) is None:
            bad.append(i)
    checks.append(
        CheckResult(
            "homogeneity",
            not bad,
            "all relations Z^2-homogeneous" if not bad
            else f"inhomogeneous relations at positions {bad}",
        )
    )

    bad = []
    for g in pres.generators:
        d, e = pres.degrees[g]
        if g not in pres.sections:
            if (d, e) != (0, 1) or pres.rees[g] != -1:
                bad.append(f"{g}: exceptional parameter must have degree (0,1)")
            continue
        if pres.rees[g] != -e:
            bad.append(f"{g}: Rees multiplicity {pres.rees[g]} != {-e}")
            continue
        sec = pres.sections[g]
        if sec.weighted_degree(wt.as_tuple()) != d:
            bad.append(f"{g}: section degree mismatch")
            continue
        actual = mult.rees_multiplicity(wt, sec)
        if actual != pres.rees[g]:
            bad.append(f"{g}: section multiplicity {actual} != {pres.rees[g]}")
    checks.append(
        CheckResult(
            "rees_multiplicities",
            not bad,
            "; ".join(bad) if bad else "section multiplicities match the degree matrix",
        )
    )

    S = ("x", "y", "z")
    assignment = {
        g: pres.sections[g] if g in pres.sections else SparsePoly.constant(S, 1)
        for g in pres.generators
    }
    bad = []
    for i, rel in enumerate(pres.relations):
        if not rel.substitute(assignment).is_zero():
            bad.append(i)
    checks.append(
        CheckResult(
            "substitution_identities",
            not bad,
            "all relations vanish under the section map" if not bad
            else f"nonzero images at positions {bad}",
        )
    )

    if pres.variant == "Mult2":
        f1, f2, f3, f4 = (pres.sections[s] for s in ("s1", "s2", "s3", "s4"))
        xyz = SparsePoly.monomial(S, (1, 1, 1))
        sat12 = groebner.saturate(
            groebner.Ideal(S, [f1, f2]), xyz, step_budget=step_budget
        )
        i123 = groebner.Ideal(S, [f1, f2, f3])
        lattice = groebner.saturate(
            groebner.Ideal(S, chart_binomials(wt)), xyz, step_budget=step_budget
        )
        ok = groebner.ideal_equal(sat12, i123, step_budget=step_budget)
        ok2 = groebner.ideal_equal(i123, lattice, step_budget=step_budget)
        checks.append(
            CheckResult(
                "lattice_ideal_saturation",
                ok and ok2,
                "saturating <f1,f2> by xyz yields <f1,f2,f3> = point lattice ideal"
                if ok and ok2
                else f"saturation identity failed (f3: {ok}, lattice: {ok2})",
            )
        )

        bc = pres.weights[1] * pres.weights[2]
        sq_gens = [f1 * f1, f1 * f2, f1 * f3, f2 * f2, f2 * f3, f3 * f3]
        gb_sq = groebner.buchberger(
            groebner.Ideal(S, sq_gens),
            step_budget=step_budget,
            weighted_bound=bc,
            weights=wt.as_tuple(),
        )
        in_square = groebner.normal_form(f4, gb_sq).is_zero()
        mu4 = mult.rees_multiplicity(wt, f4)
        checks.append(
            CheckResult(
                "f4_between_powers",
                (not in_square) and mu4 == 2,
                f"f4 multiplicity {mu4}, in I^2: {in_square}",
            )
        )
    return VerificationReport(checks)


def describing_matrix(w):
    """3x5 matrix of the blow-up in the c = m*a + n*b normalization."""
    weights = sorted(w.as_tuple())
    a, b, c = weights
    if not monoid_member(c, a, b):
        raise ValueError(f"largest weight {c} is not in the monoid of {a}, {b}")
    m, n = _monoid_witness(c, a, b)
    return [
        [-c, b, 0, 0, 0],
        [-c, 0, 1, 1, 0],
        [-m, -n, 0, 1, 1],
    ]


def cor3bc_witness(b, c):
    """The unique positive n with 2b = 3n + c for a non-monoid triple (3, b, c)."""
    if not (3 < b < c):
        raise ValueError("expect 3 < b < c")
    w = WeightTriple(3, b, c)
    if (
        monoid_member(3, b, c)
        or monoid_member(b, 3, c)
        or monoid_member(c, 3, b)
    ):
        raise ValueError("a weight lies in the monoid of the other two")
    if (b + c) % 3 != 0:
        raise ValueError(f"b + c = {b + c} is not divisible by 3")
    if (2 * b - c) % 3 != 0 or 2 * b <= c:
        raise ValueError("no positive n with 2b = 3n + c")
    n = (2 * b - c) // 3
    if c <= 3 * n:
        raise ValueError(f"c = {c} fails c > 3n = {3 * n}")
    return n


def presentation_text(pres):
    """Structured text form: generator table, then the relation list."""
    lines = [f"variant: {pres.variant}", f"weights: {pres.weights}"]
    if pres.saturated_by:
        lines.append(f"ideal saturated by: {pres.saturated_by}")
    lines.append("generators:")
    for g in pres.generators:
        d, e = pres.degrees[g]
        lines.append(f"  {g}  degree ({d}, {e})  rees {pres.rees[g]}")
    lines.append("relations:")
    for rel in pres.relations:
        lines.append(f"  {rel}")
    for note in pres.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines)
