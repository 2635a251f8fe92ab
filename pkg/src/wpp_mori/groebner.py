"""Buchberger engine over Q: reduced bases, normal forms, saturation, dimension."""

from dataclasses import dataclass, field
from fractions import Fraction

from .poly import SparsePoly, block_key, grevlex_key


class StepBudgetExceeded(RuntimeError):
    """The pair-reduction budget of a Groebner computation ran out."""


@dataclass
class Ideal:
    variables: tuple
    generators: list

    def __post_init__(self):
        self.variables = tuple(self.variables)
        for g in self.generators:
            if g.variables != self.variables:
                raise ValueError("generator outside the stated ring")


@dataclass
class GroebnerBasis:
    variables: tuple
    elements: list
    key: object = field(default=grevlex_key, repr=False)


DEFAULT_BUDGET = 10 ** 6


def _lcm_exp(e1, e2):
    return tuple(max(a, b) for a, b in zip(e1, e2))


def _divides_exp(e1, e2):
    return all(a <= b for a, b in zip(e1, e2))


def _reduce(f, basis, leads, key):
    """Full normal form of f against (basis, leading exponents)."""
    rem = SparsePoly.zero(f.variables)
    g = f
    while not g.is_zero():
        gexp, gc = g.leading(key)
        hit = None
        for i, le in enumerate(leads):
            if _divides_exp(le[0], gexp):
                hit = i
                break
        if hit is None:
            t = SparsePoly.monomial(f.variables, gexp, gc)
            rem = rem + t
            g = g - t
        else:
            le, lc = leads[hit]
            diff = tuple(a - b for a, b in zip(gexp, le))
            g = g - basis[hit].mul_monomial(diff, gc / lc)
    return rem


def normal_form(f, gb):
    """Unique remainder of f modulo a Groebner basis; zero iff f is in the ideal."""
    if f.variables != gb.variables:
        raise ValueError("polynomial outside the basis ring")
    leads = [g.leading(gb.key) for g in gb.elements]
    return _reduce(f, gb.elements, leads, gb.key)


def _spoly(f, g, key):
    ef, cf = f.leading(key)
    eg, cg = g.leading(key)
    lcm = _lcm_exp(ef, eg)
    s1 = f.mul_monomial(tuple(a - b for a, b in zip(lcm, ef)), Fraction(1) / cf)
    s2 = g.mul_monomial(tuple(a - b for a, b in zip(lcm, eg)), Fraction(1) / cg)
    return s1 - s2


def _update_pairs(basis_leads, pairs, new_index, key):
    """Gebauer-Moeller pair update on adding the polynomial at new_index."""
    t = new_index
    lt = basis_leads[t]
    kept = set()
    for (i, j) in pairs:
        lij = _lcm_exp(basis_leads[i], basis_leads[j])
        if (
            not _divides_exp(lt, lij)
            or lij == _lcm_exp(basis_leads[i], lt)
            or lij == _lcm_exp(basis_leads[j], lt)
        ):
            kept.add((i, j))
    by_lcm = {}
    for i in range(t):
        by_lcm.setdefault(_lcm_exp(basis_leads[i], lt), []).append(i)
    minimal = []
    for lcm in sorted(by_lcm, key=key):
        if all(not _divides_exp(m, lcm) for m in minimal):
            minimal.append(lcm)
    for lcm in minimal:
        idxs = by_lcm[lcm]
        # drop the whole class if any member has coprime leads
        if any(
            lcm == tuple(a + b for a, b in zip(basis_leads[i], lt)) for i in idxs
        ):
            continue
        kept.add((idxs[0], t))
    return kept


def buchberger(
    ideal,
    key=grevlex_key,
    step_budget=DEFAULT_BUDGET,
    weighted_bound=None,
    weights=None,
):
    """Reduced Groebner basis of the ideal under the given monomial order.

    With `weighted_bound` and per-variable `weights`, S-pairs whose lcm has
    weighted degree above the bound are discarded; for an ideal homogeneous
    in those weights, the result is a Groebner basis truncated at that degree.
    """
    gens = [g.primitive() for g in ideal.generators if not g.is_zero()]
    if not gens:
        return GroebnerBasis(ideal.variables, [], key)
    gens.sort(key=lambda p: key(p.leading(key)[0]))
    basis = []
    leads = []
    pairs = set()
    steps = 0

    def add(p):
        basis.append(p)
        leads.append(p.leading(key)[0])
        return _update_pairs(leads, pairs, len(basis) - 1, key)

    def lead_pairs():
        return [(le, basis[i].leading(key)[1]) for i, le in enumerate(leads)]

    for g in gens:
        r = _reduce(g, basis, lead_pairs(), key)
        if not r.is_zero():
            pairs = add(r.primitive())

    while pairs:
        pair = min(pairs, key=lambda p: key(_lcm_exp(leads[p[0]], leads[p[1]])))
        pairs.discard(pair)
        i, j = pair
        lcm = _lcm_exp(leads[i], leads[j])
        if weighted_bound is not None and weights is not None:
            if sum(w * e for w, e in zip(weights, lcm)) > weighted_bound:
                continue
        steps += 1
        if steps > step_budget:
            raise StepBudgetExceeded(f"pair-reduction budget {step_budget} exhausted")
        s = _spoly(basis[i], basis[j], key)
        r = _reduce(s, basis, lead_pairs(), key)
        if not r.is_zero():
            pairs = add(r.primitive())

    # minimalize: drop elements whose lead is divisible by another lead
    keep = []
    for i, le in enumerate(leads):
        if not any(
            j != i and _divides_exp(leads[j], le) and (leads[j] != le or j < i)
            for j in range(len(leads))
        ):
            keep.append(i)
    minimal = [basis[i] for i in keep]
    # inter-reduce and normalize to monic
    reduced = []
    for idx, p in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        other_leads = [q.leading(key) for q in others]
        r = _reduce(p, others, other_leads, key)
        reduced.append(r.monic(key))
    reduced.sort(key=lambda p: key(p.leading(key)[0]))
    return GroebnerBasis(ideal.variables, reduced, key)


def ideal_member(f, gb):
    return normal_form(f, gb).is_zero()


def ideal_equal(i1, i2, step_budget=DEFAULT_BUDGET):
    """Ideal equality via reduced-basis comparison under the shared grevlex order."""
    g1 = buchberger(i1, step_budget=step_budget)
    g2 = buchberger(i2, step_budget=step_budget)
    return g1.elements == g2.elements


def _extend_front(p, new_var, variables):
    return p.rename_ring((new_var,) + variables)


def _contract(gb_elements, tag_var, variables):
    """Keep elements free of the leading tag variable and drop it from the ring."""
    out = []
    mapping = {v: v for v in variables}
    for g in gb_elements:
        if all(exp[0] == 0 for exp in g.terms):
            out.append(g.rename_ring(variables, mapping))
    return out


def saturate(ideal, f, step_budget=DEFAULT_BUDGET):
    """I : f^oo by adjoining w with 1 - w*f and eliminating w."""
    if f.is_zero():
        raise ValueError("cannot saturate by zero")
    tag = _fresh_name("w", ideal.variables)
    ring = (tag,) + ideal.variables
    gens = [_extend_front(g, tag, ideal.variables) for g in ideal.generators]
    one = SparsePoly.constant(ring, 1)
    wf = SparsePoly.variable(ring, tag) * _extend_front(f, tag, ideal.variables)
    gens.append(one - wf)
    gb = buchberger(Ideal(ring, gens), key=block_key(1), step_budget=step_budget)
    return Ideal(ideal.variables, _contract(gb.elements, tag, ideal.variables))


def quotient_by(ideal, f, step_budget=DEFAULT_BUDGET):
    """Single ideal quotient I : <f>, via tagged intersection and exact division."""
    if f.is_zero():
        raise ValueError("cannot take a quotient by zero")
    tag = _fresh_name("w", ideal.variables)
    ring = (tag,) + ideal.variables
    w = SparsePoly.variable(ring, tag)
    one = SparsePoly.constant(ring, 1)
    gens = [w * _extend_front(g, tag, ideal.variables) for g in ideal.generators]
    gens.append((one - w) * _extend_front(f, tag, ideal.variables))
    gb = buchberger(Ideal(ring, gens), key=block_key(1), step_budget=step_budget)
    inter = _contract(gb.elements, tag, ideal.variables)
    out = []
    for g in inter:
        q, r = g.divide_by(f)
        if not r.is_zero():
            raise AssertionError("intersection element not divisible by f")
        if not q.is_zero():
            out.append(q.primitive())
    return Ideal(ideal.variables, out)


def krull_dimension(ideal, step_budget=DEFAULT_BUDGET, gb=None):
    """Krull dimension of the quotient ring, or None for the unit ideal.

    Computed as the largest number of variables supporting no leading
    monomial of a Groebner basis.
    """
    from itertools import combinations

    if gb is None:
        gb = buchberger(ideal, step_budget=step_budget)
    if any(g.is_constant() and not g.is_zero() for g in gb.elements):
        return None
    n = len(ideal.variables)
    supports = [
        frozenset(i for i, e in enumerate(g.leading(gb.key)[0]) if e)
        for g in gb.elements
    ]
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            sset = set(subset)
            if all(not s <= sset for s in supports):
                return size
    return 0


def _fresh_name(stem, variables):
    name = stem
    k = 0
    while name in variables:
        k += 1
        name = f"{stem}{k}"
    return name
