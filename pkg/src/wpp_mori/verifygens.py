"""Generator verification for the Cox ring of a point blow-up.

Given generators f_1..f_k of the ideal of the blown-up point, the ring
R_2 = R_1[s_1..s_k, t] maps onto the saturated Rees algebra by
s_i -> f_i t^{-m_i}.  Surjectivity follows once some enlargement B of
B_0 = {t^{m_i} s_i - f_i} inside <B_0> : t^oo satisfies
dim(R_1) = dim(<B u {t}>) > dim(<B u {t,f}>), where f is the product of
the R_1-generators not vanishing on the point.
"""

from dataclasses import dataclass, field
from typing import Optional

from . import groebner, mult
from .groebner import Ideal, StepBudgetExceeded
from .poly import SparsePoly, grevlex_key, parse_poly
from .weights import WeightTriple


class DiscoveryBudgetExceeded(RuntimeError):
    """The discovery loop ran out of iterations before reaching a verdict."""


@dataclass
class BlowupInput:
    """Ring data for one verification instance."""

    weights: WeightTriple
    variables: tuple
    ideal_gens: list
    product: SparsePoly

    def __post_init__(self):
        self.variables = tuple(self.variables)
        if self.product.is_zero():
            raise ValueError("the non-vanishing product must be nonzero")
        for g in self.ideal_gens:
            if g.weighted_degree(self.weights.as_tuple()) is None:
                raise ValueError(f"ideal generator {g} is not weighted-homogeneous")


@dataclass
class Certificate:
    """Outcome of a verification run with its checkable data."""

    ok: bool
    dims: tuple  # (dim R_1, dim <B u {t}>, dim <B u {t,f}>)
    basis: list
    trace: list
    multiplicities: list
    warnings: list = field(default_factory=list)


def parse_instance(text):
    """Parse the plain-text instance format (weights:, vars:, ideal:, product:)."""
    weights = None
    variables = ("x", "y", "z")
    ideal_lines = []
    product_line = None
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, value = line.partition(":")
        key = key.strip()
        value = value.strip()
        if key == "weights":
            weights = WeightTriple(*(int(p) for p in value.split()))
        elif key == "vars":
            variables = tuple(value.split())
        elif key == "ideal":
            ideal_lines.append(value)
        elif key == "product":
            product_line = value
        else:
            raise ValueError(f"unknown section {key!r}")
    if weights is None:
        raise ValueError("missing weights: section")
    if not ideal_lines:
        raise ValueError("missing ideal: sections")
    if product_line is None:
        raise ValueError("missing product: section")
    gens = [parse_poly(s, variables) for s in ideal_lines]
    product = parse_poly(product_line, variables)
    return BlowupInput(weights, variables, gens, product)


def rees_multiplicities(instance):
    """Exact Rees multiplicity of each ideal generator at the blown-up point."""
    return [mult.rees_multiplicity(instance.weights, g) for g in instance.ideal_gens]


def _rees_ring(instance, k):
    s_names = tuple(f"s{i + 1}" for i in range(k))
    return instance.variables + s_names + ("t",), s_names


def initial_basis(instance, mults):
    """B_0 = {t^{m_i} s_i - f_i} in the extended ring, plus that ring and names."""
    k = len(instance.ideal_gens)
    ring, s_names = _rees_ring(instance, k)
    mapping = {v: v for v in instance.variables}
    basis = []
    nvars = len(instance.variables)
    for i, (f, m) in enumerate(zip(instance.ideal_gens, mults)):
        exp = [0] * len(ring)
        exp[nvars + i] = 1
        exp[-1] = m
        basis.append(
            SparsePoly.monomial(ring, exp) - f.rename_ring(ring, mapping)
        )
    return ring, s_names, basis


def _degree_map(instance, mults, ring, s_names):
    weights = instance.weights.as_tuple()
    dm = {v: (wv, 0) for v, wv in zip(instance.variables, weights)}
    for name, f, m in zip(s_names, instance.ideal_gens, mults):
        dm[name] = (f.weighted_degree(weights), -m)
    dm["t"] = (0, 1)
    return dm


def discover_saturation_element(
    B, t_name, degree_map=None, step_budget=groebner.DEFAULT_BUDGET
):
    """One element of (<B> : t) outside <B>, or None at the fixed point.

    Candidates come from a single ideal quotient; the returned element has
    minimal Z^2-degree (when a degree map is given), with the term order
    breaking ties.
    """
    t_poly = SparsePoly.variable(B.variables, t_name)
    quotient = groebner.quotient_by(B, t_poly, step_budget=step_budget)
    gb = groebner.buchberger(B, step_budget=step_budget)
    candidates = []
    for g in quotient.generators:
        r = groebner.normal_form(g, gb)
        if not r.is_zero():
            candidates.append(r.primitive())
    if not candidates:
        return None

    def sort_key(p):
        if degree_map is not None:
            deg = p.multi_degree(degree_map)
            head = deg if deg is not None else (10 ** 9, 10 ** 9)
        else:
            head = (p.total_degree(), 0)
        return (head, grevlex_key(p.leading()[0]))

    return min(candidates, key=sort_key)


def verify(instance, discovery_budget=25, step_budget=groebner.DEFAULT_BUDGET):
    """Run the discovery loop until the dimension condition settles.

    Returns a Certificate: ok records whether some enlargement of B_0 meets
    dim(R_1) = dim(<B u {t}>) > dim(<B u {t,f}>); reaching the saturation
    fixed point without meeting it is a definitive negative; running out of
    discovery iterations raises DiscoveryBudgetExceeded.
    """
    mults = rees_multiplicities(instance)
    warnings = []
    for f, m in zip(instance.ideal_gens, mults):
        if m == 0:
            warnings.append(f"generator {f} does not vanish at the point")
    ring, s_names, basis = initial_basis(instance, mults)
    degree_map = _degree_map(instance, mults, ring, s_names)
    mapping = {v: v for v in instance.variables}
    t_poly = SparsePoly.variable(ring, "t")
    f_poly = instance.product.rename_ring(ring, mapping)
    dim_r1 = len(instance.variables)
    trace = []
    for _ in range(discovery_budget + 1):
        with_t = Ideal(ring, basis + [t_poly])
        dim_t = groebner.krull_dimension(with_t, step_budget=step_budget)
        with_tf = Ideal(ring, basis + [t_poly, f_poly])
        dim_tf = groebner.krull_dimension(with_tf, step_budget=step_budget)
        dim_tf_cmp = -1 if dim_tf is None else dim_tf
        if dim_t == dim_r1 and dim_t > dim_tf_cmp:
            return Certificate(
                True, (dim_r1, dim_t, dim_tf), list(basis), trace, mults, warnings
            )
        new = discover_saturation_element(
            Ideal(ring, basis), "t", degree_map, step_budget
        )
        if new is None:
            return Certificate(
                False, (dim_r1, dim_t, dim_tf), list(basis), trace, mults, warnings
            )
        basis.append(new)
        trace.append(new)
    raise DiscoveryBudgetExceeded(
        f"no verdict after {discovery_budget} discovery iterations"
    )


def certificate_text(cert):
    """Structured text form of a certificate."""
    lines = [
        f"verified: {cert.ok}",
        f"dims: {cert.dims[0]} {cert.dims[1]} {cert.dims[2]}",
        f"multiplicities: {' '.join(str(m) for m in cert.multiplicities)}",
        "basis:",
    ]
    for g in cert.basis:
        lines.append(f"  {g}")
    if cert.trace:
        lines.append("discovered:")
        for g in cert.trace:
            lines.append(f"  {g}")
    for wmsg in cert.warnings:
        lines.append(f"warning: {wmsg}")
    return "\n".join(lines)
