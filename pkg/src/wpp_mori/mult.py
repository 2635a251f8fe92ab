"""Vanishing-order linear algebra at the point [1,1,1] of P(a,b,c).

The degree-d forms with multiplicity >= mu at the point are cut out by
Hasse-derivative conditions on the Laurent polynomial obtained by pushing
monomial quotients down the torus chart.  Kernels of the resulting integer
condition matrices give the graded pieces of the symbolic powers I^mu : J^oo.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import comb, gcd

from . import linalg
from .poly import SparsePoly
from .weights import WeightTriple, monomials_of_degree

XYZ = ("x", "y", "z")


def _inverse_unimodular_3x3(v):
    det = (
        v[0][0] * (v[1][1] * v[2][2] - v[1][2] * v[2][1])
        - v[0][1] * (v[1][0] * v[2][2] - v[1][2] * v[2][0])
        + v[0][2] * (v[1][0] * v[2][1] - v[1][1] * v[2][0])
    )
    if det not in (1, -1):
        raise ValueError("matrix is not unimodular")
    cof = [
        [
            (v[(i + 1) % 3][(j + 1) % 3] * v[(i + 2) % 3][(j + 2) % 3]
             - v[(i + 1) % 3][(j + 2) % 3] * v[(i + 2) % 3][(j + 1) % 3])
            for j in range(3)
        ]
        for i in range(3)
    ]
    # inverse = adj / det; adj = cofactor transpose; det = 1/det for units
    return [[cof[j][i] * det for j in range(3)] for i in range(3)]


@lru_cache(maxsize=None)
def _chart(a, b, c):
    d, u, v = linalg.smith_normal_form([[a, b, c]])
    if d[0][0] != 1:
        raise ValueError("weights are not coprime")
    vinv = _inverse_unimodular_3x3(v)
    # columns 1,2 of v form a basis of the weight-zero sublattice; the
    # coordinate map onto that basis is rows 1,2 of v^{-1}.
    basis = [tuple(v[i][1] for i in range(3)), tuple(v[i][2] for i in range(3))]
    chart_map = [tuple(vinv[1]), tuple(vinv[2])]
    for i in range(2):
        for j in range(2):
            dot = sum(chart_map[i][k] * basis[j][k] for k in range(3))
            if dot != (1 if i == j else 0):
                raise AssertionError("chart map does not invert the kernel basis")
    return chart_map, basis


def torus_chart(w):
    """2x3 integer matrix restricting to an isomorphism {e : a,b,c . e = 0} -> Z^2."""
    chart_map, _ = _chart(w.a, w.b, w.c)
    return [list(r) for r in chart_map]


def chart_kernel_basis(w):
    """Basis of the weight-zero exponent lattice (preimages of the Z^2 unit vectors)."""
    _, basis = _chart(w.a, w.b, w.c)
    return [list(b) for b in basis]


def binom_int(n, k):
    """Binomial coefficient C(n, k) for arbitrary integer n and k >= 0."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if n >= 0:
        return comb(n, k) if k <= n else 0
    return (-1) ** k * comb(k - n - 1, k)


def condition_matrix(w, d, mu):
    """Integer matrix whose kernel is V(d, mu) in monomial coordinates.

    Rows are indexed by Hasse-derivative orders (alpha, beta) with
    alpha + beta < mu; columns by the monomials of degree d in lex order.
    """
    monos = monomials_of_degree(w, d)
    if not monos:
        return [], monos
    chart_map, _ = _chart(w.a, w.b, w.c)
    base = monos[0]  # lexicographically least monomial of degree d
    uv = []
    for m in monos:
        diff = [m[i] - base[i] for i in range(3)]
        uv.append(tuple(sum(r[i] * diff[i] for i in range(3)) for r in chart_map))
    rows = []
    for order in range(mu):
        for alpha in range(order + 1):
            beta = order - alpha
            rows.append([binom_int(u, alpha) * binom_int(v, beta) for u, v in uv])
    return rows, monos


@dataclass
class SymbolicSlice:
    """A degree piece of a symbolic power: dimension and an integer basis."""

    d: int
    mu: int
    dim: int
    basis: list  # list of SparsePoly


def slice_dim(w, d, mu):
    """dim of {f in S_d : mult of f at [1,1,1] >= mu}, without building a basis."""
    rows, monos = condition_matrix(w, d, mu)
    if not monos:
        return 0
    if mu == 0:
        return len(monos)
    return len(monos) - linalg.rank(rows)


def slice_kernel_vectors(w, d, mu):
    """Kernel basis vectors of the condition matrix (monomial coordinates)."""
    rows, monos = condition_matrix(w, d, mu)
    if not monos:
        return [], monos
    if mu == 0:
        n = len(monos)
        return [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)], monos
    return linalg.kernel_basis(rows, len(monos)), monos


def _vector_to_poly(vec, monos):
    p = SparsePoly(XYZ, {m: c for m, c in zip(monos, vec) if c})
    return p.primitive() if not p.is_zero() else p


def symbolic_slice(w, d, mu):
    """Dimension and basis of the forms of degree d with multiplicity >= mu at [1,1,1]."""
    if d < 0 or mu < 0:
        raise ValueError("degree and multiplicity must be non-negative")
    vecs, monos = slice_kernel_vectors(w, d, mu)
    basis = [_vector_to_poly(v, monos) for v in vecs]
    return SymbolicSlice(d=d, mu=mu, dim=len(vecs), basis=basis)


def _coefficient_vector(f, monos):
    vec = []
    lookup = dict(f.terms)
    seen = 0
    for m in monos:
        c = lookup.get(m, 0)
        if c:
            seen += 1
        vec.append(c)
    if seen != len(f.terms):
        raise ValueError("polynomial has terms outside the stated degree")
    return vec


def rees_multiplicity(w, f):
    """Multiplicity of the curve V(f) at [1,1,1]; 0 if f does not vanish there."""
    if f.is_zero():
        raise ValueError("Rees multiplicity of the zero polynomial is undefined")
    d = f.weighted_degree(w.as_tuple())
    if d is None:
        raise ValueError("polynomial is not weighted-homogeneous")
    monos = monomials_of_degree(w, d)
    vec = _coefficient_vector(f, monos)
    mu = 0
    # a nonzero form has finite multiplicity; 2d + 2 safely bounds it
    while mu <= 2 * d + 2:
        rows, _ = condition_matrix(w, d, mu + 1)
        if any(sum(r[i] * vec[i] for i in range(len(vec))) != 0 for r in rows):
            return mu
        mu += 1
    raise AssertionError("multiplicity bound exceeded for a nonzero form")


def generic_exact_multiplicity(w, d, mu_min, tie_break="first"):
    """Exact multiplicity of the generic member of V(d, mu_min), with a witness.

    Returns (mu, witness) where V(d, mu) = V(d, mu_min), V(d, mu+1) is a
    proper subspace, and witness lies in V(d, mu) but not in V(d, mu+1).
    """
    vecs, monos = slice_kernel_vectors(w, d, mu_min)
    if not vecs:
        raise ValueError(f"empty slice V({d},{mu_min})")
    dim = len(vecs)
    mu = mu_min
    while slice_dim(w, d, mu + 1) == dim:
        mu += 1
    sub_vecs, _ = slice_kernel_vectors(w, d, mu + 1)
    order = reversed(vecs) if tie_break == "last" else vecs
    for v in order:
        if not linalg.in_span(sub_vecs, v):
            return mu, _vector_to_poly(v, monos)
    raise AssertionError("no basis vector outside a proper subspace")
