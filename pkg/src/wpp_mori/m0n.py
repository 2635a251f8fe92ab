"""Integer-lattice verification of reductions from moduli lattices to P(a,b,c).

A reduction consists of a saturated rank-(n-5) sublattice N' of N = Z^{n-3}
generated by signed 0/1 vectors, three more such vectors v1, v2, v3 whose
images generate the quotient N/N' = Z^2, and weights (a,b,c) with
a*v1 + b*v2 + c*v3 in N'.  Everything is checked by Smith normal form.
"""

from dataclasses import dataclass
from math import gcd
from typing import Optional

from . import linalg
from .weights import WeightTriple


@dataclass
class LatticeReduction:
    """Sublattice generators, the three projected vectors, optional weights."""

    generators: list  # vectors spanning N', as tuples in Z^{n-3}
    v1: tuple
    v2: tuple
    v3: tuple
    weights: Optional[tuple] = None

    @property
    def ambient_rank(self):
        return len(self.v1)

    @property
    def n(self):
        return self.ambient_rank + 3


def _signed_unit_vector(vec):
    """True iff all entries lie in {0,1} or all lie in {0,-1}."""
    vals = set(vec)
    return vals <= {0, 1} or vals <= {0, -1}


def parse_reduction(text):
    """Parse the plain-text format with sections kernel:, v:, weights:."""
    section = None
    kernel = []
    vs = []
    weights = None
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.endswith(":"):
            section = line[:-1]
            if section not in ("kernel", "v", "weights"):
                raise ValueError(f"unknown section {section!r}")
            continue
        values = tuple(int(p) for p in line.split())
        if section == "kernel":
            kernel.append(values)
        elif section == "v":
            vs.append(values)
        elif section == "weights":
            weights = values
        else:
            raise ValueError("vector line before any section header")
    if not kernel:
        raise ValueError("missing kernel: section")
    if len(vs) != 3:
        raise ValueError(f"expected exactly 3 v-vectors, got {len(vs)}")
    lengths = {len(v) for v in kernel} | {len(v) for v in vs}
    if len(lengths) != 1:
        raise ValueError("vectors have inconsistent lengths")
    if weights is not None and len(weights) != 3:
        raise ValueError("weights must be three integers")
    return LatticeReduction(kernel, vs[0], vs[1], vs[2], weights)


def _quotient_map(generators, ambient):
    """Columns-of-V chart for N/N': returns (projector rows, rank) or None.

    With U*G*V = D in Smith normal form, the map x -> last coordinates of
    x*V identifies N/N' with Z^{ambient-rank} exactly when all invariant
    factors are 1 (N' saturated).
    """
    g = [list(row) for row in generators]
    d, u, v = linalg.smith_normal_form(g)
    rank = sum(
        1 for i in range(min(len(d), ambient)) if i < len(d[0] if d else []) and d[i][i] != 0
    )
    for i in range(rank):
        if d[i][i] != 1:
            return None, rank
    # x*V has the quotient coordinates in its last (ambient - rank) slots
    cols = [[v[r][j] for r in range(ambient)] for j in range(rank, ambient)]
    return cols, rank


def _project(cols, vec):
    return tuple(sum(c[i] * vec[i] for i in range(len(vec))) for c in cols)


def verify_reduction(r):
    """Check all reduction invariants; returns (ok, diagnostics)."""
    diags = []
    for vec in list(r.generators) + [r.v1, r.v2, r.v3]:
        if not _signed_unit_vector(vec):
            raise ValueError(f"vector {vec} is not a signed 0/1 vector")
    ambient = r.ambient_rank
    expected_rank = r.n - 5
    cols, rank = _quotient_map(r.generators, ambient)
    if rank != expected_rank:
        diags.append(f"sublattice rank {rank} != n-5 = {expected_rank}")
        return False, diags
    if cols is None:
        diags.append("sublattice is not saturated (invariant factor > 1)")
        return False, diags
    diags.append(f"sublattice saturated of rank {rank}")
    images = [_project(cols, v) for v in (r.v1, r.v2, r.v3)]
    img_matrix = [list(w) for w in images]
    d, _, _ = linalg.smith_normal_form(img_matrix)
    invariants = [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0))]
    if sorted(x for x in invariants if x) != [1, 1]:
        diags.append(f"images do not generate the quotient: invariants {invariants}")
        return False, diags
    diags.append("projected vectors generate the quotient Z^2")
    if r.weights is None:
        diags.append("no weights given; congruence not checked")
        return True, diags
    a, b, c = r.weights
    combo = tuple(
        a * x + b * y + c * z for x, y, z in zip(r.v1, r.v2, r.v3)
    )
    if _project(cols, combo) != (0,) * (ambient - rank):
        diags.append(f"congruence fails: {a}*v1 + {b}*v2 + {c}*v3 not in N'")
        return False, diags
    diags.append(f"{a}*v1 + {b}*v2 + {c}*v3 lies in N'")
    return True, diags


def quotient_images(r):
    """2x3 matrix whose columns are the quotient images of v1, v2, v3."""
    cols, rank = _quotient_map(r.generators, r.ambient_rank)
    if cols is None or rank != r.n - 5 or r.ambient_rank - rank != 2:
        raise ValueError("reduction does not define a rank-2 quotient")
    images = [_project(cols, v) for v in (r.v1, r.v2, r.v3)]
    return [[w[0] for w in images], [w[1] for w in images]]


def unimodular_equivalent(m1, m2):
    """True iff m2 = T*m1 for some 2x2 integer T with det +-1."""
    if len(m1) != 2 or len(m2) != 2 or len(m1[0]) != len(m2[0]):
        return False
    ncols = len(m1[0])
    for i in range(ncols):
        for j in range(i + 1, ncols):
            det = m1[0][i] * m1[1][j] - m1[0][j] * m1[1][i]
            if det == 0:
                continue
            # T = m2[:, (i,j)] * inverse(m1[:, (i,j)])
            inv = [
                [m1[1][j], -m1[0][j]],
                [-m1[1][i], m1[0][i]],
            ]
            tnum = [
                [
                    m2[0][i] * inv[0][0] + m2[0][j] * inv[1][0],
                    m2[0][i] * inv[0][1] + m2[0][j] * inv[1][1],
                ],
                [
                    m2[1][i] * inv[0][0] + m2[1][j] * inv[1][0],
                    m2[1][i] * inv[0][1] + m2[1][j] * inv[1][1],
                ],
            ]
            if any(x % det for row in tnum for x in row):
                return False
            t = [[x // det for x in row] for row in tnum]
            if abs(t[0][0] * t[1][1] - t[0][1] * t[1][0]) != 1:
                return False
            prod = linalg.mat_mul(t, m1)
            return prod == [list(r) for r in m2]
    return False


def search_weights(r, bound):
    """All pairwise coprime positive (a,b,c) with max <= bound killing the images.

    The image matrix has rank 2, so its integer kernel is spanned by one
    primitive vector (the cross product of the rows); solutions are its
    positive multiples, filtered for pairwise coprimality.
    """
    m = quotient_images(r)
    r1, r2 = m
    cross = (
        r1[1] * r2[2] - r1[2] * r2[1],
        r1[2] * r2[0] - r1[0] * r2[2],
        r1[0] * r2[1] - r1[1] * r2[0],
    )
    g = gcd(gcd(abs(cross[0]), abs(cross[1])), abs(cross[2]))
    if g == 0:
        return []
    k = tuple(x // g for x in cross)
    if all(x < 0 for x in k):
        k = tuple(-x for x in k)
    if not all(x > 0 for x in k):
        return []
    out = []
    lam = 1
    while lam * max(k) <= bound:
        a, b, c = (lam * x for x in k)
        if gcd(a, b) == 1 and gcd(b, c) == 1 and gcd(a, c) == 1:
            out.append((a, b, c))
        lam += 1
    return out
