"""Sparse multivariate polynomials with exact rational coefficients.

Terms map exponent tuples to nonzero Fractions; the variable list is explicit
data carried by every polynomial.  The canonical term order is graded reverse
lexicographic in the declared variable order.
"""

import re
from fractions import Fraction
from math import gcd


def grevlex_key(exp):
    """Sort key for graded reverse lexicographic order (larger key = larger monomial)."""
    return (sum(exp), tuple(-e for e in reversed(exp)))


def block_key(head):
    """Elimination order: grevlex on the first `head` variables, then grevlex on the rest."""

    def key(exp):
        return (grevlex_key(exp[:head]), grevlex_key(exp[head:]))

    return key


class SparsePoly:
    """Polynomial over Q with explicit variables and sparse term storage."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables, terms=None):
        self.variables = tuple(variables)
        clean = {}
        if terms:
            n = len(self.variables)
            for exp, coeff in terms.items():
                c = Fraction(coeff)
                if c == 0:
                    continue
                exp = tuple(exp)
                if len(exp) != n or any(e < 0 for e in exp):
                    raise ValueError(f"bad exponent tuple {exp} for {self.variables}")
                clean[exp] = clean.get(exp, Fraction(0)) + c
                if clean[exp] == 0:
                    del clean[exp]
        self.terms = clean

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, variables):
        return cls(variables)

    @classmethod
    def constant(cls, variables, c):
        return cls(variables, {(0,) * len(tuple(variables)): Fraction(c)})

    @classmethod
    def monomial(cls, variables, exp, coeff=1):
        return cls(variables, {tuple(exp): Fraction(coeff)})

    @classmethod
    def variable(cls, variables, name):
        variables = tuple(variables)
        idx = variables.index(name)
        exp = tuple(1 if i == idx else 0 for i in range(len(variables)))
        return cls(variables, {exp: Fraction(1)})

    # -- predicates -------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(sum(e) == 0 for e in self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    # -- arithmetic -------------------------------------------------------

    def _check_ring(self, other):
        if self.variables != other.variables:
            raise ValueError(
                f"mismatched variable lists: {self.variables} vs {other.variables}"
            )

    def __add__(self, other):
        self._check_ring(other)
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            terms[exp] = terms.get(exp, Fraction(0)) + c
        return SparsePoly(self.variables, terms)

    def __neg__(self):
        return SparsePoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check_ring(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                terms[exp] = terms.get(exp, Fraction(0)) + c1 * c2
        return SparsePoly(self.variables, terms)

    def scale(self, c):
        c = Fraction(c)
        return SparsePoly(self.variables, {e: c * v for e, v in self.terms.items()})

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = SparsePoly.constant(self.variables, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def mul_monomial(self, exp, coeff=1):
        exp = tuple(exp)
        return SparsePoly(
            self.variables,
            {
                tuple(a + b for a, b in zip(e, exp)): c * Fraction(coeff)
                for e, c in self.terms.items()
            },
        )

    # -- structure --------------------------------------------------------

    def leading(self, key=grevlex_key):
        """(exponent, coefficient) of the leading term under the given order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self.terms, key=key)
        return exp, self.terms[exp]

    def monic(self, key=grevlex_key):
        _, c = self.leading(key)
        return self.scale(Fraction(1) / c)

    def primitive(self):
        """Integer-content-normalized copy with positive grevlex leading coefficient."""
        if not self.terms:
            return self
        den = 1
        for c in self.terms.values():
            den = den * c.denominator // gcd(den, c.denominator)
        num = 0
        for c in self.terms.values():
            num = gcd(num, abs(c.numerator * (den // c.denominator)))
        scaled = self.scale(Fraction(den, num))
        if scaled.leading()[1] < 0:
            scaled = -scaled
        return scaled

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def weighted_degree(self, weights):
        """Common weighted degree of all terms, or None if inhomogeneous.

        `weights` is one integer per variable (e.g. (a, b, c) for K[x,y,z]).
        """
        degs = {sum(w * e for w, e in zip(weights, exp)) for exp in self.terms}
        if len(degs) != 1:
            return None
        return degs.pop()

    def multi_degree(self, degree_map):
        """Common vector degree of all terms under per-variable vector degrees.

        `degree_map` maps variable name to a tuple; returns the common tuple
        degree or None if the polynomial is not homogeneous for it.
        """
        vecs = [degree_map[v] for v in self.variables]
        dim = len(vecs[0]) if vecs else 0
        degs = set()
        for exp in self.terms:
            degs.add(
                tuple(sum(v[i] * e for v, e in zip(vecs, exp)) for i in range(dim))
            )
        if len(degs) != 1:
            return None
        return degs.pop()

    def evaluate(self, point):
        """Exact evaluation at a tuple of rationals."""
        if len(point) != len(self.variables):
            raise ValueError("point length must match variable count")
        point = [Fraction(p) for p in point]
        total = Fraction(0)
        for exp, c in self.terms.items():
            val = c
            for p, e in zip(point, exp):
                if e:
                    val *= p ** e
            total += val
        return total

    # -- ring changes -----------------------------------------------------

    def rename_ring(self, variables, mapping=None):
        """Move to a ring with different variables; old variables map by name."""
        variables = tuple(variables)
        mapping = mapping or {v: v for v in self.variables}
        idx = {}
        for old, new in mapping.items():
            idx[self.variables.index(old)] = variables.index(new)
        terms = {}
        for exp, c in self.terms.items():
            new_exp = [0] * len(variables)
            for i, e in enumerate(exp):
                if e:
                    if i not in idx:
                        raise ValueError(f"variable {self.variables[i]} has no image")
                    new_exp[idx[i]] = e
            terms[tuple(new_exp)] = c
        return SparsePoly(variables, terms)

    def substitute(self, assignment):
        """Substitute polynomials for variables; all images share one ring."""
        images = [assignment[v] for v in self.variables]
        ring = images[0].variables
        result = SparsePoly.zero(ring)
        for exp, c in self.terms.items():
            term = SparsePoly.constant(ring, c)
            for img, e in zip(images, exp):
                if e:
                    term = term * img ** e
            result = result + term
        return result

    # -- division ---------------------------------------------------------

    def divide_by(self, f, key=grevlex_key):
        """Divide by a single polynomial: returns (quotient, remainder)."""
        if f.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        self._check_ring(f)
        lexp, lc = f.leading(key)
        quot = SparsePoly.zero(self.variables)
        rem = SparsePoly.zero(self.variables)
        g = self
        while not g.is_zero():
            gexp, gc = g.leading(key)
            diff = tuple(a - b for a, b in zip(gexp, lexp))
            if all(d >= 0 for d in diff):
                t = SparsePoly.monomial(self.variables, diff, gc / lc)
                quot = quot + t
                g = g - t * f
            else:
                t = SparsePoly.monomial(self.variables, gexp, gc)
                rem = rem + t
                g = g - t
        return quot, rem

    # -- text form --------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms, key=grevlex_key, reverse=True):
            c = self.terms[exp]
            mono = "*".join(
                v if e == 1 else f"{v}^{e}"
                for v, e in zip(self.variables, exp)
                if e
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"SparsePoly({self.variables}, {self})"


def divides(f, g):
    """True iff f divides g, decided by division with remainder under grevlex."""
    if f.is_zero():
        raise ZeroDivisionError("divisibility by the zero polynomial is undefined")
    if g.is_zero():
        return True
    _, rem = g.divide_by(f)
    return rem.is_zero()


_TOKEN = re.compile(r"\s*([A-Za-z_][A-Za-z_0-9]*|\d+|\^|\*|\+|-|/)")


def parse_poly(text, variables):
    """Parse the textual polynomial grammar: e.g. '3/2*x^2*y - z + 1'."""
    variables = tuple(variables)
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ValueError(f"cannot tokenize polynomial at: {text[pos:]!r}")
            break
        tokens.append(m.group(1))
        pos = m.end()

    result = SparsePoly.zero(variables)
    i = 0
    n = len(tokens)
    first = True
    while i < n:
        sign = 1
        while i < n and tokens[i] in "+-":
            if tokens[i] == "-":
                sign = -sign
            i += 1
        elif_ok = i < n
        if not elif_ok:
            if first:
                break
            raise ValueError("dangling sign in polynomial text")
        coeff = Fraction(sign)
        exp = [0] * len(variables)
        expect_factor = True
        while i < n and expect_factor:
            tok = tokens[i]
            if tok.isdigit():
                num = int(tok)
                i += 1
                if i < n and tokens[i] == "/":
                    if i + 1 >= n or not tokens[i + 1].isdigit():
                        raise ValueError("malformed fraction")
                    coeff *= Fraction(num, int(tokens[i + 1]))
                    i += 2
                else:
                    coeff *= num
            else:
                if tok not in variables:
                    raise ValueError(f"unknown variable {tok!r}")
                vi = variables.index(tok)
                i += 1
                e = 1
                if i < n and tokens[i] == "^":
                    if i + 1 >= n or not tokens[i + 1].isdigit():
                        raise ValueError("malformed exponent")
                    e = int(tokens[i + 1])
                    i += 2
                exp[vi] += e
            if i < n and tokens[i] == "*":
                i += 1
            else:
                expect_factor = False
        result = result + SparsePoly.monomial(variables, exp, coeff)
        first = False
    return result
