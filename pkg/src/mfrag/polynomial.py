"""Sparse multivariate polynomials with integer coefficients.

Only what the symbolic partial fields need is provided: ring operations,
exact division and a canonical text form.
"""

import math

__author__ = "The mfrag developers"
__email__ = "mfrag@users.noreply.github.com"


class Polynomial(object):
    """An immutable polynomial in ``nvars`` indeterminates over the integers.

    Terms are kept in a dict mapping exponent tuples to non-zero integer
    coefficients. Monomials are ordered lexicographically on their exponent
    tuples, which is a monomial order and therefore compatible with
    multiplication.
    """

    __slots__ = ("_nvars", "_terms", "_hash")

    def __init__(self, nvars, terms=None):
        """
        Constructor.

        :param nvars: Number of indeterminates.
        :param terms: Mapping of exponent tuples to integer coefficients; zero
            coefficients are dropped.
        """
        self._nvars = nvars
        self._terms = {}
        if terms:
            for exp, coeff in terms.items():
                if coeff:
                    self._terms[tuple(exp)] = int(coeff)
        self._hash = None

    @classmethod
    def constant(cls, nvars, value):
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars, index):
        exp = [0] * nvars
        exp[index] = 1
        return cls(nvars, {tuple(exp): 1})

    @property
    def nvars(self):
        return self._nvars

    def terms(self):
        """Terms as (exponent tuple, coefficient) pairs, leading term first."""
        return sorted(self._terms.items(), reverse=True)

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return not self._terms or list(self._terms) == [(0,) * self._nvars]

    def constant_value(self):
        """The constant coefficient when the polynomial is constant."""
        return self._terms.get((0,) * self._nvars, 0)

    def leading(self):
        exp = max(self._terms)
        return exp, self._terms[exp]

    def content(self):
        """Non-negative gcd of the coefficients (0 for the zero polynomial)."""
        g = 0
        for coeff in self._terms.values():
            g = math.gcd(g, coeff)
        return g

    def degree(self):
        if not self._terms:
            return -1
        return max(sum(exp) for exp in self._terms)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return False
        return self._nvars == other._nvars and self._terms == other._terms

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._nvars, frozenset(self._terms.items())))
        return self._hash

    def __neg__(self):
        return Polynomial(self._nvars, {e: -c for e, c in self._terms.items()})

    def __add__(self, other):
        terms = dict(self._terms)
        for exp, coeff in other._terms.items():
            terms[exp] = terms.get(exp, 0) + coeff
        return Polynomial(self._nvars, terms)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            terms = {e: c * other for e, c in self._terms.items()}
            return Polynomial(self._nvars, terms)
        terms = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                terms[exp] = terms.get(exp, 0) + c1 * c2
        return Polynomial(self._nvars, terms)

    def __pow__(self, k):
        result = Polynomial.constant(self._nvars, 1)
        base = self
        while k > 0:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divide(self, other):
        """
        Exact division.

        :param other: Non-zero divisor.
        :return: The quotient if ``other`` divides this polynomial over the
            integers, otherwise None.
        """
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lexp, lcoeff = other.leading()
        remainder = dict(self._terms)
        quotient = {}
        while remainder:
            rexp = max(remainder)
            rcoeff = remainder[rexp]
            if any(a < b for a, b in zip(rexp, lexp)) or rcoeff % lcoeff:
                return None
            qexp = tuple(a - b for a, b in zip(rexp, lexp))
            qcoeff = rcoeff // lcoeff
            quotient[qexp] = qcoeff
            for exp, coeff in other._terms.items():
                key = tuple(a + b for a, b in zip(exp, qexp))
                value = remainder.get(key, 0) - qcoeff * coeff
                if value:
                    remainder[key] = value
                else:
                    remainder.pop(key, None)
        return Polynomial(self._nvars, quotient)

    def format(self, names):
        """
        Text form such as ``a1^2-3*a1*a2+1``.

        :param names: One name per indeterminate.
        """
        if not self._terms:
            return "0"
        parts = []
        for index, (exp, coeff) in enumerate(self.terms()):
            monomial = "*".join(
                name if k == 1 else "%s^%d" % (name, k)
                for name, k in zip(names, exp)
                if k
            )
            magnitude = abs(coeff)
            if not monomial:
                body = str(magnitude)
            elif magnitude == 1:
                body = monomial
            else:
                body = "%d*%s" % (magnitude, monomial)
            if coeff < 0:
                parts.append("-" + body)
            elif index:
                parts.append("+" + body)
            else:
                parts.append(body)
        return "".join(parts)

    def __repr__(self):
        names = ["x%d" % i for i in range(self._nvars)]
        return "<Polynomial: %s>" % self.format(names)
