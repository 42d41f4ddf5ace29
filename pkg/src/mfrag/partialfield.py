"""Exact arithmetic in partial fields.

A partial field is a pair (R, G) of a commutative ring R and a subgroup G of
its units containing -1. The supported catalog consists of the prime fields
GF(p) with p <= 13, GF(4), and the regular, dyadic, near-regular and 2-regular
partial fields. Elements of the symbolic partial fields are stored as a
polynomial numerator over the integers together with non-negative exponents
of the generators in the denominator; this normal form is unique, so equality
is a comparison of payloads.
"""

import logging

from lark import Lark, Token
from lark.exceptions import UnexpectedInput

from mfrag import Error
from mfrag.constants import (
    PRIME_FIELDS,
    FIELD_ALIASES,
    FIELD_GF4,
    FIELD_REGULAR,
    FIELD_DYADIC,
    FIELD_NEAR_REGULAR,
    FIELD_TWO_REGULAR,
)
from mfrag.polynomial import Polynomial

__author__ = "The mfrag developers"
__email__ = "mfrag@users.noreply.github.com"

logger = logging.getLogger(__name__)


#  Exceptions
class PartialFieldException(Error):
    """Base class for partial field exceptions."""

    pass


class UnknownField(PartialFieldException):
    def __init__(self, name):
        self.name = name

    def __str__(self):
        return "Unsupported partial field: %s" % self.name


class DescriptorMismatch(PartialFieldException):
    def __init__(self, first, second):
        self.first = first
        self.second = second

    def __str__(self):
        return "Elements belong to different partial fields: %s and %s" % (
            self.first,
            self.second,
        )


class NotInvertible(PartialFieldException):
    def __init__(self, element):
        self.element = element

    def __str__(self):
        return "Element %s is not a unit of the partial field" % self.element


class ParseError(PartialFieldException):
    """A parse failure, located by byte offset and optionally by line/column."""

    def __init__(self, message, offset=None, line=None, column=None):
        self.message = message
        self.offset = offset
        self.line = line
        self.column = column

    def __str__(self):
        if self.line is not None:
            return "line %d, column %d: %s" % (
                self.line,
                self.column or 0,
                self.message,
            )
        if self.offset is not None:
            return "offset %d: %s" % (self.offset, self.message)
        return self.message


#  Element literal grammar
ELEMENT_GRAMMAR = r"""
start: MINUS? product

product: factor ("*" factor)*

factor: atom ("^" EXP)?

atom: SYM           -> symbol
    | UINT          -> integer
    | "[" sum "]"   -> bracket

sum: MINUS? product ((PLUS | MINUS) product)*

SYM: /\(1-a1\)|\(1-a2\)|\(a1-a2\)|\(1-a\)|a1|a2|a|w\+1|w/
UINT: /[0-9]+/
EXP: /-?[0-9]+/
MINUS: "-"
PLUS: "+"
"""

_parser = None


def _get_parser():
    global _parser
    if _parser is None:
        _parser = Lark(ELEMENT_GRAMMAR, parser="lalr")
    return _parser


def _token_offset(token):
    offset = getattr(token, "start_pos", None)
    if offset is None:
        offset = getattr(token, "pos_in_stream", None)
    return offset


class PFElement(object):
    """An element of the ring R of a partial field, in canonical form."""

    __slots__ = ("_field", "_payload")

    def __init__(self, field, payload):
        self._field = field
        self._payload = payload

    @property
    def field(self):
        return self._field

    @property
    def payload(self):
        return self._payload

    def _check(self, other):
        if not isinstance(other, PFElement):
            other = self._field.element(other)
        elif other._field.name != self._field.name:
            raise DescriptorMismatch(self._field.name, other._field.name)
        return other

    def __add__(self, other):
        return self._field.add(self, self._check(other))

    __radd__ = __add__

    def __sub__(self, other):
        return self._field.add(self, self._field.neg(self._check(other)))

    def __rsub__(self, other):
        return self._field.add(self._check(other), self._field.neg(self))

    def __mul__(self, other):
        return self._field.mul(self, self._check(other))

    __rmul__ = __mul__

    def __neg__(self):
        return self._field.neg(self)

    def inverse(self):
        return self._field.inv(self)

    def is_zero(self):
        return self._field.is_zero(self)

    def is_member(self):
        return self._field.is_member(self)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, PFElement):
            return False
        return self._field.name == other._field.name and self._payload == other._payload

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self._field.name, self._payload))

    def __str__(self):
        return self._field.format(self)

    def __repr__(self):
        return "<PFElement %s: %s>" % (self._field.name, self._field.format(self))

    def __reduce__(self):
        return _restore_element, (self._field.name, self._payload)


def _restore_element(name, payload):
    return PFElement(pf_make(name), payload)


class PartialField(object):
    """Descriptor of a partial field (R, G)."""

    name = None
    kind = None
    generators = ()
    """Names of the declared generators of G besides -1."""

    finite = False

    def __eq__(self, other):
        return isinstance(other, PartialField) and self.name == other.name

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.name)

    def __str__(self):
        return self.name

    def __repr__(self):
        return "<PartialField: %s>" % self.name

    def __reduce__(self):
        return pf_make, (self.name,)

    #  Construction
    def zero(self):
        return self.from_int(0)

    def one(self):
        return self.from_int(1)

    def element(self, value):
        """
        Coerces a value into this partial field.

        :param value: A :py:class:`PFElement` of this field, an integer (mapped
            through the ring homomorphism from the integers) or an element
            literal.
        """
        if isinstance(value, PFElement):
            if value.field.name != self.name:
                raise DescriptorMismatch(self.name, value.field.name)
            return value
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            return self.from_int(value)
        if isinstance(value, str):
            return self.parse(value)
        raise PartialFieldException(
            "Cannot convert %r into an element of %s" % (value, self.name)
        )

    def from_int(self, n):
        raise NotImplementedError

    #  Arithmetic
    def add(self, p, q):
        raise NotImplementedError

    def mul(self, p, q):
        raise NotImplementedError

    def neg(self, p):
        raise NotImplementedError

    def inv(self, p):
        raise NotImplementedError

    def is_zero(self, p):
        return p.payload == self.zero().payload

    def is_member(self, p):
        return True

    def power(self, p, k):
        if k < 0:
            return self.power(self.inv(p), -k)
        result = self.one()
        for _ in range(k):
            result = self.mul(result, p)
        return result

    #  Text
    def format(self, p):
        raise NotImplementedError

    def _symbol_value(self, name):
        return None

    def _integer_value(self, n):
        return self.from_int(n)

    def parse(self, text):
        """
        Parses an element literal.

        :param text: Literal such as ``-a^2*(1-a)^-1`` or ``w+1``.
        :raises ParseError: with the byte offset of the offending character.
        """
        text = text.strip()
        try:
            tree = _get_parser().parse(text)
        except UnexpectedInput as exc:
            offset = getattr(exc, "pos_in_stream", None)
            if offset is None or offset < 0:
                offset = len(text.encode("utf-8"))
            raise ParseError(
                "invalid %s element literal %r" % (self.name, text), offset
            )
        return self._evaluate(tree)

    def _evaluate(self, node):
        if isinstance(node, Token):
            raise ParseError("unexpected token %r" % str(node), _token_offset(node))
        data = node.data
        children = node.children
        if data == "start":
            if isinstance(children[0], Token) and children[0].type == "MINUS":
                return self.neg(self._evaluate(children[1]))
            return self._evaluate(children[0])
        if data == "product":
            result = self._evaluate(children[0])
            for child in children[1:]:
                result = self.mul(result, self._evaluate(child))
            return result
        if data == "factor":
            base = self._evaluate(children[0])
            if len(children) == 1:
                return base
            token = children[1]
            k = int(token)
            if k < 0 and (base.is_zero() or not self.is_member(base)):
                raise ParseError(
                    "negative power of a non-unit", _token_offset(token)
                )
            return self.power(base, k)
        if data == "symbol":
            token = children[0]
            value = self._symbol_value(str(token))
            if value is None:
                raise ParseError(
                    "symbol %r is not defined in %s" % (str(token), self.name),
                    _token_offset(token),
                )
            return value
        if data == "integer":
            token = children[0]
            value = self._integer_value(int(token))
            if value is None:
                raise ParseError(
                    "integer %s is out of range for %s" % (token, self.name),
                    _token_offset(token),
                )
            return value
        if data == "bracket":
            return self._evaluate(children[0])
        if data == "sum":
            sign = 1
            result = None
            for child in children:
                if isinstance(child, Token):
                    sign = -1 if child.type == "MINUS" else 1
                    continue
                term = self._evaluate(child)
                if sign < 0:
                    term = self.neg(term)
                result = term if result is None else self.add(result, term)
                sign = 1
            return result
        raise ParseError("unexpected grammar node %s" % data)  # pragma: no cover


class PrimeField(PartialField):
    """GF(p), elements stored as residues."""

    finite = True

    def __init__(self, p):
        self.p = p
        self.name = "GF(%d)" % p
        self.kind = "FinitePrime"

    def from_int(self, n):
        return PFElement(self, n % self.p)

    def add(self, p, q):
        return PFElement(self, (p.payload + q.payload) % self.p)

    def mul(self, p, q):
        return PFElement(self, (p.payload * q.payload) % self.p)

    def neg(self, p):
        return PFElement(self, (-p.payload) % self.p)

    def inv(self, p):
        if p.payload == 0:
            raise NotInvertible(self.format(p))
        return PFElement(self, pow(p.payload, self.p - 2, self.p))

    def format(self, p):
        return str(p.payload)

    def _integer_value(self, n):
        if n >= self.p:
            return None
        return PFElement(self, n)

    def _symbol_value(self, name):
        return None

    def elements(self):
        return [PFElement(self, v) for v in range(self.p)]


class GF4Field(PartialField):
    """GF(4) as GF(2)[w]/(w^2+w+1); payload bit 0 is the constant, bit 1 the w part."""

    finite = True
    name = FIELD_GF4
    kind = "GF4"
    generators = ("w", "w+1")

    _names = {0: "0", 1: "1", 2: "w", 3: "w+1"}

    def from_int(self, n):
        return PFElement(self, n % 2)

    def add(self, p, q):
        return PFElement(self, p.payload ^ q.payload)

    def mul(self, p, q):
        a0, a1 = p.payload & 1, p.payload >> 1
        b0, b1 = q.payload & 1, q.payload >> 1
        c0 = (a0 & b0) ^ (a1 & b1)
        c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1)
        return PFElement(self, c0 | (c1 << 1))

    def neg(self, p):
        return p

    def inv(self, p):
        if p.payload == 0:
            raise NotInvertible("0")
        return PFElement(self, {1: 1, 2: 3, 3: 2}[p.payload])

    def format(self, p):
        return self._names[p.payload]

    def _integer_value(self, n):
        if n > 1:
            return None
        return PFElement(self, n)

    def _symbol_value(self, name):
        if name == "w":
            return PFElement(self, 2)
        if name == "w+1":
            return PFElement(self, 3)
        return None

    def elements(self):
        return [PFElement(self, v) for v in range(4)]


class SymbolicField(PartialField):
    """A partial field whose ring is a localization of an integer polynomial ring.

    The payload of an element is ``(numerator, exponents)`` where the
    numerator is a :py:class:`Polynomial` and ``exponents[i]`` is the power of
    the i-th generator in the denominator. In canonical form no generator with
    a positive denominator exponent divides the numerator.
    """

    def __init__(self, name, variables, generators):
        """
        Constructor.

        :param name: Canonical name of the partial field.
        :param variables: Names of the indeterminates.
        :param generators: List of (name, polynomial) pairs.
        """
        self.name = name
        self.kind = name
        self.variables = tuple(variables)
        self.generators = tuple(g for g, _ in generators)
        self._gens = [poly for _, poly in generators]
        self._nvars = len(variables)
        self._ngens = len(generators)
        self._gen_powers = {}

    def _gen_power(self, i, k):
        key = (i, k)
        if key not in self._gen_powers:
            self._gen_powers[key] = self._gens[i] ** k
        return self._gen_powers[key]

    def _make(self, numerator, exponents):
        exponents = list(exponents)
        if numerator.is_zero():
            return PFElement(self, (numerator, (0,) * self._ngens))
        for i in range(self._ngens):
            while exponents[i] > 0:
                quotient = numerator.divide(self._gens[i])
                if quotient is None:
                    break
                numerator = quotient
                exponents[i] -= 1
        return PFElement(self, (numerator, tuple(exponents)))

    def from_int(self, n):
        return self._make(Polynomial.constant(self._nvars, n), (0,) * self._ngens)

    def from_polynomial(self, poly):
        return self._make(poly, (0,) * self._ngens)

    def add(self, p, q):
        n1, d1 = p.payload
        n2, d2 = q.payload
        common = [max(a, b) for a, b in zip(d1, d2)]
        left, right = n1, n2
        for i, k in enumerate(common):
            if k - d1[i]:
                left = left * self._gen_power(i, k - d1[i])
            if k - d2[i]:
                right = right * self._gen_power(i, k - d2[i])
        return self._make(left + right, common)

    def mul(self, p, q):
        n1, d1 = p.payload
        n2, d2 = q.payload
        return self._make(n1 * n2, [a + b for a, b in zip(d1, d2)])

    def neg(self, p):
        n, d = p.payload
        return PFElement(self, (-n, d))

    def is_zero(self, p):
        return p.payload[0].is_zero()

    def factor(self, p):
        """
        Splits a non-zero element as sign * content * prod(gen^e) * rest.

        :return: A tuple ``(sign, content, exponents, rest)`` where ``rest`` is a
            primitive polynomial with positive leading coefficient that no
            generator divides.
        """
        numerator, den = p.payload
        exponents = [-k for k in den]
        for i in range(self._ngens):
            while True:
                quotient = numerator.divide(self._gens[i])
                if quotient is None:
                    break
                numerator = quotient
                exponents[i] += 1
        content = numerator.content()
        _, lead = numerator.leading()
        sign = -1 if lead < 0 else 1
        rest = numerator.divide(Polynomial.constant(self._nvars, sign * content))
        return sign, content, tuple(exponents), rest

    def is_member(self, p):
        if self.is_zero(p):
            return True
        _, content, _, rest = self.factor(p)
        return content == 1 and rest.is_constant()

    def inv(self, p):
        if self.is_zero(p) or not self.is_member(p):
            raise NotInvertible(self.format(p))
        sign, _, exponents, _ = self.factor(p)
        numerator = Polynomial.constant(self._nvars, sign)
        den = [0] * self._ngens
        for i, e in enumerate(exponents):
            if e < 0:
                numerator = numerator * self._gen_power(i, -e)
            elif e > 0:
                den[i] = e
        return self._make(numerator, den)

    def format(self, p):
        if self.is_zero(p):
            return "0"
        sign, content, exponents, rest = self.factor(p)
        factors = []
        if content != 1:
            factors.append(str(content))
        for name, e in zip(self.generators, exponents):
            if e == 1:
                factors.append(name)
            elif e:
                factors.append("%s^%d" % (name, e))
        if not rest.is_constant():
            factors.append("[%s]" % rest.format(self.variables))
        text = "*".join(factors) if factors else "1"
        return "-" + text if sign < 0 else text

    def _symbol_value(self, name):
        if name in self.generators:
            return self.from_polynomial(self._gens[self.generators.index(name)])
        if name in self.variables:
            index = self.variables.index(name)
            return self.from_polynomial(Polynomial.variable(self._nvars, index))
        return None


def _near_regular():
    a = Polynomial.variable(1, 0)
    one = Polynomial.constant(1, 1)
    return SymbolicField(FIELD_NEAR_REGULAR, ["a"], [("a", a), ("(1-a)", one - a)])


def _two_regular():
    a1 = Polynomial.variable(2, 0)
    a2 = Polynomial.variable(2, 1)
    one = Polynomial.constant(2, 1)
    return SymbolicField(
        FIELD_TWO_REGULAR,
        ["a1", "a2"],
        [
            ("a1", a1),
            ("a2", a2),
            ("(1-a1)", one - a1),
            ("(1-a2)", one - a2),
            ("(a1-a2)", a1 - a2),
        ],
    )


_FACTORIES = {
    FIELD_GF4: GF4Field,
    FIELD_REGULAR: lambda: SymbolicField(FIELD_REGULAR, [], []),
    FIELD_DYADIC: lambda: SymbolicField(
        FIELD_DYADIC, [], [("2", Polynomial.constant(0, 2))]
    ),
    FIELD_NEAR_REGULAR: _near_regular,
    FIELD_TWO_REGULAR: _two_regular,
}

_cache = {}


def canonical_name(name):
    """
    Resolves a partial field name such as ``gf(5)`` or ``near-regular``.

    :raises UnknownField: for unsupported names.
    """
    key = str(name).strip().lower().replace(" ", "")
    if key in FIELD_ALIASES:
        return FIELD_ALIASES[key]
    for canonical in _FACTORIES:
        if key == canonical.lower():
            return canonical
    if key.startswith("gf(") and key.endswith(")"):
        key = "gf" + key[3:-1]
    if key.startswith("gf") and key[2:].isdigit():
        p = int(key[2:])
        if p in PRIME_FIELDS:
            return "GF(%d)" % p
        if p == 4:
            return FIELD_GF4
    raise UnknownField(name)


def pf_make(name):
    """
    Returns the descriptor of a supported partial field.

    :param name: ``GF(p)`` for a prime p <= 13, ``GF(4)``, ``regular``,
        ``dyadic``, ``near-regular`` or ``2-regular``.
    """
    canonical = canonical_name(name)
    if canonical not in _cache:
        if canonical in _FACTORIES:
            _cache[canonical] = _FACTORIES[canonical]()
        else:
            _cache[canonical] = PrimeField(int(canonical[3:-1]))
        logger.debug("Created partial field %s", canonical)
    return _cache[canonical]


def _same(p, q):
    if p.field.name != q.field.name:
        raise DescriptorMismatch(p.field.name, q.field.name)
    return p.field


def pf_add(p, q):
    return _same(p, q).add(p, q)


def pf_mul(p, q):
    return _same(p, q).mul(p, q)


def pf_neg(p):
    return p.field.neg(p)


def pf_inv(p):
    return p.field.inv(p)


def pf_is_member(pf, r):
    if r.field.name != pf.name:
        raise DescriptorMismatch(pf.name, r.field.name)
    return pf.is_member(r)


def pf_parse(pf, text):
    return pf.parse(text)


def pf_format(pf, e):
    if e.field.name != pf.name:
        raise DescriptorMismatch(pf.name, e.field.name)
    return pf.format(e)
