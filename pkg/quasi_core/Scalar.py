import math
import re
from fractions import Fraction
from functools import lru_cache

import sympy

from .Errors import ConductorMismatch, DefinitionSyntaxError, DivisionByZero, InvalidParameter

_x = sympy.Symbol("x")


@lru_cache(maxsize=None)
def cyclotomic_coefficients(m):
    """Integer coefficients of the m-th cyclotomic polynomial, lowest degree first."""
    if m < 1:
        raise InvalidParameter(f"conductor must be positive, got {m}")
    poly = sympy.cyclotomic_poly(m, _x, polys=True)
    coeffs = tuple(int(c) for c in reversed(poly.all_coeffs()))
    assert len(coeffs) - 1 == int(sympy.totient(m))
    return coeffs


def field_degree(m):
    return len(cyclotomic_coefficients(m)) - 1


def _reduce(values, m):
    phi = cyclotomic_coefficients(m)
    d = len(phi) - 1
    c = [Fraction(v) for v in values]
    if len(c) < d:
        c.extend([Fraction(0)] * (d - len(c)))
    # Phi_m is monic, so the leading term cancels exactly
    for i in range(len(c) - 1, d - 1, -1):
        t = c[i]
        if t:
            base = i - d
            for j in range(d):
                if phi[j]:
                    c[base + j] -= t * phi[j]
    return tuple(c[:d])


class Scalar:
    """Exact element of Q(zeta_m), stored as its reduced coefficient vector in powers of zeta_m."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, value=0, conductor=1):
        if isinstance(value, Scalar):
            value = as_scalar(value, conductor).coeffs
        if isinstance(value, (int, Fraction)):
            value = (value,)
        self.conductor = conductor
        self.coeffs = _reduce(value, conductor)

    @classmethod
    def _raw(cls, conductor, coeffs):
        obj = cls.__new__(cls)
        obj.conductor = conductor
        obj.coeffs = coeffs
        return obj

    @classmethod
    def zero(cls, conductor=1):
        return cls._raw(conductor, (Fraction(0),) * field_degree(conductor))

    @classmethod
    def one(cls, conductor=1):
        return cls._raw(conductor, (Fraction(1),) + (Fraction(0),) * (field_degree(conductor) - 1))

    # --------------------------
    # coercion
    # --------------------------
    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.conductor != self.conductor:
                raise ConductorMismatch(
                    f"conductor {self.conductor} vs {other.conductor}")
            return other
        if isinstance(other, (int, Fraction)):
            d = len(self.coeffs)
            return Scalar._raw(self.conductor, (Fraction(other),) + (Fraction(0),) * (d - 1))
        return None

    def is_rational(self):
        return not any(self.coeffs[1:])

    def rational(self):
        """Return the value as a Fraction, or None when it is not rational."""
        return self.coeffs[0] if self.is_rational() else None

    # --------------------------
    # field operations
    # --------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar._raw(self.conductor, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar._raw(self.conductor, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return Scalar._raw(self.conductor, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        m = self.conductor
        if o.is_rational():
            t = o.coeffs[0]
            return Scalar._raw(m, tuple(a * t for a in self.coeffs))
        if self.is_rational():
            t = self.coeffs[0]
            return Scalar._raw(m, tuple(t * b for b in o.coeffs))
        d = len(self.coeffs)
        prod = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        prod[i + j] += a * b
        return Scalar._raw(m, _reduce(prod, m))

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise DivisionByZero("inverse of zero scalar")
        m = self.conductor
        if self.is_rational():
            return Scalar._raw(m, (1 / self.coeffs[0],) + self.coeffs[1:])
        num = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(self.coeffs)],
                         _x, domain=sympy.QQ)
        mod = sympy.Poly(list(reversed(cyclotomic_coefficients(m))), _x, domain=sympy.QQ)
        inv = num.invert(mod)
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(inv.all_coeffs())]
        return Scalar._raw(m, _reduce(coeffs, m))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = Scalar.one(self.conductor)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # --------------------------
    # comparison
    # --------------------------
    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.conductor == other.conductor and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.conductor, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return f"Scalar({self}, conductor={self.conductor})"

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            elif c == 1:
                terms.append(f"z^{k}")
            elif c == -1:
                terms.append(f"-z^{k}")
            else:
                terms.append(f"{c}*z^{k}")
        return " + ".join(terms) if terms else "0"


def as_scalar(value, conductor):
    if isinstance(value, Scalar):
        if value.conductor != conductor:
            raise ConductorMismatch(f"conductor {value.conductor} vs {conductor}")
        return value
    return Scalar(value, conductor)


def root_of_unity(m, k=1):
    """zeta_m ** k, reduced."""
    if m < 1:
        raise InvalidParameter(f"conductor must be positive, got {m}")
    e = k % m
    return Scalar._raw(m, _reduce([0] * e + [1], m))


def galois(a, k):
    """Apply the field automorphism zeta_m -> zeta_m**k to a."""
    m = a.conductor
    if math.gcd(k, m) != 1:
        raise InvalidParameter(f"zeta -> zeta^{k} is not an automorphism of Q(zeta_{m})")
    result = Scalar.zero(m)
    for i, c in enumerate(a.coeffs):
        if c:
            result = result + root_of_unity(m, i * k) * c
    return result


def conj(a):
    return galois(a, -1)


@lru_cache(maxsize=None)
def _root_table(m):
    n = m if m % 2 == 0 else 2 * m
    gen = root_of_unity(m, 1) if m % 2 == 0 else -root_of_unity(m, 1)
    table = {}
    power = Scalar.one(m)
    for k in range(n):
        table[power.coeffs] = k
        power = power * gen
    return n, gen, table


def root_group_order(m):
    """Order N of the group of roots of unity in Q(zeta_m)."""
    return _root_table(m)[0]


def root_generator(m):
    return _root_table(m)[1]


def discrete_log(a):
    """Exponent k with a = xi**k for the generator xi of all roots of unity, or None."""
    return _root_table(a.conductor)[2].get(a.coeffs)


# --------------------------
# TEXT FORM
# --------------------------
_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)"
    r"|(?P<name>[A-Za-z_][A-Za-z0-9_]*(?:\([0-9,\s]*\))?)"
    r"|(?P<op>[-+*^()]))")


def _tokenize(text):
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if not match or match.end() == pos:
            raise DefinitionSyntaxError(f"unexpected character {text[pos]!r}", column=pos + 1)
        kind = match.lastgroup
        value = match.group(kind)
        if kind == "name":
            value = re.sub(r"\s+", "", value)
        tokens.append((kind, value, match.start(kind) + 1))
        pos = match.end()
    return tokens


class _CombinationParser:
    def __init__(self, text, conductor, names):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.conductor = conductor
        self.names = names

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def fail(self, message):
        col = self.peek()[2]
        raise DefinitionSyntaxError(message, column=col)

    def parse(self):
        if not self.tokens:
            self.fail("empty expression")
        result = self.expression()
        if self.pos != len(self.tokens):
            self.fail(f"unexpected token {self.peek()[1]!r}")
        return result

    def expression(self):
        result = {}
        sign = 1
        kind, value, _ = self.peek()
        if kind == "op" and value in "+-":
            self.take()
            sign = -1 if value == "-" else 1
        while True:
            coeff, name = self.term()
            if sign < 0:
                coeff = -coeff
            result[name] = result.get(name, Scalar.zero(self.conductor)) + coeff
            kind, value, _ = self.peek()
            if kind == "op" and value in "+-":
                self.take()
                sign = -1 if value == "-" else 1
                # allow "a + -b"
                kind2, value2, _ = self.peek()
                if kind2 == "op" and value2 in "+-":
                    self.take()
                    if value2 == "-":
                        sign = -sign
                continue
            break
        return {k: v for k, v in result.items() if v}

    def term(self):
        coeff = Scalar.one(self.conductor)
        name = None
        while True:
            value = self.factor()
            if isinstance(value, str):
                if name is not None:
                    self.fail("a term may name at most one basis element")
                name = value
            else:
                coeff = coeff * value
            kind, op, _ = self.peek()
            if kind == "op" and op == "*":
                self.take()
                continue
            return coeff, name

    def factor(self):
        kind, value, col = self.take()
        if kind == "num":
            return Scalar(Fraction(value), self.conductor)
        if kind == "name" and value == "z":
            nkind, nval, _ = self.peek()
            if nkind == "op" and nval == "^":
                self.take()
                sign = 1
                skind, sval, _ = self.peek()
                if skind == "op" and sval in "+-":
                    self.take()
                    sign = -1 if sval == "-" else 1
                ekind, evalue, ecol = self.take()
                if ekind != "num" or "/" in evalue:
                    raise DefinitionSyntaxError("exponent of z must be an integer", column=ecol)
                return root_of_unity(self.conductor, sign * int(evalue))
            return root_of_unity(self.conductor, 1)
        if kind == "name":
            if self.names is None:
                raise DefinitionSyntaxError(f"unexpected name {value!r} in scalar", column=col)
            if value not in self.names:
                raise DefinitionSyntaxError(f"unknown basis element {value!r}", column=col)
            return value
        if kind == "op" and value == "(":
            inner = self.expression()
            ckind, cval, ccol = self.take()
            if ckind != "op" or cval != ")":
                raise DefinitionSyntaxError("expected ')'", column=ccol)
            if any(k is not None for k in inner):
                raise DefinitionSyntaxError("parentheses may only hold scalars", column=col)
            return inner.get(None, Scalar.zero(self.conductor))
        if kind == "op" and value == "-":
            inner = self.factor()
            if isinstance(inner, str):
                self.fail("use '-1*name' to negate a basis element")
            return -inner
        raise DefinitionSyntaxError(f"unexpected token {value!r}", column=col)


def parse_combination(text, conductor, names):
    """Parse 'c1*b1 + c2*b2 + c0' into {name: Scalar}; the key None holds the scalar part."""
    return _CombinationParser(text, conductor, set(names)).parse()


def parse_scalar(text, conductor=1):
    parsed = _CombinationParser(str(text), conductor, None).parse()
    return parsed.get(None, Scalar.zero(conductor))
