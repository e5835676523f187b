"""Exact arithmetic substrate: big rationals, sparse multivariate
polynomials, and truncated power series with polynomial coefficients.

Symbols are plain strings, ordered lexicographically.  A monomial is a
sorted tuple of (symbol, exponent) pairs with positive exponents; the
empty tuple is the constant monomial 1.  Polynomials map monomials to
nonzero Fractions.  Everything is immutable after construction and every
operation is a pure function, so values can be shared freely.

The canonical text rendering (terms in graded-lex ascending order,
explicit ``*`` between factors, ``^`` for powers, rationals as ``a/b``)
is the golden-file format; ``parse_polynomial`` reads it back, and also
accepts implicit multiplication by juxtaposition.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Rational = Union[int, Fraction]
Monomial = tuple[tuple[str, int], ...]

ONE_MONOMIAL: Monomial = ()


class ParseError(ValueError):
    """Malformed polynomial or grammar text."""


def monomial(exponents: Mapping[str, int]) -> Monomial:
    """Build a monomial from a symbol -> exponent mapping; zeros dropped."""
    for name, exp in exponents.items():
        if not name:
            raise ValueError("empty symbol name")
        if exp < 0:
            raise ValueError(f"negative exponent for symbol {name!r}")
    return tuple(sorted((n, e) for n, e in exponents.items() if e > 0))


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    exps = dict(a)
    for name, exp in b:
        exps[name] = exps.get(name, 0) + exp
    return tuple(sorted(exps.items()))


def monomial_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def _coerce_coeff(value: Rational) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


class Polynomial:
    """Sparse multivariate polynomial with exact rational coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, Rational] | None = None):
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                c = _coerce_coeff(coeff)
                if c:
                    clean[mono] = clean.get(mono, Fraction(0)) + c
                    if not clean[mono]:
                        del clean[mono]
        self._terms = clean

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "Polynomial":
        return Polynomial()

    @staticmethod
    def one() -> "Polynomial":
        return Polynomial({ONE_MONOMIAL: 1})

    @staticmethod
    def rational(value: Rational) -> "Polynomial":
        return Polynomial({ONE_MONOMIAL: value})

    @staticmethod
    def symbol(name: str) -> "Polynomial":
        return Polynomial({monomial({name: 1}): 1})

    @staticmethod
    def from_monomial(mono: Monomial, coeff: Rational = 1) -> "Polynomial":
        return Polynomial({mono: coeff})

    # -- inspection ---------------------------------------------------

    def terms(self) -> Mapping[Monomial, Fraction]:
        """Read-only view of the term map (do not mutate)."""
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def is_integral(self) -> bool:
        """True if every coefficient is an integer."""
        return all(c.denominator == 1 for c in self._terms.values())

    def symbols(self) -> set[str]:
        return {name for mono in self._terms for name, _ in mono}

    def total_degree(self) -> int:
        if not self._terms:
            return 0
        return max(monomial_degree(m) for m in self._terms)

    def degree_in(self, name: str) -> int:
        deg = 0
        for mono in self._terms:
            for sym_name, exp in mono:
                if sym_name == name:
                    deg = max(deg, exp)
        return deg

    def coefficient(self, mono: Monomial) -> Fraction:
        return self._terms.get(mono, Fraction(0))

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial; error if non-constant."""
        if not self._terms:
            return Fraction(0)
        if set(self._terms) == {ONE_MONOMIAL}:
            return self._terms[ONE_MONOMIAL]
        raise ValueError(f"not a constant polynomial: {self}")

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in canonical order: graded lex, ascending."""
        names = sorted(self.symbols())

        def key(mono: Monomial) -> tuple[int, tuple[int, ...]]:
            exps = dict(mono)
            return (monomial_degree(mono), tuple(exps.get(n, 0) for n in names))

        return [(m, self._terms[m]) for m in sorted(self._terms, key=key)]

    def coefficients_in(self, name: str) -> dict[int, "Polynomial"]:
        """Group terms by the exponent of one symbol.

        Returns {exponent: polynomial free of that symbol}; the keys are
        exactly the exponents that occur.
        """
        groups: dict[int, dict[Monomial, Fraction]] = {}
        for mono, coeff in self._terms.items():
            exps = dict(mono)
            e = exps.pop(name, 0)
            rest = tuple(sorted(exps.items()))
            groups.setdefault(e, {})[rest] = coeff
        return {e: Polynomial(terms) for e, terms in sorted(groups.items())}

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "Polynomial" | Rational) -> "Polynomial":
        other = coerce_polynomial(other)
        terms = dict(self._terms)
        for mono, coeff in other._terms.items():
            acc = terms.get(mono, Fraction(0)) + coeff
            if acc:
                terms[mono] = acc
            else:
                terms.pop(mono, None)
        out = Polynomial.__new__(Polynomial)
        out._terms = terms
        return out

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        out = Polynomial.__new__(Polynomial)
        out._terms = {m: -c for m, c in self._terms.items()}
        return out

    def __sub__(self, other: "Polynomial" | Rational) -> "Polynomial":
        return self + (-coerce_polynomial(other))

    def __rsub__(self, other: "Polynomial" | Rational) -> "Polynomial":
        return coerce_polynomial(other) + (-self)

    def __mul__(self, other: "Polynomial" | Rational) -> "Polynomial":
        other = coerce_polynomial(other)
        terms: dict[Monomial, Fraction] = {}
        for mono_a, coeff_a in self._terms.items():
            for mono_b, coeff_b in other._terms.items():
                mono = monomial_mul(mono_a, mono_b)
                acc = terms.get(mono, Fraction(0)) + coeff_a * coeff_b
                if acc:
                    terms[mono] = acc
                else:
                    terms.pop(mono, None)
        out = Polynomial.__new__(Polynomial)
        out._terms = terms
        return out

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial exponent must be a nonnegative integer")
        result = Polynomial.one()
        for _ in range(exponent):
            result = result * self
        return result

    def scale(self, value: Rational) -> "Polynomial":
        return self * Polynomial.rational(value)

    # -- calculus-flavoured operations ---------------------------------

    def diff(self, name: str) -> "Polynomial":
        """Formal partial derivative with respect to one symbol."""
        terms: dict[Monomial, Fraction] = {}
        for mono, coeff in self._terms.items():
            exps = dict(mono)
            e = exps.get(name, 0)
            if not e:
                continue
            if e == 1:
                del exps[name]
            else:
                exps[name] = e - 1
            lowered = tuple(sorted(exps.items()))
            acc = terms.get(lowered, Fraction(0)) + coeff * e
            if acc:
                terms[lowered] = acc
            else:
                terms.pop(lowered, None)
        out = Polynomial.__new__(Polynomial)
        out._terms = terms
        return out

    def substitute(self, name: str, value: "Polynomial" | Rational) -> "Polynomial":
        """Replace every occurrence of a symbol by a polynomial value."""
        value = coerce_polynomial(value)
        result = Polynomial.zero()
        powers: dict[int, Polynomial] = {0: Polynomial.one()}
        for mono, coeff in self._terms.items():
            exps = dict(mono)
            e = exps.pop(name, 0)
            if e not in powers:
                powers[e] = value**e
            rest = Polynomial({tuple(sorted(exps.items())): coeff})
            result = result + rest * powers[e]
        return result

    # -- protocol -----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.rational(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __str__(self) -> str:
        return render_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({render_polynomial(self)!r})"


def coerce_polynomial(value: Polynomial | Rational) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    return Polynomial.rational(value)


def sym(name: str) -> Polynomial:
    """Shorthand for the polynomial consisting of one symbol."""
    return Polynomial.symbol(name)


# -- rendering ---------------------------------------------------------


def _render_monomial(mono: Monomial) -> str:
    return "*".join(n if e == 1 else f"{n}^{e}" for n, e in mono)


def render_polynomial(p: Polynomial) -> str:
    """Canonical rendering; deterministic and re-parseable."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for mono, coeff in p.sorted_terms():
        mag = -coeff if coeff < 0 else coeff
        if mono == ONE_MONOMIAL:
            body = str(mag)
        elif mag == 1:
            body = _render_monomial(mono)
        else:
            body = f"{mag}*{_render_monomial(mono)}"
        if not parts:
            parts.append(f"-{body}" if coeff < 0 else body)
        else:
            parts.append(f" - {body}" if coeff < 0 else f" + {body}")
    return "".join(parts)


# -- tokenizer / parser -------------------------------------------------


class Token:
    __slots__ = ("kind", "value", "line", "col")

    def __init__(self, kind: str, value, line: int, col: int):
        self.kind = kind
        self.value = value
        self.line = line
        self.col = col

    def __repr__(self) -> str:
        return f"Token({self.kind}, {self.value!r}, {self.line}:{self.col})"


_OPERATORS = ("->", "+", "-", "*", "^", "(", ")", ";")


def tokenize(text: str) -> list[Token]:
    """Lex polynomial / grammar-rule text.  ``#`` comments run to end of line."""
    tokens: list[Token] = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if ch.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            numer = int(text[start:i])
            if i < n and text[i] == "/" and i + 1 < n and text[i + 1].isdigit():
                i += 1
                dstart = i
                while i < n and text[i].isdigit():
                    i += 1
                value = Fraction(numer, int(text[dstart:i]))
            else:
                value = Fraction(numer)
            tokens.append(Token("num", value, line, col))
            col += i - start
            continue
        if ch.isalpha() or ch == "_":
            start = i
            while i < n and (text[i].isalnum() or text[i] == "_"):
                i += 1
            tokens.append(Token("name", text[start:i], line, col))
            col += i - start
            continue
        for op in _OPERATORS:
            if text.startswith(op, i):
                tokens.append(Token(op, op, line, col))
                i += len(op)
                col += len(op)
                break
        else:
            raise ParseError(f"unexpected character {ch!r} at {line}:{col}")
    tokens.append(Token("end", None, line, col))
    return tokens


class _ExprParser:
    """Recursive-descent parser for polynomial expressions.

    Grammar: expr := ['-'] term (('+'|'-') term)*
             term := factor (['*'] factor)*
             factor := atom ['^' integer]
             atom := number | name | '(' expr ')'
    Juxtaposition of factors multiplies.
    """

    def __init__(self, tokens: Sequence[Token], pos: int = 0):
        self.tokens = tokens
        self.pos = pos

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def next(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, message: str) -> ParseError:
        tok = self.peek()
        return ParseError(f"{message} at {tok.line}:{tok.col}")

    def parse_expr(self) -> Polynomial:
        negate = False
        if self.peek().kind == "-":
            self.next()
            negate = True
        result = self.parse_term()
        if negate:
            result = -result
        while self.peek().kind in ("+", "-"):
            op = self.next().kind
            term = self.parse_term()
            result = result + term if op == "+" else result - term
        return result

    def parse_term(self) -> Polynomial:
        result = self.parse_factor()
        while True:
            kind = self.peek().kind
            if kind == "*":
                self.next()
                result = result * self.parse_factor()
            elif kind in ("num", "name", "("):
                result = result * self.parse_factor()
            else:
                return result

    def parse_factor(self) -> Polynomial:
        base = self.parse_atom()
        if self.peek().kind == "^":
            self.next()
            tok = self.peek()
            if tok.kind != "num" or tok.value.denominator != 1:
                raise self.fail("expected nonnegative integer exponent")
            self.next()
            base = base ** int(tok.value)
        return base

    def parse_atom(self) -> Polynomial:
        tok = self.peek()
        if tok.kind == "num":
            self.next()
            return Polynomial.rational(tok.value)
        if tok.kind == "name":
            self.next()
            return Polynomial.symbol(tok.value)
        if tok.kind == "(":
            self.next()
            inner = self.parse_expr()
            if self.peek().kind != ")":
                raise self.fail("expected ')'")
            self.next()
            return inner
        raise self.fail("expected number, symbol or '('")


def parse_polynomial(text: str) -> Polynomial:
    parser = _ExprParser(tokenize(text))
    result = parser.parse_expr()
    if parser.peek().kind != "end":
        raise parser.fail("unexpected trailing input")
    return result


# -- falling-factorial basis --------------------------------------------


def falling_factorial(base: Polynomial | Rational, n: int) -> Polynomial:
    """base*(base-1)*...*(base-n+1); the empty product for n=0."""
    if n < 0:
        raise ValueError("falling factorial needs n >= 0")
    base = coerce_polynomial(base)
    result = Polynomial.one()
    for i in range(n):
        result = result * (base - i)
    return result


def _divide_linear(p: Polynomial, name: str, root: int) -> Polynomial:
    """Exact synthetic division of p by (name - root); remainder must vanish."""
    by_power = p.coefficients_in(name)
    degree = max(by_power) if by_power else 0
    quotient: dict[int, Polynomial] = {}
    carry = Polynomial.zero()
    for e in range(degree, 0, -1):
        carry = by_power.get(e, Polynomial.zero()) + carry * root
        quotient[e - 1] = carry
    remainder = by_power.get(0, Polynomial.zero()) + carry * root
    if not remainder.is_zero():
        raise ValueError(f"nonzero remainder dividing by ({name} - {root})")
    var = Polynomial.symbol(name)
    result = Polynomial.zero()
    for e, coeff in quotient.items():
        result = result + coeff * var**e
    return result


def to_falling_factorial_basis(p: Polynomial, name: str) -> list[Polynomial]:
    """Coefficients c_k with p = sum c_k * name^(falling k).

    Computed by successive evaluation at 0, 1, 2, ... and exact division
    by the linear factors, so the result does not presuppose any triangle
    of basis-change numbers.
    """
    if p.is_zero():
        return [Polynomial.zero()]
    coeffs: list[Polynomial] = []
    rem = p
    k = 0
    while not rem.is_zero():
        c = rem.substitute(name, k)
        coeffs.append(c)
        rem = _divide_linear(rem - c, name, k)
        k += 1
    return coeffs


def from_falling_factorial_basis(coeffs: Iterable[Polynomial | Rational], name: str) -> Polynomial:
    var = Polynomial.symbol(name)
    result = Polynomial.zero()
    for k, c in enumerate(coeffs):
        result = result + coerce_polynomial(c) * falling_factorial(var, k)
    return result


# -- truncated power series ----------------------------------------------


class TruncatedSeries:
    """Power series in one distinguished variable, truncated at a fixed
    order, with polynomial coefficients free of that variable."""

    __slots__ = ("variable", "coefficients")

    def __init__(self, variable: str, coefficients: Sequence[Polynomial | Rational]):
        if not coefficients:
            raise ValueError("need at least the order-0 coefficient")
        coeffs = tuple(coerce_polynomial(c) for c in coefficients)
        for c in coeffs:
            if variable in c.symbols():
                raise ValueError(
                    f"coefficient {c} contains the series variable {variable!r}"
                )
        self.variable = variable
        self.coefficients = coeffs

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    @staticmethod
    def constant(variable: str, value: Polynomial | Rational, order: int) -> "TruncatedSeries":
        coeffs = [coerce_polynomial(value)] + [Polynomial.zero()] * order
        return TruncatedSeries(variable, coeffs)

    @staticmethod
    def var(variable: str, order: int) -> "TruncatedSeries":
        """The series consisting of the variable itself."""
        if order < 1:
            raise ValueError("order must be >= 1 to hold the variable")
        coeffs = [Polynomial.zero(), Polynomial.one()] + [Polynomial.zero()] * (order - 1)
        return TruncatedSeries(variable, coeffs)

    def coefficient(self, n: int) -> Polynomial:
        return self.coefficients[n]

    def _check_compatible(self, other: "TruncatedSeries") -> None:
        if self.variable != other.variable:
            raise ValueError(
                f"mismatched series variables {self.variable!r} and {other.variable!r}"
            )

    def __add__(self, other: "TruncatedSeries | Polynomial | Rational") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries.constant(self.variable, other, self.order)
        self._check_compatible(other)
        order = min(self.order, other.order)
        coeffs = [self.coefficients[i] + other.coefficients[i] for i in range(order + 1)]
        return TruncatedSeries(self.variable, coeffs)

    __radd__ = __add__

    def __sub__(self, other: "TruncatedSeries | Polynomial | Rational") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries.constant(self.variable, other, self.order)
        return self + other.scale(-1)

    def __rsub__(self, other: "TruncatedSeries | Polynomial | Rational") -> "TruncatedSeries":
        return self.scale(-1) + other

    def __mul__(self, other: "TruncatedSeries | Polynomial | Rational") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        self._check_compatible(other)
        order = min(self.order, other.order)
        coeffs = [Polynomial.zero() for _ in range(order + 1)]
        for i, a in enumerate(self.coefficients[: order + 1]):
            if a.is_zero():
                continue
            for j in range(order + 1 - i):
                b = other.coefficients[j]
                if not b.is_zero():
                    coeffs[i + j] = coeffs[i + j] + a * b
        return TruncatedSeries(self.variable, coeffs)

    __rmul__ = __mul__

    def scale(self, value: Polynomial | Rational) -> "TruncatedSeries":
        factor = coerce_polynomial(value)
        return TruncatedSeries(self.variable, [c * factor for c in self.coefficients])

    def exp(self) -> "TruncatedSeries":
        """Exponential of a series with zero constant term, same order."""
        if not self.coefficients[0].is_zero():
            raise ValueError("series exponential needs zero constant term")
        coeffs = [Polynomial.one()]
        for n in range(1, self.order + 1):
            acc = Polynomial.zero()
            for k in range(1, n + 1):
                a = self.coefficients[k] if k <= self.order else Polynomial.zero()
                if not a.is_zero():
                    acc = acc + a.scale(k) * coeffs[n - k]
            coeffs.append(acc.scale(Fraction(1, n)))
        return TruncatedSeries(self.variable, coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.variable == other.variable and self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash((self.variable, self.coefficients))

    def __str__(self) -> str:
        parts: list[str] = []
        for n, coeff in enumerate(self.coefficients):
            if coeff.is_zero():
                continue
            text = render_polynomial(coeff)
            if n == 0:
                parts.append(text)
                continue
            power = self.variable if n == 1 else f"{self.variable}^{n}"
            if coeff == Polynomial.one():
                parts.append(power)
            elif " + " in text or " - " in text or text.startswith("-"):
                parts.append(f"({text})*{power}")
            else:
                parts.append(f"{text}*{power}")
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O({self.variable}^{self.order + 1})"

    def __repr__(self) -> str:
        return f"TruncatedSeries({self})"
