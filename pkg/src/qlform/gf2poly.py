"""Exact sparse arithmetic over GF(2): multivariate polynomials and reduced fractions.

A monomial is packed into a single int, 24 bits per variable, with variable 0
occupying the most significant field.  Packing this way makes

  * monomial multiplication an integer addition,
  * squaring an integer doubling,
  * lexicographic comparison (t1 > t2 > ...) plain integer comparison,

and lets a polynomial over GF(2) be just a frozenset of term ints: since the
only nonzero coefficient is 1, presence of a term encodes the term, and
addition is symmetric difference.  The zero polynomial is the empty set.

Exponents are capped at 2**16 per variable and the variable count at 16;
operations that would exceed a cap raise CapExceeded rather than degrade.
All values are immutable and all operations are pure.
"""

from __future__ import annotations

import re

from . import gf2k
from .errors import (
    ArityMismatch,
    BothZero,
    CapExceeded,
    DivisionByZero,
    InexactDivision,
    ParseError,
)

MAX_VARS = 16
FIELD_BITS = 24
EXPONENT_CAP = 1 << 16

_FIELD_MASK = (1 << FIELD_BITS) - 1
_SHIFT = tuple(FIELD_BITS * (MAX_VARS - 1 - i) for i in range(MAX_VARS))
# Bits 16..23 of every field: set iff some exponent reached the cap.
_GUARD = sum(0xFF0000 << s for s in _SHIFT)

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


def _check_term(term):
    if term & _GUARD:
        raise CapExceeded(f"exponent cap {EXPONENT_CAP} exceeded")
    return term


class Polynomial2:
    """Multivariate polynomial over GF(2), in `arity` variables."""

    __slots__ = ("terms", "arity")

    def __init__(self, terms: frozenset, arity: int):
        # Trusted constructor: terms must already be packed and in range.
        self.terms = terms
        self.arity = arity

    @classmethod
    def zero(cls, arity: int) -> "Polynomial2":
        return cls(frozenset(), arity)

    @classmethod
    def one(cls, arity: int) -> "Polynomial2":
        return cls(frozenset((0,)), arity)

    @classmethod
    def variable(cls, index: int, arity: int) -> "Polynomial2":
        if not 0 <= index < arity:
            raise ArityMismatch(f"variable index {index} out of range for arity {arity}")
        return cls(frozenset((1 << _SHIFT[index],)), arity)

    @classmethod
    def from_exponents(cls, exponent_vectors, arity: int) -> "Polynomial2":
        """Build from an iterable of exponent tuples; pairs cancel mod 2."""
        if arity > MAX_VARS:
            raise CapExceeded(f"arity cap {MAX_VARS} exceeded")
        acc = set()
        for vec in exponent_vectors:
            if len(vec) != arity:
                raise ArityMismatch("exponent vector length != arity")
            term = 0
            for i, e in enumerate(vec):
                if not 0 <= e < EXPONENT_CAP:
                    raise CapExceeded(f"exponent {e} out of range")
                term |= e << _SHIFT[i]
            acc ^= {term}
        return cls(frozenset(acc), arity)

    # -- predicates ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_one(self) -> bool:
        return self.terms == _ONE_TERMS

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial2)
            and self.arity == other.arity
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.terms, self.arity))

    def __repr__(self):
        return f"Polynomial2({self!s})"

    def __str__(self):
        return poly_to_str(self, _default_names(self.arity))

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other):
        if self.arity != other.arity:
            raise ArityMismatch(f"arity {self.arity} vs {other.arity}")

    def __add__(self, other):
        self._check(other)
        return Polynomial2(self.terms ^ other.terms, self.arity)

    __sub__ = __add__

    def __mul__(self, other):
        self._check(other)
        if not self.terms or not other.terms:
            return Polynomial2.zero(self.arity)
        if self.is_one:
            return other
        if other.is_one:
            return self
        small, large = self.terms, other.terms
        if len(small) > len(large):
            small, large = large, small
        acc = set()
        update = acc.symmetric_difference_update
        for ta in small:
            # Within one row the sums are distinct, so toggling is exact.
            update(ta + tb for tb in large)
        for t in acc:
            _check_term(t)
        return Polynomial2(frozenset(acc), self.arity)

    def square(self) -> "Polynomial2":
        # Frobenius: (sum of terms)^2 = sum of squared terms over GF(2).
        return Polynomial2(frozenset(_check_term(t << 1) for t in self.terms), self.arity)

    def exact_div(self, other: "Polynomial2") -> "Polynomial2":
        """Exact quotient; raises InexactDivision when `other` does not divide."""
        self._check(other)
        if other.is_zero:
            raise DivisionByZero("polynomial division by zero")
        if self.is_zero:
            return self
        if other.is_one:
            return self
        lead_b = max(other.terms)
        rest_b = other.terms - {lead_b}
        rem = set(self.terms)
        quot = set()
        while rem:
            lead_r = max(rem)
            qt = lead_r - lead_b
            if qt < 0 or (qt & _GUARD):
                raise InexactDivision("nonzero remainder")
            quot ^= {qt}
            rem ^= {lead_r}
            for t in rest_b:
                rem ^= {qt + t}
        return Polynomial2(frozenset(quot), self.arity)

    def divides(self, other: "Polynomial2") -> bool:
        try:
            other.exact_div(self)
            return True
        except InexactDivision:
            return False

    # -- structure ----------------------------------------------------------

    def degree(self, var: int) -> int:
        if not 0 <= var < self.arity:
            raise ArityMismatch(f"variable index {var} out of range")
        s = _SHIFT[var]
        return max(((t >> s) & _FIELD_MASK for t in self.terms), default=0)

    def used_vars(self) -> set:
        used = set()
        for t in self.terms:
            for i in range(self.arity):
                if (t >> _SHIFT[i]) & _FIELD_MASK:
                    used.add(i)
        return used

    def even_odd_split(self, var: int):
        """f = even + x_var * odd, both parts even in x_var."""
        if not 0 <= var < self.arity:
            raise ArityMismatch(f"variable index {var} out of range")
        s = _SHIFT[var]
        one = 1 << s
        even, odd = set(), set()
        for t in self.terms:
            if (t >> s) & 1:
                odd.add(t - one)
            else:
                even.add(t)
        return (
            Polynomial2(frozenset(even), self.arity),
            Polynomial2(frozenset(odd), self.arity),
        )

    def parity_decompose(self) -> dict:
        """Write f = sum over S of g_S^2 * prod_{i in S} x_i.

        Returns {varmask: g_S} with bit i of varmask set iff x_i occurs to an
        odd power; absent masks are zero.
        """
        buckets = {}
        for t in self.terms:
            odd_bits = t & _ODD_BITS
            half = (t - odd_bits) >> 1
            mask = 0
            if odd_bits:
                for i in range(self.arity):
                    if (odd_bits >> _SHIFT[i]) & 1:
                        mask |= 1 << i
            buckets.setdefault(mask, set()).add(half)
        return {
            mask: Polynomial2(frozenset(terms), self.arity)
            for mask, terms in buckets.items()
        }

    def sqrt_exact(self):
        """Square root if every exponent is even, else None."""
        if any(t & _ODD_BITS for t in self.terms):
            return None
        return Polynomial2(frozenset(t >> 1 for t in self.terms), self.arity)

    def with_arity(self, arity: int) -> "Polynomial2":
        """Reinterpret in a larger variable scope (appended variables)."""
        if arity < self.arity:
            raise ArityMismatch("cannot shrink arity")
        if arity > MAX_VARS:
            raise CapExceeded(f"arity cap {MAX_VARS} exceeded")
        return Polynomial2(self.terms, arity)


_ONE_TERMS = frozenset((0,))
_ODD_BITS = sum(1 << s for s in _SHIFT)


# -- GCD ----------------------------------------------------------------------


def _monomial_content(p):
    """Fieldwise minimum exponent vector, packed."""
    it = iter(p.terms)
    acc = next(it)
    for t in it:
        if acc == 0:
            break
        merged = 0
        for s in _SHIFT[: p.arity]:
            a = (acc >> s) & _FIELD_MASK
            b = (t >> s) & _FIELD_MASK
            merged |= (a if a < b else b) << s
        acc = merged
    return acc


def _shift_terms(p, delta):
    if delta == 0:
        return p
    return Polynomial2(frozenset(_check_term(t + delta) for t in p.terms), p.arity)


def _unshift_terms(p, delta):
    if delta == 0:
        return p
    return Polynomial2(frozenset(t - delta for t in p.terms), p.arity)


def _univariate_bits(p, var):
    s = _SHIFT[var]
    bits = 0
    for t in p.terms:
        bits ^= 1 << ((t >> s) & _FIELD_MASK)
    return bits


def _gf2_bits_mod(a, b):
    db = b.bit_length() - 1
    while a and a.bit_length() - 1 >= db:
        a ^= b << (a.bit_length() - 1 - db)
    return a


def _bits_to_poly(bits, var, arity):
    s = _SHIFT[var]
    terms = set()
    e = 0
    while bits:
        if bits & 1:
            terms.add(e << s)
        bits >>= 1
        e += 1
    return Polynomial2(frozenset(terms), arity)


def _coeffs_in(p, var):
    """View p as univariate in `var`: {degree: coefficient polynomial}."""
    s = _SHIFT[var]
    out = {}
    for t in p.terms:
        d = (t >> s) & _FIELD_MASK
        out.setdefault(d, set()).add(t - (d << s))
    return {d: Polynomial2(frozenset(ts), p.arity) for d, ts in out.items()}


def _leading_coeff(p, var):
    s = _SHIFT[var]
    d = p.degree(var)
    shifted = d << s
    return Polynomial2(
        frozenset(t - shifted for t in p.terms if (t >> s) & _FIELD_MASK == d),
        p.arity,
    )


def _prem(a, b, var):
    """Pseudo-remainder of a by b with respect to `var` (char-2 signs trivial)."""
    s = _SHIFT[var]
    db = b.degree(var)
    lcb = _leading_coeff(b, var)
    while not a.is_zero:
        da = a.degree(var)
        if da < db:
            break
        lca = _leading_coeff(a, var)
        a = lcb * a + _shift_terms(lca * b, (da - db) << s)
    return a


def _content_and_primitive(p, var):
    coeffs = list(_coeffs_in(p, var).values())
    cont = coeffs[0]
    for c in coeffs[1:]:
        if cont.is_one:
            break
        cont = poly_gcd(cont, c)
    if cont.is_one:
        return cont, p
    return cont, p.exact_div(cont)


def _content_wrt(p, var):
    return _content_and_primitive(p, var)[0]


def _eval_point(attempt, var):
    x = (0x9E37 * (var + 1) + 0x79B9 * (attempt + 1)) & 0xFFFF
    return x or 1


def _eval_at(p, points, skip_var=None):
    """Image of p under x_i -> points[i] (skip_var left symbolic).

    Returns a GF(2^16) value, or a low-to-high coefficient list over GF(2^16)
    when skip_var is kept.
    """
    if skip_var is None:
        acc = 0
        for t in p.terms:
            val = 1
            for i, pt in points.items():
                e = (t >> _SHIFT[i]) & _FIELD_MASK
                if e:
                    val = gf2k.mul(val, gf2k.power(pt, e))
            acc ^= val
        return acc
    s = _SHIFT[skip_var]
    out = [0] * (p.degree(skip_var) + 1)
    for t in p.terms:
        val = 1
        for i, pt in points.items():
            e = (t >> _SHIFT[i]) & _FIELD_MASK
            if e:
                val = gf2k.mul(val, gf2k.power(pt, e))
        out[(t >> s) & _FIELD_MASK] ^= val
    return out


def _certified_coprime(a, b, var, used):
    """True only when deg_var(gcd(a, b)) = 0 is proven.

    The image of the gcd divides the gcd of the univariate images, and the
    evaluation preserves deg_var(gcd) whenever the leading coefficient of `a`
    in `var` survives, so a degree-0 image gcd is a proof.  A nonzero image
    degree is inconclusive (possibly an unlucky point), so retry, then give
    up and let the caller fall back.
    """
    lc = _leading_coeff(a, var)
    for attempt in range(3):
        points = {i: _eval_point(attempt, i) for i in used if i != var}
        if _eval_at(lc, points) == 0:
            continue
        ua = _eval_at(a, points, skip_var=var)
        ub = _eval_at(b, points, skip_var=var)
        if not any(ub):
            continue
        if gf2k.poly_gcd_degree(ua, ub) == 0:
            return True
        return False
    return False


def _gcd_core(a, b):
    if a.is_one or b.is_one:
        return Polynomial2.one(a.arity)
    if a == b:
        return a
    used = a.used_vars() | b.used_vars()
    if not used:
        return Polynomial2.one(a.arity)
    if len(used) == 1:
        var = next(iter(used))
        bits = _gf2_bits_gcd(_univariate_bits(a, var), _univariate_bits(b, var))
        return _bits_to_poly(bits, var, a.arity)
    # Exact divisibility is common (clearing structural factors): one cheap
    # division attempt settles it.
    if len(a.terms) <= len(b.terms) and a.divides(b):
        return a
    # A gcd free of some variable reduces to a gcd of contents, one variable
    # down; certify coprimality per variable before paying for a PRS.  For
    # small operands the PRS itself is cheaper than the evaluations.
    if len(a.terms) * len(b.terms) > 64:
        for var in sorted(used):
            if a.degree(var) == 0 or b.degree(var) == 0 or _certified_coprime(a, b, var, used):
                return poly_gcd(_content_wrt(a, var), _content_wrt(b, var))
    else:
        for var in sorted(used):
            if a.degree(var) == 0 or b.degree(var) == 0:
                return poly_gcd(_content_wrt(a, var), _content_wrt(b, var))
    var = min(used, key=lambda v: (max(a.degree(v), b.degree(v)), v))
    cont_a, pp_a = _content_and_primitive(a, var)
    cont_b, pp_b = _content_and_primitive(b, var)
    cont_g = poly_gcd(cont_a, cont_b)
    if pp_a.degree(var) < pp_b.degree(var):
        pp_a, pp_b = pp_b, pp_a
    while True:
        r = _prem(pp_a, pp_b, var)
        if r.is_zero:
            return cont_g * pp_b
        if r.degree(var) == 0:
            # Primitive parts are coprime in `var`; only content survives.
            return cont_g
        pp_a, pp_b = pp_b, _content_and_primitive(r, var)[1]


def _gf2_bits_gcd(a, b):
    while b:
        a, b = b, _gf2_bits_mod(a, b)
    return a


_GCD_MEMO = {}
_GCD_MEMO_CAP = 1 << 16


def poly_gcd(a: Polynomial2, b: Polynomial2) -> Polynomial2:
    """GCD over GF(2)[x1..xn]; monic automatically, gcd(a, 0) = a."""
    if a.arity != b.arity:
        raise ArityMismatch(f"arity {a.arity} vs {b.arity}")
    if a.is_zero and b.is_zero:
        raise BothZero("gcd(0, 0) undefined")
    if a.is_zero:
        return b
    if b.is_zero:
        return a
    if a == b:
        return a
    if len(a.terms) > len(b.terms):
        a, b = b, a
    key = (a.terms, b.terms)
    hit = _GCD_MEMO.get(key)
    if hit is not None:
        return Polynomial2(hit, a.arity)
    ma = _monomial_content(a)
    mb = _monomial_content(b)
    mg = 0
    for s in _SHIFT[: a.arity]:
        ea = (ma >> s) & _FIELD_MASK
        eb = (mb >> s) & _FIELD_MASK
        mg |= (ea if ea < eb else eb) << s
    core = _gcd_core(_unshift_terms(a, ma), _unshift_terms(b, mb))
    result = _shift_terms(core, mg)
    if len(_GCD_MEMO) >= _GCD_MEMO_CAP:
        _GCD_MEMO.clear()
    _GCD_MEMO[key] = result.terms
    return result


# -- reduced fractions --------------------------------------------------------


class RationalFunction:
    """Reduced fraction of Polynomial2 values; bit-identical for equal values.

    Normalization divides out gcd(num, den); over GF(2) every polynomial is
    monic, so the representative is unique without a unit adjustment.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial2, den: Polynomial2):
        if num.arity != den.arity:
            raise ArityMismatch(f"arity {num.arity} vs {den.arity}")
        if den.is_zero:
            raise DivisionByZero("zero denominator")
        if num.is_zero:
            den = Polynomial2.one(num.arity)
        elif not den.is_one:
            g = poly_gcd(num, den)
            if not g.is_one:
                num = num.exact_div(g)
                den = den.exact_div(g)
        self.num = num
        self.den = den

    @classmethod
    def _reduced(cls, num, den):
        """Trusted constructor for already-coprime pairs."""
        self = object.__new__(cls)
        self.num = num
        self.den = den if not num.is_zero else Polynomial2.one(num.arity)
        return self

    @classmethod
    def zero(cls, arity: int) -> "RationalFunction":
        return cls._reduced(Polynomial2.zero(arity), Polynomial2.one(arity))

    @classmethod
    def one(cls, arity: int) -> "RationalFunction":
        return cls._reduced(Polynomial2.one(arity), Polynomial2.one(arity))

    @classmethod
    def from_poly(cls, p: Polynomial2) -> "RationalFunction":
        return cls._reduced(p, Polynomial2.one(p.arity))

    @property
    def arity(self):
        return self.num.arity

    @property
    def is_zero(self):
        return self.num.is_zero

    @property
    def is_one(self):
        return self.num.is_one and self.den.is_one

    def __bool__(self):
        return not self.num.is_zero

    def __eq__(self, other):
        return (
            isinstance(other, RationalFunction)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFunction({self!s})"

    def __str__(self):
        return rational_to_str(self, _default_names(self.arity))

    def __add__(self, other):
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        g = poly_gcd(self.den, other.den)
        if g.is_one:
            return RationalFunction._reduced(
                self.num * other.den + other.num * self.den, self.den * other.den
            )
        da = self.den.exact_div(g)
        db = other.den.exact_div(g)
        num = self.num * db + other.num * da
        if num.is_zero:
            return RationalFunction.zero(self.arity)
        # Any surviving common factor divides g.
        g2 = poly_gcd(num, g)
        if g2.is_one:
            return RationalFunction._reduced(num, da * other.den)
        return RationalFunction._reduced(
            num.exact_div(g2), da * other.den.exact_div(g2)
        )

    __sub__ = __add__

    def __mul__(self, other):
        if self.is_zero or other.is_zero:
            return RationalFunction.zero(self.arity)
        g1 = poly_gcd(self.num, other.den) if not other.den.is_one else None
        g2 = poly_gcd(other.num, self.den) if not self.den.is_one else None
        na = self.num if g1 is None or g1.is_one else self.num.exact_div(g1)
        db = other.den if g1 is None or g1.is_one else other.den.exact_div(g1)
        nb = other.num if g2 is None or g2.is_one else other.num.exact_div(g2)
        da = self.den if g2 is None or g2.is_one else self.den.exact_div(g2)
        return RationalFunction._reduced(na * nb, da * db)

    def inverse(self) -> "RationalFunction":
        if self.is_zero:
            raise DivisionByZero("inverse of zero")
        return RationalFunction._reduced(self.den, self.num)

    def __truediv__(self, other):
        return self * other.inverse()

    def square(self) -> "RationalFunction":
        # gcd(num, den) = 1 is preserved by squaring.
        return RationalFunction._reduced(self.num.square(), self.den.square())

    def sqrt_if_square(self):
        """g with g*g == self when self lies in the square subfield, else None."""
        n = self.num.sqrt_exact()
        if n is None:
            return None
        d = self.den.sqrt_exact()
        if d is None:
            return None
        return RationalFunction._reduced(n, d)

    def with_arity(self, arity: int) -> "RationalFunction":
        return RationalFunction._reduced(
            self.num.with_arity(arity), self.den.with_arity(arity)
        )


# -- text form ------------------------------------------------------------------


def _default_names(arity):
    return tuple(f"t{i + 1}" for i in range(arity))


def poly_to_str(p: Polynomial2, names) -> str:
    if p.is_zero:
        return "0"
    parts = []
    for t in sorted(p.terms, reverse=True):
        factors = []
        for i in range(p.arity):
            e = (t >> _SHIFT[i]) & _FIELD_MASK
            if e == 1:
                factors.append(names[i])
            elif e > 1:
                factors.append(f"{names[i]}^{e}")
        parts.append("*".join(factors) if factors else "1")
    return "+".join(parts)


def _needs_parens_as_den(p):
    if len(p.terms) > 1:
        return True
    t = next(iter(p.terms))
    nfactors = sum(1 for s in _SHIFT[: p.arity] if (t >> s) & _FIELD_MASK)
    return nfactors > 1


def rational_to_str(f: RationalFunction, names) -> str:
    num = poly_to_str(f.num, names)
    if f.den.is_one:
        return num
    if len(f.num.terms) > 1:
        num = f"({num})"
    den = poly_to_str(f.den, names)
    if _needs_parens_as_den(f.den):
        den = f"({den})"
    return f"{num}/{den}"


# -- expression parsing ----------------------------------------------------------

_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)"
    r"|(?P<comment>#[^\n]*)"
    r"|(?P<name>[A-Za-z][A-Za-z0-9_]*)"
    r"|(?P<int>[0-9]+)"
    r"|(?P<op><<|>>|[+*/^(),;=<>])"
)


class Token:
    __slots__ = ("kind", "text", "line", "col")

    def __init__(self, kind, text, line, col):
        self.kind = kind
        self.text = text
        self.line = line
        self.col = col

    def __repr__(self):
        return f"Token({self.kind}, {self.text!r}, {self.line}:{self.col})"


def tokenize(text: str) -> list:
    """Token stream for polynomial expressions and the form DSL."""
    tokens = []
    line, col = 1, 1
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        chunk = m.group()
        if kind == "name":
            tokens.append(Token("name", chunk, line, col))
        elif kind == "int":
            tokens.append(Token("int", chunk, line, col))
        elif kind == "op":
            tokens.append(Token(chunk, chunk, line, col))
        newlines = chunk.count("\n")
        if newlines:
            line += newlines
            col = len(chunk) - chunk.rfind("\n")
        else:
            col += len(chunk)
        pos = m.end()
    tokens.append(Token("eof", "", line, col))
    return tokens


class _ExprParser:
    """Recursive descent for +, *, /, ^, parentheses over named variables."""

    def __init__(self, tokens, pos, names):
        self.tokens = tokens
        self.pos = pos
        self.names = list(names)
        self.arity = len(self.names)

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expr(self):
        acc = self.term()
        while self.peek().kind == "+":
            self.take()
            acc = acc + self.term()
        return acc

    def term(self):
        acc = self.factor()
        while self.peek().kind in ("*", "/"):
            op = self.take().kind
            rhs = self.factor()
            if op == "*":
                acc = acc * rhs
            else:
                if rhs.is_zero:
                    tok = self.peek()
                    raise ParseError("division by zero", tok.line, tok.col)
                acc = acc / rhs
        return acc

    def factor(self):
        base = self.atom()
        if self.peek().kind == "^":
            self.take()
            tok = self.take()
            if tok.kind != "int":
                raise ParseError("expected integer exponent", tok.line, tok.col)
            n = int(tok.text)
            acc = RationalFunction.one(self.arity)
            sq = base
            while n:
                if n & 1:
                    acc = acc * sq
                n >>= 1
                if n:
                    sq = sq.square()
            return acc
        return base

    def atom(self):
        tok = self.take()
        if tok.kind == "name":
            try:
                idx = self.names.index(tok.text)
            except ValueError:
                raise ParseError(f"unknown variable {tok.text!r}", tok.line, tok.col)
            return RationalFunction.from_poly(Polynomial2.variable(idx, self.arity))
        if tok.kind == "int":
            if int(tok.text) % 2:
                return RationalFunction.one(self.arity)
            return RationalFunction.zero(self.arity)
        if tok.kind == "(":
            inner = self.expr()
            closing = self.take()
            if closing.kind != ")":
                raise ParseError("expected ')'", closing.line, closing.col)
            return inner
        raise ParseError(f"unexpected token {tok.text or tok.kind!r}", tok.line, tok.col)


def parse_rational(text: str, names) -> RationalFunction:
    """Parse a rational-function expression in the given variable names."""
    for name in names:
        if not _NAME_RE.match(name):
            raise ParseError(f"invalid variable name {name!r}")
    tokens = tokenize(text)
    parser = _ExprParser(tokens, 0, names)
    value = parser.expr()
    tok = parser.peek()
    if tok.kind != "eof":
        raise ParseError(f"trailing input {tok.text!r}", tok.line, tok.col)
    return value
