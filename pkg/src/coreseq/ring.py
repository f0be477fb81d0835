"""Exact scalar and polynomial arithmetic.

Everything in this package computes with `fractions.Fraction` scalars; no
floating point enters any result (the one advertised exception is the
floating ratio reported by ``omega.gamma_estimate``).

Representations:

* ``LaurentPoly`` -- finite map from integer exponent to nonzero Fraction
  coefficient.  The distinguished symbol is written ``w`` in all text forms.
* ``UniPoly``    -- tuple of Fraction coefficients, lowest degree first,
  no trailing zero (the zero polynomial is the empty tuple).
* ``BiPoly``     -- finite map from an ``(i, j)`` exponent pair to a nonzero
  Fraction coefficient.

The Laurent literal grammar (shared by scenario files and the CLI) is a
signed sum of terms ``c``, ``c*w^e``, ``w^e``, ``w`` with ``c`` an integer or
``p/q`` rational literal and ``e`` a possibly negative integer.  Leading and
binary minus are accepted, so expressions like ``3*w^3 - 3*w^-1`` parse
directly; positivity constraints are enforced by consumers, not here.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError

Q = Fraction


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"expected an exact scalar, got {type(x).__name__}")


# ---------------------------------------------------------------------------
# Laurent polynomials
# ---------------------------------------------------------------------------

class LaurentPoly:
    """A Laurent polynomial in one symbol with exact coefficients.

    Immutable by convention: no method mutates ``self``; all operations
    return fresh values, so instances are safe to share between tasks.
    """

    __slots__ = ("_c",)

    def __init__(self, terms=()):
        c = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for e, v in items:
            v = _as_fraction(v)
            if v:
                e = int(e)
                c[e] = c.get(e, Q(0)) + v
                if not c[e]:
                    del c[e]
        self._c = {e: v for e, v in c.items() if v}

    # -- constructors

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def const(cls, v) -> "LaurentPoly":
        return cls({0: v})

    @classmethod
    def monomial(cls, exp: int, coeff=1) -> "LaurentPoly":
        return cls({exp: coeff})

    # -- inspection

    def coeff(self, exp: int) -> Fraction:
        return self._c.get(exp, Q(0))

    def items(self):
        """Terms as (exponent, coefficient) pairs, increasing exponent."""
        return sorted(self._c.items())

    def support(self):
        return sorted(self._c)

    @property
    def is_zero(self) -> bool:
        return not self._c

    def min_exp(self, default=None):
        if not self._c:
            if default is None:
                raise ValueError("zero Laurent polynomial has no min exponent")
            return default
        return min(self._c)

    def max_exp(self, default=None):
        if not self._c:
            if default is None:
                raise ValueError("zero Laurent polynomial has no max exponent")
            return default
        return max(self._c)

    def is_natural(self) -> bool:
        """True when every coefficient is a nonnegative integer."""
        return all(v.denominator == 1 and v >= 0 for v in self._c.values())

    # -- arithmetic

    def __add__(self, other):
        other = self._coerce(other)
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, Q(0)) + v
            if not c[e]:
                del c[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = c
        return out

    __radd__ = __add__

    def __neg__(self):
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {e: -v for e, v in self._c.items()}
        return out

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        c = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                c[e] = c.get(e, Q(0)) + v1 * v2
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {e: v for e, v in c.items() if v}
        return out

    __rmul__ = __mul__

    def scale(self, k) -> "LaurentPoly":
        k = _as_fraction(k)
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {} if not k else {e: v * k for e, v in self._c.items()}
        return out

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers of Laurent polynomials are not defined here")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def eval_one(self) -> Fraction:
        """Sum of all coefficients (the substitution w -> 1)."""
        return sum(self._c.values(), Q(0))

    def eval_at(self, x) -> Fraction:
        x = _as_fraction(x)
        if not x and self._c and min(self._c) < 0:
            raise ZeroDivisionError("negative exponent evaluated at 0")
        return sum(v * x ** e for e, v in self._c.items()) if self._c else Q(0)

    @staticmethod
    def _coerce(other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        return LaurentPoly.const(_as_fraction(other))

    # -- comparisons, text

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __bool__(self):
        return bool(self._c)

    def __repr__(self):
        return f"LaurentPoly({self.to_text()!r})"

    def to_text(self, symbol: str = "w") -> str:
        """Canonical literal: terms in increasing exponent, explicit
        coefficients; round-trips through :func:`laurent_parse`."""
        if not self._c:
            return "0"
        parts = []
        for e, v in self.items():
            mag = -v if v < 0 else v
            body = str(mag) if e == 0 else f"{mag}*{symbol}^{e}"
            if not parts:
                parts.append(body if v > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if v > 0 else '-'} {body}")
        return " ".join(parts[:1] + parts[1:])


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<op>[-+*/^])|(?P<sym>[A-Za-z][A-Za-z0-9]*))")


def _tokenize(text: str, where: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise ParseError(f"unexpected character {text[pos]!r} in {where}", pos=pos)
            break
        if m.group("num"):
            out.append(("num", int(m.group("num")), m.start()))
        elif m.group("op"):
            out.append(("op", m.group("op"), m.start()))
        else:
            out.append(("sym", m.group("sym"), m.start()))
        pos = m.end()
    return out


def laurent_parse(text: str, symbol: str = "w") -> LaurentPoly:
    """Parse a Laurent literal such as ``2*w^-1 + w^3`` or ``0 - 3*w^-1``.

    Raises :class:`ParseError` with the offending position on malformed
    input.
    """
    toks = _tokenize(text, "Laurent literal")
    if not toks:
        raise ParseError("empty Laurent literal", pos=0)
    terms = []
    i = 0

    def expect_int(j):
        # signed integer literal
        sign = 1
        if j < len(toks) and toks[j][:2] == ("op", "-"):
            sign, j = -1, j + 1
        if j >= len(toks) or toks[j][0] != "num":
            raise ParseError("expected integer", pos=toks[j - 1][2] if j > 0 else 0)
        return sign * toks[j][1], j + 1

    sign = 1
    if toks[i][:2] == ("op", "-"):
        sign, i = -1, i + 1
    elif toks[i][:2] == ("op", "+"):
        i += 1
    def symbol_part(j):
        # SYM ['^' signed-int]
        if toks[j][1] != symbol:
            raise ParseError(f"unknown symbol {toks[j][1]!r}", pos=toks[j][2])
        j += 1
        e = 1
        if j < len(toks) and toks[j][:2] == ("op", "^"):
            e, j = expect_int(j + 1)
        return e, j

    while True:
        coeff = Q(1)
        have_coeff = False
        exp = 0
        if i < len(toks) and toks[i][0] == "num":
            coeff = Q(toks[i][1])
            have_coeff = True
            i += 1
            if i < len(toks) and toks[i][:2] == ("op", "/"):
                den, i = expect_int(i + 1)
                if den == 0:
                    raise ParseError("zero denominator", pos=toks[i - 1][2])
                coeff /= den
        if i < len(toks) and toks[i][:2] == ("op", "*"):
            if not have_coeff:
                raise ParseError("dangling '*'", pos=toks[i][2])
            i += 1
            if i >= len(toks) or toks[i][0] != "sym":
                raise ParseError(f"expected symbol {symbol!r} after '*'",
                                 pos=toks[i][2] if i < len(toks) else len(text))
            exp, i = symbol_part(i)
        elif i < len(toks) and toks[i][0] == "sym":
            exp, i = symbol_part(i)
        elif not have_coeff:
            raise ParseError("expected term", pos=toks[i][2] if i < len(toks) else len(text))
        terms.append((exp, sign * coeff))
        if i >= len(toks):
            break
        if toks[i][:2] == ("op", "+"):
            sign, i = 1, i + 1
        elif toks[i][:2] == ("op", "-"):
            sign, i = -1, i + 1
        else:
            raise ParseError("expected '+' or '-' between terms", pos=toks[i][2])
    return LaurentPoly(terms)


# ---------------------------------------------------------------------------
# Univariate polynomials
# ---------------------------------------------------------------------------

class UniPoly:
    """Dense univariate polynomial over the rationals, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def const(cls, v):
        return cls((v,))

    @classmethod
    def x(cls):
        return cls((0, 1))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        # -1 for the zero polynomial
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Q(0)

    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if self.is_zero or other.is_zero:
            return UniPoly()
        out = [Q(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def scale(self, k):
        k = _as_fraction(k)
        return UniPoly([c * k for c in self.coeffs])

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result, base = UniPoly.const(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift_up(self, k: int) -> "UniPoly":
        """Multiply by t^k."""
        if self.is_zero:
            return self
        return UniPoly((Q(0),) * k + self.coeffs)

    def eval(self, x) -> Fraction:
        x = _as_fraction(x)
        acc = Q(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divmod(self, other: "UniPoly"):
        """Exact polynomial division with remainder."""
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        q = [Q(0)] * max(0, len(self.coeffs) - len(other.coeffs) + 1)
        rem = list(self.coeffs)
        d, lead = other.degree, other.leading()
        while len(rem) - 1 >= d and any(rem):
            while rem and not rem[-1]:
                rem.pop()
            if len(rem) - 1 < d:
                break
            k = len(rem) - 1 - d
            f = rem[-1] / lead
            q[k] = f
            for i, c in enumerate(other.coeffs):
                rem[k + i] -= f * c
        return UniPoly(q), UniPoly(rem)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly.const(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    @staticmethod
    def _coerce(other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        return UniPoly.const(_as_fraction(other))

    def __repr__(self):
        return f"UniPoly({self.to_text()!r})"

    def to_text(self, symbol: str = "t") -> str:
        if self.is_zero:
            return "0"
        parts = []
        for e, v in enumerate(self.coeffs):
            if not v:
                continue
            mag = -v if v < 0 else v
            if e == 0:
                body = str(mag)
            else:
                head = "" if mag == 1 else f"{mag}*"
                body = f"{head}{symbol}" + (f"^{e}" if e > 1 else "")
            if not parts:
                parts.append(body if v > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if v > 0 else '-'} {body}")
        return " ".join(parts)


def unipoly_parse(text: str, symbol: str = "n") -> UniPoly:
    """Parse literals like ``2 + 3*n`` or ``9/2*n^2 - 1``."""
    lp = laurent_parse(text, symbol=symbol)
    if lp._c and min(lp._c) < 0:
        raise ParseError(f"negative exponent not allowed for {symbol}-polynomial")
    out = [Q(0)] * ((lp.max_exp(default=-1)) + 1)
    for e, v in lp.items():
        out[e] = v
    return UniPoly(out)


def unipoly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd over the rationals."""
    while not b.is_zero:
        _, r = a.divmod(b)
        a, b = b, r
    if a.is_zero:
        return a
    return a.scale(1 / a.leading())


# ---------------------------------------------------------------------------
# Bivariate polynomials
# ---------------------------------------------------------------------------

class BiPoly:
    """Bivariate polynomial as a map (i, j) -> nonzero Fraction."""

    __slots__ = ("_c",)

    def __init__(self, terms=()):
        c = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for (i, j), v in items:
            v = _as_fraction(v)
            if v:
                key = (int(i), int(j))
                c[key] = c.get(key, Q(0)) + v
                if not c[key]:
                    del c[key]
        self._c = {k: v for k, v in c.items() if v}

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def const(cls, v):
        return cls({(0, 0): v})

    @classmethod
    def monomial(cls, i, j, coeff=1):
        return cls({(i, j): coeff})

    @property
    def is_zero(self):
        return not self._c

    def coeff(self, i, j) -> Fraction:
        return self._c.get((i, j), Q(0))

    def items(self):
        return sorted(self._c.items())

    def degree(self, axis: int) -> int:
        if not self._c:
            return -1
        return max(k[axis] for k in self._c)

    def __add__(self, other):
        other = self._coerce(other)
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c.get(k, Q(0)) + v
            if not c[k]:
                del c[k]
        out = BiPoly.__new__(BiPoly)
        out._c = c
        return out

    __radd__ = __add__

    def __neg__(self):
        out = BiPoly.__new__(BiPoly)
        out._c = {k: -v for k, v in self._c.items()}
        return out

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        c = {}
        for (i1, j1), v1 in self._c.items():
            for (i2, j2), v2 in other._c.items():
                k = (i1 + i2, j1 + j2)
                c[k] = c.get(k, Q(0)) + v1 * v2
        out = BiPoly.__new__(BiPoly)
        out._c = {k: v for k, v in c.items() if v}
        return out

    __rmul__ = __mul__

    def scale(self, k):
        k = _as_fraction(k)
        out = BiPoly.__new__(BiPoly)
        out._c = {} if not k else {key: v * k for key, v in self._c.items()}
        return out

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result, base = BiPoly.const(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def substitute_one(self, axis: int) -> UniPoly:
        """Set the given variable (0 or 1) to 1, returning a polynomial in
        the other variable."""
        acc = {}
        for (i, j), v in self._c.items():
            e = j if axis == 0 else i
            acc[e] = acc.get(e, Q(0)) + v
        if not acc:
            return UniPoly()
        out = [Q(0)] * (max(acc) + 1)
        for e, v in acc.items():
            out[e] = v
        return UniPoly(out)

    def as_unipoly_in_t2(self):
        """Coefficients of t2^j, each a UniPoly in t1, lowest j first."""
        if not self._c:
            return []
        deg2 = self.degree(1)
        rows = [dict() for _ in range(deg2 + 1)]
        for (i, j), v in self._c.items():
            rows[j][i] = v
        out = []
        for row in rows:
            if row:
                cs = [Q(0)] * (max(row) + 1)
                for i, v in row.items():
                    cs[i] = v
                out.append(UniPoly(cs))
            else:
                out.append(UniPoly())
        return out

    @classmethod
    def from_unipoly_in_t2(cls, rows):
        terms = {}
        for j, p in enumerate(rows):
            for i, v in enumerate(p.coeffs):
                if v:
                    terms[(i, j)] = v
        return cls(terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BiPoly.const(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __bool__(self):
        return bool(self._c)

    @staticmethod
    def _coerce(other):
        if isinstance(other, BiPoly):
            return other
        return BiPoly.const(_as_fraction(other))

    def __repr__(self):
        return f"BiPoly({self.to_text()!r})"

    def to_text(self, symbols=("t1", "t2")) -> str:
        if not self._c:
            return "0"
        parts = []
        for (i, j), v in self.items():
            mag = -v if v < 0 else v
            factors = []
            for sym, e in ((symbols[0], i), (symbols[1], j)):
                if e == 1:
                    factors.append(sym)
                elif e > 1:
                    factors.append(f"{sym}^{e}")
            if not factors:
                body = str(mag)
            else:
                head = "" if mag == 1 else f"{mag}*"
                body = head + "*".join(factors)
            if not parts:
                parts.append(body if v > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if v > 0 else '-'} {body}")
        return " ".join(parts)


def bipoly_parse(text: str, symbols=("t1", "t2")) -> BiPoly:
    """Parse bivariate literals like ``1 - t1 - t2`` or ``3*t1^2*t2``."""
    toks = _tokenize(text, "bivariate literal")
    if not toks:
        raise ParseError("empty bivariate literal", pos=0)
    sym_index = {symbols[0]: 0, symbols[1]: 1}
    i = 0
    terms = []
    sign = 1
    if toks[i][:2] == ("op", "-"):
        sign, i = -1, i + 1
    elif toks[i][:2] == ("op", "+"):
        i += 1
    while True:
        coeff = Q(1)
        exps = [0, 0]
        saw_factor = False
        while True:
            if i < len(toks) and toks[i][0] == "num":
                c = Q(toks[i][1])
                i += 1
                if i < len(toks) and toks[i][:2] == ("op", "/"):
                    i += 1
                    if i >= len(toks) or toks[i][0] != "num":
                        raise ParseError("expected denominator", pos=toks[i - 1][2])
                    c /= toks[i][1]
                    i += 1
                coeff *= c
                saw_factor = True
            elif i < len(toks) and toks[i][0] == "sym":
                name = toks[i][1]
                if name not in sym_index:
                    raise ParseError(f"unknown symbol {name!r}", pos=toks[i][2])
                i += 1
                e = 1
                if i < len(toks) and toks[i][:2] == ("op", "^"):
                    i += 1
                    esign = 1
                    if i < len(toks) and toks[i][:2] == ("op", "-"):
                        esign, i = -1, i + 1
                    if i >= len(toks) or toks[i][0] != "num":
                        raise ParseError("expected exponent", pos=toks[i - 1][2])
                    e = esign * toks[i][1]
                    i += 1
                if e < 0:
                    raise ParseError("negative exponents not allowed in bivariate literals")
                exps[sym_index[name]] += e
                saw_factor = True
            else:
                raise ParseError("expected factor",
                                 pos=toks[i][2] if i < len(toks) else len(text))
            if i < len(toks) and toks[i][:2] == ("op", "*"):
                i += 1
                continue
            break
        if not saw_factor:
            raise ParseError("empty term", pos=toks[i][2] if i < len(toks) else len(text))
        terms.append(((exps[0], exps[1]), sign * coeff))
        if i >= len(toks):
            break
        if toks[i][:2] == ("op", "+"):
            sign, i = 1, i + 1
        elif toks[i][:2] == ("op", "-"):
            sign, i = -1, i + 1
        else:
            raise ParseError("expected '+' or '-' between terms", pos=toks[i][2])
    return BiPoly(terms)


# -- bivariate gcd (primitive PRS in (Q[t1])[t2]) ---------------------------

def _content(rows):
    g = UniPoly()
    for p in rows:
        g = unipoly_gcd(g, p)
        if g.degree == 0:
            break
    return g


def _primitive(rows):
    g = _content(rows)
    if g.is_zero or g.degree == 0:
        return list(rows)
    return [p.divmod(g)[0] for p in rows]


def _prem(a, b):
    """Pseudo-remainder of a by b, both lists of UniPoly (coeff of t2^j)."""
    a = list(a)
    while a and a[-1].is_zero:
        a.pop()
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db:
        k = len(a) - 1 - db
        lead = a[-1]
        a = [p * lb for p in a]
        for i, c in enumerate(b):
            a[k + i] = a[k + i] - c * lead
        a.pop()
        while a and a[-1].is_zero:
            a.pop()
    return a


def bipoly_gcd(a: BiPoly, b: BiPoly) -> BiPoly:
    """gcd in Q[t1, t2], normalized so some coefficient is 1 (first in the
    (i, j) term order)."""
    if a.is_zero:
        g = b
    elif b.is_zero:
        g = a
    else:
        ra, rb = a.as_unipoly_in_t2(), b.as_unipoly_in_t2()
        if len(ra) - 1 < len(rb) - 1:
            ra, rb = rb, ra
        ca, cb = _content(ra), _content(rb)
        pa, pb = _primitive(ra), _primitive(rb)
        while pb:
            r = _prem(pa, pb)
            pa, pb = pb, _primitive(r)
        cont = unipoly_gcd(ca, cb)
        g = BiPoly.from_unipoly_in_t2([p * cont for p in pa])
    if g.is_zero:
        return g
    lead = g.items()[0][1]
    return g.scale(1 / lead)


def bipoly_divmod(a: BiPoly, b: BiPoly):
    """Division in (Q(t1))[t2]; exact when b divides a in Q[t1, t2]."""
    ra, rb = a.as_unipoly_in_t2(), b.as_unipoly_in_t2()
    while ra and ra[-1].is_zero:
        ra.pop()
    while rb and rb[-1].is_zero:
        rb.pop()
    if not rb:
        raise ZeroDivisionError("division by zero bivariate polynomial")
    if len(rb) == 1:
        # denominator free of t2: divide each coefficient in Q[t1]
        qs, rs = [], []
        for p in ra:
            q, r = p.divmod(rb[0])
            qs.append(q)
            rs.append(r)
        return BiPoly.from_unipoly_in_t2(qs), BiPoly.from_unipoly_in_t2(rs)
    db = len(rb) - 1
    q_rows = [UniPoly() for _ in range(max(0, len(ra) - db))]
    while len(ra) - 1 >= db and ra:
        k = len(ra) - 1 - db
        qc, rem = ra[-1].divmod(rb[-1])
        if not rem.is_zero:
            break
        q_rows[k] = q_rows[k] + qc
        for i, c in enumerate(rb):
            ra[k + i] = ra[k + i] - c * qc
        while ra and ra[-1].is_zero:
            ra.pop()
    return BiPoly.from_unipoly_in_t2(q_rows), BiPoly.from_unipoly_in_t2(ra)
