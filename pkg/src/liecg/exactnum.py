"""Exact arithmetic in the field generated by square roots of integers.

Elements are quotients of rational linear combinations of square roots of
non-negative integers, e.g. (3 - 2*sqrt(6)) / (1 + sqrt(2)).  The numerator
and denominator are kept in a canonical form: every radicand is square-free,
the rational part is the radicand-1 term, and zero coefficients are dropped.
Because square roots of distinct square-free integers are linearly
independent over the rationals, the canonical form of a sum is empty exactly
when the value is zero, which makes equality and sign tests decidable.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

__all__ = [
    "SqrtSum",
    "FieldElem",
    "FieldSqrtError",
    "number",
    "field",
    "field_sqrt",
    "gcd_of_fields",
    "parse_field",
    "ZERO",
    "ONE",
]


class FieldSqrtError(ArithmeticError):
    """Square root of the given value does not lie in the field."""


_square_free_cache: dict[int, tuple[int, int]] = {0: (1, 0), 1: (1, 1)}


def _square_free(n: int) -> tuple[int, int]:
    """Split n >= 0 as s*s*f with f square-free; returns (s, f)."""
    try:
        return _square_free_cache[n]
    except KeyError:
        pass
    s, f, m, d = 1, 1, n, 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            if e % 2:
                f *= d
            s *= d ** (e // 2)
        d += 1 if d == 2 else 2
    f *= m
    _square_free_cache[n] = (s, f)
    return (s, f)


def _frac_str(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return "%d/%d" % (c.numerator, c.denominator)


class SqrtSum:
    """A rational linear combination of square roots of integers.

    Stored as a mapping radicand -> rational coefficient with square-free
    radicands; the radicand 1 carries the rational part.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[int, Fraction] | None = None):
        # terms is trusted to be canonical; use make() for raw input
        self.terms = terms or {}

    @classmethod
    def make(cls, items) -> "SqrtSum":
        """Build from (radicand, coefficient) pairs, canonicalizing."""
        terms: dict[int, Fraction] = {}
        for n, c in items:
            if n < 0:
                raise ValueError("negative radicand %r" % (n,))
            c = Fraction(c)
            if not c:
                continue
            s, f = _square_free(n)
            if f == 0:
                continue
            c *= s
            acc = terms.get(f)
            acc = c if acc is None else acc + c
            if acc:
                terms[f] = acc
            elif f in terms:
                del terms[f]
        return cls(terms)

    @classmethod
    def rational(cls, c) -> "SqrtSum":
        c = Fraction(c)
        return cls({1: c} if c else {})

    def is_zero(self) -> bool:
        return not self.terms

    def is_rational(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and 1 in self.terms)

    def rational_value(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if len(self.terms) == 1 and 1 in self.terms:
            return self.terms[1]
        raise ValueError("not rational: %s" % self)

    def __add__(self, other: "SqrtSum") -> "SqrtSum":
        if not self.terms:
            return other
        if not other.terms:
            return self
        terms = dict(self.terms)
        for f, c in other.terms.items():
            acc = terms.get(f)
            if acc is None:
                terms[f] = c
            else:
                acc = acc + c
                if acc:
                    terms[f] = acc
                else:
                    del terms[f]
        return SqrtSum(terms)

    def __neg__(self) -> "SqrtSum":
        return SqrtSum({f: -c for f, c in self.terms.items()})

    def __sub__(self, other: "SqrtSum") -> "SqrtSum":
        return self + (-other)

    def __mul__(self, other: "SqrtSum") -> "SqrtSum":
        if not self.terms or not other.terms:
            return SqrtSum()
        terms: dict[int, Fraction] = {}
        for f1, c1 in self.terms.items():
            for f2, c2 in other.terms.items():
                if f1 == f2:
                    f, c = 1, c1 * c2 * f1
                else:
                    g = math.gcd(f1, f2)
                    # f1, f2 square-free => (f1//g)*(f2//g) square-free
                    f, c = (f1 // g) * (f2 // g), c1 * c2 * g
                acc = terms.get(f)
                acc = c if acc is None else acc + c
                if acc:
                    terms[f] = acc
                elif f in terms:
                    del terms[f]
        return SqrtSum(terms)

    def scaled(self, c: Fraction) -> "SqrtSum":
        if not c:
            return SqrtSum()
        return SqrtSum({f: k * c for f, k in self.terms.items()})

    def sign(self) -> int:
        """Exact sign: canonical emptiness decides zero, dyadic intervals
        around each radical decide the rest."""
        if not self.terms:
            return 0
        if len(self.terms) == 1:
            ((f, c),) = self.terms.items()
            return 1 if c > 0 else -1
        k = 32
        while True:
            lo = hi = Fraction(0)
            for f, c in self.terms.items():
                if f == 1:
                    lo += c
                    hi += c
                    continue
                t = math.isqrt(f << (2 * k))
                flo = Fraction(t, 1 << k)
                fhi = Fraction(t + 1, 1 << k)
                if c >= 0:
                    lo += c * flo
                    hi += c * fhi
                else:
                    lo += c * fhi
                    hi += c * flo
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            k *= 2

    def __eq__(self, other) -> bool:
        if not isinstance(other, SqrtSum):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def plain(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for f in sorted(self.terms):
            c = self.terms[f]
            body = _frac_str(abs(c)) + ("" if f == 1 else "*sqrt(%d)" % f)
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("-" if c < 0 else "+") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return self.plain()


_SS_ZERO = SqrtSum()
_SS_ONE = SqrtSum({1: Fraction(1)})


class FieldElem:
    """Quotient of two SqrtSum values.

    A single-term denominator is rationalized away on construction, so in
    canonical elements the denominator is 1 unless it genuinely needs more
    than one radical term.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: SqrtSum, den: SqrtSum = _SS_ONE):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if len(den.terms) == 1 and den.terms != _SS_ONE.terms:
            ((f, c),) = den.terms.items()
            # 1/(c*sqrt(f)) = sqrt(f)/(c*f)
            num = num * SqrtSum({f: Fraction(1, 1) / (c * f)})
            den = _SS_ONE
        self.num = num
        self.den = den

    # -- constructors -------------------------------------------------

    @classmethod
    def from_fraction(cls, c) -> "FieldElem":
        return cls(SqrtSum.rational(c))

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_rational(self) -> bool:
        return self.num.is_rational() and self.den.is_rational()

    def rational_value(self) -> Fraction:
        return self.num.rational_value() / self.den.rational_value()

    def sign(self) -> int:
        s = self.num.sign()
        return s * self.den.sign() if s else 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "FieldElem") -> "FieldElem":
        if self.den is other.den or self.den == other.den:
            if self.den == _SS_ONE:
                return FieldElem(self.num + other.num)
            return FieldElem(self.num + other.num, self.den)
        return FieldElem(self.num * other.den + other.num * self.den,
                         self.den * other.den)

    def __neg__(self) -> "FieldElem":
        return FieldElem(-self.num, self.den)

    def __sub__(self, other: "FieldElem") -> "FieldElem":
        return self + (-other)

    def __mul__(self, other: "FieldElem") -> "FieldElem":
        if self.den == _SS_ONE and other.den == _SS_ONE:
            return FieldElem(self.num * other.num)
        return FieldElem(self.num * other.num, self.den * other.den)

    def invert(self) -> "FieldElem":
        if self.num.is_zero():
            raise ZeroDivisionError("inverting zero")
        return FieldElem(self.den, self.num)

    def __truediv__(self, other: "FieldElem") -> "FieldElem":
        return self * other.invert()

    def simplify(self) -> "FieldElem":
        """Return the canonical form (idempotent).

        Construction already keeps numerator and denominator canonical and
        absorbs single-term denominators; a rational multi-term quotient is
        additionally reduced here.
        """
        if self.den == _SS_ONE:
            return self
        if self.den.is_rational():
            return FieldElem(self.num.scaled(1 / self.den.rational_value()))
        return FieldElem(self.num, self.den)

    def rationalize(self) -> "FieldElem":
        """Clear all radicals from the denominator by repeated conjugation."""
        num, den = self.num, self.den
        while not den.is_rational():
            f0 = min(f for f in den.terms if f > 1)
            p = 2
            while f0 % p:
                p += 1 if p == 2 else 2
                if p * p > f0:
                    p = f0  # square-free with no small factor: prime
                    break
            a = SqrtSum({f: c for f, c in den.terms.items() if f % p})
            b = SqrtSum({f // p: c for f, c in den.terms.items() if f % p == 0})
            # den = a + sqrt(p)*b; the conjugate a - sqrt(p)*b removes p
            conj = a - b * SqrtSum({p: Fraction(1)})
            num = num * conj
            den = den * conj
        return FieldElem(num, den).simplify()

    # -- comparison ----------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldElem):
            return NotImplemented
        if self.den == other.den:
            return self.num == other.num
        return self.num * other.den == other.num * self.den

    def __hash__(self) -> int:
        r = self.rationalize() if not self.den.is_rational() else self.simplify()
        return hash((r.num, r.den))

    # -- rendering -----------------------------------------------------

    def plain(self) -> str:
        if self.den == _SS_ONE:
            return self.num.plain()
        return "(%s)/(%s)" % (self.num.plain(), self.den.plain())

    def render(self, fmt: str = "plain") -> str:
        if fmt == "plain":
            return self.plain()
        if fmt == "tex":
            return self._render_terms(_tex_term)
        if fmt == "mathematica":
            return self._render_terms(_mma_term)
        raise ValueError("unknown format %r" % (fmt,))

    def _render_terms(self, term_fn) -> str:
        def render_sum(ss: SqrtSum) -> str:
            if ss.is_zero():
                return "0"
            parts = []
            for f in sorted(ss.terms):
                c = ss.terms[f]
                body = term_fn(abs(c), f)
                if not parts:
                    parts.append(("-" if c < 0 else "") + body)
                else:
                    parts.append((" - " if c < 0 else " + ") + body)
            return "".join(parts)

        if self.den == _SS_ONE:
            return render_sum(self.num)
        return "(%s)/(%s)" % (render_sum(self.num), render_sum(self.den))

    def __repr__(self) -> str:
        return self.plain()


def _mma_term(c: Fraction, f: int) -> str:
    if f == 1:
        return _frac_str(c)
    s = "Sqrt[%d]" % f
    if c.numerator != 1:
        s = "%d*%s" % (c.numerator, s)
    if c.denominator != 1:
        s = "%s/%d" % (s, c.denominator)
    return s


def _tex_term(c: Fraction, f: int) -> str:
    root = "" if f == 1 else "\\sqrt{%d}" % f
    if c.denominator == 1:
        coef = "" if (c.numerator == 1 and root) else str(c.numerator)
        return coef + root
    return "\\frac{%d%s}{%d}" % (c.numerator, root, c.denominator)


ZERO = FieldElem(_SS_ZERO)
ONE = FieldElem(_SS_ONE)


def number(a: int, b: int, n: int) -> FieldElem:
    """The element (a/b)*sqrt(n); the workhorse constructor."""
    return FieldElem(SqrtSum.make([(n, Fraction(a, b))]))


def field(c) -> FieldElem:
    """A rational element from an int, Fraction or (p, q) pair."""
    if isinstance(c, tuple):
        c = Fraction(*c)
    return FieldElem(SqrtSum.rational(c))


def _frac_sqrt(c: Fraction) -> FieldElem:
    # sqrt(p/q) = sqrt(p*q)/q, exact in the field for c >= 0
    return number(1, c.denominator, c.numerator * c.denominator)


def _exact_sqrt(n: int) -> int | None:
    r = math.isqrt(n)
    return r if r * r == n else None


def field_sqrt(x: FieldElem) -> FieldElem:
    """Exact square root of a non-negative element, when it exists in the
    field: non-negative rationals always work, two-term values p + q*sqrt(f)
    work when p*p - q*q*f is a perfect rational square (denesting)."""
    sgn = x.sign()
    if sgn == 0:
        return ZERO
    if sgn < 0:
        raise FieldSqrtError("square root of negative value %s" % x)
    x = x.simplify()
    if not x.den.is_rational():
        x = x.rationalize()
    terms = x.num.terms
    if len(terms) == 1:
        ((f, c),) = terms.items()
        if f == 1:
            return _frac_sqrt(c)
        raise FieldSqrtError("no field square root of %s" % x)
    if len(terms) == 2 and 1 in terms:
        p = terms[1]
        ((f, q),) = ((f, c) for f, c in terms.items() if f != 1)
        disc = p * p - q * q * f
        if disc >= 0:
            rn = _exact_sqrt(disc.numerator)
            rd = _exact_sqrt(disc.denominator)
            if rn is not None and rd is not None:
                s = Fraction(rn, rd)
                half = Fraction(1, 2)
                r1, r2 = _frac_sqrt((p + s) * half), _frac_sqrt((p - s) * half)
                root = r1 + r2 if q > 0 else r1 - r2
                if root * root == x:
                    return root
        raise FieldSqrtError("square root of %s does not denest" % x)
    raise FieldSqrtError("no field square root of %s" % x)


def gcd_of_fields(xs) -> FieldElem:
    """Greatest common divisor of a list, used to pull a common factor out
    of coefficient lists for display.  Defined for elements sharing a single
    common radicand: gcd of the numerators over lcm of the denominators,
    times that radical.  Mixed-radicand or multi-term input falls back to 1;
    zeros are skipped; an empty or all-zero list gives 0."""
    vals = [x.simplify() for x in xs if not x.is_zero()]
    if not vals:
        return ZERO
    rad = None
    gn = 0
    ld = 1
    for v in vals:
        if v.den != _SS_ONE or len(v.num.terms) != 1:
            return ONE
        ((f, c),) = v.num.terms.items()
        if rad is None:
            rad = f
        elif rad != f:
            return ONE
        gn = math.gcd(gn, abs(c.numerator))
        ld = ld * c.denominator // math.gcd(ld, c.denominator)
    return FieldElem(SqrtSum.make([(rad, Fraction(gn, ld))]))


_TERM_RE = re.compile(r"^(?:(\d+)(?:/(\d+))?)?(?:\*?sqrt\((\d+)\))?$")


def _parse_sum(s: str) -> SqrtSum:
    items = []
    i = 0
    n = len(s)
    while i < n:
        sign = 1
        if s[i] == "+":
            i += 1
        elif s[i] == "-":
            sign = -1
            i += 1
        j = i
        while j < n and s[j] not in "+-":
            j += 1
        m = _TERM_RE.match(s[i:j])
        if not m or (m.group(1) is None and m.group(3) is None):
            raise ValueError("bad term %r" % s[i:j])
        a = int(m.group(1)) if m.group(1) else 1
        b = int(m.group(2)) if m.group(2) else 1
        f = int(m.group(3)) if m.group(3) else 1
        items.append((f, Fraction(sign * a, b)))
        i = j
    return SqrtSum.make(items)


def parse_field(s: str) -> FieldElem:
    """Parse the plain rendering back into an element."""
    s = s.replace(" ", "")
    if not s:
        raise ValueError("empty number")
    m = re.match(r"^\((.*)\)/\((.*)\)$", s)
    if m:
        return FieldElem(_parse_sum(m.group(1)), _parse_sum(m.group(2)))
    if s == "0":
        return ZERO
    return FieldElem(_parse_sum(s))
