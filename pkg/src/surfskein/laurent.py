"""Exact arithmetic in Z[A^{±1}] and Q(A): Laurent polynomials, rational
functions, quantum braces {n} = A^n - A^{-n}, and the brace ledger.

All coefficients are `fractions.Fraction`; nothing here ever touches floats.
"""

from __future__ import annotations

import re
from collections import Counter
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple


class LaurentPoly:
    """A Laurent polynomial in A with rational coefficients.

    Stored as a map exponent -> coefficient with no zero entries.
    Instances are immutable in practice: no method mutates `coeffs`.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Optional[Dict[int, Fraction]] = None):
        clean: Dict[int, Fraction] = {}
        if coeffs:
            for e, c in coeffs.items():
                c = Fraction(c)
                if c != 0:
                    clean[int(e)] = c
        object.__setattr__(self, "coeffs", clean)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls({})

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: Fraction(1)})

    @classmethod
    def monomial(cls, exponent: int, coeff=1) -> "LaurentPoly":
        return cls({exponent: Fraction(coeff)})

    @classmethod
    def constant(cls, c) -> "LaurentPoly":
        return cls({0: Fraction(c)})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == {0: Fraction(1)}

    def min_exp(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no exponents")
        return min(self.coeffs)

    def max_exp(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no exponents")
        return max(self.coeffs)

    def leading_coeff(self) -> Fraction:
        return self.coeffs[self.max_exp()]

    def is_monomial(self) -> bool:
        return len(self.coeffs) == 1

    def is_unit(self) -> bool:
        """Unit of Q[A^{±1}]: a single monomial q*A^j, q != 0."""
        return len(self.coeffs) == 1

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        r = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = r.get(e, Fraction(0)) + c
            if s == 0:
                r.pop(e, None)
            else:
                r[e] = s
        out = LaurentPoly.__new__(LaurentPoly)
        object.__setattr__(out, "coeffs", r)
        return out

    def __neg__(self) -> "LaurentPoly":
        out = LaurentPoly.__new__(LaurentPoly)
        object.__setattr__(out, "coeffs", {e: -c for e, c in self.coeffs.items()})
        return out

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not self.coeffs or not other.coeffs:
            return LaurentPoly.zero()
        r: Dict[int, Fraction] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                s = r.get(e, Fraction(0)) + c1 * c2
                if s == 0:
                    r.pop(e, None)
                else:
                    r[e] = s
        out = LaurentPoly.__new__(LaurentPoly)
        object.__setattr__(out, "coeffs", r)
        return out

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValueError("negative power of a Laurent polynomial; use RationalFn")
        result = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, j: int) -> "LaurentPoly":
        """Multiply by A^j."""
        return LaurentPoly({e + j: c for e, c in self.coeffs.items()})

    def scale(self, q) -> "LaurentPoly":
        q = Fraction(q)
        return LaurentPoly({e: c * q for e, c in self.coeffs.items()})

    def bar(self) -> "LaurentPoly":
        """The involution A -> A^{-1}."""
        return LaurentPoly({-e: c for e, c in self.coeffs.items()})

    def evaluate(self, a: Fraction) -> Fraction:
        a = Fraction(a)
        if a == 0:
            raise ZeroDivisionError("cannot evaluate a Laurent polynomial at A = 0")
        total = Fraction(0)
        for e, c in self.coeffs.items():
            total += c * a**e
        return total

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    # -- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        pieces: List[str] = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            if e == 0:
                mon = ""
            elif e == 1:
                mon = "A"
            else:
                mon = f"A^{e}"
            if mon == "":
                term = str(c)
            elif c == 1:
                term = mon
            elif c == -1:
                term = "-" + mon
            elif c.denominator == 1:
                term = f"{c}*{mon}"
            else:
                term = f"({c})*{mon}"
            pieces.append(term)
        out = pieces[0]
        for term in pieces[1:]:
            if term.startswith("-"):
                out += " - " + term[1:]
            else:
                out += " + " + term
        return out

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def to_json(self) -> List[List[int]]:
        """List of [exponent, numerator, denominator] triples, sorted."""
        return [[e, self.coeffs[e].numerator, self.coeffs[e].denominator]
                for e in sorted(self.coeffs)]

    @classmethod
    def from_json(cls, data: Iterable) -> "LaurentPoly":
        return cls({int(e): Fraction(int(n), int(d)) for e, n, d in data})


_TERM_RE = re.compile(
    r"\s*([+-]?)\s*(?:\(?(-?\d+(?:/\d+)?)\)?)?\s*\*?\s*(A(?:\^(-?\d+))?)?\s*"
)


def parse_laurent(text: str) -> LaurentPoly:
    """Parse strings such as 'A^2 - A^-2', '-2*A + 1/3', '0'."""
    text = text.strip()
    if text in ("0", ""):
        return LaurentPoly.zero()
    pos = 0
    acc = LaurentPoly.zero()
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse Laurent polynomial near: {text[pos:]!r}")
        sign, coeff, avar, aexp = m.groups()
        if coeff is None and avar is None:
            raise ValueError(f"cannot parse Laurent polynomial near: {text[pos:]!r}")
        c = Fraction(coeff) if coeff is not None else Fraction(1)
        if sign == "-":
            c = -c
        e = 0
        if avar is not None:
            e = int(aexp) if aexp is not None else 1
        acc = acc + LaurentPoly.monomial(e, c)
        pos = m.end()
    return acc


def brace(n: int) -> LaurentPoly:
    """The quantum brace {n} = A^n - A^{-n}; {0} = 0."""
    if n == 0:
        return LaurentPoly.zero()
    return LaurentPoly({n: Fraction(1), -n: Fraction(-1)})


def loop_weight() -> LaurentPoly:
    """Value of a deleted trivial arrowless loop: -(A^2 + A^{-2})."""
    return LaurentPoly({2: Fraction(-1), -2: Fraction(-1)})


# -- ordinary-polynomial helpers (lowest exponent 0) -------------------------


def _to_dense(p: LaurentPoly) -> Tuple[List[Fraction], int]:
    """Return (dense coefficient list low..high, low_exponent)."""
    if p.is_zero():
        return [], 0
    lo, hi = p.min_exp(), p.max_exp()
    dense = [p.coeffs.get(e, Fraction(0)) for e in range(lo, hi + 1)]
    return dense, lo

def _from_dense(dense: List[Fraction], lo: int) -> LaurentPoly:
    return LaurentPoly({lo + i: c for i, c in enumerate(dense) if c != 0})


def poly_divmod(p: LaurentPoly, q: LaurentPoly) -> Tuple[LaurentPoly, LaurentPoly]:
    """Division with remainder treating both as ordinary polynomials shifted
    to lowest exponent 0; the quotient/remainder are shifted back so that
    p = q * quot + rem holds as Laurent polynomials."""
    if q.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if p.is_zero():
        return LaurentPoly.zero(), LaurentPoly.zero()
    pd, plo = _to_dense(p)
    qd, qlo = _to_dense(q)
    rem = list(pd)
    quot = [Fraction(0)] * max(1, len(pd) - len(qd) + 1)
    qlead = qd[-1]
    for i in range(len(pd) - len(qd), -1, -1):
        c = rem[i + len(qd) - 1] / qlead
        if c != 0:
            quot[i] = c
            for j, qc in enumerate(qd):
                rem[i + j] -= c * qc
    return _from_dense(quot, plo - qlo), _from_dense(rem, plo)


def laurent_div_exact(p: LaurentPoly, q: LaurentPoly) -> Optional[LaurentPoly]:
    """Exact quotient p/q as a Laurent polynomial, or None if q does not divide p."""
    quot, rem = poly_divmod(p, q)
    if rem.is_zero():
        return quot
    return None


def poly_gcd(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """GCD up to units of Q[A^{±1}], returned with min_exp 0 and leading
    coefficient 1 (or the unit 1 for coprime inputs)."""
    a, b = p, q
    while not b.is_zero():
        _, r = poly_divmod(a, b)
        a, b = b, r
    if a.is_zero():
        return LaurentPoly.zero()
    a = a.shift(-a.min_exp())
    return a.scale(1 / a.leading_coeff())


class RationalFn:
    """An element of Q(A) as a reduced, canonicalized fraction of Laurent
    polynomials: gcd(num, den) is a unit, den has min_exp 0 and positive
    leading coefficient."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: Optional[LaurentPoly] = None):
        if den is None:
            den = LaurentPoly.one()
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = LaurentPoly.zero(), LaurentPoly.one()
        else:
            g = poly_gcd(num, den)
            if not g.is_one():
                num = laurent_div_exact(num, g)
                den = laurent_div_exact(den, g)
            # normalize the unit: den gets min_exp 0, positive leading coeff
            shift = -den.min_exp()
            num, den = num.shift(shift), den.shift(shift)
            lead = den.leading_coeff()
            if lead != 1:
                num, den = num.scale(1 / lead), den.scale(1 / lead)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "RationalFn":
        return cls(LaurentPoly.zero())

    @classmethod
    def one(cls) -> "RationalFn":
        return cls(LaurentPoly.one())

    @classmethod
    def from_poly(cls, p: LaurentPoly) -> "RationalFn":
        return cls(p)

    @classmethod
    def monomial(cls, exponent: int, coeff=1) -> "RationalFn":
        return cls(LaurentPoly.monomial(exponent, coeff))

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "RationalFn") -> "RationalFn":
        return RationalFn(self.num * other.den + other.num * self.den,
                          self.den * other.den)

    def __sub__(self, other: "RationalFn") -> "RationalFn":
        return RationalFn(self.num * other.den - other.num * self.den,
                          self.den * other.den)

    def __neg__(self) -> "RationalFn":
        return RationalFn(-self.num, self.den)

    def __mul__(self, other: "RationalFn") -> "RationalFn":
        return RationalFn(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RationalFn") -> "RationalFn":
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFn(self.num * other.den, self.den * other.num)

    def inverse(self) -> "RationalFn":
        return RationalFn.one() / self

    def __pow__(self, k: int) -> "RationalFn":
        if k < 0:
            return (RationalFn.one() / self) ** (-k)
        result = RationalFn.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def evaluate(self, a: Fraction) -> Fraction:
        a = Fraction(a)
        d = self.den.evaluate(a)
        if d == 0:
            raise ZeroDivisionError(
                f"pole at A = {a}: denominator {self.den} vanishes")
        return self.num.evaluate(a) / d

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalFn):
            return NotImplemented
        # canonical form makes this structural; cross-multiplication would
        # also do, but equality of canonical parts is cheaper
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __str__(self) -> str:
        if self.den.is_one():
            return str(self.num)
        num = str(self.num)
        den = str(self.den)
        return f"({num})/({den})"

    def __repr__(self) -> str:
        return f"RationalFn({self})"

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data) -> "RationalFn":
        return cls(LaurentPoly.from_json(data["num"]),
                   LaurentPoly.from_json(data["den"]))


def parse_rational(text: str) -> RationalFn:
    """Parse 'num' or '(num)/(den)' in the textual Laurent syntax."""
    text = text.strip()
    if ")/(" in text:
        left, right = text.split(")/(", 1)
        return RationalFn(parse_laurent(left.lstrip("(")),
                          parse_laurent(right.rstrip(")")))
    return RationalFn(parse_laurent(text))


class BraceLedger:
    """Multiset of brace indices k recording every inversion of a factor
    unit*{k} during a computation, plus sentinel records for denominators
    that do not factor through braces."""

    __slots__ = ("braces", "sentinels")

    def __init__(self):
        self.braces: Counter = Counter()
        self.sentinels: List[str] = []

    def record_brace(self, k: int, multiplicity: int = 1) -> None:
        if k <= 0:
            raise ValueError("brace ledger entries must be positive")
        self.braces[k] += multiplicity

    def record_sentinel(self, description: str) -> None:
        self.sentinels.append(description)

    def merge(self, other: "BraceLedger") -> None:
        self.braces.update(other.braces)
        self.sentinels.extend(other.sentinels)

    def is_brace_pure(self) -> bool:
        return not self.sentinels

    def as_sorted_list(self) -> List[Tuple[int, int]]:
        return sorted(self.braces.items())

    def to_json(self):
        return {"braces": [[k, m] for k, m in self.as_sorted_list()],
                "sentinels": list(self.sentinels)}

    def __str__(self) -> str:
        parts = [f"{{{k}}}x{m}" if m > 1 else f"{{{k}}}"
                 for k, m in self.as_sorted_list()]
        if self.sentinels:
            parts.append(f"non-brace: {self.sentinels}")
        return "ledger[" + ", ".join(parts) + "]" if parts else "ledger[]"

    def __eq__(self, other) -> bool:
        return (isinstance(other, BraceLedger)
                and self.braces == other.braces
                and self.sentinels == other.sentinels)


def brace_factorization(p: LaurentPoly, k_max: int) -> Tuple[Counter, LaurentPoly]:
    """Greedy trial division of p by braces {k_max}, ..., {1}.

    Returns (multiset of brace factors, remainder). The remainder is a unit
    exactly when p is a unit times a product of braces.  Larger k first:
    {1} divides every brace, so ascending order would strand cofactors like
    {2}/{1} = A + A^{-1} that are not brace products.
    """
    factors: Counter = Counter()
    rem = p
    if rem.is_zero():
        return factors, rem
    for k in range(k_max, 0, -1):
        bk = brace(k)
        while True:
            q = laurent_div_exact(rem, bk)
            if q is None:
                break
            factors[k] += 1
            rem = q
    return factors, rem


def record_denominator(ledger: BraceLedger, den: LaurentPoly, k_max: int,
                       context: str = "") -> None:
    """Factor an inverted denominator into the ledger (braces + sentinel)."""
    factors, rem = brace_factorization(den, k_max)
    for k, m in factors.items():
        ledger.record_brace(k, m)
    if not rem.is_unit():
        where = f" in {context}" if context else ""
        ledger.record_sentinel(f"non-brace denominator {rem}{where}")


def rf_arith(op: str, x: RationalFn, y: RationalFn,
             ledger: Optional[BraceLedger] = None,
             k_max: int = 12) -> RationalFn:
    """Field arithmetic with ledger accounting on division.

    For div, the divisor's numerator becomes an inverted factor; it is
    brace-factored into the ledger (sentinel record when it is not a unit
    times a product of braces).
    """
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        if y.is_zero():
            raise ZeroDivisionError(
                "ill-posed relation application: division by zero in Q(A)")
        if ledger is not None and not y.num.is_unit():
            record_denominator(ledger, y.num, k_max, context="rf_arith div")
        return x / y
    raise ValueError(f"unknown operation {op!r}")


def rf_eval(x: RationalFn, a) -> Fraction:
    """Exact evaluation at a rational point; raises at poles naming the factor."""
    return x.evaluate(Fraction(a))
