"""Exact integer Laurent-polynomial arithmetic in n variables.

Values are immutable.  A polynomial is a finite map from exponent
vectors (tuples of ints, possibly negative) to nonzero integer
coefficients; the zero polynomial is the empty map.  Equality, hashing
and the canonical serialized string all go through the same sorted term
list, so equal polynomials are indistinguishable everywhere.
"""

from __future__ import annotations

from typing import Dict, Iterable, Mapping, Tuple

from .errors import NotDivisible

Exponent = Tuple[int, ...]


class LaurentPoly:
    """An integer Laurent polynomial in a fixed number of variables."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exponent, int] | None = None):
        if nvars < 0:
            raise ValueError("variable count must be nonnegative")
        self.nvars = nvars
        clean: Dict[Exponent, int] = {}
        if terms:
            for exp, coeff in terms.items():
                if len(exp) != nvars:
                    raise ValueError(
                        f"exponent vector {exp!r} has length {len(exp)}, expected {nvars}"
                    )
                if coeff:
                    clean[tuple(exp)] = coeff
        self.terms = clean
        self._hash: int | None = None

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "LaurentPoly":
        return cls(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c: int) -> "LaurentPoly":
        if c == 0:
            return cls.zero(nvars)
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def one(cls, nvars: int) -> "LaurentPoly":
        return cls.constant(nvars, 1)

    @classmethod
    def monomial(cls, nvars: int, exp: Iterable[int], coeff: int = 1) -> "LaurentPoly":
        return cls(nvars, {tuple(exp): coeff})

    @classmethod
    def generator(cls, nvars: int, i: int) -> "LaurentPoly":
        """The variable x_i, 1-based."""
        if not 1 <= i <= nvars:
            raise ValueError(f"generator index {i} out of range [1,{nvars}]")
        exp = [0] * nvars
        exp[i - 1] = 1
        return cls(nvars, {tuple(exp): 1})

    # -- structure ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0,) * self.nvars: 1}

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        return sorted(self.terms.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, tuple(self.sorted_terms())))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly({self.nvars}, {dict(self.sorted_terms())!r})"

    # -- ring operations --------------------------------------------

    def _check_compatible(self, other: "LaurentPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError(
                f"variable-count mismatch: {self.nvars} vs {other.nvars}"
            )

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check_compatible(other)
        out = dict(self.terms)
        for exp, coeff in other.terms.items():
            s = out.get(exp, 0) + coeff
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return LaurentPoly(self.nvars, out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check_compatible(other)
        if not self.terms or not other.terms:
            return LaurentPoly.zero(self.nvars)
        # iterate over the smaller factor's terms in the outer loop
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: Dict[Exponent, int] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(key, 0) + ca * cb
                if s:
                    out[key] = s
                else:
                    del out[key]
        return LaurentPoly(self.nvars, out)

    def scale(self, c: int) -> "LaurentPoly":
        if c == 0:
            return LaurentPoly.zero(self.nvars)
        return LaurentPoly(self.nvars, {e: c * k for e, k in self.terms.items()})

    def shift(self, exp: Exponent) -> "LaurentPoly":
        """Multiply by the monomial x^exp."""
        return LaurentPoly(
            self.nvars,
            {tuple(x + y for x, y in zip(e, exp)): c for e, c in self.terms.items()},
        )

    def pow(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValueError("negative powers only exist for monomials; use shift")
        result = LaurentPoly.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -- inspection --------------------------------------------------

    def min_exponents(self) -> Exponent:
        """Componentwise minimum exponent over all terms (zero poly: all 0)."""
        if not self.terms:
            return (0,) * self.nvars
        cols = zip(*self.terms.keys())
        return tuple(min(col) for col in cols)

    def max_exponents(self) -> Exponent:
        if not self.terms:
            return (0,) * self.nvars
        cols = zip(*self.terms.keys())
        return tuple(max(col) for col in cols)

    def total_degree(self) -> int:
        """Maximum over terms of the sum of exponents (zero poly: 0)."""
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def all_coefficients_positive(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    # -- canonical serialization ------------------------------------

    def canonical_string(self) -> str:
        """Bit-exact key: terms "coeff:e1,...,en" sorted by exponent, ';'-joined."""
        return ";".join(
            f"{c}:{','.join(str(x) for x in e)}" for e, c in self.sorted_terms()
        )

    @classmethod
    def from_canonical_string(cls, nvars: int, s: str) -> "LaurentPoly":
        if not s:
            return cls.zero(nvars)
        terms: Dict[Exponent, int] = {}
        for part in s.split(";"):
            coeff_str, exp_str = part.split(":")
            exp = tuple(int(x) for x in exp_str.split(",")) if exp_str else ()
            terms[exp] = int(coeff_str)
        return cls(nvars, terms)

    def pretty(self, names: list[str] | None = None) -> str:
        """Human form num/den with a monomial denominator, e.g. (1 + x1)/x2."""
        if names is None:
            names = [f"x{i}" for i in range(1, self.nvars + 1)]
        if not self.terms:
            return "0"
        mins = self.min_exponents()
        den_exp = tuple(-min(m, 0) for m in mins)
        num = self.shift(den_exp)
        num_str = _format_positive_part(num, names)
        if all(d == 0 for d in den_exp):
            return num_str
        den_str = _format_monomial(den_exp, 1, names)
        if len(num.terms) > 1:
            num_str = f"({num_str})"
        if "*" in den_str:
            den_str = f"({den_str})"
        return f"{num_str}/{den_str}"


def _format_monomial(exp: Exponent, coeff: int, names: list[str]) -> str:
    factors = []
    for name, e in zip(names, exp):
        if e == 1:
            factors.append(name)
        elif e != 0:
            factors.append(f"{name}^{e}")
    if not factors:
        return str(coeff)
    body = "*".join(factors)
    if coeff == 1:
        return body
    if coeff == -1:
        return f"-{body}"
    return f"{coeff}*{body}"


def _format_positive_part(p: LaurentPoly, names: list[str]) -> str:
    parts = []
    # display ordering: ascending total degree, then lex, constant first
    for exp, coeff in sorted(p.terms.items(), key=lambda t: (sum(t[0]), t[0])):
        term = _format_monomial(exp, coeff, names)
        if parts and not term.startswith("-"):
            parts.append(f"+ {term}")
        elif parts:
            parts.append(f"- {term[1:]}")
        else:
            parts.append(term)
    return " ".join(parts)


def _grlex_key(exp: Exponent) -> tuple[int, Exponent]:
    return (sum(exp), exp)


def exact_div(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Return r with q*r == p, or raise NotDivisible.

    Both arguments are shifted by their componentwise-minimum exponents
    so the division runs over ordinary polynomials, then single-divisor
    division under graded lex does the rest.  The leading-term test is
    fail-fast and sound: over an integral domain the remainder q*(r - acc)
    always has leading term divisible by q's, so the first failure
    certifies there is no integer-coefficient quotient.
    """
    if p.nvars != q.nvars:
        raise ValueError("variable-count mismatch")
    if q.is_zero():
        raise ZeroDivisionError("exact_div by the zero polynomial")
    if p.is_zero():
        return LaurentPoly.zero(p.nvars)

    p_min = p.min_exponents()
    q_min = q.min_exponents()
    num = p.shift(tuple(-m for m in p_min))
    den = q.shift(tuple(-m for m in q_min))

    den_lead = max(den.terms, key=_grlex_key)
    den_lead_coeff = den.terms[den_lead]

    rem = dict(num.terms)
    quot: Dict[Exponent, int] = {}
    while rem:
        lead = max(rem, key=_grlex_key)
        lead_coeff = rem[lead]
        t_exp = tuple(a - b for a, b in zip(lead, den_lead))
        if any(x < 0 for x in t_exp) or lead_coeff % den_lead_coeff:
            raise NotDivisible(
                f"{p.canonical_string()!r} is not divisible by {q.canonical_string()!r}"
            )
        t_coeff = lead_coeff // den_lead_coeff
        quot[t_exp] = t_coeff
        for e, c in den.terms.items():
            key = tuple(a + b for a, b in zip(e, t_exp))
            s = rem.get(key, 0) - t_coeff * c
            if s:
                rem[key] = s
            else:
                rem.pop(key, None)

    shift_back = tuple(a - b for a, b in zip(p_min, q_min))
    return LaurentPoly(p.nvars, quot).shift(shift_back)


def generators(nvars: int) -> tuple[LaurentPoly, ...]:
    """The tuple (x_1, ..., x_n)."""
    return tuple(LaurentPoly.generator(nvars, i) for i in range(1, nvars + 1))
