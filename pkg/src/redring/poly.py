"""Sparse multivariate polynomials as ordered monomial tuples.

Power products are plain exponent tuples; a term order (lex, deglex or
degrevlex) sorts them; a polynomial is a strictly descending tuple of
(coefficient, power product) monomials with no zero coefficients.  The
``PolyRing`` domain lifts any coefficient reduction ring to the polynomial
ring over it: reduction rewrites the greatest reducible term through a
coefficient multiplier times a power-product quotient, and common reducibles
factor as a coefficient-level representative times the lcm of the leading
power products.
"""

from __future__ import annotations

import random
import re
from typing import Any, Iterable, NamedTuple, Optional

from .core import Domain

Pp = tuple


def _check_lengths(s: Pp, t: Pp) -> None:
    if len(s) != len(t):
        raise ValueError(f"power products of different lengths: {s} vs {t}")


def pp_mul(s: Pp, t: Pp) -> Pp:
    _check_lengths(s, t)
    return tuple(x + y for x, y in zip(s, t))


def pp_lcm(s: Pp, t: Pp) -> Pp:
    _check_lengths(s, t)
    return tuple(max(x, y) for x, y in zip(s, t))


def pp_divides(s: Pp, t: Pp) -> bool:
    """Whether s divides t, componentwise."""
    _check_lengths(s, t)
    return all(x <= y for x, y in zip(s, t))


def pp_quotient(t: Pp, s: Pp) -> Pp:
    """t / s; requires s to divide t."""
    if not pp_divides(s, t):
        raise ValueError(f"{s} does not divide {t}")
    return tuple(y - x for x, y in zip(s, t))


def pp_degree(s: Pp) -> int:
    return sum(s)


class TermOrder:
    """A total, multiplicative, well-founded order on power products."""

    KINDS = ("lex", "deglex", "degrevlex")

    def __init__(self, kind: str, nvars: int) -> None:
        if kind not in self.KINDS:
            raise ValueError(f"unknown term order {kind!r}; choose from {self.KINDS}")
        if nvars < 1:
            raise ValueError("need at least one variable")
        self.kind = kind
        self.nvars = nvars

    def key(self, pp: Pp):
        """Sort key: key(s) < key(t) iff s is below t."""
        if len(pp) != self.nvars:
            raise ValueError(f"expected {self.nvars} exponents, got {pp}")
        if self.kind == "lex":
            return pp
        if self.kind == "deglex":
            return (sum(pp), pp)
        return (sum(pp), tuple(-e for e in reversed(pp)))

    def compare(self, s: Pp, t: Pp) -> int:
        """-1, 0 or 1 as s is below, equal to, or above t."""
        ks, kt = self.key(s), self.key(t)
        if ks < kt:
            return -1
        if ks > kt:
            return 1
        return 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TermOrder)
            and other.kind == self.kind
            and other.nvars == self.nvars
        )

    def __hash__(self) -> int:
        return hash((self.kind, self.nvars))

    def __repr__(self) -> str:
        return f"TermOrder({self.kind!r}, {self.nvars})"


class Monomial(NamedTuple):
    coeff: Any
    pp: Pp


class Polynomial:
    """An immutable polynomial: monomials strictly descending in the ring's order."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: "PolyRing", terms: tuple) -> None:
        self.ring = ring
        self.terms = terms

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading monomial")
        return self.terms[0]

    def leading_pp(self) -> Pp:
        return self.leading_monomial().pp

    def leading_coeff(self):
        return self.leading_monomial().coeff

    def coefficient_at(self, pp: Pp):
        """The coefficient of pp, the coefficient-domain zero when absent."""
        for mono in self.terms:
            if mono.pp == pp:
                return mono.coeff
        return self.ring.coeff.zero

    def support(self) -> list:
        return [mono.pp for mono in self.terms]

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(pp_degree(mono.pp) for mono in self.terms)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self.ring._require_same(other)
        return self.ring.poly(
            [(m.coeff, m.pp) for m in self.terms] + [(m.coeff, m.pp) for m in other.terms]
        )

    def __neg__(self) -> "Polynomial":
        coeff = self.ring.coeff
        return Polynomial(
            self.ring, tuple(Monomial(coeff.neg(m.coeff), m.pp) for m in self.terms)
        )

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self.ring._require_same(other)
        coeff = self.ring.coeff
        items = []
        for ms in self.terms:
            for mo in other.terms:
                items.append((coeff.mul(ms.coeff, mo.coeff), pp_mul(ms.pp, mo.pp)))
        return self.ring.poly(items)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and other.ring == self.ring
            and other.terms == self.terms
        )

    def __hash__(self) -> int:
        return hash(self.terms)

    def __str__(self) -> str:
        return self.ring.render(self)

    def __repr__(self) -> str:
        return f"<poly {self.ring.render(self)}>"


def mono_mul(mono: Monomial, p: Polynomial) -> Polynomial:
    """Multiply a polynomial by a single monomial."""
    coeff = p.ring.coeff
    return p.ring.poly(
        [(coeff.mul(mono.coeff, m.coeff), pp_mul(mono.pp, m.pp)) for m in p.terms]
    )


_TOKEN_RE = re.compile(r"(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[\^*/+\-])|(\S)")


class PolyRing(Domain):
    """The polynomial ring over a coefficient reduction ring.

    Reduction rewrites the greatest term t of f that both the leading power
    product of g divides and whose coefficient the coefficient domain can
    take down modulo the leading coefficient of g; the multiplier is that
    coefficient witness times the power-product quotient.  The element order
    compares monomial tuples positionally (power product first, then
    coefficient, then the tails, with a proper prefix below its extension),
    which strictly decreases under every such rewrite.

    Over coefficient rings with zero divisors a multiplier can annihilate
    the leading coefficient of g, so the rewrite acts through the tail of g
    instead; those multipliers form the separate index "ann", which works
    through the nonzero scalar multiples of g with successively annihilated
    leads.  Without zero divisors that index is empty.
    """

    def __init__(self, coeff: Domain, names: Iterable[str], order: TermOrder) -> None:
        self.coeff = coeff
        self.names = tuple(names)
        if not self.names:
            raise ValueError("need at least one variable")
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        if order.nvars != len(self.names):
            raise ValueError("term order arity does not match the variable count")
        self.order = order
        self.nvars = len(self.names)
        self.name = f"{coeff.name}[{','.join(self.names)}]/{order.kind}"
        self.multiplier_indices = tuple(coeff.multiplier_indices) + ("ann",)
        self.zero = Polynomial(self, ())
        self.one = self.poly([(coeff.one, (0,) * self.nvars)])

    # construction helpers
    def poly(self, items: Iterable[tuple]) -> Polynomial:
        """Normalize (coefficient, power product) pairs into a polynomial."""
        acc: dict = {}
        for c, pp in items:
            pp = tuple(pp)
            if len(pp) != self.nvars:
                raise ValueError(f"expected {self.nvars} exponents, got {pp}")
            if any(e < 0 for e in pp):
                raise ValueError(f"negative exponent in {pp}")
            if pp in acc:
                acc[pp] = self.coeff.add(acc[pp], c)
            else:
                acc[pp] = c
        terms = [
            Monomial(c, pp)
            for pp, c in acc.items()
            if not self.coeff.is_zero(c)
        ]
        terms.sort(key=lambda m: self.order.key(m.pp), reverse=True)
        return Polynomial(self, tuple(terms))

    def monomial(self, c, pp: Pp) -> Polynomial:
        return self.poly([(c, pp)])

    def constant(self, c) -> Polynomial:
        return self.monomial(c, (0,) * self.nvars)

    def var(self, name: str) -> Polynomial:
        if name not in self.names:
            raise ValueError(f"unknown variable {name!r}")
        pp = tuple(1 if n == name else 0 for n in self.names)
        return self.monomial(self.coeff.one, pp)

    def _require_same(self, p: Polynomial) -> None:
        if p.ring != self:
            raise ValueError("polynomials belong to different rings")

    # Domain interface
    def add(self, a: Polynomial, b: Polynomial) -> Polynomial:
        self._require_same(a)
        self._require_same(b)
        return a + b

    def neg(self, a: Polynomial) -> Polynomial:
        self._require_same(a)
        return -a

    def mul(self, a: Polynomial, b: Polynomial) -> Polynomial:
        self._require_same(a)
        self._require_same(b)
        return a * b

    def equal(self, a: Polynomial, b: Polynomial) -> bool:
        return a.terms == b.terms

    def is_zero(self, a: Polynomial) -> bool:
        return a.is_zero

    def less(self, p: Polynomial, q: Polynomial) -> bool:
        for mp, mq in zip(p.terms, q.terms):
            side = self.order.compare(mp.pp, mq.pp)
            if side != 0:
                return side < 0
            if not self.coeff.equal(mp.coeff, mq.coeff):
                if self.coeff.less(mp.coeff, mq.coeff):
                    return True
                return False
        return len(p.terms) < len(q.terms)

    def _ann_family(self, g: Polynomial) -> list:
        """(scalar, scalar*g) pairs whose leads were annihilated in cascade.

        Each step kills at least the current leading term, so the supports
        strictly shrink and the family is finite.
        """
        family = []
        scalar = self.coeff.one
        current = g
        while not current.is_zero:
            m0 = self.coeff.annihilator(current.leading_coeff())
            if m0 is None:
                break
            scalar = self.coeff.mul(m0, scalar)
            current = mono_mul(Monomial(m0, (0,) * self.nvars), current)
            if current.is_zero:
                break
            family.append((scalar, current))
        return family

    def _scan(self, f: Polynomial, g: Polynomial, index) -> Optional[Polynomial]:
        g_pp = g.leading_pp()
        g_lc = g.leading_coeff()
        for mono in f.terms:
            if pp_divides(g_pp, mono.pp):
                m = self.coeff.find_multiplier(mono.coeff, g_lc, index)
                if m is not None:
                    return self.monomial(m, pp_quotient(mono.pp, g_pp))
        return None

    def find_multiplier(self, f: Polynomial, g: Polynomial, index) -> Optional[Polynomial]:
        if f.is_zero or g.is_zero:
            return None
        if index == "ann":
            for scalar, shadow in self._ann_family(g):
                for cindex in self.coeff.multiplier_indices:
                    m = self._scan(f, shadow, cindex)
                    if m is not None:
                        head = m.leading_monomial()
                        return self.monomial(
                            self.coeff.mul(head.coeff, scalar), head.pp
                        )
            return None
        return self._scan(f, g, index)

    def _effective(self, g: Polynomial, index) -> list:
        """The polynomials a reduction at this index actually rewrites with."""
        if index == "ann":
            return [shadow for _scalar, shadow in self._ann_family(g)]
        return [g]

    def mntcrs(self, g1: Polynomial, i1, g2: Polynomial, i2) -> list:
        if g1.is_zero or g2.is_zero:
            return []
        ci1 = i1 if i1 != "ann" else self.coeff.multiplier_indices[0]
        ci2 = i2 if i2 != "ann" else self.coeff.multiplier_indices[0]
        out = []
        for e1 in self._effective(g1, i1):
            for e2 in self._effective(g2, i2):
                lcm = pp_lcm(e1.leading_pp(), e2.leading_pp())
                reps = self.coeff.mntcrs(e1.leading_coeff(), ci1, e2.leading_coeff(), ci2)
                for c in reps:
                    z = self.monomial(c, lcm)
                    if z not in out:
                        out.append(z)
        return out

    def single_reducibility_test(self, z: Polynomial, g: Polynomial) -> bool:
        # sound for the chain criterion only where reducibility is pure
        # power-product divisibility: over ring coefficients the side pairs
        # see different coefficient parts of z, so never report a subsumer
        if not self.coeff.is_field:
            return False
        return any(
            self.find_multiplier(z, g, index) is not None
            for index in self.multiplier_indices
        )

    def monic(self, p: Polynomial) -> Polynomial:
        """Scale by the inverse leading coefficient; field coefficients only."""
        if p.is_zero:
            return p
        lc = p.leading_coeff()
        inv = self.coeff.find_multiplier(self.coeff.one, lc, self.multiplier_indices[0])
        if inv is None:
            return p
        return mono_mul(Monomial(inv, (0,) * self.nvars), p)

    # syntax
    def render(self, p: Polynomial) -> str:
        if p.is_zero:
            return self.coeff.render(self.coeff.zero)
        parts = []
        for coeff, pp in p.terms:
            factors = []
            for name, e in zip(self.names, pp):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            var_part = "*".join(factors)
            cs = self.coeff.render(coeff)
            if not var_part:
                parts.append(cs)
            elif cs == "1":
                parts.append(var_part)
            elif cs == "-1":
                parts.append("-" + var_part)
            else:
                parts.append(f"{cs}*{var_part}")
        out = parts[0]
        for term in parts[1:]:
            if term.startswith("-"):
                out += " - " + term[1:]
            else:
                out += " + " + term
        return out

    def parse(self, text: str) -> Polynomial:
        tokens = self._tokenize(text)
        items = []
        pos = 0
        expect_term = True
        sign = 1
        while pos < len(tokens):
            kind, value, col = tokens[pos]
            if kind == "op" and value in "+-":
                if not expect_term and value == "-":
                    sign = -1
                    expect_term = True
                elif not expect_term:
                    sign = 1
                    expect_term = True
                elif value == "-":
                    sign = -sign
                else:
                    pass
                pos += 1
                continue
            coeff_val, pp, pos = self._parse_term(tokens, pos)
            if sign < 0:
                coeff_val = self.coeff.neg(coeff_val)
            items.append((coeff_val, pp))
            sign = 1
            expect_term = False
        if expect_term and tokens:
            raise ValueError("dangling sign at end of polynomial")
        if not tokens:
            raise ValueError("empty polynomial text")
        return self.poly(items)

    def _tokenize(self, text: str) -> list:
        tokens = []
        for match in _TOKEN_RE.finditer(text):
            num, name, op, bad = match.groups()
            col = match.start() + 1
            if bad is not None:
                raise ValueError(f"unexpected character {bad!r} at column {col}")
            if num is not None:
                tokens.append(("num", num, col))
            elif name is not None:
                tokens.append(("name", name, col))
            else:
                tokens.append(("op", op, col))
        return tokens

    def _parse_term(self, tokens: list, pos: int) -> tuple:
        coeff_val = self.coeff.one
        exps = [0] * self.nvars
        saw_factor = False
        while pos < len(tokens):
            kind, value, col = tokens[pos]
            if kind == "op" and value == "*":
                pos += 1
                continue
            if kind == "op" and value in "+-":
                break
            if kind == "num":
                literal = value
                if (
                    pos + 2 < len(tokens)
                    and tokens[pos + 1][:2] == ("op", "/")
                    and tokens[pos + 2][0] == "num"
                ):
                    literal = f"{value}/{tokens[pos + 2][1]}"
                    pos += 2
                coeff_val = self.coeff.mul(coeff_val, self.coeff.parse(literal))
                pos += 1
                saw_factor = True
                continue
            if kind == "name":
                if value not in self.names:
                    raise ValueError(f"unknown variable {value!r} at column {col}")
                exponent = 1
                if pos + 1 < len(tokens) and tokens[pos + 1][:2] in (
                    ("op", "^"),
                    ("op", "**"),
                ):
                    if pos + 2 >= len(tokens) or tokens[pos + 2][0] != "num":
                        raise ValueError(f"missing exponent after {value!r} at column {col}")
                    exponent = int(tokens[pos + 2][1])
                    pos += 2
                exps[self.names.index(value)] += exponent
                pos += 1
                saw_factor = True
                continue
            raise ValueError(f"unexpected token {value!r} at column {col}")
        if not saw_factor:
            where = tokens[pos][2] if pos < len(tokens) else "end"
            raise ValueError(f"expected a term at column {where}")
        return coeff_val, tuple(exps), pos

    def sample_elements(self, rng: random.Random, count: int) -> list:
        out = []
        coeffs = self.coeff.sample_elements(rng, max(count * 3, 8))
        for _ in range(count):
            items = []
            for _ in range(rng.randint(0, 3)):
                pp = tuple(rng.randint(0, 2) for _ in range(self.nvars))
                items.append((rng.choice(coeffs), pp))
            out.append(self.poly(items))
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PolyRing)
            and other.coeff == self.coeff
            and other.names == self.names
            and other.order == self.order
        )

    def __hash__(self) -> int:
        return hash((self.names, self.order))


def make_poly_domain(coeff: Domain, names: Iterable[str], order) -> PolyRing:
    """Polynomial reduction ring over a coefficient domain.

    ``order`` may be a TermOrder or one of the kind strings.
    """
    names = tuple(names)
    if isinstance(order, str):
        order = TermOrder(order, len(names))
    return PolyRing(coeff, names, order)
