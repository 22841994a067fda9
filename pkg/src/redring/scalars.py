"""Scalar reduction rings: exact rationals, integers, and integers mod n."""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import Iterator, Optional

from .core import Domain


class RationalFieldDomain(Domain):
    """The rationals as a reduction ring.

    Only zero sits below anything: a < b iff a = 0 and b != 0.  Every nonzero
    element reduces to 0 modulo any nonzero c via the exact quotient, and all
    nonzero elements are associates, so a single canonical common reducible
    (one) covers every pair.
    """

    name = "q"
    zero = Fraction(0)
    one = Fraction(1)
    is_field = True

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def less(self, a, b) -> bool:
        return a == 0 and b != 0

    def find_multiplier(self, a, c, index):
        if a == 0 or c == 0:
            return None
        return a / c

    def mntcrs(self, c1, i1, c2, i2) -> list:
        if c1 == 0 or c2 == 0:
            return []
        return [self.one]

    def iter_reduction_steps(self, a, c) -> Iterator[tuple]:
        # zero is the only element below anything, so the quotient is the
        # unique useful multiplier
        if a != 0 and c != 0:
            yield a / c, self.zero

    def solve_multiplier(self, target, c):
        if c == 0:
            return None
        return target / c

    def render(self, a) -> str:
        return str(a)

    def parse(self, text: str) -> Fraction:
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational: {text!r}") from exc

    def sample_elements(self, rng: random.Random, count: int) -> list:
        return [
            Fraction(rng.randint(-50, 50), rng.randint(1, 12)) for _ in range(count)
        ]

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalFieldDomain)

    def __hash__(self) -> int:
        return hash(self.name)


def _int_order_key(a: int) -> tuple:
    # magnitude first, then sign: -k sits strictly below k, zero is least
    return (abs(a), a)


class IntegerDomain(Domain):
    """The integers as a reduction ring.

    The order compares magnitudes with the negative element winning ties, so
    it is total and well-founded with zero least.  A multiplier witness picks
    whichever of the two nearest quotients takes a strictly down; the
    canonical common reducible of two generators is the larger magnitude,
    whose critical pair performs one Euclidean division step.
    """

    name = "z"
    zero = 0
    one = 1

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def less(self, a, b) -> bool:
        return _int_order_key(a) < _int_order_key(b)

    def find_multiplier(self, a, c, index) -> Optional[int]:
        if c == 0:
            return None
        floor_q = a // c
        candidates = [floor_q, floor_q + 1]
        best = None
        for m in candidates:
            r = a - m * c
            if _int_order_key(r) < _int_order_key(a):
                if best is None or _int_order_key(r) < _int_order_key(a - best * c):
                    best = m
        return best

    def mntcrs(self, c1, i1, c2, i2) -> list:
        # max(|c1|, |c2|) reduces to zero modulo the larger generator and to
        # the division remainder modulo the smaller, so completion walks the
        # Euclidean algorithm instead of wandering through mid-range values
        if c1 == 0 or c2 == 0:
            return []
        return [max(abs(c1), abs(c2))]

    def iter_reduction_steps(self, a, c) -> Iterator[tuple]:
        if c == 0 or a == 0:
            return
        q1 = (a - abs(a)) // c
        q2 = (a + abs(a)) // c
        for m in range(min(q1, q2) - 1, max(q1, q2) + 2):
            b = a - m * c
            if self.less(b, a):
                yield m, b

    def solve_multiplier(self, target, c):
        if c == 0 or target % c != 0:
            return None
        return target // c

    def small_multipliers(self, bound: int) -> list:
        return list(range(-bound, bound + 1))

    def parse(self, text: str) -> int:
        try:
            return int(text.strip())
        except ValueError as exc:
            raise ValueError(f"not an integer: {text!r}") from exc

    def sample_elements(self, rng: random.Random, count: int) -> list:
        return [rng.randint(-10**4, 10**4) for _ in range(count)]

    def __eq__(self, other) -> bool:
        return isinstance(other, IntegerDomain)

    def __hash__(self) -> int:
        return hash(self.name)


class IntegerQuotientDomain(Domain):
    """Z/nZ on the carrier {0, ..., n-1}, zero divisors welcome.

    Residues are ordered as natural numbers.  A multiplier witness steers a
    straight to the least element of its coset, i.e. a mod gcd(c, n), and the
    single minimal common reducible of c1, c2 is max(gcd(c1, n), gcd(c2, n)).
    """

    def __init__(self, n: int) -> None:
        if n < 1:
            raise ValueError(f"modulus must be positive, got {n}")
        self.n = n
        self.name = f"zmod{n}"
        self.zero = 0
        self.one = 1 % n

    def add(self, a, b):
        return (a + b) % self.n

    def neg(self, a):
        return (-a) % self.n

    def mul(self, a, b):
        return (a * b) % self.n

    def less(self, a, b) -> bool:
        return a < b

    def find_multiplier(self, a, c, index) -> Optional[int]:
        c = c % self.n
        if c == 0:
            return None
        best_value = a
        best_m = None
        for m in range(self.n):
            v = (a - m * c) % self.n
            if v < best_value:
                best_value = v
                best_m = m
        return best_m

    def mntcrs(self, c1, i1, c2, i2) -> list:
        c1, c2 = c1 % self.n, c2 % self.n
        if c1 == 0 or c2 == 0:
            return []
        return [max(math.gcd(c1, self.n), math.gcd(c2, self.n))]

    def annihilator(self, c) -> Optional[int]:
        c = c % self.n
        if c == 0:
            return 1 % self.n or None
        d = math.gcd(c, self.n)
        if d == 1:
            return None
        return self.n // d

    def enumerate_carrier(self) -> list:
        return list(range(self.n))

    def iter_reduction_steps(self, a, c) -> Iterator[tuple]:
        c = c % self.n
        if c == 0:
            return
        for m in range(self.n):
            b = (a - m * c) % self.n
            if b < a:
                yield m, b

    def solve_multiplier(self, target, c):
        c = c % self.n
        if c == 0:
            return None
        for m in range(self.n):
            if (m * c) % self.n == target % self.n:
                return m
        return None

    def parse(self, text: str) -> int:
        try:
            return int(text.strip()) % self.n
        except ValueError as exc:
            raise ValueError(f"not a residue: {text!r}") from exc

    def sample_elements(self, rng: random.Random, count: int) -> list:
        return [rng.randrange(self.n) for _ in range(count)]

    def __eq__(self, other) -> bool:
        return isinstance(other, IntegerQuotientDomain) and other.n == self.n

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.n))


def make_field_domain() -> RationalFieldDomain:
    """The exact rational field as a reduction ring."""
    return RationalFieldDomain()


def make_integer_domain() -> IntegerDomain:
    """The ring of integers as a reduction ring."""
    return IntegerDomain()


def make_integer_quotient_domain(n: int) -> IntegerQuotientDomain:
    """Z/nZ as a reduction ring; n = 1 gives the zero ring."""
    return IntegerQuotientDomain(n)


def normalize_sign(a: int) -> int:
    """Canonical display form of an integer basis element (its magnitude)."""
    return abs(a)
