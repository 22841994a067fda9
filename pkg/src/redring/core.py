"""The reduction-ring domain interface and the reduction calculus on top of it.

A domain packages a commutative ring with identity together with a strict
well-founded order (zero least), indexed multiplier witnesses, and an
enumeration of canonical minimal common reducibles.  Reduction, normal forms,
relation projection, ideal congruence and a behavioural axiom suite are all
written against that interface, so every concrete ring plugs in uniformly.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Any, Iterable, Iterator, Optional, Sequence

from .relations import FiniteRelation

DEFAULT_STEP_BOUND = 10**6


class NonTerminationError(RuntimeError):
    """A reduction loop exceeded its step bound; the order is likely not well-founded."""


class ContractViolationError(RuntimeError):
    """A domain broke one of its own promises, e.g. an irreducible mntcr."""


class Domain:
    """Carrier operations plus the structure reduction needs.

    Subclasses provide:

    * ring operations ``add``, ``neg``, ``mul`` with attributes ``zero`` and
      ``one`` (commutative, with identity);
    * ``less``, a strict well-founded order whose least element is zero;
    * ``find_multiplier(a, c, index)``, a complete constructive witness: it
      returns some multiplier m with a - m*c strictly below a, or None when
      no multiplier at that index can take a below itself;
    * ``mntcrs(c1, i1, c2, i2)``, a finite list of canonical representatives,
      one per equivalence class of minimal non-trivial common reducibles;
    * ``render`` / ``parse`` for the element syntax, and ``sample_elements``
      for randomized law checking.

    ``enumerate_carrier`` returns the full carrier for finite domains and
    None otherwise.  ``single_reducibility_test`` is an optional hook used by
    the chain criterion, left as None where no cheap test exists.
    """

    name = "domain"
    multiplier_indices: tuple = (0,)
    zero: Any = None
    one: Any = None
    is_field = False
    single_reducibility_test = None

    # ring operations
    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def equal(self, a, b) -> bool:
        return a == b

    def is_zero(self, a) -> bool:
        return self.equal(a, self.zero)

    # order and multipliers
    def less(self, a, b) -> bool:
        raise NotImplementedError

    def find_multiplier(self, a, c, index):
        raise NotImplementedError

    def mntcrs(self, c1, i1, c2, i2) -> list:
        raise NotImplementedError

    def enumerate_carrier(self) -> Optional[list]:
        return None

    def iter_reduction_steps(self, a, c) -> Iterator[tuple]:
        """Yield (multiplier, target) pairs for single steps a -> target by c.

        The default yields the witnesses found by ``find_multiplier``.
        Finite and scalar domains override this with a complete enumeration,
        which is what relation projection relies on.
        """
        for index in self.multiplier_indices:
            m = self.find_multiplier(a, c, index)
            if m is not None:
                yield m, self.sub(a, self.mul(m, c))

    def annihilator(self, c):
        """A nonzero m with m*c = 0, or None where only zero annihilates c.

        Domains without zero divisors keep the default.  Polynomial rings use
        this to reduce through multiples of a generator whose lead vanishes.
        """
        return None

    # hooks used by bounded ideal-congruence search
    def solve_multiplier(self, target, c):
        """Exact m with m*c = target, or None.  Optional."""
        return None

    def small_multipliers(self, bound: int) -> Optional[list]:
        """A finite multiplier grid for bounded combination search.  Optional."""
        return None

    # syntax and sampling
    def render(self, a) -> str:
        return str(a)

    def parse(self, text: str):
        raise NotImplementedError

    def sample_elements(self, rng: random.Random, count: int) -> list:
        raise NotImplementedError


@dataclass(frozen=True)
class ReductionCertificate:
    """One reduction step: after = before - multiplier * reducer, after < before."""

    reducer: Any
    reducer_pos: int
    index: Any
    multiplier: Any
    before: Any
    after: Any


def reduce_step(dom: Domain, a, basis: Sequence) -> Optional[tuple]:
    """One reduction step of a modulo the basis, or None if a is irreducible.

    Deterministic: the first (element, index) pair in declared order wins.
    """
    for pos, c in enumerate(basis):
        for index in dom.multiplier_indices:
            m = dom.find_multiplier(a, c, index)
            if m is not None:
                b = dom.sub(a, dom.mul(m, c))
                cert = ReductionCertificate(c, pos, index, m, a, b)
                return b, cert
    return None


def is_reducible(dom: Domain, a, basis: Sequence) -> bool:
    return reduce_step(dom, a, basis) is not None


def normal_form(
    dom: Domain,
    a,
    basis: Sequence,
    max_steps: int = DEFAULT_STEP_BOUND,
) -> tuple:
    """Totally reduce a modulo the basis; returns (irreducible h, certificate chain)."""
    chain: list = []
    current = a
    for _ in range(max_steps):
        step = reduce_step(dom, current, basis)
        if step is None:
            return current, chain
        current, cert = step
        chain.append(cert)
    raise NonTerminationError(
        f"reduction of {dom.render(a)} did not settle within {max_steps} steps"
    )


def project_reduction_relation(dom: Domain, basis: Sequence, universe: Iterable) -> FiniteRelation:
    """The reduction relation modulo the basis, restricted to a finite universe."""
    elements: list = []
    for e in universe:
        if e not in elements:
            elements.append(e)
    carrier = set(elements)
    steps = set()
    for a in elements:
        for c in basis:
            for _m, b in dom.iter_reduction_steps(a, c):
                if b in carrier and dom.less(b, a):
                    steps.add((a, b))
    return FiniteRelation(tuple(elements), frozenset(steps))


def ideal_congruence_holds(dom: Domain, a, b, basis: Sequence, search_bound: int = 4) -> bool:
    """Whether a - b lies in the ideal generated by the basis.

    Exact on finite carriers (additive closure of all multiples); on infinite
    domains it tries exact single-generator solutions and then a bounded
    multiplier grid, so a False answer is only as strong as the bound.
    """
    diff = dom.sub(a, b)
    if dom.is_zero(diff):
        return True
    gens = [c for c in basis if not dom.is_zero(c)]
    if not gens:
        return False
    carrier = dom.enumerate_carrier()
    if carrier is not None:
        members = {dom.zero}
        frontier = [dom.zero]
        while frontier:
            s = frontier.pop()
            for c in gens:
                for m in carrier:
                    v = dom.add(s, dom.mul(m, c))
                    if v not in members:
                        members.add(v)
                        frontier.append(v)
        return diff in members
    for c in gens:
        m = dom.solve_multiplier(diff, c)
        if m is not None and dom.equal(dom.mul(m, c), diff):
            return True
    grid = dom.small_multipliers(search_bound)
    if grid is None:
        return False
    for combo in itertools.product(grid, repeat=len(gens)):
        acc = dom.zero
        for m, c in zip(combo, gens):
            acc = dom.add(acc, dom.mul(m, c))
        if dom.equal(acc, diff):
            return True
    return False


@dataclass(frozen=True)
class AxiomCheck:
    name: str
    status: str  # PASS | FAIL | SKIPPED
    witness: Optional[str] = None


@dataclass
class AxiomReport:
    domain: str
    checks: list

    @property
    def ok(self) -> bool:
        return all(c.status != "FAIL" for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if c.status == "FAIL"]

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            suffix = f" [{c.witness}]" if c.witness else ""
            lines.append(f"{c.name}: {c.status}{suffix}")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "domain": self.domain,
            "ok": self.ok,
            "checks": [
                {"name": c.name, "status": c.status, "witness": c.witness}
                for c in self.checks
            ],
        }


# Axioms that cannot be probed through the domain interface; reported as
# SKIPPED rather than silently ignored or guessed at.
_UNCHECKED_AXIOMS = (
    ("multiplier-set-closure", "multiplier sets are implicit in the witness function"),
    ("connectibility-stability", "not observable through the witness interface"),
    ("completion-termination", "covered by completion step caps and acceptance runs"),
)


def check_axioms(dom: Domain, sample_budget: int = 2000, seed: int = 0) -> AxiomReport:
    """Behavioural check of the reduction-ring laws.

    Exhaustive whenever the carrier is enumerable, sampled otherwise.
    Failures carry a witness string; they are report entries, not exceptions.
    """
    rng = random.Random(seed)
    carrier = dom.enumerate_carrier()
    exhaustive = carrier is not None
    if exhaustive:
        elems = list(carrier)
        pairs = list(itertools.product(elems, repeat=2))
        triples = itertools.product(elems, repeat=3)
    else:
        pool = dom.sample_elements(rng, max(32, min(sample_budget, 256)))
        elems = pool
        pairs = [(rng.choice(pool), rng.choice(pool)) for _ in range(sample_budget)]
        triples = (
            (rng.choice(pool), rng.choice(pool), rng.choice(pool))
            for _ in range(sample_budget)
        )

    checks: list = []

    def record(name: str, witness: Optional[str]) -> None:
        if witness is None:
            checks.append(AxiomCheck(name, "PASS"))
        else:
            checks.append(AxiomCheck(name, "FAIL", witness))

    add, mul, neg = dom.add, dom.mul, dom.neg
    eq = dom.equal

    w_ac = w_aa = w_mc = w_ma = w_d = None
    for a, b, c in triples:
        if w_ac is None and not eq(add(a, b), add(b, a)):
            w_ac = f"a={dom.render(a)} b={dom.render(b)}"
        if w_aa is None and not eq(add(add(a, b), c), add(a, add(b, c))):
            w_aa = f"a={dom.render(a)} b={dom.render(b)} c={dom.render(c)}"
        if w_mc is None and not eq(mul(a, b), mul(b, a)):
            w_mc = f"a={dom.render(a)} b={dom.render(b)}"
        if w_ma is None and not eq(mul(mul(a, b), c), mul(a, mul(b, c))):
            w_ma = f"a={dom.render(a)} b={dom.render(b)} c={dom.render(c)}"
        if w_d is None and not eq(mul(a, add(b, c)), add(mul(a, b), mul(a, c))):
            w_d = f"a={dom.render(a)} b={dom.render(b)} c={dom.render(c)}"
        if not (w_ac is None or w_aa is None or w_mc is None or w_ma is None or w_d is None):
            break
    record("add-commutative", w_ac)
    record("add-associative", w_aa)
    record("mul-commutative", w_mc)
    record("mul-associative", w_ma)
    record("mul-distributes-over-add", w_d)

    w_zero = w_one = w_inv = None
    for a in elems:
        if w_zero is None and not eq(add(a, dom.zero), a):
            w_zero = f"a={dom.render(a)}"
        if w_one is None and not eq(mul(a, dom.one), a):
            w_one = f"a={dom.render(a)}"
        if w_inv is None and not eq(add(a, neg(a)), dom.zero):
            w_inv = f"a={dom.render(a)}"
    record("zero-additive-identity", w_zero)
    record("one-multiplicative-identity", w_one)
    record("additive-inverse", w_inv)

    w_irr = None
    for a in elems:
        if dom.less(a, a):
            w_irr = f"a={dom.render(a)}"
            break
    record("order-irreflexive", w_irr)

    w_tr = None
    trans_samples = pairs if exhaustive else [
        (rng.choice(elems), rng.choice(elems)) for _ in range(sample_budget)
    ]
    for a, b in trans_samples:
        if w_tr is not None:
            break
        if dom.less(a, b):
            for c in elems if exhaustive else rng.sample(elems, min(16, len(elems))):
                if dom.less(b, c) and not dom.less(a, c):
                    w_tr = f"a={dom.render(a)} b={dom.render(b)} c={dom.render(c)}"
                    break
    record("order-transitive", w_tr)

    if exhaustive:
        w_cyc = None
        state: dict = {}
        below = {e: [f for f in elems if dom.less(f, e)] for e in elems}

        def visit(x) -> bool:
            state[x] = "open"
            for y in below[x]:
                mark = state.get(y)
                if mark == "open" or (mark is None and visit(y)):
                    return True
            state[x] = "done"
            return False

        for e in elems:
            if e not in state and visit(e):
                w_cyc = "cycle through " + dom.render(e)
                break
        record("order-acyclic", w_cyc)
    else:
        w_anti = None
        for a, b in trans_samples:
            if dom.less(a, b) and dom.less(b, a):
                w_anti = f"a={dom.render(a)} b={dom.render(b)}"
                break
        record("order-acyclic", w_anti)

    w_least = None
    for a in elems:
        if not dom.is_zero(a) and not dom.less(dom.zero, a):
            w_least = f"a={dom.render(a)}"
            break
    record("zero-least", w_least)

    w_red = None
    for a, c in pairs if exhaustive else trans_samples:
        if w_red is not None:
            break
        for index in dom.multiplier_indices:
            m = dom.find_multiplier(a, c, index)
            if m is None:
                continue
            if not dom.less(dom.sub(a, dom.mul(m, c)), a):
                w_red = (
                    f"a={dom.render(a)} c={dom.render(c)} i={index} m={dom.render(m)}"
                )
                break
    record("reduction-decreases", w_red)

    w_fin = w_common = None
    nonzero = [e for e in elems if not dom.is_zero(e)]
    mntcr_pairs = (
        list(itertools.product(nonzero, repeat=2))
        if exhaustive
        else [(rng.choice(nonzero), rng.choice(nonzero)) for _ in range(min(sample_budget, 200))]
    )
    for c1, c2 in mntcr_pairs:
        if w_fin is not None and w_common is not None:
            break
        for i1 in dom.multiplier_indices:
            for i2 in dom.multiplier_indices:
                zs = dom.mntcrs(c1, i1, c2, i2)
                if w_fin is None and not isinstance(zs, (list, tuple)):
                    w_fin = f"c1={dom.render(c1)} c2={dom.render(c2)}"
                for z in zs:
                    if w_common is None and not (
                        is_reducible(dom, z, [c1]) and is_reducible(dom, z, [c2])
                    ):
                        w_common = (
                            f"z={dom.render(z)} c1={dom.render(c1)} c2={dom.render(c2)}"
                        )
    record("mntcr-finite", w_fin)
    record("mntcr-common-reducible", w_common)

    for name, why in _UNCHECKED_AXIOMS:
        checks.append(AxiomCheck(name, "SKIPPED", why))

    return AxiomReport(dom.name, checks)
