"""Finite rings Z/n, their ideals and multiplicative subsets."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from math import gcd, prod
from typing import Iterable

from sympy import divisors, factorint

from .linalg import MAX_MODULUS


class ZeroInSet(ValueError):
    """A multiplicative set would contain 0."""


@dataclass(frozen=True)
class Ring:
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise ValueError(f"ring modulus must be an integer >= 2, got {self.n!r}")
        if self.n > MAX_MODULUS:
            raise ValueError(f"ring modulus {self.n} exceeds the supported bound {MAX_MODULUS}")

    def __str__(self):
        return f"Z/{self.n}"

    @cached_property
    def divisors(self) -> tuple[int, ...]:
        return tuple(divisors(self.n))

    @cached_property
    def primes(self) -> tuple[int, ...]:
        return tuple(sorted(factorint(self.n)))

    @cached_property
    def exponent(self) -> int:
        """Largest prime exponent in ``n``; powers of any element stabilise after it."""
        return max(factorint(self.n).values())

    def is_unit(self, r: int) -> bool:
        return gcd(r, self.n) == 1


def make_ring(n: int) -> Ring:
    return Ring(n)


@dataclass(frozen=True)
class MultSet:
    ring: Ring
    generators: tuple[int, ...]
    elements: frozenset[int] = field(compare=False)

    def __contains__(self, r: int) -> bool:
        return r % self.ring.n in self.elements

    def __iter__(self):
        return iter(sorted(self.elements))

    def __len__(self):
        return len(self.elements)

    @property
    def product(self) -> int:
        """Product of the generators; a prime divides some element iff it divides this."""
        return prod(self.generators) % self.ring.n if self.generators else 1

    def __str__(self):
        if not self.generators:
            return "{1}"
        return "<" + ",".join(map(str, self.generators)) + ">"


def mult_set(ring: Ring, gens: Iterable[int] = ()) -> MultSet:
    """Multiplicative closure of ``gens`` together with 1.

    Raises :class:`ZeroInSet` if the closure reaches 0.
    """
    n = ring.n
    gens = tuple(sorted({g % n for g in gens}))
    elements = {1 % n}
    frontier = [1 % n]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g % n
                if y not in elements:
                    elements.add(y)
                    nxt.append(y)
        frontier = nxt
    if 0 in elements:
        raise ZeroInSet(f"multiplicative closure of {list(gens)} in {ring} contains 0")
    return MultSet(ring, gens, frozenset(elements))


@dataclass(frozen=True)
class Ideal:
    """The ideal ``dZ/nZ``; ``d`` is a divisor of ``n``."""

    ring: Ring
    d: int

    def __post_init__(self):
        if self.d < 1 or self.ring.n % self.d:
            raise ValueError(f"{self.d} does not divide {self.ring.n}")

    @property
    def order(self) -> int:
        return self.ring.n // self.d

    def __contains__(self, r: int) -> bool:
        return r % self.d == 0

    def __str__(self):
        return f"({self.d})"


def ideals(ring: Ring) -> list[Ideal]:
    return [Ideal(ring, d) for d in ring.divisors]


@dataclass(frozen=True)
class RingLocalization:
    source: Ring
    target: Ring
    inverted: MultSet

    def map(self, r: int) -> int:
        return r % self.target.n

    @property
    def idempotent(self) -> int:
        """The idempotent ``e`` of the source with ``eR`` identified with ``R_S``."""
        return _idempotent(self.source.n, self.target.n)


def _idempotent(n: int, m: int) -> int:
    # e == 1 mod m, e == 0 mod n/m (coprime by construction)
    rest = n // m
    if rest == 1:
        return 1 % n
    return rest * pow(rest, -1, m) % n if m > 1 else 0


@lru_cache(maxsize=None)
def localize_ring(ring: Ring, s: MultSet) -> RingLocalization:
    if s.ring != ring:
        raise ValueError("multiplicative set belongs to a different ring")
    m = ring.n
    t = s.product
    for p in ring.primes:
        if t % p == 0:
            while m % p == 0:
                m //= p
    # 0 not in S forces some prime of n to survive
    assert m >= 2, "localization collapsed although 0 is not in S"
    target = Ring(m)
    for x in s.elements:
        assert target.is_unit(x), f"{x} is not a unit mod {m}"
    return RingLocalization(ring, target, s)


def s_torsion(ring: Ring, s: MultSet) -> list[int]:
    return [r for r in range(ring.n) if any(x * r % ring.n == 0 for x in s.elements)]


def bounded_torsion_witness(ring: Ring, s: MultSet) -> int:
    """Smallest ``s0`` in ``s`` annihilating the whole S-torsion of the ring."""
    torsion = s_torsion(ring, s)
    for s0 in sorted(s.elements):
        if all(s0 * r % ring.n == 0 for r in torsion):
            return s0
    raise AssertionError("no bounded-torsion witness; impossible over a finite ring")


@dataclass(frozen=True)
class SNoetherianReport:
    ring: Ring
    mult_set: MultSet
    value: bool
    # one (ideal generator, s, subideal generators) per ideal
    witnesses: tuple[tuple[int, int, tuple[int, ...]], ...]

    def recheck(self) -> bool:
        n = self.ring.n
        for d, s0, sub in self.witnesses:
            if s0 not in self.mult_set:
                return False
            if any(g % d for g in sub):
                return False  # I' not inside I
            gsub = 0
            for g in sub:
                gsub = gcd(gsub, g)
            gsub = gcd(gsub, n)
            if (s0 * d) % gsub:
                return False  # s*I not inside I'
        return True


def is_s_noetherian(ring: Ring, s: MultSet) -> SNoetherianReport:
    """Every ideal of Z/n is principal, so ``s = 1`` and ``I' = I`` always work."""
    witnesses = tuple((I.d, 1, (I.d,)) for I in ideals(ring))
    report = SNoetherianReport(ring, s, True, witnesses)
    assert report.recheck()
    return report


def fraction_classes(n: int, s: MultSet, elements: list, add, scale, is_zero) -> tuple[dict, list]:
    """Brute-force ring/module of fractions.

    ``elements`` enumerates a finite module; ``scale(r, x)`` multiplies by a
    ring element and ``is_zero`` tests for zero. Pairs ``(x, u)`` and
    ``(y, v)`` are identified when ``t*(v*x - u*y) == 0`` for some ``t`` in S.
    Returns a map from each pair to its class index and a representative
    pair per class.
    """
    svals = sorted(s.elements)
    torsion = {z for z in elements if any(is_zero(scale(t, z)) for t in svals)}
    pairs = [(x, u) for x in elements for u in svals]

    def same(p, q):
        (x, u), (y, v) = p, q
        return add(scale(v, x), scale(n - u, y)) in torsion

    reps: list = []
    index: dict = {}
    for p in pairs:
        for k, q in enumerate(reps):
            if same(p, q):
                index[p] = k
                break
        else:
            index[p] = len(reps)
            reps.append(p)
    return index, reps


def ring_fraction_oracle(ring: Ring, s: MultSet) -> dict:
    """Brute-force R_S. Returns cardinality and the kernel of ``r -> r/1``."""
    n = ring.n
    index, reps = fraction_classes(
        n, s, list(range(n)),
        add=lambda x, y: (x + y) % n,
        scale=lambda r, x: r * x % n,
        is_zero=lambda x: x == 0,
    )
    zero = index[(0, 1)]
    kernel = [r for r in range(n) if index[(r, 1)] == zero]
    image = {index[(r, 1)] for r in range(n)}
    return {"size": len(reps), "kernel": kernel, "surjective": len(image) == len(reps)}
