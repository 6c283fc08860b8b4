"""Brute-force oracles that share no code path with the deciders."""

from itertools import product
from math import gcd


def _elements(n, factors):
    return list(product(*(range(d) for d in factors)))


def _scale(r, x, factors):
    return tuple(r * a % d for a, d in zip(x, factors))


def _extends_cyclic(n, factors, sub_gen, big_gen):
    """Inside R = Z/n take the cyclic submodules (sub_gen) <= (big_gen) with
    sub_gen = c * big_gen. Does every hom (sub_gen) -> E extend to (big_gen)?

    Homs out of a cyclic module (a) are the images x of a with ord(a) x = 0.
    """
    ord_big = n // gcd(big_gen, n)
    ord_sub = n // gcd(sub_gen, n)
    c = next(c for c in range(n) if c * big_gen % n == sub_gen % n)
    elems = _elements(n, factors)
    zero = tuple(0 for _ in factors)
    reachable = {_scale(c, y, factors) for y in elems if _scale(ord_big, y, factors) == zero}
    return all(x in reachable for x in elems if _scale(ord_sub, x, factors) == zero)


def injective_oracle(n, factors):
    """Baer by enumeration: every f: (d) -> E is g restricted for some g: R -> E."""
    return all(_extends_cyclic(n, factors, d, 1) for d in range(1, n + 1) if n % d == 0)


def s_injective_oracle(n, factors, s_elements, m):
    """Extension along I_S -> R_S, both realised inside R as multiples of the idempotent."""
    rest = n // m
    e = next(x for x in range(n) if x % m == 1 % m and x % rest == 0)
    return all(_extends_cyclic(n, factors, e * d % n, e) for d in range(1, n + 1) if n % d == 0)
