from math import gcd

from hypothesis import strategies as st

from slab.harness import enumerate_modules
from slab.modules import ModuleHom
from slab.ring import Ring


@st.composite
def modules(draw, n=12, max_factors=3):
    return draw(st.sampled_from(enumerate_modules(Ring(n), max_factors).modules))


@st.composite
def homs(draw, n=12, max_factors=2):
    """A random well-defined hom between two modules of the family."""
    a = draw(modules(n, max_factors))
    b = draw(modules(n, max_factors))
    rows = [[(e // gcd(d, e)) * draw(st.integers(0, e)) for e in b.factors] for d in a.factors]
    return ModuleHom(a, b, tuple(map(tuple, rows)))
