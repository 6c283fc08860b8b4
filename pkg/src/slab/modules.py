"""Finitely presented modules over Z/n.

Every module is kept in canonical form ``Z/d_1 + ... + Z/d_r`` with
``d_1 | d_2 | ... | d_r | n`` and ``d_i >= 2``. Elements are tuples of
canonical coordinates, ``x[i]`` reduced mod ``d_i``. Homomorphisms act on
row vectors: ``f(x) = x @ matrix``, row ``i`` being the image of the
``i``-th canonical generator.

A module built from a presentation also remembers how its presentation
generators relate to the canonical ones (``to_canonical`` and
``from_canonical``); that is the bookkeeping every derived construction
(kernels, Hom, tensor, Ext, Tor) goes through.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from math import gcd, prod
from typing import Iterator, Optional, Sequence

from . import linalg
from .ring import MultSet, Ring, localize_ring

Element = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]


class RingMismatch(ValueError):
    pass


class NotWellDefined(ValueError):
    pass


def _frozen(a) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in a)


def _identity(k: int) -> Matrix:
    return _frozen(linalg.identity(k))


@dataclass(frozen=True)
class FpModule:
    ring: Ring
    factors: tuple[int, ...]
    gens: int = field(default=-1, compare=False)
    relations: Matrix = field(default=(), compare=False, repr=False)
    to_canonical: Matrix = field(default=None, compare=False, repr=False)
    from_canonical: Matrix = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        n = self.ring.n
        prev = 1
        for d in self.factors:
            if d < 2 or n % d or d % prev:
                raise ValueError(f"invalid invariant factors {self.factors} over {self.ring}")
            prev = d
        if self.gens < 0:
            r = len(self.factors)
            object.__setattr__(self, "gens", r)
            object.__setattr__(self, "to_canonical", _identity(r))
            object.__setattr__(self, "from_canonical", _identity(r))

    @property
    def n(self) -> int:
        return self.ring.n

    @property
    def rank(self) -> int:
        return len(self.factors)

    @property
    def order(self) -> int:
        return prod(self.factors)

    @property
    def exponent(self) -> int:
        return self.factors[-1] if self.factors else 1

    def is_zero_module(self) -> bool:
        return not self.factors

    def __str__(self):
        if not self.factors:
            return "0"
        return " + ".join(f"Z/{d}" for d in self.factors)

    # element arithmetic
    def reduce(self, x: Sequence[int]) -> Element:
        return tuple(int(v) % d for v, d in zip(x, self.factors))

    def zero(self) -> Element:
        return (0,) * self.rank

    def gen(self, i: int) -> Element:
        return tuple(int(j == i) % d for j, d in enumerate(self.factors))

    def generators(self) -> list[Element]:
        return [self.gen(i) for i in range(self.rank)]

    def add(self, x: Element, y: Element) -> Element:
        return tuple((a + b) % d for a, b, d in zip(x, y, self.factors))

    def scale(self, r: int, x: Element) -> Element:
        return tuple(r * a % d for a, d in zip(x, self.factors))

    def neg(self, x: Element) -> Element:
        return tuple(-a % d for a, d in zip(x, self.factors))

    def is_zero(self, x: Element) -> bool:
        return not any(x)

    def elements(self) -> Iterator[Element]:
        return product(*(range(d) for d in self.factors))

    def order_of(self, x: Element) -> int:
        o = 1
        for a, d in zip(x, self.factors):
            o = o * (d // gcd(a, d)) // gcd(o, d // gcd(a, d))
        return o

    # presentation coordinates
    def canon(self, v: Sequence[int]) -> Element:
        """Presentation coordinates -> canonical element."""
        return self.reduce(linalg.vecmat(v, self.to_canonical, self.rank))

    def present(self, x: Element) -> list[int]:
        """Canonical element -> one preimage in presentation coordinates."""
        return linalg.vecmat(x, self.from_canonical, self.gens)

    def canonical(self) -> "FpModule":
        """The same module stripped of presentation bookkeeping."""
        return FpModule(self.ring, self.factors)

    def over(self, ring: Ring) -> "FpModule":
        """Reinterpret along restriction/corestriction of scalars between Z/n and Z/m.

        Only valid when every factor divides the new modulus.
        """
        return FpModule(ring, self.factors)

    def to_dict(self) -> dict:
        rels = [list(r) for r in self.relations] if self.gens != self.rank or self.relations else [
            [d if i == j else 0 for j in range(self.rank)] for i, d in enumerate(self.factors)]
        return {"n": self.n, "factors": list(self.factors), "generators": self.gens,
                "relations": rels}


def _check_same_ring(*mods):
    rings = {m.ring for m in mods}
    if len(rings) > 1:
        raise RingMismatch("modules live over different rings: " + ", ".join(map(str, rings)))


def from_presentation(ring: Ring, relations: Sequence[Sequence[int]], k: Optional[int] = None) -> FpModule:
    """Module on ``k`` generators modulo the row span of ``relations`` (plus ``n*e_i``)."""
    if k is None:
        if not relations:
            raise ValueError("generator count required for an empty relation matrix")
        k = len(relations[0])
    n = ring.n
    rows = [list(r) for r in relations]
    for r in rows:
        if len(r) != k:
            raise linalg.DimensionError(f"relation row {r} does not have {k} entries")
    rows += [[n if i == j else 0 for j in range(k)] for i in range(k)]
    res = linalg.snf(rows, k)
    keep = [i for i in range(k) if res.d[i] != 1]
    factors = tuple(res.d[i] for i in keep)
    to_can = tuple(tuple(res.v[g][i] % res.d[i] for i in keep) for g in range(k))
    from_can = tuple(tuple(res.v_inv[i]) for i in keep)
    return FpModule(ring, factors, k, _frozen(relations), to_can, from_can)


def from_invariants(ring: Ring, factors: Sequence[int]) -> FpModule:
    return FpModule(ring, tuple(int(d) for d in factors))


def from_orders(ring: Ring, orders: Sequence[int]) -> FpModule:
    """``Z/o_1 + ... + Z/o_k`` for arbitrary divisors ``o_i`` of ``n``, renormalised."""
    k = len(orders)
    return from_presentation(ring, [[o if i == j else 0 for j in range(k)] for i, o in enumerate(orders)], k)


def free(ring: Ring, k: int = 1) -> FpModule:
    return FpModule(ring, (ring.n,) * k)


def cyclic(ring: Ring, d: int) -> FpModule:
    return FpModule(ring, (d,) if d > 1 else ())


def zero_module(ring: Ring) -> FpModule:
    return FpModule(ring, ())


def is_isomorphic(a: FpModule, b: FpModule) -> bool:
    _check_same_ring(a, b)
    return a.factors == b.factors


# ---------------------------------------------------------------------------
# homomorphisms


@dataclass(frozen=True)
class ModuleHom:
    source: FpModule
    target: FpModule
    matrix: Matrix

    def __post_init__(self):
        _check_same_ring(self.source, self.target)
        r, s = self.source.rank, self.target.rank
        if len(self.matrix) != r or any(len(row) != s for row in self.matrix):
            raise linalg.DimensionError(f"hom matrix must be {r}x{s}")
        e = self.target.factors
        mat = tuple(tuple(x % e[j] for j, x in enumerate(row)) for row in self.matrix)
        object.__setattr__(self, "matrix", mat)
        for i, d in enumerate(self.source.factors):
            for j, ej in enumerate(e):
                if d * mat[i][j] % ej:
                    raise NotWellDefined(
                        f"generator {i} of order {d} cannot map to {mat[i][j]} in Z/{ej}")

    def __call__(self, x: Element) -> Element:
        return self.target.reduce(linalg.vecmat(x, self.matrix, self.target.rank))

    def __matmul__(self, other: "ModuleHom") -> "ModuleHom":
        """``self @ other`` is the composite ``self o other``."""
        if other.target != self.source:
            raise linalg.DimensionError("composing non-composable homs")
        rows = linalg.matmul(other.matrix, self.matrix, self.source.rank, self.target.rank)
        return ModuleHom(other.source, self.target, _frozen(rows))

    def __add__(self, other: "ModuleHom") -> "ModuleHom":
        rows = [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.matrix, other.matrix)]
        return ModuleHom(self.source, self.target, _frozen(rows))

    def scaled(self, r: int) -> "ModuleHom":
        return ModuleHom(self.source, self.target, _frozen([[r * a for a in row] for row in self.matrix]))

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.matrix)

    def to_dict(self) -> dict:
        return {"source": list(self.source.factors), "target": list(self.target.factors),
                "matrix": [list(r) for r in self.matrix]}


def hom_from_images(source: FpModule, target: FpModule, images: Sequence[Sequence[int]]) -> ModuleHom:
    return ModuleHom(source, target, _frozen(images))


def identity_hom(m: FpModule) -> ModuleHom:
    return ModuleHom(m, m, _identity(m.rank))


def zero_hom(a: FpModule, b: FpModule) -> ModuleHom:
    return ModuleHom(a, b, _frozen(linalg.zeros(a.rank, b.rank)))


def multiplication(m: FpModule, r: int) -> ModuleHom:
    return identity_hom(m).scaled(r)


def _scaled_columns(matrix: Sequence[Sequence[int]], target: FpModule) -> list[list[int]]:
    # x.A == y (mod e_j) per column  <=>  x.A' == y' (mod n) with column j scaled by n/e_j
    n = target.n
    return [[a * (n // e) for a, e in zip(row, target.factors)] for row in matrix]


def lift(f: ModuleHom, y: Element) -> Optional[Element]:
    """Some ``x`` with ``f(x) == y``, or ``None`` when ``y`` is not in the image."""
    src, tgt = f.source, f.target
    if tgt.rank == 0:
        return src.zero()
    if src.rank == 0:
        return () if tgt.is_zero(y) else None
    n = src.n
    a = linalg.transpose(_scaled_columns(f.matrix, tgt), tgt.rank)
    b = [[yj * (n // e)] for yj, e in zip(y, tgt.factors)]
    sol = linalg.solve_mod(a, b, n, src.rank)
    if sol is None:
        return None
    x = src.reduce([row[0] for row in sol])
    assert f(x) == tgt.reduce(y)
    return x


@lru_cache(maxsize=None)
def _submodule(m: FpModule, rows: Matrix) -> tuple[FpModule, ModuleHom]:
    k = len(rows)
    rels = linalg.left_kernel_mod(_scaled_columns(rows, m), m.n, m.rank) if k else []
    sub = from_presentation(m.ring, rels, k)
    images = [m.reduce(linalg.vecmat(sub.from_canonical[t], rows, m.rank)) for t in range(sub.rank)]
    return sub, ModuleHom(sub, m, _frozen(images))


def submodule(m: FpModule, elements: Sequence[Sequence[int]]) -> tuple[FpModule, ModuleHom]:
    """Submodule generated by ``elements``, with its inclusion into ``m``."""
    return _submodule(m, _frozen(m.reduce(x) for x in elements))


@lru_cache(maxsize=None)
def kernel(f: ModuleHom) -> tuple[FpModule, ModuleHom]:
    src = f.source
    if src.rank == 0:
        return submodule(src, [])
    gens = linalg.left_kernel_mod(_scaled_columns(f.matrix, f.target), src.n, f.target.rank)
    return submodule(src, gens)


@lru_cache(maxsize=None)
def image(f: ModuleHom) -> tuple[FpModule, ModuleHom]:
    return submodule(f.target, f.matrix)


@lru_cache(maxsize=None)
def cokernel(f: ModuleHom) -> tuple[FpModule, ModuleHom]:
    tgt = f.target
    s = tgt.rank
    rels = [list(r) for r in f.matrix] + [[d if i == j else 0 for j in range(s)] for i, d in enumerate(tgt.factors)]
    q = from_presentation(tgt.ring, rels, s)
    return q, ModuleHom(tgt, q, q.to_canonical)


def is_injective_hom(f: ModuleHom) -> bool:
    return kernel(f)[0].order == 1


def is_surjective_hom(f: ModuleHom) -> bool:
    return image(f)[0].order == f.target.order


def is_iso(f: ModuleHom) -> bool:
    return f.source.order == f.target.order and is_injective_hom(f)


def quotient(m: FpModule, elements: Sequence[Sequence[int]]) -> tuple[FpModule, ModuleHom]:
    """``m`` modulo the submodule generated by ``elements``."""
    return cokernel(submodule(m, elements)[1])


# ---------------------------------------------------------------------------
# direct sums


@dataclass(frozen=True)
class DirectSum:
    module: FpModule
    parts: tuple[FpModule, ...]
    injections: tuple[ModuleHom, ...]
    projections: tuple[ModuleHom, ...]


def direct_sum(parts: Sequence[FpModule]) -> DirectSum:
    parts = tuple(parts)
    if not parts:
        raise ValueError("direct sum of no modules needs a ring; use zero_module")
    _check_same_ring(*parts)
    ring = parts[0].ring
    orders = [d for p in parts for d in p.factors]
    total = from_orders(ring, orders)
    injections, projections = [], []
    offset = 0
    for p in parts:
        block = range(offset, offset + p.rank)
        injections.append(ModuleHom(p, total, _frozen(total.to_canonical[g] for g in block)))
        projections.append(ModuleHom(total, p, _frozen(
            [total.from_canonical[t][g] for g in block] for t in range(total.rank))))
        offset += p.rank
    return DirectSum(total, parts, tuple(injections), tuple(projections))


def power(m: FpModule, k: int) -> FpModule:
    return direct_sum([m] * k).module if k else zero_module(m.ring)


# ---------------------------------------------------------------------------
# Hom and tensor


@dataclass(frozen=True)
class HomSpace:
    """``Hom(source, target)`` as a module, with element <-> hom translation.

    Presentation generators are the grid ``(i, j)``: the hom sending the
    ``i``-th source generator to ``e_j / gcd(d_i, e_j)`` times the ``j``-th
    target generator.
    """

    module: FpModule
    source: FpModule
    target: FpModule

    def _grid(self) -> list[tuple[int, int, int]]:
        return [(i, j, gcd(d, e)) for i, d in enumerate(self.source.factors)
                for j, e in enumerate(self.target.factors)]

    def decode(self, y: Element) -> ModuleHom:
        x = self.module.present(y)
        mat = linalg.zeros(self.source.rank, self.target.rank)
        for (i, j, g), c in zip(self._grid(), x):
            mat[i][j] = c * (self.target.factors[j] // g)
        return ModuleHom(self.source, self.target, _frozen(mat))

    def encode(self, f: ModuleHom) -> Element:
        if f.source != self.source or f.target != self.target:
            raise linalg.DimensionError("hom does not belong to this Hom-space")
        coords = []
        for i, j, g in self._grid():
            step = self.target.factors[j] // g
            a = f.matrix[i][j]
            assert a % step == 0
            coords.append(a // step)
        return self.module.canon(coords)

    def homs(self) -> Iterator[ModuleHom]:
        for y in self.module.elements():
            yield self.decode(y)


@lru_cache(maxsize=None)
def hom_module(a: FpModule, b: FpModule) -> HomSpace:
    _check_same_ring(a, b)
    orders = [gcd(d, e) for d in a.factors for e in b.factors]
    return HomSpace(from_orders(a.ring, orders), a.canonical(), b.canonical())


@lru_cache(maxsize=None)
def hom_pre(f: ModuleHom, c: FpModule) -> ModuleHom:
    """``Hom(f, c) : Hom(B, c) -> Hom(A, c)``, ``phi -> phi o f`` for ``f : A -> B``."""
    hb, ha = hom_module(f.target, c), hom_module(f.source, c)
    images = [ha.encode(hb.decode(y) @ f) for y in hb.module.generators()]
    return ModuleHom(hb.module, ha.module, _frozen(images))


@lru_cache(maxsize=None)
def hom_post(c: FpModule, g: ModuleHom) -> ModuleHom:
    """``Hom(c, g) : Hom(c, A) -> Hom(c, B)``, ``phi -> g o phi`` for ``g : A -> B``."""
    ha, hb = hom_module(c, g.source), hom_module(c, g.target)
    images = [hb.encode(g @ ha.decode(y)) for y in ha.module.generators()]
    return ModuleHom(ha.module, hb.module, _frozen(images))


@dataclass(frozen=True)
class TensorProduct:
    module: FpModule
    left: FpModule
    right: FpModule

    def pure(self, i: int, j: int) -> Element:
        """Canonical coordinates of ``a_i (x) b_j``."""
        return self.module.canon([int(k == i * self.right.rank + j) for k in range(self.module.gens)])

    def tensor_elements(self, x: Element, y: Element) -> Element:
        coords = [a * b for a in x for b in y]
        return self.module.canon(coords)


@lru_cache(maxsize=None)
def tensor(a: FpModule, b: FpModule) -> TensorProduct:
    _check_same_ring(a, b)
    orders = [gcd(d, e) for d in a.factors for e in b.factors]
    return TensorProduct(from_orders(a.ring, orders), a.canonical(), b.canonical())


@lru_cache(maxsize=None)
def tensor_map(f: ModuleHom, c: FpModule) -> ModuleHom:
    """``f (x) 1_c : A (x) c -> B (x) c``."""
    ta, tb = tensor(f.source, c), tensor(f.target, c)
    rc = c.rank
    images = []
    for t in range(ta.module.rank):
        x = ta.module.present(ta.module.gen(t))
        coords = [0] * tb.module.gens
        for i in range(f.source.rank):
            for j in range(rc):
                xij = x[i * rc + j]
                if xij:
                    for k in range(f.target.rank):
                        coords[k * rc + j] += xij * f.matrix[i][k]
        images.append(tb.module.canon(coords))
    return ModuleHom(ta.module, tb.module, _frozen(images))


# ---------------------------------------------------------------------------
# localization


@dataclass(frozen=True)
class ModuleLocalization:
    """``M_S`` realised as the stable image ``t^N M`` inside ``M``.

    ``target`` is the localization as a module over ``R_S``; ``module`` is
    the same thing seen over ``R``. ``map`` is ``x -> x/1`` and
    ``inclusion`` embeds ``module`` back into ``source`` (``M_S`` is a
    direct summand of ``M`` over a finite ring).
    """

    source: FpModule
    target: FpModule
    module: FpModule
    map: ModuleHom
    inclusion: ModuleHom
    mult_set: MultSet


@lru_cache(maxsize=None)
def localize_module(m: FpModule, s: MultSet) -> ModuleLocalization:
    ring = m.ring
    if s.ring != ring:
        raise RingMismatch("multiplicative set belongs to a different ring")
    loc = localize_ring(ring, s)
    n = ring.n
    t = s.product
    big = pow(t, ring.exponent, n)
    gens = [m.scale(big, g) for g in m.generators()]
    sub, incl = submodule(m, gens)
    nxt, _ = submodule(m, [m.scale(t, x) for x in gens])
    assert nxt.order == sub.order, "t^N M did not stabilise"
    e = loc.idempotent
    images = []
    for g in m.generators():
        x = lift(incl, m.scale(e, g))
        assert x is not None
        images.append(x)
    lmap = ModuleHom(m, sub, _frozen(images))
    target = sub.canonical().over(loc.target)
    for u in s.elements:
        assert all(gcd(u, d) == 1 for d in target.factors), f"{u} does not act bijectively"
    return ModuleLocalization(m, target, sub, lmap, incl, s)


@lru_cache(maxsize=None)
def localize_hom(f: ModuleHom, s: MultSet) -> ModuleHom:
    """``f_S : M_S -> N_S`` as a hom of R-modules."""
    ls, lt = localize_module(f.source, s), localize_module(f.target, s)
    return lt.map @ f @ ls.inclusion


def fraction_oracle(m: FpModule, s: MultSet) -> dict:
    """Brute-force ``M_S`` from pairs ``(x, u)``; independent of :func:`localize_module`.

    Returns the class map, the number of classes, the kernel of ``x -> x/1``
    and the counts ``#{z : k z = 0}`` for each divisor ``k`` of ``n``.
    """
    from .ring import fraction_classes

    elems = list(m.elements())
    index, reps = fraction_classes(m.n, s, elems, m.add, lambda r, x: m.scale(r, x), m.is_zero)
    one_index = {x: index[(x, 1)] for x in elems}
    zero = one_index[m.zero()]
    kernel_set = {x for x in elems if one_index[x] == zero}
    hit = set(one_index.values())
    # k-torsion counts of the fraction group, computed on representatives
    counts = {}
    for k in m.ring.divisors:
        c = 0
        for x, u in reps:
            if index[(m.scale(k, x), u)] == zero:
                c += 1
        counts[k] = c
    return {"size": len(reps), "kernel": kernel_set, "surjective": len(hit) == len(reps),
            "torsion_counts": counts}


def torsion_counts(m: FpModule) -> dict[int, int]:
    """``#{x : k x = 0}`` for every divisor ``k`` of ``n``; a complete isomorphism invariant."""
    return {k: prod(gcd(k, d) for d in m.factors) for k in m.ring.divisors}


# ---------------------------------------------------------------------------
# character duality


def character(m: FpModule) -> FpModule:
    """``M^+ = Hom_Z(M, Q/Z)``, computed as ``Hom_Z(M, (1/n)Z/Z)``.

    A functional with coordinates ``a`` pairs with ``x`` via
    :func:`pairing`; the R-action ``(r.f)(x) = f(r x)`` becomes ``r.a``.
    """
    return FpModule(m.ring, m.factors)


def pairing(m: FpModule, a: Element, x: Element) -> int:
    """``<a, x>`` in Z/n, where Q/Z's n-torsion is identified with Z/n."""
    n = m.n
    return sum(ai * xi * (n // d) for ai, xi, d in zip(a, x, m.factors)) % n


def dual_hom(f: ModuleHom) -> ModuleHom:
    """``f^+ : N^+ -> M^+``, ``phi -> phi o f``."""
    src, tgt = f.source, f.target
    rows = [[f.matrix[i][j] * src.factors[i] // tgt.factors[j] for i in range(src.rank)]
            for j in range(tgt.rank)]
    return ModuleHom(character(tgt), character(src), _frozen(rows))


def evaluation(m: FpModule) -> ModuleHom:
    """Canonical ``M -> M^{++}``, ``x -> (f -> f(x))``."""
    return ModuleHom(m, character(character(m)), _identity(m.rank))


# ---------------------------------------------------------------------------
# Ext^1 and Tor_1 from one resolution step


@dataclass(frozen=True)
class Resolution:
    """``0 -> K -> F -> M -> 0`` with ``F`` free on the chosen generators."""

    module: FpModule
    free: FpModule
    cover: ModuleHom
    syzygy: FpModule
    inclusion: ModuleHom


@lru_cache(maxsize=None)
def _resolution(m: FpModule, gens: Matrix) -> Resolution:
    f = free(m.ring, len(gens))
    cover = ModuleHom(f, m, gens)
    assert is_surjective_hom(cover), "chosen elements do not generate the module"
    k, incl = kernel(cover)
    return Resolution(m, f, cover, k, incl)


def resolution(m: FpModule, generators: Optional[Sequence[Element]] = None) -> Resolution:
    gens = m.generators() if generators is None else [m.reduce(g) for g in generators]
    return _resolution(m, _frozen(gens))


@dataclass(frozen=True)
class ExtData:
    """Pieces of ``Ext^1(a, b) = coker(Hom(F, b) -> Hom(K, b))``."""

    module: FpModule
    resolution: Resolution
    restriction: ModuleHom
    projection: ModuleHom
    syzygy_homs: HomSpace


def ext1_data(a: FpModule, b: FpModule, generators=None) -> ExtData:
    _check_same_ring(a, b)
    res = resolution(a, generators)
    restr = hom_pre(res.inclusion, b)
    q, proj = cokernel(restr)
    return ExtData(q, res, restr, proj, hom_module(res.syzygy, b))


def ext1(a: FpModule, b: FpModule, generators=None) -> FpModule:
    return ext1_data(a, b, generators).module


@dataclass(frozen=True)
class TorData:
    module: FpModule
    resolution: Resolution
    map: ModuleHom
    inclusion: ModuleHom
    tensor: TensorProduct


def tor1_data(a: FpModule, b: FpModule, generators=None) -> TorData:
    _check_same_ring(a, b)
    res = resolution(a, generators)
    tmap = tensor_map(res.inclusion, b)
    k, incl = kernel(tmap)
    return TorData(k, res, tmap, incl, tensor(res.syzygy, b))


def tor1(a: FpModule, b: FpModule, generators=None) -> FpModule:
    return tor1_data(a, b, generators).module


# ---------------------------------------------------------------------------
# sequences


@dataclass(frozen=True)
class ShortSeq:
    """``A --f--> B --g--> C`` with ``g o f == 0``."""

    f: ModuleHom
    g: ModuleHom

    def __post_init__(self):
        if self.f.target != self.g.source:
            raise linalg.DimensionError("maps are not composable")
        if not (self.g @ self.f).is_zero():
            raise ValueError("composite of a ShortSeq must be zero")

    def to_dict(self) -> dict:
        return {"a": self.f.source.to_dict(), "b": self.f.target.to_dict(), "c": self.g.target.to_dict(),
                "f": [list(r) for r in self.f.matrix], "g": [list(r) for r in self.g.matrix]}


def is_exact(seq: ShortSeq) -> bool:
    """Exactness of ``0 -> A -> B -> C -> 0``."""
    f, g = seq.f, seq.g
    return (is_injective_hom(f)
            and image(f)[0].order == kernel(g)[0].order
            and is_surjective_hom(g))


def localize_seq(seq: ShortSeq, s: MultSet) -> ShortSeq:
    return ShortSeq(localize_hom(seq.f, s), localize_hom(seq.g, s))


def is_s_exact(seq: ShortSeq, s: MultSet) -> bool:
    return is_exact(localize_seq(seq, s))


def dual_seq(seq: ShortSeq) -> ShortSeq:
    """``C^+ --g^+--> B^+ --f^+--> A^+``."""
    return ShortSeq(dual_hom(seq.g), dual_hom(seq.f))


def is_s_finite(m: FpModule, inclusion: ModuleHom, s: MultSet) -> tuple[bool, Optional[int]]:
    """Least ``u`` in S with ``u*m`` inside the image of ``inclusion``."""
    if inclusion.target != m:
        raise ValueError("inclusion must land in m")
    for u in sorted(s.elements):
        if all(lift(inclusion, m.scale(u, g)) is not None for g in m.generators()):
            return True, u
    return False, None
