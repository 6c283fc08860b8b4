"""Certified deciders for injectivity and flatness, classical and relative to S.

Every :class:`Verdict` carries a certificate that :func:`recheck` can verify
from scratch. Surjectivity of restriction maps is decided with linear
algebra on Hom-module presentations, never by listing homs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from . import modules as mod
from .modules import FpModule, ModuleHom
from .ring import Ideal, MultSet, Ring, ideals, localize_ring

ROUTES = ("s_baer", "colocalization", "ext_vanishing")


class RouteDisagreement(RuntimeError):
    """Two S-injectivity routes returned different answers; always a bug."""


@dataclass(frozen=True)
class Verdict:
    value: bool
    route: str
    certificate: dict = field(hash=False)

    def to_dict(self) -> dict:
        return {"value": self.value, "route": self.route, "certificate": self.certificate}


def ideal_module(I: Ideal) -> tuple[FpModule, ModuleHom]:
    """``I`` as a module with its inclusion into ``R``."""
    ring = I.ring
    src = mod.cyclic(ring, I.order)
    rr = mod.free(ring)
    return src, ModuleHom(src, rr, ((I.d,),) if src.rank else ())


def _restriction_report(incl: ModuleHom, e: FpModule) -> tuple[bool, Optional[ModuleHom], dict]:
    """Is ``Hom(B, e) -> Hom(A, e)`` onto, for ``incl : A -> B``?

    On failure also returns a hom ``A -> e`` with no extension, taken from the
    canonical generators of ``Hom(A, e)``.
    """
    restr = mod.hom_pre(incl, e)
    target = restr.target
    img = mod.image(restr)[0]
    info = {"hom_order": target.order, "image_order": img.order}
    if img.order == target.order:
        return True, None, info
    ha = mod.hom_module(incl.source, e)
    for y in target.generators():
        if mod.lift(restr, y) is None:
            return False, ha.decode(y), info
    raise AssertionError("image smaller than Hom but every generator lifts")


def _baer(ring_ideals, incl_for, e: FpModule, route: str) -> Verdict:
    checked = []
    for I in ring_ideals:
        incl = incl_for(I)
        ok, bad, info = _restriction_report(incl, e)
        if not ok:
            return Verdict(False, route, {
                "ideal": I.d,
                "source": list(incl.source.factors),
                "extension_target": list(incl.target.factors),
                "inclusion": [list(r) for r in incl.matrix],
                "module": list(e.factors),
                "hom": [list(r) for r in bad.matrix],
            })
        checked.append({"ideal": I.d, **info})
    return Verdict(True, route, {"module": list(e.factors), "ideals": checked})


def is_injective(e: FpModule) -> Verdict:
    """Baer's criterion: every hom ``I -> e`` extends to ``R``."""
    return _baer(ideals(e.ring), lambda I: ideal_module(I)[1], e, "classical_baer")


def localized_ideal_inclusion(I: Ideal, s: MultSet) -> ModuleHom:
    """``i_S : I_S -> R_S`` as a hom of R-modules."""
    return mod.localize_hom(ideal_module(I)[1], s)


def localized_ring_module(ring: Ring, s: MultSet) -> FpModule:
    """``R_S`` viewed as an R-module."""
    return mod.localize_module(mod.free(ring), s).module


def _route_s_baer(e: FpModule, s: MultSet) -> Verdict:
    return _baer(ideals(e.ring), lambda I: localized_ideal_inclusion(I, s), e, "s_baer")


def _route_colocalization(e: FpModule, s: MultSet) -> Verdict:
    loc = localize_ring(e.ring, s)
    rs = localized_ring_module(e.ring, s)
    h = mod.hom_module(rs, e).module
    # Hom_R(R_S, e) is killed by the modulus of R_S, so it is an R_S-module
    inner = is_injective(h.over(loc.target))
    return Verdict(inner.value, "colocalization", {
        "module": list(e.factors),
        "hom_module": list(h.factors),
        "over": loc.target.n,
        "inner": inner.to_dict(),
    })


def quotient_by_localized_ideal(I: Ideal, s: MultSet) -> tuple[FpModule, ModuleHom]:
    """``R_S / I_S`` with its projection from ``R_S``."""
    return mod.cokernel(localized_ideal_inclusion(I, s))


def _route_ext(e: FpModule, s: MultSet) -> Verdict:
    checked = []
    for I in ideals(e.ring):
        q = quotient_by_localized_ideal(I, s)[0]
        data = mod.ext1_data(q, e)
        if data.module.order != 1:
            cls = None
            for y in data.restriction.target.generators():
                if not data.module.is_zero(data.projection(y)):
                    cls = data.syzygy_homs.decode(y)
                    break
            return Verdict(False, "ext_vanishing", {
                "ideal": I.d,
                "quotient": list(q.factors),
                "module": list(e.factors),
                "ext": list(data.module.factors),
                "syzygy": list(data.resolution.syzygy.factors),
                "syzygy_inclusion": [list(r) for r in data.resolution.inclusion.matrix],
                "class": [list(r) for r in cls.matrix],
            })
        checked.append({"ideal": I.d, "quotient": list(q.factors)})
    return Verdict(True, "ext_vanishing", {"module": list(e.factors), "ideals": checked})


_ROUTE_FNS = {
    "s_baer": _route_s_baer,
    "colocalization": _route_colocalization,
    "ext_vanishing": _route_ext,
}


def is_s_injective(e: FpModule, s: MultSet, route: Optional[str] = None) -> Verdict:
    """Decide S-injectivity.

    With ``route=None`` all three routes run and must agree; the S-Baer
    verdict is returned with the others' values recorded.
    """
    if s.ring != e.ring:
        raise mod.RingMismatch("multiplicative set belongs to a different ring")
    if route is not None:
        if route not in _ROUTE_FNS:
            raise ValueError(f"unknown route {route!r}; choose from {', '.join(ROUTES)}")
        return _ROUTE_FNS[route](e, s)
    verdicts = {name: fn(e, s) for name, fn in _ROUTE_FNS.items()}
    values = {name: v.value for name, v in verdicts.items()}
    if len(set(values.values())) != 1:
        raise RouteDisagreement(f"S-injectivity routes disagree on {e} over {e.ring} with S={s}: {values}")
    main = verdicts["s_baer"]
    cert = dict(main.certificate)
    cert["routes"] = values
    return Verdict(main.value, main.route, cert)


def is_flat(m: FpModule) -> Verdict:
    """Flat iff ``Tor_1(R/I, m) = 0`` for every ideal ``I``."""
    ring = m.ring
    checked = []
    for I in ideals(ring):
        q = mod.cyclic(ring, I.d)
        data = mod.tor1_data(q, m)
        if data.module.order != 1:
            witness = data.inclusion(data.module.gen(0))
            return Verdict(False, "tor_vanishing", {
                "ideal": I.d,
                "module": list(m.factors),
                "tor": list(data.module.factors),
                "syzygy": list(data.resolution.syzygy.factors),
                "syzygy_inclusion": [list(r) for r in data.resolution.inclusion.matrix],
                "element": list(witness),
            })
        checked.append({"ideal": I.d, "tor": []})
    return Verdict(True, "tor_vanishing", {"module": list(m.factors), "ideals": checked})


def is_s_flat(m: FpModule, s: MultSet) -> Verdict:
    loc = mod.localize_module(m, s)
    inner = is_flat(loc.target)
    cert = dict(inner.certificate)
    cert["localized"] = list(loc.target.factors)
    cert["over"] = loc.target.n
    return Verdict(inner.value, "tor_vanishing", cert)


def is_sigma_s_injective_finite(e: FpModule, s: MultSet, k: int, route: Optional[str] = None) -> Verdict:
    if k < 1:
        raise ValueError("k must be >= 1")
    v = is_s_injective(mod.power(e, k), s, route)
    cert = dict(v.certificate)
    cert["copies"] = k
    return Verdict(v.value, v.route, cert)


# ---------------------------------------------------------------------------
# certificate checking


def _hom(source, target, matrix, ring) -> ModuleHom:
    return ModuleHom(mod.FpModule(ring, tuple(source)), mod.FpModule(ring, tuple(target)),
                     tuple(tuple(r) for r in matrix))


def _extends(incl: ModuleHom, f: ModuleHom) -> bool:
    """Is there ``g`` with ``g o incl == f``? Answered by solving for ``g``'s matrix."""
    return mod.lift(mod.hom_pre(incl, f.target), mod.hom_module(incl.source, f.target).encode(f)) is not None


def recheck(verdict: Verdict, ring: Ring, s: Optional[MultSet] = None) -> bool:
    """Re-validate a verdict's certificate by direct computation."""
    c = verdict.certificate
    route = verdict.route
    if route == "colocalization":
        inner = c["inner"]
        v = Verdict(inner["value"], inner["route"], inner["certificate"])
        return v.value == verdict.value and recheck(v, Ring(c["over"]))
    if route in ("classical_baer", "s_baer"):
        e = mod.FpModule(ring, tuple(c["module"]))
        if verdict.value:
            want = [I.d for I in ideals(ring)]
            if [x["ideal"] for x in c["ideals"]] != want:
                return False
            for item in c["ideals"]:
                I = Ideal(ring, item["ideal"])
                incl = ideal_module(I)[1] if route == "classical_baer" else localized_ideal_inclusion(I, s)
                if not _restriction_report(incl, e)[0]:
                    return False
            return True
        incl = _hom(c["source"], c["extension_target"], c["inclusion"], ring)
        f = _hom(c["source"], c["module"], c["hom"], ring)
        if route == "classical_baer":
            expect = ideal_module(Ideal(ring, c["ideal"]))[1]
        else:
            expect = localized_ideal_inclusion(Ideal(ring, c["ideal"]), s)
        if expect != incl:
            return False
        return not _extends(incl, f)
    if route == "ext_vanishing":
        e = mod.FpModule(ring, tuple(c["module"]))
        if verdict.value:
            return all(mod.ext1(quotient_by_localized_ideal(Ideal(ring, x["ideal"]), s)[0], e).order == 1
                       for x in c["ideals"])
        # a hom K -> e that does not extend over F is a nonzero Ext class
        syz = mod.FpModule(ring, tuple(c["syzygy"]))
        q = mod.FpModule(ring, tuple(c["quotient"]))
        if quotient_by_localized_ideal(Ideal(ring, c["ideal"]), s)[0] != q:
            return False
        res = mod.resolution(q)
        incl = ModuleHom(syz, res.free, tuple(tuple(r) for r in c["syzygy_inclusion"]))
        if incl != res.inclusion:
            return False
        cls = ModuleHom(syz, e, tuple(tuple(r) for r in c["class"]))
        return not _extends(incl, cls)
    if route == "tor_vanishing":
        over = Ring(c.get("over", ring.n))
        m = mod.FpModule(over, tuple(c.get("localized", c["module"])))
        if verdict.value:
            return all(mod.tor1(mod.cyclic(over, x["ideal"]), m).order == 1 for x in c["ideals"])
        q = mod.cyclic(over, c["ideal"])
        data = mod.tor1_data(q, m)
        if list(data.resolution.syzygy.factors) != c["syzygy"]:
            return False
        x = data.tensor.module.reduce(c["element"])
        # nonzero in K (x) m, zero in F (x) m
        return (not data.tensor.module.is_zero(x)) and data.map.target.is_zero(data.map(x))
    raise ValueError(f"unknown route {route!r}")
