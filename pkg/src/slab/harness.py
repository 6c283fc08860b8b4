"""Exhaustive verification of the S-injectivity results on small rings.

Each proposition id maps to a :class:`Check`: an instance generator
producing JSON-serialisable payloads, and a pure ``check`` that decides one
payload. :func:`verify` runs them in order and stops at the first failure,
so a counterexample re-checks from its payload alone (:func:`recheck_report`).
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Callable, Iterator, Optional

from sympy import factorint

from . import deciders as dec
from . import modules as mod
from .modules import FpModule, ModuleHom, ShortSeq
from .ring import (Ideal, MultSet, Ring, bounded_torsion_witness, ideals, is_s_noetherian,
                   localize_ring, mult_set, s_torsion)

PASS = "pass"
COUNTEREXAMPLE = "counterexample"
EXHAUSTED = "budget_exhausted"


class UnknownProposition(KeyError):
    pass


# ---------------------------------------------------------------------------
# families


@dataclass(frozen=True)
class Family:
    ring: Ring
    max_factors: int
    modules: tuple[FpModule, ...]

    def __iter__(self):
        return iter(self.modules)

    def __len__(self):
        return len(self.modules)


def invariant_chains(n: int, max_factors: int) -> list[tuple[int, ...]]:
    divs = [d for d in Ring(n).divisors if d >= 2]
    out = [()]

    def extend(prefix):
        if len(prefix) == max_factors:
            return
        for d in divs:
            if not prefix or d % prefix[-1] == 0:
                out.append(prefix + (d,))
                extend(prefix + (d,))

    extend(())
    return sorted(out, key=lambda c: (len(c), c))


def enumerate_modules(ring: Ring, max_factors: int) -> Family:
    if max_factors < 0:
        raise ValueError("max_factors must be >= 0")
    return Family(ring, max_factors, tuple(FpModule(ring, c) for c in invariant_chains(ring.n, max_factors)))


def elementary_divisors(m: FpModule) -> list[int]:
    out = []
    for d in m.factors:
        out += [p**k for p, k in factorint(d).items()]
    return sorted(out)


def direct_summands(m: FpModule) -> list[FpModule]:
    """Every direct summand up to isomorphism (sub-multisets of elementary divisors)."""
    elems = elementary_divisors(m)
    seen = set()
    out = []
    for mask in range(1 << len(elems)):
        chosen = tuple(sorted(q for i, q in enumerate(elems) if mask >> i & 1))
        if chosen in seen:
            continue
        seen.add(chosen)
        out.append(mod.from_orders(m.ring, chosen).canonical() if chosen else mod.zero_module(m.ring))
    return out


# ---------------------------------------------------------------------------
# (de)serialisation of instances


def module_payload(m: FpModule) -> dict:
    return m.to_dict()


def module_from_payload(p: dict, ring: Optional[Ring] = None) -> FpModule:
    ring = ring or Ring(p["n"])
    if p.get("relations") is not None and p.get("generators") is not None:
        m = mod.from_presentation(ring, p["relations"], p["generators"])
        if "factors" in p and list(m.factors) != list(p["factors"]):
            raise ValueError("presentation does not match the recorded invariant factors")
        return m.canonical()
    return FpModule(ring, tuple(p["factors"]))


def hom_payload(f: ModuleHom) -> dict:
    return {"source": list(f.source.factors), "target": list(f.target.factors),
            "matrix": [list(r) for r in f.matrix]}


def hom_from_payload(p: dict, ring: Ring) -> ModuleHom:
    return ModuleHom(FpModule(ring, tuple(p["source"])), FpModule(ring, tuple(p["target"])),
                     tuple(tuple(r) for r in p["matrix"]))


def seq_payload(seq: ShortSeq) -> dict:
    return {"f": hom_payload(seq.f), "g": hom_payload(seq.g)}


def seq_from_payload(p: dict, ring: Ring) -> ShortSeq:
    return ShortSeq(hom_from_payload(p["f"], ring), hom_from_payload(p["g"], ring))


# ---------------------------------------------------------------------------
# random sequences


def random_element(rng: random.Random, m: FpModule):
    return tuple(rng.randrange(d) for d in m.factors)


def short_exact_from(b: FpModule, gens) -> ShortSeq:
    """``0 -> <gens> -> b -> b/<gens> -> 0``."""
    a, incl = mod.submodule(b, gens)
    c, proj = mod.cokernel(incl)
    return ShortSeq(incl, proj)


def ideal_sequences(ring: Ring) -> list[ShortSeq]:
    """``0 -> I -> R -> R/I -> 0`` for every ideal; these make failures of the Baer type visible."""
    out = []
    for I in ideals(ring):
        incl = dec.ideal_module(I)[1]
        c, proj = mod.cokernel(incl)
        out.append(ShortSeq(incl, proj))
    return out


def _torsion_modules(ring: Ring, s: MultSet) -> list[FpModule]:
    m = localize_ring(ring, s).target.n
    rest = ring.n // m
    return [mod.cyclic(ring, d) for d in ring.divisors if d > 1 and rest % d == 0]


def s_exact_only(seq: ShortSeq, t: FpModule, where: str) -> ShortSeq:
    """Spoil exactness by adding an S-torsion summand on the left or the right.

    ``t`` should be killed by localization, so the result stays S-exact;
    callers confirm that with :func:`modules.is_s_exact`.
    """
    f, g = seq.f, seq.g
    if where == "left":
        ds = mod.direct_sum([f.source, t])
        f2 = ModuleHom(ds.module, f.target, mod._frozen(
            f(ds.projections[0](x)) for x in ds.module.generators()))
        return ShortSeq(f2, g)
    ds = mod.direct_sum([g.target, t])
    g2 = ds.injections[0] @ g
    return ShortSeq(f, g2)


def sample_sequences(ring: Ring, s: MultSet, family: Family, budget: int, rng: random.Random) -> list[ShortSeq]:
    """Ideal sequences, then ``budget`` random sequences (exact, plus S-exact-only variants)."""
    out = list(ideal_sequences(ring))
    pool = [m for m in family if m.rank]
    torsion = _torsion_modules(ring, s)
    while len(out) < len(ideal_sequences(ring)) + budget and pool:
        b = rng.choice(pool)
        gens = [random_element(rng, b) for _ in range(rng.randint(1, 2))]
        seq = short_exact_from(b, gens)
        if torsion and rng.random() < 0.3:
            spoiled = s_exact_only(seq, rng.choice(torsion), rng.choice(["left", "right"]))
            if mod.is_s_exact(spoiled, s) and not mod.is_exact(spoiled):
                seq = spoiled
        out.append(seq)
    return out


def hom_sequence(seq: ShortSeq, m: FpModule, s: MultSet) -> ShortSeq:
    """``Hom(C_S, m) -> Hom(B_S, m) -> Hom(A_S, m)``."""
    fs, gs = mod.localize_hom(seq.f, s), mod.localize_hom(seq.g, s)
    return ShortSeq(mod.hom_pre(gs, m), mod.hom_pre(fs, m))


def random_module(rng: random.Random, ring: Ring, max_factors: int = 2, max_order: Optional[int] = None) -> FpModule:
    """A random module given by a random presentation (not already canonical)."""
    while True:
        k = rng.randint(1, max_factors + 1)
        rows = [[rng.randrange(-ring.n, ring.n) for _ in range(k)] for _ in range(rng.randint(0, k))]
        m = mod.from_presentation(ring, rows, k)
        if len(m.factors) <= max_factors and (max_order is None or m.order <= max_order):
            return m


# ---------------------------------------------------------------------------
# checks


@dataclass
class Context:
    ring: Ring
    s: MultSet
    family: Family
    budget: int
    rng: random.Random

    @property
    def local_ring(self) -> Ring:
        return localize_ring(self.ring, self.s).target


def s_inj(m: FpModule, s: MultSet) -> bool:
    return dec.is_s_injective(m, s).value


@dataclass(frozen=True)
class Check:
    prop_id: str
    description: str
    instances: Callable[[Context], Iterator[dict]]
    check: Callable[[Ring, MultSet, dict], tuple[bool, dict]]


def _each_module(ctx: Context) -> Iterator[dict]:
    for m in ctx.family:
        yield {"module": module_payload(m)}


def _m(p: dict, ring: Ring, key: str = "module") -> FpModule:
    return module_from_payload(p[key], ring)


def _rs_module_inj_instances(ctx):
    fam = enumerate_modules(ctx.local_ring, ctx.family.max_factors)
    for e in fam:
        yield {"module": module_payload(e.over(ctx.ring))}


def _rs_module_inj(ring, s, p):
    e = _m(p, ring)
    local = localize_ring(ring, s).target
    assert all(local.n % d == 0 for d in e.factors), "not an R_S-module"
    a = dec.is_injective(e).value
    b = s_inj(e, s)
    return a == b, {"injective_over_R": a, "s_injective": b}


def _s_baer_instances(ctx):
    monos = [seq.f for seq in sample_sequences(ctx.ring, ctx.s, ctx.family, ctx.budget, ctx.rng)]
    monos = [f for f in monos if mod.is_injective_hom(f)]
    for m in ctx.family:
        yield {"module": module_payload(m), "monos": [hom_payload(f) for f in monos]}


def _s_baer(ring, s, p):
    e = _m(p, ring)
    route = dec.is_s_injective(e, s, "s_baer")
    failing = None
    for i, fp in enumerate(p["monos"]):
        i_s = mod.localize_hom(hom_from_payload(fp, ring), s)
        # definition: every h : A_S -> E extends along i_S; generators suffice
        hs = mod.hom_module(i_s.source, e)
        for y in hs.module.generators():
            if not dec._extends(i_s, hs.decode(y)):
                failing = {"mono": i, "hom": hom_payload(hs.decode(y))}
                break
        if failing:
            break
    definition = failing is None
    return route.value == definition, {"s_baer": route.value, "definition": definition, "failure": failing}


def _ext_criterion(ring, s, p):
    e = _m(p, ring)
    fam = enumerate_modules(ring, p["family_factors"])
    a1 = all(mod.ext1(mod.localize_module(nn, s).module, e).order == 1 for nn in fam)
    a2 = dec.is_s_injective(e, s, "ext_vanishing").value
    a3 = dec.is_s_injective(e, s, "s_baer").value
    return a1 == a2 == a3, {"ext_all_localized": a1, "ext_ideal_quotients": a2, "s_injective": a3}


def _ext_instances(ctx):
    for m in ctx.family:
        yield {"module": module_payload(m), "family_factors": ctx.family.max_factors}


def _exact_seq_instances(ctx):
    seqs = sample_sequences(ctx.ring, ctx.s, ctx.family, ctx.budget, ctx.rng)
    payloads = [seq_payload(q) for q in seqs if mod.is_s_exact(q, ctx.s)]
    for m in ctx.family:
        yield {"module": module_payload(m), "sequences": payloads}


def _exact_hom_seq(ring, s, p):
    e = _m(p, ring)
    sinj = s_inj(e, s)
    failure = None
    n_exact = n_s_only = 0
    for i, sp in enumerate(p["sequences"]):
        seq = seq_from_payload(sp, ring)
        if mod.is_exact(seq):
            n_exact += 1
        else:
            n_s_only += 1
        if not mod.is_exact(hom_sequence(seq, e, s)):
            failure = i
            break
    detail = {"s_injective": sinj, "failing_sequence": failure,
              "exact": n_exact, "s_exact_only": n_s_only}
    if sinj:
        return failure is None, detail
    return failure is not None, detail


def _colocalization(ring, s, p):
    e = _m(p, ring)
    b = dec.is_s_injective(e, s, "colocalization").value
    a = dec.is_s_injective(e, s, "s_baer").value
    return a == b, {"hom_rs_injective": b, "s_injective": a}


def _pair_instances(ctx):
    fam = list(ctx.family)
    for a, b in combinations_with_replacement(range(len(fam)), 2):
        yield {"kind": "pair", "parts": [module_payload(fam[a]), module_payload(fam[b])]}
    for m in fam:
        yield {"kind": "summands", "module": module_payload(m)}


def _prod_closure(ring, s, p):
    if p["kind"] == "pair":
        parts = [module_from_payload(x, ring) for x in p["parts"]]
        total = mod.direct_sum(parts).module
        lhs = s_inj(total, s)
        rhs = all(s_inj(x, s) for x in parts)
        return lhs == rhs, {"sum": lhs, "each": rhs}
    m = _m(p, ring)
    if not s_inj(m, s):
        return True, {"s_injective": False}
    bad = [list(x.factors) for x in direct_summands(m) if not s_inj(x, s)]
    return not bad, {"s_injective": True, "bad_summands": bad}


def _finite_sum_instances(ctx):
    good = [m for m in ctx.family if s_inj(m, ctx.s)]
    for a, b in combinations_with_replacement(range(len(good)), 2):
        yield {"parts": [module_payload(good[a]), module_payload(good[b])]}
    for _ in range(ctx.budget):
        if not good:
            break
        parts = [ctx.rng.choice(good) for _ in range(3)]
        yield {"parts": [module_payload(x) for x in parts]}


def _finite_sum(ring, s, p):
    parts = [module_from_payload(x, ring) for x in p["parts"]]
    if not all(s_inj(x, s) for x in parts):
        return True, {"skipped": True}
    total = mod.direct_sum(parts).module
    ok = s_inj(total, s)
    return ok, {"sum": list(total.factors), "s_injective": ok}


def _sigma_instances(ctx):
    for m in ctx.family:
        for k in (1, 2, 3):
            yield {"module": module_payload(m), "k": k}


def _sigma(ring, s, p):
    e = _m(p, ring)
    a = dec.is_sigma_s_injective_finite(e, s, p["k"]).value
    b = s_inj(e, s)
    return a == b, {"sigma_finite": a, "s_injective": b}


def _lambek(ring, s, p):
    m = _m(p, ring)
    flat = dec.is_s_flat(m, s).value
    inj = s_inj(mod.character(m), s)
    return flat == inj, {"s_flat": flat, "character_s_injective": inj,
                         "character": list(mod.character(m).factors)}


def _lem4_instances(ctx):
    for m in ctx.family:
        for nn in ctx.family:
            yield {"m": module_payload(m), "n": module_payload(nn)}


def _lem4(ring, s, p):
    m = _m(p, ring, "m")
    ns = mod.localize_module(_m(p, ring, "n"), s).module
    tor = mod.tor1(mod.character(m), ns)
    ext_dual = mod.character(mod.ext1(ns, m))
    return tor.factors == ext_dual.factors, {"tor": list(tor.factors), "ext_dual": list(ext_dual.factors)}


def _char_instances(ctx):
    yield {"kind": "hypotheses"}
    for m in ctx.family:
        yield {"kind": "module", "module": module_payload(m)}


def _char_theorem(ring, s, p):
    if p["kind"] == "hypotheses":
        ok, detail = _bounded_torsion(ring, s, {"kind": "witness"})
        fp = localize_ring(ring, s).target
        rs = dec.localized_ring_module(ring, s)
        # R_S is cyclic over R, hence finitely presented
        detail.update({"rs_generators": rs.rank, "rs_order": rs.order, "rs_modulus": fp.n})
        return ok and rs.rank <= 1 and rs.order == fp.n, detail
    m = _m(p, ring)
    a = s_inj(m, s)
    b = s_inj(mod.character(mod.character(m)), s)
    c = dec.is_s_flat(mod.character(m), s).value
    return a == b == c, {"s_injective": a, "double_dual_s_injective": b, "character_s_flat": c}


def _bounded_instances(ctx):
    yield {"kind": "witness"}
    for r in range(ctx.ring.n):
        yield {"kind": "residue", "r": r}


def _bounded_torsion(ring, s, p):
    s0 = bounded_torsion_witness(ring, s)
    n = ring.n
    if p["kind"] == "witness":
        torsion = s_torsion(ring, s)
        full = 1
        for x in s.elements:
            full = full * x % n
        ok = s0 in s and all(s0 * r % n == 0 for r in torsion) and all(full * r % n == 0 for r in torsion)
        return ok, {"s0": s0, "torsion": torsion, "product_of_S": full}
    r = p["r"]
    in_torsion = any(x * r % n == 0 for x in s.elements)
    ok = (not in_torsion) or s0 * r % n == 0
    return ok, {"s0": s0, "r": r, "torsion": in_torsion}


def _noeth_instances(ctx):
    for I in ideals(ctx.ring):
        yield {"kind": "ideal", "d": I.d}
    yield {"kind": "equivalence"}


def _s_noetherian(ring, s, p):
    report = is_s_noetherian(ring, s)
    if p["kind"] == "ideal":
        w = [x for x in report.witnesses if x[0] == p["d"]]
        ok = len(w) == 1 and report.recheck()
        return ok, {"witness": list(w[0]) if w else None}
    # R_S has finitely many ideals, so every ascending chain stabilises
    local = localize_ring(ring, s).target
    rs_noetherian = all(I.ring == local for I in ideals(local))
    return report.value == rs_noetherian, {"s_noetherian": report.value, "rs_noetherian": rs_noetherian}


CHECKS: dict[str, Check] = {c.prop_id: c for c in [
    Check("RS_MODULE_INJ", "an R_S-module is injective over R iff S-injective",
          _rs_module_inj_instances, _rs_module_inj),
    Check("S_BAER", "S-Baer criterion agrees with the extension property on sampled monomorphisms",
          _s_baer_instances, _s_baer),
    Check("EXT_CRITERION", "Ext^1(N_S, M) = 0 for all N <=> Ext^1(R_S/I_S, M) = 0 for all I <=> S-injective",
          _ext_instances, _ext_criterion),
    Check("EXACT_HOM_SEQ", "S-injective iff Hom(-_S, M) preserves sampled (S-)exact sequences",
          _exact_seq_instances, _exact_hom_seq),
    Check("COLOCALIZATION", "S-injective iff Hom(R_S, M) is injective",
          _each_module, _colocalization),
    Check("PROD_CLOSURE", "finite products and direct summands of S-injectives",
          _pair_instances, _prod_closure),
    Check("FINITE_SUM_CLOSURE", "finite direct sums of S-injectives are S-injective",
          _finite_sum_instances, _finite_sum),
    Check("SIGMA_FINITE", "k-fold sums of copies are S-injective iff the module is (k <= 3)",
          _sigma_instances, _sigma),
    Check("LAMBEK", "M is S-flat iff its character module is S-injective",
          _each_module, _lambek),
    Check("LEM4_DUALITY", "Tor_1(M^+, N_S) ~ Ext^1(N_S, M)^+",
          _lem4_instances, _lem4),
    Check("CHAR_THEOREM", "M S-injective <=> M^++ S-injective <=> M^+ S-flat",
          _char_instances, _char_theorem),
    Check("BOUNDED_TORSION", "the S-torsion of R is bounded by the reported witness",
          _bounded_instances, _bounded_torsion),
    Check("S_NOETHERIAN_LEMMA", "R is S-Noetherian and R_S is Noetherian, simultaneously",
          _noeth_instances, _s_noetherian),
]}

PROP_IDS = tuple(CHECKS)


@dataclass
class Report:
    prop_id: str
    n: int
    mult_set: tuple[int, ...]
    instances_checked: int
    verdict: str
    counterexample: Optional[dict] = None
    elapsed: float = 0.0
    seed: int = 0
    budget: int = 200
    max_factors: int = 3
    max_instances: Optional[int] = None
    s_elements: tuple[int, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "schema": 1,
            "kind": "report",
            "prop_id": self.prop_id,
            "ring": self.n,
            "mult_set": list(self.mult_set),
            "s_elements": list(self.s_elements),
            "max_factors": self.max_factors,
            "budget": self.budget,
            "max_instances": self.max_instances,
            "seed": self.seed,
            "instances_checked": self.instances_checked,
            "verdict": self.verdict,
            "counterexample": self.counterexample,
        }
        if timing:
            out["elapsed"] = round(self.elapsed, 6)
        return out

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        return cls(prop_id=d["prop_id"], n=d["ring"], mult_set=tuple(d["mult_set"]),
                   instances_checked=d["instances_checked"], verdict=d["verdict"],
                   counterexample=d.get("counterexample"), elapsed=d.get("elapsed", 0.0),
                   seed=d["seed"], budget=d["budget"], max_factors=d["max_factors"],
                   max_instances=d.get("max_instances"), s_elements=tuple(d.get("s_elements", ())))


def _run_check(chk: Check, ring: Ring, s: MultSet, payload: dict) -> tuple[bool, dict]:
    try:
        return chk.check(ring, s, payload)
    except Exception as exc:  # a crash inside a check is a failed instance
        return False, {"error": f"{type(exc).__name__}: {exc}"}


def verify(prop_id: str, ring: Ring, s: MultSet, max_factors: int = 3, budget: int = 200,
           seed: int = 0, max_instances: Optional[int] = None) -> Report:
    """Check one proposition over the family of modules with ``<= max_factors`` factors.

    ``budget`` is the number of random sequences sampled (and of random
    triples for FINITE_SUM_CLOSURE); ``max_instances`` optionally caps the
    run, in which case an incomplete run is reported as ``budget_exhausted``.
    """
    if prop_id not in CHECKS:
        raise UnknownProposition(prop_id)
    chk = CHECKS[prop_id]
    start = time.perf_counter()
    ctx = Context(ring, s, enumerate_modules(ring, max_factors), budget, random.Random(seed))
    count = 0
    verdict, cex = PASS, None
    instances = chk.instances(ctx)
    while True:
        try:
            payload = next(instances)
        except StopIteration:
            break
        except Exception as exc:  # building the instances themselves went wrong
            verdict = COUNTEREXAMPLE
            cex = {"index": count, "instance": None, "detail": {"error": f"{type(exc).__name__}: {exc}"}}
            break
        if max_instances is not None and count >= max_instances:
            verdict = EXHAUSTED
            break
        count += 1
        ok, detail = _run_check(chk, ring, s, payload)
        if not ok:
            verdict = COUNTEREXAMPLE
            cex = {"index": count - 1, "instance": payload, "detail": detail}
            break
    return Report(prop_id, ring.n, s.generators, count, verdict, cex, time.perf_counter() - start,
                  seed, budget, max_factors, max_instances, tuple(sorted(s.elements)))


def recheck_report(report: Report) -> bool:
    """Re-run a counterexample's single instance; True when it still fails."""
    if report.counterexample is None:
        return False
    if report.counterexample["instance"] is None:
        return True  # failure happened while generating instances
    ring = Ring(report.n)
    s = mult_set(ring, report.mult_set)
    ok, _ = _run_check(CHECKS[report.prop_id], ring, s, report.counterexample["instance"])
    return not ok


# ---------------------------------------------------------------------------
# counterexample hunting

PROPERTIES = ("injective", "s-injective", "flat", "s-flat")


def parse_predicate(expr: str) -> list[tuple[str, bool]]:
    """``"s-injective,!injective"`` -> ``[("s-injective", True), ("injective", False)]``."""
    out = []
    for tok in expr.replace("&", ",").split(","):
        tok = tok.strip()
        if not tok:
            continue
        want = True
        while tok[:1] in ("!", "~", "¬"):
            want = not want
            tok = tok[1:].strip()
        tok = tok.lower().replace("_", "-")
        if tok not in PROPERTIES:
            raise ValueError(f"unknown property {tok!r}; expected one of {', '.join(PROPERTIES)}")
        out.append((tok, want))
    if not out:
        raise ValueError("empty predicate")
    return out


def _property(name: str, m: FpModule, s: MultSet) -> dec.Verdict:
    if name == "injective":
        return dec.is_injective(m)
    if name == "s-injective":
        return dec.is_s_injective(m, s)
    if name == "flat":
        return dec.is_flat(m)
    return dec.is_s_flat(m, s)


@dataclass
class HuntResult:
    predicate: list[tuple[str, bool]]
    witness: Optional[FpModule]
    checked: int
    verdicts: dict = field(default_factory=dict)
    exhausted_budget: bool = False

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "kind": "hunt",
            "predicate": [("" if want else "!") + name for name, want in self.predicate],
            "found": self.witness is not None,
            "witness": module_payload(self.witness) if self.witness is not None else None,
            "checked": self.checked,
            "budget_exhausted": self.exhausted_budget,
            "verdicts": {k: v.to_dict() for k, v in self.verdicts.items()},
        }


def hunt(ring: Ring, s: MultSet, predicate, max_factors: int = 3, budget: Optional[int] = None) -> HuntResult:
    """First module in enumeration order satisfying every clause of ``predicate``."""
    clauses = parse_predicate(predicate) if isinstance(predicate, str) else list(predicate)
    if not clauses:
        raise ValueError("empty predicate")
    checked = 0
    for m in enumerate_modules(ring, max_factors):
        if budget is not None and checked >= budget:
            return HuntResult(clauses, None, checked, exhausted_budget=True)
        checked += 1
        verdicts = {}
        for name, want in clauses:
            v = _property(name, m, s)
            verdicts[name] = v
            if v.value != want:
                break
        else:
            return HuntResult(clauses, m, checked, verdicts)
    return HuntResult(clauses, None, checked)
