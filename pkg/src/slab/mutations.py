"""Deliberate corruptions used to show the verification suite can fail.

``with corrupted("character"): verify(...)`` swaps one construction for a
plausible-looking wrong one. Caches are flushed on entry and exit so no
stale correct result leaks into the corrupted run (or the reverse).
"""

from __future__ import annotations

from contextlib import contextmanager

from . import modules as mod
from . import ring as ring_mod


def clear_caches() -> None:
    for m in (mod, ring_mod):
        for obj in vars(m).values():
            if hasattr(obj, "cache_clear"):
                obj.cache_clear()


def _character_untwisted(m):
    # pairs coordinates into Z/n without the n/d_i twist, so every
    # functional looks like it has full order n: the dual comes out free
    return mod.FpModule(m.ring, (m.ring.n,) * m.rank)


def _localize_nothing(m, s):
    ident = mod.identity_hom(m)
    return mod.ModuleLocalization(m, m, m, ident, ident, s)


def _ext1_without_quotient(a, b, generators=None):
    data = _ORIGINALS["ext1_data"](a, b, generators)
    return mod.ExtData(data.restriction.target, data.resolution, data.restriction,
                       mod.identity_hom(data.restriction.target), data.syzygy_homs)


_ORIGINALS = {
    "character": mod.character,
    "localize_module": mod.localize_module,
    "ext1_data": mod.ext1_data,
}

MUTANTS = {
    "character": ("character", _character_untwisted),
    "localize_module": ("localize_module", _localize_nothing),
    "ext1": ("ext1_data", _ext1_without_quotient),
}


@contextmanager
def corrupted(name: str):
    if name not in MUTANTS:
        raise KeyError(f"unknown mutant {name!r}; choose from {', '.join(MUTANTS)}")
    attr, fn = MUTANTS[name]
    original = getattr(mod, attr)
    clear_caches()
    setattr(mod, attr, fn)
    try:
        yield
    finally:
        setattr(mod, attr, original)
        clear_caches()
