"""Module theory over Z/n: S-injective and S-flat modules, decided and verified."""

from .deciders import (RouteDisagreement, Verdict, is_flat, is_injective, is_s_flat, is_s_injective,
                       is_sigma_s_injective_finite)
from .harness import Report, enumerate_modules, hunt, verify
from .linalg import snf, solve_mod
from .modules import (FpModule, ModuleHom, ShortSeq, character, cokernel, direct_sum, ext1,
                      from_invariants, from_presentation, hom_module, image, is_exact, is_isomorphic,
                      is_s_exact, is_s_finite, kernel, localize_module, tensor, tor1)
from .ring import (Ideal, MultSet, Ring, ZeroInSet, bounded_torsion_witness, ideals, is_s_noetherian,
                   localize_ring, make_ring, mult_set)

__version__ = "0.1.0"
