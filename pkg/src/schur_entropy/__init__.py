"""Topological entropy of endomorphisms of p-adic abelian and Heisenberg groups."""

from .classifier import (EntropyClass, GroupDescriptor, SchurReport, entropy_class, rank,
                         schur_check_abelian, schur_report_heisenberg)
from .entropy_formulas import (EntropyValue, MixedShape, addition_check, entropy_mixed,
                               entropy_padic, entropy_real)
from .errors import (InvalidEndo, InvalidInput, NotAnEndomorphism, NotASublattice,
                     PrecisionExhausted, RootFindingFailure, SingularMatrix)
from .heisenberg import (HeisenbergElement, HeisenbergEndo, RingDescriptor, endo_apply,
                         endo_entropy, frattini_rank, generators, hcomm, hinv, hmul, hpow_p,
                         split_element)
from .lattice_oracle import (ZpLattice, cotrajectory, entropy_estimate, index, intersect,
                             preimage, standard_lattice)
from .matrices import RationalMatrix, char_poly
from .padic_core import (NewtonPolygon, PadicContext, PadicPoly, PadicScalar, embed_rational,
                         newton_polygon, root_valuations)

__version__ = "0.1.0"
