"""Signature pairs of group-invariant CR maps for cyclic subgroups of U(2) and U(1,1)."""

__version__ = "0.1.0"

from .asymptotics import (RatioReport, WeightProfile, convergence_table, limit_ratio,
                          weight_profile)
from .errors import (InsufficientPrimes, LemmaViolation, NonConstantResidue, NotInSupport,
                     ParameterError, QuadrisigError, SizeGuardError)
from .expansion import (CRMap, CyclotomicElement, cr_map, cyclotomic_polynomial, expand,
                        expand_modular)
from .geometry import (CycleGeometry, LatticePath, canonical_element, cycle_geometry,
                       is_m_ordered, lattice_path)
from .params import Form, GroupParams, canonicalize, make_params
from .permutations import (CirculantSpec, SteppedPermutation, circulant_spec, cycle_stats,
                           det_via_permutations, enumerate_T)
from .polynomial import SparsePolynomial, evaluate
from .signature import (SignaturePair, SupportEntry, classify_sign, positivity_ratio,
                        signature, su11_signature, support)
