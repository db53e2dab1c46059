"""Exact Hirzebruch-Riemann-Roch computations for quantized vortex moduli spaces.

The vortex moduli space for ``N`` vortices on a compact genus ``g`` surface of
area ``4πk`` is ``Sym^N`` of the surface; its quantum Hilbert space has
dimension ``C(k, N)`` whenever ``k > max(N, g - 1)``.

>>> from vortex_quant import ModuliParams, vortex_dimension
>>> vortex_dimension(ModuliParams(genus=2, vortices=3, area_quanta=5)).dimension
10
"""

from .classes import (
    CohomologyClass,
    ModuliParams,
    Role,
    canonical_class,
    is_integral,
    is_positive_eta_multiple,
    kahler_class,
    line_bundle_class,
    sum_identity_check,
    tangent_chern,
    vanishing_guaranteed,
)
from .hrr import (
    ConsistencyError,
    DimensionReport,
    IntegralityError,
    closed_form_dimension,
    euler_characteristic,
    reduced_todd_factor,
    residue_coefficient,
    todd_class,
    vortex_dimension,
)
from .oracle import TensorElement, lift, oracle_integrate, tensor_mul, verify_reduced_ring
from .ring import Monomial, RingElement, RingParams, exp, integrate
from .series import TruncatedSeries, exp_series, reciprocal, todd_series

__version__ = "0.1.0"
