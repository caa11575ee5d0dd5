"""Symbolic OPE calculus for vertex superalgebras.

Exact coefficients live in :class:`Scalar` (rational functions in named
parameters). An :class:`AlgebraPresentation` holds an OPE table; states are
:class:`Expr` sums of normally ordered monomials. On top of that sit lattice
algebras, tensor products, ideal quotients, highest-weight modules, Zhu
projections, spectral flow and the Kazama-Suzuki checks in :mod:`voa.ks`.
"""

from .scalar import Scalar, ScalarError, PoleError, parse_scalar
from .algebra import (AlgebraPresentation, Expr, Generator, PresentationError,
                      lambda_bracket, normally_ordered, nth_product)
from .presets import (PRESETS, central_charge_wsl4sub, heisenberg, load_preset, n2, nop,
                      parafermion_generator, virasoro, wsl4sub)
from .lattice import LatticeAlgebra, delta_twist, lattice_preset
from .tensor import TensorAlgebra, tensor
from .quotient import ideal_span, quotient_reduce
from .checks import check_jacobi, check_skew, validate
from .hwmod import (HighestWeightModule, HighestWeightSpec, gplus_power_kernel,
                    gplus_power_singular, n2_twisted_hw, top_space_dim, wsl4sub_hw)
from .flowzhu import (ZhuAlgebra, spectral_flow, zhu_commutator, zhu_project, zhu_star)
from .textfmt import ParseError, parse_presentation, print_presentation

__version__ = "0.1.0"

__all__ = [
    "Scalar", "ScalarError", "PoleError", "parse_scalar",
    "AlgebraPresentation", "Expr", "Generator", "PresentationError",
    "lambda_bracket", "normally_ordered", "nth_product",
    "PRESETS", "central_charge_wsl4sub", "heisenberg", "load_preset", "n2", "nop",
    "parafermion_generator", "virasoro", "wsl4sub",
    "LatticeAlgebra", "delta_twist", "lattice_preset",
    "TensorAlgebra", "tensor", "ideal_span", "quotient_reduce",
    "check_jacobi", "check_skew", "validate",
    "HighestWeightModule", "HighestWeightSpec", "gplus_power_kernel", "gplus_power_singular",
    "n2_twisted_hw", "top_space_dim", "wsl4sub_hw",
    "ZhuAlgebra", "spectral_flow", "zhu_commutator", "zhu_project", "zhu_star",
    "ParseError", "parse_presentation", "print_presentation",
]
