"""Two-complex-variable Wiener-Hopf machinery for quarter-plane diffraction.

Numerical realization of the spectral-function toolchain: branch-tracked
elementary functions, contour quadrature with a singular (Cauchy) engine,
the one-dimensional demonstrator, the strip solve for the normal-derivative
spectrum, analytic continuation onto the cut domains, the additive-crossing
reformulation, physical-field reconstruction, and the sector uniqueness
demonstrations.
"""

from .params import ProblemParams, default_params, desk_params
from .branching import (SheetTag, PHYSICAL, sqrt_upper, gamma_factor, kernel,
                        kernel_inv, kernel_on_path, track_sqrt, upper_root)
from .domains import DomainLabel, classify_point, distance_to_h, h_point
from .contours import (Contour, LineSegment, ArcSegment, TailSegment,
                       HShoreSegment, make_shifted_line, make_P, make_loop,
                       contour_from_json)
from .quadrature import (QuadratureResult, integrate, integrate_product,
                         discretize, Discretization, fixed_product)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
