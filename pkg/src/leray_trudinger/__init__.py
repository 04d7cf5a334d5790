"""Numerical companion for critical Hardy-Leray and Trudinger-type inequalities on balls."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    ConfigurationError,
    DomainError,
    IntegrandError,
    LTError,
    NormalizationError,
)
from .functionals import (  # noqa: E402
    C1,
    FunctionalReport,
    I_n,
    J_n,
    TrudingerParams,
    dirichlet_energy,
    eval_P_B1,
    green_representation_check,
    ground_state_transform,
    hardy_constant,
    hardy_term,
    prop31_bound_rhs,
    prop31_constant,
    remainder_constant,
    remainder_term,
    riesz_bound,
    series_threshold,
    trudinger_integral,
    weighted_Lq_norm,
    young_base_residual,
    young_pairing_check,
)
from .funcspace import (  # noqa: E402
    AnalyticProfile,
    FamilySpec,
    GroundStateTransform,
    MeshProfile,
    RadialProfile,
    derivative,
    evaluate,
    make_family,
    normalize_to_unit_hardy,
    sample_random_mesh,
    scale,
)
from .geometry import BallDomain, from_log_coordinate, to_log_coordinate, unit_ball_volume  # noqa: E402
from .optimize import (  # noqa: E402
    ExtremalResult,
    MeshSpec,
    OptimizeBudget,
    blowup_sweep,
    gap_region_scan,
    maximize_trudinger,
    minimize_ratio,
)
from .quadrature import QuadratureResult, QuadratureSpec, Tail  # noqa: E402
from .weights import E1, E2, WeightPoint, weight_derivative  # noqa: E402
