"""Learning and certifying state-feedback controllers for unknown stochastic
linear discrete-time systems.

The package simulates trajectory data from a random-system generative model,
learns posterior distributions over controller gains by minimizing
high-probability upper bounds on the expected quadratic cost, and certifies
any posterior with those bounds (finite and infinite controller spaces).
A finite-horizon LQG baseline and an experiment driver are included.
"""

__version__ = "0.1.0"

from .sysmodel import (
    SystemDistribution,
    Trajectory,
    Dataset,
    sample_system,
    sample_noise,
    simulate,
    generate_dataset,
)
from .cost import (
    CostWeights,
    ClosedLoopMatrices,
    quadratic_cost,
    empirical_cost,
    gibbs_empirical_cost,
    mc_gibbs_cost,
    noise_expansion_cost,
)
from .controllers import FiniteControllerSpace, BoxControllerSpace, gain_grid
from .posterior import (
    FinitePosterior,
    TruncGaussPosterior,
    kl_finite,
    kl_truncgauss,
    sample_gain,
)
from .bounds import (
    BoundConfig,
    BoundReport,
    GammaEmptyError,
    rho_quantities,
    b_cost_theoretical,
    admissible_lambdas,
    b_cost_empirical,
    finite_bound_rhs,
    infinite_bound_rhs,
    coverage_check,
)
from .learn import (
    SgdConfig,
    FiniteLearnResult,
    InfiniteLearnResult,
    gibbs_posterior,
    learn_finite,
    phi_objective,
    learn_infinite,
    evaluate_posterior,
)
from .lqg import RiccatiSolution, riccati_solve, lqg_expected_cost

__all__ = [
    "SystemDistribution",
    "Trajectory",
    "Dataset",
    "sample_system",
    "sample_noise",
    "simulate",
    "generate_dataset",
    "CostWeights",
    "ClosedLoopMatrices",
    "quadratic_cost",
    "empirical_cost",
    "gibbs_empirical_cost",
    "mc_gibbs_cost",
    "noise_expansion_cost",
    "FiniteControllerSpace",
    "BoxControllerSpace",
    "gain_grid",
    "FinitePosterior",
    "TruncGaussPosterior",
    "kl_finite",
    "kl_truncgauss",
    "sample_gain",
    "BoundConfig",
    "BoundReport",
    "GammaEmptyError",
    "rho_quantities",
    "b_cost_theoretical",
    "admissible_lambdas",
    "b_cost_empirical",
    "finite_bound_rhs",
    "infinite_bound_rhs",
    "coverage_check",
    "SgdConfig",
    "FiniteLearnResult",
    "InfiniteLearnResult",
    "gibbs_posterior",
    "learn_finite",
    "phi_objective",
    "learn_infinite",
    "evaluate_posterior",
    "RiccatiSolution",
    "riccati_solve",
    "lqg_expected_cost",
]
