"""Symmetry breaking operators for S^n > S^(n-1)."""

from ._core import (
    BudgetExceeded,
    ConfigError,
    ConvergenceError,
    DomainError,
    Error,
    RepresentationError,
    __version__,
    asymbol,
    csymbol,
    gamma,
    gegenbauer,
    hyp2f1,
    in_l_even,
    inflated_gegenbauer,
    inflated_gegenbauer_coefficients,
    juhl_coefficients,
    juhl_symbol_coefficients,
    ks_symbol,
    recip_gamma,
    residue_constant,
    run_suite,
    solve_sol_space,
    suite_names,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
