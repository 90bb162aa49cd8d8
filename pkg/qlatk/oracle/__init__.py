from .brute import (
    FALLBACK_LASSO_SIZE,
    brute_eval_lasso,
    brute_fallback,
    lasso_product,
    lasso_runs,
    repeated_values,
    run_value,
)
from .sampling import sample_markov
