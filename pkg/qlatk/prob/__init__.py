from .expectation import eval_markov, expected_value, product_chain, running_extremum
from .measure import check_chain_letters, measure_buchi, summary_chain
