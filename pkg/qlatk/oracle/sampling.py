import random
import typing

from qlatk.core.markov import MarkovChain

Seed = typing.Union[int, random.Random, None]


def _pick(rng: random.Random, items: typing.Sequence, weights: typing.Sequence) -> typing.Any:
    return rng.choices(items, weights=[float(weight) for weight in weights])[0]


def sample_markov(
    chain: MarkovChain, count: int, horizon: int, seed: Seed = None
) -> typing.List[typing.Tuple[str, ...]]:
    """ Independent prefixes of length horizon generated by the chain, reproducible under a
    fixed seed """
    if count < 1 or horizon < 1:
        raise ValueError(f"count and horizon must be positive, got {count} and {horizon}")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    starts = chain.initial_states
    start_weights = [chain.initial[state] for state in starts]
    words = []
    for _ in range(count):
        state, letters = _pick(rng, starts, start_weights), []
        for _ in range(horizon):
            edges = chain.edges(state)
            edge = _pick(rng, edges, [edge.prob for edge in edges])
            letters.append(edge.letter)
            state = edge.target
        words.append(tuple(letters))
    return words
