"""Random substreams for the Monte Carlo study.

Every run draws from its own PCG64 generator (128-bit LCG state, multiplier
0x2360ED051FC65DA44385DF649FCCF645, XSL-RR output) seeded through numpy's
SeedSequence hash of the study seed and the (level, run) spawn key. Both
algorithms are specified bit-for-bit, so a run's stream depends only on its key
and never on which thread executes it or in what order.
"""

import numpy as np


def run_stream(seed: int, level: int, run: int) -> np.random.Generator:
    """Return the generator owned by one (level, run) of a study."""
    sequence = np.random.SeedSequence(entropy=seed, spawn_key=(level, run))
    return np.random.Generator(np.random.PCG64(sequence))
