import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from tsibench.core import BaseGenerator
from tsibench.synth import GeneratorConfig, gen_sine, gen_sine_cosine

FIXTURES = Path(__file__).parent / "fixtures"
UCR_FIXTURE = FIXTURES / "symbols_like.tsv"
UEA_FIXTURE = FIXTURES / "awr_like.ts"


@pytest.fixture
def sine_series():
    return gen_sine(GeneratorConfig(base_generator=BaseGenerator.SINE, seed=11))


@pytest.fixture
def clean_sine_series():
    return gen_sine(
        GeneratorConfig(base_generator=BaseGenerator.SINE, noise_sigma=0.0, seed=11)
    )


@pytest.fixture
def sine_cosine_series():
    return gen_sine_cosine(
        GeneratorConfig(base_generator=BaseGenerator.SINE_COSINE, M=9, seed=11)
    )


def smoke_matrix(samples: int = 5, seed: int = 3) -> dict:
    """A small all-synthetic experiment matrix used across integration tests."""
    return {
        "scenarios": ["sine", "sine_cosine"],
        "anomaly_types": ["global", "trend", "square"],
        "M_values": [9],
        "r_values": [0.0, 0.15],
        "samples_per_dataset": samples,
        "seed": seed,
        "style": {"uni_width": 600, "uni_height": 200, "multi_width": 450, "multi_height": 450},
    }
