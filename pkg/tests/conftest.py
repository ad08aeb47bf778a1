import os

import hypothesis
import numpy as np
import pytest

from addrmap import DDR4, HBM, get_policy
from dram_model import PseudoChannel, timing_preset
from interconnect import local_route

np.seterr(all="warn")

hypothesis.settings.register_profile("fast", max_examples=20, deadline=None)
hypothesis.settings.register_profile("thorough", max_examples=10_000, deadline=None)
hypothesis.settings.register_profile("default", max_examples=200, deadline=None)
hypothesis.settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture
def hbm_timing():
    return timing_preset("hbm-u280")


@pytest.fixture
def ddr4_timing():
    return timing_preset("ddr4-u280")


@pytest.fixture
def hbm_channel(hbm_timing):
    def factory(policy="RGBCG", timing=None):
        return PseudoChannel(get_policy(policy, HBM), timing or hbm_timing)

    return factory


@pytest.fixture
def ddr4_channel(ddr4_timing):
    def factory(policy="RCB", timing=None):
        return PseudoChannel(get_policy(policy, DDR4), timing or ddr4_timing)

    return factory


@pytest.fixture
def route0():
    return local_route(0)
