"""
Shared fixtures and hypothesis profiles.

Select a profile with `HYPOTHESIS_PROFILE=fast pytest`.
"""

# External Libraries
import logging
import os

import hypothesis
import numpy as np
import pytest

# Local Libraries
from src.netcore.schedule import TopologySchedule
from src.netcore.topology import make_complete
from src.simcore.config import SimConfig

np.seterr(all="warn")

hypothesis.settings.register_profile("dev", deadline=None)
hypothesis.settings.register_profile("fast", max_examples=5, deadline=None)
hypothesis.settings.register_profile("ci", max_examples=200, deadline=None)
hypothesis.settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "dev"))

X5 = (1.0, 0.0, 3.0, 1.2, 2.5)
# RepC consensus of the 5-agent complete network without attack, defaults
K5_CONSENSUS = 1.489
K5_TOLERANCE = 0.05


@pytest.fixture
def k5():
    return make_complete(5)


@pytest.fixture
def k5_config(k5):
    return SimConfig(schedule=TopologySchedule.static(k5), x0=X5, name="k5")


@pytest.fixture(autouse=True)
def _isolated_outputs(tmp_path, monkeypatch):
    monkeypatch.setenv("REPC_OUT", str(tmp_path / "outputs"))


@pytest.fixture(autouse=True)
def _reset_project_logger():
    yield
    logger = logging.getLogger("src")
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    logger.setLevel(logging.NOTSET)
