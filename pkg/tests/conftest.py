# -*- coding: utf-8 -*-
"""
Shared fixtures: seeded randomness and an isolated configuration
"""

import os
import random
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config import AppConfig, LoggingConfig, reset_config
from utils.logging_setup import reset_logging


@pytest.fixture
def rng():
    return random.Random(2024)


@pytest.fixture(autouse=True)
def tmp_config(tmp_path, monkeypatch):
    """Default configuration with logs under tmp_path and no console handler"""
    for name in list(os.environ):
        if name.startswith("REVSYNTH_"):
            monkeypatch.delenv(name)
    cfg = AppConfig(logging=LoggingConfig(log_dir=str(tmp_path / "logs"), console=False))
    reset_config(cfg)
    yield cfg
    reset_logging()
    reset_config(None)
