#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Configuration management with YAML support and Pydantic validation
"""

import json
import os
from pathlib import Path
from typing import Optional, Literal

from pydantic import BaseModel, Field

try:
    from dotenv import load_dotenv
except ImportError:  # pragma: no cover
    load_dotenv = None

# Import YAML
try:
    import yaml
    YAML_AVAILABLE = True
except ImportError:
    YAML_AVAILABLE = False
    print("⚠️  PyYAML not installed. Install with: pip install PyYAML")


# =============================================================================
# Configuration Models
# =============================================================================

class GeneralConfig(BaseModel):
    """General limits and reproducibility"""
    dense_limit: int = Field(default=20, ge=1, le=24, description="Max width for dense 2^n tables")
    seed: int = Field(default=2024, description="Default seed for randomized strategies")
    sparse_ratio: int = Field(default=64, ge=1, description="Sparse form when |M| <= 2^n / ratio")


class WeightsConfig(BaseModel):
    """Quantum weights of the gate classes"""
    not_cnot: float = Field(default=1.0, ge=0, description="W_C: NOT and CNOT")
    toffoli: float = Field(default=5.0, ge=0, description="W_T: 2-CNOT")
    big: float = Field(default=1.0, ge=0, description="W_big: gates with more than 2 controls")
    big_per_control: Optional[float] = Field(default=None, ge=0)

    def weight_of(self, controls: int) -> float:
        if controls <= 1:
            return self.not_cnot
        if controls == 2:
            return self.toffoli
        if self.big_per_control is not None:
            return self.big_per_control * controls
        return self.big


class SynthesisConfig(BaseModel):
    """Defaults for synth_permutation / synth_mapping"""
    basis: Literal["omega2", "omega"] = "omega2"
    method: Literal["A", "B", "K", "face", "lupanov"] = "B"
    group_size: int = Field(default=2, ge=1)
    allow_ancilla_lift: bool = True
    left_right_heuristic: bool = False
    face_search: bool = False
    split_dependent: bool = False
    mct_mode: Literal["recursive4", "barenco8"] = "barenco8"


class ReductionConfig(BaseModel):
    """Rewrite engine settings"""
    max_passes: int = Field(default=3, ge=0, le=100)
    exploratory: bool = True
    trace: bool = True


class BenchConfig(BaseModel):
    """Benchmark harness"""
    workers: int = Field(default=1, ge=1)
    csv_path: str = "bench_results.csv"
    timeout_s: int = Field(default=300, ge=1)


class LoggingConfig(BaseModel):
    """Log files and console"""
    level: str = "INFO"
    log_dir: str = "logs"
    max_bytes: int = Field(default=10 * 1024 * 1024, ge=1024)
    backup_count: int = Field(default=5, ge=0)
    console: bool = True


class AppConfig(BaseModel):
    """Main application configuration"""
    general: GeneralConfig = Field(default_factory=GeneralConfig)
    weights: WeightsConfig = Field(default_factory=WeightsConfig)
    synthesis: SynthesisConfig = Field(default_factory=SynthesisConfig)
    reduction: ReductionConfig = Field(default_factory=ReductionConfig)
    bench: BenchConfig = Field(default_factory=BenchConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)


# =============================================================================
# Global State
# =============================================================================

_config: Optional[AppConfig] = None
_config_path: Optional[Path] = None


# =============================================================================
# Config Loading Functions
# =============================================================================

def get_config_path() -> Path:
    """Determine config file path (YAML preferred over JSON)"""
    # 1. Environment variable
    env_path = os.environ.get("REVSYNTH_CONFIG_PATH")
    if env_path:
        return Path(env_path)

    # 2. Current directory - YAML first
    cwd = Path.cwd()
    for filename in ["settings.yaml", "settings.yml", "settings.json"]:
        config_path = cwd / "config" / filename
        if config_path.exists():
            return config_path

    # 3. Repository directory
    repo_dir = Path(__file__).parent.parent
    for filename in ["settings.yaml", "settings.yml", "settings.json"]:
        config_path = repo_dir / "config" / filename
        if config_path.exists():
            return config_path

    # 4. Default
    return cwd / "config" / "settings.yaml"


def _load_file(path: Path) -> dict:
    """Load configuration file (YAML or JSON)"""
    with open(path, "r", encoding="utf-8") as f:
        if path.suffix in [".yaml", ".yml"]:
            if not YAML_AVAILABLE:
                raise ImportError("PyYAML required for YAML config. Install: pip install PyYAML")
            return yaml.safe_load(f) or {}
        else:
            return json.load(f)


def _save_file(path: Path, data: dict):
    """Save configuration file (YAML or JSON)"""
    with open(path, "w", encoding="utf-8") as f:
        if path.suffix in [".yaml", ".yml"]:
            if not YAML_AVAILABLE:
                raise ImportError("PyYAML required for YAML config")
            yaml.dump(data, f, default_flow_style=False, allow_unicode=True, sort_keys=False)
        else:
            json.dump(data, f, indent=2, ensure_ascii=False)


def load_config(config_path: Optional[Path] = None, reload: bool = False) -> AppConfig:
    """Load and validate configuration"""
    global _config, _config_path

    if _config is not None and not reload:
        return _config

    if load_dotenv is not None:
        load_dotenv()

    path = Path(config_path) if config_path else get_config_path()
    _config_path = path

    if not path.exists():
        example_path = path.parent / "settings.example.yaml"
        if example_path.exists() and path.suffix in [".yaml", ".yml"]:
            import shutil
            shutil.copy(example_path, path)
            print(f"[Config] Created {path} from example.")
        else:
            _config = AppConfig(**_apply_env_overrides({}))
            return _config

    data = _load_file(path)
    data = _apply_env_overrides(data)

    _config = AppConfig(**data)
    return _config


def _apply_env_overrides(data: dict) -> dict:
    """Apply environment variable overrides to config"""
    if os.environ.get("REVSYNTH_DENSE_LIMIT"):
        data.setdefault("general", {})["dense_limit"] = int(os.environ["REVSYNTH_DENSE_LIMIT"])
    if os.environ.get("REVSYNTH_SEED"):
        data.setdefault("general", {})["seed"] = int(os.environ["REVSYNTH_SEED"])
    if os.environ.get("REVSYNTH_MAX_PASSES"):
        data.setdefault("reduction", {})["max_passes"] = int(os.environ["REVSYNTH_MAX_PASSES"])
    if os.environ.get("REVSYNTH_BASIS"):
        data.setdefault("synthesis", {})["basis"] = os.environ["REVSYNTH_BASIS"]
    if os.environ.get("REVSYNTH_LOG_LEVEL"):
        data.setdefault("logging", {})["level"] = os.environ["REVSYNTH_LOG_LEVEL"]
    if os.environ.get("REVSYNTH_LOG_DIR"):
        data.setdefault("logging", {})["log_dir"] = os.environ["REVSYNTH_LOG_DIR"]
    return data


def save_config(config: Optional[AppConfig] = None, path: Optional[Path] = None):
    """Save configuration to file"""
    cfg = config or _config
    p = path or _config_path or get_config_path()

    if cfg is None:
        raise ValueError("No config to save")

    _save_file(Path(p), cfg.model_dump())


def get_config() -> AppConfig:
    """Get current config (load if needed)"""
    if _config is None:
        return load_config()
    return _config


def reset_config(config: Optional[AppConfig] = None):
    """Replace the cached config (None forces a reload on next access)"""
    global _config, _config_path
    _config = config
    _config_path = None
