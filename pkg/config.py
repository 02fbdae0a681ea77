"""
Configuration settings for the UECSM toolkit.
"""
import copy
import json
import os
from typing import Any, Dict

from dotenv import load_dotenv

from utils.errors import ConfigError

# Load environment variables from .env file
load_dotenv()

# Default configuration
DEFAULT_CONFIG = {
    # Decision thresholds (all relative)
    "tolerances": {
        "eig_gap": 1e-8,  # repeated-eigenvalue detection
        "zero": 1e-10,  # zero entries of the overlap matrix
        "real": 1e-8,  # imaginary part of the reality ratios
        "parallel": 1e-10,  # shared-eigenvector detection
        "normal": 1e-12,  # normality of T
        "hermitian": 1e-10,  # Hermitian defect accepted by the eigensolver
        "verify_unitary": 1e-9,  # unitarity and involution checks, times n
        "verify_symmetric": 1e-8,  # symmetry checks, times max(1, ||T||_F)
    },

    # Monte Carlo campaign settings
    "campaign": {
        "n": 4,
        "rank": 2,
        "trials": 10000,
        "seed": 1,
        "ensemble": "partial_isometry",  # Options: "partial_isometry", "ginibre", "unitary"
        "workers": int(os.getenv("UECSM_WORKERS", "1")),
    },

    # Report settings
    "output": {
        "format": "text",  # Options: "text", "json"
    },

    # Logging settings
    "logging": {
        "level": os.getenv("UECSM_LOG_LEVEL", "WARNING"),  # Options: "DEBUG", "INFO", "WARNING", "ERROR"
        "file": os.getenv("UECSM_LOG_FILE") or None,
    },
}

# Merge default and user configurations
CONFIG = copy.deepcopy(DEFAULT_CONFIG)


def get_config() -> Dict[str, Any]:
    """Get the current configuration."""
    return CONFIG


def _merge(target: Dict[str, Any], updates: Dict[str, Any], path: str = "") -> None:
    for key, value in updates.items():
        if key not in target:
            raise ConfigError(f"Unknown configuration key '{path}{key}'")
        if isinstance(target[key], dict):
            if not isinstance(value, dict):
                raise ConfigError(f"Configuration key '{path}{key}' must be an object")
            _merge(target[key], value, f"{path}{key}.")
        else:
            target[key] = value


def update_config(new_config: Dict[str, Any]) -> Dict[str, Any]:
    """
    Update the configuration with new settings.

    Nested sections are merged key by key rather than replaced.

    Args:
        new_config: Partial configuration

    Returns:
        Dict[str, Any]: The updated configuration

    Raises:
        ConfigError: If a key is not part of the configuration
    """
    _merge(CONFIG, new_config)
    return CONFIG


def reset_config() -> Dict[str, Any]:
    """Restore the default configuration."""
    CONFIG.clear()
    CONFIG.update(copy.deepcopy(DEFAULT_CONFIG))
    return CONFIG


def load_config_file(path: str) -> Dict[str, Any]:
    """
    Merge a JSON configuration file into the configuration.

    Args:
        path: Path of the JSON file

    Returns:
        Dict[str, Any]: The updated configuration

    Raises:
        ConfigError: If the file cannot be read or holds unknown keys
    """
    try:
        with open(path, "r") as f:
            data = json.load(f)
    except OSError as e:
        raise ConfigError(f"Cannot read configuration file {path}: {e}")
    except json.JSONDecodeError as e:
        raise ConfigError(f"Invalid JSON in configuration file {path}: {e}")
    if not isinstance(data, dict):
        raise ConfigError(f"Configuration file {path} must hold a JSON object")
    return update_config(data)
