"""
Configuration manager for coxhurwitz settings.

Handles loading, saving, and accessing configuration values. Search budgets
can be overridden through the COXHURWITZ_BUDGET environment variable.
"""

import copy
import json
import os
from pathlib import Path
from typing import Any, Dict, Optional
import logging

from .error_handler import ConfigurationError

logger = logging.getLogger(__name__)

BUDGET_ENV_VAR = "COXHURWITZ_BUDGET"

# Size budgets affected by BUDGET_ENV_VAR
_SIZE_BUDGET_KEYS = (
    "search.orbit_budget",
    "search.closure_budget",
    "search.enumeration_budget",
)


class ConfigManager:
    """Manages coxhurwitz configuration."""
    
    DEFAULT_CONFIG = {
        "search": {
            "word_length_budget": 16,
            "orbit_budget": 100000,
            "closure_budget": 100000,
            "enumeration_budget": 100000,
            "descent_search_limit": 1000,
            "cache_size": 200000
        },
        "scalar": {
            "initial_precision_bits": 53,
            "max_precision_bits": 8192,
            "check_real_subfield": True
        },
        "checks": {
            "straighten_samples": 1000,
            "max_start_length": 6,
            "seed": 20240101
        },
        "groups": {
            "directory": "config/groups"
        },
        "logging": {
            "level": "INFO"
        }
    }
    
    def __init__(self, config_file: Optional[Path] = None, use_environment: bool = True):
        """
        Initialize configuration manager.
        
        Args:
            config_file: Path to a JSON file merged over the defaults
                         (None = defaults only)
            use_environment: Whether to apply COXHURWITZ_BUDGET
        """
        self.config_file = config_file
        self.config: Dict[str, Any] = copy.deepcopy(self.DEFAULT_CONFIG)
        self.load()
        if use_environment:
            self._apply_environment()
    
    def load(self) -> None:
        """Load configuration from file."""
        if self.config_file is None:
            logger.debug("No config file given. Using defaults.")
            return
        
        if self.config_file.exists():
            try:
                with open(self.config_file, 'r') as f:
                    user_config = json.load(f)
            except (OSError, json.JSONDecodeError) as e:
                raise ConfigurationError(f"Failed to load config {self.config_file}: {e}")
            
            # Merge with defaults (user config overrides defaults)
            self._merge_config(self.config, user_config)
            logger.info(f"Loaded configuration from {self.config_file}")
        else:
            logger.warning(f"Config file {self.config_file} not found. Using defaults.")
    
    def save(self, path: Optional[Path] = None) -> None:
        """Save configuration to file."""
        target = path or self.config_file
        if target is None:
            raise ConfigurationError("No config file to save to")
        target.parent.mkdir(parents=True, exist_ok=True)
        with open(target, 'w') as f:
            json.dump(self.config, f, indent=2)
        logger.info(f"Saved configuration to {target}")
    
    def get(self, key_path: str, default: Any = None) -> Any:
        """
        Get a configuration value using dot notation.
        
        Args:
            key_path: Dot-separated path (e.g., "search.orbit_budget")
            default: Default value if key not found
            
        Returns:
            Configuration value
        """
        keys = key_path.split('.')
        value = self.config
        
        for key in keys:
            if isinstance(value, dict) and key in value:
                value = value[key]
            else:
                return default
        
        return value
    
    def get_int(self, key_path: str) -> int:
        """Get a positive integer setting, raising ConfigurationError otherwise."""
        value = self.get(key_path)
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            raise ConfigurationError(f"Setting {key_path} must be a positive integer, got {value!r}")
        return value
    
    def set(self, key_path: str, value: Any) -> None:
        """
        Set a configuration value using dot notation.
        
        Args:
            key_path: Dot-separated path (e.g., "search.orbit_budget")
            value: Value to set
        """
        keys = key_path.split('.')
        config = self.config
        
        # Navigate to the parent dict
        for key in keys[:-1]:
            if key not in config:
                config[key] = {}
            config = config[key]
        
        config[keys[-1]] = value
    
    def _apply_environment(self) -> None:
        """Apply the COXHURWITZ_BUDGET override to the size budgets."""
        raw = os.environ.get(BUDGET_ENV_VAR)
        if raw is None or raw.strip() == "":
            return
        try:
            budget = int(raw)
        except ValueError:
            raise ConfigurationError(f"{BUDGET_ENV_VAR} must be a positive integer, got {raw!r}")
        if budget < 1:
            raise ConfigurationError(f"{BUDGET_ENV_VAR} must be a positive integer, got {raw!r}")
        
        for key in _SIZE_BUDGET_KEYS:
            self.set(key, budget)
        logger.info(f"{BUDGET_ENV_VAR}={budget} overrides the search budgets")
    
    def _merge_config(self, base: Dict, override: Dict) -> None:
        """
        Recursively merge override config into base config.
        
        Args:
            base: Base configuration dict
            override: Override configuration dict
        """
        for key, value in override.items():
            if key in base and isinstance(base[key], dict) and isinstance(value, dict):
                self._merge_config(base[key], value)
            else:
                base[key] = value


_active_config: Optional[ConfigManager] = None


def get_config() -> ConfigManager:
    """Return the process-wide configuration, creating it on first use."""
    global _active_config
    if _active_config is None:
        _active_config = ConfigManager()
    return _active_config


def set_config(config: Optional[ConfigManager]) -> None:
    """Install a configuration as the process-wide one (None resets to defaults)."""
    global _active_config
    _active_config = config
