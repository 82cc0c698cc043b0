import json
import os
import logging
from typing import Dict, Any
from ..utils.appdata import get_appdata_dir
from ..utils.helpers import is_truthy

logger = logging.getLogger(__name__)

CONFIG_ENV = "PERMUTOLATTICE_CONFIG"

DEFAULTS: Dict[str, Any] = {
    "debug": False,
    "max_order": 7,
    "max_regions": 50000,
    "dnf_term_limit": 1000000,
    "sample_denominator": 1000,
    "default_samples": 20,
    "default_seed": 0,
}


class Configuration:
    def __init__(self, config_file: str | None = None):
        if config_file is None:
            config_file = os.environ.get(CONFIG_ENV) or os.path.join(get_appdata_dir(), "config.json")
        self.config_file = config_file
        self.data: Dict[str, Any] = {}
        self.load()

    def load(self):
        if not os.path.exists(self.config_file):
            logger.info("Config file not found. Using defaults.")
            self.data = {}
            return

        try:
            with open(self.config_file, 'r') as f:
                loaded = json.load(f)
            if not isinstance(loaded, dict):
                raise ValueError("top-level JSON value is not an object")
            self.data = loaded
            logger.info(f"Configuration loaded from {self.config_file}.")
        except Exception as e:
            logger.error(f"Failed to load configuration: {e}")
            self.data = {}

    def save(self):
        try:
            directory = os.path.dirname(self.config_file)
            if directory:
                os.makedirs(directory, exist_ok=True)
            with open(self.config_file, 'w') as f:
                json.dump(self.data, f, indent=4)
            logger.info("Configuration saved.")
        except Exception as e:
            logger.error(f"Failed to save configuration: {e}")

    def get(self, key: str, default: Any = None) -> Any:
        if default is None:
            default = DEFAULTS.get(key)
        return self.data.get(key, default)

    def set(self, key: str, value: Any):
        self.data[key] = value
        self.save()

    def get_bool(self, key: str, default: bool = False) -> bool:
        return is_truthy(self.data.get(key, DEFAULTS.get(key, default)))

    def get_int(self, key: str, default: int | None = None) -> int:
        fallback = DEFAULTS.get(key) if default is None else default
        val = self.data.get(key, fallback)
        try:
            return int(val)
        except (TypeError, ValueError):
            logger.warning(f"Config key '{key}' is not an integer ({val!r}); using {fallback}.")
            return int(fallback)


# Global instance
config = Configuration()
