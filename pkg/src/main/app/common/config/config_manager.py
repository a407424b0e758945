import os
from functools import lru_cache

from src.main.app.common.config.config import Config
from src.main.app.common.config.config_loader import ConfigLoader


@lru_cache
def load_config() -> Config:
    """
    Loads the configuration selected by the ENV and CONFIG_FILE environment variables.

    Returns:
        Config: A configuration object populated with the loaded settings.
    """
    env = os.getenv("ENV", "dev")

    config_file = os.getenv("CONFIG_FILE", None)
    config_loader = ConfigLoader(env, config_file)
    config_dict = config_loader.load_config()
    return Config(config_dict)
