import os
from typing import Dict, Optional

import yaml

from src.main.app.common.enums.enum import ConstantCode, ResponseCode
from src.main.app.common.exception.exception import ServiceException
from src.main.app.common.util.work_path_util import resource_path

BASE_CONFIG_FILE = "config.yml"
SECTIONS = ("numerics", "simulator", "cli", "log")


class ConfigLoader:
    def __init__(self, env: str, base_config_file: Optional[str] = None) -> None:
        """
        Initializes a new instance of the ConfigLoader class

        Args:
            env (str): Name of the overlay merged over the bundled base file (e.g., 'dev', 'prod')
            base_config_file (str): A custom config file; when given, no overlay is applied
        """
        self.default_flag = base_config_file is None
        self.base_config_file = resource_path(BASE_CONFIG_FILE) if base_config_file is None else base_config_file
        self.config: Dict = {}
        self.env = env

    @staticmethod
    def load_yaml_file(file_path: str) -> Dict:
        """
        Load a YAML file holding a mapping of known sections.

        Args:
            file_path (str): The path to the YAML file to be loaded.

        Returns:
            Dict: The file contents, empty for an empty file.

        Raises:
            ServiceException: CONFIG_ERROR when the file is unreadable, is not valid YAML
                or names an unknown section.
        """
        try:
            with open(file_path, "r", encoding=ConstantCode.UTF_8) as file:
                content = yaml.safe_load(file) or {}
        except OSError as e:
            raise ServiceException.of(ResponseCode.CONFIG_ERROR, f"{file_path}: {e.strerror}")
        except yaml.YAMLError as e:
            raise ServiceException.of(ResponseCode.CONFIG_ERROR, f"{file_path}: {e}")
        if not isinstance(content, dict):
            raise ServiceException.of(ResponseCode.CONFIG_ERROR, f"{file_path}: top level must be a mapping")
        for key, value in content.items():
            if key not in SECTIONS:
                raise ServiceException.of(ResponseCode.CONFIG_ERROR, f"{file_path}: unknown section '{key}'")
            if value is not None and not isinstance(value, dict):
                raise ServiceException.of(ResponseCode.CONFIG_ERROR, f"{file_path}: section '{key}' must be a mapping")
        return content

    def merge_dicts(self, base_dict: Dict, override_dict: Optional[Dict]) -> Dict:
        """
        Merge two dictionaries, with values from the override_dict taking precedence.

        Args:
            base_dict (Dict): The base dictionary to merge values into.
            override_dict (Dict): The dictionary containing values to override.

        Returns:
            Dict: The merged dictionary.
        """
        if override_dict is None:
            return base_dict
        for key, value in override_dict.items():
            if isinstance(value, dict) and isinstance(base_dict.get(key), dict):
                base_dict[key] = self.merge_dicts(base_dict[key], value)
            else:
                base_dict[key] = value
        return base_dict

    def load_config(self, environment: Optional[str] = None) -> Dict:
        """
        Load the base file and, for the bundled base, merge the config-<environment>.yml overlay if present.

        Args:
            environment (str, optional): Overlay to merge, the instance's environment by default.

        Returns:
            Dict: The final merged configuration.
        """
        self.config = self.load_yaml_file(self.base_config_file)
        if self.default_flag:
            overlay_path = resource_path(f"config-{environment or self.env}.yml")
            if os.path.exists(overlay_path):
                self.config = self.merge_dicts(self.config, self.load_yaml_file(overlay_path))
        return self.config
