# Copyright (c) Microsoft Corporation.
# Licensed under the MIT license.

from functools import partial
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from marshmallow import ValidationError

from esscert import schema
from esscert.util import ConfigurationException, deep_update_dict
from esscert.util.logger import get_logger

_get_init_logger = partial(get_logger, "init", "config")


class ConfigBuilder:
    """
    Merges an optional YAML config file with command line overrides. Overrides
    with value None are not set on the command line, and are ignored.
    """

    def __init__(
        self, path: Optional[Path], overrides: Optional[Dict[str, Any]] = None
    ) -> None:
        self._log = _get_init_logger()
        self._path = path
        self._overrides = overrides if overrides else {}
        self._raw_data: Dict[str, Any] = {}

    @property
    def raw_data(self) -> Dict[str, Any]:
        return self._raw_data

    @staticmethod
    def from_path(
        path: Optional[Path], overrides: Optional[Dict[str, Any]] = None
    ) -> schema.Config:
        builder = ConfigBuilder(path=path, overrides=overrides)
        data = builder._load_data()
        return builder.resolve(data)

    def resolve(self, data: Dict[str, Any]) -> schema.Config:
        overrides = {
            key: value for key, value in self._overrides.items() if value is not None
        }
        self._raw_data = deep_update_dict(overrides, data)
        try:
            config: schema.Config = schema.Config.schema().load(  # type: ignore
                self._raw_data
            )
        except ValidationError as identifier:
            raise ConfigurationException(f"invalid config: {identifier.messages}")
        self._log.debug(f"resolved config: {config}")
        return config

    def _load_data(self) -> Dict[str, Any]:
        if self._path is None:
            return {}
        path = self._path.absolute()
        if not path.exists():
            raise ConfigurationException(f"cannot find config file: {path}")
        self._log.info(f"loading config: {path}")
        with open(path, "r") as file:
            data = yaml.safe_load(file)
        if data is None:
            data = {}
        if not isinstance(data, dict):
            raise ConfigurationException(
                f"config file must contain a mapping, but got {type(data).__name__}"
            )
        return data
