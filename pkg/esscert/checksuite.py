# Copyright (c) Microsoft Corporation.
# Licensed under the MIT license.

from typing import Dict, List, Optional, Type

from esscert import schema
from esscert.report import Section
from esscert.sseq import SpectralPipeline
from esscert.util import ConfigurationException, EsscertException
from esscert.util.logger import Logger, get_logger

_all_groups: Dict[str, "CheckGroupMetadata"] = {}


class CheckGroup:
    """
    A named set of checks. Subclasses compute their sections in run(), the data
    comes from the shared pipeline, so a group can run alone.
    """

    def __init__(
        self,
        metadata: "CheckGroupMetadata",
        pipeline: SpectralPipeline,
        config: schema.Config,
    ) -> None:
        self.metadata = metadata
        self.pipeline = pipeline
        self.config = config
        self.log: Logger = get_logger("check", metadata.name)

    def run(self) -> List[Section]:
        raise NotImplementedError()


class CheckGroupMetadata:
    def __init__(
        self,
        name: str,
        order: int,
        description: str,
        requires: Optional[List[str]] = None,
        min_pmax: int = 0,
        min_qmax: int = 0,
    ) -> None:
        self.name = name
        self.order = order
        self.description = description
        self.requires: List[str] = requires if requires else []
        self.min_pmax = min_pmax
        self.min_qmax = min_qmax

    def __call__(self, group_class: Type[CheckGroup]) -> Type[CheckGroup]:
        self.group_class = group_class
        _add_group_metadata(self)
        return group_class

    def __repr__(self) -> str:
        return f"{self.name}({self.order})"

    def check_window(self, config: schema.Config) -> None:
        if config.pmax < self.min_pmax or config.qmax < self.min_qmax:
            raise ConfigurationException(
                f"check group '{self.name}' needs pmax >= {self.min_pmax} and "
                f"qmax >= {self.min_qmax}, but the window is pmax = {config.pmax}, "
                f"qmax = {config.qmax}"
            )

    def create(self, pipeline: SpectralPipeline, config: schema.Config) -> CheckGroup:
        return self.group_class(self, pipeline, config)


def get_groups_metadata() -> Dict[str, CheckGroupMetadata]:
    return _all_groups


def _add_group_metadata(metadata: CheckGroupMetadata) -> None:
    exist_metadata = _all_groups.get(metadata.name)
    if exist_metadata is not None:
        raise EsscertException(
            f"duplicate check group: {metadata.name}, "
            f"new: [{metadata.group_class}], exists: [{exist_metadata.group_class}]"
        )
    _all_groups[metadata.name] = metadata
    log = get_logger("init", "check")
    log.debug(f"registered check group '{metadata.name}'")


def validate_requirements(groups: Dict[str, CheckGroupMetadata]) -> None:
    """
    A group runs after the groups it requires, so their order must be smaller.
    """
    for metadata in groups.values():
        for required in metadata.requires:
            required_metadata = groups.get(required)
            if required_metadata is None:
                raise EsscertException(
                    f"check group '{metadata.name}' requires unknown group "
                    f"'{required}'"
                )
            if required_metadata.order >= metadata.order:
                raise EsscertException(
                    f"check group '{metadata.name}' must be ordered after "
                    f"'{required}'"
                )
