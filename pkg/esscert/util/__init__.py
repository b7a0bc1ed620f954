# Copyright (c) Microsoft Corporation.
# Licensed under the MIT license.

from datetime import datetime
from typing import Any, Callable, Dict, Optional, cast

import pluggy
from dataclasses_json import config
from marshmallow import fields

# hooks manager helper, they must be same name.
_NAME_ESSCERT = "esscert"
plugin_manager = pluggy.PluginManager(_NAME_ESSCERT)
hookspec = pluggy.HookspecMarker(_NAME_ESSCERT)
hookimpl = pluggy.HookimplMarker(_NAME_ESSCERT)


class EsscertException(Exception):
    ...


class DomainException(EsscertException):
    """
    An operation received input outside of its mathematical domain, for example the
    inverse of zero, or an element that is not homogeneous where a bidegree slice is
    expected.
    """

    ...


class WindowException(DomainException):
    """
    A bidegree, or one of the neighbours a differential needs, lies outside of the
    computed window.
    """

    ...


class NotACycleException(DomainException):
    """
    Raised when a class is requested for an element whose outgoing differential is
    not zero.
    """

    def __init__(self, element: str, bidegree: Any) -> None:
        self.element = element
        self.bidegree = bidegree

    def __str__(self) -> str:
        return f"'{self.element}' at {self.bidegree} is not a cycle"


class ConfigurationException(EsscertException):
    ...


class CheckFailedException(EsscertException):
    """
    An internal self check doesn't hold. The runner reports it as a failed check
    instead of crashing.
    """

    ...


class InitializableMixin:
    """
    Delays expensive setup until first use. initialize runs _initialize once, a
    failed attempt can be retried.
    """

    def __init__(self) -> None:
        super().__init__()
        self._is_initialized: bool = False

    def _initialize(self, *args: Any, **kwargs: Any) -> None:
        raise NotImplementedError()

    def initialize(self, *args: Any, **kwargs: Any) -> None:
        """
        This is for caller, do not override it.
        """
        if not self._is_initialized:
            try:
                self._is_initialized = True
                self._initialize(*args, **kwargs)
            except Exception as identifier:
                self._is_initialized = False
                raise identifier


class BaseClassMixin:
    @classmethod
    def type_name(cls) -> str:
        raise NotImplementedError()


def get_datetime_path(current: Optional[datetime] = None) -> str:
    # run folders sort by name, with milliseconds.
    current = current or datetime.utcnow()
    return current.strftime("%Y%m%d-%H%M%S-%f")[:-3]


def deep_update_dict(src: Dict[str, Any], dest: Dict[str, Any]) -> Dict[str, Any]:
    result = dest.copy()
    for key, value in src.items():
        if isinstance(value, dict) and isinstance(dest.get(key), dict):
            value = deep_update_dict(value, dest[key])
        result[key] = value
    return result


def field_metadata(
    field_function: Optional[Callable[..., Any]] = None, *args: Any, **kwargs: Any
) -> Any:
    """
    wrap for shorter
    """
    if field_function is None:
        field_function = fields.Raw
    assert field_function
    encoder = kwargs.pop("encoder", None)
    decoder = kwargs.pop("decoder", None)
    # keep data_key for underlying marshmallow
    field_name = kwargs.get("data_key")
    return config(
        field_name=cast(str, field_name),
        encoder=encoder,
        decoder=decoder,
        mm_field=field_function(*args, **kwargs),
    )
