# Copyright (c) Microsoft Corporation.
# Licensed under the MIT license.

from dataclasses import dataclass, field
from typing import Any, List, Type, TypeVar, cast

from dataclasses_json import CatchAll, Undefined, dataclass_json
from marshmallow import fields, validate

from esscert.util import constants, field_metadata

"""
Schema is dealt with three components,
1. dataclasses. It defines the fields of a config, field() describes a field.
2. dataclasses_json. Serializer, customized by config().
3. marshmallow. Validator, wrapped by dataclasses_json. It's set by
   field_metadata(validate=...).
"""

T = TypeVar("T")


@dataclass_json()
@dataclass
class TypedSchema:
    type: str = field(default="", metadata=field_metadata(required=True))


@dataclass_json(undefined=Undefined.INCLUDE)
@dataclass
class ExtendableSchemaMixin:
    # fields of subclass schemas, they are loaded again by the subclass type.
    extended_schemas: CatchAll = field(default_factory=dict)  # type: ignore


@dataclass_json(undefined=Undefined.INCLUDE)
@dataclass
class Notifier(TypedSchema, ExtendableSchemaMixin):
    """
    It receives check results and run messages. Detail types are defined in the
    notifiers themselves.
    """

    # a disabled notifier is not created.
    enabled: bool = True


def _positive(default: int) -> Any:
    return field(
        default=default,
        metadata=field_metadata(fields.Int, validate=validate.Range(min=1)),
    )


@dataclass_json()
@dataclass
class Config:
    """
    The window and the selection of a run. The full suite needs pmax >= 14 and
    qmax >= 10, each check group declares its own minimum.
    """

    pmax: int = _positive(constants.DEFAULT_PMAX)
    qmax: int = _positive(constants.DEFAULT_QMAX)
    # E2 is free, so the E2 -> E3 check uses a smaller window.
    e3_pmax: int = _positive(constants.DEFAULT_E3_PMAX)
    e3_qmax: int = _positive(constants.DEFAULT_E3_QMAX)
    format: str = field(
        default=constants.FORMAT_TEXT,
        metadata=field_metadata(
            validate=validate.OneOf([constants.FORMAT_TEXT, constants.FORMAT_JSON])
        ),
    )
    only: List[str] = field(default_factory=list)
    seed: int = field(
        default=constants.DEFAULT_SEED,
        metadata=field_metadata(fields.Int, validate=validate.Range(min=0)),
    )
    equivariance_samples: int = _positive(constants.DEFAULT_EQUIVARIANCE_SAMPLES)
    product_rule_samples: int = _positive(constants.DEFAULT_PRODUCT_RULE_SAMPLES)
    concurrency: int = _positive(1)
    group_timeout: int = _positive(constants.DEFAULT_GROUP_TIMEOUT)
    notifier: List[Notifier] = field(default_factory=list)


def load_by_type(schema_type: Type[T], raw_runbook: Any, many: bool = False) -> T:
    """
    Convert dict, list or base typed schema to specified typed schema.
    """
    if type(raw_runbook) == schema_type:
        return cast(T, raw_runbook)

    if not isinstance(raw_runbook, dict) and not many:
        raw_runbook = raw_runbook.to_dict()

    result: T = schema_type.schema().load(raw_runbook, many=many)  # type: ignore
    return result
