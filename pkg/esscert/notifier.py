# Copyright (c) Microsoft Corporation.
# Licensed under the MIT license.

import threading
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Deque, Dict, List, Type

from esscert import schema
from esscert.report import CheckStatus
from esscert.util import InitializableMixin, constants, subclasses
from esscert.util.logger import get_logger


@dataclass
class MessageBase:
    type: str = ""
    elapsed: float = 0


RunStatus = Enum(
    "RunStatus",
    [
        "INITIALIZING",
        "RUNNING",
        "SUCCESS",
        "FAILED",
    ],
)


@dataclass
class RunMessage(MessageBase):
    type: str = "Run"
    status: RunStatus = RunStatus.INITIALIZING
    groups: List[str] = field(default_factory=list)
    run_name: str = ""
    message: str = ""


@dataclass
class CheckResultMessage(MessageBase):
    type: str = "CheckResult"
    id_: str = ""
    group: str = ""
    status: CheckStatus = CheckStatus.PASS
    message: str = ""


class Notifier(subclasses.BaseClassWithSchemaMixin, InitializableMixin):
    def __init__(self, runbook: schema.TypedSchema) -> None:
        super().__init__(runbook=runbook)
        self._log = get_logger("notifier", self.__class__.__name__)

    def finalize(self) -> None:
        """
        The run is done, save or release what the notifier holds. It's called
        even if the run failed.
        """
        pass

    def _subscribed_message_type(self) -> List[Type[MessageBase]]:
        raise NotImplementedError("must specify supported message types")

    def _received_message(self, message: MessageBase) -> None:
        raise NotImplementedError

    def _initialize(self, *args: Any, **kwargs: Any) -> None:
        pass


_notifiers: List[Notifier] = []
_messages: Dict[type, List[Notifier]] = {}
# page builders and group threads send concurrently, a single thread delivers.
_pending: Deque[MessageBase] = deque()
_pending_lock = threading.Lock()
_delivering_lock = threading.Lock()


def initialize(runbooks: List[schema.Notifier]) -> None:
    factory = subclasses.Factory[Notifier](Notifier)
    log = get_logger("init", "notifier")
    runbooks = list(runbooks)
    if not any(x for x in runbooks if x.type == constants.NOTIFIER_CONSOLE):
        runbooks.append(schema.Notifier(type=constants.NOTIFIER_CONSOLE))
    for runbook in runbooks:
        if not runbook.enabled:
            log.debug(f"skipped notifier [{runbook.type}], because it's not enabled.")
            continue

        notifier = factory.create_by_runbook(runbook=runbook)
        _notifiers.append(notifier)

        subscribed_message_types = notifier._subscribed_message_type()
        for message_type in subscribed_message_types:
            _messages.setdefault(message_type, []).append(notifier)
        log.debug(
            f"registered [{notifier.type_name()}] "
            f"on messages: {[x.__name__ for x in subscribed_message_types]}"
        )

        notifier.initialize()


def notify(message: MessageBase) -> None:
    with _pending_lock:
        _pending.append(message)
    # whoever holds the delivering lock drains messages queued by others too.
    while _pending and _delivering_lock.acquire(blocking=False):
        try:
            while True:
                with _pending_lock:
                    if not _pending:
                        break
                    current = _pending.popleft()
                for notifier in _messages.get(type(current), []):
                    notifier._received_message(message=current)
        finally:
            _delivering_lock.release()


def finalize() -> None:
    for notifier in _notifiers:
        try:
            notifier.finalize()
        except Exception as identifier:
            notifier._log.exception(identifier)
    # a new run registers its notifiers again.
    _notifiers.clear()
    _messages.clear()
    with _pending_lock:
        _pending.clear()
