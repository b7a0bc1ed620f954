# Copyright (c) Microsoft Corporation.
# Licensed under the MIT license.

from pathlib import Path
from typing import Any, List, Type

from esscert import notifier, schema
from esscert.runner import print_results
from esscert.util import EsscertException, constants


class TextResult(notifier.Notifier):
    """
    Writes the check results as an aligned text file into the run folder, it's
    shorter to read than the log.
    """

    @classmethod
    def type_name(cls) -> str:
        return constants.NOTIFIER_TEXT_RESULT

    @classmethod
    def type_schema(cls) -> Type[schema.TypedSchema]:
        return schema.Notifier

    def _received_message(self, message: notifier.MessageBase) -> None:
        if isinstance(message, notifier.CheckResultMessage):
            self.received_messages.append(message)
        else:
            raise EsscertException("Received unsubscribed message type")

    def _subscribed_message_type(self) -> List[Type[notifier.MessageBase]]:
        return [notifier.CheckResultMessage]

    def _initialize(self, *args: Any, **kwargs: Any) -> None:
        self.result_path = Path(
            f"{constants.RUN_LOCAL_PATH}/esscert-{constants.RUN_ID}-result.txt"
        )
        if self.result_path.exists():
            raise EsscertException(f"File already exists: {self.result_path}")

        self.received_messages: List[notifier.CheckResultMessage] = []

    def finalize(self) -> None:
        with open(self.result_path, "w") as result_file:
            print_results(
                self.received_messages, lambda line: result_file.write(f"{line}\n")
            )
