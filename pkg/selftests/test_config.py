# Copyright (c) Microsoft Corporation.
# Licensed under the MIT license.

from pathlib import Path
from tempfile import TemporaryDirectory
from unittest import TestCase

from assertpy import assert_that

from esscert import schema
from esscert.parameter_parser.config import ConfigBuilder
from esscert.util import ConfigurationException, constants, deep_update_dict


class ConfigTestCase(TestCase):
    def setUp(self) -> None:
        self._folder = TemporaryDirectory()
        self._root = Path(self._folder.name)

    def tearDown(self) -> None:
        self._folder.cleanup()

    def _write(self, content: str) -> Path:
        path = self._root / "esscert.yml"
        path.write_text(content, encoding="utf-8")
        return path

    def test_defaults(self) -> None:
        config = ConfigBuilder.from_path(None)
        self.assertEqual(constants.DEFAULT_PMAX, config.pmax)
        self.assertEqual(constants.DEFAULT_QMAX, config.qmax)
        self.assertEqual(constants.FORMAT_TEXT, config.format)
        assert_that(config.only).is_empty()
        assert_that(config.notifier).is_empty()

    def test_overrides(self) -> None:
        config = ConfigBuilder.from_path(None, {"pmax": 5, "qmax": None})
        self.assertEqual(5, config.pmax)
        self.assertEqual(constants.DEFAULT_QMAX, config.qmax)

    def test_file(self) -> None:
        path = self._write(
            "pmax: 14\n"
            "qmax: 10\n"
            "only: [group, e3]\n"
            "notifier:\n"
            "  - type: console\n"
            "    log_level: INFO\n"
        )
        config = ConfigBuilder.from_path(path, {"pmax": 16, "format": None})
        self.assertEqual(16, config.pmax)
        self.assertEqual(10, config.qmax)
        self.assertEqual(["group", "e3"], config.only)
        assert_that(config.notifier).is_length(1)
        self.assertEqual(constants.NOTIFIER_CONSOLE, config.notifier[0].type)
        assert_that(config.notifier[0].enabled).is_true()

    def test_empty_file(self) -> None:
        config = ConfigBuilder.from_path(self._write(""))
        self.assertEqual(constants.DEFAULT_PMAX, config.pmax)

    def test_missing_file(self) -> None:
        assert_that(ConfigBuilder.from_path).raises(
            ConfigurationException
        ).when_called_with(self._root / "missing.yml")

    def test_not_a_mapping(self) -> None:
        assert_that(ConfigBuilder.from_path).raises(
            ConfigurationException
        ).when_called_with(self._write("- pmax\n- qmax\n"))

    def test_invalid_values(self) -> None:
        for overrides in [{"pmax": 0}, {"format": "xml"}, {"seed": -1}]:
            assert_that(ConfigBuilder.from_path).raises(
                ConfigurationException
            ).when_called_with(None, overrides)

    def test_raw_data(self) -> None:
        builder = ConfigBuilder(None, {"seed": 3})
        config = builder.resolve({"seed": 1, "qmax": 8})
        self.assertEqual(3, config.seed)
        self.assertEqual({"seed": 3, "qmax": 8}, builder.raw_data)


class SchemaTestCase(TestCase):
    def test_load_notifier(self) -> None:
        runbook = schema.load_by_type(schema.Notifier, {"type": "text_result"})
        self.assertEqual("text_result", runbook.type)
        assert_that(schema.load_by_type(schema.Notifier, runbook)).is_same_as(runbook)

    def test_deep_update(self) -> None:
        result = deep_update_dict(
            {"a": {"b": 2}, "c": 3}, {"a": {"b": 1, "d": 4}, "e": 5}
        )
        self.assertEqual({"a": {"b": 2, "d": 4}, "c": 3, "e": 5}, result)
