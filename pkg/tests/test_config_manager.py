"""
Unit tests for configuration, logging and error handling.
"""

import json
import logging

import pytest

from utils.bounded_cache import BoundedCache
from utils.config_manager import BUDGET_ENV_VAR, ConfigManager, get_config, set_config
from utils.error_handler import (
    BudgetError,
    ConfigurationError,
    ContractError,
    GroupFileParseError,
    InternalError,
    ValidationError,
    handle_error,
)
from utils.logger import HANDLER_TAG, setup_logger


class TestConfigManager:
    """Test ConfigManager class."""

    def teardown_method(self):
        set_config(None)

    def test_defaults(self, monkeypatch):
        monkeypatch.delenv(BUDGET_ENV_VAR, raising=False)
        config = ConfigManager()
        assert config.get("search.orbit_budget") == 100000
        assert config.get("checks.straighten_samples") == 1000
        assert config.get("missing.key", "fallback") == "fallback"

    def test_file_overrides_defaults(self, tmp_path, monkeypatch):
        monkeypatch.delenv(BUDGET_ENV_VAR, raising=False)
        path = tmp_path / "config.json"
        path.write_text(json.dumps({"search": {"orbit_budget": 50}}))
        config = ConfigManager(path)
        assert config.get("search.orbit_budget") == 50
        assert config.get("search.closure_budget") == 100000

    def test_environment_budget(self, monkeypatch):
        monkeypatch.setenv(BUDGET_ENV_VAR, "77")
        config = ConfigManager()
        assert config.get("search.orbit_budget") == 77
        assert config.get("search.enumeration_budget") == 77
        assert config.get("search.word_length_budget") == 16

    def test_bad_environment_budget(self, monkeypatch):
        monkeypatch.setenv(BUDGET_ENV_VAR, "lots")
        with pytest.raises(ConfigurationError):
            ConfigManager()

    def test_get_int(self):
        config = ConfigManager(use_environment=False)
        config.set("search.orbit_budget", 0)
        with pytest.raises(ConfigurationError):
            config.get_int("search.orbit_budget")

    def test_save_and_load(self, tmp_path):
        path = tmp_path / "nested" / "config.json"
        config = ConfigManager(path, use_environment=False)
        config.set("checks.seed", 99)
        config.save()
        assert ConfigManager(path, use_environment=False).get("checks.seed") == 99

    def test_broken_file(self, tmp_path):
        path = tmp_path / "config.json"
        path.write_text("{not json")
        with pytest.raises(ConfigurationError):
            ConfigManager(path)

    def test_active_config(self):
        config = ConfigManager(use_environment=False)
        set_config(config)
        assert get_config() is config
        set_config(None)
        assert get_config() is not config


class TestErrors:
    """Test the exception hierarchy and user messages."""

    def test_contract_error(self):
        error = ContractError("t1 != t2", "both s1")
        assert error.precondition == "t1 != t2"
        assert str(error) == "Precondition violated: t1 != t2 (both s1)"

    def test_budget_error_partial(self):
        error = BudgetError("too big", partial=[1, 2])
        assert error.partial == [1, 2]
        assert "--budget" in error.user_message

    def test_parse_error(self):
        error = GroupFileParseError(4, "duplicate pair 1 2")
        assert str(error) == "line 4: duplicate pair 1 2"
        assert error.line_number == 4

    def test_handle_error(self, caplog):
        with caplog.at_level(logging.WARNING):
            message = handle_error(ValidationError("asymmetric"))
        assert "symmetric" in message
        assert "ValidationError" in caplog.text

    def test_handle_unexpected_error(self):
        message = handle_error(RuntimeError("boom"))
        assert "unexpected" in message
        assert "boom" in message

    def test_internal_error_message(self):
        assert "bug" in InternalError("pivot mismatch").user_message


class TestLogger:
    """Test logger setup."""

    def test_handlers_are_not_stacked(self, tmp_path):
        logger = setup_logger("coxhurwitz.test", log_file=tmp_path / "a.log")
        setup_logger("coxhurwitz.test", log_file=tmp_path / "a.log", level=logging.DEBUG)
        own = [h for h in logger.handlers if getattr(h, HANDLER_TAG, False)]
        assert len(own) == 2
        assert all(h.level == logging.DEBUG for h in own)
        logger.debug("hello")
        assert "hello" in (tmp_path / "a.log").read_text()
        for handler in own:
            logger.removeHandler(handler)
            handler.close()


class TestBoundedCache:
    """Test the size-capped memo table."""

    def test_evicts_oldest(self):
        cache = BoundedCache(2)
        cache["a"] = 1
        cache["b"] = 2
        cache["c"] = 3
        assert list(cache) == ["b", "c"]

    def test_lookup_refreshes(self):
        cache = BoundedCache(2)
        cache["a"] = 1
        cache["b"] = 2
        assert cache["a"] == 1
        cache["c"] = 3
        assert "a" in cache
        assert "b" not in cache

    def test_get_refreshes(self):
        cache = BoundedCache(2)
        cache["a"] = 1
        cache["b"] = 2
        assert cache.get("a") == 1
        assert cache.get("missing", 0) == 0
        cache["c"] = 3
        assert set(cache) == {"a", "c"}

    def test_overwrite_keeps_size(self):
        cache = BoundedCache(2)
        cache["a"] = 1
        cache["a"] = 5
        cache["b"] = 2
        assert dict(cache) == {"a": 5, "b": 2}

    @pytest.mark.parametrize("maxsize", [0, -3])
    def test_non_positive_size(self, maxsize):
        with pytest.raises(ValueError):
            BoundedCache(maxsize)

    def test_cache_size_default(self):
        assert ConfigManager(use_environment=False).get_int("search.cache_size") == 200000


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
