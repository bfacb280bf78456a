#!/usr/bin/env python
# -*- coding: utf-8 -*-

import pytest

from src.config import CIRunConfig, LocalRunConfig, get_config_by_name, get_run_config
from src.errors import ArgumentError


class TestThreads:

    def test_explicit_count(self, monkeypatch):
        monkeypatch.setenv('FERMAT_TORUS_THREADS', '3')
        assert get_run_config().THREADS == 3

    def test_unset_uses_cpu_count(self, monkeypatch):
        monkeypatch.delenv('FERMAT_TORUS_THREADS')
        monkeypatch.setattr('os.cpu_count', lambda: 6)
        assert get_run_config().THREADS == 6

    @pytest.mark.parametrize("raw", ['0', '-2', 'many', '1.5'])
    def test_invalid(self, monkeypatch, raw):
        monkeypatch.setenv('FERMAT_TORUS_THREADS', raw)
        with pytest.raises(ArgumentError):
            get_run_config()


class TestEnvironments:

    def test_default_is_local(self):
        config = get_run_config()
        assert isinstance(config, LocalRunConfig)
        assert config.LOG_LEVEL == 'WARNING'
        assert not config.log_to_file

    def test_ci(self, monkeypatch):
        monkeypatch.setenv('FERMAT_TORUS_ENV', 'ci')
        config = get_run_config()
        assert isinstance(config, CIRunConfig)
        assert config.LOG_LEVEL == 'INFO'

    def test_production_falls_back_to_local(self):
        config = get_config_by_name('production')
        assert config.ENV == 'local'

    def test_production_with_required_vars(self, monkeypatch, tmp_path):
        monkeypatch.setenv('FERMAT_TORUS_LOG_DIR', str(tmp_path))
        config = get_config_by_name('production')
        assert config.ENV == 'production'
        assert config.log_to_file

    def test_unknown_name_is_local(self):
        assert get_config_by_name('staging').ENV == 'local'

    def test_invalid_log_level(self, monkeypatch):
        monkeypatch.setenv('FERMAT_TORUS_LOG_LEVEL', 'loud')
        with pytest.raises(ArgumentError):
            get_run_config()

    def test_to_dict(self, monkeypatch):
        config = get_run_config()
        data = config.to_dict()
        assert data['THREADS'] == 2
        assert data['APP_NAME'] == 'fermat_torus'
