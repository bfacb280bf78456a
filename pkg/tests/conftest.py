#!/usr/bin/env python
# -*- coding: utf-8 -*-

import os
import sys

import pytest

# 添加项目根目录到 Python 路径
current_dir = os.path.dirname(os.path.abspath(__file__))
project_root = os.path.dirname(current_dir)
sys.path.insert(0, project_root)


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    """每个测试使用干净的环境变量，线程数固定为2"""
    for var in ('FERMAT_TORUS_ENV', 'FERMAT_TORUS_LOG_LEVEL', 'FERMAT_TORUS_LOG_DIR'):
        monkeypatch.delenv(var, raising=False)
    monkeypatch.setenv('FERMAT_TORUS_THREADS', '2')


@pytest.fixture
def torus():
    from src.torus import Torus
    return Torus(2.0, 1.0)
