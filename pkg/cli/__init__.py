#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""命令行入口：python -m cli <命令> ..."""

from .app import run, main, build_parser, EXIT_OK, EXIT_USAGE, EXIT_NUMERICAL

__all__ = ['run', 'main', 'build_parser', 'EXIT_OK', 'EXIT_USAGE', 'EXIT_NUMERICAL']
