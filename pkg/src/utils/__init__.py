#!/usr/bin/env python
# -*- coding: utf-8 -*-

from .logging_config import LoggingConfig, RunContext, ContextFilter

__all__ = ['LoggingConfig', 'RunContext', 'ContextFilter']
