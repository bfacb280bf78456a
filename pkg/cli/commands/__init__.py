#!/usr/bin/env python
# -*- coding: utf-8 -*-

from . import curve, torus, search

# 注册顺序即帮助信息中的命令顺序
COMMAND_MODULES = (curve, torus, search)

VERBS = ('curve', 'kinematics', 'geodesic', 'map-line', 'density', 'search', 'triples', 'intersect')


def register_all(subparsers) -> None:
    """把各命令组注册到子命令解析器"""
    for module in COMMAND_MODULES:
        module.register(subparsers)


__all__ = ['COMMAND_MODULES', 'VERBS', 'register_all']
