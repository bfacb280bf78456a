#!/usr/bin/env python
# -*- coding: utf-8 -*-

import logging
import os
import sys
import threading
from contextlib import contextmanager
from datetime import datetime
from typing import Any, Dict, Iterator, Optional

# 每个线程各自的运行上下文（命令、运行ID、分区编号）
_thread_local = threading.local()

_CONTEXT_FIELDS = ('command', 'run_id', 'partition')


class RunContext:
    """运行上下文，日志记录里的 [Cmd] [Run] [Part] 字段来自这里"""

    @staticmethod
    def get_context() -> Dict[str, Any]:
        """当前线程的上下文字典"""
        if not hasattr(_thread_local, 'context'):
            _thread_local.context = {}
        return _thread_local.context

    @staticmethod
    def set_context(command: Optional[str] = None, run_id: Optional[str] = None, **kwargs) -> None:
        """
        更新当前线程的上下文

        Args:
            command: 当前执行的命令（curve、geodesic、search ...）
            run_id: 本次运行的ID
            kwargs: 其他字段，例如 partition
        """
        context = RunContext.get_context()
        if command:
            context['command'] = command
        if run_id:
            context['run_id'] = run_id
        context.update(kwargs)

    @staticmethod
    def clear_context() -> None:
        _thread_local.context = {}

    @staticmethod
    @contextmanager
    def scope(**fields) -> Iterator[Dict[str, Any]]:
        """
        在 with 块内叠加上下文字段，退出时恢复进入前的上下文

        工作线程用它继承主线程的上下文并加上分区编号。

        Args:
            fields: 要叠加的字段

        Yields:
            Dict[str, Any]: 块内生效的上下文
        """
        saved = dict(RunContext.get_context())
        RunContext.get_context().update(fields)
        try:
            yield RunContext.get_context()
        finally:
            _thread_local.context = saved


class ContextFilter(logging.Filter):
    """把运行上下文写入日志记录，缺省字段记为 '-'"""

    def filter(self, record):
        context = RunContext.get_context()
        for field in _CONTEXT_FIELDS:
            setattr(record, field, context.get(field, '-'))
        return True


def _formatter(detailed: bool) -> logging.Formatter:
    prefix = '%(asctime)s - [Cmd:%(command)s] [Run:%(run_id)s] [Part:%(partition)s] - %(name)s - %(levelname)s - '
    if detailed:
        prefix += '[%(filename)s:%(lineno)d] - %(funcName)s() - '
    return logging.Formatter(prefix + '%(message)s', datefmt='%Y-%m-%d %H:%M:%S')


class LoggingConfig:
    """日志系统配置类，命令行启动时调用一次 setup_logging"""

    @staticmethod
    def setup_logging(log_level=logging.WARNING, log_to_file=False, app_name="fermat_torus",
                      log_dir: Optional[str] = None):
        """
        配置根日志记录器

        控制台日志写到stderr，stdout只留给命令行的运行摘要。
        DEBUG 级别和日志文件使用带文件名、行号的详细格式。

        Args:
            log_level: 日志级别，默认WARNING
            log_to_file: 是否保存日志到文件
            app_name: 日志文件名前缀
            log_dir: 日志目录，log_to_file为True时使用

        Returns:
            logger: 配置好的根日志记录器
        """
        logger = logging.getLogger()
        logger.setLevel(log_level)

        # 重复调用时先清掉旧的处理器
        for handler in logger.handlers[:]:
            logger.removeHandler(handler)

        context_filter = ContextFilter()

        console = logging.StreamHandler(sys.stderr)
        console.addFilter(context_filter)
        console.setFormatter(_formatter(detailed=log_level <= logging.DEBUG))
        logger.addHandler(console)

        if not (log_to_file and log_dir):
            logger.debug("日志系统初始化完成，仅输出到控制台")
            return logger

        os.makedirs(log_dir, exist_ok=True)
        day = datetime.now().strftime('%Y%m%d')
        log_file = os.path.join(log_dir, f"{app_name}_{day}.log")
        error_log_file = os.path.join(log_dir, f"{app_name}_errors_{day}.log")

        for path, level in ((log_file, logging.NOTSET), (error_log_file, logging.ERROR)):
            handler = logging.FileHandler(path, encoding='utf-8')
            handler.addFilter(context_filter)
            handler.setLevel(level)
            handler.setFormatter(_formatter(detailed=True))
            logger.addHandler(handler)

        logger.info(f"日志系统初始化完成，日志文件: {log_file}")
        return logger

    @staticmethod
    def get_logger(name):
        """获取指定名称的日志记录器，name 通常为模块名 __name__"""
        return logging.getLogger(name)
