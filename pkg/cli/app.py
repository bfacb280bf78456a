#!/usr/bin/env python
# -*- coding: utf-8 -*-

import os
import sys
import uuid
import argparse
import logging
import traceback
from typing import List, Optional

from dotenv import load_dotenv

# 添加项目根目录到 Python 路径
current_dir = os.path.dirname(os.path.abspath(__file__))
project_root = os.path.dirname(current_dir)
if project_root not in sys.path:
    sys.path.insert(0, project_root)

from src.config import BaseRunConfig, get_run_config
from src.errors import ArgumentError, DivergenceSignal, NumericalFailure
from src.utils.logging_config import LoggingConfig, RunContext
from cli.commands import register_all

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NUMERICAL = 2


class CommandParser(argparse.ArgumentParser):
    """参数错误时打印用法并抛出 ArgumentError，而不是直接退出进程"""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise ArgumentError(message)


def build_parser() -> CommandParser:
    """构建带全部子命令的解析器"""
    parser = CommandParser(
        prog='python -m cli',
        description='Fermat曲线与环面工具：曲线运动学、测地线、缠绕直线、有理点搜索',
        allow_abbrev=False,
    )
    subparsers = parser.add_subparsers(dest='verb', metavar='<command>')
    subparsers.required = True
    register_all(subparsers)
    return parser


def _setup(config: BaseRunConfig) -> None:
    LoggingConfig.setup_logging(
        log_level=config.log_level,
        log_to_file=config.log_to_file,
        app_name=config.APP_NAME,
        log_dir=config.LOG_DIR,
    )


def run(argv: Optional[List[str]] = None) -> int:
    """
    解析参数并执行命令

    Args:
        argv: 命令行参数（不含程序名），默认取 sys.argv[1:]

    Returns:
        int: 退出码，0 成功（包括"没有找到解"），1 参数错误，2 数值失败
    """
    # 加载环境变量
    load_dotenv()

    try:
        config = get_run_config()
    except ArgumentError as e:
        print(f"配置错误: {e}", file=sys.stderr)
        return EXIT_USAGE
    _setup(config)

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except ArgumentError as e:
        logger.error(f"参数错误: {e}")
        return EXIT_USAGE
    except SystemExit as e:
        # --help 之类的正常退出
        return e.code if isinstance(e.code, int) else EXIT_OK

    run_id = uuid.uuid4().hex[:8]
    with RunContext.scope(command=args.verb, run_id=run_id):
        return _dispatch(args, config)


def _dispatch(args, config) -> int:
    """执行命令处理函数，把异常映射为退出码"""
    logger.info(f"开始执行命令: {args.verb}, 线程数={config.THREADS}")
    try:
        args.handler(args, config)
        logger.info(f"命令执行完成: {args.verb}")
        return EXIT_OK
    except ArgumentError as e:
        logger.error(f"参数错误: {e}")
        return EXIT_USAGE
    except OSError as e:
        logger.error(f"输出文件写入失败: {e}")
        return EXIT_USAGE
    except (NumericalFailure, DivergenceSignal) as e:
        logger.error(f"数值计算失败: {e}")
        return EXIT_NUMERICAL
    except Exception as e:
        logger.error(f"未捕获的异常: {str(e)}")
        logger.error(f"错误堆栈: {traceback.format_exc()}")
        return EXIT_NUMERICAL


def main() -> None:
    """命令行入口"""
    sys.exit(run())
