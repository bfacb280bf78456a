#!/usr/bin/env python
# -*- coding: utf-8 -*-

import threading
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Callable, List, Optional, Sequence, TypeVar

from src.utils.logging_config import LoggingConfig, RunContext

T = TypeVar('T')
R = TypeVar('R')


class TaskRunner:
    """
    命令行使用的线程池

    核心模块都是纯函数，只有命令行把分区任务分发到线程池，
    结果按分区顺序合并，线程数只影响耗时，不影响输出。
    """

    def __init__(self, max_workers: int = 1):
        if max_workers < 1:
            raise ValueError(f"线程数必须 >= 1: {max_workers}")
        self.max_workers = max_workers
        self.logger = LoggingConfig.get_logger(__name__ + '.TaskRunner')

    def map(self, fn: Callable[[T], R], items: Sequence[T],
            on_progress: Optional[Callable[[int, int], None]] = None) -> List[R]:
        """
        并行执行 fn(item)，按 items 的顺序返回结果

        任一分区抛出异常时记录日志并把异常抛给调用方。

        Args:
            fn: 分区任务
            items: 分区列表
            on_progress: 进度回调函数 (current, total) -> None

        Returns:
            List[R]: 与 items 一一对应的结果
        """
        total = len(items)
        if total == 0:
            return []

        # 工作线程继承当前运行的日志上下文
        parent_context = dict(RunContext.get_context())
        progress_counter = {"current": 0, "total": total, "lock": threading.Lock()}

        def run_task(idx: int, item: T) -> R:
            with RunContext.scope(**{**parent_context, "partition": idx}):
                result = fn(item)

            with progress_counter["lock"]:
                progress_counter["current"] += 1
                current = progress_counter["current"]

            if on_progress:
                on_progress(current, total)

            self.logger.debug(f"处理进度: {current}/{total} - 完成度: {current / total * 100:.1f}%")
            return result

        if self.max_workers == 1 or total == 1:
            return [run_task(idx, item) for idx, item in enumerate(items)]

        results: List[Optional[R]] = [None] * total
        self.logger.info(f"使用 {self.max_workers} 个线程并行处理 {total} 个分区")
        with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
            futures = {
                executor.submit(run_task, idx, item): idx
                for idx, item in enumerate(items)
            }

            for future in as_completed(futures):
                idx = futures[future]
                try:
                    results[idx] = future.result()
                except Exception as e:
                    self.logger.error(f"处理分区 {idx} 时出错: {str(e)}")
                    for pending in futures:
                        pending.cancel()
                    raise

        return results
