#!/usr/bin/env python
# -*- coding: utf-8 -*-

import pytest

from cli.workers import TaskRunner
from src.errors import NumericalFailure
from src.utils.logging_config import RunContext


@pytest.mark.parametrize("workers", [1, 2, 8])
def test_results_keep_item_order(workers):
    runner = TaskRunner(workers)
    assert runner.map(lambda x: x * x, list(range(20))) == [x * x for x in range(20)]


def test_progress_reaches_total():
    seen = []
    TaskRunner(3).map(lambda x: x, list(range(7)), on_progress=lambda current, total: seen.append((current, total)))
    assert sorted(seen) == [(i, 7) for i in range(1, 8)]


@pytest.mark.parametrize("workers", [1, 4])
def test_errors_propagate(workers):
    def task(x):
        if x == 3:
            raise NumericalFailure("溢出", step_index=x)
        return x

    with pytest.raises(NumericalFailure):
        TaskRunner(workers).map(task, list(range(6)))


def test_context_restored_after_sequential_run():
    RunContext.set_context(command='search', run_id='abc')
    try:
        partitions = TaskRunner(1).map(lambda _: RunContext.get_context().get('partition'), ['a', 'b'])
        assert partitions == [0, 1]
        assert RunContext.get_context() == {'command': 'search', 'run_id': 'abc'}
    finally:
        RunContext.clear_context()


def test_empty_items():
    assert TaskRunner(4).map(lambda x: x, []) == []


def test_rejects_zero_workers():
    with pytest.raises(ValueError):
        TaskRunner(0)
