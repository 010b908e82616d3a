"""
Search subtrees keyed by their top element, spread over a process pool. Results come back
in top order whichever worker finishes first, so streaming and merging stay deterministic.
"""
import multiprocessing as mp
from typing import Iterator, Tuple

import psutil

from source.ModelSearch.Search import SearchResult, SearchTask, merge_results, search_top


def worker_count(requested: int, subtrees: int) -> int:
    cores = psutil.cpu_count(logical=False) or psutil.cpu_count() or 1
    return max(1, min(requested, cores, subtrees))


def _run_subtree(job: Tuple[SearchTask, int]) -> SearchResult:
    task, top = job
    return search_top(task, top)


def parallel_subtrees(task: SearchTask, workers: int) -> Iterator[SearchResult]:
    jobs = [(task, top) for top in task.tops]
    count = worker_count(workers, len(jobs))
    if count == 1:
        yield from map(_run_subtree, jobs)
        return
    with mp.get_context("spawn").Pool(processes=count) as pool:
        yield from pool.imap(_run_subtree, jobs)


def parallel_enumerate(task: SearchTask, workers: int) -> SearchResult:
    return merge_results(task, parallel_subtrees(task, workers))
