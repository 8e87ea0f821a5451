"""Fan verification tasks out over worker processes."""

import os
from concurrent.futures import ProcessPoolExecutor

from ..g6 import decode_graph6, encode_graph6
from .report import sort_key
from .verify import hypothesis_failure, instances, verify_lemma

THREADS_ENV = "GRAPHCERT_THREADS"


def thread_count(threads=None):
    if threads:
        return max(1, int(threads))
    env = os.environ.get(THREADS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _run_task(task):
    graph_id, g6, statement, params, budget_nodes, order = task
    return verify_lemma(decode_graph6(g6), statement, params, budget_nodes, graph_id, order)


def plan(entries, statement, budget_nodes=None, limit=64, order=None):
    """Tasks for every hypothesis-satisfying instance, plus skipped graphs with reasons."""
    tasks, skipped = [], []
    for e in entries:
        found = instances(e.graph, statement, limit)
        if not found:
            skipped.append({"graph_id": e.graph_id, "reason": hypothesis_failure(e.graph, statement)})
            continue
        g6 = encode_graph6(e.graph)
        for params in found:
            tasks.append((e.graph_id, g6, statement, params, budget_nodes, order))
    return tasks, skipped


def run_tasks(tasks, threads=None):
    n = thread_count(threads)
    if n == 1 or len(tasks) <= 1:
        verdicts = [_run_task(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=n) as pool:
            verdicts = list(pool.map(_run_task, tasks, chunksize=1))
    return sorted(verdicts, key=sort_key)


def sweep(entries, statement="theorem-1.1", budget_nodes=None, threads=None, limit=64, order=None):
    tasks, skipped = plan(entries, statement, budget_nodes, limit, order)
    return run_tasks(tasks, threads), skipped
