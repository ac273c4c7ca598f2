"""Batch validation over labeled trees.

Each (tree, r) pair is checked four ways: the rooted-subtree shedding test
against the brute-force shedding test at every vertex, the oracle's VD
decision, the constructive certificate (plus the per-step guarantees of the
link recursion), and sphere counts against GF(2) Betti numbers.
"""

from __future__ import annotations

import csv
import io
import os
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from importlib import resources
from typing import Iterable, Sequence

from .graph import Graph, enumerate_labeled_trees, is_connected, prufer_decode, prufer_encode, random_tree, read_graph, root_at
from .oracle import NonVDWitness, VDOracle, is_shedding, shelling_from_vd, verify_certificate, verify_shelling
from .rind import ind_complex
from .topology import ComplexTooLarge, reduced_betti, sphere_counts
from .complex import link
from .tree_vd import Trace, decompose, shedding_characterization

HEADER = ("tree", "n", "r", "lemma31", "vd", "cert", "betti", "ms")
EXHAUSTIVE_GUARD = 8
RANDOM_GUARD = 14
ORACLE_MAX_N = 10

FIXTURES = ("fig1", "fig2", "path2", "path3", "path4", "path5", "path6", "star_k13", "k22")


class GuardError(RuntimeError):
    pass


def fixture_path(name: str):
    return resources.files("indvd") / "fixtures" / f"{name}.txt"


def fixture(name: str) -> Graph:
    with resources.as_file(fixture_path(name)) as p:
        return read_graph(p)


@dataclass(frozen=True)
class SurveyRow:
    tree: str
    n: int
    r: int
    lemma31: str
    vd: str
    cert: str
    betti: str
    ms: int
    lemma32: str = "skip"

    def ok(self) -> bool:
        return "fail" not in (self.lemma31, self.vd, self.cert, self.betti, self.lemma32)

    def csv_fields(self, timing: bool = True) -> list:
        return [self.tree, self.n, self.r, self.lemma31, self.vd, self.cert, self.betti, self.ms if timing else 0]


def tree_id(t: Graph) -> str:
    return f"n{t.vertex_count}:" + ".".join(map(str, prufer_encode(t)))


def _flag(ok: bool) -> str:
    return "pass" if ok else "fail"


def lemma32_holds(trace: Trace) -> bool:
    complexes = {}
    for state, w in trace.link_calls():
        rt = root_at(state.tree, state.anchor)
        if rt.parent[w] not in state.c:
            return False
        if not is_connected(state.tree, state.c | {w}):
            return False
        key = (state.tree, state.radius)
        if key not in complexes:
            complexes[key] = ind_complex(state.tree, state.radius)
        if not is_shedding(link(complexes[key], state.c), w):
            return False
    return True


def check_pair(t: Graph, r: int, memo: bool = True, oracle_max_n: int = ORACLE_MAX_N, label: str | None = None) -> SurveyRow:
    start = time.perf_counter()
    n = t.vertex_count
    k = ind_complex(t, r)

    if n >= r + 1:
        lemma31 = _flag(all(shedding_characterization(t, r, v) == is_shedding(k, v) for v in sorted(t.vertices)))
    else:
        lemma31 = "skip"

    if n <= oracle_max_n:
        out = VDOracle(memo).check(k)
        vd = _flag(not isinstance(out, NonVDWitness) and verify_certificate(out, k))
    else:
        vd = "skip"

    trace = Trace()
    cert = decompose(t, r, trace)
    cert_ok = verify_certificate(cert, k)
    lemma32 = _flag(lemma32_holds(trace))

    betti = "skip"
    if cert_ok:
        order = shelling_from_vd(cert, k)
        try:
            betti = _flag(verify_shelling(k, order.facets) and sphere_counts(k, order) == reduced_betti(k).as_dict())
        except ComplexTooLarge:
            pass
    ms = int(round((time.perf_counter() - start) * 1000))
    return SurveyRow(label or tree_id(t), n, r, lemma31, vd, _flag(cert_ok), betti, ms, lemma32)


def _run_task(task) -> SurveyRow:
    n, seq, r, memo, oracle_max_n = task
    return check_pair(prufer_decode(seq, n), r, memo=memo, oracle_max_n=oracle_max_n)


def _tasks(trees: Iterable[Graph], r_values: Sequence[int] | None, memo: bool, oracle_max_n: int):
    for t in trees:
        n = t.vertex_count
        rs = range(1, n + 1) if r_values is None else r_values
        seq = prufer_encode(t)
        for r in rs:
            yield (n, seq, r, memo, oracle_max_n)


def run_survey(
    max_n: int,
    r_values: Sequence[int] | None = None,
    mode: str = "exhaustive",
    seed: int = 0,
    count: int = 100,
    min_n: int = 1,
    workers: int = 1,
    memo: bool = True,
    guard: int | None = None,
    oracle_max_n: int = ORACLE_MAX_N,
) -> list[SurveyRow]:
    """Check every (tree, r) pair; ``r_values=None`` means r = 1..n for each tree."""
    if mode == "exhaustive":
        limit = EXHAUSTIVE_GUARD if guard is None else guard
        if max_n > limit:
            raise GuardError(f"exhaustive survey with max_n={max_n} exceeds guard {limit}")
        trees = (t for n in range(min_n, max_n + 1) for t in enumerate_labeled_trees(n))
    elif mode == "random":
        limit = RANDOM_GUARD if guard is None else guard
        if max_n > limit:
            raise GuardError(f"random survey with max_n={max_n} exceeds guard {limit}")
        trees = (random_tree(max_n, s) for s in range(seed, seed + count))
    else:
        raise ValueError(f"unknown mode {mode!r}")

    tasks = list(_tasks(trees, r_values, memo, oracle_max_n))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_run_task, tasks, chunksize=max(1, len(tasks) // (workers * 16))))
    else:
        rows = [_run_task(t) for t in tasks]
    # random mode can draw the same tree twice; keep one row per (tree, r)
    uniq = {(row.n, row.r, row.tree): row for row in rows}
    return [uniq[key] for key in sorted(uniq)]


def format_report(rows: Iterable[SurveyRow], timing: bool = True) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(HEADER)
    for row in rows:
        w.writerow(row.csv_fields(timing))
    return buf.getvalue()


def atomic_write(path, text: str) -> None:
    """Write via a temp file in the same directory and rename over the target."""
    path = os.fspath(path)
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
