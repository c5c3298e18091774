"""Verification suites.

Suite ``lemma1`` sweeps the Suzuki cell identities and ``lemma2`` the Ree ones.
The remaining suites cover Bruhat/factorization round trips, order and closure
checks, and the symplectic form.

Every suite is a sequence of independent integer-indexed cases. Cases are cut
into contiguous blocks that may run in a process pool (``SUZREE_WORKERS``);
results are merged in block order, so reports and the first-failure witness do
not depend on the worker count.
"""

from __future__ import annotations

import concurrent.futures
import dataclasses
import functools
import os
import random
import time
from collections import deque
from typing import Iterable

from .field import FieldSpec
from .matrix import Matrix, preserves_symplectic_form
from .rank1 import BigCell, RankOneGroup
from .ree import Ree
from .suzuki import Suzuki

GROUPS = {"suzuki": Suzuki, "ree": Ree}

SUITES = ("lemma1", "lemma2", "bruhat", "closure", "form")

# Largest q for which whole-group sweeps are allowed.
EXHAUSTIVE_LIMIT = {"suzuki": 8, "ree": 3}


class UsageError(ValueError):
    """Incompatible suite / group / mode combination (CLI exit code 2)."""


@dataclasses.dataclass
class Report:
    suite: str
    q: int
    cases: int = 0
    failures: int = 0
    witness: str | None = None
    ms: int = 0

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def line(self) -> str:
        return (f"SUITE {self.suite} q={self.q} cases={self.cases} "
                f"failures={self.failures} ms={self.ms}")


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("SUZREE_WORKERS", "1")))
    except ValueError:
        return 1


@functools.lru_cache(maxsize=None)
def make_group(name: str, field_text: str) -> RankOneGroup:
    return GROUPS[name](FieldSpec.parse(field_text))


def group_for(name: str, q: int, field: FieldSpec | None = None) -> RankOneGroup:
    if name not in GROUPS:
        raise UsageError(f"unknown group {name!r}")
    try:
        field = field or FieldSpec.for_order(q)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if field.q != q:
        raise UsageError(f"field has order {field.q}, expected {q}")
    want_p = 2 if name == "suzuki" else 3
    if field.p != want_p or field.n % 2 == 0:
        raise UsageError(f"{name} needs q an odd power of {want_p}, got {q}")
    return make_group(name, str(field))


def sample_seed(seed, index: int) -> str:
    # independent per-case seed, so block partitioning cannot change draws
    return f"{seed}:{index}"


# -- per-case checks ---------------------------------------------------------------
# each returns a list of (subsuite, witness-or-None)

def _fmt(*named: tuple[str, Matrix]) -> str:
    return "\n".join(f"{name}:\n{mat.to_text()}" for name, mat in named)


def _identity_param(G: RankOneGroup, index: int, mode: str, seed):
    if mode == "exhaustive":
        return G.field(index + 1)
    return G.field(random.Random(sample_seed(seed, index)).randrange(1, G.q))


def _case_lemma1(G: Suzuki, index, mode, seed):
    eps = _identity_param(G, index, mode, seed)
    out = []
    lhs, rhs = G.weyl_identity(eps)
    out.append(("lemma1.weyl", None if lhs == rhs else
                f"eps={eps}\n" + _fmt(("lhs", lhs), ("rhs", rhs))))
    g1, lhs, rhs = G.torus_identity(eps)
    bad = lhs != rhs or g1[0, 0] != eps
    out.append(("lemma1.torus", None if not bad else
                f"eps={eps}\n" + _fmt(("g1", g1), ("lhs", lhs), ("rhs", rhs))))
    return out


def _case_lemma2(G: Ree, index, mode, seed):
    lam = _identity_param(G, index, mode, seed)
    out = []
    for sign, tag in ((1, "square"), (-1, "minus")):
        lhs, rhs = G.weyl_identity(lam, sign)
        out.append((f"lemma2.weyl.{tag}", None if lhs == rhs else
                    f"lam={lam} sign={sign}\n" + _fmt(("lhs", lhs), ("rhs", rhs))))
        g1, lhs, rhs = G.torus_identity(lam, sign)
        bad = lhs != rhs or g1[0, 0] != sign * lam * lam
        out.append((f"lemma2.torus.{tag}", None if not bad else
                    f"lam={lam} sign={sign}\n" + _fmt(("g1", g1), ("lhs", lhs), ("rhs", rhs))))
    return out


def _form_for(G: RankOneGroup, index, mode, seed):
    if mode == "exhaustive":
        return G.form_at(index)
    return G.random_form(sample_seed(seed, index))


def _describe(form) -> str:
    if isinstance(form, BigCell):
        return (f"big cell u1={tuple(map(int, form.u1))} eps={form.eps} "
                f"u2={tuple(map(int, form.u2))}")
    return f"torus cell u={tuple(map(int, form.u))} eps={form.eps}"


def _case_bruhat(G: RankOneGroup, index, mode, seed):
    form = _form_for(G, index, mode, seed)
    g = G.rebuild(form)
    problem = None
    try:
        if G.bruhat(g) != form:
            problem = "bruhat returned different parameters"
        else:
            fac = G.factor(g)
            if not G.check_factorization(g, fac):
                problem = "factorization round trip or U/U- tag failed\n" + fac.to_text(G.header)
    except Exception as exc:  # witness must survive any failure mode
        problem = f"{type(exc).__name__}: {exc}"
    return [("bruhat", None if problem is None else
             f"{_describe(form)}\n{problem}\n" + _fmt(("g", g)))]


def _case_form(G: RankOneGroup, index, mode, seed):
    form = _form_for(G, index, mode, seed)
    g = G.rebuild(form)
    return [("form", None if preserves_symplectic_form(g) else f"{_describe(form)}\n" + _fmt(("g", g)))]


CASES = {"lemma1": _case_lemma1, "lemma2": _case_lemma2, "bruhat": _case_bruhat, "form": _case_form}


def _run_block(G, suite, mode, seed, start, stop):
    check = CASES[suite]
    acc: dict[str, list] = {}
    for index in range(start, stop):
        for sub, witness in check(G, index, mode, seed):
            entry = acc.setdefault(sub, [0, 0, None])
            entry[0] += 1
            if witness is not None:
                entry[1] += 1
                if entry[2] is None:
                    entry[2] = witness
    return acc


def _blocks(n: int, workers: int) -> list[tuple[int, int]]:
    if n == 0:
        return []
    size = max(1, -(-n // (workers * 4)))
    return [(i, min(i + size, n)) for i in range(0, n, size)]


def map_blocks(fn, G: RankOneGroup, n: int, workers: int, *extra) -> list:
    """fn(G, *extra, start, stop) over blocks of range(n), results in block order."""
    blocks = _blocks(n, workers)
    args = [(G, *extra, a, b) for a, b in blocks]
    if workers == 1 or len(blocks) <= 1:
        return [fn(*a) for a in args]
    with concurrent.futures.ProcessPoolExecutor(workers) as pool:
        return list(pool.map(fn, *zip(*args)))


def _run_cases(G: RankOneGroup, suite, mode, seed, n, workers) -> list[Report]:
    results = map_blocks(_run_block, G, n, workers, suite, mode, seed)
    merged: dict[str, Report] = {}
    for acc in results:
        for sub, (cases, failures, witness) in acc.items():
            rep = merged.setdefault(sub, Report(sub, G.q))
            rep.cases += cases
            rep.failures += failures
            if rep.witness is None:
                rep.witness = witness
    return list(merged.values())


# -- closure -------------------------------------------------------------------------

def bfs_closure(generators: Iterable[Matrix], limit: int | None = None) -> set[Matrix]:
    """All products of the generators, by breadth-first search from the identity."""
    gens = list(generators)
    ident = Matrix.identity(gens[0].field, gens[0].dim)
    seen = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = x @ s
            if y not in seen:
                seen.add(y)
                if limit is not None and len(seen) > limit:
                    return seen
                queue.append(y)
    return seen


def closure_report(G: RankOneGroup) -> Report:
    """Distinct-matrix count of the Bruhat enumeration vs. order formula vs. BFS."""
    rep = Report("closure", G.q)
    elements = set()
    for g in G.enumerate_group():
        rep.cases += 1
        elements.add(g)
    duplicates = rep.cases - len(elements)
    problems = []
    if duplicates:
        problems.append(f"{duplicates} duplicate matrices in the Bruhat enumeration")
    if len(elements) != G.order:
        problems.append(f"distinct count {len(elements)} != order formula {G.order}")
    closure = bfs_closure(G.generators(), limit=2 * G.order)
    if closure != elements:
        problems.append(f"BFS closure has {len(closure)} elements, enumeration {len(elements)}")
    rep.failures = len(problems)
    rep.witness = "\n".join(problems) or None
    return rep


# -- entry point ---------------------------------------------------------------------

def run_suite(G: RankOneGroup, suite: str, mode: str = "exhaustive", n: int = 0,
              seed=0, workers: int | None = None) -> list[Report]:
    """Run one suite; returns one report per sub-suite."""
    if suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}")
    if suite == "lemma1" and G.name != "suzuki":
        raise UsageError("lemma1 is the Suzuki suite")
    if suite == "lemma2" and G.name != "ree":
        raise UsageError("lemma2 is the Ree suite")
    if suite == "form" and G.name != "suzuki":
        raise UsageError("the symplectic form check applies to Suzuki groups")
    if mode not in ("exhaustive", "sample"):
        raise UsageError(f"unknown mode {mode!r}")
    workers = workers or worker_count()
    t0 = time.perf_counter()
    if suite in ("lemma1", "lemma2"):
        count = G.q - 1 if mode == "exhaustive" else n
        reports = _run_cases(G, suite, mode, seed, count, workers)
    elif suite == "closure":
        if mode != "exhaustive":
            raise UsageError("closure needs --exhaustive")
        check_exhaustive_size(G)
        reports = [closure_report(G)]
    else:
        if mode == "exhaustive":
            check_exhaustive_size(G)
            count = G.order
        else:
            count = n
        reports = _run_cases(G, suite, mode, seed, count, workers)
    ms = int((time.perf_counter() - t0) * 1000)
    if not reports:
        reports = [Report(suite, G.q)]
    for rep in reports:
        rep.ms = ms
    return reports


def check_exhaustive_size(G: RankOneGroup):
    if G.q > EXHAUSTIVE_LIMIT[G.name]:
        raise UsageError(f"refusing exhaustive sweep of {G.name} q={G.q}: "
                         f"{G.order} elements (limit q <= {EXHAUSTIVE_LIMIT[G.name]})")
