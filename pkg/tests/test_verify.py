import pytest

from suzree.matrix import Matrix
from suzree.ree import Ree
from suzree.suzuki import Suzuki
from suzree.verify import (Report, UsageError, _blocks, bfs_closure, closure_report, group_for,
                           run_suite)


def test_report_line():
    rep = Report("bruhat", 8, cases=10, failures=0, ms=5)
    assert rep.line() == "SUITE bruhat q=8 cases=10 failures=0 ms=5" and rep.ok
    assert not Report("x", 2, failures=1).ok


def test_blocks_cover_range():
    for n in (0, 1, 7, 100, 29120):
        for workers in (1, 3, 8):
            blocks = _blocks(n, workers)
            assert [i for a, b in blocks for i in range(a, b)] == list(range(n))


def test_group_for():
    assert isinstance(group_for("suzuki", 8), Suzuki)
    assert isinstance(group_for("ree", 27), Ree)
    assert group_for("ree", 27) is group_for("ree", 27)
    for name, q in [("suzuki", 9), ("ree", 8), ("ree", 9), ("suzuki", 5), ("g2", 3)]:
        with pytest.raises(UsageError):
            group_for(name, q)


def test_bfs_closure_oracle():
    for q in (2, 8):
        G = Suzuki.from_q(q)
        assert len(bfs_closure(G.generators())) == G.order
    R = Ree.from_q(3)
    assert bfs_closure(R.generators()) == set(R.enumerate_group())


def test_bfs_closure_limit():
    G = Suzuki.from_q(8)
    assert len(bfs_closure(G.generators(), limit=100)) == 101


def test_closure_report_detects_mismatch():
    G = Suzuki.from_q(2)
    assert closure_report(G).ok

    class Broken(Suzuki):
        def generators(self):
            return [self.x_plus(1, 0)]

    rep = closure_report(Broken(G.field))
    assert rep.failures == 1 and "BFS closure has 4 elements" in rep.witness


def test_witness_on_failure():
    class Broken(Suzuki):
        def torus_cell_parts(self, eps):
            g1, right, tu = super().torus_cell_parts(eps)
            return g1, right, type(tu)(tu.t, tu.u + 1)

    G = Broken(Suzuki.from_q(8).field)
    reps = {r.suite: r for r in run_suite(G, "lemma1")}
    assert reps["lemma1.weyl"].ok
    bad = reps["lemma1.torus"]
    assert bad.failures == 7 and bad.cases == 7
    assert bad.witness.startswith("eps=1\n") and "lhs:" in bad.witness


def test_bruhat_witness_names_parameters():
    class Broken(Suzuki):
        def factor_weyl_cell(self, eps):
            a, b, c = super().factor_weyl_cell(eps)
            return a, b, c @ self.x_plus(1, 0)

    G = Broken(Suzuki.from_q(2).field)
    (rep,) = run_suite(G, "bruhat")
    assert rep.failures == 16 and rep.cases == 20
    assert rep.witness.startswith("big cell u1=(0, 0) eps=1 u2=(0, 0)")


def test_sampled_identity_sweep():
    reps = run_suite(Ree.from_q(243), "lemma2", "sample", 30, seed="s")
    assert len(reps) == 4 and all(r.cases == 30 and r.ok for r in reps)


def test_parallel_matches_serial():
    G = Ree.from_q(27)
    serial = run_suite(G, "bruhat", "sample", 200, seed=3, workers=1)
    parallel = run_suite(G, "bruhat", "sample", 200, seed=3, workers=3)
    strip = lambda reps: [(r.suite, r.cases, r.failures, r.witness) for r in reps]
    assert strip(serial) == strip(parallel)


def test_form_suite():
    (rep,) = run_suite(Suzuki.from_q(8), "form")
    assert rep.cases == 29120 and rep.ok


def test_mode_and_suite_checks():
    G = Suzuki.from_q(8)
    with pytest.raises(UsageError):
        run_suite(G, "lemma2")
    with pytest.raises(UsageError):
        run_suite(G, "closure", "sample", 5)
    with pytest.raises(UsageError):
        run_suite(G, "bruhat", "random")
    with pytest.raises(UsageError):
        run_suite(Suzuki.from_q(32), "form")
    assert isinstance(Matrix.identity(G.field, 4), Matrix)
