import random

import pytest

from torusact import linalg
from torusact.io import corpus_manifest, load_corpus


@pytest.fixture(scope="session")
def corpus():
    return load_corpus()


@pytest.fixture(scope="session")
def manifest():
    return corpus_manifest()


@pytest.fixture(scope="session")
def actions(corpus):
    return {name: af.action() for name, af in corpus.items()}


def random_unimodular(n: int, rng: random.Random, steps: int = 6):
    """Product of random elementary matrices, entries kept small."""
    m = [list(r) for r in linalg.identity(n)]
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        k = rng.choice([-1, 1])
        m[i] = [x + k * y for x, y in zip(m[i], m[j])]
    if rng.random() < 0.5:
        m[0] = [-x for x in m[0]]
    return linalg.mat(m)


def conjugate(m, w):
    return linalg.matmul(linalg.matmul(w, m), linalg.int_inverse(w))


@pytest.fixture(scope="session")
def pair_reports(actions, manifest):
    """compare() for every corpus pair, computed once per session."""
    from torusact.classify import compare
    return {(p["a"], p["b"]): compare(actions[p["a"]], actions[p["b"]]) for p in manifest["pairs"]}


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance checks")
        for line in lines:
            terminalreporter.write_line(line)
