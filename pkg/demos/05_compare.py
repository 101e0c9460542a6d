"""
Comparing two actions
=====================

`compare` runs the invariants from cheapest to finest and reports which of
them tell the two actions apart.
"""

from torusact.io import corpus_manifest, load_corpus
from torusact.report import compare_pair, render_comparison

corpus = load_corpus()

for pair in corpus_manifest()["pairs"]:
    a, b = pair["a"], pair["b"]
    r = compare_pair(corpus[a].action(), corpus[b].action())
    print(render_comparison(a, b, r))
    print()
