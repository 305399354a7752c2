from pathlib import Path

from jpevalb import SyntaxTree, load_trees

FIXTURES = Path(__file__).parent / "fixtures"


def fixture_trees(name):
    return load_trees(FIXTURES / name)


def random_tree(rng, forms, labels=("S", "NP", "VP", "PP", "ADJP"), tags=("DT", "NN", "VB", "JJ", "RB")):
    """Random phrase tree over the given leaf forms; unary chains allowed
    so duplicate (label, span) pairs occur."""

    def build(lo, hi):
        if hi - lo == 1 and rng.random() < 0.7:
            return SyntaxTree(rng.choice(tags), word=forms[lo])
        if rng.random() < 0.25:  # unary phrase
            return SyntaxTree(rng.choice(labels), (build(lo, hi),))
        if hi - lo == 1:
            return SyntaxTree(rng.choice(labels), (build(lo, hi),))
        cuts = sorted(rng.sample(range(lo + 1, hi), rng.randint(1, min(3, hi - lo - 1))))
        bounds = [lo, *cuts, hi]
        children = tuple(build(a, b) for a, b in zip(bounds, bounds[1:]))
        return SyntaxTree(rng.choice(labels), children)

    return build(0, len(forms))


def random_forms(rng, max_tokens=8):
    n = rng.randint(1, max_tokens)
    return [
        "".join(rng.choice("abcdefgh") for _ in range(rng.randint(1, 4)))
        for _ in range(n)
    ]
