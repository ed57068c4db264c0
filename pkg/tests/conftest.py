"""Shared fixtures and seeded generators for randomized suites."""

from fractions import Fraction

import pytest

from nodalcone.bundles import LineBundle
from nodalcone.curve import Component, NodalCurve, NodeGluing, affine_point, paper_example_curve


@pytest.fixture
def paper_curve():
    return paper_example_curve()


def random_curve(rng, max_components=4, max_nodes=4):
    """Connected curve with affine marked points.

    A spanning tree keeps it connected; extra edges (loops and multi-edges
    allowed) stay within max_nodes. Marked points per component share a
    denominator so distinct numerators stay distinct.
    """
    k = rng.randint(1, max_components)
    edges = [(rng.randrange(j), j) for j in range(1, k)]
    extra = rng.randint(0, max_nodes - len(edges))
    for _ in range(extra):
        edges.append((rng.randrange(k), rng.randrange(k)))
    counts = [0] * k
    node_refs = []
    for a, b in edges:
        ia = counts[a]
        counts[a] += 1
        ib = counts[b]
        counts[b] += 1
        node_refs.append((a, ia, b, ib))
    components = []
    for i in range(k):
        numerators = rng.sample(range(-8, 9), counts[i])
        den = rng.randint(1, 3)
        pts = tuple(affine_point(Fraction(n, den)) for n in numerators)
        components.append(Component(f"C{i + 1}", pts))
    nodes = tuple(
        NodeGluing((f"C{a + 1}", ia), (f"C{b + 1}", ib)) for a, ia, b, ib in node_refs
    )
    return NodalCurve(tuple(components), nodes)


def random_bundle(rng, curve, degree_range=(-4, 4)):
    degrees = tuple(rng.randint(*degree_range) for _ in curve.components)
    nonzero = [x for x in range(-5, 6) if x != 0]
    gluings = tuple(Fraction(rng.choice(nonzero), rng.randint(1, 3)) for _ in curve.nodes)
    return LineBundle(curve, degrees, gluings)


def flip_node(bundle, k):
    """Same bundle with node k's branch order swapped and its scalar inverted."""
    curve = bundle.curve
    nodes = list(curve.nodes)
    n = nodes[k]
    nodes[k] = NodeGluing(n.branch_b, n.branch_a)
    flipped_curve = NodalCurve(curve.components, tuple(nodes))
    gluings = list(bundle.gluings)
    gluings[k] = 1 / gluings[k]
    return LineBundle(flipped_curve, bundle.multidegree, tuple(gluings))
