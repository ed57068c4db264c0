"""Nodal curves glued from projective lines.

A curve here is combinatorial data: an ordered tuple of components,
each a copy of the projective line carrying marked points with exact
rational (or infinite) coordinates, plus an ordered tuple of node
gluings identifying marked points in pairs. A node may join two
components or glue a component to itself; either way its two branches
must be distinct marked points. The dual graph has one vertex per
component and one edge per node (a self-node becomes a loop), and the
arithmetic genus is ``#nodes - #components + 1`` for connected curves.

Validation is data, not control flow: ``validate`` returns a list of
violation strings and the derived quantities raise only when handed a
curve that fails it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactlin import as_scalar


class InvalidCurveError(ValueError):
    """Raised when a derived quantity is asked of an invalid curve."""


@dataclass(frozen=True)
class PointOnLine:
    """A point of the projective line: an affine rational coordinate or infinity.

    ``coord`` is the affine coordinate; ``None`` encodes the point at
    infinity.
    """

    coord: Fraction | None = None

    def __post_init__(self) -> None:
        if self.coord is not None and not isinstance(self.coord, Fraction):
            object.__setattr__(self, "coord", as_scalar(self.coord))

    @property
    def is_infinity(self) -> bool:
        return self.coord is None

    def __str__(self) -> str:
        return "inf" if self.coord is None else str(self.coord)


INFINITY = PointOnLine(None)


def affine_point(value) -> PointOnLine:
    """Affine point with an exact rational coordinate."""
    return PointOnLine(as_scalar(value))


Branch = tuple[str, int]


@dataclass(frozen=True)
class Component:
    """A projective line with an ordered tuple of marked points."""

    name: str
    marked_points: tuple[PointOnLine, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "marked_points", tuple(self.marked_points))


@dataclass(frozen=True)
class NodeGluing:
    """Ordered identification of two marked-point branches.

    Branch order matters downstream: gluing constraints read
    "value on branch_a equals scalar times value on branch_b".
    """

    branch_a: Branch
    branch_b: Branch

    def __post_init__(self) -> None:
        object.__setattr__(self, "branch_a", (self.branch_a[0], int(self.branch_a[1])))
        object.__setattr__(self, "branch_b", (self.branch_b[0], int(self.branch_b[1])))


@dataclass(frozen=True)
class NodalCurve:
    components: tuple[Component, ...]
    nodes: tuple[NodeGluing, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "components", tuple(self.components))
        object.__setattr__(self, "nodes", tuple(self.nodes))

    def component_index(self, name: str) -> int:
        for i, comp in enumerate(self.components):
            if comp.name == name:
                return i
        raise KeyError(f"no component named {name!r}")

    def component(self, name: str) -> Component:
        return self.components[self.component_index(name)]

    def branch_point(self, branch: Branch) -> PointOnLine:
        """Marked point a node branch refers to."""
        comp = self.component(branch[0])
        return comp.marked_points[branch[1]]


@dataclass(frozen=True)
class DualGraph:
    """Vertices are component names; one edge per node, loops allowed."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]

    def loop_count(self) -> int:
        return sum(1 for a, b in self.edges if a == b)

    def connected_component_count(self) -> int:
        if not self.vertices:
            return 0
        adjacency: dict[str, list[str]] = {v: [] for v in self.vertices}
        for a, b in self.edges:
            adjacency[a].append(b)
            adjacency[b].append(a)
        seen: set[str] = set()
        count = 0
        for start in self.vertices:
            if start in seen:
                continue
            count += 1
            stack = [start]
            seen.add(start)
            while stack:
                v = stack.pop()
                for w in adjacency[v]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
        return count


def validate(curve: NodalCurve) -> list[str]:
    """All structural violations, as human-readable strings.

    Checks, in order: unique component names, distinct marked points per
    component, resolvable and distinct node branches, every marked point
    attached to exactly one node branch, and connectedness of the dual
    graph. Connectedness is only assessed once the references resolve.
    """
    problems: list[str] = []

    seen_names: set[str] = set()
    for comp in curve.components:
        if comp.name in seen_names:
            problems.append(f"duplicate component name {comp.name!r}")
        seen_names.add(comp.name)

    for comp in curve.components:
        seen_pts: set[PointOnLine] = set()
        for idx, p in enumerate(comp.marked_points):
            if p in seen_pts:
                problems.append(
                    f"component {comp.name}: marked point {p} appears more than once"
                )
            seen_pts.add(p)

    names = {comp.name for comp in curve.components}
    refs_ok = True
    usage: dict[Branch, int] = {}
    for k, node in enumerate(curve.nodes):
        node_ok = True
        for label, branch in (("a", node.branch_a), ("b", node.branch_b)):
            cname, idx = branch
            if cname not in names:
                problems.append(f"node {k}: branch {label} references unknown component {cname!r}")
                node_ok = False
                continue
            comp = curve.component(cname)
            if not 0 <= idx < len(comp.marked_points):
                problems.append(
                    f"node {k}: branch {label} references marked point index {idx} "
                    f"outside component {cname} (which has {len(comp.marked_points)})"
                )
                node_ok = False
        if not node_ok:
            refs_ok = False
            continue
        if node.branch_a == node.branch_b:
            problems.append(f"node {k}: both branches are the same marked point")
            refs_ok = False
            continue
        usage[node.branch_a] = usage.get(node.branch_a, 0) + 1
        usage[node.branch_b] = usage.get(node.branch_b, 0) + 1

    if refs_ok:
        for comp in curve.components:
            for idx, p in enumerate(comp.marked_points):
                n = usage.get((comp.name, idx), 0)
                if n == 0:
                    problems.append(
                        f"marked point {comp.name}[{idx}] (coordinate {p}) "
                        "is not attached to any node"
                    )
                elif n > 1:
                    problems.append(
                        f"marked point {comp.name}[{idx}] (coordinate {p}) "
                        f"is attached to {n} node branches; exactly one is allowed"
                    )
        graph = DualGraph(
            tuple(c.name for c in curve.components),
            tuple((n.branch_a[0], n.branch_b[0]) for n in curve.nodes),
        )
        if graph.connected_component_count() > 1:
            problems.append("curve is not connected")

    return problems


def _require_valid(curve: NodalCurve) -> None:
    problems = validate(curve)
    if problems:
        raise InvalidCurveError("; ".join(problems))


def dual_graph(curve: NodalCurve) -> DualGraph:
    """Dual graph of a valid curve: one vertex per component, one edge per node."""
    _require_valid(curve)
    return DualGraph(
        tuple(c.name for c in curve.components),
        tuple((n.branch_a[0], n.branch_b[0]) for n in curve.nodes),
    )


def arithmetic_genus(curve: NodalCurve) -> int:
    """``#nodes - #components + 1`` for a valid connected curve."""
    _require_valid(curve)
    return len(curve.nodes) - len(curve.components) + 1


def betti_1(graph: DualGraph) -> int:
    """First Betti number ``#edges - #vertices + #connected components``."""
    return len(graph.edges) - len(graph.vertices) + graph.connected_component_count()


def jacobian_dimension(curve: NodalCurve) -> int:
    """Dimension of the group of line bundle gluings modulo trivial ones.

    Equals the first Betti number of the dual graph: one multiplicative
    torus factor per independent cycle.
    """
    return betti_1(dual_graph(curve))


@dataclass(frozen=True)
class MobiusTransform:
    """Fractional-linear map ``t -> (a t + b) / (c t + d)`` with ``ad - bc != 0``."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self) -> None:
        for field in ("a", "b", "c", "d"):
            v = getattr(self, field)
            if not isinstance(v, Fraction):
                object.__setattr__(self, field, as_scalar(v))
        if self.determinant() == 0:
            raise ValueError("degenerate transform: ad - bc = 0")

    def determinant(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    def apply(self, p: PointOnLine) -> PointOnLine:
        if p.is_infinity:
            if self.c == 0:
                return INFINITY
            return PointOnLine(self.a / self.c)
        denom = self.c * p.coord + self.d
        if denom == 0:
            return INFINITY
        return PointOnLine((self.a * p.coord + self.b) / denom)

    def compose(self, other: "MobiusTransform") -> "MobiusTransform":
        """``self`` after ``other``: matrix product of the coefficient matrices."""
        return MobiusTransform(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "MobiusTransform":
        return MobiusTransform(self.d, -self.b, -self.c, self.a)

    @classmethod
    def identity(cls) -> "MobiusTransform":
        return cls(Fraction(1), Fraction(0), Fraction(0), Fraction(1))


def _projective(p: PointOnLine) -> tuple[Fraction, Fraction]:
    if p.is_infinity:
        return Fraction(1), Fraction(0)
    return p.coord, Fraction(1)


def mobius_from_triple(p1: PointOnLine, p2: PointOnLine, p3: PointOnLine) -> MobiusTransform:
    """The unique transform sending ``(p1, p2, p3)`` to ``(0, 1, inf)``.

    Points may include infinity; they must be pairwise distinct. Written
    projectively the cross-ratio formula has no special cases.
    """
    if p1 == p2 or p1 == p3 or p2 == p3:
        raise ValueError("points must be pairwise distinct")
    x1, y1 = _projective(p1)
    x2, y2 = _projective(p2)
    x3, y3 = _projective(p3)
    k1 = x2 * y3 - x3 * y2
    k2 = x2 * y1 - x1 * y2
    return MobiusTransform(y1 * k1, -x1 * k1, y3 * k2, -x3 * k2)


PAPER_STYLE = "paper"
AFFINE_SAFE_STYLE = "affine-safe"

# Canonical marked-point targets by count. None stands for infinity.
_TARGETS = {
    PAPER_STYLE: {0: (), 1: (0,), 2: (0, None), 3: (0, 1, None)},
    AFFINE_SAFE_STYLE: {0: (), 1: (0,), 2: (0, 1), 3: (0, 1, 2)},
}


def _target_points(style: str, count: int) -> tuple[PointOnLine, ...]:
    raw = _TARGETS[style][count]
    return tuple(INFINITY if v is None else affine_point(v) for v in raw)


def _transform_to(points: tuple[PointOnLine, ...], targets: tuple[PointOnLine, ...]) -> MobiusTransform:
    """A transform carrying ``points`` to ``targets`` elementwise.

    For three points the transform is unique; for fewer, a fixed choice
    is made so normalization stays deterministic.
    """
    n = len(points)
    if n == 0:
        return MobiusTransform.identity()
    if n == 1:
        (p,) = points
        # target is always 0
        if p.is_infinity:
            return MobiusTransform(Fraction(0), Fraction(1), Fraction(1), Fraction(0))
        return MobiusTransform(Fraction(1), -p.coord, Fraction(0), Fraction(1))
    if n == 2:
        p, q = points
        if targets[1].is_infinity:
            # (p, q) -> (0, inf)
            if p.is_infinity:
                return MobiusTransform(Fraction(0), Fraction(1), Fraction(1), -q.coord)
            if q.is_infinity:
                return MobiusTransform(Fraction(1), -p.coord, Fraction(0), Fraction(1))
            return MobiusTransform(Fraction(1), -p.coord, Fraction(1), -q.coord)
        # (p, q) -> (0, 1)
        if p.is_infinity:
            return MobiusTransform(Fraction(0), Fraction(1), Fraction(1), Fraction(1) - q.coord)
        if q.is_infinity:
            return MobiusTransform(Fraction(1), -p.coord, Fraction(1), Fraction(1) - p.coord)
        return MobiusTransform(Fraction(1), -p.coord, Fraction(0), q.coord - p.coord)
    if n == 3:
        to_standard = mobius_from_triple(*points)
        target_to_standard = mobius_from_triple(*targets)
        return target_to_standard.inverse().compose(to_standard)
    raise ValueError("no canonical coordinates for a component with more than 3 marked points")


def normalize(curve: NodalCurve, style: str = AFFINE_SAFE_STYLE) -> NodalCurve:
    """Move every component's marked points to canonical coordinates.

    Styles: ``"paper"`` uses (0), (0, inf), (0, 1, inf); ``"affine-safe"``
    uses (0), (0, 1), (0, 1, 2) and so never places a marked point at
    infinity, which the dualizing-bundle construction requires. Node
    structure is untouched. A curve already in target coordinates comes
    back unchanged.
    """
    if style not in _TARGETS:
        raise ValueError(f"unknown normalization style {style!r}")
    _require_valid(curve)
    for comp in curve.components:
        if len(comp.marked_points) > 3:
            raise ValueError(
                f"component {comp.name} has {len(comp.marked_points)} marked points; "
                "no canonical coordinates beyond 3"
            )
    new_components = []
    for comp in curve.components:
        targets = _target_points(style, len(comp.marked_points))
        transform = _transform_to(comp.marked_points, targets)
        moved = tuple(transform.apply(p) for p in comp.marked_points)
        new_components.append(Component(comp.name, moved))
    return NodalCurve(tuple(new_components), curve.nodes)


def paper_example_curve() -> NodalCurve:
    """The reference curve used across the docs and test-suite.

    Three lines: C1 with marked points 0, 1; C2 with 0, 1, 2; C3 with 0.
    Nodes glue C1[0] to C3[0], C1[1] to C2[1], and C2[0] to C2[2] (a
    self-node). Connected, arithmetic genus 1; the dual graph is the
    path C3 - C1 - C2 with one loop at C2.
    """
    c1 = Component("C1", (affine_point(0), affine_point(1)))
    c2 = Component("C2", (affine_point(0), affine_point(1), affine_point(2)))
    c3 = Component("C3", (affine_point(0),))
    nodes = (
        NodeGluing(("C1", 0), ("C3", 0)),
        NodeGluing(("C1", 1), ("C2", 1)),
        NodeGluing(("C2", 0), ("C2", 2)),
    )
    return NodalCurve((c1, c2, c3), nodes)
