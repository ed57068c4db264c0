"""Projective embedding checks for line bundles on nodal curves.

Everything here reduces to exact ranks of small evaluation matrices.
Global generation and very ampleness each have two modes: a degree
criterion on the multidegree (min degree 2, respectively 3) and a
direct mode that tests separation of points and of first-order jets on
a deterministic sample set: every node, plus seeded pseudo-random
affine points on each component. Random sampling can only ever refute;
the criterion is what certifies.

The multiplication map Sym^m H0(L) -> H0(L^m) is assembled in the
canonical section bases on both sides, monomials ordered graded-lex
over basis indices. Its kernel at m = 2 is the space of quadrics
through the embedded curve; the rank of their Jacobian at points of the
affine cone is exposed as a probe. The probe is a heuristic: it
reflects the quadrics alone, which are not known here to generate the
full ideal, so no smoothness verdict is derived from it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from .bundles import (
    LineBundle,
    SectionSpace,
    block_widths,
    flatten_section,
    multiply_sections,
    poly_jet,
    poly_value,
    power,
    section_basis,
)
from .curve import NodalCurve, PointOnLine, affine_point
from .exactlin import MatrixQ, VectorQ, as_scalar, kernel_basis, rank, solve_many

_ZERO = Fraction(0)

SAMPLE_SEED = 1105

CRITERION_SATISFIED = "criterion-satisfied"
VERIFIED_ON_SAMPLES = "verified-on-samples"
FAILED = "failed"


@dataclass(frozen=True)
class CurvePoint:
    """A closed point of the curve: smooth on a named component, or a node.

    Smooth points must not sit at marked points (those are the nodes);
    node points may carry a branch selector (0 or 1) for branch-local
    jet tests, and default to branch 0 where one trivialization must be
    chosen.
    """

    component: str | None = None
    coord: PointOnLine | None = None
    node: int | None = None
    branch: int | None = None

    @classmethod
    def smooth(cls, component: str, coord) -> "CurvePoint":
        point = coord if isinstance(coord, PointOnLine) else affine_point(coord)
        return cls(component=component, coord=point)

    @classmethod
    def at_node(cls, node_index: int, branch: int | None = None) -> "CurvePoint":
        return cls(node=node_index, branch=branch)

    @property
    def is_node(self) -> bool:
        return self.node is not None

    def __str__(self) -> str:
        if self.is_node:
            suffix = "" if self.branch is None else f"/branch:{self.branch}"
            return f"node:{self.node}{suffix}"
        return f"{self.component}:{self.coord}"


def _check_point(curve: NodalCurve, x: CurvePoint) -> None:
    if x.is_node:
        if not 0 <= x.node < len(curve.nodes):
            raise ValueError(f"node index {x.node} outside 0..{len(curve.nodes) - 1}")
        if x.branch not in (None, 0, 1):
            raise ValueError(f"branch selector must be 0 or 1, got {x.branch!r}")
        return
    if x.component is None or x.coord is None:
        raise ValueError("smooth points need a component name and a coordinate")
    comp = curve.component(x.component)
    if x.coord in comp.marked_points:
        raise ValueError(
            f"{x.coord} is a marked point of {x.component}; address it as a node point"
        )


def _branch_site(curve: NodalCurve, x: CurvePoint, branch: int | None = None) -> tuple[int, PointOnLine]:
    """Component index and coordinate where a point is evaluated.

    For node points the branch selector picks the trivialization; the
    explicit argument overrides the one stored on the point.
    """
    if x.is_node:
        node = curve.nodes[x.node]
        use = branch if branch is not None else (x.branch if x.branch is not None else 0)
        ref = node.branch_a if use == 0 else node.branch_b
        return curve.component_index(ref[0]), curve.branch_point(ref)
    return curve.component_index(x.component), x.coord


def _evaluation_vector(space: SectionSpace, x: CurvePoint, branch: int | None = None) -> VectorQ:
    curve = space.bundle.curve
    ci, point = _branch_site(curve, x, branch)
    return tuple(poly_value(s.coeffs[ci], point) for s in space.basis)


def _jet_vector(space: SectionSpace, x: CurvePoint, branch: int | None = None) -> VectorQ:
    curve = space.bundle.curve
    ci, point = _branch_site(curve, x, branch)
    return tuple(poly_jet(s.coeffs[ci], point) for s in space.basis)


def sample_points(curve: NodalCurve, extra_per_component: int = 5, seed: int = SAMPLE_SEED) -> tuple[CurvePoint, ...]:
    """Deterministic sample set: all nodes, then seeded affine points.

    The pseudo-random points avoid marked points and repeats within a
    component. Identical arguments give an identical tuple, so witness
    order and every downstream report are reproducible.
    """
    rng = random.Random(seed)
    points = [CurvePoint.at_node(k) for k in range(len(curve.nodes))]
    for comp in curve.components:
        taken = {p.coord for p in comp.marked_points if not p.is_infinity}
        chosen: list[Fraction] = []
        while len(chosen) < extra_per_component:
            candidate = Fraction(rng.randint(-24, 24), rng.randint(1, 5))
            if candidate in taken or candidate in chosen:
                continue
            chosen.append(candidate)
            points.append(CurvePoint.smooth(comp.name, candidate))
    return tuple(points)


@dataclass(frozen=True)
class AmpleVerdict:
    """Outcome of a positivity check.

    ``status`` is one of criterion-satisfied, verified-on-samples or
    failed; ``witness`` describes the first failing test in sample order
    when status is failed; ``samples_checked`` counts the individual
    direct tests that ran.
    """

    status: str
    witness: str | None
    samples_checked: int


def globally_generated(bundle: LineBundle, extra_samples: int = 5, seed: int = SAMPLE_SEED) -> AmpleVerdict:
    """Criterion: min degree >= 2. Direct mode: no sample point where
    every section vanishes."""
    space = section_basis(bundle)
    if len(space.basis) < 1:
        raise ValueError("bundle has no sections at all")
    samples = sample_points(bundle.curve, extra_samples, seed)
    witness = None
    for x in samples:
        values = _evaluation_vector(space, x)
        if all(v == 0 for v in values):
            witness = f"all sections vanish at {x}"
            break
    if witness is not None:
        return AmpleVerdict(FAILED, witness, len(samples))
    criterion = min(bundle.multidegree) >= 2
    status = CRITERION_SATISFIED if criterion else VERIFIED_ON_SAMPLES
    return AmpleVerdict(status, None, len(samples))


def separates_points(bundle: LineBundle, x: CurvePoint, y: CurvePoint) -> bool:
    """Whether sections map x and y to distinct projective points.

    Equivalent statement: the 2 x h0 matrix of basis evaluations has
    rank 2, i.e. restriction to the two points is onto.
    """
    space = section_basis(bundle)
    if len(space.basis) < 2:
        raise ValueError("need at least two sections to separate points")
    _check_point(bundle.curve, x)
    _check_point(bundle.curve, y)
    if x == y:
        raise ValueError("the two points must be distinct")
    matrix = MatrixQ.from_rows([_evaluation_vector(space, x), _evaluation_vector(space, y)])
    return rank(matrix) == 2


def separates_jets(bundle: LineBundle, x: CurvePoint) -> bool:
    """Whether sections surject onto first-order data at x.

    At a smooth point this pairs the evaluation row with the jet row.
    At a node the test is branch-local: each branch pairs the node value
    with the derivative along that branch, and both branches must pass.
    """
    space = section_basis(bundle)
    if len(space.basis) < 2:
        raise ValueError("need at least two sections to separate jets")
    _check_point(bundle.curve, x)
    if x.is_node:
        branches = (0, 1) if x.branch is None else (x.branch,)
        for b in branches:
            matrix = MatrixQ.from_rows(
                [_evaluation_vector(space, x, branch=b), _jet_vector(space, x, branch=b)]
            )
            if rank(matrix) != 2:
                return False
        return True
    matrix = MatrixQ.from_rows([_evaluation_vector(space, x), _jet_vector(space, x)])
    return rank(matrix) == 2


def very_ample(bundle: LineBundle, extra_samples: int = 5, seed: int = SAMPLE_SEED) -> AmpleVerdict:
    """Criterion: min degree >= 3. Direct mode: separation of all sample
    pairs, then jets at every sample point (branch by branch at nodes).

    ``samples_checked`` counts pair tests plus jet tests, node branches
    individually.
    """
    space = section_basis(bundle)
    if len(space.basis) < 2:
        raise ValueError("very ampleness needs at least two sections")
    samples = sample_points(bundle.curve, extra_samples, seed)
    checked = 0
    witness = None
    for i in range(len(samples)):
        if witness:
            break
        for j in range(i + 1, len(samples)):
            checked += 1
            if not separates_points(bundle, samples[i], samples[j]):
                witness = f"sections do not separate {samples[i]} and {samples[j]}"
                break
    if witness is None:
        for x in samples:
            if x.is_node:
                done = False
                for b in (0, 1):
                    checked += 1
                    if not separates_jets(bundle, CurvePoint.at_node(x.node, branch=b)):
                        witness = f"jet test fails on branch {b} of {x}"
                        done = True
                        break
                if done:
                    break
            else:
                checked += 1
                if not separates_jets(bundle, x):
                    witness = f"jet test fails at {x}"
                    break
    if witness is not None:
        return AmpleVerdict(FAILED, witness, checked)
    criterion = min(bundle.multidegree) >= 3
    status = CRITERION_SATISFIED if criterion else VERIFIED_ON_SAMPLES
    return AmpleVerdict(status, None, checked)


def embed_point(bundle: LineBundle, x: CurvePoint) -> VectorQ:
    """Projective coordinates of x under the canonical section basis.

    Node points evaluate through branch 0 by default; branch 1 returns
    the same projective point, rescaled by the inverse gluing scalar.
    """
    space = section_basis(bundle)
    _check_point(bundle.curve, x)
    values = _evaluation_vector(space, x)
    if all(v == 0 for v in values):
        raise ValueError(f"every section vanishes at {x}; the bundle is not globally generated there")
    return values


def node_images_consistent(bundle: LineBundle) -> bool:
    """Exact branch bookkeeping check at every node.

    The basis evaluation vector through branch a must equal the gluing
    scalar times the vector through branch b, entry by entry.
    """
    space = section_basis(bundle)
    for k, glue in enumerate(bundle.gluings):
        via_a = _evaluation_vector(space, CurvePoint.at_node(k), branch=0)
        via_b = _evaluation_vector(space, CurvePoint.at_node(k), branch=1)
        if any(a != glue * b for a, b in zip(via_a, via_b)):
            return False
    return True


def sym_monomials(n: int, m: int) -> tuple[tuple[int, ...], ...]:
    """Degree-m monomials in n variables as sorted index tuples,
    graded-lex order (the order combinations_with_replacement emits)."""
    return tuple(combinations_with_replacement(range(n), m))


def multiplication_map(bundle: LineBundle, m: int) -> MatrixQ:
    """Matrix of Sym^m H0(L) -> H0(L^m) in the canonical bases.

    Columns follow ``sym_monomials(h0, m)``; each column is the product
    of the chosen basis sections, expressed in the canonical basis of
    the target. Surjectivity is ``rank == h0(L^m)``. A product that
    failed to lie in the target span would mean the gluing bookkeeping
    is broken, and raises.
    """
    if m < 1:
        raise ValueError("multiplication maps are defined for m >= 1")
    space = section_basis(bundle)
    target = power(bundle, m)
    target_space = section_basis(target)
    target_cols = [flatten_section(target, s) for s in target_space.basis]
    products = []
    for mono in sym_monomials(len(space.basis), m):
        s = space.basis[mono[0]]
        for idx in mono[1:]:
            s = multiply_sections(s, space.basis[idx])
        products.append(flatten_section(target, s))
    basis_matrix = MatrixQ.from_columns(target_cols, rows=sum(block_widths(target)))
    coords = solve_many(basis_matrix, products)
    columns = []
    for mono, c in zip(sym_monomials(len(space.basis), m), coords):
        if c is None:
            raise ArithmeticError(
                f"product for monomial {mono} is not a global section of the target; "
                "gluing bookkeeping is broken"
            )
        columns.append(c)
    return MatrixQ.from_columns(columns, rows=len(target_space.basis))


def quadric_ideal(bundle: LineBundle) -> tuple[VectorQ, ...]:
    """Canonical basis of quadrics through the embedded curve.

    Coefficient vectors over ``sym_monomials(h0, 2)``; the kernel of the
    m = 2 multiplication map. For an h0-dimensional section space the
    count is ``C(h0 + 1, 2) - rank``.
    """
    return tuple(kernel_basis(multiplication_map(bundle, 2)))


def quadric_value(quadric, coords) -> Fraction:
    """Value of a quadric coefficient vector at affine coordinates."""
    values = [as_scalar(c) for c in coords]
    n = len(values)
    monos = sym_monomials(n, 2)
    if len(quadric) != len(monos):
        raise ValueError(f"quadric length {len(quadric)} does not match {len(monos)} monomials")
    acc = _ZERO
    for coeff, (i, j) in zip(quadric, monos):
        if coeff != 0:
            acc += as_scalar(coeff) * values[i] * values[j]
    return acc


def cone_point(bundle: LineBundle, x: CurvePoint, scale=1) -> VectorQ:
    """A point of the affine cone over the embedded curve: a scalar
    multiple of the section-basis evaluation vector."""
    s = as_scalar(scale)
    return tuple(s * v for v in embed_point(bundle, x))


def cone_jacobian_rank(quadrics, coords) -> int:
    """Rank of the Jacobian of the given quadrics at an affine point.

    Heuristic singularity probe: it sees only the quadrics handed in
    (normally the degree-2 part of the ideal), so a rank drop locates
    candidate singular points but proves nothing about smoothness.
    """
    values = [as_scalar(c) for c in coords]
    n = len(values)
    monos = sym_monomials(n, 2)
    rows = []
    for q in quadrics:
        if len(q) != len(monos):
            raise ValueError(f"quadric length {len(q)} does not match {len(monos)} monomials")
        grad = [_ZERO] * n
        for coeff, (i, j) in zip(q, monos):
            if coeff == 0:
                continue
            c = as_scalar(coeff)
            if i == j:
                grad[i] += 2 * c * values[i]
            else:
                grad[i] += c * values[j]
                grad[j] += c * values[i]
        rows.append(grad)
    return rank(MatrixQ.from_rows(rows, cols=n))
