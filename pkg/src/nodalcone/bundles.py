"""Line bundles on nodal curves: sections, cohomology, duality.

A line bundle is a multidegree (one integer per component) plus one
nonzero gluing scalar per node. Its sections are tuples of polynomials,
one per component: on a component of degree ``d >= 0`` a section is a
coefficient vector ``(a_0, ..., a_d)`` for ``a_0 + a_1 t + ... + a_d t^d``,
and on a component of negative degree the zero polynomial, stored as an
empty vector. The trivialization at infinity is the standard one for
the chart ``u = 1/t``: evaluation at infinity reads off the leading
coefficient ``a_d`` and the first-order jet there reads off ``a_{d-1}``.

A global section must satisfy one linear constraint per node: with the
node's branches at marked points p (on component i) and q (on component
j), and gluing scalar g,

    value of the i-th polynomial at p  =  g * value of the j-th at q.

Stacking these rows gives the gluing matrix; the section space is its
kernel and ``h1`` comes from its corank plus the classical line-bundle
contributions of the components. Both are exact integers computed over
Fraction arithmetic, never estimated.

The dualizing bundle is realized concretely: on a component whose
branch points are D, a section of it is the differential
``f(t) dt / prod_{p in D} (t - p)`` with ``deg f <= |D| - 2``, and the
node constraints say that residues at the two branches of each node sum
to zero. Written in the trivialization above, that makes the gluing
scalar at a node with branches (i, p), (j, q) equal to ``-c_p / c_q``
where ``c_p = prod_{p' in D_i, p' != p} (p - p')``. This requires every
marked point to be affine; normalize with the affine-safe style first.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .curve import NodalCurve, PointOnLine, validate
from .exactlin import MatrixQ, VectorQ, as_scalar, kernel_basis, rank

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class LineBundle:
    """Multidegree plus one nonzero gluing scalar per node of the curve."""

    curve: NodalCurve
    multidegree: tuple[int, ...]
    gluings: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        degrees = tuple(int(d) for d in self.multidegree)
        object.__setattr__(self, "multidegree", degrees)
        scalars = tuple(as_scalar(g) for g in self.gluings)
        object.__setattr__(self, "gluings", scalars)
        if len(degrees) != len(self.curve.components):
            raise ValueError(
                f"multidegree has {len(degrees)} entries for "
                f"{len(self.curve.components)} components"
            )
        if len(scalars) != len(self.curve.nodes):
            raise ValueError(
                f"{len(scalars)} gluing scalars for {len(self.curve.nodes)} nodes"
            )
        for k, g in enumerate(scalars):
            if g == 0:
                raise ValueError(f"gluing scalar at node {k} is zero")

    def degree(self) -> int:
        return sum(self.multidegree)


def line_bundle(curve: NodalCurve, multidegree, gluings=None) -> LineBundle:
    """Build a bundle; gluing scalars default to 1 at every node."""
    if gluings is None:
        gluings = (_ONE,) * len(curve.nodes)
    return LineBundle(curve, tuple(multidegree), tuple(gluings))


def trivial_bundle(curve: NodalCurve) -> LineBundle:
    return line_bundle(curve, (0,) * len(curve.components))


def component_h0(d: int) -> int:
    """Sections of O(d) on one projective line: d + 1 for d >= 0, else 0."""
    return d + 1 if d >= 0 else 0


def component_h1(d: int) -> int:
    """h1 of O(d) on one projective line: -d - 1 for d <= -2, else 0."""
    return -d - 1 if d <= -2 else 0


def evaluation_row(d: int, p: PointOnLine) -> VectorQ:
    """Row of the evaluation functional on degree <= d polynomials.

    Affine p gives ``(1, p, p^2, ..., p^d)``; infinity selects the
    leading coefficient. Negative d has no coefficient slots at all, so
    it is a caller error rather than an empty row.
    """
    if d < 0:
        raise ValueError("no evaluation row on a negative-degree component")
    if p.is_infinity:
        return tuple(_ZERO for _ in range(d)) + (_ONE,)
    acc = _ONE
    out = []
    for _ in range(d + 1):
        out.append(acc)
        acc = acc * p.coord
    return tuple(out)


def jet_row(d: int, p: PointOnLine) -> VectorQ:
    """Row of the first-order jet functional at p on degree <= d polynomials.

    Affine p: the formal derivative, ``(0, 1, 2p, ..., d p^{d-1})``.
    Infinity: in the chart u = 1/t a section reads ``sum a_k u^{d-k}``,
    whose derivative at u = 0 is ``a_{d-1}``, so the row selects that
    coefficient. Degree 0 bundles have no first-order data, hence d >= 1.
    """
    if d <= 0:
        raise ValueError("jet rows need degree at least 1")
    if p.is_infinity:
        return tuple(_ONE if k == d - 1 else _ZERO for k in range(d + 1))
    out = [_ZERO]
    power = _ONE
    for k in range(1, d + 1):
        out.append(k * power)
        power = power * p.coord
    return tuple(out)


def poly_value(coeffs: VectorQ, p: PointOnLine) -> Fraction:
    """Value of a coefficient vector at p; an empty block is the zero section."""
    if not coeffs:
        return _ZERO
    if p.is_infinity:
        return coeffs[-1]
    acc = _ZERO
    for c in reversed(coeffs):
        acc = acc * p.coord + c
    return acc


def poly_jet(coeffs: VectorQ, p: PointOnLine) -> Fraction:
    """First-order jet of a coefficient vector at p; zero when the block
    has no degree-1 data (length < 2)."""
    if len(coeffs) < 2:
        return _ZERO
    if p.is_infinity:
        return coeffs[-2]
    acc = _ZERO
    for k in range(len(coeffs) - 1, 0, -1):
        acc = acc * p.coord + k * coeffs[k]
    return acc


def block_widths(bundle: LineBundle) -> tuple[int, ...]:
    """Coefficient-vector length per component: ``max(0, d + 1)``."""
    return tuple(max(0, d + 1) for d in bundle.multidegree)


def _block_offsets(widths: tuple[int, ...]) -> tuple[int, ...]:
    offsets = []
    total = 0
    for w in widths:
        offsets.append(total)
        total += w
    return tuple(offsets)


def gluing_matrix(bundle: LineBundle) -> MatrixQ:
    """One row per node over the concatenated coefficient blocks.

    The row is the branch-a evaluation minus the gluing scalar times the
    branch-b evaluation. Blocks of negative-degree components have width
    zero, so a branch landing there simply contributes nothing; for a
    self-node both contributions land in the same block.
    """
    curve = bundle.curve
    problems = validate(curve)
    if problems:
        raise ValueError("invalid curve: " + "; ".join(problems))
    widths = block_widths(bundle)
    offsets = _block_offsets(widths)
    total = sum(widths)
    rows = []
    for node, glue in zip(curve.nodes, bundle.gluings):
        row = [_ZERO] * total
        for branch, sign_scale in ((node.branch_a, _ONE), (node.branch_b, -glue)):
            ci = curve.component_index(branch[0])
            if widths[ci] == 0:
                continue
            point = curve.components[ci].marked_points[branch[1]]
            ev = evaluation_row(bundle.multidegree[ci], point)
            base = offsets[ci]
            for k, val in enumerate(ev):
                row[base + k] += sign_scale * val
        rows.append(row)
    return MatrixQ.from_rows(rows, cols=total)


@dataclass(frozen=True)
class Section:
    """Per-component coefficient vectors; empty vector = zero polynomial."""

    coeffs: tuple[VectorQ, ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "coeffs", tuple(tuple(as_scalar(c) for c in block) for block in self.coeffs)
        )


@dataclass(frozen=True)
class SectionSpace:
    """A bundle together with the canonical basis of its global sections.

    Basis order is the canonical kernel order of the gluing matrix, so
    it is deterministic and forms part of downstream contracts (embedding
    coordinates, monomial indexing).
    """

    bundle: LineBundle
    basis: tuple[Section, ...]


def section_from_vector(bundle: LineBundle, vec) -> Section:
    widths = block_widths(bundle)
    vals = tuple(as_scalar(v) for v in vec)
    if len(vals) != sum(widths):
        raise ValueError(f"vector length {len(vals)} does not match total width {sum(widths)}")
    blocks = []
    at = 0
    for w in widths:
        blocks.append(vals[at : at + w])
        at += w
    return Section(tuple(blocks))


def flatten_section(bundle: LineBundle, section: Section) -> VectorQ:
    """Concatenated coefficient vector in the bundle's block layout.

    Zero blocks (empty vectors) pad out to the bundle's width, which is
    what lets products of sections with collapsed blocks re-enter linear
    algebra at the correct shape.
    """
    widths = block_widths(bundle)
    if len(section.coeffs) != len(widths):
        raise ValueError("section has the wrong number of component blocks")
    flat: list[Fraction] = []
    for w, block in zip(widths, section.coeffs):
        if len(block) == w:
            flat.extend(block)
        elif len(block) == 0:
            flat.extend([_ZERO] * w)
        else:
            raise ValueError(f"block of length {len(block)} does not fit width {w}")
    return tuple(flat)


def section_basis(bundle: LineBundle) -> SectionSpace:
    """Canonical basis of global sections: kernel of the gluing matrix."""
    kernel = kernel_basis(gluing_matrix(bundle))
    return SectionSpace(bundle, tuple(section_from_vector(bundle, v) for v in kernel))


def h0(bundle: LineBundle) -> int:
    """dim of global sections: total coefficient slots minus gluing rank."""
    matrix = gluing_matrix(bundle)
    return matrix.cols - rank(matrix)


def h1_direct(bundle: LineBundle) -> int:
    """First cohomology, computed rather than inferred from a formula.

    The normalization exact sequence gives
    ``h1 = (#nodes - rank of the gluing matrix) + sum_i h1(O(d_i))``.
    """
    matrix = gluing_matrix(bundle)
    corank = matrix.rows - rank(matrix)
    return corank + sum(component_h1(d) for d in bundle.multidegree)


def evaluate_section(curve: NodalCurve, section: Section, component_name: str, p: PointOnLine) -> Fraction:
    """Value of a section on one component, in that component's trivialization."""
    idx = curve.component_index(component_name)
    block = section.coeffs[idx]
    if not block:
        raise ValueError(
            f"component {component_name} carries negative degree; "
            "the section has no coefficients there"
        )
    return poly_value(block, p)


def multiply_sections(a: Section, b: Section) -> Section:
    """Componentwise polynomial product.

    A section of L' times a section of L'' lies in L' (x) L''; blocks
    multiply by convolution and a zero (empty) factor block collapses
    the product block to empty.
    """
    if len(a.coeffs) != len(b.coeffs):
        raise ValueError("sections live on curves with different component counts")
    blocks = []
    for x, y in zip(a.coeffs, b.coeffs):
        if not x or not y:
            blocks.append(())
            continue
        out = [_ZERO] * (len(x) + len(y) - 1)
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                out[i + j] += xi * yj
        blocks.append(tuple(out))
    return Section(tuple(blocks))


def section_satisfies_gluing(bundle: LineBundle, section: Section) -> bool:
    """Exact check of every node constraint for one section."""
    curve = bundle.curve
    for node, glue in zip(curve.nodes, bundle.gluings):
        ia = curve.component_index(node.branch_a[0])
        ib = curve.component_index(node.branch_b[0])
        pa = curve.components[ia].marked_points[node.branch_a[1]]
        pb = curve.components[ib].marked_points[node.branch_b[1]]
        if poly_value(section.coeffs[ia], pa) != glue * poly_value(section.coeffs[ib], pb):
            return False
    return True


def _same_curve(a: LineBundle, b: LineBundle) -> None:
    if a.curve != b.curve:
        raise ValueError("bundles live on different curves")


def tensor(a: LineBundle, b: LineBundle) -> LineBundle:
    """Multidegrees add, gluing scalars multiply."""
    _same_curve(a, b)
    return LineBundle(
        a.curve,
        tuple(x + y for x, y in zip(a.multidegree, b.multidegree)),
        tuple(x * y for x, y in zip(a.gluings, b.gluings)),
    )


def dual(bundle: LineBundle) -> LineBundle:
    """Multidegree negates, gluing scalars invert."""
    return LineBundle(
        bundle.curve,
        tuple(-d for d in bundle.multidegree),
        tuple(_ONE / g for g in bundle.gluings),
    )


def power(bundle: LineBundle, m: int) -> LineBundle:
    """m-th tensor power; m may be negative or zero."""
    m = int(m)
    return LineBundle(
        bundle.curve,
        tuple(d * m for d in bundle.multidegree),
        tuple(g**m for g in bundle.gluings),
    )


def dualizing_bundle(curve: NodalCurve) -> LineBundle:
    """The dualizing sheaf as an explicit line bundle.

    Sections on a component with branch points D are differentials
    ``f(t) dt / prod_{p in D}(t - p)``, ``deg f <= |D| - 2``, glued by
    the residue condition; see the module docstring for the resulting
    degree-(|D| - 2) trivialization and the ``-c_p / c_q`` scalars.
    Marked points must all be affine.
    """
    problems = validate(curve)
    if problems:
        raise ValueError("invalid curve: " + "; ".join(problems))
    for comp in curve.components:
        for p in comp.marked_points:
            if p.is_infinity:
                raise ValueError(
                    f"component {comp.name} has a marked point at infinity; "
                    "normalize with the affine-safe style first"
                )
    multidegree = tuple(len(comp.marked_points) - 2 for comp in curve.components)

    def cofactor(component_index: int, point_index: int) -> Fraction:
        comp = curve.components[component_index]
        p = comp.marked_points[point_index].coord
        acc = _ONE
        for k, other in enumerate(comp.marked_points):
            if k != point_index:
                acc *= p - other.coord
        return acc

    gluings = []
    for node in curve.nodes:
        ia = curve.component_index(node.branch_a[0])
        ib = curve.component_index(node.branch_b[0])
        gluings.append(-cofactor(ia, node.branch_a[1]) / cofactor(ib, node.branch_b[1]))
    return LineBundle(curve, multidegree, tuple(gluings))


def tangent_bundle(curve: NodalCurve) -> LineBundle:
    """Inverse of the dualizing bundle.

    For these curves the dualizing bundle has degree ``2 p_a - 2``; its
    inverse is what the deformation theory of the cone tensors against.
    This package takes that inverse as the definition of the tangent
    bundle.
    """
    return dual(dualizing_bundle(curve))


@dataclass(frozen=True)
class RiemannRochReport:
    h0: int
    h1: int
    degree: int
    genus: int

    @property
    def balanced(self) -> bool:
        return self.h0 - self.h1 == self.degree - self.genus + 1


def riemann_roch_report(bundle: LineBundle) -> RiemannRochReport:
    """h0, h1, degree and genus, with the Euler-characteristic identity."""
    from .curve import arithmetic_genus

    return RiemannRochReport(
        h0=h0(bundle),
        h1=h1_direct(bundle),
        degree=bundle.degree(),
        genus=arithmetic_genus(bundle.curve),
    )


def serre_duality_check(bundle: LineBundle) -> bool:
    """Exact check that h1 of the bundle equals h0 of (dualizing (x) dual)."""
    omega = dualizing_bundle(bundle.curve)
    return h1_direct(bundle) == h0(tensor(omega, dual(bundle)))
