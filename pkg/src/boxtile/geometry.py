"""Exact rational boxes and finite unions of boxes (polyboxes).

Every coordinate is a ``fractions.Fraction`` and every operation here is
exact.  A set is represented as a finite union of axis-aligned closed
boxes with positive side lengths; all set predicates are understood "up
to measure zero", so whether an endpoint belongs to a box never changes
a verdict.

A :class:`PolyBox` is kept in canonical form: boxes are pairwise
disjoint up to measure zero and sorted lexicographically by their
corner coordinates.  In dimension one, touching intervals are merged in
addition.  Canonicalisation is idempotent, which makes structural
equality of canonical objects meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

RationalLike = Union[Fraction, int, str]
VectorLike = Sequence[RationalLike]


class GeometryError(ValueError):
    """Base class for exact-geometry input errors."""


class DimensionMismatch(GeometryError):
    """Operands live in different ambient dimensions."""


class DegenerateInterval(GeometryError):
    """An interval with lo >= hi was supplied where a box was expected."""


def frac(x: RationalLike) -> Fraction:
    """Coerce an int, a 'p/q' string, or a Fraction to an exact Fraction.

    Floats are rejected on purpose: they would silently break exactness.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int) or isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


def vec(v: VectorLike) -> tuple[Fraction, ...]:
    return tuple(frac(c) for c in v)


@dataclass(frozen=True)
class Box:
    """Axis-aligned closed box with rational corners and positive sides."""

    intervals: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self) -> None:
        for lo, hi in self.intervals:
            if lo >= hi:
                raise DegenerateInterval(f"interval [{lo}, {hi}] has no interior")

    @property
    def dim(self) -> int:
        return len(self.intervals)

    def measure(self) -> Fraction:
        m = Fraction(1)
        for lo, hi in self.intervals:
            m *= hi - lo
        return m

    def midpoint(self) -> tuple[Fraction, ...]:
        return tuple((lo + hi) / 2 for lo, hi in self.intervals)

    def translate(self, v: Sequence[Fraction]) -> "Box":
        return Box(tuple((lo + d, hi + d) for (lo, hi), d in zip(self.intervals, v)))

    def contains_point(self, p: Sequence[Fraction]) -> bool:
        return all(lo <= x <= hi for (lo, hi), x in zip(self.intervals, p))

    def intersect(self, other: "Box") -> "Box | None":
        """Common part with positive measure, or None."""
        ivs = []
        for (alo, ahi), (blo, bhi) in zip(self.intervals, other.intervals):
            lo, hi = max(alo, blo), min(ahi, bhi)
            if lo >= hi:
                return None
            ivs.append((lo, hi))
        return Box(tuple(ivs))


def box(pairs: Iterable[tuple[RationalLike, RationalLike]]) -> Box:
    """Build a box from (lo, hi) pairs, coercing coordinates exactly."""
    return Box(tuple((frac(lo), frac(hi)) for lo, hi in pairs))


def box1d(lo: RationalLike, hi: RationalLike) -> Box:
    return box([(lo, hi)])


def unit_box(dim: int) -> Box:
    return Box(tuple((Fraction(0), Fraction(1)) for _ in range(dim)))


@dataclass(frozen=True)
class PolyBox:
    """Canonical finite union of boxes: disjoint (a.e.) and sorted."""

    dim: int
    boxes: tuple[Box, ...]

    def __post_init__(self) -> None:
        for b in self.boxes:
            if b.dim != self.dim:
                raise DimensionMismatch(
                    f"box of dimension {b.dim} inside a {self.dim}-dimensional set"
                )

    def is_empty(self) -> bool:
        return not self.boxes


def _box_sort_key(b: Box):
    return tuple(c for iv in b.intervals for c in iv)


def _subtract_box(b: Box, cutter: Box) -> list[Box]:
    """b minus cutter as disjoint boxes (guillotine splitting)."""
    inter = b.intersect(cutter)
    if inter is None:
        return [b]
    pieces: list[Box] = []
    rest = list(b.intervals)
    for ax in range(b.dim):
        lo, hi = rest[ax]
        clo, chi = inter.intervals[ax]
        if lo < clo:
            ivs = list(rest)
            ivs[ax] = (lo, clo)
            pieces.append(Box(tuple(ivs)))
        if chi < hi:
            ivs = list(rest)
            ivs[ax] = (chi, hi)
            pieces.append(Box(tuple(ivs)))
        rest[ax] = (clo, chi)
    return pieces


def _merge_1d(boxes: list[Box]) -> list[Box]:
    """Merge touching or overlapping intervals (canonical 1D form)."""
    if not boxes:
        return []
    ordered = sorted(boxes, key=_box_sort_key)
    merged: list[tuple[Fraction, Fraction]] = [ordered[0].intervals[0]]
    for b in ordered[1:]:
        lo, hi = b.intervals[0]
        plo, phi = merged[-1]
        if lo <= phi:
            merged[-1] = (plo, max(phi, hi))
        else:
            merged.append((lo, hi))
    return [Box((iv,)) for iv in merged]


def _canonical(dim: int, disjoint: list[Box]) -> PolyBox:
    if dim == 1:
        disjoint = _merge_1d(disjoint)
    return PolyBox(dim, tuple(sorted(disjoint, key=_box_sort_key)))


def _coerce_box(raw, dim: int, drop_degenerate: bool) -> Box | None:
    if isinstance(raw, Box):
        b = raw
    else:
        try:
            b = box(raw)
        except DegenerateInterval:
            if drop_degenerate:
                return None
            raise
    if b.dim != dim:
        raise DimensionMismatch(f"expected dimension {dim}, got {b.dim}")
    return b


def make_polybox(dim: int, raw_boxes: Iterable, *, drop_degenerate: bool = False) -> PolyBox:
    """Canonicalise a collection of boxes into a PolyBox.

    Overlapping inputs are merged without double counting: each new box
    is split against the boxes already kept, so the result is a disjoint
    cover of the union.  Degenerate intervals (lo >= hi) are rejected
    unless ``drop_degenerate`` is set, in which case they are silently
    skipped; they carry no measure either way.
    """
    if dim < 1:
        raise GeometryError("dimension must be a positive integer")
    disjoint: list[Box] = []
    for raw in raw_boxes:
        nb = _coerce_box(raw, dim, drop_degenerate)
        if nb is None:
            continue
        pieces = [nb]
        for existing in disjoint:
            nxt: list[Box] = []
            for p in pieces:
                nxt.extend(_subtract_box(p, existing))
            pieces = nxt
            if not pieces:
                break
        disjoint.extend(pieces)
    return _canonical(dim, disjoint)


def empty_polybox(dim: int) -> PolyBox:
    return PolyBox(dim, ())


def from_box(b: Box) -> PolyBox:
    return PolyBox(b.dim, (b,))


def interval_union(*pairs: tuple[RationalLike, RationalLike]) -> PolyBox:
    """1D convenience constructor: a union of intervals."""
    return make_polybox(1, [[(lo, hi)] for lo, hi in pairs])


def unit_cube(dim: int) -> PolyBox:
    return from_box(unit_box(dim))


def measure(P: PolyBox) -> Fraction:
    """Exact Lebesgue measure: boxes are disjoint so a plain sum works."""
    return sum((b.measure() for b in P.boxes), Fraction(0))


def translate(P: PolyBox, v: VectorLike) -> PolyBox:
    w = vec(v)
    if len(w) != P.dim:
        raise DimensionMismatch(f"vector of dimension {len(w)} on a {P.dim}-dim set")
    # Uniform shifts preserve disjointness, ordering and 1D merging.
    return PolyBox(P.dim, tuple(b.translate(w) for b in P.boxes))


def _check_dims(P: PolyBox, Q: PolyBox) -> None:
    if P.dim != Q.dim:
        raise DimensionMismatch(f"dimension {P.dim} vs {Q.dim}")


def intersect(P: PolyBox, Q: PolyBox) -> PolyBox:
    _check_dims(P, Q)
    out: list[Box] = []
    for p in P.boxes:
        for q in Q.boxes:
            r = p.intersect(q)
            if r is not None:
                out.append(r)
    return _canonical(P.dim, out)


def difference(P: PolyBox, Q: PolyBox) -> PolyBox:
    _check_dims(P, Q)
    out: list[Box] = []
    for p in P.boxes:
        pieces = [p]
        for q in Q.boxes:
            nxt: list[Box] = []
            for piece in pieces:
                nxt.extend(_subtract_box(piece, q))
            pieces = nxt
            if not pieces:
                break
        out.extend(pieces)
    return _canonical(P.dim, out)


def union(P: PolyBox, Q: PolyBox) -> PolyBox:
    _check_dims(P, Q)
    return make_polybox(P.dim, list(P.boxes) + list(Q.boxes))


def symm_diff(P: PolyBox, Q: PolyBox) -> PolyBox:
    _check_dims(P, Q)
    a = difference(P, Q)
    b = difference(Q, P)
    return _canonical(P.dim, list(a.boxes) + list(b.boxes))


def equal_ae(P: PolyBox, Q: PolyBox) -> bool:
    """Equality up to measure zero."""
    return symm_diff(P, Q).is_empty()


def contains_ae(P: PolyBox, Q: PolyBox) -> bool:
    """True when Q is a subset of P up to measure zero."""
    return difference(Q, P).is_empty()


def bounding_box(P: PolyBox) -> Box:
    if P.is_empty():
        raise GeometryError("empty set has no bounding box")
    ivs = []
    for ax in range(P.dim):
        ivs.append(
            (
                min(b.intervals[ax][0] for b in P.boxes),
                max(b.intervals[ax][1] for b in P.boxes),
            )
        )
    return Box(tuple(ivs))


def contains_point(P: PolyBox, p: VectorLike) -> bool:
    """Closed-box point membership; used for diagnostics, not verdicts."""
    w = vec(p)
    return any(b.contains_point(w) for b in P.boxes)
