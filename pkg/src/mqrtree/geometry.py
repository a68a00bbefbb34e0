"""Integer rectangle arithmetic shared by both spatial indexes.

Everything lives on a discrete grid: centroids round down, so quadrant
decisions and the shift-region decomposition stay exact.  Rectangles with
inverted corners are legal values here and behave as empty sets in every
predicate; the shift-region decomposition emits such rectangles on purpose
for directions that have nothing to move.
"""

from __future__ import annotations

import enum
from typing import List, NamedTuple

Coord = int

#: Quantization factor applied when ingesting fractional coordinates.
DEFAULT_QUANT_SCALE = 100

#: Coordinates beyond this are rejected by loaders; keeps derived areas
#: comfortably inside exact integer range on any platform.
COORD_LIMIT = 1 << 40


class Quadrant(enum.IntEnum):
    """Node slot labels, also used as orientation results.

    The integer values fix the canonical slot order used for iteration,
    dumping and searching.
    """

    NE = 0
    NW = 1
    SW = 2
    SE = 3
    EQ = 4


class Point(NamedTuple):
    x: Coord
    y: Coord


class MBR:
    """Axis-aligned bounding rectangle with a cached floor-midpoint centroid.

    Degenerate rectangles (points, horizontal/vertical segments) are
    first-class citizens and have zero area.  ``lx > hx`` or ``ly > hy``
    denotes an empty rectangle; predicates treat it as containing nothing.
    """

    __slots__ = ("lx", "ly", "hx", "hy", "cx", "cy")

    def __init__(self, lx: Coord, ly: Coord, hx: Coord, hy: Coord):
        self.lx = lx
        self.ly = ly
        self.hx = hx
        self.hy = hy
        # floor division: rounds toward -inf for negative sums as well
        self.cx = (lx + hx) // 2
        self.cy = (ly + hy) // 2

    @property
    def is_empty(self) -> bool:
        return self.lx > self.hx or self.ly > self.hy

    def area(self) -> int:
        w = self.hx - self.lx
        h = self.hy - self.ly
        if w <= 0 or h <= 0:
            return 0
        return w * h

    def contains_mbr(self, other: "MBR") -> bool:
        """True iff ``other`` lies entirely inside this rectangle."""
        return (self.lx <= other.lx and self.ly <= other.ly
                and self.hx >= other.hx and self.hy >= other.hy)

    def corners(self):
        return (self.lx, self.ly, self.hx, self.hy)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MBR):
            return NotImplemented
        return (self.lx == other.lx and self.ly == other.ly
                and self.hx == other.hx and self.hy == other.hy)

    def __hash__(self) -> int:
        return hash((self.lx, self.ly, self.hx, self.hy))

    def __repr__(self) -> str:
        return f"MBR({self.lx}, {self.ly}, {self.hx}, {self.hy})"


class ShiftedRegion(NamedTuple):
    """A rectangle whose occupants changed quadrant when a node centroid moved.

    ``source`` is the slot to scan, ``dest`` the slot its occupants belong to
    relative to the new centroid.
    """

    source: Quadrant
    dest: Quadrant
    region: MBR


def centroid(m: MBR) -> Point:
    """Floor midpoint of a rectangle."""
    return Point(m.cx, m.cy)


def orientation(a: Point, b: Point) -> Quadrant:
    """Quadrant of point ``a`` relative to point ``b``.

    Ties on the axes resolve east->NE, north->NW, west->SW, south->SE;
    only an exact match yields EQ.
    """
    ax, ay = a
    bx, by = b
    if ax > bx:
        return Quadrant.NE if ay >= by else Quadrant.SE
    if ax < bx:
        return Quadrant.NW if ay > by else Quadrant.SW
    if ay > by:
        return Quadrant.NW
    if ay < by:
        return Quadrant.SE
    return Quadrant.EQ


def find_insert_quad(new_mbr: MBR, node_mbr: MBR) -> Quadrant:
    """Slot a rectangle belongs to inside a node, by centroid orientation."""
    return orientation(Point(new_mbr.cx, new_mbr.cy),
                       Point(node_mbr.cx, node_mbr.cy))


def merge_mbrs(target: MBR, other: MBR) -> MBR:
    """Minimal rectangle enclosing both inputs (centroid recomputed)."""
    lx = target.lx if target.lx <= other.lx else other.lx
    ly = target.ly if target.ly <= other.ly else other.ly
    hx = target.hx if target.hx >= other.hx else other.hx
    hy = target.hy if target.hy >= other.hy else other.hy
    return MBR(lx, ly, hx, hy)


def overlaps(a: MBR, b: MBR) -> bool:
    """Closed-boundary intersection test: shared edges and corners count."""
    return (max(a.lx, b.lx) <= min(a.hx, b.hx)
            and max(a.ly, b.ly) <= min(a.hy, b.hy))


def centroid_within(m: MBR, region: MBR) -> bool:
    """True iff the centroid of ``m`` lies in the closed ``region``."""
    return (region.lx <= m.cx <= region.hx
            and region.ly <= m.cy <= region.hy)


def intersection_area(a: MBR, b: MBR) -> int:
    """Geometric area of the intersection; edge/corner contact contributes 0."""
    w = min(a.hx, b.hx) - max(a.lx, b.lx)
    if w <= 0:
        return 0
    h = min(a.hy, b.hy) - max(a.ly, b.ly)
    if h <= 0:
        return 0
    return w * h


def quantize(value: float, scale: int = DEFAULT_QUANT_SCALE) -> Coord:
    """Scale and round-half-up a fractional coordinate onto the grid."""
    scaled = value * scale
    q = int(scaled // 1)  # floor
    return q + 1 if scaled - q >= 0.5 else q


def shifted_subregions(orig: MBR, new: MBR) -> List[ShiftedRegion]:
    """Decompose a node-MBR change into per-quadrant relocation regions.

    One rectangle must contain the other: a grown rectangle is an
    expansion, a shrunk one a contraction.  The result transcribes, for the
    detected direction of centroid movement, the seven regions whose
    occupants are no longer in their proper slot.  Regions are emitted even
    when geometrically empty (possibly with inverted corners); callers skip
    regions that contain no centroids.

    Every emitted region satisfies: any point inside it whose old
    orientation equals ``source`` has new orientation ``dest``.  Together
    the regions cover exactly the points whose orientation changed.  The
    exhaustive grid oracle in the test suite checks both claims.
    """
    if orig.corners() == new.corners():
        return []
    if new.contains_mbr(orig):
        dom = orig
    elif orig.contains_mbr(new):
        dom = new
    else:
        raise ValueError(f"neither rectangle contains the other: {orig} / {new}")

    ox, oy = orig.cx, orig.cy
    nx, ny = new.cx, new.cy
    d = orientation(Point(nx, ny), Point(ox, oy))
    if d == Quadrant.EQ:
        return []

    Q = Quadrant
    R = MBR
    if d == Q.NE:
        return [
            ShiftedRegion(Q.NE, Q.EQ, R(nx, ny, nx, ny)),
            ShiftedRegion(Q.NE, Q.SE, R(nx, oy, dom.hx, ny - 1)),
            ShiftedRegion(Q.NE, Q.SW, R(ox + 1, oy, nx - 1, ny)),
            ShiftedRegion(Q.SE, Q.SW, R(ox, dom.ly, nx - 1, oy - 1)),
            ShiftedRegion(Q.NW, Q.SW, R(dom.lx, oy + 1, ox, ny)),
            ShiftedRegion(Q.EQ, Q.SW, dom),
            ShiftedRegion(Q.NE, Q.NW, R(ox + 1, ny + 1, nx, dom.hy)),
        ]
    if d == Q.SE:
        return [
            ShiftedRegion(Q.SE, Q.EQ, R(nx, ny, nx, ny)),
            ShiftedRegion(Q.SE, Q.SW, R(ox, dom.ly, nx - 1, ny)),
            ShiftedRegion(Q.SE, Q.NW, R(ox, ny + 1, nx, oy - 1)),
            ShiftedRegion(Q.SW, Q.NW, R(dom.lx, ny + 1, ox - 1, oy)),
            ShiftedRegion(Q.NE, Q.NW, R(ox + 1, oy, nx, dom.hy)),
            ShiftedRegion(Q.EQ, Q.NW, dom),
            ShiftedRegion(Q.SE, Q.NE, R(nx + 1, ny, dom.hx, oy - 1)),
        ]
    if d == Q.SW:
        return [
            ShiftedRegion(Q.SW, Q.EQ, R(nx, ny, nx, ny)),
            ShiftedRegion(Q.SW, Q.NW, R(dom.lx, ny + 1, nx, oy)),
            ShiftedRegion(Q.SW, Q.NE, R(nx + 1, ny, ox - 1, oy)),
            ShiftedRegion(Q.NW, Q.NE, R(nx + 1, oy + 1, ox, dom.hy)),
            ShiftedRegion(Q.SE, Q.NE, R(ox, ny, dom.hx, oy - 1)),
            ShiftedRegion(Q.EQ, Q.NE, dom),
            ShiftedRegion(Q.SW, Q.SE, R(nx, dom.ly, ox - 1, ny - 1)),
        ]
    # d == Q.NW
    return [
        ShiftedRegion(Q.NW, Q.EQ, R(nx, ny, nx, ny)),
        ShiftedRegion(Q.NW, Q.NE, R(nx + 1, ny, ox, dom.hy)),
        ShiftedRegion(Q.NW, Q.SE, R(nx, oy + 1, ox, ny - 1)),
        ShiftedRegion(Q.NE, Q.SE, R(ox + 1, oy, dom.hx, ny - 1)),
        ShiftedRegion(Q.SW, Q.SE, R(nx, dom.ly, ox - 1, oy)),
        ShiftedRegion(Q.EQ, Q.SE, dom),
        ShiftedRegion(Q.NW, Q.SW, R(dom.lx, oy + 1, nx - 1, ny)),
    ]
