"""Deterministic SVG rendering of covector decompositions for d = 3.

Points of the projective torus are drawn in the plane x_1 = 0, so a
point x maps to the pair (x_2 - x_1, x_3 - x_1).  The picture shows the
1-skeleton of the decomposition: vertices as dots, bounded edges as
segments, unbounded edges clipped at a dashed frame marking the
projective boundary.  Coordinates in the output are rounded to two
decimals, which makes the bytes reproducible.
"""

from __future__ import annotations

from fractions import Fraction

from .covector import CellRecord, cell_sample_point, enumerate_cells
from .digraph import WeightedDigraph, recession
from .envelope import PointConfig, face_projection_matrix
from .errors import CapabilityError
from .semiring import is_finite

_SIZE = 420
_MARGIN = 10


def _norm(x) -> tuple[Fraction, Fraction]:
    return (x[1] - x[0], x[2] - x[0])


def _directions(v: PointConfig, cell: CellRecord) -> list[tuple[Fraction, Fraction]]:
    """Recession directions of a torus cell, normalized to the plane x_1 = 0."""
    m = face_projection_matrix(v, cell.graph)
    arcs = {
        (i, j): m.entry(i, j)
        for i in range(1, 4)
        for j in range(1, 4)
        if i != j and is_finite(m.entry(i, j))
    }
    rec = recession(WeightedDigraph(3, arcs))
    dirs = []
    for r in rec.ray_generators:
        dx = (Fraction(r[1] - r[0]), Fraction(r[2] - r[0]))
        if dx != (0, 0) and dx not in dirs:
            dirs.append(dx)
    for r in rec.lineality_generators:
        dx = (Fraction(r[1] - r[0]), Fraction(r[2] - r[0]))
        if dx != (0, 0):
            for cand in (dx, (-dx[0], -dx[1])):
                if cand not in dirs:
                    dirs.append(cand)
    return dirs


def _clip_ray(p, d, r: Fraction) -> tuple[Fraction, Fraction]:
    """Point where the ray p + t d leaves the square [-r, r]^2."""
    ts = []
    for c in range(2):
        if d[c] > 0:
            ts.append((r - p[c]) / d[c])
        elif d[c] < 0:
            ts.append((-r - p[c]) / d[c])
    t = min(ts)
    return (p[0] + t * d[0], p[1] + t * d[1])


def render_svg(v: PointConfig) -> str:
    if v.d != 3:
        raise CapabilityError(f"SVG rendering supports d = 3 only, got d = {v.d}")
    cells = enumerate_cells(v)
    zero = [c for c in cells if c.dimension == 0]
    one = [c for c in cells if c.dimension == 1]
    verts = {c: _norm(cell_sample_point(v, c)) for c in zero}

    coords = [q for p in verts.values() for q in p]
    rmax = max((abs(q) for q in coords), default=Fraction(0))
    r = Fraction(max(4, int(rmax) + 2))
    scale = Fraction(_SIZE - 2 * _MARGIN, 2 * r)

    def to_px(p) -> tuple[str, str]:
        x = _MARGIN + (p[0] + r) * scale
        y = _MARGIN + (r - p[1]) * scale
        return (f"{float(x):.2f}", f"{float(y):.2f}")

    segments: list[tuple[tuple, tuple]] = []
    for c in one:
        ends = [verts[z] for z in zero if c.graph.arcs <= z.graph.arcs]
        ends.sort()
        if len(ends) >= 2:
            segments.append((ends[0], ends[-1]))
            continue
        dirs = _directions(v, c)
        base = ends[0] if ends else _norm(cell_sample_point(v, c))
        if not ends and len(dirs) >= 2:
            # a full line: extend in both directions from the sample point
            segments.append((_clip_ray(base, dirs[0], r), _clip_ray(base, dirs[1], r)))
        else:
            for d in dirs:
                segments.append((base, _clip_ray(base, d, r)))

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SIZE}" height="{_SIZE}" '
        f'viewBox="0 0 {_SIZE} {_SIZE}">',
        f'  <rect x="{_MARGIN}" y="{_MARGIN}" width="{_SIZE - 2 * _MARGIN}" '
        f'height="{_SIZE - 2 * _MARGIN}" fill="none" stroke="black" '
        'stroke-dasharray="6,4" stroke-width="1"/>',
    ]
    for a, b in sorted(segments):
        (x1, y1), (x2, y2) = to_px(a), to_px(b)
        out.append(
            f'  <line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
            'stroke="black" stroke-width="1.5"/>'
        )
    for c in sorted(zero, key=CellRecord.sort_key):
        x, y = to_px(verts[c])
        out.append(f'  <circle cx="{x}" cy="{y}" r="3.5" fill="black"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
