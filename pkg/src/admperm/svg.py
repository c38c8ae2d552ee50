"""Deterministic SVG pictures of rank-2 alcove sets.

The root span is drawn in an orthonormal frame obtained from the simple coroots.
Coordinates are floats only at this last step, always printed with "%.3f", so
the same input always produces the same bytes.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable
from xml.sax.saxutils import escape

from .affine import ExtAffineElement
from .errors import ConfigurationError
from .exact import dot
from .rootsys import RootDatum

SIZE = 480


def _frame(datum: RootDatum) -> list:
    """Orthonormal float basis (e1, e2) of the root span."""
    basis = []
    for c in datum.simple_coroots:
        v = [float(a) for a in c]
        for b in basis:
            p = sum(x * y for x, y in zip(v, b))
            v = [x - p * y for x, y in zip(v, b)]
        n = math.sqrt(sum(x * x for x in v))
        basis.append([x / n for x in v])
    return basis


def _project(frame, p) -> tuple:
    q = [float(Fraction(a)) for a in p]
    return tuple(sum(x * y for x, y in zip(q, b)) for b in frame)


def _clip_line(normal, k, half):
    """Segment of {x : normal . x = k} inside the square [-half, half]^2."""
    a, b = normal
    pts = []
    for x in (-half, half):
        if abs(b) > 1e-12:
            y = (k - a * x) / b
            if -half - 1e-9 <= y <= half + 1e-9:
                pts.append((x, y))
    for y in (-half, half):
        if abs(a) > 1e-12:
            x = (k - b * y) / a
            if -half - 1e-9 <= x <= half + 1e-9:
                pts.append((x, y))
    pts = sorted(set((round(x, 9), round(y, 9)) for x, y in pts))
    if len(pts) < 2:
        return None
    return pts[0], pts[-1]


def render(datum: RootDatum, elements: Iterable[ExtAffineElement], radius: int = 3,
           title: str = "") -> str:
    """SVG with the walls |k| <= radius, the given alcoves shaded and A_0 labelled."""
    if datum.rank != 2:
        raise ConfigurationError(f"drawing needs a rank-2 datum, {datum.name} has rank {datum.rank}")
    frame = _frame(datum)
    verts = [datum.project_to_root_span(a) for a in datum.base_alcove_vertices]
    elements = sorted(set(elements), key=ExtAffineElement.sort_key)
    triangles = []
    for x in elements:
        tri = [_project(frame, datum.project_to_root_span(x(a))) for a in verts]
        triangles.append(tri)
    half = float(radius) * max(math.sqrt(float(dot(c, c))) for c in datum.coroots) / 2
    for tri in triangles:
        for x, y in tri:
            half = max(half, abs(x) * 1.1, abs(y) * 1.1)
    scale = SIZE / (2 * half)

    def sx(p):
        return "%.3f,%.3f" % ((p[0] + half) * scale, (half - p[1]) * scale)

    out = ['<?xml version="1.0" encoding="UTF-8"?>',
           f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" '
           f'viewBox="0 0 {SIZE} {SIZE}">']
    if title:
        out.append(f"<title>{escape(title)}</title>")
    out.append(f'<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="white"/>')
    out.append('<g id="alcoves" fill="#9ecae1" stroke="none">')
    for x, tri in zip(elements, triangles):
        pts = " ".join(sx(p) for p in tri)
        out.append(f'<polygon points="{pts}"><title>{escape(repr(x))}</title></polygon>')
    out.append("</g>")
    out.append('<g id="walls" stroke="#555555" stroke-width="0.6">')
    for j in range(datum.n_pos):
        normal = _project(frame, _functional_vector(datum, j))
        for k in range(-radius * 4, radius * 4 + 1):
            seg = _clip_line(normal, float(k), half)
            if seg is not None:
                out.append(f'<line x1="%.3f" y1="%.3f" x2="%.3f" y2="%.3f"/>' % (
                    (seg[0][0] + half) * scale, (half - seg[0][1]) * scale,
                    (seg[1][0] + half) * scale, (half - seg[1][1]) * scale))
    out.append("</g>")
    base = [_project(frame, v) for v in verts]
    cx = sum(p[0] for p in base) / len(base)
    cy = sum(p[1] for p in base) / len(base)
    out.append('<polygon id="base" points="%s" fill="none" stroke="#d62728" stroke-width="1.5"/>'
               % " ".join(sx(p) for p in base))
    out.append('<text x="%.3f" y="%.3f" font-size="10" text-anchor="middle" '
               'font-family="sans-serif">A0</text>' % ((cx + half) * scale, (half - cy) * scale + 3))
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _functional_vector(datum: RootDatum, j: int) -> tuple:
    # the root itself, as a vector: <beta, p> is the dot product
    return datum.roots[j]


def shaded_count(svg: str) -> int:
    return svg.count("<polygon points=")
