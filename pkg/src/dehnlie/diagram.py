"""Weight diagrams.

Principal weights are drawn bold (``*name*`` in ASCII), the zero weight is
underlined (``_name_``), and weights of multiplicity above one carry a
``(m)`` suffix.  A ``+`` marks the origin when 0 is not a weight.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from xml.sax.saxutils import escape

from .algebra import weight_set, wzero
from .errors import UnsupportedDimension

MAX_SPAN = 40


def _points(alg):
    if alg.weight_dim not in (1, 2):
        raise UnsupportedDimension(f"diagrams need weight_dim 1 or 2, got {alg.weight_dim}")
    ws = weight_set(alg)
    pts = []
    for w in ws.weights:
        names = [b.name for b in alg.basis if b.weight == w]
        xy = (w[0], w[1]) if alg.weight_dim == 2 else (w[0], Fraction(0))
        pts.append({"weight": w, "xy": xy, "names": names,
                    "principal": w in ws.principal, "zero": wzero(w)})
    return pts


def _label(p, ascii_marks=True):
    text = ",".join(p["names"])
    if len(p["names"]) > 1:
        text += f"({len(p['names'])})"
    if ascii_marks:
        if p["principal"]:
            text = f"*{text}*"
        if p["zero"]:
            text = f"_{text}_"
    return text


def _grid_axis(values):
    """Map rational coordinates to integer grid positions."""
    values = sorted(set(values) | {Fraction(0)})
    den = 1
    for v in values:
        den = den * v.denominator // gcd(den, v.denominator)
    ints = [int(v * den) for v in values]
    g = 0
    for a in ints:
        g = gcd(g, a)
    g = g or 1
    pos = {v: i // g for v, i in zip(values, ints)}
    if max(pos.values()) - min(pos.values()) > MAX_SPAN:
        pos = {v: k for k, v in enumerate(values)}
    return pos


def render_ascii(alg) -> str:
    pts = _points(alg)
    xs = _grid_axis([p["xy"][0] for p in pts])
    ys = _grid_axis([p["xy"][1] for p in pts])
    cells = {(xs[p["xy"][0]], ys[p["xy"][1]]): _label(p) for p in pts}
    origin = (xs[Fraction(0)], ys[Fraction(0)])
    cells.setdefault(origin, "+")
    cols = range(min(xs.values()), max(xs.values()) + 1)
    rows = range(max(ys.values()), min(ys.values()) - 1, -1)
    width = max(len(s) for s in cells.values()) + 2
    lines = []
    for r in rows:
        line = "".join(cells.get((c, r), "").center(width) for c in cols)
        lines.append(line.rstrip())
    return "\n".join(lines) + "\n"


def render_svg(alg, size=400, margin=50) -> str:
    pts = _points(alg)
    xs = [p["xy"][0] for p in pts] + [Fraction(0)]
    ys = [p["xy"][1] for p in pts] + [Fraction(0)]
    span = max(max(xs) - min(xs), max(ys) - min(ys)) or Fraction(1)
    scale = Fraction(size - 2 * margin) / span
    cx = (max(xs) + min(xs)) / 2
    cy = (max(ys) + min(ys)) / 2

    def sx(x):
        return float(size / 2 + (x - cx) * scale)

    def sy(y):
        return float(size / 2 - (y - cy) * scale)

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
           f'viewBox="0 0 {size} {size}">',
           f'<title>{escape(alg.name)}</title>',
           f'<rect width="{size}" height="{size}" fill="white"/>']
    ox, oy = sx(0), sy(0)
    out.append(f'<line x1="{ox - 6:.2f}" y1="{oy:.2f}" x2="{ox + 6:.2f}" y2="{oy:.2f}" '
               'stroke="gray"/>')
    out.append(f'<line x1="{ox:.2f}" y1="{oy - 6:.2f}" x2="{ox:.2f}" y2="{oy + 6:.2f}" '
               'stroke="gray"/>')
    for p in pts:
        x, y = sx(p["xy"][0]), sy(p["xy"][1])
        attrs = ['font-family="sans-serif"', 'font-size="14"', 'text-anchor="middle"']
        if p["principal"]:
            attrs.append('font-weight="bold"')
        if p["zero"]:
            attrs.append('text-decoration="underline"')
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="3" fill="black"/>')
        out.append(f'<text x="{x:.2f}" y="{y - 8:.2f}" {" ".join(attrs)}>'
                   f'{escape(_label(p, ascii_marks=False))}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_diagram(alg, output="svg") -> str:
    if output == "ascii":
        return render_ascii(alg)
    if output == "svg":
        return render_svg(alg)
    raise ValueError(f"unknown diagram output {output!r}")
