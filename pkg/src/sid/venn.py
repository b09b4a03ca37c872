"""Three-circle SVG diagram of a decomposition.

Regions are schematic; areas are not proportional to bits. Redundancy sits in
the triple overlap, each pairwise lens holds its unique information, and each
circle's crescent holds its external information together with the shared
synergy value. Synergy is counted once per variable in the diagram while it
enters the joint entropy twice, which a Venn layout cannot express.
"""
from __future__ import annotations

from xml.sax.saxutils import escape

from .formats import fmt_float

CIRCLES = ((190.0, 170.0), (310.0, 170.0), (250.0, 274.0))
RADIUS = 120.0
COLORS = ("#e4572e", "#4c9f70", "#3f88c5")
LENS = ((250.0, 132.0), (190.0, 245.0), (310.0, 245.0))
CRESCENT = ((130.0, 140.0), (370.0, 140.0), (250.0, 345.0))
LABEL = ((105.0, 60.0), (395.0, 60.0), (250.0, 420.0))


def _num(x: float) -> str:
    s = fmt_float(x, 3)
    return s.rstrip("0").rstrip(".") if "." in s else s


def render_svg(report: dict) -> str:
    """SVG markup for an atom report as produced by :func:`sid.report.atoms_json`."""
    names = report["variables"]
    un = report["un"]
    pairs = ((names[0], names[1]), (names[0], names[2]), (names[1], names[2]))
    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" width="500" height="450" viewBox="0 0 500 450" '
        'font-family="sans-serif" font-size="13">',
        "<desc>Schematic: region areas are not proportional to bits. Syn is shown in every "
        "circle but counts twice in the joint entropy, which a Venn diagram cannot show.</desc>",
    ]
    for (cx, cy), color in zip(CIRCLES, COLORS):
        parts.append(f'<circle cx="{cx}" cy="{cy}" r="{RADIUS}" fill="{color}" fill-opacity="0.18" '
                     f'stroke="{color}" stroke-width="2"/>')

    def text(x, y, body, cls, weight="normal"):
        parts.append(f'<text class="{cls}" x="{x}" y="{y}" text-anchor="middle" '
                     f'font-weight="{weight}">{escape(body)}</text>')

    text(250, 200, f"Red {_num(report['red'])}", "red", "bold")
    for (a, b), (x, y) in zip(pairs, LENS):
        text(x, y, f"Un {_num(un[f'{a}|{b}'])}", "un")
    for n, (x, y), (lx, ly) in zip(names, CRESCENT, LABEL):
        text(x, y, f"Ext {_num(report['ext'][n])}", "ext")
        text(x, y + 18, f"Syn {_num(report['syn'])}", "syn")
        text(lx, ly, n, "name", "bold")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
