"""One-plane pictures: vertical segments and the chosen stabbing line.

Rendering is the only place floats are allowed; all geometry arrives as
exact rationals and is converted at the last moment for coordinates.
"""

from .fractional import SegmentFamily


def _fmt(v: float) -> str:
    return "%.3f" % v


def render_plane_svg(fam: SegmentFamily, line=None, width=480, height=320,
                     title=None) -> str:
    """SVG text for a segment family and, optionally, a (slope, intercept)
    line drawn across the plot."""
    ts = [float(a) for a, _ in fam.items]
    zs = []
    for _, iv in fam.items:
        zs.append(float(iv.lo))
        zs.append(float(iv.hi))
    t_lo, t_hi = min(ts), max(ts)
    if t_lo == t_hi:
        t_lo -= 1.0
        t_hi += 1.0
    span = t_hi - t_lo
    t_lo -= 0.08 * span
    t_hi += 0.08 * span
    if line is not None:
        slope, icpt = float(line[0]), float(line[1])
        zs.append(slope * t_lo + icpt)
        zs.append(slope * t_hi + icpt)
    z_lo, z_hi = min(zs), max(zs)
    if z_lo == z_hi:
        z_lo -= 1.0
        z_hi += 1.0
    zspan = z_hi - z_lo
    z_lo -= 0.08 * zspan
    z_hi += 0.08 * zspan

    mx, my = 30.0, 24.0
    def px(t):
        return mx + (t - t_lo) / (t_hi - t_lo) * (width - 2 * mx)
    def py(z):
        return height - my - (z - z_lo) / (z_hi - z_lo) * (height - 2 * my)

    parts = ['<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d" '
             'viewBox="0 0 %d %d">' % (width, height, width, height),
             '<rect width="%d" height="%d" fill="white"/>' % (width, height)]
    if title:
        parts.append('<text x="%s" y="16" font-size="12" '
                     'font-family="monospace">%s</text>' % (_fmt(mx), title))
    for a, iv in fam.items:
        xpix = px(float(a))
        y1, y2 = py(float(iv.lo)), py(float(iv.hi))
        parts.append('<line x1="%s" y1="%s" x2="%s" y2="%s" stroke="#345" '
                     'stroke-width="4" stroke-linecap="round"/>'
                     % (_fmt(xpix), _fmt(y1), _fmt(xpix), _fmt(y2)))
    if line is not None:
        slope, icpt = float(line[0]), float(line[1])
        parts.append('<line x1="%s" y1="%s" x2="%s" y2="%s" stroke="#c33" '
                     'stroke-width="1.5"/>'
                     % (_fmt(px(t_lo)), _fmt(py(slope * t_lo + icpt)),
                        _fmt(px(t_hi)), _fmt(py(slope * t_hi + icpt))))
    parts.append('</svg>')
    return "\n".join(parts) + "\n"


def write_plane_svg(path: str, fam: SegmentFamily, line=None, title=None):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render_plane_svg(fam, line, title=title))
