# backend/apps/diagram/rendering.py
"""SVG rendering of a diagram through the Django template engine."""
from django.template.loader import render_to_string

SIZE = 600
MARGIN = 60


def _pixel(x, y):
    plot = SIZE - 2 * MARGIN
    return f"{MARGIN + x * plot:.2f}", f"{SIZE - MARGIN - y * plot:.2f}"


def render_svg(spec, samples, families=(), highlights=(), title=None):
    """
    Self-contained SVG of the unit square [0, 1]^2 in diagram coordinates:
    the sample cloud, proved curves solid, conjectured curves dashed, family
    members highlighted. ``highlights`` are (name, (x, y)) pairs drawn bold.
    Output depends only on the inputs.
    """
    plot = SIZE - 2 * MARGIN
    curves = [
        {
            'name': curve.name,
            'conjectured': curve.status == 'conjectured',
            'points': ' '.join(','.join(_pixel(x, y)) for x, y in curve.points()),
        }
        for curve in spec.curves
    ]
    ticks = []
    for value in (0.0, 0.25, 0.5, 0.75, 1.0):
        px, _ = _pixel(value, 0.0)
        _, py = _pixel(0.0, value)
        ticks.append({
            'label': f"{value:g}",
            'x': (px, f"{SIZE - MARGIN + 18:.2f}"),
            'y': (f"{MARGIN - 8:.2f}", f"{float(py) + 4:.2f}"),
        })
    context = {
        'title': title or f"Diagram of the {spec.gauge.label} gauge",
        'size': SIZE,
        'plot': plot,
        'origin': _pixel(0.0, 0.0),
        'x_end': _pixel(1.0, 0.0),
        'y_end': _pixel(0.0, 1.0),
        'x_label': (f"{SIZE / 2:.2f}", f"{SIZE - MARGIN / 3:.2f}"),
        'y_label': (f"{MARGIN / 3:.2f}", f"{MARGIN - 16:.2f}"),
        'ticks': ticks,
        'samples': [_pixel(p.x, p.y) for p in samples if p.strategy != 'family'],
        'families': [_pixel(p.x, p.y) for p in samples if p.strategy == 'family'] + [_pixel(x, y) for x, y in families],
        'curves': curves,
        'highlights': [
            dict(zip(('x', 'y'), _pixel(x, y)), name=name) for name, (x, y) in highlights
        ],
    }
    return render_to_string('diagram/diagram.svg', context)
