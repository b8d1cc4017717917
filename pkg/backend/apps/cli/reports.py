# backend/apps/cli/reports.py
"""Text report formatting; numbers are printed with 10 significant digits."""
import math

from rest_framework.renderers import JSONRenderer


def fmt(value):
    return f"{value:.10g}"


def fmt_point(p):
    return f"({fmt(p[0])}, {fmt(p[1])})"


def radii_lines(prof):
    return [
        f"r = {fmt(prof.r)}",
        f"D = {fmt(prof.D)}",
        f"R = {fmt(prof.R)}",
        f"s = {fmt(prof.s)}",
        f"f = ({prof.x:.4f}, {prof.y:.4f})",
        f"x = {fmt(prof.x)}",
        f"y = {fmt(prof.y)}",
        f"incenter = {fmt_point(prof.incenter)}",
        f"circumcenter = {fmt_point(prof.circumcenter)}",
        f"diameter pair = {fmt_point(prof.diameter_pair[0])} {fmt_point(prof.diameter_pair[1])}",
    ]


def inequality_lines(results, tol):
    width = max(len(res.name) for res in results)
    lines = []
    for res in results:
        verdict = 'ok' if res.passes(tol) else 'FAIL'
        budget = f"  (budget {res.budget:.3g})" if res.budget else ''
        lines.append(f"  {res.name:<{width}}  {fmt(res.slack):>17}  {verdict}{budget}")
    return lines


def certificate_lines(cert, check):
    verdict = 'valid' if check.valid else 'INVALID'
    return [
        f"certificate: {cert.as_line()}",
        f"certificate check: {verdict} boundary={check.boundary_gap:.3g} body={check.body_gap:.3g} "
        f"cone={check.cone_gap:.3g} residual={check.residual:.3g}",
    ]


def reduction_lines(red):
    kind = 'strip' if red.S.is_strip else 'triangle'
    lines = [
        f"reduction: k={red.k} S={kind} T={' '.join(fmt_point(p) for p in red.T.vertices)}",
        f"  R(T,S) = {fmt(red.R_TS)}  r(T,S) = {fmt(red.r_TS)}  D(T,S) = {fmt(red.D_TS)}",
    ]
    for name, slack in red.guarantee_slacks().items():
        lines.append(f"  {name}: slack {fmt(slack)}")
    return lines


def bohnenblust_line(check):
    verdict = 'holds' if check.holds else 'fails'
    return (f"simplex equality case: {verdict} "
            f"(K-K in D C slack {fmt(check.slacks[0])}, D C in 3(K cap -K) slack {fmt(check.slacks[1])})")


def family_lines(rows):
    """Table of LP diagram points against the closed forms"""
    lines = [f"  {'family':<14} {'param':>10} {'x':>14} {'y':>14} {'deviation':>11}"]
    for row in rows:
        lines.append(f"  {row['family']:<14} {row['parameter']:>10.6f} {row['x']:>14.10f} {row['y']:>14.10f} "
                     f"{row['deviation']:>11.3g}")
    return lines


def render_json(data):
    return JSONRenderer().render(data, renderer_context={'indent': 2}).decode()


def inequality_data(res):
    # strict JSON has no infinity; inactive bounds report null
    slack = res.slack if math.isfinite(res.slack) else None
    return {'name': res.name, 'slack': slack, 'budget': res.budget}
