"""Deterministic report-only outputs.

``python -m vertexlab.reports [outdir]`` regenerates the committed files.
Nothing here asserts a threshold; values are recorded as computed.
"""

import sys
from pathlib import Path

from .correlations import CONVENTIONS, boundary_one_point, efp20v_contour, efp_20v_brute
from .numeric import dumps
from .sixv import Weights6V
from .twentyv import UNIT_COMPOSITE
from .yba import RELATIONS_3D, check_3d_relation

SCHEMA = "vertexlab.report/1"
REPORT_FILES = {
    "3d_relations_v1.json": "build_3d_report",
    "efp20v_contour_v1.json": "build_efp20v_report",
}


def build_3d_report():
    entries = []
    for which in RELATIONS_3D:
        for variant in (1, 2):
            for d_trunc, sites in ((2, (0.0,)), (3, (0.0,)), (2, (0.0, 0.3))):
                for f2 in ("printed", "standard"):
                    rec = check_3d_relation(
                        which, q=0.7, thetas=(0.31, 0.77, 1.43), eta=0.27, d_trunc=d_trunc,
                        sites=sites, variant=variant, f2_variant=f2,
                    )
                    entries.append(rec)
    return {
        "schema": SCHEMA,
        "name": "3d_relations",
        "conventions": {
            "xi": "xi_k(theta) = exp(theta - zeta_k) at site k",
            "local_space": "two truncated q-oscillators per site, dimension d_trunc^2",
            "coefficients": "f3, g3 at (theta, theta', theta''); f2 = f(theta', theta''), g2 = g(theta'', theta')",
            "residual": "||LHS - RHS||_F / ||LHS||_F",
        },
        "entries": entries,
    }


def build_efp20v_report():
    w = Weights6V.isotropic_weights(1, 1, 1)
    entries = []
    for N in (2, 3):
        H = boundary_one_point(N, w)
        for r in range(1, N + 1):
            val, _ = efp20v_contour(N, 1, 0, w, r, 0)
            entries.append({"N": N, "s": 1, "sp": 0, "r": r, "rp": 0, "contour": val,
                            "one_point_partial_sum": float(sum(H[:r]))})
        for r in range(1, N + 1):
            for rp in range(1, N + 1):
                val, _ = efp20v_contour(N, 1, 1, w, r, rp)
                brute = float(efp_20v_brute(N, UNIT_COMPOSITE, (r, rp)))
                entries.append({"N": N, "s": 1, "sp": 1, "r": r, "rp": rp, "contour": val,
                                "brute": brute, "delta": val - brute})
    _, provenance = efp20v_contour(2, 1, 1, w, 1, 1)
    return {
        "schema": SCHEMA,
        "name": "efp20v_contour",
        "weights_6v": w.to_json(),
        "weights_20v": UNIT_COMPOSITE.to_json(),
        "brute_event": "horizontal arrows right at vertical line r, diagonal arrows out at horizontal line r'",
        "conventions": CONVENTIONS,
        "provenance": provenance,
        "entries": entries,
    }


def render(name):
    return dumps(globals()[REPORT_FILES[name]]())


def write_reports(outdir="reports"):
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    for name in REPORT_FILES:
        p = out / name
        p.write_text(render(name))
        paths.append(p)
    return paths


if __name__ == "__main__":
    for p in write_reports(sys.argv[1] if len(sys.argv) > 1 else "reports"):
        print(p)
