"""Normative convention tables.

Every orientation choice that the model definitions leave open is fixed here
and nowhere else.  Arrows are +1/-1 along the positive axis of their edge
family: horizontal +1 points right, vertical +1 points up, diagonal +1 points
north-east.
"""

import os

# six-vertex vertex types keyed by the star (west, east, south, north)
SIX_VERTEX_TYPES = {
    (1, 1, 1, 1): "a1",
    (-1, -1, -1, -1): "a2",
    (1, 1, -1, -1): "b1",
    (-1, -1, 1, 1): "b2",
    # horizontal arrows both inward, vertical both outward
    (1, -1, -1, 1): "c1",
    (-1, 1, 1, -1): "c2",
}
SIX_VERTEX_KINDS = ("a1", "a2", "b1", "b2", "c1", "c2")

# Domain-wall boundary: "standard" has horizontal arrows entering on the left
# and right and vertical arrows leaving on the top and bottom.  "flipped"
# reverses every boundary arrow.
DWBC_VARIANTS = ("standard", "flipped")


def dwbc_boundary_6v(n, variant="standard"):
    """Boundary arrays (west, east, north, south) for an n x n DWBC square."""
    if variant not in DWBC_VARIANTS:
        raise ValueError(f"unknown DWBC variant {variant!r}")
    sg = 1 if variant == "standard" else -1
    return [sg] * n, [-sg] * n, [sg] * n, [-sg] * n


# Twenty-vertex DWBC on n columns and 2n-1 rows (the boundary used in the
# domino-tiling correspondence for the triangular lattice):
#   horizontal: inward on the west and east sides
#   vertical:   outward on the south and north sides
#   diagonal:   inward on the west side (the south-west corner included),
#               outward on the south, north and east sides
TWENTY_VERTEX_DWBC = {
    "H_W": "in",
    "H_E": "in",
    "V_S": "out",
    "V_N": "out",
    "D_W": "in",
    "D_S": "out",
    "D_N": "out",
    "D_E": "out",
}

# "out of the page" for the twenty-vertex emptiness event: diagonal arrows
# pointing north-east.
TWENTY_VERTEX_EFP_OUT = 1

DEFAULT_CAPS = {"sixv": 6, "twentyv": 3, "dense_sites": 6}


def caps():
    """Enumeration caps, overridable through ``VERTEXLAB_CAPS=sixv=7,twentyv=4``."""
    out = dict(DEFAULT_CAPS)
    raw = os.environ.get("VERTEXLAB_CAPS", "").strip()
    if raw:
        for item in raw.split(","):
            key, _, val = item.partition("=")
            key = key.strip()
            if key not in out:
                raise ValueError(f"unknown cap {key!r} in VERTEXLAB_CAPS")
            out[key] = int(val)
    return out
