"""m-divisible polygon dissection complexes: exact counts, bijective
encoding, shellability certificates, and simplicial homology."""

__version__ = "0.1.0"

from .polygons import FAMILY_A, FAMILY_B, PolygonParams  # noqa: F401
