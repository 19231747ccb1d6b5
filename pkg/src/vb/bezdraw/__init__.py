"""Define vb.bezdraw package.

Graph drawings with one cubic Bézier curve per edge: right-angle-crossing
drawings of 1-planar graphs, joint-box drawings of planar graphs and a
numerical verifier for both.
"""

from __future__ import annotations

__version__ = "0.1.0"

# __all__ = []
