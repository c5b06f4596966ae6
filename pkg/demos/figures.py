"""
Writing the SVG figures
=======================

Each figure is deterministic, so regenerating it gives the same bytes.
"""

import sys
from pathlib import Path

from apollonius.bary_core import TriangleMetric
from apollonius.figures import FIGURE_IDS, render

out = Path(sys.argv[1] if len(sys.argv) > 1 else "figures")
out.mkdir(exist_ok=True)

T = TriangleMetric.from_sides(13, 14, 15)
for fid in FIGURE_IDS:
    path = out / f"{fid}.svg"
    path.write_text(render(fid, T))
    print("wrote", path)
