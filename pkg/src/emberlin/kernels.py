"""Backend selection for the hot loops.

The compiled extension is used when it imports; otherwise the pure-Python
module is used.  Setting ``EMBERLIN_BACKEND=python`` forces the fallback.
"""

import os

if os.environ.get("EMBERLIN_BACKEND", "").lower() == "python":
    from ._pykernels import BACKEND, census, count_faces, directed_bieulerian
else:
    try:
        from ._ckernels import BACKEND, census, count_faces, directed_bieulerian
    except ImportError:  # extension not built
        from ._pykernels import BACKEND, census, count_faces, directed_bieulerian

__all__ = ["BACKEND", "census", "count_faces", "directed_bieulerian"]
