"""Exact Grassmannian-geometry calculus: quintary products, linear relations,
involutions, classical torsors and their homotopes."""

try:
    # installed layout: the extension lives inside the package
    from ._grastor import *  # noqa: F401,F403
    from ._grastor import __doc__  # noqa: F401
except ImportError:
    # build-tree layout: the extension sits next to the package on sys.path
    from _grastor import *  # noqa: F401,F403
    from _grastor import __doc__  # noqa: F401
