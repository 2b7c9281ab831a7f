"""Discrete Clark-Ocone chaos toolkit: python surface over the C++ core."""

try:
    # installed layout: the extension lives inside the package
    from ._chaoskit import *  # noqa: F401,F403
    from ._chaoskit import __version__  # noqa: F401
except ImportError:
    # build-tree layout: the extension sits next to the package on PYTHONPATH
    from _chaoskit import *  # noqa: F401,F403
    from _chaoskit import __version__  # noqa: F401
