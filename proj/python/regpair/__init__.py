"""Exact and numerical verification of archimedean cycle pairings."""

try:
    from ._regpair import *  # noqa: F401,F403  (installed wheel layout)
    from ._regpair import __version__  # noqa: F401
except ImportError:  # build-tree layout: extension sits beside the package
    from _regpair import *  # noqa: F401,F403
    from _regpair import __version__  # noqa: F401
