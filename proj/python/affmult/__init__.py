"""Weight multiplicities for affine sl(n) by four independent methods."""

try:
    from ._affmult import *  # noqa: F401,F403
    from ._affmult import __doc__  # noqa: F401
except ImportError:  # build-tree layout: extension next to the package on sys.path
    from _affmult import *  # noqa: F401,F403
    from _affmult import __doc__  # noqa: F401
