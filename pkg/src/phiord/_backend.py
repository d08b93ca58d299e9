"""Kernel backend selection.

The compiled extension is preferred; when it is missing (source checkout
without a build, unsupported platform) the pure-Python kernels take over
transparently.  Both expose the same functions, so everything above this
module is backend-agnostic.
"""

try:
    from . import _kernels as kernels
    BACKEND = "compiled"
except ImportError:
    from . import _kernels_py as kernels
    BACKEND = "python"


def active_backend():
    """Name of the kernel backend in use: 'compiled' or 'python'."""
    return BACKEND
