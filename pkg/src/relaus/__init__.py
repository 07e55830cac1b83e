"""Exact computations of relative dominant dimensions, tilting modules and relative Auslander pairs."""

__version__ = "0.1.0"

from .linalg import Field  # noqa: E402
from .algebra import Algebra, path_algebra  # noqa: E402
from .modules import Module, ModuleMap  # noqa: E402
from .values import INF, AtLeast  # noqa: E402

__all__ = ["Field", "Algebra", "path_algebra", "Module", "ModuleMap", "INF", "AtLeast",
           "__version__"]
