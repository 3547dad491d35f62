try:
    from ._concordia import *  # noqa: F401,F403  (installed layout)
except ImportError:  # build-tree layout: extension next to the package dir
    from _concordia import *  # noqa: F401,F403

from ._version import __version__  # noqa: F401
