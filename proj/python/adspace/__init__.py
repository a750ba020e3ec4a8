from ._adspace import *  # noqa: F401,F403
