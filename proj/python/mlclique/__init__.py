from ._mlclique import *  # noqa: F401,F403
