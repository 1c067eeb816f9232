from ._palintiple import *  # noqa: F401,F403
from ._palintiple import __doc__  # noqa: F401
