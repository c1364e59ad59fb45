"""G-metric spaces, phi-induced preorders and n-tuple fixed-point iteration."""

from ._gfix import *  # noqa: F401,F403
from ._gfix import __doc__  # noqa: F401
