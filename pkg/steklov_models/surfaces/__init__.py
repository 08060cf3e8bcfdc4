from .revolution import *  # noqa
from .geodesics import *  # noqa
from .torus import *  # noqa
