from .wrapper import LifetimeAPI
from .version import __version__
