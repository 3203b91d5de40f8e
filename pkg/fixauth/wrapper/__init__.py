from .lifetime_api import LifetimeAPI
