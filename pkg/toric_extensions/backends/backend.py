"""
Defines abstract class for the polyhedral conversion backend
"""



import abc
from importlib import import_module

from django.core.exceptions import ImproperlyConfigured

from toric_extensions import const

# Cached instance of a backend provider
_BACKEND_PROVIDER = None


def polyhedral_backend():
    """
    Returns the singleton instance of the polyhedral backend that has been
    configured for this runtime. The class path should be
    set in TOREXT_POLYHEDRAL_BACKEND in the settings file
    """

    global _BACKEND_PROVIDER  # pylint: disable=global-statement

    if not _BACKEND_PROVIDER:
        config = const.TOREXT_POLYHEDRAL_BACKEND
        if not config:
            raise ImproperlyConfigured("Settings not configured with TOREXT_POLYHEDRAL_BACKEND!")

        if 'class' not in config or 'options' not in config:
            msg = (
                "Misconfigured TOREXT_POLYHEDRAL_BACKEND settings, "
                "must have both 'class' and 'options' keys."
            )
            raise ImproperlyConfigured(msg)

        module_path, _, name = config['class'].rpartition('.')
        class_ = getattr(import_module(module_path), name)

        _BACKEND_PROVIDER = class_(**config['options'])

    return _BACKEND_PROVIDER


def reset_polyhedral_backend():
    """
    Tears down any cached configuration. This is useful for testing.
    """

    global _BACKEND_PROVIDER  # pylint: disable=global-statement

    _BACKEND_PROVIDER = None


class BasePolyhedralBackend(metaclass=abc.ABCMeta):
    """
    The base abstract class for H/V conversion providers.

    Inequalities are pairs (normal, offset) meaning <x, normal> >= -offset, equations
    are pairs (normal, offset) meaning <x, normal> = -offset. Generators are split
    into points, rays and lines.

    IMPORTANT: the provider is a singleton, so anything stored on the instance
    must be a pure cache.
    """

    @abc.abstractmethod
    def to_generators(self, dimension, inequalities, equations):
        """
        H to V conversion

        RETURNS: None if the polyhedron is empty, otherwise a (points, rays, lines) triple
        """
        raise NotImplementedError()

    @abc.abstractmethod
    def to_inequalities(self, dimension, points, rays, lines):
        """
        V to H conversion. There must be at least one point

        RETURNS: an irredundant (inequalities, equations) pair
        """
        raise NotImplementedError()

    def is_empty(self, dimension, inequalities, equations):
        """
        Emptiness test
        """
        return self.to_generators(dimension, inequalities, equations) is None
