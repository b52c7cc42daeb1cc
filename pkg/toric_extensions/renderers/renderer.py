"""
The result renderer interface and the registry of configured renderers. A
renderer turns a serialized command result, or a plot context, into text in one
output format (JSON, SVG)
"""



import abc
import logging
from importlib import import_module

log = logging.getLogger(__name__)

_RENDERERS = {}


def register_renderer(class_name):
    """
    Imports the dotted class_name, a BaseResultRenderer subclass, and keeps one
    instance of it; registering the same name twice returns the kept instance
    """

    if class_name in _RENDERERS:
        return _RENDERERS[class_name]

    module_path, _, name = class_name.rpartition('.')
    class_ = getattr(import_module(module_path), name)

    renderer_instance = class_()
    _RENDERERS[class_name] = renderer_instance
    log.debug('Registered renderer %s', class_name)

    return renderer_instance


def get_all_renderers():
    """
    class name -> renderer instance
    """
    return _RENDERERS


def clear_renderers():
    _RENDERERS.clear()


def get_renderer_for_format(render_format):
    """
    Returns the first registered Renderer that can produce render_format, None if not found
    """

    for class_name in sorted(_RENDERERS):
        if _RENDERERS[class_name].can_render_format(render_format):
            return _RENDERERS[class_name]
    return None


class BaseResultRenderer(metaclass=abc.ABCMeta):
    """
    Interface of a result renderer. Instances are shared through the registry and
    must not keep per-call state
    """

    @abc.abstractmethod
    def can_render_format(self, render_format):
        """
        Returns (True/False) whether this renderer is able to produce the requested format
        """
        raise NotImplementedError()

    @abc.abstractmethod
    def render(self, content, render_format):
        """
        Renders content, a serialized result or a plot context, to a string
        """
        raise NotImplementedError()

    @abc.abstractmethod
    def get_template_path(self, render_format):
        """
        Returns the template used for render_format, None for template-less formats
        """
        raise NotImplementedError()
