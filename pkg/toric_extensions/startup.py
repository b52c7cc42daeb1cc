"""
File to support the startup of the toric extensions subsystem. This should be called
at least once at the beginning of any process lifecycle
"""



from toric_extensions import const
from toric_extensions.renderers.renderer import register_renderer


def initialize():
    """
    Startup entry point: registers the configured result renderers
    """

    for class_name in const.TOREXT_RENDERERS:
        register_renderer(class_name)
