"""
Plain JSON rendering of serialized results
"""



import json

from toric_extensions.const import RENDER_FORMAT_JSON
from toric_extensions.renderers.renderer import BaseResultRenderer


class JsonResultRenderer(BaseResultRenderer):
    """
    Renders with sorted keys so the same result always gives the same bytes
    """

    def can_render_format(self, render_format):
        """
        Returns (True/False) whether this renderer provides renderings
        into the requested format.
        """
        return render_format == RENDER_FORMAT_JSON

    def render(self, content, render_format):
        return json.dumps(content, sort_keys=True, indent=2) + '\n'

    def get_template_path(self, render_format):
        return None
