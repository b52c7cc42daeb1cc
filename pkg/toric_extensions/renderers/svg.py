"""
Static SVG plots of a pair of planar polyhedra, the components of their
difference and the rays of a fan
"""



import logging
from fractions import Fraction

from django.template.loader import render_to_string

from toric_extensions import const
from toric_extensions.exceptions import JobError
from toric_extensions.geometry import linalg
from toric_extensions.geometry.fan import sort_rays
from toric_extensions.geometry.polyhedron import hull, intersect
from toric_extensions.renderers.renderer import BaseResultRenderer

log = logging.getLogger(__name__)


def cyclic_vertices(p):
    """
    Vertices of a planar polytope in counterclockwise order around their centroid
    """

    vertices = list(p.vertices)
    if len(vertices) < 3:
        return vertices
    centroid = linalg.scale(_total(vertices), Fraction(1, len(vertices)))
    offsets = {linalg.sub(vertex, centroid): vertex for vertex in vertices}
    return [offsets[offset] for offset in sort_rays(list(offsets), 2)]


def _total(vectors):
    total = (0, 0)
    for vector in vectors:
        total = linalg.add(total, vector)
    return total


def _frame(polys, margin=2):
    points = [vertex for p in polys if not p.is_empty for vertex in p.vertices] or [(0, 0)]
    low = [min(point[i] for point in points) - margin for i in range(2)]
    high = [max(point[i] for point in points) + margin for i in range(2)]
    return hull([(low[0], low[1]), (high[0], low[1]), (high[0], high[1]), (low[0], high[1])], dimension=2)


def plot_context(minus, plus, decomposition=None, f=None):
    """
    Shapes in lattice coordinates: the two polyhedra (clipped to a frame when
    unbounded), one region per component piece, and the fan rays
    """

    if minus.dimension != 2:
        raise JobError('plots need polyhedra in the plane')
    frame = _frame([minus, plus])
    shapes = [{'role': 'minus', 'points': cyclic_vertices(intersect(minus, frame))}]
    if decomposition is not None:
        for index, component in enumerate(decomposition.components):
            for piece in component.pieces:
                shapes.append({'role': 'component-{index}'.format(index=index), 'points': cyclic_vertices(piece)})
    if not plus.is_empty:
        shapes.append({'role': 'plus', 'points': cyclic_vertices(intersect(plus, frame))})
    rays = list(f.rays) if f is not None else []
    return {'shapes': shapes, 'rays': rays, 'frame': cyclic_vertices(frame)}


class SvgPlotRenderer(BaseResultRenderer):
    """
    Renders a plot context through the toric_extensions/plot.svg template
    """

    template_name = 'toric_extensions/plot.svg'

    def can_render_format(self, render_format):
        return render_format == const.RENDER_FORMAT_SVG

    def _to_canvas(self, point, origin, top):
        scale = const.TOREXT_SVG_SCALE
        padding = const.TOREXT_SVG_PADDING
        x = padding + float(point[0] - origin[0]) * scale
        y = padding + float(top - point[1]) * scale
        return '{x:.2f},{y:.2f}'.format(x=x, y=y)

    def render(self, content, render_format):
        """
        Flips y so that the lattice reads as in a textbook figure
        """

        frame = content['frame']
        origin = (min(point[0] for point in frame), min(point[1] for point in frame))
        top = max(point[1] for point in frame)
        right = max(point[0] for point in frame)
        scale = const.TOREXT_SVG_SCALE
        padding = const.TOREXT_SVG_PADDING

        shapes = [
            {
                'role': shape['role'],
                'points': ' '.join(self._to_canvas(point, origin, top) for point in shape['points']),
            }
            for shape in content['shapes']
        ]
        center = self._to_canvas((0, 0), origin, top)
        reach = max(right - origin[0], top - origin[1])
        rays = [
            {'start': center, 'end': self._to_canvas(linalg.scale(linalg.as_vector(ray), reach), origin, top)}
            for ray in content['rays']
        ]
        context = {
            'width': int(2 * padding + float(right - origin[0]) * scale),
            'height': int(2 * padding + float(top - origin[1]) * scale),
            'shapes': shapes,
            'rays': rays,
        }
        log.debug('Rendering a plot with %d shapes and %d rays', len(shapes), len(rays))
        return render_to_string(self.template_name, context)

    def get_template_path(self, render_format):
        return self.template_name
