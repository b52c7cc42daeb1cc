"""
Concrete pycddlib implementation of the polyhedral backend interface
"""



import logging
from fractions import Fraction

import cdd
import pylru

from toric_extensions.backends.backend import BasePolyhedralBackend

log = logging.getLogger(__name__)

NUMBER_TYPE = 'fraction'


def _as_fraction(value):
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def _origin_feasible(inequalities, equations):
    return all(offset >= 0 for __, offset in inequalities) and all(offset == 0 for __, offset in equations)


class CddPolyhedralBackend(BasePolyhedralBackend):
    """
    Double description conversions through cddlib in exact rational mode
    """

    def __init__(self, **kwargs):
        """
        Initializer

        ARGS: kwargs
            - MAX_CONVERSION_CACHE_SIZE: Maximum size of the LRU cache around
              conversions
        """

        _cache_size = kwargs.get('MAX_CONVERSION_CACHE_SIZE', 4096)
        self._conversion_cache = pylru.lrucache(_cache_size)

    @staticmethod
    def _matrix(rows, linear_rows, rep_type):
        """
        Builds a cdd matrix; linear_rows are appended with the linearity flag set
        """

        if rows:
            mat = cdd.Matrix(rows, linear=False, number_type=NUMBER_TYPE)
            if linear_rows:
                mat.extend(linear_rows, linear=True)
        else:
            mat = cdd.Matrix(linear_rows, linear=True, number_type=NUMBER_TYPE)
        mat.rep_type = rep_type
        return mat

    def to_generators(self, dimension, inequalities, equations):
        """
        H to V conversion
        """

        key = ('H', dimension, tuple(inequalities), tuple(equations))
        if key in self._conversion_cache:
            return self._conversion_cache[key]

        rows = [[offset] + list(normal) for normal, offset in inequalities]
        linear_rows = [[offset] + list(normal) for normal, offset in equations]
        if not rows and not linear_rows:
            # 1 >= 0, the whole space
            rows = [[1] + [0] * dimension]

        mat = self._matrix(rows, linear_rows, cdd.RepType.INEQUALITY)
        generators = cdd.Polyhedron(mat).get_generators()

        points, rays, lines = [], [], []
        for index in range(generators.row_size):
            row = [_as_fraction(value) for value in generators[index]]
            if index in generators.lin_set:
                lines.append(tuple(row[1:]))
            elif row[0] == 0:
                rays.append(tuple(row[1:]))
            else:
                points.append(tuple(value / row[0] for value in row[1:]))

        if not points and _origin_feasible(inequalities, equations):
            # homogeneous systems come back from cdd without their apex
            points.append(tuple(Fraction(0) for __ in range(dimension)))

        result = (tuple(points), tuple(rays), tuple(lines)) if points else None
        log.debug('H->V in dimension %s: %s inequalities, %s equations, empty=%s',
                  dimension, len(rows), len(linear_rows), result is None)

        self._conversion_cache[key] = result
        return result

    def to_inequalities(self, dimension, points, rays, lines):
        """
        V to H conversion
        """

        key = ('V', dimension, tuple(points), tuple(rays), tuple(lines))
        if key in self._conversion_cache:
            return self._conversion_cache[key]

        rows = [[1] + list(point) for point in points] + [[0] + list(ray) for ray in rays]
        linear_rows = [[0] + list(line) for line in lines]

        mat = self._matrix(rows, linear_rows, cdd.RepType.GENERATOR)
        found = cdd.Polyhedron(mat).get_inequalities()

        inequalities, equations = [], []
        for index in range(found.row_size):
            row = [_as_fraction(value) for value in found[index]]
            normal, offset = tuple(row[1:]), row[0]
            if all(value == 0 for value in normal):
                # the trivial 1 >= 0 row
                continue
            if index in found.lin_set:
                equations.append((normal, offset))
            else:
                inequalities.append((normal, offset))

        result = (tuple(inequalities), tuple(equations))
        self._conversion_cache[key] = result
        return result
