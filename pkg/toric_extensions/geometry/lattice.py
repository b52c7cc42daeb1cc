"""
Full-rank lattices inside Q^r, with Hermite normal form bases
"""



import logging
from fractions import Fraction

from contracts import contract
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import hermite_normal_form

from toric_extensions.exceptions import LatticeError
from toric_extensions.geometry import linalg

log = logging.getLogger(__name__)


def _hermite_basis(generators, rank):
    """
    Canonical column basis of the lattice spanned by generators
    """

    if not generators:
        raise LatticeError('cannot build a rank {rank} lattice from no generators'.format(rank=rank))

    common = linalg.lcm_of_denominators(entry for generator in generators for entry in generator)
    columns = [[int(entry * common) for entry in generator] for generator in generators]
    rows = [[ZZ(columns[j][i]) for j in range(len(columns))] for i in range(rank)]
    hnf = hermite_normal_form(DomainMatrix(rows, (rank, len(columns)), ZZ)).to_Matrix()

    if hnf.cols != rank:
        raise LatticeError(
            'generators span a sublattice of rank {got}, expected rank {rank}'.format(got=hnf.cols, rank=rank)
        )

    return tuple(
        tuple(Fraction(int(hnf[i, j].p), common) for i in range(rank))
        for j in range(rank)
    )


class Lattice:
    """
    A full-rank lattice in Q^r given by generators (columns). The stored basis is the
    Hermite normal form, so two lattices are equal iff their bases are equal
    """

    __slots__ = ('_basis', '_inverse')

    def __init__(self, generators):
        generators = [linalg.as_vector(generator) for generator in generators]
        if not generators:
            raise LatticeError('a lattice needs at least one generator')
        rank = len(generators[0])
        if any(len(generator) != rank for generator in generators):
            raise LatticeError('lattice generators have mixed lengths')
        self._basis = _hermite_basis(generators, rank)
        self._inverse = None

    @classmethod
    def standard(cls, rank):
        """
        Z^rank
        """
        return cls([tuple(int(i == j) for i in range(rank)) for j in range(rank)])

    @property
    def rank(self):
        return len(self._basis)

    @property
    def basis(self):
        """
        The canonical generators, one tuple per column
        """
        return self._basis

    def basis_rows(self):
        """
        The basis as a square matrix whose columns are the generators
        """
        return [tuple(column[i] for column in self._basis) for i in range(self.rank)]

    def coordinates(self, vector):
        """
        Coordinates of vector with respect to the basis
        """

        if self._inverse is None:
            self._inverse = linalg.inverse(self.basis_rows())
        return linalg.mat_vec(self._inverse, linalg.as_vector(vector))

    def contains(self, vector):
        return linalg.is_integral(self.coordinates(vector))

    def contains_lattice(self, other):
        return all(self.contains(generator) for generator in other.basis)

    @property
    def determinant(self):
        """
        Covolume of the lattice, positive
        """
        return abs(linalg.determinant(self.basis_rows()))

    def index_in(self, ambient):
        """
        [ambient : self] for a sublattice self of ambient
        """

        if not ambient.contains_lattice(self):
            raise LatticeError('{sub} is not a sublattice of {ambient}'.format(sub=self, ambient=ambient))
        index = self.determinant / ambient.determinant
        return int(index)

    def dual(self):
        """
        The lattice of all u with <u, x> integral for every x in self
        """

        inverse_rows = linalg.inverse(self.basis_rows())
        # rows of B^-1 are the dual basis vectors
        return Lattice(inverse_rows)

    def primitive_along(self, direction):
        """
        The shortest nonzero positive multiple of direction that lies in the lattice
        """

        coordinates = self.coordinates(direction)
        factor = linalg.primitive_scale(coordinates)
        return linalg.scale(linalg.as_vector(direction), factor)

    def is_standard(self):
        return self == Lattice.standard(self.rank)

    def __eq__(self, other):
        return isinstance(other, Lattice) and self._basis == other._basis

    def __hash__(self):
        return hash(self._basis)

    def __repr__(self):
        return 'Lattice({basis})'.format(basis=[[str(x) for x in column] for column in self._basis])


@contract(lattice=Lattice)
def lattice_join(lattice, extra):
    """
    Smallest lattice containing lattice and every point of extra
    """

    extra = [linalg.as_vector(point) for point in extra]
    if not extra:
        return lattice

    joined = Lattice(list(lattice.basis) + extra)
    # the Hermite basis is square, so the join is discrete; the index must be finite and integral
    index = lattice.determinant / joined.determinant
    if index.denominator != 1:
        raise LatticeError('lattice join is not a finite-index superlattice')

    log.debug('Joined %s with %d extra points, index %s', lattice, len(extra), index)
    return joined


@contract(sub=Lattice, ambient=Lattice)
def order_in_quotient(vector, sub, ambient):
    """
    Order of the class of vector in ambient / sub
    """

    if not ambient.contains_lattice(sub):
        raise LatticeError('{sub} is not contained in {ambient}'.format(sub=sub, ambient=ambient))
    if not ambient.contains(vector):
        raise LatticeError('{vector} is not a point of {ambient}'.format(vector=vector, ambient=ambient))

    return linalg.lcm_of_denominators(sub.coordinates(vector))
