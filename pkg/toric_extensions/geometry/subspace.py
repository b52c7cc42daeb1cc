"""
Rational subspaces and per-ray decreasing filtrations of a fixed ambient space
"""



from fractions import Fraction

from toric_extensions.geometry import linalg


class Subspace:
    """
    A subspace of Q^n kept as the nonzero rows of a reduced row echelon form, so
    equal subspaces have equal bases
    """

    __slots__ = ('ambient_dim', 'basis')

    def __init__(self, ambient_dim, vectors=()):
        self.ambient_dim = ambient_dim
        self.basis = tuple(linalg.span_basis([linalg.as_vector(v) for v in vectors], ambient_dim))

    @classmethod
    def full(cls, ambient_dim):
        return cls(ambient_dim, [tuple(int(i == j) for j in range(ambient_dim)) for i in range(ambient_dim)])

    @classmethod
    def zero(cls, ambient_dim):
        return cls(ambient_dim)

    @classmethod
    def coordinate(cls, ambient_dim, indices):
        return cls(ambient_dim, [tuple(int(i == j) for j in range(ambient_dim)) for i in indices])

    @property
    def dim(self):
        return len(self.basis)

    @property
    def is_full(self):
        return self.dim == self.ambient_dim

    @property
    def is_zero(self):
        return self.dim == 0

    def contains(self, vector):
        return linalg.rank(list(self.basis) + [linalg.as_vector(vector)], self.ambient_dim) == self.dim

    def contains_subspace(self, other):
        return all(self.contains(vector) for vector in other.basis)

    def orthogonal_complement(self):
        if not self.basis:
            return Subspace.full(self.ambient_dim)
        return Subspace(self.ambient_dim, linalg.nullspace(list(self.basis), self.ambient_dim))

    def __add__(self, other):
        return Subspace(self.ambient_dim, list(self.basis) + list(other.basis))

    def __and__(self, other):
        complements = list(self.orthogonal_complement().basis) + list(other.orthogonal_complement().basis)
        if not complements:
            return Subspace.full(self.ambient_dim)
        return Subspace(self.ambient_dim, linalg.nullspace(complements, self.ambient_dim))

    def direct_sum(self, other):
        """
        self (+) other inside Q^(n + k)
        """

        left = [tuple(vector) + tuple([Fraction(0)] * other.ambient_dim) for vector in self.basis]
        right = [tuple([Fraction(0)] * self.ambient_dim) + tuple(vector) for vector in other.basis]
        return Subspace(self.ambient_dim + other.ambient_dim, left + right)

    def image(self, rows, target_dim):
        """
        Image under the linear map whose matrix (target_dim x ambient_dim) is rows
        """
        return Subspace(target_dim, [linalg.mat_vec(rows, vector) for vector in self.basis])

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return 'Subspace({basis})'.format(basis=[[str(x) for x in row] for row in self.basis])


class Filtration:
    """
    For every ray a decreasing chain E^l of subspaces of Q^ambient_dim: the whole space
    for l <= lower, then the listed steps, then zero. Chains are stored trimmed, so the
    first step is a proper subspace and the last step is nonzero
    """

    __slots__ = ('ambient_dim', 'rays', '_chains')

    def __init__(self, ambient_dim, chains):
        """
        chains maps each ray to (lower, [Subspace, ...]); ray order is preserved
        """

        self.ambient_dim = ambient_dim
        self.rays = tuple(tuple(ray) for ray in chains)
        self._chains = {}
        for ray, (lower, steps) in chains.items():
            steps = list(steps)
            while steps and steps[0].is_full:
                steps.pop(0)
                lower += 1
            while steps and steps[-1].is_zero:
                steps.pop()
            for upper, following in zip(steps, steps[1:]):
                if not upper.contains_subspace(following):
                    raise ValueError('filtration at ray {ray} is not decreasing'.format(ray=ray))
            if ambient_dim == 0:
                steps = []
            self._chains[tuple(ray)] = (int(lower), tuple(steps))

    @classmethod
    def from_levels(cls, ambient_dim, rays, level_function, lowest, highest):
        """
        Samples level_function(ray, l) for lowest <= l <= highest; levels below are full
        and levels above are zero
        """

        chains = {}
        for ray in rays:
            steps = [level_function(ray, level) for level in range(lowest, highest + 1)]
            chains[tuple(ray)] = (lowest - 1, steps)
        return cls(ambient_dim, chains)

    def chain(self, ray):
        return self._chains[tuple(ray)]

    def lower(self, ray):
        """
        Largest level at which the filtration is still the whole space
        """
        return self._chains[tuple(ray)][0]

    def zero_from(self, ray):
        """
        Smallest level at which the filtration is zero
        """

        lower, steps = self._chains[tuple(ray)]
        return lower + len(steps) + 1

    def level(self, ray, level):
        """
        E^level at ray
        """

        lower, steps = self._chains[tuple(ray)]
        if level <= lower:
            return Subspace.full(self.ambient_dim)
        if level - lower - 1 < len(steps):
            return steps[level - lower - 1]
        return Subspace.zero(self.ambient_dim)

    def level_range(self):
        """
        (lowest, highest) covering every proper step of every ray
        """

        lowest = min(self.lower(ray) for ray in self.rays)
        highest = max(self.zero_from(ray) for ray in self.rays)
        return lowest, highest

    def subspaces(self):
        """
        Every distinct subspace occurring at some ray and level
        """

        found = {Subspace.full(self.ambient_dim), Subspace.zero(self.ambient_dim)}
        for __, steps in self._chains.values():
            found.update(steps)
        return found

    def dimension_profile(self, levels):
        return {ray: [self.level(ray, level).dim for level in levels] for ray in self.rays}

    def __eq__(self, other):
        return isinstance(other, Filtration) and self.ambient_dim == other.ambient_dim and \
            self.rays == other.rays and self._chains == other._chains

    def __hash__(self):
        return hash((self.ambient_dim, self.rays, tuple(self._chains[ray] for ray in self.rays)))

    def __repr__(self):
        return 'Filtration(ambient_dim={dim}, chains={chains})'.format(dim=self.ambient_dim, chains=self._chains)
