"""
Exact linear algebra over the rationals.

Matrices are plain lists of rows whose entries are ints or Fractions. The heavy
lifting (rank, row reduction, kernels, inverses) is done by sympy's DomainMatrix
over QQ, results are handed back as Fractions.
"""



import math
from fractions import Fraction

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix


def as_fraction(value):
    """
    Coerces ints, Fractions and sympy rationals into a Fraction
    """

    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError('booleans are not coordinates')
    if isinstance(value, int):
        return Fraction(value)
    if hasattr(value, 'p') and hasattr(value, 'q'):
        return Fraction(int(value.p), int(value.q))
    if hasattr(value, 'numerator') and hasattr(value, 'denominator'):
        return Fraction(int(value.numerator), int(value.denominator))
    raise TypeError("cannot use {value!r} as an exact rational".format(value=value))


def as_vector(values):
    """
    Tuple of Fractions
    """
    return tuple(as_fraction(value) for value in values)


def dot(left, right):
    return sum((a * b for a, b in zip(left, right)), Fraction(0))


def add(left, right):
    return tuple(a + b for a, b in zip(left, right))


def sub(left, right):
    return tuple(a - b for a, b in zip(left, right))


def scale(vector, factor):
    return tuple(factor * a for a in vector)


def is_zero(vector):
    return all(a == 0 for a in vector)


def is_integral(vector):
    return all(as_fraction(a).denominator == 1 for a in vector)


def primitive(vector):
    """
    Positive rescaling of a nonzero rational vector to a primitive integer vector
    """

    entries = as_vector(vector)
    if is_zero(entries):
        raise ValueError('the zero vector has no primitive representative')

    common = 1
    for entry in entries:
        common = common * entry.denominator // math.gcd(common, entry.denominator)
    ints = [int(entry * common) for entry in entries]
    divisor = 0
    for value in ints:
        divisor = math.gcd(divisor, value)
    return tuple(value // divisor for value in ints)


def primitive_scale(vector):
    """
    The positive rational t with t * vector primitive integral
    """

    entries = as_vector(vector)
    prim = primitive(entries)
    for entry, target in zip(entries, prim):
        if entry != 0:
            return Fraction(target) / entry
    raise ValueError('the zero vector has no primitive representative')


def sign_normalized(vector):
    """
    Primitive integer vector whose first nonzero entry is positive
    """

    prim = primitive(vector)
    for value in prim:
        if value != 0:
            return prim if value > 0 else tuple(-x for x in prim)
    return prim


def _domain_matrix(rows, ncols):
    elements = [[QQ(as_fraction(a).numerator, as_fraction(a).denominator) for a in row] for row in rows]
    return DomainMatrix(elements, (len(elements), ncols), QQ)


def _to_rows(matrix):
    sympy_matrix = matrix.to_Matrix()
    return [
        tuple(as_fraction(sympy_matrix[i, j]) for j in range(sympy_matrix.cols))
        for i in range(sympy_matrix.rows)
    ]


def _ncols(rows, ncols):
    if ncols is not None:
        return ncols
    if not rows:
        raise ValueError('column count is required for an empty matrix')
    return len(rows[0])


def rank(rows, ncols=None):
    """
    Exact rank of a rational matrix
    """

    rows = [row for row in rows]
    if not rows:
        return 0
    ncols = _ncols(rows, ncols)
    if ncols == 0:
        return 0
    return int(_domain_matrix(rows, ncols).rank())


def rref(rows, ncols=None):
    """
    Reduced row echelon form with zero rows dropped, plus the pivot columns
    """

    rows = [row for row in rows]
    ncols = _ncols(rows, ncols)
    if not rows or ncols == 0:
        return [], ()
    reduced, pivots = _domain_matrix(rows, ncols).rref()
    return _to_rows(reduced)[:len(pivots)], tuple(pivots)


def nullspace(rows, ncols=None):
    """
    A basis of {x : rows * x = 0}, one vector per list entry
    """

    rows = [row for row in rows]
    ncols = _ncols(rows, ncols)
    if ncols == 0:
        return []
    if not rows:
        return [tuple(Fraction(int(i == j)) for j in range(ncols)) for i in range(ncols)]
    kernel = _domain_matrix(rows, ncols).nullspace()
    return [row for row in _to_rows(kernel) if not is_zero(row)]


def transpose(rows, ncols=None):
    ncols = _ncols(rows, ncols)
    return [tuple(row[j] for row in rows) for j in range(ncols)]


def inverse(rows):
    """
    Inverse of a square invertible matrix
    """

    size = len(rows)
    return _to_rows(_domain_matrix(rows, size).inv())


def determinant(rows):
    size = len(rows)
    if size == 0:
        return Fraction(1)
    return as_fraction(_domain_matrix(rows, size).det())


def mat_vec(rows, vector):
    return tuple(dot(row, vector) for row in rows)


def solve_affine(rows, rhs):
    """
    The unique solution of rows * x = rhs for a square invertible system, or None
    """

    size = len(rows)
    if rank(rows, size) < size:
        return None
    return mat_vec(inverse(rows), rhs)


def span_basis(vectors, ncols):
    """
    Canonical basis (nonzero rows of the rref) of the span of vectors
    """

    basis, __ = rref(list(vectors), ncols)
    return basis


def project_onto_complement(vector, basis):
    """
    Orthogonal projection of vector onto the complement of span(basis)
    """

    if not basis:
        return as_vector(vector)
    size = len(basis)
    gram = [[dot(basis[i], basis[j]) for j in range(size)] for i in range(size)]
    coefficients = mat_vec(inverse(gram), [dot(b, vector) for b in basis])
    result = as_vector(vector)
    for coefficient, base in zip(coefficients, basis):
        result = sub(result, scale(base, coefficient))
    return result


def lcm_of_denominators(values):
    common = 1
    for value in values:
        denominator = as_fraction(value).denominator
        common = common * denominator // math.gcd(common, denominator)
    return common
