"""
.. module:: matcore
   :platform: Linux, MacOS, Windows
   :synopsis: Dense complex matrix arithmetic, Hermitian eigensolver and seeded
              Haar sampling

"""

import typing as t

import numpy as np
from numpy import typing as npt

from . import config
from .errors import BadShape, DimensionOverflow, NotHermitian, NumericalFailure
from .hermitian_spectrum import HermitianSpectrum

RNG_NAME: str = "philox4x64-v1"

# Components below this modulus never anchor the phase of an eigenvector.
_PHASE_ANCHOR = 1e-8
_TIE_TOL = 1e-10
_KEY_DECIMALS = 10


def as_complex_matrix(array: npt.ArrayLike) -> np.ndarray:
    """
    Convert an array-like object into a square ``complex128`` matrix.

    Parameters
    ----------
    array
        The object to be converted.

    Returns
    -------
    np.ndarray
        A square complex matrix with finite entries.

    Raises
    ------
    BadShape
        If the array is not square or has non-finite entries.

    Example
    -------
    >>> from entlab import matcore
    >>> matcore.as_complex_matrix([[1, 0], [0, 1]]).dtype
    dtype('complex128')
    """
    matrix = np.array(array, dtype=complex)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise BadShape(f"Expected a square matrix, got shape {matrix.shape}")
    if matrix.shape[0] < 1:
        raise BadShape("A matrix must have dimension at least 1")
    if not np.all(np.isfinite(matrix)):
        raise BadShape("Matrix entries must be finite")
    return matrix


def frobenius(matrix: npt.ArrayLike) -> float:
    """Frobenius norm of a matrix."""
    return float(np.linalg.norm(matrix))


def hermiticity_defect(matrix: np.ndarray) -> float:
    """Frobenius distance between a matrix and its adjoint."""
    return frobenius(matrix - matrix.conj().T)


def check_dimension(dimension: int, what: str = "matrix") -> None:
    """
    Raise :class:`DimensionOverflow` if a dimension exceeds the configured cap.

    Parameters
    ----------
    dimension
        The dimension of the object about to be constructed.
    what
        A description of that object, used in the error message.
    """
    cap = config.get_max_dim()
    if dimension > cap:
        raise DimensionOverflow(
            f"The {what} would have dimension {dimension}, above the cap of {cap}"
        )


def _fix_phases(vectors: np.ndarray) -> None:
    for j in range(vectors.shape[1]):
        column = vectors[:, j]
        anchor = np.flatnonzero(np.abs(column) > _PHASE_ANCHOR)
        if anchor.size:
            value = column[anchor[0]]
            vectors[:, j] = column * (np.abs(value) / value)


def _sort_key(column: np.ndarray) -> t.Tuple[float, ...]:
    rounded = np.round(column, _KEY_DECIMALS)
    return tuple(np.column_stack([rounded.real, rounded.imag]).ravel().tolist())


def _order_ties(values: np.ndarray, vectors: np.ndarray) -> np.ndarray:
    order = []
    start = 0
    for stop in range(1, values.size + 1):
        if stop == values.size or (
            values[stop] - values[start] > _TIE_TOL * max(1.0, abs(values[start]))
        ):
            block = list(range(start, stop))
            block.sort(key=lambda k: _sort_key(vectors[:, k]), reverse=True)
            order.extend(block)
            start = stop
    return vectors[:, order]


def eig_hermitian(
    matrix: npt.ArrayLike, tol: float = config.HERMITIAN_TOL
) -> HermitianSpectrum:
    """
    Compute the spectral decomposition of a Hermitian matrix.

    Eigenvalues are returned in ascending order. Each eigenvector is rescaled by a
    phase that makes its first non-negligible component real and positive, and
    eigenvectors of (numerically) equal eigenvalues are sorted in descending
    lexicographic order of their components. The output is therefore a
    deterministic function of the input.

    Parameters
    ----------
    matrix
        A Hermitian matrix.
    tol
        The largest Frobenius distance between the matrix and its adjoint.

    Returns
    -------
    HermitianSpectrum
        The eigenvalues and eigenvectors.

    Raises
    ------
    NotHermitian
        If the matrix is not Hermitian within ``tol``.
    NumericalFailure
        If the eigensolver does not converge.

    Example
    -------
    >>> import numpy as np
    >>> from entlab import matcore
    >>> spectrum = matcore.eig_hermitian(np.diag([3.0, 1.0, 2.0]))
    >>> spectrum.eigenvalues
    array([1., 2., 3.])
    >>> spectrum = matcore.eig_hermitian([[0, 1], [1, 0]])
    >>> np.round(spectrum.eigenvalues, 12)
    array([-1.,  1.])
    """
    matrix = as_complex_matrix(matrix)
    defect = hermiticity_defect(matrix)
    if defect > tol:
        raise NotHermitian(
            f"Matrix is not Hermitian: |M - M^H|_F = {defect:.3e} > {tol:.1e}"
        )
    try:
        values, vectors = np.linalg.eigh(0.5 * (matrix + matrix.conj().T))
    except np.linalg.LinAlgError as error:
        raise NumericalFailure(f"Hermitian eigensolver failed: {error}") from error
    if not (np.all(np.isfinite(values)) and np.all(np.isfinite(vectors))):
        raise NumericalFailure("Hermitian eigensolver returned non-finite values")
    vectors = np.array(vectors, dtype=complex)
    _fix_phases(vectors)
    return HermitianSpectrum(values, _order_ties(values, vectors))


def tensor(first: npt.ArrayLike, second: npt.ArrayLike) -> np.ndarray:
    """
    Kronecker product of two square matrices.

    Row ``(a, b)`` of the result has index ``a * dim(second) + b``.

    Parameters
    ----------
    first
        The left factor.
    second
        The right factor.

    Returns
    -------
    np.ndarray
        The tensor product.

    Raises
    ------
    DimensionOverflow
        If the product dimension exceeds the configured cap.

    Example
    -------
    >>> import numpy as np
    >>> from entlab import matcore
    >>> matcore.tensor(np.diag([1, 0]), np.diag([0.25, 0.75])).real
    array([[0.25, 0.  , 0.  , 0.  ],
           [0.  , 0.75, 0.  , 0.  ],
           [0.  , 0.  , 0.  , 0.  ],
           [0.  , 0.  , 0.  , 0.  ]])
    """
    first = as_complex_matrix(first)
    second = as_complex_matrix(second)
    check_dimension(first.shape[0] * second.shape[0], "tensor product")
    return np.kron(first, second)


def make_rng(seed: int) -> np.random.Generator:
    """
    Create the counter-based random generator used throughout entlab.

    Parameters
    ----------
    seed
        A non-negative integer seed.

    Returns
    -------
    np.random.Generator
        A generator backed by the Philox bit generator.
    """
    return np.random.Generator(np.random.Philox(int(seed)))


def ginibre(rows: int, cols: int, rng: np.random.Generator) -> np.ndarray:
    """
    Sample a matrix of independent standard complex Gaussian entries.

    Parameters
    ----------
    rows
        The number of rows.
    cols
        The number of columns.
    rng
        The random generator.
    """
    real = rng.standard_normal((rows, cols))
    imag = rng.standard_normal((rows, cols))
    return (real + 1j * imag) / np.sqrt(2.0)


def haar_unitary(n: int, seed: int) -> np.ndarray:
    """
    Sample a Haar-distributed unitary matrix.

    The matrix is the Q factor of the QR decomposition of a complex Gaussian matrix,
    with the columns rescaled by the phases of the diagonal of R.

    Parameters
    ----------
    n
        The dimension.
    seed
        The seed. The same ``(n, seed)`` always produces the same matrix.

    Returns
    -------
    np.ndarray
        A unitary matrix.

    Example
    -------
    >>> import numpy as np
    >>> from entlab import matcore
    >>> u = matcore.haar_unitary(8, seed=3)
    >>> bool(np.allclose(u.conj().T @ u, np.eye(8), atol=1e-10))
    True
    >>> bool(np.array_equal(u, matcore.haar_unitary(8, seed=3)))
    True
    """
    if n < 1:
        raise BadShape(f"Dimension must be positive, got {n}")
    check_dimension(n, "unitary")
    gaussian = ginibre(n, n, make_rng(seed))
    q, r = np.linalg.qr(gaussian)
    diagonal = np.diag(r)
    phases = np.where(np.abs(diagonal) > 0, diagonal / np.abs(diagonal), 1.0)
    return q * phases


def haar_isometry(m: int, r: int, seed: int) -> np.ndarray:
    """
    Sample an ``m x r`` isometry made of the first ``r`` columns of a Haar unitary.

    Parameters
    ----------
    m
        The number of rows.
    r
        The number of orthonormal columns.
    seed
        The seed passed to :func:`haar_unitary`.

    Raises
    ------
    BadShape
        If ``m < r`` or ``r < 1``.

    Example
    -------
    >>> import numpy as np
    >>> from entlab import matcore
    >>> w = matcore.haar_isometry(6, 2, seed=0)
    >>> w.shape
    (6, 2)
    >>> bool(np.allclose(w.conj().T @ w, np.eye(2), atol=1e-10))
    True
    """
    if r < 1 or m < r:
        raise BadShape(f"An isometry needs m >= r >= 1, got m={m} and r={r}")
    return haar_unitary(m, seed)[:, :r]


def matrix_to_dict(matrix: npt.ArrayLike) -> t.Dict[str, t.Any]:
    """
    Convert a square matrix into its JSON representation.

    Example
    -------
    >>> from entlab import matcore
    >>> matcore.matrix_to_dict([[1, 2], [2, 1]])
    {'dim': 2, 'entries': [[1.0, 0.0], [2.0, 0.0], [2.0, 0.0], [1.0, 0.0]]}
    """
    matrix = as_complex_matrix(matrix)
    return {"dim": matrix.shape[0], "entries": vector_to_list(matrix.ravel())}


def matrix_from_dict(data: t.Dict[str, t.Any]) -> np.ndarray:
    """
    Rebuild a square matrix from its JSON representation.

    Raises
    ------
    BadShape
        If the number of entries is not the square of ``dim``.
    """
    dim = int(data["dim"])
    entries = vector_from_list(data["entries"])
    if dim < 1 or entries.size != dim * dim:
        raise BadShape(f"Expected {dim}x{dim} entries, got {entries.size}")
    return as_complex_matrix(entries.reshape(dim, dim))


def vector_to_list(vector: npt.ArrayLike) -> t.List[t.List[float]]:
    """Convert a complex vector into a list of ``[re, im]`` pairs."""
    vector = np.asarray(vector, dtype=complex).ravel()
    return [[float(z.real), float(z.imag)] for z in vector]


def vector_from_list(pairs: t.Sequence[t.Sequence[float]]) -> np.ndarray:
    """Rebuild a complex vector from a list of ``[re, im]`` pairs."""
    array = np.array(pairs, dtype=float).reshape(-1, 2)
    return array[:, 0] + 1j * array[:, 1]
