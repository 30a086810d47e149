"""Exact linear algebra on banded upper Hessenberg-Toeplitz matrices.

The matrices handled here have first row v_1..v_n repeated along the
diagonals (entry(i, j) = v_{j-i+1} for j >= i), a constant -1 on the
subdiagonal, and zeros below. Expanding the determinant across the last
column gives det_n = sum_i v_{n-i+1} * det_{i-1} with det_0 = 1, an O(n^2)
exact kernel that works for any band values. Deleting row and column i of
such a matrix leaves a block-triangular matrix whose diagonal blocks are
the order i-1 and order n-i matrices of the same band, which is why
principal minors factor into products of leading determinants and why
minor sums of a fixed order are convolutions of the determinant sequence.

General dense determinants (submatrices of a Hessenberg matrix need not
be Hessenberg) go through fraction-free Bareiss elimination: exact
integer arithmetic, divisions that are provably exact, row swaps with
sign tracking for zero pivots.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .alphabet import PartAlphabet
from .errors import DomainError, GuardExceeded, IndexOutOfRange
from .numbers import IntPolynomial, convolution_power
from .recurrence import sequence_prefix

SUBSET_GUARD_DEFAULT = 22


@dataclass(frozen=True)
class HessMatrix:
    """Band storage: first-row values only. Order n is the band length."""

    band: tuple[int, ...]

    def __post_init__(self):
        if not self.band:
            raise DomainError("matrix order must be >= 1")

    @property
    def order(self) -> int:
        return len(self.band)

    def entry(self, i: int, j: int) -> int:
        """1-indexed entry: band value on and above the diagonal, -1 on the
        subdiagonal, 0 below."""
        n = self.order
        if not (1 <= i <= n and 1 <= j <= n):
            raise IndexOutOfRange(f"entry ({i}, {j}) outside order-{n} matrix")
        if j >= i:
            return self.band[j - i]
        if j == i - 1:
            return -1
        return 0

    def to_dense(self) -> list[list[int]]:
        n = self.order
        return [[self.entry(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]


def build_matrix(alphabet: PartAlphabet, n: int) -> HessMatrix:
    """Order-n matrix whose band carries the alphabet's color multiplicities
    (value d on diagonal offset d-1); its determinant counts compositions
    of n."""
    if n < 1:
        raise DomainError(f"matrix order must be >= 1, got {n}")
    return HessMatrix(tuple(alphabet.multiplicity(d) for d in range(1, n + 1)))


def det_hessenberg(matrix: HessMatrix) -> int:
    """Determinant by the last-column expansion recurrence, O(n^2) exact."""
    band = matrix.band
    dets = [1]
    for j in range(1, matrix.order + 1):
        dets.append(sum(band[j - i] * dets[i - 1] for i in range(1, j + 1)))
    return dets[matrix.order]


def det_bareiss(rows) -> int:
    """Exact determinant of a dense integer matrix by single-step
    fraction-free elimination; the empty matrix has determinant 1."""
    m = [list(row) for row in rows]
    n = len(m)
    if any(len(row) != n for row in m):
        raise DomainError("matrix must be square")
    sign = 1
    previous_pivot = 1
    for col in range(n - 1):
        if m[col][col] == 0:
            for row in range(col + 1, n):
                if m[row][col]:
                    m[col], m[row] = m[row], m[col]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[col][col]
        for row in range(col + 1, n):
            factor = m[row][col]
            target = m[row]
            source = m[col]
            for c in range(col + 1, n):
                target[c] = (target[c] * pivot - factor * source[c]) // previous_pivot
            target[col] = 0
        previous_pivot = pivot
    return sign * m[n - 1][n - 1] if n else 1


def _validate_deleted(deleted, n) -> tuple[int, ...]:
    indices = tuple(sorted(set(deleted)))
    for i in indices:
        if not 1 <= i <= n:
            raise IndexOutOfRange(f"index {i} outside 1..{n}")
    return indices


def principal_minor(matrix: HessMatrix, deleted) -> int:
    """Determinant of the submatrix retaining the rows and columns not in
    ``deleted`` (1-indexed); deleting everything leaves minor 1."""
    n = matrix.order
    indices = set(_validate_deleted(deleted, n))
    retained = [i for i in range(1, n + 1) if i not in indices]
    dense = [[matrix.entry(i, j) for j in retained] for i in retained]
    return det_bareiss(dense)


def minor_product_formula(alphabet: PartAlphabet, n: int, deleted) -> int:
    """Principal minor of the order-n matrix for ``alphabet`` as a product
    of determinant-sequence terms over the gaps between deleted indices:
    deleting i_1 < ... < i_k leaves block-triangular pieces of orders
    i_1 - 1, i_2 - i_1 - 1, ..., n - i_k, so the minor is
    a_{i_1} * a_{i_2 - i_1} * ... * a_{n - i_k + 1}."""
    indices = _validate_deleted(deleted, n)
    terms = sequence_prefix(alphabet, n)
    product = 1
    previous = 0
    for i in indices:
        product *= terms[i - previous - 1]
        previous = i
    return product * terms[n - previous]


def minor_sum_subsets(matrix: HessMatrix, order: int, guard: int | None = None) -> int:
    """Sum of all order-``order`` principal minors, by expanding every
    index subset. Exponential; guarded by matrix order (default 22)."""
    n = matrix.order
    if not 0 <= order <= n:
        raise DomainError(f"minor order must be within 0..{n}, got {order}")
    limit = SUBSET_GUARD_DEFAULT if guard is None else guard
    if n > limit:
        raise GuardExceeded(f"matrix order {n} exceeds the subset guard {limit}")
    return _minor_sum_subsets(matrix, order)


@lru_cache(maxsize=None)
def _minor_sum_subsets(matrix, order):
    n = matrix.order
    return sum(
        principal_minor(matrix, deleted)
        for deleted in combinations(range(1, n + 1), n - order)
    )


def minor_sum_convolution(alphabet: PartAlphabet, n: int, k: int) -> int:
    """Sum of all order n-k principal minors of the order-n matrix for
    ``alphabet``, evaluated as the (k+1)-fold convolution of its
    determinant sequence at n-k (each retained block contributes one
    factor)."""
    if not 0 <= k <= n:
        raise DomainError(f"deleted count must be within 0..{n}, got {k}")
    terms = sequence_prefix(alphabet, n - k)
    return convolution_power(terms, k + 1, n - k)


def charpoly(matrix: HessMatrix) -> IntPolynomial:
    """Characteristic polynomial det(xI - M), monic of degree n, by the
    leading-principal-submatrix recurrence
    chi_j = (x - v_1) * chi_{j-1} + sum_{d=2..j} (-1)^d v_d chi_{j-d}.

    The coefficient of x^{n-r} equals (-1)^r times the sum of all order-r
    principal minors.
    """
    band = matrix.band
    polys = [[1]]
    for j in range(1, matrix.order + 1):
        prev = polys[j - 1]
        current = [0] + prev
        for idx, c in enumerate(prev):
            current[idx] -= band[0] * c
        for d in range(2, j + 1):
            coeff = band[d - 1] if d % 2 == 0 else -band[d - 1]
            if coeff:
                for idx, c in enumerate(polys[j - d]):
                    current[idx] += coeff * c
        polys.append(current)
    return IntPolynomial(tuple(polys[matrix.order]))


def format_matrix(rows) -> str:
    """Plain text grid: rows newline-separated, entries space-separated."""
    return "\n".join(" ".join(str(entry) for entry in row) for row in rows)


def parse_matrix(text: str) -> list[list[int]]:
    """Inverse of format_matrix; rejects ragged grids."""
    rows = [[int(tok) for tok in line.split()] for line in text.strip().splitlines()]
    if not rows:
        raise DomainError("empty matrix text")
    width = len(rows[0])
    if any(len(row) != width for row in rows):
        raise DomainError("ragged matrix text")
    return rows
