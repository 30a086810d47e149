"""Composition counts through their defining linear recurrence.

Every composition of n >= 1 ends in some allowed value m with one of its
q colors, so the counts satisfy c(n) = sum_i q_i * c(n - m_i) with
c(0) = 1 and c(j) = 0 for j < 0. The helper sequence a_1 = 1,
a_{m+1} = sum_{d>=1} p_d * a_{m+1-d} (p_d = multiplicity of value d)
therefore reproduces a_{m+1} = c(m); it is also exactly the determinant
sequence of the banded Hessenberg matrices built elsewhere.

Prefixes are cached per alphabet and grow monotonically, so repeated and
increasing requests reuse earlier work; the cache is lock-protected and
callers always receive fresh copies.
"""

import threading

from .alphabet import PartAlphabet
from .errors import DomainError

_prefix_cache: dict[PartAlphabet, list[int]] = {}
_cache_lock = threading.Lock()


def build_coeffs(alphabet: PartAlphabet, length: int) -> list[int]:
    """Recurrence coefficients p_1..p_length (lag d stored at index d-1).

    p_d is the color multiplicity of value d; unbounded alphabets expand
    to 1s from their threshold on. At least one coefficient must be
    nonzero within ``length``.
    """
    if length < 1:
        raise DomainError(f"coefficient vector length must be >= 1, got {length}")
    coeffs = [alphabet.multiplicity(d) for d in range(1, length + 1)]
    if not any(coeffs):
        raise DomainError(f"no part of {alphabet} fits within length {length}")
    return coeffs


def _extend(terms: list[int], alphabet: PartAlphabet, target_len: int):
    if alphabet.is_unbounded:
        k = alphabet.at_least_threshold
        # terms[m] is a_{m+1}; the next term needs sum(terms[0 .. m-k]),
        # maintained as a running total.
        cum = sum(terms[0 : max(0, len(terms) - k)])
        while len(terms) < target_len:
            m = len(terms)
            if m - k >= 0:
                cum += terms[m - k]
            terms.append(cum)
    else:
        parts = alphabet.parts
        while len(terms) < target_len:
            m = len(terms)
            new = 0
            for value, q in parts:
                if value > m:
                    break
                new += q * terms[m - value]
            terms.append(new)


def sequence_prefix(alphabet: PartAlphabet, n: int) -> list[int]:
    """The first n+1 terms a_1..a_{n+1}; a_{m+1} counts compositions of m."""
    if n < 0:
        raise DomainError(f"prefix length must be >= 0, got {n}")
    with _cache_lock:
        terms = _prefix_cache.setdefault(alphabet, [1])
        if len(terms) < n + 1:
            _extend(terms, alphabet, n + 1)
        return terms[: n + 1]


def count_compositions(n: int, alphabet: PartAlphabet) -> int:
    """c(n, alphabet); c(0) = 1 for the empty composition."""
    if n < 0:
        raise DomainError(f"target must be >= 0, got {n}")
    return sequence_prefix(alphabet, n)[n]
