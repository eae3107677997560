"""Row reduction over GF(p) on numpy integer arrays.

Every matrix here holds residues in [0, p); p stays small, so int64 products
never overflow.
"""

import numpy as np


def as_matrix(rows, width):
    matrix = np.array(rows, dtype=np.int64)
    if matrix.size == 0:
        return np.zeros((0, width), dtype=np.int64)
    return matrix.reshape(-1, width)


def rref_mod_p(matrix, p):
    """Reduced row echelon form; zero rows are dropped."""
    m = np.array(matrix, dtype=np.int64) % p
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nonzero = np.nonzero(m[r:, c])[0]
        if nonzero.size == 0:
            continue
        k = r + int(nonzero[0])
        if k != r:
            m[[r, k]] = m[[k, r]]
        m[r] = (m[r] * pow(int(m[r, c]), -1, p)) % p
        others = np.nonzero(m[:, c])[0]
        others = others[others != r]
        if others.size:
            m[others] = (m[others] - np.outer(m[others, c], m[r])) % p
        pivots.append(c)
        r += 1
    return m[:r], tuple(pivots)


def rank_mod_p(matrix, p):
    return len(rref_mod_p(matrix, p)[1])


def solve_mod_p(a, b, p):
    """One solution x of a @ x = b (mod p), or None when inconsistent."""
    a = np.array(a, dtype=np.int64)
    rows, cols = a.shape
    augmented = np.hstack([a, np.array(b, dtype=np.int64).reshape(rows, 1)])
    reduced, pivots = rref_mod_p(augmented, p)
    if pivots and pivots[-1] == cols:
        return None
    x = np.zeros(cols, dtype=np.int64)
    for i, c in enumerate(pivots):
        x[c] = reduced[i, cols]
    return x


def nullspace_mod_p(a, p):
    """Basis (as rows) of {x : a @ x = 0 (mod p)}."""
    a = np.array(a, dtype=np.int64)
    cols = a.shape[1]
    reduced, pivots = rref_mod_p(a, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = np.zeros(cols, dtype=np.int64)
        v[f] = 1
        for i, c in enumerate(pivots):
            v[c] = (-reduced[i, f]) % p
        basis.append(v)
    return as_matrix(basis, cols)


def span_key(rows, width, p):
    """Canonical hashable key of the row space."""
    reduced, _ = rref_mod_p(as_matrix(rows, width), p)
    return tuple(tuple(int(v) for v in row) for row in reduced)


def in_span(rows, vector, p):
    rows = as_matrix(rows, len(vector))
    if rows.shape[0] == 0:
        return not np.any(np.array(vector) % p)
    return solve_mod_p(rows.T, vector, p) is not None
