"""Dense exact linear algebra over GF(2).

Vectors and matrices are numpy arrays with 0/1 entries. Rows are packed
into Python ints internally, so rank and solve are exact and fast enough
for exhaustive sweeps. Index 0 of a vector maps to the leftmost character
in the text format.
"""

from __future__ import annotations

import numpy as np


class NoSolutionError(ValueError):
    """The right-hand side is outside the column space."""


class NotUniqueError(ValueError):
    """The system is consistent but the matrix is singular."""


def as_bits(a, ndim=None) -> np.ndarray:
    """Coerce to a uint8 array of 0/1 entries, validating the values."""
    arr = np.asarray(a)
    if arr.dtype == bool:
        arr = arr.astype(np.uint8)
    if not np.issubdtype(arr.dtype, np.integer):
        raise ValueError("entries must be integers 0 or 1")
    if arr.size and (arr.min() < 0 or arr.max() > 1):
        raise ValueError("entries must be 0 or 1")
    if ndim is not None and arr.ndim != ndim:
        raise ValueError(f"expected a {ndim}-dimensional array, got shape {arr.shape}")
    return arr.astype(np.uint8, copy=False)


def _pack_rows(m: np.ndarray) -> list[int]:
    # index 0 becomes the most significant bit of each packed int
    rows, cols = m.shape
    packed = np.packbits(m, axis=1)
    pad = packed.shape[1] * 8 - cols
    return [int.from_bytes(row.tobytes(), "big") >> pad for row in packed]


def _pack_vector(v: np.ndarray) -> int:
    return _pack_rows(v.reshape(1, -1))[0]


def _unpack(value: int, n: int) -> np.ndarray:
    out = np.zeros(n, dtype=np.uint8)
    for i in range(n):
        out[i] = (value >> (n - 1 - i)) & 1
    return out


def _rank_ints(rows) -> int:
    pivots: dict[int, int] = {}
    for r in rows:
        while r:
            p = r.bit_length()
            other = pivots.get(p)
            if other is None:
                pivots[p] = r
                break
            r ^= other
    return len(pivots)


def _jordan_reduce(r: int, pivots: dict[int, int]) -> int:
    # pivot rows carry no other pivot bits, so one pass suffices
    for p, v in pivots.items():
        if (r >> (p - 1)) & 1:
            r ^= v
    return r


def _jordan_insert(pivots: dict[int, int], r: int) -> None:
    p = r.bit_length()
    for q in pivots:
        if (pivots[q] >> (p - 1)) & 1:
            pivots[q] ^= r
    pivots[p] = r


def rank(m) -> int:
    """GF(2) row rank (equals column rank)."""
    arr = as_bits(m, ndim=2)
    return _rank_ints(_pack_rows(arr))


def solve(a, b) -> np.ndarray:
    """Solve the square system a @ x = b over GF(2).

    Raises NoSolutionError when b is outside the column space and
    NotUniqueError when the matrix is singular but the system is
    consistent. Callers that expect an invertible matrix should treat
    either signal as a bug upstream.
    """
    aa = as_bits(a, ndim=2)
    bb = as_bits(b, ndim=1)
    n = aa.shape[0]
    if aa.shape != (n, n):
        raise ValueError("matrix must be square")
    if bb.shape[0] != n:
        raise ValueError("right-hand side length must match the matrix")
    rows = _pack_rows(aa)
    pivots: dict[int, int] = {}
    for i in range(n):
        r = _jordan_reduce((rows[i] << 1) | int(bb[i]), pivots)
        if r == 1:
            raise NoSolutionError("right-hand side is outside the column space")
        if r:
            _jordan_insert(pivots, r)
    if len(pivots) < n:
        raise NotUniqueError("matrix is singular; solution is not unique")
    x = np.zeros(n, dtype=np.uint8)
    for p, v in pivots.items():
        x[n - p + 1] = v & 1
    return x


def invert(a) -> np.ndarray:
    """Inverse of a square GF(2) matrix; raises NotUniqueError when singular."""
    aa = as_bits(a, ndim=2)
    n = aa.shape[0]
    if aa.shape != (n, n):
        raise ValueError("matrix must be square")
    rows = _pack_rows(aa)
    pivots: dict[int, int] = {}
    for i in range(n):
        r = _jordan_reduce((rows[i] << n) | (1 << (n - 1 - i)), pivots)
        if r.bit_length() <= n:
            raise NotUniqueError("matrix is singular")
        _jordan_insert(pivots, r)
    inv = np.zeros((n, n), dtype=np.uint8)
    mask = (1 << n) - 1
    for p, v in pivots.items():
        inv[2 * n - p] = _unpack(v & mask, n)
    return inv


def span_coefficients(v, basis) -> np.ndarray | None:
    """Coefficients expressing v over the basis list, or None if outside the span."""
    vv = as_bits(v, ndim=1)
    vecs = [as_bits(b, ndim=1) for b in basis]
    if any(b.shape != vv.shape for b in vecs):
        raise ValueError("all vectors must have the same length")
    k = len(vecs)
    pivots: dict[int, tuple[int, int]] = {}
    for i, b in enumerate(vecs):
        vec, coeff = _pack_vector(b), 1 << (k - 1 - i)
        while vec:
            p = vec.bit_length()
            if p in pivots:
                pv, pc = pivots[p]
                vec ^= pv
                coeff ^= pc
            else:
                pivots[p] = (vec, coeff)
                break
    t, tc = _pack_vector(vv), 0
    while t:
        p = t.bit_length()
        if p not in pivots:
            return None
        pv, pc = pivots[p]
        t ^= pv
        tc ^= pc
    return _unpack(tc, k)


def in_span(v, basis) -> bool:
    """True iff v is a GF(2) combination of the basis vectors."""
    return span_coefficients(v, basis) is not None


def vec_mat(x, m) -> np.ndarray:
    """Row vector times matrix over GF(2): xor of the rows selected by x."""
    xx = as_bits(x, ndim=1)
    mm = as_bits(m, ndim=2)
    if xx.shape[0] != mm.shape[0]:
        raise ValueError("vector length must match the row count")
    picked = mm[xx != 0]
    if picked.shape[0] == 0:
        return np.zeros(mm.shape[1], dtype=np.uint8)
    return np.bitwise_xor.reduce(picked, axis=0)


def mat_vec(m, x) -> np.ndarray:
    """Matrix times column vector over GF(2)."""
    return vec_mat(x, as_bits(m, ndim=2).T)


def format_bits(v) -> str:
    return "".join("1" if b else "0" for b in as_bits(v, ndim=1))


def parse_bits(s: str) -> np.ndarray:
    s = s.strip()
    if not s or any(ch not in "01" for ch in s):
        raise ValueError("bit string must be a non-empty run of '0'/'1'")
    return np.frombuffer(s.encode("ascii"), dtype=np.uint8) - ord("0")


def format_matrix(m) -> str:
    """Text form: one row per line, '0'/'1' characters, no separators."""
    arr = as_bits(m, ndim=2)
    return "".join(format_bits(row) + "\n" for row in arr)


def parse_matrix(text: str) -> np.ndarray:
    """Parse the text form; a blank line terminates the matrix."""
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            if rows:
                break
            continue
        rows.append(parse_bits(line))
    if not rows:
        raise ValueError("no matrix rows found")
    if len({r.shape[0] for r in rows}) != 1:
        raise ValueError("rows must all have the same length")
    return np.vstack(rows)
