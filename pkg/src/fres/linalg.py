"""Exact sparse linear algebra over the rationals.

Rank and homology computations for the boundary matrices of all complexes in
the package.  Elimination is deterministic: the pivot is always the first row
with a nonzero entry in the leftmost unresolved column, rows and columns taken
in the declared key order.
"""

from fractions import Fraction

from .errors import CompositeNotZero


class SparseMatrix:
    """Matrix indexed by explicit row/column key lists, entries Fraction."""

    def __init__(self, row_keys, col_keys, entries=None):
        self.row_keys = list(row_keys)
        self.col_keys = list(col_keys)
        self.row_index = {k: i for i, k in enumerate(self.row_keys)}
        self.col_index = {k: j for j, k in enumerate(self.col_keys)}
        self.entries = {}
        if entries:
            for (r, c), v in entries.items():
                self.set(r, c, v)

    @property
    def nrows(self):
        return len(self.row_keys)

    @property
    def ncols(self):
        return len(self.col_keys)

    def set(self, row_key, col_key, value):
        i = self.row_index[row_key]
        j = self.col_index[col_key]
        value = Fraction(value)
        if value == 0:
            self.entries.pop((i, j), None)
        else:
            self.entries[(i, j)] = value

    def get(self, row_key, col_key):
        return self.entries.get((self.row_index[row_key], self.col_index[col_key]),
                                Fraction(0))

    def to_rows(self):
        rows = [[Fraction(0)] * self.ncols for _ in range(self.nrows)]
        for (i, j), v in self.entries.items():
            rows[i][j] = v
        return rows

    def transpose(self):
        out = SparseMatrix(self.col_keys, self.row_keys)
        out.entries = {(j, i): v for (i, j), v in self.entries.items()}
        return out

    def compose(self, other):
        """(self o other): column keys index the domain, rows the codomain."""
        if self.col_keys != other.row_keys:
            raise ValueError("matrix shapes do not chain")
        out = SparseMatrix(self.row_keys, other.col_keys)
        by_mid = {}
        for (i, j), v in self.entries.items():
            by_mid.setdefault(j, []).append((i, v))
        for (mid, k), ov in other.entries.items():
            for i, v in by_mid.get(mid, ()):
                key = (i, k)
                cur = out.entries.get(key, Fraction(0)) + v * ov
                if cur == 0:
                    out.entries.pop(key, None)
                else:
                    out.entries[key] = cur
        return out

    def is_zero(self):
        return not self.entries


def _echelon_rank(rows, ncols):
    """Row-reduce in place, returning the rank (deterministic pivoting)."""
    nrows = len(rows)
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, nrows):
            if rows[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        if pivot != rank:
            rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pv = rows[rank][col]
        prow = rows[rank]
        for r in range(rank + 1, nrows):
            f = rows[r][col]
            if f != 0:
                f = f / pv
                rr = rows[r]
                for c in range(col, ncols):
                    rr[c] -= f * prow[c]
        rank += 1
        if rank == nrows:
            break
    return rank


def rank(matrix):
    """Rank over Q by exact Gaussian elimination."""
    if matrix.nrows == 0 or matrix.ncols == 0:
        return 0
    return _echelon_rank(matrix.to_rows(), matrix.ncols)


def homology_dimension(d_in, d_out):
    """dim ker(d_out) - rank(d_in) for maps X --d_in--> Y --d_out--> Z.

    Both matrices use the column-space-is-domain convention, so d_in's row
    keys must equal d_out's column keys.  Raises CompositeNotZero when
    d_out o d_in != 0.
    """
    if d_in.row_keys != d_out.col_keys:
        raise ValueError("middle spaces do not match")
    if not d_out.compose(d_in).is_zero():
        raise CompositeNotZero("d_out o d_in is nonzero")
    middle = len(d_out.col_keys)
    return middle - rank(d_out) - rank(d_in)


def matrix_from_map(images, domain_keys, codomain_keys):
    """Matrix of a linear map given by images[k] = LinComb, columns = domain."""
    m = SparseMatrix(codomain_keys, domain_keys)
    for dk in domain_keys:
        img = images.get(dk)
        if img is None:
            continue
        for ck, coeff in img:
            m.set(ck, dk, coeff)
    return m


def inclusion_exclusion_complex(k):
    """Boundary matrices of the complex on subsets of {1..k}.

    Returns {q: SparseMatrix} where the degree-q matrix maps the span of
    q-element subsets to (q-1)-element subsets by the usual alternating
    omission; degree 0 maps the empty set span to 0 (empty matrix).
    """
    from itertools import combinations
    subsets = {q: [tuple(s) for s in combinations(range(1, k + 1), q)]
               for q in range(k + 1)}
    mats = {}
    for q in range(1, k + 1):
        m = SparseMatrix(subsets[q - 1], subsets[q])
        for s in subsets[q]:
            for j in range(q):
                omitted = s[:j] + s[j + 1:]
                m.set(omitted, s, Fraction(-1) ** j)
        mats[q] = m
    return subsets, mats
