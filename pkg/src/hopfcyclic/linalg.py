"""
Exact sparse linear algebra over any of the coefficient fields.

Vectors are dicts ``index -> nonzero scalar``.  Matrices keep their
entries column-wise, since every differential is built by applying an
operator to one basis element (one column) at a time.
"""

from dataclasses import dataclass, field

from gmpy2 import mpq


class NotAComplex(ValueError):
    """Raised when outgoing * incoming != 0; carries a witness column."""

    def __init__(self, column, residual):
        super().__init__("composite is nonzero on column %d: %r"
                         % (column, residual))
        self.column = column
        self.residual = residual


class SparseMatrix:
    """
    nrows x ncols matrix with columns stored as dicts row -> value.
    Zero entries are never stored.
    """

    __slots__ = ("nrows", "ncols", "cols")

    def __init__(self, nrows, ncols, cols=None):
        self.nrows = nrows
        self.ncols = ncols
        self.cols = [dict() for _ in range(ncols)]
        if cols:
            for j, col in (cols.items() if isinstance(cols, dict)
                           else enumerate(cols)):
                self.cols[j] = {i: v for i, v in col.items() if v}

    @classmethod
    def from_entries(cls, nrows, ncols, entries):
        m = cls(nrows, ncols)
        for (i, j), v in entries.items():
            if not (0 <= i < nrows and 0 <= j < ncols):
                raise IndexError((i, j))
            if v:
                m.cols[j][i] = v
        return m

    @classmethod
    def from_rows(cls, rows, ncols=None):
        nrows = len(rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        m = cls(nrows, ncols)
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                if v:
                    m.cols[j][i] = v
        return m

    @classmethod
    def identity(cls, n, one=1):
        return cls(n, n, [{i: one} for i in range(n)])

    @classmethod
    def zero(cls, nrows, ncols):
        return cls(nrows, ncols)

    def entries(self):
        return {(i, j): v for j, col in enumerate(self.cols)
                for i, v in col.items()}

    def nnz(self):
        return sum(len(c) for c in self.cols)

    def rows(self):
        rows = [dict() for _ in range(self.nrows)]
        for j, col in enumerate(self.cols):
            for i, v in col.items():
                rows[i][j] = v
        return rows

    def transpose(self):
        return SparseMatrix(self.ncols, self.nrows, self.rows())

    def apply(self, vec):
        out = {}
        for j, c in vec.items():
            for i, v in self.cols[j].items():
                out[i] = out.get(i, 0) + c * v
        return {i: v for i, v in out.items() if v}

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch %s @ %s"
                             % (self.shape, other.shape))
        return SparseMatrix(self.nrows, other.ncols,
                            [self.apply(c) for c in other.cols])

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        cols = []
        for a, b in zip(self.cols, other.cols):
            c = dict(a)
            for i, v in b.items():
                c[i] = c.get(i, 0) + v
            cols.append(c)
        return SparseMatrix(self.nrows, self.ncols, cols)

    def __neg__(self):
        return SparseMatrix(self.nrows, self.ncols,
                            [{i: -v for i, v in c.items()} for c in self.cols])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return SparseMatrix(self.nrows, self.ncols,
                            [{i: c * v for i, v in col.items()}
                             for col in self.cols])

    def is_zero(self):
        return not any(self.cols)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def permuted(self, row_perm, col_perm):
        """Entry (i, j) moves to (row_perm[i], col_perm[j])."""
        cols = [None] * self.ncols
        for j, col in enumerate(self.cols):
            cols[col_perm[j]] = {row_perm[i]: v for i, v in col.items()}
        return SparseMatrix(self.nrows, self.ncols, cols)

    def dense(self, zero=0):
        out = [[zero] * self.ncols for _ in range(self.nrows)]
        for j, col in enumerate(self.cols):
            for i, v in col.items():
                out[i][j] = v
        return out

    def __eq__(self, other):
        return (isinstance(other, SparseMatrix) and self.shape == other.shape
                and self.cols == other.cols)

    def __repr__(self):
        return "SparseMatrix(%d x %d, nnz=%d)" % (self.nrows, self.ncols,
                                                  self.nnz())


def block_matrix(row_dims, col_dims, blocks):
    """Assemble {(bi, bj): SparseMatrix} into one matrix."""
    roff = [0]
    for d in row_dims:
        roff.append(roff[-1] + d)
    coff = [0]
    for d in col_dims:
        coff.append(coff[-1] + d)
    out = SparseMatrix(roff[-1], coff[-1])
    for (bi, bj), m in blocks.items():
        if m.shape != (row_dims[bi], col_dims[bj]):
            raise ValueError("block (%d, %d) has shape %s, expected %s"
                             % (bi, bj, m.shape, (row_dims[bi], col_dims[bj])))
        for j, col in enumerate(m.cols):
            target = out.cols[coff[bj] + j]
            for i, v in col.items():
                k = roff[bi] + i
                s = target.get(k, 0) + v
                if s:
                    target[k] = s
                else:
                    target.pop(k, None)
    return out


# ---------------------------------------------------------------------------
# echelon forms on dict vectors

def _axpy(row, c, piv):
    """row -= c * piv, in place."""
    for j, v in piv.items():
        s = row.get(j, 0) - c * v
        if s:
            row[j] = s
        else:
            row.pop(j, None)


class Echelon:
    """
    Incremental row echelon basis.  ``pivots`` maps a pivot index to a row
    whose smallest index is the pivot and whose pivot entry is 1.
    """

    def __init__(self):
        self.pivots = {}

    def reduce(self, vec):
        """Reduce a copy of vec until its leading index is not a pivot."""
        row = dict(vec)
        piv = self.pivots
        while row:
            j = min(row)
            p = piv.get(j)
            if p is None:
                break
            _axpy(row, row[j], p)
        return row

    def add(self, vec):
        """Insert vec; return the new pivot index or None if dependent."""
        row = self.reduce(vec)
        if not row:
            return None
        j = min(row)
        inv = _inv(row[j])
        self.pivots[j] = {k: v * inv for k, v in row.items()}
        return j

    @property
    def rank(self):
        return len(self.pivots)

    def rref(self):
        """Fully reduced rows keyed by pivot."""
        keys = sorted(self.pivots)
        rows = {k: dict(self.pivots[k]) for k in keys}
        for k in reversed(keys):
            pk = rows[k]
            for k2 in keys:
                if k2 >= k:
                    break
                r = rows[k2]
                c = r.get(k)
                if c:
                    _axpy(r, c, pk)
        return rows


def _inv(x):
    if hasattr(x, "inverse"):
        return x.inverse()
    return mpq(1) / x


def row_echelon(m):
    """Echelon of the row space of m (rows are dicts col -> value)."""
    ech = Echelon()
    rows = [r for r in m.rows() if r]
    rows.sort(key=len)
    for r in rows:
        ech.add(r)
    return ech


def rank(m):
    if m.nrows == 0 or m.ncols == 0:
        return 0
    # eliminate along the smaller dimension
    if m.nrows <= m.ncols:
        return row_echelon(m).rank
    ech = Echelon()
    for c in sorted((c for c in m.cols if c), key=len):
        ech.add(c)
    return ech.rank


def nullspace(m):
    """
    Basis of {v : m v = 0}, one vector per free column; the vector for free
    column f has entry 1 at f.  Deterministic for a given matrix.
    """
    rows = row_echelon(m).rref()
    pivcols = set(rows)
    basis = []
    for f in range(m.ncols):
        if f in pivcols:
            continue
        v = {f: 1}
        for p, r in rows.items():
            c = r.get(f)
            if c:
                v[p] = -c
        basis.append(v)
    return basis


def rank_nullspace(m):
    ns = nullspace(m)
    return m.ncols - len(ns), ns


def normalize_leading(vec):
    """Scale so the entry at the smallest index is 1."""
    if not vec:
        return vec
    c = _inv(vec[min(vec)])
    return {k: v * c for k, v in vec.items()}


@dataclass
class HomologyResult:
    dimension: int
    representatives: list = field(default_factory=list)
    kernel_dim: int = 0
    image_rank: int = 0


def homology_of_pair(incoming, outgoing, check=True, representatives=True):
    """
    Homology at the middle space of  . --incoming--> C --outgoing--> .
    incoming has nrows = dim C, outgoing has ncols = dim C.
    """
    if incoming.nrows != outgoing.ncols:
        raise ValueError("incompatible dimensions %s, %s"
                         % (incoming.shape, outgoing.shape))
    if check:
        for j, col in enumerate(incoming.cols):
            if col:
                r = outgoing.apply(col)
                if r:
                    raise NotAComplex(j, r)
    rk_in = rank(incoming)
    if not representatives:
        rk_out = rank(outgoing)
        kdim = outgoing.ncols - rk_out
        return HomologyResult(kdim - rk_in, [], kdim, rk_in)
    kernel = nullspace(outgoing)
    dim = len(kernel) - rk_in
    reps = []
    if dim:
        ech = Echelon()
        for c in incoming.cols:
            if c:
                ech.add(c)
        for v in kernel:
            if ech.add(v) is not None:
                reps.append(normalize_leading(v))
                if len(reps) == dim:
                    break
    return HomologyResult(dim, reps, len(kernel), rk_in)
