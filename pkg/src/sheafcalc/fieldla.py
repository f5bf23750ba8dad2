"""Dense linear algebra over a prime field F_p (default p = 2).

All cohomology and rank computations reduce to elimination here.  Matrices
are small (a few hundred rows at most), so a dense representation with a
bit-packed fast path for p = 2 is plenty.
"""

from __future__ import annotations


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class FieldPrime:
    """The coefficient field F_p."""

    def __init__(self, p: int = 2):
        p = int(p)
        if not is_prime(p):
            raise ValueError("field order must be prime, got %d" % p)
        self.p = p

    def inv(self, x: int) -> int:
        x %= self.p
        if x == 0:
            raise ZeroDivisionError("inverse of 0 in F_%d" % self.p)
        return pow(x, self.p - 2, self.p)

    def __eq__(self, other):
        return isinstance(other, FieldPrime) and other.p == self.p

    def __repr__(self):
        return "FieldPrime(%d)" % self.p


class FpMatrix:
    """Immutable dense matrix over F_p; rows of ints reduced mod p."""

    __slots__ = ("rows", "cols", "p", "data")

    def __init__(self, rows, cols, entries=None, p=2):
        self.rows = int(rows)
        self.cols = int(cols)
        self.p = int(p)
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        data = [[0] * self.cols for _ in range(self.rows)]
        if entries is not None:
            if isinstance(entries, dict):
                for (i, j), v in entries.items():
                    if not (0 <= i < self.rows and 0 <= j < self.cols):
                        raise IndexError("entry (%d, %d) out of range" % (i, j))
                    data[i][j] = v % self.p
            else:
                if len(entries) != self.rows:
                    raise ValueError("row count mismatch")
                for i, row in enumerate(entries):
                    if len(row) != self.cols:
                        raise ValueError("column count mismatch in row %d" % i)
                    data[i] = [v % self.p for v in row]
        self.data = data

    # -- constructors -------------------------------------------------
    @staticmethod
    def zeros(rows, cols, p=2):
        return FpMatrix(rows, cols, None, p)

    @staticmethod
    def identity(n, p=2):
        m = FpMatrix(n, n, None, p)
        for i in range(n):
            m.data[i][i] = 1
        return m

    @staticmethod
    def from_rows(rows, p=2):
        r = len(rows)
        c = len(rows[0]) if rows else 0
        return FpMatrix(r, c, rows, p)

    @staticmethod
    def column(vec, p=2):
        return FpMatrix(len(vec), 1, [[v] for v in vec], p)

    # -- basics -------------------------------------------------------
    def entry(self, i, j):
        return self.data[i][j]

    def to_lists(self):
        return [row[:] for row in self.data]

    def transpose(self):
        return FpMatrix(self.cols, self.rows,
                        [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)],
                        self.p)

    def is_zero(self):
        return all(v == 0 for row in self.data for v in row)

    def __eq__(self, other):
        return (isinstance(other, FpMatrix) and other.p == self.p
                and other.rows == self.rows and other.cols == self.cols
                and other.data == self.data)

    def __repr__(self):
        return "FpMatrix(%dx%d mod %d)" % (self.rows, self.cols, self.p)

    def mul(self, other: "FpMatrix") -> "FpMatrix":
        if self.cols != other.rows or self.p != other.p:
            raise ValueError("shape or field mismatch in matrix product")
        p = self.p
        ot = other.transpose().data
        out = [[sum(a * b for a, b in zip(row, col)) % p for col in ot] for row in self.data]
        return FpMatrix(self.rows, other.cols, out, p)

    def matvec(self, vec):
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        p = self.p
        return [sum(a * b for a, b in zip(row, vec)) % p for row in self.data]

    # -- elimination core ----------------------------------------------
    def _rref(self):
        """Reduced row echelon form; returns (pivot column list, row lists)."""
        if self.p == 2:
            packed = []
            for row in self.data:
                acc = 0
                for j, v in enumerate(row):
                    if v:
                        acc |= 1 << j
                packed.append(acc)
            pivots = []
            r = 0
            for c in range(self.cols):
                bit = 1 << c
                pos = next((i for i in range(r, len(packed)) if packed[i] & bit), None)
                if pos is None:
                    continue
                packed[r], packed[pos] = packed[pos], packed[r]
                for i in range(len(packed)):
                    if i != r and packed[i] & bit:
                        packed[i] ^= packed[r]
                pivots.append(c)
                r += 1
                if r == len(packed):
                    break
            rows = [[(w >> j) & 1 for j in range(self.cols)] for w in packed]
            return pivots, rows
        p = self.p
        m = [row[:] for row in self.data]
        pivots = []
        r = 0
        for c in range(self.cols):
            pos = next((i for i in range(r, len(m)) if m[i][c] % p != 0), None)
            if pos is None:
                continue
            m[r], m[pos] = m[pos], m[r]
            inv = pow(m[r][c], p - 2, p)
            m[r] = [(v * inv) % p for v in m[r]]
            for i in range(len(m)):
                if i != r and m[i][c] % p != 0:
                    f = m[i][c] % p
                    m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == len(m):
                break
        return pivots, m

    def rank(self) -> int:
        return len(self._rref()[0])

    def kernel_basis(self):
        """Basis of the right kernel, as a list of length-cols tuples."""
        pivots, rref = self._rref()
        pivot_set = set(pivots)
        free = [c for c in range(self.cols) if c not in pivot_set]
        basis = []
        for f in free:
            vec = [0] * self.cols
            vec[f] = 1
            for r, c in enumerate(pivots):
                vec[c] = (-rref[r][f]) % self.p
            basis.append(tuple(vec))
        return basis

    def cokernel_dim(self) -> int:
        return self.rows - self.rank()

    def restrict(self, row_subset, col_subset) -> "FpMatrix":
        """Submatrix on the given index subsets (dropped coordinates zeroed out)."""
        rows = list(row_subset)
        cols = list(col_subset)
        for i in rows:
            if not (0 <= i < self.rows):
                raise IndexError("row index %d out of range" % i)
        for j in cols:
            if not (0 <= j < self.cols):
                raise IndexError("column index %d out of range" % j)
        return FpMatrix(len(rows), len(cols),
                        [[self.data[i][j] for j in cols] for i in rows], self.p)

    def solve(self, rhs):
        """One solution of self @ x = rhs (free variables zero), or None."""
        sols = self.solve_matrix(FpMatrix.column(rhs, self.p))
        if sols is None:
            return None
        return [sols.data[i][0] for i in range(self.cols)]

    def solve_matrix(self, rhs: "FpMatrix"):
        """Solve self @ X = rhs columnwise; None if any column is inconsistent."""
        if rhs.rows != self.rows or rhs.p != self.p:
            raise ValueError("shape or field mismatch in solve")
        aug = FpMatrix(self.rows, self.cols + rhs.cols,
                       [self.data[i] + rhs.data[i] for i in range(self.rows)], self.p)
        pivots, rref = aug._rref()
        if any(c >= self.cols for c in pivots):
            return None
        out = [[0] * rhs.cols for _ in range(self.cols)]
        for r, c in enumerate(pivots):
            for k in range(rhs.cols):
                out[c][k] = rref[r][self.cols + k]
        return FpMatrix(self.cols, rhs.cols, out, self.p)

    def inverse(self) -> "FpMatrix":
        if self.rows != self.cols:
            raise ValueError("only square matrices have inverses")
        inv = self.solve_matrix(FpMatrix.identity(self.rows, self.p))
        if inv is None or self.rank() != self.rows:
            raise ValueError("matrix is singular over F_%d" % self.p)
        return inv

    @staticmethod
    def from_columns(cols, nrows, p=2):
        m = FpMatrix(nrows, len(cols), None, p)
        for j, col in enumerate(cols):
            if len(col) != nrows:
                raise ValueError("column length mismatch")
            for i, v in enumerate(col):
                m.data[i][j] = v % p
        return m


def rank(m: FpMatrix) -> int:
    return m.rank()


def kernel_basis(m: FpMatrix):
    return m.kernel_basis()


def cokernel_dim(m: FpMatrix) -> int:
    return m.cokernel_dim()


def restrict_map(m: FpMatrix, row_subset, col_subset) -> FpMatrix:
    return m.restrict(row_subset, col_subset)
