"""Packed GF(2) vectors, matrices and coordinate permutations.

Storage convention, used by every serialization in the toolkit: bit i of a
vector is coordinate i (0-based), LSB-first inside the backing integer, so
byte j carries coordinates 8j..8j+7 with coordinate 8j in the least
significant bit.  Matrices store one packed integer per row.

All instances are immutable after construction; operations return new
objects, so sharing across threads is safe.
"""

from __future__ import annotations

from ..errors import DimensionMismatch, ParameterInvalid
from ..rng import Rng


class BitVector:
    """Length-n vector over GF(2), packed into one Python integer."""

    __slots__ = ("n", "bits")

    def __init__(self, n: int, bits: int = 0):
        if n < 0:
            raise ParameterInvalid(f"negative length {n}")
        if bits < 0 or bits >> n:
            raise ParameterInvalid("bits do not fit the stated length")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, *_):
        raise AttributeError("BitVector is immutable")

    @classmethod
    def from_indices(cls, n: int, indices) -> "BitVector":
        bits = 0
        for i in indices:
            if not 0 <= i < n:
                raise DimensionMismatch(f"index {i} outside [0, {n})")
            bits |= 1 << i
        return cls(n, bits)

    @classmethod
    def from_bytes(cls, n: int, data: bytes) -> "BitVector":
        if len(data) != (n + 7) // 8:
            raise DimensionMismatch("byte length does not match bit length")
        bits = int.from_bytes(data, "little")
        if bits >> n:
            raise ParameterInvalid("nonzero padding bits")
        return cls(n, bits)

    def to_bytes(self) -> bytes:
        return self.bits.to_bytes((self.n + 7) // 8, "little")

    def weight(self) -> int:
        return self.bits.bit_count()

    def get(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise DimensionMismatch(f"index {i} outside [0, {self.n})")
        return (self.bits >> i) & 1

    def flip(self, i: int) -> "BitVector":
        if not 0 <= i < self.n:
            raise DimensionMismatch(f"index {i} outside [0, {self.n})")
        return BitVector(self.n, self.bits ^ (1 << i))

    def support(self) -> list[int]:
        """Indices of the nonzero coordinates, ascending."""
        out, b = [], self.bits
        while b:
            low = b & -b
            out.append(low.bit_length() - 1)
            b ^= low
        return out

    def concat(self, other: "BitVector") -> "BitVector":
        return BitVector(self.n + other.n, self.bits | (other.bits << self.n))

    def split(self, sizes) -> list["BitVector"]:
        """Split into consecutive chunks of the given bit sizes."""
        if sum(sizes) != self.n:
            raise DimensionMismatch("chunk sizes do not sum to length")
        out, off = [], 0
        for sz in sizes:
            out.append(BitVector(sz, (self.bits >> off) & ((1 << sz) - 1)))
            off += sz
        return out

    def permute(self, perm: "Permutation") -> "BitVector":
        """Move coordinate i to coordinate perm.image[i]."""
        if perm.size != self.n:
            raise DimensionMismatch("permutation size mismatch")
        bits, img = 0, perm.image
        b = self.bits
        while b:
            low = b & -b
            bits |= 1 << img[low.bit_length() - 1]
            b ^= low
        return BitVector(self.n, bits)

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.n != other.n:
            raise DimensionMismatch("xor of different lengths")
        return BitVector(self.n, self.bits ^ other.bits)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BitVector)
            and self.n == other.n
            and self.bits == other.bits
        )

    def __hash__(self):
        return hash((self.n, self.bits))

    def __len__(self):
        return self.n

    def is_zero(self) -> bool:
        return self.bits == 0

    def __repr__(self):
        return f"BitVector({self.n}, 0b{self.bits:0{max(self.n, 1)}b})"


class Permutation:
    """Bijection on {0..n-1}; image[i] is where coordinate i goes."""

    __slots__ = ("image",)

    def __init__(self, image):
        img = tuple(image)
        if sorted(img) != list(range(len(img))):
            raise ParameterInvalid("not a bijection")
        object.__setattr__(self, "image", img)

    def __setattr__(self, *_):
        raise AttributeError("Permutation is immutable")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(n))

    @property
    def size(self) -> int:
        return len(self.image)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.image)
        for i, j in enumerate(self.image):
            inv[j] = i
        return Permutation(inv)

    def compose(self, other: "Permutation") -> "Permutation":
        """Apply self first, then other."""
        if self.size != other.size:
            raise DimensionMismatch("composition size mismatch")
        return Permutation(other.image[j] for j in self.image)

    def apply_seq(self, seq: list) -> list:
        """Reorder a sequence: element i lands at position image[i]."""
        if len(seq) != self.size:
            raise DimensionMismatch("sequence length mismatch")
        out = [None] * self.size
        for i, item in enumerate(seq):
            out[self.image[i]] = item
        return out

    def to_bytes(self) -> bytes:
        """2 bytes per entry, little-endian (canonical hash/serial form)."""
        return b"".join(j.to_bytes(2, "little") for j in self.image)

    @classmethod
    def from_bytes(cls, data: bytes) -> "Permutation":
        if len(data) % 2:
            raise ParameterInvalid("odd byte length")
        return cls(
            int.from_bytes(data[i : i + 2], "little") for i in range(0, len(data), 2)
        )

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.image == other.image

    def __hash__(self):
        return hash(self.image)

    def __repr__(self):
        return f"Permutation({list(self.image)})"


class BitMatrix:
    """r x n matrix over GF(2), one packed integer per row."""

    __slots__ = ("rows", "cols", "_r")

    def __init__(self, rows: int, cols: int, row_ints):
        data = tuple(row_ints)
        if len(data) != rows:
            raise DimensionMismatch("row count mismatch")
        mask = (1 << cols) - 1
        for r in data:
            if r < 0 or r & ~mask:
                raise ParameterInvalid("row bits outside stated width")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "_r", data)

    def __setattr__(self, *_):
        raise AttributeError("BitMatrix is immutable")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols, [0] * rows)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, [1 << i for i in range(n)])

    @classmethod
    def from_rows(cls, vectors) -> "BitMatrix":
        vecs = list(vectors)
        if not vecs:
            raise ParameterInvalid("cannot infer width of an empty matrix")
        n = vecs[0].n
        return cls(len(vecs), n, [v.bits for v in vecs])

    @classmethod
    def random(cls, rows: int, cols: int, rng: Rng) -> "BitMatrix":
        return cls(rows, cols, [rng.randbits(cols) for _ in range(rows)])

    def row(self, i: int) -> BitVector:
        return BitVector(self.cols, self._r[i])

    def row_ints(self) -> tuple[int, ...]:
        return self._r

    def column_ints(self) -> list[int]:
        """Columns as packed integers (bit i = entry in row i)."""
        cols = [0] * self.cols
        for i, r in enumerate(self._r):
            while r:
                low = r & -r
                cols[low.bit_length() - 1] |= 1 << i
                r ^= low
        return cols

    def column(self, j: int) -> BitVector:
        if not 0 <= j < self.cols:
            raise DimensionMismatch("column index out of range")
        bits = 0
        for i, r in enumerate(self._r):
            bits |= ((r >> j) & 1) << i
        return BitVector(self.rows, bits)

    def mul_vec(self, v: BitVector) -> BitVector:
        """self @ v^T, i.e. the syndrome map for a parity-check matrix."""
        if v.n != self.cols:
            raise DimensionMismatch(f"vector length {v.n} != cols {self.cols}")
        bits = 0
        vb = v.bits
        for i, r in enumerate(self._r):
            bits |= ((r & vb).bit_count() & 1) << i
        return BitVector(self.rows, bits)

    def left_mul(self, v: BitVector) -> BitVector:
        """v @ self for a row vector v (XOR of the rows selected by v)."""
        if v.n != self.rows:
            raise DimensionMismatch(f"vector length {v.n} != rows {self.rows}")
        acc, b = 0, v.bits
        while b:
            low = b & -b
            acc ^= self._r[low.bit_length() - 1]
            b ^= low
        return BitVector(self.cols, acc)

    def matmul(self, other: "BitMatrix") -> "BitMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch("inner dimensions differ")
        out = []
        for r in self._r:
            acc, b = 0, r
            while b:
                low = b & -b
                acc ^= other._r[low.bit_length() - 1]
                b ^= low
            out.append(acc)
        return BitMatrix(self.rows, other.cols, out)

    def transpose(self) -> "BitMatrix":
        return BitMatrix(self.cols, self.rows, self.column_ints())

    def permute_cols(self, perm: Permutation) -> "BitMatrix":
        """Column j moves to column perm.image[j]."""
        if perm.size != self.cols:
            raise DimensionMismatch("permutation size mismatch")
        img = perm.image
        out = []
        for r in self._r:
            nr = 0
            while r:
                low = r & -r
                nr |= 1 << img[low.bit_length() - 1]
                r ^= low
            out.append(nr)
        return BitMatrix(self.rows, self.cols, out)

    def submatrix_cols(self, indices) -> "BitMatrix":
        idx = list(indices)
        out = []
        for r in self._r:
            nr = 0
            for pos, j in enumerate(idx):
                nr |= ((r >> j) & 1) << pos
            out.append(nr)
        return BitMatrix(self.rows, len(idx), out)

    def stack(self, other: "BitMatrix") -> "BitMatrix":
        if self.cols != other.cols:
            raise DimensionMismatch("column counts differ")
        return BitMatrix(self.rows + other.rows, self.cols, self._r + other._r)

    def to_bytes(self) -> bytes:
        """Row-major, each row padded to a byte boundary, LSB-first."""
        nb = (self.cols + 7) // 8
        return b"".join(r.to_bytes(nb, "little") for r in self._r)

    @classmethod
    def from_bytes(cls, rows: int, cols: int, data: bytes) -> "BitMatrix":
        nb = (cols + 7) // 8
        if len(data) != rows * nb:
            raise DimensionMismatch("byte length does not match shape")
        return cls(
            rows,
            cols,
            [int.from_bytes(data[i * nb : (i + 1) * nb], "little") for i in range(rows)],
        )

    def rank(self) -> int:
        rows = [r for r in self._r if r]
        rank = 0
        while rows:
            pivot = rows.pop()
            rank += 1
            low = pivot & -pivot
            rows = [r ^ pivot if r & low else r for r in rows]
            rows = [r for r in rows if r]
        return rank

    def inverse(self) -> "BitMatrix | None":
        """Inverse of a square matrix, or None if singular."""
        if self.rows != self.cols:
            raise DimensionMismatch("inverse of a non-square matrix")
        n = self.rows
        work = list(self._r)
        aug = [1 << i for i in range(n)]
        row_at = 0
        for col in range(n):
            sel = None
            for i in range(row_at, n):
                if (work[i] >> col) & 1:
                    sel = i
                    break
            if sel is None:
                return None
            work[row_at], work[sel] = work[sel], work[row_at]
            aug[row_at], aug[sel] = aug[sel], aug[row_at]
            for i in range(n):
                if i != row_at and (work[i] >> col) & 1:
                    work[i] ^= work[row_at]
                    aug[i] ^= aug[row_at]
            row_at += 1
        return BitMatrix(n, n, aug)

    def solve(self, s: BitVector) -> BitVector | None:
        """Any x with self @ x^T = s, or None when s is outside the column space."""
        if s.n != self.rows:
            raise DimensionMismatch(f"rhs length {s.n} != rows {self.rows}")
        work = list(self._r)
        rhs = [(s.bits >> i) & 1 for i in range(self.rows)]
        pivots = []  # (row, col) in elimination order
        row_at = 0
        for col in range(self.cols):
            sel = None
            for i in range(row_at, self.rows):
                if (work[i] >> col) & 1:
                    sel = i
                    break
            if sel is None:
                continue
            work[row_at], work[sel] = work[sel], work[row_at]
            rhs[row_at], rhs[sel] = rhs[sel], rhs[row_at]
            for i in range(self.rows):
                if i != row_at and (work[i] >> col) & 1:
                    work[i] ^= work[row_at]
                    rhs[i] ^= rhs[row_at]
            pivots.append((row_at, col))
            row_at += 1
            if row_at == self.rows:
                break
        # Non-pivot rows are zero after elimination; a set rhs there is inconsistent.
        for i in range(row_at, self.rows):
            if rhs[i]:
                return None
        bits = 0
        for r, c in pivots:
            if rhs[r]:
                bits |= 1 << c
        return BitVector(self.cols, bits)

    def null_space(self) -> "BitMatrix":
        """Basis of {x : self @ x^T = 0}, one basis vector per row.

        Returns a 0 x cols matrix when the kernel is trivial.
        """
        work = list(self._r)
        pivot_cols: list[int] = []
        row_at = 0
        for col in range(self.cols):
            sel = None
            for i in range(row_at, self.rows):
                if (work[i] >> col) & 1:
                    sel = i
                    break
            if sel is None:
                continue
            work[row_at], work[sel] = work[sel], work[row_at]
            for i in range(self.rows):
                if i != row_at and (work[i] >> col) & 1:
                    work[i] ^= work[row_at]
            pivot_cols.append(col)
            row_at += 1
        free_cols = [c for c in range(self.cols) if c not in set(pivot_cols)]
        basis = []
        for fc in free_cols:
            bits = 1 << fc
            for r, pc in enumerate(pivot_cols):
                if (work[r] >> fc) & 1:
                    bits |= 1 << pc
            basis.append(bits)
        return BitMatrix(len(basis), self.cols, basis)

    def __eq__(self, other):
        return (
            isinstance(other, BitMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self._r == other._r
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self._r))

    def __repr__(self):
        return f"BitMatrix({self.rows}x{self.cols})"


def solve_linear(h: BitMatrix, s: BitVector) -> BitVector | None:
    """Gaussian elimination: any x with h @ x^T = s, else None."""
    return h.solve(s)


def random_bitvector(n: int, rng: Rng) -> BitVector:
    return BitVector(n, rng.randbits(n))


def random_weight_vector(n: int, w: int, rng: Rng) -> BitVector:
    """Uniform vector of exact weight w."""
    if not 0 <= w <= n:
        raise ParameterInvalid(f"weight {w} outside [0, {n}]")
    return BitVector.from_indices(n, rng.sample(range(n), w))


def random_permutation(n: int, rng: Rng) -> Permutation:
    """Uniform permutation (Fisher-Yates via the stdlib shuffle)."""
    img = list(range(n))
    rng.shuffle(img)
    return Permutation(img)


def random_invertible(r: int, rng: Rng, max_tries: int = 1000) -> BitMatrix:
    """Uniform invertible r x r matrix by rejection (succeeds in ~3.5 tries)."""
    if r < 1:
        raise ParameterInvalid("size must be positive")
    for _ in range(max_tries):
        m = BitMatrix.random(r, r, rng)
        if m.inverse() is not None:
            return m
    raise ParameterInvalid("could not sample an invertible matrix")


def block_diagonal(blocks: list[BitMatrix]) -> BitMatrix:
    """Block-diagonal stack of equally-shaped blocks."""
    if not blocks:
        raise ParameterInvalid("no blocks")
    r, c = blocks[0].rows, blocks[0].cols
    rows = []
    for i, blk in enumerate(blocks):
        if blk.rows != r or blk.cols != c:
            raise DimensionMismatch("blocks must share a shape")
        rows.extend(ri << (i * c) for ri in blk.row_ints())
    return BitMatrix(r * len(blocks), c * len(blocks), rows)
