"""The category of exact-rational matrices.

An m-by-n matrix is the morphism ``m -> n``; composition is matrix product
in diagrammatic order, so ``M @ N`` needs ``cols(M) == rows(N)``.  Entries
are exact rationals carried as ``int`` or ``Fraction`` (denominator-1
fractions normalise to ``int``), so every law check is bit-exact and the
all-integer fast path stays cheap.  Empty dimensions are first-class: the
product through a 0-column middle is the zero matrix by the empty-sum
convention, which is what makes the zero-vector-as-composite construction
work.
"""

from fractions import Fraction
from itertools import product

from .category import FinCategory, Mor
from .errors import (
    ClosureError,
    DimensionError,
    LimitExceededError,
    ParseError,
    SingularMatrixError,
)
from .report import Violation, report

Rational = int | Fraction


def _entry(x):
    if type(x) is int:
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, int):
        return int(x)
    raise TypeError(
        f"matrix entries must be exact rationals (int or Fraction), got {type(x).__name__}"
    )


class RatMatrix:
    """A ``rows x cols`` matrix of exact rationals, row-major.

    Entries are ``int`` or ``Fraction`` (denominator-1 fractions normalise to
    ``int`` on construction, so equality and hashing are canonical).  Treat
    instances as immutable: every operation returns a fresh matrix.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries=()):
        if type(rows) is not int or type(cols) is not int:
            raise DimensionError("matrix dimensions must be integers")
        if rows < 0 or cols < 0:
            raise DimensionError("matrix dimensions must be nonnegative")
        entries = tuple(entries)
        for x in entries:
            if type(x) is not int:
                entries = tuple(_entry(x) for x in entries)
                break
        if len(entries) != rows * cols:
            raise DimensionError(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}"
            )
        self.rows = rows
        self.cols = cols
        self.entries = entries

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    # -- construction -----------------------------------------------------

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        n = len(rows[0]) if rows else 0
        for i, r in enumerate(rows):
            if len(r) != n:
                raise DimensionError(f"row {i} has {len(r)} entries, expected {n}")
        return cls(len(rows), n, tuple(x for r in rows for x in r))

    @classmethod
    def zero(cls, m, n):
        return cls(m, n, (0,) * (m * n))

    @classmethod
    def identity(cls, n):
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    # -- queries ------------------------------------------------------------

    @property
    def dim(self):
        return (self.rows, self.cols)

    def entry(self, i, j):
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def _dims(self):
        return f"{self.rows}x{self.cols}"

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        if self.dim != other.dim:
            raise DimensionError(f"cannot add {self._dims()} and {other._dims()}")
        return RatMatrix(
            self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries))
        )

    def __neg__(self):
        return RatMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def __sub__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self + (-other)

    def __matmul__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionError(
                f"cannot multiply {self._dims()} by {other._dims()}: middle dimensions differ"
            )
        m, n, q = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out = []
        for i in range(m):
            base = i * n
            for j in range(q):
                s = 0
                for k in range(n):
                    s += a[base + k] * b[k * q + j]
                out.append(s)
        return RatMatrix(m, q, tuple(out))

    # -- invertibility -------------------------------------------------------

    def _gauss_jordan(self):
        """Exact inverse entries for a square matrix, or None if singular.

        Pivots on the first nonzero entry of each column, scanning downward.
        """
        n = self.rows
        aug = [
            [Fraction(x) for x in self.row(i)]
            + [Fraction(int(i == j)) for j in range(n)]
            for i in range(n)
        ]
        for col in range(n):
            piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
            if piv is None:
                return None
            if piv != col:
                aug[col], aug[piv] = aug[piv], aug[col]
            p = aug[col][col]
            if p != 1:
                aug[col] = [x / p for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col] != 0:
                    factor = aug[r][col]
                    aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
        return tuple(aug[i][n + j] for i in range(n) for j in range(n))

    def is_invertible(self):
        if self.rows != self.cols:
            return False
        return self._gauss_jordan() is not None

    def inverse(self):
        if self.rows != self.cols:
            raise DimensionError(f"cannot invert non-square {self._dims()} matrix")
        entries = self._gauss_jordan()
        if entries is None:
            raise SingularMatrixError(f"{self._dims()} matrix is singular")
        return RatMatrix(self.rows, self.cols, entries)

    def __repr__(self):
        body = "; ".join(",".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"RatMatrix({self._dims()}: {body})"


# -- the spec'd operation names, as functions ---------------------------------

def mat_mul(m, n):
    return m @ n


def mat_add(m, n):
    return m + n


def mat_neg(m):
    return -m


def zero(m, n):
    return RatMatrix.zero(m, n)


def identity(n):
    return RatMatrix.identity(n)


# -- vectors as morphisms out of dimension 1 ----------------------------------

def vector_as_morphism(values):
    """The 1 x n row matrix for a vector, i.e. the morphism 1 -> n."""
    values = tuple(values)
    return RatMatrix(1, len(values), values)


def zero_vector(n):
    """The zero row vector, computed through the 1 -> 0 -> n composite."""
    return RatMatrix(1, 0, ()) @ RatMatrix(0, n, ())


def scale_via_composition(v, r):
    """Scale a row vector by precomposing with the 1 x 1 scalar matrix."""
    if not isinstance(v, RatMatrix) or v.rows != 1:
        raise DimensionError("expected a 1 x n row vector")
    return RatMatrix(1, 1, (r,)) @ v


# -- law checking --------------------------------------------------------------

def check_enrichment(m, n, q, sample):
    """Verify hom-set group laws, associativity, and distributivity on a sample.

    ``sample`` is a sequence of matrix triples, checked against every law
    family whose shapes the triple fits:

    * all three equal shape: additive group laws on that hom-set
      (associativity, commutativity, zero, negation),
    * ``(m x n, n x q, n x q)``: left distributivity ``A(B + C) = AB + AC``,
    * ``(m x n, m x n, n x q)``: right distributivity ``(A + B)C = AC + BC``,
    * ``(m x n, n x q, q x r)``: associativity ``(AB)C = A(BC)``.

    A triple fitting no family raises DimensionError.  Violations carry the
    sample index.  Inputs and intermediate results are interned by value, so
    equal matrices become one object, repeated sums and products are computed
    once, and the equality tests in the laws short-circuit; exhaustive
    samples over a small entry pool check in seconds.
    """
    canon = {}

    def intern(mat):
        return canon.setdefault((mat.rows, mat.cols, mat.entries), mat)

    mul_memo = {}
    add_memo = {}
    neg_memo = {}
    zeros = {}

    def mul(a, b):
        key = (id(a), id(b))
        got = mul_memo.get(key)
        if got is None:
            got = mul_memo[key] = intern(a @ b)
        return got

    def add(a, b):
        key = (id(a), id(b))
        got = add_memo.get(key)
        if got is None:
            got = add_memo[key] = intern(a + b)
        return got

    def neg(a):
        got = neg_memo.get(id(a))
        if got is None:
            got = neg_memo[id(a)] = intern(-a)
        return got

    def zero_like(a):
        got = zeros.get(a.dim)
        if got is None:
            got = zeros[a.dim] = intern(RatMatrix.zero(a.rows, a.cols))
        return got

    violations = []
    for i, (a, b, c) in enumerate(sample):
        a, b, c = intern(a), intern(b), intern(c)
        fits = 0
        if a.dim == b.dim == c.dim:
            fits += 1
            z = zero_like(a)
            if add(add(a, b), c) != add(a, add(b, c)):
                violations.append(Violation("add-associativity", (i,)))
            if add(a, b) != add(b, a):
                violations.append(Violation("add-commutativity", (i,)))
            if add(a, z) != a or add(z, a) != a:
                violations.append(Violation("add-zero", (i,)))
            if add(a, neg(a)) != z or add(neg(a), a) != z:
                violations.append(Violation("add-inverse", (i,)))
        if a.dim == (m, n) and b.dim == (n, q) and c.dim == (n, q):
            fits += 1
            if mul(a, add(b, c)) != add(mul(a, b), mul(a, c)):
                violations.append(Violation("left-distributivity", (i,)))
        if a.dim == (m, n) and b.dim == (m, n) and c.dim == (n, q):
            fits += 1
            if mul(add(a, b), c) != add(mul(a, c), mul(b, c)):
                violations.append(Violation("right-distributivity", (i,)))
        if a.dim == (m, n) and b.dim == (n, q) and c.rows == q:
            fits += 1
            if mul(mul(a, b), c) != mul(a, mul(b, c)):
                violations.append(Violation("mul-associativity", (i,)))
        if not fits:
            raise DimensionError(
                f"sample {i}: shapes {a._dims()}, {b._dims()}, {c._dims()} fit no law "
                f"for dimensions ({m}, {n}, {q})"
            )
    return report(violations)


def check_linearity(mat, vs, rs):
    """Verify that ``v -> v @ mat`` preserves zero, scaling, and sums.

    ``vs`` are 1 x n row vectors, ``rs`` scalars; all pairs are checked.
    """
    n, p = mat.rows, mat.cols
    vs = list(vs)
    for v in vs:
        if v.dim != (1, n):
            raise DimensionError(f"sample vector is {v._dims()}, expected 1x{n}")
    rs = list(rs)
    violations = []

    if zero_vector(n) @ mat != zero_vector(p):
        violations.append(Violation("linearity-zero", ()))
    images = [v @ mat for v in vs]
    for i, v in enumerate(vs):
        for k, r in enumerate(rs):
            if scale_via_composition(v, r) @ mat != scale_via_composition(images[i], r):
                violations.append(Violation("linearity-scalar", (i, k)))
    for i, v in enumerate(vs):
        for j, w in enumerate(vs):
            if (v + w) @ mat != images[i] + images[j]:
                violations.append(Violation("linearity-additive", (i, j)))
    return report(violations)


# -- matrices as a finite category ---------------------------------------------

def _mat_name(mat):
    if mat.rows == 0 or mat.cols == 0:
        return f"[{mat.rows}x{mat.cols}]"
    body = ";".join(",".join(str(x) for x in mat.row(i)) for i in range(mat.rows))
    return f"[{body}]"


def matrices_as_fincategory(dims, mats, max_morphisms=512):
    """Build the finite category with one object per dimension in ``dims`` and
    the given matrices as morphisms, composing by matrix product.

    Raises ClosureError when a product of two listed matrices (or a needed
    identity) is not itself listed.
    """
    dims = [int(d) for d in dims]
    if len(set(dims)) != len(dims):
        raise ClosureError("duplicate dimensions")
    if len(mats) > max_morphisms:
        raise LimitExceededError(
            f"{len(mats)} morphisms exceed the bound {max_morphisms}",
            bound=len(mats),
            limit=max_morphisms,
        )
    dimset = set(dims)
    by_value = {}
    for mat in mats:
        if mat.rows not in dimset or mat.cols not in dimset:
            raise ClosureError(f"matrix {_mat_name(mat)} has dimensions outside {dims}")
        by_value.setdefault(mat, _mat_name(mat))

    identities = {}
    for d in dims:
        ident = RatMatrix.identity(d)
        if ident not in by_value:
            raise ClosureError(f"identity matrix of dimension {d} is missing from the pool")
        identities[str(d)] = by_value[ident]

    comp = {}
    for a, b in product(by_value, repeat=2):
        if a.cols != b.rows:
            continue
        prod = a @ b
        name = by_value.get(prod)
        if name is None:
            raise ClosureError(
                f"product {_mat_name(a)} @ {_mat_name(b)} = {_mat_name(prod)} escapes the pool"
            )
        comp[(by_value[a], by_value[b])] = name

    objects = tuple(str(d) for d in dims)
    morphisms = [Mor(name, str(mat.rows), str(mat.cols)) for mat, name in by_value.items()]
    return FinCategory(objects, morphisms, identities, comp)


def as_fincategory(dims, entry_pool, max_morphisms=512):
    """The finite category of all matrices over ``dims`` with entries drawn
    from ``entry_pool``, provided that set is closed under products."""
    dims = [int(d) for d in dims]
    pool = []
    seen = set()
    for x in entry_pool:
        x = _entry(x)
        if x not in seen:
            seen.add(x)
            pool.append(x)
    total = sum(len(pool) ** (a * b) for a, b in product(dims, repeat=2))
    if total > max_morphisms:
        raise LimitExceededError(
            f"{total} matrices exceed the bound {max_morphisms}",
            bound=total,
            limit=max_morphisms,
        )
    mats = []
    for a, b in product(dims, repeat=2):
        for entries in product(pool, repeat=a * b):
            mats.append(RatMatrix(a, b, entries))
    return matrices_as_fincategory(dims, mats, max_morphisms=max_morphisms)


# -- the text literal format ----------------------------------------------------

def parse_matrix_literal(text):
    """Parse ``1,2,0; 0,2,-2; -2,-3,-1`` style literals; entries are integers
    or ``p/q`` rationals, whitespace insignificant."""
    if not text.strip():
        raise ParseError("empty matrix literal")
    rows = []
    for part in text.split(";"):
        tokens = [t.strip() for t in part.split(",")]
        row = []
        for tok in tokens:
            if not tok:
                raise ParseError(f"empty entry in matrix literal {text!r}")
            try:
                row.append(Fraction(tok))
            except (ValueError, ZeroDivisionError):
                raise ParseError(f"bad rational {tok!r} in matrix literal") from None
        rows.append(row)
    width = len(rows[0])
    for i, row in enumerate(rows):
        if len(row) != width:
            raise ParseError(f"row {i + 1} has {len(row)} entries, expected {width}")
    return RatMatrix.from_rows(rows)


def format_matrix(mat):
    """Render a matrix in the literal format accepted by parse_matrix_literal."""
    if mat.rows == 0 or mat.cols == 0:
        raise DimensionError("a matrix with an empty dimension has no literal form")
    return "; ".join(",".join(str(x) for x in mat.row(i)) for i in range(mat.rows))
