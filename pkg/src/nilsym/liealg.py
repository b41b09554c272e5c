"""Lie algebras over the rationals given by sparse structure constants.

Brackets are stored only for i < j (1-based); [e_j, e_i] = -[e_i, e_j] is
synthesized.  Coefficients are Fractions, or ParamPoly values for
one-parameter families, which must be instantiated before any analysis.
"""

from dataclasses import dataclass
from fractions import Fraction

from .linalg import inverse, kernel_basis, residual, rref


class ParamPoly:
    """A polynomial in one named structure-constant parameter.

    coeffs[d] is the Fraction on parameter^d; trailing zeros are trimmed, so
    a ParamPoly is never a plain constant (those are stored as Fractions).
    """

    __slots__ = ("name", "coeffs")

    def __init__(self, name, coeffs):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.name = name
        self.coeffs = tuple(cs)

    @classmethod
    def parameter(cls, name):
        return cls(name, (0, 1))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __call__(self, value):
        value = value if isinstance(value, Fraction) else Fraction(value)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def _coerce(self, other):
        if isinstance(other, ParamPoly):
            if other.name != self.name:
                raise ValueError("mixed parameters %r and %r" % (self.name, other.name))
            return other
        return ParamPoly(self.name, (other,))

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        cs = [(self.coeffs[i] if i < len(self.coeffs) else 0)
              + (other.coeffs[i] if i < len(other.coeffs) else 0) for i in range(n)]
        out = ParamPoly(self.name, cs)
        return out if out.coeffs else Fraction(0)

    __radd__ = __add__

    def __neg__(self):
        return ParamPoly(self.name, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        cs = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1) \
            if self.coeffs and other.coeffs else []
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                cs[i + j] += a * b
        out = ParamPoly(self.name, cs)
        return out if out.coeffs else Fraction(0)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, ParamPoly):
            return self.name == other.name and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.name, self.coeffs))

    def render(self):
        """Canonical text: terms by descending degree, e.g. `2*lambda-1`.

        Single monomials come out bare (`lambda`, `-2*lambda^2`); anything
        longer is meant to be parenthesized by the caller.
        """
        parts = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if not c:
                continue
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                var = self.name if d == 1 else "%s^%d" % (self.name, d)
                body = var if mag == 1 else "%s*%s" % (mag, var)
            if not parts:
                parts.append("-" + body if c < 0 else body)
            else:
                parts.append(("-" if c < 0 else "+") + body)
        return "".join(parts) or "0"

    def __repr__(self):
        return "ParamPoly(%r, %s)" % (self.name, self.render())

    def is_monomial(self):
        return sum(1 for c in self.coeffs if c) == 1


def _coeff(value):
    if isinstance(value, (Fraction, ParamPoly)):
        return value
    return Fraction(value)


class LieAlgebra:
    """A Lie algebra presented by rational structure constants.

    Structural equality compares dimension, brackets and parameter state
    only; names and labels are presentation data.
    """

    def __init__(self, name, dim, brackets=None, basis_labels=None,
                 dual_labels=None, param=None, param_exclusions=()):
        if dim < 1:
            raise ValueError("dimension must be positive")
        self.name = name
        self.dim = dim
        self.param = param
        self.param_exclusions = tuple(Fraction(x) for x in param_exclusions)
        if basis_labels is None:
            basis_labels = tuple("e%d" % i for i in range(1, dim + 1))
        if dual_labels is None:
            dual_labels = tuple("x%d" % i for i in range(1, dim + 1))
        if len(basis_labels) != dim or len(dual_labels) != dim:
            raise ValueError("label count must equal dim")
        self.basis_labels = tuple(basis_labels)
        self.dual_labels = tuple(dual_labels)
        table = {}
        for (i, j), combo in (brackets or {}).items():
            sign = 1
            if i == j:
                raise ValueError("bracket [e%d,e%d] is identically zero" % (i, j))
            if i > j:
                i, j, sign = j, i, -1
            if not 1 <= i < j <= dim:
                raise ValueError("bracket indices (%d,%d) outside 1..%d" % (i, j, dim))
            if (i, j) in table:
                raise ValueError("duplicate bracket [%d,%d]" % (i, j))
            row = {}
            for k, c in combo.items():
                if not 1 <= k <= dim:
                    raise ValueError("bracket target e%d outside 1..%d" % (k, dim))
                c = _coeff(c)
                if sign < 0:
                    c = -c
                if not (isinstance(c, Fraction) and c == 0):
                    row[k] = c
            if row:
                table[(i, j)] = row
        self.brackets = table

    # ---- parameter state ----

    @property
    def has_free_params(self):
        return any(isinstance(c, ParamPoly)
                   for row in self.brackets.values() for c in row.values())

    def _require_instantiated(self, what):
        if self.has_free_params:
            raise ValueError("%s requires an instantiated algebra; "
                             "parameter %r is unbound" % (what, self.param))

    # ---- bracket evaluation ----

    def bracket_basis(self, i, j):
        """[e_i, e_j] as a sparse {k: Fraction} map."""
        if i == j:
            return {}
        if i < j:
            return dict(self.brackets.get((i, j), {}))
        return {k: -c for k, c in self.brackets.get((j, i), {}).items()}

    def bracket(self, v, w):
        """[v, w] for coefficient vectors v, w of length dim."""
        self._require_instantiated("bracket evaluation")
        out = [Fraction(0)] * self.dim
        for (i, j), row in self.brackets.items():
            f = v[i - 1] * w[j - 1] - v[j - 1] * w[i - 1]
            if f:
                for k, c in row.items():
                    out[k - 1] += f * c
        return out

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return (self.dim == other.dim and self.brackets == other.brackets
                and self.param == other.param)

    def __repr__(self):
        return "LieAlgebra(%r, dim=%d, %d brackets)" % (
            self.name, self.dim, len(self.brackets))


@dataclass(frozen=True)
class UcsProfile:
    """Dimensions of the strictly increasing upper central series."""

    dims: tuple
    algebra_dim: int

    @property
    def nilpotency_index(self):
        return len(self.dims)

    @property
    def is_nilpotent(self):
        return bool(self.dims) and self.dims[-1] == self.algebra_dim


def jacobi_violation(g):
    """First triple (i,j,k), i<j<k, violating the Jacobi identity, else None."""
    g._require_instantiated("Jacobi check")
    n = g.dim
    basis = []
    for i in range(1, n + 1):
        v = [Fraction(0)] * n
        v[i - 1] = Fraction(1)
        basis.append(v)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(j + 1, n + 1):
                total = [Fraction(0)] * n
                for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                    inner = g.bracket(basis[a - 1], basis[b - 1])
                    outer = g.bracket(inner, basis[c - 1])
                    for t in range(n):
                        total[t] += outer[t]
                if any(total):
                    return (i, j, k)
    return None


def jacobi_holds(g):
    return jacobi_violation(g) is None


def upper_central_series(g):
    """Upper central series dims via exact kernel computations.

    Each C_{i+1} = {x : [x, e_j] in C_i for all j} is the kernel of the
    stacked conditions obtained by reducing [e_i, e_j] against an rref basis
    of C_i.  Stops when the series stabilizes; nilpotent iff it reaches dim.
    """
    g._require_instantiated("upper central series")
    n = g.dim
    # ad-columns: w[i][j] = [e_{i+1}, e_{j+1}] as a length-n vector
    basis = []
    for i in range(1, n + 1):
        v = [Fraction(0)] * n
        v[i - 1] = Fraction(1)
        basis.append(v)
    w = [[g.bracket(basis[i], basis[j]) for j in range(n)] for i in range(n)]

    current = []  # rows spanning C_i; starts at C_0 = 0
    dims = []
    while True:
        red, pivots = rref(current)
        # [x, e_j] in C_i is linear in x; one scalar row per coordinate of
        # the residual of [e_i, e_j] against the current rref basis.
        rows = []
        for j in range(n):
            res = [residual(red, pivots, w[i][j]) for i in range(n)]
            for coord in range(n):
                row = [res[i][coord] for i in range(n)]
                if any(row):
                    rows.append(row)
        new_basis = kernel_basis(rows, n)
        new_dim = len(new_basis)
        if dims and new_dim == dims[-1]:
            break
        dims.append(new_dim)
        if new_dim == 0 or new_dim == n:
            break
        current = new_basis
    return UcsProfile(tuple(dims), n)


def direct_product(g, h):
    """Block-diagonal product; h's indices are shifted past g's.

    When h is one-dimensional its dual generator is labeled y; otherwise
    the second factor's duals are labeled y1..y_dim(h).
    """
    dim = g.dim + h.dim
    brackets = {key: dict(row) for key, row in g.brackets.items()}
    for (i, j), row in h.brackets.items():
        brackets[(i + g.dim, j + g.dim)] = {k + g.dim: c for k, c in row.items()}
    if h.dim == 1:
        h_duals = ("y",)
        h_basis = ("y",)
    else:
        h_duals = tuple("y%d" % i for i in range(1, h.dim + 1))
        h_basis = tuple("f%d" % i for i in range(1, h.dim + 1))
    if g.param is not None and h.param is not None and g.param != h.param:
        raise ValueError("cannot mix parameters %r and %r" % (g.param, h.param))
    return LieAlgebra(
        "%s x %s" % (g.name, h.name), dim, brackets,
        basis_labels=g.basis_labels + h_basis,
        dual_labels=g.dual_labels + h_duals,
        param=g.param if g.param is not None else h.param,
        param_exclusions=g.param_exclusions + h.param_exclusions)


def change_basis(g, matrix):
    """Transport structure constants through an invertible rational matrix.

    Row i of `matrix` expresses the new basis vector f_{i+1} in the old
    basis, so scaling e1 by 2 halves every constant targeting e1.
    """
    g._require_instantiated("change of basis")
    n = g.dim
    rows = [[Fraction(x) for x in row] for row in matrix]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValueError("matrix must be %dx%d" % (n, n))
    inv = inverse(rows)  # raises ValueError when singular
    brackets = {}
    for i in range(n):
        for j in range(i + 1, n):
            u = g.bracket(rows[i], rows[j])
            combo = {}
            for k in range(n):
                c = sum(u[l] * inv[l][k] for l in range(n))
                if c:
                    combo[k + 1] = c
            if combo:
                brackets[(i + 1, j + 1)] = combo
    return LieAlgebra(g.name, n, brackets,
                      basis_labels=g.basis_labels, dual_labels=g.dual_labels)


def instantiate_params(g, bindings):
    """Substitute parameter bindings; the result has purely rational constants.

    Every parameter occurring in the coefficients must be bound, unknown
    names are rejected, and bindings that hit a documented excluded value
    are rejected.
    """
    bindings = {name: Fraction(v) for name, v in bindings.items()}
    for name in bindings:
        if name != g.param:
            raise ValueError("unknown parameter %r" % name)
    if g.param in bindings and bindings[g.param] in g.param_exclusions:
        raise ValueError("parameter %s = %s is excluded for %s"
                         % (g.param, bindings[g.param], g.name))
    brackets = {}
    for key, row in g.brackets.items():
        combo = {}
        for k, c in row.items():
            if isinstance(c, ParamPoly):
                if c.name not in bindings:
                    raise ValueError("parameter %r is unbound" % c.name)
                c = c(bindings[c.name])
            if c:
                combo[k] = c
        if combo:
            brackets[key] = combo
    return LieAlgebra(g.name, g.dim, brackets,
                      basis_labels=g.basis_labels, dual_labels=g.dual_labels)
