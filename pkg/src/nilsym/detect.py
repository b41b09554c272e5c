"""Exact symplectic and contact detection.

Both decisions follow the same pattern: write the most general candidate
form with polynomial coefficients, expand the top wedge power symbolically,
and test the single top-degree coefficient for identical vanishing.  A "no"
is therefore a proof, not a sampling failure; a "yes" comes with a rational
witness found on a deterministic grid.

A polynomial with rational coefficients vanishes identically over the reals
iff it is the zero polynomial, so deciding over the formal polynomial ring
is sound and complete for real existence, and rational witnesses suffice.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, lcm

from .cecomplex import build_complex, cocycle_basis
from .exterior import Multivector, indices_of, wedge_sign
from .liealg import direct_product, jacobi_violation
from .mpoly import MPoly, find_nonvanishing_point


@dataclass(frozen=True)
class SymplecticVerdict:
    admits: bool
    witness: Multivector | None
    pfaffian_nvars: int
    pfaffian_degree: int
    certificate_kind: str  # "witness" | "identically-zero-pfaffian"


@dataclass(frozen=True)
class ContactVerdict:
    admits: bool
    witness: Multivector | None


@dataclass(frozen=True)
class FormCheckReport:
    """Outcome of checking one claimed form, check by check."""

    kind: str
    checks: tuple  # ((name, bool), ...)

    @property
    def passed(self):
        return all(ok for _, ok in self.checks)

    @property
    def failed_checks(self):
        return tuple(name for name, ok in self.checks if not ok)

    def summary(self):
        if self.passed:
            return "pass"
        return "fail: " + ", ".join(self.failed_checks)


def _require_jacobi(g, what):
    g._require_instantiated(what)
    bad = jacobi_violation(g)
    if bad is not None:
        raise ValueError("%s requires the Jacobi identity; violated at %r in %s"
                         % (what, bad, g.name))


# ---- generic forms with polynomial coefficients -------------------------
#
# A generic combination sum_i t_i beta_i is held as {monomial mask ->
# {sorted variable-index tuple -> int}}.  Denominators of the beta_i are
# cleared up front so every coefficient operation is plain integer
# arithmetic; the lcm is divided back out once at the end.


def _denominator_lcm(mvs):
    L = 1
    for mv in mvs:
        for c in mv.terms.values():
            L = lcm(L, c.denominator)
    return L


def _generic_combination(basis, L):
    gen = {}
    for i, b in enumerate(basis):
        for mask, c in b.terms.items():
            num = c.numerator * (L // c.denominator)
            if num:
                gen.setdefault(mask, {})[(i,)] = num
    return gen


def _gwedge(a, b, full_mask=None):
    out = {}
    for m1, p1 in a.items():
        for m2, p2 in b.items():
            if m1 & m2:
                continue
            m = m1 | m2
            if full_mask is not None and m != full_mask:
                continue
            s = wedge_sign(m1, m2)
            dst = out.setdefault(m, {})
            for k1, c1 in p1.items():
                for k2, c2 in p2.items():
                    c = c1 * c2 if s > 0 else -(c1 * c2)
                    key = tuple(sorted(k1 + k2))
                    prev = dst.get(key)
                    if prev is None:
                        dst[key] = c
                    else:
                        v = prev + c
                        if v:
                            dst[key] = v
                        else:
                            del dst[key]
    return {m: p for m, p in out.items() if p}


def _top_coefficient(acc, dim, nvars, denominator):
    full_mask = (1 << dim) - 1
    terms = {}
    for key, c in acc.get(full_mask, {}).items():
        exps = [0] * nvars
        for i in key:
            exps[i] += 1
        terms[tuple(exps)] = Fraction(c, denominator)
    return MPoly(nvars, terms)


# ---- symplectic ----------------------------------------------------------


def pfaffian_polynomial(g):
    """Pfaffian of the generic closed 2-form, with the basis that defines it.

    Returns (p, basis): basis is the degree-2 cocycle basis beta_1..beta_k,
    and p(t) is the top-degree coefficient of (sum t_i beta_i)^m divided by
    m!, a degree-m polynomial in k variables.  p is identically zero iff no
    closed 2-form on g has full rank.
    """
    _require_jacobi(g, "the symplectic decision")
    if g.dim % 2:
        raise ValueError("symplectic check needs even dimension; %s has dim %d"
                         % (g.name, g.dim))
    m = g.dim // 2
    complex_ = build_complex(g)
    basis = cocycle_basis(complex_, 2)
    L = _denominator_lcm(basis)
    omega = _generic_combination(basis, L)
    full_mask = (1 << g.dim) - 1
    acc = {0: {(): 1}}
    for step in range(m):
        acc = _gwedge(acc, omega, full_mask if step == m - 1 else None)
    p = _top_coefficient(acc, g.dim, len(basis), L ** m * factorial(m))
    return p, basis


def symplectic_decide(g):
    """Exact decision: does g admit a closed 2-form of full rank."""
    p, basis = pfaffian_polynomial(g)
    m = g.dim // 2
    if p.is_zero:
        return SymplecticVerdict(False, None, len(basis), m,
                                 "identically-zero-pfaffian")
    point = find_nonvanishing_point(p)
    witness = Multivector(g.dim)
    for t, b in zip(point, basis):
        if t:
            witness = witness + t * b
    witness = witness.canonical_integer_form()
    report = verify_claimed_form(g, witness, "symplectic")
    if not report.passed:  # the grid point certifies this cannot happen
        raise AssertionError("witness failed verification: %s" % report.summary())
    return SymplecticVerdict(True, witness, len(basis), m, "witness")


def skew_gram_matrix(form):
    """The antisymmetric matrix [form(e_i, e_j)] of a 2-form."""
    if not form.is_homogeneous(2):
        raise ValueError("need a homogeneous 2-form")
    n = form.dim
    matrix = [[Fraction(0)] * n for _ in range(n)]
    for mask, c in form.terms.items():
        i, j = indices_of(mask)
        matrix[i - 1][j - 1] = c
        matrix[j - 1][i - 1] = -c
    return matrix


# ---- contact -------------------------------------------------------------


def contact_polynomial(g):
    """Top coefficient of alpha ^ (d alpha)^n for a generic 1-form alpha.

    alpha = sum s_i x_i over all dual generators; the result is a
    degree-(n+1) polynomial in dim variables, identically zero iff no
    1-form satisfies the contact inequality.  Dimension 1 returns the zero
    polynomial: with no d-alpha factor available the inequality cannot
    encode non-integrability there.
    """
    _require_jacobi(g, "the contact decision")
    if g.dim % 2 == 0:
        raise ValueError("contact check needs odd dimension; %s has dim %d"
                         % (g.name, g.dim))
    if g.dim == 1:
        return MPoly(1)
    n = (g.dim - 1) // 2
    complex_ = build_complex(g)
    diffs = complex_.generator_differentials
    L = _denominator_lcm(diffs)
    d_alpha = {}
    for i, dxi in enumerate(diffs):
        for mask, c in dxi.terms.items():
            num = c.numerator * (L // c.denominator)
            if num:
                d_alpha.setdefault(mask, {})[(i,)] = num
    alpha = {1 << i: {(i,): 1} for i in range(g.dim)}
    full_mask = (1 << g.dim) - 1
    acc = {0: {(): 1}}
    for _ in range(n):
        acc = _gwedge(acc, d_alpha)
    acc = _gwedge(alpha, acc, full_mask)
    return _top_coefficient(acc, g.dim, g.dim, L ** n)


def contact_decide(g):
    """Exact decision: does g carry a 1-form alpha with alpha^(d alpha)^n != 0."""
    q = contact_polynomial(g)
    if q.is_zero:
        return ContactVerdict(False, None)
    point = find_nonvanishing_point(q)
    witness = Multivector(g.dim, {1 << i: s for i, s in enumerate(point) if s})
    witness = witness.canonical_integer_form()
    report = verify_claimed_form(g, witness, "contact")
    if not report.passed:
        raise AssertionError("witness failed verification: %s" % report.summary())
    return ContactVerdict(True, witness)


# ---- claimed forms and products ------------------------------------------


def verify_claimed_form(g, form, kind):
    """Check a user-claimed form against its definition, check by check.

    symplectic: d(form) = 0 and form^(dim/2) != 0.
    contact:    form ^ (d form)^((dim-1)/2) != 0.
    """
    g._require_instantiated("form verification")
    if form.dim != g.dim:
        raise ValueError("form lives in dimension %d, algebra has %d"
                         % (form.dim, g.dim))
    complex_ = build_complex(g)
    if kind == "symplectic":
        if g.dim % 2:
            raise ValueError("symplectic form on odd-dimensional %s" % g.name)
        if not form.is_homogeneous(2):
            raise ValueError("symplectic candidate must be homogeneous of degree 2")
        closed = complex_.differential(form).is_zero()
        nondeg = not form.wedge_power(g.dim // 2).is_zero()
        checks = (("closed", closed), ("nondegenerate", nondeg))
    elif kind == "contact":
        if g.dim % 2 == 0:
            raise ValueError("contact form on even-dimensional %s" % g.name)
        if not form.is_homogeneous(1):
            raise ValueError("contact candidate must be homogeneous of degree 1")
        n = (g.dim - 1) // 2
        top = form.wedge(complex_.differential(form).wedge_power(n))
        checks = (("contact-nondegenerate", not top.is_zero()),)
    else:
        raise ValueError("kind must be 'symplectic' or 'contact', got %r" % (kind,))
    return FormCheckReport(kind, checks)


def _split_product_factor(w, g, label):
    """Break a witness on g x a into (l, y-coefficient, pure-g terms)."""
    if w.dim != g.dim + 1:
        raise ValueError("%s must live on %s x a (dimension %d, got %d)"
                         % (label, g.name, g.dim + 1, w.dim))
    if not w.is_homogeneous(2):
        raise ValueError("%s must be a homogeneous 2-form" % label)
    ybit = 1 << g.dim
    cross = [(m, c) for m, c in w.terms.items() if m & ybit]
    if len(cross) != 1:
        raise ValueError("%s must contain exactly one x_l^y term, found %d"
                         % (label, len(cross)))
    (mask, c1), = cross
    l = indices_of(mask ^ ybit)[0]
    dxl = build_complex(g).generator_differentials[l - 1]
    if not dxl.is_zero():
        raise ValueError("%s pairs y with x%d, but dx%d != 0 on %s"
                         % (label, l, l, g.name))
    rest = {m: c for m, c in w.terms.items() if not m & ybit}
    return l, c1, rest


def product_symplectic_witness(wg, wh, g, h):
    """Splice two `sum x_i x_j + x_l y`-shaped witnesses into one on g x h.

    wg and wh are symplectic witnesses on g x a and h x a whose single
    y-term pairs y with a closed generator; the result replaces the two
    y-legs with one cross term x_l ^ y_r and is verified closed and
    nondegenerate before being returned.
    """
    l, c1, g_terms = _split_product_factor(wg, g, "wg")
    r, c2, h_terms = _split_product_factor(wh, h, "wh")
    product = direct_product(g, h)
    terms = dict(g_terms)
    for mask, c in h_terms.items():
        terms[mask << g.dim] = c
    cross = (1 << (l - 1)) | (1 << (g.dim + r - 1))
    terms[cross] = c1 * c2
    form = Multivector(product.dim, terms)
    report = verify_claimed_form(product, form, "symplectic")
    if not report.passed:
        raise ValueError("spliced form is not symplectic on %s (%s); "
                         "check the input witnesses" % (product.name, report.summary()))
    return form
