import random
from fractions import Fraction

import pytest

from nilsym import (LieAlgebra, ParamPoly, builtin, change_basis,
                    direct_product, instantiate_params, jacobi_holds,
                    jacobi_violation, upper_central_series)
from nilsym.linalg import identity
from helpers import random_invertible


def jacobi_violator():
    """[e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e1; the cyclic sum at (1,2,3) is e3."""
    return LieAlgebra("violator", 3, {
        (1, 2): {3: 1}, (2, 3): {1: 1}, (1, 3): {1: -1}})


def test_jacobi_heisenberg5():
    assert jacobi_holds(builtin("heisenberg:5"))


def test_jacobi_abelian():
    assert jacobi_holds(builtin("abelian:5"))


def test_jacobi_violator_reports_first_triple():
    assert jacobi_violation(jacobi_violator()) == (1, 2, 3)


def test_bracket_antisymmetry_synthesized():
    h5 = builtin("heisenberg:5")
    assert h5.bracket_basis(2, 3) == {1: 1}
    assert h5.bracket_basis(3, 2) == {1: -1}
    assert h5.bracket_basis(2, 2) == {}


def test_constructor_normalizes_reversed_keys():
    g = LieAlgebra("g", 3, {(3, 2): {1: 1}})
    assert g.brackets == {(2, 3): {1: Fraction(-1)}}


def test_constructor_rejects_bad_indices():
    with pytest.raises(ValueError):
        LieAlgebra("g", 3, {(1, 1): {2: 1}})
    with pytest.raises(ValueError):
        LieAlgebra("g", 3, {(1, 4): {2: 1}})
    with pytest.raises(ValueError):
        LieAlgebra("g", 3, {(1, 2): {4: 1}})


def test_ucs_heisenberg5():
    ucs = upper_central_series(builtin("heisenberg:5"))
    assert ucs.dims == (1, 5)
    assert ucs.nilpotency_index == 2
    assert ucs.is_nilpotent


def test_ucs_abelian():
    ucs = upper_central_series(builtin("abelian:5"))
    assert ucs.dims == (5,)
    assert ucs.nilpotency_index == 1


def test_ucs_g13457C_matches_its_name():
    assert upper_central_series(builtin("g13457C")).dims == (1, 3, 4, 5, 7)


def test_ucs_flags_non_nilpotent():
    # sl2-like: [e1,e2]=2e2, [e1,e3]=-2e3, [e2,e3]=e1 has trivial center
    g = LieAlgebra("sl2", 3, {
        (1, 2): {2: 2}, (1, 3): {3: -2}, (2, 3): {1: 1}})
    assert jacobi_holds(g)
    ucs = upper_central_series(g)
    assert not ucs.is_nilpotent
    assert ucs.dims == (0,)


def test_direct_product_heisenberg_times_a():
    h5 = builtin("heisenberg:5")
    prod = direct_product(h5, builtin("abelian:1"))
    assert prod.dim == 6
    assert prod.brackets == h5.brackets
    assert prod.dual_labels[-1] == "y"
    assert upper_central_series(prod).dims == (2, 6)


def test_direct_product_of_abelians_is_abelian():
    prod = direct_product(builtin("abelian:2"), builtin("abelian:3"))
    assert prod == builtin("abelian:5")


def test_direct_product_blocks_and_labels():
    g = builtin("heisenberg:3")
    h = builtin("g13457C")
    prod = direct_product(g, h)
    assert prod.dim == 10
    assert prod.bracket_basis(2, 3) == {1: 1}
    assert prod.bracket_basis(4, 5) == {6: 1}  # h's [1,2]=e3 shifted by 3
    assert prod.dual_labels[3:] == tuple("y%d" % i for i in range(1, 8))
    assert jacobi_holds(prod)


def test_change_basis_identity_is_equal():
    h5 = builtin("heisenberg:5")
    assert change_basis(h5, identity(5)) == h5


def test_change_basis_swap_generators():
    h5 = builtin("heisenberg:5")
    t = identity(5)
    t[1], t[2] = t[2], t[1]  # swap e2 and e3
    g = change_basis(h5, t)
    assert g.brackets == {(2, 3): {1: Fraction(-1)}, (4, 5): {1: Fraction(1)}}


def test_change_basis_scaling_transports_constants():
    h5 = builtin("heisenberg:5")
    t = identity(5)
    t[0][0] = Fraction(2)  # e1 -> 2 e1
    g = change_basis(h5, t)
    assert g.bracket_basis(2, 3) == {1: Fraction(1, 2)}
    assert g.bracket_basis(4, 5) == {1: Fraction(1, 2)}
    assert jacobi_holds(g)
    assert upper_central_series(g).dims == (1, 5)


def test_change_basis_singular_rejected():
    with pytest.raises(ValueError):
        change_basis(builtin("heisenberg:5"),
                     [[Fraction(0)] * 5 for _ in range(5)])


def family_147E_like():
    """A one-parameter toy family: [e1,e2] = lambda*e3 with lambda != 0."""
    lam = ParamPoly.parameter("lambda")
    return LieAlgebra("family", 3, {(1, 2): {3: lam}},
                      param="lambda", param_exclusions=(Fraction(0),))


def test_instantiate_binds_parameter():
    g = instantiate_params(family_147E_like(), {"lambda": Fraction(1, 2)})
    assert g.bracket_basis(1, 2) == {3: Fraction(1, 2)}
    assert not g.has_free_params


def test_instantiate_no_params_no_bindings_unchanged():
    h5 = builtin("heisenberg:5")
    assert instantiate_params(h5, {}) == h5


def test_instantiate_unbound_parameter_rejected():
    g = family_147E_like()
    with pytest.raises(ValueError):
        instantiate_params(g, {})
    with pytest.raises(ValueError):
        jacobi_holds(g)  # analyses refuse parametric algebras


def test_instantiate_excluded_value_rejected():
    with pytest.raises(ValueError):
        instantiate_params(family_147E_like(), {"lambda": Fraction(0)})


def test_instantiate_unknown_parameter_rejected():
    with pytest.raises(ValueError):
        instantiate_params(builtin("heisenberg:5"), {"mu": Fraction(1)})


def test_param_poly_arithmetic_and_eval():
    lam = ParamPoly.parameter("lambda")
    p = 2 * lam - 1
    assert isinstance(p, ParamPoly)
    assert p(Fraction(1, 2)) == 0
    assert p(Fraction(2)) == 3
    assert (lam * lam)(Fraction(3)) == 9
    assert (p - p) == Fraction(0)
    assert (1 - lam)(Fraction(4)) == -3


def test_parametric_algebras_refuse_structural_ops():
    g = family_147E_like()
    with pytest.raises(ValueError):
        change_basis(g, identity(3))
    with pytest.raises(ValueError):
        upper_central_series(g)


def test_jacobi_invariant_under_change_of_basis():
    rng = random.Random(41)
    for g in (builtin("heisenberg:5"), builtin("g13457C"), jacobi_violator()):
        expected = jacobi_holds(g)
        for _ in range(5):
            t = random_invertible(rng, g.dim)
            assert jacobi_holds(change_basis(g, t)) == expected


def test_ucs_invariant_under_change_of_basis():
    rng = random.Random(42)
    for name in ("heisenberg:3", "heisenberg:5", "g13457C", "abelian:4"):
        g = builtin(name)
        dims = upper_central_series(g).dims
        for _ in range(5):
            t = random_invertible(rng, g.dim)
            assert upper_central_series(change_basis(g, t)).dims == dims


def test_product_of_nilpotents_is_nilpotent():
    pairs = [("heisenberg:3", "heisenberg:5"),
             ("abelian:2", "g13457C"),
             ("heisenberg:5", "abelian:1")]
    for a, b in pairs:
        prod = direct_product(builtin(a), builtin(b))
        assert upper_central_series(prod).is_nilpotent


def test_product_ucs_dims_are_pointwise_sums():
    # C_i(g x h) = C_i(g) + C_i(h), with stabilized factors capped at dim
    def saturated(dims, dim, length):
        seq = list(dims) + [dims[-1]] * (length - len(dims))
        return [min(x, dim) for x in seq]

    for a, b in (("heisenberg:3", "heisenberg:5"), ("abelian:2", "g13457C")):
        g, h = builtin(a), builtin(b)
        dg = upper_central_series(g).dims
        dh = upper_central_series(h).dims
        length = max(len(dg), len(dh))
        expected = tuple(x + y for x, y in zip(
            saturated(dg, g.dim, length), saturated(dh, h.dim, length)))
        assert upper_central_series(direct_product(g, h)).dims == expected
