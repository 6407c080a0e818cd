import pytest

from grasschub import ClassExpr, EQUIVARIANT, Partition, e
from grasschub.equivariant import (
    equivariant_pieri, giambelli_columns, giambelli_rows, hat_column, hat_sigma_r_reduced,
    inv_star, prime_class, product_equivariant, reduce_shape, tilde_sigma_r,
)
from grasschub.localization import verify_product_by_localization
from grasschub.partitions import PartitionError

from conftest import GR24, GR25, GR35, GR36, basis_pairs


def hat(ctx, terms):
    return ClassExpr(ctx, EQUIVARIANT, {Partition(p): c for p, c in terms.items()})


def test_reduced_rows():
    assert hat_sigma_r_reduced(4, GR25) == hat(GR25, {(): -e(4), (1,): -e(3), (2,): -e(2), (3,): -e(1)})
    assert hat_sigma_r_reduced(2, GR25) == hat(GR25, {(2,): 1})
    assert hat_sigma_r_reduced(3, GR24) == hat(GR24, {(): -e(3), (1,): -e(2), (2,): -e(1)})


def test_product_examples():
    expected = hat(GR25, {(3, 2): 1, (3, 1): -e(1), (2, 1): -e(2), (1, 1): -e(3), (): e(5)})
    assert product_equivariant([2, 1], [2], GR25) == expected
    expected = hat(GR24, {(2, 2): e(3) - e(1) * e(2), (2, 1): e(4) - e(1) * e(3), (2,): -e(1) * e(4)})
    assert product_equivariant([2, 2], [2, 1], GR24) == expected
    for lam in GR25.basis():
        assert product_equivariant([], lam, GR25) == hat(GR25, {lam: 1})


def test_product_rejects_shapes_outside_the_rectangle():
    with pytest.raises(PartitionError):
        product_equivariant([4], [1], GR25)


@pytest.mark.parametrize("ctx", [GR24, GR25], ids=str)
def test_commutative_and_homogeneous(ctx):
    for a, b in basis_pairs(ctx):
        x = product_equivariant(a, b, ctx)
        assert x == product_equivariant(b, a, ctx)
        for nu, c in x.items():
            assert c.weighted_degrees(ctx.n) == {sum(a) + sum(b) - sum(nu)}


@pytest.mark.parametrize("ctx", [GR24, GR25], ids=str)
def test_associative(ctx):
    basis = ctx.basis()
    one = {p: hat(ctx, {p: 1}) for p in basis}
    for a in basis:
        for b in basis:
            ab = product_equivariant(a, b, ctx)
            for c in basis:
                if not (a <= b <= c):
                    continue
                assert ab * one[c] == one[a] * product_equivariant(b, c, ctx)


def test_reduce_shape_out_of_range_vanishes_past_k_rows():
    assert reduce_shape([1, 1, 1], GR24) == {}
    assert reduce_shape([2, 1], GR24) == {Partition([2, 1]): e(0)}


@pytest.mark.parametrize("ctx", [GR24, GR25, GR36], ids=str)
def test_closed_form_pieri_equals_engine(ctx):
    for lam in ctx.basis():
        assert equivariant_pieri(lam, ctx) == product_equivariant(lam, [1], ctx), lam


def test_pieri_examples():
    assert equivariant_pieri([2, 1], GR24) == hat(GR24, {(2, 2): 1, (2, 1): -e(1), (1, 1): -e(2), (): e(4)})
    assert equivariant_pieri([2, 2], GR24) == hat(GR24, {(2, 2): -e(1), (1, 1): e(3), (1,): e(4)})
    assert equivariant_pieri([1], GR25) == hat(GR25, {(2,): 1, (1, 1): 1})


@pytest.mark.parametrize("ctx", [GR24, GR25], ids=str)
def test_giambelli_rows_equal_columns(ctx):
    for lam in ctx.basis():
        rows = giambelli_rows(lam, ctx)
        assert rows == giambelli_columns(lam, ctx)
        assert rows == hat(ctx, {lam: 1})


def test_tilde_rows():
    assert tilde_sigma_r(1, GR24) == hat(GR24, {(1,): 1, (): e(1)})
    assert not tilde_sigma_r(3, GR24)


def test_prime_class_examples():
    for ctx in (GR24, GR25, GR36):
        assert prime_class([1], ctx) == hat(ctx, {(1,): 1, (): e(1)})
        too_wide = [ctx.n - ctx.k + 1]
        assert not prime_class(too_wide, ctx)


@pytest.mark.parametrize("ctx", [GR24, GR25, GR36], ids=str)
def test_column_identity_for_prime_classes(ctx):
    for r in range(0, ctx.n + 1):
        rhs = ClassExpr.zero(ctx, EQUIVARIANT)
        for i in range(0, r + 1):
            rhs = rhs + prime_class([1] * (r - i), ctx).scale(e(i) * (-1) ** i)
        assert hat_column(r, ctx) == rhs, r


def test_column_identity_needs_alternating_signs():
    # at r = 1 the unsigned sum would give hat-sigma_1 + 2 e_1
    unsigned = prime_class([1], GR24) + ClassExpr.scalar(GR24, EQUIVARIANT, e(1))
    assert unsigned != hat_column(1, GR24)


def test_prime_class_vanishes_without_shortcut():
    # the determinant itself collapses once the first row exceeds n - k
    assert not prime_class([3], GR24, shortcut=False)
    assert not prime_class([3, 1], GR24, shortcut=False)


def test_inv_star_basis_map():
    x = hat(GR25, {(2, 1): 1})
    assert inv_star(x) == prime_class([2, 1], GR35)
    assert inv_star(hat(GR25, {(1,): e(2)})) == prime_class([1], GR35).scale(e(2))
    assert inv_star(hat(GR25, {(): e(3)})) == hat(GR35, {(): -e(3)})


def test_inv_star_matches_fixed_point_data():
    # V -> V^perp swaps the zero and one positions of a fixed point; the
    # restriction of the image there is the original restriction with t -> -t
    from grasschub.localization import restrict_expr
    from grasschub.polyring import T, VarSubstitution, substitute, t
    neg = VarSubstitution({(T, i): -t(i) for i in range(1, 6)})
    for lam in GR25.basis():
        src = restrict_expr(hat(GR25, {lam: 1}))
        dst = restrict_expr(inv_star(hat(GR25, {lam: 1})))
        for bits, val in src.values.items():
            flipped = "".join("1" if ch == "0" else "0" for ch in bits)
            assert dst[flipped] == substitute(val, neg), (lam, bits)


def test_inv_star_is_multiplicative():
    small = [p for p in GR25.basis() if sum(p) <= 3]
    for a, b in basis_pairs(GR25):
        if a not in small or b not in small:
            continue
        lhs = inv_star(product_equivariant(a, b, GR25))
        rhs = inv_star(hat(GR25, {a: 1})) * inv_star(hat(GR25, {b: 1}))
        assert lhs == rhs, (a, b)


def test_products_pass_the_localization_oracle():
    for a, b in basis_pairs(GR24):
        assert verify_product_by_localization(a, b, product_equivariant(a, b, GR24))
