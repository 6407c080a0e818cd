import pytest
from hypothesis import given
from hypothesis import strategies as st

from grasschub import ClassExpr, EQUIVARIANT, QUANTUM, GrContext, Partition, e, q
from grasschub.equivariant import hat_sigma_r_reduced, product_equivariant
from grasschub.quantum import (
    DegreeMismatch, f_map, gw_invariant, product_classical, product_quantum, product_quantum_rimhook,
    qinv, quantum_giambelli, quantum_lr, quantum_lr_detail, quantum_pieri_column, quantum_pieri_row,
    quantum_sigma_r, reduce_via_forgetful, rim_hook_reduce, rim_hook_reduce_all_orders,
)

from conftest import GR24, GR25, GR26, GR36, basis_pairs

lrcalc = pytest.importorskip("lrcalc")

GR510 = GrContext(5, 10)


def qexpr(ctx, terms):
    return ClassExpr(ctx, QUANTUM, {Partition(p): c for p, c in terms.items()})


def lrcalc_quantum(lam, mu, ctx):
    raw = lrcalc.mult_quantum(list(lam), list(mu), ctx.k, ctx.n - ctx.k, degrees=True)
    out = {}
    for (nu, d), c in raw.items():
        out[Partition(nu)] = out.get(Partition(nu), 0) + c * q ** d
    return ClassExpr(ctx, QUANTUM, out)


def test_f_map_examples():
    for ctx in (GR24, GR25, GR36):
        for r in range(1, ctx.n - ctx.k + 1):
            assert f_map(hat_sigma_r_reduced(r, ctx)) == qexpr(ctx, {(r,): 1})
        assert f_map(hat_sigma_r_reduced(ctx.n, ctx)) == qexpr(ctx, {(): q * (-1) ** (ctx.k + 1)})
    assert not f_map(ClassExpr(GR25, EQUIVARIANT, {(1, 1): e(3)}))


def test_forgetful_map_of_long_rows():
    # f(hat-sigma_{l n + p}) = (-1)^{l(k+1)} q^l sigma_p, and 0 for n-k < p < n
    for ctx in (GR24, GR25, GR36, GR26):
        for r in range(0, 3 * ctx.n):
            assert f_map(hat_sigma_r_reduced(r, ctx)) == quantum_sigma_r(r, ctx), (ctx, r)


def test_product_examples():
    assert product_quantum([2, 1], [2], GR25) == qexpr(GR25, {(3, 2): 1, (): q})
    assert product_quantum([5, 4, 4, 2, 2], [3, 2, 1], GR510).coeff([2, 1]) == q ** 2
    classical = product_quantum([1], [1], GR24).map_coeffs(lambda c: c.coefficient_of_q(0))
    assert classical == qexpr(GR24, {(2,): 1, (1, 1): 1})


@pytest.mark.parametrize("ctx", [GR24, GR25, GR36, GR26], ids=str)
def test_products_match_lrcalc(ctx):
    for a, b in basis_pairs(ctx):
        assert product_quantum(a, b, ctx) == lrcalc_quantum(a, b, ctx), (a, b)


@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_random_products_match_lrcalc(k, cols, data):
    ctx = GrContext(k, k + cols)
    basis = ctx.basis()
    a = data.draw(st.sampled_from(basis))
    b = data.draw(st.sampled_from(basis))
    assert product_quantum(a, b, ctx) == lrcalc_quantum(a, b, ctx)


@pytest.mark.parametrize("ctx", [GR24, GR25, GR36], ids=str)
def test_specialised_engine_equals_forgetful_image(ctx):
    for a, b in basis_pairs(ctx):
        assert product_quantum(a, b, ctx) == f_map(product_equivariant(a, b, ctx))


@pytest.mark.parametrize("ctx", [GR24, GR25, GR36], ids=str)
def test_rim_hook_pipeline_equals_engine(ctx):
    for a, b in basis_pairs(ctx):
        assert product_quantum_rimhook(a, b, ctx) == f_map(product_equivariant(a, b, ctx))


def test_classical_product_is_q_free_part():
    for a, b in basis_pairs(GR25):
        x = product_classical(a, b, GR25)
        y = product_quantum(a, b, GR25).map_coeffs(lambda c: c.coefficient_of_q(0), ring="classical")
        assert x == y


def test_gw_invariants():
    assert gw_invariant([2, 1], [2], [], 1, GR25) == 1
    assert gw_invariant([2, 1], [2], [], 0, GR25) == 0
    assert gw_invariant([2, 1], [2], [1], 1, GR25) == 0
    assert gw_invariant([3, 3, 2, 1], [4, 3, 2, 1], [4, 2, 2, 1], 1, GR510) == 6


def test_degree_bookkeeping():
    for ctx in (GR25, GR36):
        for a, b in basis_pairs(ctx):
            for nu, c in product_quantum(a, b, ctx).items():
                for mono, _ in c.items():
                    d = dict(mono).get((2, 0), 0)
                    assert sum(nu) + d * ctx.n == sum(a) + sum(b)


def test_column_pieri_examples():
    expected = qexpr(GR510, {(5, 5, 5, 4, 3): 1, (5, 5, 4, 4, 4): 1,
                             (4, 3, 3, 2): q, (4, 4, 2, 2): q, (5, 3, 2, 2): q})
    assert quantum_pieri_column([5, 5, 4, 3, 3], 2, GR510) == expected
    assert quantum_pieri_column([2, 2], 1, GR24) == qexpr(GR24, {(1,): q})
    assert quantum_pieri_column([1], 1, GR25) == qexpr(GR25, {(2,): 1, (1, 1): 1})
    with pytest.raises(ValueError):
        quantum_pieri_column([1], 3, GR24)


def test_row_pieri_examples():
    assert quantum_pieri_row([2, 2], 1, GR24) == qexpr(GR24, {(1,): q})
    assert quantum_pieri_row([2, 1], 2, GR24) == qexpr(GR24, {(1,): q})
    assert quantum_pieri_row([2], 1, GR25) == qexpr(GR25, {(3,): 1, (2, 1): 1})
    with pytest.raises(ValueError):
        quantum_pieri_row([1], 0, GR24)


@pytest.mark.parametrize("ctx", [GR24, GR25, GR36, GR26], ids=str)
def test_pieri_rules_equal_engine(ctx):
    for lam in ctx.basis():
        for r in range(1, ctx.k + 1):
            assert quantum_pieri_column(lam, r, ctx) == product_quantum(lam, [1] * r, ctx)
        for r in range(1, ctx.n - ctx.k + 1):
            assert quantum_pieri_row(lam, r, ctx) == product_quantum(lam, [r], ctx)


def test_rim_hook_examples():
    assert rim_hook_reduce([4, 1], GR25) == qexpr(GR25, {(): q})
    assert not rim_hook_reduce([5], GR26)
    assert rim_hook_reduce_all_orders([4, 4], GR24) == {qexpr(GR24, {(): q ** 2})}
    assert not rim_hook_reduce([1, 1, 1], GR24)


def shapes_up_to(size, rows):
    from grasschub.partitions import partitions_of
    for s in range(size + 1):
        yield from partitions_of(s, max_len=rows)


@pytest.mark.parametrize("ctx", [GR24, GR26], ids=str)
def test_hook_choice_independence(ctx):
    for lam in shapes_up_to(12, ctx.k):
        results = rim_hook_reduce_all_orders(lam, ctx)
        assert len(results) == 1, lam
        (only,) = results
        assert only == rim_hook_reduce(lam, ctx)
        assert only == reduce_via_forgetful(lam, ctx)
        assert only == quantum_giambelli(lam, ctx)


def test_quantum_lr_examples():
    res = quantum_lr_detail([5, 4, 4, 2, 2], [3, 2, 1], [2, 1], GR510)
    assert res.value == q ** 2
    assert [(p, c) for p, _, c, _ in res.pi] == [(Partition([7, 7, 4, 3, 2]), 1)]
    res = quantum_lr_detail([3, 3, 2, 1], [4, 3, 2, 1], [4, 2, 2, 1], GrContext(4, 10))
    assert res.value == 0 and res.pi == ()
    res = quantum_lr_detail([3, 3, 2, 1], [4, 3, 2, 1], [4, 2, 2, 1], GR510)
    assert res.value == 6 * q
    assert [(p, c) for p, _, c, _ in res.pi] == [(Partition([6, 5, 3, 3, 2]), 6)]
    with pytest.raises(DegreeMismatch):
        quantum_lr([1], [1], [1], GR24)


@pytest.mark.parametrize("ctx", [GR24, GR25, GR36], ids=str)
def test_quantum_lr_agrees_with_gw(ctx):
    for a, b in basis_pairs(ctx):
        for nu in ctx.basis():
            diff = sum(a) + sum(b) - sum(nu)
            if diff < 0 or diff % ctx.n:
                continue
            d = diff // ctx.n
            assert quantum_lr(a, b, nu, ctx) == gw_invariant(a, b, nu, d, ctx) * q ** d, (a, b, nu)


def test_qinv():
    x = qexpr(GR25, {(2, 1): 1})
    assert qinv(x) == qexpr(GrContext(3, 5), {(2, 1): 1})
    assert qinv(qexpr(GR25, {(): q})) == qexpr(GrContext(3, 5), {(): q})
    dual = GrContext(3, 5)
    lhs = qinv(product_quantum([2, 2], [2, 1], GR25))
    assert lhs == product_quantum([2, 2], [2, 1], dual)
    for a, b in basis_pairs(GR25):
        assert qinv(product_quantum(a, b, GR25)) == product_quantum(a.conjugate(), b.conjugate(), dual)
        x = product_quantum(a, b, GR25)
        assert qinv(qinv(x)) == x


@pytest.mark.parametrize("ctx", [GR25, GR36], ids=str)
def test_no_deformation_criteria(ctx):
    for a, b in basis_pairs(ctx):
        if a.part(0) + b.part(0) <= ctx.n - ctx.k or len(a) + len(b) <= ctx.k:
            assert not product_quantum(a, b, ctx).has_q(), (a, b)
