import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from approxring import (
    DescriptiveSpace,
    RingContext,
    elementwise_prime_criterion,
    from_rows,
    ideal_product,
    is_approx_ideal,
    is_approx_integral_domain,
    is_approx_prime_ideal,
    is_approx_prime_ring,
    is_mult_closed,
    is_principal_prime,
    principal_ideal,
)
from approxring.errors import ContainmentError, DegenerateInputError, PreconditionError
from approxring.ideals import additive_inverses, product_sums, zero_ideal


def test_prime_ideal_in_r1(image16):
    rep = is_approx_prime_ideal(image16.subset("I_prime"), image16.context("R1"))
    assert rep.verdict


def test_not_prime_in_r2(image16):
    rep = is_approx_prime_ideal(image16.subset("I_notprime"), image16.context("R2"))
    assert not rep.verdict
    assert ("x00", "x11", "x00") in rep.witnesses("prime")
    assert rep.axiom("prime").count == 4


def test_ideal_rows(image16):
    rep = is_approx_ideal(image16.subset("I_notprime"), image16.context("R2"))
    assert [a.tag for a in rep.axioms] == ["sum", "negation", "left-absorb", "right-absorb"]
    assert rep.verdict


def test_ideal_errors(image16):
    R1 = image16.context("R1")
    with pytest.raises(ContainmentError):
        is_approx_ideal(image16.space.subset(["x00"]), R1)
    with pytest.raises(DegenerateInputError):
        is_approx_ideal(image16.space.subset([]), R1)
    with pytest.raises(ValueError):
        is_approx_ideal(image16.subset("I_prime"), R1, side="diagonal")


def test_prime_needs_ideal(image16):
    R2 = image16.context("R2")
    not_ideal = image16.space.subset(["x11"])
    assert not is_approx_ideal(not_ideal, R2).verdict
    with pytest.raises(PreconditionError) as exc:
        is_approx_prime_ideal(not_ideal, R2)
    assert exc.value.report is not None


def test_strict_properness(f2):
    F = f2.context("F2")
    whole = f2.subset("F")
    assert is_approx_prime_ideal(whole, F).verdict
    rep = is_approx_prime_ideal(whole, F, strict=True)
    assert rep.failed() == ["proper"]


def test_additive_inverses(image16):
    R1 = image16.context("R1")
    X = image16.space
    assert [X.labels[y] for y in additive_inverses(X.index_of("x01"), R1)] == ["x01"]


def test_principal_ideal(image16):
    R2 = image16.context("R2")
    assert principal_ideal("x01", R2).labels == ("x00", "x01")
    with pytest.raises(PreconditionError):
        principal_ideal("x11", R2)
    rep = is_principal_prime("x01", R2)
    assert rep.verdict


def test_principal_ideal_outside_r(image16):
    with pytest.raises(ContainmentError):
        principal_ideal("x22", image16.context("R2"))


def test_ideal_product(image16):
    R2 = image16.context("R2")
    I = image16.subset("I_notprime")
    assert ideal_product(I, I, R2).labels == ("x00", "x01", "x10", "x11")
    assert product_sums(I, I, R2) >= ideal_product(I, I, R2).members


def test_mult_closed(image16):
    R1 = image16.context("R1")
    X = image16.space
    assert is_mult_closed(X.subset(["x10"]), R1).verdict
    rep = is_mult_closed(X.subset(["x01", "x10"]), R1)
    assert rep.verdict  # x01.x10 = x00 lands in the upper approximation
    R2 = image16.context("R2")
    assert is_mult_closed(X.subset(["x00", "x11"]), R2).failed() == ["zero-free"]


def test_integral_domain(image16, f2):
    rep = is_approx_integral_domain(image16.context("R1"))
    assert not rep.verdict
    assert ("x01", "x10") in rep.witnesses("no-zero-divisors")
    assert rep.info["zero_in_R"] is False
    assert is_approx_integral_domain(f2.context("F2")).verdict


def test_domain_noncommutative():
    X = DescriptiveSpace("ab", [(0,), (1,)])
    add = from_rows(X, [["a", "b"], ["b", "a"]])
    left = from_rows(X, [["a", "a"], ["b", "b"]])  # x.y = x
    with pytest.raises(PreconditionError):
        is_approx_integral_domain(RingContext(X.subset("ab"), add, left))


def test_prime_ring(image16, f2):
    R1 = image16.context("R1")
    rep = is_approx_prime_ring(R1)
    assert not rep.verdict
    assert "zero lies outside R: (0) has an empty carrier" in rep.notes
    assert rep.info["literal_reading"] is True
    assert is_approx_prime_ring(f2.context("F2")).verdict
    assert zero_ideal(R1).members == frozenset()


def test_zero_ring_is_not_prime():
    X = DescriptiveSpace("a", [(0,)])
    t = from_rows(X, [["a"]])
    rep = is_approx_prime_ring(RingContext(X.subset("a"), t, t))
    assert rep.failed() == ["non-zero-ring"]
    with pytest.raises(DegenerateInputError):
        elementwise_prime_criterion(RingContext(X.subset("a"), t, t))


# -- properties -------------------------------------------------------------------

def _zmod_ctx(n, probe):
    X = DescriptiveSpace([str(i) for i in range(n)], [(c,) for c in probe])
    add = from_rows(X, [[str((a + b) % n) for b in range(n)] for a in range(n)])
    mul = from_rows(X, [[str((a * b) % n) for b in range(n)] for a in range(n)])
    return RingContext(X.full(), add, mul)


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 6).flatmap(lambda n: st.tuples(st.just(n), st.lists(st.integers(0, 2), min_size=n, max_size=n),
                                                     st.frozensets(st.integers(0, n - 1), min_size=1))))
def test_prime_implies_ideal_and_witnesses_are_real(case):
    n, probe, I = case
    ctx = _zmod_ctx(n, probe)
    S = ctx.space.subset(I)
    try:
        rep = is_approx_prime_ideal(S, ctx)
    except PreconditionError:
        assert not is_approx_ideal(S, ctx).verdict
        return
    up = S.upper().members
    X = ctx.space
    for a, b, ab in rep.witnesses("prime"):
        ia, ib = X.index_of(a), X.index_of(b)
        assert ctx.mul(ia, ib) == X.index_of(ab)
        assert X.index_of(ab) in up and ia not in I and ib not in I


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 8), st.data())
def test_classical_ideal_product_inside_intersection(n, data):
    ctx = _zmod_ctx(n, list(range(n)))
    ideals = [ctx.space.subset(range(0, n, d)) for d in range(1, n + 1) if n % d == 0]
    assert all(is_approx_ideal(I, ctx).verdict for I in ideals)
    A, B = data.draw(st.sampled_from(ideals)), data.draw(st.sampled_from(ideals))
    AB = ideal_product(A, B, ctx)
    assert AB.members <= A.members & B.members
    assert is_approx_ideal(AB, ctx).verdict
