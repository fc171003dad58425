"""Sanity checks on the oracle itself, against known facts."""

import classical


def test_representatives():
    rings = classical.commutative_unital_rings()
    assert [r.n for r in rings] == [1, 2, 3, 4, 4, 4, 4]
    for r in rings:
        assert classical.is_ring(r, range(r.n)), r.name


def test_fields_and_domains():
    by = {r.name: r for r in classical.commutative_unital_rings()}
    fields = sorted(n for n, r in by.items() if classical.is_field(r, range(r.n)))
    assert fields == ["F4", "Z2", "Z3"]
    domains = sorted(n for n, r in by.items() if classical.is_integral_domain(r, range(r.n)))
    assert domains == fields


def test_prime_ideals_of_z4():
    z4 = classical.zmod(4)
    R = list(range(4))
    assert classical.is_prime_ideal(z4, R, [0, 2])
    assert not classical.is_prime_ideal(z4, R, [0])
    assert not classical.is_prime_ideal(z4, R, R)
    assert classical.is_prime_ideal(z4, R, R, proper=False)


def test_nilpotent_quotient_has_one_prime():
    r = classical.f2_poly_quotient("D", (0, 0))
    R = list(range(4))
    primes = [I for I in ([0], [0, 2], [0, 1, 2, 3]) if classical.is_prime_ideal(r, R, I)]
    assert primes == [[0, 2]]
