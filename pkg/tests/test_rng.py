from hilbline.rng import INCREMENT, MULTIPLIER, Lcg64


def test_first_draws_from_zero_seed():
    r = Lcg64(0)
    assert r.next32() == INCREMENT >> 32
    state = (MULTIPLIER * INCREMENT + INCREMENT) % 2 ** 64
    assert r.next32() == state >> 32


def test_same_seed_same_stream():
    a, b = Lcg64(42), Lcg64(42)
    assert [a.between(-5, 5) for _ in range(50)] == [b.between(-5, 5) for _ in range(50)]
    assert all(0 <= Lcg64(s).below(7) < 7 for s in range(100))
