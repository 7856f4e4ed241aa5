import pytest

from monogen.errors import BudgetExceeded, NotIntegerBase
from monogen.algebra import split_algebra
from monogen.indexform import check_monogenerator, index_form
from monogen.localmono import (
    classify,
    common_index_divisors,
    geometric_point_verdict,
    is_monogenic_at_prime,
    local_obstruction_primes,
    value_set_mod_p,
)
from conftest import dedekind_order, gaussian_order, random_algebra


class TestAtPrime:
    def test_dedekind_fails_at_2(self):
        v = is_monogenic_at_prime(dedekind_order(), 2)
        assert not v.monogenic_at_p and v.witness is None

    def test_dedekind_passes_at_3(self):
        v = is_monogenic_at_prime(dedekind_order(), 3)
        assert v.monogenic_at_p
        # first lexicographic witness over (x2, x3): the reduced form
        # 2b^3 + bc^2 + 2c^3 is already nonzero at (b, c) = (0, 1)
        assert v.witness == (0, 0, 1)

    def test_cbrt175_passes_at_7(self, corpus):
        alg = next(a for n, a, _ in corpus if n == "cbrt175")
        assert is_monogenic_at_prime(alg, 7).monogenic_at_p

    def test_witness_reevaluates_nonzero(self, rng):
        for _ in range(20):
            alg = random_algebra(rng)
            form = index_form(alg)
            for p in (2, 3):
                v = is_monogenic_at_prime(alg, p)
                if v.monogenic_at_p:
                    assert form.evaluate(v.witness) % p != 0

    def test_budget_exceeded(self):
        with pytest.raises(BudgetExceeded):
            is_monogenic_at_prime(dedekind_order(), 5, cap=3)

    def test_needs_base_z(self):
        with pytest.raises(NotIntegerBase):
            is_monogenic_at_prime(dedekind_order().reduce_mod_p(3), 3)


class TestCommonIndexDivisors:
    def test_dedekind(self):
        assert common_index_divisors(dedekind_order()) == [2]

    def test_cbrt175_empty(self, corpus):
        alg = next(a for n, a, _ in corpus if n == "cbrt175")
        assert common_index_divisors(alg) == []

    def test_rank_two_always_empty(self, rng):
        for _ in range(10):
            alg = random_algebra(rng, max_rank=2)
            assert common_index_divisors(alg) == []

    def test_primes_at_least_rank_never_fail(self, corpus_z):
        # empirical check of the p < n cutoff on the corpus
        for name, alg, _ in corpus_z:
            n = alg.rank
            form = index_form(alg)
            for p in range(n, n + 11):
                from monogen.exactring import is_prime

                if is_prime(p):
                    assert is_monogenic_at_prime(alg, p, form=form).monogenic_at_p, (
                        name,
                        p,
                    )


class TestGeometric:
    def test_biquadratic_fails_over_2(self, corpus):
        alg = next(a for n, a, _ in corpus if n == "sqrt2_sqrt3")
        verdict = geometric_point_verdict(alg)
        assert not verdict["monogenic_over_geometric_points"]
        assert verdict["vanishing_fiber_primes"] == {2}

    def test_dedekind_passes(self):
        verdict = geometric_point_verdict(dedekind_order())
        assert verdict["monogenic_over_geometric_points"]
        assert verdict["vanishing_fiber_primes"] == set()

    def test_split_cube_passes(self):
        verdict = geometric_point_verdict(split_algebra(3))
        assert verdict["monogenic_over_geometric_points"]


class TestValueSets:
    def test_cbrt175_mod_7(self, corpus):
        alg = next(a for n, a, _ in corpus if n == "cbrt175")
        assert value_set_mod_p(index_form(alg), 7) == {0, 2, 5}

    def test_cbrt175_obstruction_detected(self, corpus):
        alg = next(a for n, a, _ in corpus if n == "cbrt175")
        assert 7 in local_obstruction_primes(index_form(alg))

    def test_gaussian_no_obstruction(self):
        assert local_obstruction_primes(index_form(gaussian_order())) == []


class TestClassify:
    def test_dedekind_report(self):
        r = classify(dedekind_order(), 10)
        assert r.global_status == "NotMonogenic"
        assert r.reason == "common index divisor 2"
        assert not r.zariski_local
        assert r.geometric
        assert all(c["agree"] for c in r.artin_crosscheck)

    def test_gaussian_report(self):
        r = classify(gaussian_order(), 2)
        assert r.global_status == "Monogenic"
        assert r.zariski_local and r.geometric
        assert check_monogenerator(gaussian_order(), r.witness)["is_monogenerator"]

    def test_cbrt175_unknown_with_obstruction(self, corpus):
        alg = next(a for n, a, _ in corpus if n == "cbrt175")
        r = classify(alg, 20)
        assert r.global_status == "Unknown"
        assert r.zariski_local and r.geometric
        assert any("local obstruction: values mod 7 never units" in n for n in r.notes)
        assert any("not twisted monogenic" in n for n in r.notes)

    def test_implications_on_corpus(self, corpus_z):
        for name, alg, _ in corpus_z:
            r = classify(alg, 3)
            if r.global_status == "Monogenic":
                assert r.zariski_local, name
            if r.zariski_local:
                assert r.geometric, name

    def test_implications_random(self, rng):
        for _ in range(100):
            alg = random_algebra(rng)
            r = classify(alg, 1, artin_bound=3, obstruction_bound=5)
            if r.global_status == "Monogenic":
                assert r.zariski_local
            if r.zariski_local:
                assert r.geometric
            if r.witness is not None:
                assert check_monogenerator(alg, r.witness)["is_monogenerator"]

    def test_report_json_shape(self):
        d = classify(dedekind_order(), 5).to_json()
        for key in (
            "global",
            "zariski_local",
            "common_index_divisors",
            "geometric",
            "vanishing_fibers",
            "primes",
            "artin_crosscheck",
            "notes",
        ):
            assert key in d
        assert d["global"]["status"] == "NotMonogenic"
