"""Monte Carlo recovery-rate estimation."""

import numpy as np
import pytest

from pwe.bounds import q_function
from pwe.codes import codewords_of_weight, get_code
from pwe.decoders import DecoderKind
from pwe.estimator import (
    ExactUniformSampler,
    ImpulseSampler,
    SamplerError,
    beta_from_mu,
    estimate_pwe,
    estimate_recovery,
    interval_from_stats,
    recovery_rate_once,
    sample_weight_w,
)
from pwe.gf2 import BitWord
from pwe.harvest import HarvestConfig, WeightClassList


def full_list(code, w):
    lst = WeightClassList(code, w)
    for v in codewords_of_weight(code, w):
        lst.add(BitWord(code.n, v))
    return lst


def partial_list(code, w, size, seed):
    values = codewords_of_weight(code, w)
    rng = np.random.default_rng(seed)
    chosen = rng.choice(len(values), size=size, replace=False)
    lst = WeightClassList(code, w)
    for i in chosen:
        lst.add(BitWord(code.n, values[int(i)]))
    return lst


def test_beta_inverts_q_function():
    for mu in (0.9, 0.98, 0.99, 0.9999):
        beta = beta_from_mu(mu)
        assert q_function(beta) == pytest.approx((1 - mu) / 2, abs=1e-6)
    with pytest.raises(ValueError):
        beta_from_mu(0.4)
    with pytest.raises(ValueError):
        beta_from_mu(1.0)


def test_exact_sampler_covers_the_class():
    code = get_code("hamming-7-4")
    sampler = ExactUniformSampler(code)
    rng = np.random.default_rng(61)
    seen = {sample_weight_w(sampler, code, 3, rng).value for _ in range(300)}
    assert seen == set(codewords_of_weight(code, 3))
    with pytest.raises(SamplerError):
        sampler.draw(5, rng)  # Hamming(7,4) has no weight-5 words


def test_recovery_rate_bounds_and_quantization():
    code = get_code("hamming-7-4")
    sampler = ExactUniformSampler(code)
    lst = partial_list(code, 3, 3, seed=62)
    for M in (1, 5, 10):
        r = recovery_rate_once(lst, sampler, M, np.random.default_rng([62, M]))
        assert 0 < r <= 1
        assert (M / r) == round(M / r)  # rate is M over an integer draw count
    with pytest.raises(ValueError):
        recovery_rate_once(lst, sampler, 0, np.random.default_rng(0))
    with pytest.raises(ValueError):
        recovery_rate_once(WeightClassList(code, 3), sampler, 1,
                           np.random.default_rng(0))


def test_complete_list_yields_complete_estimate():
    code = get_code("hamming-7-4")
    est = estimate_recovery(full_list(code, 3), ExactUniformSampler(code),
                            M=10, q=20, mu=0.99, rng=np.random.default_rng(63))
    assert est.complete
    assert est.r_bar == 1.0 and est.sigma == 0.0
    assert est.count_estimate == 7
    assert est.count_interval == (7, 7)


def test_estimate_invariants():
    code = get_code("golay-24-12")
    est = estimate_recovery(partial_list(code, 8, 400, seed=64),
                            ExactUniformSampler(code),
                            M=10, q=50, mu=0.99, rng=np.random.default_rng(64))
    assert 0 < est.r_interval[0] <= est.r_bar <= est.r_interval[1] <= 1
    assert est.count_interval[0] <= est.count_estimate <= est.count_interval[1]
    assert not est.complete
    with pytest.raises(ValueError):
        estimate_recovery(full_list(code, 8), ExactUniformSampler(code),
                          M=10, q=1, mu=0.99, rng=np.random.default_rng(0))


def test_scale_property():
    # Doubling the known list roughly doubles the mean recovery rate.
    code = get_code("golay-24-12")
    sampler = ExactUniformSampler(code)

    def mean_rate(size):
        rates = []
        for rep in range(30):
            lst = partial_list(code, 8, size, seed=[65, size, rep])
            rates.append(recovery_rate_once(lst, sampler, 10,
                                            np.random.default_rng([66, size, rep])))
        return sum(rates) / len(rates)

    r1, r2 = mean_rate(40), mean_rate(80)
    assert r2 / r1 == pytest.approx(2.0, rel=0.2)


def test_interval_golden_values():
    # Fixed statistics with the tabulated rounded quantile beta = 2.57.
    e27 = interval_from_stats(10000, 0.26045736, 0.086847, 100, beta=2.57)
    assert abs(e27.count_interval[0] - 35364) <= 1
    assert abs(e27.count_interval[1] - 41993) <= 1
    assert e27.count_estimate == 38394
    e28 = interval_from_stats(10000, 0.06536888, 0.023571, 100, beta=2.57)
    assert abs(e28.count_estimate - 152978) <= 1
    e18 = interval_from_stats(232, 0.748731, 0.169188, 101, beta=3.89)
    assert abs(e18.count_estimate - 309) <= 1
    assert abs(e18.count_interval[0] - 284) <= 1
    assert abs(e18.count_interval[1] - 339) <= 1


def test_estimate_pwe_orders_entries_and_reports_failures():
    code = get_code("hamming-7-4")
    lists = {4: full_list(code, 4), 3: partial_list(code, 3, 3, seed=67)}
    pwe = estimate_pwe(code, lists, ExactUniformSampler(code), M=5, q=10,
                       mu=0.99, rng=np.random.default_rng(67))
    assert [e.w for e in pwe.entries] == [3, 4]
    assert pwe.radius == 2
    assert pwe.failures == ()
    assert pwe.counts()[4] == 7
    with pytest.raises(ValueError):
        estimate_pwe(code, {}, ExactUniformSampler(code), M=5, q=10, mu=0.99,
                     rng=np.random.default_rng(0))


def test_impulse_sampler_draws_requested_weight():
    code = get_code("golay-24-12")
    cfg = HarvestConfig(decoder=DecoderKind("mld"), trials=0, seed=0)
    sampler = ImpulseSampler(code, cfg, budget=2000)
    rng = np.random.default_rng(68)
    for _ in range(5):
        word = sample_weight_w(sampler, code, 8, rng)
        assert word.weight() == 8
    with pytest.raises(SamplerError):
        ImpulseSampler(code, cfg, budget=3).draw(23, rng)


def test_sampler_code_binding():
    code = get_code("hamming-7-4")
    other = get_code("golay-24-12")
    sampler = ExactUniformSampler(code)
    with pytest.raises(ValueError):
        sample_weight_w(sampler, other, 8, np.random.default_rng(0))
