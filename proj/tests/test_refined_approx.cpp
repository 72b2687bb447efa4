#include <doctest.h>

#include <cmath>

#include "tailsum/errors.hpp"
#include "tailsum/refined_approx.hpp"
#include "tailsum/study_setup.hpp"

using namespace tailsum;

namespace {
TailParams pareto_params(double xi) { return TailParams{xi, 1.0, xi, 1.0, 0.0}; }
}  // namespace

TEST_CASE("variant names round trip") {
    for (Variant v :
         {Variant::FiniteVariance, Variant::Unified, Variant::SimplifiedSigmaTau,
          Variant::SimplifiedNoIntegral, Variant::Shifted, Variant::TwoSided,
          Variant::NormalBaseline, Variant::StableBaseline})
        CHECK(variant_from_name(variant_name(v)) == v);
    CHECK(variant_from_name("refined-shifted") == Variant::Shifted);
    CHECK_THROWS_AS(variant_from_name("bogus"), std::invalid_argument);
}

TEST_CASE("comparison scaling") {
    CHECK(scaling_a_n(100.0, 0.4) == doctest::Approx(0.1).epsilon(1e-12));
    const double e2 = std::exp(2.0);
    CHECK(scaling_a_n(e2, 0.5) ==
          doctest::Approx(1.0 / std::sqrt(e2 * 2.0)).epsilon(1e-12));
    CHECK(scaling_a_n(10.0, 0.8) == doctest::Approx(std::pow(10.0, -0.8)).epsilon(1e-12));
    CHECK_THROWS_AS(scaling_a_n(1.0, 0.4), std::domain_error);
}

TEST_CASE("finite-variance draw: exact values and clamp branch") {
    ApproxConfig cfg{100, 1, Variant::FiniteVariance, false};
    const TailParams p = pareto_params(0.4);
    const double s0 = 20.0 / 9.0;
    GammaLadder unit{{1.0}};
    const double evt = std::pow(100.0, 0.4) * (1.0 - 1.0 / 0.6);
    auto d0 = draw_finite_variance(cfg, p, s0, unit, 0.0);
    CHECK(d0.value == doctest::Approx(evt).epsilon(1e-10));
    CHECK(d0.value == doctest::Approx(-4.20638).epsilon(1e-5));
    CHECK_FALSE(d0.clamped);

    auto d1 = draw_finite_variance(cfg, p, s0, unit, 1.0);
    const double sd = std::sqrt(s0 - 5.0 * std::pow(0.01, 0.2));
    CHECK(sd == doctest::Approx(0.481339).epsilon(1e-5));
    CHECK(d1.value == doctest::Approx(evt + 10.0 * sd).epsilon(1e-10));
    CHECK(d1.value == doctest::Approx(0.606999).epsilon(1e-4));

    GammaLadder fifty{{50.0}};
    auto dc = draw_finite_variance(cfg, p, s0, fifty, 1.0);
    CHECK(dc.clamped);
    const double expect =
        std::pow(100.0, 0.4) *
        (std::pow(50.0, -0.4) - std::pow(50.0, 0.6) / 0.6);
    CHECK(dc.value == doctest::Approx(expect).epsilon(1e-10));

    CHECK_THROWS_AS(
        draw_finite_variance(cfg, pareto_params(0.6), s0, unit, 0.0),
        unsupported_variant);
    GammaLadder wrong{{1.0, 2.0}};
    CHECK_THROWS_AS(draw_finite_variance(cfg, p, s0, wrong, 0.0), std::domain_error);
}

TEST_CASE("shifted with kappa=0 reduces to unified") {
    ApproxConfig cfg{1000, 7, Variant::Unified, false};
    const TailParams p = pareto_params(0.45);
    RngStream s(4);
    auto ladder = sample_ladder(7, s);
    const double s_un = 1.9;
    for (double z : {-1.3, 0.0, 0.8}) {
        auto u = draw_unified(cfg, p, s_un, ladder, z);
        auto sh = draw_shifted(cfg, p, ShiftedSigma::TailIntegral, {}, s_un, ladder, z);
        CHECK(u.value == sh.value);  // bit-for-bit
        CHECK(u.clamped == sh.clamped);
    }
}

TEST_CASE("two-sided draw: symmetry and degenerate left tail") {
    const TailParams p = pareto_params(0.45);
    TwoSidedConfig cfg{p, p, 5, 5};
    RngStream s(9);
    auto ladder = sample_ladder(5, s);
    // identical ladders on both sides cancel exactly at z = 0
    auto d = draw_two_sided(cfg, 1000, 2.0, ladder, ladder, 0.0);
    CHECK(d.value == doctest::Approx(0.0).epsilon(1e-12));

    // omega_L -> 0: right block matches the unified EVT part
    TwoSidedConfig right_only = cfg;
    right_only.left.omega = 1e-14;
    auto ladder_l = sample_ladder(5, s);
    auto both = draw_two_sided(right_only, 1000, 2.0, ladder, ladder_l, 0.0);
    ApproxConfig ucfg{1000, 5, Variant::Unified, false};
    auto uni = draw_unified(ucfg, p, 2.0, ladder, 0.0);
    // compare only the EVT blocks (z = 0 kills the gaussian part)
    CHECK(both.value == doctest::Approx(uni.value).epsilon(1e-8));

    GammaLadder wrong{{1.0}};
    CHECK_THROWS_AS(draw_two_sided(cfg, 1000, 2.0, ladder, wrong, 0.0),
                    std::domain_error);
}

TEST_CASE("baseline draws") {
    auto nb = draw_normal_baseline(100, 4.0, 1.5);
    CHECK(nb.value == doctest::Approx(30.0).epsilon(1e-12));
    CHECK_THROWS_AS(draw_normal_baseline(100, -1.0, 0.0), unsupported_variant);
    RngStream s(2);
    CHECK_THROWS_AS(draw_stable_baseline(100, pareto_params(0.45), 1000, s),
                    unsupported_variant);
    RngStream a(2), b(2);
    CHECK(draw_stable_baseline(100, pareto_params(0.7), 1000, a).value ==
          draw_stable_baseline(100, pareto_params(0.7), 1000, b).value);
}

TEST_CASE("bulk sampler determinism and worker invariance") {
    ApproxConfig cfg{1000, 10, Variant::Unified, true};
    ApproxInputs in;
    in.params = pareto_params(0.45);
    in.sigma_sq_at_un = 2.0;
    auto one = sample_approx(cfg, in, 5000, 42, 0, 1);
    auto eight = sample_approx(cfg, in, 5000, 42, 0, 8);
    CHECK(one.values == eight.values);
    CHECK(one.clamp_count == eight.clamp_count);
    auto other_seed = sample_approx(cfg, in, 5000, 43, 0, 1);
    CHECK(one.values != other_seed.values);
    CHECK_THROWS_AS(sample_approx(cfg, in, 0, 1, 0, 1), std::domain_error);
}

TEST_CASE("bulk sampler validates before sampling") {
    ApproxInputs in;
    in.params = pareto_params(0.7);
    ApproxConfig bad{1000, 10, Variant::FiniteVariance, true};
    CHECK_THROWS_AS(sample_approx(bad, in, 10, 1), unsupported_variant);
    ApproxConfig bad_k{1000, 1000, Variant::Unified, true};
    CHECK_THROWS_AS(sample_approx(bad_k, in, 10, 1), std::domain_error);
    ApproxConfig ts{1000, 10, Variant::TwoSided, true};
    CHECK_THROWS_AS(sample_approx(ts, in, 10, 1), std::invalid_argument);
}

TEST_CASE("scaled finite-variance ensemble is mean zero") {
    ApproxConfig cfg{1000, 10, Variant::FiniteVariance, true};
    ApproxInputs in;
    in.params = pareto_params(0.45);
    in.sigma0_sq = summary(DistributionSpec::centered_pareto(0.45)).sigma0_sq;
    auto r = sample_approx(cfg, in, 200000, 11, 0, 1);
    double sum = 0.0, sq = 0.0;
    for (double v : r.values) {
        sum += v;
        sq += v * v;
    }
    const double mean = sum / static_cast<double>(r.values.size());
    const double se = std::sqrt((sq / r.values.size() - mean * mean) /
                                static_cast<double>(r.values.size()));
    CHECK(std::abs(mean) < 4.0 * se);
}

TEST_CASE("study setup resolves k and inputs per variant") {
    auto spec = DistributionSpec::centered_pareto(0.45);
    StudySetupOptions opt;
    auto sv = make_study_variant(spec, Variant::Shifted, opt);
    // shifted pareto uses the capped delta, so k*(1000) uses alpha*(0.45, 10)
    CHECK(sv.k_for_n(1000) == 77);
    auto in = sv.inputs_for(1000, 77);
    CHECK(in.params.kappa ==
          doctest::Approx(-1.0 / (1.0 - 0.45)).epsilon(1e-12));

    auto nb = make_study_variant(spec, Variant::NormalBaseline, opt);
    CHECK(nb.k_for_n(123456) == 1);

    CHECK_THROWS_AS(
        make_study_variant(DistributionSpec::centered_pareto(0.45),
                           Variant::StableBaseline, opt),
        unsupported_variant);
    CHECK_THROWS_AS(
        make_study_variant(DistributionSpec::student_t(1.8), Variant::Unified, opt),
        unsupported_variant);
}
