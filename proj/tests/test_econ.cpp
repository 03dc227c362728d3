#include <cmath>
#include <random>

#include <doctest.h>

#include "aiecon/econ.hpp"

using namespace aiecon;

namespace {

// 2019-vintage parameter bundles used throughout the suites.
CountryProfile china() {
    CountryProfile p;
    p.name = "china";
    p.population = 7.7e8;
    p.alpha = 0.58625;
    p.capital = 9.96e13;
    p.phi_h = 90.0;
    p.phi_a = 483.0;
    p.human_share = 0.85;
    p.enhancement = {0.55, 0.35, 0.20};
    return p;
}

CountryProfile usa() {
    CountryProfile p;
    p.name = "us";
    p.population = 1.59e8;
    p.alpha = 0.59709;
    p.capital = 6.91e13;
    p.phi_h = 532.0;
    p.phi_a = 688.0;
    p.human_share = 0.85;
    p.enhancement = {0.55, 0.35, 0.20};
    return p;
}

constexpr double kSCn0 = 0.13010847436299786;   // s_cn(0), k=0.38, t0=5
constexpr double kSUs0 = 0.28905049737499605;   // s_us(0), k=0.30, t0=3

}  // namespace

TEST_SUITE("econ") {

TEST_CASE("cobb_douglas matches direct power form on moderate inputs") {
    const double direct = 2.5 * std::pow(1000.0, 0.6) * std::pow(500.0, 0.4);
    CHECK(cobb_douglas(2.5, 1000.0, 0.6, 500.0) ==
          doctest::Approx(direct).epsilon(1e-14));
    // Log-space evaluation stays finite where naive powers overflow.
    CHECK(std::isfinite(cobb_douglas(1.0, 1e300, 0.99, 1e300)));
}

TEST_CASE("cobb_douglas treats zero factors as zero output") {
    CHECK(cobb_douglas(5.0, 0.0, 0.6, 1e13) == 0.0);
    CHECK(cobb_douglas(5.0, 1e8, 0.6, 0.0) == 0.0);
    CHECK(cobb_douglas(0.0, 1e8, 0.6, 1e13) == 0.0);
}

TEST_CASE("model1 reproduces the calibrated 2019 baselines") {
    CHECK(model1_output(7.7e8, 9.96e13, 0.58625, 90.0) ==
          doctest::Approx(9030826492530.5).epsilon(1e-12));
    CHECK(model1_output(1.59e8, 6.91e13, 0.59709, 532.0) ==
          doctest::Approx(15810585071654.783).epsilon(1e-12));
}

TEST_CASE("model1 is homogeneous of degree one") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> un(1e5, 1e9), ur(1e10, 1e14),
        ua(0.1, 0.9), uc(0.5, 10.0);
    for (int i = 0; i < 100; ++i) {
        const double n = un(rng), r = ur(rng), a = ua(rng), c = uc(rng);
        const double base = model1_output(n, r, a, 75.0);
        CHECK(model1_output(c * n, c * r, a, 75.0) ==
              doctest::Approx(c * base).epsilon(1e-12));
    }
}

TEST_CASE("model1 rejects out-of-domain arguments") {
    CHECK_THROWS_AS(model1_output(0.0, 1e13, 0.5, 90.0), DomainError);
    CHECK_THROWS_AS(model1_output(-1.0, 1e13, 0.5, 90.0), DomainError);
    CHECK_THROWS_AS(model1_output(1e8, 0.0, 0.5, 90.0), DomainError);
    CHECK_THROWS_AS(model1_output(1e8, 1e13, 0.0, 90.0), DomainError);
    CHECK_THROWS_AS(model1_output(1e8, 1e13, 1.0, 90.0), DomainError);
    CHECK_THROWS_AS(model1_output(1e8, 1e13, 0.5, -1.0), DomainError);
}

TEST_CASE("split_resources reproduces the 85/15 split of the China stock") {
    const ResourceSplit s = split_resources(9.96e13, 0.85);
    CHECK(s.human == doctest::Approx(8.466e13).epsilon(1e-12));
    CHECK(s.ai == doctest::Approx(1.494e13).epsilon(1e-12));
    CHECK(s.human + s.ai == 9.96e13);
}

TEST_CASE("split_resources sums back exactly for random shares") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> ushare(0.0, 1.0), ucap(1.0, 1e15);
    for (int i = 0; i < 2000; ++i) {
        const double capital = ucap(rng), share = ushare(rng);
        const ResourceSplit s = split_resources(capital, share);
        CHECK(s.human + s.ai == capital);  // bitwise, not approximate
        CHECK(s.human >= 0.0);
        CHECK(s.ai >= 0.0);
        // The re-derived human part stays within one rounding of share*capital.
        CHECK(s.human == doctest::Approx(share * capital).epsilon(1e-12));
    }
    const ResourceSplit all = split_resources(123.0, 1.0);
    CHECK(all.human == 123.0);
    CHECK(all.ai == 0.0);
    const ResourceSplit none = split_resources(123.0, 0.0);
    CHECK(none.human == 0.0);
    CHECK(none.ai == 123.0);
}

TEST_CASE("split_resources rejects bad inputs") {
    CHECK_THROWS_AS(split_resources(0.0, 0.5), DomainError);
    CHECK_THROWS_AS(split_resources(-1.0, 0.5), DomainError);
    CHECK_THROWS_AS(split_resources(1e13, -0.1), DomainError);
    CHECK_THROWS_AS(split_resources(1e13, 1.1), DomainError);
}

TEST_CASE("model2 matches the frozen China/US 2019 values") {
    CHECK(model2_output(china(), kSCn0) ==
          doctest::Approx(10996990368000.139).epsilon(1e-12));
    CHECK(model2_output(usa(), kSUs0) ==
          doctest::Approx(19334845701392.69).epsilon(1e-12));
}

TEST_CASE("model2 with gamma=0 equals model1 on the human share, bitwise") {
    CountryProfile p = china();
    p.enhancement.gamma = 0.0;
    const ResourceSplit s = split_resources(p.capital, p.human_share);
    CHECK(model2_output(p, 0.5) ==
          model1_output(p.population, s.human, p.alpha, p.phi_h));
}

TEST_CASE("model2 output rises with capability") {
    const CountryProfile p = china();
    double prev = model2_output(p, 0.0);
    for (double s = 0.1; s <= 1.0; s += 0.1) {
        const double y = model2_output(p, s);
        CHECK(y > prev);
        prev = y;
    }
}

TEST_CASE("model2 domain checks") {
    CHECK_THROWS_AS(model2_output(china(), -0.1), DomainError);
    CHECK_THROWS_AS(model2_output(china(), 1.1), DomainError);
    CountryProfile p = china();
    p.human_share = 0.0;  // all resources to AI: R_A/R_H has no value
    CHECK_THROWS_AS(model2_output(p, 0.5), DomainError);
}

TEST_CASE("network_multiplier matches hand values and is exactly 1 at eta=0") {
    CHECK(network_multiplier(1.495e8, 7.7e8, 0.0) == 1.0);
    CHECK(network_multiplier(1.495e8, 7.7e8, 0.04) ==
          doctest::Approx(1.0015078596727947).epsilon(1e-14));
    CHECK(network_multiplier(4.45e7, 1.59e8, 0.04) ==
          doctest::Approx(1.0031331830228234).epsilon(1e-14));
    CHECK(network_multiplier(0.0, 7.7e8, 0.04) == 1.0);
    CHECK_THROWS_AS(network_multiplier(1e8, 0.0, 0.04), DomainError);
    CHECK_THROWS_AS(network_multiplier(-1.0, 7.7e8, 0.04), DomainError);
    CHECK_THROWS_AS(network_multiplier(1e8, 7.7e8, -0.1), DomainError);
}

TEST_CASE("model3 is model2 scaled by the network multiplier") {
    CountryProfile p = china();
    p.network.eta = 0.04;
    CHECK(model3_output(p, kSCn0, 1.495e8) ==
          doctest::Approx(11013572286298.158).epsilon(1e-12));
    p.network.eta = 0.0;
    CHECK(model3_output(p, kSCn0, 1.495e8) == model2_output(p, kSCn0));
}

TEST_CASE("model4 matches the frozen omega=0.15 China values") {
    CountryProfile p = china();
    p.omega = 0.15;
    const OutputBreakdown b = model4_output(p, kSCn0, 1.495e8);
    CHECK(b.y_human == doctest::Approx(8443540267002.06).epsilon(1e-12));
    CHECK(b.y_ai == doctest::Approx(8547401598108.44).epsilon(1e-12));
    CHECK(b.y_total == b.y_human + b.y_ai);  // identity, not approximation
    CHECK(b.multiplier_network == 1.0);
}

TEST_CASE("model4 with omega=0 collapses to model1, and zero agents idle the AI engine") {
    CountryProfile p = china();
    p.omega = 0.0;
    const OutputBreakdown b = model4_output(p, 0.5, 1.495e8);
    CHECK(b.y_ai == 0.0);
    CHECK(b.y_total == model1_output(p.population, p.capital, p.alpha, p.phi_h));

    p.omega = 0.15;
    const OutputBreakdown idle = model4_output(p, 0.5, 0.0);
    CHECK(idle.y_ai == 0.0);
    CHECK(idle.y_total == idle.y_human);
}

TEST_CASE("model4 domain checks") {
    CountryProfile p = china();
    p.omega = 1.5;
    CHECK_THROWS_AS(model4_output(p, 0.5, 1e8), DomainError);
    p = china();
    CHECK_THROWS_AS(model4_output(p, -0.2, 1e8), DomainError);
    CHECK_THROWS_AS(model4_output(p, 0.5, -1.0), DomainError);
}

TEST_CASE("model5 matches the frozen omega=0.05, eta=0.07 China values") {
    CountryProfile p = china();
    p.omega = 0.05;
    p.network.eta = 0.07;
    const OutputBreakdown b = model5_output(p, kSCn0, 1.495e8);
    CHECK(b.y_human == doctest::Approx(8841188294758.756).epsilon(1e-12));
    CHECK(b.y_ai == doctest::Approx(5425317893930.512).epsilon(1e-12));
    CHECK(b.y_total == doctest::Approx(14280822270301.879).epsilon(1e-12));
    CHECK(b.y_total == b.y_human + b.y_ai * b.multiplier_network);
}

TEST_CASE("model5 with eta=0 equals model4 exactly") {
    CountryProfile p = usa();
    p.omega = 0.15;
    p.network.eta = 0.0;
    const OutputBreakdown b4 = model4_output(p, kSUs0, 4.45e7);
    const OutputBreakdown b5 = model5_output(p, kSUs0, 4.45e7);
    CHECK(b5.y_total == b4.y_total);
    CHECK(b5.multiplier_network == 1.0);
}

TEST_CASE("reduction identities hold across a random parameter grid") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> un(1e6, 1e9), ur(1e12, 1e14),
        ua(0.2, 0.8), uphi(10.0, 900.0), ug(0.0, 1.0), ube(0.05, 1.0),
        ud(0.0, 0.5), ue(0.0, 0.2), ush(0.05, 0.95), us(0.0, 1.0), uag(0.0, 1e9);
    for (int i = 0; i < 100; ++i) {
        CountryProfile p;
        p.name = "rand";
        p.population = un(rng);
        p.alpha = ua(rng);
        p.capital = ur(rng);
        p.phi_h = uphi(rng);
        p.phi_a = uphi(rng);
        p.human_share = ush(rng);
        p.enhancement = {ug(rng), ube(rng), ud(rng)};
        const double s = us(rng);
        const double agents = uag(rng);

        // Model 2 with gamma=0 == model 1 on R_H.
        CountryProfile q = p;
        q.enhancement.gamma = 0.0;
        const ResourceSplit split = split_resources(q.capital, q.human_share);
        CHECK(model2_output(q, s) ==
              doctest::Approx(model1_output(q.population, split.human, q.alpha, q.phi_h))
                  .epsilon(1e-12));

        // Model 3 with eta=0 == model 2.
        q = p;
        q.network.eta = 0.0;
        CHECK(model3_output(q, s, agents) ==
              doctest::Approx(model2_output(q, s)).epsilon(1e-12));

        // Model 4 with omega=0 == model 1 on the full stock.
        q = p;
        q.omega = 0.0;
        CHECK(model4_output(q, s, agents).y_total ==
              doctest::Approx(model1_output(q.population, q.capital, q.alpha, q.phi_h))
                  .epsilon(1e-12));

        // Model 5 with eta=0 == model 4.
        q = p;
        q.omega = 0.4;
        q.network.eta = 0.0;
        CHECK(model5_output(q, s, agents).y_total ==
              doctest::Approx(model4_output(q, s, agents).y_total).epsilon(1e-12));
    }
}

TEST_CASE("outputs are finite and non-negative over random valid inputs") {
    std::mt19937 rng(100);
    std::uniform_real_distribution<double> un(1.0, 1e10), ur(1.0, 1e15),
        ua(0.01, 0.99), uphi(0.0, 1e4), us(0.0, 1.0), uag(0.0, 1e10),
        uo(0.0, 1.0), ush(0.01, 1.0);
    for (int i = 0; i < 200; ++i) {
        CountryProfile p;
        p.population = un(rng);
        p.alpha = ua(rng);
        p.capital = ur(rng);
        p.phi_h = uphi(rng);
        p.phi_a = uphi(rng);
        p.omega = uo(rng);
        p.human_share = ush(rng);
        p.enhancement = {us(rng), 0.35, us(rng)};
        p.network.eta = 0.1 * us(rng);
        const double s = us(rng);
        const double agents = uag(rng);
        const OutputBreakdown b = model5_output(p, s, agents);
        CHECK(std::isfinite(b.y_total));
        CHECK(b.y_total >= 0.0);
        CHECK(b.y_total >= b.y_human);
    }
}

}  // TEST_SUITE
