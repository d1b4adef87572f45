#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include "coulomb2d/io.hpp"
#include "coulomb2d/phase_shift.hpp"
#include "fixtures.hpp"

using namespace coulomb2d;
using Complex = std::complex<double>;

namespace {
Kinematics kin_z1_e125() { return derive_kinematics(ParticleSpec{}, 1.25); }
}  // namespace

TEST_CASE("AngularMomentum stores half-integers exactly") {
    CHECK_THROWS_AS(AngularMomentum(2), DomainError);
    AngularMomentum j(-3);
    CHECK(j.j() == -1.5);
    CHECK(j.m() == -2);
    CHECK(j.abs_m() == 2);
}

TEST_CASE("exponent_s") {
    CHECK(exponent_s(AngularMomentum(1), 0.0) == 0.5);
    CHECK(exponent_s(AngularMomentum(-1), 0.3) == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(exponent_s(AngularMomentum(3), 1.0 / 137.035999) ==
          doctest::Approx(fixtures::s_exp_two_j3_alpha).epsilon(1e-15));
    CHECK_THROWS_AS(exponent_s(AngularMomentum(1), 0.6), DomainError);
}

TEST_CASE("free particle: every channel factor is exactly one") {
    Kinematics kin = Kinematics::from_gamma(0.0, 1.25);
    for (int t : {1, -1, 3, -3, 11, -11, 401, -401}) {
        Complex s = s_matrix_exact(AngularMomentum(t), kin).value;
        INFO("two_j=", t);
        CHECK(std::abs(s - 1.0) <= 1e-13);
    }
}

TEST_CASE("unitarity identity |j + i beta'|^2 = s^2 + beta^2") {
    for (double g : {0.01, 0.3, -0.49}) {
        for (double e : {1.01, 1.25, 50.0}) {
            Kinematics kin = Kinematics::from_gamma(g, e);
            for (int t : {1, -1, 7, -201}) {
                AngularMomentum j(t);
                double s = exponent_s(j, g);
                double lhs = j.j() * j.j() + kin.beta_prime * kin.beta_prime;
                double rhs = s * s + kin.beta * kin.beta;
                CHECK(std::fabs(lhs - rhs) <= 1e-13 * rhs);
            }
        }
    }
}

TEST_CASE("exact channel factor: oracle fixture and unitarity") {
    Kinematics kin = kin_z1_e125();
    SMatrixElement el = s_matrix_exact(AngularMomentum(1), kin);
    CHECK(std::abs(el.value - fixtures::s_exact_two_j1) <= 1e-13);
    CHECK(el.eta_principal == doctest::Approx(0.5 * std::arg(fixtures::s_exact_two_j1))
                                  .epsilon(1e-10));
    for (double g : {0.1, -0.3, 0.49}) {
        Kinematics k2 = Kinematics::from_gamma(g, 5.0);
        for (int t : {1, -1, 21, -21, 401, -401}) {
            CHECK(std::fabs(std::abs(s_matrix_exact(AngularMomentum(t), k2).value) - 1.0) <=
                  1e-12);
        }
    }
}

TEST_CASE("small-gamma factor: oracle fixture") {
    Kinematics kin = Kinematics::from_gamma(0.01, Kinematics::from_beta_speed(1.0, 0.6).energy_ratio);
    SMatrixElement el = s_matrix_small_gamma(AngularMomentum(-1), kin);
    CHECK(std::abs(el.value - fixtures::s_small_two_jm1) <= 1e-13);
}

TEST_CASE("small-gamma factor collapses to the nonrelativistic one as v -> 0") {
    // v = 1e-9 underflows the stored energy ratio to exactly 1, so the
    // correction term carries an exact zero factor
    Kinematics kin = Kinematics::from_beta_speed(0.35, 1e-9);
    REQUIRE(kin.k2 == 0.0);
    for (int t : {1, -1, 5, -5}) {
        AngularMomentum j(t);
        auto [nonrel, corr] = small_gamma_terms(j, kin);
        CHECK(corr == Complex(0.0));
        CHECK(s_matrix_small_gamma(j, kin).value == s_matrix_nonrel(j.abs_m(), kin.beta));
        CHECK(nonrel == s_matrix_nonrel(j.abs_m(), kin.beta));
    }
}

TEST_CASE("exact vs small-gamma difference scales as gamma^2") {
    auto max_diff = [](double gamma) {
        Kinematics kin = Kinematics::from_gamma(gamma, 1.25);
        double worst = 0.0;
        for (int t = 1; t <= 21; t += 2) {
            for (int sign : {1, -1}) {
                AngularMomentum j(sign * t);
                double d = std::abs(s_matrix_exact(j, kin).value -
                                    s_matrix_small_gamma(j, kin).value);
                worst = std::max(worst, d);
            }
        }
        return worst;
    };
    // quartering under gamma halving (spec example: measured factor in [3.5, 4.5])
    double ratio = max_diff(0.02) / max_diff(0.01);
    CHECK(ratio >= 3.5);
    CHECK(ratio <= 4.5);
    // log-log slope 2 +- 0.1 over [1e-3, 1e-1]
    double lo = 1e-3, hi = 1e-1;
    double slope = std::log(max_diff(hi) / max_diff(lo)) / std::log(hi / lo);
    CHECK(slope == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("exact vs small-gamma difference decays with |j|") {
    Kinematics kin = Kinematics::from_gamma(0.1, 1.25);
    double prev_pos = 1e300, prev_neg = 1e300;
    for (int t = 1; t <= 41; t += 2) {
        double dp = std::abs(s_matrix_exact(AngularMomentum(t), kin).value -
                             s_matrix_small_gamma(AngularMomentum(t), kin).value);
        double dn = std::abs(s_matrix_exact(AngularMomentum(-t), kin).value -
                             s_matrix_small_gamma(AngularMomentum(-t), kin).value);
        CHECK(dp < prev_pos);
        CHECK(dn < prev_neg);
        prev_pos = dp;
        prev_neg = dn;
    }
}

TEST_CASE("nonrelativistic factor") {
    CHECK(s_matrix_nonrel(2, 0.0) == Complex(1.0));
    CHECK(std::fabs(std::abs(s_matrix_nonrel(3, 0.7)) - 1.0) <= 1e-13);
    CHECK(std::abs(s_matrix_nonrel(0, 0.2) - fixtures::s_nonrel_m0_b02) <= 1e-13);
    CHECK_THROWS_AS(s_matrix_nonrel(-1, 0.2), DomainError);
}

TEST_CASE("channel enumeration order and table indexing") {
    Kinematics kin = kin_z1_e125();
    auto channels = s_matrix_channels(5, kin);
    REQUIRE(channels.size() == 6);
    int expected[] = {1, -1, 3, -3, 5, -5};
    for (std::size_t i = 0; i < 6; ++i) CHECK(channels[i].j.two_j == expected[i]);

    SMatrixTable table = build_s_matrix_table(5, kin);
    CHECK(table.m_min == -3);
    CHECK(table.m_max == 2);
    for (const auto& ch : channels) {
        CHECK(table.for_m(ch.j.m()) == ch.value);
    }
    // table construction is deterministic under threading
    SMatrixTable threaded = build_s_matrix_table(5, kin, SMatrixMethod::exact, 4);
    for (std::size_t i = 0; i < table.values.size(); ++i)
        CHECK(table.values[i] == threaded.values[i]);
}

TEST_CASE("phase-shift CSV export") {
    Kinematics kin = kin_z1_e125();
    auto channels = s_matrix_channels(3, kin);
    std::ostringstream os;
    io::write_phase_shift_csv(os, channels, kin);
    std::string text = os.str();
    CHECK(text.rfind("two_j,m,s,re_S,im_S,eta_principal,method\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 5);  // header + 4 channels
    CHECK(text.find("exact") != std::string::npos);
}
