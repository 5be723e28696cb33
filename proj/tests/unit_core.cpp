#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "slitdiff/aperture.hpp"
#include "slitdiff/pattern.hpp"

using namespace slitdiff;

namespace {

// Deterministic random apertures for property checks.
ApertureSpec random_aperture(std::mt19937& rng) {
    std::uniform_int_distribution<int> count(1, 3);
    std::uniform_real_distribution<double> width(0.1, 2.0);
    std::uniform_real_distribution<double> gap(0.05, 3.0);
    std::uniform_real_distribution<double> start(-5.0, 0.0);
    const int n = count(rng);
    std::vector<Slit> slits;
    double edge = start(rng);
    for (int i = 0; i < n; ++i) {
        const double w = width(rng);
        const double lo = edge + gap(rng);
        slits.push_back({lo + w / 2.0, w});
        edge = lo + w;
    }
    return ApertureSpec(std::move(slits));
}

}  // namespace

TEST_CASE("aperture wavefunction is the unit top hat") {
    const auto single = ApertureSpec::single(1.0);
    CHECK(aperture_wavefunction(single, 0.0) == 1.0);
    CHECK(aperture_wavefunction(single, 0.6) == 0.0);
    CHECK(aperture_wavefunction(single, 0.5) == 1.0);   // closed interval
    CHECK(aperture_wavefunction(single, -0.5) == 1.0);

    const auto pair = ApertureSpec({{-1.0, 1.0}, {1.0, 1.0}});
    CHECK(aperture_wavefunction(pair, 1.2) == Catch::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(aperture_wavefunction(pair, 0.0) == 0.0);

    // Numeric integration oracle for the normalization: midpoint rule over a
    // box containing the support.
    const long n = 200000;
    const double lo = -2.0, hi = 2.0, h = (hi - lo) / n;
    double integral = 0.0;
    for (long i = 0; i < n; ++i) {
        const double y = lo + (i + 0.5) * h;
        const double psi = aperture_wavefunction(pair, y);
        integral += psi * psi * h;
    }
    CHECK(integral == Catch::Approx(1.0).margin(1e-4));
}

TEST_CASE("total probability is exactly one") {
    CHECK(total_probability(ApertureSpec::single(2.0)) == 1.0);
    CHECK(total_probability(ApertureSpec::double_slit(1.0, 4.0)) == 1.0);

    std::mt19937 rng(12345);
    for (int i = 0; i < 50; ++i) CHECK(total_probability(random_aperture(rng)) == 1.0);
}

TEST_CASE("aperture invariants are enforced") {
    CHECK_THROWS_AS(ApertureSpec::single(0.0), spec_error);
    CHECK_THROWS_AS(ApertureSpec::single(-1.0), spec_error);
    CHECK_THROWS_AS(ApertureSpec(std::vector<Slit>{}), spec_error);
    CHECK_THROWS_AS(ApertureSpec({{0.0, 1.0}, {0.5, 1.0}}), spec_error);  // overlap
    CHECK_THROWS_AS(ApertureSpec({{0.0, 1.0}, {1.0, 1.0}}), spec_error);  // touching edges
    CHECK_THROWS_AS(ApertureSpec::double_slit(1.0, 1.0), spec_error);
    CHECK_THROWS_AS(ApertureSpec::double_slit(1.0, 0.5), spec_error);
}

TEST_CASE("wavefunction support matches the slit union") {
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> ys(-8.0, 8.0);
    for (int i = 0; i < 20; ++i) {
        const auto ap = random_aperture(rng);
        for (int j = 0; j < 200; ++j) {
            const double y = ys(rng);
            const double psi = aperture_wavefunction(ap, y);
            CHECK((psi > 0.0) == ap.contains(y));
            if (psi > 0.0)
                CHECK(psi == Catch::Approx(1.0 / std::sqrt(ap.total_width())).epsilon(1e-15));
        }
    }
}

TEST_CASE("wave spec validation") {
    CHECK_THROWS_AS(WaveSpec::plane(0.0), spec_error);
    CHECK_THROWS_AS(WaveSpec::plane(-2.0), spec_error);
    CHECK_THROWS_AS(WaveSpec::plane(1.0, pi / 2.0), spec_error);
    CHECK_THROWS_AS(WaveSpec::from_source(1.0, 0.0, 0.0), spec_error);
    CHECK(WaveSpec::plane(2.0).is_plane_wave());
    CHECK_FALSE(WaveSpec::from_source(2.0, 0.1, 5.0).is_plane_wave());
    CHECK(WaveSpec::plane(2.0 * pi).wavelength() == Catch::Approx(1.0));
}

TEST_CASE("angle grid validation and linspace") {
    CHECK_THROWS_AS(AngleGrid({0.2, 0.1}), spec_error);
    CHECK_THROWS_AS(AngleGrid({0.1, 0.1}), spec_error);
    CHECK_THROWS_AS(AngleGrid({-1.6, 0.0}), spec_error);
    CHECK_THROWS_AS(AngleGrid(std::vector<double>{}), spec_error);
    CHECK_THROWS_AS(AngleGrid::linspace(0.3, 1), spec_error);
    CHECK_THROWS_AS(AngleGrid::linspace(pi / 2.0, 11), spec_error);

    const auto g = AngleGrid::linspace(0.25, 501);
    CHECK(g.size() == 501);
    CHECK(g[0] == -0.25);
    CHECK(g[500] == 0.25);
    CHECK(g[250] == 0.0);
    CHECK(g.theta_max() == 0.25);
}

TEST_CASE("raw patterns square their amplitudes") {
    const auto grid = AngleGrid::linspace(0.1, 5);
    std::vector<cdouble> amps = {{1, 0}, {0, 2}, {3, 4}, {0, 0}, {-1, 1}};
    const auto p = make_pattern("m", grid, amps);
    for (std::size_t i = 0; i < amps.size(); ++i)
        CHECK(p.intensities[i] == std::norm(amps[i]));
    CHECK_THROWS_AS(make_pattern("m", grid, std::vector<cdouble>(3)), spec_error);
}

TEST_CASE("peak normalization pins a unique peak row") {
    const auto grid = AngleGrid::linspace(0.1, 4);  // even count: no theta=0 point
    // Symmetric intensities: bitwise tie between the two inner points.
    std::vector<cdouble> amps = {{0.5, 0}, {2.0, 0}, {2.0, 0}, {0.5, 0}};
    const auto p = peak_normalized(make_pattern("m", grid, amps));
    CHECK(p.normalization == Normalization::peak);
    int ones = 0;
    std::size_t where = 99;
    for (std::size_t i = 0; i < p.intensities.size(); ++i)
        if (p.intensities[i] == 1.0) {
            ++ones;
            where = i;
        }
    CHECK(ones == 1);
    CHECK(where == 1);  // smallest theta among the tied maxima
    CHECK(p.intensities[2] == std::nextafter(1.0, 0.0));

    std::vector<cdouble> zero(4, cdouble{});
    CHECK_THROWS_AS(peak_normalized(make_pattern("m", grid, zero)), spec_error);
}

TEST_CASE("probability normalization gives unit grid mass") {
    const auto grid = AngleGrid::linspace(0.3, 101);
    std::vector<cdouble> amps(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) amps[i] = {std::cos(3.0 * grid[i]), 0.0};
    const double k = 7.0;
    const auto p = probability_normalized(make_pattern("m", grid, amps), k);
    double mass = 0.0;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        const double dky = k * (std::sin(grid[i + 1]) - std::sin(grid[i]));
        mass += 0.5 * (p.intensities[i] + p.intensities[i + 1]) * dky;
    }
    CHECK(mass == Catch::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("pattern comparison metrics") {
    const auto grid = AngleGrid::linspace(0.2, 51);
    std::vector<cdouble> amps(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        amps[i] = {std::exp(-10.0 * grid[i] * grid[i]), 0.1 * grid[i]};
    const auto p = make_pattern("a", grid, amps);

    SECTION("identity") {
        const auto r = compare_patterns(p, p);
        CHECK(r.max_abs_deviation == 0.0);
        CHECK(r.rms_deviation == 0.0);
        CHECK(r.theta_max == 0.2);
    }
    SECTION("peak normalization is projective") {
        auto doubled = p;
        for (auto& a : doubled.amplitudes) a *= 2.0;
        for (auto& v : doubled.intensities) v *= 4.0;
        CHECK(compare_patterns(p, doubled).max_abs_deviation == 0.0);

        auto scaled = p;
        for (auto& a : scaled.amplitudes) a *= 3.7;
        for (auto& v : scaled.intensities) v *= 3.7 * 3.7;
        CHECK(compare_patterns(p, scaled).max_abs_deviation < 1e-15);
    }
    SECTION("grid mismatch is an error") {
        const auto other = make_pattern("b", AngleGrid::linspace(0.2, 50),
                                        std::vector<cdouble>(50, cdouble{1.0, 0.0}));
        CHECK_THROWS_AS(compare_patterns(p, other), spec_error);
    }
    SECTION("max >= rms >= 0 on random data") {
        std::mt19937 rng(99);
        std::uniform_real_distribution<double> u(0.0, 2.0);
        for (int t = 0; t < 20; ++t) {
            std::vector<cdouble> a1(grid.size()), a2(grid.size());
            for (std::size_t i = 0; i < grid.size(); ++i) {
                a1[i] = {u(rng), u(rng)};
                a2[i] = {u(rng), u(rng)};
            }
            const auto r = compare_patterns(make_pattern("x", grid, a1),
                                            make_pattern("y", grid, a2));
            CHECK(r.max_abs_deviation >= r.rms_deviation);
            CHECK(r.rms_deviation >= 0.0);
        }
    }
}
