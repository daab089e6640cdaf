#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "pansharp/arithmetic.hpp"

using namespace pansharp;

namespace {
Image constant_ms(std::initializer_list<double> values, Eigen::Index rows = 2,
                  Eigen::Index cols = 2) {
    Image ms;
    for (double v : values) ms.push_back(Band::Constant(rows, cols, v));
    return ms;
}

using Fuser = std::function<Image(const Image&, const Band&)>;

const std::vector<Fuser>& all_fusers() {
    static const std::vector<Fuser> fusers = {
        [](const Image& m, const Band& p) { return fuse_brovey(m, p); },
        [](const Image& m, const Band& p) { return fuse_color_normalized(m, p); },
        [](const Image& m, const Band& p) { return fuse_multiplicative(m, p); },
    };
    return fusers;
}
}  // namespace

TEST_CASE("brovey is the identity when PAN equals the band sum") {
    const Image ms = constant_ms({10, 20, 30});
    const Image out = fuse_brovey(ms, Band::Constant(2, 2, 60.0));
    for (std::size_t k = 0; k < 3; ++k) CHECK((out[k] == ms[k]).all());
}

TEST_CASE("brovey scales bands by PAN over band sum") {
    const Image out = fuse_brovey(constant_ms({10, 20, 30}), Band::Constant(2, 2, 120.0));
    CHECK((out[0] == 20.0).all());
    CHECK((out[1] == 40.0).all());
    CHECK((out[2] == 60.0).all());
}

TEST_CASE("brovey outputs zero where the band sum vanishes") {
    Image ms = constant_ms({1, 2, 3});
    for (auto& b : ms) b(0, 1) = 0.0;
    const Image out = fuse_brovey(ms, Band::Constant(2, 2, 200.0));
    for (const auto& b : out) {
        CHECK(b(0, 1) == 0.0);
        CHECK(std::isfinite(b(0, 0)));
    }
}

TEST_CASE("brovey preserves spectral ratios and the band sum") {
    std::mt19937_64 rng(53);
    Image ms = {oracle::random_band(rng, 8, 8, 1.0, 255.0),
                oracle::random_band(rng, 8, 8, 1.0, 255.0),
                oracle::random_band(rng, 8, 8, 1.0, 255.0)};
    const Band pan = oracle::random_band(rng, 8, 8, 0.0, 255.0);
    const Image out = fuse_brovey(ms, pan);
    Band sum = out[0] + out[1] + out[2];
    CHECK((sum - pan).abs().maxCoeff() < 1e-10);
    for (Eigen::Index i = 0; i < 8; ++i)
        for (Eigen::Index j = 0; j < 8; ++j) {
            const double got = out[0](i, j) / out[1](i, j);
            const double want = ms[0](i, j) / ms[1](i, j);
            CHECK(oracle::approx_rel(got, want));
        }
}

TEST_CASE("color normalized fixed points") {
    const Image zero_out = fuse_color_normalized(constant_ms({0, 0, 0}), Band::Zero(2, 2));
    for (const auto& b : zero_out) CHECK((b.abs() < 1e-12).all());

    const Image eq_out = fuse_color_normalized(constant_ms({50, 50, 50}), Band::Constant(2, 2, 50.0));
    for (const auto& b : eq_out) CHECK((b - 50.0).abs().maxCoeff() < 1e-12);
}

TEST_CASE("color normalized worked example") {
    const Image out = fuse_color_normalized(constant_ms({10, 20, 30}), Band::Constant(2, 2, 100.0));
    CHECK(out[0](0, 0) == doctest::Approx(11.0 * 101.0 * 3.0 / 63.0 - 1.0).epsilon(1e-12));
    CHECK(out[1](0, 0) == doctest::Approx(100.0).epsilon(1e-12));
    CHECK(out[2](0, 0) == doctest::Approx(31.0 * 101.0 * 3.0 / 63.0 - 1.0).epsilon(1e-12));
    CHECK(out[0](0, 0) == doctest::Approx(51.905).epsilon(1e-4));
    CHECK(out[2](0, 0) == doctest::Approx(148.095).epsilon(1e-4));
}

TEST_CASE("color normalized generalizes the constants to the band count") {
    const Image ms = constant_ms({10, 20});
    const Image out = fuse_color_normalized(ms, Band::Constant(2, 2, 40.0));
    CHECK(out[0](0, 0) == doctest::Approx(11.0 * 41.0 * 2.0 / 32.0 - 1.0).epsilon(1e-12));
}

TEST_CASE("multiplicative takes the square root of the product") {
    CHECK((fuse_multiplicative(constant_ms({4}), Band::Constant(2, 2, 9.0))[0] == 6.0).all());
    CHECK((fuse_multiplicative(constant_ms({0}), Band::Constant(2, 2, 123.0))[0] == 0.0).all());
    CHECK((fuse_multiplicative(constant_ms({50}), Band::Constant(2, 2, 200.0))[0] == 100.0).all());
}

TEST_CASE("multiplicative rejects negative samples") {
    CHECK_THROWS_AS(fuse_multiplicative(constant_ms({-1, 2, 3}), Band::Constant(2, 2, 5.0)),
                    invalid_data_error);
    CHECK_THROWS_AS(fuse_multiplicative(constant_ms({1, 2, 3}), Band::Constant(2, 2, -5.0)),
                    invalid_data_error);
}

TEST_CASE("multiplicative fixed point: M == P reproduces P") {
    std::mt19937_64 rng(59);
    const Band p = oracle::random_band(rng, 6, 6);
    const Image out = fuse_multiplicative(Image{p, p}, p);
    for (const auto& b : out) CHECK((b - p).abs().maxCoeff() < 1e-12);
}

TEST_CASE("all three methods are per-pixel local") {
    std::mt19937_64 rng(61);
    const Eigen::Index n = 4;
    Image ms = {oracle::random_band(rng, n, n, 1.0, 255.0),
                oracle::random_band(rng, n, n, 1.0, 255.0),
                oracle::random_band(rng, n, n, 1.0, 255.0)};
    const Band pan = oracle::random_band(rng, n, n);

    std::vector<Eigen::Index> perm(static_cast<std::size_t>(n * n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto permute = [&](const Band& b) {
        Band out(n, n);
        for (Eigen::Index p = 0; p < n * n; ++p) {
            const Eigen::Index q = perm[static_cast<std::size_t>(p)];
            out(p / n, p % n) = b(q / n, q % n);
        }
        return out;
    };

    for (const Fuser& f : all_fusers()) {
        const Image direct = f(ms, pan);
        const Image permuted = f({permute(ms[0]), permute(ms[1]), permute(ms[2])}, permute(pan));
        for (std::size_t k = 0; k < 3; ++k)
            CHECK((permute(direct[k]) == permuted[k]).all());
    }
}

TEST_CASE("monotonicity in PAN") {
    std::mt19937_64 rng(67);
    const Image ms = {oracle::random_band(rng, 5, 5, 0.0, 255.0),
                      oracle::random_band(rng, 5, 5, 0.0, 255.0),
                      oracle::random_band(rng, 5, 5, 0.0, 255.0)};
    const Band pan = oracle::random_band(rng, 5, 5);
    const Band bigger = pan + 10.0;
    for (const Fuser& f : all_fusers()) {
        const Image lo = f(ms, pan);
        const Image hi = f(ms, bigger);
        for (std::size_t k = 0; k < 3; ++k) CHECK((hi[k] >= lo[k] - 1e-12).all());
    }
}

TEST_CASE("fusion rejects mismatched dimensions") {
    const Image ms = constant_ms({1, 2, 3});
    const Band pan = Band::Zero(3, 3);
    CHECK_THROWS_AS(fuse_brovey(ms, pan), std::invalid_argument);
    CHECK_THROWS_AS(fuse_color_normalized(ms, pan), std::invalid_argument);
    CHECK_THROWS_AS(fuse_multiplicative(ms, pan), std::invalid_argument);
}
