#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <random>

#include "edgechroma/gradient.hpp"
#include "edgechroma/image.hpp"
#include "oracle.hpp"
#include "testutil.hpp"

using edgechroma::Kernel;
using edgechroma::RgbImage;
using edgechroma::ScalarField;

TEST_CASE("RgbImage validates construction") {
    CHECK_THROWS_AS(RgbImage(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(RgbImage(4, -1), std::invalid_argument);
    CHECK_THROWS_AS(RgbImage(2, 2, std::vector<std::uint8_t>(11)),
                    std::invalid_argument);
    const RgbImage img(3, 2);
    CHECK(img.pixel_count() == 6);
    CHECK(img.pixel(2, 1) == edgechroma::Rgb8{0, 0, 0});
}

TEST_CASE("ScalarField rejects non-finite values and bad sizes") {
    CHECK_THROWS_AS(ScalarField(2, 2, std::vector<double>{1, 2, 3}),
                    std::invalid_argument);
    CHECK_THROWS_AS(ScalarField(1, 1, std::vector<double>{
                                          std::numeric_limits<double>::quiet_NaN()}),
                    std::invalid_argument);
    CHECK_THROWS_AS(ScalarField(1, 1, std::vector<double>{
                                          std::numeric_limits<double>::infinity()}),
                    std::invalid_argument);
}

TEST_CASE("Kernel validates size and weights") {
    CHECK_THROWS_AS(Kernel(2, std::vector<double>(4)), std::invalid_argument);
    CHECK_THROWS_AS(Kernel(3, std::vector<double>(8)), std::invalid_argument);
    CHECK_THROWS_AS(Kernel(-3, {}), std::invalid_argument);
    const Kernel identity(1, {1.0});
    CHECK(identity.size() == 1);
}

TEST_CASE("to_grayscale handles the flat cases") {
    RgbImage white(4, 3);
    RgbImage gray(4, 3);
    for (int y = 0; y < 3; ++y) {
        for (int x = 0; x < 4; ++x) {
            white.set_pixel(x, y, {255, 255, 255});
            gray.set_pixel(x, y, {77, 77, 77});
        }
    }
    const ScalarField white_gray = edgechroma::to_grayscale(white);
    for (double v : white_gray.values()) {
        CHECK(v == 255.0);
    }
    const ScalarField gray_gray = edgechroma::to_grayscale(gray);
    for (double v : gray_gray.values()) {
        CHECK(v == 77.0);
    }
}

TEST_CASE("to_grayscale of pure red is the red luma weight") {
    RgbImage img(1, 1);
    img.set_pixel(0, 0, {255, 0, 0});
    const double lum = edgechroma::to_grayscale(img).at(0, 0);
    CHECK(lum == 0.299 * 255.0);
    CHECK(lum == doctest::Approx(76.245));
}

TEST_CASE("to_grayscale stays in [0, 255] and matches the direct formula") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const RgbImage img = testutil::random_image(rng, 9, 7);
        const ScalarField gray = edgechroma::to_grayscale(img);
        const std::vector<double> expected = oracle::grayscale(img);
        for (std::size_t i = 0; i < expected.size(); ++i) {
            CHECK(gray.values()[i] == expected[i]);
            CHECK(gray.values()[i] >= 0.0);
            CHECK(gray.values()[i] <= 255.0);
        }
    }
}

TEST_CASE("convolve keeps a constant field constant under the blur kernel") {
    const ScalarField field(6, 5, 42.5);
    const ScalarField out = edgechroma::convolve(field, edgechroma::blur_kernel());
    for (double v : out.values()) {
        CHECK(v == doctest::Approx(42.5).epsilon(1e-12));
    }
}

TEST_CASE("convolve spreads an impulse into the blur kernel pattern") {
    ScalarField field(5, 5, 0.0);
    field.at(2, 2) = 16.0;
    const ScalarField out = edgechroma::convolve(field, edgechroma::blur_kernel());
    const double expected[5][5] = {{0, 0, 0, 0, 0},
                                   {0, 1, 2, 1, 0},
                                   {0, 2, 4, 2, 0},
                                   {0, 1, 2, 1, 0},
                                   {0, 0, 0, 0, 0}};
    for (int y = 0; y < 5; ++y) {
        for (int x = 0; x < 5; ++x) {
            CHECK(out.at(x, y) == expected[y][x]);
        }
    }
}

TEST_CASE("convolve with the 1x1 identity kernel is the identity") {
    std::mt19937_64 rng(5);
    const ScalarField field = testutil::random_field(rng, 8, 6);
    const ScalarField out = edgechroma::convolve(field, Kernel(1, {1.0}));
    CHECK(out == field);
}

TEST_CASE("convolve is linear within 1e-9 relative") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        const ScalarField f = testutil::random_field(rng, 7, 7);
        const ScalarField g = testutil::random_field(rng, 7, 7);
        const Kernel k = testutil::random_kernel(rng, 3);
        const double a = testutil::uniform(rng, -3.0, 3.0);
        const double b = testutil::uniform(rng, -3.0, 3.0);

        std::vector<double> combo(f.size());
        for (std::size_t i = 0; i < combo.size(); ++i) {
            combo[i] = a * f.values()[i] + b * g.values()[i];
        }
        const ScalarField lhs =
            edgechroma::convolve(ScalarField(7, 7, std::move(combo)), k);
        const ScalarField cf = edgechroma::convolve(f, k);
        const ScalarField cg = edgechroma::convolve(g, k);
        for (std::size_t i = 0; i < lhs.size(); ++i) {
            const double rhs = a * cf.values()[i] + b * cg.values()[i];
            const double scale = std::max(1.0, std::abs(rhs));
            CHECK(std::abs(lhs.values()[i] - rhs) <= 1e-9 * scale);
        }
    }
}

TEST_CASE("convolve of the transposed field with the transposed kernel is the "
          "transposed result") {
    // Integer-valued inputs keep every product and partial sum exact, so the
    // padding geometry is the only thing under test.
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const int w = testutil::uniform_int(rng, 1, 9);
        const int h = testutil::uniform_int(rng, 1, 9);
        const ScalarField f = testutil::random_int_field(rng, w, h);
        std::vector<double> weights(9);
        for (double& v : weights) {
            v = testutil::uniform_int(rng, -8, 8);
        }
        std::vector<double> transposed_weights(9);
        for (int ky = 0; ky < 3; ++ky) {
            for (int kx = 0; kx < 3; ++kx) {
                transposed_weights[kx * 3 + ky] = weights[ky * 3 + kx];
            }
        }
        const ScalarField lhs = edgechroma::convolve(
            testutil::transpose(f), Kernel(3, transposed_weights));
        const ScalarField rhs =
            testutil::transpose(edgechroma::convolve(f, Kernel(3, weights)));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("convolve matches the brute-force triple loop bit-for-bit") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 50; ++trial) {
        const ScalarField f = testutil::random_field(rng, 7, 7);
        const Kernel k = testutil::random_kernel(rng, 3);
        const ScalarField lib = edgechroma::convolve(f, k);
        const std::vector<double> ref =
            oracle::convolve(f.values(), 7, 7, k.weights(), 3, k.normalizer());
        CHECK(std::memcmp(lib.data(), ref.data(), ref.size() * sizeof(double)) == 0);
    }
}

TEST_CASE("convolve handles kernels larger than the field") {
    std::mt19937_64 rng(31);
    const ScalarField f = testutil::random_field(rng, 2, 2);
    const Kernel k = testutil::random_kernel(rng, 5);
    const ScalarField lib = edgechroma::convolve(f, k);
    const std::vector<double> ref =
        oracle::convolve(f.values(), 2, 2, k.weights(), 5, k.normalizer());
    CHECK(std::memcmp(lib.data(), ref.data(), ref.size() * sizeof(double)) == 0);
}
