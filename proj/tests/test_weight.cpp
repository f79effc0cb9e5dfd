#include <cstdint>

#include "doctest.h"

#include "d43/errors.hpp"
#include "d43/weight.hpp"

using namespace d43;

namespace {

// deterministic generator for property-style checks
struct Lcg {
    std::uint64_t state = 0x243f6a8885a308d3ULL;
    std::uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 33;
    }
    long long small() { return static_cast<long long>(next() % 41) - 20; }
    Weight weight() { return {small(), small(), small(), small()}; }
};

}  // namespace

TEST_CASE("pairings with the coroots") {
    CHECK(pair_h(fundamental(2), 2) == 1);
    CHECK(pair_h(fundamental(2), 0) == 0);
    for (int i = 0; i < 3; ++i) CHECK(pair_h(delta(), i) == 0);
    CHECK(pair_h(simple_root(1), 2) == -1);
    CHECK_THROWS_AS(pair_h(delta(), 3), std::invalid_argument);
}

TEST_CASE("simple-root table and Cartan matrix") {
    CHECK(simple_root(0) == Weight{2, -1, 0, 1});
    CHECK(simple_root(1) == Weight{-1, 2, -1, 0});
    CHECK(simple_root(2) == Weight{0, -3, 2, 0});
    CHECK(simple_root(0) + 2LL * simple_root(1) + simple_root(2) == delta());
    const long long A[3][3] = {{2, -1, 0}, {-1, 2, -3}, {0, -1, 2}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(pair_h(simple_root(j), i) == A[i][j]);
    for (int i = 0; i < 3; ++i) CHECK(level(simple_root(i)) == 0);
}

TEST_CASE("levels") {
    CHECK(level(fundamental(2)) == 3);
    CHECK(level(delta()) == 0);
    for (long long l = 1; l <= 4; ++l) CHECK(level(l * fundamental(2)) == 3 * l);
    CHECK(level(fundamental(0)) == 1);
    CHECK(level(fundamental(1)) == 2);
}

TEST_CASE("reflections") {
    CHECK(reflect(2, fundamental(2)) == Weight{0, 3, -1, 0});
    CHECK(reflect(0, delta()) == delta());
    Lcg rng;
    for (int n = 0; n < 200; ++n) {
        const Weight w = rng.weight();
        const int i = static_cast<int>(rng.next() % 3);
        CHECK(reflect(i, reflect(i, w)) == w);
        CHECK(level(reflect(i, w)) == level(w));
    }
}

TEST_CASE("word application") {
    const Weight L2 = fundamental(2);
    CHECK(apply_word({}, L2) == L2);
    CHECK(apply_word({2}, L2) == L2 - simple_root(2));
    CHECK(apply_word({1, 2}, L2) == L2 - 3LL * simple_root(1) - simple_root(2));
    // rightmost entry acts first
    Lcg rng;
    for (int n = 0; n < 100; ++n) {
        const Weight w = rng.weight();
        CHECK(apply_word({0, 2}, w) == reflect(0, reflect(2, w)));
    }
}

TEST_CASE("reflection stream and words") {
    const int expect[6] = {2, 1, 2, 1, 0, 1};
    for (int t = 1; t <= 12; ++t) CHECK(stream_index(t) == expect[(t - 1) % 6]);
    CHECK(wk_word(0) == WeylWord{});
    CHECK(wk_word(3) == WeylWord{2, 1, 2});
    CHECK(wk_word(7) == WeylWord{2, 1, 0, 1, 2, 1, 2});
    CHECK_THROWS_AS(stream_index(0), std::invalid_argument);
}

TEST_CASE("root-lattice coefficients of the weight orbit") {
    const Weight L2 = fundamental(2);
    const auto at = [&](int k) { return root_coefficients(apply_word(wk_word(k), L2), L2); };
    CHECK(root_coefficients(L2, L2) == std::array<long long, 3>{0, 0, 0});
    CHECK(at(1) == std::array<long long, 3>{0, 0, 1});
    CHECK(at(2) == std::array<long long, 3>{0, 3, 1});
    CHECK(at(5) == std::array<long long, 3>{6, 6, 3});
    CHECK(at(6) == std::array<long long, 3>{6, 9, 3});
    CHECK(at(12) == std::array<long long, 3>{18, 30, 12});
    // membership never fails along the orbit
    for (int k = 0; k <= 60; ++k) CHECK_NOTHROW(at(k));
    // a weight outside the root lattice is rejected
    CHECK_THROWS_AS(root_coefficients(fundamental(1), L2), NotInRootLattice);
    // reconstruction identity
    for (int k = 0; k <= 36; ++k) {
        const Weight mu = apply_word(wk_word(k), L2);
        const auto m = root_coefficients(mu, L2);
        CHECK(L2 - m[0] * simple_root(0) - m[1] * simple_root(1) - m[2] * simple_root(2) == mu);
    }
}

TEST_CASE("Bruhat-increase certificate") {
    const Weight L2 = fundamental(2);
    CHECK(bruhat_increases({}, 2, 2LL * L2));
    CHECK(bruhat_increases(wk_word(1), 1, L2));
    CHECK_FALSE(bruhat_increases(wk_word(1), 2, L2));
    CHECK(pair_h(apply_word(wk_word(1), L2), 1) == 3);
    CHECK(pair_h(apply_word(wk_word(1), L2), 2) == -1);
    for (int k = 0; k < 60; ++k) CHECK(bruhat_increases(wk_word(k), stream_index(k + 1), L2));
    CHECK_THROWS_AS(bruhat_increases({}, 1, Weight{-1, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("overflow is detected, not wrapped") {
    const Weight big{(1LL << 62), 0, 0, 0};
    CHECK_THROWS_AS(4LL * big, std::overflow_error);
    CHECK_THROWS_AS(big + big + big, std::overflow_error);
}
