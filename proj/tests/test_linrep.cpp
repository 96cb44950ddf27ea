#include "zaremba/linrep.hpp"

#include <doctest.h>

#include <array>
#include <random>
#include <stdexcept>

using namespace zaremba;

namespace {

// Independent 2x2 oracle for digit products, kept away from IntMatrix.
struct M2 {
    long long a, b, c, d;
};

M2 m2_mul(const M2& x, const M2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

M2 kappa_matrix(int digit) {
    return {digit + 1, 1, 1, 0};
}

} // namespace

TEST_CASE("to_digits produces least-significant-first words") {
    CHECK(to_digits(6, 2).digits == std::vector<int>{0, 1, 1});
    CHECK(to_digits(0, 5).digits == std::vector<int>{0});
    CHECK(to_digits(11, 3).digits == std::vector<int>{2, 0, 1});
}

TEST_CASE("to_digits rejects bad bases") {
    CHECK_THROWS_AS(to_digits(5, 1), std::invalid_argument);
    CHECK_THROWS_AS(to_digits(5, 0), std::invalid_argument);
}

TEST_CASE("digit word validity") {
    CHECK(is_valid(DigitWord{2, {0}}));
    CHECK(is_valid(DigitWord{2, {1, 0, 1}}));
    CHECK_FALSE(is_valid(DigitWord{2, {}}));          // empty
    CHECK_FALSE(is_valid(DigitWord{2, {1, 1, 0}}));   // trailing zero
    CHECK_FALSE(is_valid(DigitWord{2, {2}}));         // digit out of range
    CHECK_FALSE(is_valid(DigitWord{1, {0}}));         // base too small
}

TEST_CASE("round trip to_number(to_digits(n)) over all n < 2^20, k in 2..8") {
    for (int k = 2; k <= 8; ++k) {
        for (std::uint64_t n = 0; n < (1u << 20); ++n) {
            const DigitWord w = to_digits(n, k);
            REQUIRE(is_valid(w));
            if (to_number(w) != n) {
                REQUIRE(to_number(w) == n); // report only on failure
            }
        }
    }
}

TEST_CASE("kappa_rep shape") {
    const LinearRep rep2 = kappa_rep(2);
    CHECK(rep2.dim == 2);
    REQUIRE(rep2.matrices.size() == 2);
    CHECK(rep2.matrices[0].at(0, 0) == 1);
    CHECK(rep2.matrices[0].at(0, 1) == 1);
    CHECK(rep2.matrices[0].at(1, 0) == 1);
    CHECK(rep2.matrices[0].at(1, 1) == 0);
    CHECK(rep2.matrices[1].at(0, 0) == 2);

    const LinearRep rep3 = kappa_rep(3);
    CHECK(rep3.matrices[2].at(0, 0) == 3);
    CHECK(rep3.matrices[2].at(0, 1) == 1);

    // row * col = 1: the empty digit product evaluates to 1.
    for (int k = 2; k <= 6; ++k) {
        const LinearRep rep = kappa_rep(k);
        Int dot = 0;
        for (int i = 0; i < rep.dim; ++i) {
            dot += rep.row[static_cast<std::size_t>(i)] * rep.col[static_cast<std::size_t>(i)];
        }
        CHECK(dot == 1);
    }

    CHECK_THROWS_AS(kappa_rep(1), std::invalid_argument);
}

TEST_CASE("eval_rep on the continuant representation") {
    const LinearRep rep = kappa_rep(2);

    // Oracle: explicit product A_1 * A_0 * A_1 for n = 5 (digits 1,0,1).
    const M2 prod = m2_mul(m2_mul(kappa_matrix(1), kappa_matrix(0)), kappa_matrix(1));
    CHECK(prod.a == 8);
    CHECK(prod.b == 3);
    CHECK(prod.c == 3);
    CHECK(prod.d == 1);
    CHECK(eval_rep(rep, 5) == 8);

    CHECK(eval_rep(rep, 0) == 1); // n+1 for n < k
    CHECK(eval_rep(rep, 3) == 5); // (a+1)(b+1)+1 with a=b=1
}

TEST_CASE("eval_rep matches the independent 2x2 oracle on a range") {
    for (int k = 2; k <= 4; ++k) {
        const LinearRep rep = kappa_rep(k);
        for (std::uint64_t n = 0; n < 512; ++n) {
            const DigitWord w = to_digits(n, k);
            M2 acc{1, 0, 0, 1};
            for (int d : w.digits) {
                acc = m2_mul(acc, kappa_matrix(d));
            }
            CHECK(eval_rep(rep, n) == acc.a);
        }
    }
}

TEST_CASE("digit product determinants are unimodular") {
    // det A_i = -1 for every i, so any word product has determinant +-1.
    for (int k = 2; k <= 6; ++k) {
        const LinearRep rep = kappa_rep(k);
        for (int i = 0; i < k; ++i) {
            const IntMatrix& m = rep.matrices[static_cast<std::size_t>(i)];
            CHECK(m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0) == -1);
        }
    }
    std::mt19937_64 rng(20240611);
    const LinearRep rep = kappa_rep(5);
    for (int trial = 0; trial < 50; ++trial) {
        const auto len = static_cast<std::size_t>(rng() % 64 + 1);
        IntMatrix acc = IntMatrix::identity(2);
        for (std::size_t i = 0; i < len; ++i) {
            acc = acc * rep.matrices[static_cast<std::size_t>(rng() % 5)];
        }
        const Int det = acc.at(0, 0) * acc.at(1, 1) - acc.at(0, 1) * acc.at(1, 0);
        CHECK((det == 1 || det == -1));
        CHECK(det == ((len % 2 == 0) ? 1 : -1));
    }
}

TEST_CASE("eval_word rejects mismatched input") {
    const LinearRep rep = kappa_rep(2);
    CHECK_THROWS_AS(eval_word(rep, DigitWord{3, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(eval_word(rep, DigitWord{2, {1, 0}}), std::invalid_argument);

    LinearRep broken = kappa_rep(2);
    broken.matrices.pop_back();
    CHECK_THROWS_AS(eval_rep(broken, 3), std::invalid_argument);
}
