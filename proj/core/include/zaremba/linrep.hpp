#pragma once

#include "zaremba/bigint.hpp"

#include <cstdint>
#include <vector>

namespace zaremba {

// Base-k digit word, least-significant digit first. Zero is the one-letter
// word [0]; no other word has a most-significant zero digit.
struct DigitWord {
    int k = 2;
    std::vector<int> digits;
};

bool is_valid(const DigitWord& w);

// Decomposes n into its base-k digits, least-significant first.
DigitWord to_digits(std::uint64_t n, int k);

// Inverse of to_digits: sum of digits[j] * k^j.
std::uint64_t to_number(const DigitWord& w);

// Dense integer matrix, just large enough for linear-representation work.
class IntMatrix {
public:
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

    friend IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs);

private:
    int rows_;
    int cols_;
    std::vector<Int> a_;
};

// A k-regular sequence given by digit products: n maps to
// row * A[d0] * A[d1] * ... * A[ds] * col, digits least-significant first
// and the least-significant digit's matrix applied leftmost.
struct LinearRep {
    int k = 2;
    int dim = 0;
    std::vector<IntMatrix> matrices; // exactly k of them, dim x dim
    std::vector<Int> row;            // length dim
    std::vector<Int> col;            // length dim
};

void validate(const LinearRep& rep);

// The representation of the bounded-partial-quotient continuant sequence:
// dim 2, A_i = [[i+1, 1], [1, 0]], row = col^T = [1, 0].
LinearRep kappa_rep(int k);

// Exact evaluation of the digit product for a given word.
Int eval_word(const LinearRep& rep, const DigitWord& w);

// Exact evaluation at index n (digit decomposition + product).
Int eval_rep(const LinearRep& rep, std::uint64_t n);

} // namespace zaremba
