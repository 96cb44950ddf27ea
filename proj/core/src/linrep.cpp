#include "zaremba/linrep.hpp"

#include <stdexcept>
#include <string>

namespace zaremba {

bool is_valid(const DigitWord& w) {
    if (w.k < 2 || w.digits.empty()) {
        return false;
    }
    for (int d : w.digits) {
        if (d < 0 || d >= w.k) {
            return false;
        }
    }
    if (w.digits.size() > 1 && w.digits.back() == 0) {
        return false;
    }
    return true;
}

DigitWord to_digits(std::uint64_t n, int k) {
    if (k < 2) {
        throw std::invalid_argument("to_digits: base must be >= 2, got " + std::to_string(k));
    }
    DigitWord w;
    w.k = k;
    if (n == 0) {
        w.digits.push_back(0);
        return w;
    }
    const auto base = static_cast<std::uint64_t>(k);
    while (n > 0) {
        w.digits.push_back(static_cast<int>(n % base));
        n /= base;
    }
    return w;
}

std::uint64_t to_number(const DigitWord& w) {
    if (!is_valid(w)) {
        throw std::invalid_argument("to_number: invalid digit word");
    }
    std::uint64_t n = 0;
    const auto base = static_cast<std::uint64_t>(w.k);
    for (auto it = w.digits.rbegin(); it != w.digits.rend(); ++it) {
        n = n * base + static_cast<std::uint64_t>(*it);
    }
    return n;
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        m.at(i, i) = 1;
    }
    return m;
}

IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs) {
    if (lhs.cols_ != rhs.rows_) {
        throw std::invalid_argument("IntMatrix: incompatible shapes");
    }
    IntMatrix out(lhs.rows_, rhs.cols_);
    for (int i = 0; i < lhs.rows_; ++i) {
        for (int l = 0; l < lhs.cols_; ++l) {
            const Int& x = lhs.at(i, l);
            if (x == 0) {
                continue;
            }
            for (int j = 0; j < rhs.cols_; ++j) {
                out.at(i, j) += x * rhs.at(l, j);
            }
        }
    }
    return out;
}

void validate(const LinearRep& rep) {
    if (rep.k < 2) {
        throw std::invalid_argument("LinearRep: base must be >= 2");
    }
    if (rep.dim < 1) {
        throw std::invalid_argument("LinearRep: dimension must be >= 1");
    }
    if (rep.matrices.size() != static_cast<std::size_t>(rep.k)) {
        throw std::invalid_argument("LinearRep: need exactly k matrices");
    }
    for (const IntMatrix& m : rep.matrices) {
        if (m.rows() != rep.dim || m.cols() != rep.dim) {
            throw std::invalid_argument("LinearRep: matrix shape mismatch");
        }
    }
    if (rep.row.size() != static_cast<std::size_t>(rep.dim) ||
        rep.col.size() != static_cast<std::size_t>(rep.dim)) {
        throw std::invalid_argument("LinearRep: vector length mismatch");
    }
}

LinearRep kappa_rep(int k) {
    if (k < 2) {
        throw std::invalid_argument("kappa_rep: base must be >= 2, got " + std::to_string(k));
    }
    LinearRep rep;
    rep.k = k;
    rep.dim = 2;
    rep.matrices.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        IntMatrix m(2, 2);
        m.at(0, 0) = i + 1;
        m.at(0, 1) = 1;
        m.at(1, 0) = 1;
        m.at(1, 1) = 0;
        rep.matrices.push_back(std::move(m));
    }
    rep.row = {Int(1), Int(0)};
    rep.col = {Int(1), Int(0)};
    return rep;
}

Int eval_word(const LinearRep& rep, const DigitWord& w) {
    validate(rep);
    if (!is_valid(w) || w.k != rep.k) {
        throw std::invalid_argument("eval_word: word invalid or base mismatch");
    }
    // Accumulate row * A[d0] * A[d1] * ... left to right; O(len * dim^2).
    std::vector<Int> acc = rep.row;
    std::vector<Int> next(static_cast<std::size_t>(rep.dim));
    for (int d : w.digits) {
        const IntMatrix& m = rep.matrices[static_cast<std::size_t>(d)];
        for (int j = 0; j < rep.dim; ++j) {
            Int s = 0;
            for (int i = 0; i < rep.dim; ++i) {
                s += acc[static_cast<std::size_t>(i)] * m.at(i, j);
            }
            next[static_cast<std::size_t>(j)] = std::move(s);
        }
        acc.swap(next);
    }
    Int out = 0;
    for (int i = 0; i < rep.dim; ++i) {
        out += acc[static_cast<std::size_t>(i)] * rep.col[static_cast<std::size_t>(i)];
    }
    return out;
}

Int eval_rep(const LinearRep& rep, std::uint64_t n) {
    return eval_word(rep, to_digits(n, rep.k));
}

} // namespace zaremba
