#include "zaremba/series.hpp"

#include "zaremba/errors.hpp"
#include "zaremba/kappa.hpp"
#include "zaremba/resource.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace zaremba {

IntSeries::IntSeries(std::size_t order) {
    if (order == 0) {
        throw std::invalid_argument("IntSeries: order must be >= 1");
    }
    resource::require(order * sizeof(Int), "IntSeries");
    c_.resize(order);
}

IntSeries IntSeries::constant(const Int& c, std::size_t order) {
    IntSeries s(order);
    s.c_[0] = c;
    return s;
}

bool IntSeries::is_zero() const {
    return first_nonzero() == order();
}

std::size_t IntSeries::first_nonzero() const {
    for (std::size_t n = 0; n < c_.size(); ++n) {
        if (c_[n] != 0) {
            return n;
        }
    }
    return c_.size();
}

IntSeries add(const IntSeries& a, const IntSeries& b) {
    IntSeries out(std::min(a.order(), b.order()));
    for (std::size_t n = 0; n < out.order(); ++n) {
        out[n] = a[n] + b[n];
    }
    return out;
}

IntSeries sub(const IntSeries& a, const IntSeries& b) {
    IntSeries out(std::min(a.order(), b.order()));
    for (std::size_t n = 0; n < out.order(); ++n) {
        out[n] = a[n] - b[n];
    }
    return out;
}

IntSeries mul(const IntSeries& a, const IntSeries& b) {
    const std::size_t order = std::min(a.order(), b.order());
    IntSeries out(order);
    // Schoolbook convolution, skipping zero coefficients of the left factor;
    // multiplying by a sparse polynomial costs O(nnz * order).
    for (std::size_t i = 0; i < std::min(a.order(), order); ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j < order; ++j) {
            if (b[j] != 0) {
                out[i + j] += a[i] * b[j];
            }
        }
    }
    return out;
}

IntSeries upsample(const IntSeries& s, int k) {
    if (k < 2) {
        throw std::invalid_argument("upsample: base must be >= 2");
    }
    IntSeries out(s.order());
    const auto kk = static_cast<std::size_t>(k);
    for (std::size_t n = 0; n * kk < out.order(); ++n) {
        out[n * kk] = s[n];
    }
    return out;
}

IntSeries negate(const IntSeries& s) {
    IntSeries out(s.order());
    for (std::size_t n = 0; n < out.order(); ++n) {
        out[n] = -s[n];
    }
    return out;
}

IntSeries kappa_series(int k, std::size_t order) {
    const KappaTable table = kappa_range(k, order);
    IntSeries out(order);
    if (table.uses_bigint()) {
        for (std::size_t n = 0; n < order; ++n) {
            out[n] = table.value(n);
        }
    } else {
        const auto vals = table.values_u64();
        for (std::size_t n = 0; n < order; ++n) {
            out[n] = vals[n];
        }
    }
    return out;
}

namespace {

// sum_{a<count} z^a
IntSeries ones_poly(std::size_t count, std::size_t order) {
    IntSeries p(order);
    for (std::size_t a = 0; a < count && a < order; ++a) {
        p[a] = 1;
    }
    return p;
}

// sum_{a<k} (a+1) z^a
IntSeries ramp_poly(int k, std::size_t order) {
    IntSeries p(order);
    for (std::size_t a = 0; a < static_cast<std::size_t>(k) && a < order; ++a) {
        p[a] = Int(a + 1);
    }
    return p;
}

} // namespace

IntSeries check_mfe(int k, std::size_t order) {
    if (k < 2) {
        throw std::invalid_argument("check_mfe: base must be >= 2");
    }
    const auto kk = static_cast<std::size_t>(k);
    if (order < kk * kk) {
        throw std::invalid_argument("check_mfe: order must be >= k^2");
    }
    const IntSeries K = kappa_series(k, order);
    const IntSeries lhs = sub(sub(K, mul(ramp_poly(k, order), upsample(K, k))),
                              mul(ones_poly(kk * kk, order), upsample(K, k * k)));
    const IntSeries rhs = negate(ones_poly(kk, order));
    return sub(lhs, rhs);
}

IntSeries check_homogeneous(int k, std::size_t order) {
    if (k < 2) {
        throw std::invalid_argument("check_homogeneous: base must be >= 2");
    }
    const auto kk = static_cast<std::size_t>(k);
    if (order < kk * kk * kk) {
        throw std::invalid_argument("check_homogeneous: order must be >= k^3");
    }
    const IntSeries K = kappa_series(k, order);
    const IntSeries p1 = ramp_poly(k, order);
    const IntSeries p2 = ones_poly(kk * kk, order);
    const IntSeries q = negate(ones_poly(kk, order));
    const IntSeries qk = upsample(q, k);

    // Eliminating the inhomogeneous term between the equation and its
    // z -> z^k image leaves a four-iterate identity with these weights.
    const IntSeries c0 = qk;
    const IntSeries c1 = negate(add(mul(qk, p1), q));
    const IntSeries c2 = negate(sub(mul(qk, p2), mul(q, upsample(p1, k))));
    const IntSeries c3 = mul(q, upsample(p2, k));

    IntSeries acc = mul(c0, K);
    acc = add(acc, mul(c1, upsample(K, k)));
    acc = add(acc, mul(c2, upsample(K, k * k)));
    acc = add(acc, mul(c3, upsample(K, k * k * k)));
    return acc;
}

namespace {

// Exact kernel of the (order x unknowns) coefficient matrix via rational
// row reduction. Columns are indexed (function, shift).
std::vector<std::vector<Rational>> rational_kernel(const std::vector<IntSeries>& funcs,
                                                   int poly_degree,
                                                   std::size_t order) {
    const std::size_t shifts = static_cast<std::size_t>(poly_degree) + 1;
    const std::size_t unknowns = funcs.size() * shifts;

    // M[r][c]: coefficient of z^r in z^e * F_f, c = f*shifts + e.
    std::vector<std::vector<Rational>> m(order, std::vector<Rational>(unknowns));
    for (std::size_t f = 0; f < funcs.size(); ++f) {
        const IntSeries& s = funcs[f];
        for (std::size_t e = 0; e < shifts; ++e) {
            const std::size_t c = f * shifts + e;
            for (std::size_t r = e; r < order; ++r) {
                m[r][c] = Rational(s[r - e]);
            }
        }
    }

    // Reduced row echelon form with exact rationals.
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < unknowns && row < order; ++col) {
        std::size_t sel = row;
        while (sel < order && m[sel][col] == 0) {
            ++sel;
        }
        if (sel == order) {
            continue;
        }
        std::swap(m[sel], m[row]);
        const Rational inv = m[row][col];
        for (std::size_t c = col; c < unknowns; ++c) {
            m[row][c] /= inv;
        }
        for (std::size_t r = 0; r < order; ++r) {
            if (r == row || m[r][col] == 0) {
                continue;
            }
            const Rational factor = m[r][col];
            for (std::size_t c = col; c < unknowns; ++c) {
                m[r][c] -= factor * m[row][c];
            }
        }
        pivot_col.push_back(col);
        ++row;
    }

    std::vector<bool> is_pivot(unknowns, false);
    for (std::size_t c : pivot_col) {
        is_pivot[c] = true;
    }

    std::vector<std::vector<Rational>> kernel;
    for (std::size_t free_col = 0; free_col < unknowns; ++free_col) {
        if (is_pivot[free_col]) {
            continue;
        }
        std::vector<Rational> v(unknowns);
        v[free_col] = 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r) {
            v[pivot_col[r]] = -m[r][free_col];
        }
        kernel.push_back(std::move(v));
    }
    return kernel;
}

// Scale a rational vector to a primitive integer vector with positive
// leading nonzero entry.
std::vector<Int> to_primitive(const std::vector<Rational>& v) {
    Int lcm = 1;
    for (const Rational& x : v) {
        const Int den = boost::multiprecision::denominator(x);
        lcm = boost::multiprecision::lcm(lcm, den);
    }
    std::vector<Int> out(v.size());
    Int content = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = boost::multiprecision::numerator(v[i]) * (lcm / boost::multiprecision::denominator(v[i]));
        content = boost::multiprecision::gcd(content, out[i]);
    }
    if (content > 1) {
        for (Int& x : out) {
            x /= content;
        }
    }
    for (const Int& x : out) {
        if (x != 0) {
            if (x < 0) {
                for (Int& y : out) {
                    y = -y;
                }
            }
            break;
        }
    }
    return out;
}

} // namespace

std::vector<SeriesRelation> series_relation_kernel(const std::vector<IntSeries>& funcs,
                                                   int poly_degree,
                                                   std::size_t order) {
    if (funcs.empty()) {
        throw std::invalid_argument("series_relation_kernel: no basis functions");
    }
    if (poly_degree < 0) {
        throw std::invalid_argument("series_relation_kernel: polynomial degree must be >= 0");
    }
    for (const IntSeries& s : funcs) {
        if (s.order() < order) {
            throw std::invalid_argument("series_relation_kernel: function order below probe order");
        }
    }
    const std::size_t shifts = static_cast<std::size_t>(poly_degree) + 1;
    const std::size_t unknowns = funcs.size() * shifts;
    if (unknowns > order) {
        throw std::invalid_argument(
            "series_relation_kernel: underdetermined probe (" + std::to_string(unknowns) +
            " unknowns > order " + std::to_string(order) + "); the kernel would be trivially nonzero");
    }
    resource::require(order * unknowns * sizeof(Rational), "series_relation_kernel");

    const auto kernel = rational_kernel(funcs, poly_degree, order);
    std::vector<SeriesRelation> basis;
    basis.reserve(kernel.size());
    for (const auto& v : kernel) {
        const std::vector<Int> w = to_primitive(v);
        SeriesRelation rel(funcs.size());
        for (std::size_t f = 0; f < funcs.size(); ++f) {
            rel[f].assign(w.begin() + static_cast<std::ptrdiff_t>(f * shifts),
                          w.begin() + static_cast<std::ptrdiff_t>((f + 1) * shifts));
        }
        basis.push_back(std::move(rel));
    }
    return basis;
}

RelationBasis relation_probe(int k, int degree_bound, int poly_degree, std::size_t order) {
    if (k < 2) {
        throw std::invalid_argument("relation_probe: base must be >= 2");
    }
    if (degree_bound < 1) {
        throw std::invalid_argument("relation_probe: degree bound must be >= 1");
    }
    RelationBasis out;
    out.k = k;
    out.degree_bound = degree_bound;
    out.poly_degree = poly_degree;
    out.order = order;

    const IntSeries K = kappa_series(k, order);
    const IntSeries Kk = upsample(K, k);

    std::vector<IntSeries> pow_k;
    std::vector<IntSeries> pow_kk;
    pow_k.push_back(IntSeries::constant(1, order));
    pow_kk.push_back(IntSeries::constant(1, order));
    for (int i = 1; i <= degree_bound; ++i) {
        pow_k.push_back(mul(pow_k.back(), K));
        pow_kk.push_back(mul(pow_kk.back(), Kk));
    }

    std::vector<IntSeries> funcs;
    for (int total = 0; total <= degree_bound; ++total) {
        for (int m0 = 0; m0 <= total; ++m0) {
            const int m1 = total - m0;
            out.monomials.emplace_back(m0, m1);
            funcs.push_back(mul(pow_k[static_cast<std::size_t>(m0)],
                                pow_kk[static_cast<std::size_t>(m1)]));
        }
    }
    out.basis = series_relation_kernel(funcs, poly_degree, order);
    return out;
}

std::vector<SeriesRelation> mfe_control_probe(int k, int poly_degree, std::size_t order) {
    if (k < 2) {
        throw std::invalid_argument("mfe_control_probe: base must be >= 2");
    }
    const IntSeries K = kappa_series(k, order);
    std::vector<IntSeries> funcs;
    funcs.push_back(IntSeries::constant(1, order));
    funcs.push_back(K);
    funcs.push_back(upsample(K, k));
    funcs.push_back(upsample(K, k * k));
    return series_relation_kernel(funcs, poly_degree, order);
}

SeriesRelation mfe_expected_relation(int k, int poly_degree) {
    const auto kk = static_cast<std::size_t>(k);
    const std::size_t width = static_cast<std::size_t>(poly_degree) + 1;
    if (width <= kk * kk - 1) {
        throw std::invalid_argument("mfe_expected_relation: poly_degree must reach k^2 - 1");
    }
    SeriesRelation rel(4, std::vector<Int>(width));
    for (std::size_t a = 0; a < kk; ++a) {
        rel[0][a] = 1; // + sum_{n<k} z^n alongside the constant function
    }
    rel[1][0] = 1; // K(z)
    for (std::size_t a = 0; a < kk; ++a) {
        rel[2][a] = -Int(a + 1); // - sum_{a<k} (a+1) z^a on K(z^k)
    }
    for (std::size_t a = 0; a < kk * kk; ++a) {
        rel[3][a] = -1; // - sum_{a<k^2} z^a on K(z^{k^2})
    }
    return rel;
}

bool mfe_control_recovered(int k, int poly_degree, std::size_t order) {
    const auto kk = static_cast<std::size_t>(k);
    const std::size_t min_degree = kk * kk - 1;
    if (static_cast<std::size_t>(poly_degree) < min_degree) {
        throw std::invalid_argument("mfe_control_recovered: poly_degree must reach k^2 - 1");
    }
    const IntSeries K = kappa_series(k, order);
    std::vector<IntSeries> funcs;
    funcs.push_back(IntSeries::constant(1, order));
    funcs.push_back(K);
    funcs.push_back(upsample(K, k));
    funcs.push_back(upsample(K, k * k));

    const auto basis = series_relation_kernel(funcs, poly_degree, order);

    // Every z-shift of the relation that stays within the degree bound is
    // itself in the kernel, so the kernel is exactly the relation up to
    // scalar iff its dimension equals the shift count and each shift
    // expands to zero against the actual series.
    const std::size_t shifts = static_cast<std::size_t>(poly_degree) - min_degree + 1;
    if (basis.size() != shifts) {
        return false;
    }
    const SeriesRelation expected = mfe_expected_relation(k, poly_degree);
    for (std::size_t e = 0; e < shifts; ++e) {
        IntSeries acc(order);
        for (std::size_t f = 0; f < funcs.size(); ++f) {
            IntSeries p(order);
            for (std::size_t c = 0; c + e < static_cast<std::size_t>(poly_degree) + 1 && c < order; ++c) {
                if (c + e < order) {
                    p[c + e] = expected[f][c];
                }
            }
            acc = add(acc, mul(p, funcs[f]));
        }
        if (!acc.is_zero()) {
            return false;
        }
    }
    // At the minimal bound the basis is one vector; require it verbatim
    // (both sides are primitive with positive leading coefficient).
    if (shifts == 1 && basis.front() != expected) {
        return false;
    }
    return true;
}

std::string to_json(const IntSeries& s) {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["order"] = s.order();
    auto& coeffs = j["coeffs"] = nlohmann::json::array();
    for (std::size_t n = 0; n < s.order(); ++n) {
        coeffs.push_back(s[n].str());
    }
    return j.dump();
}

std::string to_json(const RelationBasis& b) {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["k"] = b.k;
    j["degree_bound"] = b.degree_bound;
    j["poly_degree"] = b.poly_degree;
    j["order"] = b.order;
    auto& monos = j["monomials"] = nlohmann::json::array();
    for (const auto& [m0, m1] : b.monomials) {
        monos.push_back({m0, m1});
    }
    auto& basis = j["basis"] = nlohmann::json::array();
    for (const SeriesRelation& rel : b.basis) {
        nlohmann::json jr = nlohmann::json::array();
        for (const auto& poly : rel) {
            nlohmann::json jp = nlohmann::json::array();
            for (const Int& c : poly) {
                jp.push_back(c.str());
            }
            jr.push_back(std::move(jp));
        }
        basis.push_back(std::move(jr));
    }
    return j.dump();
}

} // namespace zaremba
