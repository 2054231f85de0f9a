#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mtc/abelian_group.hpp"
#include "mtc/cyclo.hpp"
#include "mtc/number_theory.hpp"
#include "mtc/report.hpp"

namespace mtc {

inline constexpr int kMaxRank = 64;

/// Raised when an operation needs a valid fusion ring (or consistent
/// dimensions) and does not get one.
class FusionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class GradingError : public FusionError {
public:
    using FusionError::FusionError;
};

struct Dimensions {
    std::vector<double> numeric;
    std::optional<std::vector<Cyclotomic>> exact;

    double global() const {
        double total = 0;
        for (double d : numeric) {
            total += d * d;
        }
        return total;
    }
};

namespace detail {

template <class T>
class Lazy {
public:
    const T& get(const std::function<T()>& make) const {
        std::call_once(once_, [&] { value_.emplace(make()); });
        return *value_;
    }

private:
    mutable std::once_flag once_;
    mutable std::optional<T> value_;
};

}  // namespace detail

/// Based ring with unit 0, an involution `dual`, and structure constants
/// N_{ab}^c stored densely as coeffs[(a*r + b)*r + c]. Construction checks
/// shapes only; use validate() for the ring axioms.
class FusionRing {
public:
    using Product = std::vector<std::pair<int, int>>;  // (label, multiplicity)

    FusionRing(int rank, std::vector<int> dual, std::vector<int> coeffs, std::vector<std::string> names = {})
        : rank_(rank), dual_(std::move(dual)), coeffs_(std::move(coeffs)), names_(std::move(names)) {
        if (rank_ < 1 || rank_ > kMaxRank) {
            throw std::invalid_argument("fusion ring rank must be between 1 and " + std::to_string(kMaxRank));
        }
        const auto r = static_cast<std::size_t>(rank_);
        if (dual_.size() != r) {
            throw std::invalid_argument("fusion ring dual has the wrong length");
        }
        for (int d : dual_) {
            if (d < 0 || d >= rank_) {
                throw std::invalid_argument("fusion ring dual label out of range");
            }
        }
        if (coeffs_.size() != r * r * r) {
            throw std::invalid_argument("fusion ring needs rank^3 coefficients");
        }
        for (int v : coeffs_) {
            if (v < 0) {
                throw std::invalid_argument("fusion coefficients must be nonnegative");
            }
        }
        if (names_.empty()) {
            for (int a = 0; a < rank_; ++a) {
                names_.push_back(std::to_string(a));
            }
        } else if (names_.size() != r) {
            throw std::invalid_argument("fusion ring names have the wrong length");
        }
        products_.resize(r * r);
        for (int a = 0; a < rank_; ++a) {
            for (int b = 0; b < rank_; ++b) {
                auto& p = products_[a * r + b];
                for (int c = 0; c < rank_; ++c) {
                    if (const int v = N(a, b, c)) {
                        p.emplace_back(c, v);
                    }
                }
            }
        }
    }

    int rank() const { return rank_; }
    int dual(int a) const { return dual_.at(a); }
    const std::vector<int>& duals() const { return dual_; }
    const std::vector<int>& coeffs() const { return coeffs_; }

    int N(int a, int b, int c) const { return coeffs_[(static_cast<std::size_t>(a) * rank_ + b) * rank_ + c]; }

    const Product& product(int a, int b) const { return products_[static_cast<std::size_t>(a) * rank_ + b]; }

    const std::string& name(int a) const { return names_.at(a); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<int> find(std::string_view name) const {
        for (int a = 0; a < rank_; ++a) {
            if (names_[a] == name) {
                return a;
            }
        }
        return std::nullopt;
    }

    /// Label for `name`, throwing std::out_of_range if absent.
    int label(std::string_view name) const {
        if (auto a = find(name)) {
            return *a;
        }
        throw std::out_of_range("no label named '" + std::string(name) + "'");
    }

    bool is_self_dual(int a) const { return dual_.at(a) == a; }

    bool is_invertible(int a) const {
        const auto& p = product(a, dual_[a]);
        return p.size() == 1 && p[0] == std::pair{0, 1};
    }

    bool is_commutative() const {
        for (int a = 0; a < rank_; ++a) {
            for (int b = a + 1; b < rank_; ++b) {
                if (product(a, b) != product(b, a)) {
                    return false;
                }
            }
        }
        return true;
    }

    bool is_pointed() const {
        for (int a = 0; a < rank_; ++a) {
            if (!is_invertible(a)) {
                return false;
            }
        }
        return true;
    }

    const std::optional<std::vector<Cyclotomic>>& exact_dims() const { return exact_dims_; }

    /// Copy of the ring carrying exact dimensions (e.g. S_{0a}/S_{00}).
    FusionRing with_exact_dims(std::vector<Cyclotomic> dims) const {
        if (dims.size() != static_cast<std::size_t>(rank_)) {
            throw std::invalid_argument("exact dimension vector has the wrong length");
        }
        FusionRing copy(rank_, dual_, coeffs_, names_);
        copy.exact_dims_ = std::move(dims);
        return copy;
    }

    FusionRing with_names(std::vector<std::string> names) const {
        FusionRing copy(rank_, dual_, coeffs_, std::move(names));
        copy.exact_dims_ = exact_dims_;
        return copy;
    }

    /// Same structure constants and duality (names and attached dimensions are ignored).
    friend bool operator==(const FusionRing& x, const FusionRing& y) {
        return x.rank_ == y.rank_ && x.dual_ == y.dual_ && x.coeffs_ == y.coeffs_;
    }

    const Dimensions& cached_dims(const std::function<Dimensions()>& make) const { return dims_cache_->get(make); }

private:
    int rank_;
    std::vector<int> dual_;
    std::vector<int> coeffs_;
    std::vector<std::string> names_;
    std::vector<Product> products_;
    std::optional<std::vector<Cyclotomic>> exact_dims_;
    std::shared_ptr<detail::Lazy<Dimensions>> dims_cache_ = std::make_shared<detail::Lazy<Dimensions>>();
};

/// Accumulates structure constants for hand-built rings.
class RingBuilder {
public:
    explicit RingBuilder(int rank) : rank_(rank), coeffs_(static_cast<std::size_t>(rank) * rank * rank, 0) {
        if (rank < 1 || rank > kMaxRank) {
            throw std::invalid_argument("fusion ring rank must be between 1 and " + std::to_string(kMaxRank));
        }
    }

    void add(int a, int b, int c, int multiplicity = 1) {
        coeffs_[(static_cast<std::size_t>(a) * rank_ + b) * rank_ + c] += multiplicity;
    }

    /// Adds a*b -> c and b*a -> c (once if a == b).
    void add_symmetric(int a, int b, int c, int multiplicity = 1) {
        add(a, b, c, multiplicity);
        if (a != b) {
            add(b, a, c, multiplicity);
        }
    }

    FusionRing build(std::vector<int> dual, std::vector<std::string> names = {}) const {
        return FusionRing(rank_, std::move(dual), coeffs_, std::move(names));
    }

private:
    int rank_;
    std::vector<int> coeffs_;
};

// ---------------------------------------------------------------------------
// Axioms

inline VerificationReport validate(const FusionRing& ring) {
    VerificationReport report;
    const int r = ring.rank();
    if (ring.dual(0) != 0) {
        report.fail("dual_unit", {0}, "dual(0) must be 0");
    }
    for (int a = 0; a < r; ++a) {
        if (ring.dual(ring.dual(a)) != a) {
            report.fail("dual_involution", {a});
        }
    }
    for (int b = 0; b < r; ++b) {
        for (int c = 0; c < r; ++c) {
            const int delta = b == c ? 1 : 0;
            if (ring.N(0, b, c) != delta) {
                report.fail("unit_left", {b, c});
            }
            if (ring.N(b, 0, c) != delta) {
                report.fail("unit_right", {b, c});
            }
        }
    }
    for (int a = 0; a < r; ++a) {
        for (int b = 0; b < r; ++b) {
            const int expected = b == ring.dual(a) ? 1 : 0;
            if (ring.N(a, b, 0) != expected) {
                report.fail("duality", {a, b}, "N_{ab}^0 must be 1 exactly when b = a*");
            }
        }
    }
    if (!report.ok()) {
        return report;  // the symmetries below index through dual()
    }
    for (int a = 0; a < r; ++a) {
        for (int b = 0; b < r; ++b) {
            for (int c = 0; c < r; ++c) {
                const int v = ring.N(a, b, c);
                if (v != ring.N(ring.dual(b), ring.dual(a), ring.dual(c))) {
                    report.fail("frobenius_dual", {a, b, c}, "N_{ab}^c != N_{b*a*}^{c*}");
                }
                if (v != ring.N(ring.dual(a), c, b)) {
                    report.fail("frobenius_rotate", {a, b, c}, "N_{ab}^c != N_{a*c}^b");
                }
            }
        }
    }
    std::vector<int> left(r);
    std::vector<int> right(r);
    for (int a = 0; a < r; ++a) {
        for (int b = 0; b < r; ++b) {
            for (int c = 0; c < r; ++c) {
                std::fill(left.begin(), left.end(), 0);
                std::fill(right.begin(), right.end(), 0);
                for (auto [e, m] : ring.product(a, b)) {
                    for (auto [d, k] : ring.product(e, c)) {
                        left[d] += m * k;
                    }
                }
                for (auto [f, m] : ring.product(b, c)) {
                    for (auto [d, k] : ring.product(a, f)) {
                        right[d] += m * k;
                    }
                }
                for (int d = 0; d < r; ++d) {
                    if (left[d] != right[d]) {
                        report.fail("associativity", {a, b, c, d},
                                    "(ab)c gives " + std::to_string(left[d]) + ", a(bc) gives " +
                                        std::to_string(right[d]));
                    }
                }
            }
        }
    }
    return report;
}

namespace detail {

inline void require_valid(const FusionRing& ring) {
    const auto report = validate(ring);
    if (!report.ok()) {
        const auto& f = report.failures.front();
        std::string where;
        for (int i : f.indices) {
            where += (where.empty() ? "" : ",") + std::to_string(i);
        }
        throw FusionError("invalid fusion ring: " + f.check + " fails at (" + where + ")");
    }
}

inline Dimensions compute_dims(const FusionRing& ring) {
    require_valid(ring);
    const int r = ring.rank();
    // M_{bc} = sum_a N_{ab}^c has the dimension vector as Perron eigenvector.
    std::vector<long double> M(static_cast<std::size_t>(r) * r, 0);
    for (int a = 0; a < r; ++a) {
        for (int b = 0; b < r; ++b) {
            for (auto [c, m] : ring.product(a, b)) {
                M[b * r + c] += m;
            }
        }
    }
    std::vector<long double> v(r, 1);
    std::vector<long double> w(r);
    for (int iter = 0; iter < 200000; ++iter) {
        for (int b = 0; b < r; ++b) {
            long double s = 0;
            for (int c = 0; c < r; ++c) {
                s += M[b * r + c] * v[c];
            }
            w[b] = s;
        }
        const long double scale = w[0];
        long double change = 0;
        for (int b = 0; b < r; ++b) {
            w[b] /= scale;
            change = std::max(change, std::fabs(w[b] - v[b]));
        }
        v.swap(w);
        if (change < 1e-17L) {
            break;
        }
    }
    Dimensions dims;
    dims.numeric.assign(v.begin(), v.end());
    for (int a = 0; a < r; ++a) {
        for (int b = 0; b < r; ++b) {
            double rhs = 0;
            for (auto [c, m] : ring.product(a, b)) {
                rhs += m * dims.numeric[c];
            }
            const double lhs = dims.numeric[a] * dims.numeric[b];
            if (std::fabs(lhs - rhs) > 1e-9 * std::max(1.0, lhs)) {
                throw FusionError("Frobenius-Perron iteration did not converge to a multiplicative vector");
            }
        }
    }
    if (const auto& exact = ring.exact_dims()) {
        for (int a = 0; a < r; ++a) {
            const double d = (*exact)[a].to_complex().real();
            if (std::fabs(d - dims.numeric[a]) > 1e-7 * std::max(1.0, d)) {
                throw FusionError("attached exact dimension of label " + std::to_string(a) +
                                  " disagrees with the Frobenius-Perron dimension");
            }
            dims.numeric[a] = d;
        }
        dims.exact = exact;
    }
    return dims;
}

}  // namespace detail

/// Frobenius-Perron dimensions. When exact dimensions are attached they are
/// cross-checked against power iteration and then take precedence.
inline Dimensions fp_dims(const FusionRing& ring) {
    return ring.cached_dims([&] { return detail::compute_dims(ring); });
}

// ---------------------------------------------------------------------------
// Invertibles and subrings

struct InvertibleGroup {
    std::vector<int> labels;                // ascending, labels[0] == 0
    std::vector<std::vector<int>> table;    // indices into labels
    std::optional<AbelianGroup> structure;  // absent if the group is not abelian

    std::size_t order() const { return labels.size(); }
};

inline InvertibleGroup invertibles(const FusionRing& ring) {
    InvertibleGroup out;
    std::vector<int> index(ring.rank(), -1);
    for (int a = 0; a < ring.rank(); ++a) {
        if (ring.is_invertible(a)) {
            index[a] = static_cast<int>(out.labels.size());
            out.labels.push_back(a);
        }
    }
    const std::size_t n = out.labels.size();
    out.table.assign(n, std::vector<int>(n, -1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto& p = ring.product(out.labels[i], out.labels[j]);
            if (p.size() != 1 || p[0].second != 1 || index[p[0].first] < 0) {
                throw FusionError("product of invertible labels is not invertible");
            }
            out.table[i][j] = index[p[0].first];
        }
    }
    try {
        out.structure = decompose_abelian(out.table);
    } catch (const GroupStructureError&) {
        out.structure.reset();
    }
    return out;
}

/// Smallest duality-closed set of labels containing `seed` and 0 that is
/// closed under taking constituents of products.
inline std::vector<int> subring_closure(const FusionRing& ring, const std::vector<int>& seed) {
    std::vector<bool> in(ring.rank(), false);
    std::vector<int> members;
    auto push = [&](int a) {
        if (!in[a]) {
            in[a] = true;
            members.push_back(a);
        }
    };
    push(0);
    for (int a : seed) {
        push(a);
        push(ring.dual(a));
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            for (const auto& [x, y] : {std::pair{members[i], members[j]}, std::pair{members[j], members[i]}}) {
                for (auto [c, m] : ring.product(x, y)) {
                    push(c);
                    push(ring.dual(c));
                }
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

inline bool is_closed(const FusionRing& ring, const std::vector<int>& labels) {
    return subring_closure(ring, labels) == [&] {
        auto sorted = labels;
        if (std::find(sorted.begin(), sorted.end(), 0) == sorted.end()) {
            sorted.push_back(0);
        }
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        return sorted;
    }();
}

inline std::vector<int> adjoint_subring(const FusionRing& ring) {
    std::vector<int> seed;
    for (int a = 0; a < ring.rank(); ++a) {
        for (auto [c, m] : ring.product(a, ring.dual(a))) {
            seed.push_back(c);
        }
    }
    return subring_closure(ring, seed);
}

namespace detail {

/// Integer value of d_a^2, exact when possible.
inline std::optional<std::int64_t> dim_squared(const Dimensions& dims, int a) {
    if (dims.exact) {
        const Cyclotomic& d = (*dims.exact)[a];
        if (auto k = (d * d).as_integer()) {
            return k->convert_to<std::int64_t>();
        }
        return std::nullopt;
    }
    const double sq = dims.numeric[a] * dims.numeric[a];
    const double k = std::round(sq);
    if (std::fabs(sq - k) > 1e-7 * std::max(1.0, sq)) {
        return std::nullopt;
    }
    return static_cast<std::int64_t>(k);
}

inline bool dim_is_integer(const Dimensions& dims, int a) {
    if (dims.exact) {
        return (*dims.exact)[a].as_integer().has_value();
    }
    const double d = dims.numeric[a];
    return std::fabs(d - std::round(d)) < 1e-7 * std::max(1.0, d);
}

}  // namespace detail

inline std::vector<int> integral_subring(const FusionRing& ring) {
    const auto& dims = fp_dims(ring);
    std::vector<int> labels;
    for (int a = 0; a < ring.rank(); ++a) {
        if (detail::dim_is_integer(dims, a)) {
            labels.push_back(a);
        }
    }
    if (!is_closed(ring, labels)) {
        throw FusionError("integer-dimensional labels do not close under fusion");
    }
    return labels;
}

/// Subring on `labels` (which must be fusion-closed), relabeled in ascending order.
inline FusionRing restrict(const FusionRing& ring, std::vector<int> labels) {
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    if (labels.empty() || labels.front() != 0 || !is_closed(ring, labels)) {
        throw FusionError("restriction needs a fusion-closed label set containing 0");
    }
    std::vector<int> index(ring.rank(), -1);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        index[labels[i]] = static_cast<int>(i);
    }
    const int r = static_cast<int>(labels.size());
    RingBuilder builder(r);
    std::vector<int> dual(r);
    std::vector<std::string> names(r);
    for (int i = 0; i < r; ++i) {
        dual[i] = index[ring.dual(labels[i])];
        names[i] = ring.name(labels[i]);
        for (int j = 0; j < r; ++j) {
            for (auto [c, m] : ring.product(labels[i], labels[j])) {
                builder.add(i, j, index[c], m);
            }
        }
    }
    FusionRing out = builder.build(std::move(dual), std::move(names));
    if (const auto& exact = ring.exact_dims()) {
        std::vector<Cyclotomic> dims;
        for (int a : labels) {
            dims.push_back((*exact)[a]);
        }
        out = out.with_exact_dims(std::move(dims));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Gradings

struct GradedDecomposition {
    AbelianGroup group;
    std::vector<int> component;  // label -> group element (index into group.coords)
    std::vector<std::int64_t> squarefree;  // GN grading only: n_a with d_a in Z*sqrt(n_a)

    std::vector<int> fiber(int element) const {
        std::vector<int> out;
        for (std::size_t a = 0; a < component.size(); ++a) {
            if (component[a] == element) {
                out.push_back(static_cast<int>(a));
            }
        }
        return out;
    }

    int trivial_element() const { return component.at(0); }
};

namespace detail {

/// Builds the grading group from a label -> class assignment, checking that
/// the classes multiply consistently and that the result is an abelian group.
inline GradedDecomposition grading_from_classes(const FusionRing& ring, const std::vector<int>& cls, int classes) {
    std::vector<int> rep(classes, -1);
    for (int a = ring.rank() - 1; a >= 0; --a) {
        rep[cls[a]] = a;
    }
    if (cls[0] != 0) {
        throw GradingError("unit must lie in class 0");
    }
    std::vector<std::vector<int>> table(classes, std::vector<int>(classes, -1));
    for (int a = 0; a < ring.rank(); ++a) {
        for (int b = 0; b < ring.rank(); ++b) {
            for (auto [c, m] : ring.product(a, b)) {
                int& slot = table[cls[a]][cls[b]];
                if (slot == -1) {
                    slot = cls[c];
                } else if (slot != cls[c]) {
                    throw GradingError("grading is not compatible with fusion at (" + std::to_string(a) + ", " +
                                       std::to_string(b) + ")");
                }
            }
        }
    }
    GradedDecomposition out;
    try {
        out.group = decompose_abelian(table);
    } catch (const GroupStructureError& e) {
        throw GradingError(std::string("grading classes do not form an abelian group: ") + e.what());
    }
    out.component = cls;
    return out;
}

}  // namespace detail

inline GradedDecomposition universal_grading(const FusionRing& ring) {
    detail::require_valid(ring);
    const auto ad = adjoint_subring(ring);
    const int r = ring.rank();
    std::vector<std::vector<int>> coset(r);
    for (int x = 0; x < r; ++x) {
        std::set<int> s;
        for (int a : ad) {
            for (auto [c, m] : ring.product(x, a)) {
                s.insert(c);
            }
        }
        coset[x].assign(s.begin(), s.end());
    }
    std::vector<int> cls(r, -1);
    int classes = 0;
    for (int x = 0; x < r; ++x) {
        if (cls[x] >= 0) {
            continue;
        }
        for (int y : coset[x]) {
            if (coset[y] != coset[x]) {
                throw GradingError("adjoint cosets do not partition the labels");
            }
            cls[y] = classes;
        }
        if (cls[x] != classes) {
            throw GradingError("label is missing from its own adjoint coset");
        }
        ++classes;
    }
    return detail::grading_from_classes(ring, cls, classes);
}

/// Grading by the square-free part n_a of d_a^2; needs weakly integral dimensions.
inline GradedDecomposition gn_grading(const FusionRing& ring) {
    const auto& dims = fp_dims(ring);
    const int r = ring.rank();
    std::vector<std::int64_t> n(r);
    for (int a = 0; a < r; ++a) {
        const auto sq = detail::dim_squared(dims, a);
        if (!sq) {
            throw FusionError("ring is not weakly integral: d^2 of label " + std::to_string(a) + " is not an integer");
        }
        n[a] = nt::square_and_squarefree(*sq).second;
    }
    std::vector<std::int64_t> values{1};
    for (auto v : n) {
        if (std::find(values.begin(), values.end(), v) == values.end()) {
            values.push_back(v);
        }
    }
    std::vector<int> cls(r);
    for (int a = 0; a < r; ++a) {
        cls[a] = static_cast<int>(std::find(values.begin(), values.end(), n[a]) - values.begin());
    }
    auto out = detail::grading_from_classes(ring, cls, static_cast<int>(values.size()));
    if (!out.group.is_elementary_2()) {
        throw GradingError("square-free dimension classes do not form an elementary abelian 2-group");
    }
    out.squarefree = n;
    return out;
}

// ---------------------------------------------------------------------------
// Families and structure predicates

inline bool is_generalized_ty(const FusionRing& ring) {
    for (int a = 0; a < ring.rank(); ++a) {
        if (ring.is_invertible(a)) {
            continue;
        }
        for (int b = 0; b < ring.rank(); ++b) {
            if (ring.is_invertible(b)) {
                continue;
            }
            for (auto [c, m] : ring.product(a, b)) {
                if (!ring.is_invertible(c)) {
                    return false;
                }
            }
        }
    }
    return true;
}

/// Group ring of Z/d_1 x ... x Z/d_k with mixed-radix labels (first factor fastest).
inline FusionRing group_ring(const std::vector<int>& factors) {
    int order = 1;
    for (int d : factors) {
        if (d < 1) {
            throw std::invalid_argument("group factors must be positive");
        }
        order *= d;
    }
    auto digits = [&](int x) {
        std::vector<int> out;
        for (int d : factors) {
            out.push_back(x % d);
            x /= d;
        }
        return out;
    };
    auto index = [&](const std::vector<int>& digit) {
        int x = 0;
        for (int i = static_cast<int>(factors.size()) - 1; i >= 0; --i) {
            x = x * factors[i] + nt::mod(digit[i], factors[i]);
        }
        return x;
    };
    RingBuilder builder(order);
    std::vector<int> dual(order);
    for (int x = 0; x < order; ++x) {
        const auto dx = digits(x);
        auto neg = dx;
        for (auto& v : neg) {
            v = -v;
        }
        dual[x] = index(neg);
        for (int y = 0; y < order; ++y) {
            const auto dy = digits(y);
            auto sum = dx;
            for (std::size_t i = 0; i < sum.size(); ++i) {
                sum[i] += dy[i];
            }
            builder.add(x, y, index(sum));
        }
    }
    return builder.build(std::move(dual));
}

/// Character ring of the dihedral group of order 2m (m odd): trivial, sign,
/// and the 2-dimensional rho_1..rho_{(m-1)/2}.
inline FusionRing dihedral_rep_ring(int m) {
    if (m < 1 || m % 2 == 0) {
        throw std::invalid_argument("dihedral_rep_ring needs an odd positive m");
    }
    const int h = (m - 1) / 2;
    const int r = 2 + h;
    RingBuilder builder(r);
    std::vector<std::string> names{"1", "sgn"};
    for (int k = 1; k <= h; ++k) {
        names.push_back("rho" + std::to_string(k));
    }
    auto rho = [&](int k) { return 1 + k; };
    // rho_k for any integer k, folded into 1..h; k = 0 mod m is 1 + sgn.
    auto add_rho = [&](int a, int b, int k) {
        k = static_cast<int>(nt::mod(k, m));
        if (k > h) {
            k = m - k;
        }
        if (k == 0) {
            builder.add(a, b, 0);
            builder.add(a, b, 1);
        } else {
            builder.add(a, b, rho(k));
        }
    };
    builder.add(0, 0, 0);
    builder.add_symmetric(0, 1, 1);
    builder.add(1, 1, 0);
    for (int k = 1; k <= h; ++k) {
        builder.add_symmetric(0, rho(k), rho(k));
        builder.add_symmetric(1, rho(k), rho(k));
        for (int j = 1; j <= h; ++j) {
            add_rho(rho(j), rho(k), j + k);
            add_rho(rho(j), rho(k), j - k);
        }
    }
    std::vector<int> dual(r);
    std::iota(dual.begin(), dual.end(), 0);
    return builder.build(std::move(dual), std::move(names));
}

/// External product: label (i, j) becomes i * b.rank() + j.
inline FusionRing deligne_product(const FusionRing& a, const FusionRing& b) {
    const int ra = a.rank();
    const int rb = b.rank();
    if (ra * rb > kMaxRank) {
        throw std::invalid_argument("Deligne product exceeds the rank cap of " + std::to_string(kMaxRank));
    }
    RingBuilder builder(ra * rb);
    std::vector<int> dual(ra * rb);
    std::vector<std::string> names(ra * rb);
    for (int i = 0; i < ra; ++i) {
        for (int j = 0; j < rb; ++j) {
            const int x = i * rb + j;
            dual[x] = a.dual(i) * rb + b.dual(j);
            names[x] = a.name(i) + "*" + b.name(j);
            for (int k = 0; k < ra; ++k) {
                for (int l = 0; l < rb; ++l) {
                    for (auto [c1, m1] : a.product(i, k)) {
                        for (auto [c2, m2] : b.product(j, l)) {
                            builder.add(x, k * rb + l, c1 * rb + c2, m1 * m2);
                        }
                    }
                }
            }
        }
    }
    FusionRing out = builder.build(std::move(dual), std::move(names));
    if (a.exact_dims() && b.exact_dims()) {
        std::vector<Cyclotomic> dims;
        for (int i = 0; i < ra; ++i) {
            for (int j = 0; j < rb; ++j) {
                dims.push_back((*a.exact_dims())[i] * (*b.exact_dims())[j]);
            }
        }
        out = out.with_exact_dims(std::move(dims));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Isomorphisms

/// All label bijections phi: a -> b with phi(0) = 0, phi(x*) = phi(x)*, and
/// N^b_{phi x, phi y}^{phi z} = N^a_{xy}^z, in lexicographic order. A nonzero
/// `limit` stops after that many.
inline std::vector<std::vector<int>> ring_isomorphisms(const FusionRing& a, const FusionRing& b, std::size_t limit = 0) {
    std::vector<std::vector<int>> found;
    const int r = a.rank();
    if (r != b.rank()) {
        return found;
    }
    const auto& da = fp_dims(a).numeric;
    const auto& db = fp_dims(b).numeric;
    auto signature_matches = [&](int x, int y) {
        return std::fabs(da[x] - db[y]) < 1e-7 * std::max(1.0, da[x]) && a.is_self_dual(x) == b.is_self_dual(y) &&
               a.N(x, x, x) == b.N(y, y, y) && a.product(x, x).size() == b.product(y, y).size();
    };
    std::vector<std::vector<int>> candidates(r);
    for (int x = 0; x < r; ++x) {
        for (int y = 0; y < r; ++y) {
            if ((x == 0) == (y == 0) && signature_matches(x, y)) {
                candidates[x].push_back(y);
            }
        }
        if (candidates[x].empty()) {
            return found;
        }
    }
    std::vector<int> phi(r, -1);
    std::vector<bool> used(r, false);
    std::vector<int> assigned;
    auto consistent = [&](int x) {
        const int fx = phi[x];
        for (int y : assigned) {
            const int fy = phi[y];
            for (int z : assigned) {
                const int fz = phi[z];
                if (a.N(x, y, z) != b.N(fx, fy, fz) || a.N(y, x, z) != b.N(fy, fx, fz) ||
                    a.N(y, z, x) != b.N(fy, fz, fx)) {
                    return false;
                }
            }
        }
        return true;
    };
    std::function<bool(int)> extend = [&](int x) -> bool {
        if (x == r) {
            found.push_back(phi);
            return limit != 0 && found.size() >= limit;
        }
        if (phi[x] >= 0) {
            return extend(x + 1);  // fixed earlier as the dual of a smaller label
        }
        for (int y : candidates[x]) {
            if (used[y]) {
                continue;
            }
            const int xd = a.dual(x);
            const int yd = b.dual(y);
            if (xd != x && (used[yd] || std::find(candidates[xd].begin(), candidates[xd].end(), yd) ==
                                            candidates[xd].end())) {
                continue;
            }
            phi[x] = y;
            used[y] = true;
            assigned.push_back(x);
            bool ok = consistent(x);
            if (ok && xd != x) {
                phi[xd] = yd;
                used[yd] = true;
                assigned.push_back(xd);
                ok = consistent(xd);
            }
            if (ok && extend(x + 1)) {
                return true;
            }
            if (xd != x && phi[xd] == yd) {
                assigned.pop_back();
                used[yd] = false;
                phi[xd] = -1;
            }
            assigned.pop_back();
            used[y] = false;
            phi[x] = -1;
        }
        return false;
    };
    extend(0);
    return found;
}

inline bool grothendieck_equivalent(const FusionRing& a, const FusionRing& b) {
    return !ring_isomorphisms(a, b, 1).empty();
}

}  // namespace mtc
