#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "mtc/cyclo.hpp"
#include "mtc/fusion.hpp"
#include "mtc/moddata.hpp"
#include "mtc/number_theory.hpp"

namespace mtc {

// ---------------------------------------------------------------------------
// Metric groups

/// Finite abelian group Z/d_1 x ... x Z/d_k (elements in mixed radix, first
/// factor fastest, matching group_ring) with a quadratic form
/// q(x) = exp(2 pi i angle(x)).
class MetricGroup {
public:
    MetricGroup(std::vector<int> factors, std::vector<Rational> angles)
        : factors_(std::move(factors)), angles_(std::move(angles)) {
        int n = 1;
        for (int d : factors_) {
            if (d < 1) {
                throw std::invalid_argument("metric group factors must be positive");
            }
            n *= d;
        }
        if (static_cast<int>(angles_.size()) != n) {
            throw std::invalid_argument("metric group needs one form value per element");
        }
        // Angles are kept as integers over a common denominator so the
        // O(n^3) bicharacter check stays in machine arithmetic.
        den_ = 1;
        for (auto& t : angles_) {
            t = reduce(t);
            den_ = std::lcm(den_, boost::multiprecision::denominator(t).convert_to<std::int64_t>());
        }
        for (const auto& t : angles_) {
            const auto num = boost::multiprecision::numerator(t).convert_to<std::int64_t>();
            const auto den = boost::multiprecision::denominator(t).convert_to<std::int64_t>();
            nums_.push_back(num * (den_ / den));
        }
        add_.resize(static_cast<std::size_t>(n) * n);
        neg_.resize(n);
        for (int x = 0; x < n; ++x) {
            const auto cx = coords(x);
            for (int y = 0; y < n; ++y) {
                auto c = coords(y);
                for (std::size_t i = 0; i < c.size(); ++i) {
                    c[i] += cx[i];
                }
                add_[static_cast<std::size_t>(x) * n + y] = index(c);
            }
            auto c = cx;
            for (auto& v : c) {
                v = -v;
            }
            neg_[x] = index(c);
        }
        if (nums_[0] != 0) {
            throw std::invalid_argument("quadratic form must be trivial on 0");
        }
        for (int x = 0; x < n; ++x) {
            if (nums_[neg(x)] != nums_[x]) {
                throw std::invalid_argument("quadratic form must satisfy q(-x) = q(x)");
            }
        }
        for (int x = 0; x < n; ++x) {
            for (int y = 0; y < n; ++y) {
                for (int z = 0; z < n; ++z) {
                    if (b_num(add(x, y), z) != nt::mod(b_num(x, z) + b_num(y, z), den_)) {
                        throw std::invalid_argument("associated form of q is not a bicharacter");
                    }
                }
            }
        }
    }

    /// Form given by roots of unity rather than angles.
    static MetricGroup from_values(std::vector<int> factors, const std::vector<Cyclotomic>& q) {
        std::vector<Rational> angles;
        for (const auto& v : q) {
            const auto order = order_of_unity(v);
            if (!order) {
                throw std::invalid_argument("quadratic form value " + v.to_string() + " is not a root of unity");
            }
            const double arg = std::arg(v.to_complex()) / (2 * std::numbers::pi);
            const auto k = nt::mod(std::llround(arg * static_cast<double>(*order)), *order);
            if (root_of_unity(k, *order) != v) {
                throw std::logic_error("failed to recover the angle of a root of unity");
            }
            angles.emplace_back(k, *order);
        }
        return MetricGroup(std::move(factors), std::move(angles));
    }

    const std::vector<int>& factors() const { return factors_; }
    int order() const { return static_cast<int>(angles_.size()); }

    std::vector<int> coords(int x) const {
        std::vector<int> out;
        for (int d : factors_) {
            out.push_back(x % d);
            x /= d;
        }
        return out;
    }

    int index(const std::vector<int>& c) const {
        int x = 0;
        for (int i = static_cast<int>(factors_.size()) - 1; i >= 0; --i) {
            x = x * factors_[i] + static_cast<int>(nt::mod(c[i], factors_[i]));
        }
        return x;
    }

    int add(int x, int y) const { return add_[static_cast<std::size_t>(x) * order() + y]; }
    int neg(int x) const { return neg_[x]; }

    const Rational& angle(int x) const { return angles_.at(x); }
    Cyclotomic q(int x) const { return from_angle(angles_.at(x)); }

    /// b(x, y) = q(x + y) / (q(x) q(y)) as an angle in [0, 1).
    Rational b_angle(int x, int y) const { return Rational(b_num(x, y), den_); }
    Cyclotomic b(int x, int y) const { return from_angle(b_angle(x, y)); }

    bool nondegenerate() const {
        for (int x = 1; x < order(); ++x) {
            bool radical = true;
            for (int y = 0; y < order() && radical; ++y) {
                radical = b_num(x, y) == 0;
            }
            if (radical) {
                return false;
            }
        }
        return true;
    }

    std::string element_name(int x) const {
        if (factors_.size() == 1) {
            return std::to_string(x);
        }
        std::string s = "(";
        const auto c = coords(x);
        for (std::size_t i = 0; i < c.size(); ++i) {
            s += (i ? "," : "") + std::to_string(c[i]);
        }
        return s + ")";
    }

    static Cyclotomic from_angle(const Rational& t) {
        const auto num = boost::multiprecision::numerator(t).convert_to<std::int64_t>();
        const auto den = boost::multiprecision::denominator(t).convert_to<std::int64_t>();
        return root_of_unity(num, den);
    }

private:
    std::int64_t b_num(int x, int y) const { return nt::mod(nums_[add(x, y)] - nums_[x] - nums_[y], den_); }

    static Rational reduce(const Rational& t) {
        const Integer num = boost::multiprecision::numerator(t);
        const Integer den = boost::multiprecision::denominator(t);
        Integer r = num % den;
        if (r < 0) {
            r += den;
        }
        return Rational(r, den);
    }

    std::vector<int> factors_;
    std::vector<Rational> angles_;
    std::int64_t den_ = 1;
    std::vector<std::int64_t> nums_;  // angles_ times den_
    std::vector<int> add_;
    std::vector<int> neg_;
};

/// Pointed data with theta_x = q(x) and S_xy = conj(b(x, y)), the sign that
/// satisfies balancing. A degenerate form yields data flagged non-modular.
inline ModularData pointed_data(const MetricGroup& mg, std::vector<std::string> names = {}) {
    const int n = mg.order();
    CyclotomicMatrix S(n, std::vector<Cyclotomic>(n));
    std::vector<Cyclotomic> T(n);
    std::vector<int> dual(n);
    for (int x = 0; x < n; ++x) {
        T[x] = mg.q(x);
        dual[x] = mg.neg(x);
        for (int y = 0; y < n; ++y) {
            S[x][y] = MetricGroup::from_angle(-mg.b_angle(x, y));
        }
    }
    if (names.empty()) {
        for (int x = 0; x < n; ++x) {
            names.push_back(mg.element_name(x));
        }
    }
    return ModularData(std::move(S), std::move(T), std::move(names), std::move(dual), group_ring(mg.factors()),
                       mg.nondegenerate());
}

/// The form j -> a j^2 / n on Z/n for odd n; for n = 2m (m odd) the CRT
/// presentation of the orthogonal sum of the Z/2 form j -> sign/4 and the
/// Z/m form j -> a j^2 / m.
inline MetricGroup cyclic_form(int n, int a, int sign = 1) {
    if (n < 1) {
        throw std::invalid_argument("n must be positive");
    }
    if (n % 4 == 0) {
        throw std::invalid_argument("cyclic forms on Z/n with 4 | n are not supported");
    }
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("sign must be +1 or -1");
    }
    const int m = n % 2 == 1 ? n : n / 2;
    if (m > 1 && std::gcd(nt::mod(a, m), static_cast<std::int64_t>(m)) != 1) {
        throw std::invalid_argument("a must be a unit modulo the odd part of n");
    }
    std::vector<Rational> angles;
    for (std::int64_t j = 0; j < n; ++j) {
        Rational t(a * (j * j % m), m);
        if (n % 2 == 0) {
            t += Rational(sign * (j * j % 4), 4);
        }
        angles.push_back(t);
    }
    return MetricGroup({n}, std::move(angles));
}

/// q(j) = exp(pi i a j^2 / n) on Z/n, n even; nondegenerate when gcd(a, n) = 1.
inline MetricGroup cyclic_even_form(int n, int a) {
    if (n < 2 || n % 2 != 0) {
        throw std::invalid_argument("cyclic_even_form needs an even n");
    }
    std::vector<Rational> angles;
    for (std::int64_t j = 0; j < n; ++j) {
        angles.emplace_back(a * (j * j % (2 * n)), 2 * n);
    }
    return MetricGroup({n}, std::move(angles));
}

/// Every nondegenerate form on Z/n (n not divisible by 4).
inline std::vector<MetricGroup> cyclic_forms(int n) {
    if (n < 1) {
        throw std::invalid_argument("n must be positive");
    }
    if (n % 4 == 0) {
        throw std::invalid_argument("cyclic forms on Z/n with 4 | n are not supported");
    }
    std::vector<MetricGroup> out;
    if (n % 2 == 1) {
        for (auto a : nt::units(n)) {
            out.push_back(cyclic_form(n, static_cast<int>(a)));
        }
        return out;
    }
    for (int sign : {1, -1}) {
        for (auto a : nt::units(n / 2)) {
            out.push_back(cyclic_form(n, static_cast<int>(a), sign));
        }
    }
    return out;
}

inline ModularData semion(int sign = 1) {
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("semion sign must be +1 or -1");
    }
    return pointed_data(MetricGroup({2}, {Rational(0), Rational(sign, 4)}), {"1", "s"});
}

/// Rank-3 Ising data with theta_sigma = exp(2 pi i nu / 16).
inline ModularData ising(int nu) {
    if (nu % 2 == 0) {
        throw std::invalid_argument("nu must be odd");
    }
    const Cyclotomic r2 = sqrt_int(2);
    const Cyclotomic one(1);
    CyclotomicMatrix S{{one, one, r2}, {one, one, -r2}, {r2, -r2, Cyclotomic()}};
    std::vector<Cyclotomic> T{one, Cyclotomic(-1), root_of_unity(nu, 16)};
    return ModularData(std::move(S), std::move(T), {"1", "psi", "sigma"}, std::vector<int>{0, 1, 2});
}

// ---------------------------------------------------------------------------
// Even metaplectic data

/// Label layout of the SO(2N)_2 data: 1, g^2, g, g^3, then Y_1, X_1, ...,
/// Y_h, X_h (h = (N-1)/2), then V_1..V_4.
struct MetaplecticLabels {
    int N;

    int h() const { return (N - 1) / 2; }
    int rank() const { return N + 7; }
    static constexpr int unit = 0;
    static constexpr int g2 = 1;
    static constexpr int g = 2;
    static constexpr int g3 = 3;
    /// The a-th 2-dimensional label in the interleaved order (a = 1..N-1).
    int two_dim(int a) const { return 3 + a; }
    int Y(int a) const { return 2 + 2 * a; }
    int X(int a) const { return 3 + 2 * a; }
    int V(int i) const { return N + 2 + i; }

    std::vector<int> invertibles() const { return {unit, g2, g, g3}; }

    std::vector<int> adjoint() const {
        std::vector<int> out{unit, g2};
        for (int a = 1; a <= h(); ++a) {
            out.push_back(X(a));
        }
        return out;
    }

    std::vector<std::string> names() const {
        std::vector<std::string> out{"1", "g2", "g", "g3"};
        for (int a = 1; a <= h(); ++a) {
            out.push_back("Y" + std::to_string(a));
            out.push_back("X" + std::to_string(a));
        }
        for (int i = 1; i <= 4; ++i) {
            out.push_back("V" + std::to_string(i));
        }
        return out;
    }
};

inline MetaplecticLabels metaplectic_labels(int N) {
    if (N < 1 || N % 2 == 0) {
        throw std::invalid_argument("N must be odd");
    }
    return MetaplecticLabels{N};
}

namespace detail {

/// The block-form data with twists (-1)^a exp(twist_sign * a^2 pi i / 2N) on
/// the 2-dimensional labels.
inline ModularData metaplectic_candidate(int N, int twist_sign) {
    const auto L = metaplectic_labels(N);
    const int r = L.rank();
    const Cyclotomic one(1);
    const Cyclotomic theta_eps = root_of_unity(2 * N - 1, 16);
    const Cyclotomic G = gauss_G(N);
    const Cyclotomic alpha = G.conj() * theta_eps * theta_eps;
    const Cyclotomic beta = root_of_unity(2 * N - 1, 4) * theta_eps * theta_eps * G;
    const Cyclotomic iN = root_of_unity(N, 4);
    const Cyclotomic rootN = sqrt_int(N);

    CyclotomicMatrix S(r, std::vector<Cyclotomic>(r));
    auto set = [&](int x, int y, const Cyclotomic& v) {
        S[x][y] = v;
        S[y][x] = v;
    };
    // Invertible rows against invertibles, 2-dimensionals and V's.
    const int inv[4] = {L.unit, L.g2, L.g, L.g3};
    const int A[4][4] = {{1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, -1, -1}, {1, 1, -1, -1}};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            S[inv[i]][inv[j]] = Cyclotomic(A[i][j]);
        }
        for (int a = 1; a <= N - 1; ++a) {
            const int sign = i < 2 ? 1 : (a % 2 == 0 ? 1 : -1);
            set(inv[i], L.two_dim(a), Cyclotomic(2 * sign));
        }
    }
    const Cyclotomic C[4][4] = {{one, one, one, one},
                                {-one, -one, -one, -one},
                                {-iN, iN, -iN, iN},
                                {iN, -iN, iN, -iN}};
    for (int i = 0; i < 4; ++i) {
        for (int k = 0; k < 4; ++k) {
            set(inv[i], L.V(k + 1), rootN * C[i][k]);
        }
    }
    for (int a = 1; a <= N - 1; ++a) {
        for (int b = 1; b <= N - 1; ++b) {
            // 4 cos(pi a b / N)
            S[L.two_dim(a)][L.two_dim(b)] = Cyclotomic(2) * (root_of_unity(a * b, 2 * N) + root_of_unity(-a * b, 2 * N));
        }
        for (int k = 1; k <= 4; ++k) {
            set(L.two_dim(a), L.V(k), Cyclotomic());
        }
    }
    const Cyclotomic ac = alpha.conj();
    const Cyclotomic bc = beta.conj();
    const Cyclotomic E[4][4] = {{ac, alpha, beta, bc}, {alpha, ac, bc, beta}, {beta, bc, ac, alpha}, {bc, beta, alpha, ac}};
    for (int k = 0; k < 4; ++k) {
        for (int l = 0; l < 4; ++l) {
            S[L.V(k + 1)][L.V(l + 1)] = E[k][l];
        }
    }

    std::vector<Cyclotomic> T(r);
    T[L.unit] = one;
    T[L.g2] = one;
    T[L.g] = iN;
    T[L.g3] = iN;
    for (int a = 1; a <= N - 1; ++a) {
        const Cyclotomic parity(a % 2 == 0 ? 1 : -1);
        T[L.two_dim(a)] = parity * root_of_unity(twist_sign * a * a, 4 * N);
    }
    T[L.V(1)] = theta_eps;
    T[L.V(2)] = theta_eps;
    T[L.V(3)] = -theta_eps;
    T[L.V(4)] = -theta_eps;
    return ModularData(std::move(S), std::move(T), L.names());
}

/// Balancing along the row of label `a` only.
inline bool balancing_row_holds(const ModularData& md, int a) {
    const auto& ring = md.fusion();
    for (int b = 0; b < md.rank(); ++b) {
        Cyclotomic rhs;
        for (auto [c, m] : ring.product(md.dual(a), b)) {
            rhs += Cyclotomic(m) * md.d(c) * md.T(c);
        }
        if (md.T(a) * md.T(b) * md.S(a, b) != rhs) {
            return false;
        }
    }
    return true;
}

}  // namespace detail

/// SO(2N)_2 modular data for odd N. The twist of the a-th 2-dimensional
/// label is taken as (-1)^a exp(-a^2 pi i / 2N); the conjugate reading is the
/// fallback, and whichever passes balancing is returned.
inline ModularData metaplectic_data(int N) {
    const auto L = metaplectic_labels(N);
    if (N == 1) {
        return detail::metaplectic_candidate(N, -1);
    }
    for (int sign : {-1, 1}) {
        ModularData md = detail::metaplectic_candidate(N, sign);
        if (detail::balancing_row_holds(md, L.Y(1))) {
            return md;
        }
    }
    throw std::logic_error("no twist convention balances the metaplectic data");
}

/// Checks the metaplectic fusion rules on a ring laid out as MetaplecticLabels.
inline VerificationReport check_metaplectic_rules(const FusionRing& ring, int N) {
    const auto L = metaplectic_labels(N);
    VerificationReport report;
    if (ring.rank() != L.rank()) {
        report.fail("rank", {ring.rank()});
        return report;
    }
    using P = FusionRing::Product;
    auto expect = [&](const char* rule, int a, int b, P want) {
        std::sort(want.begin(), want.end());
        // merge repeated constituents
        P merged;
        for (auto [c, m] : want) {
            if (!merged.empty() && merged.back().first == c) {
                merged.back().second += m;
            } else {
                merged.emplace_back(c, m);
            }
        }
        if (ring.product(a, b) != merged) {
            report.fail(rule, {a, b});
        }
    };
    const int h = L.h();
    for (int a = 1; a <= h; ++a) {
        expect("g*X_a = Y_{(N+1)/2-a}", L.g, L.X(a), {{L.Y((N + 1) / 2 - a), 1}});
        expect("g2*X_a = X_a", L.g2, L.X(a), {{L.X(a), 1}});
        const int twice = std::min(2 * a, N - 2 * a);
        expect("X_a*X_a = 1+g2+X_min(2a,N-2a)", L.X(a), L.X(a), {{0, 1}, {L.g2, 1}, {L.X(twice), 1}});
        for (int b = 1; b <= h; ++b) {
            if (a == b) {
                continue;
            }
            const int sum = std::min(a + b, N - a - b);
            expect("X_a*X_b = X_min(a+b,N-a-b)+X_|a-b|", L.X(a), L.X(b), {{L.X(sum), 1}, {L.X(std::abs(a - b)), 1}});
        }
    }
    P v1v1{{L.g, 1}};
    for (int a = 1; a <= h; ++a) {
        v1v1.emplace_back(L.Y(a), 1);
    }
    expect("V1*V1 = g+sum Y_a", L.V(1), L.V(1), v1v1);
    expect("g*V2 = V1", L.g, L.V(2), {{L.V(1), 1}});
    if (ring.dual(L.V(1)) != L.V(2) || ring.dual(L.V(3)) != L.V(4)) {
        report.fail("V2 = V1*, V4 = V3*", {L.V(1), L.V(3)});
    }
    expect("g3*V1 = V1*", L.g3, L.V(1), {{ring.dual(L.V(1)), 1}});
    // g^2 permutes the V's without fixed points and g has one orbit on them.
    for (int i = 1; i <= 4; ++i) {
        const auto& p = ring.product(L.g2, L.V(i));
        if (p.size() != 1 || p[0].first == L.V(i) || p[0].first < L.V(1)) {
            report.fail("g2 acts freely on the V's", {L.V(i)});
        }
    }
    std::vector<int> orbit{L.V(1)};
    for (int k = 0; k < 3; ++k) {
        const auto& p = ring.product(L.g, orbit.back());
        orbit.push_back(p.size() == 1 ? p[0].first : -1);
    }
    std::sort(orbit.begin(), orbit.end());
    if (orbit != std::vector<int>{L.V(1), L.V(2), L.V(3), L.V(4)}) {
        report.fail("g permutes V1..V4 cyclically", {L.V(1)});
    }
    return report;
}

/// Verlinde ring of metaplectic_data(N), checked against the fusion rules.
inline FusionRing metaplectic_ring(int N) {
    FusionRing ring = verlinde_ring(metaplectic_data(N));
    const auto report = check_metaplectic_rules(ring, N);
    if (!report.ok()) {
        throw std::logic_error("metaplectic fusion rule violated: " + report.failures.front().check);
    }
    return ring;
}

// ---------------------------------------------------------------------------
// Rep(Z/2 x Z/2)-type premodular family

/// All pointed premodular data on Z/2 x Z/2 with fourth-root-of-unity twists.
/// Labels: 1, g, h, gh.
inline std::vector<ModularData> z2z2_premodular_family() {
    std::vector<ModularData> out;
    for (int s = 0; s < 4; ++s) {
        for (int t = 0; t < 4; ++t) {
            for (int beta = 0; beta < 2; ++beta) {
                const Rational qg(s, 4);
                const Rational qh(t, 4);
                const MetricGroup mg({2, 2}, {Rational(0), qg, qh, qg + qh + Rational(beta, 2)});
                out.push_back(pointed_data(mg, {"1", "g", "h", "gh"}));
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Catalog

struct ZooEntry {
    std::string name;
    ModularData data;
};

/// Small modular members used for cross-family property checks.
inline std::vector<ZooEntry> zoo_base() {
    return {
        {"semion+", semion(1)},
        {"semion-", semion(-1)},
        {"Z3", pointed_data(cyclic_form(3, 1))},
        {"Z5", pointed_data(cyclic_form(5, 1))},
        {"ising1", ising(1)},
        {"ising3", ising(3)},
        {"ising7", ising(7)},
        {"meta1", metaplectic_data(1)},
        {"meta3", metaplectic_data(3)},
    };
}

/// Deligne products of unordered pairs from zoo_base() within the rank cap.
inline std::vector<ZooEntry> zoo_products() {
    const auto base = zoo_base();
    std::vector<ZooEntry> out;
    for (std::size_t i = 0; i < base.size(); ++i) {
        for (std::size_t j = i; j < base.size(); ++j) {
            if (base[i].data.rank() * base[j].data.rank() > kMaxRank) {
                continue;
            }
            out.push_back({base[i].name + "*" + base[j].name, deligne_product(base[i].data, base[j].data)});
        }
    }
    return out;
}

}  // namespace mtc
