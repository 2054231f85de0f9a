#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mtc/cyclo.hpp"
#include "mtc/fusion.hpp"
#include "mtc/report.hpp"

namespace mtc {

using CyclotomicMatrix = std::vector<std::vector<Cyclotomic>>;

/// The Verlinde formula produced a non-integral or negative coefficient.
class VerlindeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A set of labels of some ModularData, closed under duality and fusion.
struct SubcategorySpan {
    std::vector<int> labels;  // ascending, starts with 0

    bool contains(int a) const { return std::binary_search(labels.begin(), labels.end(), a); }
    std::size_t size() const { return labels.size(); }
    friend bool operator==(const SubcategorySpan&, const SubcategorySpan&) = default;
};

/// Unnormalized S-matrix (S_{0a} = d_a) and twists of a premodular category.
/// The fusion ring is either supplied or recovered from S by the Verlinde
/// formula on first use.
class ModularData {
public:
    ModularData(CyclotomicMatrix S, std::vector<Cyclotomic> T, std::vector<std::string> names = {},
                std::optional<std::vector<int>> dual = std::nullopt, std::optional<FusionRing> fusion = std::nullopt,
                bool modular = true)
        : S_(std::move(S)), T_(std::move(T)), names_(std::move(names)), modular_(modular) {
        const std::size_t r = S_.size();
        if (r < 1 || r > static_cast<std::size_t>(kMaxRank)) {
            throw std::invalid_argument("modular data rank must be between 1 and " + std::to_string(kMaxRank));
        }
        for (const auto& row : S_) {
            if (row.size() != r) {
                throw std::invalid_argument("S-matrix must be square");
            }
        }
        if (T_.size() != r) {
            throw std::invalid_argument("T must have one twist per label");
        }
        if (names_.empty()) {
            for (std::size_t a = 0; a < r; ++a) {
                names_.push_back(std::to_string(a));
            }
        } else if (names_.size() != r) {
            throw std::invalid_argument("names have the wrong length");
        }
        if (dual) {
            if (dual->size() != r) {
                throw std::invalid_argument("dual has the wrong length");
            }
            for (int d : *dual) {
                if (d < 0 || d >= static_cast<int>(r)) {
                    throw std::invalid_argument("dual label out of range");
                }
            }
            dual_ = std::move(*dual);
        } else {
            dual_ = derive_dual();
        }
        if (fusion) {
            if (fusion->rank() != static_cast<int>(r)) {
                throw std::invalid_argument("attached fusion ring has the wrong rank");
            }
            attached_ = fusion->with_names(names_).with_exact_dims(dims());
        }
    }

    /// The rank-one data of Vec.
    static ModularData trivial() { return ModularData({{Cyclotomic(1)}}, {Cyclotomic(1)}, {"1"}); }

    int rank() const { return static_cast<int>(S_.size()); }
    const Cyclotomic& S(int a, int b) const { return S_[a][b]; }
    const CyclotomicMatrix& S() const { return S_; }
    const Cyclotomic& T(int a) const { return T_[a]; }
    const std::vector<Cyclotomic>& T() const { return T_; }
    const Cyclotomic& d(int a) const { return S_[0][a]; }
    std::vector<Cyclotomic> dims() const { return S_[0]; }

    Cyclotomic global_dim() const {
        Cyclotomic D;
        for (const auto& x : S_[0]) {
            D += x * x;
        }
        return D;
    }

    int dual(int a) const { return dual_.at(a); }
    const std::vector<int>& duals() const { return dual_; }
    const std::string& name(int a) const { return names_.at(a); }
    const std::vector<std::string>& names() const { return names_; }

    int label(const std::string& name) const {
        for (int a = 0; a < rank(); ++a) {
            if (names_[a] == name) {
                return a;
            }
        }
        throw std::out_of_range("no label named '" + name + "'");
    }

    /// Declared modularity (S invertible). is_modular() computes it.
    bool modular_flag() const { return modular_; }

    bool has_attached_fusion() const { return attached_.has_value(); }

    /// Attached fusion ring, or the Verlinde ring (throws VerlindeError if S
    /// does not produce one).
    const FusionRing& fusion() const;

    SubcategorySpan all() const {
        SubcategorySpan s;
        s.labels.resize(rank());
        std::iota(s.labels.begin(), s.labels.end(), 0);
        return s;
    }

private:
    std::vector<int> derive_dual() const {
        const int r = rank();
        std::vector<int> dual(r, -1);
        for (int a = 0; a < r; ++a) {
            std::vector<int> candidates;
            for (int b = 0; b < r; ++b) {
                bool match = true;
                for (int x = 0; x < r && match; ++x) {
                    match = S_[x][b] == S_[x][a].conj();
                }
                if (match) {
                    candidates.push_back(b);
                }
            }
            if (candidates.empty()) {
                throw std::invalid_argument("no column of S is the conjugate of column " + std::to_string(a) +
                                            "; supply the duality explicitly");
            }
            // Degenerate S can leave several candidates; prefer self-duality.
            dual[a] = std::find(candidates.begin(), candidates.end(), a) != candidates.end() ? a : candidates.front();
        }
        return dual;
    }

    CyclotomicMatrix S_;
    std::vector<Cyclotomic> T_;
    std::vector<std::string> names_;
    std::vector<int> dual_;
    bool modular_;
    std::optional<FusionRing> attached_;
    std::shared_ptr<detail::Lazy<FusionRing>> verlinde_cache_ = std::make_shared<detail::Lazy<FusionRing>>();
};

// ---------------------------------------------------------------------------
// Verlinde formula

/// N_{ab}^c = (1/D) sum_x S_{ax} S_{bx} conj(S_{cx}) / d_x, computed exactly.
inline FusionRing verlinde_ring(const ModularData& md) {
    const int r = md.rank();
    const Cyclotomic D = md.global_dim();
    if (D.is_zero()) {
        throw VerlindeError("global dimension is zero");
    }
    const Cyclotomic inv_D = D.inverse();
    std::vector<Cyclotomic> inv_d(r);
    for (int x = 0; x < r; ++x) {
        if (md.d(x).is_zero()) {
            throw VerlindeError("dimension of label " + std::to_string(x) + " is zero");
        }
        inv_d[x] = md.d(x).inverse();
    }
    CyclotomicMatrix conj_S(r, std::vector<Cyclotomic>(r));
    for (int c = 0; c < r; ++c) {
        for (int x = 0; x < r; ++x) {
            conj_S[c][x] = md.S(c, x).conj() * inv_D;
        }
    }
    std::vector<int> coeffs(static_cast<std::size_t>(r) * r * r, 0);
    std::vector<Cyclotomic> w(r);
    for (int a = 0; a < r; ++a) {
        for (int b = a; b < r; ++b) {
            for (int x = 0; x < r; ++x) {
                w[x] = md.S(a, x) * md.S(b, x) * inv_d[x];
            }
            for (int c = 0; c < r; ++c) {
                const Cyclotomic n = Cyclotomic::dot(w, conj_S[c]);
                const auto value = n.as_integer();
                if (!value || *value < 0 || *value > 1000000) {
                    throw VerlindeError("Verlinde coefficient N_{" + std::to_string(a) + "," + std::to_string(b) +
                                        "}^" + std::to_string(c) + " = " + n.to_string() +
                                        " is not a nonnegative integer");
                }
                const int v = value->convert_to<int>();
                coeffs[(static_cast<std::size_t>(a) * r + b) * r + c] = v;
                coeffs[(static_cast<std::size_t>(b) * r + a) * r + c] = v;
            }
        }
    }
    return FusionRing(r, md.duals(), std::move(coeffs), md.names()).with_exact_dims(md.dims());
}

inline const FusionRing& ModularData::fusion() const {
    if (attached_) {
        return *attached_;
    }
    return verlinde_cache_->get([this] { return verlinde_ring(*this); });
}

// ---------------------------------------------------------------------------
// Axioms

inline VerificationReport verify_premodular(const ModularData& md) {
    VerificationReport report;
    const int r = md.rank();
    if (md.S(0, 0) != Cyclotomic(1)) {
        report.fail("unit_dimension", {0}, "S_00 must be 1");
    }
    for (int a = 0; a < r; ++a) {
        for (int b = a + 1; b < r; ++b) {
            if (md.S(a, b) != md.S(b, a)) {
                report.fail("symmetry", {a, b});
            }
        }
    }
    for (int a = 0; a < r; ++a) {
        const Cyclotomic& d = md.d(a);
        if (d.conj() != d || !(d.to_complex().real() > 0)) {
            report.fail("dimension_positive", {a}, "d = " + d.to_string());
        }
    }
    bool dual_ok = md.dual(0) == 0;
    if (!dual_ok) {
        report.fail("dual_unit", {0});
    }
    for (int a = 0; a < r; ++a) {
        if (md.dual(md.dual(a)) != a) {
            report.fail("dual_involution", {a});
            dual_ok = false;
        }
    }
    if (dual_ok) {
        for (int a = 0; a < r; ++a) {
            for (int b = 0; b < r; ++b) {
                if (md.S(a, b).conj() != md.S(a, md.dual(b))) {
                    report.fail("conjugation", {a, b}, "conj(S_ab) != S_{a,b*}");
                }
            }
        }
    }
    if (md.T(0) != Cyclotomic(1)) {
        report.fail("twist_unit", {0});
    }
    for (int a = 0; a < r; ++a) {
        if (!order_of_unity(md.T(a))) {
            report.fail("twist_order", {a}, "twist " + md.T(a).to_string() + " is not a root of unity");
        }
        if (dual_ok && md.T(md.dual(a)) != md.T(a)) {
            report.fail("twist_dual", {a});
        }
    }
    if (!dual_ok) {
        return report;
    }
    const FusionRing* ring = nullptr;
    try {
        ring = &md.fusion();
    } catch (const VerlindeError& e) {
        report.fail("verlinde", {}, e.what());
        return report;
    }
    if (ring->duals() != md.duals()) {
        report.fail("fusion_duality", {}, "fusion ring duality differs from the data");
    }
    report.merge(validate(*ring));
    for (int a = 0; a < r; ++a) {
        for (int b = 0; b < r; ++b) {
            Cyclotomic rhs;
            for (auto [c, m] : ring->product(md.dual(a), b)) {
                rhs += Cyclotomic(m) * md.d(c) * md.T(c);
            }
            if (md.T(a) * md.T(b) * md.S(a, b) != rhs) {
                report.fail("balancing", {a, b}, "theta_a theta_b S_ab != sum_c N_{a*b}^c d_c theta_c");
            }
        }
    }
    return report;
}

/// S * conj(S)^T == D * Id, entry by entry.
inline VerificationReport check_unitarity(const ModularData& md) {
    VerificationReport report;
    const int r = md.rank();
    const Cyclotomic D = md.global_dim();
    std::vector<std::vector<Cyclotomic>> conj_rows(r, std::vector<Cyclotomic>(r));
    for (int b = 0; b < r; ++b) {
        for (int x = 0; x < r; ++x) {
            conj_rows[b][x] = md.S(b, x).conj();
        }
    }
    for (int a = 0; a < r; ++a) {
        for (int b = a; b < r; ++b) {
            const Cyclotomic v = Cyclotomic::dot(md.S()[a], conj_rows[b]);
            if (v != (a == b ? D : Cyclotomic())) {
                report.fail("modularity", {a, b}, "(S S^dagger)_ab = " + v.to_string());
            }
        }
    }
    return report;
}

/// Premodular checks plus S S^dagger = D Id when the data is flagged modular.
inline VerificationReport verify_modular(const ModularData& md) {
    VerificationReport report = verify_premodular(md);
    report.merge(check_unitarity(md));
    return report;
}

inline VerificationReport verify(const ModularData& md) {
    return md.modular_flag() ? verify_modular(md) : verify_premodular(md);
}

// ---------------------------------------------------------------------------
// Spans

inline SubcategorySpan make_span(const ModularData& md, const std::vector<int>& seed) {
    return SubcategorySpan{subring_closure(md.fusion(), seed)};
}

/// Labels X with S_{XY} = d_X d_Y for every Y in `span`.
inline SubcategorySpan centralizer(const ModularData& md, const SubcategorySpan& span) {
    SubcategorySpan out;
    for (int x = 0; x < md.rank(); ++x) {
        bool central = true;
        for (int y : span.labels) {
            if (md.S(x, y) != md.d(x) * md.d(y)) {
                central = false;
                break;
            }
        }
        if (central) {
            out.labels.push_back(x);
        }
    }
    return out;
}

inline SubcategorySpan muger_center(const ModularData& md) { return centralizer(md, md.all()); }

inline bool is_modular(const ModularData& md) { return muger_center(md).labels == std::vector<int>{0}; }

inline bool is_symmetric(const ModularData& md) { return muger_center(md).size() == static_cast<std::size_t>(md.rank()); }

inline bool is_pointed(const ModularData& md) { return md.fusion().is_pointed(); }

/// Restriction to a fusion-closed set of labels; modularity is recomputed.
inline ModularData restrict(const ModularData& md, const SubcategorySpan& span) {
    const auto& labels = span.labels;
    FusionRing ring = restrict(md.fusion(), labels);
    std::vector<int> index(md.rank(), -1);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        index[labels[i]] = static_cast<int>(i);
    }
    CyclotomicMatrix S;
    std::vector<Cyclotomic> T;
    std::vector<std::string> names;
    std::vector<int> dual;
    for (int a : labels) {
        std::vector<Cyclotomic> row;
        for (int b : labels) {
            row.push_back(md.S(a, b));
        }
        S.push_back(std::move(row));
        T.push_back(md.T(a));
        names.push_back(md.name(a));
        dual.push_back(index[md.dual(a)]);
    }
    ModularData sub(std::move(S), std::move(T), std::move(names), std::move(dual), std::move(ring), false);
    const bool modular = is_modular(sub);
    return ModularData(sub.S(), sub.T(), sub.names(), sub.duals(), sub.fusion(), modular);
}

// ---------------------------------------------------------------------------
// Invertible objects

enum class InvertibleKind { Boson, Fermion, Semion, Other };

inline const char* to_string(InvertibleKind k) {
    switch (k) {
        case InvertibleKind::Boson:
            return "boson";
        case InvertibleKind::Fermion:
            return "fermion";
        case InvertibleKind::Semion:
            return "semion";
        default:
            return "other";
    }
}

/// Twist-based type of a self-inverse invertible label.
inline InvertibleKind classify_invertible(const ModularData& md, int a) {
    const auto& ring = md.fusion();
    if (a < 0 || a >= md.rank() || !ring.is_invertible(a) || ring.product(a, a) != FusionRing::Product{{0, 1}}) {
        throw std::invalid_argument("label " + std::to_string(a) + " is not a self-inverse invertible object");
    }
    const Cyclotomic& theta = md.T(a);
    if (theta == Cyclotomic(1)) {
        return InvertibleKind::Boson;
    }
    if (theta == Cyclotomic(-1)) {
        return InvertibleKind::Fermion;
    }
    if (theta == Cyclotomic::zeta(4) || theta == -Cyclotomic::zeta(4)) {
        return InvertibleKind::Semion;
    }
    return InvertibleKind::Other;
}

/// Whether {1, a} is a Tannakian Rep(Z/2): a boson with trivial self-braiding.
inline bool tannakian_rank2(const ModularData& md, int a) {
    return classify_invertible(md, a) == InvertibleKind::Boson && md.S(a, a) == Cyclotomic(1);
}

// ---------------------------------------------------------------------------
// Products and equivalence

inline ModularData deligne_product(const ModularData& a, const ModularData& b) {
    const int ra = a.rank();
    const int rb = b.rank();
    if (ra * rb > kMaxRank) {
        throw std::invalid_argument("Deligne product exceeds the rank cap of " + std::to_string(kMaxRank));
    }
    CyclotomicMatrix S(ra * rb, std::vector<Cyclotomic>(ra * rb));
    std::vector<Cyclotomic> T(ra * rb);
    std::vector<std::string> names(ra * rb);
    std::vector<int> dual(ra * rb);
    for (int i = 0; i < ra; ++i) {
        for (int j = 0; j < rb; ++j) {
            const int x = i * rb + j;
            T[x] = a.T(i) * b.T(j);
            names[x] = a.name(i) + "*" + b.name(j);
            dual[x] = a.dual(i) * rb + b.dual(j);
            for (int k = 0; k < ra; ++k) {
                for (int l = 0; l < rb; ++l) {
                    S[x][k * rb + l] = a.S(i, k) * b.S(j, l);
                }
            }
        }
    }
    return ModularData(std::move(S), std::move(T), std::move(names), std::move(dual),
                       deligne_product(a.fusion(), b.fusion()), a.modular_flag() && b.modular_flag());
}

/// A unit-preserving bijection phi with S^b_{phi x, phi y} = S^a_{xy} and
/// T^b_{phi x} = T^a_x, or nothing.
inline std::optional<std::vector<int>> equivalent_data(const ModularData& a, const ModularData& b) {
    const int r = a.rank();
    if (r != b.rank()) {
        return std::nullopt;
    }
    // Replace entries by integer ids so the search compares ints.
    std::map<Cyclotomic, int, decltype(&canonical_less)> ids(&canonical_less);
    auto id = [&](const Cyclotomic& x) { return ids.try_emplace(x.minimized(), static_cast<int>(ids.size())).first->second; };
    auto encode = [&](const ModularData& md, std::vector<std::vector<int>>& S, std::vector<int>& T) {
        S.assign(r, std::vector<int>(r));
        T.resize(r);
        for (int x = 0; x < r; ++x) {
            T[x] = id(md.T(x));
            for (int y = 0; y < r; ++y) {
                S[x][y] = id(md.S(x, y));
            }
        }
    };
    std::vector<std::vector<int>> Sa, Sb;
    std::vector<int> Ta, Tb;
    encode(a, Sa, Ta);
    encode(b, Sb, Tb);
    auto sorted = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    if (sorted(Ta) != sorted(Tb)) {
        return std::nullopt;
    }
    std::vector<std::vector<int>> candidates(r);
    for (int x = 0; x < r; ++x) {
        const auto row = sorted(Sa[x]);
        for (int y = 0; y < r; ++y) {
            if ((x == 0) == (y == 0) && Ta[x] == Tb[y] && Sa[x][x] == Sb[y][y] && row == sorted(Sb[y])) {
                candidates[x].push_back(y);
            }
        }
        if (candidates[x].empty()) {
            return std::nullopt;
        }
    }
    std::vector<int> phi(r, -1);
    std::vector<bool> used(r, false);
    std::function<bool(int)> extend = [&](int x) -> bool {
        if (x == r) {
            return true;
        }
        for (int y : candidates[x]) {
            if (used[y]) {
                continue;
            }
            bool ok = true;
            for (int z = 0; z < x && ok; ++z) {
                ok = Sa[x][z] == Sb[y][phi[z]];
            }
            if (!ok) {
                continue;
            }
            phi[x] = y;
            used[y] = true;
            if (extend(x + 1)) {
                return true;
            }
            used[y] = false;
            phi[x] = -1;
        }
        return false;
    };
    if (!extend(0)) {
        return std::nullopt;
    }
    return phi;
}

/// Data with labels permuted: label x of `md` becomes perm[x].
inline ModularData relabel(const ModularData& md, const std::vector<int>& perm) {
    const int r = md.rank();
    CyclotomicMatrix S(r, std::vector<Cyclotomic>(r));
    std::vector<Cyclotomic> T(r);
    std::vector<std::string> names(r);
    std::vector<int> dual(r);
    for (int x = 0; x < r; ++x) {
        T[perm[x]] = md.T(x);
        names[perm[x]] = md.name(x);
        dual[perm[x]] = perm[md.dual(x)];
        for (int y = 0; y < r; ++y) {
            S[perm[x]][perm[y]] = md.S(x, y);
        }
    }
    std::optional<FusionRing> ring;
    if (md.has_attached_fusion()) {
        const auto& f = md.fusion();
        RingBuilder builder(r);
        for (int x = 0; x < r; ++x) {
            for (int y = 0; y < r; ++y) {
                for (auto [z, m] : f.product(x, y)) {
                    builder.add(perm[x], perm[y], perm[z], m);
                }
            }
        }
        ring = builder.build(dual);
    }
    return ModularData(std::move(S), std::move(T), std::move(names), std::move(dual), std::move(ring),
                       md.modular_flag());
}

}  // namespace mtc
