#include "mtc/moddata.hpp"

#include <cmath>
#include <complex>
#include <numeric>

#include "gtest/gtest.h"
#include "mtc/zoo.hpp"

using namespace mtc;

namespace {

// Float Verlinde formula, rounded; independent of the exact path.
std::vector<int> numeric_verlinde(const ModularData& md) {
    const int r = md.rank();
    std::vector<std::vector<std::complex<double>>> S(r, std::vector<std::complex<double>>(r));
    double D = 0;
    for (int a = 0; a < r; ++a) {
        for (int b = 0; b < r; ++b) {
            S[a][b] = md.S(a, b).to_complex();
        }
        D += std::norm(S[0][a]);
    }
    std::vector<int> out(r * r * r);
    for (int a = 0; a < r; ++a) {
        for (int b = 0; b < r; ++b) {
            for (int c = 0; c < r; ++c) {
                std::complex<double> s = 0;
                for (int x = 0; x < r; ++x) {
                    s += S[a][x] * S[b][x] * std::conj(S[c][x]) / S[0][x];
                }
                s /= D;
                EXPECT_NEAR(s.imag(), 0.0, 1e-8);
                EXPECT_NEAR(s.real(), std::round(s.real()), 1e-8);
                out[(a * r + b) * r + c] = static_cast<int>(std::lround(s.real()));
            }
        }
    }
    return out;
}

ModularData with_twist(const ModularData& md, int label, const Cyclotomic& theta) {
    auto T = md.T();
    T[label] = theta;
    return ModularData(md.S(), T, md.names(), md.duals());
}

ModularData rep_z2() {
    const Cyclotomic one(1);
    return ModularData({{one, one}, {one, one}}, {one, one}, {"1", "e"}, std::vector<int>{0, 1}, group_ring({2}),
                       false);
}

std::vector<ZooEntry> modular_zoo() {
    auto all = zoo_base();
    for (auto& e : zoo_products()) {
        all.push_back(std::move(e));
    }
    return all;
}

}  // namespace

TEST(moddata, verify_premodular_examples) {
    EXPECT_TRUE(verify_premodular(pointed_data(cyclic_form(3, 1))).ok());
    const auto meta = metaplectic_data(3);
    EXPECT_TRUE(verify_premodular(meta).ok());
    const auto L = metaplectic_labels(3);
    const auto broken = with_twist(meta, L.g2, Cyclotomic(-1));
    const auto report = verify_premodular(broken);
    EXPECT_FALSE(report.ok());
    EXPECT_TRUE(report.has("balancing", {L.g2, L.X(1)}));
    EXPECT_TRUE(verify_modular(meta).ok());
}

TEST(moddata, verify_reports_structural_failures) {
    const Cyclotomic one(1);
    // Asymmetric S.
    ModularData bad({{one, one}, {Cyclotomic(2), Cyclotomic(-1)}}, {one, one}, {}, std::vector<int>{0, 1});
    EXPECT_TRUE(verify_premodular(bad).has("symmetry", {0, 1}));
    // Twist that is not a root of unity.
    const auto semi = semion(1);
    const auto report = verify_premodular(with_twist(semi, 1, Cyclotomic(2)));
    EXPECT_TRUE(report.has("twist_order", {1}));
    // S that is not unitary up to scale: Verlinde breaks down.
    ModularData skew({{one, one}, {one, Cyclotomic(-2)}}, {one, one}, {}, std::vector<int>{0, 1});
    EXPECT_THROW(verlinde_ring(skew), VerlindeError);
    EXPECT_TRUE(verify_premodular(skew).has("verlinde"));
}

TEST(moddata, verlinde_examples) {
    EXPECT_EQ(verlinde_ring(pointed_data(cyclic_form(3, 1))), group_ring({3}));
    const auto is = verlinde_ring(ising(1));
    EXPECT_EQ(is.product(2, 2), (FusionRing::Product{{0, 1}, {1, 1}}));
    EXPECT_EQ(is.product(1, 1), (FusionRing::Product{{0, 1}}));
    EXPECT_EQ(is.product(1, 2), (FusionRing::Product{{2, 1}}));
    const auto L = metaplectic_labels(3);
    const auto meta = verlinde_ring(metaplectic_data(3));
    EXPECT_EQ(meta.product(L.V(1), L.V(1)), (FusionRing::Product{{L.g, 1}, {L.Y(1), 1}}));
    EXPECT_EQ(meta.product(L.X(1), L.X(1)), (FusionRing::Product{{0, 1}, {L.g2, 1}, {L.X(1), 1}}));
}

TEST(moddata, verlinde_matches_float_oracle_on_zoo) {
    for (const auto& e : zoo_base()) {
        EXPECT_EQ(verlinde_ring(e.data).coeffs(), numeric_verlinde(e.data)) << e.name;
    }
    for (int N : {5, 7}) {
        const auto md = metaplectic_data(N);
        EXPECT_EQ(verlinde_ring(md).coeffs(), numeric_verlinde(md)) << N;
    }
}

TEST(moddata, centralizers) {
    const auto meta = metaplectic_data(3);
    const auto L = metaplectic_labels(3);
    EXPECT_EQ(centralizer(meta, SubcategorySpan{{0}}), meta.all());
    const SubcategorySpan ad{adjoint_subring(meta.fusion())};
    EXPECT_EQ(ad.labels, L.adjoint());
    EXPECT_EQ(centralizer(meta, ad).labels, (std::vector<int>{0, 1, 2, 3}));
    const auto boson_span = make_span(meta, {L.g2});
    EXPECT_EQ(boson_span.labels, (std::vector<int>{0, 1}));
    EXPECT_EQ(centralizer(meta, boson_span).labels, integral_subring(meta.fusion()));
}

TEST(moddata, center_modular_symmetric) {
    const auto z5 = pointed_data(cyclic_form(5, 1));
    EXPECT_TRUE(is_modular(z5));
    EXPECT_FALSE(is_symmetric(z5));
    EXPECT_TRUE(check_unitarity(z5).ok());
    EXPECT_EQ(z5.global_dim(), Cyclotomic(5));
    const auto rep = rep_z2();
    EXPECT_TRUE(verify_premodular(rep).ok());
    EXPECT_TRUE(is_symmetric(rep));
    EXPECT_FALSE(is_modular(rep));
    EXPECT_TRUE(is_modular(semion(1)));
    EXPECT_TRUE(is_modular(ModularData::trivial()));
    EXPECT_TRUE(is_symmetric(ModularData::trivial()));
}

TEST(moddata, invertible_classification) {
    const auto meta = metaplectic_data(3);
    const auto L = metaplectic_labels(3);
    EXPECT_EQ(classify_invertible(meta, L.g2), InvertibleKind::Boson);
    EXPECT_TRUE(tannakian_rank2(meta, L.g2));
    EXPECT_THROW(classify_invertible(meta, L.g), std::invalid_argument);
    EXPECT_THROW(classify_invertible(meta, L.X(1)), std::invalid_argument);
    EXPECT_EQ(classify_invertible(ising(1), 1), InvertibleKind::Fermion);
    EXPECT_FALSE(tannakian_rank2(ising(1), 1));
    EXPECT_EQ(classify_invertible(semion(1), 1), InvertibleKind::Semion);
    EXPECT_EQ(classify_invertible(semion(-1), 1), InvertibleKind::Semion);
    EXPECT_TRUE(tannakian_rank2(ising(1), 0));
    EXPECT_TRUE(tannakian_rank2(rep_z2(), 1));
}

TEST(moddata, deligne_products) {
    const auto is = ising(1);
    const auto unit = deligne_product(is, ModularData::trivial());
    EXPECT_TRUE(equivalent_data(is, unit).has_value());
    const auto is_sem = deligne_product(is, semion(1));
    EXPECT_EQ(is_sem.rank(), 6);
    EXPECT_EQ(is_sem.global_dim(), Cyclotomic(8));
    EXPECT_TRUE(verify_modular(is_sem).ok());
    const auto sem_z3 = deligne_product(semion(1), pointed_data(cyclic_form(3, 1)));
    EXPECT_TRUE(is_pointed(sem_z3));
    EXPECT_EQ(sem_z3.global_dim(), Cyclotomic(6));
    // The attached product ring agrees with the Verlinde ring of the product S.
    EXPECT_EQ(sem_z3.fusion(), verlinde_ring(sem_z3));
    EXPECT_EQ(is_sem.fusion(), verlinde_ring(is_sem));
}

TEST(moddata, equivalence_examples) {
    const auto is1 = ising(1);
    const auto id = equivalent_data(is1, is1);
    ASSERT_TRUE(id);
    EXPECT_EQ(*id, (std::vector<int>{0, 1, 2}));
    EXPECT_FALSE(equivalent_data(ising(1), ising(3)));
    // j -> 2j carries the form a = 1 to the form a = 4 on Z/5.
    const auto a1 = pointed_data(cyclic_form(5, 1));
    const auto a4 = pointed_data(cyclic_form(5, 4));
    const auto phi = equivalent_data(a1, a4);
    ASSERT_TRUE(phi);
    for (int x = 0; x < 5; ++x) {
        EXPECT_EQ(a4.T((*phi)[x]), a1.T(x));
        for (int y = 0; y < 5; ++y) {
            EXPECT_EQ(a4.S((*phi)[x], (*phi)[y]), a1.S(x, y));
        }
    }
    EXPECT_TRUE((*phi)[1] == 2 || (*phi)[1] == 3);
    EXPECT_FALSE(equivalent_data(a1, pointed_data(cyclic_form(5, 2))));
}

TEST(moddata, zoo_properties) {
    for (const auto& e : modular_zoo()) {
        const auto& md = e.data;
        SCOPED_TRACE(e.name);
        ASSERT_TRUE(verify_modular(md).ok());
        EXPECT_TRUE(is_modular(md));
        EXPECT_TRUE(validate(md.fusion()).ok());
        // Centralizer of the adjoint span is the pointed span.
        const SubcategorySpan ad{adjoint_subring(md.fusion())};
        EXPECT_EQ(centralizer(md, ad).labels, invertibles(md.fusion()).labels);
        // Double centralizer contains the span, for every singly generated span.
        for (int a = 0; a < md.rank(); ++a) {
            const auto span = make_span(md, {a});
            const auto cc = centralizer(md, centralizer(md, span));
            for (int x : span.labels) {
                EXPECT_TRUE(cc.contains(x));
            }
        }
        const auto self = equivalent_data(md, md);
        ASSERT_TRUE(self);
    }
}

TEST(moddata, deligne_dimension_is_multiplicative) {
    const auto base = zoo_base();
    for (const auto& a : base) {
        for (const auto& b : base) {
            if (a.data.rank() * b.data.rank() > kMaxRank) {
                continue;
            }
            EXPECT_EQ(deligne_product(a.data, b.data).global_dim(), a.data.global_dim() * b.data.global_dim());
        }
    }
}

TEST(moddata, equivalence_is_symmetric_and_separates_isings) {
    std::vector<ModularData> isings;
    for (int nu = 1; nu < 16; nu += 2) {
        isings.push_back(ising(nu));
    }
    for (std::size_t i = 0; i < isings.size(); ++i) {
        for (std::size_t j = 0; j < isings.size(); ++j) {
            EXPECT_EQ(equivalent_data(isings[i], isings[j]).has_value(), i == j);
        }
    }
    const auto base = zoo_base();
    for (const auto& a : base) {
        for (const auto& b : base) {
            EXPECT_EQ(equivalent_data(a.data, b.data).has_value(), equivalent_data(b.data, a.data).has_value());
        }
    }
}

TEST(moddata, relabel_round_trip) {
    const auto md = metaplectic_data(3);
    std::vector<int> perm{0, 1, 3, 2, 5, 4, 9, 8, 7, 6};
    const auto moved = relabel(md, perm);
    EXPECT_TRUE(verify_modular(moved).ok());
    const auto phi = equivalent_data(md, moved);
    ASSERT_TRUE(phi);
}
