#include "mtc/zoo.hpp"

#include <algorithm>
#include <numeric>

#include "gtest/gtest.h"

using namespace mtc;

namespace {

const int kOddN[] = {1, 3, 5, 7, 9, 11, 13, 15};

}  // namespace

TEST(zoo, pointed_examples) {
    const auto sem = pointed_data(MetricGroup({2}, {Rational(0), Rational(1, 4)}));
    EXPECT_TRUE(equivalent_data(sem, semion(1)).has_value());
    EXPECT_EQ(sem.T(1), Cyclotomic::zeta(4));
    EXPECT_EQ(sem.S(1, 1), Cyclotomic(-1));

    const auto z3 = pointed_data(cyclic_form(3, 1));
    EXPECT_TRUE(verify_modular(z3).ok());
    EXPECT_EQ(z3.global_dim(), Cyclotomic(3));
    EXPECT_EQ(z3.T(1), Cyclotomic::zeta(3));

    const auto trivial_form = pointed_data(MetricGroup({2, 2}, std::vector<Rational>(4, Rational(0))));
    EXPECT_FALSE(trivial_form.modular_flag());
    EXPECT_TRUE(verify_premodular(trivial_form).ok());
    EXPECT_TRUE(is_symmetric(trivial_form));
    EXPECT_FALSE(is_modular(trivial_form));
}

TEST(zoo, metric_group_rejects_non_quadratic_input) {
    // q(1) = i on Z/3 is not even.
    EXPECT_THROW(MetricGroup({3}, {Rational(0), Rational(1, 4), Rational(1, 4)}), std::invalid_argument);
    // q(-x) = q(x) but b is not bilinear.
    EXPECT_THROW(MetricGroup({4}, {Rational(0), Rational(1, 3), Rational(0), Rational(1, 3)}), std::invalid_argument);
    const auto mg = MetricGroup::from_values({3}, {Cyclotomic(1), Cyclotomic::zeta(3), Cyclotomic::zeta(3)});
    EXPECT_EQ(mg.angle(2), Rational(1, 3));
    EXPECT_THROW(MetricGroup::from_values({2}, {Cyclotomic(1), Cyclotomic(2)}), std::invalid_argument);
}

TEST(zoo, cyclic_form_enumeration) {
    EXPECT_EQ(cyclic_forms(5).size(), 4u);
    EXPECT_EQ(cyclic_forms(2).size(), 2u);
    EXPECT_EQ(cyclic_forms(1).size(), 1u);
    EXPECT_EQ(cyclic_forms(30).size(), 2u * nt::euler_phi(15));
    EXPECT_THROW(cyclic_forms(4), std::invalid_argument);
    EXPECT_THROW(cyclic_forms(12), std::invalid_argument);
    for (int n : {1, 2, 3, 5, 6, 9, 10, 15, 18}) {
        for (const auto& mg : cyclic_forms(n)) {
            EXPECT_TRUE(mg.nondegenerate());
            const auto md = pointed_data(mg);
            EXPECT_TRUE(md.modular_flag());
            EXPECT_TRUE(verify_modular(md).ok()) << n;
        }
    }
    // The two Z/2 forms are the semion and its conjugate.
    const auto forms = cyclic_forms(2);
    EXPECT_EQ(forms[0].q(1), Cyclotomic::zeta(4));
    EXPECT_EQ(forms[1].q(1), -Cyclotomic::zeta(4));
}

TEST(zoo, modularity_matches_nondegeneracy) {
    // Forms a j^2 / n on Z/n, including degenerate ones (gcd(a, n) > 1).
    for (int n : {3, 5, 9, 15}) {
        for (int a = 0; a < n; ++a) {
            std::vector<Rational> angles;
            for (int j = 0; j < n; ++j) {
                angles.emplace_back(a * j * j, n);
            }
            const MetricGroup mg({n}, angles);
            const auto md = pointed_data(mg);
            EXPECT_TRUE(verify_premodular(md).ok());
            EXPECT_EQ(is_modular(md), mg.nondegenerate());
            EXPECT_EQ(check_unitarity(md).ok(), mg.nondegenerate());
            EXPECT_EQ(mg.nondegenerate(), std::gcd(a, n) == 1);
        }
    }
    for (const auto& md : z2z2_premodular_family()) {
        EXPECT_EQ(is_modular(md), md.modular_flag());
    }
}

TEST(zoo, cyclic_even_forms) {
    for (int n : {2, 4, 8, 24}) {
        const auto md = pointed_data(cyclic_even_form(n, 1));
        EXPECT_TRUE(verify_modular(md).ok()) << n;
    }
    EXPECT_FALSE(cyclic_even_form(8, 2).nondegenerate());
    EXPECT_THROW(cyclic_even_form(5, 1), std::invalid_argument);
}

TEST(zoo, particle_hole_relabeling_is_an_equivalence) {
    for (int n : {3, 5, 7, 9, 15}) {
        for (const auto& mg : cyclic_forms(n)) {
            const auto md = pointed_data(mg);
            std::vector<int> flip(n);
            for (int j = 0; j < n; ++j) {
                flip[j] = static_cast<int>(nt::mod(-j, n));
            }
            const auto flipped = relabel(md, flip);
            EXPECT_TRUE(equivalent_data(md, flipped).has_value());
            // The flip itself preserves S and T.
            for (int x = 0; x < n; ++x) {
                EXPECT_EQ(md.T(flip[x]), md.T(x));
                for (int y = 0; y < n; ++y) {
                    EXPECT_EQ(md.S(flip[x], flip[y]), md.S(x, y));
                }
            }
        }
    }
}

TEST(zoo, ising_examples) {
    for (int nu = 1; nu < 16; nu += 2) {
        const auto md = ising(nu);
        EXPECT_TRUE(verify_modular(md).ok()) << nu;
        EXPECT_EQ(md.global_dim(), Cyclotomic(4));
    }
    EXPECT_EQ(ising(1).T(2), Cyclotomic::zeta(16));
    EXPECT_EQ(ising(17).T(2), Cyclotomic::zeta(16));
    EXPECT_EQ(classify_invertible(ising(1), 1), InvertibleKind::Fermion);
    EXPECT_FALSE(equivalent_data(ising(1), ising(3)));
    EXPECT_THROW(ising(2), std::invalid_argument);
}

TEST(zoo, metaplectic_examples) {
    const auto md = metaplectic_data(3);
    const auto L = metaplectic_labels(3);
    EXPECT_EQ(md.rank(), 10);
    EXPECT_EQ(md.S(0, L.V(1)), sqrt_int(3));
    EXPECT_EQ(md.T(L.g), -Cyclotomic::zeta(4));
    EXPECT_EQ(md.S(L.two_dim(1), L.two_dim(2)), Cyclotomic(-2));
    EXPECT_EQ(md.T(L.V(1)), root_of_unity(5, 16));
    EXPECT_EQ(md.T(L.V(1)), Cyclotomic::zeta(16, 5));
    EXPECT_EQ(md.T(L.g2), Cyclotomic(1));
    EXPECT_EQ(metaplectic_data(1).rank(), 8);
    EXPECT_THROW(metaplectic_data(4), std::invalid_argument);
    EXPECT_THROW(metaplectic_data(0), std::invalid_argument);
    EXPECT_EQ(md.names(), (std::vector<std::string>{"1", "g2", "g", "g3", "Y1", "X1", "V1", "V2", "V3", "V4"}));
}

TEST(zoo, metaplectic_data_is_modular_with_dimension_8N) {
    for (int N : kOddN) {
        const auto md = metaplectic_data(N);
        const auto L = metaplectic_labels(N);
        SCOPED_TRACE(N);
        EXPECT_EQ(md.rank(), N + 7);
        EXPECT_TRUE(verify_modular(md).ok());
        EXPECT_TRUE(is_modular(md));
        EXPECT_EQ(md.global_dim(), Cyclotomic(8 * N));
        Cyclotomic row;
        for (int b = 0; b < md.rank(); ++b) {
            row += md.S(0, b) * md.S(0, b).conj();
        }
        EXPECT_EQ(row, Cyclotomic(4 + 4 * (N - 1) + 4 * N));
        const auto& ring = md.fusion();
        for (int a = 1; a <= N - 1; ++a) {
            EXPECT_TRUE(ring.is_self_dual(L.two_dim(a)));
        }
        EXPECT_TRUE(check_metaplectic_rules(ring, N).ok());
    }
}

TEST(zoo, metaplectic_twist_reading_is_unique) {
    for (int N : kOddN) {
        if (N == 1) {
            continue;  // no 2-dimensional labels, both readings coincide
        }
        const auto as_written = detail::metaplectic_candidate(N, -1);
        const auto conjugate = detail::metaplectic_candidate(N, 1);
        EXPECT_TRUE(verify_premodular(as_written).ok()) << N;
        const auto report = verify_premodular(conjugate);
        EXPECT_FALSE(report.ok()) << N;
        EXPECT_TRUE(report.has("balancing")) << N;
    }
}

TEST(zoo, metaplectic_ring_rules) {
    {
        const auto ring = metaplectic_ring(3);
        const auto L = metaplectic_labels(3);
        EXPECT_EQ(ring.product(L.V(1), L.V(1)), (FusionRing::Product{{L.g, 1}, {L.Y(1), 1}}));
        EXPECT_EQ(ring.dual(L.V(1)), ring.product(L.g3, L.V(1)).front().first);
    }
    {
        const auto ring = metaplectic_ring(5);
        const auto L = metaplectic_labels(5);
        EXPECT_EQ(ring.product(L.X(1), L.X(1)), (FusionRing::Product{{0, 1}, {L.g2, 1}, {L.X(2), 1}}));
        EXPECT_EQ(ring.product(L.g, L.X(1)), (FusionRing::Product{{L.Y(2), 1}}));
    }
    for (int N : {3, 5, 7, 9, 11}) {
        const auto ring = metaplectic_ring(N);
        const auto L = metaplectic_labels(N);
        for (int a = 1; a <= L.h(); ++a) {
            const int g2v = ring.product(L.g2, L.V(1)).front().first;
            std::vector<std::pair<int, int>> want{{L.V(1), 1}, {g2v, 1}};
            std::sort(want.begin(), want.end());
            EXPECT_EQ(ring.product(L.X(a), L.V(1)), want);
        }
        // Adjoint part is the dihedral character ring of order dim(C_ad) = 2N.
        const auto ad = adjoint_subring(ring);
        EXPECT_EQ(ad, L.adjoint());
        EXPECT_FALSE(ring_isomorphisms(restrict(ring, ad), dihedral_rep_ring(N)).empty());
    }
}

// The g-action on V1..V4 as listed alongside the fusion rules, with
// g^3 V_a = V_a^* read for every a, cannot hold under any labeling of the
// V's: g^2 acts freely on them, so g^3 V = V^* for V and V^* forces g^6 V = V.
TEST(zoo, listed_v_orbit_rules_are_unsatisfiable_for_all_a) {
    const int N = 3;
    const auto ring = metaplectic_ring(N);
    const auto L = metaplectic_labels(N);
    std::vector<int> sigma{0, 1, 2, 3};  // sigma[i] = which actual V plays the listed V_{i+1}
    int full_matches = 0;
    int matches_without_all_a = 0;
    std::vector<std::vector<int>> witnesses;
    do {
        auto v = [&](int i) { return L.V(1 + sigma[i - 1]); };
        auto times = [&](int inv, int x) { return ring.product(inv, x).front().first; };
        const bool g_list = times(L.g, v(1)) == v(3) && times(L.g, v(3)) == v(4) && times(L.g, v(2)) == v(1) &&
                            times(L.g, v(4)) == v(2);
        const bool duals = ring.dual(v(1)) == v(2) && ring.dual(v(3)) == v(4);
        bool g3_all = true;
        for (int i = 1; i <= 4; ++i) {
            g3_all = g3_all && times(L.g3, v(i)) == ring.dual(v(i));
        }
        const bool g3_first = times(L.g3, v(1)) == ring.dual(v(1));
        full_matches += g_list && duals && g3_all;
        if (g_list && duals && g3_first) {
            ++matches_without_all_a;
            witnesses.push_back(sigma);
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    EXPECT_EQ(full_matches, 0);
    // Two labelings survive, related by g^2. One of them just swaps V3 and V4
    // relative to the S-matrix order.
    EXPECT_EQ(matches_without_all_a, 2);
    EXPECT_NE(std::find(witnesses.begin(), witnesses.end(), std::vector<int>{0, 1, 3, 2}), witnesses.end());
}

TEST(zoo, z2z2_family) {
    const auto family = z2z2_premodular_family();
    EXPECT_EQ(family.size(), 32u);
    int symmetric = 0;
    bool found_semion_member = false;
    for (const auto& md : family) {
        EXPECT_TRUE(verify_premodular(md).ok());
        EXPECT_EQ(md.fusion(), group_ring({2, 2}));
        symmetric += is_symmetric(md);
        if (md.T(1) == Cyclotomic(1) && md.T(2) == Cyclotomic::zeta(4) && md.T(3) == Cyclotomic::zeta(4)) {
            found_semion_member = true;
            EXPECT_EQ(md.S(2, 2), Cyclotomic(-1));
            EXPECT_FALSE(is_symmetric(md));
        }
    }
    EXPECT_TRUE(found_semion_member);
    // Symmetric members: q takes values +-1 and b is trivial, i.e. q is a character.
    EXPECT_EQ(symmetric, 4);
    EXPECT_TRUE(is_symmetric(family.front()));
}

TEST(zoo, catalog_is_modular) {
    for (const auto& e : zoo_base()) {
        EXPECT_TRUE(verify_modular(e.data).ok()) << e.name;
    }
    const auto products = zoo_products();
    EXPECT_GT(products.size(), 30u);
    for (const auto& e : products) {
        EXPECT_LE(e.data.rank(), kMaxRank);
    }
}
