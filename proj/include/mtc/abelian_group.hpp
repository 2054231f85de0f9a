#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mtc/number_theory.hpp"

namespace mtc {

/// A finite abelian group in invariant-factor form d_1 | d_2 | ... | d_k
/// (all d_i > 1), together with coordinates for the elements of the table it
/// was recovered from.
struct AbelianGroup {
    std::vector<int> invariant_factors;
    std::vector<std::vector<int>> coords;  // coords[x][i] in Z/d_i

    int order() const {
        int n = 1;
        for (int d : invariant_factors) {
            n *= d;
        }
        return n;
    }

    bool is_cyclic() const { return invariant_factors.size() <= 1; }

    bool is_elementary_2() const {
        return std::all_of(invariant_factors.begin(), invariant_factors.end(), [](int d) { return d == 2; });
    }

    std::string to_string() const {
        if (invariant_factors.empty()) {
            return "1";
        }
        std::string s;
        for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
            s += (i ? " x Z" : "Z") + std::to_string(invariant_factors[i]);
        }
        return s;
    }
};

class GroupStructureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline int element_order(const std::vector<std::vector<int>>& table, int x) {
    int k = 1;
    for (int y = x; y != 0; y = table[y][x]) {
        if (++k > static_cast<int>(table.size())) {
            throw GroupStructureError("element of infinite order in group table");
        }
    }
    return k;
}

}  // namespace detail

/// Recovers the invariant factors of the abelian group given by `table`
/// (table[x][y] = x*y, element 0 the identity) and a coordinate system on it.
/// Throws GroupStructureError if the table is not an abelian group.
inline AbelianGroup decompose_abelian(const std::vector<std::vector<int>>& table) {
    const int n = static_cast<int>(table.size());
    if (n == 0) {
        throw GroupStructureError("empty group table");
    }
    for (int x = 0; x < n; ++x) {
        if (static_cast<int>(table[x].size()) != n) {
            throw GroupStructureError("group table is not square");
        }
        std::vector<bool> seen(n, false);
        for (int y = 0; y < n; ++y) {
            const int z = table[x][y];
            if (z < 0 || z >= n || seen[z]) {
                throw GroupStructureError("group table row " + std::to_string(x) + " is not a permutation");
            }
            seen[z] = true;
            if (table[y][x] != z) {
                throw GroupStructureError("group table is not commutative");
            }
        }
        if (table[0][x] != x) {
            throw GroupStructureError("element 0 is not the identity");
        }
    }
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            for (int z = 0; z < n; ++z) {
                if (table[table[x][y]][z] != table[x][table[y][z]]) {
                    throw GroupStructureError("group table is not associative");
                }
            }
        }
    }

    std::vector<int> orders(n);
    for (int x = 0; x < n; ++x) {
        orders[x] = detail::element_order(table, x);
    }

    // p-primary parts: the number of elements killed by p^k determines the
    // partition of exponents for p.
    std::vector<int> factors;  // invariant factors, built largest first
    for (const auto& pp : nt::factorize(n)) {
        const int p = static_cast<int>(pp.prime);
        std::vector<int> exponents;  // exponents of cyclic p-parts
        int prev_log = 0;
        std::vector<int> at_least;  // at_least[k-1] = #{e_i >= k}
        for (int k = 1, pk = p;; ++k, pk *= p) {
            int killed = 0;
            for (int x = 0; x < n; ++x) {
                killed += (pk % orders[x] == 0);
            }
            int log = 0;
            for (int c = killed; c > 1; c /= p) {
                ++log;
            }
            if (log == prev_log) {
                break;
            }
            at_least.push_back(log - prev_log);
            prev_log = log;
        }
        // Conjugate partition.
        const int parts = at_least.empty() ? 0 : at_least.front();
        exponents.assign(parts, 0);
        for (int c : at_least) {
            for (int i = 0; i < c; ++i) {
                ++exponents[i];
            }
        }
        if (factors.size() < exponents.size()) {
            factors.resize(exponents.size(), 1);
        }
        for (std::size_t i = 0; i < exponents.size(); ++i) {
            for (int e = 0; e < exponents[i]; ++e) {
                factors[i] *= p;
            }
        }
    }
    std::reverse(factors.begin(), factors.end());  // now d_1 | d_2 | ...

    AbelianGroup group;
    group.invariant_factors = factors;
    group.coords.assign(n, std::vector<int>(factors.size(), 0));
    if (factors.empty()) {
        return group;
    }

    // Backtrack for generators x_i of order d_i spanning a group of the full order.
    std::vector<int> gens;
    std::vector<int> span{0};
    std::vector<std::vector<int>> span_coords{{}};
    std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
        if (i == factors.size()) {
            return static_cast<int>(span.size()) == n;
        }
        for (int x = 1; x < n; ++x) {
            if (orders[x] != factors[i]) {
                continue;
            }
            // x must meet the current span trivially.
            std::vector<bool> in_span(n, false);
            for (int s : span) {
                in_span[s] = true;
            }
            bool independent = true;
            for (int k = 1, y = x; k < factors[i]; ++k, y = table[y][x]) {
                if (in_span[y]) {
                    independent = false;
                    break;
                }
            }
            if (!independent) {
                continue;
            }
            const auto saved = span;
            const auto saved_coords = span_coords;
            std::vector<int> next;
            std::vector<std::vector<int>> next_coords;
            for (std::size_t s = 0; s < span.size(); ++s) {
                for (int k = 0, y = span[s]; k < factors[i]; ++k, y = table[y][x]) {
                    next.push_back(y);
                    auto c = span_coords[s];
                    c.push_back(k);
                    next_coords.push_back(std::move(c));
                }
            }
            span = std::move(next);
            span_coords = std::move(next_coords);
            gens.push_back(x);
            if (search(i + 1)) {
                return true;
            }
            gens.pop_back();
            span = saved;
            span_coords = saved_coords;
        }
        return false;
    };
    if (!search(0)) {
        throw GroupStructureError("could not find generators for the group table");
    }
    for (std::size_t s = 0; s < span.size(); ++s) {
        group.coords[span[s]] = span_coords[s];
    }
    return group;
}

}  // namespace mtc
