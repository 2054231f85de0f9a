#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace mtc::nt {

struct PrimePower {
    std::int64_t prime;
    int exponent;
    std::int64_t power;  // prime^exponent
};

/// Trial-division factorization, ascending primes. factorize(1) is empty.
inline std::vector<PrimePower> factorize(std::int64_t n) {
    if (n < 1) {
        throw std::invalid_argument("factorize: argument must be positive");
    }
    std::vector<PrimePower> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) {
            continue;
        }
        PrimePower pp{p, 0, 1};
        while (n % p == 0) {
            n /= p;
            ++pp.exponent;
            pp.power *= p;
        }
        out.push_back(pp);
    }
    if (n > 1) {
        out.push_back({n, 1, n});
    }
    return out;
}

inline bool is_prime(std::int64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            return false;
        }
    }
    return true;
}

inline bool is_squarefree(std::int64_t n) {
    for (const auto& pp : factorize(n)) {
        if (pp.exponent > 1) {
            return false;
        }
    }
    return true;
}

/// Splits n = s^2 * f with f square-free; returns {s, f}.
inline std::pair<std::int64_t, std::int64_t> square_and_squarefree(std::int64_t n) {
    std::int64_t s = 1;
    std::int64_t f = 1;
    for (const auto& pp : factorize(n)) {
        for (int i = 0; i < pp.exponent / 2; ++i) {
            s *= pp.prime;
        }
        if (pp.exponent % 2 == 1) {
            f *= pp.prime;
        }
    }
    return {s, f};
}

inline std::int64_t euler_phi(std::int64_t n) {
    std::int64_t phi = n;
    for (const auto& pp : factorize(n)) {
        phi = phi / pp.prime * (pp.prime - 1);
    }
    return phi;
}

inline std::int64_t mod(std::int64_t a, std::int64_t n) {
    const std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

/// Inverse of a modulo n; requires gcd(a, n) = 1.
inline std::int64_t mod_inverse(std::int64_t a, std::int64_t n) {
    if (n == 1) {
        return 0;
    }
    std::int64_t r0 = n;
    std::int64_t r1 = mod(a, n);
    std::int64_t s0 = 0;
    std::int64_t s1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    }
    if (r0 != 1) {
        throw std::invalid_argument("mod_inverse: arguments are not coprime");
    }
    return mod(s0, n);
}

/// Jacobi symbol (a/n) for odd positive n.
inline int jacobi(std::int64_t a, std::int64_t n) {
    if (n < 1 || n % 2 == 0) {
        throw std::invalid_argument("jacobi: modulus must be an odd positive integer");
    }
    a = mod(a, n);
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const std::int64_t r = n % 8;
            if (r == 3 || r == 5) {
                result = -result;
            }
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) {
            result = -result;
        }
        a %= n;
    }
    return n == 1 ? result : 0;
}

/// Units of Z/n in ascending order (for n = 1 this is {0}).
inline std::vector<std::int64_t> units(std::int64_t n) {
    std::vector<std::int64_t> out;
    if (n == 1) {
        out.push_back(0);
        return out;
    }
    for (std::int64_t u = 1; u < n; ++u) {
        if (std::gcd(u, n) == 1) {
            out.push_back(u);
        }
    }
    return out;
}

}  // namespace mtc::nt
