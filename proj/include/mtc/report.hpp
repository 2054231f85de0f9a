#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace mtc {

/// Itemized outcome of an axiom check. Each failure names the identity that
/// broke and the labels involved.
struct VerificationReport {
    struct Failure {
        std::string check;
        std::vector<int> indices;
        std::string detail;
    };

    // Beyond this many failures only a count is kept.
    static constexpr std::size_t kMaxItems = 200;

    std::vector<Failure> failures;
    std::size_t suppressed = 0;

    bool ok() const { return failures.empty(); }

    void fail(std::string check, std::vector<int> indices, std::string detail = {}) {
        if (failures.size() >= kMaxItems) {
            ++suppressed;
            return;
        }
        failures.push_back({std::move(check), std::move(indices), std::move(detail)});
    }

    void merge(const VerificationReport& other) {
        for (const auto& f : other.failures) {
            fail(f.check, f.indices, f.detail);
        }
        suppressed += other.suppressed;
    }

    bool has(const std::string& check) const {
        for (const auto& f : failures) {
            if (f.check == check) {
                return true;
            }
        }
        return false;
    }

    bool has(const std::string& check, const std::vector<int>& indices) const {
        for (const auto& f : failures) {
            if (f.check == check && f.indices == indices) {
                return true;
            }
        }
        return false;
    }
};

}  // namespace mtc
