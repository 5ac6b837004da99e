#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "nupart/bigint.hpp"

namespace nupart {

// A partition: weakly decreasing positive parts. The empty partition has
// size 0.
struct Partition {
    std::vector<unsigned> parts;

    Partition() = default;
    explicit Partition(std::vector<unsigned> p) : parts(std::move(p)) {}

    unsigned size() const {
        return std::accumulate(parts.begin(), parts.end(), 0u);
    }

    bool valid() const {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 1) return false;
            if (i > 0 && parts[i] > parts[i - 1]) return false;
        }
        return true;
    }

    auto operator<=>(const Partition&) const = default;
};

// No part equal to one; vacuously true for the empty partition.
inline bool is_non_unitary(const Partition& lambda) {
    return lambda.parts.empty() || lambda.parts.back() != 1;
}

// Nonempty, non-unitary, and the largest part appears at least twice.
inline bool is_ground_state(const Partition& lambda) {
    const auto& p = lambda.parts;
    return p.size() >= 2 && p.back() != 1 && p[0] == p[1];
}

// Transpose of the Young diagram. Involution.
inline Partition conjugate(const Partition& lambda) {
    Partition out;
    if (lambda.parts.empty()) {
        return out;
    }
    out.parts.reserve(lambda.parts[0]);
    for (unsigned col = 1; col <= lambda.parts[0]; ++col) {
        unsigned len = 0;
        for (unsigned part : lambda.parts) {
            if (part >= col) {
                ++len;
            } else {
                break;  // parts are sorted
            }
        }
        out.parts.push_back(len);
    }
    return out;
}

// Visit every partition of n with all parts >= min_part, exactly once, in
// reverse-lexicographic order. The visitor receives a scratch vector that
// must not be retained across calls. min_part = 1 gives all partitions,
// min_part = 2 the non-unitary ones.
template <class Visitor>
inline void for_each_partition(unsigned n, unsigned min_part, Visitor&& visit) {
    if (min_part < 1) {
        throw std::invalid_argument("for_each_partition: min_part must be >= 1");
    }
    std::vector<unsigned> scratch;
    auto rec = [&](auto&& self, unsigned rem, unsigned max_part) -> void {
        if (rem == 0) {
            visit(static_cast<const std::vector<unsigned>&>(scratch));
            return;
        }
        for (unsigned k = std::min(rem, max_part); k >= min_part; --k) {
            scratch.push_back(k);
            self(self, rem - k, k);
            scratch.pop_back();
        }
    };
    rec(rec, n, n);
    // n == 0 visits the empty partition once (rem starts at 0).
}

inline std::vector<Partition> list_partitions(unsigned n, unsigned min_part = 1) {
    std::vector<Partition> out;
    for_each_partition(n, min_part,
                       [&](const std::vector<unsigned>& parts) { out.emplace_back(parts); });
    return out;
}

inline std::uint64_t count_partitions(unsigned n, unsigned min_part = 1) {
    std::uint64_t count = 0;
    for_each_partition(n, min_part, [&](const std::vector<unsigned>&) { ++count; });
    return count;
}

}  // namespace nupart
