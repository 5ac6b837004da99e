#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "nupart/partitions.hpp"
#include "nupart/seq.hpp"

namespace nupart {

// Raised when enumeration contradicts a structural claim the rest of the
// pipeline depends on (e.g. the ground-state class decomposition fails at
// some partition). Distinct from ordinary argument errors so callers can
// abort loudly instead of reporting a plain verification failure.
struct contradiction_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Per-n cardinalities of the ground-state decomposition:
//   g_total = #G_n, split into g1 (members reachable by decrementing a
//   part of something in G_n, landing in G_{n-1}) and g2 (the rigid
//   shapes (c,c) and (c,c,2,...,2) including all twos), plus
//   g0 = members whose Young diagram is not a rectangle, and
//   epsilon = g1(n) - g0(n-1).
struct GroundStateDecomposition {
    unsigned n = 0;
    std::int64_t g_total = 0;
    std::int64_t g1 = 0;
    std::int64_t g2 = 0;
    std::int64_t g0 = 0;
    std::int64_t epsilon = 0;
};

// Shape (c,c) with c >= 2, or (c,c,2,...,2); the all-twos partition is the
// c = 2 case. These are exactly the ground states with no decrement move.
inline bool is_cc_twos_shape(const Partition& lambda) {
    const auto& p = lambda.parts;
    if (p.size() < 2 || p[0] != p[1] || p.back() < 2) {
        return false;
    }
    for (std::size_t i = 2; i < p.size(); ++i) {
        if (p[i] != 2) {
            return false;
        }
    }
    return true;
}

// All parts equal; within G_n this makes the part a nontrivial divisor of n.
inline bool is_rectangle(const Partition& lambda) {
    const auto& p = lambda.parts;
    for (std::size_t i = 1; i < p.size(); ++i) {
        if (p[i] != p[0]) {
            return false;
        }
    }
    return !p.empty();
}

namespace detail {

// Can one part be decremented by 1 leaving a ground-state partition?
// Only the last occurrence of each distinct value needs trying; that
// keeps the parts sorted.
inline bool has_ground_state_decrement(const std::vector<unsigned>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i + 1 < parts.size() && parts[i + 1] == parts[i]) {
            continue;  // not the last occurrence
        }
        std::vector<unsigned> cand(parts);
        if (cand[i] == 1) {
            cand.erase(cand.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
            --cand[i];
        }
        if (is_ground_state(Partition(std::move(cand)))) {
            return true;
        }
    }
    return false;
}

struct GroundCounts {
    std::int64_t g_total = 0;
    std::int64_t g1 = 0;
    std::int64_t g2 = 0;
    std::int64_t g0 = 0;
};

inline std::string shape_string(const std::vector<unsigned>& parts) {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

// Enumerates G_n and verifies, member by member, that the two classes
// partition it: the rigid shapes admit no decrement move, everything else
// admits at least one. Any counterexample aborts via contradiction_error.
inline GroundCounts ground_counts(unsigned n) {
    GroundCounts c;
    if (n < 2) {
        return c;
    }
    for_each_partition(n, 2, [&](const std::vector<unsigned>& parts) {
        Partition lambda(parts);
        if (!is_ground_state(lambda)) {
            return;
        }
        ++c.g_total;
        if (!is_rectangle(lambda)) {
            ++c.g0;
        }
        const bool rigid = is_cc_twos_shape(lambda);
        const bool movable = has_ground_state_decrement(parts);
        if (rigid && movable) {
            throw contradiction_error("ground-state classes overlap at n=" + std::to_string(n) +
                                      ", partition " + shape_string(parts));
        }
        if (!rigid && !movable) {
            throw contradiction_error("ground-state classes miss n=" + std::to_string(n) +
                                      ", partition " + shape_string(parts));
        }
        if (rigid) {
            ++c.g2;
        } else {
            ++c.g1;
        }
    });
    return c;
}

}  // namespace detail

// Full decomposition record for one n. For n in {0, 1} all counts are zero.
inline GroundStateDecomposition classify_ground_states(unsigned n) {
    GroundStateDecomposition d;
    d.n = n;
    if (n < 2) {
        return d;
    }
    const auto cur = detail::ground_counts(n);
    const auto prev = detail::ground_counts(n - 1);
    d.g_total = cur.g_total;
    d.g1 = cur.g1;
    d.g2 = cur.g2;
    d.g0 = cur.g0;
    d.epsilon = cur.g1 - prev.g0;
    return d;
}

// epsilon(n) = g1(n) - g0(n-1) for 3 <= n <= n_max, from direct set
// construction (never back-solved from the growth identity). Entry i of
// the result is epsilon(i); entries below 3 are zero.
inline std::vector<std::int64_t> epsilon_series(unsigned n_max) {
    if (n_max < 3) {
        throw std::invalid_argument("epsilon_series: n_max must be >= 3");
    }
    std::vector<std::int64_t> eps(n_max + 1, 0);
    auto prev = detail::ground_counts(2);
    for (unsigned n = 3; n <= n_max; ++n) {
        auto cur = detail::ground_counts(n);
        eps[n] = cur.g1 - prev.g0;
        prev = cur;
    }
    return eps;
}

// Guy's equinumerosity: partitions of n into odd parts >= 3 versus
// partitions into distinct parts none of which is a power of two
// (1, 2, 4, 8, ... count as powers of two). The theorem asserts the two
// counts agree; both sides are enumerated independently here.
inline std::pair<std::uint64_t, std::uint64_t> guy_counts(unsigned n) {
    std::uint64_t odd_count = 0;
    for_each_partition(n, 3, [&](const std::vector<unsigned>& parts) {
        for (unsigned part : parts) {
            if (part % 2 == 0) {
                return;
            }
        }
        ++odd_count;
    });

    auto is_power_of_two = [](unsigned x) { return (x & (x - 1)) == 0; };
    std::uint64_t distinct_count = 0;
    for_each_partition(n, 1, [&](const std::vector<unsigned>& parts) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (is_power_of_two(parts[i])) {
                return;
            }
            if (i > 0 && parts[i] == parts[i - 1]) {
                return;
            }
        }
        ++distinct_count;
    });
    return {odd_count, distinct_count};
}

}  // namespace nupart
