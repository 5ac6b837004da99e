#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nupart/bigint.hpp"

namespace nupart {

// Extend a partition-count table in place up to index n_max using Euler's
// pentagonal-number recurrence,
//   p(n) = sum_{k>=1} (-1)^{k-1} [ p(n - k(3k-1)/2) + p(n - k(3k+1)/2) ],
// about O(n^1.5) big-integer additions in total.
inline void extend_p_table(std::vector<BigInt>& p, std::size_t n_max) {
    if (p.empty()) {
        p.emplace_back(1);
    }
    p.reserve(n_max + 1);
    for (std::size_t n = p.size(); n <= n_max; ++n) {
        BigInt acc = 0;
        for (std::size_t k = 1;; ++k) {
            const std::size_t g1 = k * (3 * k - 1) / 2;
            if (g1 > n) {
                break;
            }
            const std::size_t g2 = k * (3 * k + 1) / 2;
            if (k % 2 == 1) {
                acc += p[n - g1];
                if (g2 <= n) acc += p[n - g2];
            } else {
                acc -= p[n - g1];
                if (g2 <= n) acc -= p[n - g2];
            }
        }
        p.push_back(std::move(acc));
    }
}

// p[0..n_max], p[n] = number of partitions of n.
inline std::vector<BigInt> compute_p_table(std::size_t n_max) {
    std::vector<BigInt> p;
    extend_p_table(p, n_max);
    return p;
}

// nu[n] = number of partitions of n with no part equal to one, obtained as
// nu[n] = p[n] - p[n-1]; nu[0] = 1 by convention. Rejects tables that are
// not genuine p-tables (wrong p[0] or a decreasing step).
inline std::vector<BigInt> derive_nu(const std::vector<BigInt>& p) {
    if (p.empty() || p[0] != 1) {
        throw std::invalid_argument("derive_nu: input is not a p-table (p[0] != 1)");
    }
    std::vector<BigInt> nu;
    nu.reserve(p.size());
    nu.emplace_back(1);
    for (std::size_t n = 1; n < p.size(); ++n) {
        BigInt d = p[n] - p[n - 1];
        if (d < 0) {
            throw std::invalid_argument("derive_nu: p decreases at n=" + std::to_string(n));
        }
        nu.push_back(std::move(d));
    }
    return nu;
}

// gamma[n] = number of ground-state non-unitary partitions of n, obtained
// as gamma[n] = nu[n] - nu[n-1] for n >= 3. gamma[0..2] = 0 fixed by
// enumeration ground truth: the difference identity does not hold at n = 2
// (nu[2] - nu[1] = 1 while no partition of 2 qualifies).
inline std::vector<BigInt> derive_gamma(const std::vector<BigInt>& nu) {
    if (nu.empty() || nu[0] != 1) {
        throw std::invalid_argument("derive_gamma: input is not a nu-table (nu[0] != 1)");
    }
    std::vector<BigInt> gamma(std::min<std::size_t>(nu.size(), 3), BigInt(0));
    gamma.reserve(nu.size());
    for (std::size_t n = 3; n < nu.size(); ++n) {
        BigInt d = nu[n] - nu[n - 1];
        if (d < 0) {
            throw std::invalid_argument("derive_gamma: nu decreases at n=" + std::to_string(n));
        }
        gamma.push_back(std::move(d));
    }
    return gamma;
}

// r-th backward difference, Delta f(n) = f(n) - f(n-1) iterated r times.
// Output keeps the input indexing: entry n is Delta^r seq(n), meaningful
// for n >= r. Entries below index r are computed with the padding
// convention f(n) = 0 for n < 0 and carry no contract.
inline std::vector<BigInt> finite_difference(std::vector<BigInt> seq, unsigned order) {
    if (order < 1) {
        throw std::invalid_argument("finite_difference: order must be >= 1");
    }
    if (order >= seq.size()) {
        throw std::invalid_argument("finite_difference: order " + std::to_string(order) +
                                    " >= sequence length " + std::to_string(seq.size()));
    }
    for (unsigned pass = 0; pass < order; ++pass) {
        BigInt prev = 0;
        for (auto& v : seq) {
            BigInt cur = v;
            v -= prev;
            prev = std::move(cur);
        }
    }
    return seq;
}

// Number of positive divisors, by trial division up to sqrt(n).
inline std::uint64_t sigma0(std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("sigma0: n must be positive");
    }
    std::uint64_t count = 0;
    for (std::uint64_t d = 1; d <= n / d; ++d) {
        if (n % d == 0) {
            count += (d == n / d) ? 1 : 2;
        }
    }
    return count;
}

// Modified floor of num/den: 0 when den divides num, ordinary floor
// otherwise (floor semantics also for negative num).
inline std::int64_t mod_floor(std::int64_t num, std::int64_t den) {
    if (den < 1) {
        throw std::invalid_argument("mod_floor: den must be >= 1");
    }
    const std::int64_t r = num % den;
    if (r == 0) {
        return 0;
    }
    std::int64_t q = num / den;
    if (r < 0) {
        --q;  // C++ truncates toward zero
    }
    return q;
}

// Immutable triple of aligned tables p, nu, gamma over 0..n_max. Once
// built (or loaded and validated) it is safe to share across readers.
struct SeqTable {
    std::vector<BigInt> p;
    std::vector<BigInt> nu;
    std::vector<BigInt> gamma;

    std::size_t n_max() const { return p.size() - 1; }

    static SeqTable build(std::size_t n_max) {
        SeqTable t;
        t.p = compute_p_table(n_max);
        t.nu = derive_nu(t.p);
        t.gamma = derive_gamma(t.nu);
        return t;
    }

    // Extend an existing table, reusing its p prefix. The prefix is
    // revalidated first; extension never changes rows 0..prefix.n_max().
    static SeqTable extend(SeqTable prefix, std::size_t n_max) {
        prefix.validate();
        if (n_max <= prefix.n_max()) {
            return prefix;
        }
        extend_p_table(prefix.p, n_max);
        prefix.nu = derive_nu(prefix.p);
        prefix.gamma = derive_gamma(prefix.nu);
        return prefix;
    }

    // Checks every structural invariant; throws std::invalid_argument
    // naming the first witness index on failure.
    void validate() const {
        if (p.empty() || p.size() != nu.size() || p.size() != gamma.size()) {
            throw std::invalid_argument("SeqTable: tables empty or of unequal length");
        }
        auto fail = [](const std::string& what, std::size_t n) {
            throw std::invalid_argument("SeqTable: " + what + " at n=" + std::to_string(n));
        };
        if (p[0] != 1) fail("p[0] != 1", 0);
        if (nu[0] != 1) fail("nu[0] != 1", 0);
        for (std::size_t n = 0; n < std::min<std::size_t>(gamma.size(), 3); ++n) {
            if (gamma[n] != 0) fail("gamma convention broken", n);
        }
        for (std::size_t n = 1; n < p.size(); ++n) {
            if (p[n] != p[n - 1] + nu[n]) fail("p recurrence broken", n);
            if (n >= 2 && p[n] <= p[n - 1]) fail("p not strictly increasing", n);
            if (n >= 2 && nu[n] < nu[n - 1]) fail("nu not weakly increasing", n);
            if (n >= 3 && nu[n] != nu[n - 1] + gamma[n]) fail("nu recurrence broken", n);
            if (gamma[n] < 0) fail("negative gamma", n);
        }
    }
};

}  // namespace nupart
