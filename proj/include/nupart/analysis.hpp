#pragma once

#include <boost/math/constants/constants.hpp>

#include <cstdint>
#include <ios>
#include <stdexcept>
#include <string>
#include <vector>

#include "nupart/bigint.hpp"
#include "nupart/report.hpp"
#include "nupart/seq.hpp"

namespace nupart {

inline const Real& real_pi() {
    static const Real v = boost::math::constants::pi<Real>();
    return v;
}

// zeta(2) = pi^2/6
inline const Real& zeta2() {
    static const Real v = real_pi() * real_pi() / 6;
    return v;
}

// Hardy-Ramanujan constants: p(n) ~ e^{A sqrt(n)} / (B n).
inline const Real& hr_a() {
    static const Real v = real_pi() * sqrt(Real(2) / 3);
    return v;
}

inline const Real& hr_b() {
    static const Real v = 4 * sqrt(Real(3));
    return v;
}

inline Real hr_estimate(std::size_t n) {
    if (n < 1) {
        throw std::invalid_argument("hr_estimate: n must be >= 1");
    }
    return exp(hr_a() * sqrt(Real(n))) / (hr_b() * Real(static_cast<unsigned long long>(n)));
}

struct RatioSample {
    std::size_t n = 0;
    Real ratio;
    Real deviation;  // |ratio - 1|
};

// Fixed-width deterministic rendering, 20 significant digits.
inline std::string format_ratio(const Real& r) {
    return r.str(20, std::ios_base::scientific);
}

namespace detail {

inline void require_index(const SeqTable& table, std::size_t n, const char* who) {
    if (n > table.n_max()) {
        throw std::invalid_argument(std::string(who) + ": n=" + std::to_string(n) +
                                    " beyond table n_max=" + std::to_string(table.n_max()));
    }
}

inline RatioSample make_sample(std::size_t n, Real ratio) {
    RatioSample s;
    s.n = n;
    s.deviation = abs(ratio - 1);
    s.ratio = std::move(ratio);
    return s;
}

}  // namespace detail

// p(n) / ( nu(n) * sqrt(n/zeta(2)) ); tends to 1.
inline RatioSample ratio_p_over_nu(const SeqTable& table, std::size_t n) {
    detail::require_index(table, n, "ratio_p_over_nu");
    if (n < 2 || table.nu[n] == 0) {
        throw std::invalid_argument("ratio_p_over_nu: nu(n) = 0 at n=" + std::to_string(n));
    }
    Real ratio = Real(table.p[n]) /
                 (Real(table.nu[n]) * sqrt(Real(static_cast<unsigned long long>(n)) / zeta2()));
    return detail::make_sample(n, std::move(ratio));
}

// nu(n) / ( gamma(n) * sqrt(n/zeta(2)) ); tends to 1.
inline RatioSample ratio_nu_over_gamma(const SeqTable& table, std::size_t n) {
    detail::require_index(table, n, "ratio_nu_over_gamma");
    if (n < 4 || table.gamma[n] == 0) {
        throw std::invalid_argument("ratio_nu_over_gamma: gamma(n) = 0 at n=" + std::to_string(n));
    }
    Real ratio = Real(table.nu[n]) /
                 (Real(table.gamma[n]) * sqrt(Real(static_cast<unsigned long long>(n)) / zeta2()));
    return detail::make_sample(n, std::move(ratio));
}

// p(n) * zeta(2) / ( n * gamma(n) ); tends to 1 and equals the product of
// the two ratios above by construction.
inline RatioSample ratio_p_over_gamma(const SeqTable& table, std::size_t n) {
    detail::require_index(table, n, "ratio_p_over_gamma");
    if (n < 4 || table.gamma[n] == 0) {
        throw std::invalid_argument("ratio_p_over_gamma: gamma(n) = 0 at n=" + std::to_string(n));
    }
    Real ratio = Real(table.p[n]) * zeta2() /
                 (Real(static_cast<unsigned long long>(n)) * Real(table.gamma[n]));
    return detail::make_sample(n, std::move(ratio));
}

// The three classical Ramanujan congruence classes as (step, shift, modulus).
struct CongruenceClass {
    unsigned a, b, c;
};

inline const std::vector<CongruenceClass>& ramanujan_classes() {
    static const std::vector<CongruenceClass> v = {{5, 4, 5}, {7, 5, 7}, {11, 6, 11}};
    return v;
}

// p(5n+4) = 0 mod 5, p(7n+5) = 0 mod 7, p(11n+6) = 0 mod 11, for every
// applicable argument in the table.
inline VerificationReport check_ramanujan(const SeqTable& table) {
    VerificationReport r;
    r.claim_id = "ramanujan-congruences";
    r.n_lo = 0;
    r.n_hi = static_cast<std::int64_t>(table.n_max());
    for (const auto& cls : ramanujan_classes()) {
        std::uint64_t verified = 0;
        for (std::size_t m = cls.b; m <= table.n_max(); m += cls.a) {
            if (table.p[m] % cls.c != 0) {
                r.add_violation(static_cast<std::int64_t>(m),
                                "p(" + std::to_string(m) + ") mod " + std::to_string(cls.c) +
                                    " = " + BigInt(table.p[m] % cls.c).str());
            } else {
                ++verified;
            }
        }
        r.add_sample(cls.c, "p(" + std::to_string(cls.a) + "n+" + std::to_string(cls.b) + "): " +
                                std::to_string(verified) + " instances verified (mod " +
                                std::to_string(cls.c) + ")");
    }
    return r;
}

// p(5n) = nu(5n) mod 5, p(7n+6) = nu(7n+6) mod 7, p(11n+7) = nu(11n+7)
// mod 11 for n >= 1, plus the recursion cross-check
//   c | p(m)  <=>  c | (p(m+1) - nu(m+1))
// for every m and each modulus, which ties these congruences back to the
// classical ones through p(m) = p(m+1) - nu(m+1).
inline VerificationReport check_shifted_congruences(const SeqTable& table) {
    VerificationReport r;
    r.claim_id = "shifted-congruences";
    r.n_lo = 1;
    r.n_hi = static_cast<std::int64_t>(table.n_max());
    static const std::vector<CongruenceClass> classes = {{5, 0, 5}, {7, 6, 7}, {11, 7, 11}};
    for (const auto& cls : classes) {
        std::uint64_t verified = 0;
        for (std::size_t k = 1;; ++k) {
            const std::size_t m = static_cast<std::size_t>(cls.a) * k + cls.b;
            if (m > table.n_max()) {
                break;
            }
            if ((table.p[m] - table.nu[m]) % cls.c != 0) {
                r.add_violation(static_cast<std::int64_t>(m),
                                "p(" + std::to_string(m) + ") - nu(" + std::to_string(m) +
                                    ") not divisible by " + std::to_string(cls.c));
            } else {
                ++verified;
            }
        }
        r.add_sample(cls.c, "p=nu (mod " + std::to_string(cls.c) + ") on " +
                                std::to_string(cls.a) + "n+" + std::to_string(cls.b) + ": " +
                                std::to_string(verified) + " instances verified");
    }
    for (const auto& cls : ramanujan_classes()) {
        std::uint64_t verified = 0;
        for (std::size_t m = 0; m + 1 <= table.n_max(); ++m) {
            const bool lhs = table.p[m] % cls.c == 0;
            const bool rhs = (table.p[m + 1] - table.nu[m + 1]) % cls.c == 0;
            if (lhs != rhs) {
                r.add_violation(static_cast<std::int64_t>(m),
                                "recursion implication broken mod " + std::to_string(cls.c));
            } else {
                ++verified;
            }
        }
        r.add_sample(cls.c, "recursion implication (mod " + std::to_string(cls.c) + "): " +
                                std::to_string(verified) + " arguments checked");
    }
    return r;
}

enum class SeqChoice { nu, gamma };

inline const char* to_string(SeqChoice s) {
    return s == SeqChoice::nu ? "nu" : "gamma";
}

struct CongruenceCandidate {
    unsigned a = 0, b = 0, c = 0;
    std::uint64_t witnesses = 0;
};

struct ScanOptions {
    // A candidate must cover at least this fraction of its residue class;
    // 1.0 means every member must be divisible (a true congruence).
    double min_density = 1.0;
    // Minimum number of divisible members before a class may qualify.
    std::uint64_t min_witnesses = 1;
};

// Scan all (a, b, c) with 1 <= a <= a_max, 0 <= b < a, c in moduli for
// residue classes with seq(an+b) = 0 (mod c) throughout the table.
inline std::vector<CongruenceCandidate> scan_sequence(const std::vector<BigInt>& seq,
                                                      unsigned a_max,
                                                      const std::vector<unsigned>& moduli,
                                                      ScanOptions opts = {}) {
    if (a_max < 1 || seq.empty()) {
        throw std::invalid_argument("scan_sequence: need a_max >= 1 and a nonempty sequence");
    }
    std::vector<CongruenceCandidate> found;
    for (unsigned c : moduli) {
        for (unsigned a = 1; a <= a_max; ++a) {
            for (unsigned b = 0; b < a; ++b) {
                std::uint64_t members = 0;
                std::uint64_t hits = 0;
                for (std::size_t m = b; m < seq.size(); m += a) {
                    ++members;
                    if (seq[m] % c == 0) {
                        ++hits;
                    } else if (opts.min_density >= 1.0) {
                        break;  // exact mode: first violation kills the class
                    }
                }
                if (members == 0 || hits < opts.min_witnesses) {
                    continue;
                }
                if (opts.min_density >= 1.0) {
                    if (hits == members) {
                        found.push_back({a, b, c, hits});
                    }
                } else if (static_cast<double>(hits) >=
                           opts.min_density * static_cast<double>(members)) {
                    found.push_back({a, b, c, hits});
                }
            }
        }
    }
    return found;
}

inline std::vector<CongruenceCandidate> congruence_scan(const SeqTable& table, SeqChoice choice,
                                                        unsigned a_max,
                                                        const std::vector<unsigned>& moduli,
                                                        ScanOptions opts = {}) {
    return scan_sequence(choice == SeqChoice::nu ? table.nu : table.gamma, a_max, moduli, opts);
}

// gcd identity chains: with x = y + z, gcd(x,y) = gcd(y,z) = gcd(x,z).
// Instantiated as (p(n), nu(n), p(n-1)) for n >= 1 and
// (nu(n), gamma(n), nu(n-1)) for n >= 3. gcd(x, 0) = x.
inline VerificationReport check_gcd_identities(const SeqTable& table) {
    using boost::multiprecision::gcd;
    VerificationReport r;
    r.claim_id = "gcd-identities";
    r.n_lo = 1;
    r.n_hi = static_cast<std::int64_t>(table.n_max());
    for (std::size_t n = 1; n <= table.n_max(); ++n) {
        const BigInt g1 = gcd(table.p[n], table.nu[n]);
        const BigInt g2 = gcd(table.nu[n], table.p[n - 1]);
        const BigInt g3 = gcd(table.p[n], table.p[n - 1]);
        if (g1 != g2 || g1 != g3) {
            r.add_violation(static_cast<std::int64_t>(n),
                            "p/nu chain: " + g1.str() + "," + g2.str() + "," + g3.str());
        }
    }
    for (std::size_t n = 3; n <= table.n_max(); ++n) {
        const BigInt g1 = gcd(table.nu[n], table.gamma[n]);
        const BigInt g2 = gcd(table.gamma[n], table.nu[n - 1]);
        const BigInt g3 = gcd(table.nu[n], table.nu[n - 1]);
        if (g1 != g2 || g1 != g3) {
            r.add_violation(static_cast<std::int64_t>(n),
                            "nu/gamma chain: " + g1.str() + "," + g2.str() + "," + g3.str());
        }
    }
    return r;
}

// How the table values are read when counting shared divisors.
//   exact:   the integers themselves.
//   float53: every p(n) rounded to the nearest 64-bit-float-representable
//            integer, nu and gamma rebuilt by subtraction — the arithmetic
//            of a spreadsheet holding the table in double cells.
enum class GcdConvention { exact, float53 };

inline const char* to_string(GcdConvention c) {
    return c == GcdConvention::exact ? "exact" : "float53";
}

struct GcdStats {
    std::size_t n_lo = 0, n_hi = 0;
    std::uint64_t pair_count = 0;    // gcd(p, nu) > 1
    std::uint64_t triple_count = 0;  // gcd(p, nu, gamma) > 1
    std::uint64_t total = 0;
    double percent_pair = 0.0;
    double percent_triple = 0.0;
    GcdConvention convention = GcdConvention::exact;
};

inline GcdStats gcd_statistics(const SeqTable& table, std::size_t n_lo, std::size_t n_hi,
                               GcdConvention convention = GcdConvention::exact) {
    using boost::multiprecision::abs;
    using boost::multiprecision::gcd;
    if (n_lo > n_hi || n_hi > table.n_max()) {
        throw std::invalid_argument("gcd_statistics: empty or out-of-range interval");
    }
    const std::vector<BigInt>* p = &table.p;
    const std::vector<BigInt>* nu = &table.nu;
    const std::vector<BigInt>* gamma = &table.gamma;
    std::vector<BigInt> pd, nud, gd;
    if (convention == GcdConvention::float53) {
        pd.reserve(table.p.size());
        for (const BigInt& v : table.p) {
            pd.push_back(round_to_double53(v));
        }
        nud = derive_nu(pd);
        gd.assign(std::min<std::size_t>(nud.size(), 3), BigInt(0));
        for (std::size_t n = 3; n < nud.size(); ++n) {
            gd.push_back(nud[n] - nud[n - 1]);
        }
        p = &pd;
        nu = &nud;
        gamma = &gd;
    }
    GcdStats s;
    s.n_lo = n_lo;
    s.n_hi = n_hi;
    s.convention = convention;
    s.total = n_hi - n_lo + 1;
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
        const BigInt pair = gcd((*p)[n], (*nu)[n]);
        if (pair > 1) {
            ++s.pair_count;
            if (gcd(pair, abs((*gamma)[n])) > 1) {
                ++s.triple_count;
            }
        }
    }
    s.percent_pair = 100.0 * static_cast<double>(s.pair_count) / static_cast<double>(s.total);
    s.percent_triple = 100.0 * static_cast<double>(s.triple_count) / static_cast<double>(s.total);
    return s;
}

// Monotonicity reports, in order:
//   gamma-step-two:        gamma(n) >= gamma(n-2) for 3 <= n <= n_max
//   gamma-tail-monotone:   gamma(n) >= gamma(n-1) for 26 <= n <= n_max
//   oscillation-witnesses: all n < 26 with gamma(n) < gamma(n-1) (listed)
//   delta3-agreement:      gamma(n) - gamma(n-1) == Delta^3 p(n) for n >= 4,
//                          and [gamma nondecreasing at n] <=> [Delta^3 p(n) >= 0]
//                          pointwise on the same range. The n = 3 step is
//                          excluded: gamma(2) is fixed by enumeration, not
//                          by differencing, so Delta^3 p(3) = -1 while
//                          gamma(3) - gamma(2) = 0.
inline std::vector<VerificationReport> monotonicity_reports(const SeqTable& table) {
    std::vector<VerificationReport> out;
    const auto n_max = static_cast<std::int64_t>(table.n_max());

    VerificationReport step2;
    step2.claim_id = "gamma-step-two";
    step2.n_lo = 3;
    step2.n_hi = n_max;
    for (std::size_t n = 3; n <= table.n_max(); ++n) {
        if (table.gamma[n] < table.gamma[n - 2]) {
            step2.add_violation(static_cast<std::int64_t>(n),
                                "gamma(n)=" + table.gamma[n].str() + " < gamma(n-2)=" +
                                    table.gamma[n - 2].str());
        }
    }
    out.push_back(std::move(step2));

    VerificationReport tail;
    tail.claim_id = "gamma-tail-monotone";
    tail.n_lo = 26;
    tail.n_hi = n_max;
    for (std::size_t n = 26; n <= table.n_max(); ++n) {
        if (table.gamma[n] < table.gamma[n - 1]) {
            tail.add_violation(static_cast<std::int64_t>(n),
                               "gamma(n)=" + table.gamma[n].str() + " < gamma(n-1)=" +
                                   table.gamma[n - 1].str());
        }
    }
    out.push_back(std::move(tail));

    VerificationReport osc;
    osc.claim_id = "oscillation-witnesses";
    osc.n_lo = 1;
    osc.n_hi = std::min<std::int64_t>(25, n_max);
    osc.status = ClaimStatus::listed;
    for (std::size_t n = 1; n <= table.n_max() && n < 26; ++n) {
        if (table.gamma[n] < table.gamma[n - 1]) {
            osc.add_sample(static_cast<std::int64_t>(n),
                           "gamma drops " + table.gamma[n - 1].str() + " -> " +
                               table.gamma[n].str());
        }
    }
    out.push_back(std::move(osc));

    VerificationReport d3;
    d3.claim_id = "delta3-agreement";
    d3.n_lo = 4;
    d3.n_hi = n_max;
    if (table.p.size() > 3) {
        const auto delta3 = finite_difference(table.p, 3);
        for (std::size_t n = 4; n <= table.n_max(); ++n) {
            const BigInt gd = table.gamma[n] - table.gamma[n - 1];
            if (gd != delta3[n]) {
                d3.add_violation(static_cast<std::int64_t>(n),
                                 "gamma diff " + gd.str() + " != Delta^3 p " + delta3[n].str());
            }
            if ((gd >= 0) != (delta3[n] >= 0)) {
                d3.add_violation(static_cast<std::int64_t>(n), "sign equivalence broken");
            }
        }
    }
    out.push_back(std::move(d3));
    return out;
}

// Growth identity for gamma: for 3 <= n <= n_cut,
//   gamma(n) = gamma(n-1) + eps(n) - sigma0(n-1) + mod_floor(n-1, 2) + 2,
// with eps from direct set construction, and the tail bound
//   eps(n) >= sigma0(n-1) - mod_floor(n-1, 2) - 2   for n >= 26.
inline VerificationReport check_growth_identity(const SeqTable& table,
                                                const std::vector<std::int64_t>& eps,
                                                std::size_t n_cut) {
    VerificationReport r;
    r.claim_id = "gamma-growth-identity";
    r.n_lo = 3;
    r.n_hi = static_cast<std::int64_t>(n_cut);
    if (n_cut > table.n_max() || n_cut >= eps.size()) {
        throw std::invalid_argument("check_growth_identity: n_cut beyond table or eps range");
    }
    for (std::size_t n = 3; n <= n_cut; ++n) {
        const auto prev = static_cast<std::int64_t>(n - 1);
        const BigInt rhs = table.gamma[n - 1] + eps[n] -
                           static_cast<std::int64_t>(sigma0(static_cast<std::uint64_t>(prev))) +
                           mod_floor(prev, 2) + 2;
        if (table.gamma[n] != rhs) {
            r.add_violation(static_cast<std::int64_t>(n),
                            "gamma(n)=" + table.gamma[n].str() + " but identity gives " +
                                rhs.str());
        }
        if (n >= 26) {
            const std::int64_t bound =
                static_cast<std::int64_t>(sigma0(static_cast<std::uint64_t>(prev))) -
                mod_floor(prev, 2) - 2;
            if (eps[n] < bound) {
                r.add_violation(static_cast<std::int64_t>(n),
                                "eps(n)=" + std::to_string(eps[n]) + " below bound " +
                                    std::to_string(bound));
            }
        }
    }
    return r;
}

}  // namespace nupart
