// nupart — exact computation of the partition triple (p, nu, gamma) and a
// verification harness for the identities, congruences, and asymptotics
// built on it.
//
// Subcommands: table, verify, scan, stats, cache.
// Exit codes: 0 all checks pass, 1 verification failure, 2 usage or I/O
// error, 3 enumeration contradiction.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "nupart/analysis.hpp"
#include "nupart/cache.hpp"
#include "nupart/ground_states.hpp"
#include "nupart/report.hpp"
#include "nupart/seq.hpp"
#include "nupart/verify.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verification_failure = 1;
constexpr int exit_usage = 2;
constexpr int exit_contradiction = 3;

std::string resolve_cache_path(const std::string& flag_value) {
    if (!flag_value.empty()) {
        return flag_value;
    }
    if (const char* env = std::getenv("NUPART_CACHE"); env && *env) {
        return env;
    }
    return "nupart-cache.txt";
}

// Load the cache when present (refusing corrupt or mismatched files),
// extend or build as needed, and persist any newly computed rows.
nupart::SeqTable ensure_table(const std::string& cache_path, std::size_t n_max) {
    const std::filesystem::path path(cache_path);
    if (std::filesystem::exists(path)) {
        nupart::SeqTable cached = nupart::load_cache(path);
        if (cached.n_max() >= n_max) {
            return cached;
        }
        nupart::SeqTable extended = nupart::SeqTable::extend(std::move(cached), n_max);
        nupart::write_cache(path, extended);
        return extended;
    }
    nupart::SeqTable table = nupart::SeqTable::build(n_max);
    nupart::write_cache(path, table);
    return table;
}

struct TableOptions {
    std::size_t n_max = 0;
    bool have_max = false;
    std::size_t from = 0;
    bool have_from = false;
    std::size_t to = 0;
    bool have_to = false;
    bool deltas = false;
    std::string format = "csv";
    std::string cache;
};

int cmd_table(const TableOptions& opt) {
    std::size_t hi = opt.have_to ? opt.to : (opt.have_max ? opt.n_max : 3000);
    std::size_t lo = opt.have_from ? opt.from : (opt.deltas ? 1 : 0);
    const std::size_t table_max = opt.have_max ? opt.n_max : hi;
    if (hi > table_max || lo > hi) {
        std::cerr << "nupart: invalid row range " << lo << ".." << hi << " (table size "
                  << table_max << ")\n";
        return exit_usage;
    }
    if (opt.deltas && lo < 1) {
        std::cerr << "nupart: --deltas needs --from >= 1\n";
        return exit_usage;
    }
    const auto table = ensure_table(resolve_cache_path(opt.cache), table_max);

    if (opt.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t n = lo; n <= hi; ++n) {
            nlohmann::json row;
            row["n"] = n;
            row["gamma"] = table.gamma[n].str();
            if (opt.deltas) {
                row["delta"] = (table.gamma[n] - table.gamma[n - 1]).str();
            } else {
                row["nu"] = table.nu[n].str();
                row["p"] = table.p[n].str();
            }
            rows.push_back(std::move(row));
        }
        std::cout << rows.dump(2) << "\n";
        return exit_ok;
    }

    std::vector<std::vector<std::string>> cells;
    for (std::size_t n = lo; n <= hi; ++n) {
        if (opt.deltas) {
            cells.push_back({std::to_string(n), table.gamma[n].str(),
                             (table.gamma[n] - table.gamma[n - 1]).str()});
        } else {
            cells.push_back({std::to_string(n), table.gamma[n].str(), table.nu[n].str(),
                             table.p[n].str()});
        }
    }
    if (opt.format == "csv") {
        for (const auto& row : cells) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                std::cout << (i ? "," : "") << row[i];
            }
            std::cout << "\n";
        }
        return exit_ok;
    }
    // pretty: right-aligned columns in the order n, gamma, nu, p
    std::vector<std::string> header =
        opt.deltas ? std::vector<std::string>{"n", "gamma", "delta"}
                   : std::vector<std::string>{"n", "gamma", "nu", "p"};
    std::vector<std::size_t> width(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) {
        width[i] = header[i].size();
    }
    for (const auto& row : cells) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            width[i] = std::max(width[i], row[i].size());
        }
    }
    auto print_row = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::cout << (i ? "  " : "") << std::string(width[i] - row[i].size(), ' ') << row[i];
        }
        std::cout << "\n";
    };
    print_row(header);
    for (const auto& row : cells) {
        print_row(row);
    }
    return exit_ok;
}

struct VerifyOptions {
    std::size_t n_max = 3000;
    unsigned enum_cutoff = 45;
    std::size_t range_start = 2;
    std::string only;
    std::string out_dir = "reports";
    std::string cache;
};

int cmd_verify(const VerifyOptions& opt) {
    if (opt.enum_cutoff > opt.n_max) {
        std::cerr << "nupart: --enum-cutoff must be <= --max\n";
        return exit_usage;
    }
    if (opt.range_start != 1 && opt.range_start != 2) {
        std::cerr << "nupart: --range-start must be 1 or 2\n";
        return exit_usage;
    }
    const auto table = ensure_table(resolve_cache_path(opt.cache), opt.n_max);

    nupart::SuiteConfig cfg;
    cfg.enum_cutoff = opt.enum_cutoff;
    cfg.conjugation_cutoff = std::min(30u, opt.enum_cutoff);
    cfg.gcd_range_start = opt.range_start;

    // Claims grouped for --only; each thunk returns the claims it owns.
    using ClaimList = std::vector<nupart::ClaimResult>;
    struct GroupRunner {
        std::string group;
        std::function<ClaimList()> run;
    };
    const std::vector<GroupRunner> groups = {
        {"oracle",
         [&] {
             ClaimList list;
             list.push_back(nupart::claim_oracle_equivalence(table, cfg.enum_cutoff));
             list.push_back(nupart::claim_conjugation_closure(cfg.conjugation_cutoff));
             return list;
         }},
        {"decomposition", [&] { return nupart::claims_decomposition(table, cfg.enum_cutoff); }},
        {"guy",
         [&] {
             return ClaimList{nupart::claim_guy(cfg.guy_cutoff)};
         }},
        {"congruences",
         [&] {
             ClaimList list;
             list.push_back({"congruences", nupart::check_ramanujan(table)});
             list.push_back({"congruences", nupart::check_shifted_congruences(table)});
             list.push_back(nupart::claim_scan(table, nupart::SeqChoice::nu));
             list.push_back(nupart::claim_scan(table, nupart::SeqChoice::gamma));
             return list;
         }},
        {"gcd",
         [&] {
             ClaimList list;
             list.push_back({"gcd", nupart::check_gcd_identities(table)});
             list.push_back(nupart::claim_gcd_statistics(table, cfg));
             return list;
         }},
        {"monotonicity", [&] { return nupart::claims_monotonicity(table); }},
        {"asymptotics",
         [&] {
             return ClaimList{nupart::claim_asymptotics(table, cfg)};
         }},
    };

    // claim id -> owning group, for --only with a single claim
    static const std::map<std::string, std::string> claim_groups = {
        {"oracle-equivalence", "oracle"},
        {"conjugation-closure", "oracle"},
        {"decomposition", "decomposition"},
        {"gamma-growth-identity", "decomposition"},
        {"guy-equinumerosity", "guy"},
        {"ramanujan-congruences", "congruences"},
        {"shifted-congruences", "congruences"},
        {"congruence-scan-nu", "congruences"},
        {"congruence-scan-gamma", "congruences"},
        {"gcd-identities", "gcd"},
        {"gcd-statistics", "gcd"},
        {"gamma-step-two", "monotonicity"},
        {"gamma-tail-monotone", "monotonicity"},
        {"oscillation-witnesses", "monotonicity"},
        {"delta3-agreement", "monotonicity"},
        {"asymptotic-convergence", "asymptotics"},
    };
    std::string group_filter = opt.only;
    std::string claim_filter;
    if (!opt.only.empty()) {
        if (auto it = claim_groups.find(opt.only); it != claim_groups.end()) {
            group_filter = it->second;
            claim_filter = opt.only;
        }
    }

    ClaimList selected;
    for (const auto& g : groups) {
        if (!group_filter.empty() && group_filter != g.group) {
            continue;
        }
        for (auto& claim : g.run()) {
            if (claim_filter.empty() || claim.report.claim_id == claim_filter) {
                selected.push_back(std::move(claim));
            }
        }
    }
    if (selected.empty()) {
        std::cerr << "nupart: --only '" << opt.only << "' matches no claim or group\n";
        return exit_usage;
    }

    std::filesystem::create_directories(opt.out_dir);
    bool all_ok = true;
    for (const auto& claim : selected) {
        const auto& rep = claim.report;
        const std::filesystem::path base =
            std::filesystem::path(opt.out_dir) / rep.claim_id;
        {
            std::ofstream json_out(base.string() + ".json", std::ios::binary | std::ios::trunc);
            json_out << nupart::to_json(rep).dump(2) << "\n";
        }
        {
            std::ofstream csv_out(base.string() + ".csv", std::ios::binary | std::ios::trunc);
            csv_out << nupart::to_csv(rep);
        }
        const char* tag = rep.status == nupart::ClaimStatus::pass     ? "PASS"
                          : rep.status == nupart::ClaimStatus::listed ? "LIST"
                                                                      : "FAIL";
        std::cout << "[" << tag << "] " << rep.claim_id;
        if (rep.status == nupart::ClaimStatus::fail && !rep.details.empty()) {
            std::cout << " — first violation at n=" << rep.details.front().n << ": "
                      << rep.details.front().observed;
        }
        std::cout << "\n";
        all_ok = all_ok && rep.ok();
    }
    return all_ok ? exit_ok : exit_verification_failure;
}

struct ScanOptionsCli {
    std::size_t n_max = 3000;
    std::string seq = "nu";
    unsigned a_max = 11;
    std::vector<unsigned> moduli = {5, 7, 11};
    double density = 1.0;
    std::uint64_t min_witnesses = 1;
    std::string format = "csv";
    std::string cache;
};

int cmd_scan(const ScanOptionsCli& opt) {
    const auto table = ensure_table(resolve_cache_path(opt.cache), opt.n_max);
    nupart::ScanOptions so;
    so.min_density = opt.density;
    so.min_witnesses = opt.min_witnesses;
    const auto choice = opt.seq == "nu" ? nupart::SeqChoice::nu : nupart::SeqChoice::gamma;
    const auto found = nupart::congruence_scan(table, choice, opt.a_max, opt.moduli, so);
    if (opt.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& c : found) {
            rows.push_back({{"a", c.a}, {"b", c.b}, {"c", c.c}, {"witnesses", c.witnesses}});
        }
        std::cout << rows.dump(2) << "\n";
    } else if (opt.format == "csv") {
        for (const auto& c : found) {
            std::cout << c.a << "," << c.b << "," << c.c << "," << c.witnesses << "\n";
        }
    } else {
        if (found.empty()) {
            std::cout << "no congruence candidates for " << opt.seq << " with a <= " << opt.a_max
                      << " up to n=" << opt.n_max << "\n";
        }
        for (const auto& c : found) {
            std::cout << opt.seq << "(" << c.a << "n+" << c.b << ") = 0 (mod " << c.c << "), "
                      << c.witnesses << " witnesses\n";
        }
    }
    return exit_ok;
}

struct StatsOptions {
    std::size_t n_max = 3000;
    std::size_t range_start = 2;
    std::string mode = "exact";
    std::string format = "pretty";
    std::string cache;
};

int cmd_stats(const StatsOptions& opt) {
    if (opt.range_start != 1 && opt.range_start != 2) {
        std::cerr << "nupart: --range-start must be 1 or 2\n";
        return exit_usage;
    }
    const auto table = ensure_table(resolve_cache_path(opt.cache), opt.n_max);
    const auto convention = opt.mode == "float53" ? nupart::GcdConvention::float53
                                                  : nupart::GcdConvention::exact;
    const auto s = nupart::gcd_statistics(table, opt.range_start, opt.n_max, convention);
    char pair_pct[32], triple_pct[32];
    std::snprintf(pair_pct, sizeof pair_pct, "%.1f", s.percent_pair);
    std::snprintf(triple_pct, sizeof triple_pct, "%.1f", s.percent_triple);
    if (opt.format == "json") {
        nlohmann::json j;
        j["convention"] = nupart::to_string(s.convention);
        j["n_lo"] = s.n_lo;
        j["n_hi"] = s.n_hi;
        j["pair_count"] = s.pair_count;
        j["triple_count"] = s.triple_count;
        j["total"] = s.total;
        j["percent_pair"] = pair_pct;
        j["percent_triple"] = triple_pct;
        std::cout << j.dump(2) << "\n";
    } else if (opt.format == "csv") {
        std::cout << nupart::to_string(s.convention) << "," << s.n_lo << "," << s.n_hi << ","
                  << s.pair_count << "," << s.triple_count << "," << s.total << "," << pair_pct
                  << "," << triple_pct << "\n";
    } else {
        std::cout << "gcd statistics over " << s.n_lo << " <= n <= " << s.n_hi << " ("
                  << nupart::to_string(s.convention) << " convention)\n"
                  << "  gcd(p, nu) > 1:        " << s.pair_count << "/" << s.total << " = "
                  << pair_pct << "%\n"
                  << "  gcd(p, nu, gamma) > 1: " << s.triple_count << "/" << s.total << " = "
                  << triple_pct << "%\n";
    }
    return exit_ok;
}

struct CacheOptions {
    std::size_t n_max = 3000;
    std::string cache;
};

int cmd_cache(const CacheOptions& opt) {
    const std::string path = resolve_cache_path(opt.cache);
    const auto table = ensure_table(path, opt.n_max);
    std::cout << path << " covers n_max=" << table.n_max() << "\n";
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact partition-triple tables and verification suites"};
    app.require_subcommand(1);

    TableOptions topt;
    auto* table_cmd = app.add_subcommand("table", "print rows n, gamma(n), nu(n), p(n)");
    auto* tmax = table_cmd->add_option("--max", topt.n_max, "table size / last row");
    auto* tfrom = table_cmd->add_option("--from", topt.from, "first row");
    auto* tto = table_cmd->add_option("--to", topt.to, "last row");
    table_cmd->add_flag("--deltas", topt.deltas, "print n, gamma(n), gamma(n)-gamma(n-1)");
    table_cmd->add_option("--format", topt.format, "csv|json|pretty")
        ->check(CLI::IsMember({"csv", "json", "pretty"}));
    table_cmd->add_option("--cache", topt.cache, "cache file path");

    VerifyOptions vopt;
    auto* verify_cmd = app.add_subcommand("verify", "run the verification suites");
    verify_cmd->add_option("--max", vopt.n_max, "table size");
    verify_cmd->add_option("--enum-cutoff", vopt.enum_cutoff, "exhaustive enumeration bound");
    verify_cmd->add_option("--range-start", vopt.range_start, "gcd statistics start index (1|2)");
    verify_cmd->add_option("--only", vopt.only, "run one claim or claim group");
    verify_cmd->add_option("--out", vopt.out_dir, "report output directory");
    verify_cmd->add_option("--cache", vopt.cache, "cache file path");

    ScanOptionsCli sopt;
    auto* scan_cmd = app.add_subcommand("scan", "scan for residue-class congruences");
    scan_cmd->add_option("--max", sopt.n_max, "table size");
    scan_cmd->add_option("--seq", sopt.seq, "nu|gamma")
        ->check(CLI::IsMember({"nu", "gamma"}));
    scan_cmd->add_option("--a-max", sopt.a_max, "largest step a");
    scan_cmd->add_option("--moduli", sopt.moduli, "moduli to test")->delimiter(',');
    scan_cmd->add_option("--density", sopt.density,
                         "minimum divisible fraction (1.0 = true congruence)");
    scan_cmd->add_option("--min-witnesses", sopt.min_witnesses, "minimum divisible members");
    scan_cmd->add_option("--format", sopt.format, "csv|json|pretty")
        ->check(CLI::IsMember({"csv", "json", "pretty"}));
    scan_cmd->add_option("--cache", sopt.cache, "cache file path");

    StatsOptions stopt;
    auto* stats_cmd = app.add_subcommand("stats", "shared-divisor percentages");
    stats_cmd->add_option("--max", stopt.n_max, "table size");
    stats_cmd->add_option("--range-start", stopt.range_start, "start index (1|2)");
    stats_cmd->add_option("--gcd-mode", stopt.mode, "exact|float53")
        ->check(CLI::IsMember({"exact", "float53"}));
    stats_cmd->add_option("--format", stopt.format, "csv|json|pretty")
        ->check(CLI::IsMember({"csv", "json", "pretty"}));
    stats_cmd->add_option("--cache", stopt.cache, "cache file path");

    CacheOptions copt;
    auto* cache_cmd = app.add_subcommand("cache", "build or extend the sequence cache");
    cache_cmd->add_option("--max", copt.n_max, "table size");
    cache_cmd->add_option("--cache", copt.cache, "cache file path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    topt.have_max = tmax->count() > 0;
    topt.have_from = tfrom->count() > 0;
    topt.have_to = tto->count() > 0;

    try {
        if (table_cmd->parsed()) return cmd_table(topt);
        if (verify_cmd->parsed()) return cmd_verify(vopt);
        if (scan_cmd->parsed()) return cmd_scan(sopt);
        if (stats_cmd->parsed()) return cmd_stats(stopt);
        if (cache_cmd->parsed()) return cmd_cache(copt);
    } catch (const nupart::contradiction_error& e) {
        std::cerr << "nupart: CONTRADICTION: " << e.what() << "\n";
        return exit_contradiction;
    } catch (const std::exception& e) {
        std::cerr << "nupart: error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
