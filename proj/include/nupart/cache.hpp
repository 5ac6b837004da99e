#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "nupart/seq.hpp"

namespace nupart {

// Sequence cache file format:
//   line 1: "nupart-cache v1 n_max=<N>"
//   then one line per n: "<n>,<p>,<nu>,<gamma>" in decimal, n = 0..N.
inline constexpr const char* cache_version_prefix = "nupart-cache v1 n_max=";

inline std::string render_cache(const SeqTable& table) {
    std::ostringstream out;
    out << cache_version_prefix << table.n_max() << '\n';
    for (std::size_t n = 0; n <= table.n_max(); ++n) {
        out << n << ',' << table.p[n].str() << ',' << table.nu[n].str() << ','
            << table.gamma[n].str() << '\n';
    }
    return out.str();
}

// Atomic write: render to <path>.tmp in the same directory, then rename.
inline void write_cache(const std::filesystem::path& path, const SeqTable& table) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cache: cannot open " + tmp.string() + " for writing");
        }
        out << render_cache(table);
        if (!out.flush()) {
            throw std::runtime_error("cache: write failed for " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw std::runtime_error("cache: cannot rename " + tmp.string() + " to " +
                                 path.string() + ": " + ec.message());
    }
}

// Parses and fully validates a cache file. A bad version line asks for a
// rebuild; a broken invariant names the witness row.
inline SeqTable load_cache(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cache: cannot open " + path.string());
    }
    std::string header;
    std::getline(in, header);
    const std::string prefix = cache_version_prefix;
    if (header.rfind(prefix, 0) != 0) {
        throw std::runtime_error("cache: unrecognized header in " + path.string() +
                                 " (expected \"" + prefix +
                                 "<N>\"); delete the file and rebuild");
    }
    std::size_t n_max = 0;
    try {
        n_max = std::stoull(header.substr(prefix.size()));
    } catch (const std::exception&) {
        throw std::runtime_error("cache: malformed n_max in header of " + path.string());
    }

    SeqTable table;
    table.p.reserve(n_max + 1);
    table.nu.reserve(n_max + 1);
    table.gamma.reserve(n_max + 1);
    std::string line;
    std::size_t expected = 0;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::istringstream row(line);
        std::string field;
        std::string cells[4];
        int i = 0;
        while (i < 4 && std::getline(row, field, ',')) {
            cells[i++] = field;
        }
        if (i != 4) {
            throw std::runtime_error("cache: malformed row " + std::to_string(expected) +
                                     " in " + path.string());
        }
        try {
            if (std::stoull(cells[0]) != expected) {
                throw std::runtime_error("row index out of order");
            }
            table.p.emplace_back(cells[1]);
            table.nu.emplace_back(cells[2]);
            table.gamma.emplace_back(cells[3]);
        } catch (const std::exception& e) {
            throw std::runtime_error("cache: bad row n=" + std::to_string(expected) + " in " +
                                     path.string() + ": " + e.what());
        }
        ++expected;
    }
    if (expected != n_max + 1) {
        throw std::runtime_error("cache: " + path.string() + " declares n_max=" +
                                 std::to_string(n_max) + " but has " +
                                 std::to_string(expected) + " rows");
    }
    table.validate();
    return table;
}

}  // namespace nupart
