#include "siegel5/dataio.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef SIEGEL5_DEFAULT_DATA_DIR
#define SIEGEL5_DEFAULT_DATA_DIR "data"
#endif

namespace siegel5 {

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string checksum_hex(std::uint64_t h) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[h & 0xf];
        h >>= 4;
    }
    return s;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw data_error("cannot open data file: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::vector<long>> read_int_table(const std::filesystem::path& path, int columns) {
    std::istringstream in(read_file(path));
    std::vector<std::vector<long>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::vector<long> row;
        long v;
        while (ls >> v) row.push_back(v);
        if (static_cast<int>(row.size()) != columns)
            throw data_error(path.string() + ":" + std::to_string(lineno) + ": expected " +
                             std::to_string(columns) + " columns, got " +
                             std::to_string(row.size()));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::filesystem::path resolve_data_dir(const std::string& override_dir) {
    if (!override_dir.empty()) return override_dir;
    if (const char* env = std::getenv("SIEGEL5_DATA_DIR"); env && *env) return env;
    return SIEGEL5_DEFAULT_DATA_DIR;
}

} // namespace siegel5
