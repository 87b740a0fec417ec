#include "hurwitz/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

std::vector<long> parse_long_list(const std::string& text, const char* what) {
    std::vector<long> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ',')) {
        std::size_t pos = 0;
        long value = 0;
        try {
            value = std::stol(cur, &pos);
        } catch (const std::exception&) {
            throw precondition_error(std::string(what) + ": bad integer '" + cur + "'");
        }
        while (pos < cur.size() && std::isspace(static_cast<unsigned char>(cur[pos]))) ++pos;
        if (pos != cur.size())
            throw precondition_error(std::string(what) + ": bad integer '" + cur + "'");
        out.push_back(value);
    }
    return out;
}

} // namespace

Partition parse_partition(const std::string& text) {
    std::vector<long> parts = parse_long_list(text, "partition");
    for (long p : parts)
        if (p < 1) throw precondition_error("partition: parts must be positive");
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

std::vector<int> parse_index_list(const std::string& text) {
    std::vector<int> out;
    for (long v : parse_long_list(text, "index list")) {
        if (v < 1) throw precondition_error("index list: indices are 1-based");
        if (!out.empty() && v <= out.back())
            throw precondition_error("index list: indices must increase");
        out.push_back(static_cast<int>(v));
    }
    return out;
}

Json partition_json(const Partition& p) {
    Json arr = Json::array();
    for (long part : p.parts()) arr.push_back(part);
    return arr;
}

Json class_element_json(const std::map<Partition, Rat>& element) {
    Json arr = Json::array();
    for (const auto& [part, coeff] : element) {
        Json rec;
        rec["partition"] = partition_json(part);
        rec["coefficient"] = coeff.str();
        arr.push_back(std::move(rec));
    }
    return arr;
}

Json qrule_json(const QRule& rule) {
    Json rec;
    rec["multiply"] = partition_json(rule.multiply);
    rec["derive"] = partition_json(rule.derive);
    rec["coeff"] = rule.coeff.str();
    return rec;
}

Json poly_json(const Poly& p) {
    Json obj = Json::object();
    for (const auto& [mono, c] : p.terms()) obj[monomial_str(mono)] = c.str();
    return obj;
}

Json ppoly_json(const PPoly<Rat>& f) {
    Json obj = Json::object();
    for (const auto& [mono, c] : f.terms()) obj[mono.str()] = c.str();
    return obj;
}

Json ppoly_json(const PPoly<Poly>& f) {
    Json obj = Json::object();
    for (const auto& [mono, c] : f.terms()) obj[mono.str()] = poly_json(c);
    return obj;
}

std::vector<Json> bracket_rows_json(long r, const BracketTable& table) {
    std::vector<Json> rows;
    for (const auto& [key, val] : table.values) {
        Json rec;
        rec["r"] = r;
        rec["g"] = key.g;
        rec["n"] = key.n;
        rec["k"] = key.k;
        rec["degrees"] = key.degrees;
        rec["value"] = val.str();
        rows.push_back(std::move(rec));
    }
    return rows;
}

std::string bracket_rows_csv(long r, const BracketTable& table) {
    std::string out = "r,g,n,k,degrees,value\n";
    for (const auto& [key, val] : table.values) {
        out += std::to_string(r) + ',' + std::to_string(key.g) + ',' + std::to_string(key.n) +
               ',' + std::to_string(key.k) + ',';
        out += '"';
        for (std::size_t i = 0; i < key.degrees.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(key.degrees[i]);
        }
        out += "\",";
        out += val.str();
        out += '\n';
    }
    return out;
}

// --- character table cache ---------------------------------------------------

namespace {

constexpr int kTableFormat = 1;

// FNV-1a over a canonical rendering of the table body; detects files whose
// JSON still parses but whose numbers were damaged.
std::string table_checksum(long d, const std::vector<Partition>& parts,
                           const std::vector<std::vector<long>>& chi) {
    std::uint64_t h = 1469598103934665603ULL;
    const auto feed = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ULL;
        }
        h ^= 0x3b;
        h *= 1099511628211ULL;
    };
    feed(std::to_string(d));
    for (const auto& p : parts) feed(p.str());
    for (const auto& row : chi)
        for (long v : row) feed(std::to_string(v));
    std::ostringstream hex;
    hex << std::hex << h;
    return hex.str();
}

std::filesystem::path table_path(const std::string& cache_dir, long d) {
    return std::filesystem::path(cache_dir) /
           ("characters-v" + std::to_string(kTableFormat) + "-d" + std::to_string(d) + ".json");
}

} // namespace

Json character_table_json(const CharacterTable& table) {
    Json j;
    j["format"] = kTableFormat;
    j["d"] = table.d;
    Json parts = Json::array();
    for (const auto& p : table.parts) parts.push_back(partition_json(p));
    j["partitions"] = std::move(parts);
    j["characters"] = table.chi;
    j["checksum"] = table_checksum(table.d, table.parts, table.chi);
    return j;
}

CharacterTable character_table_from_json(const Json& j) {
    if (!j.is_object() || j.value("format", -1) != kTableFormat)
        throw consistency_error("character table: unsupported format");
    CharacterTable table;
    table.d = j.at("d").get<long>();
    if (table.d < 0) throw consistency_error("character table: negative degree");
    for (const auto& arr : j.at("partitions")) {
        std::vector<long> parts;
        for (const auto& v : arr) parts.push_back(v.get<long>());
        table.parts.emplace_back(std::move(parts));
    }
    table.chi = j.at("characters").get<std::vector<std::vector<long>>>();

    const std::vector<Partition> expected = partitions_of(table.d);
    if (table.parts != expected)
        throw consistency_error("character table: index partitions do not match degree");
    if (table.chi.size() != expected.size())
        throw consistency_error("character table: row count mismatch");
    for (const auto& row : table.chi)
        if (row.size() != expected.size())
            throw consistency_error("character table: column count mismatch");
    if (j.value("checksum", std::string()) != table_checksum(table.d, table.parts, table.chi))
        throw consistency_error("character table: checksum mismatch");
    return table;
}

std::string default_cache_dir() {
    if (const char* env = std::getenv("HURWITZ_CACHE_DIR")) return env;
    if (const char* home = std::getenv("HOME"))
        return (std::filesystem::path(home) / ".cache" / "hurwitz").string();
    return ".hurwitz-cache";
}

CharacterTable load_or_build_table(long d, const std::string& cache_dir, std::string* log) {
    if (cache_dir.empty()) {
        if (log) *log = "cache disabled; computed table for degree " + std::to_string(d);
        return CharacterTable::build(d);
    }
    const std::filesystem::path path = table_path(cache_dir, d);
    if (std::filesystem::exists(path)) {
        try {
            std::ifstream in(path);
            Json j;
            in >> j;
            if (!in) throw consistency_error("character table: unreadable file");
            CharacterTable table = character_table_from_json(j);
            if (table.d != d) throw consistency_error("character table: wrong degree");
            if (log) *log = "cache hit: " + path.string();
            return table;
        } catch (const std::exception&) {
            // fall through to a rebuild; never trust a file that failed validation
        }
    }
    CharacterTable table = CharacterTable::build(d);
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    const std::filesystem::path tmp =
        path.string() + ".tmp." + std::to_string(static_cast<long>(::getpid()));
    {
        std::ofstream out(tmp);
        out << character_table_json(table).dump() << '\n';
        if (!out) {
            if (log) *log = "cache write failed; computed table for degree " + std::to_string(d);
            std::filesystem::remove(tmp, ec);
            return table;
        }
    }
    std::filesystem::rename(tmp, path, ec);
    if (log)
        *log = (ec ? "cache write failed; computed" : "cache miss; stored") + std::string(": ") +
               path.string();
    return table;
}

} // namespace hurwitz
