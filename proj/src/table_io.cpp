#include "recip/table_io.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace recip {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json table_json(const std::string& structure, TableKind kind, const std::vector<std::uint32_t>& values) {
    ordered_json j;
    j["structure"] = structure;
    j["kind"] = kind_name(kind);
    ordered_json vals = ordered_json::object();
    for (std::size_t i = 0; i < values.size(); ++i) vals[std::to_string(i)] = values[i];
    j["values"] = std::move(vals);
    return j;
}

std::pair<std::string, std::vector<std::uint32_t>> parse_table(std::string_view text, TableKind kind) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed table JSON: ") + e.what());
    }
    try {
        if (j.at("kind").get<std::string>() != kind_name(kind))
            throw Error("expected a " + std::string(kind_name(kind)) + " document");
        const auto& vals = j.at("values");
        std::vector<std::uint32_t> values(vals.size());
        for (auto it = vals.begin(); it != vals.end(); ++it) {
            const std::size_t idx = std::stoul(it.key());
            if (idx >= values.size()) throw Error("table index out of range: " + it.key());
            values[idx] = it.value().get<std::uint32_t>();
        }
        return {j.at("structure").get<std::string>(), std::move(values)};
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed table JSON: ") + e.what());
    } catch (const std::logic_error& e) {
        throw Error(std::string("malformed table JSON: ") + e.what());
    }
}

std::optional<std::string> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::filesystem::create_directories(path.parent_path());
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write cache file " + tmp);
        out << text << '\n';
    }
    std::filesystem::rename(tmp, path);
}

// Evenly spaced sample indices, always including 0.
std::vector<Elem> sample_points(std::uint32_t size, std::uint32_t count) {
    std::vector<Elem> out;
    const std::uint32_t n = std::min(size, count);
    for (std::uint32_t i = 0; i < n; ++i) out.push_back(static_cast<Elem>(std::uint64_t{i} * size / n));
    return out;
}

} // namespace

std::string_view kind_name(TableKind kind) noexcept {
    return kind == TableKind::mtable ? "mtable" : "ntable";
}

void write_csv(std::ostream& out, const MTable& m) {
    out << "a,M\n";
    for (std::size_t i = 0; i < m.values.size(); ++i) out << i << ',' << m.values[i] << '\n';
}

void write_csv(std::ostream& out, const NTable& n) {
    out << "t,N\n";
    for (std::size_t i = 0; i < n.values.size(); ++i) out << i << ',' << n.values[i] << '\n';
}

void write_csv(std::ostream& out, const MTable& m, const NTable& n) {
    out << "t,M,N\n";
    for (std::size_t i = 0; i < n.values.size(); ++i) out << i << ',' << m.values[i] << ',' << n.values[i] << '\n';
}

std::string to_json(const MTable& m) { return table_json(m.structure, TableKind::mtable, m.values).dump(); }

std::string to_json(const NTable& n) { return table_json(n.structure, TableKind::ntable, n.values).dump(); }

std::string to_json(const CoefficientVector& cv) {
    ordered_json j;
    j["p"] = cv.p;
    ordered_json coeffs = ordered_json::object();
    for (const auto& [k, c] : cv.coeffs) coeffs[std::to_string(k)] = c;
    j["coeffs"] = std::move(coeffs);
    return j.dump();
}

MTable mtable_from_json(std::string_view text) {
    auto [structure, values] = parse_table(text, TableKind::mtable);
    return MTable{std::move(structure), std::move(values)};
}

NTable ntable_from_json(std::string_view text) {
    auto [structure, values] = parse_table(text, TableKind::ntable);
    return NTable{std::move(structure), std::move(values)};
}

TableCache::TableCache(std::filesystem::path dir, bool trust) : dir_(std::move(dir)), trust_(trust) {}

std::filesystem::path TableCache::path_for(TableKind kind, const Structure& s) const {
    return dir_ / (std::string(kind_name(kind)) + "_" + s.descriptor() + ".json");
}

std::optional<MTable> TableCache::load_mtable(const Structure& s) const {
    const auto text = read_file(path_for(TableKind::mtable, s));
    if (!text) return std::nullopt;
    MTable m;
    try {
        m = mtable_from_json(*text);
    } catch (const Error&) {
        return std::nullopt;
    }
    if (m.structure != s.descriptor() || m.values.size() != s.size()) return std::nullopt;
    if (!trust_) {
        for (Elem a : sample_points(s.size(), spot_checks)) {
            if (m.values[a] != m_value_bruteforce(a, s)) return std::nullopt;
        }
    }
    return m;
}

std::optional<NTable> TableCache::load_ntable(const Structure& s) const {
    const auto text = read_file(path_for(TableKind::ntable, s));
    if (!text) return std::nullopt;
    NTable n;
    try {
        n = ntable_from_json(*text);
    } catch (const Error&) {
        return std::nullopt;
    }
    if (n.structure != s.descriptor() || n.values.size() != s.size()) return std::nullopt;
    if (!trust_) {
        const std::uint64_t units = s.units().size();
        const bool brute_ok = units * units <= max_bruteforce_pairs;
        const MTable m = brute_ok ? MTable{} : m_table(s);
        for (Elem t : sample_points(s.size(), spot_checks)) {
            const std::uint32_t expected = brute_ok ? n_value_bruteforce(t, s) : n_value_formula(t, m, s);
            if (n.values[t] != expected) return std::nullopt;
        }
    }
    return n;
}

void TableCache::store(const MTable& m, const Structure& s) const {
    write_file(path_for(TableKind::mtable, s), to_json(m));
}

void TableCache::store(const NTable& n, const Structure& s) const {
    write_file(path_for(TableKind::ntable, s), to_json(n));
}

} // namespace recip
