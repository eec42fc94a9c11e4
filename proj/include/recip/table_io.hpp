#pragma once

// CSV/JSON encodings of M and N tables, and an optional on-disk table cache.

#include <filesystem>
#include <istream>
#include <optional>
#include <ostream>
#include <string>

#include "recip/congruence.hpp"
#include "recip/counting.hpp"
#include "recip/structure.hpp"

namespace recip {

enum class TableKind { mtable, ntable };

std::string_view kind_name(TableKind kind) noexcept;

/// Header `a,M` then one row per element, LF line endings.
void write_csv(std::ostream& out, const MTable& m);
/// Header `t,N` then one row per element.
void write_csv(std::ostream& out, const NTable& n);
/// Header `t,M,N`.
void write_csv(std::ostream& out, const MTable& m, const NTable& n);

/// {"structure": ..., "kind": "mtable", "values": {"0": v0, ...}}
std::string to_json(const MTable& m);
std::string to_json(const NTable& n);
/// {"p": p, "coeffs": {"0": c0, "2": c2, ...}}
std::string to_json(const CoefficientVector& cv);

/// Throws Error on malformed input or a kind mismatch.
MTable mtable_from_json(std::string_view text);
NTable ntable_from_json(std::string_view text);

/// One JSON file per (structure, kind): `{kind}_{descriptor}.json`.
class TableCache {
public:
    TableCache(std::filesystem::path dir, bool trust);

    std::filesystem::path path_for(TableKind kind, const Structure& s) const;

    /// Cached table if present and, unless trusted, spot checks against
    /// recomputation pass. Unreadable or stale files yield nullopt.
    std::optional<MTable> load_mtable(const Structure& s) const;
    std::optional<NTable> load_ntable(const Structure& s) const;

    void store(const MTable& m, const Structure& s) const;
    void store(const NTable& n, const Structure& s) const;

    /// Number of entries recomputed when validating an untrusted file.
    static constexpr std::uint32_t spot_checks = 8;

private:
    std::filesystem::path dir_;
    bool trust_;
};

} // namespace recip
