#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "ramsey/pattern.hpp"
#include "ramsey/search.hpp"

namespace ramsey {

/// One proven arrow fact. Only AllColoringsContain results are recorded.
struct CacheRecord {
    std::string pattern;
    int order = 0;
    std::string classification;
    std::uint64_t nodes = 0;
    std::string date;
};

/// Append-only text file of proven arrow facts, one per line:
///   <pattern-expr> <N> AllColoringsContain <nodes> <YYYY-MM-DD>
/// keyed by canonical pattern expression and N. Unreadable lines are skipped
/// with a warning.
class ArrowCache {
public:
    explicit ArrowCache(std::filesystem::path path, std::ostream* warnings = nullptr);

    std::optional<CacheRecord> lookup(const PatternSpec& p, int order) const;

    /// Appends AllColoringsContain outcomes; other outcomes are ignored.
    void record(const PatternSpec& p, int order, const SearchOutcome& outcome);

    std::size_t size() const noexcept { return records_.size(); }

    /// decide_arrow behind this cache.
    ArrowDecider decider(const SearchConfig& cfg);

private:
    std::filesystem::path path_;
    std::map<std::pair<std::string, int>, CacheRecord> records_;
};

}  // namespace ramsey
