#include "ramsey/cache.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

namespace ramsey {

namespace {

std::string today()
{
    const auto days = std::chrono::floor<std::chrono::days>(std::chrono::system_clock::now());
    const std::chrono::year_month_day ymd{days};
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
    return buf;
}

std::optional<CacheRecord> parse_line(const std::string& line)
{
    std::vector<std::string> words;
    std::istringstream in(line);
    for (std::string w; in >> w;)
        words.push_back(w);
    if (words.size() < 6)
        return std::nullopt;
    CacheRecord r;
    const std::size_t n = words.size();
    std::string expr;
    for (std::size_t i = 0; i + 4 < n; ++i)
        expr += (expr.empty() ? "" : " ") + words[i];
    try {
        r.pattern = parse_pattern(expr).to_string();
        std::size_t used = 0;
        r.order = std::stoi(words[n - 4], &used);
        if (used != words[n - 4].size())
            return std::nullopt;
        r.nodes = std::stoull(words[n - 2], &used);
        if (used != words[n - 2].size())
            return std::nullopt;
    } catch (const std::exception&) {
        return std::nullopt;
    }
    r.classification = words[n - 3];
    r.date = words[n - 1];
    if (r.classification != "AllColoringsContain")
        return std::nullopt;
    return r;
}

}  // namespace

ArrowCache::ArrowCache(std::filesystem::path path, std::ostream* warnings)
    : path_(std::move(path))
{
    std::ifstream in(path_);
    std::string line;
    for (int number = 1; std::getline(in, line); ++number) {
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        if (auto r = parse_line(line)) {
            records_[{r->pattern, r->order}] = *r;
        } else if (warnings != nullptr) {
            *warnings << "warning: skipping corrupt cache line " << number << " in " << path_.string() << '\n';
        }
    }
}

std::optional<CacheRecord> ArrowCache::lookup(const PatternSpec& p, int order) const
{
    if (auto it = records_.find({p.to_string(), order}); it != records_.end())
        return it->second;
    return std::nullopt;
}

void ArrowCache::record(const PatternSpec& p, int order, const SearchOutcome& outcome)
{
    const auto* proof = std::get_if<AllColoringsContain>(&outcome);
    if (proof == nullptr || lookup(p, order))
        return;
    CacheRecord r{p.to_string(), order, "AllColoringsContain", proof->stats.nodes, today()};
    std::ofstream out(path_, std::ios::app);
    out << r.pattern << ' ' << r.order << ' ' << r.classification << ' ' << r.nodes << ' ' << r.date << '\n';
    records_[{r.pattern, r.order}] = std::move(r);
}

ArrowDecider ArrowCache::decider(const SearchConfig& cfg)
{
    return [this, cfg](const PatternSpec& p, int order) -> SearchOutcome {
        if (auto hit = lookup(p, order)) {
            SearchStats stats;
            stats.nodes = hit->nodes;
            stats.workers = cfg.worker_count;
            return AllColoringsContain{std::move(stats)};
        }
        auto outcome = decide_arrow(p, order, cfg);
        record(p, order, outcome);
        return outcome;
    };
}

}  // namespace ramsey
