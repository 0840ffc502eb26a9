#include "ramsey/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "ramsey/embed.hpp"

namespace ramsey {

std::string_view classification_name(const SearchOutcome& outcome) noexcept
{
    switch (outcome.index()) {
    case 0:
        return "AllColoringsContain";
    case 1:
        return "Counterexample";
    default:
        return "BudgetExhausted";
    }
}

bool degree_rules_apply(const PatternSpec& p, int order)
{
    const auto b = bistar_shape(p);
    return b && order >= 2 * b->first + b->second + 2;
}

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::size_t kNoPrefix = std::numeric_limits<std::size_t>::max();
constexpr std::uint64_t kFlushEvery = 4096;

struct Plan {
    Plan(const PatternSpec& p, int n, const SearchConfig& cfg)
        : order(n)
        , matcher(p)
        , containment(cfg.prune_containment)
        , color_swap(cfg.symmetry_color_swap)
        , first_vertex(cfg.symmetry_first_vertex)
        , blue_quota(n / 2)
    {
        for (int t = 1; t < n; ++t)
            for (int i = 0; i < t; ++i)
                edges.push_back({i, t});
        if (degree_rules_apply(p, n)) {
            const auto [m, big] = *bistar_shape(p);
            lemma = cfg.prune_maxdeg_lemma;
            window = cfg.prune_degree;
            lemma_degree = m + big + 1;
            window_low = n - m - big - 1;
        }
    }

    int order;
    std::vector<EdgeIndex> edges;
    Matcher matcher;
    bool containment;
    bool color_swap;
    bool first_vertex;
    // ceil((N-1)/2): vertex 0 keeps at least this many blue edges when both
    // symmetry rules are active.
    int blue_quota;
    bool lemma = false;
    bool window = false;
    int lemma_degree = 0;
    int window_low = 0;
};

struct State {
    std::array<Row, kMaxVertices> blue{};
    std::array<Row, kMaxVertices> red{};

    std::array<Row, kMaxVertices>& rows(Color c) { return c == Color::Blue ? blue : red; }

    TwoColoring to_coloring(int n) const
    {
        TwoColoring c(n);
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) {
                if (blue[static_cast<std::size_t>(j)] & (Row{1} << i))
                    c.set(i, j, Color::Blue);
                else if (red[static_cast<std::size_t>(j)] & (Row{1} << i))
                    c.set(i, j, Color::Red);
            }
        return c;
    }
};

struct Shared {
    const SearchConfig& cfg;
    Clock::time_point start;
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> exhausted{false};
    std::atomic<std::size_t> best_prefix{kNoPrefix};
    std::atomic<std::size_t> next_prefix{0};
    std::atomic<std::size_t> prefixes_done{0};
    std::size_t prefixes_total = 0;

    std::mutex result_mutex;
    std::optional<State> result;

    std::mutex progress_mutex;
    Clock::time_point last_report;

    explicit Shared(const SearchConfig& c)
        : cfg(c)
        , start(Clock::now())
        , last_report(start)
    {
    }

    void offer(std::size_t prefix, const State& s)
    {
        std::lock_guard lock(result_mutex);
        if (prefix < best_prefix.load()) {
            best_prefix.store(prefix);
            result = s;
        }
    }

    void maybe_report(bool force = false)
    {
        if (!cfg.progress)
            return;
        std::unique_lock lock(progress_mutex, std::try_to_lock);
        if (!lock.owns_lock())
            return;
        const auto now = Clock::now();
        if (!force && now - last_report < cfg.progress_interval)
            return;
        last_report = now;
        SearchProgress p;
        p.nodes = nodes.load();
        p.seconds = std::chrono::duration<double>(now - start).count();
        p.nodes_per_second = p.seconds > 0 ? static_cast<double>(p.nodes) / p.seconds : 0.0;
        p.prefixes_done = prefixes_done.load();
        p.prefixes_total = prefixes_total;
        cfg.progress(p);
    }
};

class Worker {
public:
    Worker(const Plan& plan, Shared& shared)
        : plan_(plan)
        , shared_(shared)
        , histogram_(plan.edges.size() + 1, 0)
        , flush_every_(std::min(kFlushEvery, shared.cfg.node_budget))
    {
    }

    /// Explores [depth, limit); states reaching `limit` are appended to
    /// `frontier` when given. Returns true when a counterexample was stored.
    bool run(State& s, std::size_t depth, std::size_t limit, std::size_t prefix, std::vector<State>* frontier)
    {
        prefix_ = prefix;
        limit_ = limit;
        stopped_ = false;
        frontier_ = frontier;
        return dfs(s, depth);
    }

    void flush()
    {
        shared_.nodes.fetch_add(pending_);
        pending_ = 0;
    }

    bool stopped() const noexcept { return stopped_; }
    const std::vector<std::uint64_t>& histogram() const noexcept { return histogram_; }

private:
    bool allowed(const State& s, const EdgeIndex& e, Color c) const
    {
        if (e.i != 0)
            return true;
        const Row zero_blue = s.blue[0];
        if (c == Color::Blue)
            return !plan_.first_vertex || e.j == 1 || (zero_blue & (Row{1} << (e.j - 1)));
        if (plan_.color_swap && plan_.first_vertex)
            return std::popcount(zero_blue) >= plan_.blue_quota;
        if (plan_.color_swap)
            return e.j != 1;
        return true;
    }

    bool prunes(State& s, const EdgeIndex& e, Color c) const
    {
        const auto host = std::span<const Row>(s.rows(c).data(), static_cast<std::size_t>(e.j) + 1);
        if (plan_.containment && plan_.matcher.contains_after_adding(host, e.i, e.j))
            return true;
        if (plan_.lemma || plan_.window) {
            for (int x : {e.i, e.j}) {
                const int db = std::popcount(s.blue[static_cast<std::size_t>(x)]);
                const int dr = std::popcount(s.red[static_cast<std::size_t>(x)]);
                if (plan_.lemma && (c == Color::Blue ? db : dr) >= plan_.lemma_degree)
                    return true;
                if (plan_.window) {
                    const int open = plan_.order - 1 - db - dr;
                    if ((c == Color::Blue ? dr : db) + open < plan_.window_low)
                        return true;
                }
            }
        }
        return false;
    }

    bool complete_avoids(const State& s) const
    {
        if (plan_.containment)
            return true;
        const auto n = static_cast<std::size_t>(plan_.order);
        return !plan_.matcher.contains(std::span<const Row>(s.blue.data(), n)) &&
               !plan_.matcher.contains(std::span<const Row>(s.red.data(), n));
    }

    bool check_stop()
    {
        flush();
        shared_.maybe_report();
        if (shared_.best_prefix.load() < prefix_ || shared_.exhausted.load()) {
            stopped_ = true;
            return true;
        }
        const auto& cfg = shared_.cfg;
        if (shared_.nodes.load() >= cfg.node_budget || Clock::now() - shared_.start >= cfg.wall_budget) {
            shared_.exhausted.store(true);
            stopped_ = true;
            return true;
        }
        return false;
    }

    bool dfs(State& s, std::size_t depth)
    {
        if (depth == plan_.edges.size()) {
            if (!complete_avoids(s))
                return false;
            shared_.offer(prefix_, s);
            return true;
        }
        if (depth == limit_) {
            frontier_->push_back(s);
            return false;
        }
        const EdgeIndex e = plan_.edges[depth];
        const Row bit_i = Row{1} << e.i;
        const Row bit_j = Row{1} << e.j;
        for (Color c : {Color::Blue, Color::Red}) {
            if (!allowed(s, e, c))
                continue;
            auto& rows = s.rows(c);
            rows[static_cast<std::size_t>(e.i)] |= bit_j;
            rows[static_cast<std::size_t>(e.j)] |= bit_i;
            ++histogram_[depth];
            if (++pending_ >= flush_every_ && check_stop())
                return false;
            if (!prunes(s, e, c) && dfs(s, depth + 1))
                return true;
            rows[static_cast<std::size_t>(e.i)] &= ~bit_j;
            rows[static_cast<std::size_t>(e.j)] &= ~bit_i;
            if (stopped_)
                return false;
        }
        return false;
    }

    const Plan& plan_;
    Shared& shared_;
    std::vector<std::uint64_t> histogram_;
    std::uint64_t pending_ = 0;
    std::uint64_t flush_every_;
    bool stopped_ = false;
    std::size_t prefix_ = 0;
    std::size_t limit_ = kNoPrefix;
    std::vector<State>* frontier_ = nullptr;
};

int default_split_vertices(int order, int workers)
{
    // 5 vertices give 10 prefix edges, up to 1024 subtrees.
    const int wanted = workers > 8 ? 6 : 5;
    return std::min(order, wanted);
}

}  // namespace

SearchOutcome decide_arrow(const PatternSpec& p, int order, const SearchConfig& cfg)
{
    if (order < 1 || order > kMaxVertices)
        throw std::invalid_argument("decide_arrow order must lie in [1, " + std::to_string(kMaxVertices) + "]");
    if (cfg.worker_count < 1)
        throw std::invalid_argument("worker_count must be >= 1");
    if (cfg.node_budget == 0 || cfg.wall_budget.count() <= 0)
        throw std::invalid_argument("search budgets must be positive");

    const Plan plan(p, order, cfg);
    Shared shared(cfg);

    const int split = std::clamp(cfg.split_vertices > 0 ? cfg.split_vertices
                                                        : default_split_vertices(order, cfg.worker_count),
                                 1, order);
    const std::size_t limit = edge_count(split);

    std::vector<State> frontier;
    std::vector<std::uint64_t> histogram(plan.edges.size() + 1, 0);
    {
        Worker root(plan, shared);
        State s;
        root.run(s, 0, limit, 0, &frontier);
        root.flush();
        for (std::size_t d = 0; d < histogram.size(); ++d)
            histogram[d] += root.histogram()[d];
    }
    shared.prefixes_total = frontier.size();

    if (!shared.result && !shared.exhausted.load() && !frontier.empty()) {
        const int workers = std::min<int>(cfg.worker_count, static_cast<int>(frontier.size()));
        std::vector<std::vector<std::uint64_t>> histograms(static_cast<std::size_t>(workers));
        const auto body = [&](std::size_t w) {
            Worker worker(plan, shared);
            for (;;) {
                const std::size_t idx = shared.next_prefix.fetch_add(1);
                if (idx >= frontier.size() || idx > shared.best_prefix.load() || shared.exhausted.load())
                    break;
                State s = frontier[idx];
                worker.run(s, limit, kNoPrefix, idx, nullptr);
                if (worker.stopped() && shared.exhausted.load())
                    break;
                shared.prefixes_done.fetch_add(1);
            }
            worker.flush();
            histograms[w] = worker.histogram();
        };
        if (workers == 1) {
            body(0);
        } else {
            std::vector<std::thread> threads;
            for (int w = 0; w < workers; ++w)
                threads.emplace_back(body, static_cast<std::size_t>(w));
            for (auto& t : threads)
                t.join();
        }
        for (const auto& h : histograms)
            for (std::size_t d = 0; d < h.size(); ++d)
                histogram[d] += h[d];
    }

    shared.maybe_report(true);

    SearchStats stats;
    stats.nodes = shared.nodes.load();
    stats.depth_histogram = std::move(histogram);
    stats.seconds = std::chrono::duration<double>(Clock::now() - shared.start).count();
    stats.workers = cfg.worker_count;

    if (shared.result) {
        TwoColoring coloring = shared.result->to_coloring(order);
        if (!coloring.complete() || contains_mono_pattern(coloring, Color::Blue, p) ||
            contains_mono_pattern(coloring, Color::Red, p))
            throw std::logic_error("search produced an invalid counterexample for '" + p.to_string() + "'");
        return Counterexample{std::move(coloring), std::move(stats)};
    }
    if (shared.exhausted.load())
        return BudgetExhausted{std::move(stats)};
    return AllColoringsContain{std::move(stats)};
}

PruneDecision prune_check(const TwoColoring& partial, const PatternSpec& p, const SearchConfig& cfg)
{
    if (cfg.prune_containment && partial_contains_mono(partial, p))
        return PruneDecision::Prune;
    const int n = partial.n_vertices();
    if (degree_rules_apply(p, n) && (cfg.prune_degree || cfg.prune_maxdeg_lemma)) {
        const auto [m, big] = *bistar_shape(p);
        for (int v = 0; v < n; ++v) {
            const int db = color_degree(partial, v, Color::Blue);
            const int dr = color_degree(partial, v, Color::Red);
            const int open = n - 1 - db - dr;
            if (cfg.prune_maxdeg_lemma && std::max(db, dr) >= m + big + 1)
                return PruneDecision::Prune;
            if (cfg.prune_degree && std::min(db, dr) + open < n - m - big - 1)
                return PruneDecision::Prune;
        }
    }
    return PruneDecision::Continue;
}

RamseyResult compute_ramsey(const PatternSpec& p, const SearchConfig& cfg, const ArrowDecider& decide)
{
    const ArrowDecider run = decide ? decide : [&cfg](const PatternSpec& q, int n) { return decide_arrow(q, n, cfg); };
    BoundInterval interval = pattern_bounds(p);
    const BoundInterval stated = interval;

    std::optional<TwoColoring> below;
    if (interval.lo >= 2) {
        auto outcome = run(p, interval.lo - 1);
        if (std::holds_alternative<AllColoringsContain>(outcome))
            throw std::logic_error("K_" + std::to_string(interval.lo - 1) + " arrows '" + p.to_string() +
                                   "' below its proven lower bound");
        if (std::holds_alternative<BudgetExhausted>(outcome))
            return BoundedOnly{interval};
        below = std::get<Counterexample>(std::move(outcome)).coloring;
    } else {
        below = TwoColoring(1);
    }

    for (int n = interval.lo; n <= interval.hi; ++n) {
        auto outcome = run(p, n);
        if (auto* proof = std::get_if<AllColoringsContain>(&outcome))
            return RamseyValue{n, std::move(*below), std::move(proof->stats), stated};
        if (std::holds_alternative<BudgetExhausted>(outcome))
            return BoundedOnly{interval};
        below = std::get<Counterexample>(std::move(outcome)).coloring;
        interval.lo = n + 1;
        interval.lo_source = BoundSource::Exhaustive;
    }
    throw std::logic_error("no order up to the proven upper bound arrows '" + p.to_string() + "'");
}

}  // namespace ramsey
