#include "ramsey/pattern.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace ramsey {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

int tree_vertices(const std::variant<Star, Bistar>& base)
{
    return std::visit(overloaded{[](const Star& s) { return s.leaves + 1; },
                                 [](const Bistar& b) { return b.m + b.n + 2; }},
                      base);
}

std::string augmentation_name(const AugmentationClass& a)
{
    return std::visit(overloaded{
                          [](const LeafLeaf&) -> std::string { return "ll"; },
                          [](const LeafLeafSameCenter& s) -> std::string {
                              return s.at == Center::Large ? "ll-same" : "ll-same:m";
                          },
                          [](const LeafLeafDifferentCenters&) -> std::string { return "ll-diff"; },
                          [](const LeafToFarCenter& f) -> std::string {
                              return f.leaf_of == Center::Small ? "leaf-far-center" : "leaf-far-center:n";
                          },
                      },
                      a);
}

AugmentationClass parse_augmentation(std::string_view name)
{
    if (name == "ll")
        return LeafLeaf{};
    if (name == "ll-same" || name == "ll-same:n")
        return LeafLeafSameCenter{Center::Large};
    if (name == "ll-same:m")
        return LeafLeafSameCenter{Center::Small};
    if (name == "ll-diff")
        return LeafLeafDifferentCenters{};
    if (name == "leaf-far-center" || name == "leaf-far-center:m")
        return LeafToFarCenter{Center::Small};
    if (name == "leaf-far-center:n")
        return LeafToFarCenter{Center::Large};
    throw PatternParseError("unknown augmentation class '" + std::string(name) +
                            "'; expected: " + std::string(kPatternGrammar));
}

int parse_count(std::string_view token)
{
    int value = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        throw PatternParseError("expected a non-negative integer, got '" + std::string(token) +
                                "'; grammar: " + std::string(kPatternGrammar));
    return value;
}

}  // namespace

PatternSpec PatternSpec::star(int leaves)
{
    if (leaves < 1)
        throw std::invalid_argument("star needs at least one leaf");
    return PatternSpec(Star{leaves});
}

PatternSpec PatternSpec::bistar(int m, int n)
{
    if (m > n)
        std::swap(m, n);
    if (m < 1)
        throw std::invalid_argument("bistar centers need at least one leaf each");
    return PatternSpec(Bistar{m, n});
}

PatternSpec PatternSpec::caterpillar(std::vector<int> leaves)
{
    if (leaves.empty())
        throw std::invalid_argument("caterpillar spine must be non-empty");
    if (std::any_of(leaves.begin(), leaves.end(), [](int x) { return x < 0; }))
        throw std::invalid_argument("caterpillar leaf counts must be non-negative");
    const bool all_zero = std::all_of(leaves.begin(), leaves.end(), [](int x) { return x == 0; });
    if (all_zero) {
        if (leaves.size() < 2)
            throw std::invalid_argument("path needs at least two vertices");
    } else if (leaves.front() == 0 || leaves.back() == 0) {
        throw std::invalid_argument("caterpillar end spine vertices must carry leaves (use path for P_k)");
    }
    return PatternSpec(Caterpillar{std::move(leaves)});
}

PatternSpec PatternSpec::path(int k)
{
    if (k < 2)
        throw std::invalid_argument("path needs at least two vertices");
    return caterpillar(std::vector<int>(static_cast<std::size_t>(k), 0));
}

PatternSpec PatternSpec::plus_edge(const PatternSpec& base, AugmentationClass augmentation)
{
    if (const auto* s = base.get_if<Star>()) {
        if (!std::holds_alternative<LeafLeaf>(augmentation))
            throw std::invalid_argument("star bases accept only the ll augmentation");
        if (s->leaves < 2)
            throw std::invalid_argument("ll augmentation needs a star with at least two leaves");
        return PatternSpec(PlusEdge{*s, augmentation});
    }
    const auto* b = base.get_if<Bistar>();
    if (b == nullptr)
        throw std::invalid_argument("augmented patterns need a star or bistar base");
    if (std::holds_alternative<LeafLeaf>(augmentation))
        throw std::invalid_argument("bistar bases take ll-same, ll-diff or leaf-far-center");
    if (auto* same = std::get_if<LeafLeafSameCenter>(&augmentation)) {
        if (b->m == b->n)
            same->at = Center::Large;
        const int leaves = same->at == Center::Large ? b->n : b->m;
        if (leaves < 2)
            throw std::invalid_argument("ll-same needs a center with at least two leaves");
    }
    if (auto* far = std::get_if<LeafToFarCenter>(&augmentation); far != nullptr && b->m == b->n)
        far->leaf_of = Center::Small;
    return PatternSpec(PlusEdge{*b, augmentation});
}

bool PatternSpec::is_path() const noexcept
{
    const auto* c = get_if<Caterpillar>();
    return c != nullptr && std::all_of(c->leaves.begin(), c->leaves.end(), [](int x) { return x == 0; });
}

int PatternSpec::vertex_count() const noexcept
{
    return std::visit(overloaded{
                          [](const Star& s) { return s.leaves + 1; },
                          [](const Bistar& b) { return b.m + b.n + 2; },
                          [](const Caterpillar& c) {
                              return static_cast<int>(c.leaves.size()) +
                                     std::accumulate(c.leaves.begin(), c.leaves.end(), 0);
                          },
                          [](const PlusEdge& p) { return tree_vertices(p.base); },
                      },
                      value_);
}

int PatternSpec::edge_count() const noexcept
{
    return is_tree() ? vertex_count() - 1 : vertex_count();
}

std::string PatternSpec::to_string() const
{
    std::ostringstream out;
    auto tree = overloaded{
        [&](const Star& s) { out << "star " << s.leaves; },
        [&](const Bistar& b) { out << "bistar " << b.m << ' ' << b.n; },
    };
    std::visit(overloaded{
                   [&](const Star& s) { tree(s); },
                   [&](const Bistar& b) { tree(b); },
                   [&](const Caterpillar& c) {
                       if (is_path()) {
                           out << "path " << c.leaves.size();
                           return;
                       }
                       out << "caterpillar";
                       for (int x : c.leaves)
                           out << ' ' << x;
                   },
                   [&](const PlusEdge& p) {
                       std::visit(tree, p.base);
                       out << " +e " << augmentation_name(p.augmentation);
                   },
               },
               value_);
    return out.str();
}

PatternSpec parse_pattern(std::string_view text)
{
    std::vector<std::string> tokens;
    {
        std::istringstream in{std::string(text)};
        for (std::string t; in >> t;)
            tokens.push_back(t);
    }
    const auto fail = [&](const std::string& why) -> PatternParseError {
        return PatternParseError("cannot parse pattern '" + std::string(text) + "': " + why +
                                 "; grammar: " + std::string(kPatternGrammar));
    };
    if (tokens.empty())
        throw fail("empty expression");

    std::vector<std::string> base_tokens = tokens;
    std::optional<std::string> aug;
    if (auto it = std::find(tokens.begin(), tokens.end(), "+e"); it != tokens.end()) {
        if (std::next(it) == tokens.end() || std::next(it, 2) != tokens.end())
            throw fail("'+e' must be followed by exactly one class");
        aug = *std::next(it);
        base_tokens.assign(tokens.begin(), it);
    }
    if (base_tokens.empty())
        throw fail("missing base pattern");

    const std::string& kind = base_tokens.front();
    std::vector<int> args;
    for (std::size_t i = 1; i < base_tokens.size(); ++i)
        args.push_back(parse_count(base_tokens[i]));

    const auto want = [&](std::size_t count) {
        if (args.size() != count)
            throw fail("'" + kind + "' takes " + std::to_string(count) + " argument(s)");
    };

    try {
        std::optional<PatternSpec> base;
        if (kind == "star") {
            want(1);
            base = PatternSpec::star(args[0]);
        } else if (kind == "bistar") {
            want(2);
            base = PatternSpec::bistar(args[0], args[1]);
        } else if (kind == "caterpillar") {
            if (args.empty())
                throw fail("caterpillar needs at least one leaf count");
            base = PatternSpec::caterpillar(args);
        } else if (kind == "path") {
            want(1);
            base = PatternSpec::path(args[0]);
        } else {
            throw fail("unknown pattern kind '" + kind + "'");
        }
        if (aug)
            return PatternSpec::plus_edge(*base, parse_augmentation(*aug));
        return *base;
    } catch (const PatternParseError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw fail(e.what());
    }
}

std::vector<int> PatternGraph::degrees() const
{
    std::vector<int> d(static_cast<std::size_t>(vertices), 0);
    for (auto [u, v] : edges) {
        ++d[static_cast<std::size_t>(u)];
        ++d[static_cast<std::size_t>(v)];
    }
    return d;
}

std::vector<Row> PatternGraph::adjacency() const
{
    std::vector<Row> adj(static_cast<std::size_t>(vertices), 0);
    for (auto [u, v] : edges) {
        adj[static_cast<std::size_t>(u)] |= Row{1} << v;
        adj[static_cast<std::size_t>(v)] |= Row{1} << u;
    }
    return adj;
}

namespace {

PatternGraph caterpillar_graph(const std::vector<int>& leaves)
{
    PatternGraph g;
    const int k = static_cast<int>(leaves.size());
    g.vertices = k;
    for (int i = 0; i < k; ++i) {
        g.spine.push_back(i);
        if (i + 1 < k)
            g.edges.emplace_back(i, i + 1);
    }
    for (int i = 0; i < k; ++i)
        for (int l = 0; l < leaves[static_cast<std::size_t>(i)]; ++l)
            g.edges.emplace_back(i, g.vertices++);
    return g;
}

}  // namespace

PatternGraph pattern_graph(const PatternSpec& p)
{
    return std::visit(
        overloaded{
            [](const Star& s) { return caterpillar_graph({s.leaves}); },
            [](const Bistar& b) { return caterpillar_graph({b.m, b.n}); },
            [](const Caterpillar& c) { return caterpillar_graph(c.leaves); },
            [](const PlusEdge& pe) {
                if (const auto* s = std::get_if<Star>(&pe.base)) {
                    PatternGraph g = caterpillar_graph({s->leaves});
                    g.edges.emplace_back(1, 2);
                    return g;
                }
                const auto& b = std::get<Bistar>(pe.base);
                PatternGraph g = caterpillar_graph({b.m, b.n});
                // Leaves of the m-center are 2..m+1, of the n-center m+2..m+n+1.
                const int small_leaf = 2;
                const int large_leaf = b.m + 2;
                std::visit(overloaded{
                               [&](const LeafLeaf&) {},
                               [&](const LeafLeafSameCenter& same) {
                                   const int first = same.at == Center::Small ? small_leaf : large_leaf;
                                   g.edges.emplace_back(first, first + 1);
                               },
                               [&](const LeafLeafDifferentCenters&) { g.edges.emplace_back(small_leaf, large_leaf); },
                               [&](const LeafToFarCenter& far) {
                                   if (far.leaf_of == Center::Small)
                                       g.edges.emplace_back(1, small_leaf);
                                   else
                                       g.edges.emplace_back(0, large_leaf);
                               },
                           },
                           pe.augmentation);
                return g;
            },
        },
        p.value());
}

std::optional<std::vector<int>> reduced_spine(const PatternSpec& p)
{
    if (const auto* s = p.get_if<Star>())
        return std::vector<int>{s->leaves};
    if (const auto* b = p.get_if<Bistar>())
        return std::vector<int>{b->m, b->n};
    const auto* c = p.get_if<Caterpillar>();
    if (c == nullptr)
        return std::nullopt;
    if (!p.is_path())
        return c->leaves;
    const auto k = c->leaves.size();
    if (k == 2)
        return std::vector<int>{1};
    if (k == 3)
        return std::vector<int>{2};
    std::vector<int> spine(k - 2, 0);
    spine.front() = 1;
    spine.back() = 1;
    return spine;
}

std::optional<int> star_shape(const PatternSpec& p)
{
    const auto spine = reduced_spine(p);
    if (spine && spine->size() == 1)
        return spine->front();
    return std::nullopt;
}

std::optional<std::pair<int, int>> bistar_shape(const PatternSpec& p)
{
    const auto spine = reduced_spine(p);
    if (!spine || spine->size() != 2)
        return std::nullopt;
    const auto [lo, hi] = std::minmax((*spine)[0], (*spine)[1]);
    return std::pair{lo, hi};
}

}  // namespace ramsey
