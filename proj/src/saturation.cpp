#include "ramsey/saturation.hpp"

#include <sstream>
#include <stdexcept>

#include "ramsey/bounds.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/embed.hpp"

namespace ramsey {

std::string_view to_string(Verdict v) noexcept
{
    switch (v) {
    case Verdict::Confirms:
        return "CONFIRMS";
    case Verdict::Contradicts:
        return "CONTRADICTS";
    case Verdict::Inconclusive:
        return "INCONCLUSIVE";
    }
    return "INCONCLUSIVE";
}

std::vector<PatternSpec> augmentations(const PatternSpec& base)
{
    std::vector<PatternSpec> out;
    if (const auto* s = base.get_if<Star>()) {
        if (s->leaves >= 2)
            out.push_back(PatternSpec::plus_edge(base, LeafLeaf{}));
        return out;
    }
    const auto* b = base.get_if<Bistar>();
    if (b == nullptr)
        throw std::invalid_argument("augmentations needs a star or bistar, got '" + base.to_string() + "'");
    const bool asymmetric = b->m != b->n;
    if (asymmetric && b->m >= 2)
        out.push_back(PatternSpec::plus_edge(base, LeafLeafSameCenter{Center::Small}));
    if (b->n >= 2)
        out.push_back(PatternSpec::plus_edge(base, LeafLeafSameCenter{Center::Large}));
    out.push_back(PatternSpec::plus_edge(base, LeafLeafDifferentCenters{}));
    out.push_back(PatternSpec::plus_edge(base, LeafToFarCenter{Center::Small}));
    if (asymmetric)
        out.push_back(PatternSpec::plus_edge(base, LeafToFarCenter{Center::Large}));
    return out;
}

StarSaturationReport verify_star_saturated(int n)
{
    if (n < 2)
        throw std::invalid_argument("verify_star_saturated needs n >= 2");
    StarSaturationReport report;
    report.n = n;
    report.witness = star_plus_edge_coloring(n);
    report.witness_complete = report.witness.complete();
    const PatternSpec target = PatternSpec::plus_edge(PatternSpec::star(n), LeafLeaf{});
    report.witness_avoids = !contains_mono_pattern(report.witness, Color::Blue, target) &&
                            !contains_mono_pattern(report.witness, Color::Red, target);
    report.star_value = star_exact(n);
    report.augmented_lower = report.witness.n_vertices() + 1;
    return report;
}

std::string StarSaturationReport::render() const
{
    std::ostringstream out;
    out << (passed() ? "SATURATED" : "CHECK FAILED") << ": star " << n << '\n';
    out << "  witness K_" << witness.n_vertices() << (witness_complete ? " complete" : " INCOMPLETE")
        << (witness_avoids ? ", no monochromatic star " : ", CONTAINS monochromatic star ") << n << " +e ll\n";
    out << "  r(S_" << n << ") = " << star_value << " < " << augmented_lower << " <= r(S_" << n << "+e)\n";
    return out.str();
}

BistarSaturationReport verify_bistar_unsaturated(int m, int n, const SearchConfig& cfg, std::optional<int> known_value,
                                                 const ArrowDecider& decide)
{
    if (m < 1 || m > n)
        throw std::invalid_argument("verify_bistar_unsaturated needs 1 <= m <= n");
    const PatternSpec base = PatternSpec::bistar(m, n);
    const ArrowDecider run = decide ? decide : [&cfg](const PatternSpec& q, int order) {
        return decide_arrow(q, order, cfg);
    };

    int value = 0;
    if (known_value) {
        value = *known_value;
    } else if (const auto bounds = bistar_bounds(m, n); bounds.exact()) {
        value = bounds.lo;
    } else {
        auto result = compute_ramsey(base, cfg, run);
        const auto* exact = std::get_if<RamseyValue>(&result);
        if (exact == nullptr)
            throw std::invalid_argument("r(B(" + std::to_string(m) + "," + std::to_string(n) +
                                        ")) is not established; saturation check needs the exact value");
        value = exact->value;
    }

    BistarSaturationReport report;
    report.m = m;
    report.n = n;
    report.ramsey_value = value;
    report.augmented = PatternSpec::plus_edge(base, LeafLeafDifferentCenters{});

    auto outcome = run(report.augmented, value);
    if (auto* proof = std::get_if<AllColoringsContain>(&outcome)) {
        report.verdict = Verdict::Confirms;
        report.stats = std::move(proof->stats);
    } else if (auto* cx = std::get_if<Counterexample>(&outcome)) {
        report.verdict = Verdict::Contradicts;
        report.counterexample = std::move(cx->coloring);
        report.stats = std::move(cx->stats);
    } else {
        report.verdict = Verdict::Inconclusive;
        report.stats = std::move(std::get<BudgetExhausted>(outcome).stats);
    }
    return report;
}

std::string BistarSaturationReport::render() const
{
    std::ostringstream out;
    const std::string name = "B(" + std::to_string(m) + "," + std::to_string(n) + ")";
    switch (verdict) {
    case Verdict::Confirms:
        out << "CONFIRMS: r(" << name << "+e) = " << ramsey_value << '\n';
        out << "  every 2-coloring of K_" << ramsey_value << " contains a monochromatic " << augmented.to_string()
            << "; " << name << " is unsaturated\n";
        break;
    case Verdict::Contradicts:
        out << "CONTRADICTS: r(" << name << "+e) > " << ramsey_value << " = r(" << name << ")\n";
        out << "  !!! K_" << ramsey_value << " has a 2-coloring with no monochromatic " << augmented.to_string()
            << "; the leaf-leaf edge across the centers raises the Ramsey number here !!!\n";
        break;
    case Verdict::Inconclusive:
        out << "INCONCLUSIVE: budget exhausted deciding K_" << ramsey_value << " for " << augmented.to_string()
            << '\n';
        break;
    }
    out << "  nodes " << stats.nodes << ", " << stats.seconds << " s, workers " << stats.workers << '\n';
    return out.str();
}

}  // namespace ramsey
