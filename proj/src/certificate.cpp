#include "ramsey/certificate.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "ramsey/embed.hpp"

namespace ramsey {

namespace {

constexpr std::string_view kHeader = "ramsey-certificate v1";

std::vector<std::string_view> split_lines(std::string_view text)
{
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        if (nl == std::string_view::npos) {
            lines.push_back(text);
            break;
        }
        lines.push_back(text.substr(0, nl));
        text.remove_prefix(nl + 1);
    }
    return lines;
}

std::vector<std::string> split_words(std::string_view line)
{
    std::vector<std::string> words;
    std::istringstream in{std::string(line)};
    for (std::string w; in >> w;)
        words.push_back(w);
    return words;
}

[[noreturn]] void malformed(const std::string& why)
{
    throw CertificateError(CertificateProblem::Malformed, "malformed certificate: " + why);
}

[[noreturn]] void order_mismatch(const std::string& why)
{
    throw CertificateError(CertificateProblem::OrderMismatch, "order mismatch: " + why);
}

template <typename T>
std::optional<T> parse_number(std::string_view s)
{
    T value{};
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (ec != std::errc{} || ptr != end || s.empty())
        return std::nullopt;
    return value;
}

PatternSpec parse_claim_pattern(const std::vector<std::string>& words, std::size_t first, std::size_t last)
{
    std::string expr;
    for (std::size_t i = first; i < last; ++i) {
        if (!expr.empty())
            expr += ' ';
        expr += words[i];
    }
    try {
        return parse_pattern(expr);
    } catch (const PatternParseError& e) {
        malformed(e.what());
    }
}

}  // namespace

std::string_view to_string(CertificateProblem p) noexcept
{
    switch (p) {
    case CertificateProblem::None:
        return "valid";
    case CertificateProblem::Malformed:
        return "malformed";
    case CertificateProblem::OrderMismatch:
        return "order-mismatch";
    case CertificateProblem::ClaimMismatch:
        return "claim-mismatch";
    case CertificateProblem::Unverifiable:
        return "machine-assisted";
    }
    return "malformed";
}

Certificate no_mono_certificate(const PatternSpec& p, const TwoColoring& coloring)
{
    if (!coloring.complete())
        throw std::invalid_argument("no-mono certificates need a complete coloring");
    return Certificate{NoMonoClaim{p}, coloring, 0, 0};
}

Certificate arrow_certificate(const PatternSpec& p, int order, const SearchStats& stats)
{
    return Certificate{ArrowClaim{p, order}, TwoColoring(order), stats.nodes, stats.workers};
}

std::string emit_certificate(const Certificate& cert)
{
    std::ostringstream out;
    out << kHeader << '\n';
    const int n = cert.coloring.n_vertices();
    if (const auto* a = std::get_if<ArrowClaim>(&cert.claim))
        out << "claim arrow " << a->pattern.to_string() << ' ' << a->order << '\n';
    else
        out << "claim no-mono " << std::get<NoMonoClaim>(cert.claim).pattern.to_string() << '\n';
    out << "n " << n << '\n';
    out << "blue";
    if (std::holds_alternative<NoMonoClaim>(cert.claim))
        for (std::size_t idx : cert.coloring.edges(Color::Blue)) {
            const auto e = from_linear(idx);
            out << ' ' << e.i << '-' << e.j;
        }
    out << '\n';
    if (std::holds_alternative<ArrowClaim>(cert.claim))
        out << "search nodes=" << cert.search_nodes << " workers=" << cert.search_workers << " machine-assisted\n";
    return out.str();
}

Certificate parse_certificate(std::string_view text)
{
    auto lines = split_lines(text);
    if (lines.empty() || lines[0] != kHeader)
        malformed("first line must be '" + std::string(kHeader) + "'");
    if (lines.size() < 4)
        malformed("truncated: expected claim, order and blue lines");

    const auto claim_words = split_words(lines[1]);
    if (claim_words.size() < 3 || claim_words[0] != "claim")
        malformed("second line must be 'claim no-mono <pattern>' or 'claim arrow <pattern> <N>'");

    const auto order_words = split_words(lines[2]);
    if (order_words.size() != 2 || order_words[0] != "n")
        malformed("third line must be 'n <N>'");
    const auto n = parse_number<int>(order_words[1]);
    if (!n || *n < 1 || *n > kMaxVertices)
        malformed("order '" + order_words[1] + "' is not in [1, " + std::to_string(kMaxVertices) + "]");

    Certificate cert;
    const bool arrow = claim_words[1] == "arrow";
    if (arrow) {
        const auto claimed = parse_number<int>(claim_words.back());
        if (!claimed || claim_words.size() < 4)
            malformed("arrow claim must end with the order N");
        const PatternSpec p = parse_claim_pattern(claim_words, 2, claim_words.size() - 1);
        if (*claimed != *n)
            order_mismatch("claim names K_" + std::to_string(*claimed) + " but the file declares n " +
                           std::to_string(*n));
        cert.claim = ArrowClaim{p, *claimed};
    } else if (claim_words[1] == "no-mono") {
        cert.claim = NoMonoClaim{parse_claim_pattern(claim_words, 2, claim_words.size())};
    } else {
        malformed("unknown claim kind '" + claim_words[1] + "'");
    }

    const auto blue_words = split_words(lines[3]);
    if (blue_words.empty() || blue_words[0] != "blue")
        malformed("fourth line must start with 'blue'");
    cert.coloring = TwoColoring::uniform(*n, Color::Red);
    if (arrow) {
        cert.coloring = TwoColoring(*n);
        if (blue_words.size() != 1)
            malformed("arrow claims carry no coloring");
    }
    for (std::size_t w = 1; w < blue_words.size(); ++w) {
        const std::string& tok = blue_words[w];
        const auto dash = tok.find('-');
        if (dash == std::string::npos)
            malformed("edge '" + tok + "' is not of the form i-j");
        const auto i = parse_number<int>(std::string_view(tok).substr(0, dash));
        const auto j = parse_number<int>(std::string_view(tok).substr(dash + 1));
        if (!i || !j || *i >= *j)
            malformed("edge '" + tok + "' needs integers i < j");
        if (*j >= *n)
            order_mismatch("edge " + tok + " references a vertex outside K_" + std::to_string(*n));
        if (cert.coloring.color_of(*i, *j) == Color::Blue)
            malformed("edge " + tok + " listed twice");
        cert.coloring.set(*i, *j, Color::Blue);
    }

    std::size_t expected = 4;
    if (arrow) {
        if (lines.size() < 5)
            malformed("arrow claims need a search line");
        const auto words = split_words(lines[4]);
        if (words.size() != 4 || words[0] != "search" || words[3] != "machine-assisted" ||
            words[1].rfind("nodes=", 0) != 0 || words[2].rfind("workers=", 0) != 0)
            malformed("search line must read 'search nodes=<k> workers=<w> machine-assisted'");
        const auto nodes = parse_number<std::uint64_t>(std::string_view(words[1]).substr(6));
        const auto workers = parse_number<int>(std::string_view(words[2]).substr(8));
        if (!nodes || !workers)
            malformed("search statistics are not numbers");
        cert.search_nodes = *nodes;
        cert.search_workers = *workers;
        expected = 5;
    }
    for (std::size_t i = expected; i < lines.size(); ++i)
        if (!split_words(lines[i]).empty())
            malformed("unexpected content after line " + std::to_string(expected));
    return cert;
}

VerifyResult verify_certificate(std::string_view text)
{
    Certificate cert;
    try {
        cert = parse_certificate(text);
    } catch (const CertificateError& e) {
        return {e.problem(), e.what()};
    }
    if (const auto* a = std::get_if<ArrowClaim>(&cert.claim))
        return {CertificateProblem::Unverifiable,
                "arrow claim K_" + std::to_string(a->order) + " -> " + a->pattern.to_string() +
                    " is machine-assisted (" + std::to_string(cert.search_nodes) +
                    " search nodes); re-run the search to reproduce it"};

    const auto& p = std::get<NoMonoClaim>(cert.claim).pattern;
    for (Color c : {Color::Blue, Color::Red})
        if (contains_mono_pattern(cert.coloring, c, p))
            return {CertificateProblem::ClaimMismatch, "claim mismatch: the " + std::string(to_string(c)) +
                                                           " class contains " + p.to_string()};
    return {CertificateProblem::None, "valid: K_" + std::to_string(cert.coloring.n_vertices()) +
                                          " has no monochromatic " + p.to_string() + ", so r >= " +
                                          std::to_string(cert.coloring.n_vertices() + 1)};
}

}  // namespace ramsey
