#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "ramsey/coloring.hpp"
#include "ramsey/pattern.hpp"
#include "ramsey/search.hpp"

namespace ramsey {

// Line-oriented text, frozen:
//
//   ramsey-certificate v1
//   claim no-mono <pattern-expr>          | claim arrow <pattern-expr> <N>
//   n <N>
//   blue <i-j> <i-j> ...                  (ascending linear index; others red)
//   search nodes=<k> workers=<w> machine-assisted     (arrow claims only)

struct NoMonoClaim {
    PatternSpec pattern = PatternSpec::star(1);
    friend bool operator==(const NoMonoClaim&, const NoMonoClaim&) = default;
};

struct ArrowClaim {
    PatternSpec pattern = PatternSpec::star(1);
    int order = 0;
    friend bool operator==(const ArrowClaim&, const ArrowClaim&) = default;
};

struct Certificate {
    std::variant<NoMonoClaim, ArrowClaim> claim;
    /// Complete for no-mono claims; an uncolored K_N for arrow claims.
    TwoColoring coloring{1};
    std::uint64_t search_nodes = 0;
    int search_workers = 0;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

Certificate no_mono_certificate(const PatternSpec& p, const TwoColoring& coloring);
Certificate arrow_certificate(const PatternSpec& p, int order, const SearchStats& stats);

std::string emit_certificate(const Certificate& cert);

enum class CertificateProblem { None, Malformed, OrderMismatch, ClaimMismatch, Unverifiable };

std::string_view to_string(CertificateProblem p) noexcept;

class CertificateError : public std::runtime_error {
public:
    CertificateError(CertificateProblem problem, const std::string& what)
        : std::runtime_error(what)
        , problem_(problem)
    {
    }

    CertificateProblem problem() const noexcept { return problem_; }

private:
    CertificateProblem problem_;
};

/// Throws CertificateError (Malformed or OrderMismatch).
Certificate parse_certificate(std::string_view text);

struct VerifyResult {
    CertificateProblem problem = CertificateProblem::None;
    std::string message;

    bool valid() const noexcept { return problem == CertificateProblem::None; }
};

/// Re-parses the file and re-runs the generic embedder for the claimed
/// pattern in both colors. Arrow claims come back Unverifiable.
VerifyResult verify_certificate(std::string_view text);

}  // namespace ramsey
