#include "doctest.h"

#include <random>

#include "../oracle.hpp"
#include "ramsey/certificate.hpp"
#include "ramsey/constructions.hpp"

using namespace ramsey;

TEST_SUITE("certificate") {

TEST_CASE("format of a no-mono certificate")
{
    const auto text = emit_certificate(no_mono_certificate(PatternSpec::path(4), split_clique_coloring(3, 1)));
    CHECK(text ==
          "ramsey-certificate v1\n"
          "claim no-mono path 4\n"
          "n 4\n"
          "blue 0-1 0-2 1-2\n");
}

TEST_CASE("round trips are byte-identical")
{
    std::vector<Certificate> certs = {
        no_mono_certificate(PatternSpec::bistar(2, 2), split_clique_coloring(5, 2)),
        no_mono_certificate(PatternSpec::star(3), circulant_star_coloring(3)),
        no_mono_certificate(PatternSpec::plus_edge(PatternSpec::star(4), LeafLeaf{}), star_plus_edge_coloring(4)),
        no_mono_certificate(PatternSpec::star(1), TwoColoring::uniform(1, Color::Red)),
    };
    SearchStats st;
    st.nodes = 741;
    st.workers = 4;
    certs.push_back(arrow_certificate(PatternSpec::bistar(2, 2), 8, st));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i)
        certs.push_back(no_mono_certificate(PatternSpec::bistar(3, 5), oracle::random_coloring(2 + i % 30, rng)));
    for (const auto& c : certs) {
        const auto text = emit_certificate(c);
        const auto back = parse_certificate(text);
        CHECK(back == c);
        CHECK(emit_certificate(back) == text);
    }
    const auto arrow = emit_certificate(certs[4]);
    CHECK(arrow.find("claim arrow bistar 2 2 8\n") != std::string::npos);
    CHECK(arrow.find("search nodes=741 workers=4 machine-assisted") != std::string::npos);
}

TEST_CASE("verify: valid, flipped, truncated, mismatched")
{
    const auto sc = split_clique_coloring(5, 2);
    const auto text = emit_certificate(no_mono_certificate(PatternSpec::bistar(2, 2), sc));
    CHECK(verify_certificate(text).valid());

    // flipping one cross edge to blue: the verifier judges the content
    for (int u = 0; u < 5; ++u)
        for (int v = 5; v < 7; ++v) {
            auto flipped = sc;
            flipped.set(u, v, Color::Blue);
            const auto t = emit_certificate(no_mono_certificate(PatternSpec::bistar(2, 2), flipped));
            const bool has = oracle::contains(flipped, Color::Blue, PatternSpec::bistar(2, 2)) ||
                             oracle::contains(flipped, Color::Red, PatternSpec::bistar(2, 2));
            const auto r = verify_certificate(t);
            CHECK(r.valid() == !has);
            if (has)
                CHECK(r.problem == CertificateProblem::ClaimMismatch);
        }

    const auto truncated = text.substr(0, text.find("blue"));
    CHECK(verify_certificate(truncated).problem == CertificateProblem::Malformed);
    CHECK(verify_certificate(text.substr(0, 10)).problem == CertificateProblem::Malformed);
    CHECK(verify_certificate("").problem == CertificateProblem::Malformed);
    CHECK(verify_certificate("ramsey-certificate v2\nclaim no-mono star 3\nn 5\nblue\n").problem ==
          CertificateProblem::Malformed);
    CHECK(verify_certificate("ramsey-certificate v1\nclaim no-mono tree 3\nn 5\nblue\n").problem ==
          CertificateProblem::Malformed);
    CHECK(verify_certificate("ramsey-certificate v1\nclaim no-mono star 3\nn 5\nblue 0-x\n").problem ==
          CertificateProblem::Malformed);
    CHECK(verify_certificate("ramsey-certificate v1\nclaim no-mono star 3\nn 5\nblue 0-7\n").problem ==
          CertificateProblem::OrderMismatch);
    CHECK(verify_certificate("ramsey-certificate v1\nclaim arrow star 3 6\nn 5\nblue\n").problem ==
          CertificateProblem::OrderMismatch);
    CHECK(verify_certificate("ramsey-certificate v1\nclaim arrow star 3 6\nn 6\nblue\nsearch nodes=1 workers=1 "
                             "machine-assisted\n")
              .problem == CertificateProblem::Unverifiable);

    CHECK_THROWS_AS(parse_certificate(truncated), CertificateError);
    try {
        parse_certificate(truncated);
    } catch (const CertificateError& e) {
        CHECK(e.problem() == CertificateProblem::Malformed);
        CHECK(std::string(e.what()).find("malformed") != std::string::npos);
    }
    CHECK_THROWS(no_mono_certificate(PatternSpec::star(2), TwoColoring(4)));
}

TEST_CASE("problem names")
{
    CHECK(to_string(CertificateProblem::Malformed) == "malformed");
}

}
