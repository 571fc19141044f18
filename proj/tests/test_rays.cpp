#include <catch_amalgamated.hpp>

#include "corpus.hpp"
#include "treesigma/rays.hpp"

using namespace treesigma;
using treesigma::testing::kF2;
using treesigma::testing::r;
using treesigma::testing::ray_corpus;
using treesigma::testing::w;
using treesigma::testing::words_up_to;

TEST_CASE("make_ray canonicalization") {
    CHECK(r("| a1").period() == w("a1"));
    CHECK(r("| a1").prefix() == w(""));

    // Prefix absorbed into the periodic tail.
    CHECK(r("a1 | a1") == r("| a1"));

    // Primitive root of a proper power, checked by tau agreement.
    Ray power = r("| a1 a2 a1 a2");
    CHECK(power == r("| a1 a2"));
    for (std::size_t l = 0; l <= 12; ++l) CHECK(tau(power, l) == tau(r("| a1 a2"), l));

    // Cancellation at the junction.
    CHECK(r("a1 | A1") == r("| A1"));
    CHECK(r("a2 a1 | A1") == r("a2 | A1"));

    // Cyclically unreduced period: a1 a2 A1 repeats to a1 a2 a2 ... .
    Ray conj = make_ray(w(""), w("a1 a2 A1"));
    CHECK(conj.prefix() == w("a1"));
    CHECK(conj.period() == w("a2"));

    CHECK_THROWS_AS(make_ray(w("a1"), w("")), std::invalid_argument);
}

TEST_CASE("canonical equality iff tau agreement on a generated corpus") {
    const auto& corpus = ray_corpus();
    REQUIRE(corpus.size() >= 20);
    // Long enough to separate any two distinct corpus rays.
    const std::size_t depth = 2 + 2 + 2 * 6;
    for (std::size_t i = 0; i < corpus.size(); ++i)
        for (std::size_t j = i; j < corpus.size(); ++j) {
            bool same_tau = true;
            for (std::size_t l = 0; l <= depth && same_tau; ++l)
                same_tau = tau(corpus[i], l) == tau(corpus[j], l);
            CHECK(same_tau == (corpus[i] == corpus[j]));
        }
}

TEST_CASE("tau prefixes") {
    CHECK(tau(r("| a1 a2"), 3) == w("a1 a2 a1"));
    CHECK(tau(r("| a1 a2"), 0) == w(""));
    CHECK(tau(r("a2 | A1"), 4) == w("a2 A1 A1 A1"));

    for (const Ray& ray : ray_corpus())
        for (std::size_t l = 0; l <= 20; ++l) {
            CHECK(tau(ray, l).size() == l);  // geodesic
            CHECK(lcp(tau(ray, l), tau(ray, l + 1)) == l);
        }
}

TEST_CASE("lcp_ray") {
    CHECK(lcp_ray(w(""), r("| a1 a2")) == 0);
    CHECK(lcp_ray(w("a1 a1"), r("| a1")) == 2);
    CHECK(lcp_ray(w("a1 A2"), r("| a1 a2")) == 1);
    for (const Ray& ray : ray_corpus())
        for (const ReducedWord& word : words_up_to(kF2, 4))
            CHECK(lcp_ray(word, ray) == lcp(word, tau(ray, word.size())));
}

TEST_CASE("eventually_only") {
    CHECK(eventually_only(r("a2 | A1"), Letter(1, -1)));
    CHECK_FALSE(eventually_only(r("| a1 a2"), Letter(1, +1)));
    CHECK(eventually_only(r("a1 | a1"), Letter(1, +1)));
}

TEST_CASE("translate") {
    CHECK(translate(w(""), r("a2 | a1 a2")) == r("a2 | a1 a2"));
    CHECK(translate(w("a1"), r("| a1")) == r("| a1"));
    CHECK(translate(w("a2"), r("| a1")) == r("a2 | a1"));

    // Agreement with prepend-then-reduce on tau prefixes.
    for (const Ray& ray : ray_corpus())
        for (const ReducedWord& g : words_up_to(kF2, 3)) {
            Ray moved = translate(g, ray);
            for (std::size_t l = 10; l <= 12; ++l) {
                ReducedWord expected = multiply(g, tau(ray, l + g.size()));
                CHECK(lcp(tau(moved, l), expected) >= std::min<std::size_t>(l, expected.size()));
            }
        }
}

TEST_CASE("translate is an action") {
    std::vector<ReducedWord> small = words_up_to(kF2, 2);
    for (const Ray& ray : ray_corpus())
        for (const ReducedWord& g : small)
            for (const ReducedWord& h : small)
                CHECK(translate(g, translate(h, ray)) == translate(multiply(g, h), ray));
    for (const Ray& ray : ray_corpus()) CHECK(translate(w(""), ray) == ray);
}

TEST_CASE("infinite_letters") {
    CHECK(infinite_letters(r("| a1 a2")) == std::set<Letter>{Letter(1, +1), Letter(2, +1)});
    CHECK(infinite_letters(r("a2 a2 | A1")) == std::set<Letter>{Letter(1, -1)});
    CHECK(infinite_letters(r("| a1 a2 A1 A2")) ==
          std::set<Letter>{Letter(1, +1), Letter(2, +1), Letter(1, -1), Letter(2, -1)});
    // Cyclically unreduced period: only the canonical period counts.
    CHECK(infinite_letters(r("| a1 a2 A1")) == std::set<Letter>{Letter(2, +1)});
}

TEST_CASE("ray grammar round trip") {
    for (const Ray& ray : ray_corpus()) CHECK(parse_ray(to_string(ray), kF2) == ray);
    CHECK(parse_ray("| a1", kF2) == make_ray(w(""), w("a1")));
    CHECK_THROWS_AS(parse_ray("a1 a2", kF2), ParseError);
    CHECK_THROWS_AS(parse_ray("a1 | ", kF2), ParseError);
    CHECK_THROWS_AS(parse_ray("| a1 | a2", kF2), ParseError);
}

TEST_CASE("rank-1 boundary has two points") {
    Alphabet z(1);
    std::vector<Ray> rays = enumerate_canonical_rays(z, 3, 2);
    REQUIRE(rays.size() == 2);
    CHECK(rays[0] == parse_ray("| a1", z));
    CHECK(rays[1] == parse_ray("| A1", z));
}
