#include <catch_amalgamated.hpp>

#include <random>

#include "corpus.hpp"
#include "treesigma/words.hpp"

using namespace treesigma;
using treesigma::testing::kF2;
using treesigma::testing::w;
using treesigma::testing::words_up_to;

TEST_CASE("free reduction") {
    std::vector<Letter> raw = {Letter(1, +1), Letter(1, -1), Letter(2, +1)};
    CHECK(ReducedWord::reduce(kF2, raw) == w("a2"));

    CHECK(ReducedWord::reduce(kF2, {}) == w(""));

    raw = {Letter(1, +1), Letter(2, +1), Letter(2, -1), Letter(1, +1), Letter(1, +1)};
    CHECK(ReducedWord::reduce(kF2, raw) == w("a1 a1 a1"));

    CHECK_THROWS_AS(ReducedWord::reduce(kF2, std::vector<Letter>{Letter(3, +1)}), std::invalid_argument);
}

TEST_CASE("reduction against repeated single-pass cancellation") {
    // Independent oracle: scan for an adjacent inverse pair, delete it,
    // repeat to fixpoint.
    auto slow_reduce = [](std::vector<Letter> v) {
        for (bool changed = true; changed;) {
            changed = false;
            for (std::size_t i = 0; i + 1 < v.size(); ++i) {
                if (v[i] == v[i + 1].inverse()) {
                    v.erase(v.begin() + static_cast<std::ptrdiff_t>(i), v.begin() + static_cast<std::ptrdiff_t>(i) + 2);
                    changed = true;
                    break;
                }
            }
        }
        return v;
    };
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Letter> raw;
        int len = static_cast<int>(rng() % 10);
        for (int i = 0; i < len; ++i)
            raw.emplace_back(static_cast<int>(rng() % 2) + 1, rng() % 2 ? +1 : -1);
        CHECK(ReducedWord::reduce(kF2, raw).letters() == slow_reduce(raw));
    }
}

TEST_CASE("multiply basics") {
    CHECK(multiply(w("a1"), w("A1")) == w(""));
    for (const ReducedWord& word : words_up_to(kF2, 3))
        CHECK(multiply(w(""), word) == word);
    CHECK(multiply(w("a1 a2"), w("A2 a1")) == w("a1 a1"));
    CHECK_THROWS_AS(multiply(w("a1"), parse_word("a1", Alphabet(3))), AlphabetMismatch);
}

TEST_CASE("group laws, exhaustive for |w| <= 3 in F2") {
    std::vector<ReducedWord> ball = words_up_to(kF2, 3);
    for (const ReducedWord& u : ball) {
        CHECK(multiply(u, invert(u)) == w(""));
        CHECK(multiply(invert(u), u) == w(""));
        CHECK(invert(invert(u)) == u);
    }
    // Associativity and parity/length bounds on sampled pairs and triples.
    std::vector<ReducedWord> small = words_up_to(kF2, 2);
    for (const ReducedWord& u : small)
        for (const ReducedWord& v : small) {
            ReducedWord p = multiply(u, v);
            CHECK(p.size() <= u.size() + v.size());
            CHECK((p.size() + u.size() + v.size()) % 2 == 0);
            for (const ReducedWord& x : small)
                CHECK(multiply(multiply(u, v), x) == multiply(u, multiply(v, x)));
        }
}

TEST_CASE("invert reverses and flips") {
    CHECK(invert(w("")) == w(""));
    CHECK(invert(w("a1 a2")) == w("A2 A1"));
    for (const ReducedWord& u : words_up_to(kF2, 5))
        CHECK(invert(invert(u)) == u);
}

TEST_CASE("distance is the tree metric") {
    CHECK(distance(w("a1 a2"), w("a1 a2")) == 0);
    CHECK(distance(w(""), w("a1 a2")) == 2);
    CHECK(distance(w("a1"), w("a2")) == 2);

    std::vector<ReducedWord> ball = words_up_to(kF2, 3);
    for (const ReducedWord& u : ball)
        for (const ReducedWord& v : ball) {
            CHECK(distance(u, v) == distance(v, u));
            CHECK((distance(u, v) == 0) == (u == v));
            CHECK(distance(u, v) == multiply(invert(u), v).size());
        }
    std::vector<ReducedWord> small = words_up_to(kF2, 2);
    for (const ReducedWord& u : small)
        for (const ReducedWord& v : small)
            for (const ReducedWord& x : small)
                CHECK(distance(u, x) <= distance(u, v) + distance(v, x));
}

TEST_CASE("expsum") {
    CHECK(expsum(Letter(1, +1), w("a1 a2 A1 a1")) == 1);
    CHECK(expsum(Letter(1, -1), w("a1")) == -1);
    CHECK(expsum(Letter(2, +1), w("")) == 0);
}

TEST_CASE("expsum is a homomorphism to Z, exhaustive for |u|,|v| <= 3") {
    std::vector<ReducedWord> ball = words_up_to(kF2, 3);
    for (const ReducedWord& u : ball)
        for (const ReducedWord& v : ball)
            for (const Letter& t : {Letter(1, +1), Letter(1, -1), Letter(2, +1)})
                CHECK(expsum(t, multiply(u, v)) == expsum(t, u) + expsum(t, v));
}

TEST_CASE("ball enumeration matches the sphere counts 2n(2n-1)^{r-1}") {
    CHECK(enumerate_ball(w(""), 0) == std::vector<ReducedWord>{w("")});

    std::vector<ReducedWord> b1 = enumerate_ball(w(""), 1);
    CHECK(b1 == std::vector<ReducedWord>{w(""), w("a1"), w("A1"), w("a2"), w("A2")});

    CHECK(enumerate_ball(w(""), 3).size() == 53);  // 1 + 4 + 12 + 36

    for (std::size_t radius : {1u, 2u, 3u, 4u}) {
        std::size_t expected = 1;
        for (std::size_t s = 1; s <= radius; ++s) {
            std::size_t sphere = 4;
            for (std::size_t i = 1; i < s; ++i) sphere *= 3;
            expected += sphere;
        }
        for (const ReducedWord& center : {w(""), w("a1 a2"), w("A2 A2 a1")}) {
            std::vector<ReducedWord> ball = enumerate_ball(center, radius);
            CHECK(ball.size() == expected);
            for (const ReducedWord& word : ball) CHECK(distance(center, word) <= radius);
        }
    }

    // Rank 1: the tree is a line.
    Alphabet z(1);
    CHECK(enumerate_ball(ReducedWord::identity(z), 3, 8).size() == 7);

    CHECK_THROWS_AS(enumerate_ball(w(""), 9), CapExceeded);
    CHECK_NOTHROW(enumerate_ball(w(""), 9, 9));
}

TEST_CASE("lcp and the distance identity, exhaustive for |u|,|v| <= 4") {
    CHECK(lcp(w("a1 a2"), w("a1 a1")) == 1);
    CHECK(lcp(w("a1 a2"), w("a1 a2")) == 2);
    std::vector<ReducedWord> ball = words_up_to(kF2, 4);
    for (const ReducedWord& u : ball)
        for (const ReducedWord& v : ball)
            CHECK(distance(u, v) == u.size() + v.size() - 2 * lcp(u, v));
}

TEST_CASE("word grammar round trip and errors") {
    for (const ReducedWord& u : words_up_to(kF2, 4))
        CHECK(parse_word(to_string(u), kF2) == u);
    CHECK(parse_word("", kF2) == w(""));
    CHECK(parse_word("1", kF2) == w(""));
    CHECK(parse_word("a1 a1 A1", kF2) == w("a1"));

    CHECK_THROWS_AS(parse_word("a1 b2", kF2), ParseError);
    CHECK_THROWS_AS(parse_word("a3", kF2), ParseError);
    CHECK_THROWS_AS(parse_word("a", kF2), ParseError);
    CHECK_THROWS_AS(parse_word("a0", kF2), ParseError);
    try {
        parse_word("a1 x2", kF2);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position == 3);
    }
}
