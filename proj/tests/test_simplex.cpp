#include "qtetra/simplex.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

using namespace qtetra;

namespace {

Word make(int n, int N, std::vector<GenLabel> letters) { return Word{n, N, std::move(letters)}; }

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("words W and W'") {
    CHECK(word_W(2, 4, WordVariant::lex) == make(2, 4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}));
    CHECK(word_W(2, 4, WordVariant::colex) == make(2, 4, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}}));
    CHECK(word_W(3, 3, WordVariant::lex).letters == std::vector<GenLabel>{{1, 2, 3}});
    CHECK(eta_map(word_W(2, 4, WordVariant::lex)) == word_W(2, 4, WordVariant::lex_reversed));
    CHECK_THROWS_AS(word_W(0, 3, WordVariant::lex), std::invalid_argument);
    CHECK_THROWS_AS(word_W(4, 3, WordVariant::lex), std::invalid_argument);
    CHECK_THROWS_AS(validate_word(make(2, 3, {{2, 1}})), std::invalid_argument);
    CHECK_THROWS_AS(validate_word(make(2, 3, {{1, 4}})), std::invalid_argument);
    CHECK(subsets(2, 4).size() == 6);
    CHECK(label_to_string({1, 2, 3}) == "R123");
}

TEST_CASE("commutation rule") {
    CHECK(commutes({1, 4}, {2, 3}));
    CHECK_FALSE(commutes({1, 2}, {1, 3}));
    CHECK(commutes({1, 2, 3}, {1, 4, 5}));
    CHECK_FALSE(commutes({1, 2, 3}, {1, 2, 4}));
}

TEST_CASE("trace_equal examples") {
    CHECK(trace_equal(word_W(2, 4, WordVariant::lex), word_W(2, 4, WordVariant::colex)));
    CHECK(trace_equal(word_W(3, 5, WordVariant::lex), word_W(3, 5, WordVariant::colex)));
    CHECK_FALSE(trace_equal(word_W(2, 3, WordVariant::lex), word_W(2, 3, WordVariant::lex_reversed)));
    CHECK_FALSE(trace_equal(make(2, 3, {{1, 2}}), make(2, 3, {{1, 3}})));
}

TEST_CASE("trace_equal agrees with breadth-first search up to 10 letters") {
    std::mt19937 rng(101);
    const std::vector<std::pair<int, int>> cases{{1, 3}, {1, 5}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}, {4, 6}, {2, 5}};
    for (const auto& [n, N] : cases) {
        const Word w = word_W(n, N, WordVariant::lex);
        if (w.letters.size() > 10) continue;
        const auto cls = oracle::commutation_class(w);
        std::vector<std::vector<GenLabel>> candidates(cls.begin(), cls.end());
        auto perm = w.letters;
        if (perm.size() <= 6) {
            std::sort(perm.begin(), perm.end());
            do candidates.push_back(perm);
            while (std::next_permutation(perm.begin(), perm.end()));
        } else {
            for (int rep = 0; rep < 400; ++rep) {
                std::shuffle(perm.begin(), perm.end(), rng);
                candidates.push_back(perm);
            }
        }
        for (const auto v : {WordVariant::colex, WordVariant::lex_reversed, WordVariant::colex_reversed})
            candidates.push_back(word_W(n, N, v).letters);
        for (const auto& c : candidates) {
            const Word other{n, N, c};
            CHECK(trace_equal(w, other) == (cls.count(c) > 0));
            CHECK(trace_equal(other, w) == trace_equal(w, other));
        }
    }
}

TEST_CASE("apply_move examples and errors") {
    const Word w = make(2, 4, {{1, 4}, {2, 3}});
    CHECK(apply_move(w, {MoveKind::commute, 0}) == make(2, 4, {{2, 3}, {1, 4}}));
    const Word yb = make(2, 3, {{1, 2}, {1, 3}, {2, 3}});
    const Word yb_rev = make(2, 3, {{2, 3}, {1, 3}, {1, 2}});
    CHECK(apply_move(yb, {MoveKind::simplex, 0, {1, 2, 3}, Direction::forward}) == yb_rev);
    CHECK(apply_move(yb_rev, {MoveKind::simplex, 0, {1, 2, 3}, Direction::backward}) == yb);
    const Word te = make(3, 4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
    CHECK(apply_move(te, {MoveKind::simplex, 0, {1, 2, 3, 4}, Direction::forward}) ==
          make(3, 4, {{2, 3, 4}, {1, 3, 4}, {1, 2, 4}, {1, 2, 3}}));
    CHECK(simplex_faces({1, 2, 3}) == std::vector<GenLabel>{{1, 2}, {1, 3}, {2, 3}});

    CHECK_THROWS_AS(apply_move(yb, {MoveKind::commute, 0}), std::invalid_argument);
    CHECK_THROWS_AS(apply_move(yb, {MoveKind::commute, 2}), std::invalid_argument);
    CHECK_THROWS_AS(apply_move(yb_rev, {MoveKind::simplex, 0, {1, 2, 3}, Direction::forward}), std::invalid_argument);
    CHECK_THROWS_AS(apply_move(yb, {MoveKind::simplex, 1, {1, 2, 3}, Direction::forward}), std::invalid_argument);
    CHECK_THROWS_AS(apply_move(yb, {MoveKind::simplex, 0, {1, 2}, Direction::forward}), std::invalid_argument);
    try {
        apply_move(yb, {MoveKind::commute, 0});
        FAIL("expected an error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("commut") != std::string::npos);
    }
}

TEST_CASE("reverse_via_moves replays with one move per tuple") {
    for (int N = 2; N <= 7; ++N)
        for (int n = 1; n < N; ++n) {
            if (binom(N, n) > 40) continue;
            for (const auto s : {Schedule::left, Schedule::right}) {
                const auto t = reverse_via_moves(n, N, s);
                std::string why;
                INFO(n, " ", N);
                CHECK(replay(t, &why));
                CHECK(why.empty());
                CHECK(static_cast<long>(t.simplex_count()) == binom(N, n + 1));
                CHECK(t.semigroup_safe());
                CHECK(t.start == word_W(n, N, WordVariant::lex));
                CHECK(t.end == word_W(n, N, WordVariant::lex_reversed));
                const auto ms = simplex_multiset(t);
                CHECK(ms == subsets(n + 1, N));
            }
        }
    CHECK(reverse_via_moves(3, 5).simplex_count() == 5);
}

TEST_CASE("trace text round trip and corrupted traces") {
    const auto t = reverse_via_moves(2, 5);
    std::stringstream ss;
    write_trace(ss, t);
    const std::string text = ss.str();
    CHECK(text.rfind("2 5 " + std::to_string(t.moves.size()) + "\n", 0) == 0);
    std::istringstream in(text);
    const auto back = read_trace(in);
    CHECK(back.moves == t.moves);
    CHECK(back.start == t.start);
    CHECK(back.end == t.end);
    CHECK(replay(back));

    auto broken = t;
    broken.moves.erase(broken.moves.begin() + static_cast<long>(broken.moves.size() / 2));
    std::string why;
    CHECK_FALSE(replay(broken, &why));
    CHECK_FALSE(why.empty());

    std::istringstream junk("2 5 1\nX 3\n");
    CHECK_THROWS(read_trace(junk));
}

TEST_CASE("omega, eta and the recursion") {
    const Word w24 = word_W(2, 4, WordVariant::lex);
    CHECK(omega_map(w24) == eta_map(word_W(2, 4, WordVariant::colex)));
    CHECK(omega_map(word_W(3, 5, WordVariant::colex)) == eta_map(word_W(3, 5, WordVariant::lex)));
    std::mt19937 rng(2);
    for (int rep = 0; rep < 20; ++rep) {
        Word w = word_W(3, 6, WordVariant::lex);
        std::shuffle(w.letters.begin(), w.letters.end(), rng);
        CHECK(omega_map(omega_map(w)) == w);
        CHECK(eta_map(eta_map(w)) == w);
    }
    CHECK(lift(make(1, 3, {{1}, {3}})) == make(2, 4, {{1, 4}, {3, 4}}));
    for (int N = 2; N <= 6; ++N)
        for (int n = 2; n <= N; ++n) CHECK(check_recursion_Wp(n, N));
}

TEST_CASE("word images in T_N") {
    CHECK(word_image_factors(word_W(2, 3, WordVariant::lex), WordHom::sharp) == T_factors(3));
    CHECK_THROWS(word_image_factors(word_W(3, 4, WordVariant::lex), WordHom::sharp));
    for (const auto& r : verify_lemma2(3, 5)) {
        INFO(r.name);
        CHECK(r.equal);
    }
    for (const auto& c : verify_lemma8(4, 4)) {
        INFO(c.name);
        CHECK(c.pass);
    }
}
