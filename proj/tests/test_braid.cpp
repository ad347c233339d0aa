#include <catch2/catch_amalgamated.hpp>

#include "platbraid/braid.hpp"
#include "platbraid/free_group.hpp"
#include "platbraid/rng.hpp"

using namespace platbraid;

namespace {

BraidWord word_of(int m, std::initializer_list<std::pair<int, int>> ls) {
    BraidWord w(m);
    for (auto [i, s] : ls) w.push_back(i, s);
    return w;
}

BraidWord random_word(Rng& rng, int m, int len) {
    BraidWord w(m);
    for (int k = 0; k < len; ++k) w.push_back(rng.range(1, m - 1), rng.sign());
    return w;
}

}  // namespace

TEST_CASE("free reduction") {
    CHECK(reduce(word_of(2, {{1, +1}, {1, -1}})).empty());
    CHECK(reduce(BraidWord(5)).empty());
    const auto w = word_of(3, {{1, +1}, {2, +1}, {1, +1}});
    CHECK(reduce(w) == w);  // braid relations are not free cancellations
    // nested cancellation to fixpoint
    CHECK(reduce(word_of(3, {{1, +1}, {2, +1}, {2, -1}, {1, -1}})).empty());
}

TEST_CASE("compose") {
    Rng rng(7);
    const auto w = random_word(rng, 4, 12);
    CHECK(compose(w, inverse(w)).empty());
    CHECK(compose(w, BraidWord(4)) == reduce(w));
    CHECK(compose(word_of(3, {{1, +1}}), word_of(3, {{2, +1}})) ==
          word_of(3, {{1, +1}, {2, +1}}));
    CHECK_THROWS_AS(compose(BraidWord(3), BraidWord(4)), std::invalid_argument);
}

TEST_CASE("permutation tracing") {
    CHECK(permutation(BraidWord(4)).is_identity());
    const auto p = permutation(word_of(2, {{1, +1}}));
    CHECK(p(1) == 2);
    CHECK(p(2) == 1);
    // s1 s2: strand 1 crosses at s1 (pos 1 -> 2) then s2 (pos 2 -> 3)
    const auto q = permutation(word_of(3, {{1, +1}, {2, +1}}));
    CHECK(q(1) == 3);
    CHECK(q(2) == 1);
    CHECK(q(3) == 2);
}

TEST_CASE("artin action convention") {
    // single positive letter: x_i -> x_i x_{i+1} x_i^{-1}, x_{i+1} -> x_i
    const auto phi = artin_action(word_of(3, {{1, +1}}));
    CHECK(phi.image(1).blocks() ==
          std::vector<FreeWord::Block>{{1, 1}, {2, 1}, {1, -1}});
    CHECK(phi.image(2).blocks() == std::vector<FreeWord::Block>{{1, 1}});
    CHECK(phi.image(3).blocks() == std::vector<FreeWord::Block>{{3, 1}});

    CHECK(artin_action(BraidWord(5)).is_identity());
    Rng rng(21);
    const auto w = random_word(rng, 5, 20);
    CHECK(is_trivial(compose(w, inverse(w))));
}

TEST_CASE("artin action is a homomorphism") {
    Rng rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const int m = rng.range(2, 8);
        const auto a = random_word(rng, m, rng.range(0, 40));
        const auto b = random_word(rng, m, rng.range(0, 40));
        auto phi = artin_action(a);
        phi.apply_word(b);
        CHECK(phi == artin_action(compose(a, b)));
    }
}

TEST_CASE("word problem oracle") {
    // braid relation
    CHECK(words_equal(word_of(3, {{1, +1}, {2, +1}, {1, +1}}),
                      word_of(3, {{2, +1}, {1, +1}, {2, +1}})));
    // far commutation
    CHECK(words_equal(word_of(4, {{1, +1}, {3, +1}}), word_of(4, {{3, +1}, {1, +1}})));
    // distinct elements with equal permutation are told apart
    CHECK_FALSE(words_equal(word_of(2, {{1, +1}}), word_of(2, {{1, -1}})));
}

TEST_CASE("defining relations act trivially for all m <= 8") {
    for (int m = 2; m <= 8; ++m) {
        for (int i = 1; i <= m - 2; ++i) {
            BraidWord rel(m);
            rel.push_back(i, +1);
            rel.push_back(i + 1, +1);
            rel.push_back(i, +1);
            rel.push_back(i + 1, -1);
            rel.push_back(i, -1);
            rel.push_back(i + 1, -1);
            CHECK(is_trivial(rel));
        }
        for (int i = 1; i <= m - 1; ++i)
            for (int j = i + 2; j <= m - 1; ++j) {
                BraidWord rel(m);
                rel.push_back(i, +1);
                rel.push_back(j, +1);
                rel.push_back(i, -1);
                rel.push_back(j, -1);
                CHECK(is_trivial(rel));
            }
    }
}

TEST_CASE("permutation matches abelianized action support") {
    Rng rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        const int m = rng.range(2, 8);
        const auto w = random_word(rng, m, rng.range(0, 30));
        const auto phi = artin_action(w);
        const auto perm = permutation(w);
        for (int jj = 1; jj <= m; ++jj) {
            std::vector<int> expsum(static_cast<std::size_t>(m) + 1, 0);
            for (const auto& b : phi.image(jj).blocks()) expsum[static_cast<std::size_t>(b.gen)] += b.exp;
            int target = 0;
            for (int k = 1; k <= m; ++k) {
                if (expsum[static_cast<std::size_t>(k)] == 0) continue;
                CHECK(std::abs(expsum[static_cast<std::size_t>(k)]) == 1);
                CHECK(target == 0);
                target = k;
            }
            REQUIRE(target != 0);
            CHECK(perm(jj) == target);
        }
    }
}

TEST_CASE("oracle budget is enforced loudly") {
    // sigma_1^k images grow linearly; a tiny cap must trip
    BraidWord w(3);
    for (int k = 0; k < 200; ++k) w.push_back(1, +1);
    CHECK_THROWS_AS(artin_action(w, 50), BudgetExceeded);
}

TEST_CASE("delete_strands") {
    Rng rng(11);
    const auto w = random_word(rng, 5, 15);
    std::set<int> all{1, 2, 3, 4, 5};
    CHECK(delete_strands(w, all) == reduce(w));
    CHECK(delete_strands(BraidWord(6), {2, 4, 6}).empty());

    // m=3, word s1 s2, keep top positions {1,3}: trace the crossings by hand.
    // s1 crosses strands (1,2): dropped. s2 crosses strands (1,3) at positions
    // (2,3): both kept -> one crossing on 2 strands.
    const auto sub = delete_strands(word_of(3, {{1, +1}, {2, +1}}), {1, 3});
    CHECK(sub.strand_count() == 2);
    REQUIRE(sub.size() == 1);
    CHECK(sub.letters()[0] == BraidLetter{1, +1});
}

TEST_CASE("delete_strands agrees with brute-force pair tracer") {
    Rng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const int m = rng.range(3, 7);
        const auto w = random_word(rng, m, rng.range(0, 20));
        const int keep_a = rng.range(1, m - 1);
        const int keep_b = rng.range(keep_a + 1, m);
        const auto sub = delete_strands(w, {keep_a, keep_b});

        // oracle: trace positions, record crossings involving both kept strands
        std::vector<int> at(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) at[static_cast<std::size_t>(i)] = i + 1;
        BraidWord expect(2);
        for (const auto& l : w.letters()) {
            const int a = at[static_cast<std::size_t>(l.index - 1)];
            const int b = at[static_cast<std::size_t>(l.index)];
            const bool a_in = (a == keep_a || a == keep_b);
            const bool b_in = (b == keep_a || b == keep_b);
            if (a_in && b_in) expect.push_back(1, l.sign);
            std::swap(at[static_cast<std::size_t>(l.index - 1)], at[static_cast<std::size_t>(l.index)]);
        }
        CHECK(sub == reduce(expect));
    }
}
