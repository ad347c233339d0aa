#include <catch2/catch_amalgamated.hpp>

#include "platbraid/mixed.hpp"
#include "platbraid/rng.hpp"

using namespace platbraid;
using K = MixedLetter;

namespace {

MixedBraidWord random_mixed(Rng& rng, int g, int n, int len) {
    MixedBraidWord w(g, n);
    for (int k = 0; k < len; ++k) {
        const bool sigma = g == 0 || (n >= 2 && rng.chance(0.6));
        if (sigma && n >= 2)
            w.push_back(K::sigma(rng.range(1, n - 1), rng.sign()));
        else
            w.push_back(K::alpha(rng.range(1, g), rng.sign()));
    }
    return w;
}

}  // namespace

TEST_CASE("embed maps sigma by index shift") {
    MixedBraidWord w(0, 3, {K::sigma(1), K::sigma(2, -1)});
    const auto e = embed(w);
    CHECK(e.strand_count() == 3);
    CHECK(e.letters() == std::vector<BraidLetter>{{1, +1}, {2, -1}});
}

TEST_CASE("embed alpha band words") {
    // g=1, n=1: alpha_1 -> sigma_1^2 in B_2
    const auto e1 = embed(MixedBraidWord(1, 1, {K::alpha(1)}));
    CHECK(e1.strand_count() == 2);
    CHECK(e1.letters() == std::vector<BraidLetter>{{1, +1}, {1, +1}});

    // g=2, n=2: alpha_1 -> sigma_2 sigma_1^2 sigma_2^{-1} in B_4
    const auto e2 = embed(MixedBraidWord(2, 2, {K::alpha(1)}));
    CHECK(e2.strand_count() == 4);
    CHECK(e2.letters() == std::vector<BraidLetter>{{2, +1}, {1, +1}, {1, +1}, {2, -1}});
}

TEST_CASE("embedded fixed subbraid is trivial") {
    Rng rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        const int g = rng.range(1, 3);
        const int n = rng.range(1, 4);
        const auto w = random_mixed(rng, g, n, rng.range(0, 30));
        std::set<int> fixed;
        for (int r = 1; r <= g; ++r) fixed.insert(r);
        CHECK(delete_strands(embed(w), fixed).empty());
    }
}

TEST_CASE("relation instance enumeration") {
    const auto r03 = relation_instances(0, 3);
    REQUIRE(r03.size() == 1);
    CHECK(r03[0].family == RelationInstance::Family::SigmaBraid);

    const auto r12 = relation_instances(1, 2);
    bool has_twist = false;
    for (const auto& rel : r12)
        if (rel.family == RelationInstance::Family::AlphaTwist && rel.indices == std::vector<int>{1})
            has_twist = true;
    CHECK(has_twist);

    const auto r22 = relation_instances(2, 2);
    bool has_conj = false;
    for (const auto& rel : r22)
        if (rel.family == RelationInstance::Family::AlphaConjComm &&
            rel.indices == std::vector<int>{2, 1})
            has_conj = true;
    CHECK(has_conj);
}

TEST_CASE("all presentation relations hold under embed + oracle") {
    for (int g = 0; g <= 3; ++g)
        for (int n = 2; n <= 4; ++n)
            for (const auto& rel : relation_instances(g, n)) {
                INFO(family_name(rel.family) << " g=" << g << " n=" << n);
                CHECK(mixed_words_equal(rel.left, rel.right));
            }
}

TEST_CASE("mixed word equality") {
    // alpha_1 sigma_2 = sigma_2 alpha_1 at g=1, n=3
    CHECK(mixed_words_equal(MixedBraidWord(1, 3, {K::alpha(1), K::sigma(2)}),
                            MixedBraidWord(1, 3, {K::sigma(2), K::alpha(1)})));
    CHECK_FALSE(mixed_words_equal(MixedBraidWord(1, 1, {K::alpha(1)}),
                                  MixedBraidWord(1, 1, {K::alpha(1, -1)})));
}

TEST_CASE("alpha exponent vector") {
    CHECK(alpha_exponent_vector(MixedBraidWord(2, 2)) == std::vector<int>{0, 0});
    CHECK(alpha_exponent_vector(MixedBraidWord(
              2, 2, {K::alpha(2), K::alpha(2), K::alpha(1, -1)})) == std::vector<int>{-1, 2});
    for (const auto& rel : relation_instances(3, 3))
        CHECK(alpha_exponent_vector(rel.left) == alpha_exponent_vector(rel.right));
}

TEST_CASE("alpha vector separates embed images on the test corpus") {
    Rng rng(4);
    for (int trial = 0; trial < 25; ++trial) {
        const int g = rng.range(1, 3);
        const int n = rng.range(1, 3);
        const auto a = random_mixed(rng, g, n, rng.range(0, 12));
        const auto b = random_mixed(rng, g, n, rng.range(0, 12));
        if (alpha_exponent_vector(a) != alpha_exponent_vector(b))
            CHECK_FALSE(mixed_words_equal(a, b));
    }
}

TEST_CASE("alpha vector invariant under relation rewrites") {
    Rng rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        const int g = rng.range(1, 3);
        const int n = rng.range(2, 4);
        auto w = random_mixed(rng, g, n, rng.range(4, 16));
        const auto before = alpha_exponent_vector(w);
        // splice a random relation's left/right pair into the word
        const auto rels = relation_instances(g, n);
        const auto& rel = rels[static_cast<std::size_t>(rng.below(rels.size()))];
        std::vector<MixedLetter> ls = w.letters();
        const auto at = static_cast<std::ptrdiff_t>(rng.below(ls.size() + 1));
        std::vector<MixedLetter> ins = rel.left.letters();
        const auto rinv = inverse(rel.right);
        ins.insert(ins.end(), rinv.letters().begin(), rinv.letters().end());
        ls.insert(ls.begin() + at, ins.begin(), ins.end());
        CHECK(alpha_exponent_vector(MixedBraidWord(g, n, ls)) == before);
    }
}
