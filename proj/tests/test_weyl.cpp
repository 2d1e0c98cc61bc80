#include "hecke_dft/weyl.hpp"

#include <gtest/gtest.h>

#include <random>
#include <vector>

using namespace hecke_dft;

namespace {

// Oracle: every element of W acts on Z as n -> sign * n + shift; composing
// those affine maps gives the group law without touching the word encoding.
struct Affine {
    long long sign = 1;
    long long shift = 0;
    long long operator()(long long n) const { return sign * n + shift; }
    bool operator==(const Affine&) const = default;
};

Affine compose(const Affine& a, const Affine& b) { return {a.sign * b.sign, a.sign * b.shift + a.shift}; }

Affine affine_of_word(int u_exponent, const std::vector<int>& letters, int M) {
    Affine out;
    for (int g : letters) out = compose(out, g == 1 ? Affine{-1, 0} : Affine{-1, 2LL * M});
    if (u_exponent) out = compose(Affine{-1, M}, out);
    return out;
}

Affine affine_of(const WeylElement& w, int M) {
    const auto [r, word] = w.reduced_word();
    return affine_of_word(r, word, M);
}

WeylElement random_element(std::mt19937_64& rng, int max_length) {
    std::uniform_int_distribution<int> len(0, max_length);
    std::uniform_int_distribution<int> bit(0, 1);
    return {bit(rng), len(rng), bit(rng)};
}

}  // namespace

TEST(WeylLength, Examples) {
    EXPECT_EQ(length(WeylElement::identity()), 0);
    EXPECT_EQ(length(WeylElement(0, 1, 0)), 1);
    EXPECT_EQ(length(WeylElement::from_word(1, {1, 0})), 2);
}

TEST(WeylMultiply, Examples) {
    const auto s1 = WeylElement::s1();
    const auto u = WeylElement::u();
    EXPECT_EQ(multiply(s1, s1), WeylElement::identity());
    EXPECT_EQ(multiply(u, multiply(s1, u)), WeylElement::s0());
    EXPECT_EQ(multiply(WeylElement::from_word(0, {0, 1}), WeylElement::from_word(0, {1, 0})), WeylElement::identity());
}

TEST(WeylAct, Examples) {
    const LatticeConfig cfg(4, 0.5);
    EXPECT_EQ(act(WeylElement::s(), 5, cfg), -5);
    EXPECT_EQ(act(WeylElement::s0(), 5, cfg), 3);
    EXPECT_EQ(act(WeylElement::identity(), 7, cfg), 7);
    EXPECT_EQ(act(WeylElement::u(), 1, cfg), 3);
}

TEST(WeylChamberMap, Examples) {
    const LatticeConfig cfg(4, 0.5);
    EXPECT_EQ(chamber_map(3, cfg), WeylElement::identity());

    const auto w5 = chamber_map(5, cfg);
    EXPECT_EQ(w5, WeylElement::s0());
    EXPECT_EQ(w5.length(), 1);
    EXPECT_EQ(act(w5, 5, cfg), 3);

    const auto wm3 = chamber_map(-3, cfg);
    EXPECT_EQ(wm3, WeylElement::s1());
    EXPECT_EQ(act(wm3, -3, cfg), 3);

    const auto w9 = chamber_map(9, cfg);
    EXPECT_EQ(w9, WeylElement::from_word(0, {1, 0}));
    EXPECT_EQ(w9.length(), 2);
    EXPECT_EQ(act(w9, 9, cfg), 1);
}

TEST(WeylEta, Examples) {
    EXPECT_EQ(eta(WeylElement::identity()), 1);
    EXPECT_EQ(eta(WeylElement::s1()), -1);
    EXPECT_EQ(eta(WeylElement::u()), 1);
    EXPECT_EQ(eta(WeylElement::s0()), 1);
}

TEST(WeylBruhat, Examples) {
    const auto s0s1 = WeylElement::from_word(0, {0, 1});
    EXPECT_TRUE(bruhat_less(WeylElement::s1(), s0s1));
    EXPECT_FALSE(bruhat_less(WeylElement::u(), WeylElement::s1()));
    EXPECT_FALSE(bruhat_less(s0s1, WeylElement::s1()));
}

TEST(WeylEnumerate, Examples) {
    EXPECT_EQ(enumerate_strictly_less(WeylElement::s1()), std::vector<WeylElement>{WeylElement::identity()});
    const std::vector<WeylElement> expected{WeylElement::identity(), WeylElement::s0(), WeylElement::s1()};
    EXPECT_EQ(enumerate_strictly_less(WeylElement::from_word(0, {0, 1})), expected);
    EXPECT_TRUE(enumerate_strictly_less(WeylElement::identity()).empty());
}

TEST(WeylEnumerate, SortedByLengthThenLastGenerator) {
    const auto list = enumerate_strictly_less(WeylElement(1, 5, 0));
    ASSERT_EQ(list.size(), 9u);
    for (std::size_t i = 1; i < list.size(); ++i) {
        const auto key = [](const WeylElement& w) { return std::pair{w.length(), w.last_generator().value_or(-1)}; };
        EXPECT_LT(key(list[i - 1]), key(list[i]));
        EXPECT_EQ(list[i].u_exponent(), 1);
    }
}

TEST(WeylReducedWord, Examples) {
    EXPECT_EQ(WeylElement::from_word(0, {0, 1}).reduced_word(), (std::pair<int, std::vector<int>>{0, {0, 1}}));
    EXPECT_EQ(WeylElement::u().reduced_word(), (std::pair<int, std::vector<int>>{1, {}}));
    EXPECT_EQ(chamber_map(9, 4).reduced_word(), (std::pair<int, std::vector<int>>{0, {1, 0}}));
}

TEST(WeylConfig, RejectsSmallLattice) {
    EXPECT_THROW(LatticeConfig(1, 0.5), std::invalid_argument);
    EXPECT_THROW(LatticeConfig(4, 1.0), std::invalid_argument);
    EXPECT_THROW(LatticeConfig(4, 0.0), std::invalid_argument);
}

TEST(WeylProperties, MultiplyMatchesAffineComposition) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        const auto a = random_element(rng, 8);
        const auto b = random_element(rng, 8);
        for (int M : {2, 3, 5}) EXPECT_EQ(affine_of(a * b, M), compose(affine_of(a, M), affine_of(b, M)));
    }
}

TEST(WeylProperties, FromWordReducesArbitraryWords) {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<int> bit(0, 1);
    std::uniform_int_distribution<int> len(0, 12);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<int> letters(static_cast<std::size_t>(len(rng)));
        for (auto& g : letters) g = bit(rng);
        const int r = bit(rng);
        const auto w = WeylElement::from_word(r, letters);
        EXPECT_EQ(affine_of(w, 4), affine_of_word(r, letters, 4));
    }
}

TEST(WeylProperties, AssociativityOnRandomTriples) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto a = random_element(rng, 6);
        const auto b = random_element(rng, 6);
        const auto c = random_element(rng, 6);
        EXPECT_EQ((a * b) * c, a * (b * c));
    }
}

TEST(WeylProperties, InverseAndActionAgree) {
    for (int r = 0; r <= 1; ++r) {
        for (const auto& w : enumerate_up_to_length(r, 7)) {
            EXPECT_EQ(w * w.inverse(), WeylElement::identity());
            for (long long n = -10; n <= 10; ++n) EXPECT_EQ(w.act(n, 3), affine_of(w, 3)(n));
        }
    }
}

TEST(WeylProperties, EtaFlipsUnderUConjugation) {
    const auto u = WeylElement::u();
    for (int r = 0; r <= 1; ++r) {
        for (const auto& w : enumerate_up_to_length(r, 6)) {
            if (w.length() == 0) continue;
            EXPECT_EQ(eta(u * w * u), -eta(w)) << w.to_string();
        }
    }
}

TEST(WeylProperties, EtaIsLengthDifference) {
    for (int r = 0; r <= 1; ++r) {
        for (const auto& w : enumerate_up_to_length(r, 6)) {
            EXPECT_EQ(eta(w), (w * WeylElement::s1()).length() - w.length());
        }
    }
}

TEST(WeylProperties, ChamberMapIsMinimal) {
    for (int M = 2; M <= 8; ++M) {
        for (long long n = -4LL * M; n <= 4LL * M; ++n) {
            const auto wn = chamber_map(n, M);
            const long long folded = wn.act(n, M);
            ASSERT_GE(folded, 0);
            ASSERT_LE(folded, M);
            EXPECT_EQ(fold_to_alcove(n, M), folded);
            // Exhaustive search: wn is the only W_S element of length <= l(wn) folding n.
            int hits = 0;
            for (const auto& v : enumerate_up_to_length(0, wn.length())) {
                const long long image = v.act(n, M);
                if (image < 0 || image > M) continue;
                EXPECT_GE(v.length(), wn.length()) << "n=" << n << " M=" << M;
                ++hits;
            }
            EXPECT_EQ(hits, 1) << "n=" << n << " M=" << M;
        }
    }
}

TEST(WeylProperties, ReflectedIndexAddsS) {
    for (int M = 2; M <= 8; ++M) {
        for (long long n = -4LL * M; n <= 4LL * M; ++n) {
            if (n == 0) continue;
            const auto expected = chamber_map(n, M) * WeylElement::s();
            EXPECT_EQ(chamber_map(-n, M), expected) << "n=" << n << " M=" << M;
            EXPECT_EQ(chamber_map(-n, M).length(), expected.length());
        }
    }
}
