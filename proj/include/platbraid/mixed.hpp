#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "platbraid/braid.hpp"
#include "platbraid/free_group.hpp"

namespace platbraid {

/// Letter in the mixed braid group B_{g,n}: either a crossing of moving
/// strands sigma_i or a loop generator alpha_r around fixed strand r.
struct MixedLetter {
    enum class Kind { Sigma, Alpha };
    Kind kind = Kind::Sigma;
    int index = 1;
    int sign = +1;

    static MixedLetter sigma(int i, int s = +1) { return MixedLetter{Kind::Sigma, i, s}; }
    static MixedLetter alpha(int r, int s = +1) { return MixedLetter{Kind::Alpha, r, s}; }

    friend bool operator==(const MixedLetter& a, const MixedLetter& b) {
        return a.kind == b.kind && a.index == b.index && a.sign == b.sign;
    }
};

/// Word over {sigma_1..sigma_{n-1}, alpha_1..alpha_g} with declared (g, n).
/// g = 0 degenerates to a plain braid word on n strands.
class MixedBraidWord {
public:
    MixedBraidWord() = default;
    MixedBraidWord(int handle_count, int moving_count, std::vector<MixedLetter> letters = {})
        : g_(handle_count), n_(moving_count), letters_(std::move(letters)) {
        if (g_ < 0) throw std::invalid_argument("MixedBraidWord: handle count must be >= 0");
        if (n_ < 1) throw std::invalid_argument("MixedBraidWord: moving count must be >= 1");
        for (const auto& l : letters_) check_letter(l);
    }

    int handle_count() const { return g_; }
    int moving_count() const { return n_; }
    const std::vector<MixedLetter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }

    void push_back(MixedLetter l) {
        check_letter(l);
        letters_.push_back(l);
    }

    /// Same letters over a larger strand set (inclusion B_{g,n} -> B_{g,n'}).
    MixedBraidWord with_moving_count(int n) const {
        if (n < n_) throw std::invalid_argument("with_moving_count: cannot shrink");
        return MixedBraidWord(g_, n, letters_);
    }

    friend bool operator==(const MixedBraidWord& a, const MixedBraidWord& b) {
        return a.g_ == b.g_ && a.n_ == b.n_ && a.letters_ == b.letters_;
    }

private:
    void check_letter(const MixedLetter& l) const {
        if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("MixedBraidWord: bad sign");
        if (l.kind == MixedLetter::Kind::Sigma) {
            if (l.index < 1 || l.index > n_ - 1)
                throw std::invalid_argument("MixedBraidWord: sigma index out of range");
        } else {
            if (l.index < 1 || l.index > g_)
                throw std::invalid_argument("MixedBraidWord: alpha index out of range");
        }
    }

    int g_ = 0;
    int n_ = 1;
    std::vector<MixedLetter> letters_;
};

inline MixedBraidWord reduce(const MixedBraidWord& w) {
    std::vector<MixedLetter> out;
    out.reserve(w.size());
    for (const auto& l : w.letters()) {
        if (!out.empty() && out.back().kind == l.kind && out.back().index == l.index &&
            out.back().sign == -l.sign)
            out.pop_back();
        else
            out.push_back(l);
    }
    return MixedBraidWord(w.handle_count(), w.moving_count(), std::move(out));
}

inline MixedBraidWord compose(const MixedBraidWord& a, const MixedBraidWord& b) {
    if (a.handle_count() != b.handle_count() || a.moving_count() != b.moving_count())
        throw std::invalid_argument("compose: (g, n) mismatch");
    std::vector<MixedLetter> all = a.letters();
    all.insert(all.end(), b.letters().begin(), b.letters().end());
    return reduce(MixedBraidWord(a.handle_count(), a.moving_count(), std::move(all)));
}

inline MixedBraidWord inverse(const MixedBraidWord& w) {
    std::vector<MixedLetter> out;
    out.reserve(w.size());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
        out.push_back(MixedLetter{it->kind, it->index, -it->sign});
    return MixedBraidWord(w.handle_count(), w.moving_count(), std::move(out));
}

/// Embedding B_{g,n} -> B_{g+n}. Sigma(i, s) becomes sigma_{g+i}^s; Alpha(r, s)
/// becomes the band word (sigma_g ... sigma_{r+1}) sigma_r^{2s} (sigma_{r+1}^{-1} ... sigma_g^{-1}):
/// the first moving strand dives under the fixed strands right of r, winds
/// around strand r, and comes back out.
inline BraidWord embed(const MixedBraidWord& w) {
    const int g = w.handle_count();
    const int m = g + w.moving_count();
    BraidWord out(m);
    for (const auto& l : w.letters()) {
        if (l.kind == MixedLetter::Kind::Sigma) {
            out.push_back(g + l.index, l.sign);
        } else {
            const int r = l.index;
            for (int k = g; k > r; --k) out.push_back(k, +1);
            out.push_back(r, l.sign);
            out.push_back(r, l.sign);
            for (int k = r + 1; k <= g; ++k) out.push_back(k, -1);
        }
    }
    return reduce(out);
}

/// Equality in B_{g,n}, decided through the embedding and the free-group oracle.
inline bool mixed_words_equal(const MixedBraidWord& a, const MixedBraidWord& b,
                              std::size_t cap = oracle_cap()) {
    if (a.handle_count() != b.handle_count() || a.moving_count() != b.moving_count())
        throw std::invalid_argument("mixed_words_equal: (g, n) mismatch");
    return words_equal(embed(a), embed(b), cap);
}

/// Signed count of Alpha(r, .) letters, entry per handle. Invariant under the
/// presentation relations; a cheap filter on open words.
inline std::vector<int> alpha_exponent_vector(const MixedBraidWord& w) {
    std::vector<int> v(static_cast<std::size_t>(w.handle_count()), 0);
    for (const auto& l : w.letters())
        if (l.kind == MixedLetter::Kind::Alpha) v[static_cast<std::size_t>(l.index - 1)] += l.sign;
    return v;
}

/// Permutation induced on the moving strands (alpha letters act trivially).
inline Permutation moving_permutation(const MixedBraidWord& w) {
    BraidWord plain(w.moving_count());
    for (const auto& l : w.letters())
        if (l.kind == MixedLetter::Kind::Sigma) plain.push_back(l.index, l.sign);
    return permutation(plain);
}

/// One instance of a defining relation of the presentation of B_{g,n}.
struct RelationInstance {
    enum class Family {
        SigmaFarComm,   // sigma_k sigma_j = sigma_j sigma_k, |k-j| > 1
        SigmaBraid,     // sigma_k sigma_{k+1} sigma_k = sigma_{k+1} sigma_k sigma_{k+1}
        AlphaSigmaComm, // alpha_r sigma_k = sigma_k alpha_r, k >= 2
        AlphaTwist,     // alpha_r sigma_1 alpha_r sigma_1 = sigma_1 alpha_r sigma_1 alpha_r
        AlphaConjComm,  // alpha_r (sigma_1 alpha_s sigma_1^{-1}) = (sigma_1 alpha_s sigma_1^{-1}) alpha_r, s < r
    };
    Family family;
    std::vector<int> indices;
    MixedBraidWord left;
    MixedBraidWord right;
};

inline const char* family_name(RelationInstance::Family f) {
    switch (f) {
        case RelationInstance::Family::SigmaFarComm: return "far-commutation";
        case RelationInstance::Family::SigmaBraid: return "braid";
        case RelationInstance::Family::AlphaSigmaComm: return "loop-commutation";
        case RelationInstance::Family::AlphaTwist: return "loop-twist";
        case RelationInstance::Family::AlphaConjComm: return "loop-conjugate-commutation";
    }
    return "?";
}

/// Every instance of the five relation families over valid index ranges.
inline std::vector<RelationInstance> relation_instances(int g, int n) {
    if (g < 0 || n < 2) throw std::invalid_argument("relation_instances: need g >= 0, n >= 2");
    using K = MixedLetter;
    std::vector<RelationInstance> out;
    auto word = [&](std::vector<MixedLetter> ls) { return MixedBraidWord(g, n, std::move(ls)); };

    for (int j = 1; j <= n - 1; ++j)
        for (int k = j + 2; k <= n - 1; ++k)
            out.push_back({RelationInstance::Family::SigmaFarComm,
                           {k, j},
                           word({K::sigma(k), K::sigma(j)}),
                           word({K::sigma(j), K::sigma(k)})});

    for (int k = 1; k <= n - 2; ++k)
        out.push_back({RelationInstance::Family::SigmaBraid,
                       {k},
                       word({K::sigma(k), K::sigma(k + 1), K::sigma(k)}),
                       word({K::sigma(k + 1), K::sigma(k), K::sigma(k + 1)})});

    for (int r = 1; r <= g; ++r)
        for (int k = 2; k <= n - 1; ++k)
            out.push_back({RelationInstance::Family::AlphaSigmaComm,
                           {r, k},
                           word({K::alpha(r), K::sigma(k)}),
                           word({K::sigma(k), K::alpha(r)})});

    for (int r = 1; r <= g; ++r)
        out.push_back({RelationInstance::Family::AlphaTwist,
                       {r},
                       word({K::alpha(r), K::sigma(1), K::alpha(r), K::sigma(1)}),
                       word({K::sigma(1), K::alpha(r), K::sigma(1), K::alpha(r)})});

    for (int r = 1; r <= g; ++r)
        for (int s = 1; s < r; ++s)
            out.push_back({RelationInstance::Family::AlphaConjComm,
                           {r, s},
                           word({K::alpha(r), K::sigma(1), K::alpha(s), K::sigma(1, -1)}),
                           word({K::sigma(1), K::alpha(s), K::sigma(1, -1), K::alpha(r)})});

    return out;
}

}  // namespace platbraid
