#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace platbraid {

/// One Artin generator letter: sigma_{index}^{sign}, 1 <= index <= m-1.
struct BraidLetter {
    int index = 1;
    int sign = +1;

    friend bool operator==(const BraidLetter& a, const BraidLetter& b) {
        return a.index == b.index && a.sign == b.sign;
    }
};

/// A word in the Artin braid group B_m. Letters are kept as written;
/// call reduce() for free reduction (braid relations are never applied here,
/// equality in the group is decided by the free-group oracle).
class BraidWord {
public:
    BraidWord() = default;
    explicit BraidWord(int strand_count, std::vector<BraidLetter> letters = {})
        : strand_count_(strand_count), letters_(std::move(letters)) {
        if (strand_count_ < 1) throw std::invalid_argument("BraidWord: strand count must be >= 1");
        for (const auto& l : letters_) check_letter(l);
    }

    int strand_count() const { return strand_count_; }
    const std::vector<BraidLetter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }

    void push_back(BraidLetter l) {
        check_letter(l);
        letters_.push_back(l);
    }
    void push_back(int index, int sign) { push_back(BraidLetter{index, sign}); }

    friend bool operator==(const BraidWord& a, const BraidWord& b) {
        return a.strand_count_ == b.strand_count_ && a.letters_ == b.letters_;
    }

private:
    void check_letter(const BraidLetter& l) const {
        if (l.index < 1 || l.index > strand_count_ - 1)
            throw std::invalid_argument("BraidWord: generator index out of range");
        if (l.sign != 1 && l.sign != -1)
            throw std::invalid_argument("BraidWord: sign must be +1 or -1");
    }

    int strand_count_ = 1;
    std::vector<BraidLetter> letters_;
};

/// Bijection on {1..m}; images[i-1] is where top position i lands at the bottom.
struct Permutation {
    std::vector<int> images;

    int size() const { return static_cast<int>(images.size()); }
    int operator()(int i) const { return images[static_cast<std::size_t>(i - 1)]; }

    static Permutation identity(int m) {
        Permutation p;
        p.images.resize(static_cast<std::size_t>(m));
        for (int i = 1; i <= m; ++i) p.images[static_cast<std::size_t>(i - 1)] = i;
        return p;
    }

    bool is_identity() const {
        for (int i = 1; i <= size(); ++i)
            if ((*this)(i) != i) return false;
        return true;
    }

    Permutation inverse() const {
        Permutation p = identity(size());
        for (int i = 1; i <= size(); ++i) p.images[static_cast<std::size_t>((*this)(i)-1)] = i;
        return p;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.images == b.images; }
};

/// Free reduction: cancel adjacent sigma_i^{+1} sigma_i^{-1} pairs to fixpoint.
inline BraidWord reduce(const BraidWord& w) {
    std::vector<BraidLetter> out;
    out.reserve(w.size());
    for (const auto& l : w.letters()) {
        if (!out.empty() && out.back().index == l.index && out.back().sign == -l.sign)
            out.pop_back();
        else
            out.push_back(l);
    }
    return BraidWord(w.strand_count(), std::move(out));
}

/// Product a * b (a performed first, reading top to bottom), freely reduced.
inline BraidWord compose(const BraidWord& a, const BraidWord& b) {
    if (a.strand_count() != b.strand_count())
        throw std::invalid_argument("compose: strand count mismatch");
    std::vector<BraidLetter> all = a.letters();
    all.insert(all.end(), b.letters().begin(), b.letters().end());
    return reduce(BraidWord(a.strand_count(), std::move(all)));
}

inline BraidWord inverse(const BraidWord& w) {
    std::vector<BraidLetter> out;
    out.reserve(w.size());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
        out.push_back(BraidLetter{it->index, -it->sign});
    return BraidWord(w.strand_count(), std::move(out));
}

/// Strand tracing top to bottom; letter (i, s) transposes positions i, i+1.
inline Permutation permutation(const BraidWord& w) {
    const int m = w.strand_count();
    // pos[s-1] = current position of the strand that started at top position s
    std::vector<int> pos(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) pos[static_cast<std::size_t>(i)] = i + 1;
    std::vector<int> at(static_cast<std::size_t>(m));  // at[p-1] = strand currently at position p
    for (int i = 0; i < m; ++i) at[static_cast<std::size_t>(i)] = i + 1;
    for (const auto& l : w.letters()) {
        const int p = l.index;
        const int s1 = at[static_cast<std::size_t>(p - 1)];
        const int s2 = at[static_cast<std::size_t>(p)];
        std::swap(at[static_cast<std::size_t>(p - 1)], at[static_cast<std::size_t>(p)]);
        pos[static_cast<std::size_t>(s1 - 1)] = p + 1;
        pos[static_cast<std::size_t>(s2 - 1)] = p;
    }
    Permutation perm;
    perm.images = pos;
    return perm;
}

/// Subbraid on the kept strands (identified by top position); every crossing
/// touching a deleted strand is dropped, kept positions renumber order-preservingly.
inline BraidWord delete_strands(const BraidWord& w, const std::set<int>& keep) {
    const int m = w.strand_count();
    if (keep.empty()) throw std::invalid_argument("delete_strands: keep set must be nonempty");
    for (int s : keep)
        if (s < 1 || s > m) throw std::invalid_argument("delete_strands: strand id out of range");

    std::vector<int> at(static_cast<std::size_t>(m));
    std::vector<bool> kept(static_cast<std::size_t>(m) + 1, false);
    for (int s : keep) kept[static_cast<std::size_t>(s)] = true;
    for (int i = 0; i < m; ++i) at[static_cast<std::size_t>(i)] = i + 1;

    BraidWord out(static_cast<int>(keep.size()));
    for (const auto& l : w.letters()) {
        const int p = l.index;
        const int a = at[static_cast<std::size_t>(p - 1)];
        const int b = at[static_cast<std::size_t>(p)];
        if (kept[static_cast<std::size_t>(a)] && kept[static_cast<std::size_t>(b)]) {
            // rank of position p among positions currently holding kept strands
            int r = 0;
            for (int q = 1; q <= p; ++q)
                if (kept[static_cast<std::size_t>(at[static_cast<std::size_t>(q - 1)])]) ++r;
            out.push_back(r, l.sign);
        }
        std::swap(at[static_cast<std::size_t>(p - 1)], at[static_cast<std::size_t>(p)]);
    }
    return reduce(out);
}

}  // namespace platbraid
