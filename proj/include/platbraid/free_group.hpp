#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "platbraid/braid.hpp"

namespace platbraid {

/// Thrown when free-group images outgrow the configured letter budget.
/// The oracle never returns a wrong answer; it fails loudly instead.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(std::size_t cap)
        : std::runtime_error("free-group oracle budget exhausted (cap " + std::to_string(cap) + " letters)") {}
};

/// Default total-letter budget for oracle images. Overridable via the
/// PLATBRAID_ORACLE_CAP environment variable.
inline std::size_t oracle_cap() {
    static const std::size_t cap = [] {
        if (const char* env = std::getenv("PLATBRAID_ORACLE_CAP")) {
            const long long v = std::atoll(env);
            if (v > 0) return static_cast<std::size_t>(v);
        }
        return static_cast<std::size_t>(1000000);
    }();
    return cap;
}

/// Freely reduced word in F_rank, stored as run-length (generator, exponent) blocks.
class FreeWord {
public:
    struct Block {
        int gen;  // 1-based free generator index
        int exp;  // nonzero
        friend bool operator==(const Block& a, const Block& b) { return a.gen == b.gen && a.exp == b.exp; }
    };

    FreeWord() = default;

    static FreeWord generator(int g, int e = 1) {
        FreeWord w;
        if (e != 0) w.blocks_.push_back(Block{g, e});
        w.total_ = static_cast<std::size_t>(e < 0 ? -e : e);
        return w;
    }

    const std::vector<Block>& blocks() const { return blocks_; }
    bool is_identity() const { return blocks_.empty(); }
    std::size_t letter_count() const { return total_; }

    /// Append gen^exp with cancellation against the tail. A merge never
    /// cascades: the block before the tail has a different generator.
    void append(int gen, int exp) {
        if (exp == 0) return;
        if (!blocks_.empty() && blocks_.back().gen == gen) {
            Block& back = blocks_.back();
            total_ -= absval(back.exp);
            const long long merged = static_cast<long long>(back.exp) + exp;
            if (merged == 0) {
                blocks_.pop_back();
            } else {
                back.exp = static_cast<int>(merged);
                total_ += absval(back.exp);
            }
            return;
        }
        blocks_.push_back(Block{gen, exp});
        total_ += absval(exp);
    }

    void append(const FreeWord& w) {
        for (const auto& b : w.blocks_) append(b.gen, b.exp);
    }

    void append_inverse(const FreeWord& w) {
        for (auto it = w.blocks_.rbegin(); it != w.blocks_.rend(); ++it) append(it->gen, -it->exp);
    }

    FreeWord inverse() const {
        FreeWord w;
        w.append_inverse(*this);
        return w;
    }

    friend bool operator==(const FreeWord& a, const FreeWord& b) { return a.blocks_ == b.blocks_; }

private:
    static std::size_t absval(int v) { return static_cast<std::size_t>(v < 0 ? -v : v); }

    std::vector<Block> blocks_;
    std::size_t total_ = 0;
};

/// An automorphism of F_rank given by the images of the free generators,
/// all freely reduced. Acts as the exact word-problem oracle for B_m.
class FreeGroupAutomorphism {
public:
    explicit FreeGroupAutomorphism(int rank) : images_() {
        images_.reserve(static_cast<std::size_t>(rank));
        for (int g = 1; g <= rank; ++g) images_.push_back(FreeWord::generator(g));
    }

    int rank() const { return static_cast<int>(images_.size()); }
    const FreeWord& image(int g) const { return images_[static_cast<std::size_t>(g - 1)]; }
    const std::vector<FreeWord>& images() const { return images_; }

    bool is_identity() const {
        for (int g = 1; g <= rank(); ++g) {
            const auto& blocks = image(g).blocks();
            if (blocks.size() != 1 || blocks[0].gen != g || blocks[0].exp != 1) return false;
        }
        return true;
    }

    std::size_t total_letters() const {
        std::size_t total = 0;
        for (const auto& w : images_) total += w.letter_count();
        return total;
    }

    /// Post-compose with the elementary substitution of one braid letter:
    /// sigma_i  : x_i -> x_i x_{i+1} x_i^{-1}, x_{i+1} -> x_i
    /// sigma_i^-: x_i -> x_{i+1},              x_{i+1} -> x_{i+1}^{-1} x_i x_{i+1}
    /// The stored images get every occurrence of x_i, x_{i+1} rewritten.
    void apply_letter(const BraidLetter& l, std::size_t cap = oracle_cap()) {
        const int i = l.index;
        for (auto& img : images_) {
            bool touched = false;
            for (const auto& b : img.blocks())
                if (b.gen == i || b.gen == i + 1) { touched = true; break; }
            if (!touched) continue;
            FreeWord out;
            for (const auto& b : img.blocks()) {
                if (b.gen != i && b.gen != i + 1) {
                    out.append(b.gen, b.exp);
                    continue;
                }
                const int reps = b.exp < 0 ? -b.exp : b.exp;
                const int dir = b.exp < 0 ? -1 : +1;
                for (int k = 0; k < reps; ++k) {
                    if (l.sign > 0) {
                        if (b.gen == i) {
                            // x_i^{±1} -> (x_i x_{i+1} x_i^{-1})^{±1}
                            if (dir > 0) { out.append(i, 1); out.append(i + 1, 1); out.append(i, -1); }
                            else         { out.append(i, 1); out.append(i + 1, -1); out.append(i, -1); }
                        } else {
                            out.append(i, dir);
                        }
                    } else {
                        if (b.gen == i) {
                            out.append(i + 1, dir);
                        } else {
                            // x_{i+1}^{±1} -> (x_{i+1}^{-1} x_i x_{i+1})^{±1}
                            if (dir > 0) { out.append(i + 1, -1); out.append(i, 1); out.append(i + 1, 1); }
                            else         { out.append(i + 1, -1); out.append(i, -1); out.append(i + 1, 1); }
                        }
                    }
                }
                if (out.letter_count() > cap) throw BudgetExceeded(cap);
            }
            img = std::move(out);
        }
        std::size_t total = 0;
        for (const auto& w : images_) {
            total += w.letter_count();
            if (total > cap) throw BudgetExceeded(cap);
        }
    }

    void apply_word(const BraidWord& w, std::size_t cap = oracle_cap()) {
        for (const auto& l : w.letters()) apply_letter(l, cap);
    }

    friend bool operator==(const FreeGroupAutomorphism& a, const FreeGroupAutomorphism& b) {
        return a.images_ == b.images_;
    }

    /// 128-bit content hash, used as a canonical search key. Equality of
    /// group elements is always confirmed by the full oracle before use.
    std::pair<std::uint64_t, std::uint64_t> hash128() const {
        std::uint64_t h1 = 0x9e3779b97f4a7c15ull, h2 = 0xbf58476d1ce4e5b9ull;
        auto mix = [](std::uint64_t& h, std::uint64_t v) {
            h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdull;
            h ^= h >> 33;
        };
        for (const auto& img : images_) {
            mix(h1, 0x1234567955555555ull);
            mix(h2, 0xabcdef0133333333ull);
            for (const auto& b : img.blocks()) {
                const auto packed =
                    (static_cast<std::uint64_t>(static_cast<std::uint32_t>(b.gen)) << 32) |
                    static_cast<std::uint64_t>(static_cast<std::uint32_t>(b.exp));
                mix(h1, packed);
                mix(h2, ~packed);
            }
        }
        return {h1, h2};
    }

private:
    std::vector<FreeWord> images_;
};

/// The faithful action of B_m on F_m, composed letter by letter.
inline FreeGroupAutomorphism artin_action(const BraidWord& w, std::size_t cap = oracle_cap()) {
    FreeGroupAutomorphism phi(w.strand_count());
    phi.apply_word(w, cap);
    return phi;
}

/// Exact word problem for B_m. Never wrong; throws BudgetExceeded if the
/// image words outgrow the cap.
inline bool words_equal(const BraidWord& a, const BraidWord& b, std::size_t cap = oracle_cap()) {
    if (a.strand_count() != b.strand_count())
        throw std::invalid_argument("words_equal: strand count mismatch");
    return artin_action(a, cap) == artin_action(b, cap);
}

inline bool is_trivial(const BraidWord& w, std::size_t cap = oracle_cap()) {
    return artin_action(w, cap).is_identity();
}

}  // namespace platbraid
