#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "platbraid/mixed.hpp"

namespace platbraid {

enum class Label { Over, Under };

/// Over/under choices for the n top and n bottom closure arcs of a plat
/// over 2n moving strands. Only meaningful while arcs can straddle fixed
/// strands; irrelevant once a plat is algebraic.
struct ClosureLabels {
    std::vector<Label> top;
    std::vector<Label> bottom;

    static ClosureLabels uniform(int n, Label l) {
        return ClosureLabels{std::vector<Label>(static_cast<std::size_t>(n), l),
                             std::vector<Label>(static_cast<std::size_t>(n), l)};
    }

    friend bool operator==(const ClosureLabels& a, const ClosureLabels& b) {
        return a.top == b.top && a.bottom == b.bottom;
    }
};

enum class PlatKind { Algebraic, Geometric };

/// A mixed braid word with even moving strand count, read as a link in H_g
/// via plat closure. Geometric plats carry closure labels; algebraic ones
/// do not (the closure is determined uniquely).
struct PlatPresentation {
    MixedBraidWord word;
    PlatKind kind = PlatKind::Algebraic;
    std::optional<ClosureLabels> labels;

    static PlatPresentation algebraic(MixedBraidWord w) {
        if (w.moving_count() % 2 != 0)
            throw std::invalid_argument("PlatPresentation: moving count must be even (pad first)");
        return PlatPresentation{std::move(w), PlatKind::Algebraic, std::nullopt};
    }

    static PlatPresentation geometric(MixedBraidWord w, ClosureLabels l) {
        if (w.moving_count() % 2 != 0)
            throw std::invalid_argument("PlatPresentation: moving count must be even (pad first)");
        const int n = w.moving_count() / 2;
        if (static_cast<int>(l.top.size()) != n || static_cast<int>(l.bottom.size()) != n)
            throw std::invalid_argument("PlatPresentation: label lists must have n entries");
        return PlatPresentation{std::move(w), PlatKind::Geometric, std::move(l)};
    }

    int handle_count() const { return word.handle_count(); }
    int strand_pairs() const { return word.moving_count() / 2; }
};

/// Extra strand on the far right when the moving count is odd.
inline MixedBraidWord pad_to_even(const MixedBraidWord& w) {
    if (w.moving_count() % 2 == 0) return w;
    return w.with_moving_count(w.moving_count() + 1);
}

/// Component count plus the multiset of per-component winding vectors in Z^g,
/// each canonicalized up to global sign (first nonzero entry positive) and
/// sorted lexicographically. An isotopy invariant of the unoriented plat.
struct PlatInvariantBundle {
    int component_count = 0;
    std::vector<std::vector<int>> winding_classes;

    friend bool operator==(const PlatInvariantBundle& a, const PlatInvariantBundle& b) {
        return a.component_count == b.component_count && a.winding_classes == b.winding_classes;
    }
    friend bool operator!=(const PlatInvariantBundle& a, const PlatInvariantBundle& b) {
        return !(a == b);
    }
};

inline std::vector<int> canonical_winding(std::vector<int> v) {
    for (int x : v) {
        if (x > 0) break;
        if (x < 0) {
            for (int& y : v) y = -y;
            break;
        }
    }
    return v;
}

inline std::string serialize_bundle(const PlatInvariantBundle& b) {
    std::ostringstream os;
    os << "components=" << b.component_count << "; classes=[";
    for (std::size_t c = 0; c < b.winding_classes.size(); ++c) {
        if (c) os << ",";
        os << "(";
        const auto& v = b.winding_classes[c];
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) os << ",";
            os << v[i];
        }
        os << ")";
    }
    os << "]";
    return os.str();
}

/// Partition of the 2n strands (named by top position) into link components
/// of the plat closure: cycles of braid strands plus top arcs (2i-1, 2i) and
/// bottom arcs (2i-1, 2i).
inline std::vector<std::vector<int>> closure_components(const PlatPresentation& plat) {
    if (plat.kind != PlatKind::Algebraic)
        throw std::invalid_argument("closure_components: geometric plat must be parted first");
    const int two_n = plat.word.moving_count();
    const Permutation pi = moving_permutation(plat.word);
    const Permutation pi_inv = pi.inverse();

    auto top_partner = [](int s) { return (s % 2 == 1) ? s + 1 : s - 1; };
    std::vector<bool> seen(static_cast<std::size_t>(two_n) + 1, false);
    std::vector<std::vector<int>> components;
    for (int start = 1; start <= two_n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::vector<int> comp;
        int s = start;
        // walk: down strand s, bottom arc, up, top arc, ... until back at start
        do {
            seen[static_cast<std::size_t>(s)] = true;
            comp.push_back(s);
            const int bottom = pi(s);
            const int partner_bottom = top_partner(bottom);
            const int s_up = pi_inv(partner_bottom);
            seen[static_cast<std::size_t>(s_up)] = true;
            if (s_up != s) comp.push_back(s_up);
            s = top_partner(s_up);
        } while (s != start);
        std::sort(comp.begin(), comp.end());
        comp.erase(std::unique(comp.begin(), comp.end()), comp.end());
        components.push_back(std::move(comp));
    }
    return components;
}

namespace detail {

/// Winding contribution of each strand: entry r accumulates the signs of the
/// Alpha(r, .) letters the strand passes through (the loop acts on whichever
/// strand occupies moving position 1 at that slice).
inline std::vector<std::vector<int>> strand_windings(const MixedBraidWord& w) {
    const int n = w.moving_count();
    const int g = w.handle_count();
    std::vector<int> at(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) at[static_cast<std::size_t>(i)] = i + 1;
    std::vector<std::vector<int>> acc(static_cast<std::size_t>(n) + 1,
                                      std::vector<int>(static_cast<std::size_t>(g), 0));
    for (const auto& l : w.letters()) {
        if (l.kind == MixedLetter::Kind::Sigma) {
            std::swap(at[static_cast<std::size_t>(l.index - 1)], at[static_cast<std::size_t>(l.index)]);
        } else {
            const int strand = at[0];
            acc[static_cast<std::size_t>(strand)][static_cast<std::size_t>(l.index - 1)] += l.sign;
        }
    }
    return acc;
}

}  // namespace detail

/// Invariant bundle of a plat. Geometric plats over a mixed word part
/// trivially (their arcs cannot straddle fixed strands), so the labels are
/// dropped; genuinely geometric diagrams go through the morse pipeline first.
inline PlatInvariantBundle invariants(const PlatPresentation& plat) {
    PlatPresentation alg = plat.kind == PlatKind::Algebraic
                               ? plat
                               : PlatPresentation::algebraic(plat.word);
    const int two_n = alg.word.moving_count();
    const int g = alg.word.handle_count();
    const Permutation pi = moving_permutation(alg.word);
    const Permutation pi_inv = pi.inverse();
    const auto winding = detail::strand_windings(alg.word);
    const auto components = closure_components(alg);

    auto top_partner = [](int s) { return (s % 2 == 1) ? s + 1 : s - 1; };
    PlatInvariantBundle bundle;
    bundle.component_count = static_cast<int>(components.size());
    for (const auto& comp : components) {
        // traverse from the smallest top position, heading downward
        std::vector<int> v(static_cast<std::size_t>(g), 0);
        const int start = comp.front();
        int s = start;
        int dir = +1;
        do {
            const auto& sv = winding[static_cast<std::size_t>(s)];
            for (int r = 0; r < g; ++r) v[static_cast<std::size_t>(r)] += dir * sv[static_cast<std::size_t>(r)];
            if (dir > 0) {
                // reached the bottom of s; cross the bottom arc, go up
                const int partner_bottom = top_partner(pi(s));
                s = pi_inv(partner_bottom);
                dir = -1;
            } else {
                // reached the top of s; cross the top arc, go down
                s = top_partner(s);
                dir = +1;
            }
        } while (!(s == start && dir == +1));
        bundle.winding_classes.push_back(canonical_winding(std::move(v)));
        (void)two_n;
    }
    std::sort(bundle.winding_classes.begin(), bundle.winding_classes.end());
    return bundle;
}

enum class DistinguishVerdict { Distinguished, IndistinguishableByBundle };

inline DistinguishVerdict distinguish(const PlatPresentation& a, const PlatPresentation& b) {
    if (a.handle_count() != b.handle_count())
        throw std::invalid_argument("distinguish: handle counts differ");
    return invariants(a) != invariants(b) ? DistinguishVerdict::Distinguished
                                          : DistinguishVerdict::IndistinguishableByBundle;
}

}  // namespace platbraid
