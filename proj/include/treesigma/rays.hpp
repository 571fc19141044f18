#pragma once
// Boundary points of the Cayley tree as eventually periodic infinite reduced
// words, held in a canonical (shortest prefix, primitive period) form so that
// structural equality coincides with equality of boundary points.

#include <set>
#include <vector>

#include "treesigma/words.hpp"

namespace treesigma {

namespace detail {

inline void append_reduced(std::vector<Letter>& v, Letter l) {
    if (!v.empty() && v.back() == l.inverse())
        v.pop_back();
    else
        v.push_back(l);
}

inline std::vector<Letter> rotate_left(std::vector<Letter> v, std::size_t by) {
    by %= v.size();
    std::rotate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(by), v.end());
    return v;
}

}  // namespace detail

class Ray {
public:
    /// Canonicalizes prefix . period^inf. The canonical form has a primitive,
    /// cyclically reduced period and the shortest possible prefix; two Rays
    /// are equal iff they represent the same boundary point.
    static Ray make(const ReducedWord& prefix, const ReducedWord& period) {
        if (!(prefix.alphabet() == period.alphabet())) throw AlphabetMismatch();
        if (period.empty()) throw std::invalid_argument("ray period reduces to the identity");

        std::vector<Letter> p = prefix.letters();
        std::vector<Letter> q = period.letters();

        // Cyclic reduction: q = x q' x^{-1} gives prefix.x . q'^inf.
        while (q.size() >= 2 && q.back() == q.front().inverse()) {
            detail::append_reduced(p, q.front());
            q.erase(q.begin());
            q.pop_back();
        }
        if (q.empty()) throw std::invalid_argument("ray period reduces to the identity");

        // Primitive root of the period.
        for (std::size_t d = 1; d < q.size(); ++d) {
            if (q.size() % d != 0) continue;
            bool power = true;
            for (std::size_t i = d; i < q.size() && power; ++i)
                if (!(q[i] == q[i % d])) power = false;
            if (power) {
                q.erase(q.begin() + static_cast<std::ptrdiff_t>(d), q.end());
                break;
            }
        }

        // Shortest prefix: cancel against the period head, absorb into the tail.
        while (!p.empty()) {
            if (p.back() == q.front().inverse()) {
                p.pop_back();
                q = detail::rotate_left(q, 1);
            } else if (p.back() == q.back()) {
                p.pop_back();
                q = detail::rotate_left(q, q.size() - 1);
            } else {
                break;
            }
        }

        return Ray(ReducedWord::reduce(prefix.alphabet(), p), ReducedWord::reduce(prefix.alphabet(), q));
    }

    const ReducedWord& prefix() const { return prefix_; }
    const ReducedWord& period() const { return period_; }
    const Alphabet& alphabet() const { return prefix_.alphabet(); }

    /// i-th letter of the infinite word prefix . period^inf.
    Letter letter_at(std::size_t i) const {
        if (i < prefix_.size()) return prefix_[i];
        return period_[(i - prefix_.size()) % period_.size()];
    }

    friend bool operator==(const Ray&, const Ray&) = default;
    friend bool operator<(const Ray& a, const Ray& b) {
        if (!(a.prefix_ == b.prefix_)) return a.prefix_ < b.prefix_;
        return a.period_ < b.period_;
    }

private:
    Ray(ReducedWord prefix, ReducedWord period)
        : prefix_(std::move(prefix)), period_(std::move(period)) {}

    ReducedWord prefix_;
    ReducedWord period_;
};

inline Ray make_ray(const ReducedWord& prefix, const ReducedWord& period) {
    return Ray::make(prefix, period);
}

/// Length-l prefix of the infinite word; the geodesic vertex at distance l.
inline ReducedWord tau(const Ray& ray, std::size_t l) {
    std::vector<Letter> v;
    v.reserve(l);
    for (std::size_t i = 0; i < l; ++i) v.push_back(ray.letter_at(i));
    return ReducedWord::reduce(ray.alphabet(), v);
}

/// Longest common prefix of w with the infinite word.
inline std::size_t lcp_ray(const ReducedWord& w, const Ray& ray) {
    if (!(w.alphabet() == ray.alphabet())) throw AlphabetMismatch();
    std::size_t i = 0;
    while (i < w.size() && w[i] == ray.letter_at(i)) ++i;
    return i;
}

/// True iff the tail of the ray is t t t ... , i.e. the canonical period is t.
inline bool eventually_only(const Ray& ray, const Letter& t) {
    return ray.period().size() == 1 && ray.period()[0] == t;
}

/// Letters occurring infinitely often in the infinite word.
inline std::set<Letter> infinite_letters(const Ray& ray) {
    return {ray.period().letters().begin(), ray.period().letters().end()};
}

/// The boundary point g . ray(inf), as a canonical Ray based at 1.
inline Ray translate(const ReducedWord& g, const Ray& ray) {
    if (!(g.alphabet() == ray.alphabet())) throw AlphabetMismatch();
    // Cancellation between the tail of g and the head of the infinite word.
    std::size_t c = 0;
    while (c < g.size() && g[g.size() - 1 - c] == ray.letter_at(c).inverse()) ++c;

    std::vector<Letter> head(g.letters().begin(), g.letters().end() - static_cast<std::ptrdiff_t>(c));
    ReducedWord period = ray.period();
    if (c <= ray.prefix().size()) {
        for (std::size_t i = c; i < ray.prefix().size(); ++i) head.push_back(ray.prefix()[i]);
    } else {
        std::size_t shift = (c - ray.prefix().size()) % ray.period().size();
        period = ReducedWord::reduce(ray.alphabet(), detail::rotate_left(ray.period().letters(), shift));
    }
    return Ray::make(ReducedWord::reduce(ray.alphabet(), head), period);
}

// --- ray text grammar: "<prefix words> | <period words>" ---

inline std::string to_string(const Ray& ray) {
    std::string p = to_string(ray.prefix());
    std::string q = to_string(ray.period());
    return p.empty() ? "| " + q : p + " | " + q;
}

inline Ray parse_ray(const std::string& text, Alphabet alphabet) {
    std::size_t bar = text.find('|');
    if (bar == std::string::npos) throw ParseError("ray text must contain '|'", text.size());
    if (text.find('|', bar + 1) != std::string::npos)
        throw ParseError("ray text must contain a single '|'", text.find('|', bar + 1));
    ReducedWord prefix = parse_word(text.substr(0, bar), alphabet);
    ReducedWord period = parse_word(text.substr(bar + 1), alphabet);
    if (period.empty()) throw ParseError("ray period must be nonempty", bar + 1);
    return Ray::make(prefix, period);
}

/// All canonical rays with |period| <= max_period and |prefix| <= max_prefix,
/// sorted deterministically. Used by sweeps and by the test corpus.
inline std::vector<Ray> enumerate_canonical_rays(Alphabet alphabet, std::size_t max_period,
                                                 std::size_t max_prefix,
                                                 std::size_t cap = kDefaultEnumerationCap) {
    std::vector<ReducedWord> words = enumerate_ball(ReducedWord::identity(alphabet),
                                                    std::max(max_period, max_prefix), cap);
    std::set<Ray> rays;
    for (const ReducedWord& period : words) {
        if (period.empty() || period.size() > max_period) continue;
        for (const ReducedWord& prefix : words) {
            if (prefix.size() > max_prefix) continue;
            Ray r = Ray::make(prefix, period);
            if (r.period().size() <= max_period && r.prefix().size() <= max_prefix) rays.insert(r);
        }
    }
    return {rays.begin(), rays.end()};
}

}  // namespace treesigma
