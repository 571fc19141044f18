#pragma once
// Exact free-group word arithmetic over a ranked alphabet: free reduction,
// multiplication, the tree metric, exponent sums, and exhaustive enumeration
// of balls in the Cayley tree.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace treesigma {

/// Thrown when an enumeration request exceeds the configured radius cap.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when two words from alphabets of different rank are combined.
class AlphabetMismatch : public std::invalid_argument {
public:
    AlphabetMismatch() : std::invalid_argument("alphabet rank mismatch") {}
};

/// Thrown on malformed word/ray/family text; carries the offending offset.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

struct Alphabet {
    int rank;

    explicit Alphabet(int r) : rank(r) {
        if (r < 1) throw std::invalid_argument("alphabet rank must be >= 1");
    }
    friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

/// A generator a_index (sign +1) or its inverse (sign -1).
struct Letter {
    int index;  // 1-based
    int sign;   // +1 or -1

    Letter(int index, int sign) : index(index), sign(sign) {
        if (index < 1) throw std::invalid_argument("letter index must be >= 1");
        if (sign != 1 && sign != -1) throw std::invalid_argument("letter sign must be +1 or -1");
    }

    Letter inverse() const { return Letter(index, -sign); }

    friend bool operator==(const Letter&, const Letter&) = default;
    // a1 < A1 < a2 < A2 < ...
    friend bool operator<(const Letter& a, const Letter& b) {
        if (a.index != b.index) return a.index < b.index;
        return a.sign > b.sign;
    }
};

inline std::string to_string(const Letter& l) {
    return (l.sign > 0 ? "a" : "A") + std::to_string(l.index);
}

/// A freely reduced word; the empty word is the identity of the free group.
class ReducedWord {
public:
    explicit ReducedWord(Alphabet alphabet) : alphabet_(alphabet) {}

    /// Freely reduces an arbitrary letter sequence. Idempotent on reduced input.
    static ReducedWord reduce(Alphabet alphabet, std::span<const Letter> raw) {
        ReducedWord w(alphabet);
        w.letters_.reserve(raw.size());
        for (const Letter& l : raw) {
            if (l.index > alphabet.rank)
                throw std::invalid_argument("letter index " + std::to_string(l.index) +
                                            " out of alphabet range " + std::to_string(alphabet.rank));
            w.push_reduced(l);
        }
        return w;
    }

    static ReducedWord identity(Alphabet alphabet) { return ReducedWord(alphabet); }

    /// Single-letter word.
    static ReducedWord generator(Alphabet alphabet, Letter l) {
        return reduce(alphabet, std::span<const Letter>(&l, 1));
    }

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const Letter& operator[](std::size_t i) const { return letters_[i]; }
    const Letter& back() const { return letters_.back(); }
    const Letter& front() const { return letters_.front(); }

    /// Appends one letter with cancellation; the result stays reduced.
    ReducedWord append(Letter l) const {
        if (l.index > alphabet_.rank) throw std::invalid_argument("letter index out of alphabet range");
        ReducedWord w = *this;
        w.push_reduced(l);
        return w;
    }

    /// Reinterprets the word over a (possibly larger or smaller) alphabet.
    ReducedWord with_rank(int rank) const {
        Alphabet a(rank);
        for (const Letter& l : letters_)
            if (l.index > rank) throw std::invalid_argument("letter does not fit target alphabet");
        ReducedWord w(a);
        w.letters_ = letters_;
        return w;
    }

    friend bool operator==(const ReducedWord& a, const ReducedWord& b) {
        return a.alphabet_ == b.alphabet_ && a.letters_ == b.letters_;
    }
    // Length-then-lexicographic; the deterministic order used everywhere.
    friend bool operator<(const ReducedWord& a, const ReducedWord& b) {
        if (a.letters_.size() != b.letters_.size()) return a.letters_.size() < b.letters_.size();
        return std::lexicographical_compare(a.letters_.begin(), a.letters_.end(),
                                            b.letters_.begin(), b.letters_.end());
    }

private:
    void push_reduced(Letter l) {
        if (!letters_.empty() && letters_.back() == l.inverse())
            letters_.pop_back();
        else
            letters_.push_back(l);
    }

    Alphabet alphabet_;
    std::vector<Letter> letters_;
};

inline ReducedWord multiply(const ReducedWord& u, const ReducedWord& v) {
    if (!(u.alphabet() == v.alphabet())) throw AlphabetMismatch();
    ReducedWord w = u;
    for (const Letter& l : v.letters()) w = w.append(l);
    return w;
}

inline ReducedWord invert(const ReducedWord& u) {
    std::vector<Letter> rev;
    rev.reserve(u.size());
    for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it)
        rev.push_back(it->inverse());
    return ReducedWord::reduce(u.alphabet(), rev);
}

/// Length of the longest common prefix.
inline std::size_t lcp(const ReducedWord& u, const ReducedWord& v) {
    if (!(u.alphabet() == v.alphabet())) throw AlphabetMismatch();
    std::size_t n = std::min(u.size(), v.size());
    std::size_t i = 0;
    while (i < n && u[i] == v[i]) ++i;
    return i;
}

/// Word metric on the Cayley tree: d(u,v) = |u| + |v| - 2 lcp(u,v).
inline std::size_t distance(const ReducedWord& u, const ReducedWord& v) {
    return u.size() + v.size() - 2 * lcp(u, v);
}

/// Signed count of t's generator in w, negated when t is an inverse letter.
/// A homomorphism to Z: invariant under free reduction.
inline long long expsum(const Letter& t, const ReducedWord& w) {
    long long s = 0;
    for (const Letter& l : w.letters())
        if (l.index == t.index) s += l.sign;
    return s * t.sign;
}

inline constexpr std::size_t kDefaultEnumerationCap = 8;

/// All words at distance <= radius from center, sorted length-then-lex.
/// For rank n the sphere of radius r has 2n(2n-1)^{r-1} words, so the cap
/// guards against accidental exponential jobs.
inline std::vector<ReducedWord> enumerate_ball(const ReducedWord& center, std::size_t radius,
                                               std::size_t cap = kDefaultEnumerationCap) {
    if (radius > cap)
        throw CapExceeded("enumeration radius " + std::to_string(radius) +
                          " exceeds cap " + std::to_string(cap));
    std::vector<ReducedWord> out;
    out.push_back(center);
    const int rank = center.alphabet().rank;
    // Frontier walk: appending a non-backtracking letter moves distance +1.
    std::vector<std::pair<ReducedWord, ReducedWord>> frontier;  // (word, suffix from center)
    frontier.emplace_back(center, ReducedWord::identity(center.alphabet()));
    for (std::size_t r = 1; r <= radius; ++r) {
        std::vector<std::pair<ReducedWord, ReducedWord>> next;
        for (const auto& [w, x] : frontier) {
            for (int i = 1; i <= rank; ++i) {
                for (int s : {+1, -1}) {
                    Letter l(i, s);
                    if (!x.empty() && x.back() == l.inverse()) continue;
                    next.emplace_back(w.append(l), x.append(l));
                }
            }
        }
        for (const auto& [w, x] : next) out.push_back(w);
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// --- shared word text grammar: whitespace-separated [aA][0-9]+ tokens, ---
// --- empty string (or "1") denotes the identity.                       ---

inline std::string to_string(const ReducedWord& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        s += to_string(w[i]);
    }
    return s;
}

inline ReducedWord parse_word(const std::string& text, Alphabet alphabet) {
    std::vector<Letter> raw;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) { ++i; continue; }
        std::size_t start = i;
        char c = text[i];
        if (c == '1') {  // explicit identity token
            ++i;
            if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
                throw ParseError("unexpected character after identity token", i);
            continue;
        }
        if (c != 'a' && c != 'A') throw ParseError("expected letter token [aA][0-9]+", start);
        ++i;
        std::size_t digits = 0;
        int index = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            index = index * 10 + (text[i] - '0');
            ++digits;
            ++i;
            if (digits > 6) throw ParseError("letter index too large", start);
        }
        if (digits == 0) throw ParseError("letter token missing index", start);
        if (index < 1 || index > alphabet.rank)
            throw ParseError("letter index out of alphabet range 1.." + std::to_string(alphabet.rank), start);
        raw.emplace_back(index, c == 'a' ? +1 : -1);
    }
    return ReducedWord::reduce(alphabet, raw);
}

}  // namespace treesigma
