#pragma once
// Exact models of the coefficient group B and the twisting action for the
// supported families: Z[1/(p1...pn)] with generators scaling by 1/p_i, and
// restricted wreath products with integer coefficients indexed by a free
// group C, plus desk-scale generation oracles.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "treesigma/horoballs.hpp"
#include "treesigma/rays.hpp"
#include "treesigma/words.hpp"

namespace treesigma {

using Int = boost::multiprecision::cpp_int;

/// An element of Z[1/(p1...pn)]: numerator over a squarefree-supported
/// denominator prod p^e, kept in lowest terms.
class PRational {
public:
    PRational() = default;
    explicit PRational(Int numerator) : num_(std::move(numerator)) {}
    PRational(Int numerator, std::map<long long, unsigned> denominator_exponents)
        : num_(std::move(numerator)), den_(std::move(denominator_exponents)) {
        normalize();
    }

    static PRational zero() { return PRational(); }
    static PRational one() { return PRational(Int(1)); }

    const Int& numerator() const { return num_; }
    const std::map<long long, unsigned>& denominator_exponents() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    unsigned denominator_exponent(long long p) const {
        auto it = den_.find(p);
        return it == den_.end() ? 0u : it->second;
    }

    /// Multiplication by p^e (e may be negative).
    PRational scaled(long long p, long long e) const {
        PRational r = *this;
        if (e >= 0) {
            for (long long i = 0; i < e; ++i) r.num_ *= p;
        } else {
            r.den_[p] += static_cast<unsigned>(-e);
        }
        r.normalize();
        return r;
    }

    friend PRational operator+(const PRational& a, const PRational& b) {
        std::map<long long, unsigned> den;
        for (const auto& [p, e] : a.den_) den[p] = e;
        for (const auto& [p, e] : b.den_) den[p] = std::max(den[p], e);
        Int na = a.num_ * scale_factor(den, a.den_);
        Int nb = b.num_ * scale_factor(den, b.den_);
        return PRational(na + nb, den);
    }
    friend PRational operator-(const PRational& a) { return PRational(-a.num_, a.den_); }
    friend PRational operator-(const PRational& a, const PRational& b) { return a + (-b); }
    friend bool operator==(const PRational&, const PRational&) = default;
    friend bool operator<(const PRational& a, const PRational& b) {
        if (a.num_ != b.num_) return a.num_ < b.num_;
        return a.den_ < b.den_;
    }

    std::string to_string() const {
        std::string s = num_.str();
        Int d = 1;
        for (const auto& [p, e] : den_)
            for (unsigned i = 0; i < e; ++i) d *= p;
        if (d != 1) s += "/" + d.str();
        return s;
    }

private:
    static Int scale_factor(const std::map<long long, unsigned>& full,
                            const std::map<long long, unsigned>& own) {
        Int f = 1;
        for (const auto& [p, e] : full) {
            unsigned have = 0;
            if (auto it = own.find(p); it != own.end()) have = it->second;
            for (unsigned i = have; i < e; ++i) f *= p;
        }
        return f;
    }

    void normalize() {
        if (num_ == 0) {
            den_.clear();
            return;
        }
        for (auto it = den_.begin(); it != den_.end();) {
            while (it->second > 0 && num_ % it->first == 0) {
                num_ /= it->first;
                --it->second;
            }
            it = it->second == 0 ? den_.erase(it) : std::next(it);
        }
    }

    Int num_ = 0;
    std::map<long long, unsigned> den_;
};

/// A finitely supported integer vector indexed by reduced words over C.
class SupportVector {
public:
    SupportVector() = default;

    static SupportVector zero() { return {}; }
    static SupportVector delta(const ReducedWord& index, Int coefficient = Int(1)) {
        SupportVector v;
        if (coefficient != 0) v.entries_[index] = std::move(coefficient);
        return v;
    }

    const std::map<ReducedWord, Int>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    Int at(const ReducedWord& index) const {
        auto it = entries_.find(index);
        return it == entries_.end() ? Int(0) : it->second;
    }

    /// Image under the index permutation omega -> g . omega.
    SupportVector translated(const ReducedWord& g) const {
        SupportVector v;
        for (const auto& [w, c] : entries_) v.entries_[multiply(g, w)] = c;
        return v;
    }

    friend SupportVector operator+(const SupportVector& a, const SupportVector& b) {
        SupportVector v = a;
        for (const auto& [w, c] : b.entries_) {
            Int s = v.at(w) + c;
            if (s == 0)
                v.entries_.erase(w);
            else
                v.entries_[w] = s;
        }
        return v;
    }
    friend SupportVector operator-(const SupportVector& a) {
        SupportVector v;
        for (const auto& [w, c] : a.entries_) v.entries_[w] = -c;
        return v;
    }
    friend SupportVector operator-(const SupportVector& a, const SupportVector& b) { return a + (-b); }
    friend bool operator==(const SupportVector&, const SupportVector&) = default;
    friend bool operator<(const SupportVector& a, const SupportVector& b) { return a.entries_ < b.entries_; }

private:
    std::map<ReducedWord, Int> entries_;
};

// --- family specifications ---

struct LehnertFamily {
    std::vector<long long> primes;  // one per generator, pairwise distinct
};
struct LamplighterFamily {};
struct WreathFamily {
    int c_rank;      // generators a_1..a_n span C
    int total_rank;  // a_{n+1}..a_m span D
};

struct FamilySpec {
    std::variant<LehnertFamily, LamplighterFamily, WreathFamily> variant;

    Alphabet alphabet() const {
        if (const auto* l = std::get_if<LehnertFamily>(&variant))
            return Alphabet(static_cast<int>(l->primes.size()));
        if (std::get_if<LamplighterFamily>(&variant)) return Alphabet(1);
        return Alphabet(std::get<WreathFamily>(variant).total_rank);
    }

    static FamilySpec lehnert(std::vector<long long> primes) {
        if (primes.empty()) throw std::invalid_argument("lehnert family needs at least one prime");
        std::set<long long> seen;
        for (long long p : primes) {
            if (p < 2) throw std::invalid_argument("lehnert primes must be >= 2");
            if (!seen.insert(p).second) throw std::invalid_argument("lehnert primes must be distinct");
        }
        return {LehnertFamily{std::move(primes)}};
    }
    static FamilySpec lamplighter() { return {LamplighterFamily{}}; }
    static FamilySpec wreath(int c_rank, int total_rank) {
        if (c_rank < 1 || c_rank > total_rank)
            throw std::invalid_argument("wreath family needs 1 <= c_rank <= total_rank");
        return {WreathFamily{c_rank, total_rank}};
    }
};

// Family text grammar: "lehnert:2,3" / "lamplighter" / "wreath:1/2".
inline std::string to_string(const FamilySpec& spec) {
    if (const auto* l = std::get_if<LehnertFamily>(&spec.variant)) {
        std::string s = "lehnert:";
        for (std::size_t i = 0; i < l->primes.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(l->primes[i]);
        }
        return s;
    }
    if (std::get_if<LamplighterFamily>(&spec.variant)) return "lamplighter";
    const auto& w = std::get<WreathFamily>(spec.variant);
    return "wreath:" + std::to_string(w.c_rank) + "/" + std::to_string(w.total_rank);
}

inline FamilySpec parse_family(const std::string& text) {
    if (text == "lamplighter") return FamilySpec::lamplighter();
    auto parse_int = [&](std::size_t begin, std::size_t end) -> long long {
        if (begin >= end) throw ParseError("expected integer in family text", begin);
        long long v = 0;
        for (std::size_t i = begin; i < end; ++i) {
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw ParseError("expected digit in family text", i);
            v = v * 10 + (text[i] - '0');
            if (v > 1000000) throw ParseError("family parameter too large", i);
        }
        return v;
    };
    if (text.rfind("lehnert:", 0) == 0) {
        std::vector<long long> primes;
        std::size_t pos = 8;
        while (pos <= text.size()) {
            std::size_t comma = text.find(',', pos);
            std::size_t end = comma == std::string::npos ? text.size() : comma;
            primes.push_back(parse_int(pos, end));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        try {
            return FamilySpec::lehnert(std::move(primes));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), 8);
        }
    }
    if (text.rfind("wreath:", 0) == 0) {
        std::size_t slash = text.find('/', 7);
        if (slash == std::string::npos) throw ParseError("wreath family needs n/m", text.size());
        long long n = parse_int(7, slash);
        long long m = parse_int(slash + 1, text.size());
        try {
            return FamilySpec::wreath(static_cast<int>(n), static_cast<int>(m));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), 7);
        }
    }
    throw ParseError("unknown family (expected lehnert:p1,p2,... | lamplighter | wreath:n/m)", 0);
}

/// How phi(w) is computed and compared for a family.
struct FreeAbelianExpVector {
    std::vector<long long> primes;  // a_i acts by multiplication by 1/p_i
};
struct TrivialOnDProjectToC {
    int c_rank;
    int total_rank;
};
using PhiImageModel = std::variant<FreeAbelianExpVector, TrivialOnDProjectToC>;

inline PhiImageModel image_model(const FamilySpec& spec) {
    if (const auto* l = std::get_if<LehnertFamily>(&spec.variant))
        return FreeAbelianExpVector{l->primes};
    if (std::get_if<LamplighterFamily>(&spec.variant)) return TrivialOnDProjectToC{1, 1};
    const auto& w = std::get<WreathFamily>(spec.variant);
    return TrivialOnDProjectToC{w.c_rank, w.total_rank};
}

// --- actions ---

/// phi_a(x) = x . prod p_i^{-expsum_{a_i}(a)}.
inline PRational act_lehnert(const ReducedWord& a, const PRational& x,
                             const std::vector<long long>& primes) {
    PRational r = x;
    for (std::size_t i = 0; i < primes.size(); ++i)
        r = r.scaled(primes[i], -expsum(Letter(static_cast<int>(i) + 1, +1), a));
    return r;
}

/// The natural projection pi: C * D ->> C, deleting D-letters and reducing.
inline ReducedWord project_to_C(const ReducedWord& a, int c_rank) {
    std::vector<Letter> kept;
    for (const Letter& l : a.letters())
        if (l.index <= c_rank) kept.push_back(l);
    return ReducedWord::reduce(Alphabet(c_rank), kept);
}

/// phi_a shifts indices by left multiplication with pi(a); D acts trivially.
inline SupportVector act_wreath(const ReducedWord& a, const SupportVector& b, const FamilySpec& spec) {
    if (std::get_if<LamplighterFamily>(&spec.variant)) return b.translated(a);
    if (const auto* w = std::get_if<WreathFamily>(&spec.variant))
        return b.translated(project_to_C(a, w->c_rank));
    throw std::invalid_argument("act_wreath requires a lamplighter or wreath family");
}

// --- generation oracles ---

/// Generator of the cyclic subgroup of Q spanned by a finite set of fractions
/// (subgroups of Q generated by finitely many elements are cyclic).
inline PRational generated_subgroup_lehnert(const std::vector<PRational>& gens) {
    if (gens.empty()) throw std::invalid_argument("empty generating set");
    std::map<long long, unsigned> den;
    for (const PRational& g : gens)
        for (const auto& [p, e] : g.denominator_exponents()) den[p] = std::max(den[p], e);
    Int common = 0;
    for (const PRational& g : gens) {
        Int scaled = g.numerator();
        for (const auto& [p, e] : den) {
            unsigned have = g.denominator_exponent(p);
            for (unsigned i = have; i < e; ++i) scaled *= p;
        }
        common = boost::multiprecision::gcd(common, abs(scaled));
    }
    return PRational(common, den);
}

/// Membership in the cyclic subgroup generated by g: divisibility over a
/// common denominator.
inline bool in_cyclic_subgroup(const PRational& x, const PRational& g) {
    if (g.is_zero()) return x.is_zero();
    std::map<long long, unsigned> den;
    for (const auto& [p, e] : x.denominator_exponents()) den[p] = e;
    for (const auto& [p, e] : g.denominator_exponents()) den[p] = std::max(den[p], e);
    auto scale = [&](const PRational& v) {
        Int n = v.numerator();
        for (const auto& [p, e] : den)
            for (unsigned i = v.denominator_exponent(p); i < e; ++i) n *= p;
        return n;
    };
    return scale(x) % scale(g) == 0;
}

/// Evidence for "B is finitely generated over A_k(tau)" in the Lehnert family.
struct FgEvidence {
    bool finitely_generated;
    std::optional<Letter> failing_letter;
    // Upper bound on attainable p_i-denominator exponents when generation fails.
    std::optional<long long> denominator_exponent_bound;
};

/// B = Z[1/(p1...pn)] is finitely generated over A_k(tau) iff every Q_{a_i,k}
/// is unbounded above, which holds iff the ray is not eventually only a_i^{-1}.
inline FgEvidence fg_over_lehnert(const std::vector<PRational>& S, const HoroballQuery& q,
                                  const std::vector<long long>& primes) {
    for (std::size_t i = 0; i < primes.size(); ++i) {
        Letter t(static_cast<int>(i) + 1, +1);
        if (!eventually_only(q.ray, t.inverse())) continue;
        long long expsum_bound = expsum_upper_bound(t, q.ray, q.k);
        long long s_bound = 0;
        for (const PRational& s : S)
            s_bound = std::max<long long>(s_bound, s.denominator_exponent(primes[i]));
        return {false, t, s_bound + expsum_bound};
    }
    return {true, std::nullopt, std::nullopt};
}

/// I(S): union of the supports of S.
inline std::set<ReducedWord> index_set(const std::vector<SupportVector>& S) {
    std::set<ReducedWord> out;
    for (const SupportVector& s : S)
        for (const auto& [w, c] : s.entries()) out.insert(w);
    return out;
}

/// R(S): max reduced length over I(S); 0 for empty or identity-supported S.
inline std::size_t support_radius(const std::vector<SupportVector>& S) {
    std::size_t r = 0;
    for (const ReducedWord& w : index_set(S)) r = std::max(r, w.size());
    return r;
}

/// An index psi in C outside C_{k-R(S)}(tau): every horoball-conjugate of S
/// is trivial at psi. Built as s^m for a letter s off the ray, with the
/// smallest exponent m making 2 lcp(psi, tau) - |psi| < k - R(S) strict.
inline ReducedWord nongeneration_witness(const std::vector<SupportVector>& S, const HoroballQuery& q) {
    long long r = static_cast<long long>(support_radius(S));
    long long m = std::max<long long>(1, r - q.k + 1);
    Letter s = q.ray.letter_at(0).inverse();
    ReducedWord psi = ReducedWord::identity(q.ray.alphabet());
    for (long long i = 0; i < m; ++i) psi = psi.append(s);
    return psi;
}

/// Brute-force oracle: do the generators span every target in the free
/// abelian group Z^window? Exact integer row reduction (Hermite-style
/// echelon), with supports escaping the window treated as an error.
inline bool lattice_generates(const std::vector<SupportVector>& gens,
                              const std::vector<SupportVector>& targets,
                              const std::set<ReducedWord>& window) {
    std::vector<ReducedWord> cols(window.begin(), window.end());
    std::map<ReducedWord, std::size_t> col_of;
    for (std::size_t i = 0; i < cols.size(); ++i) col_of[cols[i]] = i;

    auto to_row = [&](const SupportVector& v) {
        std::vector<Int> row(cols.size(), Int(0));
        for (const auto& [w, c] : v.entries()) {
            auto it = col_of.find(w);
            if (it == col_of.end())
                throw std::invalid_argument("support escapes the lattice window at index " + to_string(w));
            row[it->second] = c;
        }
        return row;
    };

    std::vector<std::vector<Int>> rows;
    for (const SupportVector& g : gens) rows.push_back(to_row(g));

    // Echelonize: one pivot row per column, eliminated left to right.
    std::vector<std::pair<std::size_t, std::vector<Int>>> pivots;  // (column, row)
    for (std::size_t c = 0; c < cols.size(); ++c) {
        for (bool again = true; again;) {
            again = false;
            std::size_t best = rows.size();
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                if (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])) best = i;
            }
            if (best == rows.size()) break;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i == best || rows[i][c] == 0) continue;
                Int f = rows[i][c] / rows[best][c];
                for (std::size_t j = 0; j < cols.size(); ++j) rows[i][j] -= f * rows[best][j];
                if (rows[i][c] != 0) again = true;
            }
            if (!again) {
                std::vector<Int> pivot = std::move(rows[best]);
                rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
                if (pivot[c] < 0)
                    for (Int& x : pivot) x = -x;
                pivots.emplace_back(c, std::move(pivot));
            }
        }
    }

    for (const SupportVector& t : targets) {
        std::vector<Int> row = to_row(t);
        for (const auto& [c, pivot] : pivots) {
            if (row[c] == 0) continue;
            if (row[c] % pivot[c] != 0) return false;
            Int f = row[c] / pivot[c];
            for (std::size_t j = 0; j < cols.size(); ++j) row[j] -= f * pivot[j];
        }
        for (const Int& x : row)
            if (x != 0) return false;
    }
    return true;
}

}  // namespace treesigma
