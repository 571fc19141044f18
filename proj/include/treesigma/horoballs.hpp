#pragma once
// Horoball vertex sets A_k(tau) in the word metric: the nested-union-of-balls
// membership test, an O(|w|) closed form, truncated enumeration, and the
// exponent-sum range of a horoball.

#include <optional>
#include <vector>

#include "treesigma/rays.hpp"
#include "treesigma/words.hpp"

namespace treesigma {

struct HoroballQuery {
    Ray ray;
    int k;  // integer horoball parameter; larger k is deeper toward the endpoint
};

/// Membership straight from the defining union of closed metric balls:
/// w lies in A_k(tau) iff d(w, tau(l)) <= l - k for some l >= max(0, k).
/// Searching l up to max(|w|, k, 0) suffices: writing b = lcp_ray(w, ray),
/// for l >= max(b, k) the quantity (l - k) - d(w, tau(l)) = 2b - |w| - k is
/// constant (each extra ray letter adds one to both sides), so larger l never
/// changes the verdict. extra_l widens the search window for cross-checks.
inline bool in_horoball_oracle(const ReducedWord& w, const HoroballQuery& q, std::size_t extra_l = 0) {
    long long lo = std::max(0, q.k);
    long long hi = std::max<long long>({static_cast<long long>(w.size()), static_cast<long long>(q.k), 0}) +
                   static_cast<long long>(extra_l);
    for (long long l = lo; l <= hi; ++l) {
        long long d = static_cast<long long>(distance(w, tau(q.ray, static_cast<std::size_t>(l))));
        if (d <= l - q.k) return true;
    }
    return false;
}

/// Closed form: w is in A_k(tau) iff 2 lcp_ray(w, tau) - |w| >= k.
/// Equivalent to the union-of-balls test (checked against it in the suite).
inline bool in_horoball(const ReducedWord& w, const HoroballQuery& q) {
    return 2 * static_cast<long long>(lcp_ray(w, q.ray)) - static_cast<long long>(w.size()) >= q.k;
}

/// A_k(tau) truncated to the ball of the given radius about 1.
inline std::vector<ReducedWord> horoball_vertices(const HoroballQuery& q, std::size_t radius,
                                                  std::size_t cap = kDefaultEnumerationCap) {
    std::vector<ReducedWord> out;
    for (const ReducedWord& w : enumerate_ball(ReducedWord::identity(q.ray.alphabet()), radius, cap))
        if (in_horoball(w, q)) out.push_back(w);
    return out;
}

/// Range information for Q_{t,k}(tau) = { expsum_t(v) : v in A_k(tau) }.
/// observed_* come from finite enumeration; bounded_above is structural
/// (the set is bounded above iff the ray is eventually only t^{-1}).
struct ExpSumRange {
    Letter letter;
    int k;
    std::optional<long long> observed_min;  // absent when the truncation is empty
    std::optional<long long> observed_max;
    bool bounded_above;
    std::optional<long long> upper_bound;
};

/// The exact upper bound for an eventually-t^{-1} ray with canonical prefix
/// of length N: the deepest ball centers are tau(N+j) = prefix . t^{-j}, and
/// the maximal-expsum element of Ball_{N+j-k}(tau(N+j)) is prefix . t^{N-k},
/// with exponent sum expsum_t(prefix) + N - k.
inline long long expsum_upper_bound(const Letter& t, const Ray& ray, int k) {
    long long n = static_cast<long long>(ray.prefix().size());
    return expsum(t, ray.prefix()) + n - k;
}

inline ExpSumRange expsum_range(const Letter& t, const HoroballQuery& q, std::size_t radius,
                                std::size_t cap = kDefaultEnumerationCap) {
    ExpSumRange r{t, q.k, std::nullopt, std::nullopt, false, std::nullopt};
    for (const ReducedWord& w : horoball_vertices(q, radius, cap)) {
        long long e = expsum(t, w);
        if (!r.observed_min || e < *r.observed_min) r.observed_min = e;
        if (!r.observed_max || e > *r.observed_max) r.observed_max = e;
    }
    r.bounded_above = eventually_only(q.ray, t.inverse());
    if (r.bounded_above) r.upper_bound = expsum_upper_bound(t, q.ray, q.k);
    return r;
}

}  // namespace treesigma
