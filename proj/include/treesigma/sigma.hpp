#pragma once
// The decision layer: inclusion/exclusion criteria for membership of a
// boundary point in Sigma^1 of the induced action, with machine-checkable
// certificates attached to every verdict.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "treesigma/coefficients.hpp"
#include "treesigma/horoballs.hpp"
#include "treesigma/rays.hpp"
#include "treesigma/words.hpp"

namespace treesigma {

enum class Status { In, Out, Unknown };

enum class Criterion {
    Thm2_Generation,      // a finite S generates B over every A_k(tau), k >= 0
    Cor_ImageSurjective,  // phi(A_k(tau)) = phi(A) for every k >= 0
    Thm_KernelSubwords,   // infinitely many disjoint ker-phi subwords
    Cor_BoundedExpsum,    // Q_{t,k}(tau) bounded above for a required letter t
    Family_Witness,       // an index psi at which all conjugated generators vanish
};

inline std::string to_string(Status s) {
    switch (s) {
        case Status::In: return "In";
        case Status::Out: return "Out";
        default: return "Unknown";
    }
}

inline std::string to_string(Criterion c) {
    switch (c) {
        case Criterion::Thm2_Generation: return "Thm2_Generation";
        case Criterion::Cor_ImageSurjective: return "Cor_ImageSurjective";
        case Criterion::Thm_KernelSubwords: return "Thm_KernelSubwords";
        case Criterion::Cor_BoundedExpsum: return "Cor_BoundedExpsum";
        default: return "Family_Witness";
    }
}

/// Witness data attached to a verdict; every field is re-checkable.
struct Certificate {
    Criterion criterion;

    std::optional<Letter> letter;                      // Cor_BoundedExpsum: the bounded direction
    std::optional<long long> bound;                    // Cor_BoundedExpsum: sup Q_{t,0}(tau)
    std::optional<ReducedWord> witness_index;          // Family_Witness: psi in C
    std::optional<long long> witness_exponent;         // Family_Witness: m with psi = s^m
    std::optional<long long> witness_support_radius;   // Family_Witness: R(S)
    std::optional<std::string> recurring_value;        // Thm_KernelSubwords: phi(tau(i))
    std::optional<std::pair<long long, long long>> recurrence_indices;  // i < j with equal image
    std::optional<std::string> generating_set;         // Thm2_Generation

    /// Fixed field order: criterion first, then witness fields key=value.
    std::string to_record() const {
        std::string s = treesigma::to_string(criterion);
        if (letter) s += ";t=" + treesigma::to_string(*letter);
        if (bound) s += ";bound=" + std::to_string(*bound);
        if (witness_index) s += ";psi=" + treesigma::to_string(*witness_index);
        if (witness_exponent) s += ";m=" + std::to_string(*witness_exponent);
        if (witness_support_radius) s += ";R=" + std::to_string(*witness_support_radius);
        if (recurring_value) s += ";value=" + *recurring_value;
        if (recurrence_indices)
            s += ";i=" + std::to_string(recurrence_indices->first) +
                 ";j=" + std::to_string(recurrence_indices->second);
        if (generating_set) s += ";S=" + *generating_set;
        return s;
    }
};

struct Verdict {
    Status status;
    std::optional<Certificate> certificate;

    std::string to_record() const {
        std::string s = treesigma::to_string(status);
        if (certificate) s += ";" + certificate->to_record();
        return s;
    }
};

/// Letters t for which B can only be finitely generated over subsets with
/// unbounded expsum_t. Lehnert: denominators p_i require arbitrarily large
/// positive a_i exponent sums. Lamplighter and the C-part of a wreath family
/// need both directions of every C-generator.
inline std::vector<Letter> required_unbounded_letters(const FamilySpec& spec) {
    std::vector<Letter> out;
    if (const auto* l = std::get_if<LehnertFamily>(&spec.variant)) {
        for (std::size_t i = 0; i < l->primes.size(); ++i)
            out.emplace_back(static_cast<int>(i) + 1, +1);
        return out;
    }
    int c_rank = std::get_if<LamplighterFamily>(&spec.variant)
                     ? 1
                     : std::get<WreathFamily>(spec.variant).c_rank;
    for (int i = 1; i <= c_rank; ++i) {
        out.emplace_back(i, +1);
        out.emplace_back(i, -1);
    }
    return out;
}

/// Exclusion by bounded exponent sums: fires when the ray is eventually only
/// t^{-1} for a letter t the family requires to be unbounded.
inline std::optional<Certificate> excluded_by_bounded_expsum(const FamilySpec& spec, const Ray& ray) {
    for (const Letter& t : required_unbounded_letters(spec)) {
        if (!eventually_only(ray, t.inverse())) continue;
        Certificate cert{Criterion::Cor_BoundedExpsum};
        cert.letter = t;
        cert.bound = expsum_upper_bound(t, ray, 0);
        return cert;
    }
    return std::nullopt;
}

struct KernelRecurrence {
    std::string value;      // the recurring phi-image, rendered
    long long first_index;  // i < j with phi(tau(i)) = phi(tau(j))
    long long second_index;
};

/// Recurrence of phi along the prefixes tau(i): for an eventually periodic
/// ray a value recurs iff the period's image is the identity (both supported
/// image models are torsion free). The witness subword tau(i)^{-1} tau(j)
/// and all its period shifts lie in ker phi.
inline std::optional<KernelRecurrence> kernel_recurrence(const PhiImageModel& model, const Ray& ray) {
    long long n = static_cast<long long>(ray.prefix().size());
    long long l = static_cast<long long>(ray.period().size());
    if (const auto* ab = std::get_if<FreeAbelianExpVector>(&model)) {
        for (std::size_t i = 0; i < ab->primes.size(); ++i)
            if (expsum(Letter(static_cast<int>(i) + 1, +1), ray.period()) != 0) return std::nullopt;
        std::string value = "(";
        ReducedWord prefix = ray.prefix();
        for (std::size_t i = 0; i < ab->primes.size(); ++i) {
            if (i) value += ",";
            value += std::to_string(expsum(Letter(static_cast<int>(i) + 1, +1), prefix));
        }
        value += ")";
        return KernelRecurrence{value, n, n + l};
    }
    const auto& proj = std::get<TrivialOnDProjectToC>(model);
    if (!project_to_C(ray.period(), proj.c_rank).empty()) return std::nullopt;
    ReducedWord image = project_to_C(tau(ray, static_cast<std::size_t>(n)), proj.c_rank);
    return KernelRecurrence{image.empty() ? "1" : to_string(image), n, n + l};
}

/// Structural test for phi(A_k(tau)) = phi(A) for all k >= 0.
/// Free abelian image: every generator's exponent sums over A_k(tau) must be
/// unbounded in both directions. Projection-to-C image: a D-letter recurring
/// in the period (or full kernel recurrence) supplies, for any target image,
/// a ker-phi correction placing a preimage inside the horoball.
inline bool image_surjective_onto_horoballs(const FamilySpec& spec, const Ray& ray) {
    PhiImageModel model = image_model(spec);
    if (const auto* ab = std::get_if<FreeAbelianExpVector>(&model)) {
        for (std::size_t i = 0; i < ab->primes.size(); ++i) {
            Letter t(static_cast<int>(i) + 1, +1);
            if (eventually_only(ray, t) || eventually_only(ray, t.inverse())) return false;
        }
        return true;
    }
    const auto& proj = std::get<TrivialOnDProjectToC>(model);
    for (const Letter& l : ray.period().letters())
        if (l.index > proj.c_rank) return true;
    return kernel_recurrence(model, ray).has_value();
}

namespace detail {

inline Certificate wreath_witness_certificate(const Ray& ray, int c_rank) {
    // The tail of the ray consists of C-letters; the boundary point is the
    // prefix-translate of the C-ray (period)^inf, so the witness is computed
    // there with S = {delta_1} and k = 0.
    ReducedWord period_c = project_to_C(ray.period(), c_rank);
    Ray c_ray = Ray::make(ReducedWord::identity(Alphabet(c_rank)), period_c);
    std::vector<SupportVector> s = {SupportVector::delta(ReducedWord::identity(Alphabet(c_rank)))};
    HoroballQuery q{c_ray, 0};
    ReducedWord psi = nongeneration_witness(s, q);
    Certificate cert{Criterion::Family_Witness};
    cert.witness_index = psi;
    cert.witness_exponent = static_cast<long long>(psi.size());
    cert.witness_support_radius = static_cast<long long>(support_radius(s));
    return cert;
}

}  // namespace detail

/// Classifies a boundary point for one of the supported families.
/// The dichotomy is total for all three families, so Unknown never occurs.
inline Verdict classify(const FamilySpec& spec, const Ray& ray) {
    if (!(ray.alphabet() == spec.alphabet())) throw AlphabetMismatch();

    if (std::get_if<LehnertFamily>(&spec.variant)) {
        if (auto cert = excluded_by_bounded_expsum(spec, ray)) return {Status::Out, cert};
        if (image_surjective_onto_horoballs(spec, ray))
            return {Status::In, Certificate{Criterion::Cor_ImageSurjective}};
        // Not eventually a_i^{-1} for any i: S = {1} generates B over every
        // A_k(tau) since each Q_{a_i,k} is unbounded above.
        Certificate cert{Criterion::Thm2_Generation};
        cert.generating_set = "1";
        return {Status::In, cert};
    }

    if (std::get_if<LamplighterFamily>(&spec.variant)) {
        // Both boundary points are excluded: B is not finitely generated over
        // any proper subset of <t>.
        return {Status::Out, detail::wreath_witness_certificate(ray, 1)};
    }

    const auto& w = std::get<WreathFamily>(spec.variant);
    bool period_has_d = false;
    for (const Letter& l : ray.period().letters())
        if (l.index > w.c_rank) period_has_d = true;
    if (period_has_d) {
        if (auto rec = kernel_recurrence(image_model(spec), ray)) {
            Certificate cert{Criterion::Thm_KernelSubwords};
            cert.recurring_value = rec->value;
            cert.recurrence_indices = {rec->first_index, rec->second_index};
            return {Status::In, cert};
        }
        return {Status::In, Certificate{Criterion::Cor_ImageSurjective}};
    }
    return {Status::Out, detail::wreath_witness_certificate(ray, w.c_rank)};
}

}  // namespace treesigma
