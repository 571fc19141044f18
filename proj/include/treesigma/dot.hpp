#pragma once
// Graphviz DOT rendering of a ball in the Cayley tree, optionally annotated
// with horoball membership (filled nodes) and the geodesic ray (heavy edges).

#include <ostream>
#include <vector>

#include "treesigma/horoballs.hpp"
#include "treesigma/rays.hpp"
#include "treesigma/words.hpp"

namespace treesigma {

namespace detail {

inline std::string dot_node_id(const ReducedWord& w) {
    return w.empty() ? "1" : to_string(w);
}

}  // namespace detail

/// Emits the radius-N ball about 1 as an undirected DOT graph. Nodes appear
/// in length-then-lexicographic order; each non-identity word is joined to
/// the word with its last letter removed. When a query is given, members of
/// A_k(tau) get style=filled fillcolor=gray80, and the edges along tau get
/// weight=10 penwidth=2.0.
inline void emit_tree_dot(std::ostream& out, Alphabet alphabet, std::size_t radius,
                          const std::optional<HoroballQuery>& query,
                          std::size_t cap = kDefaultEnumerationCap) {
    std::vector<ReducedWord> ball = enumerate_ball(ReducedWord::identity(alphabet), radius, cap);
    out << "graph cayley_ball {\n";
    out << "  node [shape=circle, fontsize=10];\n";
    for (const ReducedWord& w : ball) {
        out << "  \"" << detail::dot_node_id(w) << "\"";
        if (query && in_horoball(w, *query)) out << " [style=filled, fillcolor=gray80]";
        out << ";\n";
    }
    for (const ReducedWord& w : ball) {
        if (w.empty()) continue;
        ReducedWord parent = ReducedWord::reduce(
            alphabet, std::span<const Letter>(w.letters().data(), w.size() - 1));
        out << "  \"" << detail::dot_node_id(parent) << "\" -- \"" << detail::dot_node_id(w) << "\"";
        if (query && lcp_ray(w, query->ray) == w.size()) out << " [weight=10, penwidth=2.0]";
        out << ";\n";
    }
    out << "}\n";
}

}  // namespace treesigma
