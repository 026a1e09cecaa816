#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "topo/homology.hpp"

namespace topo {

/// A group word. Letter +k is generator k-1, letter -k its inverse (k >= 1).
using Word = std::vector<int>;

inline int letter(std::size_t generator, bool inverse = false) {
    const int k = static_cast<int>(generator) + 1;
    return inverse ? -k : k;
}
inline std::size_t letter_generator(int l) { return static_cast<std::size_t>(l < 0 ? -l : l) - 1; }

Word inverse_word(const Word& w);
/// Cancels adjacent x x^-1 pairs.
Word free_reduce(const Word& w);
/// Free reduction followed by stripping x ... x^-1 from the ends.
Word cyclic_reduce(const Word& w);

/// Symbolic generator. For complexes it names an undirected edge {u < v}
/// traversed u -> v; for posets it names a rank-2 element traversed u -> v.
struct Generator {
    VertexId u = -1;
    VertexId v = -1;
    std::optional<int> element;
    bool tree = false;         // in the spanning tree T (relator of length 1)
    bool in_subcomplex = false; // edge of Δ_S

    std::string describe() const;
    bool operator==(const Generator&) const = default;
};

struct GroupPresentation {
    std::vector<Generator> generators;
    std::vector<Word> relators;

    std::size_t total_relator_length() const;
    /// Throws InvalidArgument when a relator names an undeclared generator.
    void validate() const;
    /// Generator index of the edge {a, b} (either orientation), if present.
    std::optional<std::size_t> find_edge(VertexId a, VertexId b) const;
};

/// `g<i> := edge(u,v)` lines, then one relator per line as `g1 g2 g3^-1`
/// (generator indices 1-based).
std::string to_text(const GroupPresentation& presentation);
std::string word_to_text(const Word& w);

/// Exponent-sum matrix (relators x generators) and its cokernel invariants.
HomologySummary abelianization(const GroupPresentation& presentation);

/**
 * Bounded Tietze simplification.
 *
 * Each round: free and cyclic reduction, removal of empty relators, removal
 * of duplicates up to rotation and inversion, then eliminations of
 * generators that occur exactly once in some relator, substituting the
 * solved word everywhere. An elimination is applied only if it does not
 * increase the total relator length. Stops at a fixpoint or after
 * `max_rounds` rounds.
 */
GroupPresentation tietze_simplify(GroupPresentation presentation, int max_rounds = 50);

} // namespace topo
