#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "topo/complex.hpp"

namespace topo {

using ElementId = int;

/// Stand-in id for the implicit least element 0̂ wherever an element argument
/// is accepted.
inline constexpr ElementId kBottom = -1;

struct PosetElement {
    ElementId id = 0;
    int rank = 1;
    std::string label;
};

struct PosetValidation {
    bool valid = true;
    std::optional<ElementId> offending;
    std::string message;
};

/**
 * Simplicial poset: graded poset with an implicit 0̂ whose lower intervals
 * [0̂, x] are Boolean algebras.
 *
 * Elements and cover pairs are stored as given; validate() checks the
 * simplicial-poset axioms. Every other operation that needs them requires a
 * valid poset and throws InvalidPosetError otherwise. Coloring maps atom ids
 * to colors.
 */
class SimplicialPoset {
public:
    SimplicialPoset() = default;
    SimplicialPoset(std::vector<PosetElement> elements,
                    std::vector<std::pair<ElementId, ElementId>> covers,
                    std::optional<Coloring> coloring = std::nullopt);

    const std::vector<PosetElement>& elements() const { return elements_; }
    const std::vector<std::pair<ElementId, ElementId>>& covers() const { return covers_; }
    const std::optional<Coloring>& coloring() const { return coloring_; }
    bool has_coloring() const { return coloring_.has_value(); }

    bool has_element(ElementId id) const { return index_.count(id) > 0; }
    const PosetElement& element(ElementId id) const;
    int rank(ElementId id) const { return id == kBottom ? 0 : element(id).rank; }
    /// Maximum rank (0 for the one-element poset {0̂}).
    int rank_of_poset() const;
    int color(ElementId atom) const;

    /// Elements covered by `id` (for an atom: empty; 0̂ is implicit).
    const std::vector<ElementId>& lower_covers(ElementId id) const;
    /// Elements covering `id`; for kBottom these are the atoms.
    const std::vector<ElementId>& upper_covers(ElementId id) const;
    /// Atoms weakly below `id`, ascending.
    std::vector<ElementId> atoms_below(ElementId id) const;
    /// Ids of rank-1 elements, ascending.
    std::vector<ElementId> atoms() const;
    /// Maximal elements, ascending.
    std::vector<ElementId> facets() const;
    /// Ids of the elements of a given rank, ascending.
    std::vector<ElementId> elements_of_rank(int rank) const;
    /// True when a <= b (kBottom lies below everything).
    bool less_equal(ElementId a, ElementId b) const;

    PosetValidation validate() const;
    /// Throws InvalidPosetError with the first violation.
    void require_valid() const;

private:
    std::vector<PosetElement> elements_;
    std::vector<std::pair<ElementId, ElementId>> covers_;
    std::optional<Coloring> coloring_;
    std::map<ElementId, std::size_t> index_;
    std::map<ElementId, std::vector<ElementId>> lower_;
    std::map<ElementId, std::vector<ElementId>> upper_;
    std::vector<ElementId> atoms_;
};

/// Element ids follow all_faces order without ∅, so atom i is the i-th
/// vertex and order_complex(face_poset(K)) reproduces barycentric_subdivision(K).
SimplicialPoset face_poset(const SimplicialComplex& complex);

/// Order complex of P minus 0̂, colored by rank.
SimplicialComplex order_complex(const SimplicialPoset& poset);

/// Upper set of `tau` re-ranked so that tau becomes the new 0̂. Atoms of the
/// link inherit the color of the one atom they add to tau.
SimplicialPoset poset_link(const SimplicialPoset& poset, ElementId tau);

SimplicialPoset poset_rank_select(const SimplicialPoset& poset, const ColorSet& colors);

PropertyReport check_poset_properties(const SimplicialPoset& poset);

/// Rank-count f-vector (f_{k-1} = #rank-k elements) and the matching h-vector.
std::pair<FVector, HVector> poset_f_h_vectors(const SimplicialPoset& poset);

bool poset_strongly_connected(const SimplicialPoset& poset);

/// Connectivity of the realization, i.e. of the order complex.
bool poset_is_connected(const SimplicialPoset& poset);

/// Distinct colors used; throws without a coloring.
ColorSet poset_color_set(const SimplicialPoset& poset);

} // namespace topo
