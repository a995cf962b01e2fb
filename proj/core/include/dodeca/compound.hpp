#ifndef DODECA_COMPOUND_HPP
#define DODECA_COMPOUND_HPP

#include <dodeca/chroma.hpp>
#include <dodeca/polytope.hpp>

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dodeca {

enum class CompoundLabel : std::uint8_t { A, B };

std::string to_string(CompoundLabel label);

/// Five vertex-disjoint inscribed regular tetrahedra covering all 20
/// vertices, sorted.
struct Compound {
    CompoundLabel label;
    std::array<Tetrahedron, 5> tetrahedra;

    /// Index of `t` in `tetrahedra`, or -1.
    int index_of(const Tetrahedron& t) const;
};

/// 4-subsets of the vertices with six equal pairwise distances, sorted.
/// Found by extending pairs within each distance class.
std::vector<Tetrahedron> inscribed_tetrahedra(const PolytopeModel& model);

/// The two compounds of five tetrahedra. Compound A holds the smallest
/// tetrahedron through vertex 0. Throws ConsistencyError if the ten
/// tetrahedra do not split into exactly two disjoint families.
std::pair<Compound, Compound> compounds(const PolytopeModel& model);

struct Classification {
    CompoundLabel compound;
    ColourClassPartition partition;
    /// colour k+1 occupies tetrahedron `tetrahedron_of_colour[k]` of the compound
    std::array<int, 5> tetrahedron_of_colour;
};

/// Matches each colour class of a valid colouring with a tetrahedron of one
/// compound. Throws std::invalid_argument for an invalid colouring.
Classification classify_colouring(const PolytopeModel& model, const Colouring& c);

/// Exhaustive check of vertex subsets whose pairwise distances all reach
/// the inscribed-tetrahedron edge.
struct SpreadAnalysis {
    double threshold = 0.0;
    /// largest spread subset over all 2^20 subsets
    int max_size = 0;
    /// every spread subset of size `max_size`, sorted
    std::vector<std::vector<VertexId>> maximal;
    int four_subsets_scanned = 0;
    /// spread 4-subsets found by the direct C(20,4) scan
    std::vector<Tetrahedron> spread_four_subsets;
    /// spread 4-subset plus one more vertex that stayed spread
    int extensions_tried = 0;
    int extensions_spread = 0;
};

SpreadAnalysis spread_subsets(const PolytopeModel& model);

} // namespace dodeca

#endif // DODECA_COMPOUND_HPP
