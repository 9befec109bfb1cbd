#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "psg/peeling.hpp"
#include "psg/plane_graph.hpp"

namespace psg {

inline constexpr std::size_t kDefaultOracleLimit = 1'000'000;

struct EnumerationResult {
  std::vector<Circle> circles;  ///< sorted by edge set
  bool truncated = false;       ///< more circles exist beyond the limit
};

/// Exhaustive Hamiltonian circle search. Paths start at vertex 0 and extend
/// through neighbours in increasing id order; each circle is kept once, in
/// the direction whose second vertex is smaller than its last. Prunes on
/// unreachable unvisited vertices and on vertices left with fewer than two
/// usable neighbours.
EnumerationResult enumerate_hamiltonian(const PlaneSignedGraph& graph,
                                        std::size_t limit = kDefaultOracleLimit);

struct SignCensus {
  std::size_t positives = 0;
  std::size_t negatives = 0;
  std::optional<Circle> positive_witness;
  std::optional<Circle> negative_witness;

  bool both_signs() const { return positives > 0 && negatives > 0; }
};

/// Throws LimitExceeded when the enumeration is truncated.
SignCensus sign_census(const PlaneSignedGraph& graph, std::size_t limit = kDefaultOracleLimit);

struct OppositeSignWitness {
  CoHamSequence first;   ///< from the positive witness circle
  CoHamSequence second;  ///< from the negative witness circle
};

/// Two co-Hamiltonian sequences with opposite face products, pulled from a
/// positive and a negative Hamiltonian circle; nullopt when every Hamiltonian
/// circle has the same sign.
std::optional<OppositeSignWitness> opposite_sign_witness(const PlaneSignedGraph& graph,
                                                         std::size_t limit = kDefaultOracleLimit);

/// For Hamiltonian sets differing in exactly one face on each side, checks
/// sign(H1) == sign(H2) <=> sign(a) == sign(b).
bool symmetric_difference_sign_check(const PlaneSignedGraph& graph, const HamiltonianSet& first,
                                     const HamiltonianSet& second);

}  // namespace psg
