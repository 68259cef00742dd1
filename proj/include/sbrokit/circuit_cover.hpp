#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sbrokit/derive.hpp"
#include "sbrokit/element_set.hpp"
#include "sbrokit/matroid.hpp"
#include "sbrokit/orderability.hpp"
#include "sbrokit/search.hpp"

namespace sbrokit {

enum class CoverShape {
  two_regular,
  alternating_two_regular,
  path,
  alternating_path,
  tree,
  free,
};
std::string_view to_string(CoverShape shape);

/// The four circuit-covering properties: 2-regular (r), alternating
/// 2-regular (r_plus), path (p), alternating path (p_plus).
enum class CoverProperty { r, r_plus, p, p_plus };
std::string_view to_string(CoverProperty p);
/// "r", "rplus", "p", "pplus".
CoverProperty parse_cover_property(std::string_view text);
CoverShape shape_of(CoverProperty p);

/// A graph on ground-set elements. A digon (two parallel edges) is stored
/// once in `edges` and once more in `doubled`.
struct CoverGraph {
  ElementSet vertices;
  std::vector<std::pair<int, int>> edges;
  CoverShape shape = CoverShape::free;
  std::vector<std::pair<int, int>> doubled;

  /// Degree counting multiplicity.
  int degree(int v) const;
  bool has_edge(int u, int v) const;
};

struct PathWitness {
  std::vector<int> sequence;

  /// Consecutive pairs; shape path, or alternating_path if `alternating`.
  CoverGraph graph(bool alternating = true) const;
};

/// True iff every circuit contains both ends of some edge.
bool covers(const CoverGraph& g, const std::vector<ElementSet>& circuits);

/// Checks the structural constraints of g.shape on the vertex set; sides
/// are used by the alternating shapes.
bool has_shape(const CoverGraph& g, ElementSet a_side, ElementSet b_side);

/// covers(g, circuits_within(M, A u B)) together with vertices = A (+) B.
bool covers_pair(const Matroid& m, ElementSet a, ElementSet b,
                 const CoverGraph& g);

/// Adds the edge between the two ends (a digon for two elements).
CoverGraph close_path(const PathWitness& p);

/// M / (A n B) \ (E \ (A u B)) with A \ B and B \ A in minor labels.
struct Reduction {
  Minor minor;
  ElementSet a;
  ElementSet b;

  int lift(int e) const { return minor.to_original.at(e); }
  ElementSet lift(ElementSet x) const { return minor.lift(x); }
  std::vector<int> lift(const std::vector<int>& seq) const;
  CoverGraph lift(const CoverGraph& g) const;
};

Reduction reduce_to_disjoint(const Matroid& m, ElementSet a, ElementSet b);

/// Exhaustive search for a witness of the property on (A, B) after
/// reduction; the result is in the labels of `m`. The budget counts nodes.
SearchResult<CoverGraph> find_cover_graph(const Matroid& m, ElementSet a,
                                          ElementSet b, CoverProperty property,
                                          uint64_t budget = kDefaultBudget);

/// Path search for p (alternating = false) or p_plus (true). Alternating
/// paths start in B \ A.
SearchResult<PathWitness> find_cover_path(const Matroid& m, ElementSet a,
                                          ElementSet b, bool alternating,
                                          uint64_t budget = kDefaultBudget);

/// Union of perfect matchings phi_A (A - a + phi_A(a) a basis) and phi_B
/// (B - b + phi_B(b) a basis); covers C_A(B) u C_B(A).
CoverGraph fundamental_cover_2regular(const Matroid& m, ElementSet a,
                                      ElementSet b);

/// Spanning tree on A (+) B of A-B edges covering C_A(B) u C_B(A), grown
/// from the symmetric-exchange partners of every element.
CoverGraph fundamental_cover_tree(const Matroid& m, ElementSet a,
                                  ElementSet b);

/// C_A(B) u C_B(A).
std::vector<ElementSet> fundamental_circuits(const Matroid& m, ElementSet a,
                                             ElementSet b);

/// Alternating path covering C[A u B] for a graphic matroid, by induction
/// on a vertex of degree at most three.
PathWitness graphic_pp_path(const Matroid& m, ElementSet a, ElementSet b);

/// Same for paving (or uniform) matroids: repeatedly pick the smallest
/// (a, b) with A - a + b a basis and recurse on M / b \ a.
PathWitness paving_pp_path(const Matroid& m, ElementSet a, ElementSet b);

/// Same for spikes (SpikeRep), following the case analysis on where the
/// tip and the shared elements lie.
PathWitness spike_pp_path(const Matroid& m, ElementSet a, ElementSet b);

enum class Construction { automatic, graphic, paving, spike, search };
Construction parse_construction(std::string_view text);
std::string_view to_string(Construction c);

/// Dispatches on the representation (graphic, paving/uniform, spike) and
/// falls back to find_cover_path. Throws BudgetExceeded if the search runs
/// out and TheoremViolation if it finds nothing.
PathWitness construct_pp_path(const Matroid& m, ElementSet a, ElementSet b,
                              Construction how = Construction::automatic,
                              uint64_t budget = kDefaultBudget);

/// find_cover_graph over all unordered pairs of distinct bases in mask
/// order; stops at the first pair without a witness. Counts search nodes.
ClassCheck check_cover_class(const Matroid& m, CoverProperty property,
                             uint64_t budget_per_pair = kDefaultBudget);

}  // namespace sbrokit
