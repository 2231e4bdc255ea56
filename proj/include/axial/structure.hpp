#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "axial/radicals.hpp"

namespace axial {

enum class GraphKind { Projection, NonAnnihilation };

/// Graph on the axes of an algebra. Projection graphs are directed; the
/// non-annihilation graph is stored with both (a, b) and (b, a).
struct AxisDigraph {
  GraphKind kind = GraphKind::Projection;
  std::vector<std::string> labels;
  std::set<std::pair<std::size_t, std::size_t>> arcs;

  bool has_arc(std::size_t from, std::size_t to) const { return arcs.count({from, to}) > 0; }
  bool is_symmetric() const;
  /// Weakly connected components, each sorted, ordered by smallest member.
  std::vector<std::vector<std::size_t>> components() const;
  /// reach[a][b]: b can be reached from a along arcs (a reaches itself).
  std::vector<std::vector<bool>> reachability() const;
};

/// Directed graphs render mutual arcs as one edge with dir=both.
std::string to_dot(const AxisDigraph& graph, const std::string& name);

/// I_a, the ideal generated by the axis.
Ideal block(const AxialAlgebra& algebra, std::size_t axis_index);

/// Arc a -> b (a != b) iff the 1-component of a with respect to b is nonzero.
AxisDigraph projection_digraph(const AxialAlgebra& algebra);

/// Axes adjacent iff their product is nonzero.
AxisDigraph non_annihilation_graph(const AxialAlgebra& algebra);

struct Domination {
  std::vector<Ideal> blocks;
  /// dominates[a][b]: I_b is contained in I_a.
  std::vector<std::vector<bool>> dominates;
  /// Classes of mutual domination, each sorted, ordered by smallest member.
  std::vector<std::vector<std::size_t>> classes;
  bool symmetric = true;
  /// Every axis reachable from a in the projection digraph is dominated by a.
  bool reachability_consistent = true;
};

Domination domination(const AxialAlgebra& algebra);

struct BlockDecomposition {
  std::vector<std::vector<std::size_t>> classes;
  std::vector<Ideal> blocks;
  bool is_direct = false;
  bool all_simple = false;
  /// Classes whose axes fail to generate their block as an axial algebra.
  std::vector<std::string> deficiencies;
};

/// Requires J(A) = 0; throws PreconditionError otherwise (quotient first).
BlockDecomposition semisimple_decomposition(const AxialAlgebra& algebra);

struct Semisimplification {
  Ideal jacobson;
  AxialQuotient quotient;
  BlockDecomposition decomposition;
};

/// A / J(A) with re-verified axes, and its block decomposition.
Semisimplification semisimplify(const AxialAlgebra& algebra);

/// The algebra structure on a subalgebra, in the coordinates of its stored
/// basis, with the given axes of the ambient algebra as axes.
AxialAlgebra restrict_to(const AxialAlgebra& algebra, const Subspace& subalgebra, const std::vector<std::size_t>& axes);

/// {J in maximal : J contains the intersection of subset}. The empty subset
/// has intersection A and so an empty closure. Throws InvalidParameter when
/// the subset has an ideal that is not in the list.
std::vector<Ideal> hull_kernel_closure(const std::vector<Ideal>& maximal, const std::vector<Ideal>& subset);

struct DiscretenessCheck {
  bool discrete = true;
  /// "exhaustive" or "sampled".
  std::string mode;
  std::size_t subsets_checked = 0;
  /// Indices into the maximal-ideal list of a non-closed subset.
  std::optional<std::vector<std::size_t>> counterexample;
};

/// Exhaustive over subsets while there are at most `exhaustive_limit`
/// maximal ideals, otherwise all singletons plus seeded random subsets.
DiscretenessCheck check_hull_kernel_discrete(const std::vector<Ideal>& maximal, std::size_t exhaustive_limit = 12,
                                             std::size_t samples = 4096);
DiscretenessCheck check_hull_kernel_discrete(const AxialAlgebra& algebra);

/// Nonassociative products of the given axes with at most `max_factors`
/// factors, deduplicated, zero products dropped.
std::vector<Vector> axis_products(const AlgebraTable& table, const Matrix& axes, std::size_t max_factors);

struct IdealDecompositionCheck {
  bool ok = false;
  std::string detail;
};

/// For a nonzero ideal U: with X1 the axes in U and A_i generated by X_i,
/// checks A = A1 + A2 direct with A1 A2 = 0, and U = A1.
IdealDecompositionCheck check_ideal_decomposition(const AxialAlgebra& algebra, const Subspace& ideal);

} // namespace axial
