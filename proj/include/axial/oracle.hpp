#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "axial/algebra.hpp"

namespace axial {

/// How the brute-force lattice search enumerates candidates.
enum class OracleMethod {
  /// Principal ideals of every projective point, closed under sums; work ~ p^n.
  PrincipalIdeals,
  /// Every subspace via all RREF patterns, filtered by closure; work ~ number of subspaces.
  SubspaceEnumeration,
};

struct OracleOptions {
  std::uint64_t bound = 1'000'000;
  OracleMethod method = OracleMethod::PrincipalIdeals;
};

struct IdealLattice {
  /// Every ideal, sorted.
  std::vector<Subspace> ideals;
  /// Proper ideals not properly contained in another proper ideal.
  std::vector<Subspace> maximal;
  /// The largest ideal containing none of the given axes, when one exists.
  std::optional<Subspace> largest_axis_free;
  std::uint64_t work = 0;
};

/// Candidate count the chosen method would enumerate for GF(p)^n.
std::uint64_t oracle_work_estimate(std::uint32_t p, std::size_t n, OracleMethod method);

/// Exhaustive ideal lattice of an algebra over GF(p). Uses its own modular
/// arithmetic and elimination, independent of the structural algorithms.
/// Throws BoundExceeded with the work estimate when it exceeds the bound,
/// InvalidParameter for algebras over the rationals.
IdealLattice brute_force_ideal_lattice(const AlgebraTable& algebra, const Matrix& axes = {},
                                       const OracleOptions& options = {});

} // namespace axial
