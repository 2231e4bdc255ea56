#pragma once

#include <vector>

#include "axial/frobenius.hpp"

namespace axial {

/// The largest ideal containing no generating axis. Computed as the largest
/// ideal inside the intersection over axes a of the sum of A_lambda(a),
/// lambda != 1: by primitivity an ideal omits a exactly when all its
/// 1-components with respect to a vanish.
Ideal axial_radical(const AxialAlgebra& algebra);

/// P_b: the largest ideal inside the sum of A_lambda(b), lambda != 1.
/// Every ideal not containing b lies in P_b.
Ideal largest_ideal_avoiding_axis(const AxialAlgebra& algebra, std::size_t axis_index);

/// Every maximal ideal M misses some axis b (otherwise M contains the
/// generators), so M lies in P_b and equals it by maximality. The result is
/// the distinct P_b with simple quotient, sorted.
std::vector<Ideal> maximal_ideals(const AxialAlgebra& algebra);

/// Intersection of the maximal ideals; the whole algebra when there are none.
Ideal jacobson_radical(const AxialAlgebra& algebra);

/// Zero axial radical and every block I_a equal to A. Any nonzero ideal
/// either contains an axis (and so its block) or lies in the radical.
bool is_simple(const AxialAlgebra& algebra);

struct RadicalReport {
  Ideal axial_radical;
  Ideal jacobson_radical;
  Ideal form_radical;
  std::vector<Ideal> maximal_ideals;
  bool chain_ok = false;
};

RadicalReport radical_report(const AxialAlgebra& algebra, const FrobeniusForm& form);

} // namespace axial
