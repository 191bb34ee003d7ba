#pragma once

#include <nielsen/fund_group.hpp>
#include <nielsen/int_matrix.hpp>

#include <string>

namespace nielsen {

/// A self-map f of a rational exterior manifold with finite abelian pi_1 and
/// f_# = id, described by A(f), pi_1 and the manifold dimension.
struct Model {
  IntMatrix matrix;
  FiniteAbelianGroup group;
  int dimension = 3;
  std::string label;

  /// Throws InvalidInput when dimension < 3.
  void validate() const;
};

}  // namespace nielsen
