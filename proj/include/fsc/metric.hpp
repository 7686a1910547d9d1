#pragma once

#include <vector>

#include "fsc/core.hpp"

namespace fsc {

// Finite metric space given by its full distance matrix. Construction checks
// symmetry, a zero diagonal, nonnegativity and the triangle inequality and
// names the offending entries on failure.
class distance_matrix {
 public:
  distance_matrix(int n, std::vector<double> distances);

  int size() const noexcept { return n_; }
  double at(int i, int j) const { return d_[static_cast<std::size_t>(i) * n_ + j]; }
  const std::vector<double>& data() const noexcept { return d_; }

  double diameter_of(const std::vector<int>& points) const;

 private:
  int n_ = 0;
  std::vector<double> d_;
};

}  // namespace fsc
