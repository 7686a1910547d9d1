#include "fsc/metric.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fsc {

distance_matrix::distance_matrix(int n, std::vector<double> distances)
    : n_(n), d_(std::move(distances)) {
  if (n_ <= 0) throw input_error("distance matrix needs at least one point");
  if (d_.size() != static_cast<std::size_t>(n_) * n_)
    throw input_error("distance matrix must be " + std::to_string(n_) + "x" + std::to_string(n_));
  for (int i = 0; i < n_; ++i) {
    if (at(i, i) != 0.0)
      throw input_error("distance matrix diagonal entry (" + std::to_string(i) + "," +
                        std::to_string(i) + ") is not zero");
    for (int j = 0; j < n_; ++j) {
      const double v = at(i, j);
      if (!std::isfinite(v) || v < 0.0)
        throw input_error("distance matrix entry (" + std::to_string(i) + "," +
                          std::to_string(j) + ") is not a finite nonnegative number");
      if (v != at(j, i))
        throw input_error("distance matrix is not symmetric at (" + std::to_string(i) + "," +
                          std::to_string(j) + ")");
    }
  }
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k)
        if (at(i, k) > at(i, j) + at(j, k))
          throw input_error("triangle inequality fails for points (" + std::to_string(i) + "," +
                            std::to_string(j) + "," + std::to_string(k) + "): d(i,k) > d(i,j) + d(j,k)");
}

double distance_matrix::diameter_of(const std::vector<int>& points) const {
  double best = 0.0;
  for (std::size_t a = 0; a < points.size(); ++a)
    for (std::size_t b = a + 1; b < points.size(); ++b)
      best = std::max(best, at(points[a], points[b]));
  return best;
}

}  // namespace fsc
