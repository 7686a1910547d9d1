#pragma once

// Filtered simplicial complexes encoded by their size functions: every stored
// simplex carries the filtration value (birth) at which it enters the
// filtration. Simplices that are not stored and not derivable never enter and
// have birth +inf. Births of stored simplices are always finite.

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace fsc {

using vertex_id = int;

// Strictly increasing list of vertex ids.
using simplex = std::vector<vertex_id>;

inline constexpr double inf = std::numeric_limits<double>::infinity();

// Input violates a documented precondition or file format.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An exact search would exceed its configured cap. Caps are surfaced as
// options; exceeding one is a hard error, never a silent approximation.
struct feasibility_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// a - b with the convention inf - inf = 0.
inline double ext_sub(double a, double b) {
  if (std::isinf(a) && std::isinf(b)) return 0.0;
  return a - b;
}

// |a - b| with the convention inf - inf = 0.
inline double ext_absdiff(double a, double b) {
  if (std::isinf(a) && std::isinf(b)) return 0.0;
  if (std::isinf(a) || std::isinf(b)) return inf;
  return std::abs(a - b);
}

// Sorts and checks for duplicate vertices.
simplex make_simplex(std::vector<vertex_id> vertices);

simplex simplex_union(const simplex& a, const simplex& b);

std::string simplex_to_string(const simplex& s);

struct simplex_hash {
  std::size_t operator()(const simplex& s) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (vertex_id v : s) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

using birth_map = std::unordered_map<simplex, double, simplex_hash>;

struct validation_issue {
  simplex face;
  simplex coface;
  double face_birth = 0;
  double coface_birth = 0;
};

struct validation_report {
  std::vector<validation_issue> monotonicity;  // face born after coface
  std::vector<simplex> clique_mismatches;      // stored birth != skeleton-derived birth
  bool ok() const { return monotonicity.empty() && clique_mismatches.empty(); }
};

class filtered_complex {
 public:
  // Takes ownership of the stored births. Faces omitted from `births` inherit
  // the minimum birth over the listed cofaces containing them; after filling,
  // every face of a stored simplex is stored. Monotonicity is not enforced
  // here; validate() reports violations.
  //
  // clique_order = k asserts that membership of any simplex is decided by its
  // k-skeleton, which makes size_of defined above the stored dimensions.
  filtered_complex(int n_vertices, birth_map births,
                   std::optional<int> clique_order = std::nullopt);

  int vertex_count() const noexcept { return n_; }
  int max_dim() const noexcept { return max_dim_; }
  std::optional<int> clique_order() const noexcept { return clique_; }
  const birth_map& births() const noexcept { return births_; }
  std::size_t simplex_count() const noexcept { return births_.size(); }

  // Birth of an arbitrary simplex: the stored value, the k-skeleton-derived
  // value for clique complexes, or +inf if the simplex never appears.
  double size_of(const simplex& s) const;

  double vertex_birth(vertex_id v) const;

  validation_report validate() const;

 private:
  int n_ = 0;
  int max_dim_ = 0;
  std::optional<int> clique_;
  birth_map births_;
};

struct restriction {
  filtered_complex complex;
  std::vector<vertex_id> kept;  // kept[new_id] = old_id
};

// Full filtered subcomplex spanned by `keep`; vertex ids are renormalized to
// 0..|keep|-1 in increasing original order and the relabeling is returned.
restriction restrict_complex(const filtered_complex& c,
                             const std::vector<vertex_id>& keep);

// Searches for a birth-preserving bijection between the vertex sets, pruning
// assignments by per-vertex multisets of incident simplex births. Exponential
// in the worst case; refuses vertex sets larger than `vertex_cap`.
std::optional<std::vector<vertex_id>> find_isomorphism(
    const filtered_complex& a, const filtered_complex& b, int vertex_cap = 10);

// Dense table of simplex births indexed by vertex bitmask, for the
// exhaustive-enumeration paths. value[0] is unused.
struct size_table {
  int n = 0;
  std::vector<double> value;  // size 1 << n
  double operator[](std::uint32_t mask) const { return value[mask]; }
};

size_table build_size_table(const filtered_complex& c, int vertex_cap = 26);

// Births of all vertex pairs plus, on the diagonal, the vertex births.
// This is the complete description of a complex with clique_order 1 and the
// input to the SIMD reduction kernels, which require all entries finite.
struct pair_matrix {
  int n = 0;
  std::vector<double> e;  // n*n, symmetric
  bool all_finite = true;
  double at(int i, int j) const { return e[static_cast<std::size_t>(i) * n + j]; }
  const double* row(int i) const { return e.data() + static_cast<std::size_t>(i) * n; }
};

pair_matrix build_pair_matrix(const filtered_complex& c);

}  // namespace fsc
