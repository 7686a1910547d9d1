#pragma once

// File formats.
//
// Filtration (one simplex per line):
//     birth v0 v1 ... vk
// Vertices are base-10 nonnegative integers, the birth a decimal float, `#`
// starts a comment. The writer records the clique order, when set, as a
// `# clique_order k` comment that the loader recognizes. Births are emitted
// with shortest round-trip formatting, so load -> save -> load reproduces the
// complex bit for bit.
//
// Distance matrix: CSV, full symmetric matrix with zero diagonal.
//
// Diagrams: lines of `dim birth death`, with `inf` for essential classes.

#include <iosfwd>
#include <string>
#include <vector>

#include "fsc/codensity.hpp"
#include "fsc/core.hpp"
#include "fsc/metric.hpp"
#include "fsc/persistence.hpp"

namespace fsc {

// Shortest decimal that parses back to exactly v; "inf" for +infinity.
std::string format_double(double v);

filtered_complex load_filtration(std::istream& in);
filtered_complex load_filtration_file(const std::string& path);
void save_filtration(std::ostream& out, const filtered_complex& c);
void save_filtration_file(const std::string& path, const filtered_complex& c);

distance_matrix load_distance_csv(std::istream& in);
distance_matrix load_distance_csv_file(const std::string& path);

// Header row of vertex labels, then one row per vertex; +inf entries print
// as "inf".
void save_codensity_csv(std::ostream& out, const codensity_matrix& m);

std::vector<persistence_diagram> load_diagrams(std::istream& in);
std::vector<persistence_diagram> load_diagrams_file(const std::string& path);
void save_diagrams(std::ostream& out, const std::vector<persistence_diagram>& diagrams);

}  // namespace fsc
