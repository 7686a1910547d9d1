#include "fsc/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace fsc {

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

double parse_double(std::string_view token, const std::string& context) {
  if (token == "inf") return inf;
  double v = 0;
  const auto res = std::from_chars(token.data(), token.data() + token.size(), v);
  if (res.ec != std::errc{} || res.ptr != token.data() + token.size())
    throw input_error(context + ": cannot parse '" + std::string(token) + "' as a number");
  return v;
}

long parse_nonnegative_int(std::string_view token, const std::string& context) {
  long v = 0;
  const auto res = std::from_chars(token.data(), token.data() + token.size(), v);
  if (res.ec != std::errc{} || res.ptr != token.data() + token.size() || v < 0)
    throw input_error(context + ": cannot parse '" + std::string(token) +
                      "' as a nonnegative integer");
  return v;
}

std::ifstream open_for_reading(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open '" + path + "' for reading");
  return in;
}

std::ofstream open_for_writing(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot open '" + path + "' for writing");
  return out;
}

}  // namespace

filtered_complex load_filtration(std::istream& in) {
  std::vector<std::pair<std::vector<long>, double>> entries;
  std::optional<int> clique_order;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string context = "filtration line " + std::to_string(line_no);
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      std::istringstream comment(line.substr(hash + 1));
      std::string key;
      long value = 0;
      if (comment >> key >> value && key == "clique_order") {
        if (value < 1) throw input_error(context + ": clique_order must be positive");
        clique_order = static_cast<int>(value);
      }
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::string token;
    if (!(fields >> token)) continue;  // blank line
    const double birth = parse_double(token, context);
    if (!std::isfinite(birth))
      throw input_error(context + ": births must be finite");
    std::vector<long> vertices;
    while (fields >> token) vertices.push_back(parse_nonnegative_int(token, context));
    if (vertices.empty()) throw input_error(context + ": a simplex needs at least one vertex");
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
      throw input_error(context + ": repeated vertex in simplex");
    entries.emplace_back(std::move(vertices), birth);
  }
  if (entries.empty()) throw input_error("filtration file lists no simplices");

  // Normalize vertex ids to a dense 0..n-1 range, preserving order.
  std::map<long, vertex_id> dense;
  for (const auto& [vertices, birth] : entries)
    for (long v : vertices) dense.emplace(v, 0);
  vertex_id next = 0;
  for (auto& [original, id] : dense) id = next++;

  birth_map births;
  births.reserve(entries.size());
  for (const auto& [vertices, birth] : entries) {
    simplex s;
    s.reserve(vertices.size());
    for (long v : vertices) s.push_back(dense.at(v));
    if (!births.emplace(std::move(s), birth).second)
      throw input_error("filtration lists a simplex twice");
  }
  return filtered_complex(next, std::move(births), clique_order);
}

filtered_complex load_filtration_file(const std::string& path) {
  std::ifstream in = open_for_reading(path);
  return load_filtration(in);
}

void save_filtration(std::ostream& out, const filtered_complex& c) {
  if (c.clique_order()) out << "# clique_order " << *c.clique_order() << "\n";
  std::vector<const std::pair<const simplex, double>*> rows;
  rows.reserve(c.births().size());
  for (const auto& entry : c.births()) rows.push_back(&entry);
  std::sort(rows.begin(), rows.end(), [](const auto* x, const auto* y) {
    if (x->first.size() != y->first.size()) return x->first.size() < y->first.size();
    return x->first < y->first;
  });
  for (const auto* row : rows) {
    out << format_double(row->second);
    for (vertex_id v : row->first) out << ' ' << v;
    out << '\n';
  }
}

void save_filtration_file(const std::string& path, const filtered_complex& c) {
  std::ofstream out = open_for_writing(path);
  save_filtration(out, c);
}

distance_matrix load_distance_csv(std::istream& in) {
  std::vector<double> values;
  std::string line;
  int rows = 0, line_no = 0;
  std::size_t columns = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r,") == std::string::npos) continue;
    const std::string context = "distance matrix line " + std::to_string(line_no);
    std::size_t cols = 0;
    std::istringstream fields(line);
    std::string cell;
    while (std::getline(fields, cell, ',')) {
      const auto first = cell.find_first_not_of(" \t\r");
      const auto last = cell.find_last_not_of(" \t\r");
      if (first == std::string::npos) throw input_error(context + ": empty cell");
      values.push_back(parse_double(cell.substr(first, last - first + 1), context));
      ++cols;
    }
    if (rows == 0)
      columns = cols;
    else if (cols != columns)
      throw input_error(context + ": expected " + std::to_string(columns) + " columns, got " +
                        std::to_string(cols));
    ++rows;
  }
  if (rows == 0) throw input_error("distance matrix file is empty");
  if (static_cast<std::size_t>(rows) != columns)
    throw input_error("distance matrix must be square, got " + std::to_string(rows) + "x" +
                      std::to_string(columns));
  return distance_matrix(rows, std::move(values));
}

distance_matrix load_distance_csv_file(const std::string& path) {
  std::ifstream in = open_for_reading(path);
  return load_distance_csv(in);
}

void save_codensity_csv(std::ostream& out, const codensity_matrix& m) {
  const int n = m.size();
  for (int j = 0; j < n; ++j) out << (j ? "," : "") << m.labels[static_cast<std::size_t>(j)];
  out << '\n';
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out << (j ? "," : "") << format_double(m.at(i, j));
    out << '\n';
  }
}

std::vector<persistence_diagram> load_diagrams(std::istream& in) {
  std::vector<persistence_diagram> diagrams;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string dim_token, birth_token, death_token;
    if (!(fields >> dim_token)) continue;
    const std::string context = "diagram line " + std::to_string(line_no);
    if (!(fields >> birth_token >> death_token))
      throw input_error(context + ": expected 'dim birth death'");
    const long dim = parse_nonnegative_int(dim_token, context);
    const double birth = parse_double(birth_token, context);
    const double death = parse_double(death_token, context);
    if (death < birth) throw input_error(context + ": death before birth");
    if (static_cast<std::size_t>(dim) >= diagrams.size()) {
      const std::size_t old = diagrams.size();
      diagrams.resize(static_cast<std::size_t>(dim) + 1);
      for (std::size_t d = old; d < diagrams.size(); ++d)
        diagrams[d].dim = static_cast<int>(d);
    }
    diagrams[static_cast<std::size_t>(dim)].pairs.push_back({birth, death});
  }
  return diagrams;
}

std::vector<persistence_diagram> load_diagrams_file(const std::string& path) {
  std::ifstream in = open_for_reading(path);
  return load_diagrams(in);
}

void save_diagrams(std::ostream& out, const std::vector<persistence_diagram>& diagrams) {
  for (const auto& diagram : diagrams)
    for (const auto& [birth, death] : diagram.pairs)
      out << diagram.dim << ' ' << format_double(birth) << ' ' << format_double(death) << '\n';
}

}  // namespace fsc
