#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace tcat {

// Exact rational value; the levelizer never approximates.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d);
  static Rational parse(const std::string& text);

  bool is_zero() const { return num == 0; }
  Rational operator+(const Rational& o) const;
  Rational operator*(long long k) const;
  bool operator==(const Rational&) const = default;
  std::string str() const;
};

// Row/column-finite sparse matrix over string labels. Label order is
// the order of first appearance in the input.
struct SparseMatrix {
  std::vector<std::string> labels;
  std::map<std::string, int> label_index;
  std::map<std::pair<int, int>, Rational> entries;  // (row, col) -> value

  int add_label(const std::string& name);
  void set(const std::string& row, const std::string& col, const Rational& value);
  Rational at(int row, int col) const;
  size_t label_count() const { return labels.size(); }

  static SparseMatrix parse_coordinate_text(std::istream& in);
  bool operator==(const SparseMatrix&) const = default;
};

struct Levelization {
  struct ConnectivityClass {
    int representative = 0;                // minimal label in input order
    std::vector<std::vector<int>> levels;  // BFS distance classes, label order inside
  };
  std::vector<ConnectivityClass> classes;  // sorted by representative
  std::vector<int> class_of;               // per label
  std::vector<int> level_in_class;         // per label
  std::vector<int> order;                  // block-tridiagonalizing label order
  std::array<SparseMatrix, 3> parts;       // φ_{-1}, φ_0, φ_{+1}

  // bandwidth diagnostics per class, reported not asserted
  struct ClassStats {
    int bandwidth = 0;                // max |position difference| within the class
    int max_adjacent_level_width = 0; // max |C^n| + |C^{n+1}|
  };
  std::vector<ClassStats> stats;
};

// Partition the labels into connectivity classes of the symmetrized
// support graph, levelize each class by BFS distance from its
// representative, order labels by (class, level, input order), and
// split the matrix into the three bracket-graded parts.
Levelization levelize(const SparseMatrix& m);

// Split against an existing levelization: entry (a,c) lands in the part
// j = level(a) - level(c), so that [D, φ_j] = j φ_j for the
// level-indicator diagonal D. Throws when an entry spans more than one
// level, which cannot happen for a levelization computed from m.
std::array<SparseMatrix, 3> split_phi(const Levelization& lv, const SparseMatrix& m);

}  // namespace tcat
