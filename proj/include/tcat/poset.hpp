#pragma once

#include "tcat/diagram.hpp"

#include <optional>
#include <set>
#include <vector>

namespace tcat {

// Degree vector (l_•, l; m, m_•): the component-wise sizes of a tuple.
// Storage mirrors DiagramTuple: positions 0..t plus the inner pair.
struct DegreeVector {
  std::vector<int> left;  // positions 0..t
  int l = 0;
  int m = 0;
  std::vector<int> right;

  int t() const { return static_cast<int>(left.size()) - 1; }
  int total() const;  // |.|
  // Extended views: index 0 = inner, index b = position b-1.
  std::vector<int> left_extended() const;
  std::vector<int> right_extended() const;

  DegreeVector operator+(const DegreeVector& o) const;
  bool operator==(const DegreeVector&) const = default;
  auto operator<=>(const DegreeVector&) const = default;
};

DegreeVector zero_degree(int t);
DegreeVector degree_of(const DiagramTuple& x);
void check_degree(const DegreeVector& v);

enum class PosetKind { P, bfP, Pleft, Pright, P00 };

// The partial order of the given kind; throws on shape mismatch (e.g.
// Pleft with nonzero right-hand data).
bool leq(const DegreeVector& a, const DegreeVector& b, PosetKind kind);

// (l+m)(t+1) + Σ_j (l_j+m_j)(t-j): the largest level with a nonempty
// level set in the bfP order.
int q_max(const DegreeVector& v);

// Elementary alterations: (i)-(iii) for bfP, (i)-(iv) for P.
std::set<DegreeVector> one_step(const DegreeVector& v, PosetKind kind);

inline constexpr size_t kDefaultLevelCap = 1u << 20;

// Level sets by frontier peeling: candidates for level q+1 are the
// one-step alterations of level q, filtered by membership in earlier
// levels and mutual dominance. Returns levels 0..q_bound.
std::vector<std::set<DegreeVector>> level_sets(const DegreeVector& v, PosetKind kind,
                                               int q_bound,
                                               size_t max_level_size = kDefaultLevelCap);

// The unique q with k in level q of the poset below l; empty when k is
// not below l.
std::optional<int> level_of(const DegreeVector& k, const DegreeVector& l, PosetKind kind);

// All degree vectors for given t with |.| <= max_total.
std::vector<DegreeVector> all_degree_vectors(int t, int max_total);

}  // namespace tcat
