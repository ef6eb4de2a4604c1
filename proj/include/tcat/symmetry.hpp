#pragma once

#include "tcat/resolution.hpp"

#include <string>
#include <vector>

namespace tcat {

struct Counterexample {
  std::string input;
  std::string lhs;
  std::string rhs;
  bool operator==(const Counterexample&) const = default;
};

struct CheckReport {
  std::string name;
  std::string range;
  size_t cases = 0;
  size_t skipped = 0;  // inputs outside a check's precondition
  std::vector<Counterexample> counterexamples;
  bool pass = false;

  bool operator==(const CheckReport&) const = default;
};

// Reversal symmetries of the one-sided data: the resolution
// coefficients and degrees, the one-sided socle layers, and the Ext
// dimensions in both categories.
CheckReport check_rev_symmetry(int t, int max_boxes, int workers = 1);

// t=0 Ext symmetries: the ambient-category dimensions against the
// eight-factor closed sum with inner/outer swap, and the I-free
// four-factor sum on pairs with matching left box counts.
CheckReport check_t0_ext_symmetry(int max_boxes, int workers = 1);

enum class DualityKind { Tleft, bfT, bfT_t0 };

// Ext dimensions at involution-twisted arguments against socle-layer
// Hom multiplicities of the M-modules (or of the injective hulls at t=0).
CheckReport check_ext_hom_duality(int t, int max_boxes, DualityKind kind, int workers = 1);

// m^{λ;μ}_{ξ;η} = h^{λ;μ^⊥}_{ξ;η^⊥} on complete ranges.
CheckReport check_m_h_identity(int max_boxes, int workers = 1);

}  // namespace tcat
