#pragma once

#include "tcat/resolution.hpp"

#include <set>
#include <string>

namespace tcat::oracle {

// Schur expansion of s_μ · s_ν by symmetric-function arithmetic:
// monomial-basis representation, dual Jacobi-Trudi determinants over
// the elementary basis, and dominance-triangular extraction. Shares
// nothing with the tableau path except the YoungDiagram type.
std::map<YoungDiagram, Mult> schur_product(const YoungDiagram& mu, const YoungDiagram& nu);

// N^λ_{μν} through schur_product. Throws when |λ| exceeds the bound.
Mult lr_oracle(const YoungDiagram& lam, const YoungDiagram& mu, const YoungDiagram& nu,
               int max_boxes = 12);

// Definition-literal level sets: materialize the bounded down-set and
// repeatedly remove its maximal elements. For the unbounded order the
// down-set is restricted to elements reachable with at most q_bound
// added box pairs.
std::vector<std::set<DegreeVector>> poset_level_oracle(const DegreeVector& l, PosetKind kind,
                                                       int q_bound);

// Composition factors of the injective I_𝛋 in the I-free category:
// the sum of all socle layers (finitely many).
Table composition_factors_bfT(const DiagramTuple& kap);

// Exactness shadow: Σ_k (-1)^k [factors of term k of resolution_bfT]
// equals the resolved simple alone.
bool composition_euler_bfT(const DiagramTuple& x);

struct TruncatedEulerReport {
  bool ok = false;
  int degree_bound = 0;
  std::string detail;
};

// Same alternating sum for the ambient-category resolution, truncated
// at degree_bound and restricted to factor keys with at most
// key_box_bound boxes. The truncation residual must be (up to sign)
// part of the factors of the first omitted term.
TruncatedEulerReport composition_euler_TT(const DiagramTuple& x, int degree_bound,
                                          int key_box_bound);

}  // namespace tcat::oracle
