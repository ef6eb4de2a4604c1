#pragma once

#include "tcat/socle.hpp"

#include <optional>

namespace tcat {

enum class Category { smallTT, Tleft, TT, bfT, underlineT };

std::string category_name(Category c);

// Injective resolution presented as term decompositions by homological
// degree. Keys of each term name indecomposable injectives of the
// category; `target` is the decomposition of the resolved object.
struct Resolution {
  Category category;
  int t = 0;
  Table target;
  std::vector<Table> terms;     // index = homological degree
  std::optional<int> length;    // empty: infinite resolution, terms truncated

  const Table& term(int k) const;
  int max_computed_degree() const { return static_cast<int>(terms.size()) - 1; }
};

// m^{λ;μ}_{ξ;η} = Σ_ν N^λ_{ξν} N^{μ}_{ν^⊥η}
Mult m_coeff(const YoungDiagram& lam, const YoungDiagram& mu, const YoungDiagram& xi,
             const YoungDiagram& eta);

// Σ_α (α+1)(|κ_α|-|λ_α|) over extended sequences (the inner entry has
// weight zero). Degree of κ in the one-sided resolutions and layers.
int k_degree(const Seq& lam_ext, const Seq& kap_ext);

// Coefficients of the one-sided injective resolution.
Mult p_coeff(const Seq& lam_ext, const Seq& kap_ext);
const SeqLevelTable& p_table(const Seq& lam_ext);

// Resolution of V_{λ;μ} in the smallest category: term k holds (ξ,η)
// with |λ|-|ξ| = k; length |λ∩μ^⊥|.
Resolution resolution_smallTT(const YoungDiagram& lam, const YoungDiagram& mu, int t);

// Resolution of the pure simple at quotient level alpha in -1..t;
// length 0 for alpha = t, |λ| below.
Resolution resolution_pure(const YoungDiagram& lam, int alpha, int t);

// Resolution of the one-sided simple L_{λ_ext;∅}; length Σ_{α<t}|λ_α|.
Resolution resolution_Tleft(const Seq& lam_ext, int t);

// Term j of the resolution of the trivial module: {(ζ,∅;∅,ζ^⊥) : |ζ|=j}.
Table resolution_trivial(int j, int t);

// Resolution of L_𝛌 in the ambient category, materialized through
// degree_bound (the resolution itself is infinite). Verifies that every
// generated term sits at its closed-form degree.
Resolution resolution_TT(const DiagramTuple& x, int degree_bound);

// Resolution of K_𝛌 in the I-free category; finite length
// ||𝛌|| - (|λ_t|+|μ_t|).
Resolution resolution_bfT(const DiagramTuple& x);

// Doubled closed-form homological degree between tuples (doubling keeps
// the half-integer position weights exact).
int ext_degree_doubled(const DiagramTuple& kap, const DiagramTuple& lam);

// dim Ext^q between simples, by the closed formula of the category.
// Shapes: smallTT/underlineT take inner-only tuples, Tleft one-sided
// tuples, TT/bfT arbitrary tuples. Throws on shape mismatch.
Mult ext_dim(const DiagramTuple& kap, const DiagramTuple& lam, int q, Category cat);

// Künneth product: term k = ⊕_j A^{k-j} ⊗ B^j with keys glued
// componentwise. Rejected for the ambient category, whose injectives do
// not multiply into sums of indecomposable injectives this way.
Resolution kunneth_product(const Resolution& a, const Resolution& b);

}  // namespace tcat
