#pragma once

#include "tcat/diagram.hpp"
#include "tcat/poset.hpp"

#include <map>
#include <utility>

namespace tcat {

// Finite multiplicity table over tuple keys; zero entries are never stored.
using Table = std::map<DiagramTuple, Mult>;
// Table over plain diagram pairs (ξ,η).
using PairTable = std::map<std::pair<YoungDiagram, YoungDiagram>, Mult>;
// Table over extended one-sided sequences, grouped by displacement level.
struct SeqLevelTable {
  std::map<int, std::map<Seq, Mult>> by_level;
};

// Σ_b b·(|to_b| - |from_b|) over extended index b; the level at which
// `to` sits below `from` in the one-sided order.
int ext_displacement(const Seq& from_ext, const Seq& to_ext);

// h^{λ;μ}_{ξ;η} = Σ_ν N^λ_{ξν} N^μ_{νη}
Mult h_coeff(const YoungDiagram& lam, const YoungDiagram& mu, const YoungDiagram& xi,
             const YoungDiagram& eta);

// Layer q of the socle filtration of (V_*)_λ ⊗ V_μ: {(ξ,η) ↦ h} with |λ|-|ξ| = q.
PairTable socle_layers_VV(const YoungDiagram& lam, const YoungDiagram& mu, int q);

// All one-sided layer data of J_{λ_ext;∅}: κ_ext ↦ z^{λ_ext}_{κ_ext},
// grouped by level. Cached per λ_ext.
const SeqLevelTable& z_table(const Seq& lam_ext);
Mult z_coeff(const Seq& lam_ext, const Seq& kap_ext);

// One-sided socle layer data of M_{λ_ext;∅} (two-step quotients); same
// chain structure as the injective-resolution coefficients but without
// the conjugation twist on the moved part.
const SeqLevelTable& m_side_table(const Seq& lam_ext);

// τ-chain tables shared by the M-layers and the one-sided resolutions:
// conjugate_step=true gives the resolution coefficients p, false the
// M-layer multiplicities.
const SeqLevelTable& tau_chain_table(const Seq& lam_ext, bool conjugate_step);

// Z^{k+1}_{λ_•,ξ;η,μ_•}: semisimple modules glued from two one-sided
// layer tables, summed over i+j=k splits.
Table Z_layer(const Seq& lam, const YoungDiagram& xi, const YoungDiagram& eta,
              const Seq& mu, int k);

// Layer q of the socle filtration of J_𝛌; empty for q > q_max(|𝛌|).
Table socle_layers_J(const DiagramTuple& x, int q);

// Degree-level layer table of J_{bm l}, computed by sn_dim-weighted
// aggregation of the diagram-level tables and cross-checked against
// the closed multinomial formula; throws on any discrepancy.
std::map<DegreeVector, Mult> socle_layers_J_degree(const DegreeVector& l, int q);

// Closed multinomial form of the same table.
std::map<DegreeVector, Mult> b_closed_layer(const DegreeVector& l, int q);
Mult b_closed(const DegreeVector& l, const DegreeVector& k);

// Layer q of the socle filtration of I (injective hull of the trivial module).
Table socle_layers_I(int q, int t);

// Layer q of J_𝛌 ⊗ I.
Table socle_layers_I_lambda(const DiagramTuple& x, int q);

// Layer q of L_𝛌 ⊗ L_𝛌' (equally of K_𝛌 ⊗_I K_𝛌').
Table tensor_simples_layers(const DiagramTuple& a, const DiagramTuple& b, int q);
// The four-condition semisimplicity criterion for that product.
bool tensor_simples_semisimple(const DiagramTuple& a, const DiagramTuple& b);

// Expansion of a componentwise tensor product into keys: per-position
// LR gluing. Valid both for products of injectives and for semisimple
// products of simples.
Table glue_componentwise(const DiagramTuple& a, const DiagramTuple& b);

// Layer q of M_𝛌 (Künneth product of the two one-sided M-tables).
Table socle_layers_M(const DiagramTuple& x, int q);

// Layer q of I_𝛌 in the I-free category: same table as socle_layers_J,
// with keys read as K-simples.
Table socle_layers_I_bfT(const DiagramTuple& x, int q);

// All tuples with the given component-wise degree.
std::vector<DiagramTuple> tuples_of_degree(const DegreeVector& l);

}  // namespace tcat
