#include "tcat/symmetry.hpp"

#include "tcat/parallel.hpp"
#include "tcat/text.hpp"

#include <algorithm>
#include <sstream>

namespace tcat {

namespace {

struct Shard {
  size_t cases = 0;
  size_t skipped = 0;
  std::vector<Counterexample> counterexamples;
};

CheckReport merge(std::string name, std::string range, std::vector<Shard> shards) {
  CheckReport report;
  report.name = std::move(name);
  report.range = std::move(range);
  for (auto& s : shards) {
    report.cases += s.cases;
    report.skipped += s.skipped;
    report.counterexamples.insert(report.counterexamples.end(), s.counterexamples.begin(),
                                  s.counterexamples.end());
  }
  report.pass = report.counterexamples.empty();
  return report;
}

void expect_eq(Shard& shard, const std::string& input, const Mult& lhs, const Mult& rhs) {
  ++shard.cases;
  if (lhs != rhs) shard.counterexamples.push_back({input, lhs.str(), rhs.str()});
}

void expect_eq_int(Shard& shard, const std::string& input, long long lhs, long long rhs) {
  ++shard.cases;
  if (lhs != rhs)
    shard.counterexamples.push_back({input, std::to_string(lhs), std::to_string(rhs)});
}

DiagramTuple one_sided_tuple(const Seq& ext, int t) {
  Seq rext(static_cast<size_t>(t) + 2, YoungDiagram());
  return tuple_from_ext(ext, rext);
}

Mult table_at(const Table& table, const DiagramTuple& key) {
  auto it = table.find(key);
  return it == table.end() ? Mult(0) : it->second;
}

std::string seq_pair_label(const Seq& kap, const Seq& lam) {
  return "kappa=" + format_seq_ext(kap) + " lambda=" + format_seq_ext(lam);
}

std::string tuple_pair_label(const DiagramTuple& kap, const DiagramTuple& lam) {
  return "kappa=" + format_tuple(kap) + " lambda=" + format_tuple(lam);
}

}  // namespace

CheckReport check_rev_symmetry(int t, int max_boxes, int workers) {
  auto seqs = all_seqs(t + 2, max_boxes);
  std::vector<Shard> shards(seqs.size());
  const int q_bound = max_boxes * (t + 1) + 1;
  parallel_for(seqs.size(), workers, [&](size_t i) {
    Shard& shard = shards[i];
    const Seq& lam = seqs[i];
    Seq rev_lam = seq_reverse(lam);
    DiagramTuple lamT = one_sided_tuple(lam, t);
    DiagramTuple rev_lamT = one_sided_tuple(rev_lam, t);
    for (const Seq& kap : seqs) {
      if (seq_boxes(kap) != seq_boxes(lam)) continue;
      Seq rev_kap = seq_reverse(kap);
      std::string label = seq_pair_label(kap, lam);
      // (1) resolution coefficients and degrees
      Mult p1 = p_coeff(lam, kap), p2 = p_coeff(rev_kap, rev_lam);
      expect_eq(shard, label + " [p rev]", p1, p2);
      if (p1 != 0)
        expect_eq_int(shard, label + " [k rev]", k_degree(lam, kap), k_degree(rev_kap, rev_lam));
      // (2) one-sided socle layers
      expect_eq(shard, label + " [z rev]", z_coeff(lam, kap), z_coeff(rev_kap, rev_lam));
      // (3)-(5) Ext and socle data through the category machinery
      DiagramTuple kapT = one_sided_tuple(kap, t);
      DiagramTuple rev_kapT = one_sided_tuple(rev_kap, t);
      for (int q = 0; q <= q_bound; ++q) {
        expect_eq(shard, label + " [ext TT rev q=" + std::to_string(q) + "]",
                  ext_dim(kapT, lamT, q, Category::TT),
                  ext_dim(rev_lamT, rev_kapT, q, Category::TT));
        expect_eq(shard, label + " [ext bfT rev q=" + std::to_string(q) + "]",
                  ext_dim(kapT, lamT, q, Category::bfT),
                  ext_dim(rev_lamT, rev_kapT, q, Category::bfT));
        expect_eq(shard, label + " [soc I_bfT rev q=" + std::to_string(q) + "]",
                  table_at(socle_layers_J(lamT, q), kapT),
                  table_at(socle_layers_J(rev_kapT, q), rev_lamT));
      }
    }
  });
  std::ostringstream range;
  range << "one-sided, t=" << t << ", ||.||<=" << max_boxes;
  return merge("rev_symmetry", range.str(), std::move(shards));
}

namespace {

// Eight-factor closed sum for the ambient-category Ext dimensions at t=0.
Mult t0_ext_sum_TT(const DiagramTuple& kap, const DiagramTuple& lam) {
  const YoungDiagram &k0 = kap.left[0], &k = kap.inner_left, &n = kap.inner_right,
                     &n0 = kap.right[0];
  const YoungDiagram &l0 = lam.left[0], &l = lam.inner_left, &mu = lam.inner_right,
                     &m0 = lam.right[0];
  Mult total = 0;
  for (int zs = 0; zs <= k0.size(); ++zs)
    for (const auto& zeta : all_diagrams(zs))
      for (const auto& phi : all_diagrams(k0.size() - zs)) {
        Mult f1 = lr_coefficient(k0, zeta, phi);
        if (f1 == 0) continue;
        if (phi.size() < l0.size()) continue;
        for (const auto& tau : all_diagrams(phi.size() - l0.size())) {
          Mult f2 = lr_coefficient(phi, l0, tau);
          if (f2 == 0) continue;
          for (const auto& xi : all_diagrams(tau.size() + k.size())) {
            Mult f3 = lr_coefficient(xi, tau.conjugate(), k);
            if (f3 == 0) continue;
            if (l.size() < xi.size()) continue;
            for (const auto& delta : all_diagrams(l.size() - xi.size())) {
              Mult f4 = lr_coefficient(l, xi, delta);
              if (f4 == 0) continue;
              if (mu.size() < delta.size()) continue;
              for (const auto& eta : all_diagrams(mu.size() - delta.size())) {
                Mult f5 = lr_coefficient(mu, delta.conjugate(), eta);
                if (f5 == 0) continue;
                if (eta.size() < n.size()) continue;
                for (const auto& theta : all_diagrams(eta.size() - n.size())) {
                  Mult f6 = lr_coefficient(eta, n, theta.conjugate());
                  if (f6 == 0) continue;
                  for (const auto& psi : all_diagrams(theta.size() + m0.size())) {
                    Mult f7 = lr_coefficient(psi, theta, m0);
                    if (f7 == 0) continue;
                    Mult f8 = lr_coefficient(n0, psi, zeta.conjugate());
                    if (f8 == 0) continue;
                    total += f1 * f2 * f3 * f4 * f5 * f6 * f7 * f8;
                  }
                }
              }
            }
          }
        }
      }
  return total;
}

// Four-factor closed sum for the I-free category at t=0.
Mult t0_ext_sum_bfT(const DiagramTuple& kap, const DiagramTuple& lam) {
  const YoungDiagram &k0 = kap.left[0], &k = kap.inner_left, &n = kap.inner_right,
                     &n0 = kap.right[0];
  const YoungDiagram &l0 = lam.left[0], &l = lam.inner_left, &mu = lam.inner_right,
                     &m0 = lam.right[0];
  if (k0.size() < l0.size() || mu.size() < n.size()) return 0;
  Mult total = 0;
  for (const auto& tau : all_diagrams(k0.size() - l0.size())) {
    Mult f1 = lr_coefficient(k0, l0, tau);
    if (f1 == 0) continue;
    Mult f2 = lr_coefficient(l, tau.conjugate(), k);
    if (f2 == 0) continue;
    for (const auto& theta : all_diagrams(mu.size() - n.size())) {
      Mult f3 = lr_coefficient(mu, n, theta.conjugate());
      if (f3 == 0) continue;
      Mult f4 = lr_coefficient(n0, theta, m0);
      if (f4 == 0) continue;
      total += f1 * f2 * f3 * f4;
    }
  }
  return total;
}

DiagramTuple swap_inner_outer_t0(const DiagramTuple& x) {
  DiagramTuple y = x;
  std::swap(y.left[0], y.inner_left);
  std::swap(y.right[0], y.inner_right);
  return y;
}

}  // namespace

CheckReport check_t0_ext_symmetry(int max_boxes, int workers) {
  auto tuples = all_tuples(0, max_boxes);
  std::vector<Shard> shards(tuples.size());
  parallel_for(tuples.size(), workers, [&](size_t i) {
    Shard& shard = shards[i];
    const DiagramTuple& lam = tuples[i];
    for (const DiagramTuple& kap : tuples) {
      std::string label = tuple_pair_label(kap, lam);
      // (6) ambient category
      int q6a = kap.left[0].size() - lam.left[0].size() + lam.inner_right.size() -
                kap.inner_right.size();
      int q6b = lam.inner_left.size() - kap.inner_left.size() + kap.right[0].size() -
                lam.right[0].size();
      Mult closed6 = t0_ext_sum_TT(kap, lam);
      if (closed6 != 0 && q6a != q6b) {
        ++shard.cases;
        shard.counterexamples.push_back(
            {label + " [q6 formulas]", std::to_string(q6a), std::to_string(q6b)});
      }
      int q_hi = 2 * (kap.total_boxes() + lam.total_boxes()) + 1;
      for (int q = 0; q <= q_hi; ++q) {
        Mult lhs = ext_dim(kap, lam, q, Category::TT);
        expect_eq(shard, label + " [ext TT vs closed sum q=" + std::to_string(q) + "]", lhs,
                  (q == q6a && q6a == q6b && q6a >= 0) ? closed6 : Mult(0));
        expect_eq(shard, label + " [ext TT swap q=" + std::to_string(q) + "]", lhs,
                  ext_dim(swap_inner_outer_t0(lam), swap_inner_outer_t0(kap), q, Category::TT));
      }
      // (7) I-free category, on pairs with matching left box counts
      if (kap.left[0].size() + kap.inner_left.size() ==
          lam.left[0].size() + lam.inner_left.size()) {
        int q7 = lam.inner_left.size() - kap.inner_left.size() + lam.inner_right.size() -
                 kap.inner_right.size();
        Mult closed7 = t0_ext_sum_bfT(kap, lam);
        for (int q = 0; q <= q_hi; ++q) {
          Mult lhs = ext_dim(kap, lam, q, Category::bfT);
          expect_eq(shard, label + " [ext bfT vs closed sum q=" + std::to_string(q) + "]", lhs,
                    (q == q7 && q7 >= 0) ? closed7 : Mult(0));
          expect_eq(shard, label + " [ext bfT swap q=" + std::to_string(q) + "]", lhs,
                    ext_dim(swap_inner_outer_t0(lam), swap_inner_outer_t0(kap), q,
                            Category::bfT));
        }
      } else {
        ++shard.skipped;
      }
    }
  });
  std::ostringstream range;
  range << "t=0, ||.||<=" << max_boxes;
  return merge("t0_ext_symmetry", range.str(), std::move(shards));
}

CheckReport check_ext_hom_duality(int t, int max_boxes, DualityKind kind, int workers) {
  std::ostringstream range;
  std::vector<Shard> shards;
  std::string name;
  switch (kind) {
    case DualityKind::Tleft: {
      name = "ext_hom_duality_Tleft";
      range << "one-sided, t=" << t << ", ||.||<=" << max_boxes;
      auto seqs = all_seqs(t + 2, max_boxes);
      shards.assign(seqs.size(), {});
      const int k_bound = max_boxes * (t + 1) + 1;
      parallel_for(seqs.size(), workers, [&](size_t i) {
        Shard& shard = shards[i];
        const Seq& lam = seqs[i];
        const auto& layers = m_side_table(lam);
        for (const Seq& kap : seqs) {
          if (seq_boxes(kap) != seq_boxes(lam)) continue;
          Seq lam_o = seq_conjugate_parity(lam, 1), kap_o = seq_conjugate_parity(kap, 1);
          Seq lam_e = seq_conjugate_parity(lam, 0), kap_e = seq_conjugate_parity(kap, 0);
          std::string label = seq_pair_label(kap, lam);
          for (int k = 0; k <= k_bound; ++k) {
            Mult rhs = 0;
            if (auto it = layers.by_level.find(k); it != layers.by_level.end())
              if (auto jt = it->second.find(kap); jt != it->second.end()) rhs = jt->second;
            expect_eq(shard, label + " [o-conj k=" + std::to_string(k) + "]",
                      ext_dim(one_sided_tuple(kap_o, t), one_sided_tuple(lam_o, t), k,
                              Category::Tleft),
                      rhs);
            expect_eq(shard, label + " [e-conj k=" + std::to_string(k) + "]",
                      ext_dim(one_sided_tuple(kap_e, t), one_sided_tuple(lam_e, t), k,
                              Category::Tleft),
                      rhs);
          }
        }
      });
      break;
    }
    case DualityKind::bfT:
    case DualityKind::bfT_t0: {
      bool at_t0 = kind == DualityKind::bfT_t0;
      if (at_t0 && t != 0)
        throw std::invalid_argument("check_ext_hom_duality: bfT_t0 requires t=0");
      name = at_t0 ? "ext_hom_duality_bfT_t0" : "ext_hom_duality_bfT";
      range << "t=" << t << ", ||.||<=" << max_boxes;
      auto tuples = all_tuples(t, max_boxes);
      shards.assign(tuples.size(), {});
      parallel_for(tuples.size(), workers, [&](size_t i) {
        Shard& shard = shards[i];
        const DiagramTuple& lam = tuples[i];
        int k_bound = q_max(degree_of(lam)) + 1;
        for (const DiagramTuple& kap : tuples) {
          // contractions move keys across box counts: no filtering here
          std::string label = tuple_pair_label(kap, lam);
          DiagramTuple kap_eo = involution(kap, InvolutionKind::e_perp_o);
          DiagramTuple lam_eo = involution(lam, InvolutionKind::e_perp_o);
          DiagramTuple kap_oe = involution(kap, InvolutionKind::o_perp_e);
          DiagramTuple lam_oe = involution(lam, InvolutionKind::o_perp_e);
          for (int k = 0; k <= k_bound; ++k) {
            Mult rhs = at_t0 ? table_at(socle_layers_I_bfT(lam, k), kap)
                             : table_at(socle_layers_M(lam, k), kap);
            expect_eq(shard, label + " [e-perp-o k=" + std::to_string(k) + "]",
                      ext_dim(kap_eo, lam_eo, k, Category::bfT), rhs);
            if (!at_t0)
              expect_eq(shard, label + " [o-perp-e k=" + std::to_string(k) + "]",
                        ext_dim(kap_oe, lam_oe, k, Category::bfT), rhs);
          }
        }
      });
      break;
    }
  }
  return merge(name, range.str(), std::move(shards));
}

CheckReport check_m_h_identity(int max_boxes, int workers) {
  auto diagrams = all_diagrams_upto(max_boxes);
  std::vector<Shard> shards(diagrams.size());
  parallel_for(diagrams.size(), workers, [&](size_t i) {
    Shard& shard = shards[i];
    const auto& lam = diagrams[i];
    for (const auto& mu : diagrams) {
      YoungDiagram mu_conj = mu.conjugate();
      for (int k = 0; k <= std::min(lam.size(), mu.size()); ++k)
        for (const auto& xi : all_diagrams(lam.size() - k)) {
          if (!lam.contains(xi)) continue;
          for (const auto& eta : all_diagrams(mu.size() - k)) {
            std::ostringstream label;
            label << "lambda=" << format_diagram(lam) << " mu=" << format_diagram(mu)
                  << " xi=" << format_diagram(xi) << " eta=" << format_diagram(eta);
            expect_eq(shard, label.str(), m_coeff(lam, mu, xi, eta),
                      h_coeff(lam, mu_conj, xi, eta.conjugate()));
          }
        }
    }
  });
  std::ostringstream range;
  range << "|lambda|,|mu|<=" << max_boxes;
  return merge("m_h_identity", range.str(), std::move(shards));
}

}  // namespace tcat
