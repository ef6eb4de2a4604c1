#include "tcat/socle.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>

namespace tcat {

namespace {

// Stable-pointer cache keyed by an ordered key type.
template <class K, class V>
class PtrCache {
public:
  const V* lookup(const K& key) const {
    std::shared_lock lock(mu_);
    auto it = map_.find(key);
    return it == map_.end() ? nullptr : it->second.get();
  }
  const V* insert(const K& key, V value) {
    std::unique_lock lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) it = map_.emplace(key, std::make_unique<V>(std::move(value))).first;
    return it->second.get();
  }

private:
  mutable std::shared_mutex mu_;
  std::map<K, std::unique_ptr<V>> map_;
};

Seq replace_inner(const Seq& ext, const YoungDiagram& d) {
  Seq e = ext;
  e[0] = d;
  return e;
}

}  // namespace

int ext_displacement(const Seq& from_ext, const Seq& to_ext) {
  if (from_ext.size() != to_ext.size())
    throw std::invalid_argument("ext_displacement: length mismatch");
  int d = 0;
  for (size_t b = 0; b < from_ext.size(); ++b)
    d += static_cast<int>(b) * (to_ext[b].size() - from_ext[b].size());
  return d;
}

Mult h_coeff(const YoungDiagram& lam, const YoungDiagram& mu, const YoungDiagram& xi,
             const YoungDiagram& eta) {
  int k = lam.size() - xi.size();
  if (k < 0 || k != mu.size() - eta.size()) return 0;
  Mult h = 0;
  for (const auto& nu : all_diagrams(k)) {
    Mult a = lr_coefficient(lam, xi, nu);
    if (a == 0) continue;
    Mult b = lr_coefficient(mu, nu, eta);
    if (b != 0) h += a * b;
  }
  return h;
}

PairTable socle_layers_VV(const YoungDiagram& lam, const YoungDiagram& mu, int q) {
  PairTable out;
  if (q < 0 || q > lam.size() || q > mu.size()) return out;
  for (const auto& xi : all_diagrams(lam.size() - q)) {
    if (!lam.contains(xi)) continue;
    for (const auto& eta : all_diagrams(mu.size() - q)) {
      Mult h = h_coeff(lam, mu, xi, eta);
      if (h != 0) out[{xi, eta}] = h;
    }
  }
  return out;
}

namespace {

// Builds the one-sided layer table of J_{λ_ext;∅}: every entry of
// λ_ext expands into the positions above it, and the arriving pieces
// are glued per position.
SeqLevelTable build_z_table(const Seq& lam_ext) {
  const int n = static_cast<int>(lam_ext.size());
  SeqLevelTable table;
  // pending[a] collects, per combination, the pieces arriving at position a
  std::vector<std::vector<YoungDiagram>> pending(static_cast<size_t>(n));
  // glue pending lists into all possible key sequences
  auto glue = [&](auto&& self, int a, Seq& key, const Mult& coeff) -> void {
    if (coeff == 0) return;
    if (a == n) {
      table.by_level[ext_displacement(lam_ext, key)][key] += coeff;
      return;
    }
    const auto& pieces = pending[static_cast<size_t>(a)];
    int total = 0;
    for (const auto& p : pieces) total += p.size();
    for (const auto& kd : all_diagrams(total)) {
      Mult g = multi_lr(kd, pieces);
      if (g == 0) continue;
      key.push_back(kd);
      self(self, a + 1, key, coeff * g);
      key.pop_back();
    }
  };
  auto expand = [&](auto&& self, int b, const Mult& coeff) -> void {
    if (b == n) {
      Seq key;
      key.reserve(static_cast<size_t>(n));
      glue(glue, 0, key, coeff);
      return;
    }
    for (const auto& [factors, c] : lr_expansions(lam_ext[static_cast<size_t>(b)], n - b)) {
      for (int j = 0; j < n - b; ++j)
        pending[static_cast<size_t>(b + j)].push_back(factors[static_cast<size_t>(j)]);
      self(self, b + 1, coeff * c);
      for (int j = 0; j < n - b; ++j) pending[static_cast<size_t>(b + j)].pop_back();
    }
  };
  expand(expand, 0, 1);
  return table;
}

PtrCache<Seq, SeqLevelTable>& z_cache() {
  static PtrCache<Seq, SeqLevelTable> cache;
  return cache;
}

// τ-chain DP shared by the resolution coefficients (conjugate_step) and
// the M-layer multiplicities (plain step). Returns the table over full
// key sequences, grouped by displacement level.
SeqLevelTable build_tau_chain(const Seq& lam_ext, bool conjugate_step) {
  const int n = static_cast<int>(lam_ext.size());
  SeqLevelTable table;
  Seq key;
  key.reserve(static_cast<size_t>(n));
  auto rec = [&](auto&& self, int b, const YoungDiagram& tau, const Mult& coeff) -> void {
    if (coeff == 0) return;
    const auto& lam_b = lam_ext[static_cast<size_t>(b)];
    if (b == n - 1) {
      // top position: nothing moves out, the incoming piece glues with λ_top
      for (const auto& kd : all_diagrams(lam_b.size() + tau.size())) {
        Mult g = lr_coefficient(kd, lam_b, tau);
        if (g == 0) continue;
        key.push_back(kd);
        table.by_level[ext_displacement(lam_ext, key)][key] += coeff * g;
        key.pop_back();
      }
      return;
    }
    for (int moved = 0; moved <= lam_b.size(); ++moved)
      for (const auto& piece : all_diagrams(moved)) {
        for (const auto& sigma : all_diagrams(lam_b.size() - moved)) {
          Mult split = lr_coefficient(lam_b, sigma, piece);
          if (split == 0) continue;
          YoungDiagram tau_next = conjugate_step ? piece.conjugate() : piece;
          for (const auto& kd : all_diagrams(sigma.size() + tau.size())) {
            Mult g = lr_coefficient(kd, sigma, tau);
            if (g == 0) continue;
            key.push_back(kd);
            self(self, b + 1, tau_next, coeff * split * g);
            key.pop_back();
          }
        }
      }
  };
  rec(rec, 0, YoungDiagram(), 1);
  return table;
}

PtrCache<std::pair<Seq, bool>, SeqLevelTable>& tau_cache() {
  static PtrCache<std::pair<Seq, bool>, SeqLevelTable> cache;
  return cache;
}

}  // namespace

const SeqLevelTable& z_table(const Seq& lam_ext) {
  if (lam_ext.size() < 2) throw std::invalid_argument("z_table: extended sequence too short");
  if (const auto* hit = z_cache().lookup(lam_ext)) return *hit;
  return *z_cache().insert(lam_ext, build_z_table(lam_ext));
}

Mult z_coeff(const Seq& lam_ext, const Seq& kap_ext) {
  if (lam_ext.size() != kap_ext.size())
    throw std::invalid_argument("z_coeff: length mismatch");
  const auto& table = z_table(lam_ext);
  int level = ext_displacement(lam_ext, kap_ext);
  auto lit = table.by_level.find(level);
  if (lit == table.by_level.end()) return 0;
  auto it = lit->second.find(kap_ext);
  return it == lit->second.end() ? Mult(0) : it->second;
}

const SeqLevelTable& tau_chain_table(const Seq& lam_ext, bool conjugate_step) {
  if (lam_ext.size() < 2)
    throw std::invalid_argument("tau_chain_table: extended sequence too short");
  std::pair<Seq, bool> key{lam_ext, conjugate_step};
  if (const auto* hit = tau_cache().lookup(key)) return *hit;
  return *tau_cache().insert(key, build_tau_chain(lam_ext, conjugate_step));
}

const SeqLevelTable& m_side_table(const Seq& lam_ext) { return tau_chain_table(lam_ext, false); }

Table Z_layer(const Seq& lam, const YoungDiagram& xi, const YoungDiagram& eta, const Seq& mu,
              int k) {
  if (lam.size() != mu.size() || lam.empty())
    throw std::invalid_argument("Z_layer: sequences must have equal length t+1 >= 1");
  Table out;
  Seq lext, rext;
  lext.push_back(xi);
  lext.insert(lext.end(), lam.begin(), lam.end());
  rext.push_back(eta);
  rext.insert(rext.end(), mu.begin(), mu.end());
  const auto& zl = z_table(lext);
  const auto& zr = z_table(rext);
  for (const auto& [i, left_entries] : zl.by_level) {
    if (i > k) break;
    auto rit = zr.by_level.find(k - i);
    if (rit == zr.by_level.end()) continue;
    for (const auto& [kext, zc1] : left_entries)
      for (const auto& [next, zc2] : rit->second)
        out[tuple_from_ext(kext, next)] += zc1 * zc2;
  }
  return out;
}

namespace {

PtrCache<std::pair<DiagramTuple, int>, Table>& layers_J_cache() {
  static PtrCache<std::pair<DiagramTuple, int>, Table> cache;
  return cache;
}

Table build_socle_layers_J(const DiagramTuple& x, int q) {
  Table out;
  const auto& lam = x.inner_left;
  const auto& mu = x.inner_right;
  Seq lext = left_ext(x), rext = right_ext(x);
  for (int i = 0; i <= std::min({q, lam.size(), mu.size()}); ++i) {
    for (const auto& xi : all_diagrams(lam.size() - i)) {
      if (!lam.contains(xi)) continue;
      for (const auto& eta : all_diagrams(mu.size() - i)) {
        Mult h = h_coeff(lam, mu, xi, eta);
        if (h == 0) continue;
        const auto& zl = z_table(replace_inner(lext, xi));
        const auto& zr = z_table(replace_inner(rext, eta));
        for (const auto& [j1, left_entries] : zl.by_level) {
          if (i + j1 > q) break;
          auto rit = zr.by_level.find(q - i - j1);
          if (rit == zr.by_level.end()) continue;
          for (const auto& [kext, zc1] : left_entries)
            for (const auto& [next, zc2] : rit->second)
              out[tuple_from_ext(kext, next)] += h * zc1 * zc2;
        }
      }
    }
  }
  return out;
}

}  // namespace

Table socle_layers_J(const DiagramTuple& x, int q) {
  check_tuple(x);
  if (q < 0) return {};
  std::pair<DiagramTuple, int> key{x, q};
  if (const auto* hit = layers_J_cache().lookup(key)) return *hit;
  return *layers_J_cache().insert(key, build_socle_layers_J(x, q));
}

std::vector<DiagramTuple> tuples_of_degree(const DegreeVector& l) {
  check_degree(l);
  std::vector<DiagramTuple> out;
  const int t = l.t();
  std::vector<int> sizes;
  for (int i = 0; i <= t; ++i) sizes.push_back(l.left[static_cast<size_t>(i)]);
  sizes.push_back(l.l);
  sizes.push_back(l.m);
  for (int i = 0; i <= t; ++i) sizes.push_back(l.right[static_cast<size_t>(i)]);
  Seq current;
  auto rec = [&](auto&& self, size_t pos) -> void {
    if (pos == sizes.size()) {
      DiagramTuple x;
      x.left.assign(current.begin(), current.begin() + t + 1);
      x.inner_left = current[static_cast<size_t>(t) + 1];
      x.inner_right = current[static_cast<size_t>(t) + 2];
      x.right.assign(current.begin() + t + 3, current.end());
      out.push_back(std::move(x));
      return;
    }
    for (const auto& d : all_diagrams(sizes[pos])) {
      current.push_back(d);
      self(self, pos + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

namespace {

std::string degree_to_string(const DegreeVector& v) {
  std::ostringstream os;
  os << "(";
  for (auto it = v.left.rbegin(); it != v.left.rend(); ++it) os << *it << ",";
  os << v.l << ";" << v.m;
  for (int r : v.right) os << "," << r;
  os << ")";
  return os.str();
}

Mult factorial(int n) {
  Mult f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Mult binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

// Distributions of one side: each group of boxes spreads from its
// starting extended position upward; value is the multinomial count.
// Key: (resulting extended count vector, displacement).
using SideTable = std::map<std::pair<std::vector<int>, int>, Mult>;

SideTable side_distributions(const std::vector<int>& ext_counts) {
  const int n = static_cast<int>(ext_counts.size());
  SideTable acc;
  acc[{std::vector<int>(static_cast<size_t>(n), 0), 0}] = 1;
  for (int b0 = 0; b0 < n; ++b0) {
    int count = ext_counts[static_cast<size_t>(b0)];
    if (count == 0) continue;
    // weak compositions of `count` over positions b0..n-1
    SideTable next;
    std::vector<int> comp(static_cast<size_t>(n), 0);
    auto rec = [&](auto&& self, int pos, int rem) -> void {
      if (pos == n - 1) {
        comp[static_cast<size_t>(pos)] = rem;
        Mult ways = factorial(count);
        int disp = 0;
        for (int b = b0; b < n; ++b) {
          ways /= factorial(comp[static_cast<size_t>(b)]);
          disp += (b - b0) * comp[static_cast<size_t>(b)];
        }
        for (const auto& [key, mult] : acc) {
          auto counts = key.first;
          for (int b = b0; b < n; ++b) counts[static_cast<size_t>(b)] += comp[static_cast<size_t>(b)];
          next[{std::move(counts), key.second + disp}] += mult * ways;
        }
        comp[static_cast<size_t>(pos)] = 0;
        return;
      }
      for (int x = 0; x <= rem; ++x) {
        comp[static_cast<size_t>(pos)] = x;
        self(self, pos + 1, rem - x);
      }
      comp[static_cast<size_t>(pos)] = 0;
    };
    if (b0 == n - 1) {
      // top position: boxes cannot move
      SideTable topped;
      for (const auto& [key, mult] : acc) {
        auto counts = key.first;
        counts[static_cast<size_t>(b0)] += count;
        topped[{std::move(counts), key.second}] += mult;
      }
      acc = std::move(topped);
    } else {
      rec(rec, b0, count);
      acc = std::move(next);
    }
  }
  return acc;
}

}  // namespace

std::map<DegreeVector, Mult> b_closed_layer(const DegreeVector& l, int q) {
  check_degree(l);
  std::map<DegreeVector, Mult> out;
  if (q < 0) return out;
  const int t = l.t();
  const int p = std::min(l.l, l.m);
  for (int k = 0; k <= p; ++k) {
    if (k > q) break;
    // k contractions pick an ordered matching between k of the l inner
    // tensorands and k of the m inner tensorands: C(l,k) C(m,k) k!
    // (the k! is confirmed by the convolution route; see the ledger)
    Mult contr = binomial(l.l, k) * binomial(l.m, k) * factorial(k);
    auto lext = l.left_extended();
    auto rext = l.right_extended();
    lext[0] -= k;
    rext[0] -= k;
    SideTable left = side_distributions(lext);
    SideTable right = side_distributions(rext);
    for (const auto& [lkey, lmult] : left) {
      int disp_l = lkey.second;
      if (k + disp_l > q) continue;
      for (const auto& [rkey, rmult] : right) {
        if (k + disp_l + rkey.second != q) continue;
        DegreeVector kvec = zero_degree(t);
        kvec.l = lkey.first[0];
        kvec.m = rkey.first[0];
        for (int i = 0; i <= t; ++i) {
          kvec.left[static_cast<size_t>(i)] = lkey.first[static_cast<size_t>(i) + 1];
          kvec.right[static_cast<size_t>(i)] = rkey.first[static_cast<size_t>(i) + 1];
        }
        out[kvec] += contr * lmult * rmult;
      }
    }
  }
  return out;
}

Mult b_closed(const DegreeVector& l, const DegreeVector& k) {
  check_degree(l);
  check_degree(k);
  // level of k below l is determined by the contraction count and the
  // weighted position sums
  auto weighted = [](const DegreeVector& v) {
    int w = 0;
    auto le = v.left_extended(), re = v.right_extended();
    for (size_t b = 0; b < le.size(); ++b) w += static_cast<int>(b) * (le[b] + re[b]);
    return w;
  };
  auto side_total = [](const std::vector<int>& e) {
    return std::accumulate(e.begin(), e.end(), 0);
  };
  int contractions = side_total(l.left_extended()) - side_total(k.left_extended());
  if (contractions < 0 ||
      contractions != side_total(l.right_extended()) - side_total(k.right_extended()))
    return 0;
  int q = contractions + weighted(k) - weighted(l);
  auto layer = b_closed_layer(l, q);
  auto it = layer.find(k);
  return it == layer.end() ? Mult(0) : it->second;
}

std::map<DegreeVector, Mult> socle_layers_J_degree(const DegreeVector& l, int q) {
  check_degree(l);
  Table agg;
  for (const auto& x : tuples_of_degree(l)) {
    Mult w = sn_dim(x);
    for (const auto& [key, mult] : socle_layers_J(x, q)) agg[key] += w * mult;
  }
  std::map<DegreeVector, Mult> out;
  std::map<DegreeVector, size_t> seen_keys;
  for (const auto& [key, val] : agg) {
    DegreeVector kvec = degree_of(key);
    Mult d = sn_dim(key);
    if (val % d != 0)
      throw std::runtime_error("socle_layers_J_degree: aggregated multiplicity at " +
                               degree_to_string(kvec) + " is not divisible by the key dimension");
    Mult b = val / d;
    auto [it, inserted] = out.emplace(kvec, b);
    if (!inserted && it->second != b)
      throw std::runtime_error("socle_layers_J_degree: inconsistent aggregated values at " +
                               degree_to_string(kvec));
    ++seen_keys[kvec];
  }
  for (const auto& [kvec, count] : seen_keys)
    if (count != tuples_of_degree(kvec).size())
      throw std::runtime_error("socle_layers_J_degree: incomplete key set at " +
                               degree_to_string(kvec));
  auto closed = b_closed_layer(l, q);
  if (closed != out) {
    std::ostringstream os;
    os << "socle_layers_J_degree: closed-form/convolution mismatch for l="
       << degree_to_string(l) << " q=" << q << ";";
    for (const auto& [k, b] : closed)
      if (!out.count(k) || out.at(k) != b)
        os << " closed " << degree_to_string(k) << "=" << b.str();
    for (const auto& [k, b] : out)
      if (!closed.count(k) || closed.at(k) != b)
        os << " convolution " << degree_to_string(k) << "=" << b.str();
    throw std::runtime_error(os.str());
  }
  return out;
}

namespace {

PtrCache<std::pair<int, int>, Table>& layers_I_cache() {
  static PtrCache<std::pair<int, int>, Table> cache;
  return cache;
}

}  // namespace

Table socle_layers_I(int q, int t) {
  if (t < 0) throw std::invalid_argument("socle_layers_I: t must be >= 0");
  if (q < 0) return {};
  std::pair<int, int> key{q, t};
  if (const auto* hit = layers_I_cache().lookup(key)) return *hit;
  Table out;
  for (int z = 0; z <= q; ++z) {
    for (const auto& zeta : all_diagrams(z)) {
      DiagramTuple x = trivial_tuple(t);
      x.left[0] = zeta;
      x.right[0] = zeta;
      for (const auto& [k, mult] : socle_layers_J(x, q - z)) out[k] += mult;
    }
  }
  return *layers_I_cache().insert(key, std::move(out));
}

Table glue_componentwise(const DiagramTuple& a, const DiagramTuple& b) {
  check_tuple(a);
  check_tuple(b);
  if (a.t() != b.t()) throw std::invalid_argument("glue_componentwise: t mismatch");
  Seq la = left_ext(a), lb = left_ext(b), ra = right_ext(a), rb = right_ext(b);
  Table out;
  const size_t n = la.size();
  Seq lkey, rkey;
  auto rec = [&](auto&& self, size_t pos, const Mult& coeff) -> void {
    if (pos == 2 * n) {
      out[tuple_from_ext(lkey, rkey)] += coeff;
      return;
    }
    bool left_side = pos < n;
    const auto& da = left_side ? la[pos] : ra[pos - n];
    const auto& db = left_side ? lb[pos] : rb[pos - n];
    for (const auto& kd : all_diagrams(da.size() + db.size())) {
      Mult g = lr_coefficient(kd, da, db);
      if (g == 0) continue;
      (left_side ? lkey : rkey).push_back(kd);
      self(self, pos + 1, coeff * g);
      (left_side ? lkey : rkey).pop_back();
    }
  };
  rec(rec, 0, 1);
  return out;
}

Table socle_layers_I_lambda(const DiagramTuple& x, int q) {
  check_tuple(x);
  Table out;
  for (int j = 0; j <= q; ++j) {
    Table jl = socle_layers_J(x, j);
    if (jl.empty()) continue;
    Table il = socle_layers_I(q - j, x.t());
    for (const auto& [a, ma] : jl)
      for (const auto& [b, mb] : il)
        // I-layer keys have empty inner diagrams, so the product of
        // simples is semisimple and expands by componentwise gluing
        for (const auto& [key, g] : glue_componentwise(a, b)) out[key] += ma * mb * g;
  }
  return out;
}

bool tensor_simples_semisimple(const DiagramTuple& a, const DiagramTuple& b) {
  return (a.inner_left.empty() && a.inner_right.empty()) ||
         (a.inner_left.empty() && b.inner_left.empty()) ||
         (b.inner_left.empty() && b.inner_right.empty()) ||
         (a.inner_right.empty() && b.inner_right.empty());
}

Table tensor_simples_layers(const DiagramTuple& a, const DiagramTuple& b, int q) {
  check_tuple(a);
  check_tuple(b);
  if (a.t() != b.t()) throw std::invalid_argument("tensor_simples_layers: t mismatch");
  Table out;
  const auto &lam = a.inner_left, &lamp = b.inner_left;
  const auto &mu = a.inner_right, &mup = b.inner_right;
  int ksize = lam.size() + lamp.size() - q;
  int nsize = mu.size() + mup.size() - q;
  if (ksize < 0 || nsize < 0) return out;
  // Inner part: only cross contractions exist between two simples (the
  // self pairings vanish on V_{λ;μ}): contract γ ⊆ λ against γ ⊆ μ' and
  // δ ⊆ λ' against δ ⊆ μ, then glue the remainders.
  PairTable inner;
  for (int cl = 0; cl <= std::min({q, lam.size(), mup.size()}); ++cl) {
    int cr = q - cl;
    if (cr > std::min(lamp.size(), mu.size())) continue;
    for (const auto& gamma : all_diagrams(cl))
      for (const auto& delta : all_diagrams(cr))
        for (const auto& xi1 : all_diagrams(lam.size() - cl)) {
          Mult n1 = lr_coefficient(lam, xi1, gamma);
          if (n1 == 0) continue;
          for (const auto& eta2 : all_diagrams(mup.size() - cl)) {
            Mult n2 = lr_coefficient(mup, eta2, gamma);
            if (n2 == 0) continue;
            for (const auto& xi2 : all_diagrams(lamp.size() - cr)) {
              Mult n3 = lr_coefficient(lamp, xi2, delta);
              if (n3 == 0) continue;
              for (const auto& eta1 : all_diagrams(mu.size() - cr)) {
                Mult n4 = lr_coefficient(mu, eta1, delta);
                if (n4 == 0) continue;
                Mult base = n1 * n2 * n3 * n4;
                for (const auto& kappa : all_diagrams(ksize)) {
                  Mult g1 = lr_coefficient(kappa, xi1, xi2);
                  if (g1 == 0) continue;
                  for (const auto& nu : all_diagrams(nsize)) {
                    Mult g2 = lr_coefficient(nu, eta1, eta2);
                    if (g2 != 0) inner[{kappa, nu}] += base * g1 * g2;
                  }
                }
              }
            }
          }
        }
  }
  if (inner.empty()) return out;
  // outer part: componentwise gluing of the sequences
  DiagramTuple a0 = a, b0 = b;
  a0.inner_left = a0.inner_right = YoungDiagram();
  b0.inner_left = b0.inner_right = YoungDiagram();
  for (const auto& [shell, g] : glue_componentwise(a0, b0))
    for (const auto& [kn, c] : inner) {
      DiagramTuple key = shell;
      key.inner_left = kn.first;
      key.inner_right = kn.second;
      out[key] += g * c;
    }
  return out;
}

Table socle_layers_M(const DiagramTuple& x, int q) {
  check_tuple(x);
  Table out;
  // Same shape as the J-layers, with the two-step-quotient side tables
  // in place of the one-sided z-tables: the pairing couples the inner
  // diagrams through the contraction tower h, the sides move
  // independently. At t=0 this reproduces the J-tables exactly.
  const auto& lam = x.inner_left;
  const auto& mu = x.inner_right;
  Seq lext = left_ext(x), rext = right_ext(x);
  for (int i = 0; i <= std::min({q, lam.size(), mu.size()}); ++i) {
    for (const auto& xi : all_diagrams(lam.size() - i)) {
      if (!lam.contains(xi)) continue;
      for (const auto& eta : all_diagrams(mu.size() - i)) {
        Mult h = h_coeff(lam, mu, xi, eta);
        if (h == 0) continue;
        Seq lx = lext, rx = rext;
        lx[0] = xi;
        rx[0] = eta;
        const auto& ml = m_side_table(lx);
        const auto& mr = m_side_table(rx);
        for (const auto& [j1, left_entries] : ml.by_level) {
          if (i + j1 > q) break;
          auto rit = mr.by_level.find(q - i - j1);
          if (rit == mr.by_level.end()) continue;
          for (const auto& [kext, c1] : left_entries)
            for (const auto& [next, c2] : rit->second)
              out[tuple_from_ext(kext, next)] += h * c1 * c2;
        }
      }
    }
  }
  return out;
}

Table socle_layers_I_bfT(const DiagramTuple& x, int q) { return socle_layers_J(x, q); }

}  // namespace tcat
