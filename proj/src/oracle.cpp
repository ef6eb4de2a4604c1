#include "tcat/oracle.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

namespace tcat::oracle {

namespace {

// Symmetric function in the monomial basis: partition -> coefficient.
// Homogeneous pieces of different degrees may coexist.
using SymPoly = std::map<std::vector<int>, Mult>;

std::vector<int> sorted_trimmed(std::vector<int> v) {
  std::sort(v.begin(), v.end(), std::greater<int>());
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

// #{a : 0 <= a_i <= c_i, sort(a) = fa, sort(c - a) = gb} for the
// canonical arrangement c of the target partition.
Mult pair_count(const std::vector<int>& c, const std::vector<int>& fa,
                const std::vector<int>& gb) {
  std::map<int, int> remaining;  // multiset of fa values
  for (int v : fa) ++remaining[v];
  std::vector<int> diff(c.size(), 0);
  Mult count = 0;
  auto rec = [&](auto&& self, size_t pos, size_t left) -> void {
    if (c.size() - pos < left) return;  // not enough positions for the rest of fa
    if (pos == c.size()) {
      if (sorted_trimmed(diff) == gb) ++count;
      return;
    }
    // leave this position to g alone
    diff[pos] = c[pos];
    self(self, pos + 1, left);
    // or place one remaining fa value v <= c_pos here
    for (auto& [v, cnt] : remaining) {
      if (cnt == 0 || v > c[pos]) continue;
      --cnt;
      diff[pos] = c[pos] - v;
      self(self, pos + 1, left - 1);
      ++cnt;
    }
    diff[pos] = 0;
  };
  rec(rec, 0, fa.size());
  return count;
}

// Monomial-basis product: the coefficient of the monomial x^c equals
// Σ_{0<=a<=c} f[sort(a)] g[sort(c-a)], and depends only on sort(c).
SymPoly sym_mul(const SymPoly& f, const SymPoly& g) {
  SymPoly out;
  for (const auto& [fa, fc] : f)
    for (const auto& [gb, gc] : g) {
      int d = std::accumulate(fa.begin(), fa.end(), 0) + std::accumulate(gb.begin(), gb.end(), 0);
      for (const auto& target : all_diagrams(d)) {
        Mult n = pair_count(target.parts(), fa, gb);
        if (n != 0) out[target.parts()] += fc * gc * n;
      }
    }
  // drop zeros
  for (auto it = out.begin(); it != out.end();)
    it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

namespace {

const SymPoly& e_poly(int k) {
  static std::mutex mu;
  static std::map<int, SymPoly> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(k);
  if (it == cache.end()) {
    SymPoly p;
    if (k == 0)
      p[{}] = 1;
    else if (k > 0)
      p[std::vector<int>(static_cast<size_t>(k), 1)] = 1;
    it = cache.emplace(k, std::move(p)).first;
  }
  return it->second;
}

// s_λ in the monomial basis via det(e_{λ'_i - i + j}).
SymPoly schur_in_monomials_raw(const YoungDiagram& lam) {
  if (lam.empty()) return SymPoly{{{}, 1}};
  YoungDiagram conj = lam.conjugate();
  const int r = conj.rows();
  // minors over column subsets, expanding along consecutive rows
  std::map<uint32_t, SymPoly> minors;
  minors[0] = SymPoly{{{}, 1}};  // no columns: empty product
  auto minor = [&](auto&& self, uint32_t cols) -> const SymPoly& {
    auto it = minors.find(cols);
    if (it != minors.end()) return it->second;
    int ncols = __builtin_popcount(cols);
    int row = r - ncols;  // expand along the first uncovered row (0-based)
    SymPoly acc;
    int sign_index = 0;
    for (int j = 0; j < r; ++j) {
      if (!(cols & (1u << j))) continue;
      int k = conj.part(row) - (row + 1) + (j + 1);
      const SymPoly& entry = e_poly(k < 0 ? -1 : k);
      if (!entry.empty()) {
        SymPoly sub = sym_mul(entry, self(self, cols & ~(1u << j)));
        if (sign_index % 2 == 0)
          for (const auto& [key, c] : sub) acc[key] += c;
        else
          for (const auto& [key, c] : sub) acc[key] -= c;
      }
      ++sign_index;
    }
    for (auto it2 = acc.begin(); it2 != acc.end();)
      it2 = (it2->second == 0) ? acc.erase(it2) : std::next(it2);
    return minors.emplace(cols, std::move(acc)).first->second;
  };
  return minor(minor, (r >= 32) ? throw std::invalid_argument("schur oracle: diagram too wide")
                                : ((1u << r) - 1));
}

const SymPoly& schur_in_monomials(const YoungDiagram& lam) {
  static std::mutex mu;
  static std::map<YoungDiagram, SymPoly> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(lam);
  if (it == cache.end()) it = cache.emplace(lam, schur_in_monomials_raw(lam)).first;
  return it->second;
}

}  // namespace

std::map<YoungDiagram, Mult> schur_product(const YoungDiagram& mu, const YoungDiagram& nu) {
  static std::mutex mu_cache;
  static std::map<std::pair<YoungDiagram, YoungDiagram>, std::map<YoungDiagram, Mult>> cache;
  std::pair<YoungDiagram, YoungDiagram> key{std::min(mu, nu), std::max(mu, nu)};
  {
    std::lock_guard lock(mu_cache);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  SymPoly prod = sym_mul(schur_in_monomials(key.first), schur_in_monomials(key.second));
  std::map<YoungDiagram, Mult> out;
  // dominance-triangular extraction: the lexicographically greatest
  // remaining monomial is dominance-maximal, and its coefficient in its
  // own Schur function is 1.
  while (!prod.empty()) {
    auto lead = std::prev(prod.end());
    std::vector<int> rho = lead->first;
    Mult c = lead->second;
    if (c < 0) throw std::logic_error("schur_product: negative leading coefficient");
    YoungDiagram rd(rho);
    out[rd] = c;
    for (const auto& [key2, c2] : schur_in_monomials(rd)) {
      auto it = prod.find(key2);
      Mult now = (it == prod.end() ? Mult(0) : it->second) - c * c2;
      if (now == 0) {
        if (it != prod.end()) prod.erase(it);
      } else {
        prod[key2] = now;
      }
    }
  }
  std::lock_guard lock(mu_cache);
  return cache.emplace(key, std::move(out)).first->second;
}

Mult lr_oracle(const YoungDiagram& lam, const YoungDiagram& mu, const YoungDiagram& nu,
               int max_boxes) {
  if (lam.size() > max_boxes)
    throw std::invalid_argument("lr_oracle: diagram exceeds the configured bound");
  if (lam.size() != mu.size() + nu.size()) return 0;
  auto table = schur_product(mu, nu);
  auto it = table.find(lam);
  return it == table.end() ? Mult(0) : it->second;
}

namespace {

// Strictly increases upward along both orders; see poset.cpp.
int potential(const DegreeVector& v) {
  int phi = v.l + v.m;
  for (size_t j = 0; j < v.left.size(); ++j)
    phi -= static_cast<int>(j + 1) * (v.left[j] + v.right[j]);
  return phi;
}

std::vector<std::vector<int>> compositions_upto(int len, int max_total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<size_t>(len), 0);
  auto rec = [&](auto&& self, int pos, int budget) -> void {
    if (pos == len) {
      out.push_back(cur);
      return;
    }
    for (int x = 0; x <= budget; ++x) {
      cur[static_cast<size_t>(pos)] = x;
      self(self, pos + 1, budget - x);
    }
    cur[static_cast<size_t>(pos)] = 0;
  };
  rec(rec, 0, max_total);
  return out;
}

}  // namespace

std::vector<std::set<DegreeVector>> poset_level_oracle(const DegreeVector& l, PosetKind kind,
                                                       int q_bound) {
  check_degree(l);
  if (kind != PosetKind::P && kind != PosetKind::bfP)
    throw std::invalid_argument("poset_level_oracle applies to kinds P and bfP");
  const int t = l.t();
  int left_sum = std::accumulate(l.left.begin(), l.left.end(), 0);
  int right_sum = std::accumulate(l.right.begin(), l.right.end(), 0);
  int extra = (kind == PosetKind::P) ? q_bound : 0;  // added box pairs
  // materialize the bounded down-set; elements with potential gap above
  // 2*q_bound sit below level q_bound (every comparability refines into
  // alterations, each dropping the potential by one or two) and are
  // irrelevant for the requested levels
  std::vector<DegreeVector> down;
  for (const auto& lv : compositions_upto(t + 1, left_sum + l.l + extra))
    for (const auto& rv : compositions_upto(t + 1, right_sum + l.m + extra))
      for (int il = 0; il <= l.l; ++il)
        for (int im = 0; im <= l.m; ++im) {
          DegreeVector k = zero_degree(t);
          k.left = lv;
          k.right = rv;
          k.l = il;
          k.m = im;
          if (potential(l) - potential(k) > 2 * q_bound) continue;
          if (leq(k, l, kind)) down.push_back(std::move(k));
        }
  // dominator lists (potential strictly increases upward)
  std::stable_sort(down.begin(), down.end(), [](const DegreeVector& a, const DegreeVector& b) {
    return potential(a) > potential(b);
  });
  const size_t n = down.size();
  std::vector<std::vector<size_t>> dominators(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < i; ++j)
      if (potential(down[j]) > potential(down[i]) && leq(down[i], down[j], kind))
        dominators[i].push_back(j);
  // literal peeling: repeatedly remove the maximal elements
  std::vector<int> level(n, -1);
  std::vector<std::set<DegreeVector>> levels;
  size_t remaining = n;
  for (int q = 0; q <= q_bound && remaining > 0; ++q) {
    std::set<DegreeVector> this_level;
    std::vector<size_t> peel;
    for (size_t i = 0; i < n; ++i) {
      if (level[i] >= 0) continue;
      bool maximal = true;
      for (size_t j : dominators[i])
        if (level[j] < 0) {
          maximal = false;
          break;
        }
      if (maximal) peel.push_back(i);
    }
    for (size_t i : peel) {
      level[i] = q;
      this_level.insert(down[i]);
      --remaining;
    }
    levels.push_back(std::move(this_level));
  }
  while (static_cast<int>(levels.size()) <= q_bound) levels.push_back({});
  return levels;
}

Table composition_factors_bfT(const DiagramTuple& kap) {
  Table out;
  int qm = q_max(degree_of(kap));
  for (int q = 0; q <= qm; ++q)
    for (const auto& [key, mult] : socle_layers_J(kap, q)) out[key] += mult;
  return out;
}

bool composition_euler_bfT(const DiagramTuple& x) {
  Resolution res = resolution_bfT(x);
  std::map<DiagramTuple, Mult> alt;  // signed
  for (int k = 0; k <= res.max_computed_degree(); ++k) {
    int sign = (k % 2 == 0) ? 1 : -1;
    for (const auto& [kap, mult] : res.term(k))
      for (const auto& [key, f] : composition_factors_bfT(kap)) {
        Mult delta = mult * f;
        auto it = alt.find(key);
        Mult now = (it == alt.end() ? Mult(0) : it->second) + (sign > 0 ? delta : -delta);
        if (now == 0) {
          if (it != alt.end()) alt.erase(it);
        } else {
          alt[key] = now;
        }
      }
  }
  return alt.size() == 1 && alt.begin()->first == x && alt.begin()->second == 1;
}

namespace {

// Multiplicity of L_key among the composition factors of I_kap in the
// ambient category; finite because the key's degree sits in exactly one
// level below |kap|.
Mult factor_mult_TT(const DiagramTuple& kap, const DiagramTuple& key) {
  auto level = level_of(degree_of(key), degree_of(kap), PosetKind::P);
  if (!level) return 0;
  Table layer = socle_layers_I_lambda(kap, *level);
  auto it = layer.find(key);
  return it == layer.end() ? Mult(0) : it->second;
}

}  // namespace

TruncatedEulerReport composition_euler_TT(const DiagramTuple& x, int degree_bound,
                                          int key_box_bound) {
  TruncatedEulerReport report;
  report.degree_bound = degree_bound;
  Resolution res = resolution_TT(x, degree_bound + 1);
  std::vector<DiagramTuple> keys = all_tuples(x.t(), key_box_bound);
  std::map<DiagramTuple, Mult> alt;
  for (int k = 0; k <= degree_bound; ++k) {
    int sign = (k % 2 == 0) ? 1 : -1;
    for (const auto& [kap, mult] : res.term(k))
      for (const auto& key : keys) {
        Mult f = factor_mult_TT(kap, key);
        if (f == 0) continue;
        Mult delta = mult * f;
        auto it = alt.find(key);
        Mult now = (it == alt.end() ? Mult(0) : it->second) + (sign > 0 ? delta : -delta);
        if (now == 0) {
          if (it != alt.end()) alt.erase(it);
        } else {
          alt[key] = now;
        }
      }
  }
  // subtract the resolved simple
  {
    auto it = alt.find(x);
    Mult now = (it == alt.end() ? Mult(0) : it->second) - 1;
    if (now == 0) {
      if (it != alt.end()) alt.erase(it);
    } else {
      alt[x] = now;
    }
  }
  // the residual must match, with sign (-1)^degree_bound, part of the
  // factor content of the first omitted term
  int expected_sign = (degree_bound % 2 == 0) ? 1 : -1;
  Table omitted;
  for (const auto& [kap, mult] : res.term(degree_bound + 1))
    for (const auto& key : keys) {
      Mult f = factor_mult_TT(kap, key);
      if (f != 0) omitted[key] += mult * f;
    }
  report.ok = true;
  std::ostringstream os;
  for (const auto& [key, v] : alt) {
    Mult magnitude = expected_sign > 0 ? v : -v;
    auto it = omitted.find(key);
    if (magnitude <= 0 || it == omitted.end() || it->second < magnitude) {
      report.ok = false;
      os << "residual not covered by the omitted term at one key; ";
    }
  }
  report.detail = os.str();
  return report;
}

}  // namespace tcat::oracle
