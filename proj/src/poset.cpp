#include "tcat/poset.hpp"

#include <algorithm>
#include <numeric>

namespace tcat {

namespace {

int vec_sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

int tail_sum(const std::vector<int>& v, size_t beta) {
  int s = 0;
  for (size_t j = beta; j < v.size(); ++j) s += v[j];
  return s;
}

bool tails_geq(const std::vector<int>& a, const std::vector<int>& b) {
  for (size_t beta = 0; beta < a.size(); ++beta)
    if (tail_sum(a, beta) < tail_sum(b, beta)) return false;
  return true;
}

void check_same_shape(const DegreeVector& a, const DegreeVector& b) {
  if (a.left.size() != b.left.size() || a.right.size() != b.right.size() ||
      a.left.size() != a.right.size() || a.left.empty())
    throw std::invalid_argument("degree vectors have mismatched shapes");
}

bool side_zero(const std::vector<int>& v, int inner) { return inner == 0 && vec_sum(v) == 0; }

}  // namespace

int DegreeVector::total() const { return vec_sum(left) + l + m + vec_sum(right); }

std::vector<int> DegreeVector::left_extended() const {
  std::vector<int> e;
  e.reserve(left.size() + 1);
  e.push_back(l);
  e.insert(e.end(), left.begin(), left.end());
  return e;
}

std::vector<int> DegreeVector::right_extended() const {
  std::vector<int> e;
  e.reserve(right.size() + 1);
  e.push_back(m);
  e.insert(e.end(), right.begin(), right.end());
  return e;
}

DegreeVector DegreeVector::operator+(const DegreeVector& o) const {
  check_same_shape(*this, o);
  DegreeVector r = *this;
  r.l += o.l;
  r.m += o.m;
  for (size_t i = 0; i < left.size(); ++i) r.left[i] += o.left[i];
  for (size_t i = 0; i < right.size(); ++i) r.right[i] += o.right[i];
  return r;
}

DegreeVector zero_degree(int t) {
  DegreeVector v;
  v.left.assign(static_cast<size_t>(t) + 1, 0);
  v.right.assign(static_cast<size_t>(t) + 1, 0);
  return v;
}

DegreeVector degree_of(const DiagramTuple& x) {
  check_tuple(x);
  DegreeVector v = zero_degree(x.t());
  v.l = x.inner_left.size();
  v.m = x.inner_right.size();
  for (size_t i = 0; i < x.left.size(); ++i) v.left[i] = x.left[i].size();
  for (size_t i = 0; i < x.right.size(); ++i) v.right[i] = x.right[i].size();
  return v;
}

void check_degree(const DegreeVector& v) {
  if (v.left.empty() || v.left.size() != v.right.size())
    throw std::invalid_argument("degree vector sequences must have equal length t+1 >= 1");
  if (v.l < 0 || v.m < 0) throw std::invalid_argument("degree vector entries must be >= 0");
  for (int x : v.left)
    if (x < 0) throw std::invalid_argument("degree vector entries must be >= 0");
  for (int x : v.right)
    if (x < 0) throw std::invalid_argument("degree vector entries must be >= 0");
}

bool leq(const DegreeVector& a, const DegreeVector& b, PosetKind kind) {
  check_same_shape(a, b);
  switch (kind) {
    case PosetKind::P:
    case PosetKind::bfP: {
      if (a.l - a.m + vec_sum(a.left) - vec_sum(a.right) !=
          b.l - b.m + vec_sum(b.left) - vec_sum(b.right))
        return false;
      if (a.l > b.l || a.m > b.m) return false;
      if (!tails_geq(a.left, b.left) || !tails_geq(a.right, b.right)) return false;
      if (kind == PosetKind::bfP) {
        if (a.l + vec_sum(a.left) > b.l + vec_sum(b.left)) return false;
        if (a.m + vec_sum(a.right) > b.m + vec_sum(b.right)) return false;
      }
      return true;
    }
    case PosetKind::Pleft: {
      if (!side_zero(a.right, a.m) || !side_zero(b.right, b.m))
        throw std::invalid_argument("Pleft requires zero right-hand data");
      auto ae = a.left_extended(), be = b.left_extended();
      return vec_sum(ae) == vec_sum(be) && tails_geq(ae, be);
    }
    case PosetKind::Pright: {
      if (!side_zero(a.left, a.l) || !side_zero(b.left, b.l))
        throw std::invalid_argument("Pright requires zero left-hand data");
      auto ae = a.right_extended(), be = b.right_extended();
      return vec_sum(ae) == vec_sum(be) && tails_geq(ae, be);
    }
    case PosetKind::P00: {
      if (vec_sum(a.left) != 0 || vec_sum(a.right) != 0 || vec_sum(b.left) != 0 ||
          vec_sum(b.right) != 0)
        throw std::invalid_argument("P00 requires zero outer data");
      return a.l - a.m == b.l - b.m && a.l <= b.l && a.m <= b.m;
    }
  }
  throw std::invalid_argument("unknown poset kind");
}

int q_max(const DegreeVector& v) {
  check_degree(v);
  int t = v.t();
  int q = (v.l + v.m) * (t + 1);
  for (int j = 0; j <= t; ++j)
    q += (v.left[static_cast<size_t>(j)] + v.right[static_cast<size_t>(j)]) * (t - j);
  return q;
}

std::set<DegreeVector> one_step(const DegreeVector& v, PosetKind kind) {
  check_degree(v);
  if (kind != PosetKind::P && kind != PosetKind::bfP)
    throw std::invalid_argument("one_step applies to kinds P and bfP");
  std::set<DegreeVector> out;
  int t = v.t();
  // (i) move one box outward on the left side
  if (v.l > 0) {
    DegreeVector w = v;
    --w.l;
    ++w.left[0];
    out.insert(std::move(w));
  }
  for (int alpha = 0; alpha < t; ++alpha)
    if (v.left[static_cast<size_t>(alpha)] > 0) {
      DegreeVector w = v;
      --w.left[static_cast<size_t>(alpha)];
      ++w.left[static_cast<size_t>(alpha) + 1];
      out.insert(std::move(w));
    }
  // (ii) same on the right side
  if (v.m > 0) {
    DegreeVector w = v;
    --w.m;
    ++w.right[0];
    out.insert(std::move(w));
  }
  for (int alpha = 0; alpha < t; ++alpha)
    if (v.right[static_cast<size_t>(alpha)] > 0) {
      DegreeVector w = v;
      --w.right[static_cast<size_t>(alpha)];
      ++w.right[static_cast<size_t>(alpha) + 1];
      out.insert(std::move(w));
    }
  // (iii) contract an inner pair
  if (v.l > 0 && v.m > 0) {
    DegreeVector w = v;
    --w.l;
    --w.m;
    out.insert(std::move(w));
  }
  // (iv) create a pair at position 0 (P only)
  if (kind == PosetKind::P) {
    DegreeVector w = v;
    ++w.left[0];
    ++w.right[0];
    out.insert(std::move(w));
  }
  return out;
}

std::vector<std::set<DegreeVector>> level_sets(const DegreeVector& v, PosetKind kind,
                                               int q_bound, size_t max_level_size) {
  check_degree(v);
  if (kind != PosetKind::P && kind != PosetKind::bfP)
    throw std::invalid_argument("level_sets applies to kinds P and bfP");
  std::vector<std::set<DegreeVector>> levels;
  levels.push_back({v});
  std::set<DegreeVector> seen{v};
  for (int q = 0; q < q_bound; ++q) {
    std::set<DegreeVector> candidates;
    for (const auto& k : levels.back())
      for (auto& s : one_step(k, kind))
        if (!seen.count(s)) candidates.insert(std::move(s));
    std::set<DegreeVector> next;
    for (const auto& c : candidates) {
      bool dominated = false;
      for (const auto& d : candidates)
        if (!(c == d) && leq(c, d, kind)) {
          dominated = true;
          break;
        }
      if (!dominated) next.insert(c);
    }
    if (next.size() > max_level_size)
      throw std::runtime_error("level_sets: level size exceeds the safety cap");
    for (const auto& k : next) seen.insert(k);
    levels.push_back(std::move(next));
  }
  return levels;
}

namespace {

// Strictly decreasing along every elementary alteration; bounds the
// length of ascending chains and hence the peeling depth.
int chain_potential(const DegreeVector& v) {
  int phi = v.l + v.m;
  for (size_t j = 0; j < v.left.size(); ++j)
    phi -= static_cast<int>(j + 1) * (v.left[j] + v.right[j]);
  return phi;
}

}  // namespace

std::optional<int> level_of(const DegreeVector& k, const DegreeVector& l, PosetKind kind) {
  if (!(kind == PosetKind::P || kind == PosetKind::bfP))
    throw std::invalid_argument("level_of applies to kinds P and bfP");
  if (!leq(k, l, kind)) return std::nullopt;
  if (k == l) return 0;
  int bound = (kind == PosetKind::bfP) ? q_max(l)
                                       : chain_potential(l) - chain_potential(k);
  auto levels = level_sets(l, kind, bound);
  for (int q = 0; q < static_cast<int>(levels.size()); ++q)
    if (levels[static_cast<size_t>(q)].count(k)) return q;
  throw std::runtime_error("level_of: element below the top was not reached by peeling");
}

std::vector<DegreeVector> all_degree_vectors(int t, int max_total) {
  std::vector<DegreeVector> out;
  int len = 2 * (t + 2);
  std::vector<int> current(static_cast<size_t>(len), 0);
  auto rec = [&](auto&& self, int pos, int budget) -> void {
    if (pos == len) {
      DegreeVector v = zero_degree(t);
      for (int i = 0; i <= t; ++i) v.left[static_cast<size_t>(i)] = current[static_cast<size_t>(i)];
      v.l = current[static_cast<size_t>(t) + 1];
      v.m = current[static_cast<size_t>(t) + 2];
      for (int i = 0; i <= t; ++i)
        v.right[static_cast<size_t>(i)] = current[static_cast<size_t>(t + 3 + i)];
      out.push_back(std::move(v));
      return;
    }
    for (int x = 0; x <= budget; ++x) {
      current[static_cast<size_t>(pos)] = x;
      self(self, pos + 1, budget - x);
    }
    current[static_cast<size_t>(pos)] = 0;
  };
  rec(rec, 0, max_total);
  return out;
}

}  // namespace tcat
