#include "tcat/diagram.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <unordered_map>

namespace tcat {

YoungDiagram::YoungDiagram(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("diagram parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("diagram parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

YoungDiagram YoungDiagram::row(int n) {
  return n == 0 ? YoungDiagram() : YoungDiagram({n});
}

YoungDiagram YoungDiagram::column(int n) {
  return YoungDiagram(std::vector<int>(static_cast<size_t>(n), 1));
}

YoungDiagram YoungDiagram::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> cols(static_cast<size_t>(parts_[0]), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++cols[static_cast<size_t>(j)];
  return YoungDiagram(std::move(cols));
}

bool YoungDiagram::contains(const YoungDiagram& other) const {
  if (other.rows() > rows()) return false;
  for (int i = 0; i < other.rows(); ++i)
    if (other.part(i) > part(i)) return false;
  return true;
}

YoungDiagram YoungDiagram::intersect(const YoungDiagram& other) const {
  std::vector<int> parts;
  for (int i = 0; i < std::min(rows(), other.rows()); ++i) {
    int p = std::min(part(i), other.part(i));
    if (p == 0) break;
    parts.push_back(p);
  }
  return YoungDiagram(std::move(parts));
}

int DiagramTuple::total_boxes() const {
  return seq_boxes(left) + inner_left.size() + inner_right.size() + seq_boxes(right);
}

bool DiagramTuple::is_trivial() const { return total_boxes() == 0; }

bool DiagramTuple::one_sided_left() const {
  return inner_right.empty() && seq_boxes(right) == 0;
}

bool DiagramTuple::inner_only() const {
  return seq_boxes(left) == 0 && seq_boxes(right) == 0;
}

DiagramTuple trivial_tuple(int t) {
  DiagramTuple x;
  x.left.assign(static_cast<size_t>(t) + 1, YoungDiagram());
  x.right.assign(static_cast<size_t>(t) + 1, YoungDiagram());
  return x;
}

void check_tuple(const DiagramTuple& x) {
  if (x.left.empty() || x.left.size() != x.right.size())
    throw std::invalid_argument("tuple sequences must have equal length t+1 >= 1");
}

int seq_boxes(const Seq& s) {
  int n = 0;
  for (const auto& d : s) n += d.size();
  return n;
}

Seq left_ext(const DiagramTuple& x) {
  Seq e;
  e.reserve(x.left.size() + 1);
  e.push_back(x.inner_left);
  e.insert(e.end(), x.left.begin(), x.left.end());
  return e;
}

Seq right_ext(const DiagramTuple& x) {
  Seq e;
  e.reserve(x.right.size() + 1);
  e.push_back(x.inner_right);
  e.insert(e.end(), x.right.begin(), x.right.end());
  return e;
}

DiagramTuple tuple_from_ext(const Seq& lext, const Seq& rext) {
  if (lext.size() < 2 || lext.size() != rext.size())
    throw std::invalid_argument("extended sequences must have equal length t+2 >= 2");
  DiagramTuple x;
  x.inner_left = lext[0];
  x.inner_right = rext[0];
  x.left.assign(lext.begin() + 1, lext.end());
  x.right.assign(rext.begin() + 1, rext.end());
  return x;
}

Seq seq_reverse(const Seq& s) { return Seq(s.rbegin(), s.rend()); }

Seq seq_conjugate_parity(const Seq& ext, int parity) {
  Seq out = ext;
  for (size_t b = 0; b < out.size(); ++b) {
    int alpha = static_cast<int>(b) - 1;  // signed position
    int mod = ((alpha % 2) + 2) % 2;
    if (mod == parity) out[b] = out[b].conjugate();
  }
  return out;
}

DiagramTuple involution(const DiagramTuple& x, InvolutionKind kind) {
  check_tuple(x);
  Seq L = left_ext(x), R = right_ext(x);
  switch (kind) {
    case InvolutionKind::rev:
      return tuple_from_ext(seq_reverse(L), seq_reverse(R));
    case InvolutionKind::perp: {
      for (auto& d : L) d = d.conjugate();
      for (auto& d : R) d = d.conjugate();
      return tuple_from_ext(L, R);
    }
    case InvolutionKind::e_perp_o:
      return tuple_from_ext(seq_conjugate_parity(L, 0), seq_conjugate_parity(R, 1));
    case InvolutionKind::o_perp_e:
      return tuple_from_ext(seq_conjugate_parity(L, 1), seq_conjugate_parity(R, 0));
  }
  throw std::invalid_argument("unknown involution kind");
}

size_t cache_capacity() {
  static const size_t cap = [] {
    if (const char* env = std::getenv("TCAT_CACHE_MAX")) {
      long long v = std::atoll(env);
      if (v > 0) return static_cast<size_t>(v);
    }
    return static_cast<size_t>(1) << 22;
  }();
  return cap;
}

namespace {

// Shared memo with concurrent readers and serialized insertion.
template <class K, class V, class Hash>
class Cache {
public:
  bool lookup(const K& key, V& out) const {
    std::shared_lock lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return false;
    out = it->second;
    return true;
  }
  void insert(const K& key, const V& value) {
    std::unique_lock lock(mu_);
    if (map_.size() >= cache_capacity()) return;  // full: keep serving existing entries
    map_.emplace(key, value);
  }

private:
  mutable std::shared_mutex mu_;
  std::unordered_map<K, V, Hash> map_;
};

void hash_combine(size_t& h, size_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
}

size_t hash_diagram(const YoungDiagram& d) {
  size_t h = 0x811c9dc5u;
  for (int p : d.parts()) hash_combine(h, static_cast<size_t>(p));
  return h;
}

struct TripleKey {
  YoungDiagram a, b, c;
  bool operator==(const TripleKey&) const = default;
};
struct TripleHash {
  size_t operator()(const TripleKey& k) const {
    size_t h = hash_diagram(k.a);
    hash_combine(h, hash_diagram(k.b));
    hash_combine(h, hash_diagram(k.c));
    return h;
  }
};

struct MultiKey {
  YoungDiagram lam;
  std::vector<YoungDiagram> factors;
  bool operator==(const MultiKey&) const = default;
};
struct MultiHash {
  size_t operator()(const MultiKey& k) const {
    size_t h = hash_diagram(k.lam);
    for (const auto& f : k.factors) hash_combine(h, hash_diagram(f));
    return h;
  }
};

// Counts LR skew semistandard tableaux of shape lam/mu and content nu
// whose reverse reading word is a lattice word. Cells are filled in
// reverse reading order (rows top to bottom, right to left), so the
// lattice condition can be enforced prefix by prefix.
class LrCounter {
public:
  LrCounter(const YoungDiagram& lam, const YoungDiagram& mu, const YoungDiagram& nu)
      : lam_(lam), mu_(mu), nu_(nu) {}

  Mult count() {
    cells_.clear();
    for (int r = 0; r < lam_.rows(); ++r)
      for (int c = lam_.part(r) - 1; c >= mu_.part(r); --c)
        cells_.push_back({r, c});
    counts_.assign(static_cast<size_t>(nu_.rows()), 0);
    grid_.assign(static_cast<size_t>(lam_.rows()),
                 std::vector<int>(static_cast<size_t>(lam_.part(0)), 0));
    Mult total = 0;
    fill(0, total);
    return total;
  }

private:
  void fill(size_t idx, Mult& total) {
    if (idx == cells_.size()) {
      ++total;
      return;
    }
    auto [r, c] = cells_[idx];
    for (int v = 1; v <= nu_.rows(); ++v) {
      if (counts_[static_cast<size_t>(v - 1)] >= nu_.part(v - 1)) continue;
      // lattice: every prefix of the reverse reading word has #v <= #(v-1)
      if (v > 1 && counts_[static_cast<size_t>(v - 2)] <= counts_[static_cast<size_t>(v - 1)])
        continue;
      // rows weakly increase: the right neighbour was filled before
      if (c + 1 < lam_.part(r) && v > grid_[static_cast<size_t>(r)][static_cast<size_t>(c + 1)])
        continue;
      // columns strictly increase: the cell above, when in the skew shape
      if (r > 0 && c >= mu_.part(r - 1) && c < lam_.part(r - 1) &&
          v <= grid_[static_cast<size_t>(r - 1)][static_cast<size_t>(c)])
        continue;
      grid_[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
      ++counts_[static_cast<size_t>(v - 1)];
      fill(idx + 1, total);
      --counts_[static_cast<size_t>(v - 1)];
      grid_[static_cast<size_t>(r)][static_cast<size_t>(c)] = 0;
    }
  }

  const YoungDiagram& lam_;
  const YoungDiagram& mu_;
  const YoungDiagram& nu_;
  std::vector<std::pair<int, int>> cells_;
  std::vector<int> counts_;
  std::vector<std::vector<int>> grid_;
};

Cache<TripleKey, Mult, TripleHash>& lr_cache() {
  static Cache<TripleKey, Mult, TripleHash> cache;
  return cache;
}

Cache<MultiKey, Mult, MultiHash>& multi_cache() {
  static Cache<MultiKey, Mult, MultiHash> cache;
  return cache;
}

}  // namespace

Mult lr_coefficient_uncached(const YoungDiagram& lam, const YoungDiagram& mu,
                             const YoungDiagram& nu) {
  if (lam.size() != mu.size() + nu.size()) return 0;
  if (!lam.contains(mu) || !lam.contains(nu)) return 0;
  if (nu.empty()) return mu == lam ? 1 : 0;
  return LrCounter(lam, mu, nu).count();
}

Mult lr_coefficient(const YoungDiagram& lam, const YoungDiagram& mu,
                    const YoungDiagram& nu) {
  if (lam.size() != mu.size() + nu.size()) return 0;
  if (!lam.contains(mu) || !lam.contains(nu)) return 0;
  TripleKey key{lam, std::min(mu, nu), std::max(mu, nu)};
  Mult value;
  if (lr_cache().lookup(key, value)) return value;
  value = lr_coefficient_uncached(lam, key.b, key.c);
  lr_cache().insert(key, value);
  return value;
}

Mult multi_lr(const YoungDiagram& lam, const std::vector<YoungDiagram>& factors) {
  std::vector<YoungDiagram> fs;
  fs.reserve(factors.size());
  int total = 0;
  for (const auto& f : factors) {
    if (f.empty()) continue;  // ∅ is neutral
    total += f.size();
    fs.push_back(f);
  }
  if (total != lam.size()) return 0;
  if (fs.empty()) return lam.empty() ? 1 : 0;
  if (fs.size() == 1) return lam == fs[0] ? 1 : 0;
  if (fs.size() == 2) return lr_coefficient(lam, fs[0], fs[1]);
  std::sort(fs.begin(), fs.end());  // the value is symmetric in the factors
  MultiKey key{lam, fs};
  Mult value;
  if (multi_cache().lookup(key, value)) return value;
  value = 0;
  std::vector<YoungDiagram> rest(fs.begin() + 1, fs.end());
  int rest_size = lam.size() - fs[0].size();
  for (const auto& sigma : all_diagrams(rest_size)) {
    Mult n = lr_coefficient(lam, fs[0], sigma);
    if (n == 0) continue;
    Mult inner = multi_lr(sigma, rest);
    if (inner != 0) value += n * inner;
  }
  multi_cache().insert(key, value);
  return value;
}

Mult seq_lr(const Seq& kappa, const std::vector<Seq>& factor_seqs) {
  for (const auto& fs : factor_seqs)
    if (fs.size() != kappa.size())
      throw std::invalid_argument("seq_lr: sequence length mismatch");
  Mult value = 1;
  std::vector<YoungDiagram> column(factor_seqs.size());
  for (size_t alpha = 0; alpha < kappa.size(); ++alpha) {
    for (size_t j = 0; j < factor_seqs.size(); ++j) column[j] = factor_seqs[j][alpha];
    value *= multi_lr(kappa[alpha], column);
    if (value == 0) return 0;
  }
  return value;
}

Mult sn_dim(const YoungDiagram& lam) {
  if (lam.empty()) return 1;
  YoungDiagram conj = lam.conjugate();
  Mult numer = 1;
  for (int k = 1; k <= lam.size(); ++k) numer *= k;
  Mult denom = 1;
  for (int r = 0; r < lam.rows(); ++r)
    for (int c = 0; c < lam.part(r); ++c)
      denom *= (lam.part(r) - c) + (conj.part(c) - r) - 1;
  return numer / denom;  // exact: hook lengths divide n!
}

Mult sn_dim(const Seq& s) {
  Mult value = 1;
  for (const auto& d : s) value *= sn_dim(d);
  return value;
}

Mult sn_dim(const DiagramTuple& x) {
  return sn_dim(x.left) * sn_dim(x.inner_left) * sn_dim(x.inner_right) * sn_dim(x.right);
}

std::vector<PowerComponent> decompose_power(PowerKind kind, int m) {
  if (m < 0) throw std::invalid_argument("decompose_power: negative exponent");
  std::vector<PowerComponent> out;
  const auto& diags = all_diagrams(m);
  switch (kind) {
    case PowerKind::sym:
      for (const auto& d : diags) out.push_back({d, d, 1});
      break;
    case PowerKind::ext:
      for (const auto& d : diags) out.push_back({d, d.conjugate(), 1});
      break;
    case PowerKind::tensor:
      for (const auto& a : diags)
        for (const auto& b : diags) out.push_back({a, b, sn_dim(a) * sn_dim(b)});
      break;
  }
  return out;
}

namespace {

std::vector<YoungDiagram> partitions_of(int n) {
  std::vector<YoungDiagram> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      self(self, remaining - p, p);
      current.pop_back();
    }
  };
  rec(rec, n, n);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

const std::vector<YoungDiagram>& all_diagrams(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<YoungDiagram>> table;  // stable references
  if (n < 0) throw std::invalid_argument("all_diagrams: negative size");
  std::lock_guard lock(mu);
  auto it = table.find(n);
  if (it == table.end()) it = table.emplace(n, partitions_of(n)).first;
  return it->second;
}

std::vector<YoungDiagram> all_diagrams_upto(int n) {
  std::vector<YoungDiagram> out;
  for (int k = 0; k <= n; ++k) {
    const auto& dk = all_diagrams(k);
    out.insert(out.end(), dk.begin(), dk.end());
  }
  return out;
}

std::vector<Seq> all_seqs(int length, int max_boxes) {
  std::vector<Seq> out;
  Seq current;
  auto rec = [&](auto&& self, int pos, int budget) -> void {
    if (pos == length) {
      out.push_back(current);
      return;
    }
    for (int k = 0; k <= budget; ++k)
      for (const auto& d : all_diagrams(k)) {
        current.push_back(d);
        self(self, pos + 1, budget - k);
        current.pop_back();
      }
  };
  rec(rec, 0, max_boxes);
  return out;
}

std::vector<DiagramTuple> all_tuples(int t, int max_boxes) {
  std::vector<DiagramTuple> out;
  int len = 2 * (t + 2);
  for (const auto& s : all_seqs(len, max_boxes)) {
    DiagramTuple x;
    x.left.assign(s.begin(), s.begin() + t + 1);
    x.inner_left = s[static_cast<size_t>(t) + 1];
    x.inner_right = s[static_cast<size_t>(t) + 2];
    x.right.assign(s.begin() + t + 3, s.end());
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<std::pair<std::vector<YoungDiagram>, Mult>> lr_expansions(
    const YoungDiagram& lam, int slots) {
  if (slots <= 0) throw std::invalid_argument("lr_expansions: need at least one slot");
  if (slots == 1) return {{{lam}, 1}};
  std::map<std::vector<YoungDiagram>, Mult> merged;
  for (int a = 0; a <= lam.size(); ++a)
    for (const auto& first : all_diagrams(a)) {
      if (!lam.contains(first)) continue;
      for (const auto& sigma : all_diagrams(lam.size() - a)) {
        Mult n = lr_coefficient(lam, first, sigma);
        if (n == 0) continue;
        for (const auto& [rest, c] : lr_expansions(sigma, slots - 1)) {
          std::vector<YoungDiagram> factors;
          factors.reserve(static_cast<size_t>(slots));
          factors.push_back(first);
          factors.insert(factors.end(), rest.begin(), rest.end());
          merged[std::move(factors)] += n * c;
        }
      }
    }
  return {merged.begin(), merged.end()};
}

}  // namespace tcat
