#include "tcat/levelize.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tcat {

namespace {

long long gcd_ll(long long a, long long b) {
  while (b) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

}  // namespace

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = gcd_ll(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(text), 1);
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw std::invalid_argument("unparseable rational value \"" + text + "\"");
  }
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num * o.den + o.num * den, den * o.den);
}

Rational Rational::operator*(long long k) const { return Rational(num * k, den); }

std::string Rational::str() const {
  std::ostringstream os;
  os << num;
  if (den != 1) os << "/" << den;
  return os.str();
}

int SparseMatrix::add_label(const std::string& name) {
  auto it = label_index.find(name);
  if (it != label_index.end()) return it->second;
  int idx = static_cast<int>(labels.size());
  labels.push_back(name);
  label_index.emplace(name, idx);
  return idx;
}

void SparseMatrix::set(const std::string& row, const std::string& col, const Rational& value) {
  int r = add_label(row);
  int c = add_label(col);
  if (value.is_zero())
    entries.erase({r, c});
  else
    entries[{r, c}] = value;
}

Rational SparseMatrix::at(int row, int col) const {
  auto it = entries.find({row, col});
  return it == entries.end() ? Rational() : it->second;
}

SparseMatrix SparseMatrix::parse_coordinate_text(std::istream& in) {
  SparseMatrix m;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string row, col, value;
    if (!(ls >> row)) continue;  // blank line
    if (row.size() >= 1 && row[0] == '#') continue;
    if (!(ls >> col >> value)) {
      std::ostringstream os;
      os << "line " << lineno << ": expected \"row col value\"";
      throw std::invalid_argument(os.str());
    }
    m.set(row, col, Rational::parse(value));
  }
  return m;
}

Levelization levelize(const SparseMatrix& m) {
  const int n = static_cast<int>(m.label_count());
  // symmetrized adjacency
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (const auto& [rc, value] : m.entries) {
    if (value.is_zero()) continue;
    auto [r, c] = rc;
    if (r != c) {
      adj[static_cast<size_t>(r)].push_back(c);
      adj[static_cast<size_t>(c)].push_back(r);
    }
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  Levelization lv;
  lv.class_of.assign(static_cast<size_t>(n), -1);
  lv.level_in_class.assign(static_cast<size_t>(n), -1);
  for (int start = 0; start < n; ++start) {
    if (lv.class_of[static_cast<size_t>(start)] >= 0) continue;
    int cls = static_cast<int>(lv.classes.size());
    Levelization::ConnectivityClass cc;
    cc.representative = start;
    std::deque<int> frontier{start};
    lv.class_of[static_cast<size_t>(start)] = cls;
    lv.level_in_class[static_cast<size_t>(start)] = 0;
    cc.levels.push_back({start});
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int a : frontier)
        for (int b : adj[static_cast<size_t>(a)])
          if (lv.class_of[static_cast<size_t>(b)] < 0) {
            lv.class_of[static_cast<size_t>(b)] = cls;
            lv.level_in_class[static_cast<size_t>(b)] =
                lv.level_in_class[static_cast<size_t>(a)] + 1;
            next.push_back(b);
          }
      frontier.assign(next.begin(), next.end());
      if (!next.empty()) {
        std::sort(next.begin(), next.end());  // ties broken by input label order
        cc.levels.push_back(std::move(next));
      }
    }
    lv.classes.push_back(std::move(cc));
  }
  // block-tridiagonalizing order: class, then level, then input order
  for (const auto& cc : lv.classes)
    for (const auto& level : cc.levels)
      lv.order.insert(lv.order.end(), level.begin(), level.end());
  lv.parts = split_phi(lv, m);
  // diagnostics
  std::vector<int> position(static_cast<size_t>(n), 0);
  for (size_t p = 0; p < lv.order.size(); ++p) position[static_cast<size_t>(lv.order[p])] =
      static_cast<int>(p);
  lv.stats.assign(lv.classes.size(), {});
  for (size_t c = 0; c < lv.classes.size(); ++c) {
    const auto& levels = lv.classes[c].levels;
    auto& st = lv.stats[c];
    for (size_t i = 0; i + 1 < levels.size(); ++i)
      st.max_adjacent_level_width = std::max(
          st.max_adjacent_level_width, static_cast<int>(levels[i].size() + levels[i + 1].size()));
    if (levels.size() == 1)
      st.max_adjacent_level_width = static_cast<int>(levels[0].size());
  }
  for (const auto& [rc, value] : m.entries) {
    if (value.is_zero()) continue;
    auto [r, c] = rc;
    if (lv.class_of[static_cast<size_t>(r)] != lv.class_of[static_cast<size_t>(c)]) continue;
    auto& st = lv.stats[static_cast<size_t>(lv.class_of[static_cast<size_t>(r)])];
    st.bandwidth = std::max(st.bandwidth,
                            std::abs(position[static_cast<size_t>(r)] -
                                     position[static_cast<size_t>(c)]));
  }
  return lv;
}

std::array<SparseMatrix, 3> split_phi(const Levelization& lv, const SparseMatrix& m) {
  if (lv.class_of.size() != m.label_count())
    throw std::invalid_argument("split_phi: levelization does not match the matrix");
  std::array<SparseMatrix, 3> parts;
  for (auto& p : parts) {
    p.labels = m.labels;
    p.label_index = m.label_index;
  }
  for (const auto& [rc, value] : m.entries) {
    if (value.is_zero()) continue;
    auto [r, c] = rc;
    if (lv.class_of[static_cast<size_t>(r)] != lv.class_of[static_cast<size_t>(c)])
      throw std::invalid_argument("split_phi: entry joins two connectivity classes");
    // [D, φ_j] = j φ_j with D_aa = level(a)+1 forces j = level(row) - level(col)
    int j = lv.level_in_class[static_cast<size_t>(r)] - lv.level_in_class[static_cast<size_t>(c)];
    if (j < -1 || j > 1)
      throw std::invalid_argument("split_phi: entry spans more than one level");
    parts[static_cast<size_t>(j + 1)].entries[rc] = value;
  }
  return parts;
}

}  // namespace tcat
