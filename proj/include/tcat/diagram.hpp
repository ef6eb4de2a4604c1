#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace tcat {

// Multiplicities are exact arbitrary-precision nonnegative integers.
using Mult = boost::multiprecision::cpp_int;

// A partition: weakly decreasing list of positive integers. The empty
// list is the empty diagram.
class YoungDiagram {
public:
  YoungDiagram() = default;
  explicit YoungDiagram(std::vector<int> parts);

  static YoungDiagram row(int n);     // (n)
  static YoungDiagram column(int n);  // (1,...,1)

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  // i-th part, 0 beyond the last row
  int part(int i) const {
    return (i >= 0 && i < rows()) ? parts_[static_cast<size_t>(i)] : 0;
  }

  YoungDiagram conjugate() const;
  bool contains(const YoungDiagram& other) const;       // other ⊆ this
  YoungDiagram intersect(const YoungDiagram& other) const;

  bool operator==(const YoungDiagram&) const = default;
  // Total order: by size, then lexicographically on parts. Used for
  // map keys and deterministic output.
  std::strong_ordering operator<=>(const YoungDiagram& o) const {
    if (size_ != o.size_) return size_ <=> o.size_;
    return parts_ <=> o.parts_;
  }

private:
  std::vector<int> parts_;
  int size_ = 0;
};

using Seq = std::vector<YoungDiagram>;

// Element of the index set for simples and injectives: two sequences of
// length t+1 around a pair of inner diagrams. Storage is by position
// index alpha = 0..t; display order puts the highest index outermost.
struct DiagramTuple {
  Seq left;  // positions 0..t
  YoungDiagram inner_left;
  YoungDiagram inner_right;
  Seq right;  // positions 0..t

  int t() const { return static_cast<int>(left.size()) - 1; }
  int total_boxes() const;  // ||.||
  bool is_trivial() const;
  bool one_sided_left() const;   // inner_right and right all empty
  bool inner_only() const;       // left and right sequences all empty

  bool operator==(const DiagramTuple&) const = default;
  auto operator<=>(const DiagramTuple&) const = default;
};

DiagramTuple trivial_tuple(int t);
// Validates matching sequence lengths.
void check_tuple(const DiagramTuple& x);

// Extended sequences: index 0 holds the inner diagram (signed position
// -1), index b = alpha+1 holds the sequence entry at position alpha.
Seq left_ext(const DiagramTuple& x);
Seq right_ext(const DiagramTuple& x);
DiagramTuple tuple_from_ext(const Seq& lext, const Seq& rext);
int seq_boxes(const Seq& s);

enum class InvolutionKind { rev, perp, e_perp_o, o_perp_e };

// rev reverses each extended side; perp conjugates every entry;
// e_perp_o / o_perp_e conjugate the entries of even/odd extended index
// on the left and the complementary parity on the right.
DiagramTuple involution(const DiagramTuple& x, InvolutionKind kind);
Seq seq_reverse(const Seq& s);
Seq seq_conjugate_parity(const Seq& ext, int parity);  // conjugate entries with signed position ≡ parity (mod 2)

// Littlewood-Richardson coefficient N^λ_{μν}. Total function: 0 when
// sizes or inclusions fail. Memoized; thread-safe.
Mult lr_coefficient(const YoungDiagram& lam, const YoungDiagram& mu,
                    const YoungDiagram& nu);
// Direct tableau enumeration without the cache or argument
// canonicalization; the symmetry property tests need the raw path.
Mult lr_coefficient_uncached(const YoungDiagram& lam, const YoungDiagram& mu,
                             const YoungDiagram& nu);

// Iterated coefficient Σ N^λ_{μ1 σ1} N^{σ1}_{μ2 σ2} ··· ; empty factor
// list gives δ_{λ,∅}.
Mult multi_lr(const YoungDiagram& lam, const std::vector<YoungDiagram>& factors);

// Component-wise product of multi_lr values over sequences of equal
// length. Throws on length mismatch.
Mult seq_lr(const Seq& kappa, const std::vector<Seq>& factor_seqs);

// Number of standard Young tableaux of shape λ (hook length formula).
Mult sn_dim(const YoungDiagram& lam);
Mult sn_dim(const Seq& s);
Mult sn_dim(const DiagramTuple& x);

enum class PowerKind { tensor, sym, ext };

struct PowerComponent {
  YoungDiagram first;
  YoungDiagram second;
  Mult mult;
  bool operator==(const PowerComponent&) const = default;
};

// Decomposition of S^m(X⊗Y), Λ^m(X⊗Y) and X^{⊗m}⊗Y^{⊗m} into pairs of
// Schur components with multiplicities.
std::vector<PowerComponent> decompose_power(PowerKind kind, int m);

// All partitions of exactly n, sorted.
const std::vector<YoungDiagram>& all_diagrams(int n);
// All partitions of 0..n, sorted.
std::vector<YoungDiagram> all_diagrams_upto(int n);
// All sequences of given length with total box count ≤ max_boxes.
std::vector<Seq> all_seqs(int length, int max_boxes);
// All tuples for given t with ||.|| ≤ max_boxes.
std::vector<DiagramTuple> all_tuples(int t, int max_boxes);

// All ways to write λ as a nonzero LR product over `slots` ordered
// factors: list of (factor sequence, multi_lr value).
std::vector<std::pair<std::vector<YoungDiagram>, Mult>> lr_expansions(
    const YoungDiagram& lam, int slots);

// Cache controls. Capacity is read once from TCAT_CACHE_MAX (entries
// per cache) when first needed.
size_t cache_capacity();

}  // namespace tcat
