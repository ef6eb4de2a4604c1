#include "tcat/poset.hpp"
#include "tcat/oracle.hpp"

#include <doctest.h>

using namespace tcat;

namespace {

DegreeVector dv0(int l0, int l, int m, int m0) {
  DegreeVector v = zero_degree(0);
  v.left[0] = l0;
  v.l = l;
  v.m = m;
  v.right[0] = m0;
  return v;
}

}  // namespace

TEST_CASE("leq basics") {
  for (auto kind : {PosetKind::P, PosetKind::bfP}) {
    for (const auto& v : all_degree_vectors(1, 3)) CHECK(leq(v, v, kind));
  }
  // t=0 worked cases (display (l_0,l;m,m_0))
  CHECK(leq(dv0(0, 0, 0, 0), dv0(0, 1, 1, 0), PosetKind::bfP));
  CHECK_FALSE(leq(dv0(1, 0, 1, 0), dv0(0, 0, 0, 0), PosetKind::bfP));
  CHECK_FALSE(leq(dv0(0, 0, 0, 0), dv0(1, 0, 1, 0), PosetKind::bfP));
  CHECK(leq(dv0(1, 0, 0, 1), dv0(0, 1, 1, 0), PosetKind::P));
  // P admits created pairs, bfP does not
  CHECK(leq(dv0(1, 0, 0, 1), dv0(0, 0, 0, 0), PosetKind::P));
  CHECK_FALSE(leq(dv0(1, 0, 0, 1), dv0(0, 0, 0, 0), PosetKind::bfP));
  CHECK_THROWS_AS(leq(dv0(0, 0, 1, 0), dv0(0, 0, 1, 0), PosetKind::Pleft),
                  std::invalid_argument);
}

TEST_CASE("q_max") {
  DegreeVector top_only = zero_degree(2);
  top_only.left[2] = 3;
  top_only.right[2] = 1;
  CHECK(q_max(top_only) == 0);
  CHECK(q_max(dv0(0, 1, 1, 0)) == 2);
  DegreeVector t1 = zero_degree(1);
  t1.l = 1;
  t1.m = 1;
  CHECK(q_max(t1) == 4);
}

TEST_CASE("one_step") {
  // t=0: alterations of (0,1;1,0)
  auto steps = one_step(dv0(0, 1, 1, 0), PosetKind::bfP);
  CHECK(steps == std::set<DegreeVector>{dv0(1, 0, 1, 0), dv0(0, 1, 0, 1), dv0(0, 0, 0, 0)});
  // nothing moves when everything sits at the top position
  DegreeVector top_only = zero_degree(1);
  top_only.left[1] = 2;
  top_only.right[1] = 1;
  CHECK(one_step(top_only, PosetKind::bfP).empty());
  // P adds the created pair
  CHECK(one_step(dv0(0, 0, 0, 0), PosetKind::P) == std::set<DegreeVector>{dv0(1, 0, 0, 1)});
}

TEST_CASE("level sets of the worked example") {
  auto levels = level_sets(dv0(0, 1, 1, 0), PosetKind::bfP, 3);
  REQUIRE(levels.size() == 4);
  CHECK(levels[0] == std::set<DegreeVector>{dv0(0, 1, 1, 0)});
  CHECK(levels[1] == std::set<DegreeVector>{dv0(1, 0, 1, 0), dv0(0, 1, 0, 1), dv0(0, 0, 0, 0)});
  CHECK(levels[2] == std::set<DegreeVector>{dv0(1, 0, 0, 1)});
  CHECK(levels[3].empty());
  // P level 1 below zero
  auto pl = level_sets(dv0(0, 0, 0, 0), PosetKind::P, 1);
  CHECK(pl[1] == std::set<DegreeVector>{dv0(1, 0, 0, 1)});
}

TEST_CASE("level_of") {
  CHECK(level_of(dv0(0, 1, 1, 0), dv0(0, 1, 1, 0), PosetKind::bfP) == 0);
  CHECK(level_of(dv0(0, 0, 0, 0), dv0(0, 1, 1, 0), PosetKind::bfP) == 1);
  CHECK(level_of(dv0(1, 0, 0, 1), dv0(0, 1, 1, 0), PosetKind::bfP) == 2);
  CHECK_FALSE(level_of(dv0(1, 0, 1, 0), dv0(0, 0, 0, 0), PosetKind::bfP).has_value());
  CHECK(level_of(dv0(1, 0, 0, 1), dv0(0, 0, 0, 0), PosetKind::P) == 1);
}

TEST_CASE("levels agree with the oracle and exhaust the down-set (small range)") {
  const int q_bound = 4;
  for (int t = 0; t <= 1; ++t)
    for (const auto& v : all_degree_vectors(t, 3))
      for (auto kind : {PosetKind::P, PosetKind::bfP}) {
        auto fast = level_sets(v, kind, q_bound);
        auto slow = oracle::poset_level_oracle(v, kind, q_bound);
        REQUIRE(fast.size() == static_cast<size_t>(q_bound) + 1);
        for (int q = 0; q <= q_bound; ++q) CHECK(fast[static_cast<size_t>(q)] == slow[static_cast<size_t>(q)]);
        if (kind == PosetKind::bfP) {
          // beyond q_max every level is empty, at q_max it is not
          auto all = level_sets(v, kind, q_max(v) + 2);
          CHECK_FALSE(all[static_cast<size_t>(q_max(v))].empty());
          CHECK(all[static_cast<size_t>(q_max(v)) + 1].empty());
          CHECK(all[static_cast<size_t>(q_max(v)) + 2].empty());
          // disjoint union: every element of the down-set appears exactly once
          size_t total = 0;
          for (const auto& level : all) total += level.size();
          size_t downset = 0;
          for (const auto& k : all_degree_vectors(t, v.total()))
            if (leq(k, v, kind)) ++downset;
          CHECK(total == downset);
        }
      }
}

TEST_CASE("additivity and product decomposition (small range)") {
  const int t = 0;
  auto vecs = all_degree_vectors(t, 2);
  for (const auto& a : vecs)
    for (const auto& b : vecs) {
      if (a.total() + b.total() > 3) continue;
      auto la = level_sets(a, PosetKind::bfP, q_max(a));
      auto lb = level_sets(b, PosetKind::bfP, q_max(b));
      auto lsum = level_sets(a + b, PosetKind::bfP, q_max(a + b));
      for (size_t qa = 0; qa < la.size(); ++qa)
        for (size_t qb = 0; qb < lb.size(); ++qb) {
          if (qa + qb >= lsum.size()) {
            CHECK((la[qa].empty() || lb[qb].empty()));
            continue;
          }
          for (const auto& x : la[qa])
            for (const auto& y : lb[qb]) CHECK(lsum[qa + qb].count(x + y) == 1);
        }
    }
  // product decomposition: levels of l are unions of sums of the levels
  // of the left, inner and right slices
  for (const auto& v : all_degree_vectors(t, 3)) {
    DegreeVector left_part = zero_degree(t), inner_part = zero_degree(t),
                 right_part = zero_degree(t);
    left_part.left = v.left;
    inner_part.l = v.l;
    inner_part.m = v.m;
    right_part.right = v.right;
    auto ll = level_sets(left_part, PosetKind::bfP, q_max(left_part));
    auto li = level_sets(inner_part, PosetKind::bfP, q_max(inner_part));
    auto lr = level_sets(right_part, PosetKind::bfP, q_max(right_part));
    auto lv = level_sets(v, PosetKind::bfP, q_max(v));
    for (int q = 0; q <= q_max(v); ++q) {
      std::set<DegreeVector> built;
      for (size_t i = 0; i < ll.size(); ++i)
        for (size_t j = 0; j < li.size(); ++j)
          for (size_t k = 0; k < lr.size(); ++k) {
            if (i + j + k != static_cast<size_t>(q)) continue;
            for (const auto& x : ll[i])
              for (const auto& y : li[j])
                for (const auto& z : lr[k]) built.insert(x + y + z);
          }
      CHECK(built == lv[static_cast<size_t>(q)]);
    }
  }
}
