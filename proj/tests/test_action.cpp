#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include <wonderful/action.hpp>
#include <wonderful/bijection.hpp>
#include <wonderful/closure.hpp>
#include <wonderful/laminar.hpp>
#include <wonderful/orbits.hpp>

#include "oracles.hpp"

using namespace wonderful;

namespace {

NestedSet ns(std::initializer_list<std::initializer_list<int>> blocks, int n) {
  std::vector<Block> bs;
  for (auto b : blocks) bs.emplace_back(b, n);
  return NestedSet(bs, n);
}

// sigma(A) as a set, complemented inside {0..n} when it meets 0
oracle::Set literal_action(const std::vector<int>& images, const oracle::Set& a, int n) {
  if (a == oracle::range(1, n)) return a;
  oracle::Set img;
  for (int x : a) img.insert(images[x]);
  if (!img.count(0)) return img;
  oracle::Set out;
  for (int x = 0; x <= n; ++x)
    if (!img.count(x)) out.insert(x);
  return out;
}

}  // namespace

TEST_CASE("act_block on the worked instances") {
  const auto s01 = ExtPermutation::transposition(4, 0, 1);
  CHECK(act_block(s01, Block({1, 2}, 4)) == Block({1, 3, 4}, 4));
  CHECK(act_block(s01, Block({3, 4}, 4)) == Block({3, 4}, 4));
  CHECK(act_block(s01, Block::full(4)) == Block::full(4));
  CHECK_THROWS_AS(act_block(ExtPermutation::identity(3), Block({1, 2}, 4)), validation_error);
}

TEST_CASE("act_block follows the literal definition and composes") {
  for (int n = 2; n <= 4; ++n) {
    std::vector<ExtPermutation> group;
    for_each_permutation(0, n, [&](const std::vector<int>& im) { group.emplace_back(im); });
    for (const oracle::Set& a : oracle::all_blocks(n)) {
      Block b(std::vector<int>(a.begin(), a.end()), n);
      for (const auto& s : group) {
        auto img = act_block(s, b).elements();
        REQUIRE(oracle::Set(img.begin(), img.end()) == literal_action(s.images(), a, n));
        for (const auto& t : group) REQUIRE(act_block(s, act_block(t, b)) == act_block(s * t, b));
      }
      REQUIRE(act_block(ExtPermutation::identity(n), b) == b);
    }
  }
}

TEST_CASE("act_nested on the worked instance") {
  const NestedSet s = ns({{1, 2}, {3, 4}, {1, 2, 3, 4}}, 4);
  CHECK(act_nested(ExtPermutation::transposition(4, 0, 1), s) == ns({{1, 3, 4}, {3, 4}, {1, 2, 3, 4}}, 4));
  CHECK(act_nested(ExtPermutation::transposition(4, 1, 3), s) == ns({{2, 3}, {1, 4}, {1, 2, 3, 4}}, 4));
  CHECK_THROWS_AS(act_nested(ExtPermutation::identity(4), ns({{1, 2}}, 4)), domain_error);
}

TEST_CASE("the action restricted to S_n is relabelling") {
  for (int n = 2; n <= 5; ++n)
    for_each_permutation(1, n, [&](const std::vector<int>& im) {
      Permutation p(im);
      for (const NestedSet& s : enumerate_B(n)) REQUIRE(act_nested(extend_natural(p), s) == relabel(p, s));
    });
}

TEST_CASE("every element of S_{n+1} preserves B(n-1)") {
  for (int n = 2; n <= 5; ++n) {
    const auto all = enumerate_B(n);
    std::set<oracle::Family> fams;
    for (const NestedSet& s : all) fams.insert(oracle::family_of(s));
    for_each_permutation(0, n, [&](const std::vector<int>& im) {
      ExtPermutation sigma(im);
      for (const NestedSet& s : all) {
        NestedSet img = act_nested(sigma, s);
        REQUIRE(img.size() == s.size());
        REQUIRE(fams.count(oracle::family_of(img)) == 1);
        REQUIRE(oracle::laminar(oracle::family_of(img)));
      }
    });
  }
}

TEST_CASE("generators preserve B(5)") {
  const auto all = enumerate_B(6);
  for (const auto& g : adjacent_generators(6))
    for (const NestedSet& s : all) REQUIRE(act_nested(g, s).size() == s.size());
}

TEST_CASE("act_chain acts linkwise") {
  ChainNested c({ns({{1, 2}, {1, 2, 3, 4}}, 4), ns({{1, 2}, {3, 4}, {1, 2, 3, 4}}, 4)}, 4);
  auto img = act_chain(ExtPermutation::transposition(4, 0, 1), c);
  REQUIRE(img.size() == 2);
  CHECK(img.links()[0] == ns({{1, 3, 4}, {1, 2, 3, 4}}, 4));
  CHECK(img.links()[1] == ns({{1, 3, 4}, {3, 4}, {1, 2, 3, 4}}, 4));
}

TEST_CASE("closure of the rank-one seed is all of B(n-1)") {
  for (int n = 4; n <= 6; ++n) CHECK(building_closure(maximal_rank_one_seed(n), n) == enumerate_B(n));
  CHECK(building_closure(maximal_rank_one_seed(4), 4).size() == 26);
}

TEST_CASE("closure from a single block") {
  CHECK(building_closure({}, 4) == std::vector<NestedSet>{NestedSet::full(4)});
  const std::vector<NestedSet> seed{ns({{1, 2}, {1, 2, 3, 4}}, 4)};
  auto c = building_closure(seed, 4);
  CHECK(c.size() == 11);
  for (const NestedSet& s : c) CHECK(s.size() <= 2);
  CHECK(building_closure(seed, 4, UnionRule::any_pair) == enumerate_B(4));
  CHECK(building_closure({ns({{1, 2}, {1, 2, 3}}, 3)}, 3).size() == 1 + 3);
}

TEST_CASE("closure is extensive and idempotent") {
  const std::vector<NestedSet> seed{ns({{1, 2}, {3, 4}, {1, 2, 3, 4, 5}}, 5)};
  auto once = building_closure(seed, 5);
  CHECK(std::binary_search(once.begin(), once.end(), seed[0]));
  CHECK(building_closure(once, 5) == once);
  CHECK_THROWS_AS(building_closure({ns({{1, 2}}, 5)}, 5), domain_error);
}

TEST_CASE("labelled partitions under S_m") {
  LabelledPartition lp(SetPartition({{1, 2, 3, 5}, {4, 6, 7}, {8, 9}}, 9), {2, 1, 0});
  auto img = act_labelled_partition(Permutation::transposition(9, 1, 4), lp);
  // blocks are ordered by their least element, labels follow them
  CHECK(img == LabelledPartition(SetPartition({{2, 3, 4, 5}, {1, 6, 7}, {8, 9}}, 9), {1, 2, 0}));
  CHECK_THROWS_AS(act_labelled_partition(Permutation::transposition(9, 8, 9), lp), domain_error);

  LabelledPartition free(SetPartition({{1, 2, 3}, {4, 5, 6}}, 6), {1, 1});
  auto moved = act_labelled_partition(Permutation::transposition(6, 3, 6), free);
  CHECK(moved == LabelledPartition(SetPartition({{1, 2, 6}, {3, 4, 5}}, 6), {1, 1}));

  CHECK_THROWS_AS(LabelledPartition(SetPartition({{1, 2}, {3, 4}}, 4), {0, 0}), validation_error);
  CHECK_THROWS_AS(LabelledPartition(SetPartition({{1, 2, 3}, {4}}, 4), {1, 0}), validation_error);
}

TEST_CASE("orbit modes on F^3(B(4))") {
  CHECK(orbit_count(3, 5, OrbitMode::natural) == 3);
  CHECK(orbit_count(3, 5, OrbitMode::extended) == 4);
  CHECK(parse_orbit_mode("restricted") == OrbitMode::extended);
  CHECK_THROWS_AS(parse_orbit_mode("bogus"), validation_error);
  CHECK_THROWS_AS(orbits(5, 0, OrbitMode::natural), domain_error);
}

TEST_CASE("orbit counts: search, Burnside and union-find agree") {
  for (int n = 3; n <= 6; ++n)
    for (int k = 1; n + k <= 7 && k <= n - 2; ++k) {
      const auto fk = enumerate_F(n, k);
      std::map<std::vector<oracle::Set>, std::size_t> index_of_partition;
      std::map<oracle::Family, std::size_t> index_of_family;
      std::vector<std::vector<oracle::Set>> parts;
      std::vector<oracle::Family> fams;
      for (std::size_t i = 0; i < fk.size(); ++i) {
        fams.push_back(oracle::family_of(fk[i]));
        parts.push_back(oracle::tree_partition(n, fams.back()));
        index_of_family[fams.back()] = i;
        index_of_partition[parts.back()] = i;
      }
      auto on_partition = [&](const std::vector<int>& perm, std::size_t i) {
        std::vector<oracle::Set> img;
        for (const oracle::Set& b : parts[i]) {
          oracle::Set c;
          for (int x : b) c.insert(x <= static_cast<int>(perm.size()) ? perm[x - 1] : x);
          img.push_back(c);
        }
        std::sort(img.begin(), img.end());
        return index_of_partition.at(img);
      };
      auto on_family = [&](const std::vector<int>& perm, std::size_t i) {
        oracle::Family img;
        for (const oracle::Set& b : fams[i]) {
          oracle::Set c;
          for (int x : b) c.insert(perm[x - 1]);
          img.insert(c);
        }
        return index_of_family.at(img);
      };
      const std::size_t natural = oracle::orbit_count_union_find(fk.size(), n, on_family);
      const std::size_t extended = oracle::orbit_count_union_find(fk.size(), n, on_partition);
      const std::size_t full = oracle::orbit_count_union_find(fk.size(), n + k, on_partition);
      INFO("n=" << n << " k=" << k);
      CHECK(orbit_count(k, n, OrbitMode::natural) == natural);
      CHECK(orbit_count(k, n, OrbitMode::extended) == extended);
      CHECK(orbit_count(k, n, OrbitMode::full) == full);
      CHECK(burnside_orbit_count(k, n, OrbitMode::natural) == natural);
      CHECK(burnside_orbit_count(k, n, OrbitMode::extended) == extended);
      CHECK(burnside_orbit_count(k, n, OrbitMode::full) == full);
      CHECK(block_shape_count(n, k) == full);
    }
}

TEST_CASE("orbits partition F^k") {
  auto os = orbits(5, 2, OrbitMode::extended);
  std::size_t total = 0;
  std::set<NestedSet> seen;
  for (const auto& o : os) {
    total += o.size();
    seen.insert(o.begin(), o.end());
    CHECK(std::is_sorted(o.begin(), o.end()));
  }
  CHECK(total == enumerate_F(5, 2).size());
  CHECK(seen.size() == total);
}
