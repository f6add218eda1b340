#include <doctest.h>

#include <cstdlib>
#include <set>

#include "roothk/weyl.hpp"

using namespace roothk;

namespace {

std::vector<Integer> flat(const IntMatrix& m) { return m.data(); }

// Independent closure by repeated multiplication with a std::set.
std::set<std::vector<Integer>> naive_closure(const std::vector<IntMatrix>& gens) {
  const std::size_t n = gens.front().rows();
  std::set<std::vector<Integer>> seen{flat(IntMatrix::identity(n))};
  std::vector<IntMatrix> frontier{IntMatrix::identity(n)};
  while (!frontier.empty()) {
    std::vector<IntMatrix> next;
    for (const auto& w : frontier)
      for (const auto& s : gens) {
        IntMatrix p = s * w;
        if (seen.insert(flat(p)).second) next.push_back(std::move(p));
      }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

TEST_CASE("order formula") {
  CHECK(group_order_formula({Family::A, 1}) == 2);
  CHECK(group_order_formula({Family::A, 2}) == 6);
  CHECK(group_order_formula({Family::B, 2}) == 8);
  CHECK(group_order_formula({Family::G, 2}) == 12);
  CHECK(group_order_formula({Family::D, 4}) == 192);
  CHECK(group_order_formula({Family::F, 4}) == 1152);
  CHECK(group_order_formula({Family::E, 6}) == 51840);
  CHECK(group_order_formula({Family::E, 7}) == 2903040);
  CHECK(group_order_formula({Family::E, 8}) == Integer("696729600"));
}

TEST_CASE("BFS matches the formula and a naive closure") {
  for (const auto& spec : supported_specs(4)) {
    CAPTURE(spec.name());
    const RootDatum d = build_root_datum(spec);
    const WeylGroup g = generate_group(d);
    CHECK(g.exhaustive());
    CHECK(Integer(g.size()) == group_order_formula(spec));
    CHECK(naive_closure(g.generators()).size() == g.size());
  }
}

TEST_CASE("elements form a group preserving the form") {
  const RootDatum d = build_root_datum({Family::B, 3});
  const WeylGroup g = generate_group(d);
  std::set<std::vector<Integer>> all;
  for (const auto& w : element_iter(g)) all.insert(flat(w));
  CHECK(all.size() == 48);
  for (std::size_t i = 0; i < g.size(); i += 5) {
    const IntMatrix w = g.element(i);
    CHECK(w.transpose() * d.gram * w == d.gram);
    const IntMatrix inv = to_integer(inverse(to_rational(w)));
    CHECK(all.count(flat(inv)) == 1);
    for (std::size_t j = 0; j < g.size(); j += 7) CHECK(all.count(flat(w * g.element(j))) == 1);
  }
}

TEST_CASE("iteration order starts at the identity") {
  const WeylGroup a1 = generate_group(build_root_datum({Family::A, 1}));
  std::vector<IntMatrix> elems;
  for (const auto& w : element_iter(a1)) elems.push_back(w);
  REQUIRE(elems.size() == 2);
  CHECK(elems[0] == IntMatrix{{1}});
  CHECK(elems[1] == IntMatrix{{-1}});

  const WeylGroup g2 = generate_group(build_root_datum({Family::G, 2}));
  CHECK(*g2.begin() == IntMatrix::identity(2));
}

TEST_CASE("roots are a union of orbits of the simple roots") {
  const RootDatum d = build_root_datum({Family::F, 4});
  const WeylGroup g = generate_group(d);
  std::set<IntVector> orbit;
  for (const auto& w : element_iter(g))
    for (std::size_t i = 0; i < d.rank(); ++i) orbit.insert(w.column(i));
  std::set<IntVector> roots(d.roots_in_simple_basis.begin(), d.roots_in_simple_basis.end());
  CHECK(orbit == roots);
}

TEST_CASE("group cap") {
  const RootDatum e8 = build_root_datum({Family::E, 8});
  CHECK_THROWS_AS(generate_group(e8), GroupTooLarge);
  try {
    generate_group(e8, {1000});
  } catch (const GroupTooLarge& e) {
    CHECK(e.predicted() == 696729600u);
    CHECK(e.cap() == 1000u);
  }
  CHECK_THROWS_AS(generate_group(build_root_datum({Family::B, 3}), {47}), GroupTooLarge);
  CHECK_NOTHROW(generate_group(build_root_datum({Family::B, 3}), {48}));
  const WeylGroup gens = generators_only(e8);
  CHECK_FALSE(gens.exhaustive());
  CHECK(gens.generators().size() == 8);

  CHECK(parse_cap("12345") == 12345);
  CHECK_THROWS_AS(parse_cap("abc"), InvalidSpec);
  CHECK_THROWS_AS(parse_cap("-4"), InvalidSpec);
  ::setenv("ROOTHK_GROUP_CAP", "77", 1);
  CHECK(GroupCap::from_env().max_elements == 77);
  ::unsetenv("ROOTHK_GROUP_CAP");
  CHECK(GroupCap::from_env().max_elements == GroupCap::kDefault);
}

TEST_CASE("W(B_n) acts as signed permutations") {
  for (int n = 2; n <= 4; ++n) {
    CAPTURE(n);
    const SignedPermutationReport r = check_signed_permutation_structure(n);
    CHECK(r.passed());
    CHECK(r.expected_count == Integer(1 << n) * (n == 2 ? 2 : n == 3 ? 6 : 24));
    CHECK(r.permutation_count == static_cast<std::uint64_t>(n == 2 ? 2 : n == 3 ? 6 : 24));
    CHECK(r.sign_change_count == (1u << n));
  }
}

TEST_CASE("rank of w - I on packed elements") {
  const RootDatum d = build_root_datum({Family::A, 3});
  const WeylGroup g = generate_group(d);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const IntMatrix w = g.element(i);
    CHECK(rank_minus_identity(g.element_data(i), 3) == rank(w - IntMatrix::identity(3)));
  }
}
