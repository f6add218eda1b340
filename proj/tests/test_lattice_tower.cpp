#include <doctest.h>

#include <algorithm>
#include <set>

#include "roothk/lattice_tower.hpp"

using namespace roothk;

namespace {

RootDatum datum(Family f, int n) { return build_root_datum({f, n}); }

int divisor_count(int m) {
  int c = 0;
  for (int d = 1; d <= m; ++d) c += m % d == 0;
  return c;
}

// Ambient bases (columns) of D_n, Z^n and D_n^* in R^n.
RatMatrix d_n(int n) {
  RatMatrix b(n, n);
  for (int i = 0; i + 1 < n; ++i) {
    b(i, i) = 1;
    b(i + 1, i) = -1;
  }
  b(n - 2, n - 1) = 1;
  b(n - 1, n - 1) = 1;
  return b;
}

RatMatrix z_n(int n) { return RatMatrix::identity(n); }

RatMatrix d_n_dual(int n) {
  RatMatrix b = RatMatrix::identity(n);
  for (int i = 0; i < n; ++i) b(i, n - 1) = Rational(1, 2);
  return b;
}

std::vector<std::string> labels(const TowerReport& r) {
  std::vector<std::string> out;
  for (const auto& l : r.lattices) out.push_back(l.label);
  return out;
}

}  // namespace

TEST_CASE("discriminant groups") {
  CHECK(discriminant_group(datum(Family::E, 8)).order() == 1);
  CHECK(discriminant_group(datum(Family::A, 1)).invariant_factors() == std::vector<Integer>{2});
  CHECK(discriminant_group(datum(Family::A, 2)).invariant_factors() == std::vector<Integer>{3});
  CHECK(discriminant_group(datum(Family::A, 3)).invariant_factors() == std::vector<Integer>{4});
  CHECK(discriminant_group(datum(Family::D, 4)).invariant_factors() ==
        std::vector<Integer>{2, 2});
  CHECK(discriminant_group(datum(Family::D, 5)).invariant_factors() == std::vector<Integer>{4});
  CHECK(discriminant_group(datum(Family::E, 6)).invariant_factors() == std::vector<Integer>{3});
  CHECK(discriminant_group(datum(Family::E, 7)).invariant_factors() == std::vector<Integer>{2});

  const Lattice a2_dual = dual_lattice(datum(Family::A, 2));
  CHECK(a2_dual.gram == RatMatrix{{Rational(2, 3), Rational(1, 3)},
                                  {Rational(1, 3), Rational(2, 3)}});
}

TEST_CASE("discriminant group arithmetic") {
  const DiscriminantGroup disc = discriminant_group(datum(Family::D, 4));
  CHECK(disc.size() == 4);
  for (std::uint64_t a = 0; a < disc.size(); ++a) {
    CHECK(disc.index_of(disc.digits(a)) == a);
    CHECK(disc.reduce(disc.lift(a)) == a);
    CHECK(disc.add(a, a) == 0);
    CHECK(disc.pairing(a, 0) == 0);
    for (std::uint64_t b = 0; b < disc.size(); ++b) CHECK(disc.pairing(a, b) == disc.pairing(b, a));
  }
  // every root lies in L, so reduces to zero
  const RootDatum a3 = datum(Family::A, 3);
  const DiscriminantGroup d3 = discriminant_group(a3);
  for (const auto& r : a3.roots_in_simple_basis) CHECK(d3.reduce(a3.gram.apply(r)) == 0);
  // discriminant form of A3 on a generator: 3/4
  CHECK(d3.pairing(1, 1) + d3.pairing(3, 3) == Rational(3, 2));
}

TEST_CASE("simply laced Weyl groups act trivially on the discriminant group") {
  for (const auto& spec : supported_specs(7)) {
    CAPTURE(spec.name());
    const RootDatum d = build_root_datum(spec);
    const auto maps = induced_discriminant_action(simple_reflections(d), discriminant_group(d));
    const bool all_identity =
        std::all_of(maps.begin(), maps.end(), [](const auto& m) { return is_identity_map(m); });
    const bool simply_laced =
        spec.family == Family::A || spec.family == Family::D || spec.family == Family::E;
    // B_n: the root lattice Z^n is unimodular, nothing to act on
    if (spec.family != Family::B) CHECK(all_identity == simply_laced);
  }
}

TEST_CASE("W(B_n) swaps the spinor classes of D_n for even n") {
  for (int n = 4; n <= 6; n += 2) {
    const RootDatum c = datum(Family::C, n);
    const auto maps = induced_discriminant_action(simple_reflections(c), discriminant_group(c));
    CHECK(std::any_of(maps.begin(), maps.end(), [](const auto& m) { return !is_identity_map(m); }));
  }
}

TEST_CASE("subgroup enumeration") {
  CHECK(enumerate_subgroups(discriminant_group(datum(Family::A, 3))).size() == 3);
  CHECK(enumerate_subgroups(discriminant_group(datum(Family::A, 5))).size() == 4);
  CHECK(enumerate_subgroups(discriminant_group(datum(Family::D, 4))).size() == 5);
  CHECK(enumerate_subgroups(discriminant_group(datum(Family::A, 7))).size() == 4);
  const DiscriminantGroup disc = discriminant_group(datum(Family::A, 5));
  for (const auto& [h, gens] : enumerate_subgroups(disc)) {
    const auto ann = annihilator(disc, h);
    CHECK(h.size() * ann.size() == disc.size());
    CHECK(annihilator(disc, ann) == h);
  }
}

TEST_CASE("A_n towers have one lattice per divisor of n + 1") {
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    const TowerReport r = tower_for_spec({Family::A, n});
    CHECK(r.lattices.size() == static_cast<std::size_t>(divisor_count(n + 1)));
    CHECK(r.lattices.front().label == "A" + std::to_string(n));
    CHECK(r.lattices.back().label == "A" + std::to_string(n) + "*");
    for (std::size_t i = 0; i < r.lattices.size(); ++i) CHECK(r.dual_of[r.dual_of[i]] == i);
  }
  CHECK(labels(tower_for_spec({Family::A, 4})) == std::vector<std::string>{"A4", "A4*"});
  CHECK(labels(tower_for_spec({Family::A, 3})) ==
        std::vector<std::string>{"A3", "A3[2]", "A3*"});
}

TEST_CASE("B and C towers are D_n, Z^n and the dual of D_n") {
  for (int n = 3; n <= 6; ++n) {
    CAPTURE(n);
    for (Family f : {Family::B, Family::C}) {
      const TowerReport r = tower_for_spec({f, n});
      REQUIRE(r.lattices.size() == 3);
      const std::string dn = "D" + std::to_string(n);
      CHECK(labels(r) == std::vector<std::string>{dn, "Z" + std::to_string(n), dn + "*"});
      CHECK(same_lattice(r.lattices[0].ambient_basis, d_n(n)));
      CHECK(same_lattice(r.lattices[1].ambient_basis, z_n(n)));
      CHECK(same_lattice(r.lattices[2].ambient_basis, d_n_dual(n)));
      CHECK(r.dual_of == std::vector<std::size_t>{2, 1, 0});
    }
  }
  // for even n the two half-spin lattices are not W(B_n)-stable
  const TowerReport b4 = tower_for_spec({Family::B, 4});
  CHECK(b4.subgroup_count == 5);
  CHECK(b4.lattices.size() == 3);
}

TEST_CASE("stability agrees with a direct lattice check") {
  for (const auto& spec : {RootSystemSpec{Family::D, 4}, RootSystemSpec{Family::A, 5},
                           RootSystemSpec{Family::C, 4}}) {
    CAPTURE(spec.name());
    const RootDatum d = build_root_datum(spec);
    const auto gens = simple_reflections(d);
    const TowerReport r = invariant_intermediate_lattices(d, gens);
    for (const auto& l : r.lattices) CHECK(lattice_is_stable(l, gens));
    // W(D4) fixes L*/L pointwise, so all five lattices are stable
    if (spec.family == Family::D) CHECK(r.lattices.size() == 5);
  }
}

TEST_CASE("lattice containment") {
  CHECK(contains_lattice(z_n(3), d_n(3)));
  CHECK_FALSE(contains_lattice(d_n(3), z_n(3)));
  CHECK(contains_lattice(d_n_dual(4), z_n(4)));
  CHECK_FALSE(same_lattice(d_n(4), z_n(4)));
}

TEST_CASE("isometry search") {
  IntMatrix t;
  // D3 and A3 are the same lattice
  CHECK(find_isometry(cartan_matrix({Family::A, 3}), cartan_matrix({Family::D, 3}), &t) ==
        IsometryResult::Isometric);
  CHECK(t.transpose() * cartan_matrix({Family::A, 3}) * t == cartan_matrix({Family::D, 3}));
  CHECK(find_isometry(IntMatrix{{2, 1}, {1, 2}}, IntMatrix{{2, -1}, {-1, 2}}) ==
        IsometryResult::Isometric);
  CHECK(find_isometry(IntMatrix{{1, 0}, {0, 1}}, IntMatrix{{1, 0}, {0, 2}}) ==
        IsometryResult::NotIsometric);
  // same determinant, different minimum
  CHECK(find_isometry(IntMatrix{{1, 0}, {0, 3}}, IntMatrix{{2, 1}, {1, 2}}) ==
        IsometryResult::NotIsometric);
}

TEST_CASE("classification up to rescaling") {
  const TowerReport a1 = tower_for_spec({Family::A, 1});
  CHECK(a1.classes.classes.size() == 1);
  CHECK(a1.classes.rescaled[0]);

  const TowerReport b3 = tower_for_spec({Family::B, 3});
  CHECK(b3.classes.classes.size() == 3);
  CHECK(b3.classes.inconclusive.empty());

  // D4 and its dual are similar; Z^4 is not
  const TowerReport b4 = tower_for_spec({Family::B, 4});
  CHECK(b4.classes.classes.size() == 2);

  const std::vector<Lattice> ls{
      {3, to_rational(cartan_matrix({Family::A, 3})), "A3"},
      {3, to_rational(cartan_matrix({Family::D, 3})), "D3"},
      {3, RatMatrix::identity(3), "Z3"}};
  const Classification c = classify_up_to_rescaling(ls);
  CHECK(c.classes.size() == 2);
}
