#include <doctest.h>

#include "roothk/hk_analysis.hpp"

using namespace roothk;

namespace {

std::uint64_t exponent(const FixedLocusEntry& e) {
  std::uint64_t m = 1;
  for (const auto& f : e.component_invariant_factors)
    m = std::max<std::uint64_t>(m, f.get_ui());
  return m;
}

}  // namespace

TEST_CASE("fixed loci of simple elements") {
  const FixedLocusEntry id = fixed_locus_on_abelian(IntMatrix::identity(2));
  CHECK(id.fix_dim_v == 2);
  CHECK(id.codim_doubled == 0);
  CHECK(id.component_count == 1);

  // -1 on an abelian surface: its 16 two-torsion points
  const FixedLocusEntry minus = fixed_locus_on_abelian(IntMatrix{{-1}});
  CHECK(minus.component_count == 16);
  CHECK(minus.codim_doubled == 2);

  // Coxeter element of A2: det(w - I) = 3, so 3^4 isolated points
  const RootDatum a2 = build_root_datum({Family::A, 2});
  const auto s = simple_reflections(a2);
  const FixedLocusEntry cox = fixed_locus_on_abelian(s[0] * s[1]);
  CHECK(cox.fix_dim_v == 0);
  CHECK(cox.component_count == 81);
  CHECK(matrix_order(s[0] * s[1]) == 3);
  CHECK(matrix_order(IntMatrix{{-1}}) == 2);
  CHECK_THROWS_AS(matrix_order(IntMatrix{{2}}, 50), ConstructionError);
}

TEST_CASE("component counts agree with enumeration of torsion points") {
  for (const auto& spec : {RootSystemSpec{Family::A, 1}, RootSystemSpec{Family::A, 2},
                           RootSystemSpec{Family::B, 2}, RootSystemSpec{Family::C, 2},
                           RootSystemSpec{Family::G, 2}}) {
    CAPTURE(spec.name());
    const WeylGroup g = generate_group(build_root_datum(spec));
    for (std::size_t i = 0; i < g.size(); ++i) {
      CAPTURE(i);
      const IntMatrix w = g.element(i);
      const FixedLocusEntry e = fixed_locus_on_abelian(w, i);
      CHECK(count_fixed_components_bruteforce(w, exponent(e)) == e.component_count);
      CHECK(count_fixed_components_bruteforce(w, matrix_order(w)) == e.component_count);
    }
  }
  CHECK_THROWS_AS(count_fixed_components_bruteforce(IntMatrix{{-1}}, 0), InvalidSpec);
}

TEST_CASE("freeness in codimension two") {
  for (const auto& spec : supported_specs(4)) {
    CAPTURE(spec.name());
    const FreenessResult r = freeness_codim_check(build_root_datum(spec), {});
    CHECK(r.status == FreenessStatus::Verified);
    CHECK(r.min_codim == 2);
    CHECK(Integer(r.elements_checked) == group_order_formula(spec));
    // reflections are exactly the elements attaining codim 2
    CHECK(r.attaining_min == expected_root_count(spec) / 2);
    CHECK(r.ok());
  }
  const FreenessResult e8 = freeness_codim_check(build_root_datum({Family::E, 8}), {});
  CHECK(e8.status == FreenessStatus::Skipped);
  CHECK_FALSE(e8.reason.empty());
  CHECK_FALSE(e8.ok());
}

TEST_CASE("symplectic forms") {
  CHECK(symplectic_form_dim(build_root_datum({Family::A, 3})) == 1);
  CHECK(symplectic_form_dim(build_root_datum({Family::F, 4})) == 1);
  CHECK(symplectic_form_dim(build_root_datum({Family::G, 2})) == 1);
  // A1 + A1 acting on Q^2 is reducible: two independent forms
  const Representation a1a1 =
      rep_from_generators({RatMatrix{{-1, 0}, {0, 1}}, RatMatrix{{1, 0}, {0, -1}}}, "A1+A1");
  CHECK(symplectic_form_dim(a1a1) == 2);
}

TEST_CASE("resolution table and known models") {
  CHECK(resolution_verdict(Family::A) == Resolution::Resolvable);
  CHECK(resolution_verdict(Family::B) == Resolution::Resolvable);
  CHECK(resolution_verdict(Family::C) == Resolution::Resolvable);
  for (Family f : {Family::D, Family::E, Family::F, Family::G})
    CHECK(resolution_verdict(f) == Resolution::NotResolvable);
  CHECK(resolution_verdict(Family::H) == Resolution::OutOfScope);
  CHECK(std::string(to_string(Resolution::NotResolvable)) == "not_resolvable");

  CHECK(known_model({Family::A, 3}, "A3*").value().find("Kummer") != std::string::npos);
  CHECK_FALSE(known_model({Family::A, 3}, "A3").has_value());
  CHECK(known_model({Family::B, 4}, "Z4").value().find("Hilb^4") != std::string::npos);
  CHECK(known_model({Family::C, 4}, "Z4").has_value());
  CHECK_FALSE(known_model({Family::D, 4}, "D4").has_value());
}

TEST_CASE("lattice selectors") {
  CHECK(LatticeSelector::parse("root").kind == LatticeSelector::Kind::Root);
  CHECK(LatticeSelector::parse("dual").kind == LatticeSelector::Kind::Dual);
  const LatticeSelector s = LatticeSelector::parse("index:2");
  CHECK(s.kind == LatticeSelector::Kind::Index);
  CHECK(s.index == 2);
  CHECK(s.str() == "index:2");
  CHECK_THROWS_AS(LatticeSelector::parse("index:"), InvalidSpec);
  CHECK_THROWS_AS(LatticeSelector::parse("index:-1"), InvalidSpec);
  CHECK_THROWS_AS(LatticeSelector::parse("weights"), InvalidSpec);
}

TEST_CASE("end-to-end verdicts") {
  const HKVerdict a2 = analyze({Family::A, 2}, LatticeSelector::parse("dual"));
  CHECK(a2.lattice_label == "A2*");
  CHECK(a2.lattice_index_over_root == 3);
  CHECK(a2.lattice_w_stable);
  CHECK(a2.irreducible);
  CHECK(a2.symplectic_form_dim == 1);
  CHECK(a2.freeness.min_codim == 2);
  CHECK(a2.resolution == Resolution::Resolvable);
  CHECK(a2.known_model.has_value());
  CHECK(a2.passed());

  const HKVerdict e6 = analyze({Family::E, 6}, LatticeSelector{});
  CHECK(e6.freeness.elements_checked == 51840);
  CHECK(e6.resolution == Resolution::NotResolvable);
  CHECK(e6.passed());

  const HKVerdict e8 = analyze({Family::E, 8}, LatticeSelector{});
  CHECK(e8.freeness.status == FreenessStatus::Skipped);
  CHECK(e8.lattice_index_over_root == 1);
  CHECK(e8.passed());

  const HKVerdict b3 = analyze({Family::B, 3}, LatticeSelector::parse("index:1"));
  CHECK(b3.lattice_label == "Z3");
  CHECK(b3.lattice_index_over_root == 2);
  CHECK(b3.known_model.has_value());

  CHECK_THROWS_AS(analyze({Family::B, 3}, LatticeSelector::parse("index:3")), InvalidSpec);
  CHECK_THROWS_AS(analyze({Family::A, 0}, LatticeSelector{}), InvalidSpec);
}
