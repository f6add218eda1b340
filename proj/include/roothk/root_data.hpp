#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "roothk/exact_linalg.hpp"

namespace roothk {

/// Cartan-Killing families. H is carried only so that lookups keyed by
/// family can name it; no root datum is ever built for it.
enum class Family { A, B, C, D, E, F, G, H };

char family_letter(Family f);
/// Accepts one letter, case-insensitive. Throws InvalidSpec otherwise.
Family parse_family(const std::string& s);

struct RootSystemSpec {
  Family family = Family::A;
  int rank = 1;

  /// Admissible ranks: A n>=1, B/C n>=2, D n>=3, E 6..8, F 4, G 2.
  bool valid() const;
  void validate() const;  // throws InvalidSpec
  std::string name() const;  // e.g. "E8"

  friend bool operator==(const RootSystemSpec&, const RootSystemSpec&) =
      default;
};

struct RootDatum {
  RootSystemSpec spec;
  IntMatrix cartan;
  /// Columns are the simple roots in the ambient coordinate realization.
  RatMatrix simple_roots;
  /// Every root, in ambient coordinates.
  std::vector<RatVector> all_roots;
  /// Every root, as integer coefficients over the simple roots.
  std::vector<IntVector> roots_in_simple_basis;
  /// Gram matrix of the simple roots with denominators cleared (equal to
  /// the Cartan matrix for simply laced types).
  IntMatrix gram;
  /// Ambient inner products of the simple roots before rescaling.
  RatMatrix ambient_gram;

  std::size_t rank() const { return static_cast<std::size_t>(spec.rank); }
  std::size_t ambient_dim() const { return simple_roots.rows(); }
};

/// A lattice described by its Gram matrix in some basis.
struct Lattice {
  std::size_t rank = 0;
  RatMatrix gram;
  std::string label;
};

IntMatrix cartan_matrix(const RootSystemSpec& spec);
RootDatum build_root_datum(const RootSystemSpec& spec);

/// Simple reflection s_i (1-based i) acting on simple-root coordinates.
IntMatrix simple_reflection(const RootDatum& datum, std::size_t i);
std::vector<IntMatrix> simple_reflections(const RootDatum& datum);

/// Closed-form root counts and Cartan determinants.
std::size_t expected_root_count(const RootSystemSpec& spec);
Integer expected_cartan_determinant(const RootSystemSpec& spec);

/// All valid specs with the given family letters and rank at most
/// `max_rank`, in the order A, B, C, D, E, F, G then by rank.
std::vector<RootSystemSpec> supported_specs(int max_rank);

Lattice root_lattice(const RootDatum& datum);

/// Checks that A_n* is modelled by Z^{n+1} modulo the diagonal: the
/// discriminant group of A_n is cyclic of order n+1 and the projected Gram
/// matrix of e_1..e_n onto the sum-zero hyperplane agrees with the inverse
/// Cartan matrix after the change of basis to fundamental weights.
struct QuotientModelReport {
  int n = 0;
  std::vector<Integer> discriminant_factors;
  bool cyclic_of_order_n_plus_1 = false;
  RatMatrix model_gram;        // delta_ij - 1/(n+1), i,j = 1..n
  RatMatrix dual_gram;         // inverse Cartan matrix
  IntMatrix basis_change;      // model basis -> fundamental weights
  bool gram_match = false;
  bool passed() const { return cyclic_of_order_n_plus_1 && gram_match; }
};

QuotientModelReport dual_lattice_quotient_check(int n);

}  // namespace roothk
