#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "roothk/root_data.hpp"

namespace roothk {

// Coordinates used throughout this module: a root lattice L = Z^n in the
// simple-root basis with Gram matrix G. Its dual is {x : Gx integral}, and
// y = Gx are the dual-basis coordinates, in which L* = Z^n and L = G Z^n.

/// L* / L read off from the Smith form U G V = D.
class DiscriminantGroup {
 public:
  DiscriminantGroup() = default;
  explicit DiscriminantGroup(const IntMatrix& gram);

  const IntMatrix& gram() const { return gram_; }
  /// Invariant factors greater than one, as a divisibility chain.
  const std::vector<Integer>& invariant_factors() const { return factors_; }
  /// Dual-coordinate lifts of the standard generators of the factors.
  const std::vector<IntVector>& generator_lifts() const { return lifts_; }
  const Integer& order() const { return order_; }

  /// Elements are indexed by mixed-radix digits over the factors.
  std::uint64_t size() const;
  std::vector<std::uint64_t> digits(std::uint64_t index) const;
  std::uint64_t index_of(std::span<const std::uint64_t> digits) const;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  /// Class of a dual-coordinate vector.
  std::uint64_t reduce(const IntVector& y) const;
  IntVector lift(std::uint64_t index) const;
  /// Discriminant bilinear form y_a^T G^{-1} y_b modulo 1, in [0, 1).
  Rational pairing(std::uint64_t a, std::uint64_t b) const;

 private:
  IntMatrix gram_;
  RatMatrix gram_inverse_;
  std::vector<Integer> factors_;
  std::vector<std::uint64_t> moduli_;
  std::vector<IntVector> lifts_;
  IntMatrix reduce_rows_;  // rows of U for the nontrivial factors
  Integer order_ = 1;
};

/// Element -> image index, one map per generator.
using DiscriminantMap = std::vector<std::uint64_t>;

Lattice dual_lattice(const RootDatum& datum);
DiscriminantGroup discriminant_group(const RootDatum& datum);

/// The automorphism of L*/L induced by each generator. Throws
/// ConstructionError when a generator does not preserve L and L*.
std::vector<DiscriminantMap> induced_discriminant_action(
    std::span<const IntMatrix> generators, const DiscriminantGroup& disc);

bool is_identity_map(const DiscriminantMap& m);

struct IntermediateLattice {
  std::vector<std::uint64_t> subgroup;             // sorted element indices
  std::vector<std::uint64_t> subgroup_generators;  // generating elements
  Integer index_over_root;
  RatMatrix basis;           // columns, simple-root coordinates
  RatMatrix ambient_basis;   // columns, ambient coordinates
  RatMatrix inherited_gram;  // restriction of the root-lattice form
  RatMatrix gram;            // primitive integral rescaling
  std::string label;

  Lattice as_lattice() const;
};

struct Classification {
  std::vector<std::vector<std::size_t>> classes;
  /// Per class: members' forms differ by a nontrivial scale factor.
  std::vector<bool> rescaled;
  /// Pairs whose invariants agree but no isometry was found in budget.
  std::vector<std::pair<std::size_t, std::size_t>> inconclusive;
};

struct TowerReport {
  RootSystemSpec spec;
  RootSystemSpec base_spec;  // datum the tower is computed over
  std::string base_label;
  Integer discriminant_order;
  std::vector<Integer> discriminant_factors;
  std::size_t subgroup_count = 0;  // before invariance filtering
  std::vector<IntermediateLattice> lattices;
  /// dual_of[i] is the position of the lattice dual to lattices[i].
  std::vector<std::size_t> dual_of;
  Classification classes;
};

struct SubgroupCap {
  std::uint64_t max_order = 1'000'000;
};

/// All subgroups of L*/L, each with a small generating list.
std::vector<std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>>
enumerate_subgroups(const DiscriminantGroup& disc, const SubgroupCap& cap = {});

/// Subgroup annihilated by `subgroup` under the discriminant form.
std::vector<std::uint64_t> annihilator(const DiscriminantGroup& disc,
                                       std::span<const std::uint64_t> subgroup);

/// Every lattice between L and L* stable under `generators`, sorted by index.
TowerReport invariant_intermediate_lattices(const RootDatum& datum,
                                            std::span<const IntMatrix> generators,
                                            const SubgroupCap& cap = {});

/// B and C are computed over D_n (the C_n root lattice) under W(B_n) = W(C_n);
/// every other family over its own root lattice and Weyl group.
TowerReport tower_for_spec(const RootSystemSpec& spec, const SubgroupCap& cap = {});

/// Direct check that each generator maps the lattice into itself.
bool lattice_is_stable(const IntermediateLattice& lattice,
                       std::span<const IntMatrix> generators);

/// Mutual containment of two full-rank lattices given by basis columns.
bool same_lattice(const RatMatrix& a, const RatMatrix& b);
bool contains_lattice(const RatMatrix& outer, const RatMatrix& inner);

enum class IsometryResult { Isometric, NotIsometric, Inconclusive };

/// Search for integral T with T^T a T = b; `transform` receives T when found.
/// Candidate vectors are enumerated inside the exact ellipsoid bound, so a
/// negative answer within budget is a proof.
IsometryResult find_isometry(const IntMatrix& a, const IntMatrix& b,
                             IntMatrix* transform = nullptr,
                             std::uint64_t budget = 4'000'000);

/// Partition by isometry of primitively rescaled Gram matrices.
Classification classify_up_to_rescaling(std::span<const Lattice> lattices);
Classification classify_up_to_rescaling(const TowerReport& report);

}  // namespace roothk
