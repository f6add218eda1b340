#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "roothk/invariant_theory.hpp"
#include "roothk/lattice_tower.hpp"
#include "roothk/weyl.hpp"

namespace roothk {

// The abelian surface A enters only through its period lattice Z^4, so the
// variety L (x) A is modelled by the real torus (L (x) R^4) / (L (x) Z^4)
// with w acting as w (x) Id_4.

struct FixedLocusEntry {
  std::size_t element_id = 0;
  std::size_t fix_dim_v = 0;       // dim ker(w - I) on V
  std::size_t codim_doubled = 0;   // 2 (n - fix_dim_v), complex codimension
  std::vector<Integer> component_invariant_factors;  // torsion of coker, x4
  Integer component_count = 1;     // (torsion order)^4
};

/// Fixed locus of `w` (integral in the lattice basis) on L (x) A.
FixedLocusEntry fixed_locus_on_abelian(const IntMatrix& w,
                                       std::size_t element_id = 0);

/// Independent count of connected components of the fixed locus of
/// w (x) Id_4 on the 4n-torus. Enumerates every m-torsion point and divides
/// by the m-torsion of the identity component, where m is a multiple of the
/// torsion exponent supplied by the caller (any m >= 1 whose multiples
/// reach every component). Exponential in 4n; meant for rank <= 3.
Integer count_fixed_components_bruteforce(const IntMatrix& w, std::uint64_t m);

/// Multiplicative order of an invertible integer matrix of finite order.
/// The order kills the torsion of coker(w - I), so it is a valid level for
/// the brute-force count. Throws ConstructionError past `limit`.
std::uint64_t matrix_order(const IntMatrix& w, std::uint64_t limit = 1000);

enum class FreenessStatus { Verified, Skipped };

struct FreenessResult {
  FreenessStatus status = FreenessStatus::Skipped;
  std::size_t min_codim = 0;           // over w != 1, in V (+) V
  std::uint64_t elements_checked = 0;
  std::uint64_t attaining_min = 0;     // elements with codim == min_codim
  std::string reason;                  // set when skipped
  bool ok() const { return status == FreenessStatus::Verified && min_codim >= 2; }
};

/// Exhaustive: for every non-identity element, codim of Fix(w) on V (+) V
/// is 2 rank(w - I). Skipped when the group is not generated or exceeds cap.
FreenessResult freeness_codim_check(const WeylGroup& group, const GroupCap& cap);

/// Generates the group when the closed-form order is within cap.
FreenessResult freeness_codim_check(const RootDatum& datum, const GroupCap& cap);

/// Dimension of the invariants in wedge^2 (V (+) V).
std::size_t symplectic_form_dim(const Representation& rep);
std::size_t symplectic_form_dim(const RootDatum& datum);

enum class Resolution { Resolvable, NotResolvable, OutOfScope };
const char* to_string(Resolution r);

/// Literature lookup (Kuznetsov 2007; Ginzburg-Kaledin 2004): (V (+) V)/W
/// has a symplectic resolution exactly for types A, B, C.
Resolution resolution_verdict(Family family);
extern const char* const kResolutionCitation;

/// Birational identification for the two classical cases, if any.
std::optional<std::string> known_model(const RootSystemSpec& spec,
                                       const std::string& lattice_label);

/// `root`, `dual` or `index:k` (0-based position in the sorted tower).
struct LatticeSelector {
  enum class Kind { Root, Dual, Index } kind = Kind::Root;
  std::size_t index = 0;
  static LatticeSelector parse(const std::string& text);  // throws InvalidSpec
  std::string str() const;
};

struct HKVerdict {
  RootSystemSpec spec;
  std::string lattice_label;
  Integer lattice_index_over_root = 1;
  bool lattice_w_stable = false;
  bool irreducible = false;
  std::size_t symplectic_form_dim = 0;
  FreenessResult freeness;
  Resolution resolution = Resolution::OutOfScope;
  std::optional<std::string> known_model;

  /// Every check that ran passed (a skipped freeness check does not fail).
  bool passed() const;
};

HKVerdict analyze(const RootSystemSpec& spec, const LatticeSelector& selector,
                  const GroupCap& cap = {});

}  // namespace roothk
