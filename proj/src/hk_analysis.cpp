#include "roothk/hk_analysis.hpp"

#include <algorithm>

namespace roothk {

FixedLocusEntry fixed_locus_on_abelian(const IntMatrix& w, std::size_t element_id) {
  if (!w.square()) throw DimensionMismatch("element must be square");
  const std::size_t n = w.rows();
  const IntMatrix d = w - IntMatrix::identity(n);
  FixedLocusEntry e;
  e.element_id = element_id;
  const std::size_t r = rank(d);
  e.fix_dim_v = n - r;
  e.codim_doubled = 2 * r;
  Integer torsion = 1;
  for (const auto& f : smith_normal_form(d).diag)
    if (f > 1) {
      torsion *= f;
      for (int k = 0; k < 4; ++k) e.component_invariant_factors.push_back(f);
    }
  mpz_pow_ui(e.component_count.get_mpz_t(), torsion.get_mpz_t(), 4);
  return e;
}

Integer count_fixed_components_bruteforce(const IntMatrix& w, std::uint64_t m) {
  if (m == 0) throw InvalidSpec("torsion level must be positive");
  const std::size_t n = w.rows();
  const std::size_t dim = 4 * n;
  // (w (x) Id_4) - I on coordinates ordered (lattice index, real index)
  std::vector<std::int64_t> a(dim * dim, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < 4; ++k) {
        std::int64_t v = w(i, j).get_si() - (i == j ? 1 : 0);
        v %= static_cast<std::int64_t>(m);
        if (v < 0) v += static_cast<std::int64_t>(m);
        a[(4 * i + k) * dim + (4 * j + k)] = v;
      }
  const std::int64_t mm = static_cast<std::int64_t>(m);
  // odometer over (Z/m)^dim, keeping residual = A u mod m incrementally
  std::vector<std::int64_t> u(dim, 0), res(dim, 0);
  std::size_t nonzero = 0;
  std::uint64_t fixed = 0;
  auto bump = [&](std::size_t col, std::int64_t times) {
    for (std::size_t r = 0; r < dim; ++r) {
      const std::int64_t delta = a[r * dim + col] * times % mm;
      if (delta == 0) continue;
      const bool was_zero = res[r] == 0;
      res[r] = ((res[r] + delta) % mm + mm) % mm;
      if (was_zero && res[r] != 0) ++nonzero;
      if (!was_zero && res[r] == 0) --nonzero;
    }
  };
  while (true) {
    if (nonzero == 0) ++fixed;
    std::size_t k = 0;
    while (k < dim && u[k] == mm - 1) {
      u[k] = 0;
      bump(k, -(mm - 1));
      ++k;
    }
    if (k == dim) break;
    ++u[k];
    bump(k, 1);
  }

  // m-torsion of the identity component: a subtorus of real dim 4 * dim ker
  IntMatrix d = w - IntMatrix::identity(n);
  const std::size_t f = 4 * (n - rank(d));
  Integer per_component;
  mpz_ui_pow_ui(per_component.get_mpz_t(), m, f);
  const Integer total(std::to_string(fixed));
  if (!mpz_divisible_p(total.get_mpz_t(), per_component.get_mpz_t()))
    throw ConstructionError("fixed-point count not divisible by component torsion");
  return total / per_component;
}

std::uint64_t matrix_order(const IntMatrix& w, std::uint64_t limit) {
  const IntMatrix id = IntMatrix::identity(w.rows());
  IntMatrix p = w;
  for (std::uint64_t k = 1; k <= limit; ++k) {
    if (p == id) return k;
    p = p * w;
  }
  throw ConstructionError("matrix order exceeds " + std::to_string(limit));
}

std::size_t symplectic_form_dim(const Representation& rep) {
  return invariant_dim(rep_wedge2(rep_double(rep)));
}

std::size_t symplectic_form_dim(const RootDatum& datum) {
  return symplectic_form_dim(rep_reflection(datum));
}

FreenessResult freeness_codim_check(const WeylGroup& group, const GroupCap& cap) {
  FreenessResult out;
  if (!group.exhaustive()) {
    out.reason = "group " + group.datum().spec.name() + " not enumerated";
    return out;
  }
  if (group.size() > cap.max_elements) {
    out.reason = "group order " + std::to_string(group.size()) + " exceeds cap " +
                 std::to_string(cap.max_elements);
    return out;
  }
  const std::size_t n = group.rank();
  std::size_t best = 2 * n + 1;
  std::uint64_t attaining = 0;
  for (std::size_t i = 0; i < group.size(); ++i) {
    const std::size_t r = rank_minus_identity(group.element_data(i), n);
    if (r == 0) {
      if (i != 0) throw ConstructionError("identity stored twice");
      continue;
    }
    const std::size_t codim = 2 * r;
    if (codim < best) {
      best = codim;
      attaining = 0;
    }
    if (codim == best) ++attaining;
  }
  out.status = FreenessStatus::Verified;
  out.elements_checked = group.size();
  out.min_codim = group.size() > 1 ? best : 0;
  out.attaining_min = attaining;
  return out;
}

FreenessResult freeness_codim_check(const RootDatum& datum, const GroupCap& cap) {
  const Integer order = group_order_formula(datum.spec);
  if (order > Integer(std::to_string(cap.max_elements))) {
    FreenessResult out;
    out.reason = "group order " + order.get_str() + " exceeds cap " +
                 std::to_string(cap.max_elements);
    return out;
  }
  return freeness_codim_check(generate_group(datum, cap), cap);
}

const char* to_string(Resolution r) {
  switch (r) {
    case Resolution::Resolvable: return "resolvable";
    case Resolution::NotResolvable: return "not_resolvable";
    case Resolution::OutOfScope: return "out_of_scope";
  }
  return "?";
}

const char* const kResolutionCitation =
    "symplectic resolution of (L (x) C^2)/W exists iff type A, B or C "
    "[Kuznetsov 2007; Ginzburg-Kaledin 2004]";

Resolution resolution_verdict(Family family) {
  switch (family) {
    case Family::A:
    case Family::B:
    case Family::C: return Resolution::Resolvable;
    case Family::D:
    case Family::E:
    case Family::F:
    case Family::G: return Resolution::NotResolvable;
    case Family::H: return Resolution::OutOfScope;
  }
  return Resolution::OutOfScope;
}

std::optional<std::string> known_model(const RootSystemSpec& spec,
                                       const std::string& lattice_label) {
  const std::string n = std::to_string(spec.rank);
  if (spec.family == Family::A && lattice_label == "A" + n + "*")
    return "generalized Kummer K_" + n + "(A) (birational)";
  if ((spec.family == Family::B || spec.family == Family::C) &&
      (lattice_label == "Z" + n || (spec.family == Family::B && lattice_label == "B" + n)))
    return "Sym^" + n + "(Kummer K), Hilb^" + n + "(K3) type (birational)";
  return std::nullopt;
}

LatticeSelector LatticeSelector::parse(const std::string& text) {
  LatticeSelector s;
  if (text == "root") return s;
  if (text == "dual") {
    s.kind = Kind::Dual;
    return s;
  }
  const std::string prefix = "index:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string num = text.substr(prefix.size());
    if (num.empty() || num.size() > 9 ||
        num.find_first_not_of("0123456789") != std::string::npos)
      throw InvalidSpec("bad lattice index: " + text);
    s.kind = Kind::Index;
    s.index = std::stoul(num);
    return s;
  }
  throw InvalidSpec("lattice selector must be root, dual or index:k, got " + text);
}

std::string LatticeSelector::str() const {
  switch (kind) {
    case Kind::Root: return "root";
    case Kind::Dual: return "dual";
    case Kind::Index: return "index:" + std::to_string(index);
  }
  return "?";
}

bool HKVerdict::passed() const {
  const bool freeness_ok =
      freeness.status == FreenessStatus::Skipped || freeness.ok();
  return lattice_w_stable && irreducible && symplectic_form_dim == 1 && freeness_ok;
}

HKVerdict analyze(const RootSystemSpec& spec, const LatticeSelector& selector,
                  const GroupCap& cap) {
  spec.validate();
  const RootDatum datum = build_root_datum(spec);
  HKVerdict v;
  v.spec = spec;

  const auto gens = simple_reflections(datum);
  switch (selector.kind) {
    case LatticeSelector::Kind::Root:
      v.lattice_label = spec.name();
      v.lattice_index_over_root = 1;
      v.lattice_w_stable = true;  // generators are integral in this basis
      for (const auto& g : gens)
        if (abs(determinant(g)) != 1) v.lattice_w_stable = false;
      break;
    case LatticeSelector::Kind::Dual: {
      v.lattice_label = spec.name() + "*";
      v.lattice_index_over_root = abs(determinant(datum.gram));
      const RatMatrix basis = inverse(to_rational(datum.gram));
      v.lattice_w_stable = true;
      for (const auto& g : gens)
        if (!contains_lattice(basis, to_rational(g) * basis)) v.lattice_w_stable = false;
      break;
    }
    case LatticeSelector::Kind::Index: {
      const TowerReport tower = tower_for_spec(spec);
      if (selector.index >= tower.lattices.size())
        throw InvalidSpec("lattice index " + std::to_string(selector.index) +
                          " out of range; tower has " +
                          std::to_string(tower.lattices.size()) + " members");
      const auto& lat = tower.lattices[selector.index];
      v.lattice_label = lat.label;
      v.lattice_index_over_root = lat.index_over_root;
      const RootDatum base = build_root_datum(tower.base_spec);
      v.lattice_w_stable = lattice_is_stable(lat, simple_reflections(base));
      break;
    }
  }

  const Representation rep = rep_reflection(datum);
  v.irreducible = irreducibility_check(rep);
  v.symplectic_form_dim = symplectic_form_dim(rep);
  v.freeness = freeness_codim_check(datum, cap);
  v.resolution = resolution_verdict(spec.family);
  v.known_model = known_model(spec, v.lattice_label);
  return v;
}

}  // namespace roothk
