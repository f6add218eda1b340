#include "roothk/root_data.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace roothk {

char family_letter(Family f) { return "ABCDEFGH"[static_cast<int>(f)]; }

Family parse_family(const std::string& s) {
  if (s.size() != 1) throw InvalidSpec("family must be a single letter: " + s);
  const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  if (c < 'A' || c > 'H') throw InvalidSpec("unknown family: " + s);
  return static_cast<Family>(c - 'A');
}

bool RootSystemSpec::valid() const {
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::B:
    case Family::C: return rank >= 2;
    case Family::D: return rank >= 3;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
    case Family::H: return false;
  }
  return false;
}

void RootSystemSpec::validate() const {
  if (family == Family::H)
    throw InvalidSpec("H has no integral root lattice");
  if (!valid())
    throw InvalidSpec("invalid rank " + std::to_string(rank) +
                      " for family " + family_letter(family));
}

std::string RootSystemSpec::name() const {
  return std::string(1, family_letter(family)) + std::to_string(rank);
}

namespace {

// Columns of the returned matrix are the simple roots (Bourbaki numbering).
RatMatrix ambient_simple_roots(const RootSystemSpec& spec) {
  const std::size_t n = static_cast<std::size_t>(spec.rank);
  const Rational half(1, 2);
  switch (spec.family) {
    case Family::A: {
      RatMatrix s(n + 1, n);
      for (std::size_t i = 0; i < n; ++i) {
        s(i, i) = 1;
        s(i + 1, i) = -1;
      }
      return s;
    }
    case Family::B:
    case Family::C:
    case Family::D: {
      RatMatrix s(n, n);
      for (std::size_t i = 0; i + 1 < n; ++i) {
        s(i, i) = 1;
        s(i + 1, i) = -1;
      }
      if (spec.family == Family::B) {
        s(n - 1, n - 1) = 1;
      } else if (spec.family == Family::C) {
        s(n - 1, n - 1) = 2;
      } else {
        s(n - 2, n - 1) = 1;
        s(n - 1, n - 1) = 1;
      }
      return s;
    }
    case Family::E: {
      RatMatrix s(8, n);
      s(0, 0) = half;
      s(7, 0) = half;
      for (std::size_t k = 1; k <= 6; ++k) s(k, 0) = -half;
      s(0, 1) = 1;
      s(1, 1) = 1;
      // alpha_j = e_{j-2} - e_{j-3} for j >= 3 (1-based)
      for (std::size_t j = 2; j < n; ++j) {
        s(j - 1, j) = 1;
        s(j - 2, j) = -1;
      }
      return s;
    }
    case Family::F: {
      RatMatrix s(4, 4);
      s(1, 0) = 1;
      s(2, 0) = -1;
      s(2, 1) = 1;
      s(3, 1) = -1;
      s(3, 2) = 1;
      s(0, 3) = half;
      s(1, 3) = -half;
      s(2, 3) = -half;
      s(3, 3) = -half;
      return s;
    }
    case Family::G: {
      RatMatrix s(3, 2);
      s(0, 0) = 1;
      s(1, 0) = -1;
      s(0, 1) = -2;
      s(1, 1) = 1;
      s(2, 1) = 1;
      return s;
    }
    case Family::H: break;
  }
  throw InvalidSpec("no realization for family H");
}

RatMatrix inner_products(const RatMatrix& cols) { return cols.transpose() * cols; }

IntMatrix cartan_from_gram(const RatMatrix& g) {
  const std::size_t n = g.rows();
  IntMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational v = 2 * g(i, j) / g(i, i);
      if (v.get_den() != 1) throw ConstructionError("non-integral Cartan entry");
      c(i, j) = v.get_num();
    }
  return c;
}

}  // namespace

IntMatrix cartan_matrix(const RootSystemSpec& spec) {
  spec.validate();
  return cartan_from_gram(inner_products(ambient_simple_roots(spec)));
}

IntMatrix simple_reflection(const RootDatum& datum, std::size_t i) {
  const std::size_t n = datum.rank();
  if (i < 1 || i > n)
    throw InvalidSpec("reflection index " + std::to_string(i) +
                      " out of range 1.." + std::to_string(n));
  // s_i(alpha_j) = alpha_j - C_ij alpha_i, so only row i differs from I.
  IntMatrix s = IntMatrix::identity(n);
  for (std::size_t j = 0; j < n; ++j) s(i - 1, j) -= datum.cartan(i - 1, j);
  return s;
}

std::vector<IntMatrix> simple_reflections(const RootDatum& datum) {
  std::vector<IntMatrix> out;
  for (std::size_t i = 1; i <= datum.rank(); ++i)
    out.push_back(simple_reflection(datum, i));
  return out;
}

std::size_t expected_root_count(const RootSystemSpec& spec) {
  spec.validate();
  const std::size_t n = static_cast<std::size_t>(spec.rank);
  switch (spec.family) {
    case Family::A: return n * (n + 1);
    case Family::B:
    case Family::C: return 2 * n * n;
    case Family::D: return 2 * n * (n - 1);
    case Family::E: return n == 6 ? 72 : n == 7 ? 126 : 240;
    case Family::F: return 48;
    case Family::G: return 12;
    case Family::H: break;
  }
  return 0;
}

Integer expected_cartan_determinant(const RootSystemSpec& spec) {
  spec.validate();
  switch (spec.family) {
    case Family::A: return spec.rank + 1;
    case Family::B:
    case Family::C: return 2;
    case Family::D: return 4;
    case Family::E: return spec.rank == 6 ? 3 : spec.rank == 7 ? 2 : 1;
    case Family::F:
    case Family::G: return 1;
    case Family::H: break;
  }
  return 0;
}

RootDatum build_root_datum(const RootSystemSpec& spec) {
  spec.validate();
  RootDatum d;
  d.spec = spec;
  d.simple_roots = ambient_simple_roots(spec);
  d.ambient_gram = inner_products(d.simple_roots);
  d.cartan = cartan_from_gram(d.ambient_gram);
  d.gram = clear_denominators(d.ambient_gram);

  const std::size_t n = d.rank();
  const auto refl = simple_reflections(d);
  std::set<IntVector> seen;
  std::vector<IntVector> queue;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n);
    e[i] = 1;
    if (seen.insert(e).second) queue.push_back(e);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& s : refl) {
      IntVector img = s.apply(queue[head]);
      if (seen.insert(img).second) queue.push_back(std::move(img));
    }
  }
  d.roots_in_simple_basis = std::move(queue);
  for (const auto& r : d.roots_in_simple_basis) {
    RatVector c(r.begin(), r.end());
    d.all_roots.push_back(d.simple_roots.apply(c));
  }
  return d;
}

std::vector<RootSystemSpec> supported_specs(int max_rank) {
  std::vector<RootSystemSpec> out;
  for (int f = 0; f < 7; ++f)
    for (int n = 1; n <= max_rank; ++n) {
      RootSystemSpec s{static_cast<Family>(f), n};
      if (s.valid()) out.push_back(s);
    }
  return out;
}

Lattice root_lattice(const RootDatum& datum) {
  return {datum.rank(), to_rational(datum.gram), datum.spec.name()};
}

QuotientModelReport dual_lattice_quotient_check(int n) {
  if (n < 1) throw InvalidSpec("n must be positive");
  QuotientModelReport rep;
  rep.n = n;
  const RootDatum a = build_root_datum({Family::A, n});
  const auto snf = smith_normal_form(a.gram);
  for (const auto& d : snf.diag)
    if (d != 1) rep.discriminant_factors.push_back(d);
  rep.cyclic_of_order_n_plus_1 = rep.discriminant_factors.size() == 1 &&
                                 rep.discriminant_factors[0] == n + 1;

  const std::size_t m = static_cast<std::size_t>(n);
  // images of e_1..e_n under projection to the sum-zero hyperplane
  RatMatrix proj(m + 1, m);
  const Rational shift(1, n + 1);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i <= m; ++i)
      proj(i, j) = (i == j ? Rational(1) : Rational(0)) - shift;
  rep.model_gram = proj.transpose() * proj;
  rep.dual_gram = inverse(to_rational(a.cartan));

  // omega_i = p_1 + ... + p_i
  rep.basis_change = IntMatrix(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= i; ++j) rep.basis_change(i, j) = 1;
  const RatMatrix t = to_rational(rep.basis_change);
  rep.gram_match = t * rep.model_gram * t.transpose() == rep.dual_gram &&
                   abs(determinant(rep.basis_change)) == 1;
  return rep;
}

}  // namespace roothk
