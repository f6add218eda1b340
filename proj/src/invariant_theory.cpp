#include "roothk/invariant_theory.hpp"

#include <cstdint>

namespace roothk {

namespace {

RatMatrix minus_identity(const RatMatrix& g) {
  RatMatrix m = g;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= 1;
  return m;
}

const char* construction_name(Construction c) {
  switch (c) {
    case Construction::Double: return "2";
    case Construction::Sym2: return "Sym2";
    case Construction::Wedge2: return "Wedge2";
  }
  return "?";
}

Representation apply_step(const Representation& rep, Construction c) {
  Representation out;
  out.has_recipe = rep.has_recipe;
  out.base_dim = rep.base_dim;
  out.recipe = rep.recipe;
  out.recipe.push_back(c);
  out.label = std::string(construction_name(c)) + "(" + rep.label + ")";
  for (const auto& g : rep.generator_images)
    out.generator_images.push_back(apply_construction(c, g));
  switch (c) {
    case Construction::Double: out.dim = 2 * rep.dim; break;
    case Construction::Sym2: out.dim = rep.dim * (rep.dim + 1) / 2; break;
    case Construction::Wedge2: out.dim = rep.dim * (rep.dim - 1) / 2; break;
  }
  return out;
}

void require_recipe_over(const Representation& rep, const WeylGroup& group) {
  if (!rep.has_recipe)
    throw Error("representation " + rep.label +
                " has no construction recipe; cannot evaluate group elements");
  if (rep.base_dim != group.rank())
    throw DimensionMismatch("representation base dimension differs from group rank");
}

// Sum of rho(w) over every group element, exact.
IntMatrix reynolds_sum(const Representation& rep, const WeylGroup& group) {
  require_recipe_over(rep, group);
  const std::size_t n = group.rank();
  const std::size_t count = group.size();

  // entry bound of rho(w) to decide whether 64-bit accumulation is safe
  Integer bound = 0;
  for (std::size_t e = 0; e < count; ++e)
    for (auto x : group.element_data(e))
      if (abs(Integer(x)) > bound) bound = abs(Integer(x));
  for (auto c : rep.recipe)
    if (c != Construction::Double) bound = 2 * bound * bound;
  const bool fits = bound * Integer(std::to_string(count)) < (Integer(1) << 62);

  IntMatrix total(rep.dim, rep.dim);
  if (!fits) {
    for (const IntMatrix& w : element_iter(group)) {
      const RatMatrix img = rep_image(rep, w);
      for (std::size_t i = 0; i < rep.dim; ++i)
        for (std::size_t j = 0; j < rep.dim; ++j) total(i, j) += img(i, j).get_num();
    }
    return total;
  }

  Matrix<std::int64_t> acc(rep.dim, rep.dim);
  Matrix<std::int64_t> base(n, n);
  std::vector<std::int64_t> flat(rep.dim * rep.dim, 0);
  for (std::size_t e = 0; e < count; ++e) {
    const auto data = group.element_data(e);
    for (std::size_t k = 0; k < n * n; ++k) base(k / n, k % n) = data[k];
    Matrix<std::int64_t> img = base;
    for (auto c : rep.recipe) img = apply_construction(c, img);
    const auto& d = img.data();
    for (std::size_t k = 0; k < flat.size(); ++k) flat[k] += d[k];
  }
  for (std::size_t k = 0; k < flat.size(); ++k)
    total(k / rep.dim, k % rep.dim) = Integer(std::to_string(flat[k]));
  return total;
}

// Linear system for X with rho(s) X = X rho(s) (or rho(s)^T X rho(s) = X),
// unknowns indexed row-major.
RatMatrix commutant_system(const std::vector<RatMatrix>& gens, std::size_t d) {
  RatMatrix sys(gens.size() * d * d, d * d);
  std::size_t r0 = 0;
  for (const auto& g : gens) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const std::size_t row = r0 + i * d + j;
        // (gX)_ij = sum_k g_ik X_kj ; (Xg)_ij = sum_l X_il g_lj
        for (std::size_t k = 0; k < d; ++k) sys(row, k * d + j) += g(i, k);
        for (std::size_t l = 0; l < d; ++l) sys(row, i * d + l) -= g(l, j);
      }
    r0 += d * d;
  }
  return sys;
}

RatMatrix invariant_form_system(const std::vector<RatMatrix>& gens,
                                std::size_t d) {
  RatMatrix sys(gens.size() * d * d, d * d);
  std::size_t r0 = 0;
  for (const auto& g : gens) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const std::size_t row = r0 + i * d + j;
        // (g^T B g)_ij = sum_{k,l} g_ki B_kl g_lj
        for (std::size_t k = 0; k < d; ++k) {
          if (g(k, i) == 0) continue;
          for (std::size_t l = 0; l < d; ++l)
            if (g(l, j) != 0) sys(row, k * d + l) += g(k, i) * g(l, j);
        }
        sys(row, i * d + j) -= 1;
      }
    r0 += d * d;
  }
  return sys;
}

}  // namespace

Representation rep_reflection(const RootDatum& datum) {
  Representation r;
  r.dim = datum.rank();
  r.label = "V(" + datum.spec.name() + ")";
  r.has_recipe = true;
  r.base_dim = datum.rank();
  for (const auto& s : simple_reflections(datum))
    r.generator_images.push_back(to_rational(s));
  return r;
}

Representation rep_from_generators(std::vector<RatMatrix> images,
                                   std::string label) {
  Representation r;
  if (images.empty()) throw DimensionMismatch("no generator images");
  r.dim = images.front().rows();
  for (const auto& m : images)
    if (m.rows() != r.dim || m.cols() != r.dim)
      throw DimensionMismatch("generator images must share one square shape");
  r.generator_images = std::move(images);
  r.label = std::move(label);
  return r;
}

Representation rep_double(const Representation& rep) {
  return apply_step(rep, Construction::Double);
}
Representation rep_sym2(const Representation& rep) {
  return apply_step(rep, Construction::Sym2);
}
Representation rep_wedge2(const Representation& rep) {
  return apply_step(rep, Construction::Wedge2);
}

RatMatrix rep_image(const Representation& rep, const IntMatrix& base) {
  if (!rep.has_recipe) throw Error("representation has no recipe");
  RatMatrix m = to_rational(base);
  for (auto c : rep.recipe) m = apply_construction(c, m);
  return m;
}

std::size_t invariant_dim(const Representation& rep) {
  if (rep.dim == 0) return 0;
  if (rep.generator_images.empty()) return rep.dim;
  std::vector<RatMatrix> eqs;
  eqs.reserve(rep.generator_images.size());
  for (const auto& g : rep.generator_images) eqs.push_back(minus_identity(g));
  return stack_and_common_kernel(eqs).size();
}

RatMatrix reynolds_projector(const Representation& rep, const WeylGroup& group) {
  const IntMatrix total = reynolds_sum(rep, group);
  const Rational inv_order = Rational(1) / Rational(group.order());
  RatMatrix p = to_rational(total);
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j) p(i, j) *= inv_order;
  return p;
}

std::size_t invariant_dim_reynolds(const Representation& rep,
                                   const WeylGroup& group) {
  if (rep.dim == 0) return 0;
  // rank is unchanged by the 1/|W| scaling
  return rank(reynolds_sum(rep, group));
}

DecompositionCheck decomposition_check(const RootDatum& datum) {
  DecompositionCheck c;
  c.n = datum.rank();
  const Representation v = rep_reflection(datum);
  const Representation w2 = rep_wedge2(v);
  const Representation s2 = rep_sym2(v);
  const Representation w2d = rep_wedge2(rep_double(v));
  c.dim_wedge2 = w2.dim;
  c.dim_sym2 = s2.dim;
  c.dim_wedge2_doubled = w2d.dim;
  const std::size_t n = c.n;
  c.dims_ok = w2d.dim == 3 * w2.dim + s2.dim && w2d.dim == n * (2 * n - 1) &&
              w2.dim == n * (n - 1) / 2 && s2.dim == n * (n + 1) / 2;
  c.inv_wedge2 = invariant_dim(w2);
  c.inv_sym2 = invariant_dim(s2);
  c.inv_wedge2_doubled = invariant_dim(w2d);
  c.invariants_ok = c.inv_wedge2_doubled == 3 * c.inv_wedge2 + c.inv_sym2;
  return c;
}

std::size_t invariant_form_space_dim(const Representation& rep) {
  return rational_kernel(invariant_form_system(rep.generator_images, rep.dim)).size();
}

RatMatrix invariant_bilinear_form(const Representation& rep) {
  const std::size_t d = rep.dim;
  const auto basis = rational_kernel(invariant_form_system(rep.generator_images, d));
  if (basis.size() != 1)
    throw ConstructionError("space of invariant bilinear forms on " + rep.label +
                            " has dimension " + std::to_string(basis.size()) +
                            ", expected 1");
  RatMatrix b(d, d);
  for (std::size_t k = 0; k < d * d; ++k) b(k / d, k % d) = basis[0][k];
  IntMatrix prim = primitive_integral(b);
  if (prim(0, 0) < 0)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) prim(i, j) = -prim(i, j);
  RatMatrix form = to_rational(prim);
  if (!is_symmetric(form))
    throw ConstructionError("invariant form is not symmetric");
  if (!is_positive_definite(form))
    throw ConstructionError("invariant form is not positive definite");
  return form;
}

std::size_t commutant_dim(const Representation& rep) {
  return rational_kernel(commutant_system(rep.generator_images, rep.dim)).size();
}

bool irreducibility_check(const Representation& rep) {
  return commutant_dim(rep) == 1;
}

bool proportional(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  // a_ij * b_kl == a_kl * b_ij for a fixed nonzero reference (k,l)
  std::size_t ref = a.data().size();
  for (std::size_t k = 0; k < a.data().size(); ++k)
    if (a.data()[k] != 0) {
      ref = k;
      break;
    }
  if (ref == a.data().size()) return false;
  if (b.data()[ref] == 0) return false;
  for (std::size_t k = 0; k < a.data().size(); ++k)
    if (a.data()[k] * b.data()[ref] != b.data()[k] * a.data()[ref]) return false;
  return true;
}

InvariantReport lemma_report(const RootSystemSpec& spec) {
  const RootDatum datum = build_root_datum(spec);
  InvariantReport r;
  r.spec = spec;
  const Representation v = rep_reflection(datum);
  r.irreducible = irreducibility_check(v);
  const DecompositionCheck dc = decomposition_check(datum);
  r.dim_sym2_inv = dc.inv_sym2;
  r.dim_wedge2_inv = dc.inv_wedge2;
  r.dim_wedge2_doubled_inv = dc.inv_wedge2_doubled;
  r.decomposition_consistent = dc.passed();
  return r;
}

}  // namespace roothk
