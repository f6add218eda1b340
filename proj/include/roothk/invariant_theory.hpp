#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "roothk/weyl.hpp"

namespace roothk {

/// Tensor constructions applied, in order, on top of a base representation.
enum class Construction { Double, Sym2, Wedge2 };

/// A finite-dimensional rational representation given by the images of a
/// generating set. When `recipe` is set the images are functorial in the
/// base matrices, so the image of any group element can be recomputed.
struct Representation {
  std::size_t dim = 0;
  std::vector<RatMatrix> generator_images;
  std::string label;

  bool has_recipe = false;
  std::size_t base_dim = 0;
  std::vector<Construction> recipe;
};

struct InvariantReport {
  RootSystemSpec spec;
  std::size_t dim_sym2_inv = 0;
  std::size_t dim_wedge2_inv = 0;
  std::size_t dim_wedge2_doubled_inv = 0;
  bool irreducible = false;
  bool decomposition_consistent = false;
  bool passed() const {
    return irreducible && dim_sym2_inv == 1 && dim_wedge2_inv == 0 &&
           dim_wedge2_doubled_inv == 1 && decomposition_consistent;
  }
};

// Functorial constructions on a single matrix. Bases are lexicographic on
// index pairs: Sym^2 uses monomials e_i e_j (i <= j), the exterior square
// uses e_i ^ e_j (i < j).
template <class T>
Matrix<T> double_block(const Matrix<T>& g) {
  const std::size_t n = g.rows();
  Matrix<T> d(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      d(i, j) = g(i, j);
      d(n + i, n + j) = g(i, j);
    }
  return d;
}

template <class T>
Matrix<T> sym2_matrix(const Matrix<T>& g) {
  const std::size_t n = g.rows();
  const std::size_t m = n * (n + 1) / 2;
  Matrix<T> s(m, m);
  std::size_t col = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j, ++col) {
      std::size_t row = 0;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = k; l < n; ++l, ++row) {
          if (k == l)
            s(row, col) = g(k, i) * g(k, j);
          else
            s(row, col) = g(k, i) * g(l, j) + g(l, i) * g(k, j);
        }
    }
  return s;
}

template <class T>
Matrix<T> wedge2_matrix(const Matrix<T>& g) {
  const std::size_t n = g.rows();
  const std::size_t m = n * (n - 1) / 2;
  Matrix<T> w(m, m);
  std::size_t col = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++col) {
      std::size_t row = 0;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l, ++row)
          w(row, col) = g(k, i) * g(l, j) - g(l, i) * g(k, j);
    }
  return w;
}

template <class T>
Matrix<T> apply_construction(Construction c, const Matrix<T>& g) {
  switch (c) {
    case Construction::Double: return double_block(g);
    case Construction::Sym2: return sym2_matrix(g);
    case Construction::Wedge2: return wedge2_matrix(g);
  }
  return g;
}

/// V = L (x) Q with the simple reflections as generators.
Representation rep_reflection(const RootDatum& datum);
/// Representation from arbitrary generator images (no recipe).
Representation rep_from_generators(std::vector<RatMatrix> images,
                                   std::string label);

Representation rep_double(const Representation& rep);
Representation rep_sym2(const Representation& rep);
Representation rep_wedge2(const Representation& rep);

/// Image of a base-space matrix under the representation's recipe.
RatMatrix rep_image(const Representation& rep, const IntMatrix& base);

/// dim of the common fixed space of the generator images.
std::size_t invariant_dim(const Representation& rep);

/// Rank of (1/|W|) sum_w rho(w), using every element of an exhaustively
/// generated group. The representation must carry a recipe over the
/// group's reflection representation.
std::size_t invariant_dim_reynolds(const Representation& rep,
                                   const WeylGroup& group);

/// The averaged projector itself, in exact rationals.
RatMatrix reynolds_projector(const Representation& rep, const WeylGroup& group);

struct DecompositionCheck {
  std::size_t n = 0;
  std::size_t dim_wedge2_doubled = 0, dim_wedge2 = 0, dim_sym2 = 0;
  std::size_t inv_wedge2_doubled = 0, inv_wedge2 = 0, inv_sym2 = 0;
  bool dims_ok = false;
  bool invariants_ok = false;
  bool passed() const { return dims_ok && invariants_ok; }
};

/// wedge^2(V+V) = 3 wedge^2 V + Sym^2 V, on dimensions and on invariants.
DecompositionCheck decomposition_check(const RootDatum& datum);

/// Unique (up to scale) invariant bilinear form: primitive integral,
/// symmetric, positive definite. Throws ConstructionError when the space of
/// invariant forms is not one-dimensional or the result is not definite.
RatMatrix invariant_bilinear_form(const Representation& rep);

/// Dimension of the space of invariant bilinear forms (all, not just
/// symmetric ones).
std::size_t invariant_form_space_dim(const Representation& rep);

std::size_t commutant_dim(const Representation& rep);
/// Commutant of dimension 1 over Q; certifies absolute irreducibility.
bool irreducibility_check(const Representation& rep);

/// True when a = c * b for some nonzero rational c.
bool proportional(const RatMatrix& a, const RatMatrix& b);

/// Full Lemma row for one root system.
InvariantReport lemma_report(const RootSystemSpec& spec);

}  // namespace roothk
