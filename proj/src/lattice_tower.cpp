#include "roothk/lattice_tower.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "roothk/weyl.hpp"

namespace roothk {

namespace {

bool is_integral(const RatMatrix& m) {
  for (const auto& x : m.data())
    if (x.get_den() != 1) return false;
  return true;
}

IntMatrix integer_inverse(const IntMatrix& m) {
  return to_integer(inverse(to_rational(m)));
}

}  // namespace

DiscriminantGroup::DiscriminantGroup(const IntMatrix& gram) : gram_(gram) {
  if (!gram.square()) throw DimensionMismatch("Gram matrix must be square");
  if (determinant(gram) == 0) throw SingularGram("Gram matrix is singular");
  gram_inverse_ = inverse(to_rational(gram));
  const SmithForm snf = smith_normal_form(gram);
  const IntMatrix u_inv = integer_inverse(snf.left);
  const std::size_t n = gram.rows();
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < snf.diag.size(); ++i)
    if (snf.diag[i] > 1) keep.push_back(i);
  reduce_rows_ = IntMatrix(keep.size(), n);
  for (std::size_t k = 0; k < keep.size(); ++k) {
    const std::size_t i = keep[k];
    factors_.push_back(snf.diag[i]);
    order_ *= snf.diag[i];
    lifts_.push_back(u_inv.column(i));
    for (std::size_t j = 0; j < n; ++j) reduce_rows_(k, j) = snf.left(i, j);
    if (!snf.diag[i].fits_ulong_p())
      throw DiscriminantTooLarge("invariant factor does not fit in 64 bits");
    moduli_.push_back(snf.diag[i].get_ui());
  }
}

std::uint64_t DiscriminantGroup::size() const {
  std::uint64_t s = 1;
  for (auto m : moduli_) s *= m;
  return s;
}

std::vector<std::uint64_t> DiscriminantGroup::digits(std::uint64_t index) const {
  std::vector<std::uint64_t> d(moduli_.size());
  for (std::size_t k = 0; k < moduli_.size(); ++k) {
    d[k] = index % moduli_[k];
    index /= moduli_[k];
  }
  return d;
}

std::uint64_t DiscriminantGroup::index_of(std::span<const std::uint64_t> d) const {
  std::uint64_t idx = 0;
  for (std::size_t k = moduli_.size(); k-- > 0;) idx = idx * moduli_[k] + d[k];
  return idx;
}

std::uint64_t DiscriminantGroup::add(std::uint64_t a, std::uint64_t b) const {
  std::uint64_t idx = 0, stride = 1;
  for (auto m : moduli_) {
    idx += ((a % m + b % m) % m) * stride;
    a /= m;
    b /= m;
    stride *= m;
  }
  return idx;
}

std::uint64_t DiscriminantGroup::reduce(const IntVector& y) const {
  std::vector<std::uint64_t> d(moduli_.size());
  for (std::size_t k = 0; k < moduli_.size(); ++k) {
    Integer acc = 0;
    for (std::size_t j = 0; j < y.size(); ++j) acc += reduce_rows_(k, j) * y[j];
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), acc.get_mpz_t(), factors_[k].get_mpz_t());
    d[k] = r.get_ui();
  }
  return index_of(d);
}

IntVector DiscriminantGroup::lift(std::uint64_t index) const {
  IntVector y(gram_.rows());
  const auto d = digits(index);
  for (std::size_t k = 0; k < d.size(); ++k)
    for (std::size_t j = 0; j < y.size(); ++j) y[j] += lifts_[k][j] * d[k];
  return y;
}

Rational DiscriminantGroup::pairing(std::uint64_t a, std::uint64_t b) const {
  const IntVector ya = lift(a), yb = lift(b);
  Rational v = 0;
  for (std::size_t i = 0; i < ya.size(); ++i)
    for (std::size_t j = 0; j < yb.size(); ++j)
      if (ya[i] != 0 && yb[j] != 0) v += ya[i] * gram_inverse_(i, j) * yb[j];
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return v - fl;
}

Lattice dual_lattice(const RootDatum& datum) {
  return {datum.rank(), inverse(to_rational(datum.gram)), datum.spec.name() + "*"};
}

DiscriminantGroup discriminant_group(const RootDatum& datum) {
  return DiscriminantGroup(datum.gram);
}

std::vector<DiscriminantMap> induced_discriminant_action(
    std::span<const IntMatrix> generators, const DiscriminantGroup& disc) {
  const IntMatrix& g = disc.gram();
  const std::size_t n = g.rows();
  const std::uint64_t size = disc.size();
  std::vector<DiscriminantMap> maps;
  for (const auto& w : generators) {
    if (w.rows() != n || w.cols() != n)
      throw DimensionMismatch("generator shape differs from Gram matrix");
    // dual coordinates transform by (w^{-1})^T
    const RatMatrix w_inv = inverse(to_rational(w));
    if (!is_integral(w_inv)) throw ConstructionError("generator is not unimodular");
    const IntMatrix act = to_integer(w_inv.transpose());
    if (to_rational(w).transpose() * to_rational(g) * to_rational(w) != to_rational(g))
      throw ConstructionError("generator does not preserve the Gram form");
    for (std::size_t c = 0; c < n; ++c)
      if (disc.reduce(act.apply(g.column(c))) != 0)
        throw ConstructionError("generator does not preserve the root lattice");
    DiscriminantMap m(size);
    std::vector<bool> hit(size, false);
    for (std::uint64_t e = 0; e < size; ++e) {
      m[e] = disc.reduce(act.apply(disc.lift(e)));
      if (hit[m[e]]) throw ConstructionError("induced map is not a bijection");
      hit[m[e]] = true;
    }
    maps.push_back(std::move(m));
  }
  return maps;
}

bool is_identity_map(const DiscriminantMap& m) {
  for (std::uint64_t i = 0; i < m.size(); ++i)
    if (m[i] != i) return false;
  return true;
}

std::vector<std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>>
enumerate_subgroups(const DiscriminantGroup& disc, const SubgroupCap& cap) {
  if (disc.order() > Integer(std::to_string(cap.max_order)))
    throw DiscriminantTooLarge("discriminant group of order " +
                               disc.order().get_str() + " exceeds cap " +
                               std::to_string(cap.max_order));
  const std::uint64_t size = disc.size();
  using Members = std::vector<std::uint64_t>;
  std::vector<std::pair<Members, Members>> out;
  std::set<Members> seen;
  out.push_back({{0}, {}});
  seen.insert({0});
  std::vector<char> in_h(size), in_new(size);
  for (std::size_t head = 0; head < out.size(); ++head) {
    const Members h = out[head].first;
    const Members gens = out[head].second;
    std::fill(in_h.begin(), in_h.end(), 0);
    for (auto x : h) in_h[x] = 1;
    for (std::uint64_t g = 0; g < size; ++g) {
      if (in_h[g]) continue;
      // <H, g> is the union of the cosets H + k g
      Members grown = h;
      std::fill(in_new.begin(), in_new.end(), 0);
      for (auto x : h) in_new[x] = 1;
      for (std::uint64_t cur = g; !in_h[cur]; cur = disc.add(cur, g))
        for (auto x : h) {
          const std::uint64_t y = disc.add(x, cur);
          if (!in_new[y]) {
            in_new[y] = 1;
            grown.push_back(y);
          }
        }
      std::sort(grown.begin(), grown.end());
      if (seen.insert(grown).second) {
        Members ng = gens;
        ng.push_back(g);
        out.push_back({std::move(grown), std::move(ng)});
      }
    }
  }
  return out;
}

std::vector<std::uint64_t> annihilator(const DiscriminantGroup& disc,
                                       std::span<const std::uint64_t> subgroup) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t a = 0; a < disc.size(); ++a) {
    bool ok = true;
    for (auto h : subgroup)
      if (disc.pairing(a, h) != 0) {
        ok = false;
        break;
      }
    if (ok) out.push_back(a);
  }
  return out;
}

Lattice IntermediateLattice::as_lattice() const {
  return {basis.cols(), inherited_gram, label};
}

bool contains_lattice(const RatMatrix& outer, const RatMatrix& inner) {
  return is_integral(inverse(outer) * inner);
}

bool same_lattice(const RatMatrix& a, const RatMatrix& b) {
  return contains_lattice(a, b) && contains_lattice(b, a);
}

bool lattice_is_stable(const IntermediateLattice& lattice,
                       std::span<const IntMatrix> generators) {
  for (const auto& w : generators)
    if (!contains_lattice(lattice.basis, to_rational(w) * lattice.basis))
      return false;
  return true;
}

namespace {

IntermediateLattice build_lattice(const RootDatum& datum,
                                  const DiscriminantGroup& disc,
                                  std::vector<std::uint64_t> members,
                                  std::vector<std::uint64_t> gens) {
  const IntMatrix& g = datum.gram;
  const std::size_t n = g.rows();
  const RatMatrix g_rat = to_rational(g);
  const RatMatrix g_inv = inverse(g_rat);
  // generators in simple-root coordinates: the root lattice plus the lifts
  std::vector<RatVector> vecs;
  for (std::size_t i = 0; i < n; ++i) {
    RatVector e(n);
    e[i] = 1;
    vecs.push_back(std::move(e));
  }
  for (auto idx : gens) {
    const IntVector y = disc.lift(idx);
    vecs.push_back(g_inv.apply(RatVector(y.begin(), y.end())));
  }
  Integer den = 1;
  for (const auto& v : vecs)
    for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  IntMatrix rows(vecs.size(), n);
  for (std::size_t k = 0; k < vecs.size(); ++k)
    for (std::size_t j = 0; j < n; ++j) rows(k, j) = Rational(vecs[k][j] * den).get_num();
  const IntMatrix h = hermite_normal_form(rows);
  if (h.rows() != n) throw ConstructionError("intermediate lattice is not full rank");
  RatMatrix basis = to_rational(h).transpose();
  const Rational inv_den = Rational(1) / Rational(den);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) basis(i, j) *= inv_den;

  IntermediateLattice lat;
  lat.index_over_root = members.size();
  lat.subgroup = std::move(members);
  lat.subgroup_generators = std::move(gens);
  lat.basis = std::move(basis);
  lat.ambient_basis = datum.simple_roots * lat.basis;
  lat.inherited_gram = lat.basis.transpose() * g_rat * lat.basis;
  lat.gram = to_rational(primitive_integral(lat.inherited_gram));
  return lat;
}

void assign_labels(TowerReport& report, const RootDatum& datum,
                   const std::string& base, std::uint64_t full_order) {
  std::map<std::string, int> used;
  const bool standard_ambient = datum.spec.family == Family::B ||
                                datum.spec.family == Family::C ||
                                datum.spec.family == Family::D;
  RatMatrix z_n;
  if (standard_ambient) z_n = inverse(datum.simple_roots);
  for (auto& lat : report.lattices) {
    const std::uint64_t idx = lat.index_over_root.get_ui();
    std::string name;
    if (idx == 1) {
      name = base;
    } else if (idx == full_order) {
      name = base + "*";
    } else if (standard_ambient && same_lattice(lat.basis, z_n)) {
      name = "Z" + std::to_string(datum.rank());
    } else {
      name = base + "[" + std::to_string(idx) + "]";
    }
    lat.label = name;
    used[name]++;
  }
  std::map<std::string, int> seen;
  for (auto& lat : report.lattices)
    if (used[lat.label] > 1) {
      const int k = seen[lat.label]++;
      lat.label += static_cast<char>('a' + k);
    }
}

}  // namespace

TowerReport invariant_intermediate_lattices(const RootDatum& datum,
                                            std::span<const IntMatrix> generators,
                                            const SubgroupCap& cap) {
  TowerReport report;
  report.spec = datum.spec;
  report.base_spec = datum.spec;
  report.base_label = datum.spec.name();
  const DiscriminantGroup disc = discriminant_group(datum);
  report.discriminant_order = disc.order();
  report.discriminant_factors = disc.invariant_factors();
  const auto maps = induced_discriminant_action(generators, disc);
  auto subgroups = enumerate_subgroups(disc, cap);
  report.subgroup_count = subgroups.size();

  std::vector<char> member(disc.size());
  for (auto& [h, gens] : subgroups) {
    std::fill(member.begin(), member.end(), 0);
    for (auto x : h) member[x] = 1;
    bool stable = true;
    for (const auto& m : maps) {
      for (auto x : h)
        if (!member[m[x]]) {
          stable = false;
          break;
        }
      if (!stable) break;
    }
    if (stable)
      report.lattices.push_back(build_lattice(datum, disc, h, gens));
  }
  std::stable_sort(report.lattices.begin(), report.lattices.end(),
                   [](const auto& a, const auto& b) {
                     if (a.index_over_root != b.index_over_root)
                       return a.index_over_root < b.index_over_root;
                     return a.subgroup < b.subgroup;
                   });

  report.dual_of.assign(report.lattices.size(), report.lattices.size());
  for (std::size_t i = 0; i < report.lattices.size(); ++i) {
    const auto ann = annihilator(disc, report.lattices[i].subgroup);
    for (std::size_t j = 0; j < report.lattices.size(); ++j)
      if (report.lattices[j].subgroup == ann) report.dual_of[i] = j;
  }
  assign_labels(report, datum, report.base_label, disc.size());
  report.classes = classify_up_to_rescaling(report);
  return report;
}

TowerReport tower_for_spec(const RootSystemSpec& spec, const SubgroupCap& cap) {
  spec.validate();
  const bool bc = spec.family == Family::B || spec.family == Family::C;
  const RootDatum datum = build_root_datum(bc ? RootSystemSpec{Family::C, spec.rank} : spec);
  const auto gens = simple_reflections(datum);
  TowerReport report = invariant_intermediate_lattices(datum, gens, cap);
  report.spec = spec;
  if (bc) {
    report.base_label = "D" + std::to_string(spec.rank);
    assign_labels(report, datum, report.base_label, report.discriminant_order.get_ui());
    report.classes = classify_up_to_rescaling(report);
  }
  return report;
}

namespace {

struct Invariants {
  std::size_t rank;
  Integer det;
  std::vector<Integer> snf;
  bool operator==(const Invariants&) const = default;
};

Invariants invariants_of(const IntMatrix& g) {
  return {g.rows(), determinant(g), smith_normal_form(g).diag};
}

Integer isqrt_floor(const Rational& x) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  if (fl < 0) return 0;
  return sqrt(fl);
}

}  // namespace

IsometryResult find_isometry(const IntMatrix& a, const IntMatrix& b,
                             IntMatrix* transform, std::uint64_t budget) {
  const std::size_t n = a.rows();
  if (b.rows() != n || !a.square() || !b.square()) return IsometryResult::NotIsometric;
  if (n == 0) return IsometryResult::Isometric;
  if (invariants_of(a) != invariants_of(b)) return IsometryResult::NotIsometric;
  if (!is_positive_definite(to_rational(a)) || !is_positive_definite(to_rational(b)))
    return IsometryResult::Inconclusive;

  Integer max_norm = 0;
  std::set<Integer> norms;
  for (std::size_t j = 0; j < n; ++j) {
    norms.insert(b(j, j));
    if (b(j, j) > max_norm) max_norm = b(j, j);
  }
  const RatMatrix a_inv = inverse(to_rational(a));
  std::vector<long> bound(n);
  Integer box = 1;
  for (std::size_t i = 0; i < n; ++i) {
    // |c_i| <= sqrt(N * (A^{-1})_ii) for every c with c^T A c <= N
    const Integer bi = isqrt_floor(max_norm * a_inv(i, i));
    bound[i] = bi.get_si();
    box *= 2 * bi + 1;
  }
  if (box > Integer(std::to_string(budget))) return IsometryResult::Inconclusive;

  std::vector<std::vector<long>> av(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) av[i][j] = a(i, j).get_si();

  std::map<long, std::vector<std::vector<long>>> by_norm;
  std::vector<long> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = -bound[i];
  while (true) {
    long norm = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) norm += c[i] * av[i][j] * c[j];
    if (norms.count(Integer(norm))) by_norm[norm].push_back(c);
    std::size_t k = 0;
    while (k < n && c[k] == bound[k]) {
      c[k] = -bound[k];
      ++k;
    }
    if (k == n) break;
    ++c[k];
  }

  // a * v for every candidate, for fast inner products
  auto times_a = [&](const std::vector<long>& v) {
    std::vector<long> out(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out[i] += av[i][j] * v[j];
    return out;
  };
  std::vector<const std::vector<long>*> chosen(n);
  std::vector<std::vector<long>> chosen_av(n);
  std::uint64_t steps = 0;
  bool exhausted = false;

  auto search = [&](auto&& self, std::size_t j) -> bool {
    if (j == n) return true;
    const auto it = by_norm.find(b(j, j).get_si());
    if (it == by_norm.end()) return false;
    for (const auto& cand : it->second) {
      if (++steps > budget) {
        exhausted = true;
        return false;
      }
      bool ok = true;
      for (std::size_t i = 0; i < j && ok; ++i) {
        long ip = 0;
        for (std::size_t k = 0; k < n; ++k) ip += chosen_av[i][k] * cand[k];
        ok = Integer(ip) == b(i, j);
      }
      if (!ok) continue;
      chosen[j] = &cand;
      chosen_av[j] = times_a(cand);
      if (self(self, j + 1)) return true;
      if (exhausted) return false;
    }
    return false;
  };

  if (search(search, 0)) {
    IntMatrix t(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) t(i, j) = (*chosen[j])[i];
    if (t.transpose() * a * t != b || abs(determinant(t)) != 1)
      throw ConstructionError("isometry search produced an invalid transform");
    if (transform) *transform = std::move(t);
    return IsometryResult::Isometric;
  }
  return exhausted ? IsometryResult::Inconclusive : IsometryResult::NotIsometric;
}

Classification classify_up_to_rescaling(std::span<const Lattice> lattices) {
  Classification out;
  std::vector<IntMatrix> prim;
  std::vector<Rational> scale;
  for (const auto& l : lattices) {
    prim.push_back(primitive_integral(l.gram));
    // gram = scale * primitive
    Rational s = 0;
    for (std::size_t k = 0; k < l.gram.data().size(); ++k)
      if (prim.back().data()[k] != 0) {
        s = l.gram.data()[k] / Rational(prim.back().data()[k]);
        break;
      }
    scale.push_back(s);
  }
  for (std::size_t i = 0; i < lattices.size(); ++i) {
    bool placed = false;
    for (std::size_t c = 0; c < out.classes.size() && !placed; ++c) {
      const std::size_t rep = out.classes[c].front();
      switch (find_isometry(prim[rep], prim[i])) {
        case IsometryResult::Isometric:
          out.classes[c].push_back(i);
          if (scale[rep] != scale[i]) out.rescaled[c] = true;
          placed = true;
          break;
        case IsometryResult::Inconclusive:
          out.inconclusive.emplace_back(rep, i);
          break;
        case IsometryResult::NotIsometric: break;
      }
    }
    if (!placed) {
      out.classes.push_back({i});
      out.rescaled.push_back(false);
    }
  }
  return out;
}

Classification classify_up_to_rescaling(const TowerReport& report) {
  std::vector<Lattice> ls;
  for (const auto& l : report.lattices) ls.push_back(l.as_lattice());
  return classify_up_to_rescaling(ls);
}

}  // namespace roothk
