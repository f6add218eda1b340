#include "roothk/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

namespace roothk {

std::uint64_t parse_cap(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw InvalidSpec("group cap must be a positive integer: '" + text + "'");
  std::uint64_t v = 0;
  try {
    v = std::stoull(text);
  } catch (const std::exception&) {
    throw InvalidSpec("group cap out of range: " + text);
  }
  if (v == 0) throw InvalidSpec("group cap must be positive");
  return v;
}

GroupCap GroupCap::from_env() {
  GroupCap cap;
  if (const char* env = std::getenv("ROOTHK_GROUP_CAP"))
    cap.max_elements = parse_cap(env);
  return cap;
}

Integer group_order_formula(const RootSystemSpec& spec) {
  spec.validate();
  Integer fact = 1;
  for (int k = 2; k <= spec.rank; ++k) fact *= k;
  switch (spec.family) {
    case Family::A: return fact * (spec.rank + 1);
    case Family::B:
    case Family::C: return (Integer(1) << spec.rank) * fact;
    case Family::D: return (Integer(1) << (spec.rank - 1)) * fact;
    case Family::E:
      return spec.rank == 6 ? Integer(51840)
             : spec.rank == 7 ? Integer(2903040)
                              : Integer(696729600);
    case Family::F: return 1152;
    case Family::G: return 12;
    case Family::H: break;
  }
  return 0;
}

std::size_t WeylGroup::size() const {
  require_exhaustive();
  const std::size_t n2 = rank() * rank();
  return n2 == 0 ? 0 : storage_.size() / n2;
}

void WeylGroup::require_exhaustive() const {
  if (!exhaustive_)
    throw Error("group " + datum_.spec.name() +
                " was not generated exhaustively");
}

std::span<const std::int8_t> WeylGroup::element_data(std::size_t i) const {
  require_exhaustive();
  const std::size_t n2 = rank() * rank();
  return {storage_.data() + i * n2, n2};
}

IntMatrix WeylGroup::element(std::size_t i) const {
  const auto e = element_data(i);
  const std::size_t n = rank();
  IntMatrix m(n, n);
  for (std::size_t k = 0; k < n * n; ++k) m(k / n, k % n) = e[k];
  return m;
}

WeylGroup::ElementIterator WeylGroup::begin() const {
  require_exhaustive();
  return {this, 0};
}

WeylGroup::ElementIterator WeylGroup::end() const {
  return {this, size()};
}

ElementRange element_iter(const WeylGroup& group) {
  return {group.begin(), group.end()};
}

WeylGroup generators_only(const RootDatum& datum) {
  WeylGroup g;
  g.datum_ = datum;
  g.generators_ = simple_reflections(datum);
  g.order_ = group_order_formula(datum.spec);
  return g;
}

namespace {

std::uint64_t hash_bytes(const std::int8_t* p, std::size_t len) {
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= static_cast<std::uint8_t>(p[i]);
    h *= 1099511628211ull;
  }
  return h ^ (h >> 29);
}

// Open-addressing set of element indices into a dense byte store.
class ElementTable {
 public:
  ElementTable(std::size_t expected, std::size_t stride) : stride_(stride) {
    std::size_t cap = 16;
    while (cap < 2 * expected + 2) cap <<= 1;
    slots_.assign(cap, kEmpty);
    mask_ = cap - 1;
  }

  // Returns true and records `index` when the bytes at `index` are new.
  bool insert(const std::vector<std::int8_t>& store, std::uint32_t index) {
    const std::int8_t* key = store.data() + std::size_t(index) * stride_;
    std::size_t pos = hash_bytes(key, stride_) & mask_;
    while (slots_[pos] != kEmpty) {
      const std::int8_t* other = store.data() + std::size_t(slots_[pos]) * stride_;
      if (std::equal(key, key + stride_, other)) return false;
      pos = (pos + 1) & mask_;
    }
    slots_[pos] = index;
    return true;
  }

 private:
  static constexpr std::uint32_t kEmpty = std::numeric_limits<std::uint32_t>::max();
  std::size_t stride_;
  std::size_t mask_ = 0;
  std::vector<std::uint32_t> slots_;
};

}  // namespace

WeylGroup generate_group(const RootDatum& datum, const GroupCap& cap) {
  WeylGroup g = generators_only(datum);
  if (g.order_ > Integer(std::to_string(cap.max_elements)))
    throw GroupTooLarge(g.order_.fits_ulong_p() ? g.order_.get_ui()
                                                : std::numeric_limits<std::uint64_t>::max(),
                        cap.max_elements);
  const std::size_t n = datum.rank();
  const std::size_t n2 = n * n;
  const std::size_t expected = g.order_.get_ui();

  std::vector<std::vector<long>> cartan(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cartan[i][j] = datum.cartan(i, j).get_si();

  auto& store = g.storage_;
  store.reserve((expected + 1) * n2);
  store.resize(n2, 0);
  for (std::size_t i = 0; i < n; ++i) store[i * n + i] = 1;

  ElementTable table(expected, n2);
  table.insert(store, 0);

  std::vector<long> row(n);
  std::vector<std::int8_t> cand(n2);
  std::size_t count = 1;
  for (std::size_t head = 0; head < count; ++head) {
    for (std::size_t gen = 0; gen < n; ++gen) {
      // s_gen * w differs from w only in row gen
      for (std::size_t c = 0; c < n; ++c) {
        long acc = store[head * n2 + gen * n + c];
        for (std::size_t j = 0; j < n; ++j)
          if (cartan[gen][j] != 0) acc -= cartan[gen][j] * store[head * n2 + j * n + c];
        if (acc < -127 || acc > 127)
          throw ConstructionError("Weyl group entry exceeds byte range");
        row[c] = acc;
      }
      const std::size_t base = store.size();
      cand.assign(store.begin() + head * n2, store.begin() + (head + 1) * n2);
      for (std::size_t c = 0; c < n; ++c)
        cand[gen * n + c] = static_cast<std::int8_t>(row[c]);
      store.insert(store.end(), cand.begin(), cand.end());
      if (table.insert(store, static_cast<std::uint32_t>(count))) {
        ++count;
        if (count > expected)
          throw ConstructionError("closure exceeds closed-form order");
      } else {
        store.resize(base);
      }
    }
  }
  if (count != expected)
    throw ConstructionError("closure size " + std::to_string(count) +
                            " differs from closed-form order");
  store.shrink_to_fit();
  g.exhaustive_ = true;
  return g;
}

std::size_t rank_minus_identity(std::span<const std::int8_t> w, std::size_t n) {
  // Bareiss elimination in 128-bit; falls back to GMP on overflow.
  std::vector<__int128> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i * n + j] = w[i * n + j] - (i == j ? 1 : 0);
  __int128 prev = 1;
  std::size_t r = 0;
  bool overflow = false;
  for (std::size_t c = 0; c < n && r < n && !overflow; ++c) {
    std::size_t p = r;
    while (p < n && a[p * n + c] == 0) ++p;
    if (p == n) continue;
    if (p != r)
      for (std::size_t j = 0; j < n; ++j) std::swap(a[p * n + j], a[r * n + j]);
    for (std::size_t i = r + 1; i < n && !overflow; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        __int128 x, y;
        if (__builtin_mul_overflow(a[r * n + c], a[i * n + j], &x) ||
            __builtin_mul_overflow(a[i * n + c], a[r * n + j], &y) ||
            __builtin_sub_overflow(x, y, &x)) {
          overflow = true;
          break;
        }
        a[i * n + j] = x / prev;
      }
      a[i * n + c] = 0;
    }
    prev = a[r * n + c];
    ++r;
  }
  if (!overflow) return r;
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = w[i * n + j] - (i == j ? 1 : 0);
  return rank(m);
}

bool SignedPermutationReport::passed() const {
  return all_signed_permutations && Integer(std::to_string(element_count)) == expected_count &&
         Integer(std::to_string(permutation_count)) * (Integer(1) << n) == expected_count &&
         sign_change_count == (std::uint64_t(1) << n);
}

SignedPermutationReport check_signed_permutation_structure(int n,
                                                           const GroupCap& cap) {
  if (n < 2) throw InvalidSpec("B_n needs n >= 2");
  SignedPermutationReport rep;
  rep.n = n;
  const RootDatum b = build_root_datum({Family::B, n});
  rep.expected_count = group_order_formula(b.spec);
  const WeylGroup group = generate_group(b, cap);

  const RatMatrix basis = b.simple_roots;  // square for B_n
  const RatMatrix basis_inv = inverse(basis);
  const std::size_t m = static_cast<std::size_t>(n);
  rep.all_signed_permutations = true;
  for (const IntMatrix& w : element_iter(group)) {
    const RatMatrix amb = basis * to_rational(w) * basis_inv;
    bool signed_perm = true;
    bool any_negative = false;
    bool diagonal = true;
    for (std::size_t i = 0; i < m && signed_perm; ++i) {
      int nonzero = 0;
      for (std::size_t j = 0; j < m; ++j) {
        const Rational& x = amb(i, j);
        if (x == 0) continue;
        if (x != 1 && x != -1) signed_perm = false;
        if (x < 0) any_negative = true;
        if (i != j) diagonal = false;
        ++nonzero;
      }
      if (nonzero != 1) signed_perm = false;
    }
    for (std::size_t j = 0; j < m && signed_perm; ++j) {
      int nonzero = 0;
      for (std::size_t i = 0; i < m; ++i) nonzero += amb(i, j) != 0;
      if (nonzero != 1) signed_perm = false;
    }
    if (!signed_perm) rep.all_signed_permutations = false;
    if (signed_perm && !any_negative) ++rep.permutation_count;
    if (signed_perm && diagonal) ++rep.sign_change_count;
    ++rep.element_count;
  }
  return rep;
}

}  // namespace roothk
