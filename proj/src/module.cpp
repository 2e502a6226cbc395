#include "rankmap/module.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace rankmap {

Presentation::Presentation(RingInstance ring, std::size_t generators, Matrix relations)
    : ring_(std::move(ring)), generators_(generators), relations_(std::move(relations)) {
  for (auto& row : relations_) {
    if (row.size() != generators_) {
      throw std::invalid_argument("relation row has length " + std::to_string(row.size()) + ", expected " +
                                  std::to_string(generators_));
    }
    for (auto& x : row) {
      if (!ring_.is_valid_element(x)) {
        throw std::invalid_argument("relation entry " + std::to_string(x) + " is not an element of " +
                                    ring_.describe());
      }
      x = ring_.normalize(x);
    }
  }
}

Presentation Presentation::free(RingInstance ring, std::size_t rank) { return Presentation(std::move(ring), rank); }

Presentation Presentation::with_relations(const Matrix& extra) const {
  Matrix rows = relations_;
  rows.insert(rows.end(), extra.begin(), extra.end());
  return Presentation(ring_, generators_, std::move(rows));
}

PointMap RankMap::as_point_map() const {
  PointMap map{spectrum, {}};
  for (auto d : dims) map.values.push_back(Ordinal::finite(d));
  return map;
}

std::size_t RankMap::at(const PrimeIdeal& p) const {
  const auto it = std::find(primes.begin(), primes.end(), p);
  if (it == primes.end()) throw std::domain_error("prime is not in the rank map's spectrum");
  return dims[static_cast<std::size_t>(it - primes.begin())];
}

namespace {

std::size_t fiber_dim_in(const Presentation& m, const ResidueField& k) {
  return m.generators() - k.rank_of(m.ring(), m.relations());
}

/// Rows a·e_j for every generator a of an ideal and every j.
Matrix ideal_rows(std::size_t g, const std::vector<Elem>& ideal_generators, Elem zero) {
  Matrix rows;
  for (auto a : ideal_generators) {
    for (std::size_t j = 0; j < g; ++j) {
      std::vector<Elem> row(g, zero);
      row[j] = a;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::int64_t to_int64(const BigInt& x) {
  if (x > std::numeric_limits<std::int64_t>::max()) throw std::range_error("invariant factor overflows 64 bits");
  return x.convert_to<std::int64_t>();
}

BigInt s_part(BigInt d, const std::vector<std::int64_t>& primes) {
  BigInt out = 1;
  for (auto p : primes) {
    while (d % p == 0) {
      d /= p;
      out *= p;
    }
  }
  return out;
}

/// Invariant factors of a Z/n presentation: the Smith form of the relations
/// stacked on n·I, so exactly g factors, each dividing n.
std::vector<BigInt> zmod_invariants(const Presentation& m) {
  const auto n = m.ring().as_zmod().n;
  const auto g = m.generators();
  Matrix rows = m.relations();
  for (auto& row : ideal_rows(g, {n}, 0)) rows.push_back(std::move(row));
  return smith_invariants(rows);
}

/// M = 0 over the semi-local integers: g invariant factors, all S-units.
bool is_zero_zloc(const Presentation& m) {
  const auto invariants = smith_invariants(m.relations());
  if (invariants.size() != m.generators()) return false;
  return std::all_of(invariants.begin(), invariants.end(),
                     [&](const BigInt& d) { return s_part(d, m.ring().as_zloc().primes) == 1; });
}

struct LocalFactor {
  RingInstance ring;
  std::vector<Elem> image;  // ring element -> element of the local factor
};

LocalFactor local_factor(const RingInstance& r, const PrimeIdeal& p) {
  auto local = localize(r, p);
  const auto& table = r.as_table();
  const auto& names = local.as_table().names();
  const auto& e_name = names[local.as_table().one()];
  const auto e = static_cast<Elem>(std::find(table.names().begin(), table.names().end(), e_name) - table.names().begin());
  std::map<std::string, Elem> index;
  for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = static_cast<Elem>(i);
  std::vector<Elem> image;
  for (auto x : r.elements()) image.push_back(index.at(r.element_label(r.mul(x, e))));
  return {std::move(local), std::move(image)};
}

Presentation base_change(const Presentation& m, const LocalFactor& f) {
  Matrix rows = m.relations();
  for (auto& row : rows) {
    for (auto& x : row) x = f.image[static_cast<std::size_t>(x)];
  }
  return Presentation(f.ring, m.generators(), std::move(rows));
}

std::uint64_t checked_pow(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > cap / base) return cap + 1;
    out *= base;
  }
  return out;
}

}  // namespace

std::size_t fiber_dim(const Presentation& m, const PrimeIdeal& p) {
  return fiber_dim_in(m, residue_field(m.ring(), p));
}

RankMap rank_map(const Presentation& m) {
  RankMap map{enum_primes(m.ring()), specialization_order(m.ring()), {}};
  for (const auto& p : map.primes) map.dims.push_back(fiber_dim(m, p));
  return map;
}

PointSet support(const Presentation& m) {
  const auto map = rank_map(m);
  PointSet s;
  for (std::size_t i = 0; i < map.dims.size(); ++i) {
    if (map.dims[i] > 0) s.insert(i);
  }
  return s;
}

std::uint64_t cardinality(const Presentation& m, const ModuleCaps& caps) {
  switch (m.ring().kind()) {
    case RingKind::zmod: {
      BigInt product = 1;
      for (const auto& d : zmod_invariants(m)) product *= d;
      return product.convert_to<std::uint64_t>();
    }
    case RingKind::table: return FiniteModule(m, caps).size();
    case RingKind::zloc: {
      const auto invariants = smith_invariants(m.relations());
      if (invariants.size() != m.generators()) throw std::domain_error("module has a free part and is infinite");
      BigInt product = 1;
      for (const auto& d : invariants) product *= s_part(d, m.ring().as_zloc().primes);
      return product.convert_to<std::uint64_t>();
    }
  }
  throw std::logic_error("unreachable");
}

ModuleClassification classify(const Presentation& m, const ModuleCaps& caps) {
  ModuleClassification c;
  const auto g = m.generators();
  const auto& ring = m.ring();
  switch (ring.kind()) {
    case RingKind::zloc: {
      const auto invariants = smith_invariants(m.relations());
      c.free_rank = g - invariants.size();
      BigInt size = 1;
      for (const auto& d : invariants) {
        const auto s = s_part(d, ring.as_zloc().primes);
        size *= s;
        if (s > 1) c.torsion_invariants.push_back(to_int64(s));
      }
      c.is_projective = c.torsion_invariants.empty();
      c.is_free = c.is_projective;
      if (*c.free_rank == 0) c.cardinality = size.convert_to<std::uint64_t>();
      break;
    }
    case RingKind::zmod: {
      const auto n = ring.as_zmod().n;
      const auto invariants = zmod_invariants(m);
      BigInt size = 1;
      std::size_t full = 0;
      for (const auto& d : invariants) {
        size *= d;
        if (d == n) ++full;
      }
      c.cardinality = size.convert_to<std::uint64_t>();
      c.free_rank = n == 1 ? 0 : full;
      c.is_projective = true;
      std::set<std::size_t> local_ranks;
      for (auto [p, v] : factorize(n)) {
        const auto q = prime_power_part(n, p);
        BigInt local_size = 1;
        for (const auto& d : invariants) {
          const BigInt part = gcd(d, BigInt(q));
          local_size *= part;
          if (part != 1 && part != q) c.torsion_invariants.push_back(to_int64(part));
        }
        // A finite local ring: the minimal free cover R^fiber -> M_p is an
        // isomorphism iff the cardinalities agree.
        const auto fiber = fiber_dim(m, PrimeIdeal::rational(p));
        local_ranks.insert(fiber);
        if (local_size != boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(fiber))) {
          c.is_projective = false;
        }
      }
      c.is_free = c.is_projective && local_ranks.size() <= 1;
      break;
    }
    case RingKind::table: {
      c.cardinality = FiniteModule(m, caps).size();
      c.is_projective = true;
      std::set<std::size_t> local_ranks;
      for (const auto& p : enum_primes(ring)) {
        const auto factor = local_factor(ring, p);
        const auto local_m = base_change(m, factor);
        const auto fiber = fiber_dim(m, p);
        local_ranks.insert(fiber);
        const auto local_size = FiniteModule(local_m, caps).size();
        const auto expected = checked_pow(factor.ring.cardinality(), fiber, std::numeric_limits<std::uint64_t>::max() - 1);
        if (local_size != expected) c.is_projective = false;
      }
      c.is_free = c.is_projective && local_ranks.size() <= 1;
      if (c.is_projective) c.free_rank = local_ranks.empty() ? 0 : *local_ranks.begin();
      break;
    }
  }
  c.is_flat = c.is_projective;
  c.is_locally_free = c.is_projective;
  return c;
}

bool is_pM_equal_M(const Presentation& m, const PrimeIdeal& p) {
  const auto& ring = m.ring();
  const auto g = m.generators();
  switch (ring.kind()) {
    case RingKind::zloc: {
      residue_field(ring, p);  // validates p
      if (p.kind == PrimeIdeal::Kind::generic) return is_zero_zloc(m);
      return is_zero_zloc(m.with_relations(ideal_rows(g, {p.p}, 0)));
    }
    case RingKind::zmod:
      residue_field(ring, p);
      return cardinality(m.with_relations(ideal_rows(g, {p.p}, 0))) == 1;
    case RingKind::table: {
      residue_field(ring, p);
      std::vector<Elem> gens;
      for (ElementSet b = p.members; b != 0; b &= b - 1) gens.push_back(std::countr_zero(b));
      return cardinality(m.with_relations(ideal_rows(g, gens, ring.zero()))) == 1;
    }
  }
  throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// FiniteModule

FiniteModule::FiniteModule(const Presentation& m, const ModuleCaps& caps) : m_(m) {
  const auto& ring = m_.ring();
  q_ = ring.cardinality();
  const auto g = m_.generators();
  ambient_ = checked_pow(q_, g, caps.ambient_elements);
  if (ambient_ > caps.ambient_elements) {
    throw CapExceeded("ambient module " + ring.describe() + "^" + std::to_string(g) + " exceeds the enumeration cap");
  }

  // Additive generators of R, greedily.
  std::vector<bool> in_subgroup(q_, false);
  in_subgroup[static_cast<std::size_t>(ring.zero())] = true;
  for (auto x : ring.elements()) {
    if (in_subgroup[static_cast<std::size_t>(x)]) continue;
    additive_generators_.push_back(x);
    for (bool changed = true; changed;) {
      changed = false;
      for (auto a : ring.elements()) {
        if (!in_subgroup[static_cast<std::size_t>(a)]) continue;
        for (auto gen : additive_generators_) {
          const auto s = static_cast<std::size_t>(ring.add(a, gen));
          if (!in_subgroup[s]) {
            in_subgroup[s] = true;
            changed = true;
          }
        }
      }
    }
  }

  // The relation span, as a set of ambient indices.
  std::vector<std::uint64_t> span_steps;
  for (const auto& row : m_.relations()) {
    for (auto a : additive_generators_) {
      std::vector<Elem> v(g);
      for (std::size_t j = 0; j < g; ++j) v[j] = ring.mul(a, row[j]);
      span_steps.push_back(encode(v));
    }
  }
  const std::vector<Elem> zero_vec(g, ring.zero());
  const auto zero_index = encode(zero_vec);
  std::vector<bool> in_span(ambient_, false);
  std::vector<std::uint64_t> span{zero_index};
  in_span[zero_index] = true;
  for (std::size_t i = 0; i < span.size(); ++i) {
    const auto base = decode(span[i]);
    for (auto step : span_steps) {
      const auto s = decode(step);
      std::vector<Elem> v(g);
      for (std::size_t j = 0; j < g; ++j) v[j] = ring.add(base[j], s[j]);
      const auto idx = encode(v);
      if (!in_span[idx]) {
        in_span[idx] = true;
        span.push_back(idx);
      }
    }
  }

  constexpr auto unassigned = std::numeric_limits<std::uint32_t>::max();
  coset_of_.assign(ambient_, unassigned);
  std::vector<std::vector<Elem>> span_vectors;
  span_vectors.reserve(span.size());
  for (auto idx : span) span_vectors.push_back(decode(idx));
  auto assign = [&](std::uint64_t start) {
    if (coset_of_[start] != unassigned) return;
    const auto id = static_cast<std::uint32_t>(reps_.size());
    reps_.push_back(start);
    const auto base = decode(start);
    std::vector<Elem> v(g);
    for (const auto& s : span_vectors) {
      for (std::size_t j = 0; j < g; ++j) v[j] = ring.add(base[j], s[j]);
      coset_of_[encode(v)] = id;
    }
  };
  assign(zero_index);
  for (std::uint64_t idx = 0; idx < ambient_; ++idx) assign(idx);
}

std::uint64_t FiniteModule::encode(const std::vector<Elem>& v) const {
  std::uint64_t idx = 0;
  for (std::size_t j = v.size(); j-- > 0;) idx = idx * q_ + static_cast<std::uint64_t>(v[j]);
  return idx;
}

std::vector<Elem> FiniteModule::decode(std::uint64_t index) const {
  std::vector<Elem> v(m_.generators());
  for (auto& x : v) {
    x = static_cast<Elem>(index % q_);
    index /= q_;
  }
  return v;
}

std::size_t FiniteModule::generator(std::size_t j) const {
  std::vector<Elem> v(m_.generators(), m_.ring().zero());
  v.at(j) = m_.ring().one();
  return coset_of_[encode(v)];
}

std::size_t FiniteModule::add(std::size_t a, std::size_t b) const {
  auto x = decode(reps_[a]);
  const auto y = decode(reps_[b]);
  for (std::size_t j = 0; j < x.size(); ++j) x[j] = m_.ring().add(x[j], y[j]);
  return coset_of_[encode(x)];
}

std::size_t FiniteModule::scale(Elem r, std::size_t a) const {
  auto x = decode(reps_[a]);
  for (auto& e : x) e = m_.ring().mul(r, e);
  return coset_of_[encode(x)];
}

std::vector<Elem> FiniteModule::representative(std::size_t a) const { return decode(reps_.at(a)); }

FiniteModule::Subset FiniteModule::additive_closure(const std::vector<std::size_t>& generators) const {
  Subset in(size(), false);
  std::vector<std::size_t> members{zero()};
  in[zero()] = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (auto gen : generators) {
      const auto s = add(members[i], gen);
      if (!in[s]) {
        in[s] = true;
        members.push_back(s);
      }
    }
  }
  return in;
}

FiniteModule::Subset FiniteModule::span(const std::vector<std::size_t>& elements) const {
  std::vector<std::size_t> gens;
  for (auto x : elements) {
    for (auto a : additive_generators_) gens.push_back(scale(a, x));
  }
  return additive_closure(gens);
}

FiniteModule::Subset FiniteModule::ideal_times_module(ElementSet ideal) const {
  std::vector<std::size_t> gens;
  for (ElementSet b = ideal; b != 0; b &= b - 1) {
    for (std::size_t j = 0; j < m_.generators(); ++j) gens.push_back(scale(std::countr_zero(b), generator(j)));
  }
  return additive_closure(gens);
}

// ---------------------------------------------------------------------------
// Minimal generating sets

namespace {

using Mask = std::vector<std::uint64_t>;

bool mask_empty(const Mask& m) {
  return std::all_of(m.begin(), m.end(), [](std::uint64_t w) { return w == 0; });
}

Mask mask_and(const Mask& a, const Mask& b) {
  Mask out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] & b[i];
  return out;
}

/// Basis of {c in κ^g : A c = 0}.
std::vector<std::vector<std::size_t>> nullspace(std::vector<std::vector<std::size_t>> a, std::size_t g,
                                                const ResidueField& k) {
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < g && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    const auto inv = k.inv(a[r][c]);
    for (auto& x : a[r]) x = k.mul(x, inv);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const auto f = a[i][c];
      for (std::size_t j = 0; j < g; ++j) a[i][j] = k.add(a[i][j], k.neg(k.mul(f, a[r][j])));
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<std::vector<std::size_t>> basis;
  for (std::size_t free_col = 0; free_col < g; ++free_col) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free_col) != pivot_cols.end()) continue;
    std::vector<std::size_t> v(g, 0);
    v[free_col] = k.one();
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = k.neg(a[i][free_col]);
    basis.push_back(std::move(v));
  }
  return basis;
}

class GensetSearch {
 public:
  GensetSearch(std::vector<Mask> masks, std::uint64_t budget) : masks_(std::move(masks)), budget_(budget) {}

  void run(const Mask& all) {
    if (mask_empty(all)) {
      sizes.insert(0);
      return;
    }
    dfs(0, all, {}, 0);
  }

  // Only families containing masks_[first]; the rest range over all other
  // masks, so one call per automorphism orbit covers every size.
  void run_from(std::size_t first, const Mask& all) {
    if (++nodes > budget_) throw CapExceeded("minimal generating set search exceeded its node budget");
    const Mask& common = masks_[first];
    if (mask_empty(common)) {
      sizes.insert(1);
      return;
    }
    skip_ = first;
    dfs(0, common, {all}, 1);
    skip_ = kNone;
  }

  std::set<std::size_t> sizes;
  std::uint64_t nodes = 0;

 private:
  // `common` is the set of maximal submodules containing every chosen
  // element; `leave_one_out[i]` those containing all chosen but the i-th.
  void dfs(std::size_t start, const Mask& common, const std::vector<Mask>& leave_one_out, std::size_t chosen) {
    for (std::size_t idx = start; idx < masks_.size(); ++idx) {
      if (idx == skip_) continue;
      Mask next_common = mask_and(common, masks_[idx]);
      if (next_common == common) continue;  // new element would be redundant
      std::vector<Mask> next_loo;
      next_loo.reserve(leave_one_out.size() + 1);
      bool ok = true;
      for (const auto& l : leave_one_out) {
        auto narrowed = mask_and(l, masks_[idx]);
        if (narrowed == next_common) {
          ok = false;  // an earlier element became redundant for good
          break;
        }
        next_loo.push_back(std::move(narrowed));
      }
      if (!ok) continue;
      next_loo.push_back(common);
      if (++nodes > budget_) throw CapExceeded("minimal generating set search exceeded its node budget");
      if (mask_empty(next_common)) {
        sizes.insert(chosen + 1);
        continue;
      }
      dfs(idx + 1, next_common, next_loo, chosen + 1);
    }
  }

  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<Mask> masks_;
  std::uint64_t budget_;
  std::size_t skip_ = kNone;
};

// Automorphisms of M found by trying random g×g matrices: e_j ↦ row j.
// Any subgroup of Aut(M) gives valid orbits, so a partial sample is fine.
std::vector<std::vector<std::size_t>> sample_automorphisms(const Presentation& m, const FiniteModule& fm,
                                                           std::size_t attempts, std::size_t wanted) {
  const auto& ring = m.ring();
  const auto g = m.generators();
  const auto elems = ring.elements();
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  std::vector<std::vector<Elem>> reps(fm.size());
  for (std::size_t x = 0; x < fm.size(); ++x) reps[x] = fm.representative(x);
  std::vector<std::vector<std::size_t>> found;
  for (std::size_t attempt = 0; attempt < attempts && found.size() < wanted; ++attempt) {
    std::vector<std::size_t> image(g);
    for (std::size_t j = 0; j < g; ++j) {
      std::size_t acc = fm.zero();
      for (std::size_t i = 0; i < g; ++i) acc = fm.add(acc, fm.scale(elems[pick(rng)], fm.generator(i)));
      image[j] = acc;
    }
    auto apply = [&](const std::vector<Elem>& v) {
      std::size_t acc = fm.zero();
      for (std::size_t j = 0; j < g; ++j) {
        if (v[j] != ring.zero()) acc = fm.add(acc, fm.scale(v[j], image[j]));
      }
      return acc;
    };
    bool ok = true;
    for (const auto& r : m.relations()) {
      if (apply(r) != fm.zero()) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::vector<std::size_t> perm(fm.size());
    std::vector<bool> hit(fm.size(), false);
    for (std::size_t x = 0; x < fm.size() && ok; ++x) {
      perm[x] = apply(reps[x]);
      if (hit[perm[x]]) ok = false;
      hit[perm[x]] = true;
    }
    if (ok) found.push_back(std::move(perm));
  }
  return found;
}

}  // namespace

MinimalGensetSummary minimal_gensets_oracle(const Presentation& given, const ModuleCaps& caps) {
  const auto& ring = given.ring();
  // Over Z/n pass to the diagonal form, so large ambient spaces with small
  // quotients stay enumerable. Generating set sizes are isomorphism invariant.
  Presentation m = given;
  if (ring.kind() == RingKind::zmod) {
    const auto n = ring.as_zmod().n;
    Matrix rows;
    std::size_t g = 0;
    for (const auto& d : zmod_invariants(given)) {
      if (d == 1) continue;
      rows.push_back({});
      rows.back().resize(g, 0);
      rows.back().push_back(d == n ? 0 : d.convert_to<Elem>());
      ++g;
    }
    for (auto& row : rows) row.resize(g, 0);
    m = Presentation(ring, g, std::move(rows));
  }
  if (!ring.is_finite()) throw std::invalid_argument("minimal generating set oracle needs a finite ring");
  if (!is_local(ring)) throw std::invalid_argument(ring.describe() + " is not local");
  const auto prime = enum_primes(ring).front();
  const auto k = residue_field(ring, prime);
  const FiniteModule fm(m, caps);
  if (fm.size() > caps.module_elements) {
    throw CapExceeded("module has " + std::to_string(fm.size()) + " elements, above the enumeration cap");
  }
  const auto g = m.generators();

  std::vector<std::vector<std::size_t>> reduced;
  for (const auto& row : m.relations()) {
    auto& out = reduced.emplace_back();
    for (auto x : row) out.push_back(k.reduce(ring, x));
  }
  const auto basis = nullspace(reduced, g, k);
  const auto q = static_cast<std::size_t>(*k.size());

  // Element coordinates reduced into κ, once.
  std::vector<std::vector<std::size_t>> coords(fm.size());
  for (std::size_t x = 0; x < fm.size(); ++x) {
    for (auto e : fm.representative(x)) coords[x].push_back(k.reduce(ring, e));
  }

  // Kernels of all nonzero maps M -> κ, deduplicated.
  std::set<std::vector<bool>> kernels;
  std::vector<std::size_t> coeff(basis.size(), 0);
  for (;;) {
    std::size_t i = 0;
    while (i < coeff.size() && ++coeff[i] == q) coeff[i++] = 0;
    if (i == coeff.size()) break;  // wrapped around to zero
    std::vector<std::size_t> c(g, 0);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      for (std::size_t j = 0; j < g; ++j) c[j] = k.add(c[j], k.mul(coeff[b], basis[b][j]));
    }
    std::vector<bool> kernel(fm.size());
    for (std::size_t x = 0; x < fm.size(); ++x) {
      std::size_t value = 0;
      for (std::size_t j = 0; j < g; ++j) value = k.add(value, k.mul(coords[x][j], c[j]));
      kernel[x] = value == 0;
    }
    kernels.insert(std::move(kernel));
  }
  const std::vector<std::vector<bool>> maximal(kernels.begin(), kernels.end());
  const std::size_t words = (maximal.size() + 63) / 64;

  Mask all(words, 0);
  for (std::size_t i = 0; i < maximal.size(); ++i) all[i / 64] |= std::uint64_t{1} << (i % 64);
  std::vector<Mask> element_mask(fm.size());
  std::set<Mask> distinct;
  for (std::size_t x = 0; x < fm.size(); ++x) {
    Mask mask(words, 0);
    for (std::size_t i = 0; i < maximal.size(); ++i) {
      if (maximal[i][x]) mask[i / 64] |= std::uint64_t{1} << (i % 64);
    }
    element_mask[x] = mask;
    // Elements in every maximal submodule never help generate.
    if (mask != all) distinct.insert(std::move(mask));
  }
  std::vector<Mask> masks(distinct.begin(), distinct.end());
  GensetSearch search(masks, caps.search_nodes);
  if (masks.empty()) {
    search.run(all);
    return {std::move(search.sizes), fiber_dim(m, prime), search.nodes};
  }

  // Automorphisms permute maximal submodules, hence masks. Every minimal
  // generating set meets some orbit, so fixing one representative per
  // orbit as a member loses no sizes.
  auto index_of = [&](const Mask& mask) {
    return static_cast<std::size_t>(std::lower_bound(masks.begin(), masks.end(), mask) - masks.begin());
  };
  std::vector<std::size_t> parent(masks.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& sigma : sample_automorphisms(m, fm, 200, 32)) {
    for (std::size_t x = 0; x < fm.size(); ++x) {
      if (element_mask[x] == all) continue;
      const auto a = find(index_of(element_mask[x]));
      const auto b = find(index_of(element_mask[sigma[x]]));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  for (std::size_t i = 0; i < masks.size(); ++i) {
    if (find(i) == i) search.run_from(i, all);
  }
  return {std::move(search.sizes), fiber_dim(m, prime), search.nodes};
}

bool ideal_action_intersection_check(const Presentation& m, const std::vector<Ideal>& ideals,
                                     bool require_projective, const ModuleCaps& caps) {
  if (!m.ring().is_finite()) throw std::invalid_argument("ideal action check needs a finite ring");
  if (require_projective && !classify(m, caps).is_projective) {
    throw std::domain_error("module is not projective; pass require_projective=false to explore");
  }
  const FiniteModule fm(m, caps);
  if (fm.size() > caps.module_elements) throw CapExceeded("module exceeds the enumeration cap");
  if (ideals.empty()) return true;
  ElementSet meet = ~ElementSet{0};
  FiniteModule::Subset lhs(fm.size(), true);
  for (const auto& ideal : ideals) {
    const auto members = ideal_members(m.ring(), ideal.generators);
    meet &= members;
    const auto product = fm.ideal_times_module(members);
    for (std::size_t x = 0; x < lhs.size(); ++x) lhs[x] = lhs[x] && product[x];
  }
  return lhs == fm.ideal_times_module(meet);
}

}  // namespace rankmap
