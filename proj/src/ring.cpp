#include "rankmap/ring.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

namespace rankmap {

// ---------------------------------------------------------------------------
// TableRing

namespace {

std::string pair_label(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

TableRing::TableRing(std::vector<std::string> names, std::vector<std::vector<std::size_t>> add,
                     std::vector<std::vector<std::size_t>> mul)
    : names_(std::move(names)), add_(std::move(add)), mul_(std::move(mul)) {
  const std::size_t n = names_.size();
  if (n == 0) throw RingAxiomError("closure", "a ring needs at least one element");
  if (n > 64) throw std::invalid_argument("table rings are limited to 64 elements");
  if (std::set<std::string>(names_.begin(), names_.end()).size() != n) {
    throw std::invalid_argument("table ring element names must be distinct");
  }
  auto check_shape = [n](const auto& table, const char* which) {
    if (table.size() != n) throw RingAxiomError("closure", std::string(which) + " table has wrong row count");
    for (const auto& row : table) {
      if (row.size() != n) throw RingAxiomError("closure", std::string(which) + " table has a short row");
      for (auto x : row) {
        if (x >= n) throw RingAxiomError("closure", std::string(which) + " table entry out of range");
      }
    }
  };
  check_shape(add_, "addition");
  check_shape(mul_, "multiplication");

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (add_[a][b] != add_[b][a]) throw RingAxiomError("additive commutativity", pair_label(a, b));
      if (mul_[a][b] != mul_[b][a]) throw RingAxiomError("multiplicative commutativity", pair_label(a, b));
      for (std::size_t c = 0; c < n; ++c) {
        if (add_[add_[a][b]][c] != add_[a][add_[b][c]]) {
          throw RingAxiomError("additive associativity", pair_label(a, b) + " with " + std::to_string(c));
        }
        if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]]) {
          throw RingAxiomError("multiplicative associativity", pair_label(a, b) + " with " + std::to_string(c));
        }
        if (mul_[a][add_[b][c]] != add_[mul_[a][b]][mul_[a][c]]) {
          throw RingAxiomError("distributivity", pair_label(a, b) + " with " + std::to_string(c));
        }
      }
    }
  }

  auto find_identity = [n](const auto& table) -> std::optional<std::size_t> {
    for (std::size_t e = 0; e < n; ++e) {
      bool ok = true;
      for (std::size_t a = 0; a < n && ok; ++a) ok = table[e][a] == a;
      if (ok) return e;
    }
    return std::nullopt;
  };
  const auto zero = find_identity(add_);
  if (!zero) throw RingAxiomError("additive identity", "no element acts as zero");
  const auto one = find_identity(mul_);
  if (!one) throw RingAxiomError("multiplicative identity", "no element acts as one");
  zero_ = *zero;
  one_ = *one;

  neg_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (add_[a][b] == zero_) neg_[a] = b;
    }
    if (neg_[a] == n) throw RingAxiomError("additive inverses", "element " + std::to_string(a) + " has no negative");
  }
}

TableRing TableRing::zmod(std::size_t n) {
  if (n == 0) throw std::invalid_argument("Z/0 is not finite");
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> add(n, std::vector<std::size_t>(n));
  auto mul = add;
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back(std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) {
      add[a][b] = (a + b) % n;
      mul[a][b] = (a * b) % n;
    }
  }
  return TableRing(std::move(names), std::move(add), std::move(mul));
}

namespace {

std::string f2_poly_name(unsigned bits) {
  if (bits == 0) return "0";
  std::string out;
  for (int i = 31; i >= 0; --i) {
    if (((bits >> i) & 1U) == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) out += "1";
    else if (i == 1) out += "x";
    else out += "x^" + std::to_string(i);
  }
  return out;
}

}  // namespace

TableRing TableRing::f2_quotient(unsigned modulus_bits) {
  if (modulus_bits < 2) throw std::invalid_argument("modulus must have positive degree");
  const int degree = 31 - std::countl_zero(modulus_bits);
  if (degree > 6) throw std::invalid_argument("modulus degree too large for a table ring");
  const unsigned size = 1U << degree;
  auto reduce = [&](unsigned v) {
    for (int i = 2 * degree; i >= degree; --i) {
      if ((v >> i) & 1U) v ^= modulus_bits << (i - degree);
    }
    return v;
  };
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> add(size, std::vector<std::size_t>(size));
  auto mul = add;
  for (unsigned a = 0; a < size; ++a) {
    names.push_back(f2_poly_name(a));
    for (unsigned b = 0; b < size; ++b) {
      add[a][b] = a ^ b;
      unsigned product = 0;
      for (int i = 0; i < degree; ++i) {
        if ((b >> i) & 1U) product ^= a << i;
      }
      mul[a][b] = reduce(product);
    }
  }
  return TableRing(std::move(names), std::move(add), std::move(mul));
}

TableRing TableRing::product(const TableRing& a, const TableRing& b) {
  const std::size_t m = a.size(), k = b.size(), n = m * k;
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> add(n, std::vector<std::size_t>(n));
  auto mul = add;
  for (std::size_t x = 0; x < n; ++x) {
    names.push_back("(" + a.names()[x / k] + "," + b.names()[x % k] + ")");
    for (std::size_t y = 0; y < n; ++y) {
      add[x][y] = a.add(x / k, y / k) * k + b.add(x % k, y % k);
      mul[x][y] = a.mul(x / k, y / k) * k + b.mul(x % k, y % k);
    }
  }
  return TableRing(std::move(names), std::move(add), std::move(mul));
}

// ---------------------------------------------------------------------------
// RingInstance

RingInstance RingInstance::zmod(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("Z/n needs n >= 1");
  return RingInstance(ZMod{n});
}

RingInstance RingInstance::zloc(std::vector<std::int64_t> primes) {
  if (primes.empty()) throw std::invalid_argument("localization needs at least one prime");
  std::sort(primes.begin(), primes.end());
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (!is_prime(primes[i])) throw std::invalid_argument(std::to_string(primes[i]) + " is not prime");
    if (i > 0 && primes[i] == primes[i - 1]) {
      throw std::invalid_argument("duplicate prime " + std::to_string(primes[i]));
    }
  }
  return RingInstance(ZLoc{std::move(primes)});
}

RingInstance RingInstance::rationals() { return RingInstance(ZLoc{}); }

RingInstance RingInstance::table(TableRing ring) { return RingInstance(std::move(ring)); }

RingKind RingInstance::kind() const {
  switch (variant_.index()) {
    case 0: return RingKind::zmod;
    case 1: return RingKind::zloc;
    default: return RingKind::table;
  }
}

std::size_t RingInstance::cardinality() const {
  switch (kind()) {
    case RingKind::zmod: return static_cast<std::size_t>(as_zmod().n);
    case RingKind::table: return as_table().size();
    case RingKind::zloc: break;
  }
  throw std::domain_error("ring " + describe() + " is infinite");
}

std::vector<Elem> RingInstance::elements() const {
  std::vector<Elem> out(cardinality());
  std::iota(out.begin(), out.end(), Elem{0});
  return out;
}

Elem RingInstance::zero() const {
  return kind() == RingKind::table ? static_cast<Elem>(as_table().zero()) : 0;
}

Elem RingInstance::one() const {
  switch (kind()) {
    case RingKind::zmod: return as_zmod().n == 1 ? 0 : 1;
    case RingKind::zloc: return 1;
    case RingKind::table: return static_cast<Elem>(as_table().one());
  }
  return 0;
}

namespace {

Elem checked_add(Elem a, Elem b) {
  Elem out;
  if (__builtin_add_overflow(a, b, &out)) throw std::range_error("integer overflow in ring addition");
  return out;
}

Elem checked_mul(Elem a, Elem b) {
  Elem out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::range_error("integer overflow in ring multiplication");
  return out;
}

}  // namespace

Elem RingInstance::normalize(Elem a) const {
  switch (kind()) {
    case RingKind::zmod: {
      const auto n = as_zmod().n;
      return ((a % n) + n) % n;
    }
    case RingKind::zloc: return a;
    case RingKind::table:
      if (!is_valid_element(a)) throw std::out_of_range("element index out of range for table ring");
      return a;
  }
  return a;
}

bool RingInstance::is_valid_element(Elem a) const {
  if (kind() == RingKind::table) return a >= 0 && static_cast<std::size_t>(a) < as_table().size();
  return true;
}

Elem RingInstance::add(Elem a, Elem b) const {
  switch (kind()) {
    case RingKind::zmod: return normalize(normalize(a) + normalize(b));
    case RingKind::zloc: return checked_add(a, b);
    case RingKind::table:
      return static_cast<Elem>(as_table().add(static_cast<std::size_t>(a), static_cast<std::size_t>(b)));
  }
  return 0;
}

Elem RingInstance::neg(Elem a) const {
  switch (kind()) {
    case RingKind::zmod: return normalize(-normalize(a));
    case RingKind::zloc: return checked_mul(a, -1);
    case RingKind::table: return static_cast<Elem>(as_table().neg(static_cast<std::size_t>(a)));
  }
  return 0;
}

Elem RingInstance::mul(Elem a, Elem b) const {
  switch (kind()) {
    case RingKind::zmod: {
      const auto n = as_zmod().n;
      return static_cast<Elem>((static_cast<__int128>(normalize(a)) * normalize(b)) % n);
    }
    case RingKind::zloc: return checked_mul(a, b);
    case RingKind::table:
      return static_cast<Elem>(as_table().mul(static_cast<std::size_t>(a), static_cast<std::size_t>(b)));
  }
  return 0;
}

Elem RingInstance::from_int(std::int64_t k) const {
  if (kind() != RingKind::table) return normalize(k);
  Elem acc = zero();
  const Elem step = k >= 0 ? one() : neg(one());
  const auto count = static_cast<std::uint64_t>(k >= 0 ? k : -k) % as_table().size();
  // The additive order of one divides |R|, so reducing |k| mod |R| is exact.
  for (std::uint64_t i = 0; i < count; ++i) acc = add(acc, step);
  return acc;
}

std::string RingInstance::element_label(Elem a) const {
  if (kind() == RingKind::table) return as_table().names().at(static_cast<std::size_t>(a));
  return std::to_string(a);
}

std::string RingInstance::describe() const {
  switch (kind()) {
    case RingKind::zmod: return "Z/" + std::to_string(as_zmod().n);
    case RingKind::zloc: {
      if (is_rationals()) return "Q";
      std::string out = "Z_(";
      for (std::size_t i = 0; i < as_zloc().primes.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(as_zloc().primes[i]);
      }
      return out + ")";
    }
    case RingKind::table: return "table[" + std::to_string(as_table().size()) + "]";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Ideals and primes

std::string PrimeIdeal::label(const RingInstance& ring) const {
  switch (kind) {
    case Kind::rational_prime: return std::to_string(p);
    case Kind::generic: return "generic";
    case Kind::table: {
      std::string out = "{";
      bool first = true;
      for (ElementSet b = members; b != 0; b &= b - 1) {
        if (!first) out += ",";
        first = false;
        out += ring.element_label(std::countr_zero(b));
      }
      return out + "}";
    }
  }
  return "?";
}

ElementSet ideal_members(const RingInstance& ring, const std::vector<Elem>& generators) {
  const auto n = ring.cardinality();
  if (n > 64) throw CapExceeded("ideal membership is limited to rings with at most 64 elements");
  ElementSet set = ElementSet{1} << ring.zero();
  for (auto g : generators) {
    for (auto r : ring.elements()) set |= ElementSet{1} << ring.mul(r, ring.normalize(g));
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (ElementSet a = set; a != 0; a &= a - 1) {
      for (ElementSet b = set; b != 0; b &= b - 1) {
        const auto sum = ring.add(std::countr_zero(a), std::countr_zero(b));
        if (((set >> sum) & 1U) == 0) {
          set |= ElementSet{1} << sum;
          changed = true;
        }
      }
    }
  }
  return set;
}

namespace {

std::vector<Elem> members_of(ElementSet set) {
  std::vector<Elem> out;
  for (ElementSet b = set; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

bool is_prime_ideal(const RingInstance& ring, ElementSet ideal) {
  const ElementSet whole = ring.cardinality() == 64 ? ~ElementSet{0} : (ElementSet{1} << ring.cardinality()) - 1;
  if (ideal == whole) return false;
  for (auto a : ring.elements()) {
    if ((ideal >> a) & 1U) continue;
    for (auto b : ring.elements()) {
      if ((ideal >> b) & 1U) continue;
      if ((ideal >> ring.mul(a, b)) & 1U) return false;
    }
  }
  return true;
}

void require_table_cap(const RingInstance& r) {
  if (r.kind() != RingKind::table) throw std::invalid_argument("expected a table ring");
  if (r.as_table().size() > kTableEnumerationCap) {
    throw CapExceeded("table ring has more than " + std::to_string(kTableEnumerationCap) + " elements");
  }
}

}  // namespace

std::vector<Ideal> oracle_enum_ideals(const RingInstance& r) {
  require_table_cap(r);
  std::set<ElementSet> ideals;
  std::vector<ElementSet> frontier;
  for (auto e : r.elements()) {
    const auto principal = ideal_members(r, {e});
    if (ideals.insert(principal).second) frontier.push_back(principal);
  }
  // Every ideal is a finite sum of principal ideals.
  while (!frontier.empty()) {
    std::vector<ElementSet> next;
    const std::vector<ElementSet> known(ideals.begin(), ideals.end());
    for (auto a : frontier) {
      for (auto b : known) {
        const auto sum = ideal_members(r, members_of(a | b));
        if (ideals.insert(sum).second) next.push_back(sum);
      }
    }
    frontier = std::move(next);
  }
  std::vector<Ideal> out;
  for (auto set : ideals) out.push_back(Ideal{r, members_of(set)});
  return out;
}

std::vector<PrimeIdeal> enum_primes(const RingInstance& r) {
  std::vector<PrimeIdeal> out;
  switch (r.kind()) {
    case RingKind::zmod:
      for (auto [p, e] : factorize(r.as_zmod().n)) out.push_back(PrimeIdeal::rational(p));
      break;
    case RingKind::zloc:
      out.push_back(PrimeIdeal::zero_ideal());
      for (auto p : r.as_zloc().primes) out.push_back(PrimeIdeal::rational(p));
      break;
    case RingKind::table:
      for (const auto& ideal : oracle_enum_ideals(r)) {
        ElementSet set = 0;
        for (auto g : ideal.generators) set |= ElementSet{1} << g;
        if (is_prime_ideal(r, set)) out.push_back(PrimeIdeal::table_ideal(set));
      }
      break;
  }
  return out;
}

namespace {

bool prime_contained_in(const PrimeIdeal& p, const PrimeIdeal& q) {
  if (p.kind == PrimeIdeal::Kind::table) return (p.members & ~q.members) == 0;
  if (p.kind == PrimeIdeal::Kind::generic) return true;
  return p == q;
}

void require_prime_of(const RingInstance& r, const PrimeIdeal& p) {
  const auto primes = enum_primes(r);
  if (std::find(primes.begin(), primes.end(), p) == primes.end()) {
    throw std::domain_error(p.label(r) + " is not a prime of " + r.describe());
  }
}

}  // namespace

SpectrumPoset specialization_order(const RingInstance& r) {
  const auto primes = enum_primes(r);
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> leq(primes.size(), std::vector<bool>(primes.size()));
  for (std::size_t i = 0; i < primes.size(); ++i) {
    labels.push_back(primes[i].label(r));
    for (std::size_t j = 0; j < primes.size(); ++j) leq[i][j] = prime_contained_in(primes[i], primes[j]);
  }
  return SpectrumPoset(std::move(labels), std::move(leq));
}

// ---------------------------------------------------------------------------
// Residue fields

ResidueField ResidueField::prime_field(std::int64_t p) {
  ResidueField k;
  k.characteristic_ = p;
  k.size_ = static_cast<std::uint64_t>(p);
  return k;
}

ResidueField ResidueField::rational_field() { return ResidueField{}; }

ResidueField ResidueField::table_quotient(const TableRing& ring, ElementSet prime) {
  const std::size_t n = ring.size();
  ResidueField k;
  k.coset_of_.assign(n, n);
  std::vector<std::size_t> reps;
  std::vector<std::size_t> order{ring.zero()};
  for (std::size_t a = 0; a < n; ++a) {
    if (a != ring.zero()) order.push_back(a);
  }
  for (auto a : order) {
    if (k.coset_of_[a] != n) continue;
    const auto id = reps.size();
    reps.push_back(a);
    for (std::size_t x = 0; x < n; ++x) {
      if ((prime >> x) & 1U) k.coset_of_[ring.add(a, x)] = id;
    }
  }
  const std::size_t q = reps.size();
  k.add_.assign(q, std::vector<std::size_t>(q));
  k.mul_ = k.add_;
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      k.add_[i][j] = k.coset_of_[ring.add(reps[i], reps[j])];
      k.mul_[i][j] = k.coset_of_[ring.mul(reps[i], reps[j])];
    }
  }
  k.zero_ = k.coset_of_[ring.zero()];
  const auto one = k.coset_of_[ring.one()];
  k.one_ = one;
  if (one == k.zero_) throw RingAxiomError("field", "quotient by the whole ring");
  k.neg_.assign(q, q);
  k.inv_.assign(q, q);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      if (k.add_[i][j] == k.zero_) k.neg_[i] = j;
      if (k.mul_[i][j] == one) k.inv_[i] = j;
    }
    if (i != k.zero_ && k.inv_[i] == q) {
      throw RingAxiomError("field", "quotient element " + ring.names()[reps[i]] + " is not invertible");
    }
  }
  std::size_t characteristic = 1;
  for (std::size_t acc = one; acc != k.zero_; acc = k.add_[acc][one]) ++characteristic;
  k.characteristic_ = static_cast<std::int64_t>(characteristic);
  k.size_ = q;
  return k;
}

std::string ResidueField::describe() const {
  if (is_rationals()) return "Q";
  return "F_" + std::to_string(*size_);
}

namespace {

struct QuotientField {
  using value_type = std::int64_t;
  const std::vector<std::vector<std::size_t>>& add;
  const std::vector<std::vector<std::size_t>>& mult;
  const std::vector<std::size_t>& negs;
  const std::vector<std::size_t>& invs;
  std::size_t zero_index;

  value_type zero() const { return static_cast<value_type>(zero_index); }
  bool is_zero(value_type a) const { return static_cast<std::size_t>(a) == zero_index; }
  value_type sub(value_type a, value_type b) const {
    return static_cast<value_type>(add[static_cast<std::size_t>(a)][negs[static_cast<std::size_t>(b)]]);
  }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
  }
  value_type inv(value_type a) const { return static_cast<value_type>(invs[static_cast<std::size_t>(a)]); }
};

}  // namespace

std::size_t ResidueField::rank_of(const RingInstance& ring, const Matrix& m) const {
  if (is_rationals()) return integer_matrix_rank(m, RationalField{});
  if (coset_of_.empty()) return integer_matrix_rank(m, PrimeField{characteristic_});
  std::vector<std::vector<std::int64_t>> reduced;
  for (const auto& row : m) {
    auto& out = reduced.emplace_back();
    for (auto x : row) out.push_back(static_cast<std::int64_t>(coset_of_.at(static_cast<std::size_t>(ring.normalize(x)))));
  }
  return rank(std::move(reduced), QuotientField{add_, mul_, neg_, inv_, zero_});
}

std::size_t ResidueField::reduce(const RingInstance& ring, Elem a) const {
  if (is_rationals()) throw std::domain_error("the rationals have no element indexing");
  if (coset_of_.empty()) return static_cast<std::size_t>(PrimeField{characteristic_}.reduce(a));
  return coset_of_.at(static_cast<std::size_t>(ring.normalize(a)));
}

std::size_t ResidueField::add(std::size_t a, std::size_t b) const {
  if (coset_of_.empty()) return (a + b) % static_cast<std::size_t>(characteristic_);
  return add_[a][b];
}

std::size_t ResidueField::mul(std::size_t a, std::size_t b) const {
  if (coset_of_.empty()) return (a * b) % static_cast<std::size_t>(characteristic_);
  return mul_[a][b];
}

std::size_t ResidueField::neg(std::size_t a) const {
  if (coset_of_.empty()) {
    const auto p = static_cast<std::size_t>(characteristic_);
    return (p - a % p) % p;
  }
  return neg_[a];
}

std::size_t ResidueField::one() const { return one_; }

std::size_t ResidueField::inv(std::size_t a) const {
  if (coset_of_.empty()) return static_cast<std::size_t>(PrimeField{characteristic_}.inv(static_cast<std::int64_t>(a)));
  return inv_[a];
}

ResidueField residue_field(const RingInstance& r, const PrimeIdeal& p) {
  require_prime_of(r, p);
  switch (r.kind()) {
    case RingKind::zmod: return ResidueField::prime_field(p.p);
    case RingKind::zloc:
      return p.kind == PrimeIdeal::Kind::generic ? ResidueField::rational_field() : ResidueField::prime_field(p.p);
    case RingKind::table: return ResidueField::table_quotient(r.as_table(), p.members);
  }
  throw std::logic_error("unreachable");
}

std::int64_t prime_power_part(std::int64_t n, std::int64_t p) {
  std::int64_t out = 1;
  while (n != 0 && n % p == 0) {
    n /= p;
    out *= p;
  }
  return out;
}

namespace {

RingInstance local_table_component(const TableRing& ring, const PrimeIdeal& p) {
  const std::size_t n = ring.size();
  std::vector<std::size_t> idempotents;
  for (std::size_t e = 0; e < n; ++e) {
    if (e != ring.zero() && ring.mul(e, e) == e) idempotents.push_back(e);
  }
  std::vector<std::size_t> primitive;
  for (auto e : idempotents) {
    const bool splits = std::any_of(idempotents.begin(), idempotents.end(),
                                    [&](std::size_t f) { return f != e && ring.mul(f, e) == f; });
    if (!splits) primitive.push_back(e);
  }
  std::vector<std::size_t> outside;
  for (auto e : primitive) {
    if (((p.members >> e) & 1U) == 0) outside.push_back(e);
  }
  if (outside.size() != 1) {
    throw std::invalid_argument("idempotent decomposition failed: expected one primitive idempotent outside the prime");
  }
  const std::size_t e = outside.front();
  std::vector<std::size_t> component;  // sorted indices of R·e
  for (std::size_t r = 0; r < n; ++r) component.push_back(ring.mul(r, e));
  std::sort(component.begin(), component.end());
  component.erase(std::unique(component.begin(), component.end()), component.end());
  std::map<std::size_t, std::size_t> index;
  for (std::size_t i = 0; i < component.size(); ++i) index[component[i]] = i;
  const std::size_t m = component.size();
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> add(m, std::vector<std::size_t>(m));
  auto mul = add;
  for (std::size_t i = 0; i < m; ++i) {
    names.push_back(ring.names()[component[i]]);
    for (std::size_t j = 0; j < m; ++j) {
      add[i][j] = index.at(ring.add(component[i], component[j]));
      mul[i][j] = index.at(ring.mul(component[i], component[j]));
    }
  }
  return RingInstance::table(TableRing(std::move(names), std::move(add), std::move(mul)));
}

}  // namespace

RingInstance localize(const RingInstance& r, const PrimeIdeal& p) {
  require_prime_of(r, p);
  switch (r.kind()) {
    case RingKind::zmod: return RingInstance::zmod(prime_power_part(r.as_zmod().n, p.p));
    case RingKind::zloc:
      return p.kind == PrimeIdeal::Kind::generic ? RingInstance::rationals() : RingInstance::zloc({p.p});
    case RingKind::table: return local_table_component(r.as_table(), p);
  }
  throw std::logic_error("unreachable");
}

bool is_local(const RingInstance& r) {
  switch (r.kind()) {
    case RingKind::zmod: return factorize(r.as_zmod().n).size() == 1;
    case RingKind::zloc: return r.as_zloc().primes.size() <= 1;
    case RingKind::table: {
      // Finite rings are zero-dimensional: every prime is maximal.
      return enum_primes(r).size() == 1;
    }
  }
  return false;
}

}  // namespace rankmap
