#include "symcubic/gf.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <unordered_map>

namespace symcubic {

namespace {

constexpr std::uint64_t kMaxFieldSize = std::uint64_t(1) << 40;
constexpr std::uint64_t kTableLimit = std::uint64_t(1) << 18;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_int(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

} // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ---------------------------------------------------------------- Field

Field::Field(std::uint64_t p, int k, std::vector<std::uint64_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
  q_ = 1;
  for (int i = 0; i < k; ++i) q_ *= p;
  unit_primes_ = prime_factors(q_ - 1);
  // smallest primitive element in canonical order
  for (std::uint64_t key = 1; key < q_; ++key) {
    Elt a = from_key(key);
    bool prim = true;
    for (auto r : unit_primes_) {
      if (pow(a, (q_ - 1) / r) == 1) {
        prim = false;
        break;
      }
    }
    if (prim) {
      primitive_ = a;
      break;
    }
  }
  if (k_ > 1 && q_ <= kTableLimit) build_tables();
}

void Field::build_tables() {
  std::uint64_t n = q_ - 1;
  exp_.assign(2 * n, 0);
  log_.assign(q_, 0);
  Elt x = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    exp_[i] = static_cast<std::uint32_t>(x);
    exp_[i + n] = static_cast<std::uint32_t>(x);
    log_[x] = static_cast<std::uint32_t>(i);
    x = mul_slow(x, primitive_);
  }
  if (p_ != 2) {
    zech_.assign(n, -1);
    for (std::uint64_t i = 0; i < n; ++i) {
      Elt s = add_digits(1, exp_[i]);
      zech_[i] = s == 0 ? -1 : static_cast<std::int64_t>(log_[s]);
    }
  }
}

std::string Field::name() const { return "GF(" + std::to_string(q_) + ")"; }

Elt Field::add_digits(Elt a, Elt b) const {
  Elt r = 0, w = 1;
  for (int i = 0; i < k_; ++i) {
    std::uint64_t d = (a % p_ + b % p_) % p_;
    r += d * w;
    w *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

Elt Field::add(Elt a, Elt b) const {
  if (k_ == 1) {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (p_ == 2) return a ^ b;
  if (a == 0) return b;
  if (b == 0) return a;
  if (!zech_.empty()) {
    std::uint64_t n = q_ - 1;
    std::uint64_t la = log_[a], lb = log_[b];
    std::uint64_t d = lb >= la ? lb - la : lb + n - la;
    std::int64_t z = zech_[d];
    if (z < 0) return 0;
    return exp_[la + static_cast<std::uint64_t>(z)];
  }
  return add_digits(a, b);
}

Elt Field::neg(Elt a) const {
  if (a == 0 || p_ == 2) return a;
  if (k_ == 1) return p_ - a;
  if (!exp_.empty()) return exp_[log_[a] + (q_ - 1) / 2];
  Elt r = 0, w = 1;
  for (int i = 0; i < k_; ++i) {
    std::uint64_t d = a % p_;
    r += (d ? p_ - d : 0) * w;
    w *= p_;
    a /= p_;
  }
  return r;
}

Elt Field::mul_slow(Elt a, Elt b) const {
  if (k_ == 1) return mulmod(a, b, p_);
  std::uint64_t da[12], db[12], prod[23] = {};
  for (int i = 0; i < k_; ++i) {
    da[i] = a % p_;
    a /= p_;
    db[i] = b % p_;
    b /= p_;
  }
  for (int i = 0; i < k_; ++i) {
    if (!da[i]) continue;
    for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  for (int d = 2 * k_ - 2; d >= k_; --d) {
    std::uint64_t c = prod[d];
    if (!c) continue;
    prod[d] = 0;
    for (int j = 0; j < k_; ++j) {
      std::uint64_t m = modulus_[j];
      if (!m) continue;
      std::uint64_t sub = (c * m) % p_;
      prod[d - k_ + j] = (prod[d - k_ + j] + p_ - sub) % p_;
    }
  }
  Elt r = 0, w = 1;
  for (int i = 0; i < k_; ++i) {
    r += prod[i] * w;
    w *= p_;
  }
  return r;
}

Elt Field::mul(Elt a, Elt b) const {
  if (a == 0 || b == 0) return 0;
  if (k_ == 1) return p_ < (std::uint64_t(1) << 32) ? (a * b) % p_ : mulmod(a, b, p_);
  if (!exp_.empty()) return exp_[log_[a] + log_[b]];
  return mul_slow(a, b);
}

Elt Field::inv(Elt a) const {
  if (a == 0) fail(ErrorKind::DivisionByZero, "inverse of zero in " + name());
  if (k_ == 1) return powmod_int(a, p_ - 2, p_);
  if (!exp_.empty()) {
    std::uint32_t l = log_[a];
    return l == 0 ? 1 : exp_[(q_ - 1) - l];
  }
  return pow(a, q_ - 2);
}

Elt Field::pow(Elt a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (k_ == 1) return powmod_int(a, e, p_);
  if (!exp_.empty()) {
    std::uint64_t n = q_ - 1;
    return exp_[mulmod(log_[a], e % n, n)];
  }
  Elt r = 1;
  while (e) {
    if (e & 1) r = mul_slow(r, a);
    a = mul_slow(a, a);
    e >>= 1;
  }
  return r;
}

Elt Field::frobenius(Elt a, int r) const {
  r %= k_;
  if (r < 0) r += k_;
  for (int i = 0; i < r; ++i) a = pow(a, p_);
  return a;
}

Elt Field::from_int(std::int64_t v) const {
  std::int64_t m = static_cast<std::int64_t>(p_);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  return static_cast<Elt>(r);
}

Elt Field::from_coeffs(std::span<const std::uint64_t> c) const {
  if (static_cast<int>(c.size()) > k_)
    fail(ErrorKind::InvalidArgument, "too many coefficients for " + name());
  Elt r = 0, w = 1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    r += (c[i] % p_) * w;
    w *= p_;
  }
  return r;
}

std::vector<std::uint64_t> Field::coeffs(Elt a) const {
  std::vector<std::uint64_t> c(k_);
  for (int i = 0; i < k_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

std::uint64_t Field::key(Elt a) const {
  if (k_ == 1) return a;
  std::uint64_t r = 0;
  for (int i = 0; i < k_; ++i) {
    r = r * p_ + a % p_;
    a /= p_;
  }
  return r;
}

Elt Field::from_key(std::uint64_t key) const {
  if (k_ == 1) return key;
  Elt r = 0;
  for (int i = 0; i < k_; ++i) {
    r = r * p_ + key % p_;
    key /= p_;
  }
  return r;
}

std::uint64_t Field::order_of(Elt a) const {
  if (a == 0) fail(ErrorKind::DivisionByZero, "order of zero");
  std::uint64_t ord = q_ - 1;
  for (auto r : unit_primes_) {
    while (ord % r == 0 && pow(a, ord / r) == 1) ord /= r;
  }
  return ord;
}

std::string Field::format(Elt a) const {
  if (k_ == 1) return std::to_string(a);
  if (a == 0) return "0";
  auto c = coeffs(a);
  std::string out;
  for (int i = k_ - 1; i >= 0; --i) {
    if (!c[i]) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c[i]);
      continue;
    }
    if (c[i] != 1) out += std::to_string(c[i]) + "*";
    out += "g";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

// ------------------------------------------------------------ registry

namespace {

struct Registry {
  std::recursive_mutex mu;
  std::map<std::pair<std::uint64_t, int>, std::unique_ptr<Field>> fields;
  std::map<std::pair<const Field*, const Field*>, std::unique_ptr<Embedding>> embeddings;
};

Registry& registry() {
  static Registry r;
  return r;
}

// Rabin test over GF(p) for a monic candidate given low-first.
bool rabin_irreducible(const Field& fp, const std::vector<std::uint64_t>& coeffs) {
  Poly f(fp, std::vector<Elt>(coeffs.begin(), coeffs.end()));
  return is_irreducible(f);
}

} // namespace

const Field& make_field(std::uint64_t p, int k) {
  if (!is_prime(p)) fail(ErrorKind::NonPrime, std::to_string(p) + " is not prime");
  if (k < 1 || k > 12) fail(ErrorKind::DegreeOutOfRange, "extension degree " + std::to_string(k));
  std::uint64_t q = 1;
  for (int i = 0; i < k; ++i) {
    if (q > kMaxFieldSize / p) fail(ErrorKind::DegreeOutOfRange, "field size exceeds 2^40");
    q *= p;
  }
  auto& reg = registry();
  std::lock_guard<std::recursive_mutex> lock(reg.mu);
  auto it = reg.fields.find({p, k});
  if (it != reg.fields.end()) return *it->second;

  std::vector<std::uint64_t> mod;
  if (k == 1) {
    mod = {0, 1};
  } else {
    const Field& fp = make_field(p, 1);
    std::uint64_t count = q;  // p^k candidates for the lower coefficients
    std::vector<std::uint64_t> cand(k + 1);
    for (std::uint64_t n = 0; n < count; ++n) {
      // c_0 is the most significant digit of n
      std::uint64_t m = n;
      for (int i = k - 1; i >= 0; --i) {
        cand[i] = m % p;
        m /= p;
      }
      cand[k] = 1;
      if (cand[0] == 0) continue;
      if (rabin_irreducible(fp, cand)) {
        mod = cand;
        break;
      }
    }
  }
  std::unique_ptr<Field> f(new Field(p, k, std::move(mod)));
  const Field& ref = *f;
  reg.fields.emplace(std::make_pair(p, k), std::move(f));
  return ref;
}

const Field& parse_field(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!isspace(static_cast<unsigned char>(ch))) s += ch;
  auto bad = [&]() -> const Field& { fail(ErrorKind::ParseError, "bad field literal '" + std::string(text) + "'"); };
  if (s.size() < 5 || (s.rfind("GF(", 0) != 0 && s.rfind("gf(", 0) != 0) || s.back() != ')') return bad();
  std::string inner = s.substr(3, s.size() - 4);
  auto to_u64 = [&](const std::string& t) -> std::uint64_t {
    if (t.empty() || t.size() > 15 || !std::all_of(t.begin(), t.end(), ::isdigit)) bad();
    return std::stoull(t);
  };
  auto caret = inner.find('^');
  if (caret != std::string::npos) {
    std::uint64_t p = to_u64(inner.substr(0, caret));
    std::uint64_t k = to_u64(inner.substr(caret + 1));
    if (k > 64) fail(ErrorKind::DegreeOutOfRange, "extension degree " + std::to_string(k));
    return make_field(p, static_cast<int>(k));
  }
  std::uint64_t n = to_u64(inner);
  if (n < 2) return bad();
  auto primes = prime_factors(n);
  if (primes.size() != 1) fail(ErrorKind::NonPrime, std::to_string(n) + " is not a prime power");
  std::uint64_t p = primes[0];
  int k = 0;
  while (n > 1) {
    n /= p;
    ++k;
  }
  return make_field(p, k);
}

// ------------------------------------------------------- FieldElement

void FieldElement::check(const FieldElement& o) const {
  if (!f_ || !o.f_) fail(ErrorKind::InvalidArgument, "uninitialised field element");
  if (f_ != o.f_) fail(ErrorKind::FieldMismatch, f_->name() + " vs " + o.f_->name());
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check(o);
  return {*f_, f_->add(v_, o.v_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  check(o);
  return {*f_, f_->sub(v_, o.v_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  check(o);
  return {*f_, f_->mul(v_, o.v_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  check(o);
  return {*f_, f_->div(v_, o.v_)};
}
bool FieldElement::operator<(const FieldElement& o) const {
  check(o);
  return f_->less(v_, o.v_);
}

// ----------------------------------------------------------- Embedding

Embedding::Embedding(const Field& from, const Field& to) : from_(&from), to_(&to) {
  if (from.p() != to.p()) fail(ErrorKind::FieldMismatch, from.name() + " vs " + to.name());
  if (to.k() % from.k() != 0)
    fail(ErrorKind::NotASubfield, from.name() + " is not a subfield of " + to.name());
  Elt root = 0;
  if (from.k() > 1) {
    auto m = from.modulus();
    Poly mod(to, std::vector<Elt>(m.begin(), m.end()));
    auto roots = distinct_roots(mod);
    if (roots.empty()) fail(ErrorKind::NotASubfield, "modulus has no root");
    root = roots.front();
  }
  powers_.resize(from.k());
  Elt x = 1;
  for (int i = 0; i < from.k(); ++i) {
    powers_[i] = x;
    x = to.mul(x, root);
  }
}

Elt Embedding::operator()(Elt x) const {
  if (from_ == to_) return x;
  Elt r = 0;
  std::uint64_t p = from_->p();
  for (int i = 0; i < from_->k(); ++i) {
    std::uint64_t c = x % p;
    x /= p;
    if (c) r = to_->add(r, to_->mul(c, powers_[i]));
  }
  return r;
}

std::optional<Elt> Embedding::restrict(Elt y) const {
  if (from_ == to_) return y;
  // Solve sum c_i coeffs(powers_i) = coeffs(y) over GF(p).
  std::uint64_t p = from_->p();
  int d = from_->k(), m = to_->k();
  std::vector<std::vector<std::uint64_t>> a(m, std::vector<std::uint64_t>(d + 1));
  for (int j = 0; j < d; ++j) {
    auto c = to_->coeffs(powers_[j]);
    for (int i = 0; i < m; ++i) a[i][j] = c[i];
  }
  auto yc = to_->coeffs(y);
  for (int i = 0; i < m; ++i) a[i][d] = yc[i];
  int row = 0;
  std::vector<int> pivcol;
  for (int col = 0; col < d && row < m; ++col) {
    int piv = -1;
    for (int i = row; i < m; ++i)
      if (a[i][col]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[row]);
    std::uint64_t invp = powmod_int(a[row][col], p - 2, p);
    for (auto& v : a[row]) v = mulmod(v, invp, p);
    for (int i = 0; i < m; ++i) {
      if (i == row || !a[i][col]) continue;
      std::uint64_t f = a[i][col];
      for (int j = 0; j <= d; ++j) a[i][j] = (a[i][j] + p - mulmod(f, a[row][j], p)) % p;
    }
    pivcol.push_back(col);
    ++row;
  }
  for (int i = row; i < m; ++i)
    if (a[i][d]) return std::nullopt;
  std::vector<std::uint64_t> c(d, 0);
  for (int i = 0; i < row; ++i) c[pivcol[i]] = a[i][d];
  return from_->from_coeffs(c);
}

const Embedding& embedding(const Field& from, const Field& to) {
  auto& reg = registry();
  std::lock_guard<std::recursive_mutex> lock(reg.mu);
  auto key = std::make_pair(&from, &to);
  auto it = reg.embeddings.find(key);
  if (it != reg.embeddings.end()) return *it->second;
  std::unique_ptr<Embedding> e(new Embedding(from, to));
  const Embedding& ref = *e;
  reg.embeddings.emplace(key, std::move(e));
  return ref;
}

FieldElement embed(const FieldElement& x, const Field& target) {
  const Embedding& e = embedding(x.field(), target);
  return {target, e(x.code())};
}

std::optional<FieldElement> nth_root_of_unity(const Field& f, std::uint64_t n) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "n must be positive");
  if (n % f.p() == 0) fail(ErrorKind::CharacteristicDivides, "p divides n");
  std::uint64_t order = f.size() - 1;
  if (order % n != 0) return std::nullopt;
  Elt base = f.pow(f.primitive(), order / n);
  auto primes = prime_factors(n);
  std::optional<Elt> best;
  Elt x = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    bool prim = true;
    for (auto r : primes)
      if (f.pow(x, n / r) == 1) {
        prim = false;
        break;
      }
    if (n == 1) prim = true;
    if (prim && (!best || f.less(x, *best))) best = x;
    x = f.mul(x, base);
  }
  return FieldElement(f, *best);
}

// ---------------------------------------------------------------- Poly

Poly::Poly(const Field& field, std::vector<Elt> coeffs) : f(&field), c(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Field& field, Elt v) { return Poly(field, {v}); }
Poly Poly::x(const Field& field) { return Poly(field, {0, 1}); }

void Poly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

std::string Poly::str(char var) const {
  if (c.empty()) return "0";
  std::string out;
  for (int i = deg(); i >= 0; --i) {
    if (!c[i]) continue;
    std::string coef = f->format(c[i]);
    if (coef.find('+') != std::string::npos) coef = "(" + coef + ")";
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += coef;
      continue;
    }
    if (c[i] != 1) out += coef + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

Poly operator+(const Poly& a, const Poly& b) {
  const Field& f = a.f ? *a.f : *b.f;
  std::vector<Elt> r(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  return Poly(f, std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) {
  const Field& f = a.f ? *a.f : *b.f;
  std::vector<Elt> r(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  return Poly(f, std::move(r));
}

Poly operator*(const Poly& a, const Poly& b) {
  const Field& f = a.f ? *a.f : *b.f;
  if (a.is_zero() || b.is_zero()) return Poly(f);
  std::vector<Elt> r(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (!a.c[i]) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a.c[i], b.c[j]));
  }
  return Poly(f, std::move(r));
}

Poly scale(const Poly& a, Elt s) {
  std::vector<Elt> r(a.c.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.f->mul(a.c[i], s);
  return Poly(*a.f, std::move(r));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  const Field& f = *b.f;
  if (a.deg() < b.deg()) return {Poly(f), a};
  std::vector<Elt> r = a.c;
  std::vector<Elt> q(a.c.size() - b.c.size() + 1, 0);
  Elt li = f.inv(b.lead());
  int db = b.deg();
  for (int i = a.deg(); i >= db; --i) {
    Elt c = r[i];
    if (!c) continue;
    Elt m = f.mul(c, li);
    q[i - db] = m;
    for (int j = 0; j <= db; ++j) r[i - db + j] = f.sub(r[i - db + j], f.mul(m, b.c[j]));
  }
  r.resize(db);
  return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }

Poly monic(const Poly& a) {
  if (a.is_zero()) return a;
  return scale(a, a.f->inv(a.lead()));
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

Poly derivative(const Poly& a) {
  if (a.c.size() <= 1) return Poly(*a.f);
  std::vector<Elt> r(a.c.size() - 1);
  for (std::size_t i = 1; i < a.c.size(); ++i) r[i - 1] = a.f->mul(a.c[i], a.f->from_int(static_cast<std::int64_t>(i % a.f->p())));
  return Poly(*a.f, std::move(r));
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& mod) {
  const Field& f = *mod.f;
  Poly r = Poly::constant(f, 1) % mod;
  Poly b = base % mod;
  while (e) {
    if (e & 1) r = (r * b) % mod;
    e >>= 1;
    if (e) b = (b * b) % mod;
  }
  return r;
}

Elt eval(const Poly& a, Elt x) {
  Elt r = 0;
  for (int i = a.deg(); i >= 0; --i) r = a.f->add(a.f->mul(r, x), a.c[i]);
  return r;
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg();
  for (int i = 0; i <= a.deg(); ++i) {
    auto ka = a.f->key(a.c[i]), kb = b.f->key(b.c[i]);
    if (ka != kb) return ka < kb;
  }
  return false;
}

bool is_irreducible(const Poly& a) {
  int n = a.deg();
  if (n < 1) return false;
  if (n == 1) return true;
  const Field& f = *a.f;
  Poly m = monic(a);
  Poly x = Poly::x(f);
  // x^(Q^j) mod m for j = 1..n
  std::vector<Poly> xp(n + 1);
  xp[0] = x % m;
  for (int j = 1; j <= n; ++j) xp[j] = powmod(xp[j - 1], f.size(), m);
  if (!((xp[n] - x) % m).is_zero()) return false;
  for (auto r : prime_factors(static_cast<std::uint64_t>(n))) {
    Poly g = gcd(m, xp[n / r] - x);
    if (g.deg() != 0) return false;
  }
  return true;
}

namespace {

// p-th root of a polynomial whose derivative vanishes.
Poly pth_root(const Poly& a) {
  const Field& f = *a.f;
  std::uint64_t p = f.p();
  std::vector<Elt> r(a.deg() / p + 1, 0);
  for (int i = 0; i <= a.deg(); i += static_cast<int>(p)) r[i / p] = f.frobenius(a.c[i], f.k() - 1);
  return Poly(f, std::move(r));
}

void squarefree(const Poly& a, int mult, std::vector<std::pair<Poly, int>>& out) {
  const Field& f = *a.f;
  if (a.deg() < 1) return;
  Poly c = gcd(a, derivative(a));
  Poly w = a / c;
  int i = 1;
  while (w.deg() > 0) {
    Poly y = gcd(w, c);
    Poly fac = w / y;
    if (fac.deg() > 0) out.push_back({monic(fac), i * mult});
    w = y;
    c = c / y;
    ++i;
  }
  if (c.deg() > 0) squarefree(pth_root(monic(c)), mult * static_cast<int>(f.p()), out);
}

std::mt19937_64& split_rng() {
  thread_local std::mt19937_64 rng(0x5eed5eedULL);
  return rng;
}

Poly random_poly(const Field& f, int deg_below) {
  auto& rng = split_rng();
  std::vector<Elt> c(deg_below);
  for (auto& v : c) v = f.from_key(rng() % f.size());
  return Poly(f, std::move(c));
}

void equal_degree(const Poly& g, int d, std::vector<Poly>& out) {
  if (g.deg() <= d) {
    if (g.deg() > 0) out.push_back(monic(g));
    return;
  }
  const Field& f = *g.f;
  std::uint64_t Q = f.size();
  for (int attempt = 0; attempt < 4096; ++attempt) {
    Poly a = random_poly(f, g.deg());
    if (a.deg() < 1) continue;
    Poly u;
    if (f.p() == 2) {
      // trace map to GF(2)
      int steps = f.k() * d;
      Poly t = a % g, s = t;
      for (int i = 1; i < steps; ++i) {
        t = (t * t) % g;
        s = s + t;
      }
      u = gcd(g, s);
    } else {
      Poly t = a % g, s = t;
      for (int i = 1; i < d; ++i) {
        t = powmod(t, Q, g);
        s = (s * t) % g;
      }
      Poly b = powmod(s, (Q - 1) / 2, g);
      u = gcd(g, b - Poly::constant(f, 1));
    }
    if (u.deg() > 0 && u.deg() < g.deg()) {
      equal_degree(u, d, out);
      equal_degree(g / u, d, out);
      return;
    }
  }
  fail(ErrorKind::InvalidArgument, "equal-degree splitting did not converge");
}

void distinct_degree(const Poly& a, std::vector<std::pair<Poly, int>>& out) {
  const Field& f = *a.f;
  Poly rest = monic(a);
  Poly x = Poly::x(f);
  Poly h = x % rest;
  int i = 1;
  while (rest.deg() >= 2 * i) {
    h = powmod(h, f.size(), rest);
    Poly g = gcd(rest, h - x);
    if (g.deg() > 0) {
      out.push_back({g, i});
      rest = rest / g;
      h = h % rest;
    }
    ++i;
  }
  if (rest.deg() > 0) out.push_back({rest, rest.deg()});
}

} // namespace

std::vector<std::pair<Poly, int>> factor(const Poly& a) {
  if (a.is_zero()) fail(ErrorKind::ZeroPolynomial, "factor of zero polynomial");
  std::vector<std::pair<Poly, int>> sqf;
  squarefree(monic(a), 1, sqf);
  std::vector<std::pair<Poly, int>> result;
  for (auto& [part, mult] : sqf) {
    std::vector<std::pair<Poly, int>> dd;
    distinct_degree(part, dd);
    for (auto& [g, d] : dd) {
      std::vector<Poly> pieces;
      equal_degree(g, d, pieces);
      for (auto& pc : pieces) result.push_back({pc, mult});
    }
  }
  // merge equal factors
  std::sort(result.begin(), result.end(), [](const auto& x, const auto& y) { return poly_less(x.first, y.first); });
  std::vector<std::pair<Poly, int>> merged;
  for (auto& r : result) {
    if (!merged.empty() && merged.back().first == r.first)
      merged.back().second += r.second;
    else
      merged.push_back(r);
  }
  return merged;
}

std::vector<Elt> distinct_roots(const Poly& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "roots of zero polynomial");
  const Field& F = *f.f;
  std::vector<Elt> roots;
  if (f.deg() < 1) return roots;
  if (F.size() <= 256) {
    for (std::uint64_t key = 0; key < F.size(); ++key) {
      Elt x = F.from_key(key);
      if (eval(f, x) == 0) roots.push_back(x);
    }
    return roots;
  }
  Poly m = monic(f);
  Poly x = Poly::x(F);
  Poly g = gcd(m, powmod(x, F.size(), m) - x);
  std::vector<Poly> lin;
  equal_degree(g, 1, lin);
  for (auto& l : lin) roots.push_back(F.neg(l.coeff(0)));
  std::sort(roots.begin(), roots.end(), [&](Elt a, Elt b) { return F.less(a, b); });
  return roots;
}

std::vector<FieldElement> poly_roots(const Poly& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "roots of zero polynomial");
  const Field& F = *f.f;
  std::vector<Elt> roots;
  if (F.size() <= (std::uint64_t(1) << 16)) {
    for (std::uint64_t key = 0; key < F.size(); ++key) {
      Elt x = F.from_key(key);
      if (eval(f, x) == 0) roots.push_back(x);
    }
  } else {
    roots = distinct_roots(f);
  }
  std::vector<FieldElement> out;
  for (Elt r : roots) {
    Poly lin(F, {F.neg(r), 1});
    Poly rest = f;
    while (rest.deg() >= 1) {
      auto [q, rem] = divmod(rest, lin);
      if (!rem.is_zero()) break;
      out.emplace_back(F, r);
      rest = q;
    }
  }
  return out;
}

} // namespace symcubic
