#include "symcubic/picweyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace symcubic {

int pic_dot(const PicClass& a, const PicClass& b) {
  int s = a[0] * b[0];
  for (int i = 1; i < 7; ++i) s -= a[i] * b[i];
  return s;
}

PicClass canonical_class() { return {-3, 1, 1, 1, 1, 1, 1}; }

PicClass label_class(int label) {
  PicClass c{};
  if (label < 0 || label >= kLines) fail(ErrorKind::InvalidArgument, "label out of range");
  if (label < 6) {
    c[1 + label] = 1;
  } else if (label < 12) {
    c[0] = 2;
    for (int j = 0; j < 6; ++j)
      if (j != label - 6) c[1 + j] = -1;
  } else {
    int n = label - 12;
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        if (n-- == 0) {
          c[0] = 1;
          c[1 + i] = -1;
          c[1 + j] = -1;
        }
  }
  return c;
}

int label_of_class(const PicClass& c) {
  static const std::map<PicClass, int> lookup = [] {
    std::map<PicClass, int> m;
    for (int l = 0; l < kLines; ++l) m[label_class(l)] = l;
    return m;
  }();
  auto it = lookup.find(c);
  return it == lookup.end() ? -1 : it->second;
}

PicClass pic_class_of_line(const LineConfig& c, int line) {
  if (line < 0 || line >= kLines) fail(ErrorKind::InvalidArgument, "line index out of range");
  return label_class(c.label_of()[static_cast<std::size_t>(line)]);
}

const std::array<PicClass, 6>& simple_roots() {
  static const std::array<PicClass, 6> r = {{
      {0, 1, -1, 0, 0, 0, 0},
      {0, 0, 1, -1, 0, 0, 0},
      {0, 0, 0, 1, -1, 0, 0},
      {0, 0, 0, 0, 1, -1, 0},
      {0, 0, 0, 0, 0, 1, -1},
      {1, -1, -1, -1, 0, 0, 0},
  }};
  return r;
}

const std::vector<PicClass>& root_system() {
  static const std::vector<PicClass> roots = [] {
    std::vector<PicClass> out;
    PicClass K = canonical_class();
    PicClass a{};
    for (a[0] = -3; a[0] <= 3; ++a[0])
      for (a[1] = -2; a[1] <= 2; ++a[1])
        for (a[2] = -2; a[2] <= 2; ++a[2])
          for (a[3] = -2; a[3] <= 2; ++a[3])
            for (a[4] = -2; a[4] <= 2; ++a[4])
              for (a[5] = -2; a[5] <= 2; ++a[5])
                for (a[6] = -2; a[6] <= 2; ++a[6])
                  if (pic_dot(K, a) == 0 && pic_dot(a, a) == -2) out.push_back(a);
    return out;
  }();
  return roots;
}

// ------------------------------------------------------------ WeylElement

WeylElement::WeylElement() { std::iota(perm_.begin(), perm_.end(), std::uint8_t{0}); }

WeylElement WeylElement::reflection(const PicClass& root) {
  if (pic_dot(root, root) != -2 || pic_dot(root, canonical_class()) != 0) fail(ErrorKind::InvalidArgument, "not a root");
  LinePerm p{};
  for (int l = 0; l < kLines; ++l) {
    PicClass c = label_class(l);
    int d = pic_dot(c, root);
    for (int i = 0; i < 7; ++i) c[i] += d * root[i];
    p[l] = static_cast<std::uint8_t>(label_of_class(c));
  }
  return WeylElement(p);
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  LinePerm p{};
  for (int l = 0; l < kLines; ++l) p[l] = perm_[o.perm_[l]];
  return WeylElement(p);
}

WeylElement WeylElement::inverse() const {
  LinePerm p{};
  for (int l = 0; l < kLines; ++l) p[perm_[l]] = static_cast<std::uint8_t>(l);
  return WeylElement(p);
}

WeylElement WeylElement::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  WeylElement r, b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

int WeylElement::order() const { return perm_order(as_perm()); }

bool WeylElement::is_identity() const { return *this == WeylElement(); }

int WeylElement::fixed_lines() const {
  int n = 0;
  for (int l = 0; l < kLines; ++l) n += perm_[l] == l;
  return n;
}

std::array<std::array<int, 7>, 7> WeylElement::matrix() const {
  std::array<std::array<int, 7>, 7> m{};
  std::array<PicClass, 7> cols;
  for (int i = 1; i <= 6; ++i) cols[i] = label_class(perm_[label_e(i)]);
  PicClass h = label_class(perm_[label_l(1, 2)]);
  for (int r = 0; r < 7; ++r) h[r] += cols[1][r] + cols[2][r];
  cols[0] = h;
  for (int r = 0; r < 7; ++r)
    for (int c = 0; c < 7; ++c) m[r][c] = cols[c][r];
  return m;
}

PicClass WeylElement::apply(const PicClass& c) const {
  auto m = matrix();
  PicClass out{};
  for (int r = 0; r < 7; ++r)
    for (int k = 0; k < 7; ++k) out[r] += m[r][k] * c[k];
  return out;
}

std::uint64_t WeylElement::key() const {
  std::uint64_t k = 0;
  for (int l = 0; l < 6; ++l) k = (k << 5) | perm_[l];
  return (k << 5) | perm_[label_l(1, 2)];
}

// --------------------------------------------------------- polynomials

namespace {

// Exact division by a monic polynomial; nullopt if not divisible.
std::optional<IntPoly> poly_div_exact(IntPoly a, const IntPoly& b) {
  if (a.size() < b.size()) return std::nullopt;
  IntPoly q(a.size() - b.size() + 1, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    std::int64_t c = a[i + b.size() - 1];
    q[i] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
  }
  for (auto v : a)
    if (v != 0) return std::nullopt;
  return q;
}

} // namespace

IntPoly cyclotomic(int m) {
  IntPoly p(static_cast<std::size_t>(m) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d)
    if (m % d == 0) p = *poly_div_exact(p, cyclotomic(d));
  return p;
}

IntPoly charpoly_e6(const WeylElement& w) {
  // Faddeev-LeVerrier on the 7x7 matrix (all divisions exact), then remove
  // the factor t - 1 coming from K.
  auto a = w.matrix();
  constexpr int n = 7;
  std::array<std::array<std::int64_t, n>, n> A{}, M{}, AM{};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A[i][j] = a[i][j];
  IntPoly c(n + 1, 0);
  c[n] = 1;
  for (int k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::int64_t s = 0;
        for (int l = 0; l < n; ++l) s += A[i][l] * M[l][j];
        AM[i][j] = s;
      }
    for (int i = 0; i < n; ++i) AM[i][i] += c[n - k + 1];
    M = AM;
    std::int64_t tr = 0;
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) tr += A[i][l] * M[l][i];
    c[n - k] = -tr / k;
  }
  auto q = poly_div_exact(c, IntPoly{-1, 1});
  if (!q) fail(ErrorKind::InvalidArgument, "element does not fix K");
  return *q;
}

std::string cyclotomic_str(const IntPoly& p) {
  IntPoly rest = p;
  std::string s;
  for (int m : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 18}) {
    IntPoly phi = cyclotomic(m);
    int e = 0;
    while (rest.size() >= phi.size()) {
      auto q = poly_div_exact(rest, phi);
      if (!q) break;
      rest = *q;
      ++e;
    }
    if (e) {
      if (!s.empty()) s += "*";
      s += "Phi" + std::to_string(m);
      if (e > 1) s += "^" + std::to_string(e);
    }
  }
  if (rest.size() != 1 || rest[0] != 1) fail(ErrorKind::InvalidArgument, "not a product of cyclotomic polynomials");
  return s;
}

// ------------------------------------------------------------- WeylGroup

namespace {

// Named classes, keyed by characteristic polynomial on the E6 lattice.
const std::vector<std::pair<std::string, std::string>>& named_classes() {
  static const std::vector<std::pair<std::string, std::string>> names = {
      {"A1", "Phi1^5*Phi2"},       {"A1^2", "Phi1^4*Phi2^2"}, {"A1^3", "Phi1^3*Phi2^3"},
      {"A1^4", "Phi1^2*Phi2^4"},   {"A2", "Phi1^4*Phi3"},     {"A2^2", "Phi1^2*Phi3^2"},
      {"A2^3", "Phi3^3"},          {"A4", "Phi1^2*Phi5"},     {"D5", "Phi1*Phi2*Phi8"},
      {"E6(a1)", "Phi9"},          {"A4xA1", "Phi1*Phi2*Phi5"}, {"E6(a2)", "Phi3*Phi6^2"},
  };
  return names;
}

} // namespace

WeylGroup::WeylGroup() {
  for (auto& r : simple_roots()) gens_.push_back(WeylElement::reflection(r));
  elements_.push_back(WeylElement());
  index_[elements_.front().key()] = 0;
  for (std::size_t i = 0; i < elements_.size(); ++i)
    for (auto& g : gens_) {
      WeylElement y = g * elements_[i];
      if (index_.emplace(y.key(), static_cast<int>(elements_.size())).second) elements_.push_back(y);
    }

  // conjugacy classes by orbits of s x s (generators are involutions)
  class_of_.assign(elements_.size(), -1);
  struct Raw {
    std::vector<int> members;
  };
  std::vector<Raw> raw;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (class_of_[i] >= 0) continue;
    int id = static_cast<int>(raw.size());
    raw.push_back({});
    std::deque<int> queue{static_cast<int>(i)};
    class_of_[i] = id;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      raw[id].members.push_back(x);
      for (auto& s : gens_) {
        int y = index_.at((s * elements_[x] * s).key());
        if (class_of_[y] < 0) {
          class_of_[y] = id;
          queue.push_back(y);
        }
      }
    }
  }

  for (auto& r : raw) {
    int rep = *std::min_element(r.members.begin(), r.members.end());
    const WeylElement& w = elements_[rep];
    ConjugacyClass c;
    c.order = w.order();
    c.size = r.members.size();
    c.centralizer_order = elements_.size() / c.size;
    c.charpoly = cyclotomic_str(charpoly_e6(w));
    c.fixed_lines = w.fixed_lines();
    c.representative = rep;
    classes_.push_back(c);
  }
  // labels: a name is used only when its characteristic polynomial picks
  // out one class; otherwise order, polynomial and fixed-line count
  std::map<std::string, int> per_poly;
  for (auto& c : classes_) ++per_poly[c.charpoly];
  std::map<std::pair<std::string, int>, int> per_poly_fixed;
  for (auto& c : classes_) ++per_poly_fixed[{c.charpoly, c.fixed_lines}];
  for (auto& c : classes_) {
    for (auto& [name, poly] : named_classes())
      if (poly == c.charpoly && per_poly[poly] == 1) c.label = name;
    if (!c.label.empty()) continue;
    c.label = "o" + std::to_string(c.order) + ":" + c.charpoly;
    if (per_poly[c.charpoly] > 1) {
      c.label += "/f" + std::to_string(c.fixed_lines);
      if (per_poly_fixed[{c.charpoly, c.fixed_lines}] > 1) c.label += "/n" + std::to_string(c.size);
    }
  }
  // deterministic class order: by element order, then size, then label
  std::vector<int> perm(classes_.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    auto& x = classes_[a];
    auto& y = classes_[b];
    return std::tie(x.order, x.size, x.label) < std::tie(y.order, y.size, y.label);
  });
  std::vector<ConjugacyClass> sorted;
  std::vector<int> where(classes_.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    sorted.push_back(classes_[perm[i]]);
    where[perm[i]] = static_cast<int>(i);
  }
  classes_ = std::move(sorted);
  for (auto& c : class_of_) c = where[c];
}

const WeylGroup& WeylGroup::instance() {
  static const WeylGroup g;
  return g;
}

int WeylGroup::index_of(const WeylElement& w) const {
  auto it = index_.find(w.key());
  if (it == index_.end() || !(elements_[it->second] == w)) return -1;
  return it->second;
}

const ConjugacyClass& WeylGroup::class_of(const WeylElement& w) const {
  int i = index_of(w);
  if (i < 0) fail(ErrorKind::InvalidArgument, "permutation is not in W(E6)");
  return classes_[class_of_[i]];
}

const ConjugacyClass& WeylGroup::class_named(const std::string& label) const {
  for (auto& c : classes_)
    if (c.label == label) return c;
  fail(ErrorKind::UnknownName, "no conjugacy class labelled " + label);
}

std::vector<int> WeylGroup::centralizer(std::span<const WeylElement> gens) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const WeylElement& x = elements_[i];
    if (std::all_of(gens.begin(), gens.end(), [&](const WeylElement& g) { return g * x == x * g; }))
      out.push_back(static_cast<int>(i));
  }
  return out;
}

const std::string& classify(const WeylElement& w) { return WeylGroup::instance().class_of(w).label; }

WeylElement weyl_of(const LineConfig& c, const LinePerm& g) {
  LinePerm p{};
  for (int l = 0; l < kLines; ++l) p[l] = c.label_of()[g[c.marking()[l]]];
  return WeylElement(p);
}

} // namespace symcubic
