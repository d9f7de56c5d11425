#include "symcubic/mpoly.hpp"

#include <cctype>

namespace symcubic {

bool mono_divides(Mono a, Mono b) {
  for (int v = 0; v < 4; ++v)
    if (mono_exp(a, v) > mono_exp(b, v)) return false;
  return true;
}

Mono mono_lcm(Mono a, Mono b) {
  Mono r = 0;
  for (int v = 0; v < 4; ++v) r |= Mono(std::max(mono_exp(a, v), mono_exp(b, v))) << (8 * (3 - v));
  return r;
}

std::string mono_str(Mono m) {
  static const char* names = "xyzt";
  std::string out;
  for (int v = 0; v < 4; ++v) {
    int e = mono_exp(m, v);
    if (!e) continue;
    if (!out.empty()) out += "*";
    out += names[v];
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

MPoly MPoly::constant(const Field& f, Elt c) { return term(f, 0, c); }
MPoly MPoly::var(const Field& f, int v) { return term(f, mono_var(v), 1); }
MPoly MPoly::term(const Field& f, Mono m, Elt c) {
  MPoly p(f);
  p.add_term(m, c);
  return p;
}

int MPoly::total_degree() const {
  int d = -1;
  for (auto& [m, c] : terms_) d = std::max(d, mono_degree(m));
  return d;
}

int MPoly::degree_in(int v) const {
  int d = -1;
  for (auto& [m, c] : terms_) d = std::max(d, mono_exp(m, v));
  return d;
}

bool MPoly::is_homogeneous(int d) const {
  for (auto& [m, c] : terms_)
    if (mono_degree(m) != d) return false;
  return true;
}

int MPoly::leading_var() const {
  int best = 4;
  for (auto& [m, c] : terms_)
    for (int v = 0; v < best; ++v)
      if (mono_exp(m, v)) {
        best = v;
        break;
      }
  return best;
}

Elt MPoly::coeff(Mono m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void MPoly::add_term(Mono m, Elt c) {
  if (!c) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second = f_->add(it->second, c);
    if (!it->second) terms_.erase(it);
  }
}

MPoly MPoly::operator+(const MPoly& o) const {
  const Field* f = f_ ? f_ : o.f_;
  if (f_ && o.f_ && f_ != o.f_) fail(ErrorKind::FieldMismatch, "polynomials over different fields");
  MPoly r = *this;
  r.f_ = f;
  for (auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator-() const {
  MPoly r(*f_);
  for (auto& [m, c] : terms_) r.terms_.emplace(m, f_->neg(c));
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  if (f_ && o.f_ && f_ != o.f_) fail(ErrorKind::FieldMismatch, "polynomials over different fields");
  const Field* f = f_ ? f_ : o.f_;
  MPoly r(*f);
  for (auto& [ma, ca] : terms_)
    for (auto& [mb, cb] : o.terms_) r.add_term(ma + mb, f->mul(ca, cb));
  return r;
}

MPoly MPoly::scaled(Elt s) const {
  MPoly r(*f_);
  if (!s) return r;
  for (auto& [m, c] : terms_) r.terms_.emplace(m, f_->mul(c, s));
  return r;
}

MPoly MPoly::shifted(Mono mono, Elt s) const {
  MPoly r(*f_);
  if (!s) return r;
  for (auto& [m, c] : terms_) r.terms_.emplace(m + mono, f_->mul(c, s));
  return r;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly r = constant(*f_, 1);
  MPoly b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

MPoly MPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(f_->inv(lead_coeff()));
}

MPoly MPoly::derivative(int v) const {
  MPoly r(*f_);
  for (auto& [m, c] : terms_) {
    int e = mono_exp(m, v);
    if (!e) continue;
    r.add_term(m - mono_var(v), f_->mul(c, f_->from_int(e)));
  }
  return r;
}

MPoly MPoly::substitute(int v, const MPoly& value) const {
  MPoly r(*f_);
  int maxe = degree_in(v);
  std::vector<MPoly> powers;
  powers.push_back(constant(*f_, 1));
  for (int e = 1; e <= maxe; ++e) powers.push_back(powers.back() * value);
  for (auto& [m, c] : terms_) {
    int e = mono_exp(m, v);
    Mono rest = m - Mono(e) * mono_var(v);
    r = r + powers[e].shifted(rest, c);
  }
  return r;
}

Elt MPoly::eval(std::span<const Elt> pt) const {
  Elt s = 0;
  for (auto& [m, c] : terms_) {
    Elt v = c;
    for (int i = 0; i < 4; ++i) {
      int e = mono_exp(m, i);
      if (e) v = f_->mul(v, f_->pow(pt[i], e));
    }
    s = f_->add(s, v);
  }
  return s;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto& [m, c] : terms_) {
    std::string coef = f_->format(c);
    if (coef.find('+') != std::string::npos) coef = "(" + coef + ")";
    if (!out.empty()) out += " + ";
    if (m == 0)
      out += coef;
    else if (c == 1)
      out += mono_str(m);
    else
      out += coef + "*" + mono_str(m);
  }
  return out;
}

Elt eval_embedded(const MPoly& p, const Embedding& emb, std::span<const Elt> pt) {
  const Field& E = emb.to();
  Elt s = 0;
  for (auto& [m, c] : p.terms()) {
    Elt v = emb(c);
    for (int i = 0; i < 4; ++i) {
      int e = mono_exp(m, i);
      if (e) v = E.mul(v, E.pow(pt[i], e));
    }
    s = E.add(s, v);
  }
  return s;
}

// ------------------------------------------------------------------ parser

namespace {

class Parser {
public:
  Parser(const Field& f, std::string_view s, const NameResolver& r) : f_(f), s_(s), resolve_(r) {}

  MPoly parse_all() {
    MPoly p = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

private:
  [[noreturn]] void error(const std::string& msg) {
    fail(ErrorKind::ParseError, msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool starts_atom() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  MPoly expr() {
    MPoly p = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        p = p + term();
      } else if (peek('-')) {
        ++pos_;
        p = p - term();
      } else {
        return p;
      }
    }
  }

  MPoly term() {
    MPoly p = unary();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        p = p * unary();
      } else if (starts_atom()) {
        p = p * power();
      } else {
        return p;
      }
    }
  }

  MPoly unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  MPoly power() {
    MPoly base = atom();
    if (peek('^')) {
      ++pos_;
      skip();
      std::size_t start = pos_;
      unsigned long e = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        e = e * 10 + static_cast<unsigned long>(s_[pos_] - '0');
        if (e > 1000000) error("exponent too large");
        ++pos_;
      }
      if (pos_ == start) error("expected exponent");
      if (e > 255 && !base.is_constant()) error("exponent too large");
      if (base.is_constant()) return MPoly::constant(f_, f_.pow(base.coeff(0), e));
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  MPoly atom() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly p = expr();
      if (!peek(')')) error("expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Elt v = 0;
      std::uint64_t p = f_.p();
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        v = (v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0')) % p;
        ++pos_;
      }
      return MPoly::constant(f_, v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      if (name.size() == 1) {
        switch (name[0]) {
          case 'x': return MPoly::var(f_, 0);
          case 'y': return MPoly::var(f_, 1);
          case 'z': return MPoly::var(f_, 2);
          case 't': return MPoly::var(f_, 3);
          case 'g':
            if (f_.k() == 1) error("no generator symbol in a prime field");
            return MPoly::constant(f_, f_.gen());
          default: break;
        }
      }
      if (resolve_) {
        if (auto p = resolve_(name)) return *p;
      }
      pos_ = start;
      error("unknown name '" + std::string(name) + "'");
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  const Field& f_;
  std::string_view s_;
  const NameResolver& resolve_;
  std::size_t pos_ = 0;
};

} // namespace

MPoly parse_polynomial(const Field& f, std::string_view text, const NameResolver& resolve) {
  return Parser(f, text, resolve).parse_all();
}

Elt Field::parse(std::string_view text) const {
  MPoly p = parse_polynomial(*this, text);
  if (!p.is_constant()) fail(ErrorKind::ParseError, "field element expected, got '" + std::string(text) + "'");
  return p.coeff(0);
}

} // namespace symcubic
