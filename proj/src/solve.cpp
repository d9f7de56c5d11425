#include "symcubic/solve.hpp"

#include <algorithm>

namespace symcubic {

namespace {

MPoly reduce(MPoly p, const std::vector<MPoly>& basis) {
  MPoly r(p.field());
  while (!p.is_zero()) {
    Mono m = p.lead_mono();
    Elt c = p.lead_coeff();
    const MPoly* div = nullptr;
    for (auto& g : basis)
      if (mono_divides(g.lead_mono(), m)) {
        div = &g;
        break;
      }
    if (div) {
      // basis elements are monic
      p = p - div->shifted(m - div->lead_mono(), c);
    } else {
      r.add_term(m, c);
      p.add_term(m, p.field().neg(c));
    }
  }
  return r;
}

MPoly spoly(const MPoly& a, const MPoly& b) {
  Mono l = mono_lcm(a.lead_mono(), b.lead_mono());
  return a.shifted(l - a.lead_mono(), 1) - b.shifted(l - b.lead_mono(), 1);
}

} // namespace

std::vector<MPoly> groebner_lex(const std::vector<MPoly>& gens) {
  std::vector<MPoly> g;
  for (auto& p : gens)
    if (!p.is_zero()) g.push_back(p.monic());
  if (g.empty()) return g;
  const Field& f = g.front().field();
  for (auto& p : g)
    if (p.lead_mono() == 0) return {MPoly::constant(f, 1)};

  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < static_cast<int>(g.size()); ++i)
    for (int j = 0; j < i; ++j) pairs.emplace_back(j, i);

  while (!pairs.empty()) {
    // normal strategy: smallest lcm first
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](auto& a, auto& b) {
      return mono_lcm(g[a.first].lead_mono(), g[a.second].lead_mono()) <
             mono_lcm(g[b.first].lead_mono(), g[b.second].lead_mono());
    });
    auto [i, j] = *best;
    pairs.erase(best);
    Mono li = g[i].lead_mono(), lj = g[j].lead_mono();
    if (mono_lcm(li, lj) == li + lj) continue;  // coprime leads
    MPoly r = reduce(spoly(g[i], g[j]), g);
    if (r.is_zero()) continue;
    r = r.monic();
    if (r.lead_mono() == 0) return {MPoly::constant(f, 1)};
    int k = static_cast<int>(g.size());
    g.push_back(std::move(r));
    for (int a = 0; a < k; ++a) pairs.emplace_back(a, k);
  }

  // minimalize, then interreduce
  std::vector<MPoly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      if (mono_divides(g[j].lead_mono(), g[i].lead_mono()) &&
          (g[j].lead_mono() != g[i].lead_mono() || j < i))
        redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<MPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(reduce(minimal[i], others).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [](const MPoly& a, const MPoly& b) { return a.lead_mono() < b.lead_mono(); });
  return reduced;
}

ZeroSolver::ZeroSolver(const std::vector<MPoly>& eqs, int nvars) : nvars_(nvars) {
  if (eqs.empty()) fail(ErrorKind::InvalidArgument, "empty system");
  base_ = &eqs.front().field();
  const Field& f = *base_;
  for (int lead = 0; lead < nvars; ++lead) {
    std::vector<MPoly> dehom;
    for (auto& e : eqs) {
      MPoly p = e;
      for (int v = 0; v < lead; ++v) p = p.substitute(v, MPoly(f));
      p = p.substitute(lead, MPoly::constant(f, 1));
      dehom.push_back(std::move(p));
    }
    charts_.push_back({lead, groebner_lex(dehom)});
  }
}

bool ZeroSolver::empty() const {
  for (auto& c : charts_) {
    bool unit = c.basis.size() == 1 && c.basis.front().lead_mono() == 0;
    bool zero_ideal = c.basis.empty();
    if (!unit || zero_ideal) return false;
  }
  return true;
}

namespace {

struct Backsolve {
  const Embedding& emb;
  const std::vector<MPoly>& basis;
  int lead;
  int nvars;
  std::uint64_t& budget;
  std::vector<Elt> pt;
  std::vector<std::vector<Elt>>& out;

  Poly specialize(const MPoly& g, int v) {
    const Field& E = emb.to();
    std::vector<Elt> coeffs(static_cast<std::size_t>(g.degree_in(v)) + 1, 0);
    for (auto& [m, c] : g.terms()) {
      Elt val = emb(c);
      for (int w = v + 1; w < nvars; ++w) {
        int e = mono_exp(m, w);
        if (e) val = E.mul(val, E.pow(pt[w], e));
      }
      int e = mono_exp(m, v);
      coeffs[e] = E.add(coeffs[e], val);
    }
    return Poly(E, std::move(coeffs));
  }

  void run(int v) {
    if (v == lead) {
      out.push_back(pt);
      return;
    }
    const Field& E = emb.to();
    Poly acc(E);
    bool constrained = false;
    for (auto& g : basis) {
      if (g.leading_var() != v) continue;
      Poly s = specialize(g, v);
      if (s.is_zero()) continue;
      constrained = true;
      acc = acc.is_zero() ? s : gcd(acc, s);
      if (acc.deg() == 0) return;
    }
    if (constrained) {
      for (Elt r : distinct_roots(acc)) {
        pt[v] = r;
        run(v - 1);
      }
      return;
    }
    if (budget < E.size()) fail(ErrorKind::SearchTooLarge, "positive-dimensional zero set over " + E.name());
    budget -= E.size();
    for (std::uint64_t key = 0; key < E.size(); ++key) {
      pt[v] = E.from_key(key);
      run(v - 1);
    }
  }
};

} // namespace

std::vector<std::vector<Elt>> ZeroSolver::zeros(const Field& ext, std::uint64_t& budget) const {
  const Embedding& emb = embedding(*base_, ext);
  std::vector<std::vector<Elt>> out;
  for (auto& c : charts_) {
    if (c.basis.size() == 1 && c.basis.front().lead_mono() == 0) continue;
    std::vector<Elt> pt(4, 0);
    pt[static_cast<std::size_t>(c.lead)] = 1;
    Backsolve bs{emb, c.basis, c.lead, nvars_, budget, pt, out};
    bs.run(nvars_ - 1);
  }
  for (auto& p : out) p.resize(nvars_);
  return out;
}

AffineSolver::AffineSolver(const Field& f, const std::vector<MPoly>& eqs, int nvars)
    : base_(&f), nvars_(nvars), basis_(groebner_lex(eqs)) {}

bool AffineSolver::inconsistent() const { return basis_.size() == 1 && basis_.front().lead_mono() == 0; }

std::vector<std::vector<Elt>> AffineSolver::zeros(const Field& ext, std::uint64_t& budget) const {
  std::vector<std::vector<Elt>> out;
  if (inconsistent()) return out;
  const Embedding& emb = embedding(*base_, ext);
  std::vector<Elt> pt(4, 0);
  Backsolve bs{emb, basis_, -1, nvars_, budget, pt, out};
  bs.run(nvars_ - 1);
  for (auto& p : out) p.resize(static_cast<std::size_t>(nvars_));
  return out;
}

} // namespace symcubic
