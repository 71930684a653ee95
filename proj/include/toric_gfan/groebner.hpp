#pragma once

// Buchberger's algorithm, normal forms, ideals with a memoized canonical
// basis, weight initial ideals (min convention), saturation and dimension.

#include "toric_gfan/polynomial.hpp"

#include <memory>
#include <mutex>
#include <set>

namespace toric_gfan {

namespace detail {

struct Term {
  Exponent e;
  Rational c;
};

// Ascending in the monomial order; the leading term is back().
using TermList = std::vector<Term>;

inline TermList to_terms(const Polynomial& f, const MonomialOrder& order) {
  TermList t;
  t.reserve(f.size());
  for (const auto& [e, c] : f.terms()) t.push_back({e, c});
  std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return order.less(a.e, b.e); });
  return t;
}

inline Polynomial from_terms(const Field& field, std::size_t nvars, const TermList& t) {
  Polynomial p(field, nvars);
  for (const auto& x : t) p.add_term(x.e, x.c);
  return p;
}

/// a - c * x^m * b
inline TermList sub_scaled(const TermList& a, const Rational& c, const Exponent& m, const TermList& b,
                           const MonomialOrder& order, const Field& field) {
  TermList out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  Exponent shifted;
  while (i < a.size() || j < b.size()) {
    if (j < b.size()) shifted = b[j].e + m;
    int cmp = i == a.size() ? 1 : j == b.size() ? -1 : order.compare(a[i].e, shifted);
    if (cmp < 0) {
      out.push_back(a[i++]);
    } else if (cmp > 0) {
      out.push_back({shifted, field.neg(field.mul(c, b[j].c))});
      ++j;
    } else {
      Rational v = field.sub(a[i].c, field.mul(c, b[j].c));
      if (v != 0) out.push_back({a[i].e, v});
      ++i;
      ++j;
    }
  }
  return out;
}

inline void make_monic(TermList& t, const Field& field) {
  if (t.empty()) return;
  Rational inv = field.inv(t.back().c);
  for (auto& x : t) x.c = field.mul(x.c, inv);
}

/// Full reduction of f by monic `basis`, skipping index `skip`.
inline TermList reduce(TermList f, const std::vector<TermList>& basis, const MonomialOrder& order,
                       const Field& field, std::size_t skip = static_cast<std::size_t>(-1)) {
  TermList rem;  // collected in descending order
  while (!f.empty()) {
    const Term lt = f.back();
    const TermList* divisor = nullptr;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == skip || basis[k].empty()) continue;
      if (divides(basis[k].back().e, lt.e)) {
        divisor = &basis[k];
        break;
      }
    }
    if (divisor) {
      f = sub_scaled(f, lt.c, lt.e - divisor->back().e, *divisor, order, field);
    } else {
      rem.push_back(lt);
      f.pop_back();
    }
  }
  std::reverse(rem.begin(), rem.end());
  return rem;
}

inline bool is_unit_terms(const TermList& t) { return t.size() == 1 && total_degree(t.back().e) == 0; }

}  // namespace detail

/// Reduced Groebner basis: monic, interreduced, sorted by increasing leading
/// monomial. The zero ideal gives the empty list.
inline std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
  using namespace detail;
  if (gens.empty()) return {};
  const Field field = gens.front().field();
  const std::size_t nvars = gens.front().num_vars();
  for (const auto& g : gens)
    if (!(g.field() == field) || g.num_vars() != nvars) throw AlgebraError("buchberger: generators in different rings");

  std::vector<TermList> G;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto unit_basis = [&] { return std::vector<Polynomial>{Polynomial::constant(field, nvars, 1)}; };

  auto insert = [&](TermList t) {
    make_monic(t, field);
    const std::size_t id = G.size();
    G.push_back(std::move(t));
    for (std::size_t k = 0; k < id; ++k)
      if (!G[k].empty()) pending.insert({k, id});
  };

  for (const auto& g : gens) {
    TermList t = reduce(to_terms(g, order), G, order, field);
    if (t.empty()) continue;
    if (is_unit_terms(t)) return unit_basis();
    insert(std::move(t));
  }

  while (!pending.empty()) {
    // Normal strategy: the pair with the smallest lcm.
    auto best = pending.begin();
    Exponent best_lcm = lcm(G[best->first].back().e, G[best->second].back().e);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Exponent l = lcm(G[it->first].back().e, G[it->second].back().e);
      if (order.less(l, best_lcm)) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    const auto [i, j] = *best;
    pending.erase(best);
    const Exponent& ei = G[i].back().e;
    const Exponent& ej = G[j].back().e;
    if (coprime(ei, ej)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == i || k == j || G[k].empty()) continue;
      if (!divides(G[k].back().e, best_lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      chain = !pending.count(key(i, k)) && !pending.count(key(j, k));
    }
    if (chain) continue;
    TermList s = sub_scaled(TermList{}, Rational(-1), best_lcm - ei, G[i], order, field);
    s = sub_scaled(s, Rational(1), best_lcm - ej, G[j], order, field);
    s = reduce(std::move(s), G, order, field);
    if (s.empty()) continue;
    if (is_unit_terms(s)) return unit_basis();
    insert(std::move(s));
  }

  // Minimalize, then interreduce.
  std::vector<TermList> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < G.size() && !redundant; ++k) {
      if (k == i) continue;
      if (divides(G[k].back().e, G[i].back().e) && (G[k].back().e != G[i].back().e || k < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    Term lt = minimal[i].back();
    TermList tail(minimal[i].begin(), minimal[i].end() - 1);
    tail = reduce(std::move(tail), minimal, order, field, i);
    tail.push_back(lt);
    minimal[i] = std::move(tail);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const TermList& a, const TermList& b) { return order.less(a.back().e, b.back().e); });
  std::vector<Polynomial> out;
  for (const auto& t : minimal) out.push_back(from_terms(field, nvars, t));
  return out;
}

/// Remainder of f on division by the Groebner basis `gb` (for `order`).
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& gb,
                              const MonomialOrder& order = MonomialOrder::grevlex()) {
  using namespace detail;
  std::vector<TermList> basis;
  for (const auto& g : gb) {
    TermList t = to_terms(g, order);
    make_monic(t, f.field());
    basis.push_back(std::move(t));
  }
  return from_terms(f.field(), f.num_vars(), reduce(to_terms(f, order), basis, order, f.field()));
}

inline Exponent leading_exponent(const Polynomial& f, const MonomialOrder& order = MonomialOrder::grevlex()) {
  if (f.is_zero()) throw AlgebraError("leading_exponent: zero polynomial");
  const Exponent* best = nullptr;
  for (const auto& [e, c] : f.terms())
    if (!best || order.less(*best, e)) best = &e;
  return *best;
}

// ---------------------------------------------------------------------------

/// An ideal given by generators; its reduced grevlex basis is computed once
/// and shared between copies.
class Ideal {
 public:
  Ideal() = default;

  Ideal(Field field, std::size_t num_vars, std::vector<Polynomial> gens)
      : field_(std::move(field)), nvars_(num_vars), memo_(std::make_shared<Memo>()) {
    for (auto& g : gens) {
      if (!(g.field() == field_) || g.num_vars() != nvars_) throw AlgebraError("Ideal: generator in a different ring");
      if (!g.is_zero()) gens_.push_back(std::move(g));
    }
  }

  static Ideal unit(const Field& field, std::size_t num_vars) {
    return Ideal(field, num_vars, {Polynomial::constant(field, num_vars, 1)});
  }

  static Ideal zero(const Field& field, std::size_t num_vars) { return Ideal(field, num_vars, {}); }

  const Field& field() const { return field_; }
  std::size_t num_vars() const { return nvars_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  const std::vector<Polynomial>& groebner_basis() const {
    std::lock_guard lock(memo_->mutex);
    if (!memo_->basis) memo_->basis = buchberger(gens_, MonomialOrder::grevlex());
    return *memo_->basis;
  }

  bool is_zero() const { return groebner_basis().empty(); }

  bool is_unit() const {
    const auto& gb = groebner_basis();
    return gb.size() == 1 && gb.front().is_constant();
  }

  bool contains(const Polynomial& f) const { return normal_form(f, groebner_basis()).is_zero(); }

  bool contains(const Ideal& other) const {
    return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Polynomial& f) { return contains(f); });
  }

  Ideal operator+(const Ideal& other) const {
    auto g = gens_;
    g.insert(g.end(), other.gens_.begin(), other.gens_.end());
    return Ideal(field_, nvars_, std::move(g));
  }

  /// The ideal with its reduced grevlex basis as generators.
  Ideal canonical() const { return Ideal(field_, nvars_, groebner_basis()); }

  /// A string identifying the ideal (its reduced basis).
  std::string key(const std::string& var = "y") const {
    std::string s;
    for (const auto& g : groebner_basis()) {
      if (!s.empty()) s += ", ";
      s += g.to_string(var);
    }
    return "(" + s + ")";
  }

  std::string to_string(const std::string& var = "y") const {
    std::string s;
    for (const auto& g : gens_) {
      if (!s.empty()) s += ", ";
      s += g.to_string(var);
    }
    return "(" + s + ")";
  }

 private:
  struct Memo {
    std::mutex mutex;
    std::optional<std::vector<Polynomial>> basis;
  };

  Field field_;
  std::size_t nvars_ = 0;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Memo> memo_ = std::make_shared<Memo>();
};

inline bool ideal_equal(const Ideal& a, const Ideal& b) {
  if (!(a.field() == b.field()) || a.num_vars() != b.num_vars()) throw AlgebraError("ideal_equal: different rings");
  return a.groebner_basis() == b.groebner_basis();
}

inline bool operator==(const Ideal& a, const Ideal& b) { return ideal_equal(a, b); }

// ---------------------------------------------------------------------------
// Weight orders

/// A weight vector (min convention) with optional tie-breaking weight levels
/// compared in turn; remaining ties are broken by grevlex.
struct WeightOrder {
  std::vector<long> weight;
  std::vector<std::vector<long>> perturbation;

  std::vector<std::vector<long>> levels() const {
    std::vector<std::vector<long>> l{weight};
    l.insert(l.end(), perturbation.begin(), perturbation.end());
    return l;
  }
};

/// A Groebner basis element together with its initial form for the full
/// weight order (the terms tied with the leading term on every level).
struct WeightedElement {
  Polynomial element;
  Polynomial initial;
};

/// Reduced Groebner basis of the homogenization of I for the order
/// "degree, then smaller weight first (level by level), then grevlex",
/// dehomogenized, with the initial form of each element.
inline std::vector<WeightedElement> weighted_groebner_basis(const Ideal& I, const WeightOrder& w) {
  const std::size_t s = I.num_vars();
  for (const auto& level : w.levels())
    if (level.size() != s) throw AlgebraError("weight vector length does not match the number of variables");
  std::vector<std::vector<long>> order_levels{std::vector<long>(s + 1, 1)};
  for (const auto& level : w.levels()) {
    std::vector<long> neg(s + 1, 0);
    for (std::size_t i = 0; i < s; ++i) neg[i] = -level[i];
    order_levels.push_back(std::move(neg));
  }
  const auto order = MonomialOrder::weighted(order_levels);
  std::vector<Polynomial> hom;
  for (const auto& g : I.groebner_basis()) hom.push_back(g.homogenized());
  std::vector<WeightedElement> out;
  for (const auto& g : buchberger(hom, order)) {
    const Exponent lead = leading_exponent(g, order);
    Polynomial init(g.field(), s + 1);
    for (const auto& [e, c] : g.terms()) {
      bool tied = true;
      for (const auto& level : w.levels())
        if (weight_of(level, e) != weight_of(level, lead)) {
          tied = false;
          break;
        }
      if (tied) init.add_term(e, c);
    }
    out.push_back({g.dehomogenized(), init.dehomogenized()});
  }
  return out;
}

/// in_w(I) = (in_w(f) : f in I), minimal-weight parts.
inline Ideal initial_ideal(const Ideal& I, const WeightOrder& w) {
  for (long x : w.weight)
    if (x < 0) throw AlgebraError("initial_ideal: negative weight entry");
  if (w.weight.size() != I.num_vars()) throw AlgebraError("initial_ideal: weight length mismatch");
  if (I.is_zero() || I.is_unit()) return I.canonical();
  std::vector<Polynomial> forms;
  for (auto& x : weighted_groebner_basis(I, w)) forms.push_back(std::move(x.initial));
  return Ideal(I.field(), I.num_vars(), std::move(forms)).canonical();
}

inline Ideal initial_ideal(const Ideal& I, const std::vector<long>& w) { return initial_ideal(I, WeightOrder{w, {}}); }

// ---------------------------------------------------------------------------

/// I : y_i^infinity, by elimination of z from I + (1 - z y_i).
inline Ideal saturate_variable(const Ideal& I, std::size_t i) {
  const std::size_t s = I.num_vars();
  if (I.is_zero() || I.is_unit()) return I.canonical();
  std::vector<Polynomial> gens;
  for (const auto& g : I.groebner_basis()) gens.push_back(g.with_extra_variables(1));
  Exponent zy(s + 1, 0);
  zy[i] = 1;
  zy[s] = 1;
  gens.push_back(Polynomial::constant(I.field(), s + 1, 1) - Polynomial::monomial(I.field(), zy));
  std::vector<long> ez(s + 1, 0);
  ez[s] = 1;
  std::vector<Polynomial> kept;
  for (const auto& g : buchberger(gens, MonomialOrder::weighted({ez}))) {
    bool free_of_z = std::all_of(g.terms().begin(), g.terms().end(), [&](const auto& t) { return t.first[s] == 0; });
    if (free_of_z) kept.push_back(g.truncated_variables(s));
  }
  return Ideal(I.field(), s, std::move(kept)).canonical();
}

/// I : m^infinity for a monomial m (given by its exponent).
inline Ideal saturate(const Ideal& I, const Exponent& m) {
  if (m.size() != I.num_vars()) throw AlgebraError("saturate: monomial in a different ring");
  Ideal J = I.canonical();
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 0) throw AlgebraError("saturate: negative exponent");
    if (m[i] > 0) J = saturate_variable(J, i);
  }
  return J;
}

inline Ideal saturate(const Ideal& I, const Polynomial& m) {
  if (!m.is_monomial()) throw AlgebraError("saturate: not a monomial");
  return saturate(I, m.terms().begin()->first);
}

/// Saturation by the product of all variables.
inline Ideal saturate_torus(const Ideal& I) { return saturate(I, Exponent(I.num_vars(), 1)); }

/// Dimension of V(I); -1 for the unit ideal.
inline long krull_dimension(const Ideal& I) {
  if (I.is_unit()) return -1;
  std::vector<Exponent> leads;
  for (const auto& g : I.groebner_basis()) leads.push_back(leading_exponent(g));
  const std::size_t s = I.num_vars();
  for (std::size_t k = s + 1; k-- > 0;) {
    bool found = false;
    detail::for_each_subset(s, k, [&](const std::vector<std::size_t>& subset) {
      if (found) return;
      std::vector<bool> in(s, false);
      for (auto i : subset) in[i] = true;
      for (const auto& e : leads) {
        bool inside = true;
        for (std::size_t i = 0; i < s; ++i)
          if (e[i] > 0 && !in[i]) inside = false;
        if (inside) return;
      }
      found = true;
    });
    if (found) return static_cast<long>(k);
  }
  return -1;
}

}  // namespace toric_gfan
