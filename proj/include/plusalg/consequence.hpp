#pragma once

// Direct T-ideal closure inside the monomial coordinates of one component.
//
// T(V)_e for e <= d is spanned by substitution instances of multidegree e
// together with r*m and m*r for r in T(V)_{e1}, e1 < e, and m a monomial of
// multidegree e - e1. Components are closed in increasing order, so every
// product of a consequence with a monomial is reached one factor at a time.
//
// This route materializes the monomial coordinates and is meant for small
// components; the quotient tower handles the large ones.

#include "plusalg/linalg.hpp"
#include "plusalg/tower.hpp"
#include "plusalg/variety.hpp"

#include <unordered_set>

namespace plusalg {

template <class F>
struct ConsequenceRow {
  Polynomial<F> poly;
  std::string provenance;
};

namespace detail {

inline std::string substitute_code(const std::string& code, const std::vector<Monomial>& subs) {
  std::string out;
  for (char c : code) {
    int v = static_cast<unsigned char>(c);
    if (v == 0) {
      out.push_back('\0');
    } else {
      out += subs[static_cast<std::size_t>(v - 1)].code();
    }
  }
  return out;
}

template <class F>
Polynomial<F> substitute(const Polynomial<F>& p, const std::vector<Monomial>& subs) {
  Polynomial<F> out(p.flavor(), p.field());
  for (const auto& [m, c] : p.terms()) {
    out.add_term(Monomial::from_code(substitute_code(m.code(), subs), p.flavor()), c);
  }
  return out;
}

inline std::string join_monomials(const std::vector<Monomial>& ms) {
  std::string s;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (i) s += ", ";
    s += ms[i].to_string();
  }
  return s;
}

}  // namespace detail

/// All f(m_1, ..., m_k) of multidegree <= d, where the m_i are monomials and
/// f runs over the partial linearizations of each multihomogeneous component
/// of f. Slots of one variable with equal exponent take strictly increasing
/// monomials; equal monomials there are covered by the coarser linearization.
template <class F>
std::vector<ConsequenceRow<F>> substitution_instances(const Polynomial<F>& f, const Multidegree& d,
                                                      const std::string& label = "f") {
  std::vector<ConsequenceRow<F>> out;
  if (f.is_zero()) return out;
  for (const auto& [deg, g] : f.components()) {
    if (deg.total() > d.total()) {
      throw Error("target degree " + std::to_string(d.total()) + " is below the identity degree " +
                  std::to_string(deg.total()));
    }
  }
  std::vector<Monomial> pool;
  std::vector<Multidegree> pool_deg;
  for (const auto& e : d.sub_degrees()) {
    for (auto& m : enumerate_monomials(e, f.flavor())) {
      pool.push_back(std::move(m));
      pool_deg.push_back(e);
    }
  }
  for (const auto& [deg, g] : f.components()) {
    auto rules = linearizations(g);
    for (const auto& rule : rules) {
      const std::size_t S = rule.slot_exp.size();
      std::vector<std::size_t> pick(S);
      std::vector<Monomial> subs(S);
      std::string tag = label;
      if (rules.size() > 1) {
        tag += "[";
        for (std::size_t s = 0; s < S; ++s) {
          if (s) tag += ",";
          tag += "t" + std::to_string(rule.slot_var[s]) + "^" + std::to_string(rule.slot_exp[s]);
        }
        tag += "]";
      }
      std::function<void(std::size_t, const Multidegree&)> rec = [&](std::size_t s, const Multidegree& used) {
        if (s == S) {
          auto p = detail::substitute(rule.poly, subs);
          if (!p.is_zero()) out.push_back({std::move(p), tag + "(" + detail::join_monomials(subs) + ")"});
          return;
        }
        std::size_t start = 0;
        if (s > 0 && rule.slot_var[s] == rule.slot_var[s - 1] && rule.slot_exp[s] == rule.slot_exp[s - 1]) {
          start = pick[s - 1] + 1;
        }
        for (std::size_t i = start; i < pool.size(); ++i) {
          Multidegree next = used + pool_deg[i].scaled(rule.slot_exp[s]);
          if (!next.leq(d)) continue;
          pick[s] = i;
          subs[s] = pool[i];
          rec(s + 1, next);
        }
      };
      rec(0, Multidegree());
    }
  }
  return out;
}

/// Consequences of a variety at one multidegree, in monomial coordinates.
template <class F>
struct ConsequenceSpan {
  explicit ConsequenceSpan(const F& field) : basis{field, 0, {}, {}, {}} {}

  Multidegree degree;
  Flavor flavor = Flavor::Planar;
  std::vector<Monomial> coords;
  std::map<Monomial, std::uint32_t> index;
  SpanBasis<F> basis;
  // Generators at the top multidegree, kept when provenance is requested.
  std::vector<Polynomial<F>> generators;
  std::vector<std::string> generator_desc;

  std::size_t rank() const { return basis.rank(); }
  std::size_t quotient_dim() const { return coords.size() - basis.rank(); }

  SparseVector<F> vectorize(const Polynomial<F>& p) const {
    std::vector<typename SparseVector<F>::Entry> es;
    for (const auto& [m, c] : p.terms()) {
      auto it = index.find(m);
      if (it == index.end()) throw Error("monomial " + m.to_string() + " outside component " + degree.to_string());
      es.emplace_back(it->second, c);
    }
    return SparseVector<F>::from_unsorted(std::move(es), basis.field);
  }

  Polynomial<F> polynomial(const SparseVector<F>& v) const {
    Polynomial<F> p(flavor, basis.field);
    for (const auto& [c, x] : v.entries) p.add_term(coords[c], x);
    return p;
  }
};

namespace detail {

// Normalized rows are hashed so that repeated instances are dropped early.
template <class F>
std::string row_key(const SparseVector<F>& v, const F& field) {
  std::string k;
  auto inv = field.inv(v.entries.front().second);
  for (const auto& [c, x] : v.entries) {
    k += std::to_string(c);
    k += ':';
    k += field.to_string(field.mul(x, inv));
    k += ' ';
  }
  return k;
}

}  // namespace detail

template <class F>
ConsequenceSpan<F> consequence_span(const Variety& V, const Multidegree& d, const F& field,
                                    bool track_provenance = false, int degree_cap = 8) {
  if (d.total() > degree_cap) {
    throw Error("multidegree " + d.to_string() + " exceeds the degree cap " + std::to_string(degree_cap));
  }
  auto ids = V.polynomials(field);
  std::map<Multidegree, std::vector<ConsequenceRow<F>>> inst;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    bool fits = false;
    for (const auto& [deg, g] : ids[i].components()) fits = fits || deg.total() <= d.total();
    if (!fits) continue;
    for (auto& row : substitution_instances(ids[i], d, "id" + std::to_string(i + 1))) {
      for (auto& [deg, comp] : row.poly.components()) inst[deg].push_back({std::move(comp), row.provenance});
    }
  }

  std::map<Multidegree, std::vector<Polynomial<F>>> lower;  // basis rows of T_e as polynomials
  std::optional<ConsequenceSpan<F>> top;
  for (const auto& e : d.sub_degrees()) {
    const bool is_top = (e == d);
    ConsequenceSpan<F> cur(field);
    cur.degree = e;
    cur.flavor = V.flavor;
    cur.coords = enumerate_monomials(e, V.flavor);
    for (std::uint32_t i = 0; i < cur.coords.size(); ++i) cur.index.emplace(cur.coords[i], i);

    std::vector<SparseVector<F>> rows;
    std::unordered_set<std::string> seen;
    auto push = [&](const Polynomial<F>& p, const std::string& desc) {
      if (p.is_zero()) return;
      auto v = cur.vectorize(p);
      if (!seen.insert(detail::row_key(v, field)).second) return;
      rows.push_back(std::move(v));
      if (is_top && track_provenance) {
        cur.generators.push_back(p);
        cur.generator_desc.push_back(desc);
      }
    };
    if (auto it = inst.find(e); it != inst.end()) {
      for (const auto& r : it->second) push(r.poly, r.provenance);
    }
    for (const auto& [e1, polys] : lower) {
      if (!e1.leq(e) || e1 == e || polys.empty()) continue;
      auto ms = enumerate_monomials(e - e1, V.flavor);
      for (std::size_t k = 0; k < polys.size(); ++k) {
        const auto& r = polys[k];
        for (const auto& m : ms) {
          auto pm = Polynomial<F>::monomial(m, field, field.one());
          std::string rname = "T" + e1.to_string() + "#" + std::to_string(k);
          push(r * pm, "(" + rname + ") " + m.to_string());
          if (V.flavor == Flavor::Planar) push(pm * r, m.to_string() + " (" + rname + ")");
        }
      }
    }
    cur.basis = track_provenance && is_top ? rref(field, cur.coords.size(), rows, true)
                                           : rref_fast(field, cur.coords.size(), rows);
    if (is_top) {
      top = std::move(cur);
    } else {
      auto& out = lower[e];
      for (const auto& row : cur.basis.rows) out.push_back(cur.polynomial(row));
    }
  }
  return std::move(*top);
}

template <class F>
std::size_t quotient_dim(const Variety& V, const Multidegree& d, const F& field) {
  return consequence_span(V, d, field).quotient_dim();
}

}  // namespace plusalg
