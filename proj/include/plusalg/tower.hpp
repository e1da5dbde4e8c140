#pragma once

// Relatively free algebra F/T of a variety, built one multihomogeneous
// component at a time.
//
// For a multidegree e the columns are the products u*v of basis elements of
// lower components with deg u + deg v = e. The component A_e is the quotient
// of that column space by the identity instances whose outermost product is
// the root: f(u_1, ..., u_k) with each u_i a basis element of some lower
// component (partial linearizations cover repeated variables). Relations
// nested below the root are already zero because lower components are
// quotients. A_e is therefore the component of F/T of multidegree e.
//
// Columns are ordered by decreasing monomial code, so the surviving normal
// monomials are the lexicographically smallest ones. Every column stores its
// normal form in the basis of A_e.

#include "plusalg/eval.hpp"
#include "plusalg/linalg.hpp"
#include "plusalg/monomial.hpp"
#include "plusalg/polynomial.hpp"

#include <atomic>
#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <thread>
#include <vector>

namespace plusalg {

/// Partial linearization of a multihomogeneous identity: variable v of
/// multiplicity k is replaced by slots y_1..y_r of exponents a_1 >= ... >= a_r
/// summing to k, and the component of degree a_j in each y_j is kept.
template <class F>
struct LinearizedRule {
  std::vector<int> slot_exp;
  std::vector<int> slot_var;
  Polynomial<F> poly;  // in slot variables t1..tS
};

namespace detail {

inline void partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions(n, n, cur, out);
  return out;
}

}  // namespace detail

/// All partial linearizations of a multihomogeneous polynomial.
template <class F>
std::vector<LinearizedRule<F>> linearizations(const Polynomial<F>& g) {
  Multidegree delta = g.multidegree();
  std::vector<int> vars;
  std::vector<std::vector<std::vector<int>>> choices;
  for (int v = 1; v <= delta.size(); ++v) {
    if (delta.of_var(v) == 0) continue;
    vars.push_back(v);
    choices.push_back(detail::partitions(delta.of_var(v)));
  }
  std::vector<LinearizedRule<F>> rules;
  std::vector<std::size_t> pick(vars.size(), 0);
  while (true) {
    LinearizedRule<F> rule{{}, {}, Polynomial<F>(g.flavor(), g.field())};
    // first slot id of each variable
    std::map<int, std::vector<int>> slot_ids;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      for (int a : choices[i][pick[i]]) {
        rule.slot_exp.push_back(a);
        rule.slot_var.push_back(vars[i]);
        slot_ids[vars[i]].push_back(static_cast<int>(rule.slot_exp.size()));
      }
    }
    for (const auto& [m, c] : g.terms()) {
      // positions of each variable's leaves
      std::map<int, std::vector<std::size_t>> occ;
      for (std::size_t i = 0; i < m.code().size(); ++i) {
        int v = static_cast<unsigned char>(m.code()[i]);
        if (v) occ[v].push_back(i);
      }
      // labels per variable: slot id repeated by its exponent
      std::vector<std::vector<int>> labels;
      std::vector<int> order;
      for (int v : vars) {
        std::vector<int> lab;
        const auto& ids = slot_ids[v];
        for (int id : ids) {
          for (int r = 0; r < rule.slot_exp[static_cast<std::size_t>(id - 1)]; ++r) lab.push_back(id);
        }
        std::sort(lab.begin(), lab.end());
        labels.push_back(std::move(lab));
        order.push_back(v);
      }
      std::function<void(std::size_t, std::string&)> rec = [&](std::size_t vi, std::string& code) {
        if (vi == order.size()) {
          rule.poly.add_term(Monomial::from_code(code, g.flavor()), c);
          return;
        }
        auto lab = labels[vi];
        const auto& pos = occ[order[vi]];
        do {
          for (std::size_t k = 0; k < pos.size(); ++k) code[pos[k]] = static_cast<char>(lab[k]);
          rec(vi + 1, code);
        } while (std::next_permutation(lab.begin(), lab.end()));
      };
      std::string code = m.code();
      rec(0, code);
    }
    if (!rule.poly.is_zero()) rules.push_back(std::move(rule));
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  return rules;
}

struct ComponentStats {
  Multidegree degree;
  std::size_t columns = 0;
  std::size_t dimension = 0;
  std::size_t relations = 0;
  double seconds = 0;
};

template <class F>
class QuotientTower {
 public:
  using value_type = typename F::value_type;
  using Vec = SparseVector<F>;
  using Element = std::map<Multidegree, Vec>;

  struct Block {
    Multidegree left, right;
    std::size_t dl = 0, dr = 0;
    bool triangular = false;
    std::vector<std::uint32_t> col;  // local index -> column
  };

  struct Component {
    Multidegree degree;
    std::size_t ncols = 0;
    std::vector<Block> blocks;
    std::map<std::pair<Multidegree, Multidegree>, std::size_t> block_of;
    std::vector<Monomial> columns;  // monomial of each column
    std::vector<Monomial> basis;    // normal monomials, increasing
    std::vector<Vec> nf;            // normal form of each column
    ComponentStats stats;

    std::size_t dim() const { return basis.size(); }
  };

  QuotientTower(Flavor flavor, F field, const std::vector<Polynomial<F>>& identities, int workers = 1,
                int degree_cap = 8)
      : flavor_(flavor), field_(std::move(field)), workers_(std::max(1, workers)), cap_(degree_cap) {
    for (const auto& id : identities) {
      if (id.flavor() != flavor_) throw Error("identity flavor does not match the tower");
      for (const auto& [d, g] : id.components()) {
        if (d.total() < 2) throw Error("identities must have degree at least 2");
        for (auto& r : linearizations(g)) rules_.push_back(std::move(r));
      }
    }
  }

  Flavor flavor() const { return flavor_; }
  const F& field() const { return field_; }
  int workers() const { return workers_; }

  /// Component of multidegree e, computed together with all components below it.
  const Component& component(const Multidegree& e) {
    if (auto it = comps_.find(e); it != comps_.end()) return *it->second;
    if (e.total() > cap_) {
      throw Error("multidegree " + e.to_string() + " exceeds the degree cap " + std::to_string(cap_));
    }
    for (const auto& s : e.sub_degrees()) {
      if (!comps_.count(s)) build(s);
    }
    return *comps_.at(e);
  }

  std::size_t dim(const Multidegree& e) { return component(e).dim(); }

  std::vector<ComponentStats> stats() const {
    std::vector<ComponentStats> out;
    for (const auto& [d, c] : comps_) out.push_back(c->stats);
    return out;
  }

  /// Product of x in A_{e1} and y in A_{e2}, as an element of A_{e1+e2}.
  Vec product(const Multidegree& e1, const Vec& x, const Multidegree& e2, const Vec& y) {
    const Component& C = component(e1 + e2);
    return product_in(C, e1, x, e2, y);
  }

  Element multiply(const Element& a, const Element& b) {
    Element out;
    for (const auto& [e1, x] : a) {
      for (const auto& [e2, y] : b) {
        Vec p = product(e1, x, e2, y);
        add_into(out, e1 + e2, p);
      }
    }
    return out;
  }

  Element add(const Element& a, const Element& b) const {
    Element out = a;
    for (const auto& [e, v] : b) add_into(out, e, v);
    return out;
  }

  Element scale(const Element& a, const value_type& c) const {
    Element out;
    if (field_.is_zero(c)) return out;
    for (const auto& [e, v] : a) {
      Vec w;
      for (const auto& [k, x] : v.entries) w.entries.emplace_back(k, field_.mul(x, c));
      out.emplace(e, std::move(w));
    }
    return out;
  }

  Element variable(int k) const {
    Element out;
    out.emplace(Multidegree::unit(k), Vec{{{0u, field_.one()}}});
    return out;
  }

  /// Normal form of a free-algebra monomial.
  Vec reduce(const Monomial& m) {
    std::size_t pos = 0;
    auto [d, v] = reduce_code(m.code(), pos);
    return v;
  }

  Element reduce(const Polynomial<F>& p) {
    Element out;
    for (const auto& [m, c] : p.terms()) {
      Vec v = reduce(m);
      for (auto& [k, x] : v.entries) x = field_.mul(x, c);
      add_into(out, m.multidegree(), v);
    }
    return out;
  }

  /// Renders a vector of A_e as a polynomial in normal monomials.
  Polynomial<F> to_polynomial(const Multidegree& e, const Vec& v) {
    const Component& C = component(e);
    Polynomial<F> p(flavor_, field_);
    for (const auto& [k, x] : v.entries) p.add_term(C.basis[k], x);
    return p;
  }

 private:
  void add_into(Element& out, const Multidegree& e, const Vec& v) const {
    if (v.empty()) return;
    auto it = out.find(e);
    if (it == out.end()) {
      out.emplace(e, v);
      return;
    }
    it->second = combine(field_, field_.one(), it->second, field_.one(), v);
    if (it->second.empty()) out.erase(it);
  }

  std::pair<Multidegree, Vec> reduce_code(const std::string& code, std::size_t& pos) {
    int v = static_cast<unsigned char>(code[pos++]);
    if (v != 0) return {Multidegree::unit(v), Vec{{{0u, field_.one()}}}};
    auto [dl, l] = reduce_code(code, pos);
    auto [dr, r] = reduce_code(code, pos);
    Multidegree d = dl + dr;
    Vec p = product(dl, l, dr, r);
    return {d, std::move(p)};
  }

  // Locates the column of basis pair (i in A_e1, j in A_e2).
  std::uint32_t column(const Component& C, const Multidegree& e1, std::uint32_t i, const Multidegree& e2,
                       std::uint32_t j) const {
    const Multidegree* l = &e1;
    const Multidegree* r = &e2;
    if (flavor_ == Flavor::Commutative) {
      if (e2 < e1) {
        std::swap(l, r);
        std::swap(i, j);
      } else if (e1 == e2 && j < i) {
        std::swap(i, j);
      }
    }
    auto it = C.block_of.find({*l, *r});
    if (it == C.block_of.end()) throw Error("internal: missing block in tower component");
    const Block& b = C.blocks[it->second];
    std::size_t local;
    if (b.triangular) {
      local = static_cast<std::size_t>(i) * b.dl - static_cast<std::size_t>(i) * (i - 1) / 2 + (j - i);
      if (i == 0) local = j;
    } else {
      local = static_cast<std::size_t>(i) * b.dr + j;
    }
    return b.col[local];
  }

  // Dense scratch space keyed by column or basis index.
  struct Scratch {
    std::vector<value_type> val;
    std::vector<char> used;
    std::vector<std::uint32_t> touched;

    void reset(std::size_t n, const F& field) {
      if (val.size() < n) {
        val.assign(n, field.zero());
        used.assign(n, 0);
      }
      touched.clear();
    }
    void add(std::uint32_t k, const value_type& x, const F& field) {
      if (!used[k]) {
        used[k] = 1;
        touched.push_back(k);
        val[k] = x;
      } else {
        val[k] = field.add(val[k], x);
      }
    }
    Vec take(const F& field) {
      std::sort(touched.begin(), touched.end());
      Vec out;
      for (auto k : touched) {
        used[k] = 0;
        if (!field.is_zero(val[k])) out.entries.emplace_back(k, val[k]);
      }
      touched.clear();
      return out;
    }
  };

  Vec product_in(const Component& C, const Multidegree& e1, const Vec& x, const Multidegree& e2, const Vec& y) const {
    thread_local Scratch s;
    s.reset(C.dim(), field_);
    for (const auto& [i, a] : x.entries) {
      for (const auto& [j, b] : y.entries) {
        value_type ab = field_.mul(a, b);
        for (const auto& [k, w] : C.nf[column(C, e1, i, e2, j)].entries) s.add(k, field_.mul(ab, w), field_);
      }
    }
    return s.take(field_);
  }

  // Lower-component evaluation of a slot monomial; only reads finished components.
  std::pair<Multidegree, Vec> eval_sub(const std::string& code, std::size_t& pos,
                                       const std::vector<Multidegree>& sdeg, const std::vector<std::uint32_t>& sidx,
                                       const std::vector<int>& sexp) const {
    int v = static_cast<unsigned char>(code[pos++]);
    if (v != 0) return {sdeg[static_cast<std::size_t>(v - 1)], Vec{{{sidx[static_cast<std::size_t>(v - 1)], field_.one()}}}};
    auto [dl, l] = eval_sub(code, pos, sdeg, sidx, sexp);
    auto [dr, r] = eval_sub(code, pos, sdeg, sidx, sexp);
    Multidegree d = dl + dr;
    return {d, product_in(*comps_.at(d), dl, l, dr, r)};
  }

  struct Task {
    std::size_t rule;
    std::vector<Multidegree> sdeg;  // multidegree of each slot
  };

  void enumerate_tasks(const Multidegree& e, std::vector<Task>& tasks) const {
    for (std::size_t ri = 0; ri < rules_.size(); ++ri) {
      const auto& rule = rules_[ri];
      const std::size_t S = rule.slot_exp.size();
      int min_total = 0;
      for (int a : rule.slot_exp) min_total += a;
      if (min_total > e.total()) continue;
      std::vector<Multidegree> cur(S);
      std::function<void(std::size_t, const Multidegree&)> rec = [&](std::size_t s, const Multidegree& rest) {
        int a = rule.slot_exp[s];
        if (s + 1 == S) {
          // last slot must fill the remainder exactly
          std::vector<int> m(static_cast<std::size_t>(rest.size()));
          for (int i = 0; i < rest.size(); ++i) {
            if (rest[i] % a) return;
            m[static_cast<std::size_t>(i)] = rest[i] / a;
          }
          Multidegree d(m);
          if (d.total() == 0) return;
          cur[s] = d;
          if (!ordered_ok(rule, cur, s)) return;
          tasks.push_back(Task{ri, cur});
          return;
        }
        int later = 0;
        for (std::size_t t = s + 1; t < S; ++t) later += rule.slot_exp[t];
        for (const auto& d : rest.sub_degrees()) {
          Multidegree used = d.scaled(a);
          if (!used.leq(rest)) continue;
          Multidegree left = rest - used;
          if (left.total() < later) continue;
          cur[s] = d;
          if (!ordered_ok(rule, cur, s)) continue;
          rec(s + 1, left);
        }
      };
      rec(0, e);
    }
  }

  // Slots of one variable with equal exponents take non-decreasing degrees.
  static bool ordered_ok(const LinearizedRule<F>& rule, const std::vector<Multidegree>& cur, std::size_t s) {
    if (s == 0) return true;
    if (rule.slot_var[s] != rule.slot_var[s - 1] || rule.slot_exp[s] != rule.slot_exp[s - 1]) return true;
    return !(cur[s] < cur[s - 1]);
  }

  // Rows generated by one task: all basis choices for the slots.
  void run_task(const Component& C, const Task& task, std::vector<Vec>& rows) const {
    const auto& rule = rules_[task.rule];
    const std::size_t S = rule.slot_exp.size();
    std::vector<std::size_t> dims(S);
    for (std::size_t s = 0; s < S; ++s) dims[s] = comps_.at(task.sdeg[s])->dim();
    for (auto d : dims) {
      if (d == 0) return;
    }
    // split each monomial of the rule at its root once
    struct Term {
      std::string left, right;
      value_type c;
    };
    std::vector<Term> terms;
    for (const auto& [m, c] : rule.poly.terms()) {
      std::size_t l = Monomial::subtree_length(m.code(), 1);
      terms.push_back(Term{m.code().substr(1, l), m.code().substr(1 + l), c});
    }
    std::vector<std::uint32_t> idx(S, 0);
    thread_local Scratch acc;
    while (true) {
      bool valid = true;
      for (std::size_t s = 1; s < S && valid; ++s) {
        if (rule.slot_var[s] == rule.slot_var[s - 1] && rule.slot_exp[s] == rule.slot_exp[s - 1] &&
            task.sdeg[s] == task.sdeg[s - 1] && idx[s] <= idx[s - 1]) {
          valid = false;
        }
      }
      if (valid) {
        acc.reset(C.ncols, field_);
        for (const auto& t : terms) {
          std::size_t p = 0;
          auto [dl, l] = eval_sub(t.left, p, task.sdeg, idx, rule.slot_exp);
          p = 0;
          auto [dr, r] = eval_sub(t.right, p, task.sdeg, idx, rule.slot_exp);
          for (const auto& [i, a] : l.entries) {
            value_type ca = field_.mul(t.c, a);
            for (const auto& [j, b] : r.entries) acc.add(column(C, dl, i, dr, j), field_.mul(ca, b), field_);
          }
        }
        Vec row = acc.take(field_);
        if (!row.empty()) rows.push_back(std::move(row));
      }
      std::size_t s = 0;
      while (s < S && ++idx[s] == dims[s]) idx[s++] = 0;
      if (s == S) break;
    }
  }

  void build(const Multidegree& e) {
    auto t0 = std::chrono::steady_clock::now();
    auto C = std::make_unique<Component>();
    C->degree = e;
    if (e.total() == 1) {
      int var = e.size();
      C->ncols = 1;
      C->columns.push_back(Monomial::leaf(var, flavor_));
      C->basis.push_back(C->columns.back());
      C->nf.push_back(Vec{{{0u, field_.one()}}});
      C->stats = ComponentStats{e, 1, 1, 0, 0};
      comps_.emplace(e, std::move(C));
      return;
    }
    // column space
    std::vector<Monomial> cols;
    std::vector<std::pair<std::size_t, std::size_t>> origin;  // (block, local)
    for (const auto& l : e.sub_degrees()) {
      if (l == e) continue;
      Multidegree r = e - l;
      if (flavor_ == Flavor::Commutative && r < l) continue;
      const Component& L = *comps_.at(l);
      const Component& R = *comps_.at(r);
      Block b;
      b.left = l;
      b.right = r;
      b.dl = L.dim();
      b.dr = R.dim();
      b.triangular = flavor_ == Flavor::Commutative && l == r;
      std::size_t bi = C->blocks.size();
      std::size_t local = 0;
      for (std::size_t i = 0; i < b.dl; ++i) {
        for (std::size_t j = b.triangular ? i : 0; j < b.dr; ++j) {
          cols.push_back(mul(L.basis[i], R.basis[j]));
          origin.emplace_back(bi, local++);
        }
      }
      b.col.assign(local, 0);
      C->block_of[{l, r}] = bi;
      C->blocks.push_back(std::move(b));
    }
    const std::size_t n = cols.size();
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return cols[b] < cols[a]; });
    C->ncols = n;
    C->columns.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      auto [bi, local] = origin[order[k]];
      C->blocks[bi].col[local] = static_cast<std::uint32_t>(k);
      C->columns[k] = cols[order[k]];
    }

    // relations
    std::vector<Task> tasks;
    enumerate_tasks(e, tasks);
    // Over Q all rows are gathered and reduced through rref_fast.
    constexpr bool kCollect = std::is_same_v<F, Rationals>;
    std::vector<Vec> collected;
    Echelon<F> ech(field_, n);
    std::size_t relations = 0;
    const std::size_t batch = std::max<std::size_t>(64, static_cast<std::size_t>(workers_) * 16);
    for (std::size_t start = 0; start < tasks.size() && ech.rank() < n; start += batch) {
      std::size_t stop = std::min(tasks.size(), start + batch);
      std::vector<std::vector<Vec>> out(stop - start);
      if (workers_ <= 1) {
        for (std::size_t t = start; t < stop; ++t) run_task(*C, tasks[t], out[t - start]);
      } else {
        std::atomic<std::size_t> next{start};
        std::vector<std::thread> pool;
        std::mutex err_mu;
        std::exception_ptr err;
        for (int w = 0; w < workers_; ++w) {
          pool.emplace_back([&] {
            try {
              for (std::size_t t; (t = next.fetch_add(1)) < stop;) run_task(*C, tasks[t], out[t - start]);
            } catch (...) {
              std::lock_guard lock(err_mu);
              err = std::current_exception();
            }
          });
        }
        for (auto& th : pool) th.join();
        if (err) std::rethrow_exception(err);
      }
      for (auto& rows : out) {
        for (auto& r : rows) {
          ++relations;
          if constexpr (kCollect) {
            collected.push_back(std::move(r));
          } else {
            ech.add_row(r);
            if (ech.rank() == n) break;
          }
        }
        if (ech.rank() == n) break;
      }
    }
    SpanBasis<F> B = kCollect ? rref_fast(field_, n, collected) : ech.finalize();

    // normal forms: free columns in reverse column order form the basis
    std::vector<int> basis_of(n, -1);
    std::vector<char> pivot(n, 0);
    for (auto p : B.pivots) pivot[p] = 1;
    for (std::size_t k = n; k-- > 0;) {
      if (!pivot[k]) {
        basis_of[k] = static_cast<int>(C->basis.size());
        C->basis.push_back(C->columns[k]);
      }
    }
    C->nf.assign(n, Vec{});
    for (std::size_t k = 0; k < n; ++k) {
      if (!pivot[k]) C->nf[k].entries.emplace_back(static_cast<std::uint32_t>(basis_of[k]), field_.one());
    }
    for (const auto& row : B.rows) {
      std::uint32_t p = row.entries.front().first;
      std::vector<typename Vec::Entry> es;
      for (std::size_t t = 1; t < row.entries.size(); ++t) {
        es.emplace_back(static_cast<std::uint32_t>(basis_of[row.entries[t].first]), field_.neg(row.entries[t].second));
      }
      C->nf[p] = Vec::from_unsorted(std::move(es), field_);
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    C->stats = ComponentStats{e, n, C->basis.size(), relations, secs};
    comps_.emplace(e, std::move(C));
  }

  Flavor flavor_;
  F field_;
  int workers_;
  int cap_;
  std::vector<LinearizedRule<F>> rules_;
  std::map<Multidegree, std::unique_ptr<Component>> comps_;
};

/// Evaluation target for expressions: the relatively free algebra.
template <class F>
class TowerAlgebra {
 public:
  using Value = typename QuotientTower<F>::Element;

  explicit TowerAlgebra(QuotientTower<F>& tower) : tower_(tower) {}

  Value zero() const { return {}; }
  Value variable(int k) const { return tower_.variable(k); }
  Value add(const Value& a, const Value& b) const { return tower_.add(a, b); }
  Value scale(const Value& a, const mpq_class& c) const { return tower_.scale(a, tower_.field().from_rational(c)); }
  Value mul(const Value& a, const Value& b) const { return tower_.multiply(a, b); }
  bool commutative_language() const { return tower_.flavor() == Flavor::Commutative; }

 private:
  QuotientTower<F>& tower_;
};

}  // namespace plusalg
