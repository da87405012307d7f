#pragma once

// Brute-force reference checks.  Everything here works from raw tables and
// exhaustive enumeration, never from the library's search or validation
// code, so the tests can compare the two.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "trusslab/trusslab.hpp"

namespace oracle {

  using trusslab::Elem;
  using Map = std::vector<Elem>;

  // [a, b, c] from a full ternary table.
  struct Ternary {
    std::size_t       n = 0;
    std::vector<Elem> t;
    Elem operator()(Elem a, Elem b, Elem c) const {
      return t[(a * n + b) * n + c];
    }
  };

  // [a, b, c] = a - b + c computed from the retract with inverses found by
  // scanning, independent of the library's cached tables.
  inline Ternary ternary_of(trusslab::Table const& add) {
    std::size_t       n = add.rows();
    std::vector<Elem> neg(n);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (add(a, b) == 0) {
          neg[a] = b;
        }
      }
    }
    Ternary r{n, std::vector<Elem>(n * n * n)};
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        for (Elem c = 0; c < n; ++c) {
          r.t[(a * n + b) * n + c] = add(add(a, neg[b]), c);
        }
      }
    }
    return r;
  }

  inline Ternary ternary_of(trusslab::FiniteHeap const& h) {
    return ternary_of(h.retract());
  }

  // Direct O(n^5) check: para-associativity, Mal'cev and [a,b,c] = [c,b,a].
  inline bool is_abelian_heap(Ternary const& h) {
    std::size_t n = h.n;
    for (Elem x : h.t) {
      if (x >= n) {
        return false;
      }
    }
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (h(a, b, b) != a || h(b, b, a) != a) {
          return false;
        }
        for (Elem c = 0; c < n; ++c) {
          if (h(a, b, c) != h(c, b, a)) {
            return false;
          }
          for (Elem d = 0; d < n; ++d) {
            for (Elem e = 0; e < n; ++e) {
              if (h(h(a, b, c), d, e) != h(a, b, h(c, d, e))) {
                return false;
              }
            }
          }
        }
      }
    }
    return true;
  }

  // Calls visit on every function {0..a-1} -> {0..b-1}, in lexicographic
  // order of the image array.
  inline void for_each_function(std::size_t a, std::size_t b, std::function<void(Map const&)> const& visit) {
    Map f(a, 0);
    while (true) {
      visit(f);
      std::size_t i = a;
      while (i > 0 && f[i - 1] + 1 == b) {
        f[--i] = 0;
      }
      if (i == 0) {
        return;
      }
      ++f[i - 1];
    }
  }

  inline bool preserves_bracket(Ternary const& a, Ternary const& b, Map const& f) {
    for (Elem x = 0; x < a.n; ++x) {
      for (Elem y = 0; y < a.n; ++y) {
        for (Elem z = 0; z < a.n; ++z) {
          if (f[a(x, y, z)] != b(f[x], f[y], f[z])) {
            return false;
          }
        }
      }
    }
    return true;
  }

  inline bool is_heap_map(trusslab::FiniteHeap const& a, trusslab::FiniteHeap const& b, Map const& f) {
    return preserves_bracket(ternary_of(a), ternary_of(b), f);
  }

  inline bool is_module_map(trusslab::TModule const& a, trusslab::TModule const& b, Map const& f) {
    if (!is_heap_map(a.heap(), b.heap(), f)) {
      return false;
    }
    for (Elem t = 0; t < a.truss().order(); ++t) {
      for (Elem m = 0; m < a.order(); ++m) {
        if (f[a.act(t, m)] != b.act(t, f[m])) {
          return false;
        }
      }
    }
    return true;
  }

  inline std::vector<Map> heap_maps(trusslab::FiniteHeap const& a, trusslab::FiniteHeap const& b) {
    std::vector<Map> out;
    Ternary          ta = ternary_of(a);
    Ternary          tb = ternary_of(b);
    for_each_function(a.order(), b.order(), [&](Map const& f) {
      if (preserves_bracket(ta, tb, f)) {
        out.push_back(f);
      }
    });
    return out;
  }

  inline std::vector<Map> module_maps(trusslab::TModule const& a, trusslab::TModule const& b) {
    std::vector<Map> out;
    for (Map const& f : heap_maps(a.heap(), b.heap())) {
      if (is_module_map(a, b, f)) {
        out.push_back(f);
      }
    }
    return out;
  }

  // Tries every bijection; the action is checked before the bracket since it
  // rejects most candidates sooner.
  inline bool isomorphic(trusslab::TModule const& a, trusslab::TModule const& b) {
    if (a.order() != b.order() || a.truss().order() != b.truss().order()) {
      return false;
    }
    Ternary ta = ternary_of(a.heap());
    Ternary tb = ternary_of(b.heap());
    Map     p(a.order());
    std::iota(p.begin(), p.end(), 0);
    do {
      bool ok = true;
      for (Elem t = 0; t < a.truss().order() && ok; ++t) {
        for (Elem m = 0; m < a.order() && ok; ++m) {
          ok = p[a.act(t, m)] == b.act(t, p[m]);
        }
      }
      if (ok && preserves_bracket(ta, tb, p)) {
        return true;
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
  }

  inline bool isomorphic(trusslab::FiniteHeap const& a, trusslab::FiniteHeap const& b) {
    if (a.order() != b.order()) {
      return false;
    }
    Map p(a.order());
    std::iota(p.begin(), p.end(), 0);
    do {
      if (is_heap_map(a, b, p)) {
        return true;
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
  }

  // Bijection that is a heap map and multiplicative.
  inline bool isomorphic(trusslab::Truss const& a, trusslab::Truss const& b) {
    if (a.order() != b.order()) {
      return false;
    }
    Map p(a.order());
    std::iota(p.begin(), p.end(), 0);
    do {
      if (!is_heap_map(a.heap(), b.heap(), p)) {
        continue;
      }
      bool ok = true;
      for (Elem x = 0; x < a.order() && ok; ++x) {
        for (Elem y = 0; y < a.order() && ok; ++y) {
          ok = p[a.mul(x, y)] == b.mul(p[x], p[y]);
        }
      }
      if (ok) {
        return true;
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
  }

  // Associativity plus both distributive laws on every tuple.
  inline bool is_truss(Ternary const& h, trusslab::Table const& mul) {
    std::size_t n = h.n;
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        for (Elem z = 0; z < n; ++z) {
          if (mul(mul(x, y), z) != mul(x, mul(y, z))) {
            return false;
          }
          for (Elem w = 0; w < n; ++w) {
            if (mul(w, h(x, y, z)) != h(mul(w, x), mul(w, y), mul(w, z))) {
              return false;
            }
            if (mul(h(x, y, z), w) != h(mul(x, w), mul(y, w), mul(z, w))) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  // The three module axioms on every tuple.
  inline bool is_module(trusslab::Truss const& t, Ternary const& h, trusslab::Table const& act) {
    Ternary     th = ternary_of(t.heap());
    std::size_t nt = t.order();
    std::size_t m  = h.n;
    for (Elem a = 0; a < nt; ++a) {
      for (Elem b = 0; b < nt; ++b) {
        for (Elem x = 0; x < m; ++x) {
          if (act(a, act(b, x)) != act(t.mul(a, b), x)) {
            return false;
          }
          for (Elem c = 0; c < nt; ++c) {
            if (act(th(a, b, c), x) != h(act(a, x), act(b, x), act(c, x))) {
              return false;
            }
          }
        }
      }
      for (Elem x = 0; x < m; ++x) {
        for (Elem y = 0; y < m; ++y) {
          for (Elem z = 0; z < m; ++z) {
            if (act(a, h(x, y, z)) != h(act(a, x), act(a, y), act(a, z))) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  // Classes of a ~ b iff [a, b, s] in S for some s, each sorted, ordered by
  // least element.
  inline std::vector<std::vector<Elem>> sim_classes(trusslab::FiniteHeap const& h, std::vector<Elem> const& s) {
    Ternary           t = ternary_of(h);
    std::vector<bool> in(h.order(), false);
    for (Elem x : s) {
      in[x] = true;
    }
    std::vector<std::vector<Elem>> classes;
    std::vector<bool>              seen(h.order(), false);
    for (Elem a = 0; a < h.order(); ++a) {
      if (seen[a]) {
        continue;
      }
      std::vector<Elem> cls;
      for (Elem b = 0; b < h.order(); ++b) {
        bool related = false;
        for (Elem x : s) {
          related = related || in[t(a, b, x)];
        }
        if (related) {
          cls.push_back(b);
          seen[b] = true;
        }
      }
      classes.push_back(cls);
    }
    return classes;
  }

  inline bool closed(Ternary const& t, std::vector<Elem> const& s) {
    std::vector<bool> in(t.n, false);
    for (Elem x : s) {
      in[x] = true;
    }
    for (Elem a : s) {
      for (Elem b : s) {
        for (Elem c : s) {
          if (!in[t(a, b, c)]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // Nonempty subsets closed under the bracket and the action.
  inline std::vector<std::vector<Elem>> submodules(trusslab::TModule const& m) {
    std::vector<std::vector<Elem>> out;
    Ternary                        t = ternary_of(m.heap());
    for (std::size_t mask = 1; mask < (std::size_t{1} << m.order()); ++mask) {
      std::vector<Elem> s;
      for (Elem x = 0; x < m.order(); ++x) {
        if (mask >> x & 1) {
          s.push_back(x);
        }
      }
      if (!closed(t, s)) {
        continue;
      }
      bool ok = true;
      for (Elem a = 0; a < m.truss().order() && ok; ++a) {
        for (Elem x : s) {
          ok = ok && (mask >> m.act(a, x) & 1);
        }
      }
      if (ok) {
        out.push_back(s);
      }
    }
    return out;
  }

  inline std::vector<Elem> absorbers(trusslab::TModule const& m) {
    std::vector<Elem> out;
    for (Elem x = 0; x < m.order(); ++x) {
      bool fixed = true;
      for (Elem t = 0; t < m.truss().order(); ++t) {
        fixed = fixed && m.act(t, x) == x;
      }
      if (fixed) {
        out.push_back(x);
      }
    }
    return out;
  }

  inline std::vector<Elem> absorber_factors(trusslab::Truss const& t, Elem zero) {
    std::vector<Elem> out;
    for (Elem a = 0; a < t.order(); ++a) {
      if (a == zero) {
        continue;
      }
      for (Elem b = 0; b < t.order(); ++b) {
        if (b != zero && t.mul(a, b) == zero && t.mul(b, a) == zero) {
          out.push_back(a);
          break;
        }
      }
    }
    return out;
  }

  inline bool cancellation(trusslab::Truss const& t, Elem zero) {
    for (Elem a = 0; a < t.order(); ++a) {
      if (a == zero) {
        continue;
      }
      for (Elem x = 0; x < t.order(); ++x) {
        for (Elem y = 0; y < t.order(); ++y) {
          if (x != y && (t.mul(a, x) == t.mul(a, y) || t.mul(x, a) == t.mul(y, a))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // For t != zero, t.M = M.
  inline bool divisible(trusslab::TModule const& m, Elem zero) {
    for (Elem t = 0; t < m.truss().order(); ++t) {
      if (t == zero) {
        continue;
      }
      std::vector<bool> hit(m.order(), false);
      for (Elem x = 0; x < m.order(); ++x) {
        hit[m.act(t, x)] = true;
      }
      if (std::find(hit.begin(), hit.end(), false) != hit.end()) {
        return false;
      }
    }
    return true;
  }

  // Every map from a submodule N' of N into E extends to N.  The empty
  // submodule asks for any map N -> E.
  inline bool extends_everywhere(trusslab::TModule const& n, trusslab::TModule const& e) {
    std::vector<Map> full = module_maps(n, e);
    if (full.empty()) {
      return false;
    }
    bool ok = true;
    for (std::vector<Elem> const& sub : submodules(n)) {
      if (sub.size() == n.order()) {
        continue;
      }
      Ternary tn = ternary_of(n.heap());
      Ternary te = ternary_of(e.heap());
      for_each_function(sub.size(), e.order(), [&](Map const& g) {
        for (std::size_t i = 0; i < sub.size(); ++i) {
          for (Elem t = 0; t < n.truss().order(); ++t) {
            auto j = std::find(sub.begin(), sub.end(), n.act(t, sub[i])) - sub.begin();
            if (g[j] != e.act(t, g[i])) {
              return;
            }
          }
          for (std::size_t k = 0; k < sub.size(); ++k) {
            for (std::size_t l = 0; l < sub.size(); ++l) {
              auto j = std::find(sub.begin(), sub.end(), tn(sub[i], sub[k], sub[l])) - sub.begin();
              if (g[j] != te(g[i], g[k], g[l])) {
                return;
              }
            }
          }
        }
        bool extended = std::any_of(full.begin(), full.end(), [&](Map const& f) {
          for (std::size_t i = 0; i < sub.size(); ++i) {
            if (f[sub[i]] != g[i]) {
              return false;
            }
          }
          return true;
        });
        ok = ok && extended;
      });
    }
    return ok;
  }

  // For every surjective pi : M -> N and f : P -> N over the listed modules,
  // some g : P -> M has pi g = f.
  inline bool lifts_everywhere(trusslab::TModule const& p, std::vector<trusslab::TModule> const& mods) {
    for (auto const& m : mods) {
      std::vector<Map> into_m = module_maps(p, m);
      for (auto const& n : mods) {
        std::vector<Map> into_n = module_maps(p, n);
        for (Map const& pi : module_maps(m, n)) {
          std::vector<bool> hit(n.order(), false);
          for (Elem y : pi) {
            hit[y] = true;
          }
          if (std::find(hit.begin(), hit.end(), false) != hit.end()) {
            continue;
          }
          for (Map const& f : into_n) {
            bool lifted = std::any_of(into_m.begin(), into_m.end(), [&](Map const& g) {
              for (Elem x = 0; x < p.order(); ++x) {
                if (pi[g[x]] != f[x]) {
                  return false;
                }
              }
              return true;
            });
            if (!lifted) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

}  // namespace oracle
