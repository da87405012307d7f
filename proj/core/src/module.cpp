#include "trusslab/module.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "trusslab/hom.hpp"

namespace trusslab {

  namespace {

    std::string tuple_text(std::vector<Elem> const& xs) {
      std::string s = "(";
      for (std::size_t i = 0; i < xs.size(); ++i) {
        s += (i ? ", " : "") + std::to_string(xs[i]);
      }
      return s + ")";
    }

    void require_same_truss(TModule const& a, TModule const& b, char const* what) {
      if (!(a.truss() == b.truss())) {
        fail(ErrorKind::mixed_truss, std::string(what) + ": modules are over different trusses");
      }
    }

  }  // namespace

  TModule TModule::trusted(Truss truss, FiniteHeap heap, Table action, std::string label) {
    bool normalised = false;
    if (auto u = truss.unit()) {
      normalised = true;
      for (Elem m = 0; m < heap.order(); ++m) {
        if (action(*u, m) != m) {
          normalised = false;
          break;
        }
      }
    }
    auto rep = std::make_shared<detail::ModuleRep>(
        detail::ModuleRep{std::move(truss), std::move(heap), std::move(action), normalised, std::move(label)});
    return TModule(std::move(rep));
  }

  TModule TModule::relabeled(std::string label) const {
    auto rep   = std::make_shared<detail::ModuleRep>(*_rep);
    rep->label = std::move(label);
    return TModule(std::move(rep));
  }

  TModule validate_module(Truss truss, FiniteHeap heap, Table action, std::string label) {
    std::size_t nt = truss.order();
    std::size_t m  = heap.order();
    if (action.rows() != nt || action.cols() != m) {
      fail(ErrorKind::range, "validate_module: action table must be |T| x |M|");
    }
    for (Elem t = 0; t < nt; ++t) {
      for (Elem x = 0; x < m; ++x) {
        if (action(t, x) >= m) {
          fail(ErrorKind::range, "validate_module: action entry out of range at " + tuple_text({t, x}), {t, x});
        }
      }
    }
    for (Elem t = 0; t < nt; ++t) {
      for (Elem u = 0; u < nt; ++u) {
        for (Elem x = 0; x < m; ++x) {
          if (action(t, action(u, x)) != action(truss.mul(t, u), x)) {
            fail(ErrorKind::action_associativity,
                 "validate_module: t.(t'.m) != (tt').m at " + tuple_text({t, u, x}),
                 {t, u, x});
          }
        }
      }
    }
    // t -> t.m must be a heap morphism T -> M for every m.
    FiniteHeap const& th = truss.heap();
    bool              ok = true;
    for (Elem x = 0; x < m && ok; ++x) {
      for (Elem t = 0; t < nt && ok; ++t) {
        for (Elem v = 0; v < nt && ok; ++v) {
          ok = action(th.add(t, v), x) == heap.bracket(action(t, x), action(0, x), action(v, x));
        }
      }
    }
    if (!ok) {
      for (Elem t = 0; t < nt; ++t) {
        for (Elem u = 0; u < nt; ++u) {
          for (Elem v = 0; v < nt; ++v) {
            for (Elem x = 0; x < m; ++x) {
              if (action(th.bracket(t, u, v), x) != heap.bracket(action(t, x), action(u, x), action(v, x))) {
                fail(ErrorKind::action_left_distributivity,
                     "validate_module: [t,t',t''].m != [t.m,t'.m,t''.m] at " + tuple_text({t, u, v, x}),
                     {t, u, v, x});
              }
            }
          }
        }
      }
      fail(ErrorKind::internal_assertion, "validate_module: retract check and full check disagree");
    }
    // m -> t.m must be a heap endomorphism of M for every t.
    for (Elem t = 0; t < nt && ok; ++t) {
      for (Elem x = 0; x < m && ok; ++x) {
        for (Elem z = 0; z < m && ok; ++z) {
          ok = action(t, heap.add(x, z)) == heap.bracket(action(t, x), action(t, 0), action(t, z));
        }
      }
    }
    if (!ok) {
      for (Elem t = 0; t < nt; ++t) {
        for (Elem x = 0; x < m; ++x) {
          for (Elem y = 0; y < m; ++y) {
            for (Elem z = 0; z < m; ++z) {
              if (action(t, heap.bracket(x, y, z)) != heap.bracket(action(t, x), action(t, y), action(t, z))) {
                fail(ErrorKind::action_right_distributivity,
                     "validate_module: t.[m,m',m''] != [t.m,t.m',t.m''] at " + tuple_text({t, x, y, z}),
                     {t, x, y, z});
              }
            }
          }
        }
      }
      fail(ErrorKind::internal_assertion, "validate_module: retract check and full check disagree");
    }
    return TModule::trusted(std::move(truss), std::move(heap), std::move(action), std::move(label));
  }

  TModule module_from_ring_module(Table const& ring_add,
                                  Table const& ring_mul,
                                  Table const& module_add,
                                  Table const& action,
                                  std::string  label) {
    Truss       truss = truss_from_ring(ring_add, ring_mul);
    std::size_t nr    = truss.order();
    FiniteHeap  heap;
    try {
      heap = heap_from_group(module_add);
    } catch (Error const& e) {
      fail(ErrorKind::not_a_module, std::string("module_from_ring_module: addition: ") + e.what(), e.witness());
    }
    std::size_t m = heap.order();
    if (action.rows() != nr || action.cols() != m || action.bound() > m) {
      fail(ErrorKind::not_a_module, "module_from_ring_module: action table must be |R| x |M| with entries in M");
    }
    for (Elem r = 0; r < nr; ++r) {
      for (Elem s = 0; s < nr; ++s) {
        for (Elem x = 0; x < m; ++x) {
          if (action(ring_mul(r, s), x) != action(r, action(s, x))) {
            fail(ErrorKind::not_a_module, "module_from_ring_module: (rs)m != r(sm) at " + tuple_text({r, s, x}), {r, s, x});
          }
          if (action(ring_add(r, s), x) != module_add(action(r, x), action(s, x))) {
            fail(ErrorKind::not_a_module, "module_from_ring_module: (r+s)m != rm+sm at " + tuple_text({r, s, x}), {r, s, x});
          }
        }
      }
      for (Elem x = 0; x < m; ++x) {
        for (Elem y = 0; y < m; ++y) {
          if (action(r, module_add(x, y)) != module_add(action(r, x), action(r, y))) {
            fail(ErrorKind::not_a_module, "module_from_ring_module: r(m+n) != rm+rn at " + tuple_text({r, x, y}), {r, x, y});
          }
        }
      }
    }
    return validate_module(std::move(truss), std::move(heap), action, std::move(label));
  }

  TModule regular_module(Truss const& truss) {
    return TModule::trusted(truss, truss.heap(), truss.mul_table(), truss.label());
  }

  TModule terminal_module(Truss const& truss) {
    return TModule::trusted(truss, FiniteHeap(), Table(truss.order(), 1, 0), "*");
  }

  std::vector<Elem> absorbers(TModule const& module) {
    std::vector<Elem> result;
    for (Elem e = 0; e < module.order(); ++e) {
      bool ok = true;
      for (Elem t = 0; t < module.truss().order() && ok; ++t) {
        ok = module.act(t, e) == e;
      }
      if (ok) {
        result.push_back(e);
      }
    }
    return result;
  }

  ProductModule product_module(TModule const& m, TModule const& n) {
    require_same_truss(m, n, "product_module");
    std::size_t a  = m.order();
    std::size_t b  = n.order();
    std::size_t nt = m.truss().order();
    Table       add(a * b, a * b);
    for (Elem x = 0; x < a * b; ++x) {
      for (Elem y = 0; y < a * b; ++y) {
        add(x, y) = pair_index(m.heap().add(x / b, y / b), n.heap().add(x % b, y % b), b);
      }
    }
    Table action(nt, a * b);
    for (Elem t = 0; t < nt; ++t) {
      for (Elem x = 0; x < a * b; ++x) {
        action(t, x) = pair_index(m.act(t, x / b), n.act(t, x % b), b);
      }
    }
    TModule           p = TModule::trusted(m.truss(), FiniteHeap::trusted(std::move(add)), std::move(action));
    std::vector<Elem> p1(a * b);
    std::vector<Elem> p2(a * b);
    for (Elem x = 0; x < a * b; ++x) {
      p1[x] = x / b;
      p2[x] = x % b;
    }
    ProductModule result{p, ModuleMorphism::unchecked(p, m, std::move(p1)), ModuleMorphism::unchecked(p, n, std::move(p2)), {}, {}};
    auto          abs_m = absorbers(m);
    auto          abs_n = absorbers(n);
    if (!abs_m.empty() && !abs_n.empty()) {
      std::vector<Elem> e1(a);
      std::vector<Elem> e2(b);
      for (Elem x = 0; x < a; ++x) {
        e1[x] = pair_index(x, abs_n[0], b);
      }
      for (Elem y = 0; y < b; ++y) {
        e2[y] = pair_index(abs_m[0], y, b);
      }
      result.eps1 = ModuleMorphism::unchecked(m, p, std::move(e1));
      result.eps2 = ModuleMorphism::unchecked(n, p, std::move(e2));
    }
    return result;
  }

  TModule power_module(TModule const& m, std::size_t k) {
    if (k == 0) {
      fail(ErrorKind::range, "power_module: the exponent must be at least 1");
    }
    std::size_t base = m.order();
    std::size_t size = 1;
    for (std::size_t i = 0; i < k; ++i) {
      size *= base;
    }
    auto digits = [&](Elem x) {
      std::vector<Elem> ds(k);
      for (std::size_t i = k; i-- > 0;) {
        ds[i] = x % base;
        x /= base;
      }
      return ds;
    };
    auto encode = [&](std::vector<Elem> const& ds) {
      Elem x = 0;
      for (Elem d : ds) {
        x = x * base + d;
      }
      return x;
    };
    std::vector<std::vector<Elem>> fs(size);
    for (Elem x = 0; x < size; ++x) {
      fs[x] = digits(x);
    }
    Table             add(size, size);
    std::vector<Elem> tmp(k);
    for (Elem x = 0; x < size; ++x) {
      for (Elem y = 0; y < size; ++y) {
        for (std::size_t i = 0; i < k; ++i) {
          tmp[i] = m.heap().add(fs[x][i], fs[y][i]);
        }
        add(x, y) = encode(tmp);
      }
    }
    std::size_t nt = m.truss().order();
    Table       action(nt, size);
    for (Elem t = 0; t < nt; ++t) {
      for (Elem x = 0; x < size; ++x) {
        for (std::size_t i = 0; i < k; ++i) {
          tmp[i] = m.act(t, fs[x][i]);
        }
        action(t, x) = encode(tmp);
      }
    }
    return TModule::trusted(m.truss(), FiniteHeap::trusted(std::move(add)), std::move(action));
  }

  TModule induced_module(TModule const& m, Elem e) {
    if (e >= m.order()) {
      fail(ErrorKind::range, "induced_module: basepoint out of range", {e});
    }
    std::size_t nt = m.truss().order();
    Table       action(nt, m.order());
    for (Elem t = 0; t < nt; ++t) {
      for (Elem x = 0; x < m.order(); ++x) {
        action(t, x) = m.heap().bracket(m.act(t, x), m.act(t, e), e);
      }
    }
    return validate_module(m.truss(), m.heap(), std::move(action));
  }

  Submodule submodule_check(TModule const& module, std::vector<Elem> subset) {
    SubHeap           sub = subheap_check(module.heap(), std::move(subset));
    std::vector<bool> in(module.order(), false);
    for (Elem x : sub.elements) {
      in[x] = true;
    }
    for (Elem t = 0; t < module.truss().order(); ++t) {
      for (Elem x : sub.elements) {
        if (!in[module.act(t, x)]) {
          fail(ErrorKind::not_action_closed,
               "submodule_check: t.n leaves the subset at " + tuple_text({t, x}),
               {t, x});
        }
      }
    }
    return Submodule{module, std::move(sub.elements)};
  }

  bool is_induced_submodule(TModule const& module, std::vector<Elem> const& subset) {
    SubHeap sub;
    try {
      sub = subheap_check(module.heap(), subset);
    } catch (Error const&) {
      return false;
    }
    std::vector<bool> in(module.order(), false);
    for (Elem x : sub.elements) {
      in[x] = true;
    }
    FiniteHeap const& h = module.heap();
    for (Elem t = 0; t < module.truss().order(); ++t) {
      for (Elem e : sub.elements) {
        for (Elem x : sub.elements) {
          if (!in[h.bracket(module.act(t, x), module.act(t, e), e)]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  std::pair<TModule, ModuleMorphism> submodule_as_module(Submodule const& sub) {
    TModule const& m = sub.parent;
    auto [heap, inc] = subheap_as_heap(SubHeap{m.heap(), sub.elements});
    std::vector<Elem> index(m.order(), 0);
    for (Elem i = 0; i < sub.elements.size(); ++i) {
      index[sub.elements[i]] = i;
    }
    std::size_t nt = m.truss().order();
    Table       action(nt, sub.elements.size());
    for (Elem t = 0; t < nt; ++t) {
      for (Elem i = 0; i < sub.elements.size(); ++i) {
        action(t, i) = index[m.act(t, sub.elements[i])];
      }
    }
    TModule n = TModule::trusted(m.truss(), heap, std::move(action));
    return {n, ModuleMorphism::unchecked(n, m, sub.elements)};
  }

  std::pair<TModule, ModuleMorphism> quotient_module(TModule const& module, HeapCongruence const& congruence) {
    auto [heap, proj] = quotient_heap(congruence);
    std::size_t nt    = module.truss().order();
    Table       action(nt, heap.order());
    for (Elem t = 0; t < nt; ++t) {
      for (Elem c = 0; c < heap.order(); ++c) {
        action(t, c) = congruence.class_of[module.act(t, congruence.classes[c][0])];
      }
    }
    for (Elem t = 0; t < nt; ++t) {
      for (Elem x = 0; x < module.order(); ++x) {
        Elem c = congruence.class_of[x];
        if (congruence.class_of[module.act(t, x)] != action(t, c)) {
          fail(ErrorKind::action_not_descending,
               "quotient_module: t.m and t.m' fall in different classes for m ~ m' at (t, m, m') = "
                   + tuple_text({t, x, congruence.classes[c][0]}),
               {t, x, congruence.classes[c][0]});
        }
      }
    }
    TModule q = TModule::trusted(module.truss(), heap, std::move(action));
    return {q, ModuleMorphism::unchecked(module, q, congruence.class_of)};
  }

  std::pair<TModule, ModuleMorphism> quotient_module(Submodule const& sub) {
    return quotient_module(sub.parent, congruence_of(SubHeap{sub.parent.heap(), sub.elements}));
  }

  std::pair<TModule, ModuleMorphism> quotient_module(TModule const& module, std::vector<Elem> subheap) {
    return quotient_module(module, congruence_of(subheap_check(module.heap(), std::move(subheap))));
  }

  TModule restrict_scalars(TrussMorphism const& f, TModule const& module) {
    if (!(f.target() == module.truss())) {
      fail(ErrorKind::mixed_truss, "restrict_scalars: the morphism does not land in the module's truss");
    }
    std::size_t ns = f.source().order();
    Table       action(ns, module.order());
    for (Elem s = 0; s < ns; ++s) {
      for (Elem x = 0; x < module.order(); ++x) {
        action(s, x) = module.act(f(s), x);
      }
    }
    return validate_module(f.source(), module.heap(), std::move(action));
  }

  HomModule hom_induced_module(TrussMorphism const& f, TModule const& module) {
    if (!(f.source() == module.truss())) {
      fail(ErrorKind::mixed_truss, "hom_induced_module: the module is not over the source truss");
    }
    Truss const& t   = f.target();
    TModule      t_s = restrict_scalars(f, regular_module(t));
    auto         homs = enumerate_homs(t_s, module);
    if (homs.empty()) {
      fail(ErrorKind::empty_subset, "hom_induced_module: Hom_S(T, M) is empty");
    }

    HomModule result{TModule::trusted(t, FiniteHeap(), Table(t.order(), 1, 0)), {}};
    result.maps.reserve(homs.size());
    for (auto const& g : homs) {
      result.maps.emplace_back(g.images().begin(), g.images().end());
    }
    std::map<std::vector<Elem>, Elem> index;
    for (Elem i = 0; i < result.maps.size(); ++i) {
      index.emplace(result.maps[i], i);
    }
    auto lookup = [&](std::vector<Elem> const& g) {
      auto it = index.find(g);
      if (it == index.end()) {
        fail(ErrorKind::internal_assertion, "hom_induced_module: carrier is not closed");
      }
      return it->second;
    };
    std::size_t       k = result.maps.size();
    Table             add(k, k);
    std::vector<Elem> g(t.order());
    for (Elem i = 0; i < k; ++i) {
      for (Elem j = 0; j < k; ++j) {
        for (Elem x = 0; x < t.order(); ++x) {
          g[x] = module.heap().bracket(result.maps[i][x], result.maps[0][x], result.maps[j][x]);
        }
        add(i, j) = lookup(g);
      }
    }
    Table action(t.order(), k);
    for (Elem s = 0; s < t.order(); ++s) {
      for (Elem i = 0; i < k; ++i) {
        for (Elem x = 0; x < t.order(); ++x) {
          g[x] = result.maps[i][t.mul(x, s)];
        }
        action(s, i) = lookup(g);
      }
    }
    result.module = validate_module(t, validate_heap(add), std::move(action));
    return result;
  }

  void check_morphism(TModule const& source, TModule const& target, std::span<Elem const> images) {
    require_same_truss(source, target, "module morphism");
    check_morphism(source.heap(), target.heap(), images);
    for (Elem t = 0; t < source.truss().order(); ++t) {
      for (Elem x = 0; x < source.order(); ++x) {
        if (images[source.act(t, x)] != target.act(t, images[x])) {
          fail(ErrorKind::morphism_violation,
               "module morphism: f(t.m) != t.f(m) at " + tuple_text({t, x}),
               {t, x});
        }
      }
    }
  }

}  // namespace trusslab
