#include "trusslab/census.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

#include "trusslab/hom.hpp"
#include "trusslab/parallel.hpp"

namespace trusslab {

  namespace {

    void check_bound(std::size_t n, std::size_t bound, char const* what) {
      if (n == 0) {
        fail(ErrorKind::range, std::string(what) + ": order must be positive");
      }
      if (n > bound) {
        fail(ErrorKind::bound_exceeded,
             std::string(what) + ": order " + std::to_string(n) + " exceeds the bound " + std::to_string(bound),
             {n, bound});
      }
    }

    std::string type_label(std::vector<std::size_t> const& factors) {
      std::string s;
      for (std::size_t d : factors) {
        s += (s.empty() ? "Z" : "xZ") + std::to_string(d);
      }
      return s;
    }

    // Aff(H): every heap endomorphism of H, as a heap under the pointwise
    // operation.
    HomHeap affine_maps(FiniteHeap const& h) {
      std::vector<std::vector<Elem>> maps;
      for (auto const& f : enumerate_homs(h, h)) {
        maps.emplace_back(f.images().begin(), f.images().end());
      }
      return hom_heap(h, std::move(maps));
    }

    // Heap morphisms lambda : S -> Aff(H) with lambda(s) o lambda(s') =
    // lambda(s s'), i.e. associative actions of the truss s on h.  Returned as
    // |S| x |H| tables.
    std::vector<Table> actions_into(Truss const& s, FiniteHeap const& h) {
      HomHeap                  aff = affine_maps(h);
      std::size_t              ns  = s.order();
      std::size_t              nh  = h.order();
      std::map<std::vector<Elem>, Elem> index;
      for (Elem i = 0; i < aff.maps.size(); ++i) {
        index.emplace(aff.maps[i], i);
      }
      // compose[i][j] = index of maps[i] o maps[j].
      std::size_t                    k = aff.maps.size();
      std::vector<std::vector<Elem>> compose(k, std::vector<Elem>(k));
      std::vector<Elem>              g(nh);
      for (Elem i = 0; i < k; ++i) {
        for (Elem j = 0; j < k; ++j) {
          for (Elem x = 0; x < nh; ++x) {
            g[x] = aff.maps[i][aff.maps[j][x]];
          }
          compose[i][j] = index.at(g);
        }
      }
      MapSearch search;
      search.partial_ok = [&](std::span<Elem const> lambda, std::vector<bool> const& defined) {
        for (Elem a = 0; a < ns; ++a) {
          if (!defined[a]) {
            continue;
          }
          for (Elem b = 0; b < ns; ++b) {
            Elem ab = s.mul(a, b);
            if (defined[b] && defined[ab] && lambda[ab] != compose[lambda[a]][lambda[b]]) {
              return false;
            }
          }
        }
        return true;
      };
      std::vector<Table> result;
      for (auto const& lambda : collect_heap_maps(s.heap(), aff.heap, search)) {
        Table t(ns, nh);
        for (Elem a = 0; a < ns; ++a) {
          for (Elem x = 0; x < nh; ++x) {
            t(a, x) = aff.maps[lambda[a]][x];
          }
        }
        result.push_back(std::move(t));
      }
      return result;
    }

    // Least relabelling of an action/multiplication table: rows indexed by
    // row_perm, columns and entries by perm.
    Table relabel_min(Table const& t, std::vector<std::vector<Elem>> const& perms, bool rows_too) {
      Table best;
      bool  have = false;
      for (auto const& sigma : perms) {
        Table r(t.rows(), t.cols());
        for (Elem a = 0; a < t.rows(); ++a) {
          for (Elem x = 0; x < t.cols(); ++x) {
            r(rows_too ? sigma[a] : a, sigma[x]) = sigma[t(a, x)];
          }
        }
        if (!have || r < best) {
          best = std::move(r);
          have = true;
        }
      }
      return best;
    }

    std::vector<Table> dedup(std::vector<Table> const& tables, std::vector<std::vector<Elem>> const& autos, bool rows_too) {
      std::vector<Table> canon(tables.size());
      parallel_for(tables.size(), [&](std::size_t i) { canon[i] = relabel_min(tables[i], autos, rows_too); });
      std::sort(canon.begin(), canon.end());
      canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
      return canon;
    }

  }  // namespace

  std::vector<std::vector<std::size_t>> abelian_group_types(std::size_t n) {
    if (n == 0) {
      fail(ErrorKind::range, "abelian_group_types: order must be positive");
    }
    if (n == 1) {
      return {{1}};
    }
    std::vector<std::vector<std::size_t>> result;
    std::vector<std::size_t>              current;
    // Build d1 | d2 | ... | dk from the last factor down.
    std::function<void(std::size_t, std::size_t)> build = [&](std::size_t rest, std::size_t multiple_of) {
      if (rest == 1) {
        result.emplace_back(current.rbegin(), current.rend());
        return;
      }
      for (std::size_t d = 2; d <= rest; ++d) {
        if (rest % d == 0 && (multiple_of == 0 || multiple_of % d == 0)) {
          current.push_back(d);
          build(rest / d, d);
          current.pop_back();
        }
      }
    };
    for (std::size_t last = 2; last <= n; ++last) {
      if (n % last == 0) {
        current = {last};
        build(n / last, last);
      }
    }
    std::sort(result.begin(), result.end(), [](auto const& a, auto const& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return result;
  }

  std::vector<FiniteHeap> enumerate_heaps(std::size_t n, CensusBounds const& bounds) {
    check_bound(n, bounds.heaps, "enumerate_heaps");
    std::vector<FiniteHeap> result;
    for (auto const& factors : abelian_group_types(n)) {
      result.push_back(product_of_cyclic_heap(factors).relabeled(type_label(factors)));
    }
    return result;
  }

  std::vector<std::vector<Elem>> heap_automorphisms(FiniteHeap const& h) {
    MapSearch s;
    s.injective = true;
    return collect_heap_maps(h, h, s);
  }

  Table canonical_form(Truss const& truss) {
    return relabel_min(truss.mul_table(), heap_automorphisms(truss.heap()), true);
  }

  Table canonical_form(TModule const& module) {
    return relabel_min(module.action(), heap_automorphisms(module.heap()), false);
  }

  std::vector<Truss> enumerate_trusses(std::size_t n, CensusBounds const& bounds) {
    check_bound(n, bounds.trusses, "enumerate_trusses");
    std::vector<Truss> result;
    for (FiniteHeap const& h : enumerate_heaps(n, CensusBounds{std::max(bounds.heaps, n), 0, 0})) {
      // A multiplication is a family of left multiplications a -> L_a that
      // is a heap morphism H -> Aff(H) with L_ab = L_a o L_b: the same data as
      // an action of the would-be truss on itself, so search it directly.
      HomHeap     aff = affine_maps(h);
      std::size_t k   = aff.maps.size();
      std::map<std::vector<Elem>, Elem> index;
      for (Elem i = 0; i < k; ++i) {
        index.emplace(aff.maps[i], i);
      }
      MapSearch search;
      search.partial_ok = [&](std::span<Elem const> lambda, std::vector<bool> const& defined) {
        for (Elem a = 0; a < n; ++a) {
          if (!defined[a]) {
            continue;
          }
          for (Elem b = 0; b < n; ++b) {
            if (!defined[b]) {
              continue;
            }
            Elem ab = aff.maps[lambda[a]][b];
            if (!defined[ab]) {
              continue;
            }
            for (Elem c = 0; c < n; ++c) {
              if (aff.maps[lambda[ab]][c] != aff.maps[lambda[a]][aff.maps[lambda[b]][c]]) {
                return false;
              }
            }
          }
        }
        return true;
      };
      std::vector<Table> tables;
      for (auto const& lambda : collect_heap_maps(h, aff.heap, search)) {
        Table t(n, n);
        for (Elem a = 0; a < n; ++a) {
          for (Elem x = 0; x < n; ++x) {
            t(a, x) = aff.maps[lambda[a]][x];
          }
        }
        tables.push_back(std::move(t));
      }
      auto autos = heap_automorphisms(h);
      for (Table const& mul : dedup(tables, autos, true)) {
        Truss t = Truss::trusted(h, mul, std::nullopt);
        t       = t.with_zero(multiplicative_absorber(t));
        result.push_back(t.relabeled("T" + std::to_string(n) + "." + std::to_string(result.size())));
      }
    }
    return result;
  }

  std::vector<Truss> truss_census(std::size_t max_order, CensusBounds const& bounds) {
    std::vector<Truss> result;
    for (std::size_t n = 1; n <= max_order; ++n) {
      auto ts = enumerate_trusses(n, bounds);
      result.insert(result.end(), ts.begin(), ts.end());
    }
    return result;
  }

  std::vector<TModule> enumerate_modules(Truss const& truss, std::size_t m, CensusBounds const& bounds) {
    check_bound(m, bounds.modules, "enumerate_modules");
    std::vector<TModule> result;
    for (FiniteHeap const& h : enumerate_heaps(m, CensusBounds{std::max(bounds.heaps, m), 0, 0})) {
      auto autos = heap_automorphisms(h);
      for (Table const& action : dedup(actions_into(truss, h), autos, false)) {
        result.push_back(TModule::trusted(truss, h, action, "M" + std::to_string(m) + "." + std::to_string(result.size())));
      }
    }
    return result;
  }

  Universe build_universe(Truss const& truss, std::size_t bound, CensusBounds const& bounds) {
    check_bound(bound, bounds.modules, "build_universe");
    Universe u{truss, {}, bound};
    for (std::size_t m = 1; m <= bound; ++m) {
      auto mods = enumerate_modules(truss, m, bounds);
      u.modules.insert(u.modules.end(), mods.begin(), mods.end());
    }
    return u;
  }

}  // namespace trusslab
