#include "trusslab/hom.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "trusslab/parallel.hpp"

namespace trusslab {

  namespace {

    // Depth-first search over generator images with f(0) = base.  The greedy
    // generator order makes the visiting order lexicographic in the image
    // array: every position below the next generator is already fixed.
    class MapSearcher {
     public:
      MapSearcher(FiniteHeap const&                                 a,
                  FiniteHeap const&                                 b,
                  MapSearch const&                                  search,
                  std::function<bool(std::span<Elem const>)> const& visit)
          : _a(a),
            _b(b),
            _search(search),
            _visit(visit),
            _gens(a.generators().begin(), a.generators().end()),
            _images(a.order(), 0),
            _defined(a.order(), false),
            _used(b.order(), false) {}

      bool run(Elem base) {
        if (_search.injective && _a.order() > _b.order()) {
          return true;
        }
        _base = base;
        if (!define(0, base)) {
          return true;
        }
        _span.push_back(0);
        bool go_on = true;
        if (!_search.partial_ok || _search.partial_ok(_images, _defined)) {
          go_on = extend(0);
        }
        undefine(0);
        _span.clear();
        return go_on;
      }

     private:
      bool define(Elem x, Elem y) {
        if (_search.allowed && !_search.allowed(x, y)) {
          return false;
        }
        if (_search.injective) {
          if (_used[y]) {
            return false;
          }
          _used[y] = true;
        }
        _images[x]  = y;
        _defined[x] = true;
        return true;
      }

      void undefine(Elem x) {
        if (_search.injective) {
          _used[_images[x]] = false;
        }
        _defined[x] = false;
      }

      // Closes the span under the generators 0..level after the image of
      // generator `level` was fixed.  Returns false on a conflict; the newly
      // defined elements are appended to _span either way.
      bool close(std::size_t level, std::size_t old_size) {
        for (std::size_t idx = 0; idx < _span.size(); ++idx) {
          Elem        x     = _span[idx];
          std::size_t first = idx < old_size ? level : 0;
          for (std::size_t j = first; j <= level; ++j) {
            Elem g   = _gens[j];
            Elem z   = _a.add(x, g);
            Elem val = _b.bracket(_images[x], _base, _images[g]);
            if (_defined[z]) {
              if (_images[z] != val) {
                return false;
              }
            } else {
              if (!define(z, val)) {
                return false;
              }
              _span.push_back(z);
            }
          }
        }
        return true;
      }

      bool extend(std::size_t level) {
        if (level == _gens.size()) {
          return _visit(_images);
        }
        Elem        g        = _gens[level];
        std::size_t old_size = _span.size();
        for (Elem y = 0; y < _b.order(); ++y) {
          bool go_on = true;
          if (define(g, y)) {
            _span.push_back(g);
            if (close(level, old_size) && (!_search.partial_ok || _search.partial_ok(_images, _defined))) {
              go_on = extend(level + 1);
            }
            while (_span.size() > old_size) {
              undefine(_span.back());
              _span.pop_back();
            }
          }
          if (!go_on) {
            return false;
          }
        }
        return true;
      }

      FiniteHeap const&                                 _a;
      FiniteHeap const&                                 _b;
      MapSearch const&                                  _search;
      std::function<bool(std::span<Elem const>)> const& _visit;
      std::vector<Elem>                                 _gens;
      std::vector<Elem>                                 _images;
      std::vector<bool>                                 _defined;
      std::vector<bool>                                 _used;
      std::vector<Elem>                                 _span;
      Elem                                              _base = 0;
    };

    void require_same_truss(TModule const& a, TModule const& b, char const* what) {
      if (!(a.truss() == b.truss())) {
        fail(ErrorKind::mixed_truss, std::string(what) + ": modules are over different trusses");
      }
    }

    // Normalised kernel partition of t -> t.x: entry t is the index of the
    // first t' with t'.x = t.x.  Preserved by every module morphism that is
    // injective, so it is an isomorphism invariant of x.
    std::vector<Elem> action_signature(TModule const& m, Elem x) {
      std::size_t       nt = m.truss().order();
      std::vector<Elem> sig(nt + 2);
      std::size_t       orbit = 0;
      bool              fixed = true;
      for (Elem t = 0; t < nt; ++t) {
        sig[t] = t;
        for (Elem u = 0; u < t; ++u) {
          if (m.act(u, x) == m.act(t, x)) {
            sig[t] = sig[u];
            break;
          }
        }
        orbit += sig[t] == t;
        fixed = fixed && m.act(t, x) == x;
      }
      sig[nt]     = orbit;
      sig[nt + 1] = fixed;
      return sig;
    }

    std::vector<std::size_t> truss_signature(Truss const& t, Elem x) {
      std::size_t n          = t.order();
      std::size_t fix_left   = 0;
      std::size_t fix_right  = 0;
      std::size_t commuting  = 0;
      std::vector<bool> left(n, false);
      std::vector<bool> right(n, false);
      for (Elem y = 0; y < n; ++y) {
        fix_left += t.mul(x, y) == y;
        fix_right += t.mul(y, x) == y;
        commuting += t.mul(x, y) == t.mul(y, x);
        left[t.mul(x, y)]  = true;
        right[t.mul(y, x)] = true;
      }
      return {t.mul(x, x) == x,
              fix_left,
              fix_right,
              commuting,
              static_cast<std::size_t>(std::count(left.begin(), left.end(), true)),
              static_cast<std::size_t>(std::count(right.begin(), right.end(), true)),
              t.zero() == std::optional<Elem>(x)};
    }

    template <typename Sig>
    bool same_signature_multiset(std::vector<Sig> a, std::vector<Sig> b) {
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      return a == b;
    }

  }  // namespace

  bool search_heap_maps(FiniteHeap const&                                 a,
                        FiniteHeap const&                                 b,
                        MapSearch const&                                  search,
                        std::function<bool(std::span<Elem const>)> const& visit) {
    MapSearcher searcher(a, b, search, visit);
    for (Elem base = 0; base < b.order(); ++base) {
      if (!searcher.run(base)) {
        return false;
      }
    }
    return true;
  }

  std::vector<std::vector<Elem>> collect_heap_maps(FiniteHeap const& a, FiniteHeap const& b, MapSearch const& search) {
    std::vector<std::vector<std::vector<Elem>>> per_base(b.order());
    parallel_for(b.order(), [&](std::size_t base) {
      auto        collect = [&](std::span<Elem const> f) {
        per_base[base].emplace_back(f.begin(), f.end());
        return true;
      };
      std::function<bool(std::span<Elem const>)> visit = collect;
      MapSearcher searcher(a, b, search, visit);
      searcher.run(base);
    });
    std::vector<std::vector<Elem>> result;
    for (auto& chunk : per_base) {
      for (auto& f : chunk) {
        result.push_back(std::move(f));
      }
    }
    return result;
  }

  MapSearch module_map_search(TModule const& a, TModule const& b) {
    MapSearch s;
    s.partial_ok = [a, b](std::span<Elem const> images, std::vector<bool> const& defined) {
      for (Elem x = 0; x < a.order(); ++x) {
        if (!defined[x]) {
          continue;
        }
        for (Elem t = 0; t < a.truss().order(); ++t) {
          Elem tx = a.act(t, x);
          if (defined[tx] && images[tx] != b.act(t, images[x])) {
            return false;
          }
        }
      }
      return true;
    };
    return s;
  }

  MapSearch truss_map_search(Truss const& a, Truss const& b) {
    MapSearch s;
    s.partial_ok = [a, b](std::span<Elem const> images, std::vector<bool> const& defined) {
      for (Elem x = 0; x < a.order(); ++x) {
        if (!defined[x]) {
          continue;
        }
        for (Elem y = 0; y < a.order(); ++y) {
          Elem xy = a.mul(x, y);
          if (defined[y] && defined[xy] && images[xy] != b.mul(images[x], images[y])) {
            return false;
          }
        }
      }
      return true;
    };
    return s;
  }

  std::vector<HeapMorphism> enumerate_homs(FiniteHeap const& a, FiniteHeap const& b) {
    std::vector<HeapMorphism> result;
    for (auto& f : collect_heap_maps(a, b)) {
      result.push_back(HeapMorphism::unchecked(a, b, std::move(f)));
    }
    return result;
  }

  std::vector<TrussMorphism> enumerate_homs(Truss const& a, Truss const& b) {
    std::vector<TrussMorphism> result;
    for (auto& f : collect_heap_maps(a.heap(), b.heap(), truss_map_search(a, b))) {
      result.push_back(TrussMorphism::unchecked(a, b, std::move(f)));
    }
    return result;
  }

  std::vector<ModuleMorphism> enumerate_homs(TModule const& a, TModule const& b) {
    return enumerate_homs(a, b, {});
  }

  std::vector<ModuleMorphism> enumerate_homs(TModule const&                         a,
                                             TModule const&                         b,
                                             std::function<bool(Elem, Elem)> const& allowed) {
    require_same_truss(a, b, "enumerate_homs");
    MapSearch s = module_map_search(a, b);
    s.allowed   = allowed;
    std::vector<ModuleMorphism> result;
    for (auto& f : collect_heap_maps(a.heap(), b.heap(), s)) {
      result.push_back(ModuleMorphism::unchecked(a, b, std::move(f)));
    }
    return result;
  }

  std::optional<ModuleMorphism> least_hom(TModule const&                         a,
                                          TModule const&                         b,
                                          std::function<bool(Elem, Elem)> const& allowed) {
    require_same_truss(a, b, "least_hom");
    MapSearch s = module_map_search(a, b);
    s.allowed   = allowed;
    std::optional<ModuleMorphism> found;
    search_heap_maps(a.heap(), b.heap(), s, [&](std::span<Elem const> f) {
      found = ModuleMorphism::unchecked(a, b, std::vector<Elem>(f.begin(), f.end()));
      return false;
    });
    return found;
  }

  bool exists_hom(TModule const& a, TModule const& b, std::function<bool(Elem, Elem)> const& allowed) {
    return least_hom(a, b, allowed).has_value();
  }

  SubHeap kernel_at(HeapMorphism const& f, Elem e) {
    auto pre = f.preimage(e);
    if (pre.empty()) {
      fail(ErrorKind::not_in_image, "kernel_at: the basepoint is not in the image", {e});
    }
    return SubHeap{f.source(), std::move(pre)};
  }

  SubHeap kernel_at(ModuleMorphism const& f, Elem e) {
    auto pre = f.preimage(e);
    if (pre.empty()) {
      fail(ErrorKind::not_in_image, "kernel_at: the basepoint is not in the image", {e});
    }
    return SubHeap{f.source().heap(), std::move(pre)};
  }

  std::optional<HeapMorphism> find_isomorphism(FiniteHeap const& a, FiniteHeap const& b) {
    if (a.order() != b.order() || a.group_type() != b.group_type()) {
      return std::nullopt;
    }
    MapSearch s;
    s.injective = true;
    std::optional<HeapMorphism> found;
    search_heap_maps(a, b, s, [&](std::span<Elem const> f) {
      found = HeapMorphism::unchecked(a, b, std::vector<Elem>(f.begin(), f.end()));
      return false;
    });
    return found;
  }

  std::optional<TrussMorphism> find_isomorphism(Truss const& a, Truss const& b) {
    if (a.order() != b.order() || a.heap().group_type() != b.heap().group_type()
        || a.is_commutative() != b.is_commutative() || a.is_unital() != b.is_unital()
        || a.zero().has_value() != b.zero().has_value()) {
      return std::nullopt;
    }
    std::vector<std::vector<std::size_t>> sa;
    std::vector<std::vector<std::size_t>> sb;
    for (Elem x = 0; x < a.order(); ++x) {
      sa.push_back(truss_signature(a, x));
      sb.push_back(truss_signature(b, x));
    }
    if (!same_signature_multiset(sa, sb)) {
      return std::nullopt;
    }
    MapSearch s = truss_map_search(a, b);
    s.injective = true;
    s.allowed   = [&](Elem x, Elem y) { return sa[x] == sb[y]; };
    std::optional<TrussMorphism> found;
    search_heap_maps(a.heap(), b.heap(), s, [&](std::span<Elem const> f) {
      found = TrussMorphism::unchecked(a, b, std::vector<Elem>(f.begin(), f.end()));
      return false;
    });
    return found;
  }

  std::optional<ModuleMorphism> find_isomorphism(TModule const& a, TModule const& b) {
    require_same_truss(a, b, "find_isomorphism");
    if (a.order() != b.order() || a.heap().group_type() != b.heap().group_type()) {
      return std::nullopt;
    }
    std::vector<std::vector<Elem>> sa;
    std::vector<std::vector<Elem>> sb;
    for (Elem x = 0; x < a.order(); ++x) {
      sa.push_back(action_signature(a, x));
      sb.push_back(action_signature(b, x));
    }
    if (!same_signature_multiset(sa, sb)) {
      return std::nullopt;
    }
    MapSearch s = module_map_search(a, b);
    s.injective = true;
    s.allowed   = [&](Elem x, Elem y) { return sa[x] == sb[y]; };
    std::optional<ModuleMorphism> found;
    search_heap_maps(a.heap(), b.heap(), s, [&](std::span<Elem const> f) {
      found = ModuleMorphism::unchecked(a, b, std::vector<Elem>(f.begin(), f.end()));
      return false;
    });
    return found;
  }

  std::optional<std::vector<Elem>> find_group_isomorphism(Table const& a, Table const& b) {
    FiniteHeap ha = heap_from_group(a);
    FiniteHeap hb = heap_from_group(b);
    if (ha.order() != hb.order()) {
      return std::nullopt;
    }
    auto identity = [](Table const& g) {
      Elem e = 0;
      while (g(e, 0) != 0) {
        ++e;
      }
      return e;
    };
    Elem      ea = identity(a);
    Elem      eb = identity(b);
    MapSearch s;
    s.injective = true;
    s.allowed   = [&](Elem x, Elem y) { return x != ea || y == eb; };
    std::optional<std::vector<Elem>> found;
    search_heap_maps(ha, hb, s, [&](std::span<Elem const> f) {
      found = std::vector<Elem>(f.begin(), f.end());
      return false;
    });
    return found;
  }

  FirstIsomorphism first_iso_check(ModuleMorphism const& f) {
    TModule const& m = f.source();
    try {
      auto [q, proj]    = quotient_module(m, kernel_congruence(m.heap(), f.images()));
      auto [img, inc]   = submodule_as_module(submodule_check(f.target(), f.image()));
      auto              image = f.image();
      std::vector<Elem> iso(q.order());
      for (Elem c = 0; c < q.order(); ++c) {
        Elem rep = proj.preimage(c)[0];
        iso[c]   = static_cast<Elem>(std::lower_bound(image.begin(), image.end(), f(rep)) - image.begin());
      }
      ModuleMorphism induced(q, img, std::move(iso));
      // [m] -> f(m) must not depend on the representative.
      for (Elem x = 0; x < m.order(); ++x) {
        if (inc(induced(proj(x))) != f(x)) {
          fail(ErrorKind::internal_assertion, "first_iso_check: induced map is not well defined", {x});
        }
      }
      if (!induced.is_injective() || !induced.is_surjective()) {
        fail(ErrorKind::internal_assertion, "first_iso_check: induced map is not bijective");
      }
      return FirstIsomorphism{q, proj, img, inc, induced};
    } catch (Error const& e) {
      if (e.kind() == ErrorKind::internal_assertion) {
        throw;
      }
      fail(ErrorKind::internal_assertion, std::string("first_iso_check: ") + e.what(), e.witness());
    }
  }

  std::vector<Elem> pointwise_bracket(FiniteHeap const&     target,
                                      std::span<Elem const> f,
                                      std::span<Elem const> g,
                                      std::span<Elem const> h) {
    std::vector<Elem> r(f.size());
    for (std::size_t x = 0; x < f.size(); ++x) {
      r[x] = target.bracket(f[x], g[x], h[x]);
    }
    return r;
  }

  HomHeap hom_heap(FiniteHeap const& target, std::vector<std::vector<Elem>> maps) {
    if (maps.empty()) {
      fail(ErrorKind::empty_subset, "hom_heap: no maps");
    }
    std::sort(maps.begin(), maps.end());
    maps.erase(std::unique(maps.begin(), maps.end()), maps.end());
    std::map<std::vector<Elem>, Elem> index;
    for (Elem i = 0; i < maps.size(); ++i) {
      index.emplace(maps[i], i);
    }
    std::size_t k = maps.size();
    Table       t(k, k);
    for (Elem i = 0; i < k; ++i) {
      for (Elem j = 0; j < k; ++j) {
        auto it = index.find(pointwise_bracket(target, maps[i], maps[0], maps[j]));
        if (it == index.end()) {
          fail(ErrorKind::not_closed, "hom_heap: pointwise bracket leaves the set", {i, 0, j});
        }
        t(i, j) = it->second;
      }
    }
    return HomHeap{validate_heap(t), std::move(maps)};
  }

}  // namespace trusslab
