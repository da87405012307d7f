#include "trusslab/heap.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <string>

namespace trusslab {

  namespace {

    std::string tuple_text(std::vector<Elem> const& xs) {
      std::string s = "(";
      for (std::size_t i = 0; i < xs.size(); ++i) {
        s += (i ? ", " : "") + std::to_string(xs[i]);
      }
      return s + ")";
    }

    // Builds the derived tables of an abelian group with identity 0.
    std::shared_ptr<detail::HeapRep const> make_rep(Table add, std::string label) {
      auto        rep = std::make_shared<detail::HeapRep>();
      std::size_t n   = add.rows();
      rep->order      = n;
      rep->neg.assign(n, 0);
      for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
          if (add(a, b) == 0) {
            rep->neg[a] = b;
            break;
          }
        }
      }
      rep->sub = Table(n, n);
      for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
          rep->sub(a, b) = add(a, rep->neg[b]);
        }
      }
      rep->element_order.assign(n, 1);
      for (Elem a = 0; a < n; ++a) {
        Elem x = a;
        while (x != 0) {
          x = add(x, a);
          ++rep->element_order[a];
        }
      }
      // Greedy generators: take the least element outside the span so far.
      std::vector<bool> in_span(n, false);
      in_span[0] = true;
      std::vector<Elem> span{0};
      for (Elem g = 0; g < n; ++g) {
        if (in_span[g]) {
          continue;
        }
        rep->generators.push_back(g);
        for (std::size_t i = 0; i < span.size(); ++i) {
          for (Elem h : rep->generators) {
            Elem y = add(span[i], h);
            if (!in_span[y]) {
              in_span[y] = true;
              span.push_back(y);
            }
          }
        }
      }
      rep->add   = std::move(add);
      rep->label = std::move(label);
      return rep;
    }

    void check_square(Table const& t, char const* what) {
      if (t.rows() == 0 || t.rows() != t.cols()) {
        fail(ErrorKind::range, std::string(what) + ": table must be square and nonempty");
      }
      std::size_t n = t.rows();
      for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
          if (t(a, b) >= n) {
            fail(ErrorKind::range,
                 std::string(what) + ": entry at " + tuple_text({a, b}) + " is out of range",
                 {a, b});
          }
        }
      }
    }

    // Associativity and commutativity of a binary table, reporting witnesses
    // in the ternary form (a, e, b, e, c).
    void check_assoc_comm(Table const& t, Elem e, char const* what) {
      std::size_t n = t.rows();
      for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
          for (Elem c = 0; c < n; ++c) {
            if (t(t(a, b), c) != t(a, t(b, c))) {
              fail(ErrorKind::associativity_violation,
                   std::string(what) + ": [[a,e,b],e,c] != [a,e,[b,e,c]] at " + tuple_text({a, e, b, e, c}),
                   {a, e, b, e, c});
            }
          }
        }
      }
      for (Elem a = 0; a < n; ++a) {
        for (Elem b = a + 1; b < n; ++b) {
          if (t(a, b) != t(b, a)) {
            fail(ErrorKind::not_commutative,
                 std::string(what) + ": [a,e,b] != [b,e,a] at " + tuple_text({a, e, b}),
                 {a, e, b});
          }
        }
      }
    }

    void check_latin(Table const& t, char const* what) {
      std::size_t n = t.rows();
      for (Elem a = 0; a < n; ++a) {
        std::vector<bool> seen(n, false);
        for (Elem b = 0; b < n; ++b) {
          if (seen[t(a, b)]) {
            fail(ErrorKind::not_a_group,
                 std::string(what) + ": row " + std::to_string(a) + " is not a permutation",
                 {a});
          }
          seen[t(a, b)] = true;
        }
      }
    }

  }  // namespace

  FiniteHeap::FiniteHeap() : FiniteHeap(make_rep(Table{{0}}, {})) {}

  std::vector<std::size_t> FiniteHeap::group_type() const {
    std::vector<std::size_t> orders(_rep->element_order);
    std::sort(orders.begin(), orders.end());
    return orders;
  }

  FiniteHeap FiniteHeap::relabeled(std::string label) const {
    auto rep   = std::make_shared<detail::HeapRep>(*_rep);
    rep->label = std::move(label);
    return FiniteHeap(std::move(rep));
  }

  FiniteHeap FiniteHeap::trusted(Table retract, std::string label) {
    return FiniteHeap(make_rep(std::move(retract), std::move(label)));
  }

  FiniteHeap validate_heap(std::size_t order, std::span<Elem const> ternary, std::string label) {
    std::size_t n = order;
    if (n == 0) {
      fail(ErrorKind::range, "validate_heap: the empty heap is not supported");
    }
    if (ternary.size() != n * n * n) {
      fail(ErrorKind::range, "validate_heap: ternary table must have order^3 entries");
    }
    auto op = [&](Elem a, Elem b, Elem c) { return ternary[(a * n + b) * n + c]; };
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        for (Elem c = 0; c < n; ++c) {
          if (op(a, b, c) >= n) {
            fail(ErrorKind::range, "validate_heap: entry out of range at " + tuple_text({a, b, c}), {a, b, c});
          }
        }
      }
    }
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (op(a, b, b) != a || op(b, b, a) != a) {
          fail(ErrorKind::malcev_violation,
               "validate_heap: [a,b,b] = a = [b,b,a] fails at " + tuple_text({a, b}),
               {a, b});
        }
      }
    }
    Table retract(n, n);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        retract(a, b) = op(a, 0, b);
      }
    }
    check_assoc_comm(retract, 0, "validate_heap");

    bool reproduces = true;
    bool is_group   = true;
    try {
      check_latin(retract, "validate_heap");
    } catch (Error const&) {
      is_group = false;
    }
    FiniteHeap heap;
    if (is_group) {
      heap = FiniteHeap::trusted(retract, label);
      for (Elem a = 0; a < n && reproduces; ++a) {
        for (Elem b = 0; b < n && reproduces; ++b) {
          for (Elem c = 0; c < n; ++c) {
            if (heap.bracket(a, b, c) != op(a, b, c)) {
              reproduces = false;
              break;
            }
          }
        }
      }
    }
    if (is_group && reproduces) {
      return heap;
    }

    // The table is not the heap of its retract, so a direct law must fail.
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        for (Elem c = 0; c < n; ++c) {
          Elem abc = op(a, b, c);
          for (Elem d = 0; d < n; ++d) {
            for (Elem e = 0; e < n; ++e) {
              if (op(abc, d, e) != op(a, b, op(c, d, e))) {
                fail(ErrorKind::associativity_violation,
                     "validate_heap: [[a,b,c],d,e] != [a,b,[c,d,e]] at " + tuple_text({a, b, c, d, e}),
                     {a, b, c, d, e});
              }
            }
          }
        }
      }
    }
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        for (Elem c = 0; c < n; ++c) {
          if (op(a, b, c) != op(c, b, a)) {
            fail(ErrorKind::not_commutative,
                 "validate_heap: [a,b,c] != [c,b,a] at " + tuple_text({a, b, c}),
                 {a, b, c});
          }
        }
      }
    }
    fail(ErrorKind::internal_assertion, "validate_heap: table satisfies the heap laws but was rejected");
  }

  FiniteHeap validate_heap(Table const& retract, std::string label) {
    check_square(retract, "validate_heap");
    std::size_t n = retract.rows();
    for (Elem a = 0; a < n; ++a) {
      if (retract(0, a) != a || retract(a, 0) != a) {
        fail(ErrorKind::not_a_group, "validate_heap: 0 is not an identity of the retract at " + tuple_text({a}), {a});
      }
    }
    check_latin(retract, "validate_heap");
    check_assoc_comm(retract, 0, "validate_heap");
    return FiniteHeap::trusted(retract, std::move(label));
  }

  FiniteHeap heap_from_group(Table const& group, std::string label) {
    check_square(group, "heap_from_group");
    std::size_t         n = group.rows();
    std::optional<Elem> identity;
    for (Elem e = 0; e < n && !identity; ++e) {
      bool ok = true;
      for (Elem a = 0; a < n && ok; ++a) {
        ok = group(e, a) == a && group(a, e) == a;
      }
      if (ok) {
        identity = e;
      }
    }
    if (!identity) {
      fail(ErrorKind::not_a_group, "heap_from_group: no identity element");
    }
    check_latin(group, "heap_from_group");
    check_assoc_comm(group, *identity, "heap_from_group");
    std::vector<Elem> inv(n);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (group(a, b) == *identity) {
          inv[a] = b;
        }
      }
    }
    // [a, 0, b] = a 0^-1 b.
    Table retract(n, n);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        retract(a, b) = group(group(a, inv[0]), b);
      }
    }
    return FiniteHeap::trusted(std::move(retract), std::move(label));
  }

  Table group_retract(FiniteHeap const& heap, Elem e) {
    std::size_t n = heap.order();
    if (e >= n) {
      fail(ErrorKind::range, "group_retract: basepoint out of range", {e});
    }
    Table t(n, n);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        t(a, b) = heap.bracket(a, e, b);
      }
    }
    return t;
  }

  Elem heap_op(FiniteHeap const& heap, Elem a, Elem b, Elem c) {
    std::size_t n = heap.order();
    if (a >= n || b >= n || c >= n) {
      fail(ErrorKind::range, "heap_op: argument out of range", {a, b, c});
    }
    return heap.bracket(a, b, c);
  }

  std::vector<Elem> ternary_table(FiniteHeap const& heap) {
    std::size_t       n = heap.order();
    std::vector<Elem> t(n * n * n);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        for (Elem c = 0; c < n; ++c) {
          t[(a * n + b) * n + c] = heap.bracket(a, b, c);
        }
      }
    }
    return t;
  }

  FiniteHeap cyclic_heap(std::size_t n) {
    return product_of_cyclic_heap({n});
  }

  FiniteHeap product_of_cyclic_heap(std::vector<std::size_t> const& factors) {
    std::size_t n = 1;
    for (std::size_t d : factors) {
      if (d == 0) {
        fail(ErrorKind::range, "product_of_cyclic_heap: zero factor");
      }
      n *= d;
    }
    auto digits = [&](Elem x) {
      std::vector<std::size_t> ds(factors.size());
      for (std::size_t i = factors.size(); i-- > 0;) {
        ds[i] = x % factors[i];
        x /= factors[i];
      }
      return ds;
    };
    Table t(n, n);
    for (Elem a = 0; a < n; ++a) {
      auto da = digits(a);
      for (Elem b = 0; b < n; ++b) {
        auto db = digits(b);
        Elem x  = 0;
        for (std::size_t i = 0; i < factors.size(); ++i) {
          x = x * factors[i] + (da[i] + db[i]) % factors[i];
        }
        t(a, b) = x;
      }
    }
    return FiniteHeap::trusted(std::move(t));
  }

  SubHeap subheap_check(FiniteHeap const& heap, std::vector<Elem> subset) {
    if (subset.empty()) {
      fail(ErrorKind::empty_subset, "subheap_check: a sub-heap is nonempty");
    }
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    if (subset.back() >= heap.order()) {
      fail(ErrorKind::range, "subheap_check: element out of range", {subset.back()});
    }
    std::vector<bool> in(heap.order(), false);
    for (Elem x : subset) {
      in[x] = true;
    }
    for (Elem a : subset) {
      for (Elem b : subset) {
        for (Elem c : subset) {
          if (!in[heap.bracket(a, b, c)]) {
            fail(ErrorKind::not_closed,
                 "subheap_check: [a,b,c] leaves the subset at " + tuple_text({a, b, c}),
                 {a, b, c});
          }
        }
      }
    }
    return SubHeap{heap, std::move(subset)};
  }

  namespace {
    HeapCongruence congruence_by(FiniteHeap const& heap, std::function<bool(Elem, Elem)> const& related) {
      std::size_t    n = heap.order();
      HeapCongruence c{heap, std::vector<Elem>(n, n), {}};
      for (Elem a = 0; a < n; ++a) {
        if (c.class_of[a] != n) {
          continue;
        }
        Elem k = c.classes.size();
        c.classes.emplace_back();
        for (Elem b = a; b < n; ++b) {
          if (c.class_of[b] == n && related(a, b)) {
            c.class_of[b] = k;
            c.classes[k].push_back(b);
          }
        }
      }
      return c;
    }
  }  // namespace

  HeapCongruence congruence_of(SubHeap const& sub) {
    FiniteHeap const& h = sub.parent;
    std::vector<bool> in(h.order(), false);
    for (Elem s : sub.elements) {
      in[s] = true;
    }
    return congruence_by(h, [&](Elem a, Elem b) {
      return std::any_of(sub.elements.begin(), sub.elements.end(), [&](Elem s) { return in[h.bracket(a, b, s)]; });
    });
  }

  HeapCongruence congruence_of_universal(SubHeap const& sub) {
    FiniteHeap const& h = sub.parent;
    std::vector<bool> in(h.order(), false);
    for (Elem s : sub.elements) {
      in[s] = true;
    }
    return congruence_by(h, [&](Elem a, Elem b) {
      return std::all_of(sub.elements.begin(), sub.elements.end(), [&](Elem s) { return in[h.bracket(a, b, s)]; });
    });
  }

  HeapCongruence kernel_congruence(FiniteHeap const& heap, std::span<Elem const> images) {
    if (images.size() != heap.order()) {
      fail(ErrorKind::range, "kernel_congruence: one image per element is required");
    }
    return congruence_by(heap, [&](Elem a, Elem b) { return images[a] == images[b]; });
  }

  std::pair<FiniteHeap, HeapMorphism> quotient_heap(HeapCongruence const& congruence) {
    FiniteHeap const& h = congruence.parent;
    std::size_t       k = congruence.classes.size();
    Table             t(k, k);
    for (Elem i = 0; i < k; ++i) {
      for (Elem j = 0; j < k; ++j) {
        t(i, j) = congruence.class_of[h.add(congruence.classes[i][0], congruence.classes[j][0])];
      }
    }
    // The classes must be compatible with the operation.
    for (Elem a = 0; a < h.order(); ++a) {
      for (Elem b = 0; b < h.order(); ++b) {
        Elem ca = congruence.class_of[a];
        Elem cb = congruence.class_of[b];
        if (congruence.class_of[h.add(a, b)] != t(ca, cb)) {
          fail(ErrorKind::precondition_failed, "quotient_heap: partition is not a congruence", {a, b});
        }
      }
    }
    FiniteHeap q = FiniteHeap::trusted(std::move(t));
    return {q, HeapMorphism::unchecked(h, q, congruence.class_of)};
  }

  std::pair<FiniteHeap, HeapMorphism> quotient_heap(SubHeap const& sub) {
    return quotient_heap(congruence_of(sub));
  }

  std::pair<FiniteHeap, HeapMorphism> subheap_as_heap(SubHeap const& sub) {
    FiniteHeap const& h = sub.parent;
    std::size_t       k = sub.elements.size();
    std::vector<Elem> index(h.order(), 0);
    for (Elem i = 0; i < k; ++i) {
      index[sub.elements[i]] = i;
    }
    Elem  base = sub.elements[0];
    Table t(k, k);
    for (Elem i = 0; i < k; ++i) {
      for (Elem j = 0; j < k; ++j) {
        t(i, j) = index[h.bracket(sub.elements[i], base, sub.elements[j])];
      }
    }
    FiniteHeap s = FiniteHeap::trusted(std::move(t));
    return {s, HeapMorphism::unchecked(s, h, sub.elements)};
  }

  void check_morphism(FiniteHeap const& source, FiniteHeap const& target, std::span<Elem const> images) {
    if (images.size() != source.order()) {
      fail(ErrorKind::range, "morphism: one image per source element is required");
    }
    for (Elem x = 0; x < images.size(); ++x) {
      if (images[x] >= target.order()) {
        fail(ErrorKind::range, "morphism: image out of range", {x, images[x]});
      }
    }
    Elem f0 = images[0];
    for (Elem x = 0; x < source.order(); ++x) {
      for (Elem z = 0; z < source.order(); ++z) {
        if (images[source.add(x, z)] != target.bracket(images[x], f0, images[z])) {
          fail(ErrorKind::morphism_violation,
               "morphism: f([x,0,z]) != [f(x),f(0),f(z)] at " + tuple_text({x, 0, z}),
               {x, 0, z});
        }
      }
    }
  }

}  // namespace trusslab
