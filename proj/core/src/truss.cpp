#include "trusslab/truss.hpp"

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

    std::optional<Elem> find_unit(Table const& mul) {
      std::size_t n = mul.rows();
      for (Elem u = 0; u < n; ++u) {
        bool ok = true;
        for (Elem t = 0; t < n && ok; ++t) {
          ok = mul(u, t) == t && mul(t, u) == t;
        }
        if (ok) {
          return u;
        }
      }
      return std::nullopt;
    }

    bool commutes(Table const& mul) {
      for (Elem a = 0; a < mul.rows(); ++a) {
        for (Elem b = a + 1; b < mul.rows(); ++b) {
          if (mul(a, b) != mul(b, a)) {
            return false;
          }
        }
      }
      return true;
    }

    Elem require_zero(Truss const& truss, char const* what) {
      if (!truss.zero()) {
        fail(ErrorKind::no_zero, std::string(what) + ": the truss has no designated zero");
      }
      return *truss.zero();
    }

  }  // namespace

  Truss Truss::trusted(FiniteHeap heap, Table mul, std::optional<Elem> zero, std::string label) {
    auto rep         = std::make_shared<detail::TrussRep>();
    rep->unit        = find_unit(mul);
    rep->commutative = commutes(mul);
    rep->heap        = std::move(heap);
    rep->mul         = std::move(mul);
    rep->zero        = zero;
    rep->label       = std::move(label);
    return Truss(std::move(rep));
  }

  Truss Truss::with_zero(std::optional<Elem> zero) const {
    if (zero && *zero >= order()) {
      fail(ErrorKind::range, "truss: zero out of range", {*zero});
    }
    auto rep  = std::make_shared<detail::TrussRep>(*_rep);
    rep->zero = zero;
    return Truss(std::move(rep));
  }

  Truss Truss::relabeled(std::string label) const {
    auto rep   = std::make_shared<detail::TrussRep>(*_rep);
    rep->label = std::move(label);
    return Truss(std::move(rep));
  }

  Truss validate_truss(FiniteHeap heap, Table mul, std::optional<Elem> unit, std::optional<Elem> zero, std::string label) {
    std::size_t n = heap.order();
    if (mul.rows() != n || mul.cols() != n) {
      fail(ErrorKind::range, "validate_truss: multiplication table must be order x order");
    }
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (mul(a, b) >= n) {
          fail(ErrorKind::range, "validate_truss: product out of range at " + tuple_text({a, b}), {a, b});
        }
      }
    }
    if (unit && *unit >= n) {
      fail(ErrorKind::range, "validate_truss: unit out of range", {*unit});
    }
    if (zero && *zero >= n) {
      fail(ErrorKind::range, "validate_truss: zero out of range", {*zero});
    }
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        for (Elem c = 0; c < n; ++c) {
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
            fail(ErrorKind::associativity_violation,
                 "validate_truss: (ab)c != a(bc) at " + tuple_text({a, b, c}),
                 {a, b, c});
          }
        }
      }
    }
    // Multiplication by w on either side must be a heap endomorphism, which
    // the retract form decides in O(n^3); a failure is then located in the
    // full form w[x,y,z] = [wx,wy,wz] (resp. [x,y,z]w = [xw,yw,zw]).
    for (int side = 0; side < 2; ++side) {
      auto m = [&](Elem w, Elem x) { return side == 0 ? mul(w, x) : mul(x, w); };
      bool ok = true;
      for (Elem w = 0; w < n && ok; ++w) {
        for (Elem x = 0; x < n && ok; ++x) {
          for (Elem z = 0; z < n && ok; ++z) {
            ok = m(w, heap.add(x, z)) == heap.bracket(m(w, x), m(w, 0), m(w, z));
          }
        }
      }
      if (ok) {
        continue;
      }
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          for (Elem z = 0; z < n; ++z) {
            for (Elem w = 0; w < n; ++w) {
              Elem lhs = m(w, heap.bracket(x, y, z));
              if (lhs != heap.bracket(m(w, x), m(w, y), m(w, z))) {
                if (side == 0) {
                  fail(ErrorKind::distributivity_violation,
                       "validate_truss: left distributivity w[x,y,z] = [wx,wy,wz] fails at (w, x, y, z) = "
                           + tuple_text({w, x, y, z}),
                       {w, x, y, z});
                }
                fail(ErrorKind::distributivity_violation,
                     "validate_truss: right distributivity [x,y,z]w = [xw,yw,zw] fails at (x, y, z, w) = "
                         + tuple_text({x, y, z, w}),
                     {x, y, z, w});
              }
            }
          }
        }
      }
      fail(ErrorKind::internal_assertion, "validate_truss: retract check and full check disagree");
    }
    if (unit) {
      for (Elem t = 0; t < n; ++t) {
        if (mul(*unit, t) != t || mul(t, *unit) != t) {
          fail(ErrorKind::bad_unit, "validate_truss: 1t = t1 = t fails at " + tuple_text({*unit, t}), {*unit, t});
        }
      }
    }
    return Truss::trusted(std::move(heap), std::move(mul), zero, std::move(label));
  }

  Truss truss_from_ring(Table const& add, Table const& mul, std::string label) {
    std::size_t n = add.rows();
    if (n == 0 || add.cols() != n || mul.rows() != n || mul.cols() != n) {
      fail(ErrorKind::not_a_ring, "truss_from_ring: tables must be square of the same order");
    }
    if (add.bound() > n || mul.bound() > n) {
      fail(ErrorKind::range, "truss_from_ring: entry out of range");
    }
    FiniteHeap heap;
    try {
      heap = heap_from_group(add);
    } catch (Error const& e) {
      fail(ErrorKind::not_a_ring, std::string("truss_from_ring: addition: ") + e.what(), e.witness());
    }
    Elem zero = 0;
    while (add(zero, 0) != 0) {
      ++zero;
    }
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        for (Elem c = 0; c < n; ++c) {
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
            fail(ErrorKind::not_a_ring, "truss_from_ring: (ab)c != a(bc) at " + tuple_text({a, b, c}), {a, b, c});
          }
          if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) {
            fail(ErrorKind::not_a_ring, "truss_from_ring: a(b+c) != ab+ac at " + tuple_text({a, b, c}), {a, b, c});
          }
          if (mul(add(a, b), c) != add(mul(a, c), mul(b, c))) {
            fail(ErrorKind::not_a_ring, "truss_from_ring: (a+b)c != ac+bc at " + tuple_text({a, b, c}), {a, b, c});
          }
        }
      }
    }
    return Truss::trusted(std::move(heap), mul, zero, std::move(label));
  }

  Truss ring_truss(std::size_t n) {
    if (n == 0) {
      fail(ErrorKind::range, "ring_truss: n must be positive");
    }
    Table add(n, n);
    Table mul(n, n);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        add(a, b) = (a + b) % n;
        mul(a, b) = (a * b) % n;
      }
    }
    return truss_from_ring(add, mul, "Z" + std::to_string(n));
  }

  std::optional<Elem> multiplicative_absorber(Truss const& truss) {
    std::size_t n = truss.order();
    for (Elem z = 0; z < n; ++z) {
      bool ok = true;
      for (Elem t = 0; t < n && ok; ++t) {
        ok = truss.mul(z, t) == z && truss.mul(t, z) == z;
      }
      if (ok) {
        return z;
      }
    }
    return std::nullopt;
  }

  std::vector<Elem> absorber_factors(Truss const& truss) {
    Elem              z = require_zero(truss, "absorber_factors");
    std::vector<Elem> result;
    for (Elem t = 0; t < truss.order(); ++t) {
      if (t == z) {
        continue;
      }
      for (Elem u = 0; u < truss.order(); ++u) {
        if (u != z && truss.mul(t, u) == z && truss.mul(u, t) == z) {
          result.push_back(t);
          break;
        }
      }
    }
    return result;
  }

  namespace {
    std::vector<Elem> one_sided(Truss const& truss, bool left, char const* what) {
      Elem              z = require_zero(truss, what);
      std::vector<Elem> result;
      for (Elem t = 0; t < truss.order(); ++t) {
        if (t == z) {
          continue;
        }
        for (Elem u = 0; u < truss.order(); ++u) {
          if (u != z && (left ? truss.mul(t, u) : truss.mul(u, t)) == z) {
            result.push_back(t);
            break;
          }
        }
      }
      return result;
    }
  }  // namespace

  std::vector<Elem> left_absorbers(Truss const& truss) {
    return one_sided(truss, true, "left_absorbers");
  }

  std::vector<Elem> right_absorbers(Truss const& truss) {
    return one_sided(truss, false, "right_absorbers");
  }

  Cancellation has_cancellation(Truss const& truss) {
    Elem        z = require_zero(truss, "has_cancellation");
    std::size_t n = truss.order();
    for (Elem t = 0; t < n; ++t) {
      if (t == z) {
        continue;
      }
      for (int side = 0; side < 2; ++side) {
        for (Elem x = 0; x < n; ++x) {
          for (Elem y = x + 1; y < n; ++y) {
            bool equal = side == 0 ? truss.mul(t, x) == truss.mul(t, y) : truss.mul(x, t) == truss.mul(y, t);
            if (equal) {
              return Cancellation{false, std::array<Elem, 3>{t, x, y}};
            }
          }
        }
      }
    }
    return Cancellation{};
  }

  bool is_domain_truss(Truss const& truss) {
    return truss.is_commutative() && truss.zero() && absorber_factors(truss).empty();
  }

  void check_morphism(Truss const& source, Truss const& target, std::span<Elem const> images) {
    check_morphism(source.heap(), target.heap(), images);
    for (Elem x = 0; x < source.order(); ++x) {
      for (Elem y = 0; y < source.order(); ++y) {
        if (images[source.mul(x, y)] != target.mul(images[x], images[y])) {
          fail(ErrorKind::morphism_violation,
               "truss morphism: f(xy) != f(x)f(y) at " + tuple_text({x, y}),
               {x, y});
        }
      }
    }
  }

}  // namespace trusslab
