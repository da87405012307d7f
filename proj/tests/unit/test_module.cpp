#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"

using namespace trusslab;
using support::error_kind;
using support::z_add;
using support::z_mul;

namespace {

  std::vector<Elem> images_of(ModuleMorphism const& f) {
    return {f.images().begin(), f.images().end()};
  }

  // Z/2 as a module over T(Z/4) through reduction.
  TModule z2_over_z4() {
    Table act(4, 2);
    for (Elem r = 0; r < 4; ++r) {
      for (Elem m = 0; m < 2; ++m) {
        act(r, m) = (r * m) % 2;
      }
    }
    return module_from_ring_module(z_add(4), z_mul(4), z_add(2), act);
  }

}  // namespace

TEST_CASE("validate_module on ring modules and the singleton") {
  Truss   t = ring_truss(4);
  TModule r = regular_module(t);
  CHECK(r.is_normalised());
  CHECK(oracle::is_module(t, oracle::ternary_of(r.heap()), r.action()));
  for (std::size_t n = 1; n <= 3; ++n) {
    for (Truss const& s : enumerate_trusses(n)) {
      TModule star = terminal_module(s);
      CHECK(star.order() == 1);
      CHECK_NOTHROW(validate_module(s, FiniteHeap(), Table(s.order(), 1, 0)));
    }
  }
}

TEST_CASE("validate_module rejects t.m = t(2m) over T(Z/2)") {
  Truss t = ring_truss(2);
  Table act(2, 4);
  for (Elem s = 0; s < 2; ++s) {
    for (Elem m = 0; m < 4; ++m) {
      act(s, m) = (s * 2 * m) % 4;
    }
  }
  CHECK(act(1, act(1, 1)) == 0);
  CHECK(act(t.mul(1, 1), 1) == 2);
  CHECK_FALSE(oracle::is_module(t, oracle::ternary_of(cyclic_heap(4)), act));
  CHECK(error_kind([&] { validate_module(t, cyclic_heap(4), act); }) == ErrorKind::action_associativity);
  auto w = support::error_witness([&] { validate_module(t, cyclic_heap(4), act); });
  REQUIRE(w.size() == 3);
  CHECK(act(w[0], act(w[1], w[2])) != act(t.mul(w[0], w[1]), w[2]));
}

TEST_CASE("validate_module reports each axiom") {
  // 0.m = m + 1 on Z/2 over T(Z/2): 0.(0.m) = m but (0*0).m = m + 1.
  Table assoc{{1, 0}, {0, 1}};
  CHECK(error_kind([&] { validate_module(ring_truss(2), cyclic_heap(2), assoc); }) == ErrorKind::action_associativity);

  // Over T(Z/3), t.1 = 1 for t != 0: associative, but t -> t.1 is not a
  // heap map Z/3 -> Z/2.
  Table left{{0, 0}, {0, 1}, {0, 1}};
  CHECK_FALSE(oracle::is_module(ring_truss(3), oracle::ternary_of(cyclic_heap(2)), left));
  CHECK(error_kind([&] { validate_module(ring_truss(3), cyclic_heap(2), left); })
        == ErrorKind::action_left_distributivity);

  // Over the one-element truss, an idempotent m -> t.m that is not a heap map.
  Table right{{0, 0, 2, 2}};
  CHECK_FALSE(oracle::is_module(ring_truss(1), oracle::ternary_of(cyclic_heap(4)), right));
  CHECK(error_kind([&] { validate_module(ring_truss(1), cyclic_heap(4), right); })
        == ErrorKind::action_right_distributivity);

  CHECK(error_kind([&] { validate_module(ring_truss(2), cyclic_heap(2), Table(3, 2)); }) == ErrorKind::range);
}

TEST_CASE("module_from_ring_module") {
  TModule m = z2_over_z4();
  CHECK(m.order() == 2);
  CHECK(m.is_normalised());
  CHECK(oracle::is_module(m.truss(), oracle::ternary_of(m.heap()), m.action()));
  TModule self = module_from_ring_module(z_add(4), z_mul(4), z_add(4), z_mul(4));
  CHECK(self == regular_module(ring_truss(4)));
  TModule zero = module_from_ring_module(z_add(4), z_mul(4), Table{{0}}, Table(4, 1, 0));
  CHECK(zero.order() == 1);
  Table bad(4, 2);
  for (Elem r = 0; r < 4; ++r) {
    bad(r, 0) = 0;
    bad(r, 1) = r == 1 ? 1 : 0;
  }
  CHECK(error_kind([&] { module_from_ring_module(z_add(4), z_mul(4), z_add(2), bad); }) == ErrorKind::not_a_module);
}

TEST_CASE("product_module") {
  Truss   t    = ring_truss(2);
  TModule star = terminal_module(t);
  TModule r    = regular_module(t);
  CHECK(find_isomorphism(product_module(star, r).module, r).has_value());

  auto mods2 = enumerate_modules(t, 2);
  auto mods3 = enumerate_modules(t, 3);
  REQUIRE(!mods2.empty());
  REQUIRE(!mods3.empty());
  for (TModule const& m : mods2) {
    for (TModule const& n : mods3) {
      ProductModule mn = product_module(m, n);
      ProductModule nm = product_module(n, m);
      CHECK(mn.module.order() == 6);
      CHECK(is_epi(mn.pi1));
      CHECK(is_epi(mn.pi2));
      CHECK(oracle::isomorphic(mn.module, nm.module));
      CHECK(find_isomorphism(mn.module, nm.module).has_value());
      CHECK(absorbers(mn.module).size() == absorbers(m).size() * absorbers(n).size());
      if (mn.eps1) {
        CHECK(is_mono(*mn.eps1));
        CHECK_FALSE(is_epi(*mn.eps1));
      }
    }
  }
  CHECK(error_kind([&] { product_module(r, regular_module(ring_truss(3))); }) == ErrorKind::mixed_truss);
}

TEST_CASE("power_module") {
  for (std::size_t m = 1; m <= 3; ++m) {
    for (TModule const& mod : enumerate_modules(ring_truss(2), m)) {
      CHECK(find_isomorphism(power_module(mod, 1), mod).has_value());
      TModule sq = power_module(mod, 2);
      CHECK(sq.order() == m * m);
      CHECK(find_isomorphism(sq, product_module(mod, mod).module).has_value());
      CHECK(oracle::isomorphic(sq, product_module(mod, mod).module));
    }
  }
  CHECK(error_kind([] { power_module(regular_module(ring_truss(2)), 0); }) == ErrorKind::range);
}

TEST_CASE("absorbers") {
  Truss t = ring_truss(4);
  CHECK(absorbers(terminal_module(t)) == std::vector<Elem>{0});
  CHECK(absorbers(regular_module(t)) == std::vector<Elem>{0});
  for (TModule const& m : build_universe(ring_truss(2), 3).modules) {
    CHECK(absorbers(m) == oracle::absorbers(m));
  }
}

TEST_CASE("induced_module") {
  TModule m  = regular_module(ring_truss(4));
  TModule m1 = induced_module(m, 1);
  CHECK(m1.act(3, 2) == 0);
  CHECK(induced_module(m, 0).action() == m.action());
  CHECK(error_kind([&] { induced_module(m, 4); }) == ErrorKind::range);

  for (TModule const& mod : build_universe(ring_truss(3), 3).modules) {
    for (Elem e : absorbers(mod)) {
      CHECK(induced_module(mod, e).action() == mod.action());
    }
    for (Elem e = 0; e < mod.order(); ++e) {
      TModule me = induced_module(mod, e);
      CHECK(oracle::is_module(mod.truss(), oracle::ternary_of(mod.heap()), me.action()));
      CHECK(find_isomorphism(me, induced_module(mod, 0)).has_value());
      for (Elem f = 0; f < mod.order(); ++f) {
        Table twice = induced_module(me, f).action();
        bool  found = false;
        for (Elem g = 0; g < mod.order(); ++g) {
          found = found || induced_module(mod, g).action() == twice;
        }
        CHECK(found);
      }
    }
  }
}

TEST_CASE("submodules and quotients") {
  Truss   t = ring_truss(4);
  TModule r = regular_module(t);
  CHECK(submodule_check(r, {0, 2}).elements == std::vector<Elem>{0, 2});
  CHECK(error_kind([&] { submodule_check(r, {1, 3}); }) == ErrorKind::not_action_closed);
  CHECK(error_kind([&] { submodule_check(r, {0, 1}); }) == ErrorKind::not_closed);

  auto [whole, to_whole] = quotient_module(submodule_check(r, {0, 1, 2, 3}));
  CHECK(whole.order() == 1);

  auto [q, pi] = quotient_module(submodule_check(r, {0, 2}));
  CHECK(q.order() == 2);
  CHECK(images_of(pi) == std::vector<Elem>{0, 1, 0, 1});
  CHECK(find_isomorphism(q, z2_over_z4()).has_value());

  auto [same, id] = quotient_module(submodule_check(r, {0}));
  CHECK(find_isomorphism(same, r).has_value());

  // A sub-heap that is not a submodule still gives a quotient when the
  // action respects its classes.
  auto [q2, pi2] = quotient_module(r, std::vector<Elem>{1, 3});
  CHECK(q2.order() == 2);
}

TEST_CASE("quotient_module reports an action that does not descend") {
  std::size_t found = 0;
  for (std::size_t n = 1; n <= 2; ++n) {
    for (Truss const& t : enumerate_trusses(n)) {
      for (TModule const& m : build_universe(t, 4).modules) {
        oracle::Ternary h = oracle::ternary_of(m.heap());
        for (std::size_t mask = 1; mask < (std::size_t{1} << m.order()); ++mask) {
          std::vector<Elem> s;
          for (Elem x = 0; x < m.order(); ++x) {
            if (mask >> x & 1) {
              s.push_back(x);
            }
          }
          if (!oracle::closed(h, s)) {
            continue;
          }
          auto classes = oracle::sim_classes(m.heap(), s);
          std::vector<std::size_t> cls(m.order());
          for (std::size_t c = 0; c < classes.size(); ++c) {
            for (Elem x : classes[c]) {
              cls[x] = c;
            }
          }
          bool descends = true;
          for (Elem a = 0; a < t.order(); ++a) {
            for (Elem x = 0; x < m.order(); ++x) {
              for (Elem y = 0; y < m.order(); ++y) {
                descends = descends && (cls[x] != cls[y] || cls[m.act(a, x)] == cls[m.act(a, y)]);
              }
            }
          }
          auto kind = error_kind([&] { quotient_module(m, s); });
          if (descends) {
            CHECK_FALSE(kind.has_value());
          } else {
            CHECK(kind == ErrorKind::action_not_descending);
            ++found;
          }
        }
      }
    }
  }
  CHECK(found > 0);
}

TEST_CASE("restrict_scalars") {
  Truss   z2 = ring_truss(2);
  Truss   z4 = ring_truss(4);
  TModule r  = regular_module(z4);
  CHECK(restrict_scalars(identity_morphism(z4), r).action() == r.action());

  // 0 -> 0, 1 -> 1 is not a heap map: [1,0,1] = 0 in Z/2 but 2 in Z/4.
  CHECK(error_kind([&] { TrussMorphism(z2, z4, {0, 1}); }) == ErrorKind::morphism_violation);

  // The truss maps T(Z/2) -> T(Z/4) are the constants at the idempotents.
  std::vector<std::vector<Elem>> expected;
  for (auto const& f : oracle::heap_maps(z2.heap(), z4.heap())) {
    bool mult = true;
    for (Elem a = 0; a < 2; ++a) {
      for (Elem b = 0; b < 2; ++b) {
        mult = mult && f[z2.mul(a, b)] == z4.mul(f[a], f[b]);
      }
    }
    if (mult) {
      expected.push_back(f);
    }
  }
  CHECK(expected == std::vector<std::vector<Elem>>{{0, 0}, {1, 1}});
  std::vector<std::vector<Elem>> got;
  for (TrussMorphism const& f : enumerate_homs(z2, z4)) {
    got.emplace_back(f.images().begin(), f.images().end());
    TModule res = restrict_scalars(f, r);
    CHECK(res.order() == 4);
    CHECK(oracle::is_module(z2, oracle::ternary_of(res.heap()), res.action()));
  }
  CHECK(got == expected);

  // Z/6 -> Z/2 reduction.
  TrussMorphism red(ring_truss(6), z2, {0, 1, 0, 1, 0, 1});
  TModule       res = restrict_scalars(red, regular_module(z2));
  CHECK(res.truss() == ring_truss(6));
}

TEST_CASE("hom_induced_module") {
  Truss     t   = ring_truss(2);
  HomModule hom = hom_induced_module(identity_morphism(t), regular_module(t));
  CHECK(hom.module.order() == 2);
  CHECK(hom.maps.size() == oracle::module_maps(regular_module(t), regular_module(t)).size());
  CHECK(hom.maps == oracle::module_maps(regular_module(t), regular_module(t)));
  CHECK(hom_induced_module(identity_morphism(t), terminal_module(t)).module.order() == 1);
  CHECK(oracle::is_module(t, oracle::ternary_of(hom.module.heap()), hom.module.action()));

  TrussMorphism red(ring_truss(4), t, {0, 1, 0, 1});
  for (TModule const& m : build_universe(ring_truss(4), 3).modules) {
    HomModule h = hom_induced_module(red, m);
    TModule   s = restrict_scalars(red, regular_module(t));
    CHECK(h.maps == oracle::module_maps(s, m));
    CHECK(oracle::is_module(t, oracle::ternary_of(h.module.heap()), h.module.action()));
  }
}

TEST_CASE("is_induced_submodule") {
  TModule r = regular_module(ring_truss(4));
  CHECK(is_induced_submodule(r, {0, 2}));
  CHECK(is_induced_submodule(r, {0, 1, 2, 3}));
  CHECK_FALSE(is_induced_submodule(r, {0, 1}));
}
