#pragma once

#include <cstddef>
#include <vector>

#include "trusslab/exactness.hpp"
#include "trusslab/heap.hpp"
#include "trusslab/module.hpp"
#include "trusslab/truss.hpp"

namespace trusslab {

  // Largest orders the enumerators accept; larger requests throw
  // bound_exceeded.
  struct CensusBounds {
    std::size_t heaps   = 8;
    std::size_t trusses = 4;
    std::size_t modules = 4;
  };

  // Invariant factor lists d1 | d2 | ... | dk with product n; cyclic first.
  std::vector<std::vector<std::size_t>> abelian_group_types(std::size_t n);

  // One heap per isomorphism class, in the order of abelian_group_types.
  std::vector<FiniteHeap> enumerate_heaps(std::size_t n, CensusBounds const& bounds = {});

  // One truss per isomorphism class, grouped by heap and sorted by canonical
  // multiplication table.  The zero is designated as the multiplicative
  // absorber when there is one.
  std::vector<Truss> enumerate_trusses(std::size_t n, CensusBounds const& bounds = {});

  // Every truss of order 1..max_order.
  std::vector<Truss> truss_census(std::size_t max_order, CensusBounds const& bounds = {});

  // One module per isomorphism class, grouped by heap and sorted by canonical
  // action table.
  std::vector<TModule> enumerate_modules(Truss const& truss, std::size_t m, CensusBounds const& bounds = {});

  Universe build_universe(Truss const& truss, std::size_t bound, CensusBounds const& bounds = {});

  // Lexicographically least multiplication table over the automorphisms of
  // the heap (the heap table itself is fixed by them).
  Table canonical_form(Truss const& truss);
  // Lexicographically least action table over the heap automorphisms of the
  // module's carrier.
  Table canonical_form(TModule const& module);

  // All heap automorphisms of h as image arrays, sorted.
  std::vector<std::vector<Elem>> heap_automorphisms(FiniteHeap const& h);

}  // namespace trusslab
