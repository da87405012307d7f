#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "trusslab/heap.hpp"
#include "trusslab/module.hpp"
#include "trusslab/truss.hpp"

namespace trusslab {

  // Constraints for the backtracking search over heap morphisms A -> B.  A
  // candidate is built by fixing f(0) and then the image of each generator of
  // G(A;0); every element reached is forced by f([x,0,g]) = [f(x),f(0),f(g)].
  struct MapSearch {
    bool injective = false;
    // Called for every element as it receives an image; false rejects.
    std::function<bool(Elem x, Elem y)> allowed;
    // Called once the images of a generator's span are known.  defined[x]
    // tells which entries of images are meaningful.
    std::function<bool(std::span<Elem const> images, std::vector<bool> const& defined)> partial_ok;
  };

  // Visits every heap morphism a -> b meeting the constraints, in a fixed
  // order.  The visitor returns false to stop; the result is false iff it
  // stopped early.
  bool search_heap_maps(FiniteHeap const&                                 a,
                        FiniteHeap const&                                 b,
                        MapSearch const&                                  search,
                        std::function<bool(std::span<Elem const>)> const& visit);

  // All image arrays meeting the constraints, lexicographically sorted.  The
  // top level is split over f(0) across worker threads.
  std::vector<std::vector<Elem>> collect_heap_maps(FiniteHeap const& a,
                                                   FiniteHeap const& b,
                                                   MapSearch const&  search = {});

  // Constraints that turn a heap map search into a module map search.
  MapSearch module_map_search(TModule const& a, TModule const& b);
  MapSearch truss_map_search(Truss const& a, Truss const& b);

  std::vector<HeapMorphism>   enumerate_homs(FiniteHeap const& a, FiniteHeap const& b);
  std::vector<TrussMorphism>  enumerate_homs(Truss const& a, Truss const& b);
  std::vector<ModuleMorphism> enumerate_homs(TModule const& a, TModule const& b);

  // Module morphisms with each image restricted by allowed(x, y).
  std::vector<ModuleMorphism> enumerate_homs(TModule const&                              a,
                                             TModule const&                              b,
                                             std::function<bool(Elem, Elem)> const&      allowed);
  // The lexicographically least module morphism allowed by the filter.
  std::optional<ModuleMorphism> least_hom(TModule const&                         a,
                                          TModule const&                         b,
                                          std::function<bool(Elem, Elem)> const& allowed);
  bool exists_hom(TModule const& a, TModule const& b, std::function<bool(Elem, Elem)> const& allowed);

  // ker_e f as a sub-heap of the source.
  SubHeap kernel_at(HeapMorphism const& f, Elem e);
  SubHeap kernel_at(ModuleMorphism const& f, Elem e);

  template <typename Structure>
  bool is_mono(Morphism<Structure> const& f) {
    return f.is_injective();
  }
  template <typename Structure>
  bool is_epi(Morphism<Structure> const& f) {
    return f.is_surjective();
  }

  std::optional<HeapMorphism>   find_isomorphism(FiniteHeap const& a, FiniteHeap const& b);
  std::optional<TrussMorphism>  find_isomorphism(Truss const& a, Truss const& b);
  std::optional<ModuleMorphism> find_isomorphism(TModule const& a, TModule const& b);

  // Isomorphism between two abelian group tables, identities anywhere.
  std::optional<std::vector<Elem>> find_group_isomorphism(Table const& a, Table const& b);

  // M/Ker f, Im f and the induced isomorphism [m] -> f(m).
  struct FirstIsomorphism {
    TModule        quotient;
    ModuleMorphism projection;
    TModule        image;
    ModuleMorphism inclusion;
    ModuleMorphism iso;
  };

  FirstIsomorphism first_iso_check(ModuleMorphism const& f);

  // Hom(A, B) with the pointwise heap operation.  maps[i] is element i; the
  // list is sorted lexicographically.
  struct HomHeap {
    FiniteHeap                     heap;
    std::vector<std::vector<Elem>> maps;
  };

  HomHeap hom_heap(FiniteHeap const& target, std::vector<std::vector<Elem>> maps);

  std::vector<Elem> pointwise_bracket(FiniteHeap const&        target,
                                      std::span<Elem const>    f,
                                      std::span<Elem const>    g,
                                      std::span<Elem const>    h);

}  // namespace trusslab
