#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "trusslab/heap.hpp"
#include "trusslab/morphism.hpp"
#include "trusslab/truss.hpp"

namespace trusslab {

  namespace detail {
    struct ModuleRep {
      Truss       truss;
      FiniteHeap  heap;
      Table       action;  // |T| rows, one column per carrier element
      bool        normalised = false;
      std::string label;
    };
  }  // namespace detail

  // A left module over a truss: an abelian heap with an associative action
  // distributing over both heap structures.
  class TModule {
   public:
    Truss const& truss() const noexcept {
      return _rep->truss;
    }
    FiniteHeap const& heap() const noexcept {
      return _rep->heap;
    }
    std::size_t order() const noexcept {
      return _rep->heap.order();
    }
    Elem act(Elem t, Elem m) const noexcept {
      return _rep->action(t, m);
    }
    Table const& action() const noexcept {
      return _rep->action;
    }
    // Unital truss acting with 1.m = m.
    bool is_normalised() const noexcept {
      return _rep->normalised;
    }
    std::string const& label() const noexcept {
      return _rep->label;
    }
    TModule relabeled(std::string label) const;

    friend bool operator==(TModule const& a, TModule const& b) noexcept {
      return a._rep == b._rep
             || (a._rep->action == b._rep->action && a._rep->heap == b._rep->heap
                 && a._rep->truss == b._rep->truss);
    }

    static TModule trusted(Truss truss, FiniteHeap heap, Table action, std::string label = {});

   private:
    explicit TModule(std::shared_ptr<detail::ModuleRep const> rep) : _rep(std::move(rep)) {}
    std::shared_ptr<detail::ModuleRep const> _rep;
  };

  using ModuleMorphism = Morphism<TModule>;

  TModule validate_module(Truss truss, FiniteHeap heap, Table action, std::string label = {});

  // T(M) over T(R) for an R-module given by tables.
  TModule module_from_ring_module(Table const& ring_add,
                                  Table const& ring_mul,
                                  Table const& module_add,
                                  Table const& action,
                                  std::string  label = {});

  // T acting on itself by left multiplication.
  TModule regular_module(Truss const& truss);
  // The singleton module.
  TModule terminal_module(Truss const& truss);

  std::vector<Elem> absorbers(TModule const& module);

  // (m, n) is encoded as m * |N| + n.
  inline Elem pair_index(Elem m, Elem n, std::size_t second_order) noexcept {
    return m * second_order + n;
  }

  struct ProductModule {
    TModule                       module;
    ModuleMorphism                pi1;
    ModuleMorphism                pi2;
    std::optional<ModuleMorphism> eps1;  // m -> (m, e2), e2 the least absorber of N
    std::optional<ModuleMorphism> eps2;  // n -> (e1, n)
  };

  ProductModule product_module(TModule const& m, TModule const& n);

  // M^X for |X| = k.  A function f is encoded as the base-|M| number with
  // digits f(0) f(1) ... f(k-1), most significant first.
  TModule power_module(TModule const& m, std::size_t k);

  // M^(e): t ._e m = [t.m, t.e, e].
  TModule induced_module(TModule const& m, Elem e);

  struct Submodule {
    TModule           parent;
    std::vector<Elem> elements;  // sorted
  };

  Submodule submodule_check(TModule const& module, std::vector<Elem> subset);

  // Closed sub-heap with t ._e n in N for all t and n, e in N.
  bool is_induced_submodule(TModule const& module, std::vector<Elem> const& subset);

  // The submodule relabelled onto {0..k-1} in increasing order, with the
  // inclusion.
  std::pair<TModule, ModuleMorphism> submodule_as_module(Submodule const& sub);

  // M/N for a submodule.
  std::pair<TModule, ModuleMorphism> quotient_module(Submodule const& sub);
  // M/S for any sub-heap S; throws action_not_descending when the action does
  // not respect the classes of ~_S.
  std::pair<TModule, ModuleMorphism> quotient_module(TModule const& module, std::vector<Elem> subheap);
  // M modulo the kernel relation of a map defined on M.
  std::pair<TModule, ModuleMorphism> quotient_module(TModule const& module, HeapCongruence const& congruence);

  // s . m := f(s) . m.
  TModule restrict_scalars(TrussMorphism const& f, TModule const& module);

  // Hom_S(T, M) for f : S -> T and an S-module M, as a T-module with
  // (t . g)(t') = g(t' t).  maps[i] is the carrier element i.
  struct HomModule {
    TModule                        module;
    std::vector<std::vector<Elem>> maps;
  };

  // Throws empty_subset when there is no S-module map T -> M.
  HomModule hom_induced_module(TrussMorphism const& f, TModule const& module);

  void check_morphism(TModule const& source, TModule const& target, std::span<Elem const> images);

  inline FiniteHeap const& heap_of(TModule const& module) noexcept {
    return module.heap();
  }

}  // namespace trusslab
