#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "trusslab/error.hpp"
#include "trusslab/morphism.hpp"
#include "trusslab/table.hpp"

namespace trusslab {

  namespace detail {
    struct HeapRep {
      std::size_t              order = 0;
      Table                    add;  // the retract G(H;0)
      Table                    sub;  // sub(a, b) = a * b^-1 in G(H;0)
      std::vector<Elem>        neg;
      std::vector<Elem>        generators;
      std::vector<std::size_t> element_order;
      std::string              label;
    };
  }  // namespace detail

  // A finite abelian heap on the carrier {0..n-1}, stored through its group
  // retract at the basepoint 0.  Immutable; copies share the representation.
  class FiniteHeap {
   public:
    FiniteHeap();  // the singleton heap

    std::size_t order() const noexcept {
      return _rep->order;
    }

    // The ternary operation [a, b, c] = a * b^-1 * c.
    Elem bracket(Elem a, Elem b, Elem c) const noexcept {
      return _rep->add(_rep->sub(a, b), c);
    }

    Elem add(Elem a, Elem b) const noexcept {
      return _rep->add(a, b);
    }
    Elem sub(Elem a, Elem b) const noexcept {
      return _rep->sub(a, b);
    }
    Elem neg(Elem a) const noexcept {
      return _rep->neg[a];
    }

    Table const& retract() const noexcept {
      return _rep->add;
    }

    // A generating set of G(H;0) chosen greedily; images of 0 and of these
    // elements determine any heap morphism out of this heap.
    std::span<Elem const> generators() const noexcept {
      return _rep->generators;
    }

    // Order of x in G(H;0).
    std::size_t element_order(Elem x) const noexcept {
      return _rep->element_order[x];
    }

    // Sorted element orders of G(H;0); two abelian heaps are isomorphic iff
    // these agree.
    std::vector<std::size_t> group_type() const;

    std::string const& label() const noexcept {
      return _rep->label;
    }
    FiniteHeap relabeled(std::string label) const;

    friend bool operator==(FiniteHeap const& a, FiniteHeap const& b) noexcept {
      return a._rep == b._rep || a._rep->add == b._rep->add;
    }

    // Builds from a retract table already known to be an abelian group with
    // identity 0.
    static FiniteHeap trusted(Table retract, std::string label = {});

   private:
    explicit FiniteHeap(std::shared_ptr<detail::HeapRep const> rep) : _rep(std::move(rep)) {}
    std::shared_ptr<detail::HeapRep const> _rep;
  };

  using HeapMorphism = Morphism<FiniteHeap>;

  // Validates a full ternary table (n^3 entries, index (a*n + b)*n + c) by
  // checking the retract at 0 is an abelian group and reconstructs the input.
  FiniteHeap validate_heap(std::size_t order, std::span<Elem const> ternary, std::string label = {});
  // Validates a retract table (abelian group with identity 0).
  FiniteHeap validate_heap(Table const& retract, std::string label = {});

  // H(G) for an abelian group table whose identity may be any element.
  FiniteHeap heap_from_group(Table const& group, std::string label = {});

  // G(H;e): a * b = [a, e, b].
  Table group_retract(FiniteHeap const& heap, Elem e);

  // Range checked [a, b, c].
  Elem heap_op(FiniteHeap const& heap, Elem a, Elem b, Elem c);

  std::vector<Elem> ternary_table(FiniteHeap const& heap);

  FiniteHeap cyclic_heap(std::size_t n);
  // Z/d1 x ... x Z/dk with (x1, ..., xk) encoded lexicographically.
  FiniteHeap product_of_cyclic_heap(std::vector<std::size_t> const& factors);

  struct SubHeap {
    FiniteHeap        parent;
    std::vector<Elem> elements;  // sorted
  };

  SubHeap subheap_check(FiniteHeap const& heap, std::vector<Elem> subset);

  // The congruence ~_S; classes are ordered by their least element.
  struct HeapCongruence {
    FiniteHeap                     parent;
    std::vector<Elem>              class_of;
    std::vector<std::vector<Elem>> classes;
  };

  // a ~ b iff [a, b, s] in S for some s in S.
  HeapCongruence congruence_of(SubHeap const& sub);
  // a ~ b iff [a, b, s] in S for every s in S.
  HeapCongruence congruence_of_universal(SubHeap const& sub);
  // Congruence whose classes are the fibres of a map.
  HeapCongruence kernel_congruence(FiniteHeap const& heap, std::span<Elem const> images);

  // H/S together with the canonical projection.
  std::pair<FiniteHeap, HeapMorphism> quotient_heap(SubHeap const& sub);
  std::pair<FiniteHeap, HeapMorphism> quotient_heap(HeapCongruence const& congruence);

  // The sub-heap relabelled onto {0..k-1} in increasing order, with the
  // inclusion into the parent.
  std::pair<FiniteHeap, HeapMorphism> subheap_as_heap(SubHeap const& sub);

  void check_morphism(FiniteHeap const& source, FiniteHeap const& target, std::span<Elem const> images);

  inline FiniteHeap const& heap_of(FiniteHeap const& heap) noexcept {
    return heap;
  }

}  // namespace trusslab
