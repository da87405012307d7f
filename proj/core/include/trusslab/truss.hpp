#pragma once

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trusslab/heap.hpp"
#include "trusslab/morphism.hpp"

namespace trusslab {

  namespace detail {
    struct TrussRep {
      FiniteHeap          heap;
      Table               mul;
      std::optional<Elem> unit;
      std::optional<Elem> zero;
      bool                commutative = false;
      std::string         label;
    };
  }  // namespace detail

  // An abelian heap with an associative multiplication distributing over the
  // heap operation on both sides.  The unit is detected (it is unique when it
  // exists); the zero is a designation supplied by whoever builds the truss.
  class Truss {
   public:
    FiniteHeap const& heap() const noexcept {
      return _rep->heap;
    }
    std::size_t order() const noexcept {
      return _rep->heap.order();
    }
    Elem mul(Elem a, Elem b) const noexcept {
      return _rep->mul(a, b);
    }
    Table const& mul_table() const noexcept {
      return _rep->mul;
    }
    std::optional<Elem> unit() const noexcept {
      return _rep->unit;
    }
    std::optional<Elem> zero() const noexcept {
      return _rep->zero;
    }
    bool is_commutative() const noexcept {
      return _rep->commutative;
    }
    bool is_unital() const noexcept {
      return _rep->unit.has_value();
    }
    std::string const& label() const noexcept {
      return _rep->label;
    }

    Truss with_zero(std::optional<Elem> zero) const;
    Truss relabeled(std::string label) const;

    friend bool operator==(Truss const& a, Truss const& b) noexcept {
      return a._rep == b._rep
             || (a._rep->heap == b._rep->heap && a._rep->mul == b._rep->mul
                 && a._rep->zero == b._rep->zero);
    }

    static Truss trusted(FiniteHeap heap, Table mul, std::optional<Elem> zero, std::string label = {});

   private:
    explicit Truss(std::shared_ptr<detail::TrussRep const> rep) : _rep(std::move(rep)) {}
    std::shared_ptr<detail::TrussRep const> _rep;
  };

  using TrussMorphism = Morphism<Truss>;

  Truss validate_truss(FiniteHeap                heap,
                       Table                     mul,
                       std::optional<Elem>       unit  = std::nullopt,
                       std::optional<Elem>       zero  = std::nullopt,
                       std::string               label = {});

  // T(R) for a finite (not necessarily unital) ring given by its tables.  The
  // zero is the additive identity, the unit the multiplicative one if any.
  Truss truss_from_ring(Table const& add, Table const& mul, std::string label = {});

  // T(Z/n).
  Truss ring_truss(std::size_t n);

  // The element z with z*t = t*z = z for all t, if any.
  std::optional<Elem> multiplicative_absorber(Truss const& truss);

  // Nonzero t with some nonzero t' such that t*t' = t'*t = 0.
  std::vector<Elem> absorber_factors(Truss const& truss);
  // Nonzero t with t*t' = 0 for some nonzero t'.
  std::vector<Elem> left_absorbers(Truss const& truss);
  // Nonzero t with t'*t = 0 for some nonzero t'.
  std::vector<Elem> right_absorbers(Truss const& truss);

  struct Cancellation {
    bool                               holds = true;
    std::optional<std::array<Elem, 3>> witness;  // (t, x, y) with x != y cancelling badly
  };

  Cancellation has_cancellation(Truss const& truss);

  bool is_domain_truss(Truss const& truss);

  void check_morphism(Truss const& source, Truss const& target, std::span<Elem const> images);

  inline FiniteHeap const& heap_of(Truss const& truss) noexcept {
    return truss.heap();
  }

}  // namespace trusslab
