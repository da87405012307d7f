#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "trusslab/table.hpp"

namespace trusslab {

  enum class ErrorKind {
    range,
    malcev_violation,
    associativity_violation,
    not_commutative,
    not_a_group,
    not_closed,
    empty_subset,
    distributivity_violation,
    bad_unit,
    not_a_ring,
    no_zero,
    action_associativity,
    action_left_distributivity,
    action_right_distributivity,
    not_action_closed,
    not_a_module,
    mixed_truss,
    action_not_descending,
    not_in_image,
    not_composable,
    not_domain_truss,
    morphism_violation,
    precondition_failed,
    internal_assertion,
    bound_exceeded,
    parse,
    resolve
  };

  std::string_view to_string(ErrorKind kind) noexcept;

  // Every failure raised by the library.  The witness carries the offending
  // elements (a tuple, a pair, ...) in the order named by the message.
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& message, std::vector<Elem> witness = {});

    ErrorKind kind() const noexcept {
      return _kind;
    }

    std::vector<Elem> const& witness() const noexcept {
      return _witness;
    }

    // The message without the kind prefix.
    std::string const& detail() const noexcept {
      return _detail;
    }

   private:
    ErrorKind         _kind;
    std::string       _detail;
    std::vector<Elem> _witness;
  };

  [[noreturn]] void fail(ErrorKind kind, std::string const& message, std::vector<Elem> witness = {});

}  // namespace trusslab
