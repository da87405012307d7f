#include "trusslab/error.hpp"

namespace trusslab {

  std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::range: return "RangeError";
      case ErrorKind::malcev_violation: return "MalcevViolation";
      case ErrorKind::associativity_violation: return "AssociativityViolation";
      case ErrorKind::not_commutative: return "NotCommutative";
      case ErrorKind::not_a_group: return "NotAGroup";
      case ErrorKind::not_closed: return "NotClosed";
      case ErrorKind::empty_subset: return "EmptySubset";
      case ErrorKind::distributivity_violation: return "DistributivityViolation";
      case ErrorKind::bad_unit: return "BadUnit";
      case ErrorKind::not_a_ring: return "NotARing";
      case ErrorKind::no_zero: return "NoZero";
      case ErrorKind::action_associativity: return "ActionAssociativityViolation";
      case ErrorKind::action_left_distributivity: return "ActionLeftDistributivityViolation";
      case ErrorKind::action_right_distributivity: return "ActionRightDistributivityViolation";
      case ErrorKind::not_action_closed: return "NotActionClosed";
      case ErrorKind::not_a_module: return "NotAModule";
      case ErrorKind::mixed_truss: return "MixedTruss";
      case ErrorKind::action_not_descending: return "ActionNotDescending";
      case ErrorKind::not_in_image: return "NotInImage";
      case ErrorKind::not_composable: return "NotComposable";
      case ErrorKind::not_domain_truss: return "NotDomainTruss";
      case ErrorKind::morphism_violation: return "MorphismViolation";
      case ErrorKind::precondition_failed: return "PreconditionFailed";
      case ErrorKind::internal_assertion: return "InternalAssertion";
      case ErrorKind::bound_exceeded: return "BoundExceeded";
      case ErrorKind::parse: return "ParseError";
      case ErrorKind::resolve: return "ResolveError";
    }
    return "Error";
  }

  Error::Error(ErrorKind kind, std::string const& message, std::vector<Elem> witness)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), _kind(kind), _detail(message), _witness(std::move(witness)) {}

  void fail(ErrorKind kind, std::string const& message, std::vector<Elem> witness) {
    throw Error(kind, message, std::move(witness));
  }

}  // namespace trusslab
