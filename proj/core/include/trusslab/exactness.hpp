#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trusslab/hom.hpp"
#include "trusslab/module.hpp"

namespace trusslab {

  // f : M -> N, g : N -> P with Im f = ker_e g.
  struct SequenceWitness {
    ModuleMorphism f;
    ModuleMorphism g;
    Elem           basepoint;
    bool           abs_exact;  // e is an absorber of P
  };

  // The least e in Im g with Im f = ker_e g.
  std::optional<SequenceWitness> check_exact(ModuleMorphism const& f, ModuleMorphism const& g);

  // * -> M -i-> N -pi-> P -> * : i injective, pi surjective, Im i = ker_m pi,
  // together with N/Im i and the induced isomorphism N/Im i -> P.
  struct ShortExactTriple {
    ModuleMorphism i;
    ModuleMorphism pi;
    Elem           basepoint;
    TModule        quotient;
    ModuleMorphism projection;
    ModuleMorphism iso;
  };

  std::optional<ShortExactTriple> check_short_exact(ModuleMorphism const& i, ModuleMorphism const& pi);

  // Lexicographically least d with psi d = id, resp. r with r phi = id.
  std::optional<ModuleMorphism> find_section(ModuleMorphism const& psi);
  std::optional<ModuleMorphism> find_retraction(ModuleMorphism const& phi);

  // For M -phi-> N -psi-> P exact, phi injective and delta a section of psi:
  // n -> (phi^-1[n, delta psi(n), delta(e)], psi(n)) into M^(e') x P, where e
  // is the exactness basepoint and e' = phi^-1(delta(e)).
  struct SectionSplit {
    Elem           basepoint;  // e'
    ProductModule  product;    // M^(e') x P
    ModuleMorphism iso;        // N -> M^(e') x P
  };

  SectionSplit split_by_section(ModuleMorphism const& phi, ModuleMorphism const& psi, ModuleMorphism const& delta);

  // For M -phi-> N -psi-> P exact, psi surjective and gamma a retraction of
  // phi: n -> (gamma(n), psi(n)).
  struct RetractionSplit {
    ProductModule  product;  // M x P
    ModuleMorphism iso;      // N -> M x P
  };

  RetractionSplit split_by_retraction(ModuleMorphism const& phi, ModuleMorphism const& psi, ModuleMorphism const& gamma);

  // Every module over the truss of order at most bound, one per isomorphism
  // class.  Projectivity and injectivity below are decided relative to it.
  struct Universe {
    Truss                truss;
    std::vector<TModule> modules;
    std::size_t          bound = 0;
  };

  struct ProjectivityVerdict {
    bool                          holds = true;
    std::optional<ModuleMorphism> epi;  // blocking pi : M -> N
    std::optional<ModuleMorphism> map;  // blocking f : P -> N with no lift
  };

  ProjectivityVerdict is_projective_rel(TModule const& p, Universe const& universe);

  // Extension along inclusions N' <= N for N in the universe, N' ranging over
  // its submodules, and along the empty submodule (which asks for some map
  // N -> E).
  struct InjectivityVerdict {
    bool                              holds = true;
    std::optional<TModule>            module;     // blocking N
    std::vector<Elem>                 submodule;  // blocking N' (empty: no map N -> E at all)
    std::optional<std::vector<Elem>>  map;        // blocking N' -> E, indexed by position in N'
  };

  InjectivityVerdict is_injective_rel(TModule const& e, Universe const& universe);

  // Requires a domain truss.
  struct Divisibility {
    bool                                 holds = true;
    std::optional<std::pair<Elem, Elem>> witness;  // (t, m) with m outside t.M
  };

  Divisibility is_divisible(TModule const& module);

  // K -i-> P -pi-> M.
  struct Resolution {
    ModuleMorphism i;
    ModuleMorphism pi;
  };

  struct ProjectiveSchanuel {
    ShortExactTriple first;
    ShortExactTriple second;
    ModuleMorphism   beta;        // P -> P' with pi' beta = pi
    ModuleMorphism   alpha;       // K -> K' with i' alpha = beta i
    Elem             k_absorber;  // e' in Abs(K')
    ModuleMorphism   theta;       // K -> P x K'
    ModuleMorphism   psi;         // P x K' -> P'
    ModuleMorphism   gamma;       // section of psi
    SectionSplit     split;       // P x K' -> K^(e) x P'
    Elem             basepoint;   // e in K
    ModuleMorphism   iso;         // K^(e) x P' -> K' x P
    bool             oracle_agrees = false;
  };

  // Follows the proof step by step and asserts each obligation; a universe,
  // when given, is used to confirm P and P' are projective relative to it.
  ProjectiveSchanuel schanuel_projective(Resolution const& first,
                                         Resolution const& second,
                                         Universe const*   universe = nullptr);

  // M -i-> E -pi-> Q.
  struct Coresolution {
    ModuleMorphism i;
    ModuleMorphism pi;
  };

  struct InjectiveSchanuel {
    ShortExactTriple first;
    ShortExactTriple second;
    ModuleMorphism   alpha;       // E' -> E with alpha i' = i
    ModuleMorphism   beta;        // Q' -> Q with beta pi' = pi alpha
    Elem             q_absorber;  // e in Abs(Q')
    ModuleMorphism   theta;       // E' -> E x Q'
    ModuleMorphism   psi;         // E x Q' -> Q
    ModuleMorphism   gamma;       // retraction of theta
    RetractionSplit  split;       // E x Q' -> E' x Q
    bool             oracle_agrees = false;
    // Relative injectivity of Q and Q', filled when a universe is given.
    std::optional<bool> q_injective;
    std::optional<bool> q_prime_injective;
  };

  InjectiveSchanuel schanuel_injective(Coresolution const& first,
                                       Coresolution const& second,
                                       Universe const*     universe = nullptr);

}  // namespace trusslab
