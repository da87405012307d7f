#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "trusslab/trusslab.hpp"

namespace trusslab::cli {

  // Exit codes.
  inline constexpr int holds    = 0;
  inline constexpr int fails    = 1;
  inline constexpr int rejected = 2;

  // The definitions loaded from -f files, in order.
  struct Session {
    Document     doc;
    Workspace    ws;
    std::ostream* out = nullptr;
  };

  Session load(std::vector<std::string> const& files, std::ostream& out);

  int validate(Session& s, std::string const& file);
  int hom(Session& s, std::string const& a, std::string const& b, std::string const& kind);
  int iso(Session& s, std::string const& a, std::string const& b);
  int kernel(Session& s, std::string const& map, Elem at);
  int quotient(Session& s, std::string const& module, std::string const& sub);
  int product(Session& s, std::string const& m, std::string const& n);
  int power(Session& s, std::string const& m, std::size_t k);
  int induce(Session& s, std::string const& m, Elem at);

  int check_exact(Session& s, std::string const& f, std::string const& g);
  int check_short_exact(Session& s, std::string const& i, std::string const& pi);
  int check_injective(Session& s, std::string const& e, std::size_t universe_max);
  int check_projective(Session& s, std::string const& p, std::size_t universe_max);
  int check_divisible(Session& s, std::string const& m);

  // SEQ is "I,PI": two map names.
  int schanuel(Session& s, bool projective, std::string const& seq1, std::string const& seq2, std::size_t universe_max);

  int enumerate(Session& s, std::string const& what, std::size_t order, std::string const& truss);
  int census(Session& s, std::size_t max_order);

}  // namespace trusslab::cli
