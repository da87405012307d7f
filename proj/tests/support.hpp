#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "trusslab/trusslab.hpp"

namespace support {

  using trusslab::Elem;
  using trusslab::Table;

  inline Table z_add(std::size_t n) {
    Table t(n, n);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        t(a, b) = (a + b) % n;
      }
    }
    return t;
  }

  inline Table z_mul(std::size_t n) {
    Table t(n, n);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        t(a, b) = (a * b) % n;
      }
    }
    return t;
  }

  // The error kind thrown by f, or nothing when it returns normally.
  inline std::optional<trusslab::ErrorKind> error_kind(std::function<void()> const& f) {
    try {
      f();
    } catch (trusslab::Error const& e) {
      return e.kind();
    }
    return std::nullopt;
  }

  inline std::vector<Elem> error_witness(std::function<void()> const& f) {
    try {
      f();
    } catch (trusslab::Error const& e) {
      return e.witness();
    }
    return {};
  }

}  // namespace support
