#pragma once

#include <algorithm>
#include <span>
#include <utility>
#include <vector>

#include "trusslab/error.hpp"
#include "trusslab/table.hpp"

namespace trusslab {

  // A total map between the carriers of two structures of the same kind
  // (FiniteHeap, Truss or TModule).  Construction through the public
  // constructor validates the preservation laws of that kind; the structure
  // header provides the matching check_morphism overload.
  template <typename Structure>
  class Morphism {
   public:
    Morphism(Structure source, Structure target, std::vector<Elem> images)
        : _source(std::move(source)), _target(std::move(target)), _images(std::move(images)) {
      check_morphism(_source, _target, std::span<Elem const>(_images));
    }

    // For maps the caller has already proven valid (constructions whose
    // preservation laws hold by definition).
    static Morphism unchecked(Structure source, Structure target, std::vector<Elem> images) {
      return Morphism(std::move(source), std::move(target), std::move(images), Trusted{});
    }

    Structure const& source() const noexcept {
      return _source;
    }
    Structure const& target() const noexcept {
      return _target;
    }
    std::span<Elem const> images() const noexcept {
      return _images;
    }
    Elem operator()(Elem x) const noexcept {
      return _images[x];
    }

    bool is_injective() const {
      std::vector<bool> hit(_target.order(), false);
      for (Elem y : _images) {
        if (hit[y]) {
          return false;
        }
        hit[y] = true;
      }
      return true;
    }

    bool is_surjective() const {
      return image().size() == _target.order();
    }

    // Sorted, duplicate free.
    std::vector<Elem> image() const {
      std::vector<Elem> result(_images);
      std::sort(result.begin(), result.end());
      result.erase(std::unique(result.begin(), result.end()), result.end());
      return result;
    }

    std::vector<Elem> preimage(Elem y) const {
      std::vector<Elem> result;
      for (Elem x = 0; x < _images.size(); ++x) {
        if (_images[x] == y) {
          result.push_back(x);
        }
      }
      return result;
    }

    friend bool operator==(Morphism const& a, Morphism const& b) {
      return a._images == b._images && a._source == b._source && a._target == b._target;
    }

   private:
    struct Trusted {};
    Morphism(Structure source, Structure target, std::vector<Elem> images, Trusted)
        : _source(std::move(source)), _target(std::move(target)), _images(std::move(images)) {}

    Structure         _source;
    Structure         _target;
    std::vector<Elem> _images;
  };

  // g after f.
  template <typename Structure>
  Morphism<Structure> compose(Morphism<Structure> const& g, Morphism<Structure> const& f) {
    if (!(f.target() == g.source())) {
      fail(ErrorKind::not_composable, "compose: target of the first map is not the source of the second");
    }
    std::vector<Elem> images(f.source().order());
    for (Elem x = 0; x < images.size(); ++x) {
      images[x] = g(f(x));
    }
    return Morphism<Structure>::unchecked(f.source(), g.target(), std::move(images));
  }

  template <typename Structure>
  Morphism<Structure> identity_morphism(Structure const& s) {
    std::vector<Elem> images(s.order());
    for (Elem x = 0; x < images.size(); ++x) {
      images[x] = x;
    }
    return Morphism<Structure>::unchecked(s, s, std::move(images));
  }

  // Inverse of a bijective morphism.
  template <typename Structure>
  Morphism<Structure> inverse(Morphism<Structure> const& f) {
    if (!f.is_injective() || !f.is_surjective()) {
      fail(ErrorKind::precondition_failed, "inverse: morphism is not bijective");
    }
    std::vector<Elem> images(f.target().order());
    for (Elem x = 0; x < f.source().order(); ++x) {
      images[f(x)] = x;
    }
    return Morphism<Structure>::unchecked(f.target(), f.source(), std::move(images));
  }

}  // namespace trusslab
