#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "trusslab/heap.hpp"
#include "trusslab/module.hpp"
#include "trusslab/truss.hpp"

namespace trusslab {

  // Text format, one block per definition:
  //
  //   heap NAME {
  //     order: n
  //     group:
  //       <n rows of n entries: the group retract at 0>
  //   }
  //   truss NAME {
  //     heap: REF            (or an inline "heap: {" ... "}" block)
  //     mul:
  //       <n rows>
  //     unit: i|none
  //     zero: i|none
  //   }
  //   module NAME over TRUSS {
  //     order: m
  //     group:
  //       <m rows>
  //     action:
  //       <|T| rows of m entries>
  //   }
  //   map NAME : SOURCE -> TARGET {
  //     images: i0 i1 ...
  //   }
  //
  // '#' starts a comment.  References must name an earlier block.

  struct HeapDef {
    std::string name;
    std::size_t order = 0;
    Table       group;
    bool operator==(HeapDef const&) const = default;
  };

  struct TrussDef {
    std::string            name;
    std::string            heap_ref;     // empty when the heap is inline
    std::optional<HeapDef> inline_heap;  // name left empty
    Table                  mul;
    std::optional<Elem>    unit;
    std::optional<Elem>    zero;
    bool operator==(TrussDef const&) const = default;
  };

  struct ModuleDef {
    std::string name;
    std::string truss_ref;
    std::size_t order = 0;
    Table       group;
    Table       action;
    bool operator==(ModuleDef const&) const = default;
  };

  struct MapDef {
    std::string       name;
    std::string       source;
    std::string       target;
    std::vector<Elem> images;
    bool operator==(MapDef const&) const = default;
  };

  using Definition = std::variant<HeapDef, TrussDef, ModuleDef, MapDef>;

  struct Document {
    std::vector<Definition> definitions;
    bool operator==(Document const&) const = default;
  };

  std::string const& name_of(Definition const& def);

  // Throws Error(parse) with "line L, column C" in the message, or
  // Error(resolve) naming an undefined reference.
  Document    parse(std::string_view text);
  // References may also name the blocks of context, which the result does
  // not repeat.
  Document    parse(std::string_view text, Document const& context);
  std::string serialize(Document const& doc);
  std::string serialize(Definition const& def);

  HeapDef   to_def(FiniteHeap const& heap, std::string name);
  // The truss's heap is written inline.
  TrussDef  to_def(Truss const& truss, std::string name);
  ModuleDef to_def(TModule const& module, std::string name, std::string truss_ref);
  MapDef    to_def(std::span<Elem const> images, std::string name, std::string source, std::string target);

  using AnyMorphism = std::variant<HeapMorphism, TrussMorphism, ModuleMorphism>;
  using AnyObject   = std::variant<FiniteHeap, Truss, TModule>;

  // The validated structures of a document, by name.
  class Workspace {
   public:
    Workspace() = default;
    // Validates every block in order; failures are rethrown with the block
    // name prefixed to the message.
    explicit Workspace(Document const& doc);

    bool                has(std::string const& name) const;
    AnyObject const&    object(std::string const& name) const;
    FiniteHeap const&   heap(std::string const& name) const;
    Truss const&        truss(std::string const& name) const;
    TModule const&      module(std::string const& name) const;
    AnyMorphism const&  map(std::string const& name) const;
    bool                is_map(std::string const& name) const;
    std::string const&  truss_name_of(std::string const& module) const;

   private:
    std::map<std::string, AnyObject>   _objects;
    std::map<std::string, AnyMorphism> _maps;
    std::map<std::string, std::string> _module_truss;
  };

}  // namespace trusslab
