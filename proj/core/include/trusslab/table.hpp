#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace trusslab {

  // Carrier elements are always 0..n-1.
  using Elem = std::size_t;

  // Dense row-major table of carrier elements: group retracts, multiplication
  // tables and action tables all use this.
  class Table {
   public:
    Table() = default;
    Table(std::size_t rows, std::size_t cols, Elem fill = 0)
        : _rows(rows), _cols(cols), _data(rows * cols, fill) {}
    Table(std::size_t rows, std::size_t cols, std::vector<Elem> data);
    Table(std::initializer_list<std::initializer_list<Elem>> rows);

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }

    Elem operator()(std::size_t r, std::size_t c) const noexcept {
      return _data[r * _cols + c];
    }
    Elem& operator()(std::size_t r, std::size_t c) noexcept {
      return _data[r * _cols + c];
    }

    std::span<Elem const> row(std::size_t r) const noexcept {
      return {_data.data() + r * _cols, _cols};
    }
    std::span<Elem const> data() const noexcept {
      return _data;
    }

    // Largest entry plus one, 0 for an empty table.
    Elem bound() const noexcept;

    auto operator<=>(Table const&) const = default;
    bool operator==(Table const&) const  = default;

   private:
    std::size_t       _rows = 0;
    std::size_t       _cols = 0;
    std::vector<Elem> _data;
  };

}  // namespace trusslab
