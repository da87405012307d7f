#include "trusslab/table.hpp"

#include <algorithm>
#include <stdexcept>

namespace trusslab {

  Table::Table(std::size_t rows, std::size_t cols, std::vector<Elem> data)
      : _rows(rows), _cols(cols), _data(std::move(data)) {
    if (_data.size() != rows * cols) {
      throw std::invalid_argument("Table: data size does not match dimensions");
    }
  }

  Table::Table(std::initializer_list<std::initializer_list<Elem>> rows) : _rows(rows.size()) {
    _cols = rows.size() == 0 ? 0 : rows.begin()->size();
    _data.reserve(_rows * _cols);
    for (auto const& r : rows) {
      if (r.size() != _cols) {
        throw std::invalid_argument("Table: ragged initializer");
      }
      _data.insert(_data.end(), r.begin(), r.end());
    }
  }

  Elem Table::bound() const noexcept {
    if (_data.empty()) {
      return 0;
    }
    return *std::max_element(_data.begin(), _data.end()) + 1;
  }

}  // namespace trusslab
