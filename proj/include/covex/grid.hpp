#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace covex {

struct Cell {
  int x = 0;
  int y = 0;
  bool operator==(const Cell&) const = default;
};

// Row-major 2D array. Index convention: x = column, y = row,
// flat index = y * width + x.
template <typename T>
class Grid2D {
 public:
  Grid2D() = default;
  Grid2D(int width, int height, T fill = T{})
      : width_(width), height_(height),
        data_(static_cast<size_t>(width) * height, fill) {
    if (width <= 0 || height <= 0)
      throw std::invalid_argument("Grid2D: non-positive dimensions");
  }

  int width() const { return width_; }
  int height() const { return height_; }
  size_t size() const { return data_.size(); }

  bool in_bounds(int x, int y) const {
    return x >= 0 && y >= 0 && x < width_ && y < height_;
  }
  bool in_bounds(Cell c) const { return in_bounds(c.x, c.y); }

  T& at(int x, int y) { return data_[static_cast<size_t>(y) * width_ + x]; }
  const T& at(int x, int y) const {
    return data_[static_cast<size_t>(y) * width_ + x];
  }
  T& at(Cell c) { return at(c.x, c.y); }
  const T& at(Cell c) const { return at(c.x, c.y); }

  T& operator[](size_t i) { return data_[i]; }
  const T& operator[](size_t i) const { return data_[i]; }

  Cell cell_of(size_t i) const {
    return {static_cast<int>(i % width_), static_cast<int>(i / width_)};
  }
  size_t index_of(Cell c) const {
    return static_cast<size_t>(c.y) * width_ + c.x;
  }

  void fill(T v) { data_.assign(data_.size(), v); }

  const std::vector<T>& data() const { return data_; }
  std::vector<T>& data() { return data_; }

  bool operator==(const Grid2D&) const = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<T> data_;
};

using Label = uint8_t;

// Reserved category ids shared by the world generator and the mappers.
inline constexpr Label kVoid = 0;   // unseen / unknown
inline constexpr Label kFloor = 1;  // traversable floor
inline constexpr Label kWall = 2;   // structural walls
// Furniture categories occupy ids 3..C.

}  // namespace covex
