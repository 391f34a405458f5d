#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace aradon {

/// Square 8-bit grayscale raster, row-major.
class Image {
 public:
  Image() = default;

  /// All-zero n×n image. Throws ArgumentError for n < 2.
  explicit Image(std::size_t n);

  /// Takes ownership of n*n row-major pixels.
  Image(std::size_t n, std::vector<std::uint8_t> pixels);

  /// Builds from nested rows; every row must have as many entries as there
  /// are rows and every value must lie in [0, 255].
  static Image from_rows(std::initializer_list<std::initializer_list<int>> rows);
  static Image from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t size() const noexcept { return n_; }

  std::uint8_t operator()(std::size_t row, std::size_t col) const noexcept {
    return pixels_[row * n_ + col];
  }
  std::uint8_t& operator()(std::size_t row, std::size_t col) noexcept {
    return pixels_[row * n_ + col];
  }

  std::span<const std::uint8_t> row(std::size_t r) const noexcept {
    return {pixels_.data() + r * n_, n_};
  }
  std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }

  /// Sum of all intensities.
  std::int64_t mass() const noexcept;

  friend bool operator==(const Image&, const Image&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> pixels_;
};

/// Horizontal mirror: (r, c) -> (r, n-1-c).
Image mirror_h(const Image& img);

/// Transpose: (r, c) -> (c, r).
Image transpose(const Image& img);

}  // namespace aradon
