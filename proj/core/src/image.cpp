#include "aradon/image.hpp"

#include <numeric>
#include <string>

#include "aradon/errors.hpp"

namespace aradon {

namespace {

void check_side(std::size_t n) {
  if (n < 2) {
    throw ArgumentError("image side must be at least 2, got " + std::to_string(n));
  }
}

template <typename Rows>
Image build_from_rows(const Rows& rows) {
  const std::size_t n = rows.size();
  check_side(n);
  std::vector<std::uint8_t> px;
  px.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) {
      throw ArgumentError("image must be square: row of length " + std::to_string(row.size()) +
                          " in a " + std::to_string(n) + "-row image");
    }
    for (int v : row) {
      if (v < 0 || v > 255) {
        throw ArgumentError("pixel intensity out of [0, 255]: " + std::to_string(v));
      }
      px.push_back(static_cast<std::uint8_t>(v));
    }
  }
  return Image(n, std::move(px));
}

}  // namespace

Image::Image(std::size_t n) : n_(n) {
  check_side(n);
  pixels_.assign(n * n, 0);
}

Image::Image(std::size_t n, std::vector<std::uint8_t> pixels) : n_(n), pixels_(std::move(pixels)) {
  check_side(n);
  if (pixels_.size() != n * n) {
    throw ArgumentError("pixel count " + std::to_string(pixels_.size()) + " does not match " +
                        std::to_string(n) + "x" + std::to_string(n));
  }
}

Image Image::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  return build_from_rows(rows);
}

Image Image::from_rows(const std::vector<std::vector<int>>& rows) { return build_from_rows(rows); }

std::int64_t Image::mass() const noexcept {
  return std::accumulate(pixels_.begin(), pixels_.end(), std::int64_t{0});
}

Image mirror_h(const Image& img) {
  const std::size_t n = img.size();
  Image out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(r, n - 1 - c) = img(r, c);
  }
  return out;
}

Image transpose(const Image& img) {
  const std::size_t n = img.size();
  Image out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(c, r) = img(r, c);
  }
  return out;
}

}  // namespace aradon
