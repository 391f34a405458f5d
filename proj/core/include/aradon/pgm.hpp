#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "aradon/image.hpp"

namespace aradon {

enum class PgmErrorKind {
  BadMagic,
  BadHeader,
  UnsupportedMaxval,
  BadDimension,
  Truncated,
  BadSample,
  NotSquare,
};

class PgmError : public std::runtime_error {
 public:
  PgmError(PgmErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  PgmErrorKind kind() const noexcept { return kind_; }

 private:
  PgmErrorKind kind_;
};

struct PgmReadOptions {
  /// Zero-pad a non-square image on the right/bottom instead of rejecting it.
  bool pad_to_square = false;
};

/// Parses P2 (ASCII) or P5 (binary) graymaps with maxval <= 255.
Image read_pgm(std::string_view bytes, PgmReadOptions opts = {});

/// P5 encoding of an image.
std::string write_pgm(const Image& img);

/// P5 render of a width×height grid of reals, min-max normalized to [0, 255].
/// A constant grid renders as all zeros.
std::string render_pgm(const std::vector<double>& grid, std::size_t width, std::size_t height);

}  // namespace aradon
