#include "aradon/pgm.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <limits>

#include "aradon/errors.hpp"

namespace aradon {

namespace {

class HeaderReader {
 public:
  explicit HeaderReader(std::string_view bytes) : bytes_(bytes) {}

  // Skips whitespace and '#' comments (which run to end of line).
  void skip_separators() {
    while (pos_ < bytes_.size()) {
      const char ch = bytes_[pos_];
      if (ch == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        ++pos_;
      } else {
        return;
      }
    }
  }

  bool at_end() const noexcept { return pos_ >= bytes_.size(); }

  std::uint64_t read_uint(const char* what, PgmErrorKind eof_kind) {
    skip_separators();
    if (at_end()) throw PgmError(eof_kind, std::string("pgm: truncated before ") + what);
    if (!std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
      throw PgmError(PgmErrorKind::BadHeader, std::string("pgm: expected a number for ") + what);
    }
    std::uint64_t v = 0;
    while (pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(bytes_[pos_] - '0');
      if (v > std::numeric_limits<std::uint32_t>::max()) {
        throw PgmError(PgmErrorKind::BadHeader, std::string("pgm: value too large for ") + what);
      }
      ++pos_;
    }
    return v;
  }

  std::size_t pos() const noexcept { return pos_; }
  void advance(std::size_t count) noexcept { pos_ += count; }
  std::string_view rest() const noexcept { return bytes_.substr(std::min(pos_, bytes_.size())); }

 private:
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

Image read_pgm(std::string_view bytes, PgmReadOptions opts) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) {
    throw PgmError(PgmErrorKind::BadMagic, "pgm: bad magic number (expected P2 or P5)");
  }
  const bool binary = bytes[1] == '5';
  HeaderReader in(bytes);
  in.advance(2);
  if (!in.at_end() && !std::isspace(static_cast<unsigned char>(in.rest()[0])) && in.rest()[0] != '#') {
    throw PgmError(PgmErrorKind::BadMagic, "pgm: bad magic number (expected P2 or P5)");
  }

  const auto width = in.read_uint("width", PgmErrorKind::Truncated);
  const auto height = in.read_uint("height", PgmErrorKind::Truncated);
  const auto maxval = in.read_uint("maxval", PgmErrorKind::Truncated);
  if (width <= 1 || height <= 1) {
    throw PgmError(PgmErrorKind::BadDimension, "pgm: dimensions must exceed 1, got " +
                                                   std::to_string(width) + "x" + std::to_string(height));
  }
  if (maxval == 0) throw PgmError(PgmErrorKind::BadHeader, "pgm: maxval must be positive");
  if (maxval > 255) {
    throw PgmError(PgmErrorKind::UnsupportedMaxval,
                   "pgm: unsupported maxval " + std::to_string(maxval) + " (at most 255)");
  }
  if (width != height && !opts.pad_to_square) {
    throw PgmError(PgmErrorKind::NotSquare, "pgm: image is " + std::to_string(width) + "x" +
                                                std::to_string(height) +
                                                ", not square (use padding to accept it)");
  }

  const std::size_t w = width, h = height;
  std::vector<std::uint8_t> samples(w * h);
  if (binary) {
    // Exactly one whitespace byte separates maxval from the raster.
    if (in.at_end() || !std::isspace(static_cast<unsigned char>(in.rest()[0]))) {
      throw PgmError(PgmErrorKind::Truncated, "pgm: missing raster after header");
    }
    in.advance(1);
    const std::string_view raster = in.rest();
    if (raster.size() < samples.size()) {
      throw PgmError(PgmErrorKind::Truncated, "pgm: truncated raster, expected " +
                                                  std::to_string(samples.size()) + " bytes, got " +
                                                  std::to_string(raster.size()));
    }
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const auto v = static_cast<std::uint8_t>(raster[i]);
      if (v > maxval) throw PgmError(PgmErrorKind::BadSample, "pgm: sample exceeds maxval");
      samples[i] = v;
    }
  } else {
    for (auto& s : samples) {
      const auto v = in.read_uint("sample", PgmErrorKind::Truncated);
      if (v > maxval) {
        throw PgmError(PgmErrorKind::BadSample,
                       "pgm: sample " + std::to_string(v) + " exceeds maxval " + std::to_string(maxval));
      }
      s = static_cast<std::uint8_t>(v);
    }
  }

  const std::size_t n = std::max(w, h);
  Image img(n);
  for (std::size_t r = 0; r < h; ++r) {
    for (std::size_t c = 0; c < w; ++c) img(r, c) = samples[r * w + c];
  }
  return img;
}

std::string write_pgm(const Image& img) {
  const std::size_t n = img.size();
  std::string out = "P5\n" + std::to_string(n) + " " + std::to_string(n) + "\n255\n";
  const auto px = img.pixels();
  out.append(reinterpret_cast<const char*>(px.data()), px.size());
  return out;
}

std::string render_pgm(const std::vector<double>& grid, std::size_t width, std::size_t height) {
  if (grid.size() != width * height) throw ArgumentError("render_pgm: grid size mismatch");
  std::string out = "P5\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
  if (grid.empty()) return out;
  const auto [lo_it, hi_it] = std::minmax_element(grid.begin(), grid.end());
  const double lo = *lo_it, span = *hi_it - *lo_it;
  out.reserve(out.size() + grid.size());
  for (double v : grid) {
    const double scaled = span > 0.0 ? (v - lo) / span * 255.0 : 0.0;
    out.push_back(static_cast<char>(static_cast<std::uint8_t>(std::lround(scaled))));
  }
  return out;
}

}  // namespace aradon
