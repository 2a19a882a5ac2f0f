#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace ais::imaging {

enum class PixelFormat : std::uint8_t { rgb8, gray8, binary };

/// Samples per pixel for a format (binary is one sample of 0 or 255).
constexpr int samples_per_pixel(PixelFormat f) { return f == PixelFormat::rgb8 ? 3 : 1; }

std::string_view to_string(PixelFormat f);

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
  friend bool operator==(const Rgb&, const Rgb&) = default;
  friend auto operator<=>(const Rgb&, const Rgb&) = default;
};

inline constexpr Rgb kWhite{255, 255, 255};
inline constexpr Rgb kBlack{0, 0, 0};

/// Sample values used by the binary format. Foreground renders black.
inline constexpr std::uint8_t kBinaryForeground = 0;
inline constexpr std::uint8_t kBinaryBackground = 255;

/// Row-major, interleaved 8-bit image. The universal carrier for panels,
/// masks and intermediate renders.
class RasterImage {
 public:
  RasterImage() = default;
  /// Filled with `fill` in every sample; binary images must use 0 or 255.
  RasterImage(int width, int height, PixelFormat format, std::uint8_t fill = 0);
  /// Adopts `samples`; throws InvalidInput on length or binary-value mismatch.
  RasterImage(int width, int height, PixelFormat format, std::vector<std::uint8_t> samples);

  static RasterImage filled(int width, int height, Rgb color);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  PixelFormat format() const noexcept { return format_; }
  int channels() const noexcept { return samples_per_pixel(format_); }
  bool empty() const noexcept { return width_ == 0 || height_ == 0; }

  std::span<const std::uint8_t> samples() const noexcept { return samples_; }
  std::span<std::uint8_t> samples() noexcept { return samples_; }

  std::uint8_t at(int x, int y, int c = 0) const {
    return samples_[(static_cast<std::size_t>(y) * width_ + x) * channels() + c];
  }
  std::uint8_t& at(int x, int y, int c = 0) {
    return samples_[(static_cast<std::size_t>(y) * width_ + x) * channels() + c];
  }

  /// Pixel as RGB; gray and binary samples are replicated.
  Rgb rgb(int x, int y) const;
  void set_rgb(int x, int y, Rgb color);

  friend bool operator==(const RasterImage&, const RasterImage&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  PixelFormat format_ = PixelFormat::gray8;
  std::vector<std::uint8_t> samples_;
};

/// Rec. 601 luma, rounded half-up, in integer arithmetic.
constexpr std::uint8_t luma601(Rgb c) {
  return static_cast<std::uint8_t>((299u * c.r + 587u * c.g + 114u * c.b + 500u) / 1000u);
}

/// gray8 from rgb8 (Rec. 601) or gray8 (returned as-is). Binary input throws.
RasterImage to_grayscale(const RasterImage& img);

/// Promotes gray8/binary to rgb8 by channel replication; rgb8 is returned as-is.
RasterImage to_rgb(const RasterImage& img);

/// 255 - v on every sample. Binary images stay binary.
RasterImage invert(const RasterImage& img);

}  // namespace ais::imaging
