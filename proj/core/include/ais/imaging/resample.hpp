#pragma once

#include "ais/imaging/binary_image.hpp"
#include "ais/imaging/raster.hpp"

namespace ais::imaging {

/// Bilinear resize with pixel-center alignment; same-size input is copied.
/// Binary inputs are resampled as gray8.
RasterImage resize_bilinear(const RasterImage& img, int width, int height);

/// Fits `img` into a side x side square, preserving aspect ratio, with `pad`
/// around it. Square inputs of the requested side are returned bit-identical.
RasterImage letterbox(const RasterImage& img, int side, Rgb pad = kWhite);

/// Pads to a square of side max(width, height) without resampling.
RasterImage pad_to_square(const RasterImage& img, Rgb pad = kWhite);

/// Exact crop; the rectangle must lie inside the image.
RasterImage crop(const RasterImage& img, int x0, int y0, int width, int height);

/// Copies `src` into `dst` at (x0, y0); `src` is converted to `dst`'s format.
void paste(RasterImage& dst, const RasterImage& src, int x0, int y0);

/// Block-OR downsampling: an output pixel is foreground when any pixel of its
/// factor x factor block is.
BinaryImage downsample_any(const BinaryImage& img, int factor);

}  // namespace ais::imaging
