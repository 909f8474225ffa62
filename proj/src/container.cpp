// Copyright (c) 2026 the rdhei authors. All rights reserved.
// Use of this source code is governed by an MIT-style license that can be
// found in the LICENSE file.

#include "rdhei/container.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

#include "rdhei/errors.hpp"
#include "rdhei/predictor.hpp"

namespace rdhei {
namespace container {
namespace {

void check_stack(const PlaneStack& stack) {
  const std::size_t mn = stack.height * stack.width;
  if (stack.height < 2 || stack.width < 2 || mn > kMaxPixels) {
    throw std::invalid_argument("unsupported plane stack dimensions");
  }
  if (stack.bits.size() != 8 * mn) {
    throw std::invalid_argument("plane stack must hold exactly 8*m*n bits");
  }
}

unsigned block_side_log2(unsigned side) {
  for (unsigned code = 1; code <= kBlockSides.size(); ++code) {
    if ((1u << code) == side) return code;
  }
  throw std::invalid_argument("block side must be one of 2, 4, 8, 16");
}

void check_container(const Container& c) {
  const std::size_t mn = c.height * c.width;
  if (c.height < 2 || c.width < 2 || mn > kMaxPixels) {
    throw std::invalid_argument("unsupported container dimensions");
  }
  block_side_log2(c.block_side);
  if (c.params.l_fix < 1 || c.params.l_fix > 8) {
    throw std::invalid_argument("l_fix must be in 1..8");
  }
  if (c.overflow_locations.size() >= mn) {
    throw std::invalid_argument("too many overflow locations");
  }
  std::uint64_t prev = 0;
  for (std::uint32_t loc : c.overflow_locations) {
    if (loc == 0 || loc >= mn || (prev != 0 && loc <= prev)) {
      throw std::invalid_argument("overflow locations must be ascending");
    }
    prev = loc;
  }
  for (const bsc::PlaneSegment& seg : c.segments) {
    if (!seg.compressed && seg.body.size() != mn) {
      throw std::invalid_argument("verbatim segment must hold m*n bits");
    }
  }
}

std::uint64_t segments_size_bits(const Container& c) {
  std::uint64_t total = 0;
  for (const bsc::PlaneSegment& seg : c.segments) total += 3 + seg.body.size();
  return total;
}

}  // namespace

unsigned location_field_width(std::size_t pixel_count) {
  if (pixel_count < 2) {
    throw std::invalid_argument("pixel count must be at least 2");
  }
  return static_cast<unsigned>(std::bit_width(pixel_count - 1));
}

std::uint64_t aux_size_bits(std::size_t pixel_count,
                            std::size_t overflow_count) {
  const unsigned p = location_field_width(pixel_count);
  return 4 + 3 + static_cast<std::uint64_t>(p) * (1 + overflow_count);
}

Container vacate(const Image& image) {
  validate(image);
  const std::size_t mn = image.height * image.width;
  const std::uint64_t limit = 8 * static_cast<std::uint64_t>(mn) - kOccupiedFieldBits;

  const predictor::ErrorImage error = predictor::predict_image(image);
  const PlaneStack stack = predictor::error_to_planestack(error);
  std::array<BitStream, 8> planes;
  for (unsigned idx = 0; idx < 8; ++idx) {
    planes[idx] = bitplane::plane_slice(stack, 8 - idx);
  }

  const std::uint64_t aux = aux_size_bits(mn, error.overflow_locations.size());

  // Exhaustive (block side, l_fix) search. Rearranged planes are reduced to
  // run lengths once per scan order, so re-costing them under the eight
  // l_fix values is cheap.
  std::uint64_t best_total = std::numeric_limits<std::uint64_t>::max();
  unsigned best_side = 0;
  unsigned best_l_fix = 0;
  for (unsigned side : kBlockSides) {
    const bpr::BlockGeometry geometry{image.height, image.width, side};
    std::array<std::array<std::vector<std::uint32_t>, 4>, 8> runs;
    for (unsigned idx = 0; idx < 8; ++idx) {
      for (bpr::ScanType type : bpr::kAllScanTypes) {
        runs[idx][static_cast<unsigned>(type)] =
            bsc::run_lengths(bpr::rearrange(planes[idx], geometry, type));
      }
    }
    for (unsigned l_fix = 1; l_fix <= 8; ++l_fix) {
      const bsc::CodecParams params{l_fix};
      std::uint64_t total = aux;
      for (unsigned idx = 0; idx < 8; ++idx) {
        std::size_t plane_best = mn;  // verbatim fallback
        for (unsigned t = 0; t < 4; ++t) {
          plane_best = std::min(
              plane_best, bsc::encoded_length_from_runs(runs[idx][t], mn, params));
        }
        total += 3 + plane_best;
      }
      if (total < best_total) {
        best_total = total;
        best_side = side;
        best_l_fix = l_fix;
      }
    }
  }

  if (best_total > limit) {
    throw NotEmbeddableError(best_total, limit);
  }

  Container c;
  c.height = image.height;
  c.width = image.width;
  c.block_side = best_side;
  c.params = bsc::CodecParams{best_l_fix};
  c.overflow_locations = error.overflow_locations;
  const bpr::BlockGeometry geometry{image.height, image.width, best_side};
  for (unsigned idx = 0; idx < 8; ++idx) {
    c.segments[idx] = bsc::compress_plane(planes[idx], geometry, c.params);
  }
  c.occupied_bits = aux + segments_size_bits(c);
  if (c.occupied_bits != best_total) {
    throw std::logic_error("vacate cost model disagrees with the encoder");
  }
  return c;
}

PlaneStack serialize(const Container& container) {
  check_container(container);
  const std::size_t mn = container.height * container.width;
  const std::uint64_t limit = 8 * static_cast<std::uint64_t>(mn) - kOccupiedFieldBits;
  const unsigned p = location_field_width(mn);

  BitStream bits;
  bits.append_uint(block_side_log2(container.block_side), 4);
  bits.append_uint(container.params.l_fix - 1, 3);
  bits.append_uint(container.overflow_locations.size(), p);
  for (std::uint32_t loc : container.overflow_locations) {
    bits.append_uint(loc, p);
  }
  for (const bsc::PlaneSegment& seg : container.segments) {
    bits.push_back(seg.compressed);
    bits.append_uint(static_cast<unsigned>(seg.scan), 2);
    bits.append(seg.body);
  }
  if (bits.size() != container.occupied_bits) {
    throw std::logic_error("container occupied count inconsistent");
  }
  if (bits.size() > limit) {
    throw NotEmbeddableError(bits.size(), limit);
  }
  bits.resize(limit);  // zero-fill the vacated room
  bits.append_uint(container.occupied_bits, kOccupiedFieldBits);
  return PlaneStack{container.height, container.width, std::move(bits)};
}

Container parse(const PlaneStack& stack) {
  check_stack(stack);
  const std::size_t mn = stack.height * stack.width;
  const std::uint64_t limit = 8 * static_cast<std::uint64_t>(mn) - kOccupiedFieldBits;
  const std::uint64_t occupied = stack.bits.read_uint(limit, kOccupiedFieldBits);
  if (occupied > limit) {
    throw CorruptionError("occupied count exceeds the container");
  }

  Container c;
  c.height = stack.height;
  c.width = stack.width;
  c.occupied_bits = occupied;

  BitReader reader(stack.bits);
  const unsigned side_code = static_cast<unsigned>(reader.read_uint(4));
  if (side_code < 1 || side_code > kBlockSides.size()) {
    throw CorruptionError("invalid block side code");
  }
  c.block_side = 1u << side_code;
  c.params.l_fix = static_cast<unsigned>(reader.read_uint(3)) + 1;

  const unsigned p = location_field_width(mn);
  const std::uint64_t count = reader.read_uint(p);
  if (count >= mn) {
    throw CorruptionError("overflow count out of range");
  }
  c.overflow_locations.reserve(count);
  std::uint64_t prev = 0;
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t loc = reader.read_uint(p);
    if (loc == 0 || loc >= mn || loc <= prev) {
      throw CorruptionError("overflow locations not strictly ascending");
    }
    c.overflow_locations.push_back(static_cast<std::uint32_t>(loc));
    prev = loc;
  }

  for (unsigned idx = 0; idx < 8; ++idx) {
    bsc::PlaneSegment& seg = c.segments[idx];
    seg.compressed = reader.read_bit();
    seg.scan = static_cast<bpr::ScanType>(reader.read_uint(2));
    const std::size_t body_start = reader.pos();
    if (seg.compressed) {
      // Decoding is the only way to find where a coded body ends.
      bsc::decode(reader, mn, c.params);
      seg.body = stack.bits.slice(body_start, reader.pos() - body_start);
    } else {
      if (body_start + mn > stack.bits.size()) {
        throw CorruptionError("verbatim plane truncated");
      }
      seg.body = stack.bits.slice(body_start, mn);
      reader.seek(body_start + mn);
    }
  }

  if (reader.pos() != occupied) {
    throw CorruptionError("occupied count mismatch");
  }
  return c;
}

PlaneStack decode_error_planes(const Container& container) {
  check_container(container);
  const std::size_t mn = container.height * container.width;
  const bpr::BlockGeometry geometry{container.height, container.width,
                                    container.block_side};
  PlaneStack out{container.height, container.width, BitStream()};
  for (const bsc::PlaneSegment& seg : container.segments) {
    if (seg.compressed) {
      out.bits.append(bpr::inverse_rearrange(
          bsc::decode(seg.body, mn, container.params), geometry, seg.scan));
    } else {
      out.bits.append(seg.body);
    }
  }
  return out;
}

CapacityReport capacity(const PlaneStack& stack) {
  check_stack(stack);
  const std::size_t mn = stack.height * stack.width;
  const std::uint64_t limit = 8 * static_cast<std::uint64_t>(mn) - kOccupiedFieldBits;
  CapacityReport report;
  report.occupied_bits = stack.bits.read_uint(limit, kOccupiedFieldBits);
  if (report.occupied_bits > limit) {
    throw CorruptionError("occupied count exceeds the container");
  }
  report.capacity_bits =
      limit >= report.occupied_bits + kPayloadHeaderBits
          ? limit - report.occupied_bits - kPayloadHeaderBits
          : 0;
  report.net_embedding_rate =
      static_cast<double>(report.capacity_bits) / static_cast<double>(mn);
  return report;
}

}  // namespace container
}  // namespace rdhei
