// Copyright (c) 2026 the rdhei authors. All rights reserved.
// Use of this source code is governed by an MIT-style license that can be
// found in the LICENSE file.

#include "rdhei/bsc.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "rdhei/errors.hpp"

namespace rdhei {
namespace bsc {
namespace {

// Longest run prefix: floor(log2(2^28)) - 1 ones. Anything longer is garbage.
constexpr unsigned kMaxPrefixOnes = 32;

void check_params(const CodecParams& params) {
  if (params.l_fix < 1 || params.l_fix > 8) {
    throw std::invalid_argument("l_fix must be in 1..8");
  }
}

unsigned floor_log2(std::uint64_t v) {
  return static_cast<unsigned>(std::bit_width(v)) - 1;
}

}  // namespace

BitStream encode(const BitStream& input, const CodecParams& params) {
  check_params(params);
  BitStream out;
  const std::size_t n = input.size();
  std::size_t pos = 0;
  while (pos < n) {
    const bool b = input.get(pos);
    std::size_t run = 1;
    while (pos + run < n && input.get(pos + run) == b) ++run;
    if (run >= 4) {
      const unsigned l = floor_log2(run);
      out.append_run(true, l - 1);
      out.push_back(false);
      out.append_uint(run - (std::uint64_t{1} << l), l);
      out.push_back(b);
      pos += run;
    } else {
      // Short stretch: emit the next l_fix bits raw, regardless of run
      // boundaries; pad with zeros when the input ends first.
      out.push_back(false);
      const std::size_t take = std::min<std::size_t>(params.l_fix, n - pos);
      for (std::size_t i = 0; i < take; ++i) out.push_back(input.get(pos + i));
      out.append_run(false, params.l_fix - take);
      pos += take;
    }
  }
  return out;
}

std::size_t encoded_length(const BitStream& input, const CodecParams& params) {
  return encoded_length_from_runs(run_lengths(input), input.size(), params);
}

std::vector<std::uint32_t> run_lengths(const BitStream& bits) {
  std::vector<std::uint32_t> runs;
  const std::size_t n = bits.size();
  std::size_t pos = 0;
  while (pos < n) {
    const bool b = bits.get(pos);
    std::size_t run = 1;
    while (pos + run < n && bits.get(pos + run) == b) ++run;
    runs.push_back(static_cast<std::uint32_t>(run));
    pos += run;
  }
  return runs;
}

std::size_t encoded_length_from_runs(std::span<const std::uint32_t> runs,
                                     std::size_t total_bits,
                                     const CodecParams& params) {
  check_params(params);
  std::size_t out = 0;
  std::size_t pos = 0;          // input cursor
  std::size_t run_index = 0;    // run containing pos
  std::size_t run_start = 0;    // first bit of that run
  while (pos < total_bits) {
    // Bits left in the run the cursor sits in.
    while (run_start + runs[run_index] <= pos) run_start += runs[run_index++];
    const std::size_t left = run_start + runs[run_index] - pos;
    if (left >= 4) {
      out += 2 * floor_log2(left) + 1;
      pos += left;
    } else {
      out += 1 + params.l_fix;
      pos += std::min<std::size_t>(params.l_fix, total_bits - pos);
    }
  }
  return out;
}

BitStream decode(BitReader& reader, std::size_t target_length,
                 const CodecParams& params) {
  check_params(params);
  BitStream out;
  while (out.size() < target_length) {
    unsigned ones = 0;
    while (reader.read_bit()) {
      if (++ones > kMaxPrefixOnes) {
        throw CorruptionError("coded run prefix is implausibly long");
      }
    }
    if (ones == 0) {
      // Raw form: always l_fix coded bits; trailing padding is dropped.
      const std::size_t keep =
          std::min<std::size_t>(params.l_fix, target_length - out.size());
      for (unsigned i = 0; i < params.l_fix; ++i) {
        const bool bit = reader.read_bit();
        if (i < keep) out.push_back(bit);
      }
    } else {
      const unsigned l = ones + 1;
      const std::uint64_t mid = reader.read_uint(l);
      const bool bit = reader.read_bit();
      const std::uint64_t run = (std::uint64_t{1} << l) + mid;
      if (run > target_length - out.size()) {
        throw CorruptionError("decoded run overshoots the plane length");
      }
      out.append_run(bit, run);
    }
  }
  return out;
}

BitStream decode(const BitStream& coded, std::size_t target_length,
                 const CodecParams& params) {
  BitReader reader(coded);
  return decode(reader, target_length, params);
}

PlaneSegment compress_plane(const BitStream& plane,
                            const bpr::BlockGeometry& geometry,
                            const CodecParams& params) {
  check_params(params);
  if (plane.size() != geometry.height * geometry.width) {
    throw std::invalid_argument("plane size does not match geometry");
  }
  PlaneSegment best{false, bpr::ScanType::kBlocksRowBitsRow, plane};
  std::size_t best_len = plane.size();
  for (bpr::ScanType type : bpr::kAllScanTypes) {
    BitStream coded = encode(bpr::rearrange(plane, geometry, type), params);
    if (coded.size() < best_len) {
      best_len = coded.size();
      best = PlaneSegment{true, type, std::move(coded)};
    }
  }
  return best;
}

}  // namespace bsc
}  // namespace rdhei
