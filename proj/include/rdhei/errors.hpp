// Copyright (c) 2026 the rdhei authors. All rights reserved.
// Use of this source code is governed by an MIT-style license that can be
// found in the LICENSE file.

#ifndef RDHEI_ERRORS_HPP_
#define RDHEI_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rdhei {

// Base class for all recoverable toolkit errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input: bad magic bytes, out-of-range header fields, etc.
class FormatError : public Error {
 public:
  explicit FormatError(const std::string& msg) : Error(msg) {}
};

// Structurally valid input whose content is inconsistent (truncated coded
// stream, occupied-count mismatch, impossible pixel reconstruction, ...).
// Typically the result of bit corruption or a wrong decryption key.
class CorruptionError : public Error {
 public:
  explicit CorruptionError(const std::string& msg) : Error(msg) {}
};

// The image cannot host its own compressed description: the room-vacating
// pass needs more bits than the image holds.
class NotEmbeddableError : public Error {
 public:
  NotEmbeddableError(std::uint64_t required_bits, std::uint64_t available_bits)
      : Error("image not embeddable: description needs " +
              std::to_string(required_bits) + " bits but only " +
              std::to_string(available_bits) + " are available"),
        required_bits(required_bits),
        available_bits(available_bits) {}

  std::uint64_t required_bits;
  std::uint64_t available_bits;
};

// A payload larger than the container's free room.
class CapacityError : public Error {
 public:
  CapacityError(std::uint64_t required_bits, std::uint64_t available_bits)
      : Error("payload needs " + std::to_string(required_bits) +
              " bits but the container has " + std::to_string(available_bits)),
        required_bits(required_bits),
        available_bits(available_bits) {}

  std::uint64_t required_bits;
  std::uint64_t available_bits;
};

}  // namespace rdhei

#endif  // RDHEI_ERRORS_HPP_
