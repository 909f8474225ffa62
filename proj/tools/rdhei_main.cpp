// Copyright (c) 2026 the rdhei authors. All rights reserved.
// Use of this source code is governed by an MIT-style license that can be
// found in the LICENSE file.
//
// Command-line surface for the rdhei library. Subcommands compose through
// PGM files so the three parties (content owner, data hider, receiver) can
// each run their own step:
//
//   rdhei vacate   --in img.pgm     --out container.pgm [--report json]
//   rdhei encrypt  --in any.pgm     --key-image HEX16 --out out.pgm
//   rdhei embed    --in enc.pgm     --key-data HEX16 --payload file --out marked.pgm
//   rdhei extract  --in marked.pgm  --key-data HEX16 --out payload.bin
//   rdhei recover  --in marked.pgm  --key-image HEX16 --out restored.pgm
//   rdhei capacity --in any.pgm
//   rdhei bench    --dir corpus/ --key-image HEX16 --key-data HEX16 --out report.csv
//
// Exit codes: 0 success, 2 usage error, 3 not embeddable, 4 payload exceeds
// capacity, 5 corruption or format error.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rdhei/bitplane.hpp"
#include "rdhei/container.hpp"
#include "rdhei/crypto.hpp"
#include "rdhei/embed.hpp"
#include "rdhei/errors.hpp"
#include "rdhei/image.hpp"
#include "rdhei/metrics.hpp"
#include "rdhei/pgm.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNotEmbeddable = 3;
constexpr int kExitCapacity = 4;
constexpr int kExitCorruption = 5;

// Keys are exactly 16 hex digits (a raw 64-bit value); anything else is a
// usage error caught during flag validation.
std::uint64_t parse_key(const std::string& hex) {
  if (hex.size() != 16 ||
      hex.find_first_not_of("0123456789abcdefABCDEF") != std::string::npos) {
    throw CLI::ValidationError("key must be exactly 16 hexadecimal digits");
  }
  return std::stoull(hex, nullptr, 16);
}

std::vector<std::uint8_t> read_file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw rdhei::FormatError("cannot open payload file: " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw rdhei::FormatError("cannot read payload file: " + path);
  return bytes;
}

void write_file_bytes(const std::string& path,
                      const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw rdhei::Error("cannot open output file: " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw rdhei::Error("cannot write output file: " + path);
}

// Plane flags as a string, MSB plane first: '1' = compressed.
std::string plane_flag_string(const rdhei::container::Container& c) {
  std::string flags;
  for (const auto& seg : c.segments) flags.push_back(seg.compressed ? '1' : '0');
  return flags;
}

std::string format_double(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::ostringstream out;
  out.precision(6);
  out << std::fixed << value;
  return out.str();
}

// ---------------------------------------------------------------------------
// Subcommand bodies. Each maps 1:1 onto a library operation.

int run_vacate(const std::string& in, const std::string& out,
               const std::string& report) {
  const rdhei::Image image = rdhei::read_pgm(in);
  const rdhei::container::Container c = rdhei::container::vacate(image);
  const rdhei::PlaneStack stack = rdhei::container::serialize(c);
  rdhei::write_pgm(rdhei::bitplane::recompose(stack), out);

  const auto cap = rdhei::container::capacity(stack);
  if (report == "json") {
    nlohmann::json j;
    j["height"] = c.height;
    j["width"] = c.width;
    j["occupied_bits"] = cap.occupied_bits;
    j["capacity_bits"] = cap.capacity_bits;
    j["net_er_bpp"] = cap.net_embedding_rate;
    j["block_side"] = c.block_side;
    j["l_fix"] = c.params.l_fix;
    j["overflow_count"] = c.overflow_locations.size();
    j["plane_compressed"] = plane_flag_string(c);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "occupied_bits " << cap.occupied_bits << "\n"
              << "capacity_bits " << cap.capacity_bits << "\n"
              << "net_er_bpp " << format_double(cap.net_embedding_rate) << "\n";
  }
  return 0;
}

int run_encrypt(const std::string& in, std::uint64_t key,
                const std::string& out) {
  const rdhei::Image image = rdhei::read_pgm(in);
  const rdhei::PlaneStack stack = rdhei::bitplane::decompose(image);
  rdhei::write_pgm(rdhei::bitplane::recompose(rdhei::crypto::encrypt_image(stack, key)),
                   out);
  return 0;
}

int run_embed(const std::string& in, std::uint64_t key,
              const std::string& payload_path, const std::string& out) {
  const rdhei::Image image = rdhei::read_pgm(in);
  const std::vector<std::uint8_t> payload = read_file_bytes(payload_path);
  const std::uint64_t bit_count = 8 * static_cast<std::uint64_t>(payload.size());
  if (bit_count >= (std::uint64_t{1} << 32)) {
    throw rdhei::CapacityError(bit_count, (std::uint64_t{1} << 32) - 1);
  }
  const rdhei::PlaneStack marked =
      rdhei::embed(rdhei::bitplane::decompose(image), payload, bit_count, key);
  rdhei::write_pgm(rdhei::bitplane::recompose(marked), out);
  std::cout << "embedded_bits " << bit_count << "\n";
  return 0;
}

int run_extract(const std::string& in, std::uint64_t key,
                const std::string& out) {
  const rdhei::Image image = rdhei::read_pgm(in);
  const rdhei::Payload payload = rdhei::extract(rdhei::bitplane::decompose(image), key);
  write_file_bytes(out, payload.bytes);
  std::cout << "extracted_bits " << payload.bit_count << "\n";
  return 0;
}

int run_recover(const std::string& in, std::uint64_t key,
                const std::string& out) {
  const rdhei::Image image = rdhei::read_pgm(in);
  rdhei::write_pgm(rdhei::recover(rdhei::bitplane::decompose(image), key), out);
  return 0;
}

int run_capacity(const std::string& in) {
  const rdhei::Image image = rdhei::read_pgm(in);
  const auto cap = rdhei::container::capacity(rdhei::bitplane::decompose(image));
  std::cout << "occupied_bits " << cap.occupied_bits << "\n"
            << "capacity_bits " << cap.capacity_bits << "\n"
            << "net_er_bpp " << format_double(cap.net_embedding_rate) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// Benchmark: run the full pipeline over a directory and write one CSV row
// per image plus best/worst/average/not-embeddable summary rows.

struct BenchRow {
  std::string file;
  std::string status = "ok";  // ok | not_embeddable | error
  std::string note;
  std::size_t height = 0;
  std::size_t width = 0;
  std::uint64_t occupied_bits = 0;
  std::uint64_t net_payload_bits = 0;
  double net_er_bpp = 0.0;
  std::size_t overflow_count = 0;
  unsigned block_side = 0;
  unsigned l_fix = 0;
  std::string plane_flags;
  bool round_trip_ok = false;
  double psnr_db = 0.0;
  double ssim = 0.0;
  double wall_ms = 0.0;
};

const char kBenchHeader[] =
    "file,height,width,occupied_bits,net_payload_bits,net_er_bpp,"
    "overflow_count,block_side,l_fix,plane_flags,round_trip_ok,psnr_db,ssim,"
    "wall_ms,status,note";

void write_bench_row(std::ostream& out, const BenchRow& r) {
  out << r.file << ',' << r.height << ',' << r.width << ','
      << r.occupied_bits << ',' << r.net_payload_bits << ','
      << format_double(r.net_er_bpp) << ',' << r.overflow_count << ','
      << r.block_side << ',' << r.l_fix << ',' << r.plane_flags << ','
      << (r.round_trip_ok ? "true" : "false") << ','
      << format_double(r.psnr_db) << ',' << format_double(r.ssim) << ','
      << format_double(r.wall_ms) << ',' << r.status << ',' << r.note << '\n';
}

// Deterministic full-capacity payload for row `index`: every run with the
// same keys and corpus produces the same CSV.
std::vector<std::uint8_t> bench_payload(std::uint64_t data_key,
                                        std::size_t index,
                                        std::uint64_t bit_count) {
  const std::uint64_t seed =
      data_key ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(index + 1));
  return rdhei::crypto::keystream_bytes(seed, (bit_count + 7) / 8);
}

BenchRow bench_one(const std::filesystem::path& path, std::size_t index,
                   std::uint64_t image_key, std::uint64_t data_key) {
  BenchRow row;
  row.file = path.filename().string();
  const auto start = std::chrono::steady_clock::now();
  try {
    const rdhei::Image image = rdhei::read_pgm(path.string());
    row.height = image.height;
    row.width = image.width;

    const rdhei::container::Container c = rdhei::container::vacate(image);
    const rdhei::PlaneStack container_stack = rdhei::container::serialize(c);
    const auto cap = rdhei::container::capacity(container_stack);
    row.occupied_bits = cap.occupied_bits;
    row.net_payload_bits = cap.capacity_bits;
    row.net_er_bpp = cap.net_embedding_rate;
    row.overflow_count = c.overflow_locations.size();
    row.block_side = c.block_side;
    row.l_fix = c.params.l_fix;
    row.plane_flags = plane_flag_string(c);

    // Full pipeline at maximum payload: encrypt, embed, extract, recover.
    const rdhei::PlaneStack encrypted =
        rdhei::crypto::encrypt_image(container_stack, image_key);
    const std::uint64_t bit_count =
        std::min<std::uint64_t>(cap.capacity_bits, (std::uint64_t{1} << 32) - 1);
    const std::vector<std::uint8_t> payload =
        bench_payload(data_key, index, bit_count);
    const rdhei::PlaneStack marked =
        rdhei::embed(encrypted, payload, bit_count, data_key);

    const auto [restored, extracted] =
        rdhei::recover_and_extract(marked, image_key, data_key);
    bool payload_ok = extracted.bit_count == bit_count;
    for (std::uint64_t i = 0; payload_ok && i < bit_count / 8; ++i) {
      payload_ok = extracted.bytes[i] == payload[i];
    }
    if (payload_ok && bit_count % 8 != 0) {
      const unsigned keep = static_cast<unsigned>(bit_count % 8);
      const std::uint8_t mask =
          static_cast<std::uint8_t>(0xffu << (8 - keep));
      payload_ok = (extracted.bytes[bit_count / 8] & mask) ==
                   (payload[bit_count / 8] & mask);
    }
    row.round_trip_ok = payload_ok && restored == image;
    row.psnr_db = rdhei::metrics::psnr(image, restored);
    row.ssim = rdhei::metrics::ssim(image, restored);
    if (!row.round_trip_ok) {
      row.status = "error";
      row.note = "round trip mismatch";
    }
  } catch (const rdhei::NotEmbeddableError& e) {
    row.status = "not_embeddable";
    row.note = e.what();
  } catch (const std::exception& e) {
    row.status = "error";
    row.note = e.what();
  }
  const auto stop = std::chrono::steady_clock::now();
  row.wall_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();
  // Commas would break the CSV; notes are diagnostic only.
  std::replace(row.note.begin(), row.note.end(), ',', ';');
  return row;
}

int run_bench(const std::string& dir, std::uint64_t image_key,
              std::uint64_t data_key, const std::string& out_path) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::ofstream out(out_path);
  if (!out) throw rdhei::Error("cannot open output file: " + out_path);
  out << kBenchHeader << '\n';

  std::vector<BenchRow> rows;
  rows.reserve(files.size());
  for (std::size_t i = 0; i < files.size(); ++i) {
    rows.push_back(bench_one(files[i], i, image_key, data_key));
    write_bench_row(out, rows.back());
  }

  // Summary rows mirror a best/worst/average table; the note column names
  // the file behind each extreme.
  const BenchRow* best = nullptr;
  const BenchRow* worst = nullptr;
  double er_sum = 0.0;
  std::size_t ok_count = 0;
  std::size_t not_embeddable = 0;
  for (const auto& row : rows) {
    if (row.status == "not_embeddable") ++not_embeddable;
    if (row.status != "ok") continue;
    ++ok_count;
    er_sum += row.net_er_bpp;
    if (best == nullptr || row.net_er_bpp > best->net_er_bpp) best = &row;
    if (worst == nullptr || row.net_er_bpp < worst->net_er_bpp) worst = &row;
  }
  if (!rows.empty()) {
    BenchRow summary;
    summary.status = "summary";
    if (best != nullptr) {
      summary.file = "(best)";
      summary.net_er_bpp = best->net_er_bpp;
      summary.note = best->file;
      write_bench_row(out, summary);
      summary.file = "(worst)";
      summary.net_er_bpp = worst->net_er_bpp;
      summary.note = worst->file;
      write_bench_row(out, summary);
      summary.file = "(average)";
      summary.net_er_bpp = er_sum / static_cast<double>(ok_count);
      summary.note = std::to_string(ok_count) + " image(s)";
      write_bench_row(out, summary);
    }
    summary.file = "(not_embeddable)";
    summary.net_er_bpp = 0.0;
    summary.note = std::to_string(not_embeddable) + " image(s)";
    write_bench_row(out, summary);
  }
  if (!out) throw rdhei::Error("cannot write output file: " + out_path);

  std::size_t errors = 0;
  for (const auto& row : rows) {
    if (row.status == "error") ++errors;
  }
  std::cout << "images " << rows.size() << "\n"
            << "ok " << ok_count << "\n"
            << "not_embeddable " << not_embeddable << "\n"
            << "errors " << errors << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reversible data hiding in encrypted grayscale images"};
  app.require_subcommand(1);

  std::string in, out, dir, payload_path, report;
  std::string key_image_hex, key_data_hex;

  const auto add_in = [&](CLI::App* cmd) {
    cmd->add_option("--in", in, "input image (P5 PGM)")
        ->required()
        ->check(CLI::ExistingFile);
  };
  const auto add_out = [&](CLI::App* cmd, const char* help) {
    cmd->add_option("--out", out, help)->required();
  };

  CLI::App* vacate = app.add_subcommand(
      "vacate", "compress an image into a room-vacated container");
  add_in(vacate);
  add_out(vacate, "output container (P5 PGM)");
  vacate->add_option("--report", report, "report format (json)")
      ->check(CLI::IsMember({"json"}));

  CLI::App* encrypt = app.add_subcommand(
      "encrypt", "XOR-encrypt a container with the image key (involution)");
  add_in(encrypt);
  encrypt->add_option("--key-image", key_image_hex, "image key (16 hex digits)")
      ->required();
  add_out(encrypt, "output image (P5 PGM)");

  CLI::App* embed = app.add_subcommand(
      "embed", "embed an encrypted payload into a container's vacated room");
  add_in(embed);
  embed->add_option("--key-data", key_data_hex, "data key (16 hex digits)")
      ->required();
  embed->add_option("--payload", payload_path, "payload file")
      ->required()
      ->check(CLI::ExistingFile);
  add_out(embed, "output marked image (P5 PGM)");

  CLI::App* extract = app.add_subcommand(
      "extract", "extract the payload using the data key alone");
  add_in(extract);
  extract->add_option("--key-data", key_data_hex, "data key (16 hex digits)")
      ->required();
  add_out(extract, "output payload file");

  CLI::App* recover = app.add_subcommand(
      "recover", "restore the original image using the image key alone");
  add_in(recover);
  recover->add_option("--key-image", key_image_hex, "image key (16 hex digits)")
      ->required();
  add_out(recover, "output restored image (P5 PGM)");

  CLI::App* capacity = app.add_subcommand(
      "capacity", "print occupied bits, capacity bits, and net embedding rate");
  add_in(capacity);

  CLI::App* bench = app.add_subcommand(
      "bench", "run the full pipeline over a directory and write a CSV");
  bench->add_option("--dir", dir, "corpus directory")
      ->required()
      ->check(CLI::ExistingDirectory);
  bench->add_option("--key-image", key_image_hex, "image key (16 hex digits)")
      ->required();
  bench->add_option("--key-data", key_data_hex, "data key (16 hex digits)")
      ->required();
  bench->add_option("--out", out, "output CSV file")->required();

  std::uint64_t key_image = 0;
  std::uint64_t key_data = 0;
  try {
    app.parse(argc, argv);
    if (!key_image_hex.empty()) key_image = parse_key(key_image_hex);
    if (!key_data_hex.empty()) key_data = parse_key(key_data_hex);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (vacate->parsed()) return run_vacate(in, out, report);
    if (encrypt->parsed()) return run_encrypt(in, key_image, out);
    if (embed->parsed()) return run_embed(in, key_data, payload_path, out);
    if (extract->parsed()) return run_extract(in, key_data, out);
    if (recover->parsed()) return run_recover(in, key_image, out);
    if (capacity->parsed()) return run_capacity(in);
    if (bench->parsed()) return run_bench(dir, key_image, key_data, out);
  } catch (const rdhei::NotEmbeddableError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotEmbeddable;
  } catch (const rdhei::CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCorruption;
  }
  return 0;
}
