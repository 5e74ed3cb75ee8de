#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace oboot {

// Line-oriented text example format:
//
//   line    := [label [importance] ['tag]] '|' section ('|' section)*
//   section := [namespace](space feature)*      namespace abuts the '|'
//   feature := name[':'value]
//
// Missing importance defaults to 1.0, missing feature value to 1.0, missing
// namespace to the empty string. Lines beginning with '|' carry no label
// (test examples). Feature tokens split at the last ':'.

struct ParseError : std::runtime_error {
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line;    // 1-based, 0 when the caller gave no line number
  std::size_t column;  // 1-based byte offset into the line
};

// A feature before hashing: its textual identity plus value.
struct RawFeature {
  std::string ns;
  std::string name;
  double value = 1.0;

  bool operator==(const RawFeature&) const = default;
};

struct RawExample {
  std::optional<double> label;
  double importance = 1.0;
  std::optional<std::string> tag;
  std::vector<RawFeature> features;

  bool operator==(const RawExample&) const = default;
};

struct HashedFeature {
  std::uint32_t index = 0;
  double value = 1.0;

  bool operator==(const HashedFeature&) const = default;
};

// A parsed instance ready for the learner: every index already lies in
// [0, 2^bits).
struct Example {
  std::optional<double> label;
  double importance = 1.0;
  std::optional<std::string> tag;
  std::vector<HashedFeature> features;

  bool operator==(const Example&) const = default;
};

struct ParserConfig {
  std::uint32_t bits = 18;  // weight-table log2 size, in [1, 31]
};

// FNV-1a 64-bit, offset basis 14695981039346656037, prime 1099511628211.
std::uint64_t fnv1a64(std::string_view bytes);

// Index of a named feature: FNV-1a-64 over `ns + "^" + name`, masked to the
// low `bits` bits. Unseeded, so indexes are identical across runs and
// platforms.
std::uint32_t hash_feature(std::string_view ns, std::string_view name,
                           std::uint32_t bits);

RawExample parse_raw_line(std::string_view line, std::size_t line_no = 0);

Example hash_example(const RawExample& raw, const ParserConfig& config);

// Parse and hash in one pass; equivalent to
// hash_example(parse_raw_line(line), config).
Example parse_line(std::string_view line, const ParserConfig& config,
                   std::size_t line_no = 0);

// Inverse of parse_raw_line up to whitespace normalization: the returned
// string reparses to a field-identical RawExample. Throws invalid_argument
// for examples the grammar cannot express (names with spaces or '|',
// importance or tag without a label, empty feature names).
std::string format_example(const RawExample& raw);

}  // namespace oboot
