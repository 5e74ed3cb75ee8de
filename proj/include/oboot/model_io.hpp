#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>

#include "oboot/learner.hpp"

namespace oboot {

// Binary model file, all fields little-endian:
//
//   offset  size  field
//   0       4     magic "OBBS"
//   4       4     u32 version (currently 1)
//   8       4     u32 bits
//   12      4     u32 n_models
//   16      4     u32 stride
//   20      4     u32 loss id (0 squared, 1 logistic)
//   24      8     f64 eta0
//   32      8     f64 power_t
//   40      ...   f32 weights, 2^bits * stride of them
//
// The payload length must match the header exactly; load rejects anything
// else.

inline constexpr std::uint32_t kModelVersion = 1;

struct ModelHeader {
  std::uint32_t bits = 18;
  std::uint32_t n_models = 1;
  LossKind loss = LossKind::kSquared;
  double eta0 = 0.5;
  double power_t = 0.5;
};

struct LoadedModel {
  ModelHeader header;
  WeightTable table;
};

void save_model(const std::filesystem::path& path, const ModelHeader& header,
                const WeightTable& table);

LoadedModel load_model(const std::filesystem::path& path);

// Text rendering of the header plus, optionally, every nonzero weight as
// `index,submodel,weight` rows.
void dump_model(std::ostream& out, const std::filesystem::path& path,
                bool include_weights);

}  // namespace oboot
