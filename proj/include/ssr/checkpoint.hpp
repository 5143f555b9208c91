#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "ssr/tensor.hpp"

namespace ssr {

// Checkpoint container (all integers and reals little-endian):
//
//   magic    8 bytes  "SSRCKPT\0"
//   version  u32      kCheckpointVersion
//   meta     u32 count, then count x (string key, string value)
//   tensors  u32 count, then count x record
//   record   string name, u32 rank, rank x i32 dims, u64 n, n x f64 values
//   string   u32 byte length followed by UTF-8 bytes
//
// Metadata carries the resolved configuration and scalar optimizer/scheduler
// state; tensor records carry parameters, Adam moments and the EMA shadow.

inline constexpr std::uint32_t kCheckpointVersion = 1;

struct TensorRecord {
  std::string name;
  Shape shape;
  std::vector<double> values;
};

struct Checkpoint {
  std::map<std::string, std::string> meta;
  std::vector<TensorRecord> tensors;

  const TensorRecord* find(const std::string& name) const;
  const TensorRecord& require(const std::string& name) const;
  const std::string& require_meta(const std::string& key) const;
};

void save_checkpoint(const std::filesystem::path& path, const Checkpoint& ckpt);
Checkpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace ssr
