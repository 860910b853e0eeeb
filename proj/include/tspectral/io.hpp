#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "tspectral/tensor.hpp"

namespace tspectral {

// Tensor file format (JSON):
//
//   {"dims": [m, n, p], "kind": "real" | "complex", "data": [...]}
//
// `data` holds m*n*p entries in slice-major, then row-major order. Real
// tensors store plain numbers; complex tensors store [re, im] pairs.
// Numbers are written with round-trip precision, so read(write(T)) == T.

std::string tensor_to_json(const Tensor3& t);

/// Throws ParseError naming the offending line or field.
Tensor3 tensor_from_json(std::string_view text);

Tensor3 read_tensor(const std::filesystem::path& path);
void write_tensor(const Tensor3& t, const std::filesystem::path& path);

}  // namespace tspectral
