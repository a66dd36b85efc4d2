#pragma once

#include "hyperdet/tensor.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace hdet {

// Tensor document: {"dims": [d0, ..., dp], "entries": [...]} with entries in
// row-major order, each an exact integer or "p/q" string (JSON integers are
// also accepted; floats are not).

MultiMatrix parse_tensor_json(std::string_view text);
std::string to_tensor_json(const MultiMatrix& a);

MultiMatrix read_tensor_file(const std::filesystem::path& path);
void write_tensor_file(const std::filesystem::path& path, const MultiMatrix& a);

}  // namespace hdet
