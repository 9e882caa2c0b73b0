#pragma once

#include <optional>
#include <string>

#include "oddres/rs_series.hpp"

namespace oddres {

// Plain-text coefficient cache. Format:
//
//   # oddres coefficient cache v1
//   k <k>
//   j <j>
//   S <order>
//   0 <num>/<den>
//   ...
//   S <num>/<den>
//   checksum fnv1a64 <16 hex digits>
//
// Rationals are written in lowest terms (GMP keeps them canonical), so a
// round trip is bit-exact. The checksum covers every byte of the body (all
// lines above the checksum line, '\n' terminated).

std::uint64_t fnv1a64(const std::string& bytes);

std::string serialize_expansion(const RSExpansion& e);

// Throws std::runtime_error on malformed input, checksum mismatch, or
// version mismatch.
RSExpansion deserialize_expansion(const std::string& text);

void save_expansion(const RSExpansion& e, const std::string& path);

// Returns the cached expansion truncated to `order` when the file exists,
// matches (k, j), passes its checksum, and holds at least `order` terms.
// A missing file returns nullopt; a present-but-invalid file throws.
std::optional<RSExpansion> load_expansion(const std::string& path, const OscillatorSpec& spec,
                                          int order);

}  // namespace oddres
