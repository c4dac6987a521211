#pragma once

#include <cstdint>
#include <string>

#include "rinv/matrix.hpp"

namespace rinv {

enum class GenKind { kIdentity, kRandomUnit, kCoherentPairs, kSpiked };

GenKind gen_kind_from_string(const std::string& name);
std::string to_string(GenKind kind);

// Deterministic d-by-n test matrices with unit columns.
//   identity        d = n, standard basis.
//   random-unit     independent uniformly random unit columns.
//   coherent-pairs  consecutive columns form pairs with inner product
//                   `coherence`; pairs are mutually orthogonal while the
//                   dimension allows.
//   spiked          every column leans on one common direction with
//                   weight `coherence`.
Matrix generate(GenKind kind, std::size_t d, std::size_t n, std::uint64_t seed,
                double coherence = 0.95);

}  // namespace rinv
