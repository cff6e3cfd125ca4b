#ifndef REESTYPE_GF_LINALG_HPP
#define REESTYPE_GF_LINALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "reestype/field.hpp"

namespace reestype {

/// Solve A x = b over F_p (A given row-major, any shape). Returns one
/// solution or nullopt when the system is inconsistent.
std::optional<std::vector<std::uint32_t>> gf_solve(
    std::vector<std::vector<std::uint32_t>> A, std::vector<std::uint32_t> b,
    const PrimeField& F);

}  // namespace reestype

#endif
