#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace hha {

struct Gf2System {
  int nvars = 0;
  std::vector<std::vector<std::uint8_t>> rows;  // each of length nvars
  std::vector<std::uint8_t> rhs;

  void add_equation(std::vector<std::uint8_t> coeffs, std::uint8_t b);
};

/// Solves the linear system over the two-element field; free variables zero.
std::optional<std::vector<std::uint8_t>> gf2_solve(const Gf2System& sys);

}  // namespace hha
