#include "hha/gf2.hpp"

#include "hha/ext_scalar.hpp"

namespace hha {

void Gf2System::add_equation(std::vector<std::uint8_t> coeffs, std::uint8_t b) {
  if (int(coeffs.size()) != nvars) throw Error("gf2 equation width mismatch");
  rows.push_back(std::move(coeffs));
  rhs.push_back(b & 1);
}

std::optional<std::vector<std::uint8_t>> gf2_solve(const Gf2System& sys) {
  auto rows = sys.rows;
  auto rhs = sys.rhs;
  int m = int(rows.size());
  std::vector<int> pivot_col;
  int lead = 0;
  for (int col = 0; col < sys.nvars && lead < m; ++col) {
    int piv = -1;
    for (int i = lead; i < m; ++i)
      if (rows[i][col]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[piv], rows[lead]);
    std::swap(rhs[piv], rhs[lead]);
    for (int i = 0; i < m; ++i) {
      if (i == lead || !rows[i][col]) continue;
      for (int j = col; j < sys.nvars; ++j) rows[i][j] ^= rows[lead][j];
      rhs[i] ^= rhs[lead];
    }
    pivot_col.push_back(col);
    ++lead;
  }
  for (int i = lead; i < m; ++i)
    if (rhs[i]) return std::nullopt;  // 0 = 1
  std::vector<std::uint8_t> x(sys.nvars, 0);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = rhs[i];
  return x;
}

}  // namespace hha
