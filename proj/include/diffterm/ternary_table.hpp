// Cayley tables of ternary operations, the currency of the table-construction
// pipeline. Entry layout is row-major: index(x,y,z) = x*n*n + y*n + z.
#pragma once

#include <vector>

namespace diffterm {

struct TernaryTable {
  int size = 0;
  std::vector<int> entries;  // size^3 values in [0, size)

  int at(int x, int y, int z) const {
    return entries[(x * size + y) * size + z];
  }
  int& at(int x, int y, int z) { return entries[(x * size + y) * size + z]; }

  static TernaryTable projection(int n, int coord);  // coord in {0,1,2}
  bool has_idempotent_diagonal() const;

  friend bool operator==(const TernaryTable&, const TernaryTable&) = default;
};

}  // namespace diffterm
