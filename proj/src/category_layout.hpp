#pragma once

#include <vector>

#include "wqh/category.hpp"

namespace wqh {

/// Block (x, y) of Mor(z, A B): N_{xy}^z * dim Mor(x, A) * dim Mor(y, B) trees,
/// tree (tA, tB, mu) at offset + (tA * dim_b + tB) * mult + mu.
struct PairBlock {
  int x;
  int y;
  int mult;
  long offset;
  long dim_a;
  long dim_b;
  long index(long ta, long tb, int mu) const { return offset + (ta * dim_b + tb) * mult + mu; }
};

/// Layout of Mor(z, A B) valid even when A or B is the unit word.
class PairLayout {
 public:
  PairLayout(const FusionRing& ring, int z, const std::vector<long>& dims_a, const std::vector<long>& dims_b);
  const std::vector<PairBlock>& blocks() const { return blocks_; }
  const PairBlock* find(int x, int y) const;
  long total() const { return total_; }

 private:
  int rank_;
  std::vector<int> index_;
  std::vector<PairBlock> blocks_;
  long total_ = 0;
};

/// One layout per simple z.
std::vector<PairLayout> pair_layouts(const FusionRing& ring, const Word& a, const Word& b);

}  // namespace wqh
