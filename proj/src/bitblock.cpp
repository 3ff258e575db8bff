#include "burstyic/bitblock.hpp"

#include <cstring>

namespace burstyic {

BitBlock down_shift(const BitBlock& x, int u) {
  const int q = x.rows();
  if (u < 0 || u > q) throw std::invalid_argument("down_shift: u out of range");
  BitBlock y(q, x.cols());
  for (int j = 0; j < u; ++j) {
    std::memcpy(y.row_data(q - u + j), x.row_data(j),
                sizeof(std::uint64_t) * static_cast<std::size_t>(x.row_words()));
  }
  return y;
}

BitBlock lowest_select(const BitBlock& x, int d) {
  const int q = x.rows();
  if (d < 0 || d > q) throw std::invalid_argument("lowest_select: d out of range");
  BitBlock y(q, x.cols());
  for (int j = q - d; j < q; ++j) {
    std::memcpy(y.row_data(j), x.row_data(j),
                sizeof(std::uint64_t) * static_cast<std::size_t>(x.row_words()));
  }
  return y;
}

std::pair<BitBlock, BitBlock> channel_output(const BitBlock& x1, const BitBlock& x2,
                                             int b1, int b2, const ChannelConfig& cfg) {
  cfg.validate();
  const int q = cfg.q();
  if (x1.rows() != q || x2.rows() != q || x1.cols() != x2.cols())
    throw std::invalid_argument("channel_output: input dimension mismatch");
  BitBlock y1 = down_shift(x1, cfg.nd);
  BitBlock y2 = down_shift(x2, cfg.nd);
  if (b1) y1 ^= down_shift(x2, cfg.nc);
  if (b2) y2 ^= down_shift(x1, cfg.nc);
  return {std::move(y1), std::move(y2)};
}

}  // namespace burstyic
