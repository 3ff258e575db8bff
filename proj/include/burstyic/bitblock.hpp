#pragma once

#include <cstdint>
#include <vector>

#include "burstyic/core.hpp"
#include "burstyic/rng.hpp"

namespace burstyic {

// One coherence block: q x T bit matrix over GF(2). Row 0 is the most
// significant sub-channel. Rows are packed into 64-bit words.
class BitBlock {
 public:
  BitBlock() = default;
  BitBlock(int rows, int cols)
      : rows_(rows), cols_(cols), stride_((cols + 63) / 64),
        words_(static_cast<std::size_t>(rows) * stride_, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  int get(int r, int c) const {
    return static_cast<int>((word(r, c) >> (c & 63)) & 1u);
  }
  void set(int r, int c, int v) {
    std::uint64_t& w = word(r, c);
    const std::uint64_t m = 1ull << (c & 63);
    w = v ? (w | m) : (w & ~m);
  }

  void fill_random(SplitMix64& rng) {
    for (auto& w : words_) w = rng.next_u64();
    mask_tail();
  }

  bool operator==(const BitBlock& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && words_ == o.words_;
  }
  bool operator!=(const BitBlock& o) const { return !(*this == o); }

  BitBlock& operator^=(const BitBlock& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("BitBlock xor: dimension mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }

  const std::uint64_t* row_data(int r) const { return words_.data() + static_cast<std::size_t>(r) * stride_; }
  std::uint64_t* row_data(int r) { return words_.data() + static_cast<std::size_t>(r) * stride_; }
  int row_words() const { return stride_; }

 private:
  std::uint64_t& word(int r, int c) {
    return words_[static_cast<std::size_t>(r) * stride_ + (c >> 6)];
  }
  const std::uint64_t& word(int r, int c) const {
    return words_[static_cast<std::size_t>(r) * stride_ + (c >> 6)];
  }
  void mask_tail() {
    const int rem = cols_ & 63;
    if (rem == 0 || stride_ == 0) return;
    const std::uint64_t m = (1ull << rem) - 1;
    for (int r = 0; r < rows_; ++r) words_[static_cast<std::size_t>(r) * stride_ + stride_ - 1] &= m;
  }

  int rows_ = 0, cols_ = 0, stride_ = 0;
  std::vector<std::uint64_t> words_;
};

// Down-shift by q-u rows: bottom u output rows take the top u input rows,
// everything above is zero. Left-multiplication by S_u.
BitBlock down_shift(const BitBlock& x, int u);

// Keep the d lowest rows, zero the rest (L_d).
BitBlock lowest_select(const BitBlock& x, int d);

// Channel law for one block: y1 = S_nd x1 + b1 S_nc x2, y2 symmetric.
std::pair<BitBlock, BitBlock> channel_output(const BitBlock& x1, const BitBlock& x2,
                                             int b1, int b2, const ChannelConfig& cfg);

}  // namespace burstyic
