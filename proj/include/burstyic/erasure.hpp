#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "burstyic/rng.hpp"

namespace burstyic {

// Random linear code over GF(2): k message bits, n codeword symbols, generator
// drawn uniformly at random from the seed. Decoding solves the unerased
// columns by Gaussian elimination; a rank-deficient mask is a counted
// DecodeFailure, not a fault.
class ErasureCode {
 public:
  ErasureCode(int k, int n, std::uint64_t seed);

  int message_length() const { return k_; }
  int block_length() const { return n_; }

  std::vector<std::uint8_t> encode(const std::vector<std::uint8_t>& message) const;

  // erased[j] nonzero means symbol j was hit; its value in `received` is ignored.
  std::optional<std::vector<std::uint8_t>> decode(
      const std::vector<std::uint8_t>& received,
      const std::vector<std::uint8_t>& erased) const;

 private:
  int k_, n_, words_;
  std::vector<std::uint64_t> gen_;  // k rows, packed by column index

  int gen_bit(int row, int col) const {
    return static_cast<int>((gen_[static_cast<std::size_t>(row) * words_ + (col >> 6)] >>
                             (col & 63)) & 1u);
  }
};

}  // namespace burstyic
