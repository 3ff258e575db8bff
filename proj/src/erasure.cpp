#include "burstyic/erasure.hpp"

#include <stdexcept>

namespace burstyic {

ErasureCode::ErasureCode(int k, int n, std::uint64_t seed)
    : k_(k), n_(n), words_((n + 63) / 64), gen_(static_cast<std::size_t>(k) * words_) {
  if (k < 1 || n < 1 || k > n) throw std::invalid_argument("ErasureCode: need 1 <= k <= n");
  SplitMix64 rng = SplitMix64::stream(seed, 0x9e3779b9);
  for (auto& w : gen_) w = rng.next_u64();
  const int rem = n & 63;
  if (rem)
    for (int r = 0; r < k; ++r)
      gen_[static_cast<std::size_t>(r) * words_ + words_ - 1] &= (1ull << rem) - 1;
}

std::vector<std::uint8_t> ErasureCode::encode(const std::vector<std::uint8_t>& message) const {
  if (static_cast<int>(message.size()) != k_)
    throw std::invalid_argument("ErasureCode::encode: message length mismatch");
  std::vector<std::uint64_t> acc(words_, 0);
  for (int r = 0; r < k_; ++r)
    if (message[r])
      for (int w = 0; w < words_; ++w)
        acc[w] ^= gen_[static_cast<std::size_t>(r) * words_ + w];
  std::vector<std::uint8_t> out(n_);
  for (int j = 0; j < n_; ++j) out[j] = static_cast<std::uint8_t>((acc[j >> 6] >> (j & 63)) & 1u);
  return out;
}

std::optional<std::vector<std::uint8_t>> ErasureCode::decode(
    const std::vector<std::uint8_t>& received, const std::vector<std::uint8_t>& erased) const {
  if (static_cast<int>(received.size()) != n_ || static_cast<int>(erased.size()) != n_)
    throw std::invalid_argument("ErasureCode::decode: length mismatch");

  // Build the linear system from unerased columns: rows are message bits,
  // augmented with one rhs bit per column equation, transposed so Gaussian
  // elimination runs over k-bit columns.
  std::vector<int> cols;
  cols.reserve(n_);
  for (int j = 0; j < n_; ++j)
    if (!erased[j]) cols.push_back(j);
  if (static_cast<int>(cols.size()) < k_) return std::nullopt;

  const int kw = (k_ + 63) / 64;
  const std::size_t stride = static_cast<std::size_t>(kw) + 1;  // + rhs word
  std::vector<std::uint64_t> eq(cols.size() * stride, 0);
  for (std::size_t e = 0; e < cols.size(); ++e) {
    const int j = cols[e];
    for (int r = 0; r < k_; ++r)
      if (gen_bit(r, j)) eq[e * stride + (r >> 6)] |= 1ull << (r & 63);
    eq[e * stride + kw] = received[j] & 1u;
  }

  // Forward elimination with partial pivoting by message-bit index.
  std::vector<std::size_t> pivot_of(k_, SIZE_MAX);
  std::size_t row = 0;
  for (int c = 0; c < k_ && row < cols.size(); ++c) {
    std::size_t sel = SIZE_MAX;
    for (std::size_t e = row; e < cols.size(); ++e)
      if ((eq[e * stride + (c >> 6)] >> (c & 63)) & 1u) {
        sel = e;
        break;
      }
    if (sel == SIZE_MAX) continue;
    for (std::size_t w = 0; w < stride; ++w) std::swap(eq[sel * stride + w], eq[row * stride + w]);
    for (std::size_t e = 0; e < cols.size(); ++e) {
      if (e == row) continue;
      if ((eq[e * stride + (c >> 6)] >> (c & 63)) & 1u)
        for (std::size_t w = 0; w < stride; ++w) eq[e * stride + w] ^= eq[row * stride + w];
    }
    pivot_of[c] = row;
    ++row;
  }
  for (int c = 0; c < k_; ++c)
    if (pivot_of[c] == SIZE_MAX) return std::nullopt;

  std::vector<std::uint8_t> message(k_);
  for (int c = 0; c < k_; ++c)
    message[c] = static_cast<std::uint8_t>(eq[pivot_of[c] * stride + kw] & 1u);
  return message;
}

}  // namespace burstyic
