#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <vector>

namespace pas {

using BitVec = std::vector<std::uint8_t>;   // one 0/1 value per entry
using AmpVec = std::vector<std::uint8_t>;   // amplitude level indices

// Bit strings are big-endian throughout: bits[0] is the most significant
// bit of the integer value and of the first packed byte.

inline mpz_class bits_to_mpz(std::span<const std::uint8_t> bits) {
  if (bits.empty()) return mpz_class(0);
  const std::size_t nbytes = (bits.size() + 7) / 8;
  std::vector<std::uint8_t> buf(nbytes, 0);
  const std::size_t pad = nbytes * 8 - bits.size();
  for (std::size_t i = 0; i < bits.size(); ++i) {
    const std::size_t pos = pad + i;
    buf[pos / 8] |= static_cast<std::uint8_t>((bits[i] & 1u) << (7 - pos % 8));
  }
  mpz_class v;
  mpz_import(v.get_mpz_t(), nbytes, 1, 1, 0, 0, buf.data());
  return v;
}

inline void mpz_to_bits(const mpz_class& v, std::span<std::uint8_t> out) {
  const std::size_t nbytes = (out.size() + 7) / 8;
  std::vector<std::uint8_t> buf(nbytes, 0);
  std::size_t count = 0;
  if (mpz_sgn(v.get_mpz_t()) != 0) {
    std::size_t need = (mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8;
    mpz_export(buf.data() + (nbytes - need), &count, 1, 1, 0, 0, v.get_mpz_t());
  }
  const std::size_t pad = nbytes * 8 - out.size();
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::size_t pos = pad + i;
    out[i] = (buf[pos / 8] >> (7 - pos % 8)) & 1u;
  }
}

inline std::vector<std::uint8_t> pack_bits(std::span<const std::uint8_t> bits) {
  std::vector<std::uint8_t> bytes((bits.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bits.size(); ++i)
    bytes[i / 8] |= static_cast<std::uint8_t>((bits[i] & 1u) << (7 - i % 8));
  return bytes;
}

inline BitVec unpack_bits(std::span<const std::uint8_t> bytes, std::size_t bit_count) {
  BitVec bits(bit_count);
  for (std::size_t i = 0; i < bit_count; ++i)
    bits[i] = (bytes[i / 8] >> (7 - i % 8)) & 1u;
  return bits;
}

// floor(log2 v) + 1 for v>0
inline std::size_t bit_length(const mpz_class& v) {
  return mpz_sgn(v.get_mpz_t()) == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
}

}  // namespace pas
