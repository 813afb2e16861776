#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "pas/bits.hpp"

namespace pas {

struct Rational {
  long num = 0;
  long den = 1;

  double value() const { return static_cast<double>(num) / den; }
  bool operator==(const Rational&) const = default;
};

// Sparse binary parity-check code with a systematic encoder.  Codeword
// layout is [information bits | parity bits] for the built-in accumulator
// codes; generic codes loaded from adjacency lists keep their natural column
// order with encoder-chosen parity positions.
class ParityCheck {
 public:
  int n_bits() const { return n_bits_; }
  int n_checks() const { return n_checks_; }
  int info_len() const { return n_bits_ - n_checks_; }

  // Positions of the information bits inside the codeword, ascending.
  const std::vector<int>& info_positions() const { return info_positions_; }

  // info.size() == info_len(); returns the full codeword.
  BitVec encode(std::span<const std::uint8_t> info) const;

  bool check(std::span<const std::uint8_t> codeword) const;

  // Edge-level graph access for the decoder.
  const std::vector<int>& check_offsets() const { return chk_ptr_; }
  const std::vector<int>& check_bits() const { return chk_bit_; }

  static ParityCheck ira(int n_bits, int n_parity, int q,
                         std::vector<int> row_degrees, std::vector<int> entries);
  static ParityCheck from_adjacency(const std::vector<std::vector<int>>& check_to_bits,
                                    int n_bits);

 private:
  void build_graph(const std::vector<std::vector<int>>& check_to_bits);
  void build_dense_encoder();

  int n_bits_ = 0;
  int n_checks_ = 0;
  std::vector<int> chk_ptr_, chk_bit_;  // CSR check -> bit

  // accumulator encoder (q > 0) or dense GF(2) back-substitution
  int ira_q_ = 0;
  std::vector<int> ira_row_deg_;
  std::vector<int> ira_entries_;
  std::vector<int> info_positions_;
  std::vector<int> parity_positions_;
  std::vector<std::vector<int>> parity_eqn_;  // per parity position: info positions XORed
};

// The two 64800-bit codes of the transmission chain (DVB-S2 frame
// structure: 360-bit groups, accumulator parity, q = 45 / 36).
// Supported rates: 3/4 (info 48600) and 4/5 (info 51840).
ParityCheck dvbs2_code(const Rational& rate);

// Adjacency-list file format ("alist": dimensions, max degrees, per-column
// and per-row degree lists, then 1-based index lists, zero-padded entries
// permitted).  Throws DataError with a line number on malformed input.
ParityCheck load_parity_check(std::istream& in);
ParityCheck load_parity_check_file(const std::string& path);

struct DecodeResult {
  BitVec bits;     // hard decisions for the full codeword
  bool converged = false;
  int iterations = 0;
};

// Sum-product belief propagation, flooding schedule, early exit once all
// checks are satisfied.  LLR convention: L = log(P(bit=0|y) / P(bit=1|y)),
// clipped to +/-50 on input.
DecodeResult decode(const ParityCheck& code, std::span<const float> llrs, int max_iter = 50);

// Scratch buffers reused across decodes (one instance per worker thread).
class BpWorkspace {
 public:
  DecodeResult decode(const ParityCheck& code, std::span<const float> llrs, int max_iter);

 private:
  std::vector<float> c2v_, v2c_, post_;
  std::vector<float> fwd_, bwd_;
  std::vector<int> var_ptr_, var_edge_;
  const ParityCheck* cached_ = nullptr;
  void bind(const ParityCheck& code);
};

}  // namespace pas
