#include "pas/ldpc.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "dvbs2_tables.h"
#include "pas/errors.hpp"

namespace pas {

void ParityCheck::build_graph(const std::vector<std::vector<int>>& check_to_bits) {
  chk_ptr_.assign(n_checks_ + 1, 0);
  for (int c = 0; c < n_checks_; ++c)
    chk_ptr_[c + 1] = chk_ptr_[c] + static_cast<int>(check_to_bits[c].size());
  chk_bit_.resize(chk_ptr_.back());
  for (int c = 0; c < n_checks_; ++c)
    std::copy(check_to_bits[c].begin(), check_to_bits[c].end(), chk_bit_.begin() + chk_ptr_[c]);
}

ParityCheck ParityCheck::ira(int n_bits, int n_parity, int q, std::vector<int> row_degrees,
                             std::vector<int> entries) {
  ParityCheck pc;
  pc.n_bits_ = n_bits;
  pc.n_checks_ = n_parity;
  pc.ira_q_ = q;
  pc.ira_row_deg_ = std::move(row_degrees);
  pc.ira_entries_ = std::move(entries);
  const int k = n_bits - n_parity;
  if (static_cast<int>(pc.ira_row_deg_.size()) * 360 != k)
    throw ConfigError("ira table rows do not cover the information bits");

  std::vector<std::vector<int>> adj(n_parity);
  std::size_t off = 0;
  for (std::size_t i = 0; i < pc.ira_row_deg_.size(); ++i) {
    for (int t = 0; t < pc.ira_row_deg_[i]; ++t) {
      const int x = pc.ira_entries_[off++];
      for (int m = 0; m < 360; ++m)
        adj[(x + static_cast<long>(m) * q) % n_parity].push_back(static_cast<int>(i) * 360 + m);
    }
  }
  for (int j = 0; j < n_parity; ++j) {
    adj[j].push_back(k + j);
    if (j + 1 < n_parity) adj[j + 1].push_back(k + j);
  }
  pc.build_graph(adj);
  pc.info_positions_.resize(k);
  for (int i = 0; i < k; ++i) pc.info_positions_[i] = i;
  pc.parity_positions_.resize(n_parity);
  for (int j = 0; j < n_parity; ++j) pc.parity_positions_[j] = k + j;
  return pc;
}

ParityCheck ParityCheck::from_adjacency(const std::vector<std::vector<int>>& check_to_bits,
                                        int n_bits) {
  ParityCheck pc;
  pc.n_bits_ = n_bits;
  pc.n_checks_ = static_cast<int>(check_to_bits.size());
  pc.build_graph(check_to_bits);
  pc.build_dense_encoder();
  return pc;
}

void ParityCheck::build_dense_encoder() {
  const int words = (n_bits_ + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(n_checks_,
                                               std::vector<std::uint64_t>(words, 0));
  for (int c = 0; c < n_checks_; ++c)
    for (int e = chk_ptr_[c]; e < chk_ptr_[c + 1]; ++e) {
      const int b = chk_bit_[e];
      rows[c][b / 64] ^= (1ull << (b % 64));
    }
  auto get = [&](int r, int b) { return (rows[r][b / 64] >> (b % 64)) & 1ull; };

  std::vector<int> pivot_col(n_checks_, -1);
  int rank = 0;
  for (int col = 0; col < n_bits_ && rank < n_checks_; ++col) {
    int sel = -1;
    for (int r = rank; r < n_checks_; ++r)
      if (get(r, col)) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    std::swap(rows[sel], rows[rank]);
    for (int r = 0; r < n_checks_; ++r)
      if (r != rank && get(r, col))
        for (int w = 0; w < (n_bits_ + 63) / 64; ++w) rows[r][w] ^= rows[rank][w];
    pivot_col[rank] = col;
    ++rank;
  }
  if (rank < n_checks_)
    throw DataError("rank-deficient parity-check matrix: rank " + std::to_string(rank) +
                    " < " + std::to_string(n_checks_) + " checks");

  std::vector<bool> is_pivot(n_bits_, false);
  for (int r = 0; r < n_checks_; ++r) is_pivot[pivot_col[r]] = true;
  info_positions_.clear();
  parity_positions_.clear();
  for (int b = 0; b < n_bits_; ++b)
    (is_pivot[b] ? parity_positions_ : info_positions_).push_back(b);

  parity_eqn_.assign(n_checks_, {});
  for (int r = 0; r < n_checks_; ++r) {
    // row r reads: pivot_col[r] = XOR of its non-pivot columns
    std::vector<int>& eqn = parity_eqn_[r];
    for (int b = 0; b < n_bits_; ++b)
      if (!is_pivot[b] && get(r, b)) eqn.push_back(b);
  }
  // order equations by parity position for a stable encoder
  std::vector<int> order(n_checks_);
  for (int r = 0; r < n_checks_; ++r) order[r] = r;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return pivot_col[a] < pivot_col[b]; });
  std::vector<std::vector<int>> eqn_sorted(n_checks_);
  for (int r = 0; r < n_checks_; ++r) eqn_sorted[r] = std::move(parity_eqn_[order[r]]);
  parity_eqn_ = std::move(eqn_sorted);
}

BitVec ParityCheck::encode(std::span<const std::uint8_t> info) const {
  if (static_cast<int>(info.size()) != info_len())
    throw DataError("encode: expected " + std::to_string(info_len()) + " information bits, got " +
                    std::to_string(info.size()));
  BitVec cw(n_bits_, 0);
  if (ira_q_ > 0) {
    const int k = info_len();
    for (int i = 0; i < k; ++i) cw[i] = info[i] & 1u;
    std::vector<std::uint8_t> acc(n_checks_, 0);
    std::size_t off = 0;
    for (std::size_t row = 0; row < ira_row_deg_.size(); ++row)
      for (int t = 0; t < ira_row_deg_[row]; ++t) {
        const int x = ira_entries_[off++];
        const std::uint8_t* d = cw.data() + row * 360;
        for (int m = 0; m < 360; ++m)
          acc[(x + static_cast<long>(m) * ira_q_) % n_checks_] ^= d[m];
      }
    std::uint8_t prev = 0;
    for (int j = 0; j < n_checks_; ++j) {
      prev ^= acc[j];
      cw[k + j] = prev;
    }
  } else {
    for (std::size_t i = 0; i < info_positions_.size(); ++i)
      cw[info_positions_[i]] = info[i] & 1u;
    for (int r = 0; r < n_checks_; ++r) {
      std::uint8_t v = 0;
      for (int b : parity_eqn_[r]) v ^= cw[b];
      cw[parity_positions_[r]] = v;
    }
  }
  return cw;
}

bool ParityCheck::check(std::span<const std::uint8_t> codeword) const {
  if (static_cast<int>(codeword.size()) != n_bits_) return false;
  for (int c = 0; c < n_checks_; ++c) {
    std::uint8_t s = 0;
    for (int e = chk_ptr_[c]; e < chk_ptr_[c + 1]; ++e) s ^= codeword[chk_bit_[e]] & 1u;
    if (s) return false;
  }
  return true;
}

ParityCheck dvbs2_code(const Rational& rate) {
  using namespace dvbs2;
  if (rate == Rational{3, 4})
    return ParityCheck::ira(64800, 16200, k_r34_q,
                            {k_r34_degrees, k_r34_degrees + k_r34_rows},
                            {k_r34_entries, k_r34_entries + 540});
  if (rate == Rational{4, 5})
    return ParityCheck::ira(64800, 12960, k_r45_q,
                            {k_r45_degrees, k_r45_degrees + k_r45_rows},
                            {k_r45_entries, k_r45_entries + 576});
  throw ConfigError("unsupported code rate " + std::to_string(rate.num) + "/" +
                    std::to_string(rate.den));
}

namespace {

struct LineReader {
  std::istream& in;
  int line_no = 0;
  std::vector<int> next_ints(const std::string& what) {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      std::istringstream ss(line);
      std::vector<int> vals;
      int v;
      while (ss >> v) vals.push_back(v);
      std::string junk;
      if (ss.clear(), ss >> junk; !junk.empty())
        throw DataError("line " + std::to_string(line_no) + ": unexpected token '" + junk +
                        "' while reading " + what);
      if (!vals.empty()) return vals;
    }
    throw DataError("line " + std::to_string(line_no) + ": unexpected end of file, wanted " +
                    what);
  }
};

}  // namespace

ParityCheck load_parity_check(std::istream& in) {
  LineReader rd{in};
  auto dims = rd.next_ints("dimensions");
  if (dims.size() != 2 || dims[0] < 1 || dims[1] < 1)
    throw DataError("line " + std::to_string(rd.line_no) + ": expected 'N M' dimensions");
  const int n = dims[0], m = dims[1];
  auto maxdeg = rd.next_ints("max degrees");
  if (maxdeg.size() != 2)
    throw DataError("line " + std::to_string(rd.line_no) + ": expected max column/row degrees");
  auto col_deg = rd.next_ints("column degrees");
  if (static_cast<int>(col_deg.size()) != n)
    throw DataError("line " + std::to_string(rd.line_no) + ": expected " + std::to_string(n) +
                    " column degrees, got " + std::to_string(col_deg.size()));
  auto row_deg = rd.next_ints("row degrees");
  if (static_cast<int>(row_deg.size()) != m)
    throw DataError("line " + std::to_string(rd.line_no) + ": expected " + std::to_string(m) +
                    " row degrees, got " + std::to_string(row_deg.size()));

  std::vector<std::vector<int>> col_lists(n), row_lists(m);
  auto read_list = [&](int count, int deg, int limit, const char* what, int idx) {
    auto vals = rd.next_ints(what);
    std::vector<int> out;
    for (int v : vals) {
      if (v == 0) continue;  // zero padding
      if (v < 1 || v > limit)
        throw DataError("line " + std::to_string(rd.line_no) + ": index " + std::to_string(v) +
                        " out of range [1," + std::to_string(limit) + "]");
      out.push_back(v - 1);
    }
    if (static_cast<int>(out.size()) != deg)
      throw DataError("line " + std::to_string(rd.line_no) + ": " + what + " " +
                      std::to_string(idx + 1) + " lists " + std::to_string(out.size()) +
                      " entries, declared degree " + std::to_string(deg));
    (void)count;
    return out;
  };
  for (int c = 0; c < n; ++c) col_lists[c] = read_list(n, col_deg[c], m, "column", c);
  for (int r = 0; r < m; ++r) row_lists[r] = read_list(m, row_deg[r], n, "row", r);

  // cross-check the two redundant lists
  std::vector<std::vector<int>> from_cols(m);
  for (int c = 0; c < n; ++c)
    for (int r : col_lists[c]) from_cols[r].push_back(c);
  for (int r = 0; r < m; ++r) {
    auto a = from_cols[r];
    auto b = row_lists[r];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
      throw DataError("row " + std::to_string(r + 1) +
                      " disagrees with the column lists (inconsistent file)");
  }
  return ParityCheck::from_adjacency(row_lists, n);
}

ParityCheck load_parity_check_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open code file " + path);
  return load_parity_check(in);
}

void BpWorkspace::bind(const ParityCheck& code) {
  if (cached_ == &code) return;
  cached_ = &code;
  const auto& ptr = code.check_offsets();
  const auto& bit = code.check_bits();
  const int edges = static_cast<int>(bit.size());
  c2v_.assign(edges, 0.0f);
  v2c_.assign(edges, 0.0f);
  post_.assign(code.n_bits(), 0.0f);
  var_ptr_.assign(code.n_bits() + 1, 0);
  for (int b : bit) ++var_ptr_[b + 1];
  for (int i = 0; i < code.n_bits(); ++i) var_ptr_[i + 1] += var_ptr_[i];
  var_edge_.resize(edges);
  std::vector<int> cursor(var_ptr_.begin(), var_ptr_.end() - 1);
  for (int e = 0; e < edges; ++e) var_edge_[cursor[bit[e]]++] = e;
  (void)ptr;
}

DecodeResult BpWorkspace::decode(const ParityCheck& code, std::span<const float> llrs,
                                 int max_iter) {
  if (static_cast<int>(llrs.size()) != code.n_bits())
    throw DataError("decode: expected " + std::to_string(code.n_bits()) + " LLRs, got " +
                    std::to_string(llrs.size()));
  bind(code);
  const int n = code.n_bits();
  const int checks = code.n_checks();
  const auto& cptr = code.check_offsets();
  const auto& cbit = code.check_bits();

  std::vector<float> chan(n);
  for (int b = 0; b < n; ++b) chan[b] = std::clamp(llrs[b], -50.0f, 50.0f);
  std::fill(c2v_.begin(), c2v_.end(), 0.0f);

  DecodeResult res;
  res.bits.resize(n);
  bool erased = false;  // some bit carries no evidence at all
  auto harden = [&](const std::vector<float>& totals) {
    erased = false;
    for (int b = 0; b < n; ++b) {
      res.bits[b] = totals[b] < 0.0f ? 1 : 0;
      erased |= totals[b] == 0.0f;
    }
  };
  auto syndrome_ok = [&]() {
    if (erased) return false;  // undecided bits cannot certify a codeword
    for (int c = 0; c < checks; ++c) {
      std::uint8_t s = 0;
      for (int e = cptr[c]; e < cptr[c + 1]; ++e) s ^= res.bits[cbit[e]];
      if (s) return false;
    }
    return true;
  };

  harden(chan);
  if (syndrome_ok()) {
    res.converged = true;
    res.iterations = 0;
    return res;
  }

  post_ = chan;
  for (int iter = 1; iter <= max_iter; ++iter) {
    // variable-to-check from current posteriors (posterior minus edge term)
    for (int b = 0; b < n; ++b) {
      for (int t = var_ptr_[b]; t < var_ptr_[b + 1]; ++t) {
        const int e = var_edge_[t];
        v2c_[e] = post_[b] - c2v_[e];
      }
    }
    // check-to-variable via forward/backward tanh partial products
    for (int c = 0; c < checks; ++c) {
      const int lo = cptr[c], hi = cptr[c + 1], deg = hi - lo;
      if (static_cast<int>(fwd_.size()) < deg + 1) {
        fwd_.resize(deg + 1);
        bwd_.resize(deg + 1);
      }
      fwd_[0] = 1.0f;
      for (int t = 0; t < deg; ++t)
        fwd_[t + 1] = fwd_[t] * std::tanh(0.5f * v2c_[lo + t]);
      bwd_[deg] = 1.0f;
      for (int t = deg - 1; t >= 0; --t)
        bwd_[t] = bwd_[t + 1] * std::tanh(0.5f * v2c_[lo + t]);
      for (int t = 0; t < deg; ++t) {
        float p = fwd_[t] * bwd_[t + 1];
        p = std::clamp(p, -0.9999990f, 0.9999990f);
        c2v_[lo + t] = 2.0f * std::atanh(p);
      }
    }
    // posteriors and early exit
    post_ = chan;
    for (int c = 0; c < checks; ++c)
      for (int e = cptr[c]; e < cptr[c + 1]; ++e) post_[cbit[e]] += c2v_[e];
    harden(post_);
    res.iterations = iter;
    if (syndrome_ok()) {
      res.converged = true;
      return res;
    }
  }
  res.converged = false;
  return res;
}

DecodeResult decode(const ParityCheck& code, std::span<const float> llrs, int max_iter) {
  BpWorkspace ws;
  return ws.decode(code, llrs, max_iter);
}

}  // namespace pas
