#pragma once

// Parity-address tables for the embedded 64800-bit IRA LDPC codes.
// Regenerate with scripts/gen_parity_tables.py.

namespace pas::dvbs2 {

extern const int k_r34_degrees[135];
extern const int k_r34_entries[540];
extern const int k_r34_rows;
extern const int k_r34_q;

extern const int k_r45_degrees[144];
extern const int k_r45_entries[576];
extern const int k_r45_rows;
extern const int k_r45_q;

}  // namespace pas::dvbs2
