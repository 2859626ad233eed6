#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "reesnorm/arith.hpp"
#include "reesnorm/lattice.hpp"
#include "reesnorm/rees.hpp"

namespace reesnorm {

// Comma-separated integers, whitespace tolerated around entries.
std::vector<Int> parse_int_csv(const std::string& text);

// As parse_int_csv, additionally requiring every entry > 0 (resp. >= 0).
Vec parse_positive_csv(const std::string& text);
Vec parse_nonneg_csv(const std::string& text);

// Reads a generator list: one generator per line as space-separated
// nonnegative decimal integers; blank lines and lines from '#' onward are
// ignored; all rows must have the same length.  Throws std::invalid_argument
// on malformed content.
std::vector<Vec> parse_ideal_stream(std::istream& in);
std::vector<Vec> parse_ideal_file(const std::string& path);

// "1 2 6"
std::string render_vec(const Vec& v);

// One generator per line, in the ideal file format.
std::string render_generators(const std::vector<Vec>& gens);

// One generator per line: "a_1 ... a_n d".
std::string render_rees_table(const std::vector<ReesGenerator>& gens);

// CSV with header a1,...,an,d,type.
std::string render_rees_csv(int n, const std::vector<ReesGenerator>& gens);

// JSON document with the system data, the generator list, and the normality
// verdict (witness present only when not normal).  Integers that fit in a
// machine long are emitted as JSON numbers, larger ones as decimal strings.
std::string rees_report_json(const LambdaSystem& sys, const std::vector<ReesGenerator>& gens,
                             const ReesNormalityVerdict& verdict);

}  // namespace reesnorm
