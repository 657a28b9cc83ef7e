// Copyright 2026 The srt-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SRT_CLI_RECORDS_HPP
#define SRT_CLI_RECORDS_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "srt/sweep.hpp"

namespace srt::cli {

/// One output row: a single (scheme, grid point) estimate.
struct ResultRecord {
  std::string scheme;
  std::uint64_t n_relays = 0;
  double rs = 0.0;
  double ro = 0.0;
  double snr_db = 0.0;
  double alpha = 1.0;
  double op_hat = 0.0;
  double op_lo = 0.0;
  double op_hi = 0.0;
  double ip_hat = 0.0;
  double ip_lo = 0.0;
  double ip_hi = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

inline constexpr std::string_view kCsvHeader =
    "scheme,n_relays,rs,ro,snr_db,alpha,op_hat,op_lo,op_hi,ip_hat,ip_lo,ip_hi,"
    "trials,seed";

/// Flattens a curve into records. DT rows report n_relays = 0.
std::vector<ResultRecord> to_records(const SrtCurve& curve, double snr_db);

/// %.17g: enough digits for every double to parse back bit-exactly.
std::string format_double(double x);

void write_csv(std::ostream& os, std::span<const ResultRecord> records);
void write_json_lines(std::ostream& os, std::span<const ResultRecord> records);

/// Inverse of write_csv. Throws std::runtime_error on a malformed file.
std::vector<ResultRecord> read_csv(std::istream& is);
/// Inverse of write_json_lines.
std::vector<ResultRecord> read_json_lines(std::istream& is);

}  // namespace srt::cli

#endif  // SRT_CLI_RECORDS_HPP
