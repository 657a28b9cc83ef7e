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

#include "cli/records.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace srt::cli {

std::vector<ResultRecord> to_records(const SrtCurve& curve, double snr_db) {
  std::vector<ResultRecord> out;
  out.reserve(curve.points.size());
  const bool direct = curve.scheme == Scheme::dt;
  for (const SrtPoint& pt : curve.points) {
    ResultRecord r;
    r.scheme = std::string(to_string(curve.scheme));
    r.n_relays = direct ? 0 : curve.params.n_relays;
    r.rs = curve.params.secrecy_rate;
    r.ro = pt.overall_rate;
    r.snr_db = snr_db;
    r.alpha = direct ? 1.0 : curve.params.alpha;
    r.op_hat = pt.op_hat;
    r.op_lo = pt.op_lo;
    r.op_hi = pt.op_hi;
    r.ip_hat = pt.ip_hat;
    r.ip_lo = pt.ip_lo;
    r.ip_hi = pt.ip_hi;
    r.trials = pt.trials;
    r.seed = pt.master_seed;
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_csv(std::ostream& os, std::span<const ResultRecord> records) {
  os << kCsvHeader << '\n';
  for (const ResultRecord& r : records) {
    os << r.scheme << ',' << r.n_relays << ',' << format_double(r.rs) << ','
       << format_double(r.ro) << ',' << format_double(r.snr_db) << ','
       << format_double(r.alpha) << ',' << format_double(r.op_hat) << ','
       << format_double(r.op_lo) << ',' << format_double(r.op_hi) << ','
       << format_double(r.ip_hat) << ',' << format_double(r.ip_lo) << ','
       << format_double(r.ip_hi) << ',' << r.trials << ',' << r.seed << '\n';
  }
}

void write_json_lines(std::ostream& os, std::span<const ResultRecord> records) {
  for (const ResultRecord& r : records) {
    nlohmann::ordered_json j;
    j["scheme"] = r.scheme;
    j["n_relays"] = r.n_relays;
    j["rs"] = r.rs;
    j["ro"] = r.ro;
    j["snr_db"] = r.snr_db;
    j["alpha"] = r.alpha;
    j["op_hat"] = r.op_hat;
    j["op_lo"] = r.op_lo;
    j["op_hi"] = r.op_hi;
    j["ip_hat"] = r.ip_hat;
    j["ip_lo"] = r.ip_lo;
    j["ip_hi"] = r.ip_hi;
    j["trials"] = r.trials;
    j["seed"] = r.seed;
    os << j.dump() << '\n';
  }
}

namespace {

double parse_double(const std::string& s) {
  double x = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || end != s.data() + s.size()) {
    throw std::runtime_error("bad number '" + s + "'");
  }
  return x;
}

std::uint64_t parse_u64(const std::string& s) {
  std::uint64_t x = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || end != s.data() + s.size()) {
    throw std::runtime_error("bad integer '" + s + "'");
  }
  return x;
}

}  // namespace

std::vector<ResultRecord> read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kCsvHeader) {
    throw std::runtime_error("missing or unexpected CSV header");
  }
  std::vector<ResultRecord> out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (f.size() != 14) throw std::runtime_error("expected 14 CSV fields");
    ResultRecord r;
    r.scheme = f[0];
    r.n_relays = parse_u64(f[1]);
    r.rs = parse_double(f[2]);
    r.ro = parse_double(f[3]);
    r.snr_db = parse_double(f[4]);
    r.alpha = parse_double(f[5]);
    r.op_hat = parse_double(f[6]);
    r.op_lo = parse_double(f[7]);
    r.op_hi = parse_double(f[8]);
    r.ip_hat = parse_double(f[9]);
    r.ip_lo = parse_double(f[10]);
    r.ip_hi = parse_double(f[11]);
    r.trials = parse_u64(f[12]);
    r.seed = parse_u64(f[13]);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<ResultRecord> read_json_lines(std::istream& is) {
  std::vector<ResultRecord> out;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto j = nlohmann::json::parse(line);
    ResultRecord r;
    r.scheme = j.at("scheme").get<std::string>();
    r.n_relays = j.at("n_relays").get<std::uint64_t>();
    r.rs = j.at("rs").get<double>();
    r.ro = j.at("ro").get<double>();
    r.snr_db = j.at("snr_db").get<double>();
    r.alpha = j.at("alpha").get<double>();
    r.op_hat = j.at("op_hat").get<double>();
    r.op_lo = j.at("op_lo").get<double>();
    r.op_hi = j.at("op_hi").get<double>();
    r.ip_hat = j.at("ip_hat").get<double>();
    r.ip_lo = j.at("ip_lo").get<double>();
    r.ip_hi = j.at("ip_hi").get<double>();
    r.trials = j.at("trials").get<std::uint64_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace srt::cli
