// Copyright 2026 The bosim Authors
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

#include "bosim/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <system_error>

#include <unistd.h>

#include "bosim/errors.hpp"

namespace bosim::io {

using nlohmann::json;

namespace {

double number_at(const json& j, const std::string& where) {
  if (!j.is_number()) throw ParseError(where + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError(where + ": expected a finite number");
  return v;
}

int index_at(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
  return j.get<int>();
}

const json& required(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing field '" + key + "'");
  return *it;
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
  const std::set<std::string> keys(allowed.begin(), allowed.end());
  for (const auto& [key, _] : obj.items()) {
    if (!keys.contains(key)) throw ParseError(where + ": unknown field '" + key + "'");
  }
}

std::string csv_quote(const std::string& field) { return '"' + field + '"'; }

}  // namespace

json parse_json(std::string_view text, const std::string& source) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(source + ": " + e.what());
  }
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("matrix: expected an array of rows");
  const auto k = static_cast<Eigen::Index>(j.size());
  ComplexMatrix m(k, k);
  for (Eigen::Index r = 0; r < k; ++r) {
    const auto& row = j[static_cast<std::size_t>(r)];
    const std::string where = "matrix[" + std::to_string(r) + "]";
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != k) {
      throw ParseError(where + ": expected a row of " + std::to_string(k) + " entries");
    }
    for (Eigen::Index c = 0; c < k; ++c) {
      const auto& entry = row[static_cast<std::size_t>(c)];
      const std::string at = where + "[" + std::to_string(c) + "]";
      if (!entry.is_array() || entry.size() != 2) throw ParseError(at + ": expected an [re, im] pair");
      m(r, c) = {number_at(entry[0], at + "[0]"), number_at(entry[1], at + "[1]")};
    }
  }
  return m;
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<OpticalElement> circuit_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("circuit: expected an array of elements");
  std::vector<OpticalElement> out;
  for (std::size_t n = 0; n < j.size(); ++n) {
    const auto& e = j[n];
    const std::string where = "circuit[" + std::to_string(n) + "]";
    if (!e.is_object()) throw ParseError(where + ": expected an object");
    const auto& kind = required(e, "kind", where);
    if (kind == "bs") {
      reject_unknown_keys(e, {"kind", "i", "j", "theta", "phi"}, where);
      Beamsplitter bs;
      bs.i = index_at(required(e, "i", where), where + ".i");
      bs.j = index_at(required(e, "j", where), where + ".j");
      bs.theta = number_at(required(e, "theta", where), where + ".theta");
      bs.phi = e.contains("phi") ? number_at(e["phi"], where + ".phi") : 0.0;
      out.emplace_back(bs);
    } else if (kind == "ps") {
      reject_unknown_keys(e, {"kind", "i", "phi"}, where);
      PhaseShifter ps;
      ps.i = index_at(required(e, "i", where), where + ".i");
      ps.phi = number_at(required(e, "phi", where), where + ".phi");
      out.emplace_back(ps);
    } else {
      throw ParseError(where + ".kind: expected \"bs\" or \"ps\"");
    }
  }
  return out;
}

json circuit_to_json(const std::vector<OpticalElement>& circuit) {
  json out = json::array();
  for (const auto& e : circuit) {
    if (const auto* bs = std::get_if<Beamsplitter>(&e)) {
      out.push_back({{"kind", "bs"}, {"i", bs->i}, {"j", bs->j}, {"theta", bs->theta}, {"phi", bs->phi}});
    } else {
      const auto& ps = std::get<PhaseShifter>(e);
      out.push_back({{"kind", "ps"}, {"i", ps.i}, {"phi", ps.phi}});
    }
  }
  return out;
}

NoiseModel noise_from_json(const json& j) {
  const std::string where = "noise";
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  reject_unknown_keys(j, {"p", "p0", "p2", "mode", "eta", "per_mode_p"}, where);
  NoiseModel noise;
  if (j.contains("p")) noise.p = number_at(j["p"], where + ".p");
  if (j.contains("p0") && j.contains("p2")) {
    noise.p0 = number_at(j["p0"], where + ".p0");
    noise.p2 = number_at(j["p2"], where + ".p2");
  } else if (j.contains("p2")) {
    noise.p2 = number_at(j["p2"], where + ".p2");
    noise.p0 = 1.0 - noise.p2;
  } else if (j.contains("p0")) {
    noise.p0 = number_at(j["p0"], where + ".p0");
    noise.p2 = 1.0 - noise.p0;
  }
  if (j.contains("mode")) {
    const auto& mode = j["mode"];
    if (mode == "number") noise.channel = ErrorChannel::kNumber;
    else if (mode == "distinguishability") noise.channel = ErrorChannel::kDistinguishability;
    else throw ParseError(where + ".mode: expected \"number\" or \"distinguishability\"");
  }
  if (j.contains("eta")) noise.eta = number_at(j["eta"], where + ".eta");
  if (j.contains("per_mode_p")) {
    const auto& list = j["per_mode_p"];
    if (!list.is_array()) throw ParseError(where + ".per_mode_p: expected an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      noise.per_mode_p.push_back(number_at(list[i], where + ".per_mode_p[" + std::to_string(i) + "]"));
    }
  }
  return noise;
}

json noise_to_json(const NoiseModel& noise) {
  json out = {{"p", noise.p},
              {"p0", noise.p0},
              {"p2", noise.p2},
              {"mode", noise.channel == ErrorChannel::kNumber ? "number" : "distinguishability"},
              {"eta", noise.eta}};
  if (!noise.per_mode_p.empty()) out["per_mode_p"] = noise.per_mode_p;
  return out;
}

std::string format_double(double value) {
  if (std::isnan(value)) return {};
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::string distribution_csv(const OutputDistribution& dist) {
  std::ostringstream out;
  out << "configuration,probability,amplitude_re,amplitude_im\n";
  dist.for_each([&](std::span<const int> counts, double p) {
    const ModeOccupation occ(std::vector<int>(counts.begin(), counts.end()));
    out << csv_quote(occ.to_string()) << ',' << format_double(p) << ',';
    if (auto a = dist.amplitude(occ)) out << format_double(a->real()) << ',' << format_double(a->imag());
    else out << ',';
    out << '\n';
  });
  return out.str();
}

std::string samples_csv(std::span<const SampleRecord> samples) {
  std::ostringstream out;
  out << "trial,outcome,total,branch_ideal\n";
  for (const auto& s : samples) {
    out << s.trial << ',' << csv_quote(s.outcome.to_string()) << ',' << s.outcome.total() << ','
        << (s.branch_ideal ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string scaling_csv(std::span<const ScalingRow> rows) {
  std::ostringstream out;
  out << "n,m,p,analytic_ideal_probability,empirical_ideal_fraction,tvd_ideal_noisy,"
         "tvd_ideal_postselected,postselection_success,feasible\n";
  for (const auto& r : rows) {
    out << r.photons << ',' << r.modes << ',' << format_double(r.p) << ','
        << format_double(r.analytic_ideal_probability) << ','
        << format_double(r.empirical_ideal_fraction) << ',' << format_double(r.tvd_ideal_noisy)
        << ',' << format_double(r.tvd_ideal_postselected) << ','
        << format_double(r.postselection_success) << ',' << (r.feasible ? "true" : "false")
        << '\n';
  }
  return out.str();
}

std::string filter_csv(std::span<const FilterRow> rows) {
  std::ostringstream out;
  out << "n,m,analytic_success,empirical_success,trials,feasible\n";
  for (const auto& r : rows) {
    out << r.photons << ',' << r.modes << ',' << format_double(r.analytic_success) << ','
        << format_double(r.empirical_success) << ',' << r.trials << ','
        << (r.feasible ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path.string() + "'");
  return buf.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw IoError("error writing '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot move output into place at '" + path.string() + "'");
  }
}

}  // namespace bosim::io
