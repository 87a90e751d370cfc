// Copyright 2026 The robustkit authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "robustkit/state_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace robustkit {

namespace {

using nlohmann::json;

std::string read_file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw validation_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

cplx parse_complex(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw validation_error(where + ": complex entries must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

json complex_to_json(const cplx& z) {
  return json::array({z.real(), z.imag()});
}

void append_double(std::string& out, double v) {
  if (v == 0.0) v = 0.0 * std::abs(v);  // drop the sign of negative zero
  char buf[40];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  out.append(buf, res.ptr);
}

void dump_value(const json& j, std::string& out) {
  switch (j.type()) {
    case json::value_t::object: {
      out.push_back('{');
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out.push_back(',');
        first = false;
        out += json(it.key()).dump();
        out.push_back(':');
        dump_value(it.value(), out);
      }
      out.push_back('}');
      break;
    }
    case json::value_t::array: {
      out.push_back('[');
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out.push_back(',');
        dump_value(j[i], out);
      }
      out.push_back(']');
      break;
    }
    case json::value_t::number_float:
      append_double(out, j.get<double>());
      break;
    default:
      out += j.dump();
      break;
  }
}

}  // namespace

std::string dump_json(const json& j) {
  std::string out;
  dump_value(j, out);
  out.push_back('\n');
  return out;
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return std::string(buf);
}

LoadedState read_state_file(const std::string& path, const Tolerances& tol) {
  const std::string bytes = read_file_bytes(path);
  json j;
  try {
    j = json::parse(bytes);
  } catch (const json::exception& e) {
    throw validation_error(path + ": JSON parse error: " + e.what());
  }

  if (!j.is_object() || !j.contains("kind") || !j.contains("n") ||
      !j.contains("data"))
    throw validation_error(path + ": state file needs kind, n, data");
  LoadedState state;
  state.digest = fnv1a_hex(bytes);
  state.kind = j["kind"].get<std::string>();
  if (!j["n"].is_number_integer())
    throw validation_error(path + ": n must be an integer");
  state.n = j["n"].get<int>();
  if (state.n < 1 || state.n > kMaxLocalDim)
    throw validation_error(path + ": n out of range [1, 8]");
  const int dim = state.n * state.n;
  const json& data = j["data"];

  if (state.kind == "ket") {
    if (!data.is_array() || static_cast<int>(data.size()) != dim)
      throw validation_error(path + ": ket data must have n^2 entries");
    std::vector<cplx> amps(dim);
    for (int i = 0; i < dim; ++i)
      amps[i] = parse_complex(data[i], path);
    state.ket.emplace(state.n, std::move(amps), tol.ket_norm);
  } else if (state.kind == "density") {
    if (!data.is_array() || static_cast<int>(data.size()) != dim)
      throw validation_error(path + ": density data must be n^2 x n^2");
    ComplexMatrix m(dim, dim);
    for (int r = 0; r < dim; ++r) {
      if (!data[r].is_array() || static_cast<int>(data[r].size()) != dim)
        throw validation_error(path + ": density data must be n^2 x n^2");
      for (int c = 0; c < dim; ++c) m(r, c) = parse_complex(data[r][c], path);
    }
    state.density.emplace(validate_density(m, state.n, tol));
  } else {
    throw validation_error(path + ": kind must be \"ket\" or \"density\"");
  }
  return state;
}

DensityMatrix as_density(const LoadedState& state) {
  if (state.density) return *state.density;
  return DensityMatrix::from_ket(*state.ket);
}

json complex_vector_to_json(const std::vector<cplx>& v) {
  json arr = json::array();
  for (const cplx& z : v) arr.push_back(complex_to_json(z));
  return arr;
}

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

json ket_to_json(const Ket& psi) {
  return json{{"kind", "ket"},
              {"n", psi.local_dim()},
              {"data", complex_vector_to_json(psi.amplitudes())}};
}

json density_to_json(const DensityMatrix& rho) {
  return json{{"kind", "density"},
              {"n", rho.local_dim()},
              {"data", matrix_to_json(rho.mat())}};
}

void write_state_file(const std::string& path, const json& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw validation_error("cannot write file: " + path);
  out << dump_json(body);
  if (!out) throw validation_error("write failed: " + path);
}

Tolerances load_tolerances(const std::optional<std::string>& tol_file) {
  std::optional<std::string> source = tol_file;
  if (!source) {
    if (const char* env = std::getenv("ROBUSTKIT_TOL")) source = env;
  }
  Tolerances tol;
  if (!source) return tol;

  json j;
  try {
    j = json::parse(read_file_bytes(*source));
  } catch (const json::exception& e) {
    throw validation_error(*source + ": JSON parse error: " + e.what());
  }
  if (!j.is_object())
    throw validation_error(*source + ": tolerance file must be an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    if (!it.value().is_number())
      throw validation_error(*source + ": tolerance " + key +
                             " must be a number");
    const double v = it.value().get<double>();
    if (key == "hermitian")
      tol.hermitian = v;
    else if (key == "psd")
      tol.psd = v;
    else if (key == "trace")
      tol.trace = v;
    else if (key == "ket_norm")
      tol.ket_norm = v;
    else if (key == "ppt")
      tol.ppt = v;
    else if (key == "pair_skip")
      tol.pair_skip = v;
    else if (key == "schmidt_clamp")
      tol.schmidt_clamp = v;
    else if (key == "cross_check_fail")
      tol.cross_check_fail = v;
    else if (key == "mixer_bound_match")
      tol.mixer_bound_match = v;
    else if (key == "convexity_slack")
      tol.convexity_slack = v;
    else
      throw validation_error(*source + ": unknown tolerance " + key);
  }
  return tol;
}

json tolerances_to_json(const Tolerances& tol) {
  return json{{"hermitian", tol.hermitian},
              {"psd", tol.psd},
              {"trace", tol.trace},
              {"ket_norm", tol.ket_norm},
              {"ppt", tol.ppt},
              {"pair_skip", tol.pair_skip},
              {"schmidt_clamp", tol.schmidt_clamp},
              {"cross_check_fail", tol.cross_check_fail},
              {"mixer_bound_match", tol.mixer_bound_match},
              {"convexity_slack", tol.convexity_slack}};
}

}  // namespace robustkit
