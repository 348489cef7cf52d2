// Copyright 2026 The rankrange Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "io.hpp"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <sstream>

namespace rankrange::cli {
namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) throw MalformedInput(std::string("expected an object with field '") + name + "'");
  const auto it = j.find(name);
  if (it == j.end()) throw MalformedInput(std::string("missing field '") + name + "'");
  return *it;
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) throw MalformedInput(std::string(what) + " must be a number");
  return j.get<double>();
}

std::size_t count(const Json& j, const char* what) {
  if (!j.is_number_unsigned()) throw MalformedInput(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

std::vector<std::vector<double>> grid(const Json& j, const char* what) {
  if (!j.is_array()) throw MalformedInput(std::string(what) + " must be an array of rows");
  std::vector<std::vector<double>> out;
  for (const auto& row : j) {
    if (!row.is_array()) throw MalformedInput(std::string(what) + " must be an array of rows");
    std::vector<double> r;
    for (const auto& v : row) r.push_back(number(v, what));
    out.push_back(std::move(r));
  }
  return out;
}

RealVector vector_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw MalformedInput(std::string(what) + " must be an array");
  RealVector out;
  for (const auto& v : j) out.push_back(number(v, what));
  return out;
}

}  // namespace

std::string sha256_hex(const std::string& bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw MalformedInput("sha256 digest failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 15]);
  }
  return out;
}

InputFile read_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInput("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  InputFile f{path, os.str(), "", {}};
  f.digest = "sha256:" + sha256_hex(f.bytes);
  try {
    f.json = Json::parse(f.bytes);
  } catch (const Json::parse_error& e) {
    throw MalformedInput("'" + path + "' is not valid JSON: " + e.what());
  }
  return f;
}

Json to_json(const ComplexMatrix& m) {
  Json re = Json::array();
  Json im = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json rr = Json::array();
    Json ir = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      rr.push_back(m(i, j).real());
      ir.push_back(m(i, j).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ir));
  }
  return Json{{"n", m.rows()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

ComplexMatrix matrix_from_json(const Json& j) {
  const std::size_t n = count(field(j, "n"), "n");
  const auto re = grid(field(j, "re"), "re");
  const auto im = grid(field(j, "im"), "im");
  if (n == 0 || re.size() != n || im.size() != n) {
    throw MalformedInput("matrix: 're' and 'im' must have n = " + std::to_string(n) + " rows");
  }
  const std::size_t cols = re.front().size();
  ComplexMatrix m(n, cols);
  for (std::size_t i = 0; i < n; ++i) {
    if (re[i].size() != cols || im[i].size() != cols || cols == 0) {
      throw MalformedInput("matrix: rows of 're' and 'im' must share one non-zero length");
    }
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = Complex(re[i][c], im[i][c]);
  }
  return m;
}

Json to_json(const HermitianTuple& a) {
  Json ms = Json::array();
  for (const auto& m : a) ms.push_back(to_json(m.matrix()));
  return Json{{"matrices", std::move(ms)}};
}

HermitianTuple tuple_from_json(const Json& j) {
  const Json& ms = field(j, "matrices");
  if (!ms.is_array() || ms.empty()) throw MalformedInput("'matrices' must be a non-empty array");
  std::vector<HermitianMatrix> out;
  for (const auto& m : ms) out.emplace_back(matrix_from_json(m));
  return HermitianTuple(std::move(out));
}

Json to_json(const KrausChannel& ch) {
  Json ks = Json::array();
  for (const auto& t : ch.kraus()) ks.push_back(to_json(t));
  return Json{{"n", ch.n()}, {"kraus", std::move(ks)}};
}

KrausChannel channel_from_json(const Json& j) {
  const std::size_t n = count(field(j, "n"), "n");
  const Json& ks = field(j, "kraus");
  if (!ks.is_array() || ks.empty()) throw MalformedInput("'kraus' must be a non-empty array");
  std::vector<ComplexMatrix> ops;
  for (const auto& k : ks) {
    ops.push_back(matrix_from_json(k));
    if (ops.back().rows() != n || ops.back().cols() != n) {
      throw DimensionError("channel: Kraus operator is not " + std::to_string(n) + " x " +
                           std::to_string(n));
    }
  }
  return KrausChannel(std::move(ops));
}

Json to_json(const RangeCertificate& c) {
  return Json{{"point", c.point},
              {"k", c.k()},
              {"residual", c.residual},
              {"isometry", to_json(c.witness.matrix())}};
}

RangeCertificate certificate_from_json(const Json& j) {
  RangeCertificate c;
  c.point = vector_from_json(field(j, "point"), "point");
  c.residual = number(field(j, "residual"), "residual");
  c.witness = Isometry(matrix_from_json(field(j, "isometry")));
  if (count(field(j, "k"), "k") != c.witness.k()) {
    throw DimensionError("certificate: 'k' does not match the isometry's column count");
  }
  return c;
}

Json to_json(const HalfspaceSet& h) {
  Json es = Json::array();
  for (const auto& e : h.entries) es.push_back(Json{{"c", e.c}, {"bound", e.bound}});
  return Json{{"k", h.k}, {"entries", std::move(es)}};
}

HalfspaceSet halfspaces_from_json(const Json& j) {
  HalfspaceSet h;
  h.k = count(field(j, "k"), "k");
  const Json& es = field(j, "entries");
  if (!es.is_array()) throw MalformedInput("'entries' must be an array");
  for (const auto& e : es) {
    h.entries.push_back(Halfspace{vector_from_json(field(e, "c"), "c"),
                                  number(field(e, "bound"), "bound")});
  }
  return h;
}

Json to_json(const CodeCertificate& c) {
  return Json{{"k", c.k()},
              {"residual", c.residual},
              {"gamma", to_json(c.gamma)},
              {"basis", to_json(c.basis.matrix())}};
}

CodeCertificate code_from_json(const Json& j) {
  CodeCertificate c;
  c.basis = Isometry(matrix_from_json(field(j, "basis")));
  if (count(field(j, "k"), "k") != c.basis.k()) {
    throw DimensionError("code: 'k' does not match the basis column count");
  }
  if (const auto it = j.find("gamma"); it != j.end()) c.gamma = matrix_from_json(*it);
  if (const auto it = j.find("residual"); it != j.end()) c.residual = number(*it, "residual");
  return c;
}

}  // namespace rankrange::cli
