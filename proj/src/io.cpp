// Copyright 2026 The latfree Authors
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

#include "latfree/io.hpp"

#include <cstdint>
#include <cstdio>

namespace latfree {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::kParse, what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) malformed(std::string("missing field '") + name + "'");
  return j.at(name);
}

void expect_array(const Json& j, std::size_t n, const char* what) {
  if (!j.is_array() || j.size() != n) {
    malformed(std::string(what) + " must be an array of " + std::to_string(n));
  }
}

Mat2 mat2_from_json(const Json& j, const char* what) {
  expect_array(j, 2, what);
  Mat2 m;
  for (int r = 0; r < 2; ++r) {
    expect_array(j[r], 2, what);
    for (int c = 0; c < 2; ++c) m[r][c] = rational_from_json(j[r][c]);
  }
  return m;
}

RationalPoint vec2_from_json(const Json& j, const char* what) {
  expect_array(j, 2, what);
  return {rational_from_json(j[0]), rational_from_json(j[1])};
}

Json mat_to_json(const RationalMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(rational_to_json(v));
    out.push_back(r);
  }
  return out;
}

RationalMatrix matrix_from_json(const Json& j, const char* what) {
  if (!j.is_array()) malformed(std::string(what) + " must be an array");
  RationalMatrix m;
  for (const auto& row : j) {
    if (!row.is_array()) malformed(std::string(what) + " rows must be arrays");
    RationalVector r;
    for (const auto& v : row) r.push_back(rational_from_json(v));
    m.push_back(std::move(r));
  }
  return m;
}

Json vec_to_json(const RationalPoint& p) { return {rational_to_json(p.x), rational_to_json(p.y)}; }

Json mat2_to_json(const Mat2& m) {
  return {{rational_to_json(m[0][0]), rational_to_json(m[0][1])},
          {rational_to_json(m[1][0]), rational_to_json(m[1][1])}};
}

Json hline_to_json(const std::optional<HLineResult>& h) {
  if (!h) return nullptr;
  Json out;
  out["side"] = h->side;
  out["lo"] = h->lo ? rational_to_json(*h->lo) : Json(nullptr);
  out["hi"] = h->hi ? rational_to_json(*h->hi) : Json(nullptr);
  out["class"] = std::string(hline_class_name(h->cls));
  out["k"] = h->empty() ? Json(nullptr) : integer_to_json(h->k);
  return out;
}

Json halfspaces_to_json(const UnimodularSet& set, const Problem& problem) {
  Json out = Json::array();
  for (const auto& w : set.members()) {
    out.push_back({{"w", point_to_json(w)},
                   {"grad", vec_to_json(problem.model().exact_gradient(w))}});
  }
  return out;
}

Rational f_min(const Problem& problem, const UnimodularSet& set) {
  Rational best = problem.objective(set.member(0));
  for (int i = 1; i < 4; ++i) best = std::min(best, problem.objective(set.member(i)));
  return best;
}

std::vector<HalfspaceDoc> halfspaces_from_json(const Json& j) {
  if (!j.is_array()) malformed("halfspaces must be an array");
  std::vector<HalfspaceDoc> out;
  for (const auto& h : j) {
    out.push_back({point_from_json(field(h, "w")), vec2_from_json(field(h, "grad"), "grad")});
  }
  return out;
}

int int_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer()) malformed(std::string(what) + " must be an integer");
  return j.get<int>();
}

}  // namespace

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Rational(BigInt(std::to_string(j.get<std::uint64_t>())))
                                  : Rational(static_cast<long>(j.get<std::int64_t>()));
  }
  // Shortest round-trip text, so 0.4 reads as 2/5.
  if (j.is_number_float()) return Rational::parse(j.dump());
  malformed("expected a rational, got " + j.dump());
}

Json rational_to_json(const Rational& r) { return r.to_string(); }

BigInt integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? BigInt(std::to_string(j.get<std::uint64_t>()))
                                  : BigInt(static_cast<long>(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    const Rational r = Rational::parse(j.get<std::string>());
    if (!r.is_integer()) malformed("expected an integer, got " + j.dump());
    return r.numerator();
  }
  malformed("expected an integer, got " + j.dump());
}

Json integer_to_json(const BigInt& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return to_string(v);
}

LatticePoint point_from_json(const Json& j) {
  expect_array(j, 2, "point");
  return {integer_from_json(j[0]), integer_from_json(j[1])};
}

Json point_to_json(const LatticePoint& p) { return {integer_to_json(p.x), integer_to_json(p.y)}; }

UnimodularSet set_from_json(const Json& j) {
  const Json& u = field(j, "U");
  expect_array(u, 2, "U");
  return UnimodularSet(point_from_json(field(j, "z")),
                       UniMatrix(point_from_json(u[0]), point_from_json(u[1])));
}

Json set_to_json(const UnimodularSet& s) {
  return {{"z", point_to_json(s.anchor())},
          {"U", {point_to_json(s.u1()), point_to_json(s.u2())}}};
}

SignPolicy policy_from_json(const Json& j) {
  const std::string mode = field(j, "mode").get<std::string>();
  if (mode == "exact") return SignPolicy::exact();
  if (mode != "tolerance") malformed("policy mode must be exact or tolerance");
  if (!j.contains("tau")) return SignPolicy::tolerance();
  return SignPolicy::tolerance(rational_from_json(j.at("tau")).to_double());
}

const QuadraticModel& Problem::model() const {
  if (quadratic) return *quadratic;
  return reduction->reduced;
}

Rational Problem::offset() const { return reduction ? reduction->constant_offset : Rational(0); }

std::string problem_hash(const Json& objective) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : objective.dump()) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Problem parse_problem(const Json& doc) {
  try {
    const Json& obj = field(doc, "objective");
    const std::string type = field(obj, "type").get<std::string>();
    Problem p;
    Json canonical;
    canonical["type"] = type;
    if (type == "quadratic") {
      const Mat2 q = mat2_from_json(field(obj, "Q"), "Q");
      const RationalPoint c = vec2_from_json(field(obj, "c"), "c");
      canonical["Q"] = mat2_to_json(q);
      canonical["c"] = vec_to_json(c);
      p.quadratic.emplace(q, c);
    } else if (type == "mixed_quadratic") {
      RationalMatrix a = matrix_from_json(field(obj, "A"), "A");
      RationalMatrix b = matrix_from_json(field(obj, "B"), "B");
      const Mat2 c = mat2_from_json(field(obj, "C"), "C");
      const Json& av = field(obj, "a");
      if (!av.is_array()) malformed("a must be an array");
      RationalVector a_vec;
      for (const auto& v : av) a_vec.push_back(rational_from_json(v));
      const RationalPoint c_vec = vec2_from_json(field(obj, "c"), "c");
      canonical["A"] = mat_to_json(a);
      canonical["B"] = mat_to_json(b);
      canonical["C"] = mat2_to_json(c);
      canonical["a"] = mat_to_json({a_vec}).at(0);
      canonical["c"] = vec_to_json(c_vec);
      p.mixed.emplace(std::move(a), std::move(b), c, std::move(a_vec), c_vec);
      p.reduction.emplace(reduce_mixed(*p.mixed));
    } else {
      malformed("unknown objective type '" + type + "'");
    }
    p.hash = problem_hash(canonical);
    p.initial = doc.contains("initial") ? set_from_json(doc.at("initial"))
                                        : UnimodularSet();
    if (doc.contains("policy")) p.policy = policy_from_json(doc.at("policy"));
    return p;
  } catch (const Json::exception& e) {
    malformed(e.what());
  }
}

Json trace_to_json(const FlipTrace& t, const Problem& problem) {
  Json out;
  out["iteration"] = t.iteration;
  out["pattern"] = std::string(pattern_name(t.pattern));
  out["case"] = std::string(case_name(t.case_id));
  out["side"] = t.side;
  out["k"] = t.k ? integer_to_json(*t.k) : Json(nullptr);
  out["before"] = set_to_json(t.before);
  out["after"] = set_to_json(t.after);
  out["f_before"] = rational_to_json(f_min(problem, t.before));
  out["f_after"] = rational_to_json(f_min(problem, t.after));
  out["inner_products"] = t.inner_products;
  out["halfspaces"] = halfspaces_to_json(t.before, problem);
  out["h_plus"] = hline_to_json(t.h_plus);
  out["h_minus"] = hline_to_json(t.h_minus);
  return out;
}

Json certificate_to_json(const Certificate& cert, const Problem& problem) {
  Json out;
  out["status"] = std::string(status_name(cert.status));
  out["problem_hash"] = problem.hash;
  out["final_set"] = set_to_json(cert.final_set);
  Json argmin;
  argmin["point"] = point_to_json(cert.argmin);
  argmin["f"] = rational_to_json(problem.objective(cert.argmin));
  if (problem.reduction) {
    Json x = Json::array();
    for (const auto& v : problem.reduction->recover_x(to_rational(cert.argmin))) {
      x.push_back(rational_to_json(v));
    }
    argmin["x"] = x;
  }
  out["argmin"] = argmin;
  out["pattern"] = std::string(pattern_name(cert.pattern));
  out["halfspaces"] = halfspaces_to_json(cert.final_set, problem);
  out["h_plus"] = hline_to_json(cert.h_plus);
  out["h_minus"] = hline_to_json(cert.h_minus);
  out["iterations"] = cert.iterations;
  out["inner_products"] = cert.terminal_inner_products;
  Json trace = Json::array();
  for (const auto& t : cert.trace) trace.push_back(trace_to_json(t, problem));
  out["trace"] = trace;
  return out;
}

Json budget_to_json(const BudgetExhausted& e, const Problem& problem) {
  Json out;
  out["status"] = "BudgetExhausted";
  out["problem_hash"] = problem.hash;
  out["iterations"] = e.trace().size();
  Json trace = Json::array();
  for (const auto& t : e.trace()) trace.push_back(trace_to_json(t, problem));
  out["trace"] = trace;
  return out;
}

std::vector<UnimodularSet> CertificateDoc::sets() const {
  std::vector<UnimodularSet> out;
  if (trace.empty()) {
    out.push_back(final_set);
    return out;
  }
  out.push_back(trace.front().before);
  for (const auto& t : trace) out.push_back(t.after);
  return out;
}

CertificateDoc parse_certificate(const Json& doc) {
  try {
    CertificateDoc c;
    c.status = field(doc, "status").get<std::string>();
    c.problem_hash = field(doc, "problem_hash").get<std::string>();
    c.final_set = set_from_json(field(doc, "final_set"));
    const Json& argmin = field(doc, "argmin");
    c.argmin = point_from_json(field(argmin, "point"));
    c.argmin_f = rational_from_json(field(argmin, "f"));
    c.halfspaces = halfspaces_from_json(field(doc, "halfspaces"));
    c.iterations = int_from_json(field(doc, "iterations"), "iterations");
    const Json& trace = field(doc, "trace");
    if (!trace.is_array()) malformed("trace must be an array");
    for (const auto& e : trace) {
      TraceDoc t;
      t.iteration = int_from_json(field(e, "iteration"), "iteration");
      t.pattern = field(e, "pattern").get<std::string>();
      t.case_id = field(e, "case").get<std::string>();
      t.side = int_from_json(field(e, "side"), "side");
      if (e.contains("k") && !e.at("k").is_null()) t.k = integer_from_json(e.at("k"));
      t.before = set_from_json(field(e, "before"));
      t.after = set_from_json(field(e, "after"));
      t.f_before = rational_from_json(field(e, "f_before"));
      t.f_after = rational_from_json(field(e, "f_after"));
      t.inner_products = int_from_json(field(e, "inner_products"), "inner_products");
      t.halfspaces = halfspaces_from_json(field(e, "halfspaces"));
      c.trace.push_back(std::move(t));
    }
    return c;
  } catch (const Json::exception& e) {
    malformed(e.what());
  }
}

}  // namespace latfree
