// Copyright 2026 The Polynorm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "polynorm/report.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "polynorm/errors.hpp"

namespace polynorm {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

Coord as_coord(const Json& v) {
  if (!v.is_number_integer()) throw InvalidInput("expected an integer, got " + v.dump());
  return v.get<Coord>();
}

std::string join_points(const std::vector<LatticePoint>& pts) {
  std::string s;
  for (const auto& p : pts) s += (s.empty() ? "" : " ") + p.to_string();
  return s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::vector<LatticePoint> parse_vertex_list(const std::string& text) {
  const Json doc = parse_json(text);
  if (!doc.is_array() || doc.empty()) throw InvalidInput("vertex list must be a non-empty JSON array of arrays");
  std::vector<LatticePoint> pts;
  for (const auto& row : doc) {
    if (!row.is_array() || row.empty()) throw InvalidInput("each vertex must be a non-empty array of integers");
    std::vector<Coord> coords;
    for (const auto& c : row) coords.push_back(as_coord(c));
    if (!pts.empty() && coords.size() != pts.front().dim())
      throw InvalidInput("vertices have differing coordinate lengths");
    pts.emplace_back(std::move(coords));
  }
  return pts;
}

std::vector<LatticePoint> read_vertex_list_file(const std::string& path) { return parse_vertex_list(read_file(path)); }

CorpusSpec parse_corpus_spec(const std::string& text) {
  const Json doc = parse_json(text);
  if (!doc.is_object()) throw InvalidInput("corpus spec must be a JSON object");
  CorpusSpec s;
  try {
    s.seed = doc.at("seed").get<std::uint64_t>();
    s.dims = doc.at("dims").get<std::vector<int>>();
    s.coord_bound = doc.value("coord_bound", s.coord_bound);
    s.count_per_dim = doc.at("count_per_dim").get<int>();
    s.vertex_candidates = doc.at("vertex_candidates").get<int>();
    s.reeve_fixtures = doc.value("reeve_fixtures", false);
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("bad corpus spec: ") + e.what());
  }
  validate(s);
  return s;
}

CorpusSpec read_corpus_spec_file(const std::string& path) { return parse_corpus_spec(read_file(path)); }

Json to_json(const LatticePoint& p) { return Json(p.vec()); }

Json to_json(const std::vector<LatticePoint>& pts) {
  Json arr = Json::array();
  for (const auto& p : pts) arr.push_back(to_json(p));
  return arr;
}

std::string verdict_name(NormalityVerdict v) {
  return v == NormalityVerdict::NormalUpToCap ? "normal-up-to-cap" : "non-normal";
}

Json to_json(const NormalityReport& r) {
  Json j;
  j["polytope_id"] = r.polytope_id;
  j["levels"] = r.levels_checked;
  j["verdict"] = verdict_name(r.verdict);
  j["cap"] = r.cap_used;
  if (r.witness) {
    j["witness"] = {{"level", r.witness->level}, {"point", to_json(r.witness->point)}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json to_json(const BoundReport& b) {
  Json np = Json::array();
  for (int p = 0; p <= 3; ++p) np.push_back(b.np_bound(p));
  return {{"n", b.n},
          {"d", b.d},
          {"corollary_bound", b.corollary_bound},
          {"classical_n0_bound", b.classical_n0_bound},
          {"np_bounds", np}};
}

Json to_json(const CorollaryVerification& v) {
  Json levels = Json::array();
  for (const auto& l : v.levels) {
    levels.push_back({{"ell", l.ell}, {"normality", to_json(l.report)}, {"violation", l.violation}});
  }
  return {{"polytope_id", v.polytope_id}, {"bounds", to_json(v.bounds)}, {"levels", levels},
          {"violations", v.violations()}};
}

Json to_json(const CohomologyTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows) rows.push_back({{"k", r.twist}, {"h", r.h}});
  return {{"polytope", t.polytope_id}, {"rows", rows}};
}

Json to_json(const ProbeReport& r) {
  Json j{{"ell", r.ell}, {"cap", r.cap}, {"verdict", r.verdict()}, {"fibers_checked", r.fibers_checked}};
  j["witness_fiber"] = r.witness_fiber ? to_json(*r.witness_fiber) : Json(nullptr);
  return j;
}

Json to_json(const AnalysisRecord& r) {
  Json coeffs = Json::array();
  for (const auto& c : r.ehrhart) coeffs.push_back(c.get_str());
  return {{"polytope_id", r.polytope_id},
          {"vertices", to_json(r.vertices)},
          {"n", r.n},
          {"ehrhart", coeffs},
          {"d", r.d},
          {"codegree", r.codegree},
          {"corollary_bound", r.corollary_bound},
          {"autoregularity", r.autoregularity},
          {"autoregularity_definition", r.autoregularity_definition},
          {"normality", to_json(r.normality)},
          {"checks", r.checks}};
}

Json to_json(const VerificationRecord& r) {
  Json j{{"analysis", to_json(r.analysis)},
         {"corollary", to_json(r.corollary)},
         {"reciprocity", r.reciprocity},
         {"extrapolation", r.extrapolation},
         {"autoregularity_match", r.autoregularity_match},
         {"minimality", r.minimality},
         {"violations", r.violations}};
  j["n1_probe"] = r.n1 ? to_json(*r.n1) : Json(nullptr);
  return j;
}

Json to_json(const CorpusSpec& s) {
  return {{"seed", s.seed},
          {"dims", s.dims},
          {"coord_bound", s.coord_bound},
          {"count_per_dim", s.count_per_dim},
          {"vertex_candidates", s.vertex_candidates},
          {"reeve_fixtures", s.reeve_fixtures}};
}

Json to_json(const BatchReport& r) {
  const auto& s = r.summary;
  Json records = Json::array();
  Json violations = Json::array();
  for (const auto& rec : r.records) {
    records.push_back(to_json(rec));
    if (!rec.violations.empty()) violations.push_back(to_json(rec));
  }
  return {{"spec", to_json(r.spec)},
          {"extra_levels", r.extra_levels},
          {"n1_cap", r.n1_cap},
          {"summary",
           {{"polytopes", s.polytopes},
            {"corollary_passes", s.corollary_passes},
            {"reciprocity_passes", s.reciprocity_passes},
            {"extrapolation_passes", s.extrapolation_passes},
            {"autoregularity_passes", s.autoregularity_passes},
            {"consistency_passes", s.consistency_passes},
            {"n1_probed", s.n1_probed},
            {"n1_connected", s.n1_connected},
            {"violations", s.violations}}},
          {"records", records},
          {"violations", violations}};
}

std::string render_text(const AnalysisRecord& r) {
  std::ostringstream out;
  const std::string poly = EhrhartPolynomial(r.ehrhart).to_string();
  auto row = [&](const std::string& k, const std::string& v) { out << std::left << std::setw(33) << k << v << "\n"; };
  row("polytope", r.polytope_id);
  row("vertices", join_points(r.vertices));
  row("dimension n", std::to_string(r.n));
  row("Ehrhart polynomial", poly);
  row("d(P)", std::to_string(r.d));
  row("codegree", std::to_string(r.codegree));
  row("corollary bound", std::to_string(r.corollary_bound));
  row("autoregularity", std::to_string(r.autoregularity));
  row("autoregularity (definition)", std::to_string(r.autoregularity_definition));
  std::string verdict = verdict_name(r.normality.verdict) + " (cap " + std::to_string(r.normality.cap_used) + ")";
  if (r.normality.witness)
    verdict += ", witness " + r.normality.witness->point.to_string() + " at level " +
               std::to_string(r.normality.witness->level);
  row("normality", verdict);
  for (const auto& [name, ok] : r.checks) row("check " + name, yes_no(ok));
  return out.str();
}

std::string render_text(const CorollaryVerification& v) {
  std::ostringstream out;
  out << "polytope " << v.polytope_id << "  n=" << v.bounds.n << "  d=" << v.bounds.d
      << "  corollary bound=" << v.bounds.corollary_bound << "\n";
  out << std::right << std::setw(6) << "ell" << std::setw(20) << "verdict" << std::setw(8) << "cap"
      << "  witness\n";
  for (const auto& l : v.levels) {
    out << std::setw(6) << l.ell << std::setw(20) << verdict_name(l.report.verdict) << std::setw(8)
        << l.report.cap_used << "  ";
    if (l.report.witness)
      out << l.report.witness->point.to_string() << " @" << l.report.witness->level;
    else
      out << "-";
    if (l.violation) out << "  THEOREM VIOLATION";
    out << "\n";
  }
  return out.str();
}

std::string render_text(const CohomologyTable& t) {
  std::ostringstream out;
  out << "polytope " << t.polytope_id << "\n" << std::right << std::setw(6) << "k";
  for (std::size_t i = 0; i <= t.dim; ++i) out << std::setw(12) << ("h^" + std::to_string(i));
  out << "\n";
  for (const auto& r : t.rows) {
    out << std::setw(6) << r.twist;
    for (auto h : r.h) out << std::setw(12) << h;
    out << "\n";
  }
  return out.str();
}

std::string render_text(const ProbeReport& r) {
  std::ostringstream out;
  out << "ell=" << r.ell << " cap=" << r.cap << " verdict=" << r.verdict();
  if (r.witness_fiber) out << " witness_fiber=" << r.witness_fiber->to_string();
  out << "\n";
  for (std::size_t i = 0; i < r.fibers_checked.size(); ++i)
    out << "  degree " << (i + 2) << ": " << r.fibers_checked[i] << " fibers\n";
  return out.str();
}

std::string render_text(const BatchReport& r) {
  std::ostringstream out;
  out << std::left << std::setw(18) << "polytope" << std::right << std::setw(3) << "n" << std::setw(4) << "d"
      << std::setw(7) << "bound" << std::setw(6) << "areg" << std::setw(20) << "normality" << std::setw(10)
      << "corollary" << std::setw(7) << "recip" << std::setw(8) << "N1" << "\n";
  for (const auto& rec : r.records) {
    const auto& a = rec.analysis;
    out << std::left << std::setw(18) << a.polytope_id << std::right << std::setw(3) << a.n << std::setw(4) << a.d
        << std::setw(7) << a.corollary_bound << std::setw(6) << a.autoregularity << std::setw(20)
        << verdict_name(a.normality.verdict) << std::setw(10)
        << (rec.corollary.violations() == 0 ? "pass" : "FAIL") << std::setw(7) << (rec.reciprocity ? "pass" : "FAIL")
        << std::setw(8) << (rec.n1 ? (rec.n1->connected ? "conn" : "DISC") : "-") << "\n";
    for (const auto& v : rec.violations) out << "  VIOLATION: " << v << "\n";
  }
  const auto& s = r.summary;
  out << "\npolytopes " << s.polytopes << ", corollary passes " << s.corollary_passes << ", reciprocity passes "
      << s.reciprocity_passes << ", extrapolation passes " << s.extrapolation_passes << ", autoregularity passes "
      << s.autoregularity_passes << ", N1 connected " << s.n1_connected << "/" << s.n1_probed << ", violations "
      << s.violations << "\n";
  return out.str();
}

}  // namespace polynorm
