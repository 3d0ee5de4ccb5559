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

#ifndef POLYNORM_REPORT_HPP_
#define POLYNORM_REPORT_HPP_

#include <string>
#include <vector>

#include "json.hpp"
#include "polynorm/analysis.hpp"
#include "polynorm/cohomology.hpp"
#include "polynorm/corpus.hpp"
#include "polynorm/normality.hpp"
#include "polynorm/syzygy.hpp"

namespace polynorm {

using Json = nlohmann::json;

// Vertex-list documents: one JSON array of equal-length integer arrays.
std::vector<LatticePoint> parse_vertex_list(const std::string& text);
std::vector<LatticePoint> read_vertex_list_file(const std::string& path);

CorpusSpec parse_corpus_spec(const std::string& text);
CorpusSpec read_corpus_spec_file(const std::string& path);

Json to_json(const LatticePoint& p);
Json to_json(const std::vector<LatticePoint>& pts);
Json to_json(const NormalityReport& r);
Json to_json(const BoundReport& b);
Json to_json(const CorollaryVerification& v);
Json to_json(const CohomologyTable& t);
Json to_json(const ProbeReport& r);
Json to_json(const AnalysisRecord& r);
Json to_json(const VerificationRecord& r);
Json to_json(const CorpusSpec& s);
Json to_json(const BatchReport& r);

std::string verdict_name(NormalityVerdict v);

// Plain-text renderings with aligned columns.
std::string render_text(const AnalysisRecord& r);
std::string render_text(const CorollaryVerification& v);
std::string render_text(const CohomologyTable& t);
std::string render_text(const ProbeReport& r);
std::string render_text(const BatchReport& r);

}  // namespace polynorm

#endif  // POLYNORM_REPORT_HPP_
