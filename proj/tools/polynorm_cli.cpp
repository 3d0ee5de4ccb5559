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

// polynorm: command-line front end.
//
//   polynorm [--format json|text] [--cap N] <command> ...
//
// Exit codes: 0 success, 1 invalid input, 2 internal invariant failure
// (theorem violation or geometry bug).

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "polynorm/analysis.hpp"
#include "polynorm/cohomology.hpp"
#include "polynorm/corpus.hpp"
#include "polynorm/errors.hpp"
#include "polynorm/normality.hpp"
#include "polynorm/parallel.hpp"
#include "polynorm/report.hpp"
#include "polynorm/syzygy.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitInternal = 2;

struct Options {
  std::string format = "json";
  std::optional<int> cap;
};

void emit(const Options& opt, const polynorm::Json& json, const std::string& text) {
  if (opt.format == "text") {
    std::cout << text;
  } else {
    std::cout << json.dump(2) << "\n";
  }
}

polynorm::Polytope load_polytope(const std::string& path) {
  return polynorm::build_polytope(polynorm::read_vertex_list_file(path));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice polytope invariants: d(P), Ehrhart polynomials, normality, toric regularity"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--cap", opt.cap, "Highest normality level to check (default max(n-1, 2))")
      ->check(CLI::Range(2, 1000));

  std::string file;
  int extra_levels = 0;
  int k_min = 0, k_max = 0;
  int ell = 1, degree_cap = 4, n1_cap = 3;
  polynorm::CorpusSpec corpus_spec;
  corpus_spec.vertex_candidates = 0;

  auto* analyze = app.add_subcommand("analyze", "All invariants of one polytope");
  analyze->add_option("file", file, "Vertex-list JSON file")->required();

  auto* verify = app.add_subcommand("verify", "Check normality of lP for l from max(n-d(P),1)");
  verify->add_option("file", file, "Vertex-list JSON file")->required();
  verify->add_option("--extra-levels", extra_levels, "Dilations checked beyond the bound")->check(CLI::NonNegativeNumber);

  auto* cohomology = app.add_subcommand("cohomology", "h^i(O(kD)) table from lattice-point counts");
  cohomology->add_option("file", file, "Vertex-list JSON file")->required();
  cohomology->add_option("--k-min", k_min, "Smallest twist")->required();
  cohomology->add_option("--k-max", k_max, "Largest twist")->required();

  auto* probe = app.add_subcommand("np-probe", "Quadratic-move fiber connectivity for the embedding by lP");
  probe->add_option("file", file, "Vertex-list JSON file")->required();
  probe->add_option("--ell", ell, "Dilation l")->check(CLI::PositiveNumber);
  probe->add_option("--cap", degree_cap, "Highest fiber degree")->check(CLI::Range(2, 64));

  auto* corpus = app.add_subcommand("corpus", "Emit a seeded random polytope corpus");
  corpus->add_option("--seed", corpus_spec.seed, "RNG seed")->required();
  corpus->add_option("--dims", corpus_spec.dims, "Dimensions")->required();
  corpus->add_option("--count", corpus_spec.count_per_dim, "Polytopes per dimension")->required();
  corpus->add_option("--coord-bound", corpus_spec.coord_bound, "Coordinate bound B");
  corpus->add_option("--candidates", corpus_spec.vertex_candidates, "Points sampled per polytope (default n+2)");
  corpus->add_flag("--reeve", corpus_spec.reeve_fixtures, "Append Reeve simplices T_2..T_5");

  auto* verify_corpus = app.add_subcommand("verify-corpus", "Batch verification over a corpus spec");
  verify_corpus->add_option("spec", file, "Corpus spec JSON file")->required();
  verify_corpus->add_option("--extra-levels", extra_levels, "Dilations checked beyond the bound")
      ->check(CLI::NonNegativeNumber);
  verify_corpus->add_option("--n1-cap", n1_cap, "Fiber degree cap for the N_1 probe (0 disables)")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    polynorm::configure_threads_from_env();

    if (*analyze) {
      const auto record = polynorm::analyze(load_polytope(file), opt.cap);
      emit(opt, polynorm::to_json(record), polynorm::render_text(record));
      return record.consistent() ? kExitOk : kExitInternal;
    }
    if (*verify) {
      const auto result = polynorm::verify_corollary(load_polytope(file), extra_levels, opt.cap);
      emit(opt, polynorm::to_json(result), polynorm::render_text(result));
      return result.violations() == 0 ? kExitOk : kExitInternal;
    }
    if (*cohomology) {
      const auto table = polynorm::h_table(load_polytope(file), k_min, k_max);
      emit(opt, polynorm::to_json(table), polynorm::render_text(table));
      return kExitOk;
    }
    if (*probe) {
      const auto report = polynorm::n1_probe(load_polytope(file), ell, degree_cap);
      emit(opt, polynorm::to_json(report), polynorm::render_text(report));
      return kExitOk;
    }
    if (*corpus) {
      if (corpus_spec.vertex_candidates == 0) {
        int max_dim = 1;
        for (int n : corpus_spec.dims) max_dim = std::max(max_dim, n);
        corpus_spec.vertex_candidates = max_dim + 2;
      }
      const auto polytopes = polynorm::generate_corpus(corpus_spec);
      polynorm::Json json = polynorm::Json::array();
      std::string text;
      for (const auto& p : polytopes) {
        json.push_back({{"id", p.id()}, {"vertices", polynorm::to_json(p.vertices())}});
        text += p.id() + "  " + polynorm::to_json(p.vertices()).dump() + "\n";
      }
      emit(opt, json, text);
      return kExitOk;
    }
    if (*verify_corpus) {
      const auto spec = polynorm::read_corpus_spec_file(file);
      const auto report = polynorm::run_verification(spec, extra_levels, n1_cap, opt.cap);
      emit(opt, polynorm::to_json(report), polynorm::render_text(report));
      return report.summary.violations == 0 ? kExitOk : kExitInternal;
    }
  } catch (const polynorm::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const polynorm::GenerationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const polynorm::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}
