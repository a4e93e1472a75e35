// Copyright 2026 The hadsw Authors
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

// hadsw command line tool. Matrix arguments are fixture names (see `corpus`
// in the library) or file paths; graph arguments are fixture names (taken as
// their Hadamard graphs) or files in the graph format. Exit codes: 0 verdict
// true/pass, 1 verdict false/fail, 2 usage or input error, 3 inconclusive
// within budget.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "acceptance/acceptance.h"
#include "hadsw/canonical.h"
#include "hadsw/char_poly.h"
#include "hadsw/corpus.h"
#include "hadsw/equivalence.h"
#include "hadsw/gm_switch.h"
#include "hadsw/graph_io.h"
#include "hadsw/had_graph.h"
#include "hadsw/had_switch.h"
#include "hadsw/matrix_io.h"
#include "hadsw/sign_matrix.h"

namespace {

using hadsw::MatrixFormat;
using hadsw::SignMatrix;
using nlohmann::json;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

struct GlobalOpts {
  std::string format = "plusminus";
  std::uint64_t budget = hadsw::kDefaultCanonicalBudget;
  bool budgetSet = false;
  bool json = false;

  MatrixFormat matrix_format() const {
    return format == "paperstyle" ? MatrixFormat::kPaperStyle
                                  : MatrixFormat::kPlusMinus;
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SignMatrix load_matrix(const std::string& arg, const GlobalOpts& g) {
  if (hadsw::corpus_has(arg)) return hadsw::corpus_matrix(arg);
  return hadsw::parse_matrix(slurp(arg), g.matrix_format());
}

hadsw::LoopGraph load_graph(const std::string& arg) {
  if (hadsw::corpus_has(arg)) {
    return hadsw::hadamard_graph(hadsw::corpus_matrix(arg));
  }
  return hadsw::parse_graph(slurp(arg));
}

void emit_json(const json& j) { std::cout << j.dump(2) << "\n"; }

json matrix_json(const SignMatrix& m) {
  json rows = json::array();
  for (const std::string& r : m.to_strings()) rows.push_back(r);
  return rows;
}

int cmd_verify(const GlobalOpts& g, const std::string& file) {
  const SignMatrix m = load_matrix(file, g);
  const bool ok = hadsw::is_hadamard(m);
  if (g.json) {
    emit_json({{"schema", 1},
               {"command", "verify"},
               {"input", file},
               {"rows", m.rows()},
               {"cols", m.cols()},
               {"hadamard", ok}});
  } else {
    std::cout << file << ": " << m.rows() << "x" << m.cols()
              << (ok ? ", Hadamard" : ", not Hadamard") << "\n";
  }
  return ok ? kExitTrue : kExitFalse;
}

int cmd_find(const GlobalOpts& g, const std::string& kind,
             const std::string& file) {
  const SignMatrix m = load_matrix(file, g);
  json list = json::array();
  std::size_t count = 0;
  if (kind == "quadruples") {
    const auto found = hadsw::find_closed_quadruples(m);
    count = found.size();
    for (std::size_t i = 0; i < found.size(); ++i) {
      const auto& q = found[i];
      if (g.json) {
        list.push_back({{"index", i},
                        {"rows", q.rowIdxs},
                        {"productSign", q.productSign}});
      } else {
        std::cout << i << ": rows {" << q.rowIdxs[0] << "," << q.rowIdxs[1]
                  << "," << q.rowIdxs[2] << "," << q.rowIdxs[3] << "} sign "
                  << (q.productSign > 0 ? "+" : "-") << "\n";
      }
    }
  } else {
    const auto found = hadsw::find_hall_sets(m);
    count = found.size();
    for (std::size_t i = 0; i < found.size(); ++i) {
      const auto& h = found[i];
      if (g.json) {
        list.push_back({{"index", i},
                        {"rows", h.rowIdxs},
                        {"hallCols", h.hallCols},
                        {"minoritySign", h.minoritySign}});
      } else {
        std::cout << i << ": rows {" << h.rowIdxs[0] << "," << h.rowIdxs[1]
                  << "," << h.rowIdxs[2] << "," << h.rowIdxs[3] << "} cols {"
                  << h.hallCols[0] << "," << h.hallCols[1] << ","
                  << h.hallCols[2] << "," << h.hallCols[3] << "}\n";
      }
    }
  }
  if (g.json) {
    emit_json({{"schema", 1},
               {"command", "find"},
               {"kind", kind},
               {"input", file},
               {"count", count},
               {"structures", list}});
  } else {
    std::cout << count << " " << kind << "\n";
  }
  return count > 0 ? kExitTrue : kExitFalse;
}

// Looks up structure K of the requested kind and applies the field-I switch.
SignMatrix switched_matrix(const SignMatrix& m, const std::string& kind,
                           int index, int field) {
  if (kind == "quadruple") {
    const auto found = hadsw::find_closed_quadruples(m);
    if (index < 0 || static_cast<std::size_t>(index) >= found.size()) {
      throw std::runtime_error("quadruple index " + std::to_string(index) +
                               " out of range (found " +
                               std::to_string(found.size()) + ")");
    }
    return hadsw::switch_closed_quadruple(m, found[index], field);
  }
  const auto found = hadsw::find_hall_sets(m);
  if (index < 0 || static_cast<std::size_t>(index) >= found.size()) {
    throw std::runtime_error("hallset index " + std::to_string(index) +
                             " out of range (found " +
                             std::to_string(found.size()) + ")");
  }
  return hadsw::switch_hall_set(m, found[index], field);
}

int cmd_switch(const GlobalOpts& g, const std::string& kind,
               const std::string& file, int index, int field) {
  const SignMatrix m = load_matrix(file, g);
  const SignMatrix sw = switched_matrix(m, kind, index, field);
  if (g.json) {
    emit_json({{"schema", 1},
               {"command", "switch"},
               {"kind", kind},
               {"input", file},
               {"index", index},
               {"field", field},
               {"matrix", matrix_json(sw)}});
  } else {
    std::cout << hadsw::emit_matrix(sw, g.matrix_format());
  }
  return kExitTrue;
}

int cmd_graph(const GlobalOpts& g, const std::string& file) {
  const SignMatrix m = load_matrix(file, g);
  const hadsw::LoopGraph graph = hadsw::hadamard_graph(m);
  if (g.json) {
    json verts = json::array();
    for (int v = 0; v < graph.vertex_count(); ++v) {
      verts.push_back({{"vertex", v},
                       {"loop", graph.has_loop(v)},
                       {"neighbors", graph.neighbors(v)}});
    }
    emit_json({{"schema", 1},
               {"command", "graph"},
               {"input", file},
               {"vertices", graph.vertex_count()},
               {"adjacency", verts}});
  } else {
    std::cout << hadsw::emit_graph(graph);
  }
  return kExitTrue;
}

int cmd_equiv(const GlobalOpts& g, const std::string& fileA,
              const std::string& fileB) {
  const SignMatrix a = load_matrix(fileA, g);
  const SignMatrix b = load_matrix(fileB, g);
  const hadsw::EquivalenceReport r = hadsw::equivalent(a, b, g.budget);
  const char* verdict =
      r.result == hadsw::EquivalenceResult::kEquivalent     ? "equivalent"
      : r.result == hadsw::EquivalenceResult::kInequivalent ? "inequivalent"
                                                            : "inconclusive";
  if (g.json) {
    emit_json({{"schema", 1},
               {"command", "equiv"},
               {"inputs", {fileA, fileB}},
               {"result", verdict},
               {"decidedBy", r.decidedBy},
               {"budget", g.budget}});
  } else {
    std::cout << verdict;
    if (!r.decidedBy.empty()) std::cout << " (decided by " << r.decidedBy << ")";
    std::cout << "\n";
  }
  switch (r.result) {
    case hadsw::EquivalenceResult::kEquivalent:
      return kExitTrue;
    case hadsw::EquivalenceResult::kInequivalent:
      return kExitFalse;
    default:
      return kExitInconclusive;
  }
}

int cmd_cospectral(const GlobalOpts& g, const std::string& fileA,
                   const std::string& fileB) {
  const hadsw::LoopGraph a = load_graph(fileA);
  const hadsw::LoopGraph b = load_graph(fileB);
  const bool c = hadsw::cospectral(a, b);
  if (g.json) {
    emit_json({{"schema", 1},
               {"command", "cospectral"},
               {"inputs", {fileA, fileB}},
               {"cospectral", c}});
  } else {
    std::cout << (c ? "cospectral" : "not cospectral") << "\n";
  }
  return c ? kExitTrue : kExitFalse;
}

int cmd_commute(const GlobalOpts& g, const std::string& kind,
                const std::string& file, int index, int field) {
  const SignMatrix m = load_matrix(file, g);
  const hadsw::LoopGraph base = hadsw::hadamard_graph(m);

  hadsw::SwitchingPartition partition;
  SignMatrix switched;
  if (kind == "quadruple") {
    const auto found = hadsw::find_closed_quadruples(m);
    if (index < 0 || static_cast<std::size_t>(index) >= found.size()) {
      throw std::runtime_error("quadruple index " + std::to_string(index) +
                               " out of range (found " +
                               std::to_string(found.size()) + ")");
    }
    partition = hadsw::quadruple_partition(m, found[index], field);
    switched = hadsw::switch_closed_quadruple(m, found[index], field);
  } else {
    const auto found = hadsw::find_hall_sets(m);
    if (index < 0 || static_cast<std::size_t>(index) >= found.size()) {
      throw std::runtime_error("hallset index " + std::to_string(index) +
                               " out of range (found " +
                               std::to_string(found.size()) + ")");
    }
    partition = hadsw::hall_partition(m, found[index], field);
    switched = hadsw::switch_hall_set(m, found[index], field);
  }

  const hadsw::LoopGraph viaMatrix = hadsw::hadamard_graph(switched);
  const hadsw::LoopGraph viaGraph = hadsw::gm_switch(base, partition);
  const bool identical = viaMatrix == viaGraph;

  std::vector<std::string> diff;
  if (!identical) {
    std::istringstream ma(hadsw::emit_graph(viaMatrix));
    std::istringstream gr(hadsw::emit_graph(viaGraph));
    std::string la, lg;
    while (std::getline(ma, la) && std::getline(gr, lg)) {
      if (la != lg) {
        diff.push_back("matrix side: " + la);
        diff.push_back("graph side:  " + lg);
      }
    }
  }

  if (g.json) {
    emit_json({{"schema", 1},
               {"command", "commute"},
               {"kind", kind},
               {"input", file},
               {"index", index},
               {"field", field},
               {"identical", identical},
               {"diff", diff}});
  } else if (identical) {
    std::cout << "graphs identical\n";
  } else {
    std::cout << "graphs differ\n";
    for (const std::string& line : diff) std::cout << line << "\n";
  }
  return identical ? kExitTrue : kExitFalse;
}

int cmd_reproduce(const GlobalOpts& g, bool extended,
                  const std::string& sloaneDir) {
  hadsw::acceptance::Options opts;
  opts.extended = extended;
  opts.sloaneDir = sloaneDir;
  if (g.budgetSet) opts.largeBudget = g.budget;

  const auto results = hadsw::acceptance::run_acceptance(opts);
  bool anyFail = false, anyInconclusive = false;
  for (const auto& r : results) {
    anyFail = anyFail || r.status == "FAIL";
    anyInconclusive = anyInconclusive || r.status == "INCONCLUSIVE";
  }
  const char* overall =
      anyFail ? "FAIL" : anyInconclusive ? "INCONCLUSIVE" : "PASS";

  if (g.json) {
    json rows = json::array();
    for (const auto& r : results) {
      rows.push_back({{"id", r.id},
                      {"name", r.name},
                      {"status", r.status},
                      {"detail", r.detail},
                      {"millis", r.millis}});
    }
    emit_json({{"schema", 1},
               {"command", "reproduce"},
               {"extended", extended},
               {"results", rows},
               {"overall", overall}});
  } else {
    for (const auto& r : results) {
      std::printf("%2d  %-52s %-12s %9.2f s  %s\n", r.id, r.name.c_str(),
                  r.status.c_str(), r.millis / 1000.0, r.detail.c_str());
    }
    std::printf("overall: %s\n", overall);
  }
  if (anyFail) return kExitFalse;
  if (anyInconclusive) return kExitInconclusive;
  return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
  GlobalOpts g;
  CLI::App app{"switching operations on Hadamard matrices and their graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", g.format, "matrix file format")
      ->check(CLI::IsMember({"plusminus", "paperstyle"}))
      ->capture_default_str();
  auto* budgetOpt = app.add_option(
      "--budget", g.budget, "canonical-form step budget per run");
  app.add_flag("--json", g.json, "machine-readable output, schema 1");

  std::string file, fileB, kind;
  int index = 0, field = 1;
  bool extended = false;
  std::string sloaneDir;

  auto* verify = app.add_subcommand("verify", "check a matrix is Hadamard");
  verify->add_option("file", file)->required();

  auto* find = app.add_subcommand("find", "list switching structures");
  find->add_option("kind", kind)
      ->check(CLI::IsMember({"quadruples", "hallsets"}))
      ->required();
  find->add_option("file", file)->required();

  auto* switchCmd =
      app.add_subcommand("switch", "apply a switch and print the matrix");
  switchCmd->add_option("kind", kind)
      ->check(CLI::IsMember({"quadruple", "hallset"}))
      ->required();
  switchCmd->add_option("file", file)->required();
  switchCmd->add_option("--index", index, "structure index from `find`")
      ->capture_default_str();
  switchCmd->add_option("--field", field, "field to switch, 1 to 4")
      ->check(CLI::Range(1, 4))
      ->capture_default_str();

  auto* graph = app.add_subcommand("graph", "print the Hadamard graph");
  graph->add_option("file", file)->required();

  auto* equiv = app.add_subcommand("equiv", "decide matrix equivalence");
  equiv->add_option("fileA", file)->required();
  equiv->add_option("fileB", fileB)->required();

  auto* cosp =
      app.add_subcommand("cospectral", "compare graph spectra exactly");
  cosp->add_option("graphA", file)->required();
  cosp->add_option("graphB", fileB)->required();

  auto* commute = app.add_subcommand(
      "commute", "diff the matrix-switch and graph-switch graphs");
  commute->add_option("kind", kind)
      ->check(CLI::IsMember({"quadruple", "hallset"}))
      ->required();
  commute->add_option("file", file)->required();
  commute->add_option("--index", index, "structure index from `find`")
      ->capture_default_str();
  commute->add_option("--field", field, "field to switch, 1 to 4")
      ->check(CLI::Range(1, 4))
      ->capture_default_str();

  auto* reproduce =
      app.add_subcommand("reproduce", "run the reproduction suite");
  reproduce->add_flag("--extended", extended, "include the order-24 checks");
  reproduce->add_option("--sloane-dir", sloaneDir,
                        "directory of order-24 matrix files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  g.budgetSet = budgetOpt->count() > 0;

  try {
    if (app.got_subcommand(verify)) return cmd_verify(g, file);
    if (app.got_subcommand(find)) return cmd_find(g, kind, file);
    if (app.got_subcommand(switchCmd)) {
      return cmd_switch(g, kind, file, index, field);
    }
    if (app.got_subcommand(graph)) return cmd_graph(g, file);
    if (app.got_subcommand(equiv)) return cmd_equiv(g, file, fileB);
    if (app.got_subcommand(cosp)) return cmd_cospectral(g, file, fileB);
    if (app.got_subcommand(commute)) {
      return cmd_commute(g, kind, file, index, field);
    }
    if (app.got_subcommand(reproduce)) {
      return cmd_reproduce(g, extended, sloaneDir);
    }
  } catch (const hadsw::BudgetExhausted& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
