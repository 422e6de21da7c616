#include "report.hpp"

#include <cstdio>
#include <sstream>

namespace osbop_cli {

using nlohmann::json;

std::string format_full(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", x);
  return buffer;
}

namespace {

std::string format4(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.4f", x);
  return buffer;
}

std::string ensemble_string(const EnsembleText& ensemble, bool full_precision) {
  std::string out;
  for (const auto& [text, weight] : ensemble.members) {
    if (!out.empty()) out += " + ";
    out += (full_precision ? format_full(weight) : format4(weight)) + "*" + text;
  }
  return out;
}

std::string set_string(const std::vector<std::string>& set) {
  std::string out;
  for (const auto& text : set) {
    if (!out.empty()) out += " + ";
    out += text;
  }
  return out;
}

json input_json(const InputEcho& input) {
  return json{{"file", input.file}, {"format", input.format}, {"n", input.n}};
}

json ensemble_json(const EnsembleText& ensemble) {
  json members = json::array();
  for (const auto& [text, weight] : ensemble.members)
    members.push_back(json{{"order", text}, {"weight", weight}});
  return members;
}

}  // namespace

json to_json(const SolveReport& report) {
  json seeds = json::array();
  for (const auto& seed_result : report.results) seeds.push_back(seed_result.seed);

  json results = json::array();
  for (const auto& seed_result : report.results)
    results.push_back(json{{"seed", seed_result.seed},
                           {"fitness", seed_result.fitness},
                           {"degenerate_weights", seed_result.ensemble.degenerate_weights},
                           {"ensemble", ensemble_json(seed_result.ensemble)}});

  const auto& best = report.results[report.best_index];
  return json{{"command", "solve"},
              {"input", input_json(report.input)},
              {"variant", report.variant},
              {"b", report.b},
              {"config",
               {{"iters", report.iters},
                {"tune_iters", report.tune_iters},
                {"threads", report.threads},
                {"seeds", seeds}}},
              {"utopia", {{"u_c", report.u_c}, {"u_c_b", report.u_c_b}}},
              {"results", results},
              {"best",
               {{"seed", best.seed},
                {"fitness", best.fitness},
                {"w1", report.w1},
                {"ensemble", ensemble_json(best.ensemble)}}},
              {"wall_ms", report.wall_ms}};
}

json to_json(const ExactReport& report) {
  json sets = json::array();
  for (const auto& set : report.solutions) sets.push_back(set);
  return json{{"command", "exact"},
              {"input", input_json(report.input)},
              {"variant", report.variant},
              {"b", report.b},
              {"config", {{"budget", report.budget}}},
              {"utopia", {{"u_c", report.u_c}, {"u_c_b", report.u_c_b}}},
              {"optimum", report.optimum},
              {"explored", report.explored},
              {"solutions", sets},
              {"wall_ms", report.wall_ms}};
}

json to_json(const UtopiaCmdReport& report) {
  json reports = json::array();
  for (const auto& per_b : report.reports)
    reports.push_back(json{{"b", per_b.b},
                           {"value", per_b.value},
                           {"feasible_bucket_matrix", per_b.feasible_bucket_matrix},
                           {"matrix", per_b.matrix}});
  return json{{"command", "utopia"},
              {"input", input_json(report.input)},
              {"reports", reports},
              {"wall_ms", report.wall_ms}};
}

std::string to_csv(const SolveReport& report) {
  std::string out =
      "record,seed,fitness,w1,ensemble,n,variant,b,iters,tune_iters,u_c,u_c_b,wall_ms\n";
  const auto row = [&](const char* record, const SolveReport::PerSeed& seed_result,
                       const std::string& w1) {
    out += std::string(record) + "," + std::to_string(seed_result.seed) + "," +
           format_full(seed_result.fitness) + "," + w1 + ",\"" +
           ensemble_string(seed_result.ensemble, true) + "\"," +
           std::to_string(report.input.n) + "," + report.variant + "," +
           std::to_string(report.b) + "," + std::to_string(report.iters) + "," +
           std::to_string(report.tune_iters) + "," + format_full(report.u_c) + "," +
           format_full(report.u_c_b) + "," + format_full(report.wall_ms) + "\n";
  };
  for (const auto& seed_result : report.results) row("seed", seed_result, "");
  row("best", report.results[report.best_index], format_full(report.w1));
  return out;
}

std::string to_csv(const ExactReport& report) {
  std::string out =
      "record,index,fitness,solution,n,variant,b,explored,budget,u_c,u_c_b,wall_ms\n";
  for (std::size_t i = 0; i < report.solutions.size(); ++i) {
    out += "solution," + std::to_string(i + 1) + "," + format_full(report.optimum) +
           ",\"" + set_string(report.solutions[i]) + "\"," +
           std::to_string(report.input.n) + "," + report.variant + "," +
           std::to_string(report.b) + "," + std::to_string(report.explored) + "," +
           std::to_string(report.budget) + "," + format_full(report.u_c) + "," +
           format_full(report.u_c_b) + "," + format_full(report.wall_ms) + "\n";
  }
  return out;
}

std::string to_csv(const UtopiaCmdReport& report) {
  std::string out = "b,value,feasible_bucket_matrix,matrix\n";
  for (const auto& per_b : report.reports) {
    std::string matrix;
    for (const auto& row : per_b.matrix) {
      if (!matrix.empty()) matrix += ";";
      for (std::size_t j = 0; j < row.size(); ++j)
        matrix += (j == 0 ? "" : " ") + format_full(row[j]);
    }
    out += std::to_string(per_b.b) + "," + format_full(per_b.value) + "," +
           (per_b.feasible_bucket_matrix ? "true" : "false") + ",\"" + matrix + "\"\n";
  }
  return out;
}

std::string to_text(const SolveReport& report) {
  std::ostringstream out;
  out << "input: " << report.input.file << " (" << report.input.format
      << ", n=" << report.input.n << ")\n";
  out << "variant: " << report.variant << "  b=" << report.b << "  iters=" << report.iters
      << "  tune-iters=" << report.tune_iters << "  threads=" << report.threads << "\n";
  out << "u_C = " << format4(report.u_c) << "  u_C^b = " << format4(report.u_c_b) << "\n";
  for (const auto& seed_result : report.results) {
    out << "seed " << seed_result.seed << ": fitness " << format4(seed_result.fitness)
        << "  " << ensemble_string(seed_result.ensemble, false);
    if (seed_result.ensemble.degenerate_weights) out << "  [degenerate weights]";
    out << "\n";
  }
  const auto& best = report.results[report.best_index];
  out << "best: seed " << best.seed << "  fitness " << format4(best.fitness)
      << "  w1 = " << format4(report.w1) << "\n";
  out << "wall: " << format4(report.wall_ms) << " ms\n";
  return out.str();
}

std::string to_text(const ExactReport& report) {
  std::ostringstream out;
  out << "input: " << report.input.file << " (" << report.input.format
      << ", n=" << report.input.n << ")\n";
  out << "exact " << report.variant << "  b=" << report.b << "  explored "
      << report.explored << " of budget " << report.budget << "\n";
  out << "u_C = " << format4(report.u_c) << "  u_C^b = " << format4(report.u_c_b) << "\n";
  out << "optimum " << format4(report.optimum) << " attained by " << report.solutions.size()
      << " solution set(s):\n";
  for (std::size_t i = 0; i < report.solutions.size(); ++i)
    out << "  [" << i + 1 << "] " << set_string(report.solutions[i]) << "\n";
  out << "wall: " << format4(report.wall_ms) << " ms\n";
  return out.str();
}

std::string to_text(const UtopiaCmdReport& report) {
  std::ostringstream out;
  out << "input: " << report.input.file << " (" << report.input.format
      << ", n=" << report.input.n << ")\n";
  for (const auto& per_b : report.reports) {
    out << "b=" << per_b.b << "  value = " << format4(per_b.value)
        << "  feasible bucket matrix: " << (per_b.feasible_bucket_matrix ? "yes" : "no")
        << "\n";
    for (const auto& row : per_b.matrix) {
      out << " ";
      for (double x : row) out << " " << format4(x);
      out << "\n";
    }
  }
  out << "wall: " << format4(report.wall_ms) << " ms\n";
  return out.str();
}

}  // namespace osbop_cli
