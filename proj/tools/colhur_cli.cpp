// Command-line front end. Talks to the library only through colhur.h.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "colhur/colhur.h"

namespace {

struct BufferDeleter {
  void operator()(colhur_buffer* b) const { colhur_buffer_destroy(b); }
};
using Buffer = std::unique_ptr<colhur_buffer, BufferDeleter>;

struct ContextDeleter {
  void operator()(colhur_context* c) const { colhur_context_destroy(c); }
};
using Context = std::unique_ptr<colhur_context, ContextDeleter>;

struct RunConfig {
  std::string colors;    // multiplicities, "2,2,1"
  std::string coloring;  // per-point letters, "aabba"
  std::string lambda;
  std::string mu;
  std::string nu;
  std::string method = "both";
  std::string out;
  std::string csv;
  std::string json;
  bool verify = false;
  std::uint64_t seed = 1;
  std::optional<std::uint32_t> maxN;
  std::optional<std::uint64_t> maxYoung;
  std::optional<std::uint32_t> maxVerifyN;
};

int fail(colhur_status status) {
  std::cerr << "error: " << colhur_last_error() << '\n';
  return static_cast<int>(status);
}

std::string view(const Buffer& b) { return std::string(colhur_buffer_data(b.get()), colhur_buffer_size(b.get())); }

bool writeTo(const std::string& path, const std::string& data) {
  std::ofstream file(path, std::ios::binary);
  file << data;
  return static_cast<bool>(file);
}

// Writes to `path`, or to stdout when it is empty.
int emit(const std::string& path, const std::string& data) {
  if (path.empty()) {
    std::cout << data;
    return 0;
  }
  if (!writeTo(path, data)) {
    std::cerr << "error: cannot write " << path << '\n';
    return 1;
  }
  return 0;
}

std::optional<std::vector<std::uint32_t>> parseMultiplicities(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      unsigned long value = std::stoul(item, &used);
      if (used != item.size() || value == 0) return std::nullopt;
      out.push_back(static_cast<std::uint32_t>(value));
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  if (out.empty()) return std::nullopt;
  return out;
}

int openContext(const RunConfig& cfg, Context& ctx) {
  colhur_limits limits;
  colhur_limits_from_env(&limits);
  if (cfg.maxN) limits.max_degree = *cfg.maxN;
  if (cfg.maxYoung) limits.max_young = *cfg.maxYoung;
  if (cfg.maxVerifyN) limits.max_verify_degree = *cfg.maxVerifyN;

  colhur_context* raw = nullptr;
  colhur_status status;
  if (!cfg.coloring.empty()) {
    status = colhur_context_create_letters(cfg.coloring.c_str(), &limits, &raw);
  } else {
    auto m = parseMultiplicities(cfg.colors);
    if (!m) {
      std::cerr << "error: --colors expects positive multiplicities such as 2,2,1\n";
      return 1;
    }
    status = colhur_context_create_blocks(m->data(), m->size(), &limits, &raw);
  }
  if (status != COLHUR_OK) return fail(status);
  ctx.reset(raw);
  return 0;
}

int runClasses(const RunConfig& cfg) {
  Context ctx;
  if (int rc = openContext(cfg, ctx)) return rc;
  colhur_buffer* raw = nullptr;
  if (auto s = colhur_classes_json(ctx.get(), &raw); s != COLHUR_OK) return fail(s);
  return emit(cfg.out, view(Buffer(raw)));
}

int runConstant(const RunConfig& cfg) {
  Context ctx;
  if (int rc = openContext(cfg, ctx)) return rc;
  colhur_method method = COLHUR_METHOD_BOTH;
  if (cfg.method == "oracle") method = COLHUR_METHOD_ORACLE;
  if (cfg.method == "hurwitz") method = COLHUR_METHOD_HURWITZ;
  colhur_buffer* raw = nullptr;
  if (auto s = colhur_constant_json(ctx.get(), cfg.lambda.c_str(), cfg.mu.c_str(), cfg.nu.c_str(), method, &raw);
      s != COLHUR_OK) {
    return fail(s);
  }
  Buffer json(raw);
  if (int rc = emit(cfg.out, view(json))) return rc;
  return view(json).find("\"match\": false") == std::string::npos ? 0 : static_cast<int>(COLHUR_ERR_VERIFY);
}

int runTable(const RunConfig& cfg) {
  Context ctx;
  if (int rc = openContext(cfg, ctx)) return rc;
  colhur_buffer* json = nullptr;
  colhur_buffer* csv = nullptr;
  if (auto s = colhur_table(ctx.get(), cfg.verify ? 1 : 0, &json, cfg.csv.empty() ? nullptr : &csv); s != COLHUR_OK) {
    return fail(s);
  }
  Buffer jsonOwned(json);
  Buffer csvOwned(csv);
  if (int rc = emit(cfg.out, view(jsonOwned))) return rc;
  if (!cfg.csv.empty() && !writeTo(cfg.csv, view(csvOwned))) {
    std::cerr << "error: cannot write " << cfg.csv << '\n';
    return 1;
  }
  if (cfg.verify) std::cerr << "verify: oracle and Hurwitz constants agree on every triple\n";
  return 0;
}

int runSurfaces(const RunConfig& cfg) {
  Context ctx;
  if (int rc = openContext(cfg, ctx)) return rc;
  colhur_buffer* raw = nullptr;
  if (auto s = colhur_surfaces_json(ctx.get(), cfg.lambda.c_str(), cfg.mu.c_str(), cfg.nu.c_str(), &raw);
      s != COLHUR_OK) {
    return fail(s);
  }
  return emit(cfg.out, view(Buffer(raw)));
}

int runVerify(const RunConfig& cfg) {
  Context ctx;
  if (int rc = openContext(cfg, ctx)) return rc;
  colhur_buffer* text = nullptr;
  colhur_buffer* json = nullptr;
  const colhur_status status = colhur_verify(ctx.get(), cfg.seed, &text, &json);
  if (!text) return fail(status);
  Buffer textOwned(text);
  Buffer jsonOwned(json);
  if (int rc = emit(cfg.out, view(textOwned))) return rc;
  if (!cfg.json.empty() && !writeTo(cfg.json, view(jsonOwned))) {
    std::cerr << "error: cannot write " << cfg.json << '\n';
    return 1;
  }
  return static_cast<int>(status);
}

void addColoringOptions(CLI::App* cmd, RunConfig& cfg) {
  auto* blocks = cmd->add_option("--colors", cfg.colors, "Multiplicities per color, points painted in blocks (2,2,1)");
  auto* letters = cmd->add_option("--coloring", cfg.coloring, "Per-point color letters (aabba)");
  blocks->excludes(letters);
  cmd->add_option("--max-n", cfg.maxN, "Largest accepted N");
  cmd->add_option("--max-young", cfg.maxYoung, "Largest |Y| or class size to enumerate");
  cmd->add_option("--max-verify-n", cfg.maxVerifyN, "Largest N for all-triple verification");
  cmd->callback([cmd, &cfg] {
    if (cfg.colors.empty() && cfg.coloring.empty()) throw CLI::RequiredError("--colors or --coloring");
    (void)cmd;
  });
}

void addTripleOptions(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--lambda", cfg.lambda, "Type of u, e.g. \"ab|a\"")->required();
  cmd->add_option("--mu", cfg.mu, "Type of v")->required();
  cmd->add_option("--nu", cfg.nu, "Type of vu")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conjugacy classes of S_N modulo a Young subgroup and their structure constants"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* classes = app.add_subcommand("classes", "List the classes as JSON");
  addColoringOptions(classes, cfg);
  classes->add_option("--out", cfg.out, "Output file (default stdout)");

  auto* constant = app.add_subcommand("constant", "One structure constant by oracle and Hurwitz formula");
  addColoringOptions(constant, cfg);
  addTripleOptions(constant, cfg);
  constant->add_option("--method", cfg.method, "oracle, hurwitz or both")
      ->check(CLI::IsMember({"oracle", "hurwitz", "both"}));
  constant->add_option("--out", cfg.out, "Output file (default stdout)");

  auto* table = app.add_subcommand("table", "Full multiplication table");
  addColoringOptions(table, cfg);
  table->add_option("--out", cfg.out, "JSON output file (default stdout)");
  table->add_option("--csv", cfg.csv, "Also write the flattened triples as CSV");
  table->add_flag("--verify", cfg.verify, "Cross-check every constant against the Hurwitz formula");

  auto* surfaces = app.add_subcommand("surfaces", "Census of colored surfaces for one triple");
  addColoringOptions(surfaces, cfg);
  addTripleOptions(surfaces, cfg);
  surfaces->add_option("--out", cfg.out, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Run the full invariant suite and print a report");
  addColoringOptions(verify, cfg);
  verify->add_option("--seed", cfg.seed, "Seed for sampled surface checks");
  verify->add_option("--out", cfg.out, "Report file (default stdout)");
  verify->add_option("--json", cfg.json, "Machine-readable report sidecar");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (classes->parsed()) return runClasses(cfg);
  if (constant->parsed()) return runConstant(cfg);
  if (table->parsed()) return runTable(cfg);
  if (surfaces->parsed()) return runSurfaces(cfg);
  return runVerify(cfg);
}
