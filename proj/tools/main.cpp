// Copyright 2026 The Autobench Authors
// SPDX-License-Identifier: Apache-2.0

// autobench: run benchmarking sessions, inspect tools, render the system
// prompt, serve the wire mocks.

#include <csignal>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "autobench/analysis.hpp"
#include "autobench/config.hpp"
#include "autobench/dataset.hpp"
#include "autobench/mock_generator.hpp"
#include "autobench/mock_server.hpp"
#include "autobench/prompts.hpp"
#include "autobench/session.hpp"
#include "autobench/wire.hpp"

namespace fs = std::filesystem;
using namespace autobench;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitAborted = 2;

volatile std::sig_atomic_t g_stop = 0;
void OnSignal(int) { g_stop = 1; }

void WriteText(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << text;
  if (!out) throw ConfigError("write failed: " + path.string());
}

std::string ReadText(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunConfig LoadConfig(const std::string& path) {
  return path.empty() ? RunConfig::Default() : RunConfig::Load(path);
}

MockFixtures LoadFixtures(const RunConfig& cfg, const DatasetManifest& manifest,
                          std::uint64_t seed) {
  MockFixtures f;
  f.codebook = Codebook(manifest.ClassNames());
  f.random_seed = seed;
  for (const auto& [name, path] : cfg.biased_tables) {
    f.biased[name] = std::make_shared<BiasedTable>(BiasedTable::FromJson(ParseYamlOrJson(ReadText(path))));
  }
  return f;
}

// --- run ---------------------------------------------------------------------

struct RunArgs {
  std::string query;
  std::string config;
  std::string out = "autobench_out";
  std::string scripted;
  bool mock_all = false;
  bool mock_models = false;
  bool mock_generator = false;
  std::optional<std::uint64_t> seed;
  std::optional<int> samples_per_choice;
  bool force = false;
};

int CmdRun(const RunArgs& args) {
  RunConfig cfg = LoadConfig(args.config);
  if (args.seed) cfg.session.rng_seed = *args.seed;
  if (args.samples_per_choice) cfg.session.samples_per_choice = *args.samples_per_choice;
  cfg.session.Validate();
  const Query query(args.query);

  const fs::path out_dir(args.out);
  fs::create_directories(out_dir);
  for (const char* name : {"report.json", "conclusions.txt", "metrics.csv", "error.json"}) {
    if (fs::exists(out_dir / name) && !args.force) {
      throw ConfigError((out_dir / name).string() + " exists; pass --force to overwrite");
    }
  }
  if (args.force) {
    for (const char* name : {"report.json", "conclusions.txt", "metrics.csv", "error.json"}) {
      fs::remove(out_dir / name);
    }
  }

  std::unique_ptr<OrchestratorBackend> orchestrator;
  if (!args.scripted.empty()) {
    orchestrator = ScriptedBackend::FromFile(args.scripted);
  } else {
    orchestrator = std::make_unique<RemoteChatBackend>(cfg.chat);
  }

  auto manifest = std::make_shared<const DatasetManifest>(DatasetManifest::Load(cfg.manifest));
  for (const auto& w : manifest->warnings()) std::cerr << "warning: " << w << "\n";

  const bool mock_models = args.mock_all || args.mock_models;
  const bool mock_generator = args.mock_all || args.mock_generator;
  std::unique_ptr<MockServer> server;
  if (mock_models || mock_generator) {
    MockServerOptions opts;
    opts.fixtures = LoadFixtures(cfg, *manifest, cfg.session.rng_seed);
    server = std::make_unique<MockServer>(std::move(opts));
  }

  std::unique_ptr<ImageGenerator> generator;
  if (mock_generator) {
    generator = std::make_unique<HttpGenerationClient>(server->base_url());
  } else if (cfg.generator_endpoint) {
    generator = std::make_unique<HttpGenerationClient>(*cfg.generator_endpoint);
  }
  DataSources sources(manifest, generator.get());

  std::vector<std::unique_ptr<ModelClient>> clients;
  SessionBackends backends;
  backends.orchestrator = orchestrator.get();
  backends.sources = &sources;
  for (const auto& m : cfg.session.model_library) {
    std::string endpoint = m.endpoint;
    if (mock_models) endpoint = server->base_url() + "/" + cfg.mock_routes.at(m.name);
    clients.push_back(std::make_unique<HttpScoreClient>(m.name, endpoint));
    backends.models[m.name] = clients.back().get();
  }

  const SessionOutcome outcome = RunSession(query, cfg.session, backends);

  if (outcome.report) {
    WriteText(out_dir / "report.json", SerializeReport(*outcome.report));
    WriteText(out_dir / "metrics.csv", MetricsCsv(AccuracySeries(*outcome.report)));
    if (outcome.report->conclusions()) {
      WriteText(out_dir / "conclusions.txt", *outcome.report->conclusions() + "\n");
    }
  }
  if (!outcome.completed) {
    WriteText(out_dir / "error.json", outcome.error.dump(2) + "\n");
    std::cerr << "session aborted during " << outcome.error["stage"].get<std::string>() << ": "
              << outcome.error["message"].get<std::string>() << "\n";
    return outcome.error["type"] == "ConfigError" ? kExitConfig : kExitAborted;
  }
  std::cout << "session completed with " << outcome.report->entries().size()
            << " experiment(s); outputs in " << out_dir.string() << "\n";
  return kExitOk;
}

// --- tools -------------------------------------------------------------------

const ToolSpec* FindTool(const ToolRegistry& registry, const std::string& name) {
  if (const ToolSpec* s = registry.Find(name)) return s;
  for (const auto& s : registry.specs()) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

int CmdTools(const std::string& docstring, const std::string& apply, const std::string& in,
             const std::string& out, std::uint64_t seed) {
  const ToolRegistry& registry = ToolRegistry::Default();
  if (!docstring.empty()) {
    const ToolSpec* spec = FindTool(registry, docstring);
    if (!spec) {
      std::cerr << "unknown tool \"" << docstring << "\"; available tools:\n";
      for (const auto& n : registry.Names()) std::cerr << "  " << n << "\n";
      return kExitConfig;
    }
    std::cout << Docstring(*spec) << "\n";
    return kExitOk;
  }
  if (!apply.empty()) {
    if (in.empty() || out.empty()) throw ConfigError("--apply needs --in and --out");
    const ToolCall call = registry.Canonicalize(registry.Parse(Json(apply), ""), ToolKind::kTransform, "");
    const ImageBuffer input = Standardize(ReadImageFile(in));
    const RunConfig cfg = RunConfig::Default();
    auto manifest = std::make_shared<const DatasetManifest>(DatasetManifest::Load(cfg.manifest));
    MockGenerator generator{Codebook(manifest->ClassNames())};
    DataSources sources(manifest, &generator);
    TransformContext ctx;
    ctx.rng = Rng(seed);
    ctx.generator = &generator;
    const ToolCall companion{std::string(kSelectModule), "TextToImageRetrieval",
                             Json{{"class_name", "random"}, {"image_type", "photo"}}};
    ctx.companion_sampler = [&](Rng& r) { return sources.Select(companion, r).image; };
    if (auto idx = DecodeBarcode(input)) ctx.sample_label = generator.codebook().NameOf(*idx);
    WritePng(registry.Apply(call, input, ctx), out);
    return kExitOk;
  }
  for (const auto& n : registry.Names()) std::cout << n << "\n";
  return kExitOk;
}

// --- render-prompt / serve-mocks --------------------------------------------

int CmdRender(const std::string& config, const std::string& out) {
  const RunConfig cfg = LoadConfig(config);
  const std::string text = RenderSystemPrompt(ToolRegistry::Default(), cfg.session.model_library);
  if (out.empty()) {
    std::cout << text;
  } else {
    WriteText(out, text);
  }
  return kExitOk;
}

int CmdServe(const std::string& config, const std::string& host, int port, std::uint64_t seed,
             const std::string& script) {
  const RunConfig cfg = LoadConfig(config);
  const DatasetManifest manifest = DatasetManifest::Load(cfg.manifest);
  MockServerOptions opts;
  opts.host = host;
  opts.port = port;
  opts.fixtures = LoadFixtures(cfg, manifest, seed);
  if (!script.empty()) opts.chat_script = std::shared_ptr<ScriptedBackend>(ScriptedBackend::FromFile(script));
  MockServer server(std::move(opts));
  std::signal(SIGINT, OnSignal);
  std::signal(SIGTERM, OnSignal);
  std::cout << "serving mocks on " << server.base_url() << std::endl;
  while (!g_stop) std::this_thread::sleep_for(std::chrono::milliseconds(100));
  server.Stop();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"autobench: automatic multimodal model benchmarking"};
  app.require_subcommand(1);

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Run a benchmarking session");
  run_cmd->add_option("--query", run.query, "User query")->required();
  run_cmd->add_option("--config", run.config, "Run configuration (JSON)");
  run_cmd->add_option("--out", run.out, "Output directory");
  run_cmd->add_option("--scripted", run.scripted, "Scripted orchestrator (YAML/JSON)");
  run_cmd->add_flag("--mock-all", run.mock_all, "Mock models and generator");
  run_cmd->add_flag("--mock-models", run.mock_models, "Mock model endpoints");
  run_cmd->add_flag("--mock-generator", run.mock_generator, "Mock generation backend");
  run_cmd->add_option("--seed", run.seed, "Session seed");
  run_cmd->add_option("--samples-per-choice", run.samples_per_choice, "Samples per answer");
  run_cmd->add_flag("--force", run.force, "Overwrite existing outputs");

  std::string docstring, apply, in, out;
  std::uint64_t tool_seed = 0;
  auto* tools_cmd = app.add_subcommand("tools", "List tools, print docstrings, apply a transform");
  tools_cmd->add_option("--docstring", docstring, "Print the docstring of a tool");
  tools_cmd->add_option("--apply", apply, "Transform call, e.g. \"src.tools.transform.RotateImage(90)\"");
  tools_cmd->add_option("--in", in, "Input image");
  tools_cmd->add_option("--out", out, "Output PNG");
  tools_cmd->add_option("--seed", tool_seed, "Transform seed");

  std::string render_config, render_out;
  auto* render_cmd = app.add_subcommand("render-prompt", "Write the assembled system prompt");
  render_cmd->add_option("--config", render_config, "Run configuration (JSON)");
  render_cmd->add_option("--out", render_out, "Output file (default stdout)");

  std::string serve_config, serve_host = "127.0.0.1", serve_script;
  int serve_port = 8600;
  std::uint64_t serve_seed = 0;
  auto* serve_cmd = app.add_subcommand("serve-mocks", "Serve the wire mocks until interrupted");
  serve_cmd->add_option("--config", serve_config, "Run configuration (JSON)");
  serve_cmd->add_option("--host", serve_host, "Bind address");
  serve_cmd->add_option("--port", serve_port, "Port (0 picks a free one)");
  serve_cmd->add_option("--seed", serve_seed, "Seed of the \"random\" route");
  serve_cmd->add_option("--script", serve_script, "Chat script for /v1/chat/completions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*run_cmd) return CmdRun(run);
    if (*tools_cmd) return CmdTools(docstring, apply, in, out, tool_seed);
    if (*render_cmd) return CmdRender(render_config, render_out);
    if (*serve_cmd) return CmdServe(serve_config, serve_host, serve_port, serve_seed, serve_script);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}
