#include "hlplan/cli.hpp"

#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

#include "CLI11.hpp"

#include "hlplan/controller.hpp"
#include "hlplan/dataset.hpp"
#include "hlplan/http_backend.hpp"
#include "hlplan/loocv.hpp"
#include "hlplan/metrics.hpp"
#include "hlplan/parse.hpp"
#include "hlplan/replay_backend.hpp"
#include "hlplan/rng.hpp"
#include "hlplan/sample.hpp"
#include "hlplan/scripted_backend.hpp"

namespace hlplan {
namespace {

constexpr int kOk = 0;
constexpr int kItemFaults = 1;
constexpr int kUsage = 2;
constexpr int kBackendFault = 3;

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

void write_manifest(const std::filesystem::path& dir, const std::string& command,
                    const nlohmann::json& config) {
  nlohmann::json manifest;
  manifest["format"] = 1;
  manifest["tool"] = "hlplan";
  manifest["version"] = "0.1.0";
  manifest["command"] = command;
  manifest["config"] = config;
  manifest["fingerprint"] = config_fingerprint(config);
  write_text_file(dir / "manifest.json", manifest.dump(2) + "\n");
}

ExampleOrder parse_example_order(const std::string& name) {
  if (name == "nearest_last") return ExampleOrder::NearestLast;
  if (name == "nearest_first") return ExampleOrder::NearestFirst;
  throw CLI::ValidationError("--example-order", "must be nearest_last or nearest_first");
}

std::shared_ptr<KnnRetriever> build_knn_retriever(
    std::vector<TaskInstance> corpus, const std::shared_ptr<LexicalEmbeddingProvider>& provider,
    bool use_steps, const std::string& cache_path) {
  std::vector<EmbeddingVector> precomputed;
  if (!cache_path.empty()) {
    EmbeddingCache cache;
    if (auto loaded = EmbeddingCache::load(cache_path, provider->identifier())) {
      cache = std::move(*loaded);
    }
    bool dirty = false;
    precomputed.reserve(corpus.size());
    for (const TaskInstance& task : corpus) {
      if (auto cached = cache.get(task.id)) {
        precomputed.push_back(std::move(*cached));
      } else {
        EmbeddingVector vec =
            embed_text(instruction_text(task.instruction, use_steps), *provider);
        cache.put(task.id, vec);
        precomputed.push_back(std::move(vec));
        dirty = true;
      }
    }
    if (dirty) cache.save(cache_path, provider->identifier());
  }
  return std::make_shared<KnnRetriever>(std::move(corpus), provider, use_steps,
                                        std::move(precomputed));
}

// ---------------------------------------------------------------------------
// sample
// ---------------------------------------------------------------------------

struct SampleArgs {
  std::string data;
  std::size_t n = 100;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_sample(const SampleArgs& args) {
  const ObjectVocabulary vocab = household_vocabulary();
  const std::vector<TaskInstance> data = load_dataset(args.data, vocab);
  const std::vector<TaskInstance> sampled = stratified_sample(data, args.n, args.seed);
  save_dataset(args.out, sampled);
  std::cout << "wrote " << sampled.size() << " records to " << args.out << "\n";
  return kOk;
}

// ---------------------------------------------------------------------------
// eval-static
// ---------------------------------------------------------------------------

struct EvalStaticArgs {
  std::string train;
  std::string test;
  std::string backend = "oracle";
  std::string model;
  std::string out;
  std::string embed_cache;
  std::string example_order = "nearest_last";
  std::size_t k = 9;
  bool use_steps = false;
  double logit_bias = 0.1;
  double temperature = 0.0;
  std::uint64_t seed = 0;
};

int cmd_eval_static(const EvalStaticArgs& args) {
  const ObjectVocabulary vocab = household_vocabulary();
  const std::vector<TaskInstance> train = load_dataset(args.train, vocab);
  const std::vector<TaskInstance> test = load_dataset(args.test, vocab);

  const auto backend = make_backend(args.backend, vocab, test, args.model);
  auto provider = std::make_shared<LexicalEmbeddingProvider>();
  auto retriever = build_knn_retriever(train, provider, args.use_steps, args.embed_cache);

  PromptConfig config;
  config.mode = PlanningMode::Static;
  config.k = args.k;
  config.use_steps = args.use_steps;
  config.example_order = parse_example_order(args.example_order);
  config.logit_bias_value = args.logit_bias;
  config.temperature = args.temperature;
  Planner planner(backend, retriever, config, vocab);

  std::filesystem::create_directories(args.out);
  const std::filesystem::path out_dir(args.out);

  std::vector<std::string> faults;
  std::string csv = "id,task_type,correct,predicted,gold\n";
  double correct = 0.0;
  for (const TaskInstance& task : test) {
    auto result = planner.static_plan(task.instruction);
    int acc = 0;
    std::string predicted;
    if (result.ok()) {
      acc = hlp_accuracy_static(result.value(), task.gold_hlp);
      predicted = serialize_hlp(result.value());
    } else {
      faults.push_back(task.id + ": " + result.error().message);
    }
    correct += acc;
    csv += task.id + "," + std::string(task_type_name(task.task_type)) + "," +
           std::to_string(acc) + ",\"" + predicted + "\",\"" + serialize_hlp(task.gold_hlp) +
           "\"\n";
  }

  nlohmann::json config_json{{"command", "eval-static"},
                             {"k", args.k},
                             {"use_steps", args.use_steps},
                             {"example_order", args.example_order},
                             {"logit_bias", args.logit_bias},
                             {"temperature", args.temperature},
                             {"backend", args.backend},
                             {"seed", args.seed}};

  MetricReport report;
  report.episodes = static_cast<int>(test.size());
  report.hlp_acc_static =
      test.empty() ? 0.0 : correct / static_cast<double>(test.size());
  report.hlp_acc_lower = report.hlp_acc_static;
  report.hlp_acc_upper = report.hlp_acc_static;
  report.config_fingerprint = config_fingerprint(config_json);

  nlohmann::json metrics = report_to_json(report);
  metrics["faults"] = faults;
  write_text_file(out_dir / "metrics.json", metrics.dump(2) + "\n");
  write_text_file(out_dir / "metrics.txt", report_to_table(report));
  write_text_file(out_dir / "items.csv", csv);
  write_manifest(out_dir, "eval-static", config_json);

  std::cout << "hlp_acc_static " << report.hlp_acc_static << " over " << test.size()
            << " items";
  if (!faults.empty()) std::cout << " (" << faults.size() << " faults)";
  std::cout << "\n";
  return faults.empty() ? kOk : kItemFaults;
}

// ---------------------------------------------------------------------------
// run
// ---------------------------------------------------------------------------

struct RunArgs {
  std::string train;
  std::string tasks;
  std::string scenes;
  std::string backend = "oracle";
  std::string model;
  std::string out;
  std::string embed_cache;
  std::string example_order = "nearest_last";
  bool static_mode = false;
  bool dynamic_mode = false;
  int replan_interval = 20;
  int max_steps = 300;
  int max_failures = 10;
  int max_replans = 10;
  int radius = 3;
  double noise = 0.0;
  std::uint64_t seed = 0;
  std::size_t k = 9;
  bool use_steps = false;
  double logit_bias = 0.1;
  double temperature = 0.0;
  std::size_t jobs = 1;
};

int cmd_run(const RunArgs& args) {
  const ObjectVocabulary vocab = household_vocabulary();
  const std::vector<TaskInstance> train = load_dataset(args.train, vocab);
  const std::vector<TaskInstance> tasks = load_dataset(args.tasks, vocab);

  std::vector<Scene> scenes;
  scenes.reserve(tasks.size());
  for (const TaskInstance& task : tasks) {
    const std::filesystem::path scene_path =
        std::filesystem::path(args.scenes) / (task.scene_id + ".json");
    Scene scene = load_scene(scene_path, vocab);
    validate_task_against_scene(task, scene);
    scenes.push_back(std::move(scene));
  }

  const auto backend = make_backend(args.backend, vocab, tasks, args.model);
  auto provider = std::make_shared<LexicalEmbeddingProvider>();
  auto retriever = build_knn_retriever(train, provider, args.use_steps, args.embed_cache);

  const bool dynamic = !args.static_mode;
  PromptConfig prompt_config;
  prompt_config.mode = dynamic ? PlanningMode::Dynamic : PlanningMode::Static;
  prompt_config.k = args.k;
  prompt_config.use_steps = args.use_steps;
  prompt_config.example_order = parse_example_order(args.example_order);
  prompt_config.logit_bias_value = args.logit_bias;
  prompt_config.temperature = args.temperature;

  EpisodeConfig episode_config;
  episode_config.replan_interval = args.replan_interval;
  episode_config.max_steps = args.max_steps;
  episode_config.max_action_failures = args.max_failures;
  episode_config.max_replans = args.max_replans;
  episode_config.dynamic = dynamic;
  episode_config.observation_radius = args.radius;
  episode_config.detection_noise = args.noise;

  std::size_t jobs = std::max<std::size_t>(1, args.jobs);
  if (backend->max_concurrency() > 0) {
    jobs = std::min(jobs, backend->max_concurrency());
  }

  std::vector<EpisodeTrace> traces(tasks.size());
  std::vector<std::vector<PlanCallRecord>> plan_logs(tasks.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) break;
      Planner planner(backend, retriever, prompt_config, vocab);
      planner.set_log_sink(
          [&plan_logs, i](const PlanCallRecord& record) { plan_logs[i].push_back(record); });
      LowLevelPlanner lowlevel(scenes[i], vocab);
      EpisodeConfig cfg = episode_config;
      cfg.seed = mix64(args.seed ^ fnv1a64(tasks[i].id));
      traces[i] = run_episode(tasks[i], scenes[i], planner, lowlevel, cfg);
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  std::filesystem::create_directories(args.out);
  const std::filesystem::path out_dir(args.out);

  nlohmann::json config_json{{"command", "run"},
                             {"dynamic", dynamic},
                             {"replan_interval", args.replan_interval},
                             {"max_steps", args.max_steps},
                             {"max_failures", args.max_failures},
                             {"max_replans", args.max_replans},
                             {"radius", args.radius},
                             {"noise", args.noise},
                             {"seed", args.seed},
                             {"k", args.k},
                             {"use_steps", args.use_steps},
                             {"example_order", args.example_order},
                             {"logit_bias", args.logit_bias},
                             {"temperature", args.temperature},
                             {"backend", args.backend}};

  const MetricReport report =
      compute_report(traces, tasks, config_fingerprint(config_json));

  {
    std::ofstream trace_out(out_dir / "traces.jsonl");
    for (const EpisodeTrace& trace : traces) write_trace(trace_out, trace);
  }
  {
    std::ofstream plan_out(out_dir / "plans.jsonl");
    for (const auto& log : plan_logs) {
      for (const PlanCallRecord& record : log) {
        nlohmann::json j{{"episode_id", record.episode_id},
                         {"t", record.t},
                         {"prompt_hash", record.prompt_hash},
                         {"raw_completion", record.raw_completion},
                         {"parsed_plan", serialize_hlp(record.parsed_plan)},
                         {"latency_ms", record.latency_ms}};
        plan_out << j.dump() << '\n';
      }
    }
  }
  {
    std::string csv =
        "episode,task_id,task_type,success,gc_satisfied,gc_total,steps,replans,failures,"
        "end_reason,hlp_exact\n";
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      const EpisodeTrace& trace = traces[i];
      csv += std::to_string(i) + "," + trace.task_id + "," +
             std::string(task_type_name(trace.task_type)) + "," +
             (trace.success ? "1" : "0") + "," + std::to_string(trace.gc_satisfied) + "," +
             std::to_string(trace.gc_total) + "," + std::to_string(trace.steps) + "," +
             std::to_string(trace.replans) + "," + std::to_string(trace.failures) + "," +
             std::string(end_reason_name(trace.end_reason)) + "," +
             std::to_string(hlp_accuracy_static(trace.full_predicted_hlp, tasks[i].gold_hlp)) +
             "\n";
    }
    write_text_file(out_dir / "episodes.csv", csv);
  }
  write_text_file(out_dir / "metrics.json", report_to_json(report).dump(2) + "\n");
  write_text_file(out_dir / "metrics.txt", report_to_table(report));
  write_manifest(out_dir, "run", config_json);

  std::cout << report_to_table(report);

  bool component_faults = false;
  for (const EpisodeTrace& trace : traces) {
    if (trace.end_reason == EndReason::PlannerFailure) component_faults = true;
  }
  return component_faults ? kItemFaults : kOk;
}

// ---------------------------------------------------------------------------
// loocv
// ---------------------------------------------------------------------------

struct LoocvArgs {
  std::string train;
  std::string variants;
  std::string backend = "oracle";
  std::string model;
  std::string out;
  std::vector<std::size_t> sweep_k = {1, 3, 9};
  std::vector<std::size_t> sweep_train = {25, 50, 100};
  std::uint64_t seed = 0;
  bool with_ablation = false;
};

std::vector<PromptVariant> load_variants(const std::string& path) {
  std::vector<PromptVariant> variants;
  if (path.empty()) {
    PromptVariant goal_only{"goal_only", {}};
    goal_only.config.mode = PlanningMode::Static;
    PromptVariant with_steps{"with_steps", {}};
    with_steps.config.mode = PlanningMode::Static;
    with_steps.config.use_steps = true;
    variants.push_back(goal_only);
    variants.push_back(with_steps);
    return variants;
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open variants file: " + path);
  nlohmann::json j;
  in >> j;
  for (const nlohmann::json& v : j) {
    PromptVariant variant;
    variant.name = v.at("name").get<std::string>();
    variant.config.mode = PlanningMode::Static;
    if (v.contains("use_steps")) variant.config.use_steps = v.at("use_steps").get<bool>();
    if (v.contains("k")) variant.config.k = v.at("k").get<std::size_t>();
    if (v.contains("example_order")) {
      variant.config.example_order = parse_example_order(v.at("example_order"));
    }
    if (v.contains("logit_bias_value")) {
      variant.config.logit_bias_value = v.at("logit_bias_value").get<double>();
    }
    variants.push_back(std::move(variant));
  }
  if (variants.empty()) throw std::runtime_error("variants file is empty");
  return variants;
}

int cmd_loocv(const LoocvArgs& args) {
  const ObjectVocabulary vocab = household_vocabulary();
  const std::vector<TaskInstance> train = load_dataset(args.train, vocab);
  const auto backend = make_backend(args.backend, vocab, train, args.model);
  auto provider = std::make_shared<LexicalEmbeddingProvider>();

  const PlannerFactory factory = [&](const PromptConfig& config,
                                     std::vector<TaskInstance> corpus) {
    auto retriever =
        std::make_shared<KnnRetriever>(std::move(corpus), provider, config.use_steps);
    return std::make_unique<Planner>(backend, retriever, config, vocab);
  };

  const std::vector<PromptVariant> variants = load_variants(args.variants);
  const std::vector<VariantScore> scores = loocv(train, variants, factory);

  const std::vector<SweepCell> sweep = loocv_sweep(train, args.sweep_k, args.sweep_train,
                                                   scores.front().config, factory, args.seed);

  std::filesystem::create_directories(args.out);
  const std::filesystem::path out_dir(args.out);

  nlohmann::json ranked = nlohmann::json::array();
  bool any_faults = false;
  for (const VariantScore& score : scores) {
    ranked.push_back({{"name", score.name},
                      {"score", score.score},
                      {"k", score.config.k},
                      {"use_steps", score.config.use_steps},
                      {"faults", score.faults}});
    if (!score.faults.empty()) any_faults = true;
  }
  nlohmann::json result{{"variants", ranked}};

  if (args.with_ablation) {
    const VariantScore knn = knn_ablation(train, RetrieverMode::Knn, args.seed,
                                          scores.front().config, backend, vocab);
    const VariantScore random = knn_ablation(train, RetrieverMode::Random, args.seed,
                                             scores.front().config, backend, vocab);
    result["ablation"] = {{"knn", knn.score}, {"random", random.score}};
  }

  write_text_file(out_dir / "loocv.json", result.dump(2) + "\n");

  std::string table = "variant            score\n";
  for (const VariantScore& score : scores) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%-18s %.4f\n", score.name.c_str(), score.score);
    table += buf;
  }
  write_text_file(out_dir / "loocv.txt", table);

  std::string csv = "k,train_size,score\n";
  for (const SweepCell& cell : sweep) {
    csv += std::to_string(cell.k) + "," + std::to_string(cell.train_size) + "," +
           std::to_string(cell.score) + "\n";
  }
  write_text_file(out_dir / "sweep.csv", csv);

  nlohmann::json config_json{{"command", "loocv"},
                             {"backend", args.backend},
                             {"seed", args.seed},
                             {"sweep_k", args.sweep_k},
                             {"sweep_train", args.sweep_train}};
  write_manifest(out_dir, "loocv", config_json);

  std::cout << table;
  return any_faults ? kItemFaults : kOk;
}

}  // namespace

std::shared_ptr<LLMBackend> make_backend(const std::string& spec,
                                         const ObjectVocabulary& vocab,
                                         const std::vector<TaskInstance>& oracle_corpus,
                                         const std::string& model) {
  if (spec == "oracle") {
    return std::make_shared<ScriptedBackend>(ScriptedBackend::oracle(oracle_corpus, vocab));
  }
  if (spec.rfind("scripted:", 0) == 0) {
    return std::make_shared<ScriptedBackend>(
        ScriptedBackend::from_json_file(spec.substr(9), vocab));
  }
  if (spec.rfind("http://", 0) == 0 || spec.rfind("https://", 0) == 0) {
    HttpBackendConfig config;
    config.base_url = spec;
    config.model = model;
    return std::make_shared<HttpBackend>(config);
  }
  if (spec.rfind("replay:", 0) == 0) {
    return std::make_shared<ReplayBackend>(spec.substr(7));
  }
  if (spec.rfind("record:", 0) == 0) {
    const std::string rest = spec.substr(7);
    const std::size_t sep = rest.find(':');
    if (sep == std::string::npos) {
      throw std::runtime_error("record backend needs record:<dir>:<url>");
    }
    HttpBackendConfig config;
    config.base_url = rest.substr(sep + 1);
    config.model = model;
    return std::make_shared<ReplayBackend>(rest.substr(0, sep),
                                           std::make_shared<HttpBackend>(config));
  }
  throw std::runtime_error("unknown backend: " + spec);
}

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"Few-shot grounded high-level planning for household agents"};
  app.set_config("--config");
  app.allow_config_extras(false);
  app.require_subcommand(1);

  SampleArgs sample_args;
  auto* sample = app.add_subcommand("sample", "Stratified-sample a task dataset");
  sample->add_option("--data", sample_args.data, "input dataset (JSONL)")->required();
  sample->add_option("--n", sample_args.n, "sample size")->capture_default_str();
  sample->add_option("--seed", sample_args.seed, "RNG seed")->capture_default_str();
  sample->add_option("--out", sample_args.out, "output dataset (JSONL)")->required();

  EvalStaticArgs eval_args;
  auto* eval = app.add_subcommand("eval-static", "Static HLP accuracy over a test set");
  eval->add_option("--train", eval_args.train, "retrieval corpus (JSONL)")->required();
  eval->add_option("--test", eval_args.test, "test set (JSONL)")->required();
  eval->add_option("--k", eval_args.k, "in-context examples")->capture_default_str();
  eval->add_option("--backend", eval_args.backend, "backend selector")->capture_default_str();
  eval->add_option("--model", eval_args.model, "model name for HTTP backends");
  eval->add_flag("--use-steps", eval_args.use_steps, "include step-by-step instructions");
  eval->add_option("--example-order", eval_args.example_order, "nearest_last|nearest_first")
      ->capture_default_str();
  eval->add_option("--bias", eval_args.logit_bias, "logit bias value")->capture_default_str();
  eval->add_option("--temperature", eval_args.temperature, "sampling temperature")
      ->capture_default_str();
  eval->add_option("--embed-cache", eval_args.embed_cache, "corpus embedding cache file");
  eval->add_option("--seed", eval_args.seed, "RNG seed")->capture_default_str();
  eval->add_option("--out", eval_args.out, "output directory")->required();

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "Run full episodes with grounded re-planning");
  run->add_option("--train", run_args.train, "retrieval corpus (JSONL)")->required();
  run->add_option("--tasks", run_args.tasks, "episode tasks (JSONL)")->required();
  run->add_option("--scenes", run_args.scenes, "scene directory")->required();
  run->add_option("--backend", run_args.backend, "backend selector")->capture_default_str();
  run->add_option("--model", run_args.model, "model name for HTTP backends");
  auto* static_flag = run->add_flag("--static", run_args.static_mode,
                                    "single plan at t=0, no re-planning");
  run->add_flag("--dynamic", run_args.dynamic_mode, "grounded re-planning (default)")
      ->excludes(static_flag);
  run->add_option("--replan-interval", run_args.replan_interval,
                  "steps without progress before re-planning")
      ->capture_default_str();
  run->add_option("--max-steps", run_args.max_steps, "step budget per episode")
      ->capture_default_str();
  run->add_option("--max-failures", run_args.max_failures, "action failure budget")
      ->capture_default_str();
  run->add_option("--max-replans", run_args.max_replans, "re-plan budget")
      ->capture_default_str();
  run->add_option("--radius", run_args.radius, "observation radius (cells)")
      ->capture_default_str();
  run->add_option("--noise", run_args.noise, "detection false-negative probability")
      ->capture_default_str();
  run->add_option("--seed", run_args.seed, "RNG seed")->capture_default_str();
  run->add_option("--k", run_args.k, "in-context examples")->capture_default_str();
  run->add_flag("--use-steps", run_args.use_steps, "include step-by-step instructions");
  run->add_option("--bias", run_args.logit_bias, "logit bias value")->capture_default_str();
  run->add_option("--temperature", run_args.temperature, "sampling temperature")
      ->capture_default_str();
  run->add_option("--example-order", run_args.example_order, "nearest_last|nearest_first")
      ->capture_default_str();
  run->add_option("--embed-cache", run_args.embed_cache, "corpus embedding cache file");
  run->add_option("--jobs", run_args.jobs, "parallel episodes")->capture_default_str();
  run->add_option("--out", run_args.out, "output directory")->required();

  LoocvArgs loocv_args;
  auto* loocv_cmd = app.add_subcommand("loocv", "Leave-one-out prompt/variant selection");
  loocv_cmd->add_option("--train", loocv_args.train, "training corpus (JSONL)")->required();
  loocv_cmd->add_option("--variants", loocv_args.variants, "prompt variants file (JSON)");
  loocv_cmd->add_option("--backend", loocv_args.backend, "backend selector")
      ->capture_default_str();
  loocv_cmd->add_option("--model", loocv_args.model, "model name for HTTP backends");
  loocv_cmd->add_option("--sweep-k", loocv_args.sweep_k, "in-context example counts")
      ->delimiter(',')
      ->capture_default_str();
  loocv_cmd->add_option("--sweep-train", loocv_args.sweep_train, "training set sizes")
      ->delimiter(',')
      ->capture_default_str();
  loocv_cmd->add_flag("--ablation", loocv_args.with_ablation,
                      "also score the kNN-vs-random retriever ablation");
  loocv_cmd->add_option("--seed", loocv_args.seed, "RNG seed")->capture_default_str();
  loocv_cmd->add_option("--out", loocv_args.out, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*sample) return cmd_sample(sample_args);
    if (*eval) return cmd_eval_static(eval_args);
    if (*run) return cmd_run(run_args);
    if (*loocv_cmd) return cmd_loocv(loocv_args);
  } catch (const BackendError& e) {
    std::cerr << "backend error: " << e.what() << "\n";
    return kBackendFault;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

int cli_main(const std::vector<std::string>& args) {
  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.push_back("hlplan");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(storage.size());
  for (const std::string& s : storage) argv.push_back(s.c_str());
  return cli_main(static_cast<int>(argv.size()), argv.data());
}

}  // namespace hlplan
