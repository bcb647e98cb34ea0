#include "hot/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <memory>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "hot/allwords.hpp"
#include "hot/corpus.hpp"
#include "hot/errors.hpp"
#include "hot/hash.hpp"
#include "hot/io.hpp"
#include "hot/llm.hpp"
#include "hot/metrics.hpp"
#include "hot/multihop.hpp"
#include "hot/random.hpp"
#include "hot/report.hpp"
#include "hot/saturation.hpp"
#include "hot/serialization.hpp"
#include "hot/twostep.hpp"

namespace hot::cli {

using nlohmann::json;

namespace {

constexpr double kDefaultTopFraction = 0.05;
constexpr std::size_t kMaxListedOffenders = 10;

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::string file_hash(std::string_view bytes) { return hex64(fnv1a64(bytes)); }

void print_warnings(std::ostream& err, const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) err << "warning: " << w << "\n";
}

// Maps library errors to exit codes and prints one diagnostic.
template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ProviderError& e) {
    err << "error: provider failure: " << e.what() << "\n";
    return kEnvironmentError;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    const auto& ids = e.offenders();
    for (std::size_t i = 0; i < ids.size() && i < kMaxListedOffenders; ++i) err << "  offender: " << ids[i] << "\n";
    return kUserError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUserError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kUserError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kEnvironmentError;
  }
}

Tokenizer make_tokenizer(const std::optional<std::filesystem::path>& stopwords) {
  return stopwords ? Tokenizer(Stopwords::from_file(*stopwords)) : Tokenizer();
}

json provider_json(const ProviderConfig& c) {
  // The credential itself never leaves the environment; only its name is recorded.
  return json{{"endpoint", c.endpoint},
              {"model", c.model},
              {"credential_env", c.credential_env},
              {"timeout_ms", c.timeout.count()},
              {"max_concurrency", c.max_concurrency},
              {"retries", c.retries},
              {"temperature", c.temperature}};
}

Hypergraph edgeless(const Corpus& corpus) {
  HypergraphBuilder builder;
  for (const auto& doc : corpus.documents()) builder.add_node(doc.id, document_node_text(doc));
  return builder.build();
}

}  // namespace

void RunConfig::validate() const {
  static const std::vector<std::string> kMethods{"allwords", "llm", "twostep", "random"};
  if (std::find(kMethods.begin(), kMethods.end(), method) == kMethods.end())
    throw ConfigError("unknown method '" + method + "' (expected allwords, llm, twostep or random)");
  auto only_for = [&](bool given, const char* flag, std::initializer_list<const char*> methods) {
    if (!given) return;
    for (const char* m : methods)
      if (method == m) return;
    std::string list;
    for (const char* m : methods) list += std::string(list.empty() ? "" : " or ") + m;
    throw ConfigError(std::string(flag) + " applies only to --method " + list);
  };
  only_for(top_fraction.has_value(), "--top-fraction", {"allwords"});
  only_for(level.has_value(), "--level", {"llm"});
  only_for(k_sentences.has_value(), "--k-sentences", {"twostep"});
  only_for(k_pairs.has_value(), "--k-pairs", {"twostep"});
  only_for(prune_min_size.has_value(), "--prune-min-size", {"twostep"});
  only_for(edges.has_value(), "--edges", {"random"});
  only_for(cache.has_value(), "--cache", {"llm", "twostep"});
  only_for(mock_providers, "--mock-providers", {"llm", "twostep"});
  only_for(chat.has_value(), "--llm-url", {"llm", "twostep"});
  only_for(embedding.has_value(), "--embed-url", {"twostep"});

  if (top_fraction && !(*top_fraction > 0.0 && *top_fraction <= 1.0))
    throw ConfigError("--top-fraction must lie in (0, 1]");
  if (k_sentences && *k_sentences < 1) throw ConfigError("--k-sentences must be at least 1");
  if (k_pairs && *k_pairs < 1) throw ConfigError("--k-pairs must be at least 1");
  if (prune_min_size && *prune_min_size < 1) throw ConfigError("--prune-min-size must be at least 1");
  if (method == "random" && (!edges || *edges < 1)) throw ConfigError("--method random needs --edges >= 1");
  if (concurrency < 1) throw ConfigError("--concurrency must be at least 1");
  if (corpus.empty()) throw ConfigError("--corpus is required");
  if (out_dir.empty()) throw ConfigError("--out is required");

  const bool needs_chat = method == "llm" || method == "twostep";
  if (needs_chat && mock_providers && (chat || embedding))
    throw ConfigError("--mock-providers cannot be combined with provider endpoints");
  if (needs_chat && !mock_providers) {
    if (!chat) throw ConfigError("--method " + method + " needs --llm-url and --llm-model (or --mock-providers)");
    chat->validate();
    if (method == "twostep") {
      if (!embedding)
        throw ConfigError("--method twostep needs --embed-url and --embed-model (or --mock-providers)");
      embedding->validate();
    }
  }
}

int cmd_construct(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    const Tokenizer tokenizer = make_tokenizer(config.stopwords);
    const std::string corpus_bytes = read_file(config.corpus);
    std::istringstream corpus_in(corpus_bytes);
    const auto ingested = ingest(corpus_in, tokenizer);
    const Corpus& corpus = ingested.corpus;
    if (ingested.skipped_empty > 0)
      err << "warning: skipped " << ingested.skipped_empty << " record(s) with empty text\n";

    const auto started = std::chrono::steady_clock::now();
    std::vector<std::string> warnings;
    json parameters = json::object();
    json providers = json::object();
    json run_stats = json::object();
    Hypergraph hot;

    if (config.method == "allwords") {
      const double fraction = config.top_fraction.value_or(kDefaultTopFraction);
      parameters["top_fraction"] = fraction;
      hot = construct_allwords(corpus, fraction, &warnings);
    } else if (config.method == "random") {
      parameters["edges"] = *config.edges;
      const RandomHotOptions options;
      parameters["min_edge_size"] = options.min_edge_size;
      parameters["max_edge_size"] = options.max_edge_size;
      hot = random_hot(edgeless(corpus), *config.edges, config.seed, options);
    } else {
      const TfIdfStats stats = TfIdfStats::build(corpus);
      std::unique_ptr<ChatProvider> chat;
      if (config.mock_providers) {
        chat = std::make_unique<TfIdfMockChatProvider>(stats, tokenizer);
      } else {
        chat = std::make_unique<HttpChatProvider>(*config.chat);
        providers["chat_config"] = provider_json(*config.chat);
      }
      providers["chat"] = chat->model();
      if (config.cache) parameters["cache"] = config.cache->filename().string();
      parameters["concurrency"] = config.concurrency;

      if (config.method == "llm") {
        LlmConstructionOptions options;
        options.level = config.level.value_or(TopicLevel::document);
        options.max_concurrency = config.concurrency;
        options.cache_path = config.cache;
        parameters["level"] = std::string(to_string(options.level));
        parameters["prompt"] = std::string(topic_prompt(options.level).version);
        auto result = construct_llm(corpus, *chat, options);
        warnings = std::move(result.warnings);
        run_stats["provider_units"] = result.provider_units;
        run_stats["cached_units"] = result.cached_units;
        hot = std::move(result.hot);
      } else {
        std::unique_ptr<EmbeddingProvider> embedder;
        if (config.mock_providers) {
          embedder = std::make_unique<HashEmbeddingProvider>(32, config.seed, tokenizer);
        } else {
          embedder = std::make_unique<HttpEmbeddingProvider>(*config.embedding);
          providers["embedding_config"] = provider_json(*config.embedding);
        }
        providers["embedding"] = embedder->model();
        TwoStepOptions options;
        if (config.k_sentences) options.k_sentences = *config.k_sentences;
        if (config.k_pairs) options.k_pairs = *config.k_pairs;
        options.prune_min_size = config.prune_min_size;
        options.embedding.max_concurrency = config.concurrency;
        options.topics.max_concurrency = config.concurrency;
        options.topics.cache_path = config.cache;
        parameters["k_sentences"] = options.k_sentences;
        parameters["k_pairs"] = options.k_pairs == 0 ? 10 * corpus.size() : options.k_pairs;
        parameters["prune_min_size"] = config.prune_min_size ? json(*config.prune_min_size) : json(nullptr);
        parameters["prompt"] = std::string(pair_topic_prompt().version);
        auto result = construct_twostep(corpus, *chat, *embedder, options);
        warnings = std::move(result.warnings);
        parameters["selected_pairs"] = result.pairs.size();
        parameters["unpruned_edge_count"] = result.unpruned_edge_count;
        hot = std::move(result.hot);
      }
    }
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    run_stats["wall_time_seconds"] = wall;
    print_warnings(err, warnings);

    const std::string hot_bytes = serialize(hot);
    json manifest{
        {"method", config.method},
        {"parameters", parameters},
        {"seed", config.seed},
        {"providers", providers},
        {"corpus",
         {{"file", config.corpus.filename().string()},
          {"fnv1a64", file_hash(corpus_bytes)},
          {"documents", corpus.size()},
          {"skipped_empty", ingested.skipped_empty}}},
        {"stopwords", tokenizer.stopwords().version()},
        {"hot", {{"nodes", hot.node_count()}, {"hyperedges", hot.edge_count()}, {"fnv1a64", file_hash(hot_bytes)}}},
        {"warnings", warnings},
        {"run", run_stats},
    };
    write_file(config.out_dir / "hot.json", hot_bytes);
    write_file(config.out_dir / "manifest.json", manifest.dump(2) + "\n");
    out << "wrote " << (config.out_dir / "hot.json").string() << ": " << hot.node_count() << " nodes, "
        << hot.edge_count() << " hyperedges\n";
    return static_cast<int>(kSuccess);
  });
}

int cmd_evaluate(const EvaluateConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (config.out_dir.empty()) throw ConfigError("--out is required");
    const std::string hot_bytes = read_file(config.hot);
    const std::string relevance_bytes = read_file(config.relevance);
    const Hypergraph hot = deserialize(hot_bytes);
    const RelevanceSets relevance = RelevanceSets::parse(relevance_bytes);
    const SetFamily family = relevance.resolve(hot);

    EvalReport report = evaluate(hot, family, config.seed);
    report.label = config.label;
    if (report.label.empty()) {
      // "<run>/hot.json" as written by construct is labeled by its directory.
      const auto stem = config.hot.stem().string();
      const auto parent = config.hot.parent_path().filename().string();
      report.label = stem == "hot" && !parent.empty() ? parent : stem;
    }

    json doc = json::parse(report_json(report));
    doc["inputs"] = {{"hot_fnv1a64", file_hash(hot_bytes)}, {"relevance_fnv1a64", file_hash(relevance_bytes)}};
    const std::string table = report_table(std::span<const EvalReport>(&report, 1));
    write_file(config.out_dir / "report.json", doc.dump(2) + "\n");
    write_file(config.out_dir / "report.txt", table);
    out << table;
    if (!report.effort_ratio) err << "note: effort ratio undefined: " << report.effort_ratio_reason << "\n";
    return static_cast<int>(kSuccess);
  });
}

int cmd_simulate(const SimulateConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (config.out.empty()) throw ConfigError("--out is required");
    const Hypergraph h0 = load_hypergraph(config.hot);
    const SetFamily family = RelevanceSets::load(config.relevance).resolve(h0);
    SaturationSimOptions options;
    options.alpha = config.alpha;
    options.steps = config.steps;
    options.seed = config.seed;
    options.min_edge_size = config.min_edge_size;
    options.max_edge_size = config.max_edge_size;
    const auto trajectory = saturation_sim(h0, family, options);

    json steps = json::array();
    for (const auto& s : trajectory.steps) {
      steps.push_back({{"n", s.n},
                       {"edge_count", s.edge_count},
                       {"drel", optional_number(s.drel)},
                       {"drand", optional_number(s.drand)},
                       {"er", optional_number(s.er)},
                       {"sigma_rel", s.sigma_rel},
                       {"sigma_rand", s.sigma_rand},
                       {"rdp", optional_number(s.rdp)}});
    }
    json doc{{"alpha", config.alpha},
             {"steps", config.steps},
             {"seed", config.seed},
             {"min_edge_size", config.min_edge_size},
             {"max_edge_size", config.max_edge_size},
             {"trajectory", steps}};
    write_file(config.out, doc.dump(2) + "\n");
    const auto& last = trajectory.steps.back();
    out << "step " << last.n << ": ER " << (last.er ? std::to_string(*last.er) : std::string("n/a")) << ", sigma_rel "
        << last.sigma_rel << ", sigma_rand " << last.sigma_rand << "\n";
    return static_cast<int>(kSuccess);
  });
}

int cmd_ingest_multihop(const IngestMultihopConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (config.out_dir.empty()) throw ConfigError("--out is required");
    const auto conv = convert_multihop_dir(config.dir);
    write_file(config.out_dir / "corpus.jsonl", conv.corpus_jsonl);
    write_file(config.out_dir / "relevance.json", conv.relevance.to_json());
    out << conv.article_count << " articles, " << conv.query_count << " queries, " << conv.relevance.sets.size()
        << " relevance sets (" << conv.dropped_queries << " queries dropped, " << conv.unmatched_evidence
        << " evidence items unmatched)\n";
    return static_cast<int>(kSuccess);
  });
}

}  // namespace hot::cli
