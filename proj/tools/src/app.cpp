#include <chrono>
#include <ostream>

#include <CLI11.hpp>
#include <httplib.h>

#include "hot/cli/commands.hpp"
#include "hot/cli/service.hpp"
#include "hot/errors.hpp"
#include "hot/serialization.hpp"

namespace hot::cli {

namespace {

struct ProviderFlags {
  std::string url;
  std::string model;
  std::string key_env;
  double timeout_s = 60.0;
  unsigned retries = 2;

  void add(CLI::App& app, const std::string& prefix, const std::string& what) {
    app.add_option("--" + prefix + "-url", url, "Full URL " + what + " requests are POSTed to");
    app.add_option("--" + prefix + "-model", model, "Model name for " + what + " requests");
    app.add_option("--" + prefix + "-key-env", key_env, "Environment variable holding the " + what + " bearer token");
    app.add_option("--" + prefix + "-timeout", timeout_s, "Request timeout in seconds")->capture_default_str();
    app.add_option("--" + prefix + "-retries", retries, "Retries on transport errors, 429 and 5xx")
        ->capture_default_str();
  }

  std::optional<ProviderConfig> config(unsigned concurrency, double temperature) const {
    if (url.empty() && model.empty()) return std::nullopt;
    ProviderConfig c;
    c.endpoint = url;
    c.model = model;
    c.credential_env = key_env;
    c.timeout = std::chrono::milliseconds(static_cast<long long>(timeout_s * 1000.0));
    c.max_concurrency = concurrency;
    c.retries = retries;
    c.temperature = temperature;
    return c;
  }
};

struct ServeFlags {
  std::filesystem::path hot;
  std::string bind = "127.0.0.1:8080";
  std::optional<std::filesystem::path> ui_dir;
  std::string label;
};

int serve(const ServeFlags& flags, std::ostream& out, std::ostream& err) {
  Hypergraph hot;
  try {
    hot = load_hypergraph(flags.hot);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUserError;
  }
  const auto colon = flags.bind.rfind(':');
  int port = 0;
  try {
    if (colon == std::string::npos) throw std::invalid_argument("missing port");
    port = std::stoi(flags.bind.substr(colon + 1));
  } catch (const std::exception&) {
    err << "error: --bind must look like HOST:PORT, got '" << flags.bind << "'\n";
    return kUserError;
  }
  const std::string host = flags.bind.substr(0, colon);
  const HotService service(std::move(hot), flags.label.empty() ? flags.hot.stem().string() : flags.label);
  httplib::Server server;
  // httplib's default adds SO_REUSEPORT, which lets a second server share a
  // busy port silently.
  server.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const void*>(&yes), sizeof(yes));
  });
  try {
    mount(server, service, flags.ui_dir);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUserError;
  }
  if (!server.bind_to_port(host, port)) {
    err << "error: cannot bind " << flags.bind << "\n";
    return kEnvironmentError;
  }
  out << "serving " << service.hot().node_count() << " nodes, " << service.hot().edge_count()
      << " hyperedges on http://" << flags.bind << "/\n"
      << std::flush;
  return server.listen_after_bind() ? kSuccess : kEnvironmentError;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Build, evaluate and browse hypergraphs of text", "hot"};
  app.require_subcommand(1);

  RunConfig rc;
  std::optional<std::string> level;
  ProviderFlags llm;
  ProviderFlags embed;
  double temperature = 0.0;
  auto* construct = app.add_subcommand("construct", "Build a HoT from a JSONL corpus");
  construct->add_option("--corpus", rc.corpus, "JSONL corpus, one {id, title?, text} per line")->required();
  construct->add_option("--method", rc.method, "allwords | llm | twostep | random")->required();
  construct->add_option("--top-fraction", rc.top_fraction, "allwords: fraction of words kept (default 0.05)");
  construct->add_option("--level", level, "llm: document | sentence (default document)");
  construct->add_option("--k-sentences", rc.k_sentences, "twostep: sentences kept per document (default 5)");
  construct->add_option("--k-pairs", rc.k_pairs, "twostep: pair budget (default 10 x documents)");
  construct->add_option("--prune-min-size", rc.prune_min_size, "twostep: drop hyperedges smaller than this");
  construct->add_option("--edges", rc.edges, "random: number of hyperedges");
  construct->add_option("--seed", rc.seed, "Seed for random methods and mock embeddings")->capture_default_str();
  construct->add_option("--out", rc.out_dir, "Output directory")->required();
  construct->add_option("--stopwords", rc.stopwords, "Stopword file replacing the built-in list");
  construct->add_option("--cache", rc.cache, "llm/twostep: JSONL cache of model answers");
  construct->add_option("--concurrency", rc.concurrency, "Concurrent provider requests")->capture_default_str();
  construct->add_flag("--mock-providers", rc.mock_providers, "Use the deterministic offline chat and embedding mocks");
  construct->add_option("--llm-temperature", temperature, "Chat sampling temperature")->capture_default_str();
  llm.add(*construct, "llm", "chat");
  embed.add(*construct, "embed", "embedding");

  EvaluateConfig ec;
  auto* evaluate = app.add_subcommand("evaluate", "Compute DRel, DRand, effort ratio, RDP and saturation");
  evaluate->add_option("--hot", ec.hot, "HoT JSON file")->required();
  evaluate->add_option("--relevance", ec.relevance, "Relevance sets JSON {\"sets\": [[ids]]}")->required();
  evaluate->add_option("--seed", ec.seed, "Seed for the random sets")->capture_default_str();
  evaluate->add_option("--out", ec.out_dir, "Output directory")->required();
  evaluate->add_option("--label", ec.label, "Method name for the report (default: HoT file stem)");

  SimulateConfig sc;
  auto* simulate = app.add_subcommand("simulate", "Add aligned hyperedges step by step and record the metrics");
  simulate->add_option("--hot", sc.hot, "Initial HoT JSON file")->required();
  simulate->add_option("--relevance", sc.relevance, "Relevance sets JSON")->required();
  simulate->add_option("--alpha", sc.alpha, "Minimum relevant-pair fraction of added edges")->capture_default_str();
  simulate->add_option("--steps", sc.steps, "Hyperedges to add")->capture_default_str();
  simulate->add_option("--seed", sc.seed, "Seed for added edges and the random sets")->capture_default_str();
  simulate->add_option("--min-size", sc.min_edge_size, "Smallest added hyperedge")->capture_default_str();
  simulate->add_option("--max-size", sc.max_edge_size, "Largest added hyperedge")->capture_default_str();
  simulate->add_option("--out", sc.out, "Trajectory JSON file")->required();

  IngestMultihopConfig mc;
  auto* multihop = app.add_subcommand("ingest-multihop", "Convert the MultiHop-RAG release to corpus and relevance files");
  multihop->add_option("--dir", mc.dir, "Directory with corpus.json and MultiHopRAG.json")->required();
  multihop->add_option("--out", mc.out_dir, "Output directory")->required();

  ServeFlags sf;
  auto* serve_cmd = app.add_subcommand("serve", "Serve a HoT over a read-only JSON API");
  serve_cmd->add_option("--hot", sf.hot, "HoT JSON file")->required();
  serve_cmd->add_option("--bind", sf.bind, "HOST:PORT")->capture_default_str();
  serve_cmd->add_option("--ui-dir", sf.ui_dir, "Static browser bundle served at /");
  serve_cmd->add_option("--label", sf.label, "Name reported by /api/meta (default: HoT file stem)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUserError;
  }

  if (construct->parsed()) {
    try {
      if (level) rc.level = parse_topic_level(*level);
      rc.chat = llm.config(rc.concurrency, temperature);
      rc.embedding = embed.config(rc.concurrency, 0.0);
      rc.validate();
    } catch (const ConfigError& e) {
      err << "error: " << e.what() << "\n\n" << construct->help();
      return kUserError;
    }
    return cmd_construct(rc, out, err);
  }
  if (evaluate->parsed()) return cmd_evaluate(ec, out, err);
  if (simulate->parsed()) return cmd_simulate(sc, out, err);
  if (multihop->parsed()) return cmd_ingest_multihop(mc, out, err);
  if (serve_cmd->parsed()) return serve(sf, out, err);
  return kUserError;
}

}  // namespace hot::cli
