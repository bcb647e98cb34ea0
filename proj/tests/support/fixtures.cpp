#include "fixtures.hpp"

#include <atomic>
#include <cstdio>
#include <random>
#include <set>

#include "hot/text.hpp"

namespace hot::testing {

std::string node_name(std::size_t i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "n%02zu", i);
  return buf;
}

Hypergraph make_hot(std::size_t n, const std::vector<std::vector<std::size_t>>& edges) {
  HypergraphBuilder b;
  for (std::size_t i = 0; i < n; ++i) b.add_node(NodeId(node_name(i)), "node " + std::to_string(i));
  for (std::size_t k = 0; k < edges.size(); ++k) {
    std::vector<NodeId> members;
    for (std::size_t m : edges[k]) members.emplace_back(node_name(m));
    char id[16];
    std::snprintf(id, sizeof id, "e%03zu", k);
    b.add_hyperedge(HyperedgeId(id), std::string("edge ") + id, std::move(members));
  }
  return b.build();
}

SetFamily family(const std::vector<std::vector<std::size_t>>& sets) {
  SetFamily out;
  for (const auto& s : sets) {
    std::vector<NodeIndex> v(s.begin(), s.end());
    std::sort(v.begin(), v.end());
    out.push_back(std::move(v));
  }
  return out;
}

Corpus make_corpus(const std::vector<std::vector<std::string>>& docs) {
  const Tokenizer tok;
  std::vector<Document> out;
  for (const auto& d : docs) out.push_back(make_document(NodeId(d.at(0)), d.at(1), d.at(2), tok));
  return Corpus(std::move(out));
}

std::string sample_corpus_jsonl() {
  return R"({"id":"d01","title":"Port strike halts shipping","text":"Dock workers began a strike at the northern port. Shipping lines rerouted cargo vessels to southern harbors. The union demands higher wages and safer cranes."}
{"id":"d02","title":"Union talks resume","text":"Negotiators for the dock union met port officials on Monday. The strike entered its third day. Cargo backlogs grew as container ships waited offshore."}
{"id":"d03","title":"Chip maker reports record profit","text":"The semiconductor company posted record quarterly profit. Demand for graphics chips surged among data centers. Its shares rose sharply after the report."}
{"id":"d04","title":"Data center boom","text":"Cloud providers are building data centers at a record pace. Graphics chips remain scarce. Electricity demand from the facilities worries grid operators."}
{"id":"d05","title":"Grid operators warn of shortages","text":"Regional grid operators warned of electricity shortages this summer. Heat waves and new data centers strain supply. Utilities plan new solar farms."}
{"id":"d06","title":"Solar farm approved","text":"Regulators approved a large solar farm near the desert town. The project will supply electricity to the regional grid. Construction starts next spring."}
{"id":"d07","title":"Football final tonight","text":"The two clubs meet in the cup final tonight. Fans traveled from across the country. The coach praised his young striker."}
{"id":"d08","title":"Striker signs new contract","text":"The young striker signed a new contract with the club. The coach called him the future of the team. Fans celebrated the news online."}
{"id":"d09","title":"Cargo rates climb","text":"Freight rates for cargo containers climbed after the port strike. Shipping analysts expect delays for weeks. Retailers fear empty shelves."}
{"id":"d10","title":"Empty record","text":""}
)";
}

Hypergraph random_small_hot(std::uint64_t seed, std::size_t n, std::size_t m, std::size_t max_size) {
  std::mt19937_64 gen(seed);
  const std::size_t edges = gen() % (m + 1);
  std::vector<std::vector<std::size_t>> e;
  for (std::size_t k = 0; k < edges; ++k) {
    const std::size_t size = 1 + gen() % std::min(max_size, n);
    std::set<std::size_t> members;
    while (members.size() < size) members.insert(gen() % n);
    e.emplace_back(members.begin(), members.end());
  }
  return make_hot(n, e);
}

SetFamily random_family(std::uint64_t seed, std::size_t n, std::size_t count, std::size_t max_size) {
  std::mt19937_64 gen(seed ^ 0x5eedULL);
  std::vector<std::vector<std::size_t>> sets;
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t size = 2 + gen() % (std::min(max_size, n) - 1);
    std::set<std::size_t> members;
    while (members.size() < size) members.insert(gen() % n);
    sets.emplace_back(members.begin(), members.end());
  }
  return family(sets);
}

TempDir::TempDir() {
  static std::atomic<int> counter{0};
  const auto base = std::filesystem::temp_directory_path();
  for (;;) {
    std::random_device rd;
    path_ = base / ("hot-test-" + std::to_string(rd()) + "-" + std::to_string(counter++));
    if (std::filesystem::create_directory(path_)) break;
  }
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

}  // namespace hot::testing
