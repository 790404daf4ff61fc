#pragma once
// Isomorph-free generation of free trees (n <= 18) and connected graphs
// (n <= 9) by canonical augmentation, plus graph6 catalog ingestion.
// Streams are deterministic, resumable and shardable.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "wlab/graph.hpp"

namespace wlab {

struct FamilyFilter {
  int n = 0;
  std::optional<int> diameter;      // exact
  std::optional<int> cut_vertices;  // exact
  std::function<bool(const Graph&)> predicate;  // extra hook, may be empty

  void validate() const;  // throws BadFilter
  // Full check: order, connectivity (when diameter/cut requested), diameter,
  // cut count, predicate.
  bool matches(const Graph& g) const;
};

struct StreamOptions {
  int shard_index = 0;
  int shard_total = 1;
  std::string resume_token;  // emit strictly after this checkpoint
};

struct EnumerationStream {
  std::string source;  // "generated" or "graph6:<path>"
  uint64_t emitted = 0;
  std::string checkpoint;  // token of the last emitted graph
};

// Return false from the visitor to stop the stream early.
using GraphVisitor = std::function<bool(const Graph&)>;

// One tree per isomorphism class matching the filter. Throws BadFilter;
// generation capped at n = 18.
void enumerate_trees(const FamilyFilter& filter, const GraphVisitor& visit,
                     EnumerationStream* stream = nullptr, const StreamOptions& opt = {});

// One connected graph per isomorphism class matching the filter. Throws
// BadFilter; TooLargeForGeneration for n > 9 (ingest a graph6 catalog instead).
void enumerate_connected_graphs(const FamilyFilter& filter, const GraphVisitor& visit,
                                EnumerationStream* stream = nullptr,
                                const StreamOptions& opt = {});

// Each line one graph6 record; filter (when given) applied on read. Shards
// partition the file by line number; the checkpoint token is the last
// emitted line. Throws MalformedRecord with the line number,
// UnsupportedOrder for n > 64.
void read_graph6(const std::string& path, const FamilyFilter* filter, const GraphVisitor& visit,
                 EnumerationStream* stream = nullptr, const StreamOptions& opt = {});

uint64_t write_graph6(const std::string& path, const std::vector<Graph>& graphs);

}  // namespace wlab
