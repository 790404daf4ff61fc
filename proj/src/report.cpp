#include "wlab/report.hpp"

#include <algorithm>

namespace wlab {

namespace {

uint64_t fnv1a_str(const std::string& s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

nlohmann::json witness_json(const Witness& w) {
  return {{"graph6", w.graph6}, {"code", w.code.hex()}, {"wiener", w.wiener}};
}

Witness witness_from(const nlohmann::json& j) {
  Witness w;
  w.graph6 = j.at("graph6").get<std::string>();
  w.wiener = j.at("wiener").get<uint64_t>();
  std::string hex = j.at("code").get<std::string>();
  for (size_t i = 0; i + 1 < hex.size(); i += 2)
    w.code.bytes.push_back(uint8_t(std::stoi(hex.substr(i, 2), nullptr, 16)));
  return w;
}

}  // namespace

std::string report_checksum(const nlohmann::json& j) {
  nlohmann::json c = j;
  c.erase("elapsed_ms");
  c.erase("checksum");
  return hex64(fnv1a_str(c.dump()));
}

nlohmann::json report_to_json(const SearchReport& r) {
  nlohmann::json j;
  j["family"] = r.family;
  nlohmann::json params;
  params["n"] = r.filter.n;
  if (r.filter.diameter) params["diameter"] = *r.filter.diameter;
  if (r.filter.cut_vertices) params["cut_vertices"] = *r.filter.cut_vertices;
  j["params"] = params;
  j["examined"] = r.examined;
  j["max_wiener"] = r.max_wiener;
  j["witnesses"] = nlohmann::json::array();
  for (const Witness& w : r.witnesses) j["witnesses"].push_back(witness_json(w));
  j["counterexamples"] = nlohmann::json::array();
  for (const Witness& w : r.counterexamples) j["counterexamples"].push_back(witness_json(w));
  if (r.bound) j["bound"] = r.bound;
  if (!r.checkpoint.empty()) j["checkpoint"] = r.checkpoint;
  j["elapsed_ms"] = r.elapsed_ms;
  j["checksum"] = report_checksum(j);
  return j;
}

SearchReport report_from_json(const nlohmann::json& j) {
  SearchReport r;
  r.family = j.at("family").get<std::string>();
  r.filter.n = j.at("params").at("n").get<int>();
  if (j.at("params").contains("diameter")) r.filter.diameter = j["params"]["diameter"].get<int>();
  if (j.at("params").contains("cut_vertices"))
    r.filter.cut_vertices = j["params"]["cut_vertices"].get<int>();
  r.examined = j.at("examined").get<uint64_t>();
  r.max_wiener = j.at("max_wiener").get<uint64_t>();
  for (const auto& w : j.at("witnesses")) r.witnesses.push_back(witness_from(w));
  for (const auto& w : j.at("counterexamples")) r.counterexamples.push_back(witness_from(w));
  if (j.contains("bound")) r.bound = j["bound"].get<uint64_t>();
  if (j.contains("elapsed_ms")) r.elapsed_ms = j["elapsed_ms"].get<uint64_t>();
  return r;
}

SearchReport merge_reports(const std::vector<SearchReport>& parts) {
  if (parts.empty()) throw BadParameters("nothing to merge");
  SearchReport r = parts.front();
  auto append_unique = [](std::vector<Witness>& into, const std::vector<Witness>& from) {
    for (const Witness& w : from) {
      bool dup = false;
      for (const Witness& have : into)
        if (have.code == w.code) dup = true;
      if (!dup) into.push_back(w);
    }
  };
  for (size_t i = 1; i < parts.size(); ++i) {
    const SearchReport& p = parts[i];
    if (p.family != r.family || p.filter.n != r.filter.n)
      throw BadParameters("merging reports from different searches");
    r.examined += p.examined;
    r.elapsed_ms += p.elapsed_ms;
    if (p.max_wiener > r.max_wiener) {
      r.max_wiener = p.max_wiener;
      r.witnesses.clear();
    }
    if (p.max_wiener == r.max_wiener) append_unique(r.witnesses, p.witnesses);
    append_unique(r.counterexamples, p.counterexamples);
  }
  auto by_code = [](const Witness& a, const Witness& b) { return a.code < b.code; };
  std::sort(r.witnesses.begin(), r.witnesses.end(), by_code);
  std::sort(r.counterexamples.begin(), r.counterexamples.end(), by_code);
  r.checkpoint.clear();
  return r;
}

}  // namespace wlab
