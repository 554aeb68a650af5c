#pragma once

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "action.hpp"
#include "block.hpp"
#include "cohomology.hpp"
#include "errors.hpp"
#include "multipoly.hpp"
#include "partition.hpp"
#include "permutation.hpp"
#include "series.hpp"

namespace wonderful::json_io {

using nlohmann::json;

inline json to_json(const Block& b) { return b.elements(); }

inline json to_json(const NestedSet& s) {
  json out = json::array();
  for (const Block& b : s.blocks()) out.push_back(to_json(b));
  return out;
}

inline json to_json(const ChainNested& c) {
  json out = json::array();
  for (const NestedSet& s : c.links()) out.push_back(to_json(s));
  return out;
}

inline json to_json(const SetPartition& p) { return {{"ground", p.ground()}, {"blocks", p.blocks()}}; }

inline json to_json(const LabelledPartition& lp) {
  json j = to_json(lp.partition());
  j["labels"] = lp.labels();
  return j;
}

inline json to_json(const MultiPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back({{"exp", {e[0], e[1], e[2]}}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  return {{"vars", {"q", "y", "z"}}, {"terms", terms}};
}

inline json to_json(const EgfSeries& s) {
  json coeffs = json::array();
  for (const MultiPoly& p : s.coeffs()) coeffs.push_back(to_json(p));
  return {{"truncation_order", s.order()}, {"coeffs", coeffs}, {"convention", "ordinary"}};
}

inline json to_json(const AdmissibleMonomial& m) {
  json supp = json::array();
  for (const Block& b : m.support) supp.push_back(to_json(b));
  return {{"support", supp}, {"exponents", m.exponents}, {"chain", json::array()}, {"deltas", json::array()},
          {"qdeg", m.degree()}};
}

inline json to_json(const MaximalMonomial& m) {
  json supp = json::array();
  for (const SetPartition& p : m.support) supp.push_back(p.blocks());
  return {{"support", supp}, {"exponents", m.exponents}, {"chain", json::array()}, {"deltas", json::array()},
          {"qdeg", m.degree()}};
}

inline json to_json(const SupermaxBasisElement& e) {
  json j = to_json(e.eta);
  j["chain"] = to_json(e.chain);
  j["deltas"] = e.deltas;
  j["qdeg"] = e.degree();
  return j;
}

inline MultiPoly poly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("terms")) throw validation_error("polynomial JSON needs a \"terms\" array");
  MultiPoly p;
  for (const json& t : j.at("terms")) {
    const auto& e = t.at("exp");
    if (!e.is_array() || e.size() != 3) throw validation_error("term exponent must have three entries");
    mpq_class c(mpz_class(t.at("num").get<std::string>()), mpz_class(t.value("den", std::string("1"))));
    c.canonicalize();
    p.add_term({e[0].get<int>(), e[1].get<int>(), e[2].get<int>()}, c);
  }
  return p;
}

inline EgfSeries series_from_json(const json& j) {
  std::vector<MultiPoly> cs;
  for (const json& c : j.at("coeffs")) cs.push_back(poly_from_json(c));
  return EgfSeries(std::move(cs), j.at("truncation_order").get<int>());
}

inline std::vector<int> int_list(const json& j) {
  if (!j.is_array()) throw validation_error("expected an array of integers");
  std::vector<int> out;
  for (const json& x : j) {
    if (!x.is_number_integer()) throw validation_error("expected an integer, got " + x.dump());
    out.push_back(x.get<int>());
  }
  return out;
}

inline Block block_from_json(const json& j, int n) { return Block(int_list(j), n); }

inline NestedSet nested_from_json(const json& j, int n) {
  if (!j.is_array()) throw validation_error("nested set JSON must be an array of blocks");
  std::vector<Block> blocks;
  for (const json& b : j) blocks.push_back(block_from_json(b, n));
  return NestedSet(blocks, n);
}

inline ChainNested chain_from_json(const json& j, int n) {
  if (!j.is_array()) throw validation_error("chain JSON must be an array of nested sets");
  std::vector<NestedSet> links;
  for (const json& s : j) links.push_back(nested_from_json(s, n));
  return ChainNested(std::move(links), n);
}

inline SetPartition partition_from_json(const json& j) {
  if (!j.is_object() || !j.contains("ground") || !j.contains("blocks"))
    throw validation_error("partition JSON needs \"ground\" and \"blocks\"");
  std::vector<std::vector<int>> blocks;
  for (const json& b : j.at("blocks")) blocks.push_back(int_list(b));
  return SetPartition(blocks, j.at("ground").get<int>());
}

inline LabelledPartition labelled_partition_from_json(const json& j) {
  return LabelledPartition(partition_from_json(j), int_list(j.at("labels")));
}

/// "1 0 2 3" or a JSON array [1,0,2,3]: images of the domain in order.
inline std::vector<int> parse_images(const std::string& text) {
  std::string t = text;
  for (char& c : t)
    if (c == '[' || c == ']' || c == ',') c = ' ';
  std::istringstream is(t);
  std::vector<int> out;
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw validation_error("permutation entry '" + tok + "' is not an integer");
    }
    if (used != tok.size()) throw validation_error("permutation entry '" + tok + "' is not an integer");
    out.push_back(v);
  }
  return out;
}

}  // namespace wonderful::json_io
