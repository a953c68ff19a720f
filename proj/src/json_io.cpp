#include "mra/json_io.hpp"

#include <bit>
#include <cctype>
#include <stdexcept>

namespace mra {

nlohmann::json mrel_to_json(const Mrel& r) {
  const auto& u = r.universe();
  nlohmann::json j;
  j["universe"] = u->names();
  auto& pairs = j["pairs"] = nlohmann::json::array();
  for (const auto& p : r.pairs()) {
    nlohmann::json targets = nlohmann::json::array();
    for (StateSet rest = p.targets; rest != 0; rest &= rest - 1)
      targets.push_back(u->name(std::countr_zero(rest)));
    pairs.push_back(nlohmann::json::array({u->name(p.src), std::move(targets)}));
  }
  return j;
}

namespace {

Mrel pairs_from_json(const UniversePtr& u, const nlohmann::json& j) {
  if (!j.contains("pairs") || !j["pairs"].is_array())
    throw std::invalid_argument("multirelation JSON needs a \"pairs\" array");
  std::vector<MPair> ps;
  for (const auto& e : j["pairs"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_array())
      throw std::invalid_argument("each pair must be [\"label\", [labels...]]");
    StateSet set = 0;
    for (const auto& t : e[1]) set |= 1u << u->index_of(t.get<std::string>());
    ps.push_back({static_cast<std::uint16_t>(u->index_of(e[0].get<std::string>())),
                  static_cast<std::uint16_t>(set)});
  }
  return Mrel(u, std::move(ps));
}

}  // namespace

Mrel mrel_from_json(const UniversePtr& u, const nlohmann::json& j) {
  if (j.contains("universe")) {
    const auto names = j["universe"].get<std::vector<std::string>>();
    if (names != u->names())
      throw std::invalid_argument("universe mismatch between document and context");
  }
  return pairs_from_json(u, j);
}

std::pair<UniversePtr, Mrel> mrel_from_json(const nlohmann::json& j) {
  if (!j.contains("universe"))
    throw std::invalid_argument("multirelation JSON needs a \"universe\" array");
  auto u = make_universe(j["universe"].get<std::vector<std::string>>());
  return {u, pairs_from_json(u, j)};
}

Mrel parse_mrel_literal(const UniversePtr& u, std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& msg) -> void {
    throw std::invalid_argument("bad multirelation literal at position " +
                                std::to_string(pos) + ": " + msg);
  };
  auto eat = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  };
  auto label = [&]() -> std::string {
    skip();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (pos == start) fail("expected an element label");
    return std::string(text.substr(start, pos - start));
  };

  skip();
  bool angle = pos < text.size() && text[pos] == '<';
  if (angle) ++pos;
  eat('{');
  std::vector<MPair> ps;
  skip();
  if (pos < text.size() && text[pos] == '}') {
    ++pos;
  } else {
    for (;;) {
      eat('(');
      const int src = u->index_of(label());
      eat(',');
      eat('{');
      StateSet set = 0;
      skip();
      if (pos < text.size() && text[pos] == '}') {
        ++pos;
      } else {
        for (;;) {
          set |= 1u << u->index_of(label());
          skip();
          if (pos < text.size() && text[pos] == ',') {
            ++pos;
            continue;
          }
          eat('}');
          break;
        }
      }
      eat(')');
      ps.push_back({static_cast<std::uint16_t>(src), static_cast<std::uint16_t>(set)});
      skip();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      eat('}');
      break;
    }
  }
  if (angle) eat('>');
  skip();
  if (pos != text.size()) fail("trailing input");
  return Mrel(u, std::move(ps));
}

}  // namespace mra
