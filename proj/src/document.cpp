#include "onefact/document.hpp"

#include "json.hpp"

namespace onefact {

using json = nlohmann::json;

std::string serialize_document(const MultiFactorization &mf) {
  json factors = json::array();
  for (const auto &f : mf.factors()) {
    json edges = json::array();
    for (const auto &e : f.edges())
      edges.push_back({e.u, e.v});
    factors.push_back(std::move(edges));
  }
  const auto &info = mf.model();
  json model{{"kind", model_kind_name(info.kind)}};
  if (info.kind == ModelKind::Cyclic) {
    model["n"] = mf.n();
    model["starters"] = info.starters;
    if (info.joined_orbit)
      model["b"] = *info.joined_orbit;
  } else if (info.kind == ModelKind::Field) {
    model["p"] = info.p;
    model["m"] = info.m;
    model["modulus"] = info.modulus;
  }
  json doc{{"format", 1},
           {"n", mf.n()},
           {"lambda", mf.lambda()},
           {"model", std::move(model)},
           {"factors", std::move(factors)}};
  return doc.dump();
}

MultiFactorization parse_document(const std::string &text) {
  try {
    const json doc = json::parse(text);
    if (doc.at("format").get<int>() != 1)
      throw Error(ErrorCode::ParseError, "unsupported document format");
    const int n = doc.at("n").get<int>();
    const int lambda = doc.at("lambda").get<int>();
    if (n < 1 || lambda < 1)
      throw Error(ErrorCode::ParseError, "n and lambda must be positive");

    ModelInfo info;
    const auto &model = doc.at("model");
    const auto kind = model.at("kind").get<std::string>();
    if (kind == "cyclic") {
      info.kind = ModelKind::Cyclic;
      info.starters = model.value("starters", std::vector<std::vector<int>>{});
      if (model.contains("b"))
        info.joined_orbit = model.at("b").get<int>();
    } else if (kind == "field") {
      info.kind = ModelKind::Field;
      info.p = model.at("p").get<int>();
      info.m = model.at("m").get<int>();
      info.modulus = model.at("modulus").get<std::vector<int>>();
    } else if (kind == "plain") {
      info.kind = ModelKind::Plain;
    } else {
      throw Error(ErrorCode::ParseError, "unknown model kind '" + kind + "'");
    }

    std::vector<OneFactor> factors;
    for (const auto &f : doc.at("factors")) {
      std::vector<Edge> edges;
      for (const auto &e : f) {
        if (!e.is_array() || e.size() != 2)
          throw Error(ErrorCode::ParseError, "edge must be a pair of vertex ids");
        edges.push_back(Edge{e[0].get<VertexId>(), e[1].get<VertexId>()});
      }
      try {
        factors.push_back(canonicalize_factor(edges, n));
      } catch (const Error &err) {
        throw Error(ErrorCode::ParseError, std::string("factor ") + std::to_string(factors.size()) +
                                               ": " + err.what());
      }
    }
    return MultiFactorization(n, lambda, std::move(factors), std::move(info));
  } catch (const json::exception &e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

} // namespace onefact
