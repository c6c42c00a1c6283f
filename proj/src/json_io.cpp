#include "liouville/json_io.hpp"

#include "liouville/error.hpp"

namespace liouville {

namespace {

template <typename F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(Errc::Parse, e.what());
  }
}

Json rows_to_json(const CandidateSet& v) {
  Json rows = Json::array();
  for (const auto& row : v.rows()) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(x.get_str());
    rows.push_back(std::move(r));
  }
  return rows;
}

CandidateSet rows_from_json(const Json& j) {
  std::vector<Row> rows;
  for (const auto& r : j) {
    Row row;
    for (const auto& x : r) {
      const auto q = parse_rational(x.is_string() ? x.get<std::string>() : x.dump());
      if (q.get_den() != 1) throw Error(Errc::Parse, "row entries must be integers");
      row.push_back(q.get_num());
    }
    rows.push_back(std::move(row));
  }
  const auto dim = rows.empty() ? 0 : rows.front().size();
  return CandidateSet(dim, std::move(rows));
}

}  // namespace

Json to_json(const PLMap& g) {
  Json anchors = Json::array();
  for (const auto& a : g.anchors()) anchors.push_back({a.x.to_string(), a.y.to_string()});
  return {{"anchors", std::move(anchors)}, {"left_exp", g.left_exp()}, {"right_exp", g.right_exp()}};
}

PLMap plmap_from_json(const Json& j) {
  return guarded([&] {
    std::vector<Anchor> anchors;
    for (const auto& a : j.at("anchors")) {
      anchors.push_back({Dyadic::parse(a.at(0).get<std::string>()), Dyadic::parse(a.at(1).get<std::string>())});
    }
    return PLMap::make(std::move(anchors), j.at("left_exp").get<std::int64_t>(),
                       j.at("right_exp").get<std::int64_t>());
  });
}

Json to_json(const PointSet& x) {
  Json pts = Json::array();
  for (const auto& p : x) pts.push_back(p.to_string());
  return pts;
}

PointSet point_set_from_json(const Json& j) {
  return guarded([&] {
    std::vector<Dyadic> pts;
    for (const auto& p : j) pts.push_back(Dyadic::parse(p.get<std::string>()));
    return PointSet(std::move(pts));
  });
}

Json to_json(const CoFolnerCertificate& cert) {
  Json e = Json::array();
  for (const auto& g : cert.E) e.push_back(to_json(g));
  Json f = Json::array();
  for (const auto& x : cert.F) f.push_back(to_json(x));
  Json j = {{"E", std::move(e)},
            {"F", std::move(f)},
            {"epsilon", to_string(cert.epsilon)},
            {"achieved", to_string(cert.achieved)},
            {"verified", cert.verified},
            {"semantics", cert.semantics == Semantics::Multiset ? "multiset" : "set"}};
  if (cert.pipeline) {
    const auto& p = *cert.pipeline;
    Json history = Json::array();
    for (const auto& s : p.history) {
      history.push_back({{"L", s.L}, {"N", s.N}, {"achieved", to_string(s.achieved)}});
    }
    Json pipe = {{"group", p.group},     {"i_scale", p.i_scale}, {"L", p.L},
                 {"N", p.N},             {"r", p.r},             {"history", std::move(history)},
                 {"status", p.status}};
    if (p.conjugator) pipe["conjugator"] = to_json(*p.conjugator);
    j["pipeline"] = std::move(pipe);
  }
  return j;
}

CoFolnerCertificate certificate_from_json(const Json& j) {
  return guarded([&] {
    CoFolnerCertificate cert;
    for (const auto& g : j.at("E")) cert.E.push_back(plmap_from_json(g));
    for (const auto& x : j.at("F")) cert.F.push_back(point_set_from_json(x));
    cert.epsilon = parse_rational(j.at("epsilon").get<std::string>());
    cert.achieved = parse_rational(j.at("achieved").get<std::string>());
    cert.verified = j.at("verified").get<bool>();
    cert.semantics = j.value("semantics", std::string("multiset")) == "set" ? Semantics::Set
                                                                             : Semantics::Multiset;
    if (j.contains("pipeline")) {
      const auto& p = j.at("pipeline");
      PipelineInfo info;
      info.group = p.at("group").get<std::string>();
      info.i_scale = p.at("i_scale").get<std::int64_t>();
      info.L = p.at("L").get<std::uint64_t>();
      info.N = p.at("N").get<std::uint64_t>();
      info.r = p.at("r").get<std::vector<std::int64_t>>();
      info.status = p.at("status").get<std::string>();
      for (const auto& s : p.at("history")) {
        info.history.push_back({s.at("L").get<std::uint64_t>(), s.at("N").get<std::uint64_t>(),
                                parse_rational(s.at("achieved").get<std::string>())});
      }
      if (p.contains("conjugator")) info.conjugator = plmap_from_json(p.at("conjugator"));
      cert.pipeline = std::move(info);
    }
    return cert;
  });
}

Json to_json(const SearchResult& r) {
  Json j = {{"objective", r.objective},
            {"bounds", {{"B", r.bounds.B}, {"k", r.bounds.k}, {"d", r.bounds.d}}},
            {"best_ratio", to_string(r.best_ratio)},
            {"best_set", rows_to_json(r.best_set)},
            {"method", to_string(r.method)},
            {"seed", r.seed ? Json(*r.seed) : Json(nullptr)},
            {"rows", r.rows == RowSpace::Full ? "full" : "diagonal"},
            {"intersection", r.mode == IntersectionMode::Weak ? "weak" : "matched-rows"},
            {"evaluated", r.evaluated}};
  if (r.method == SearchMethod::Exhaustive) {
    j["claim"] = "exact maximum within the stated bounds only";
  } else {
    j["claim"] = "best found by a heuristic; not a certified maximum";
  }
  return j;
}

SearchResult search_result_from_json(const Json& j) {
  return guarded([&] {
    SearchResult r;
    r.objective = j.at("objective").get<std::string>();
    const auto& b = j.at("bounds");
    r.bounds = {b.at("B").get<std::uint64_t>(), b.at("k").get<std::uint64_t>(),
                b.at("d").get<std::size_t>()};
    r.best_ratio = parse_rational(j.at("best_ratio").get<std::string>());
    r.best_set = rows_from_json(j.at("best_set"));
    r.method = j.at("method").get<std::string>() == "anneal" ? SearchMethod::Anneal
                                                             : SearchMethod::Exhaustive;
    if (j.contains("seed") && !j.at("seed").is_null()) r.seed = j.at("seed").get<std::uint64_t>();
    r.rows = j.value("rows", std::string("full")) == "diagonal" ? RowSpace::Diagonal : RowSpace::Full;
    r.mode = j.value("intersection", std::string("weak")) == "weak" ? IntersectionMode::Weak
                                                                     : IntersectionMode::MatchedRows;
    r.evaluated = j.value("evaluated", std::uint64_t{0});
    return r;
  });
}

Json to_json(const EmpiricalDistribution& d, const std::string& measure_description) {
  Json counts = Json::object();
  for (const auto& [x, c] : d.counts) counts[x.to_string()] = c;
  return {{"counts", std::move(counts)},
          {"trials", d.trials},
          {"k", d.step},
          {"start", to_json(d.start)},
          {"seed", d.seed},
          {"measure", measure_description},
          {"convention", "left increments: z_k = g_k ... g_1 x"}};
}

std::string dump(const Json& j) { return j.dump(1) + "\n"; }

}  // namespace liouville
