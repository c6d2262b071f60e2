#include "cdg/report.hpp"

namespace cdg {

Json labeling_json(const Graph& g, const DivisorLabeling& labeling) {
  Json labels = Json::object();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) labels[g.label(v)] = labeling.labels.at(v).str();
  return Json{{"labels", labels}};
}

Json radical_graph_json(const RadicalGraph& rg) {
  Json edges = Json::array();
  for (auto [u, v] : rg.graph.edges()) edges.push_back({rg.radicals[u], rg.radicals[v]});
  return Json{{"radicals", rg.radicals}, {"edges", edges}};
}

Json verdict_json(const Graph& g, const Verdict& verdict) {
  Json j{{"is_divisor", verdict.is_divisor}, {"method", verdict.method}};
  if (verdict.certificate) {
    Json arcs = Json::array();
    for (auto [u, v] : verdict.certificate->orientation.arcs()) arcs.push_back({g.label(u), g.label(v)});
    j["certificate"] = Json{{"orientation", arcs},
                            {"labels", labeling_json(g, verdict.certificate->labeling)["labels"]}};
  }
  if (verdict.obstruction) {
    const auto& ob = *verdict.obstruction;
    Json o{{"kind", to_string(ob.kind)}, {"description", ob.description}};
    if (!ob.vertices.empty()) o["vertices"] = ob.vertices;
    if (!ob.arcs.empty()) {
      Json arcs = Json::array();
      for (const auto& [u, v] : ob.arcs) arcs.push_back({u, v});
      o["forcing_chain"] = arcs;
    }
    j["obstruction"] = o;
  }
  return j;
}

Json witness_json(const ObstructionWitness& witness) {
  return Json{{"kind", to_string(witness.kind)},
              {"primes", witness.primes},
              {"radicals", witness.radicals},
              {"description", witness.describe()}};
}

Json sporadic_json(const SporadicRecord& record) {
  return Json{{"name", record.name},
              {"verdict", record.verdict},
              {"provenance", to_string(record.provenance)},
              {"full_spectrum", record.full_spectrum},
              {"pi_e", record.pi_e},
              {"note", record.note}};
}

}  // namespace cdg
