#include "sdual/json_io.hpp"

namespace sdual {

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const TailSeq& t) {
  Json j;
  j["prefix"] = t.prefix();
  if (t.single_chain())
    j["tail_start"] = t.chain_starts()[0];
  else
    j["tail_starts"] = t.chain_starts();
  j["tail_step"] = t.step();
  return j;
}

Json to_json(const MarkedPartition& m) {
  Json j;
  j["group"] = to_string(m.group);
  j["lambda"] = to_json(m.lambda);
  Json eps = Json::object();
  for (const auto& [v, s] : m.eps) eps[std::to_string(v)] = s;
  j["eps"] = eps;
  if (m.group == GroupKind::SO) {
    if (m.tag == DegTag::None)
      j["degenerate"] = nullptr;
    else
      j["degenerate"] = m.tag == DegTag::Plus ? "plus" : "minus";
  }
  return j;
}

Json to_json(const Bipartition& b) {
  Json j;
  j["alpha"] = to_json(b.alpha);
  j["beta"] = to_json(b.beta);
  if (b.split)
    j["split"] = b.split;
  else
    j["split"] = nullptr;
  return j;
}

Json to_json(const FamilyKey& k) {
  return Json{{"group", to_string(k.group)},
              {"size", k.size},
              {"defect", k.defect}};
}

Json to_json(const Symbol& s) {
  Json j;
  j["A"] = to_json(s.A);
  j["B"] = to_json(s.B);
  j["defect"] = s.defect;
  j["ordered"] = s.ordered;
  auto [ra, rb] = to_classical_symbol(s);
  j["classical"] = Json{{"A", ra}, {"B", rb}};
  return j;
}

Json to_json(const DualOrbit& d) {
  Json j;
  j["lambda"] = to_json(d.lambda);
  Json eps = Json::object();
  for (const auto& [v, s] : d.merged_eps) eps[std::to_string(v)] = s;
  j["eps"] = eps;
  j["plus_min"] = to_json(d.plus_min);
  j["minus_min"] = to_json(d.minus_min);
  j["conflicts"] = d.conflicts;
  j["orbit_only"] = d.orbit_only;
  return j;
}

Json to_json(const VerifyReport& r) {
  return Json{{"group", r.group},     {"max_size", r.max_size},
              {"families", r.families}, {"pairs", r.pairs},
              {"issues", r.issues},   {"seconds", r.seconds},
              {"ok", r.ok()}};
}

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("partition JSON must be an array");
  std::vector<Int> parts;
  for (const auto& v : j) parts.push_back(v.get<Int>());
  return Partition(std::move(parts));
}

MarkedPartition marked_from_json(const Json& j) {
  GroupKind g = group_from_string(j.at("group").get<std::string>());
  Partition lambda = partition_from_json(j.at("lambda"));
  std::map<Int, int> eps;
  if (j.contains("eps"))
    for (auto it = j.at("eps").begin(); it != j.at("eps").end(); ++it)
      eps[std::stoll(it.key())] = it.value().get<int>();
  DegTag tag = DegTag::None;
  if (j.contains("degenerate") && !j.at("degenerate").is_null()) {
    std::string t = j.at("degenerate").get<std::string>();
    if (t == "plus")
      tag = DegTag::Plus;
    else if (t == "minus")
      tag = DegTag::Minus;
    else
      throw DomainError("degenerate tag must be \"plus\" or \"minus\"");
  }
  return MarkedPartition(g, std::move(lambda), std::move(eps), tag);
}

Bipartition bipartition_from_json(const Json& j) {
  Bipartition b;
  b.alpha = partition_from_json(j.at("alpha"));
  b.beta = partition_from_json(j.at("beta"));
  if (j.contains("split") && !j.at("split").is_null())
    b.split = j.at("split").get<int>();
  return b;
}

UnipotentParam unipotent_from_json(const Json& j) {
  std::vector<Int> gl;
  if (j.contains("gl_blocks"))
    for (const auto& v : j.at("gl_blocks")) gl.push_back(v.get<Int>());
  auto block = [&](const char* key) {
    if (!j.contains(key))
      return MarkedPartition(GroupKind::Sp, Partition{}, {});
    Json b = j.at(key);
    if (!b.contains("group")) b["group"] = "Sp";
    return marked_from_json(b);
  };
  return UnipotentParam(std::move(gl), block("plus"), block("minus"));
}

}  // namespace sdual
