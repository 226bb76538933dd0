#include "arrangio/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "arrangio/errors.hpp"

namespace arrangio {

using nlohmann::json;

namespace {

json field_to_json(const Field& f) {
  switch (f.kind()) {
    case FieldKind::rationals:
      return json("Q");
    case FieldKind::prime:
      return json{{"Fp", f.characteristic_p()}};
    case FieldKind::cyclotomic:
      return json{{"cyclotomic", f.cyclo_n()}};
  }
  throw CheckFailed("unhandled field kind");
}

FieldPtr field_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "Q") return Field::rationals();
    throw BadInputFile("unknown field designator \"" + j.get<std::string>() +
                       "\"");
  }
  if (j.is_object()) {
    if (j.contains("Fp")) {
      if (!j["Fp"].is_number_unsigned())
        throw BadInputFile("\"Fp\" wants an unsigned modulus");
      return Field::prime(j["Fp"].get<std::uint64_t>());
    }
    if (j.contains("cyclotomic")) {
      if (!j["cyclotomic"].is_number_unsigned())
        throw BadInputFile("\"cyclotomic\" wants an unsigned order");
      return Field::cyclotomic(j["cyclotomic"].get<unsigned>());
    }
  }
  throw BadInputFile("field must be \"Q\", {\"Fp\": p} or {\"cyclotomic\": n}");
}

json element_to_json(const FieldElement& e) {
  switch (e.field()->kind()) {
    case FieldKind::rationals:
      return json(std::get<Rational>(e.payload()).get_str());
    case FieldKind::prime:
      return json(std::to_string(std::get<std::uint64_t>(e.payload())));
    case FieldKind::cyclotomic: {
      json arr = json::array();
      for (const auto& c : std::get<std::vector<Rational>>(e.payload()))
        arr.push_back(c.get_str());
      return arr;
    }
  }
  throw CheckFailed("unhandled field kind");
}

FieldElement element_from_json(const FieldPtr& f, const json& j) {
  if (f->kind() == FieldKind::cyclotomic) {
    if (!j.is_array())
      throw BadInputFile("cyclotomic coefficients must be an array of "
                         "rational strings");
    std::vector<Rational> coeffs;
    for (const auto& c : j) {
      if (!c.is_string())
        throw BadInputFile("cyclotomic coefficient entries must be strings");
      coeffs.push_back(parse_rational(c.get<std::string>()));
    }
    return f->from_coeffs(std::move(coeffs));
  }
  if (!j.is_string())
    throw BadInputFile("field elements must be encoded as strings");
  return f->parse(j.get<std::string>());
}

json parse_document(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw BadInputFile("not valid JSON");
  return j;
}

std::string emit(json j, const ReportMeta& meta) {
  if (!meta.canonical) {
    json m;
    m["command"] = meta.command;
    if (!meta.input.empty()) m["input"] = meta.input;
    j["meta"] = std::move(m);
  }
  return j.dump(2) + "\n";
}

json point_strings(const std::vector<ProjPoint>& pts) {
  json arr = json::array();
  for (const auto& p : pts) arr.push_back(p.to_string());
  return arr;
}

json pair_list(const std::vector<std::pair<size_t, size_t>>& pairs) {
  json arr = json::array();
  for (const auto& [i, j] : pairs) arr.push_back(json::array({i, j}));
  return arr;
}

json trace_to_json(const std::vector<TraceStep>& trace) {
  json arr = json::array();
  for (const auto& st : trace) {
    json s;
    s["pair"] = json::array({st.i, st.j});
    s["pencil"] = st.t;
    s["slot"] = st.slot;
    s["value"] = element_to_json(st.value);
    arr.push_back(std::move(s));
  }
  return arr;
}

std::string pair_key(size_t i, size_t j) {
  return std::to_string(i) + "," + std::to_string(j);
}

}  // namespace

FieldPtr parse_field_flag(const std::string& flag) {
  if (flag == "Q") return Field::rationals();
  auto colon = flag.find(':');
  if (colon != std::string::npos) {
    const std::string head = flag.substr(0, colon);
    const std::string tail = flag.substr(colon + 1);
    try {
      if (head == "Fp") return Field::prime(std::stoull(tail));
      if (head == "cyclotomic")
        return Field::cyclotomic(unsigned(std::stoul(tail)));
    } catch (const std::logic_error&) {
      throw BadInputFile("malformed field designator \"" + flag + "\"");
    }
  }
  throw BadInputFile("field must be Q, Fp:<p> or cyclotomic:<n>, got \"" +
                     flag + "\"");
}

std::string field_flag_spec(const Field& f) {
  switch (f.kind()) {
    case FieldKind::rationals:
      return "Q";
    case FieldKind::prime:
      return "Fp:" + std::to_string(f.characteristic_p());
    case FieldKind::cyclotomic:
      return "cyclotomic:" + std::to_string(f.cyclo_n());
  }
  throw CheckFailed("unhandled field kind");
}

std::string arrangement_to_json(const Arrangement& a) {
  json j;
  j["field"] = field_to_json(*a.field());
  json lines = json::array();
  for (const auto& l : a.lines())
    lines.push_back(json::array(
        {element_to_json(l[0]), element_to_json(l[1]), element_to_json(l[2])}));
  j["lines"] = std::move(lines);
  return j.dump(2) + "\n";
}

Arrangement arrangement_from_json_text(const std::string& text) {
  json j = parse_document(text);
  if (!j.is_object() || !j.contains("field") || !j.contains("lines"))
    throw BadInputFile("arrangement document wants \"field\" and \"lines\"");
  FieldPtr f = field_from_json(j["field"]);
  if (!j["lines"].is_array())
    throw BadInputFile("\"lines\" must be an array of coordinate triples");
  std::vector<ProjLine> lines;
  for (const auto& entry : j["lines"]) {
    if (!entry.is_array() || entry.size() != 3)
      throw BadInputFile("each line wants exactly 3 coordinates");
    lines.emplace_back(element_from_json(f, entry[0]),
                       element_from_json(f, entry[1]),
                       element_from_json(f, entry[2]));
  }
  return Arrangement::build(std::move(lines));
}

std::string points_to_json(const PointConfig& pc) {
  json j;
  json pts = json::array();
  for (const auto& [x, y] : pc.points)
    pts.push_back(json::array({x.get_str(), y.get_str()}));
  j["points"] = std::move(pts);
  return j.dump(2) + "\n";
}

PointConfig points_from_json_text(const std::string& text) {
  json j = parse_document(text);
  if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
    throw BadInputFile("point document wants a \"points\" array");
  std::vector<std::pair<Rational, Rational>> pts;
  for (const auto& entry : j["points"]) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() ||
        !entry[1].is_string())
      throw BadInputFile("each point wants [\"x\", \"y\"] rational strings");
    pts.emplace_back(parse_rational(entry[0].get<std::string>()),
                     parse_rational(entry[1].get<std::string>()));
  }
  return make_point_config(std::move(pts));
}

std::string ssconfig_to_json(const SSConfig& cfg) {
  json j;
  j["m"] = cfg.m;
  json k = json::object();
  for (const auto& [pr, l] : cfg.k) k[pair_key(pr.first, pr.second)] = l;
  j["k"] = std::move(k);
  return j.dump(2) + "\n";
}

SSConfig ssconfig_from_json_text(const std::string& text) {
  json j = parse_document(text);
  if (!j.is_object() || !j.contains("m") || !j.contains("k") ||
      !j["m"].is_number_unsigned() || !j["k"].is_object())
    throw BadInputFile("labeling document wants \"m\" and a \"k\" object");
  std::map<std::pair<size_t, size_t>, size_t> k;
  for (const auto& [key, value] : j["k"].items()) {
    auto comma = key.find(',');
    size_t i = 0, jj = 0;
    try {
      if (comma == std::string::npos) throw std::invalid_argument(key);
      i = std::stoul(key.substr(0, comma));
      jj = std::stoul(key.substr(comma + 1));
    } catch (const std::logic_error&) {
      throw BadInputFile("pair key must be \"i,j\", got \"" + key + "\"");
    }
    if (!value.is_number_unsigned())
      throw BadInputFile("label for \"" + key + "\" must be an index");
    k[{i, jj}] = value.get<size_t>();
  }
  return make_config(j["m"].get<size_t>(), std::move(k));
}

std::string load_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw BadInputFile("cannot read \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void save_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw BadInputFile("cannot write \"" + path + "\"");
  out << text;
  if (!out) throw BadInputFile("short write to \"" + path + "\"");
}

Arrangement load_arrangement(const std::string& path) {
  return arrangement_from_json_text(load_text(path));
}
PointConfig load_points(const std::string& path) {
  return points_from_json_text(load_text(path));
}
SSConfig load_ssconfig(const std::string& path) {
  return ssconfig_from_json_text(load_text(path));
}

std::string stats_report_json(const Arrangement& a, const ReportMeta& meta) {
  const auto st = stats(a);
  json j;
  j["field"] = field_to_json(*a.field());
  j["n"] = st.n;
  j["rank"] = st.rank;
  j["m_max"] = st.m_max;
  j["sing_total"] = st.sing_total;
  json tk = json::object();
  for (const auto& [k, c] : st.t_k) tk[std::to_string(k)] = c;
  j["t_k"] = std::move(tk);
  j["modular_points"] = point_strings(st.modular);
  j["supersolvable"] = st.supersolvable;
  if (st.rank == 3 && st.supersolvable) {
    const auto ss = is_supersolvable(a);
    j["witness"] = ss.witness->to_string();
    j["witness_multiplicity"] = ss.witness_multiplicity;
  }
  return emit(std::move(j), meta);
}

std::string theorem_report_json(const TheoremReport& r,
                                const ReportMeta& meta) {
  json j;
  j["arrangement_id"] = r.arrangement_id;
  j["all_hold"] = r.all_hold();
  json checks = json::array();
  for (const auto& c : r.checks) {
    json e;
    e["name"] = c.name;
    e["hypothesis_met"] = c.hypothesis_met;
    e["lhs"] = c.lhs;
    e["rhs"] = c.rhs.get_str();
    e["holds"] = c.holds;
    e["equality"] = c.equality;
    e["note"] = c.note;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  return emit(std::move(j), meta);
}

std::string slope_report_json(const SlopeReport& r, const ReportMeta& meta) {
  json j;
  j["n"] = r.n;
  j["w"] = r.w;
  j["directions"] = point_strings(r.directions);
  j["lines_determined"] = r.lines_determined;
  j["apd_size"] = r.apd_size;
  j["m_apd"] = r.m_apd;
  j["m_pmod"] = r.m_pmod;
  j["slope_bound"] = r.slope_bound;
  j["apd_supersolvable"] = r.apd_supersolvable;
  j["prop_lower_bound"] = r.prop_lower_bound;
  j["sides_agree"] = r.sides_agree;
  j["holds"] = r.holds;
  return emit(std::move(j), meta);
}

std::string nbc_report_json(const OrderedArrangement& oa,
                            const NbcPairSet& full, const NbcPairSet& quad,
                            const ReportMeta& meta) {
  json j;
  j["n"] = oa.arrangement.size();
  j["order"] = oa.order;
  j["nbc_pairs"] = pair_list(full.pairs);
  j["nbc_count"] = full.pairs.size();
  j["quadratic_pairs"] = pair_list(quad.pairs);
  j["quadratic_count"] = quad.pairs.size();
  return emit(std::move(j), meta);
}

std::string equiv_report_json(const Equiv2mVerdict& v, const ReportMeta& meta) {
  json j;
  j["equivalent"] = v.equivalent;
  j["witness"] = v.witness;
  j["detail"] = v.detail;
  return emit(std::move(j), meta);
}

std::string validation_report_json(const SSConfig& cfg,
                                   const ValidationReport& r,
                                   const ReportMeta& meta) {
  json j;
  j["m"] = cfg.m;
  j["well_defined"] = r.well_defined;
  j["closed"] = r.closed;
  j["surjective"] = r.surjective;
  j["valid"] = r.valid(false);
  json v = json::array();
  for (const auto& viol : r.violations) {
    json e;
    e["i"] = viol.i;
    e["j"] = viol.j;
    e["l"] = viol.l;
    e["reason"] = viol.reason;
    v.push_back(std::move(e));
  }
  j["violations"] = std::move(v);
  return emit(std::move(j), meta);
}

std::string search_report_json(const SearchResult& r, const ReportMeta& meta) {
  json j;
  j["m"] = r.m;
  j["require_surjective"] = r.require_surjective;
  j["exhausted"] = r.exhausted;
  j["labelings"] = r.labelings;
  j["work"] = r.work;
  json classes = json::array();
  for (const auto& c : r.classes) {
    json e;
    json k = json::object();
    for (const auto& [pr, l] : c.canonical.k)
      k[pair_key(pr.first, pr.second)] = l;
    e["labels"] = std::move(k);
    e["orbit_size"] = c.orbit_size;
    e["surjective"] = c.surjective;
    e["is_bm"] = c.is_bm;
    e["contains"] = c.contains;
    classes.push_back(std::move(e));
  }
  j["classes"] = std::move(classes);
  return emit(std::move(j), meta);
}

std::string solve_report_json(const SSConfig& cfg, const SolveResult& r,
                              const ClaimTrace* claim, const ReportMeta& meta) {
  json j;
  j["m"] = cfg.m;
  switch (r.outcome) {
    case SolveOutcome::realized: {
      j["outcome"] = "realized";
      const auto& real = *r.realization;
      j["field"] = field_to_json(*real.field);
      json coords = json::array();
      for (const auto& [a, b] : real.coords)
        coords.push_back(json::array({element_to_json(a), element_to_json(b)}));
      j["coords"] = std::move(coords);
      j["verified"] = verify_realization(cfg, real);
      break;
    }
    case SolveOutcome::refuted: {
      j["outcome"] = "refuted";
      const auto& cert = *r.refutation;
      j["field"] = field_to_json(*cert.field);
      json c;
      c["kind"] = cert.kind;
      c["normalization"] = cert.normalization;
      c["source"] = json::array({cert.source_i, cert.source_j, cert.source_t});
      c["delta_pair"] =
          json::array({cert.delta_pair.first, cert.delta_pair.second});
      c["coefficient"] = element_to_json(cert.coefficient);
      c["trace"] = trace_to_json(cert.trace);
      c["replays"] = verify_refutation(cfg, cert);
      j["refutation"] = std::move(c);
      break;
    }
    case SolveOutcome::inconclusive: {
      j["outcome"] = "inconclusive";
      const auto& st = *r.stall;
      j["undetermined"] = st.undetermined;
      j["trace"] = trace_to_json(st.trace);
      break;
    }
  }
  if (claim) {
    json c;
    c["m"] = claim->m;
    json steps = json::array();
    for (const auto& s : claim->steps) {
      json e;
      e["i"] = s.i;
      e["lhs"] = s.lhs.get_str();
      e["rhs"] = s.rhs.get_str();
      e["holds"] = s.holds;
      steps.push_back(std::move(e));
    }
    c["steps"] = std::move(steps);
    c["final_coefficient"] = claim->final_coefficient.get_str();
    c["holds"] = claim->holds;
    j["chain"] = std::move(c);
  }
  return emit(std::move(j), meta);
}

}  // namespace arrangio
