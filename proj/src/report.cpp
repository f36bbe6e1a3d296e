#include "surdbits/report.hpp"

namespace surdbits {

Json rational_json(const Rational& r) {
  Json j;
  j["num"] = r.get_num().get_str();
  j["den"] = r.get_den().get_str();
  return j;
}

Json nat_json(const Nat& v) {
  if (v.value().fits_ulong_p()) return Json(v.value().get_ui());
  return Json(v.str());
}

Json surd_json(const QuadraticSurd& x) {
  Json j;
  j["p"] = x.p().get_str();
  j["q"] = x.q().get_str();
  j["s"] = nat_json(x.s());
  j["t"] = x.t();
  return j;
}

Json pair_json(const PerturbationPair& pair) {
  Json j;
  if (pair.omega() == lambda_of(pair.omega().s())) {
    j["s"] = nat_json(pair.omega().s());
  } else {
    j["surd"] = surd_json(pair.omega());
  }
  Json flips = Json::array();
  for (const Flip& f : pair.flips()) flips.push_back(Json::array({f.j, f.dx}));
  j["flips"] = std::move(flips);
  return j;
}

Json frequency_json(const FrequencyPoint& p) {
  Json j;
  j["n"] = p.n;
  j["ones"] = p.ones;
  j["f"] = rational_json(p.f);
  return j;
}

Json report_json(const DifferenceReport& rep, const PerturbationPair& pair) {
  Json j;
  j["op"] = rep.op;
  j["pair"] = pair_json(pair);
  if (rep.n_list.empty()) {
    j["n"] = rep.n;
  } else {
    j["n_list"] = rep.n_list;
  }
  if (rep.k) j["k"] = *rep.k;
  if (rep.j) j["j"] = *rep.j;
  if (rep.dx) j["dx"] = *rep.dx;
  j["convention"] = rep.convention;
  if (rep.op != "decay") j["total"] = rational_json(rep.total);

  Json entries = Json::array();
  for (const DiffEntry& e : rep.entries) {
    Json row = Json::array({e.i, e.du, rational_json(e.value)});
    if (e.factor) row.push_back(rational_json(*e.factor));
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  Json sums = Json::array();
  for (const Rational& r : rep.partial_sums) sums.push_back(rational_json(r));
  j["partial_sums"] = std::move(sums);

  if (rep.support_bound) j["support_bound"] = *rep.support_bound;
  if (rep.predicted_support) j["predicted_support"] = *rep.predicted_support;
  if (rep.n_max) j["n_max"] = *rep.n_max;
  if (rep.head_max) j["head_max"] = rational_json(*rep.head_max);
  if (rep.tail_max) j["tail_max"] = rational_json(*rep.tail_max);
  if (!rep.variants.empty()) {
    Json vs = Json::array();
    for (const VariantEntry& v : rep.variants) {
      Json row;
      row["pattern"] = v.pattern;
      row["h"] = rational_json(v.h_value);
      row["delta"] = rational_json(v.delta);
      vs.push_back(std::move(row));
    }
    j["variants"] = std::move(vs);
  }
  if (rep.claim) {
    Json claim;
    claim["source"] = rep.claim->source;
    claim["expected"] = rational_json(rep.claim->expected);
    j["claim"] = std::move(claim);
  }
  j["computed"] = rational_json(rep.computed);
  j["verdict"] = rep.verdict;
  j["trivial"] = rep.trivial;
  Json checks = Json::object();
  for (const NamedCheck& c : rep.checks) checks[c.name] = c.passed;
  j["checks"] = std::move(checks);
  return j;
}

}  // namespace surdbits
