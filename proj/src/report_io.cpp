#include "subsums/report_io.hpp"

#include <cstdio>

namespace subsums {

namespace {

Json enclosure_json(const Enclosure& e) { return Json::array({e.lo, e.hi}); }

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Json to_json(const Classification& c) {
  Json j;
  j["label"] = label_name(c.label);
  Json certs = Json::array();
  for (const auto& cert : c.certificates) {
    Json jc;
    jc["theorem"] = cert.theorem;
    jc["inequality"] = cert.inequality;
    jc["lhs"] = enclosure_json(cert.lhs);
    jc["rhs"] = enclosure_json(cert.rhs);
    certs.push_back(jc);
  }
  j["certificates"] = certs;
  j["notes"] = c.notes;
  return j;
}

Json to_json(const SumsetInfo& s) {
  Json j;
  j["card_sigma"] = s.card_sigma;
  j["n0"] = s.n0;
  j["n_star"] = s.n_star;
  if (s.card_sigma <= 4096) {
    j["sigma"] = s.sigma;
  }
  return j;
}

Json to_json(const CoverResult& c) {
  Json j;
  j["depth"] = c.depth;
  j["tail_hi"] = c.tail_hi;
  Json ivs = Json::array();
  for (const auto& iv : c.cover.intervals()) ivs.push_back(Json::array({iv.lo, iv.hi}));
  j["intervals"] = ivs;
  Json gaps = Json::array();
  for (const auto& g : c.gaps) gaps.push_back(Json::array({g.lo, g.hi}));
  j["gaps"] = gaps;
  j["total_length"] = c.total_length;
  j["point_count"] = c.point_count;
  return j;
}

Json to_json(const KakeyaScanSummary& s) {
  Json j;
  j["requested_horizon"] = s.requested_horizon;
  j["horizon"] = s.horizon;
  j["term_leq_tail"] = s.leq_count;
  j["term_gt_tail"] = s.gt_count;
  j["indeterminate"] = s.indeterminate_count;
  j["pattern"] = pattern_name(s.pattern);
  j["gt_residues"] = s.gt_residues;
  return j;
}

Json to_json(const std::vector<MeasurePoint>& m) {
  Json j = Json::array();
  for (const auto& p : m) {
    Json e;
    e["depth"] = p.depth;
    e["upper_bound"] = p.upper_bound;
    j.push_back(e);
  }
  return j;
}

Json to_json(const DimensionEstimate& d) {
  Json j;
  j["slope"] = d.slope;
  Json counts = Json::array();
  for (const auto& c : d.counts) {
    Json e;
    e["depth"] = c.depth;
    e["eps"] = c.eps;
    e["boxes"] = c.boxes;
    counts.push_back(e);
  }
  j["counts"] = counts;
  return j;
}

Json to_json(const SandwichReport& r) {
  Json j;
  j["horizon"] = r.horizon;
  Json chains = Json::array();
  for (std::size_t i = 0; i < r.which_chain.size(); ++i) {
    Json e;
    e["n"] = static_cast<long long>(i + 1);
    e["chain"] = chain_name(r.which_chain[i]);
    chains.push_back(e);
  }
  j["per_n"] = chains;
  j["chain_holds_at"] = r.chain_holds_at;
  if (r.chain_fails_at) {
    j["chain_fails_at"] = *r.chain_fails_at;
  } else {
    j["chain_fails_at"] = nullptr;
  }
  return j;
}

std::string to_csv(const CoverResult& c) {
  std::string out = "lo,hi\n";
  for (const auto& iv : c.cover.intervals()) {
    out += fmt(iv.lo) + "," + fmt(iv.hi) + "\n";
  }
  return out;
}

std::string to_csv(const std::vector<MeasurePoint>& m) {
  std::string out = "depth,upper_bound\n";
  for (const auto& p : m) {
    out += std::to_string(p.depth) + "," + fmt(p.upper_bound) + "\n";
  }
  return out;
}

std::string to_csv(const DimensionEstimate& d) {
  std::string out = "depth,eps,boxes\n";
  for (const auto& c : d.counts) {
    out += std::to_string(c.depth) + "," + fmt(c.eps) + "," + std::to_string(c.boxes) + "\n";
  }
  out += "slope," + fmt(d.slope) + "\n";
  return out;
}

std::string to_csv(const SandwichReport& r) {
  std::string out = "n,chain\n";
  for (std::size_t i = 0; i < r.which_chain.size(); ++i) {
    out += std::to_string(i + 1) + "," + chain_name(r.which_chain[i]) + "\n";
  }
  return out;
}

}  // namespace subsums
