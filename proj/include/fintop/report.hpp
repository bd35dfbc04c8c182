#pragma once

// Text and JSON renderings of analyses, axiom profiles and law reports.

#include <cstdio>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "fintop/axioms.hpp"
#include "fintop/catalog.hpp"
#include "fintop/generalized.hpp"
#include "fintop/render.hpp"
#include "fintop/semi.hpp"
#include "fintop/suite.hpp"

namespace fintop {

/// Everything `analyze` prints about one space.
struct SpaceAnalysis {
  SetFamily semi_open;
  SetFamily semi_closed;
  SetFamily lambda_s_sets;
  SetFamily v_s_sets;
  GeneralizedFamilies families;
  AxiomProfile profile;
};

inline SpaceAnalysis analyze_space(const FiniteSpace& space) {
  const SemiAnalysis semi(space);
  SpaceAnalysis out;
  out.semi_open = semi.semi_open();
  out.semi_closed = semi.semi_closed();
  out.lambda_s_sets = lambda_s_sets(semi);
  out.v_s_sets = v_s_sets(semi);
  out.families = generalized_families(semi);
  out.profile = axiom_profile(semi, out.families);
  return out;
}

namespace report_detail {

inline const char* flag(bool b) { return b ? "true" : "false"; }

inline std::string witness_text(const FiniteSpace& space, const AxiomWitness& w) {
  std::string out;
  if (w.point) out += "point " + space.name(*w.point);
  if (w.set) out += std::string(out.empty() ? "" : " in ") + "set " + render_set(space, *w.set);
  return out;
}

inline nlohmann::json family_json(const FiniteSpace& space, const SetFamily& family) {
  auto out = nlohmann::json::array();
  for (auto m : family) out.push_back(set_labels(space, m));
  return out;
}

}  // namespace report_detail

/// Flat key: value block, one line per axiom plus a witness line per failed axiom.
inline std::string render_profile_text(const FiniteSpace& space, const AxiomProfile& p) {
  std::ostringstream out;
  auto line = [&](const char* key, const AxiomResult& r) {
    out << key << ": " << report_detail::flag(r.holds) << "\n";
    if (r.witness) out << key << "_witness: " << report_detail::witness_text(space, *r.witness) << "\n";
  };
  line("t1", p.t1);
  line("r0", p.r0);
  line("semi_t1", p.semi_t1);
  line("semi_r0", p.semi_r0);
  line("semi_t_half", p.semi_t_half);
  return out.str();
}

inline nlohmann::json profile_json(const FiniteSpace& space, const AxiomProfile& p) {
  nlohmann::json out;
  auto put = [&](const char* key, const AxiomResult& r) {
    out[key] = r.holds;
    if (r.witness) {
      nlohmann::json w;
      if (r.witness->point) w["point"] = space.name(*r.witness->point);
      if (r.witness->set) w["set"] = set_labels(space, *r.witness->set);
      out[std::string(key) + "_witness"] = w;
    }
  };
  put("t1", p.t1);
  put("r0", p.r0);
  put("semi_t1", p.semi_t1);
  put("semi_r0", p.semi_r0);
  put("semi_t_half", p.semi_t_half);
  return out;
}

inline std::string render_analysis_text(const CatalogEntry& entry, const SpaceAnalysis& a) {
  const auto& s = entry.space;
  std::ostringstream out;
  out << "space: " << entry.id << "\n";
  out << "points: " << detail::render_plain(s.names(), s.universe()) << "\n";
  out << "opens: " << render_family(s, s.opens()) << "\n";
  out << "semi-open: " << render_family(s, a.semi_open) << "\n";
  out << "semi-closed: " << render_family(s, a.semi_closed) << "\n";
  out << "lambda_s-sets: " << render_family(s, a.lambda_s_sets) << "\n";
  out << "v_s-sets: " << render_family(s, a.v_s_sets) << "\n";
  out << "D^lambda_s: " << render_family(s, a.families.d_lambda) << "\n";
  out << "D^v_s: " << render_family(s, a.families.d_v) << "\n";
  out << "sg-closed: " << render_family(s, a.families.sg_closed) << "\n";
  out << render_profile_text(s, a.profile);
  return out.str();
}

inline nlohmann::json analysis_json(const CatalogEntry& entry, const SpaceAnalysis& a) {
  using report_detail::family_json;
  const auto& s = entry.space;
  nlohmann::json out;
  out["space"] = entry.id;
  out["points"] = s.names();
  out["opens"] = family_json(s, s.opens());
  out["semi_open"] = family_json(s, a.semi_open);
  out["semi_closed"] = family_json(s, a.semi_closed);
  out["lambda_s_sets"] = family_json(s, a.lambda_s_sets);
  out["v_s_sets"] = family_json(s, a.v_s_sets);
  out["d_lambda_s"] = family_json(s, a.families.d_lambda);
  out["d_v_s"] = family_json(s, a.families.d_v);
  out["sg_closed"] = family_json(s, a.families.sg_closed);
  out["axioms"] = profile_json(s, a.profile);
  return out;
}

inline std::string outcome_verdict(const LawOutcome& o) {
  if (o.status == LawStatus::ExpectedHolds) return o.failed == 0 ? "PASS" : "FAIL";
  if (o.stale_dispute) return "STALE-DISPUTE";
  if (o.dispute_confirmed) return "DISPUTED (counterexample reproduced)";
  return o.failed > 0 ? "DISPUTED (failures found)" : "DISPUTED (not refuted here)";
}

/// Human-readable report. Timing is left out so identical runs give identical bytes.
inline std::string render_report_text(const LawReport& r) {
  std::ostringstream out;
  out << "spaces examined: " << r.spaces_examined << "\n";
  out << "laws: " << r.laws.size() << "\n";
  for (const auto& o : r.laws) {
    out << o.law_id << " [" << to_string(o.status) << "] " << outcome_verdict(o) << "  examined="
        << o.examined << " passed=" << o.passed << " failed=" << o.failed << "\n";
    for (const auto& w : o.witnesses) {
      out << "  witness on " << w.space_id << ": " << w.explanation << "\n";
    }
  }
  std::size_t unexpected = 0;
  for (const auto& o : r.laws) unexpected += o.unexpected() ? 1 : 0;
  out << "result: " << (r.ok() ? "ok" : "unexpected failures") << " (" << unexpected
      << " law(s) unexpected)\n";
  return out.str();
}

inline nlohmann::json witness_json(const Witness& w) {
  return {{"law", w.law_id},       {"space", w.space_id},     {"sets", w.set_text},
          {"points", w.point_text}, {"explanation", w.explanation}, {"space_document", w.space_encoding}};
}

inline nlohmann::json report_json(const LawReport& r) {
  nlohmann::json laws = nlohmann::json::array();
  for (const auto& o : r.laws) {
    nlohmann::json witnesses = nlohmann::json::array();
    for (const auto& w : o.witnesses) witnesses.push_back(witness_json(w));
    laws.push_back({{"id", o.law_id},
                    {"status", to_string(o.status)},
                    {"verdict", outcome_verdict(o)},
                    {"examined", o.examined},
                    {"passed", o.passed},
                    {"failed", o.failed},
                    {"stale_dispute", o.stale_dispute},
                    {"witnesses", witnesses}});
  }
  return {{"spaces_examined", r.spaces_examined}, {"ok", r.ok()}, {"laws", laws}};
}

}  // namespace fintop
