#include "moore/report_json.hpp"

#include <algorithm>

namespace moore::report {

ordered_json elem(const FieldCtx& ctx, FFElem x) { return ctx.digits(x); }

ordered_json elems(const FieldCtx& ctx, const std::vector<FFElem>& xs) {
  ordered_json out = ordered_json::array();
  for (FFElem x : xs) out.push_back(elem(ctx, x));
  return out;
}

ordered_json big(const BigInt& v) { return v.str(); }

ordered_json rational(const BigRational& v) {
  return ordered_json{{"exact", to_string(v)}, {"approx", static_cast<double>(v)}};
}

ordered_json exponents(const ExponentSet& I) { return I.exps; }

ordered_json field(const FieldCtx& ctx) {
  ordered_json j;
  j["p"] = ctx.p();
  j["e"] = ctx.e();
  j["q"] = ctx.q();
  j["n"] = ctx.n();
  j["order"] = ctx.order();
  j["base_modulus"] = ctx.base().modulus();
  j["ext_modulus"] = ctx.ext_modulus();
  j["tables"] = ctx.has_tables();
  return j;
}

ordered_json engine_run(const FieldCtx& ctx, const EngineRun& run) {
  ordered_json j;
  j["is_moore"] = run.is_moore;
  j["work"] = run.work;
  j["total"] = run.total;
  j["witness_index"] = run.witness_index ? ordered_json(*run.witness_index) : ordered_json(nullptr);
  j["witness"] = run.witness ? elems(ctx, run.witness->tuple) : ordered_json(nullptr);
  return j;
}

ordered_json verdict(const FieldCtx& ctx, const MooreVerdict& v) {
  ordered_json j;
  j["is_moore"] = v.is_moore;
  j["method"] = method_name(v.method);
  j["work"] = v.work;
  j["witness"] = v.witness ? elems(ctx, v.witness->tuple) : ordered_json(nullptr);
  ordered_json engines = ordered_json::object();
  if (v.kernel) engines["kernel"] = engine_run(ctx, *v.kernel);
  if (v.det) engines["det"] = engine_run(ctx, *v.det);
  j["engines"] = engines;
  j["engines_agree"] = v.engines_agree;
  return j;
}

ordered_json search(const FieldCtx& ctx, const SearchReport& s) {
  ordered_json j;
  j["k"] = s.k;
  ordered_json classes = ordered_json::array();
  for (const auto& c : s.classes) {
    ordered_json row;
    row["I"] = exponents(c.representative);
    row["is_moore"] = c.verdict.is_moore;
    row["work"] = c.verdict.work;
    row["witness"] = c.verdict.witness ? elems(ctx, c.verdict.witness->tuple) : ordered_json(nullptr);
    classes.push_back(row);
  }
  j["classes"] = classes;
  j["moore_classes"] = std::count_if(s.classes.begin(), s.classes.end(),
                                     [](const ClassResult& c) { return c.verdict.is_moore; });
  ordered_json orbits = ordered_json::array();
  for (const auto& o : s.multiplier_orbits) {
    ordered_json members = ordered_json::array();
    for (std::size_t m : o.members) members.push_back(exponents(s.classes[m].representative));
    orbits.push_back(ordered_json{{"members", members}, {"verdicts_coincide", o.verdicts_coincide}});
  }
  j["multiplier_orbits"] = orbits;
  return j;
}

ordered_json distance(const FieldCtx& ctx, const DistanceReport& d) {
  ordered_json j;
  j["min_rank_distance"] = d.min_rank_distance;
  j["singleton"] = d.singleton;
  j["is_mrd"] = d.is_mrd;
  j["codewords"] = d.codewords;
  j["min_codeword"] = elems(ctx, d.min_codeword);
  return j;
}

ordered_json idealisers(const IdealiserDims& d) { return ordered_json{{"left", d.left}, {"right", d.right}}; }

ordered_json point_count(const PointCountReport& r) {
  ordered_json j;
  j["n_points"] = r.n_points;
  j["n_F_zero"] = r.n_F_zero;
  j["n_dep"] = r.n_dep;
  j["n_witness"] = r.n_witness;
  j["formula_dep"] = big(r.formula_dep);
  j["match"] = r.match;
  return j;
}

ordered_json hw_bound(const HwBound& b) {
  return ordered_json{{"ell", big(b.ell)}, {"bound", big(b.bound)}, {"relaxed", big(b.relaxed)}};
}

ordered_json borges(const BorgesReport& r) {
  ordered_json j;
  j["q"] = r.q;
  j["i"] = r.i;
  j["j"] = r.j;
  j["m"] = r.m;
  j["H_degree"] = r.H.degree();
  j["H_terms"] = r.H.size();
  j["points_searched"] = r.points_searched;
  j["intersection_count"] = r.intersection_count;
  j["formula"] = big(r.formula.value);
  j["formula_hypotheses_hold"] = r.formula.hypotheses_hold;
  j["count_matches"] = r.count_matches;
  j["intersection_outside_locus"] = r.intersection_outside_locus;
  j["locus_points"] = r.locus_points;
  j["locus_singular"] = r.locus_singular;
  j["locus_all_singular"] = r.locus_all_singular;
  j["singular_total"] = r.singular_total;
  return j;
}

ordered_json ap_info(const ApInfo& a) {
  ordered_json j;
  j["is_ap"] = a.is_ap;
  j["difference"] = a.is_ap ? ordered_json(a.difference) : ordered_json(nullptr);
  j["shift"] = a.is_ap ? ordered_json(a.shift) : ordered_json(nullptr);
  j["coprime_difference"] = a.coprime ? ordered_json(a.coprime_difference) : ordered_json(nullptr);
  return j;
}

ordered_json bezout(const BezoutGap& g) {
  ordered_json j;
  j["tau"] = rational(g.tau);
  j["b_tau"] = rational(g.b_tau);
  j["d"] = big(g.d);
  j["two_ninths_d2"] = rational(g.two_ninths_d2);
  j["gap"] = rational(g.gap);
  j["gap_positive"] = g.gap > 0;
  j["tau_le_b_tau"] = g.tau <= g.b_tau;
  return j;
}

ordered_json zahid(const ZahidThresholds& z) {
  ordered_json j;
  j["t0_lower"] = static_cast<double>(z.t0_lower);
  j["t0_upper"] = static_cast<double>(z.t0_upper);
  j["t0_exact"] = z.t0_exact ? ordered_json(to_string(*z.t0_exact)) : ordered_json(nullptr);
  j["t1"] = rational(z.t1);
  return j;
}

ordered_json bounds(const BoundsReport& b) {
  ordered_json j;
  j["q"] = b.q;
  j["n"] = b.I.n == 0 ? ordered_json(nullptr) : ordered_json(b.I.n);
  j["I"] = exponents(b.I);
  j["ap"] = ap_info(b.ap);
  j["case"] = b.case_label ? ordered_json(case_name(*b.case_label)) : ordered_json(nullptr);
  if (b.curve) {
    j["curve_threshold"] = b.curve->N;
    j["curve_applicable"] = b.curve->j_neq_2i;
    j["curve_gcd_trigger"] = b.curve_gcd_trigger;
  }
  if (b.ell) j["ell"] = big(*b.ell);
  if (b.ell_prime) j["ell_prime"] = big(*b.ell_prime);
  if (b.general_threshold) j["general_threshold"] = *b.general_threshold;
  if (b.zahid) {
    j["zahid_f"] = b.zahid_f;
    j["zahid_e"] = b.zahid_e;
    j["zahid"] = zahid(*b.zahid);
  }
  if (b.bezout) j["bezout"] = bezout(*b.bezout);
  j["known_family"] = family_name(b.known_family);
  return j;
}

ordered_json theorem(const TheoremHit& t) {
  ordered_json j;
  j["theorem"] = t.theorem;
  j["trigger"] = t.trigger;
  j["rotation"] = exponents(t.rotation);
  j["threshold"] = t.threshold;
  j["case"] = case_name(t.case_label);
  return j;
}

ordered_json final_report(const FieldCtx& ctx, const FinalReport& r) {
  ordered_json j;
  j["verdict"] = verdict_name(r.verdict);
  j["known_family"] = family_name(r.family);
  j["theorem"] = r.theorem ? theorem(*r.theorem) : ordered_json(nullptr);
  j["engine_within_budget"] = r.engine_within_budget;
  j["engine"] = r.engine ? verdict(ctx, *r.engine) : ordered_json(nullptr);
  j["consistent"] = r.consistent;
  return j;
}

ordered_json z_certificate(const FieldCtx& ctx, const ZCertificate& c) {
  return ordered_json{{"z", elems(ctx, c.z)}, {"N", elem(ctx, c.N)}, {"trials", c.trials}};
}

}  // namespace moore::report
