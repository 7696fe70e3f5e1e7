#include "gkit/selftest.hpp"

#include "gkit/fixtures.hpp"
#include "gkit/json_io.hpp"
#include "gkit/remarks.hpp"

#include "json.hpp"

#include <algorithm>

namespace gkit {

namespace {

void add(SelftestResult& r, const std::string& fixture, const std::string& stage, bool ok,
         const std::string& detail = "") {
  r.entries.push_back({fixture, stage, ok, ok ? "" : detail});
}

std::string first_failure(const std::vector<CheckItem>& items) {
  for (const auto& c : items)
    if (!c.ok) return c.name + (c.witness.empty() ? "" : " at " + c.witness);
  return "";
}

}  // namespace

SelftestResult run_selftest(int max_size) {
  SelftestResult r;
  r.max_size = max_size;

  for (const auto& f : fixtures::groupoid_fixtures(max_size)) {
    auto rep = validate(*f.groupoid);
    add(r, f.name, "groupoid axioms + derived laws",
        rep.ok, rep.ok ? "" : rep.violations.front().rule + " at " + rep.violations.front().witness);

    auto kg = build_kg(f.groupoid);
    auto kd = build_kgdual(f.groupoid);
    bool group = f.groupoid->identities().size() == 1;
    auto wa1 = weak_axioms(kg);
    auto wa2 = weak_axioms(kd);
    bool nb1 = group || wa1.checked_not_bialgebra;
    bool nb2 = group || wa2.checked_not_bialgebra;
    add(r, f.name, "KG weak bialgebra axioms", wa1.ok && nb1);
    add(r, f.name, "KG* weak bialgebra axioms", wa2.ok && nb2);

    auto t1 = target_subalgebra(kg);
    auto t2 = target_subalgebra(kd);
    add(r, f.name, "target subalgebras match closed forms",
        t1.matches_closed_form && t1.fixed_pointwise && t2.matches_closed_form &&
            t2.fixed_pointwise);
  }

  for (const auto& f : fixtures::action_fixtures(max_size)) {
    auto arep = validate_action(f.action, true);
    add(r, f.name, "action axioms", arep.ok, first_failure(arep.items));
    if (!arep.ok) continue;

    // action/module round-trips
    bool round = false;
    try {
      auto m = action_to_module(f.action);
      auto back = module_to_action(m);
      auto m2 = action_to_module(back);
      round = actions_equal(f.action, back);
      for (const auto& [g, act] : m.action) round = round && act == m2.action.at(g);
    } catch (const std::exception&) {
      round = false;
    }
    add(r, f.name, "action/module round-trips", round);

    // skew ring laws
    auto sk = skew_ring(f.action);
    auto skrep = alg_check(*sk.algebra);
    add(r, f.name, "skew ring associative + unital", skrep.associative && skrep.unital);

    // theorem 3.7
    bool t37 = false;
    std::string detail;
    try {
      auto rep = theorem37(f.action);
      t37 = rep.ok && rep.ledger_balanced && rep.global_iso_ok;
      detail = first_failure(rep.checks);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    add(r, f.name, "theorem 3.7", t37, detail);

    // theorem 5.2
    bool t52 = false;
    detail.clear();
    try {
      auto res = theorem52(f.action);
      t52 = res.ok;
      if (!t52) {
        detail = first_failure(res.splitting.checks);
        if (detail.empty()) detail = first_failure(res.ds.checks);
        if (detail.empty()) detail = first_failure(res.exact.checks);
      }
    } catch (const std::exception& e) {
      detail = e.what();
    }
    add(r, f.name, "theorem 5.2 exact sequence", t52, detail);
  }

  for (const auto& f : fixtures::grading_fixtures(max_size)) {
    auto grep = validate_grading(f.graded);
    add(r, f.name, "grading law + local units", grep.ok, first_failure(grep.items));
    if (!grep.ok) continue;

    bool genuine = f.graded.groupoid->identities().size() > 1;
    auto s = smash(f.graded);
    auto srep = alg_check(*s.algebra);
    bool smash_ok = srep.associative && s.preunit_law_ok;
    if (genuine)
      smash_ok = smash_ok && !s.unital && s.right_annihilator.has_value() && s.annihilator_verified;
    else
      smash_ok = smash_ok && s.unital;
    add(r, f.name, "smash product laws", smash_ok);

    auto act = smash_action(s);
    auto act_rep = validate_action(act, false);
    add(r, f.name, "smash action axioms", act_rep.ok, first_failure(act_rep.items));

    auto c = smash_skew_ring(act, s);
    auto crep = alg_check(*c.ring.algebra);
    bool c_ok = crep.associative;
    if (genuine) c_ok = c_ok && !c.unital && c.left_annihilator.has_value() && c.annihilator_verified;
    else c_ok = c_ok && c.unital;
    add(r, f.name, "smash skew ring laws", c_ok);

    bool t45 = false;
    std::string detail;
    try {
      auto rep = theorem45(f.graded);
      t45 = rep.ok && rep.ledger_balanced && rep.global_iso_ok;
      detail = first_failure(rep.checks);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    add(r, f.name, "theorem 4.5", t45, detail);
  }

  std::sort(r.entries.begin(), r.entries.end(), [](const SelftestEntry& a, const SelftestEntry& b) {
    return a.fixture != b.fixture ? a.fixture < b.fixture : a.stage < b.stage;
  });
  r.ok = true;
  for (const auto& e : r.entries) r.ok = r.ok && e.ok;
  return r;
}

std::string selftest_to_json(const SelftestResult& r) {
  nlohmann::json out;
  out["status"] = r.ok ? "ok" : "violated";
  out["max_size"] = r.max_size;
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : r.entries)
    entries.push_back(nlohmann::json{
        {"fixture", e.fixture}, {"stage", e.stage}, {"ok", e.ok}, {"detail", e.detail}});
  out["entries"] = entries;
  return out.dump(2);
}

}  // namespace gkit
