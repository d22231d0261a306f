#include "agt/report.hpp"

#include <stdexcept>

#include "agt/cover.hpp"

namespace agt {

namespace {

json expsArray(const std::vector<Exps>& v) {
  json a = json::array();
  for (const auto& e : v) a.push_back(e);
  return a;
}

json monomialsArray(const std::vector<Monomial>& v) {
  json a = json::array();
  for (const auto& m : v) a.push_back(m.e);
  return a;
}

json condition2Json(const Condition2Result& c2) {
  json j;
  j["holds"] = c2.holds;
  j["exhaustive"] = c2.exhaustive;
  j["checked"] = c2.checked;
  j["cap"] = c2.cap;
  j["sampledMonomial"] = c2.sampledMonomial;
  j["sampledSubspace"] = c2.sampledSubspace;
  j["witness"] = c2.holds ? json(nullptr)
                 : c2.subspaceWitness ? json("subspace")
                                      : json(expsArray(c2.witnessGens));
  return j;
}

const char* teterStatusName(TeterStatus s) {
  switch (s) {
    case TeterStatus::Found: return "found";
    case TeterStatus::NotFound: return "not-found";
    case TeterStatus::SocleNotInM2: return "socle-not-in-m2";
  }
  return "?";
}

}  // namespace

json buildReport(const MonomialIdeal& I, const ReportOptions& opt) {
  auto comps = irreducibleDecomposition(I);
  const int type = static_cast<int>(comps.size());
  FiniteAlgebra R(I, opt.prime, opt.dimCap);
  auto W = canonicalModule(R, comps);
  auto c1 = condition1Check(R, W.rep);
  auto c2 = condition2Monomial(R, opt.cap, opt.seed, opt.samples);
  auto red = reduceVariables(comps);

  json rep;
  rep["ideal"] = idealToJson(I);
  rep["type"] = type;
  rep["hilbert"] = R.hilbert();
  rep["conditions"] = {{"c1", c1.almostGorenstein}, {"c2", condition2Json(c2)}};

  // cover: search for a one-dimensional-socle Gorenstein ring mapping onto R
  json coverJ;
  bool teterFound = false;
  if (opt.prime == 2) {
    coverJ["status"] = "unsupported";
    coverJ["dim"] = nullptr;
    coverJ["verified"] = nullptr;
  } else {
    TeterResult tr = teterTest(R, W.rep, opt.seed);
    coverJ["status"] = teterStatusName(tr.status);
    teterFound = tr.status == TeterStatus::Found;
    if (teterFound) {
      Cover S = tr.specialM2 ? specialM2Cover(R) : buildCover(R, W.rep, tr.h);
      FpMat P = tr.specialM2 ? specialM2Projection(R) : coverProjection(R, W.rep, tr.h);
      auto V = verifyCover(R, S, P);
      coverJ["dim"] = S.dim;
      coverJ["verified"] = V.ok();
    } else {
      coverJ["dim"] = nullptr;
      coverJ["verified"] = nullptr;
      if (tr.status == TeterStatus::NotFound)
        coverJ["log2FailureBound"] = tr.log2FailureBound;
    }
  }

  std::string caseStr;
  json witnesses;
  if (type == 1) {
    caseStr = "Gorenstein";
  } else if (type == 2) {
    auto cl = typetwoClassify(red);
    if (cl.caseLabel == 0) {
      caseStr = "NotAlmostGorenstein";
    } else {
      caseStr = std::string("TypeTwo:") + cl.caseLabel;
      if (cl.caseLabel == 'c' || teterFound) caseStr += "→Teter";
      witnesses["matches"] = cl.matches;
      witnesses["params"] = cl.params;
      witnesses["varPerm"] = cl.varPerm;
      witnesses["normalForm"] = monomialsArray(cl.normalForm);
    }
  } else if (type == 3) {
    auto cl = typethreeClassify(red);
    if (cl.caseNo > 0) {
      caseStr = "TypeThree:" + std::to_string(cl.caseNo);
      json ms = json::array();
      for (const auto& m : cl.matches) {
        ms.push_back({{"case", m.caseNo},
                      {"componentOrder", m.compPerm},
                      {"params", m.params},
                      {"specialVars", m.specialVars}});
      }
      witnesses["matches"] = ms;
    } else {
      caseStr = c1.almostGorenstein ? "Unclassified" : "NotAlmostGorenstein";
    }
  } else {
    caseStr = c1.almostGorenstein ? "Unclassified" : "NotAlmostGorenstein";
  }
  if (!c2.holds && !c2.subspaceWitness)
    witnesses["condition2Witness"] = expsArray(c2.witnessGens);
  rep["case"] = caseStr;
  rep["witnesses"] = witnesses.is_null() ? json(json::value_t::object) : witnesses;

  json checks;
  checks["prop25"] = prop25Verify(R, W.rep, opt.seed).ok();
  checks["prop52"] = prop52Check(R, comps, c1.trace);
  checks["eq11"] = eq11Check(R, W);
  checks["eq12"] = eq12Check(R, W);
  bool p42 = true;
  for (int i = 0; i < type; ++i)
    if (!prop42Necessary(comps, i)) p42 = false;
  checks["prop42"] = p42;
  checks["lemma51"] =
      type == 3 ? json(lemma51Check(I, comps).implicationHolds) : json(nullptr);
  rep["checks"] = checks;
  rep["cover"] = coverJ;
  return rep;
}

json batchReport(const std::vector<MonomialIdeal>& ideals, const ReportOptions& opt) {
  json out;
  out["count"] = ideals.size();
  out["prime"] = opt.prime;
  out["seed"] = opt.seed;
  json reps = json::array();
  std::map<std::string, int> byCase;
  int c1true = 0, c2true = 0;
  for (const auto& I : ideals) {
    json r = buildReport(I, opt);
    byCase[r["case"].get<std::string>()]++;
    if (r["conditions"]["c1"].get<bool>()) ++c1true;
    if (r["conditions"]["c2"]["holds"].get<bool>()) ++c2true;
    reps.push_back(std::move(r));
  }
  out["summary"] = {{"byCase", byCase}, {"c1", c1true}, {"c2", c2true}};
  out["reports"] = std::move(reps);
  return out;
}

json huntReport(const std::vector<HuntResult>& results) {
  json out;
  int candidates = 0;
  json rs = json::array();
  for (const auto& r : results) {
    if (r.verdict != "consistent") ++candidates;
    rs.push_back({{"ideal", idealToJson(r.ideal)},
                  {"type", r.type},
                  {"c1", r.c1},
                  {"c2", condition2Json(r.c2)},
                  {"verdict", r.verdict}});
  }
  out["count"] = results.size();
  out["candidates"] = candidates;
  out["results"] = std::move(rs);
  return out;
}

}  // namespace agt
