#include "spinform/json_io.hpp"

#include <stdexcept>

namespace spinform {

namespace {

std::vector<int> keyIndices(std::uint64_t key) {
  std::vector<int> out;
  for (int b = 0; key != 0; ++b, key >>= 1) {
    if (key & 1ull) out.push_back(b + 1);
  }
  return out;
}

Rational rationalFromString(const std::string& text) {
  Rational q(text, 10);  // throws std::invalid_argument on malformed input
  if (q.get_den() == 0) {
    throw std::invalid_argument("zero denominator: " + text);
  }
  q.canonicalize();
  return q;
}

}  // namespace

Json toJson(const Scalar& s) {
  return Json::array(
      {toString(s.a), toString(s.b), toString(s.c), toString(s.d)});
}

Json toJson(const Spinor& s) {
  Json out = Json::array();
  for (const auto& [m, c] : s.terms) {
    Json entry;
    entry["indices"] = keyIndices(m);
    entry["scalar"] = toJson(c);
    out.push_back(entry);
  }
  return out;
}

Json toJson(const Form& a) {
  Json terms = Json::array();
  for (const auto& [key, c] : a.terms) {
    Json entry;
    entry["indices"] = keyIndices(key);
    entry["scalar"] = toJson(c);
    terms.push_back(entry);
  }
  Json out;
  out["degree"] = a.degree;
  out["terms"] = terms;
  return out;
}

Json toJson(const Endo& t) {
  Json rows = Json::array();
  for (const auto& row : t.m) {
    Json r = Json::array();
    for (const auto& s : row) r.push_back(toJson(s));
    rows.push_back(r);
  }
  Json out;
  out["dim"] = t.dim();
  out["rows"] = rows;
  return out;
}

Json frameToJson(const SasakiFrame& f) {
  Json out;
  out["n"] = f.params.n;
  out["dim"] = f.params.dimV();
  for (const char* key : {"eta", "phi", "Phi", "dEta"}) out[key] = Json::array();
  for (int i = 0; i < 3; ++i) {
    out["eta"].push_back(toJson(f.eta[i]));
    out["phi"].push_back(toJson(f.phi[i]));
    out["Phi"].push_back(toJson(f.Phi[i]));
    out["dEta"].push_back(toJson(f.dEta[i]));
  }
  out["Phi0"] = toJson(f.Phi0);
  out["torsion"] = toJson(f.torsion);
  return out;
}

Json kernelToJson(int n, const std::string& opName, const KernelBasis& kb) {
  Json out;
  out["n"] = n;
  out["operator"] = opName;
  out["rank"] = kb.rank;
  Json basis = Json::array();
  for (const Spinor& s : kb.spinors) basis.push_back(toJson(s));
  out["basis"] = basis;
  return out;
}

Json isotropyReportJson(int n, const std::string& space, int rank,
                        int expectedRank) {
  Json out;
  out["n"] = n;
  out["space"] = space;
  out["rank"] = rank;
  out["expectedRank"] = expectedRank;
  out["match"] = (rank == expectedRank);
  return out;
}

Json bilinearReportJson(const SasakiRecovery& rec, int n) {
  Json out;
  out["n"] = n;
  if (rec.structureIndex == 0) {
    out["matchedIndex"] = nullptr;
  } else {
    out["matchedIndex"] = rec.structureIndex;
  }
  out["normSq"] = toJson(rec.normSq);
  out["eta"] = toJson(rec.eta);
  out["dEta"] = toJson(rec.dEta);
  out["phi"] = toJson(rec.phi);
  Json failures = Json::array();
  for (const std::string& what : rec.report.failures) failures.push_back(what);
  out["failures"] = failures;
  return out;
}

Scalar scalarFromJson(const Json& j) {
  if (!j.is_array() || j.size() != 4) {
    throw std::invalid_argument("scalar JSON must be a 4-tuple");
  }
  return Scalar(rationalFromString(j[0].get<std::string>()),
                rationalFromString(j[1].get<std::string>()),
                rationalFromString(j[2].get<std::string>()),
                rationalFromString(j[3].get<std::string>()));
}

Spinor spinorFromJson(const Json& j) {
  if (!j.is_array()) {
    throw std::invalid_argument("spinor JSON must be an array of terms");
  }
  Spinor s;
  for (const Json& entry : j) {
    Monomial m = 0;
    for (const Json& idx : entry.at("indices")) {
      const int b = idx.get<int>();
      if (b < 1 || b > 31) throw std::invalid_argument("bad generator index");
      m |= 1u << (b - 1);
    }
    s.addTerm(m, scalarFromJson(entry.at("scalar")));
  }
  return s;
}

}  // namespace spinform
