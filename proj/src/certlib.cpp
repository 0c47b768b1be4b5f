// SPDX-License-Identifier: Apache-2.0
#include "codebounds/certlib.hpp"

#include <set>
#include <stdexcept>

#include "codebounds/rat_linalg.hpp"
#include "codebounds/schrijver.hpp"
#include "codebounds/theta.hpp"

namespace codebounds {

using nlohmann::json;

namespace {

SpaceSpec space_from_json(const json& s) {
  std::string type = s.at("type").get<std::string>();
  if (type == "hamming")
    return SpaceSpec::hamming(s.at("n").get<long>(), s.value("q", 2L), s.at("delta").get<long>());
  if (type == "johnson")
    return SpaceSpec::johnson(s.at("n").get<long>(), s.at("w").get<long>(),
                              s.at("delta").get<long>());
  if (type == "sphere")
    return SpaceSpec::sphere(s.at("n").get<long>(),
                             Rational::from_string(s.at("max_cos").get<std::string>()));
  throw std::invalid_argument("certificate: unknown space type '" + type + "'");
}

json space_to_json(const SpaceSpec& s) {
  json j;
  switch (s.kind) {
    case SpaceSpec::Kind::Hamming:
      j["type"] = "hamming";
      j["n"] = s.n;
      j["q"] = s.q;
      j["delta"] = s.delta;
      break;
    case SpaceSpec::Kind::Johnson:
      j["type"] = "johnson";
      j["n"] = s.n;
      j["w"] = s.w;
      j["delta"] = s.delta;
      break;
    case SpaceSpec::Kind::Sphere:
      j["type"] = "sphere";
      j["n"] = s.n;
      j["max_cos"] = s.max_cos.str();
      break;
  }
  return j;
}

Graph graph_from_json(const json& s) {
  std::string type = s.at("type").get<std::string>();
  if (type == "cycle") return Graph::cycle(s.at("q").get<int>());
  if (type == "graph") {
    Graph g;
    g.n = s.at("n").get<int>();
    for (const auto& e : s.at("edges")) g.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    g.normalize();
    return g;
  }
  throw std::invalid_argument("certificate: space type '" + type + "' is not a graph");
}

RatMat matrix_from_json(const json& m) {
  RatMat out;
  for (const auto& row : m) {
    RatVec r;
    for (const auto& v : row) r.push_back(Rational::from_string(v.get<std::string>()));
    out.push_back(std::move(r));
  }
  for (const auto& r : out)
    if (r.size() != out.size()) throw std::invalid_argument("certificate: matrix not square");
  return out;
}

DocVerdict verify_theta_dual(const CertificateDocument& doc) {
  DocVerdict v;
  Graph g = graph_from_json(doc.space);
  Rational t = Rational::from_string(doc.payload.at("t").get<std::string>());
  RatMat B = matrix_from_json(doc.payload.at("B"));
  if (static_cast<int>(B.size()) != g.n) {
    v.reason = "matrix size does not match graph";
    return v;
  }
  for (int i = 0; i < g.n; ++i) {
    if (B[i][i] != t - Rational(1)) {
      v.reason = "diagonal entry differs from t-1 at " + std::to_string(i);
      return v;
    }
    for (int j = i + 1; j < g.n; ++j) {
      if (B[i][j] != B[j][i]) {
        v.reason = "matrix not symmetric";
        return v;
      }
      if (!g.has_edge(i, j) && B[i][j] != Rational(-1)) {
        v.reason = "off-edge entry differs from -1 at (" + std::to_string(i) + "," +
                   std::to_string(j) + ")";
        return v;
      }
    }
  }
  if (!rat_psd(B)) {
    v.reason = "dual matrix not positive semidefinite";
    return v;
  }
  v.bound = t;
  if (Rational::from_string(doc.claimed_bound) != t) {
    v.reason = "claimed bound differs from certified t";
    return v;
  }
  v.valid = true;
  return v;
}

DocVerdict verify_schrijver_dual(const CertificateDocument& doc) {
  DocVerdict v;
  SpaceSpec sp = space_from_json(doc.space);
  if (sp.kind != SpaceSpec::Kind::Hamming || sp.q != 2) {
    v.reason = "schrijver dual certificates require a binary Hamming space";
    return v;
  }
  auto a = build_schrijver(sp.n, sp.delta);
  const auto& blocks_json = doc.payload.at("blocks");
  if (blocks_json.size() != a.blocks.size()) {
    v.reason = "dual block count mismatch";
    return v;
  }
  std::vector<RatMat> Y;
  for (size_t b = 0; b < a.blocks.size(); ++b) {
    RatMat m = matrix_from_json(blocks_json[b]);
    if (static_cast<int>(m.size()) != a.blocks[b].size) {
      v.reason = "dual block size mismatch at block " + std::to_string(b);
      return v;
    }
    if (a.blocks[b].diagonal) {
      for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m.size(); ++j)
          if (i != j ? !m[i][j].is_zero() : m[i][i].sign() < 0) {
            v.reason = "diagonal dual block invalid at block " + std::to_string(b);
            return v;
          }
    } else if (!rat_psd(m)) {
      v.reason = "dual block not PSD at block " + std::to_string(b);
      return v;
    }
    Y.push_back(std::move(m));
  }
  std::vector<Rational> trFY(a.vars.size() + 1, Rational(0));
  for (const auto& e : a.entries) {
    Rational t = e.value * Y[e.block][e.i][e.j];
    if (e.i != e.j) t += e.value * Y[e.block][e.j][e.i];
    trFY[e.constraint] += t;
  }
  Rational bound = -trFY[0] + Rational(1);
  for (size_t l = 0; l < a.vars.size(); ++l) {
    Rational rho = trFY[l + 1] + a.objective[l];
    bound += rho.abs() * a.var_upper[l];
  }
  v.bound = bound;
  if (bound > Rational::from_string(doc.claimed_bound)) {
    v.reason = "certified bound " + bound.str() + " exceeds claimed " + doc.claimed_bound;
    return v;
  }
  v.valid = true;
  return v;
}

}  // namespace

CertificateDocument CertificateDocument::parse(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("certificate: JSON parse error: ") + e.what());
  }
  const std::set<std::string> want{"version", "space", "kind", "payload", "claimed_bound",
                                   "metadata"};
  std::set<std::string> got;
  for (auto it = j.begin(); it != j.end(); ++it) got.insert(it.key());
  if (got != want)
    throw std::invalid_argument("certificate: top-level keys must be exactly "
                                "{version, space, kind, payload, claimed_bound, metadata}");
  CertificateDocument d;
  d.version = j.at("version").get<std::string>();
  d.space = j.at("space");
  d.kind = j.at("kind").get<std::string>();
  d.payload = j.at("payload");
  d.claimed_bound = j.at("claimed_bound").get<std::string>();
  d.metadata = j.at("metadata");
  // rationals must survive a string -> rational -> string round trip
  (void)Rational::from_string(d.claimed_bound);
  return d;
}

CertificateDocument CertificateDocument::from_lp(const LpCertificate& c) {
  CertificateDocument d;
  d.space = space_to_json(c.space);
  d.kind = "lp-polynomial";
  json coeffs = json::array();
  for (const auto& f : c.f) coeffs.push_back(f.str());
  d.payload["coefficients"] = coeffs;
  d.claimed_bound = c.claimed_bound.str();
  return d;
}

std::string CertificateDocument::serialize() const {
  json j;
  j["version"] = version;
  j["space"] = space;
  j["kind"] = kind;
  j["payload"] = payload;
  j["claimed_bound"] = claimed_bound;
  j["metadata"] = metadata;
  return j.dump(2) + "\n";
}

DocVerdict verify_document(const CertificateDocument& doc) {
  DocVerdict v;
  if (doc.kind == "lp-polynomial") {
    LpCertificate cert;
    cert.space = space_from_json(doc.space);
    for (const auto& s : doc.payload.at("coefficients"))
      cert.f.push_back(Rational::from_string(s.get<std::string>()));
    cert.claimed_bound = Rational::from_string(doc.claimed_bound);
    CertVerdict cv = verify_certificate(cert);
    v.valid = cv.valid;
    v.bound = cv.bound;
    v.reason = cv.reason;
    if (cv.has_witness && !v.reason.empty()) v.reason += " (witness " + cv.witness.str() + ")";
    return v;
  }
  if (doc.kind == "sdp-dual") {
    std::string dual = doc.payload.at("dual").get<std::string>();
    if (dual == "theta") return verify_theta_dual(doc);
    if (dual == "schrijver") return verify_schrijver_dual(doc);
    v.reason = "unknown sdp-dual payload '" + dual + "'";
    return v;
  }
  v.reason = "unknown certificate kind '" + doc.kind + "'";
  return v;
}

}  // namespace codebounds
