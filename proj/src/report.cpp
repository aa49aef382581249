#include <nlohmann/json.hpp>

#include "linkparity/linking.hpp"

namespace linkparity {

namespace {

using Json = nlohmann::ordered_json;

Json labels(const IndexSubset& s) { return Json(s.labels()); }

template <typename Derived>
Json rationals(const Eigen::MatrixBase<Derived>& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i).str());
  return out;
}

Json config_json(const Configuration& c) {
  Json points = Json::array();
  for (Eigen::Index i = 0; i < c.size(); ++i) points.push_back(rationals(c.points().col(i)));
  Json j;
  j["dimension"] = c.dimension();
  j["size"] = c.size();
  j["provenance"] = describe(c.provenance());
  j["points"] = std::move(points);
  return j;
}

}  // namespace

std::string report_json(const LinkReport& report, const std::vector<CrossCheckReport>& checks) {
  Json doc;
  doc["config"] = config_json(report.config);
  doc["k"] = report.k;

  Json per_subset = Json::array();
  for (std::size_t i = 0; i < report.per_subset.size(); ++i) {
    const SubsetLinkage& s = report.per_subset[i];
    Json row;
    row["I"] = labels(s.subject);
    row["n1"] = s.boundary_points;
    row["n3"] = s.faces_hit();
    if (i < checks.size() && checks[i].n4) {
      row["n4"] = *checks[i].n4;
    } else {
      row["n4"] = nullptr;
    }
    row["even"] = i < checks.size() ? checks[i].even() : s.boundary_points % 2 == 0;
    per_subset.push_back(std::move(row));
  }
  doc["per_subset"] = std::move(per_subset);

  Json linked = Json::array();
  Json single = Json::array();
  for (const SubsetLinkage& s : report.per_subset) {
    Json entry;
    entry["I"] = labels(s.subject);
    entry["complement"] = labels(s.complement);
    entry["points"] = s.boundary_points;
    if (s.linked()) linked.push_back(entry);
    if (s.boundary_points == 1) single.push_back(std::move(entry));
  }
  doc["linked_pairs"] = std::move(linked);
  doc["single_point_pairs"] = std::move(single);
  doc["total"] = report.total_linked;
  doc["parity_ok"] = report.parity_ok;

  Json witnesses = Json::array();
  for (const SubsetLinkage& s : report.per_subset) {
    for (const FaceHit& hit : s.hits) {
      Json w;
      w["I"] = labels(s.subject);
      w["J"] = labels(hit.face);
      w["point"] = rationals(*hit.result.point);
      w["lambda"] = rationals(hit.result.coeffs_first);
      w["mu"] = rationals(hit.result.coeffs_second);
      witnesses.push_back(std::move(w));
    }
  }
  doc["witnesses"] = std::move(witnesses);
  return doc.dump(2) + "\n";
}

}  // namespace linkparity
