#include "symcone/io.hpp"

#include <sstream>

#include <json.hpp>

namespace symcone::io {

using nlohmann::json;

std::string series_json(const series::TruncatedSeries& s) {
  json doc;
  doc["truncation"] = s.truncation;
  json coeffs = json::array();
  for (const auto& c : s.dense()) coeffs.push_back(c.str());
  doc["coefficients"] = std::move(coeffs);
  return doc.dump(2) + "\n";
}

std::string series_csv(const series::TruncatedSeries& s) {
  std::ostringstream os;
  os << "degree,coefficient\n";
  const auto dense = s.dense();
  for (std::size_t d = 0; d < dense.size(); ++d) os << d << "," << dense[d].str() << "\n";
  return os.str();
}

std::string series_text(const series::TruncatedSeries& s) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : s.coefficients) {
    os << (first ? "" : " + ");
    first = false;
    if (c != 1 || d == 0) os << c.str();
    if (d > 0) {
      if (c != 1) os << " ";
      os << "t";
      if (d > 1) os << "^" << d;
    }
  }
  if (first) os << "0";
  os << " + O(t^" << s.truncation + 1 << ")\n";
  return os.str();
}

std::string terms_json(const genfunc::RationalSum& sum) {
  json doc = json::array();
  for (const auto& term : sum.terms) {
    json t;
    json num = json::array();
    for (Index i = 0; i < term.numerator.size(); ++i) num.push_back(term.numerator(i));
    t["numerator"] = std::move(num);
    json dens = json::array();
    for (const auto& d : term.denominators) {
      json dv = json::array();
      for (Index i = 0; i < d.size(); ++i) dv.push_back(d(i));
      dens.push_back(std::move(dv));
    }
    t["denominators"] = std::move(dens);
    doc.push_back(std::move(t));
  }
  return doc.dump(2) + "\n";
}

}  // namespace symcone::io
