#include "bohr/io.hpp"

#include <fstream>
#include <stdexcept>

namespace bohr {

nlohmann::ordered_json series_to_json(const TruncatedSeries& f) {
  nlohmann::ordered_json j;
  auto& coeffs = j["coeffs"] = nlohmann::ordered_json::array();
  for (const cplx& c : f.coeffs()) coeffs.push_back({c.real(), c.imag()});
  if (f.tail()) {
    j["tail"] = {{"c", f.tail()->c},
                 {"rho", f.tail()->rho},
                 {"start", f.tail()->start}};
  } else {
    j["tail"] = nullptr;
  }
  return j;
}

TruncatedSeries series_from_json(const nlohmann::json& j) {
  std::vector<cplx> coeffs;
  for (const auto& pair : j.at("coeffs"))
    coeffs.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
  std::optional<TailBound> tail;
  if (j.contains("tail") && !j.at("tail").is_null()) {
    const auto& t = j.at("tail");
    tail = TailBound{t.at("c").get<double>(), t.at("rho").get<double>(),
                     t.at("start").get<int>()};
  }
  return TruncatedSeries(std::move(coeffs), tail);
}

void save_series(const std::string& path, const TruncatedSeries& f) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << series_to_json(f).dump(2) << '\n';
}

TruncatedSeries load_series(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return series_from_json(j);
}

}  // namespace bohr
