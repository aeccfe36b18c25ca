#include "porthos/family_io.hpp"

namespace porthos {

using nlohmann::json;

namespace {

cplx parse_entry(const json& e, std::size_t elem, std::size_t pos) {
  if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
    throw std::invalid_argument("family file: element " + std::to_string(elem) + ", entry " +
                                std::to_string(pos) + ": expected [re, im]");
  return {e[0].get<double>(), e[1].get<double>()};
}

}  // namespace

TracialFamily family_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("elements"))
    throw std::invalid_argument("family file: need \"dim\" and \"elements\"");
  const int dim = j.at("dim").get<int>();
  if (dim < 1) throw std::invalid_argument("family file: dim must be positive");
  TracialFamily fam;
  fam.dim = dim;
  const auto& elems = j.at("elements");
  if (!elems.is_array() || elems.empty())
    throw std::invalid_argument("family file: \"elements\" must be a nonempty array");
  const std::size_t want = static_cast<std::size_t>(dim) * dim;
  for (std::size_t e = 0; e < elems.size(); ++e) {
    const auto& mat = elems[e];
    if (!mat.is_array() || mat.size() != want)
      throw std::invalid_argument("family file: element " + std::to_string(e) + ": expected " +
                                  std::to_string(want) + " row-major entries, got " +
                                  std::to_string(mat.size()));
    std::vector<cplx> a(want);
    for (std::size_t k = 0; k < want; ++k) a[k] = parse_entry(mat[k], e, k);
    fam.elements.push_back(TracialElement::dense(dim, std::move(a)));
  }
  fam.validate();
  return fam;
}

json family_to_json(const TracialFamily& fam) {
  json elems = json::array();
  for (const auto& e : fam.elements) {
    const TracialElement d = e.to_dense();
    json mat = json::array();
    for (const auto& v : d.data()) mat.push_back(json::array({v.real(), v.imag()}));
    elems.push_back(std::move(mat));
  }
  return json{{"dim", fam.dim}, {"elements", std::move(elems)}};
}

TracialFamily family_from_spec_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  const std::uint64_t seed = j.value("seed", std::uint64_t{0});
  if (kind == "dyadic_martingale") return dyadic_martingale(j.at("depth").get<int>(), seed);
  if (kind == "spin") return spin_system(j.at("count").get<int>());
  if (kind == "cyclic_fourier") {
    const int modulus = j.at("modulus").get<int>();
    std::vector<std::vector<int>> blocks;
    for (const auto& b : j.at("blocks")) blocks.push_back(b.get<std::vector<int>>());
    std::map<int, cplx> coeffs;
    for (const auto& [key, val] : j.at("coeffs").items())
      coeffs[std::stoi(key)] = {val.at(0).get<double>(), val.at(1).get<double>()};
    return cyclic_fourier(modulus, blocks, coeffs);
  }
  if (kind == "rademacher") {
    std::vector<cplx> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.emplace_back(c.at(0).get<double>(), c.at(1).get<double>());
    return rademacher(j.at("count").get<int>(), coeffs);
  }
  if (kind == "random_control")
    return random_control(j.at("count").get<int>(), j.at("dim").get<int>(), seed);
  throw std::invalid_argument("family spec: unknown kind \"" + kind + "\"");
}

TracialFamily load_family(const json& j) {
  if (j.is_object() && j.contains("kind")) return family_from_spec_json(j);
  return family_from_json(j);
}

}  // namespace porthos
