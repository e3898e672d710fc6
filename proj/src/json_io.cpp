#include "fusionkit/json_io.hpp"

#include <fstream>

#include "fusionkit/error.hpp"

namespace fusionkit::io {

namespace {

Json require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(ErrorKind::Parse, std::string("missing key '") + key + "'");
  return j.at(key);
}

mod::MatF2 matrix_from_json(const Json& j, int dim) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw Error(ErrorKind::Parse, "matrix must have one row per dimension");
  std::vector<mod::Vec> rows;
  for (const Json& r : j) {
    const auto v = r.get<std::uint32_t>();
    if (v >> dim) throw Error(ErrorKind::Parse, "matrix row has bits beyond the dimension");
    rows.push_back(v);
  }
  return mod::MatF2::from_rows(rows);
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Parse, path + ": " + e.what());
  }
}

pc::PcPresentation presentation_from_json(const Json& j) {
  try {
    pc::PcPresentation p;
    p.generators = require(j, "generators").get<std::vector<std::string>>();
    p.powers.assign(p.generators.size(), {});
    if (j.contains("powers"))
      for (const auto& [g, w] : j.at("powers").items()) p.set_power(g, w.get<std::string>());
    if (j.contains("commutators"))
      for (const auto& [key, w] : j.at("commutators").items()) {
        const auto comma = key.find(',');
        if (key.size() < 5 || key.front() != '[' || key.back() != ']' || comma == std::string::npos)
          throw Error(ErrorKind::Parse, "commutator key must look like [gj,gi]: " + key);
        p.set_commutator(key.substr(1, comma - 1), key.substr(comma + 1, key.size() - comma - 2),
                         w.get<std::string>());
      }
    return p;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

Json presentation_to_json(const pc::PcPresentation& p) {
  Json j;
  j["generators"] = p.generators;
  j["powers"] = Json::object();
  for (std::size_t i = 0; i < p.generators.size(); ++i)
    if (!p.powers[i].empty()) j["powers"][p.generators[i]] = p.format_word(p.powers[i]);
  j["commutators"] = Json::object();
  for (const auto& [ab, w] : p.commutators)
    if (!w.empty())
      j["commutators"]["[" + p.generators[ab.first] + "," + p.generators[ab.second] + "]"] =
          p.format_word(w);
  return j;
}

perm::PermGroup group_from_json(const Json& j) {
  try {
    const auto degree = require(j, "degree").get<std::size_t>();
    if (degree == 0 || degree > 0xFFFF) throw Error(ErrorKind::Parse, "degree out of range");
    std::vector<perm::Perm> gens;
    for (const Json& g : require(j, "generators")) {
      const auto images = g.get<std::vector<std::size_t>>();
      if (images.size() != degree)
        throw Error(ErrorKind::Parse, "generator length differs from degree");
      std::vector<perm::Point> pts;
      for (std::size_t x : images) {
        if (x < 1 || x > degree) throw Error(ErrorKind::Parse, "image outside 1..degree");
        pts.push_back(static_cast<perm::Point>(x - 1));
      }
      gens.emplace_back(std::move(pts));
    }
    return perm::PermGroup(degree, std::move(gens), j.value("name", std::string("G")));
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

Json group_to_json(const perm::PermGroup& g) {
  Json gens = Json::array();
  for (const auto& p : g.generators()) {
    Json img = Json::array();
    for (perm::Point x : p.images()) img.push_back(x + 1);
    gens.push_back(img);
  }
  return {{"degree", g.degree()}, {"generators", gens}, {"name", g.name()}};
}

perm::PermGroup load_group_file(const std::string& path) {
  return group_from_json(read_json_file(path));
}

ExtensionSpec extension_from_json(const Json& j) {
  try {
    const int n = require(j, "dim").get<int>();
    if (n < 1 || n > mod::kMaxDim) throw Error(ErrorKind::Parse, "dim must be 1..8");
    std::vector<mod::MatF2> qgens;
    for (const Json& m : require(j, "quotient_generators")) qgens.push_back(matrix_from_json(m, n));
    auto gamma = std::make_shared<const mod::MatGroupF2>(mod::enumerate_group(qgens, "Gamma"));
    coh::Module module = coh::Module::natural(gamma);
    if (j.contains("action")) {
      std::vector<mod::MatF2> images;
      int dim = -1;
      for (const Json& m : j.at("action")) {
        if (dim < 0) dim = static_cast<int>(m.size());
        images.push_back(matrix_from_json(m, dim));
      }
      module = coh::Module::from_generator_images(gamma, std::move(images));
    }
    auto index = [&](const Json& m) {
      auto i = gamma->index_of(matrix_from_json(m, n));
      if (!i) throw Error(ErrorKind::Parse, "matrix is not in the quotient group");
      return static_cast<std::uint32_t>(*i);
    };
    coh::Cocycle2 c;
    c.quotient_order = gamma->order();
    if (j.contains("cocycle"))
      for (const Json& entry : j.at("cocycle")) {
        if (!entry.is_array() || entry.size() != 3)
          throw Error(ErrorKind::Parse, "cocycle entries are [a, b, value]");
        c.set(index(entry[0]), index(entry[1]), entry[2].get<mod::Vec>());
      }
    ExtensionSpec s{gamma, coh::ExtensionGroup::build(std::move(module), std::move(c)),
                    j.value("x", mod::Vec{0}), j.value("v_basis", std::vector<mod::Vec>{}), {}};
    if (j.contains("g_generators"))
      for (const Json& m : j.at("g_generators")) s.g_gens.push_back(index(m));
    return s;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

}  // namespace fusionkit::io
