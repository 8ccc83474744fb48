#include "qsuper/root_data.hpp"

#include <algorithm>
#include <fstream>

namespace qsuper {

RootDatum::RootDatum(RationalMatrix gram, std::vector<std::size_t> odd, std::string name)
    : gram_(std::move(gram)), odd_(std::move(odd)), name_(std::move(name)) {
  const std::size_t r = gram_.size();
  if (r == 0) throw ConfigError("rank must be at least 1");
  for (const auto& row : gram_) {
    if (row.size() != r) throw ConfigError("gram matrix must be square");
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      if (gram_[i][j] != gram_[j][i]) {
        throw ConfigError("gram matrix is not symmetric at (" + std::to_string(i + 1) + "," +
                          std::to_string(j + 1) + ")");
      }
    }
  }
  odd_mask_.assign(r, false);
  for (std::size_t i : odd_) {
    if (i >= r) throw ConfigError("odd index " + std::to_string(i + 1) + " out of range");
    if (odd_mask_[i]) throw ConfigError("odd index " + std::to_string(i + 1) + " repeated");
    odd_mask_[i] = true;
  }
  std::sort(odd_.begin(), odd_.end());
  for (std::size_t i = 0; i < r; ++i) {
    if (!odd_mask_[i] && gram_[i][i] == 0) {
      throw ConfigError("even simple root " + std::to_string(i + 1) + " is isotropic");
    }
  }
}

RationalMatrix cartan_matrix(const RootDatum& datum) {
  const std::size_t r = datum.rank();
  RationalMatrix a(r, std::vector<Rational>(r));
  for (std::size_t i = 0; i < r; ++i) {
    const Rational& nii = datum.gram(i, i);
    for (std::size_t j = 0; j < r; ++j) {
      a[i][j] = nii == 0 ? datum.gram(i, j) : Rational(2 * datum.gram(i, j) / nii);
    }
  }
  return a;
}

std::vector<Rational> symmetrizers(const RootDatum& datum) {
  std::vector<Rational> d(datum.rank());
  for (std::size_t i = 0; i < datum.rank(); ++i) {
    const Rational& nii = datum.gram(i, i);
    d[i] = nii == 0 ? Rational(1) : Rational(nii / 2);
  }
  return d;
}

int parity(const RootDatum& datum, std::size_t i) {
  if (i >= datum.rank()) throw std::out_of_range("root index " + std::to_string(i) + " out of range");
  return datum.is_odd(i) ? 1 : 0;
}

OmegaData omega_data(const RootDatum& datum) {
  const std::size_t r = datum.rank();
  OmegaData omega{datum.gram(), std::vector<std::vector<int>>(r, std::vector<int>(r, 1))};
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if (datum.is_odd(i) && datum.is_odd(j)) omega.hat_signs[i][j] = -1;
    }
  }
  return omega;
}

namespace {

RationalMatrix integer_matrix(std::initializer_list<std::initializer_list<int>> rows) {
  RationalMatrix m;
  for (const auto& row : rows) {
    std::vector<Rational> out;
    for (int v : row) out.emplace_back(v);
    m.push_back(std::move(out));
  }
  return m;
}

Rational json_rational(const nlohmann::json& value) {
  if (value.is_number_integer()) return Rational(value.get<long>());
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  throw ConfigError("gram entries must be integers or \"p/q\" strings");
}

}  // namespace

RootDatum catalog(std::string_view name) {
  if (name == "sl2") return RootDatum(integer_matrix({{2}}), {}, "sl2");
  if (name == "sl3") return RootDatum(integer_matrix({{2, -1}, {-1, 2}}), {}, "sl3");
  if (name == "sl2_1") return RootDatum(integer_matrix({{2, -1}, {-1, 0}}), {1}, "sl2_1");
  if (name == "osp1_2") return RootDatum(integer_matrix({{1}}), {0}, "osp1_2");
  throw ConfigError("unknown algebra '" + std::string(name) + "'");
}

std::vector<std::string> catalog_names() { return {"sl2", "sl3", "sl2_1", "osp1_2"}; }

RootDatum parse_config(const nlohmann::json& config) {
  if (!config.is_object()) throw ConfigError("config must be a JSON object");
  if (!config.contains("rank") || !config["rank"].is_number_integer()) {
    throw ConfigError("config needs an integer \"rank\"");
  }
  const long rank = config["rank"].get<long>();
  if (rank < 1) throw ConfigError("rank must be at least 1");
  if (!config.contains("gram") || !config["gram"].is_array()) throw ConfigError("config needs a \"gram\" array");
  const auto& rows = config["gram"];
  if (rows.size() != static_cast<std::size_t>(rank)) throw ConfigError("gram must have rank rows");
  RationalMatrix gram;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(rank)) {
      throw ConfigError("gram rows must have rank entries");
    }
    std::vector<Rational> out;
    for (const auto& entry : row) out.push_back(json_rational(entry));
    gram.push_back(std::move(out));
  }
  std::vector<std::size_t> odd;
  if (config.contains("odd")) {
    if (!config["odd"].is_array()) throw ConfigError("\"odd\" must be an array");
    for (const auto& index : config["odd"]) {
      if (!index.is_number_integer()) throw ConfigError("odd indices must be integers");
      const long i = index.get<long>();
      if (i < 1 || i > rank) throw ConfigError("odd index " + std::to_string(i) + " out of range");
      odd.push_back(static_cast<std::size_t>(i - 1));
    }
  }
  std::string name = config.value("name", std::string("custom"));
  return RootDatum(std::move(gram), std::move(odd), std::move(name));
}

RootDatum load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  nlohmann::json config;
  try {
    in >> config;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("invalid JSON in config: ") + e.what());
  }
  return parse_config(config);
}

nlohmann::json to_config(const RootDatum& datum) {
  nlohmann::json gram = nlohmann::json::array();
  for (const auto& row : datum.gram()) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& v : row) {
      if (is_integer(v)) {
        out.push_back(v.get_num().get_si());
      } else {
        out.push_back(to_string(v));
      }
    }
    gram.push_back(std::move(out));
  }
  nlohmann::json odd = nlohmann::json::array();
  for (std::size_t i : datum.odd()) odd.push_back(i + 1);
  return {{"name", datum.name()}, {"rank", datum.rank()}, {"gram", gram}, {"odd", odd}};
}

Rational root_pairing(const RootDatum& datum, std::size_t j, const ConcreteWeight& weight) {
  Rational sum = 0;
  for (std::size_t i = 0; i < datum.rank(); ++i) sum += weight.coords.at(i) * datum.gram(j, i);
  return sum;
}

Rational weight_pairing(const RootDatum& datum, const ConcreteWeight& a, const ConcreteWeight& b) {
  Rational sum = 0;
  for (std::size_t i = 0; i < datum.rank(); ++i) {
    for (std::size_t j = 0; j < datum.rank(); ++j) sum += a.coords.at(i) * datum.gram(i, j) * b.coords.at(j);
  }
  return sum;
}

void check_weight(const RootDatum& datum, const Weight& weight) {
  if (const auto* concrete = std::get_if<ConcreteWeight>(&weight)) {
    if (concrete->coords.size() != datum.rank()) {
      throw ConfigError("concrete weight needs " + std::to_string(datum.rank()) + " coordinates");
    }
  }
}

}  // namespace qsuper
