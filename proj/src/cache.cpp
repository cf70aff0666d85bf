#include "gl2wb/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gl2wb/group.hpp"

namespace gl2wb {

namespace {

using nlohmann::json;

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(static_cast<int>(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from(const Field& F, const json& rows, int cols) {
  Matrix m(F, static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows(); ++i) {
    const auto& row = rows.at(i);
    if (static_cast<int>(row.size()) != cols) throw std::runtime_error("ragged matrix");
    for (int j = 0; j < cols; ++j) {
      int x = row.at(j).get<int>();
      if (x < 0 || x >= F.q()) throw std::runtime_error("entry outside the field");
      m(i, j) = static_cast<Elem>(x);
    }
  }
  return m;
}

std::string hex(std::uint64_t x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

GroupElement probe_element(const Field& F, int r) {
  Rng rng(0xcac4e000ULL + static_cast<std::uint64_t>(r));
  return random_element(F, rng);
}

}  // namespace

FileCache::FileCache(std::filesystem::path dir) : dir_(std::move(dir)) { std::filesystem::create_directories(dir_); }

std::filesystem::path FileCache::entry_path(const Field& F, int r) const {
  std::ostringstream os;
  os << "rr_p" << F.p() << "_f" << F.f() << "_r" << r << ".json";
  return dir_ / os.str();
}

FileCache::Stats FileCache::stats() const {
  std::lock_guard lock(mu_);
  return stats_;
}

std::optional<RrData> FileCache::read(const Field& F, int r, std::string& why) const {
  std::ifstream in(entry_path(F, r));
  if (!in) {
    why = "missing";
    return std::nullopt;
  }
  try {
    json j = json::parse(in);
    if (j.at("format").get<int>() != kFormatVersion) throw std::runtime_error("format version");
    if (j.at("p").get<int>() != F.p() || j.at("f").get<int>() != F.f()) throw std::runtime_error("field");
    if (j.at("modulus").get<std::string>() != F.modulus_string()) throw std::runtime_error("modulus");
    if (j.at("key").get<std::string>() != to_string(rr_socle_label(F, r)) || j.at("r").get<int>() != r)
      throw std::runtime_error("key");
    const int dim = j.at("dim").get<int>();
    std::vector<Character> chars;
    for (const auto& c : j.at("chars")) chars.push_back({c.at(0).get<int>(), c.at(1).get<int>()});
    if (static_cast<int>(chars.size()) != dim) throw std::runtime_error("characters");
    std::vector<Matrix> gens;
    for (const auto& g : j.at("gens")) gens.push_back(matrix_from(F, g, dim));
    if (static_cast<int>(gens.size()) != num_generators(F)) throw std::runtime_error("generator count");
    RrData d;
    d.r = r;
    d.seed = std::stoull(j.at("seed").get<std::string>(), nullptr, 16);
    d.R = from_generators(F, gens, chars, "cached R_" + std::to_string(r));
    if (hex(fingerprint(*d.R)) != j.at("fingerprint").get<std::string>()) throw std::runtime_error("fingerprint");
    const GroupElement g = probe_element(F, r);
    if (!(d.R->eval(g) == matrix_from(F, j.at("probe"), dim))) throw std::runtime_error("probe element");
    Matrix soc = matrix_from(F, j.at("soc"), dim);
    if (!is_stable(d.R, soc)) throw std::runtime_error("socle not stable");
    d.soc = make_sub(d.R, soc);
    if (!j.at("W").is_null()) {
      Matrix W = matrix_from(F, j.at("W"), dim);
      if (!is_stable(d.R, W)) throw std::runtime_error("W not stable");
      d.W = make_sub(d.R, W);
    }
    return d;
  } catch (const std::exception& e) {
    why = std::string("corrupt: ") + e.what();
    return std::nullopt;
  }
}

std::optional<RrData> FileCache::load(const Field& F, int r) {
  std::string why;
  auto d = read(F, r, why);
  std::lock_guard lock(mu_);
  if (d) {
    ++stats_.hits;
    return d;
  }
  ++stats_.misses;
  if (why != "missing") {
    std::error_code ec;
    std::filesystem::remove(entry_path(F, r), ec);
    ++stats_.evictions;
  }
  return std::nullopt;
}

void FileCache::save(const Field& F, const RrData& d) {
  json j;
  j["format"] = kFormatVersion;
  j["p"] = F.p();
  j["f"] = F.f();
  j["modulus"] = F.modulus_string();
  j["r"] = d.r;
  j["key"] = to_string(rr_socle_label(F, d.r));
  j["construction"] = "indecomposable summand of Sym^" + std::to_string(F.p() - 1 - d.r) + " (x) Sym^" +
                      std::to_string(F.p() - 1);
  j["seed"] = hex(d.seed);
  j["dim"] = d.R->dim();
  j["fingerprint"] = hex(fingerprint(*d.R));
  json chars = json::array();
  for (auto c : d.R->chars()) chars.push_back({c.a, c.b});
  j["chars"] = chars;
  json gens = json::array();
  for (const auto& g : d.R->gens()) gens.push_back(matrix_json(g));
  j["gens"] = gens;
  j["probe"] = matrix_json(d.R->eval(probe_element(F, d.r)));
  j["soc"] = matrix_json(d.soc.rows());
  j["W"] = d.W ? matrix_json(d.W->rows()) : json(nullptr);
  const auto path = entry_path(F, d.r);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump() << "\n";
  }
  std::filesystem::rename(tmp, path);
  std::lock_guard lock(mu_);
  ++stats_.stores;
}

std::string cache_dir_from_env() {
  const char* v = std::getenv("GL2WB_CACHE_DIR");
  return v ? v : "";
}

}  // namespace gl2wb
