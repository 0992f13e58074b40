#include "fracheat/field.hpp"

#include <cstring>
#include <fstream>

#include <json.hpp>

namespace fracheat {

std::string to_string(FieldKind k) {
  switch (k) {
    case FieldKind::fbm_values: return "fbm_values";
    case FieldKind::fbm_increments: return "fbm_increments";
    case FieldKind::white_noise: return "white_noise";
  }
  return "unknown";
}

FieldKind field_kind_from_string(const std::string& s) {
  if (s == "fbm_values") return FieldKind::fbm_values;
  if (s == "fbm_increments") return FieldKind::fbm_increments;
  if (s == "white_noise") return FieldKind::white_noise;
  throw ConfigError("unknown field kind: " + s);
}

void write_field(const FieldRealization& f, const std::string& path) {
  const auto shape = f.shape();
  if (shape.size() > 4)
    throw CapExceeded("write_field: at most 4 axes supported by the format");
  std::size_t expect = 1;
  for (auto s : shape) {
    if (s > 0xffff) throw CapExceeded("write_field: axis dim exceeds 65535");
    expect *= s;
  }
  if (expect != f.values.size())
    throw DimensionMismatch("write_field: value count does not match shape");

  unsigned char header[16] = {0};
  std::memcpy(header, "FHF1", 4);
  const std::uint32_t n = std::uint32_t(shape.size());
  std::memcpy(header + 4, &n, 4);
  for (std::size_t j = 0; j < shape.size(); ++j) {
    const std::uint16_t c = std::uint16_t(shape[j]);
    std::memcpy(header + 8 + 2 * j, &c, 2);
  }

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("write_field: cannot open " + path);
  out.write(reinterpret_cast<const char*>(header), 16);
  out.write(reinterpret_cast<const char*>(f.values.data()),
            std::streamsize(f.values.size() * sizeof(double)));
  if (!out) throw ConfigError("write_field: short write to " + path);

  nlohmann::json side;
  side["kind"] = to_string(f.kind);
  side["method"] = f.method;
  side["seed"] = {{"master_seed", f.seed.master_seed},
                  {"stream_index", f.seed.stream_index}};
  side["hurst"] = f.hurst;
  nlohmann::json axes = nlohmann::json::array();
  for (const auto& a : f.grid.axes())
    axes.push_back({{"origin", a.origin}, {"extent", a.extent},
                    {"count", a.count}});
  side["grid"] = axes;
  std::ofstream js(path + ".json", std::ios::trunc);
  js << side.dump(2) << "\n";
}

FieldRealization read_field(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("read_field: cannot open " + path);
  unsigned char header[16];
  in.read(reinterpret_cast<char*>(header), 16);
  if (!in || std::memcmp(header, "FHF1", 4) != 0)
    throw ConfigError("read_field: bad magic in " + path);
  std::uint32_t n;
  std::memcpy(&n, header + 4, 4);
  if (n == 0 || n > 4) throw ConfigError("read_field: bad axis count");
  std::size_t total = 1;
  std::vector<std::size_t> shape(n);
  for (std::uint32_t j = 0; j < n; ++j) {
    std::uint16_t c;
    std::memcpy(&c, header + 8 + 2 * j, 2);
    shape[j] = c;
    total *= c;
  }

  FieldRealization f;
  f.values.resize(total);
  in.read(reinterpret_cast<char*>(f.values.data()),
          std::streamsize(total * sizeof(double)));
  if (!in) throw ConfigError("read_field: truncated payload in " + path);

  std::ifstream js(path + ".json");
  if (!js) throw ConfigError("read_field: missing sidecar for " + path);
  nlohmann::json side = nlohmann::json::parse(js);
  f.kind = field_kind_from_string(side.at("kind").get<std::string>());
  f.method = side.value("method", "");
  f.seed.master_seed = side.at("seed").at("master_seed").get<std::uint64_t>();
  f.seed.stream_index =
      side.at("seed").at("stream_index").get<std::uint64_t>();
  f.hurst = side.value("hurst", std::vector<double>{});
  std::vector<AxisSpec> axes;
  for (const auto& a : side.at("grid"))
    axes.push_back({a.at("origin").get<double>(), a.at("extent").get<double>(),
                    a.at("count").get<std::size_t>()});
  f.grid = Grid(std::move(axes));

  // shape consistency between header and sidecar
  const auto expect = f.shape();
  if (expect != shape)
    throw ConfigError("read_field: sidecar grid disagrees with header");
  return f;
}

}  // namespace fracheat
