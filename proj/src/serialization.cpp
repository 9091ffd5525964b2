#include <bura/serialization.hpp>

#include <cstdint>

namespace bura {

void save_vector_csv(const std::filesystem::path& path, const Eigen::VectorXd& v) {
  auto out = detail::open_output(path);
  out << "index,value\n";
  for (Eigen::Index i = 0; i < v.size(); ++i) out << i << "," << to_full_string(v[i]) << "\n";
}

Eigen::VectorXd load_vector_csv(const std::filesystem::path& path) {
  auto in = detail::open_input(path);
  std::string line;
  if (!std::getline(in, line) || line != "index,value")
    throw Error("vector csv: missing header in " + path.string());
  std::vector<double> values;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw Error("vector csv: malformed row in " + path.string());
    values.push_back(std::stod(line.substr(comma + 1)));
  }
  return Eigen::Map<Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
}

void save_vector_binary(const std::filesystem::path& path, const Eigen::VectorXd& v) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(v.data()),
            static_cast<std::streamsize>(v.size() * sizeof(double)));
}

Eigen::VectorXd load_vector_binary(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary | std::ios::ate);
  if (!in) throw Error("cannot open " + path.string() + " for reading");
  const auto bytes = static_cast<std::int64_t>(in.tellg());
  if (bytes % sizeof(double) != 0) throw Error("vector binary: size not a multiple of 8 bytes");
  Eigen::VectorXd v(bytes / static_cast<std::int64_t>(sizeof(double)));
  in.seekg(0);
  in.read(reinterpret_cast<char*>(v.data()), bytes);
  if (!in) throw Error("vector binary: short read from " + path.string());
  return v;
}

}  // namespace bura
