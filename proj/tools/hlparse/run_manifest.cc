#include "run_manifest.h"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <iostream>
#include <memory>
#include <stdexcept>

namespace hlparse::cli {

std::string Sha256File(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr);
  std::array<char, 1 << 16> buf;
  while (in) {
    in.read(buf.data(), buf.size());
    EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<size_t>(in.gcount()));
  }
  std::array<unsigned char, EVP_MAX_MD_SIZE> md;
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), md.data(), &len);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  for (unsigned int i = 0; i < len; ++i) {
    hex += kHex[md[i] >> 4];
    hex += kHex[md[i] & 15];
  }
  return hex;
}

RunManifest::RunManifest(std::string subcommand)
    : subcommand_(std::move(subcommand)), start_(std::chrono::steady_clock::now()) {}

void RunManifest::AddInput(const std::string& path) {
  inputs_.push_back({{"path", path}, {"sha256", Sha256File(path)}});
}

nlohmann::json RunManifest::ToJson() const {
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  nlohmann::json j = {{"schema_version", kSchemaVersion},
                      {"tool", "hlparse"},
                      {"version", HLPARSE_VERSION},
                      {"subcommand", subcommand_},
                      {"flags", flags_},
                      {"inputs", inputs_},
                      {"outputs", outputs_},
                      {"duration_seconds", seconds}};
  j["seed"] = seed_ ? nlohmann::json(*seed_) : nlohmann::json(nullptr);
  return j;
}

void RunManifest::Write(const std::string& path) const {
  if (path.empty()) {
    std::cerr << ToJson().dump() << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << ToJson().dump(2) << '\n';
}

}  // namespace hlparse::cli
