#include <array>
#include <fstream>
#include <iterator>
#include <stdexcept>

#include <openssl/evp.h>

#include "triwalk/cli.hpp"

namespace triwalk::cli {

nlohmann::json to_json(const RunManifest& m) {
    return nlohmann::json{{"tool", "triwalk"},       {"version", m.version},
                          {"command", m.command},    {"arguments", m.arguments},
                          {"settings", m.settings},  {"outputs", m.outputs}};
}

RunManifest manifest_from_json(const nlohmann::json& j) {
    if (j.value("tool", "") != "triwalk") throw std::runtime_error("not a triwalk manifest");
    RunManifest m;
    m.command = j.at("command").get<std::string>();
    m.version = j.at("version").get<std::string>();
    m.arguments = j.at("arguments").get<std::map<std::string, std::string>>();
    m.settings = j.value("settings", nlohmann::json::object());
    m.outputs = j.at("outputs").get<std::map<std::string, std::string>>();
    return m;
}

std::string sha256_hex(std::string_view bytes) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int length = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("SHA-256 failed");
    }
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * length);
    for (unsigned int i = 0; i < length; ++i) {
        out.push_back(kHex[digest[i] >> 4]);
        out.push_back(kHex[digest[i] & 0xF]);
    }
    return out;
}

std::string sha256_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return sha256_hex(bytes);
}

}  // namespace triwalk::cli
